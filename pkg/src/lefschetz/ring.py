"""Homogeneous polynomials, graded ideals and their degree slices.

Everything is linear algebra on one degree at a time: the degree-``d`` piece
of an ideal is spanned by ``m * g`` for generators ``g`` and monomials ``m``
of the complementary degree, and quotient dimensions are ranks of the
resulting coefficient matrices.  No Groebner bases are involved.

Monomials are exponent tuples.  ``monomials_of_degree`` lists them in
descending lex order with ``x1 > x2 > ... > xr``; that listing also fixes
the coordinates of coefficient vectors.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import (
    FormInIdeal,
    NotArtinianByCap,
    NotHomogeneous,
    NotMonomialIdeal,
    PolynomialSyntaxError,
    UnknownVariable,
    ZeroPolynomial,
)
from .fields import FieldSpec, PrimeField, Rationals, Scalar
from .linalg import ExactMatrix, rank_of_stacked, row_basis
from .macaulay import HilbertFunction, require_o_sequence

Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials_of_degree(r: int, d: int) -> tuple[Monomial, ...]:
    """All degree-``d`` monomials in ``r`` variables, descending lex."""
    if r < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        return ()
    if r == 1:
        return ((d,),)
    return tuple((a,) + rest for a in range(d, -1, -1) for rest in monomials_of_degree(r - 1, d - a))


@lru_cache(maxsize=None)
def _monomial_index(r: int, d: int) -> dict[Monomial, int]:
    return {m: k for k, m in enumerate(monomials_of_degree(r, d))}


def dim_R(r: int, d: int) -> int:
    """Dimension of the degree-``d`` piece of a polynomial ring in ``r`` variables."""
    return comb(r + d - 1, d) if d >= 0 else 0


def monomial_str(m: Monomial) -> str:
    factors = [f"x{k + 1}" if a == 1 else f"x{k + 1}^{a}" for k, a in enumerate(m) if a]
    return "*".join(factors) if factors else "1"


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class Polynomial:
    """A homogeneous polynomial with exact coefficients.

    ``terms`` is sorted in descending lex order and never holds a zero
    coefficient; the zero polynomial has no terms and degree ``None``.
    """

    field: FieldSpec
    nvars: int
    terms: tuple[tuple[Monomial, Scalar], ...]
    degree: int | None = dc_field(default=None, compare=False)

    @classmethod
    def from_dict(cls, fld: FieldSpec, nvars: int, coeffs: Mapping[Monomial, Scalar]) -> "Polynomial":
        terms = []
        for m, c in coeffs.items():
            if len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} exponents")
            c = fld.normalize(c)
            if c:
                terms.append((tuple(m), c))
        degrees = {sum(m) for m, _ in terms}
        if len(degrees) > 1:
            raise NotHomogeneous(f"terms of degrees {sorted(degrees)}")
        terms.sort(reverse=True)
        return cls(fld, nvars, tuple(terms), degrees.pop() if degrees else None)

    @classmethod
    def monomial(cls, fld: FieldSpec, m: Sequence[int], c: Scalar = 1) -> "Polynomial":
        return cls.from_dict(fld, len(m), {tuple(m): c})

    @classmethod
    def linear(cls, fld: FieldSpec, coeffs: Sequence[Scalar]) -> "Polynomial":
        r = len(coeffs)
        return cls.from_dict(fld, r, {tuple(int(i == k) for i in range(r)): c for k, c in enumerate(coeffs)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def as_dict(self) -> dict[Monomial, Scalar]:
        return dict(self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial.from_dict(self.field, self.nvars, out)

    def times_monomial(self, m: Monomial) -> "Polynomial":
        terms = tuple((tuple(a + b for a, b in zip(mono, m)), c) for mono, c in self.terms)
        # multiplying by a monomial preserves the lex order of terms
        deg = None if self.degree is None else self.degree + sum(m)
        return Polynomial(self.field, self.nvars, terms, deg)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = self.as_dict()
        for m, c in other.terms:
            out[m] = out.get(m, 0) + c
        return Polynomial.from_dict(self.field, self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial.from_dict(self.field, self.nvars, {m: -c for m, c in self.terms})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.monomial(self.field, (0,) * self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def coefficient_vector(self) -> list[Scalar]:
        """Coefficients in the basis ``monomials_of_degree(nvars, degree)``."""
        if self.degree is None:
            raise ValueError("the zero polynomial has no degree")
        idx = _monomial_index(self.nvars, self.degree)
        vec = [0] * len(idx)
        for m, c in self.terms:
            vec[idx[m]] = c
        return vec

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.terms):
            if self.field.char and c > self.field.char // 2 and self.field.char > 2:
                c = c - self.field.char
            neg = c < 0
            a = -c if neg else c
            body = monomial_str(m)
            if body == "1":
                text = str(a)
            elif a == 1:
                text = body
            else:
                text = f"{a}*{body}"
            if k == 0:
                parts.append(("-" if neg else "") + text)
            else:
                parts.append((" - " if neg else " + ") + text)
        return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*^]))")


def parse_polynomial(text: str, r: int, fld: FieldSpec = Rationals) -> Polynomial:
    """Parse ``"x1^2 - 3*x2*x3"`` style text into a homogeneous polynomial.

    Coefficients are integers read into ``fld``; a coefficient may be
    followed by ``*`` or directly by the first factor.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
        start = mt.end() - len(mt.group(0).lstrip())
        if mt.group("int") is not None:
            tokens.append(("int", int(mt.group("int")), start))
        elif mt.group("var") is not None:
            k = int(mt.group("idx"))
            if not 1 <= k <= r:
                raise UnknownVariable(f"x{k} at position {start}: only x1..x{r} exist")
            tokens.append(("var", k - 1, start))
        else:
            tokens.append(("op", mt.group("op"), start))
        pos = mt.end()
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial", text, 0)

    k = 0

    def peek():
        return tokens[k] if k < len(tokens) else ("end", None, len(text))

    def expect_var_factor():
        nonlocal k
        kind, val, at = peek()
        if kind != "var":
            raise PolynomialSyntaxError("expected a variable", text, at)
        k += 1
        power = 1
        if peek()[:2] == ("op", "^"):
            k += 1
            kind, val2, at2 = peek()
            if kind != "int" or val2 < 1:
                raise PolynomialSyntaxError("expected a positive exponent", text, at2)
            power = val2
            k += 1
        return val, power

    coeffs: dict[Monomial, Scalar] = {}
    sign = 1
    kind, val, at = peek()
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        k += 1
    while True:
        coeff = 1
        expo = [0] * r
        kind, val, at = peek()
        if kind == "int":
            coeff = val
            k += 1
            if peek()[:2] == ("op", "*"):
                k += 1
                idx, power = expect_var_factor()
                expo[idx] += power
            elif peek()[0] == "var":
                idx, power = expect_var_factor()
                expo[idx] += power
        else:
            idx, power = expect_var_factor()
            expo[idx] += power
        while peek()[:2] == ("op", "*"):
            k += 1
            idx, power = expect_var_factor()
            expo[idx] += power
        m = tuple(expo)
        coeffs[m] = coeffs.get(m, 0) + sign * coeff
        kind, val, at = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            k += 1
            continue
        raise PolynomialSyntaxError(f"unexpected token {val!r}", text, at)

    raw_degrees = {sum(m) for m in coeffs}
    if len(raw_degrees) > 1:
        raise NotHomogeneous(f"{text!r} mixes degrees {sorted(raw_degrees)}")
    poly = Polynomial.from_dict(fld, r, coeffs)
    if not poly:
        raise ZeroPolynomial(f"{text!r} is zero over {fld}")
    return poly


@dataclass(frozen=True)
class GradedIdeal:
    """A homogeneous ideal of ``k[x1..xr]`` given by generators."""

    r: int
    field: FieldSpec
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("an ideal needs at least one variable")
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if not g:
                raise ZeroPolynomial("generators must be nonzero")
            if g.nvars != self.r:
                raise ValueError(f"generator {g} lives in {g.nvars} variables, not {self.r}")
            if g.field != self.field:
                raise ValueError(f"generator {g} is over {g.field}, not {self.field}")
            if g.degree < 1:
                raise ValueError("generators must have positive degree")

    @classmethod
    def from_strings(cls, r: int, gens: Iterable[str], fld: FieldSpec = Rationals) -> "GradedIdeal":
        return cls(r, fld, tuple(parse_polynomial(g, r, fld) for g in gens))

    @classmethod
    def from_monomials(cls, r: int, monos: Iterable[Sequence[int]], fld: FieldSpec = Rationals) -> "GradedIdeal":
        return cls(r, fld, tuple(Polynomial.monomial(fld, m) for m in monos))

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.generators)

    def monomial_generators(self) -> list[Monomial]:
        if not self.is_monomial:
            raise NotMonomialIdeal("ideal has non-monomial generators")
        return [g.terms[0][0] for g in self.generators]

    def plus(self, F: Polynomial) -> "GradedIdeal":
        """The ideal ``(I, F)``."""
        return GradedIdeal(self.r, self.field, self.generators + (F,))

    def to_json(self) -> dict:
        return {"vars": self.r, "char": self.field.char, "gens": [str(g) for g in self.generators]}

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.generators)) + ")"


def ideal_from_json(data: dict | str) -> GradedIdeal:
    """Build an ideal from ``{"vars": r, "char": 0 or p, "gens": [...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        r = int(data["vars"])
        char = int(data.get("char", 0))
        gens = list(data["gens"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed ideal description: {exc}") from None
    fld = Rationals if char == 0 else PrimeField(char)
    return GradedIdeal.from_strings(r, gens, fld)


def load_ideal(path) -> GradedIdeal:
    with open(path) as fh:
        return ideal_from_json(json.load(fh))


def ideal_slice_span(I: GradedIdeal, d: int) -> list[Polynomial]:
    """A spanning set ``{m*g}`` of the degree-``d`` piece of ``I`` (duplicates removed)."""
    seen = {}
    for g in I.generators:
        for m in monomials_of_degree(I.r, d - g.degree):
            p = g.times_monomial(m)
            seen.setdefault(p.terms, p)
    return list(seen.values())


@lru_cache(maxsize=4096)
def ideal_slice_basis(I: GradedIdeal, d: int) -> tuple[tuple[Scalar, ...], ...]:
    """Echelon basis (as coefficient rows) of the degree-``d`` piece of ``I``."""
    rows = [p.coefficient_vector() for p in ideal_slice_span(I, d)]
    return tuple(tuple(b) for b in row_basis(I.field, rows, dim_R(I.r, d)))


def ideal_slice_matrix(I: GradedIdeal, d: int) -> ExactMatrix:
    """Columns are a basis of ``I_d`` in the monomial coordinates of ``R_d``."""
    return ExactMatrix.from_columns(I.field, ideal_slice_basis(I, d), dim_R(I.r, d))


def ideal_slice_dim(I: GradedIdeal, d: int) -> int:
    return len(ideal_slice_basis(I, d))


def quotient_dim(I: GradedIdeal, d: int) -> int:
    """``dim (R/I)_d``."""
    if d < 0:
        return 0
    return dim_R(I.r, d) - ideal_slice_dim(I, d)


def hilbert_function(I: GradedIdeal, cap: int = 50) -> HilbertFunction:
    """Hilbert function of ``R/I``, up to its last nonzero degree."""
    if cap < 1:
        raise ValueError("cap must be positive")
    values = []
    for d in range(cap + 1):
        h = quotient_dim(I, d)
        if h == 0:
            return HilbertFunction(values)
        values.append(h)
    raise NotArtinianByCap(cap)


def multiplication_matrix(F: Polynomial, r: int, i: int) -> ExactMatrix:
    """Columns are ``m*F`` for the monomials ``m`` of degree ``i``."""
    images = [F.times_monomial(m).coefficient_vector() for m in monomials_of_degree(r, i)]
    return ExactMatrix.from_columns(F.field, images, dim_R(r, i + F.degree))


def image_rank(I: GradedIdeal, F: Polynomial, i: int) -> int:
    """Rank of ``g -> g*F`` from ``R_i`` to ``(R/I)_{i+deg F}``."""
    if not F or i < 0:
        return 0
    target = ideal_slice_matrix(I, i + F.degree)
    # the slice matrix columns are a basis, so its rank is its width
    return rank_of_stacked(multiplication_matrix(F, I.r, i), target) - target.cols


def reduces_to_zero(I: GradedIdeal, F: Polynomial) -> bool:
    """Whether ``F`` lies in ``I`` (tested in the degree of ``F``)."""
    return not F or image_rank(I, F, 0) == 0


def colon_slice_dim(I: GradedIdeal, F: Polynomial, i: int) -> int:
    """``dim (I : F)_i``, the nullity of multiplication by ``F`` on ``R_i`` modulo ``I``."""
    if reduces_to_zero(I, F):
        raise FormInIdeal(f"{F} lies in the ideal")
    if i < 0:
        return 0
    return dim_R(I.r, i) - image_rank(I, F, i)


def lex_segment_ideal(H: HilbertFunction | Sequence[int]) -> GradedIdeal:
    """Minimal monomial generators of the lex-segment ideal with Hilbert function ``H``."""
    H = require_o_sequence(H)
    r = H.r
    if r < 1:
        raise ValueError("the lex-segment ideal needs h_1 >= 1")
    gens: list[Monomial] = []
    previous: set[Monomial] = set()
    for d in range(1, H.e + 2):
        monos = monomials_of_degree(r, d)
        segment = monos[: len(monos) - H[d]]
        for m in segment:
            lowered = (m[:k] + (m[k] - 1,) + m[k + 1:] for k in range(r) if m[k])
            if not any(p in previous for p in lowered):
                gens.append(m)
        previous = set(segment)
    return GradedIdeal.from_monomials(r, gens)


def _monomial_in(m: Monomial, gens: Sequence[Monomial]) -> bool:
    return any(divides(g, m) for g in gens)


def _stability_violations(I: GradedIdeal, strong: bool) -> Iterable[tuple[Monomial, Monomial]]:
    gens = I.monomial_generators()
    top = max((sum(g) for g in gens), default=0)
    # stability is decided by the minimal generators, all of degree <= top
    for d in range(1, top + 1):
        for m in monomials_of_degree(I.r, d):
            if not _monomial_in(m, gens):
                continue
            support = [k for k in range(I.r) if m[k]]
            for j in (support if strong else support[-1:]):
                for i in range(j):
                    moved = list(m)
                    moved[j] -= 1
                    moved[i] += 1
                    moved = tuple(moved)
                    if not _monomial_in(moved, gens):
                        yield m, moved


def is_stable(I: GradedIdeal) -> bool:
    return next(iter(_stability_violations(I, strong=False)), None) is None


def is_strongly_stable(I: GradedIdeal) -> bool:
    return next(iter(_stability_violations(I, strong=True)), None) is None


def all_forms(fld: FieldSpec, r: int, d: int) -> Iterable[Polynomial]:
    """Every nonzero degree-``d`` form over ``F_p`` up to scalars
    (the first nonzero coefficient is 1)."""
    if not fld.char:
        raise ValueError("enumeration needs a finite field")
    basis = monomials_of_degree(r, d)
    n = len(basis)
    p = fld.char
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            coeffs = {basis[lead]: 1}
            coeffs.update({basis[lead + 1 + k]: c for k, c in enumerate(tail) if c})
            yield Polynomial.from_dict(fld, r, coeffs)


def count_forms(fld: FieldSpec, r: int, d: int) -> int:
    p = fld.char
    return (p ** dim_R(r, d) - 1) // (p - 1)
