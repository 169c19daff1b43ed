"""Rank tests for WLP, SLP and MRP on explicit artinian quotients.

A test walks over every cell ``(d, i)`` with ``1 <= d <= e`` and
``0 <= i <= e - d`` and records the best rank of ``x F : A_i -> A_{i+d}``
seen over the forms a strategy supplies.  Outside that range one side of
the map is zero, so nothing needs checking there.

Random forms come from per-cell streams keyed by ``(seed, kind, degree,
trial)``, so a report depends only on the ideal, the strategy and the seed.
Degree-one forms for MRP are drawn from the same stream as the linear
forms of WLP/SLP, which keeps the three tests comparable.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Iterator, Optional, Union

from .errors import ExhaustiveTooLarge, FormInIdeal
from .fields import FieldSpec
from .macaulay import HilbertFunction
from .ring import (
    GradedIdeal,
    Polynomial,
    all_forms,
    colon_slice_dim,
    count_forms,
    dim_R,
    hilbert_function,
    image_rank,
    is_stable,
    monomials_of_degree,
    quotient_dim,
    reduces_to_zero,
)


class Property(str, Enum):
    WLP = "WLP"
    SLP = "SLP"
    MRP = "MRP"


class Verdict(str, Enum):
    HOLDS_DETERMINISTIC = "HoldsDeterministic"
    HOLDS_PROBABILISTIC = "HoldsProbabilistic"
    FAILS_OBSERVED = "FailsObserved"
    INCONCLUSIVE = "Inconclusive"

    @property
    def holds(self) -> bool:
        return self in (Verdict.HOLDS_DETERMINISTIC, Verdict.HOLDS_PROBABILISTIC)


@dataclass(frozen=True)
class RandomInt:
    """Random coefficients in ``[-coeff_bound, coeff_bound]``, best of ``trials``."""

    coeff_bound: int = 1000
    trials: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.coeff_bound < 1 or self.trials < 1:
            raise ValueError("coeff_bound and trials must be positive")


@dataclass(frozen=True)
class AllOnesLinear:
    """``L = x1 + ... + xr`` and its powers."""


@dataclass(frozen=True)
class LastVariablePower:
    """``F = xr^d``; general for stable ideals."""


@dataclass(frozen=True)
class ExhaustiveFiniteField:
    """Every form of the needed degree over ``F_p``, up to scalars."""

    budget: int = 20000


FormStrategy = Union[RandomInt, AllOnesLinear, LastVariablePower, ExhaustiveFiniteField]

_STRATEGY_NAMES = {
    RandomInt: "random",
    AllOnesLinear: "allones",
    LastVariablePower: "lastvar",
    ExhaustiveFiniteField: "exhaustive",
}


def strategy_to_dict(strategy: FormStrategy) -> dict:
    return {"name": _STRATEGY_NAMES[type(strategy)], **asdict(strategy)}


def strategy_from_dict(data: dict) -> FormStrategy:
    data = dict(data)
    name = data.pop("name")
    cls = {v: k for k, v in _STRATEGY_NAMES.items()}[name]
    return cls(**data)


def _stream(strategy: RandomInt, *key) -> random.Random:
    return random.Random("/".join(map(str, (strategy.seed,) + key)))


def _random_coeff(rng: random.Random, strategy: RandomInt, fld: FieldSpec) -> int:
    if fld.char:
        return rng.randrange(fld.char)
    c = rng.randint(1, strategy.coeff_bound)
    return c if rng.random() < 0.5 else -c


def _random_form(rng: random.Random, strategy: RandomInt, fld: FieldSpec, r: int, d: int) -> Polynomial:
    coeffs = {m: _random_coeff(rng, strategy, fld) for m in monomials_of_degree(r, d)}
    return Polynomial.from_dict(fld, r, coeffs)


def _check_budget(strategy: ExhaustiveFiniteField, fld: FieldSpec, r: int, d: int) -> None:
    if not fld.char:
        raise ValueError("ExhaustiveFiniteField needs a prime field")
    n = count_forms(fld, r, d)
    if n > strategy.budget:
        raise ExhaustiveTooLarge(n, strategy.budget)


def linear_forms(strategy: FormStrategy, I: GradedIdeal) -> Iterator[Polynomial]:
    """The linear forms a strategy tries, in order."""
    fld, r = I.field, I.r
    if isinstance(strategy, RandomInt):
        for t in range(strategy.trials):
            yield _random_form(_stream(strategy, "linear", t), strategy, fld, r, 1)
    elif isinstance(strategy, AllOnesLinear):
        yield Polynomial.linear(fld, [1] * r)
    elif isinstance(strategy, LastVariablePower):
        yield Polynomial.linear(fld, [0] * (r - 1) + [1])
    elif isinstance(strategy, ExhaustiveFiniteField):
        _check_budget(strategy, fld, r, 1)
        yield from all_forms(fld, r, 1)
    else:
        raise TypeError(f"unknown strategy {strategy!r}")


def forms_of_degree(strategy: FormStrategy, I: GradedIdeal, d: int) -> Iterator[Polynomial]:
    """The degree-``d`` forms a strategy tries, in order."""
    fld, r = I.field, I.r
    if d == 1 or isinstance(strategy, (AllOnesLinear, LastVariablePower)):
        for L in linear_forms(strategy, I):
            yield L ** d
    elif isinstance(strategy, RandomInt):
        for t in range(strategy.trials):
            yield _random_form(_stream(strategy, "form", d, t), strategy, fld, r, d)
    elif isinstance(strategy, ExhaustiveFiniteField):
        _check_budget(strategy, fld, r, d)
        yield from all_forms(fld, r, d)
    else:
        raise TypeError(f"unknown strategy {strategy!r}")


@dataclass
class Entry:
    d: int
    i: int
    max_possible: int
    best_rank_observed: int = -1
    trials_used: int = 0
    witness: Optional[str] = None

    @property
    def done(self) -> bool:
        return self.best_rank_observed == self.max_possible

    def record(self, rank: int, form: str) -> None:
        self.trials_used += 1
        if rank > self.best_rank_observed:
            self.best_rank_observed = rank
            self.witness = form


@dataclass
class PropertyReport:
    property: Property
    verdict: Verdict
    entries: list[Entry]
    strategy: dict
    field: int
    hilbert_function: list[int]
    seed: Optional[int] = None
    # True when the verdict is a proof rather than sampling evidence
    certified: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict.holds

    def deficits(self) -> list[Entry]:
        return [e for e in self.entries if not e.done]

    def to_dict(self) -> dict:
        return {
            "property": self.property.value,
            "verdict": self.verdict.value,
            "certified": self.certified,
            "field": self.field,
            "hilbert_function": list(self.hilbert_function),
            "strategy": dict(self.strategy),
            "seed": self.seed,
            "entries": [asdict(e) for e in self.entries],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PropertyReport":
        return cls(
            property=Property(data["property"]),
            verdict=Verdict(data["verdict"]),
            entries=[Entry(**e) for e in data["entries"]],
            strategy=dict(data["strategy"]),
            field=data["field"],
            hilbert_function=list(data["hilbert_function"]),
            seed=data.get("seed"),
            certified=data.get("certified", False),
            notes=list(data.get("notes", [])),
        )


FINITE_FIELD_CAVEAT = (
    "over F_p the forms tried are F_p-rational; missing maximal rank here does not "
    "decide the behaviour of a general form over the algebraic closure"
)


def multiplication_rank(I: GradedIdeal, F: Polynomial, i: int) -> tuple[int, int]:
    """Rank of ``x F : A_i -> A_{i+d}`` and the largest rank possible, ``min(h_i, h_{i+d})``."""
    if F and F.degree < 1:
        raise ValueError("F must have positive degree")
    d = F.degree if F else 0
    best = min(quotient_dim(I, i), quotient_dim(I, i + d))
    return image_rank(I, F, i), best


def _cells(H: HilbertFunction, degrees) -> dict[tuple[int, int], Entry]:
    return {
        (d, i): Entry(d, i, min(H[i], H[i + d]))
        for d in degrees
        for i in range(H.e - d + 1)
    }


def _run(I: GradedIdeal, prop: Property, strategy: FormStrategy, cap: int) -> PropertyReport:
    H = hilbert_function(I, cap)
    degrees = [1] if prop is Property.WLP else list(range(1, H.e + 1))
    cells = _cells(H, degrees)

    if prop is Property.MRP:
        for d in degrees:
            pending = [c for c in cells.values() if c.d == d]
            for F in forms_of_degree(strategy, I, d):
                if not pending:
                    break
                label = str(F)
                for c in pending:
                    c.record(image_rank(I, F, c.i), label)
                pending = [c for c in pending if not c.done]
    else:
        pending = list(cells.values())
        for L in linear_forms(strategy, I):
            if not pending:
                break
            power = L
            for d in degrees:
                if d > 1:
                    power = power * L
                label = f"({L})^{d}" if d > 1 else str(L)
                for c in pending:
                    if c.d == d:
                        c.record(image_rank(I, power, c.i), label)
            pending = [c for c in pending if not c.done]

    entries = sorted(cells.values(), key=lambda c: (c.d, c.i))
    all_max = all(c.done for c in entries)
    stable = I.is_monomial and is_stable(I)
    exhaustive = isinstance(strategy, ExhaustiveFiniteField)
    lastvar_stable = isinstance(strategy, LastVariablePower) and stable
    notes = []
    if all_max:
        # an exhaustive witness is an explicit form of maximal rank in every cell
        verdict = Verdict.HOLDS_DETERMINISTIC if (lastvar_stable or exhaustive) else Verdict.HOLDS_PROBABILISTIC
        certified = verdict is Verdict.HOLDS_DETERMINISTIC
    elif I.field.char == 0 or exhaustive:
        verdict = Verdict.FAILS_OBSERVED
        certified = exhaustive or lastvar_stable
    else:
        verdict = Verdict.INCONCLUSIVE
        certified = False
    if I.field.char and not all_max:
        notes.append(FINITE_FIELD_CAVEAT)
    if isinstance(strategy, LastVariablePower) and not stable:
        notes.append("ideal is not a stable monomial ideal; xr^d need not be general")

    return PropertyReport(
        property=prop,
        verdict=verdict,
        entries=entries,
        strategy=strategy_to_dict(strategy),
        field=I.field.char,
        hilbert_function=list(H),
        seed=strategy.seed if isinstance(strategy, RandomInt) else None,
        certified=certified,
        notes=notes,
    )


def test_wlp(I: GradedIdeal, strategy: FormStrategy = RandomInt(), cap: int = 50) -> PropertyReport:
    return _run(I, Property.WLP, strategy, cap)


def test_slp(I: GradedIdeal, strategy: FormStrategy = RandomInt(), cap: int = 50) -> PropertyReport:
    return _run(I, Property.SLP, strategy, cap)


def test_mrp(I: GradedIdeal, strategy: FormStrategy = RandomInt(), cap: int = 50) -> PropertyReport:
    return _run(I, Property.MRP, strategy, cap)


# not collected as tests
test_wlp.__test__ = test_slp.__test__ = test_mrp.__test__ = False


def test_property(I: GradedIdeal, prop: Property | str, strategy: FormStrategy = RandomInt(),
                  cap: int = 50) -> PropertyReport:
    if not isinstance(prop, Property):
        prop = Property(prop.upper())
    return _run(I, prop, strategy, cap)


test_property.__test__ = False


def colon_quotient_hf(I: GradedIdeal, F: Polynomial, top: int) -> list[int]:
    """``dim (R/(I:F))_k`` for ``0 <= k <= top``."""
    return [dim_R(I.r, k) - colon_slice_dim(I, F, k) for k in range(top + 1)]


def verify_exact_sequence_decomposition(I: GradedIdeal, F: Polynomial, cap: int = 50) -> bool:
    """Check ``H(R/I, i) = H(R/(I:F), i-d) + H(R/(I,F), i)`` in every degree up to ``e``."""
    if reduces_to_zero(I, F):
        raise FormInIdeal(f"{F} lies in the ideal")
    H = hilbert_function(I, cap)
    d = F.degree
    J = I.plus(F)
    colon = colon_quotient_hf(I, F, max(H.e - d, 0))
    for i in range(H.e + 2):
        shifted = colon[i - d] if 0 <= i - d < len(colon) else 0
        if H[i] != shifted + quotient_dim(J, i):
            return False
    return True


def colon_socle_degree(I: GradedIdeal, F: Polynomial, e: int) -> Optional[int]:
    """Last nonzero degree of ``R/(I:F)``, or ``None`` when ``F`` lies in ``I``."""
    if reduces_to_zero(I, F):
        return None
    q = colon_quotient_hf(I, F, e)
    return max(k for k, v in enumerate(q) if v)


def socle_colon_check(I: GradedIdeal, d: int, strategy: FormStrategy = RandomInt(),
                      powers_of_linear: bool = False, cap: int = 50) -> bool:
    """Whether some strategy form ``F`` of degree ``d`` gives ``R/(I:F)`` socle degree exactly ``e - d``.

    With ``powers_of_linear`` the forms are ``L^d`` for the strategy's linear forms.
    """
    H = hilbert_function(I, cap)
    if not 1 <= d <= H.e:
        raise ValueError(f"need 1 <= d <= e = {H.e}")
    forms = (L ** d for L in linear_forms(strategy, I)) if powers_of_linear else forms_of_degree(strategy, I, d)
    best = None
    for F in forms:
        s = colon_socle_degree(I, F, H.e)
        if s is not None and (best is None or s > best):
            best = s
        if best == H.e - d:
            return True
    return False
