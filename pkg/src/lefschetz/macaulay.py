"""Binomial expansions, Macaulay's growth bound and O-sequences.

Every integer ``n >= 1`` has a unique ``d``-binomial expansion

    n = C(n_d, d) + C(n_{d-1}, d-1) + ... + C(n_j, j),   n_d > ... > n_j >= j >= 1,

and the operators below are sums of binomials read off that expansion.
All arithmetic is on Python integers, so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import NotAnOSequence


def binom_ext(m: int, n: int) -> int:
    """C(m, n), taken to be 0 whenever m < n or n < 0."""
    if n < 0 or m < n:
        return 0
    return comb(m, n)


@dataclass(frozen=True)
class BinomialExpansion:
    """The ``d``-binomial expansion of ``value``.

    ``terms`` holds ``(top, bottom)`` pairs with bottoms ``d, d-1, ..., j``.
    """

    d: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.d < 1 or not self.terms:
            raise ValueError("an expansion needs d >= 1 and at least one term")
        bottoms = [k for _, k in self.terms]
        if bottoms != list(range(self.d, self.d - len(bottoms), -1)) or bottoms[-1] < 1:
            raise ValueError(f"bottoms must run d, d-1, ..., j >= 1: {bottoms}")
        tops = [n for n, _ in self.terms]
        if any(a <= b for a, b in zip(tops, tops[1:])):
            raise ValueError(f"tops must strictly decrease: {tops}")
        if any(n < k for n, k in self.terms):
            raise ValueError("every top must be at least its bottom")

    @property
    def j(self) -> int:
        """Lowest bottom index in the expansion."""
        return self.terms[-1][1]

    @property
    def value(self) -> int:
        return sum(comb(n, k) for n, k in self.terms)

    def top(self, k: int) -> int:
        """The top ``n_k`` paired with bottom ``k``."""
        return self.terms[self.d - k][0]

    def __str__(self) -> str:
        return " + ".join(f"C({n},{k})" for n, k in self.terms)


def expand(n: int, d: int) -> BinomialExpansion:
    """Greedy ``d``-binomial expansion of ``n``."""
    if n < 1 or d < 1:
        raise ValueError(f"expand needs n >= 1 and d >= 1, got n={n}, d={d}")
    terms = []
    rest = n
    k = d
    while rest > 0:
        # largest m with C(m, k) <= rest; C(k, k) = 1 <= rest so m >= k
        m = k
        while comb(m + 1, k) <= rest:
            m += 1
        terms.append((m, k))
        rest -= comb(m, k)
        k -= 1
    return BinomialExpansion(d, tuple(terms))


def shift(expansion: BinomialExpansion, a: int, b: int) -> int:
    """``(n_(d))^a_b``: add ``a`` to every top and ``b`` to every bottom."""
    return sum(binom_ext(n + a, k + b) for n, k in expansion.terms)


def double_bracket(n: int, d: int, c: int) -> int:
    """``n_((d,c))``, the summand appearing in the Herzog-Popescu bound."""
    if not 0 <= c < d:
        raise ValueError(f"need 0 <= c < d, got c={c}, d={d}")
    exp = expand(n, d)
    j = exp.j
    q = j if j > c else c + 1
    total = sum(binom_ext(exp.top(k) - c - 1, k - c) for k in range(q, d + 1))
    if c >= j:
        total += binom_ext(exp.top(c) - c, 0)
    return total


def macaulay_next_max(n: int, d: int) -> int:
    """Largest value allowed in degree ``d+1`` after ``n`` in degree ``d``."""
    if d < 1:
        raise ValueError("degree must be positive")
    if n == 0:
        return 0
    return shift(expand(n, d), 1, 1)


@dataclass(frozen=True)
class HilbertFunction:
    """A finite Hilbert function ``h_0, ..., h_e`` with ``h_{e+1} = 0``.

    Trailing zeros are trimmed on construction and indexing past the end
    (or below zero) returns 0.
    """

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = [int(v) for v in values]
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        if not vals or vals[0] != 1:
            raise ValueError(f"a Hilbert function starts with h_0 = 1: {vals}")
        if any(v < 0 for v in vals):
            raise ValueError(f"negative value in Hilbert function: {vals}")
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def parse(cls, text: str) -> "HilbertFunction":
        """Parse a comma-separated list such as ``"1,3,4,3"``."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(not p.isdigit() for p in parts):
            raise ValueError(f"expected comma-separated nonnegative integers, got {text!r}")
        return cls(int(p) for p in parts)

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.values):
            return self.values[d]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    @property
    def r(self) -> int:
        """Codimension, i.e. ``h_1``."""
        return self[1]

    @property
    def e(self) -> int:
        """Socle degree: the last degree with a nonzero value."""
        return len(self.values) - 1

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


def _as_values(H: HilbertFunction | Sequence[int]) -> list[int]:
    vals = [int(v) for v in H]
    while len(vals) > 1 and vals[-1] == 0:
        vals.pop()
    return vals


def is_o_sequence(H: HilbertFunction | Sequence[int]) -> bool:
    """Macaulay's criterion for a finite sequence (zeros implied after the end)."""
    vals = _as_values(H)
    if not vals or vals[0] != 1 or any(v < 0 for v in vals):
        return False
    return all(vals[d + 1] <= macaulay_next_max(vals[d], d) for d in range(1, len(vals) - 1))


def require_o_sequence(H: HilbertFunction | Sequence[int]) -> HilbertFunction:
    if not is_o_sequence(H):
        raise NotAnOSequence(H)
    return H if isinstance(H, HilbertFunction) else HilbertFunction(H)


def t_index(H: HilbertFunction | Sequence[int]) -> int:
    """Smallest ``t >= 1`` with ``h_t <= t``."""
    H = H if isinstance(H, HilbertFunction) else HilbertFunction(H)
    t = 1
    while H[t] > t:
        t += 1
    return t


def enumerate_o_sequences(max_r: int, max_e: int, max_h: int) -> Iterator[HilbertFunction]:
    """All artinian O-sequences with ``1 <= h_1 <= max_r``, socle degree in
    ``1..max_e`` and every value at most ``max_h``, in lexicographic order."""

    def grow(prefix: list[int]) -> Iterator[HilbertFunction]:
        yield HilbertFunction(prefix)
        d = len(prefix) - 1
        if d >= max_e:
            return
        bound = min(max_h, macaulay_next_max(prefix[-1], d))
        for v in range(1, bound + 1):
            yield from grow(prefix + [v])

    for r in range(1, min(max_r, max_h) + 1):
        yield from grow([1, r])
