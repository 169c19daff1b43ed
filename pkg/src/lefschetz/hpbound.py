"""The Herzog-Popescu bound on ``H(A/F)`` for a general form ``F``.

For ``p >= d`` the value of ``A/F`` in degree ``p`` is at most
``sum_{c<d} H(A,p)_((p,c))``.  When ``H(A,p)`` is 1 or 2 and ``p > d`` that
sum vanishes, which is what makes multiplication by a general form
surjective in the narrow part of a Hilbert function.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .macaulay import HilbertFunction, double_bracket
from .ring import GradedIdeal, hilbert_function, quotient_dim
from .tester import FormStrategy, RandomInt, forms_of_degree


def bracket_sum(n: int, p: int, d: int) -> int:
    """``sum_{0<=c<d} n_((p,c))``, taken to be 0 for ``n == 0``."""
    if p < d or d < 1:
        raise ValueError(f"need p >= d >= 1, got p={p}, d={d}")
    if n == 0:
        return 0
    return sum(double_bracket(n, p, c) for c in range(d))


def hp_upper_bound(H: HilbertFunction | Sequence[int], p: int, d: int) -> int:
    """Upper bound for ``H(A/F, p)`` with ``F`` a general form of degree ``d``."""
    H = H if isinstance(H, HilbertFunction) else HilbertFunction(H)
    return bracket_sum(H[p], p, d)


class Witness(NamedTuple):
    n: int
    p: int
    d: int
    value: int


def verify_key_identity(n_max: int = 2, p_max: int = 30) -> list[Witness]:
    """Every ``(n, p, d)`` with ``1 <= n <= n_max``, ``1 <= d < p <= p_max``
    whose bracket sum is nonzero.  For ``n_max <= 2`` the list should be empty."""
    return [
        Witness(n, p, d, v)
        for n in range(1, n_max + 1)
        for p in range(2, p_max + 1)
        for d in range(1, p)
        if (v := bracket_sum(n, p, d)) != 0
    ]


def nonzero_witness(n: int = 3, p_max: int = 30) -> Optional[Witness]:
    """First ``(p, d)`` (``d < p``) where the bracket sum of ``n`` is nonzero."""
    for p in range(2, p_max + 1):
        for d in range(1, p):
            v = bracket_sum(n, p, d)
            if v:
                return Witness(n, p, d, v)
    return None


def verify_hp_theorem(I: GradedIdeal, d: int, strategy: FormStrategy = RandomInt(), cap: int = 50) -> bool:
    """Check ``H(R/(I,F), p) <= hp_upper_bound(H(R/I), p, d)`` for ``d <= p <= e``
    and every degree-``d`` form the strategy produces."""
    H = hilbert_function(I, cap)
    for F in forms_of_degree(strategy, I, d):
        J = I.plus(F) if F else I
        for p in range(d, H.e + 1):
            if quotient_dim(J, p) > hp_upper_bound(H, p, d):
                return False
    return True
