"""Hilbert functions that force WLP, SLP or MRP on every artinian algebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .macaulay import HilbertFunction, expand, require_o_sequence, shift, t_index

SOCLE_WIDTH = "socle-width"
NOT_AN_O_SEQUENCE = "not-an-O-sequence"


@dataclass(frozen=True)
class ForcingVerdict:
    forces: bool
    # first index i where h_{i-1} differs from the shifted expansion of h_i,
    # or SOCLE_WIDTH when h_t > 2 is the obstruction
    failing_index: Union[int, str, None] = None

    def __post_init__(self):
        if self.forces != (self.failing_index is None):
            raise ValueError("forces must be True exactly when no failing index is recorded")


def lower_neighbour(h: int, i: int) -> int:
    """``((h)_(i))^{-1}_{-1}``, the value ``h_{i-1}`` must take below ``h_i``."""
    if h == 0:
        return 0
    return shift(expand(h, i), -1, -1)


def forces_wlp(H: HilbertFunction | Sequence[int]) -> ForcingVerdict:
    H = require_o_sequence(H)
    for i in range(1, t_index(H)):
        if H[i - 1] != lower_neighbour(H[i], i):
            return ForcingVerdict(False, i)
    return ForcingVerdict(True)


def forces_slp_mrp(H: HilbertFunction | Sequence[int]) -> ForcingVerdict:
    """Whether ``H`` forces SLP, equivalently MRP, on all algebras.

    The two characterizations coincide, so a single predicate answers both.
    Codimension 1 is grouped with codimension 2.
    """
    H = require_o_sequence(H)
    if H.r <= 2:
        return ForcingVerdict(True)
    wlp = forces_wlp(H)
    if not wlp.forces:
        return wlp
    if H[t_index(H)] > 2:
        return ForcingVerdict(False, SOCLE_WIDTH)
    return ForcingVerdict(True)


def expected_quotient_hf(H: HilbertFunction | Sequence[int], d: int) -> tuple[int, ...]:
    """``max(h_i - h_{i-d}, 0)`` for ``0 <= i <= e``: the Hilbert function of
    ``A/(F)`` when multiplication by a degree-``d`` form has maximal rank."""
    if d < 1:
        raise ValueError("d must be positive")
    H = H if isinstance(H, HilbertFunction) else HilbertFunction(H)
    return tuple(max(H[i] - H[i - d], 0) for i in range(H.e + 1))
