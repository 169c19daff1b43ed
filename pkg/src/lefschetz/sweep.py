"""Cross-check the forcing predicates against lex-segment algebras.

For each artinian O-sequence in a box, the lex-segment ideal is tested with
``xr^d`` (general for stable ideals), and the outcome is compared with
``forces_slp_mrp`` and ``forces_wlp``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

from .classify import forces_slp_mrp, forces_wlp
from .macaulay import HilbertFunction, enumerate_o_sequences
from .ring import hilbert_function, lex_segment_ideal
from .tester import LastVariablePower, test_mrp, test_slp, test_wlp


class SweepBudgetExceeded(Exception):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"more than {budget} sequences in the sweep box")


@dataclass
class SweepRecord:
    sequence: list[int]
    forces_slp_mrp: bool
    forces_wlp: bool
    lex_wlp: bool
    lex_slp: bool
    lex_mrp: bool
    roundtrip: bool

    @property
    def mismatch(self) -> bool:
        return not (self.forces_slp_mrp == self.lex_slp == self.lex_mrp)

    @property
    def wlp_mismatch(self) -> bool:
        return self.forces_wlp != self.lex_wlp

    @property
    def chain_violation(self) -> bool:
        return (self.lex_slp and not self.lex_mrp) or (self.lex_mrp and not self.lex_wlp)


def check_sequence(values: tuple[int, ...]) -> SweepRecord:
    H = HilbertFunction(values)
    I = lex_segment_ideal(H)
    strategy = LastVariablePower()
    return SweepRecord(
        sequence=list(H),
        forces_slp_mrp=forces_slp_mrp(H).forces,
        forces_wlp=forces_wlp(H).forces,
        lex_wlp=test_wlp(I, strategy).holds,
        lex_slp=test_slp(I, strategy).holds,
        lex_mrp=test_mrp(I, strategy).holds,
        roundtrip=hilbert_function(I, H.e + 1) == H,
    )


@dataclass
class SweepResult:
    records: list[SweepRecord]

    def summary(self) -> dict:
        recs = self.records
        return {
            "sequences": len(recs),
            "forcing_slp_mrp": sum(r.forces_slp_mrp for r in recs),
            "forcing_wlp": sum(r.forces_wlp for r in recs),
            "mismatches": sum(r.mismatch for r in recs),
            "wlp_mismatches": sum(r.wlp_mismatch for r in recs),
            "chain_violations": sum(r.chain_violation for r in recs),
            "roundtrip_failures": sum(not r.roundtrip for r in recs),
        }

    def to_dict(self) -> dict:
        return {"summary": self.summary(), "records": [asdict(r) for r in self.records]}


def run_sweep(max_r: int, max_e: int, max_h: int, jobs: int = 1,
              max_sequences: Optional[int] = None) -> SweepResult:
    seqs = []
    for H in enumerate_o_sequences(max_r, max_e, max_h):
        seqs.append(H.values)
        if max_sequences is not None and len(seqs) > max_sequences:
            raise SweepBudgetExceeded(max_sequences)
    seqs.sort()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(check_sequence, seqs, chunksize=8))
    else:
        records = [check_sequence(s) for s in seqs]
    return SweepResult(records)
