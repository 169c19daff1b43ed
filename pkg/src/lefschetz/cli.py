"""Command-line front end.

    lefschetz classify 1,3,4,3
    lefschetz lexseg 1,3,4,3 [--write ideal.json]
    lefschetz test --ideal ideal.json --property slp --strategy random
    lefschetz hpbound 1,3,4,3 3 1
    lefschetz sweep --max-r 3 --max-e 4 --max-h 6

Exit codes: 0 success / property holds, 1 property fails (or sweep
mismatch), 2 malformed input, 3 not an O-sequence, 4 inconclusive,
5 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .classify import SOCLE_WIDTH, forces_slp_mrp, forces_wlp, lower_neighbour
from .errors import ExhaustiveTooLarge, LefschetzError, NotArtinianByCap
from .hpbound import hp_upper_bound
from .macaulay import HilbertFunction, is_o_sequence, t_index
from .ring import hilbert_function, lex_segment_ideal, load_ideal
from .sweep import SweepBudgetExceeded, run_sweep
from .tester import (
    AllOnesLinear,
    ExhaustiveFiniteField,
    LastVariablePower,
    PropertyReport,
    RandomInt,
    Verdict,
    test_property,
)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_BAD_INPUT = 2
EXIT_NOT_O_SEQUENCE = 3
EXIT_INCONCLUSIVE = 4
EXIT_BUDGET = 5

VERDICT_EXIT = {
    Verdict.HOLDS_DETERMINISTIC: EXIT_OK,
    Verdict.HOLDS_PROBABILISTIC: EXIT_OK,
    Verdict.FAILS_OBSERVED: EXIT_FAILS,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 3
    coeff_bound: int = 1000
    degree_cap: int = 50
    output: str = "human"


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _parse_values(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p.isdigit() for p in parts):
        raise UsageError(f"expected comma-separated nonnegative integers, got {text!r}")
    vals = [int(p) for p in parts]
    while len(vals) > 1 and vals[-1] == 0:
        vals.pop()
    return vals


def _emit(cfg: RunConfig, payload: dict, lines: list[str]) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_classify(args, cfg: RunConfig) -> int:
    vals = _parse_values(args.sequence)
    if not is_o_sequence(vals):
        _emit(cfg, {"sequence": vals, "o_sequence": False},
              [f"sequence: {','.join(map(str, vals))}", "not an O-sequence"])
        return EXIT_NOT_O_SEQUENCE
    H = HilbertFunction(vals)
    t = t_index(H)
    wlp = forces_wlp(H)
    strong = forces_slp_mrp(H)
    payload = {
        "sequence": list(H),
        "o_sequence": True,
        "t": t,
        "forces_wlp": wlp.forces,
        "wlp_failing_index": wlp.failing_index,
        "forces_slp_mrp": strong.forces,
        "slp_mrp_failing_index": strong.failing_index,
    }

    def reason(v):
        if v.forces:
            return "yes"
        if v.failing_index == SOCLE_WIDTH:
            return f"no (h_t = {H[t]} > 2)"
        i = v.failing_index
        return f"no (at i = {i}: h_{i - 1} = {H[i - 1]}, ((h_{i})_({i}))^-1_-1 = {lower_neighbour(H[i], i)})"

    lines = [
        f"sequence: {H}",
        "O-sequence: yes",
        f"t: {t}",
        f"forces WLP: {reason(wlp)}",
        f"forces SLP/MRP: {reason(strong)}",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_lexseg(args, cfg: RunConfig) -> int:
    vals = _parse_values(args.sequence)
    if not is_o_sequence(vals):
        _emit(cfg, {"sequence": vals, "o_sequence": False}, ["not an O-sequence"])
        return EXIT_NOT_O_SEQUENCE
    H = HilbertFunction(vals)
    I = lex_segment_ideal(H)
    back = hilbert_function(I, max(H.e + 1, 1))
    gens = [str(g) for g in I.generators]
    if args.write:
        with open(args.write, "w") as fh:
            json.dump(I.to_json(), fh, indent=2)
            fh.write("\n")
    payload = {"sequence": list(H), "generators": gens, "roundtrip": back == H}
    lines = [", ".join(gens),
             f"Hilbert function of quotient: {back} ({'matches' if back == H else 'MISMATCH'})"]
    _emit(cfg, payload, lines)
    return EXIT_OK if back == H else EXIT_FAILS


def _strategy(args, cfg: RunConfig):
    name = args.strategy
    if name == "random":
        return RandomInt(coeff_bound=cfg.coeff_bound, trials=cfg.trials, seed=cfg.seed)
    if name == "lastvar":
        return LastVariablePower()
    if name == "allones":
        return AllOnesLinear()
    return ExhaustiveFiniteField(budget=args.budget)


def format_report(report: PropertyReport) -> list[str]:
    lines = [
        f"property: {report.property.value}",
        f"verdict: {report.verdict.value}" + (" (certified)" if report.certified else ""),
        f"field: {'QQ' if report.field == 0 else f'GF({report.field})'}",
        f"Hilbert function: {','.join(map(str, report.hilbert_function))}",
        f"strategy: {report.strategy['name']}" + (f" (seed {report.seed})" if report.seed is not None else ""),
        "   d   i   max  best  trials",
    ]
    for e in report.entries:
        flag = "" if e.done else "  <- deficit"
        lines.append(f"{e.d:4d}{e.i:4d}{e.max_possible:6d}{e.best_rank_observed:6d}{e.trials_used:8d}{flag}")
    lines.extend(f"note: {n}" for n in report.notes)
    return lines


def cmd_test(args, cfg: RunConfig) -> int:
    try:
        I = load_ideal(args.ideal)
    except (OSError, json.JSONDecodeError, ValueError, LefschetzError) as exc:
        raise UsageError(f"cannot read ideal from {args.ideal}: {exc}") from None
    report = test_property(I, args.property, _strategy(args, cfg), cap=cfg.degree_cap)
    _emit(cfg, report.to_dict(), format_report(report))
    return VERDICT_EXIT[report.verdict]


def cmd_hpbound(args, cfg: RunConfig) -> int:
    vals = _parse_values(args.sequence)
    try:
        H = HilbertFunction(vals)
        value = hp_upper_bound(H, args.p, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(cfg, {"sequence": list(H), "p": args.p, "d": args.d, "bound": value}, [str(value)])
    return EXIT_OK


def cmd_sweep(args, cfg: RunConfig) -> int:
    result = run_sweep(args.max_r, args.max_e, args.max_h, jobs=args.jobs, max_sequences=args.max_sequences)
    summary = result.summary()
    lines = [f"{k}: {v}" for k, v in summary.items()]
    for rec in result.records:
        if rec.mismatch or rec.wlp_mismatch or rec.chain_violation or not rec.roundtrip or args.verbose:
            lines.append(
                f"{','.join(map(str, rec.sequence))}: forces SLP/MRP {_yes(rec.forces_slp_mrp)}, "
                f"lex SLP {_yes(rec.lex_slp)}, lex MRP {_yes(rec.lex_mrp)}, "
                f"forces WLP {_yes(rec.forces_wlp)}, lex WLP {_yes(rec.lex_wlp)}"
            )
    _emit(cfg, result.to_dict(), lines)
    bad = summary["mismatches"] + summary["wlp_mismatches"] + summary["chain_violations"] + summary["roundtrip_failures"]
    return EXIT_OK if bad == 0 else EXIT_FAILS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="random seed (default: $LEFSCHETZ_SEED or 0)")
    common.add_argument("--trials", type=_positive, default=3)
    common.add_argument("--coeff-bound", type=_positive, default=1000)
    common.add_argument("--degree-cap", type=_positive, default=50)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="lefschetz", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a Hilbert function")
    p.add_argument("sequence", help="comma-separated values, e.g. 1,3,4,3")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lexseg", parents=[common], help="lex-segment ideal of a Hilbert function")
    p.add_argument("sequence")
    p.add_argument("--write", metavar="PATH", help="also write the ideal as JSON")
    p.set_defaults(func=cmd_lexseg)

    p = sub.add_parser("test", parents=[common], help="test WLP/SLP/MRP on an ideal file")
    p.add_argument("--ideal", required=True, metavar="PATH")
    p.add_argument("--property", required=True, choices=["wlp", "slp", "mrp"])
    p.add_argument("--strategy", default="random", choices=["random", "lastvar", "allones", "exhaustive"])
    p.add_argument("--budget", type=_positive, default=20000, help="form budget for --strategy exhaustive")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("hpbound", parents=[common], help="Herzog-Popescu bound sum")
    p.add_argument("sequence")
    p.add_argument("p", type=_positive)
    p.add_argument("d", type=_positive)
    p.set_defaults(func=cmd_hpbound)

    p = sub.add_parser("sweep", parents=[common], help="cross-check forcing against lex-segment algebras")
    p.add_argument("--max-r", type=_positive, default=3)
    p.add_argument("--max-e", type=_positive, default=4)
    p.add_argument("--max-h", type=_positive, default=6)
    p.add_argument("--max-sequences", type=_positive, default=100000)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def _config(args) -> RunConfig:
    seed = args.seed
    if seed is None:
        env = os.environ.get("LEFSCHETZ_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError:
            raise UsageError(f"LEFSCHETZ_SEED must be an integer, got {env!r}") from None
    return RunConfig(seed=seed, trials=args.trials, coeff_bound=args.coeff_bound,
                     degree_cap=args.degree_cap, output="json" if args.json else "human")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, _config(args))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except NotArtinianByCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ExhaustiveTooLarge, SweepBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, LefschetzError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
