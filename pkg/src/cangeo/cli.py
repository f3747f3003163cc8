"""Command-line front end.

Five subcommands: `classify` one (d, s) pair, `table` a rectangle of
pairs, `oracle` for direct finite-field measurements, `xi` for the
two-component enumeration, `geography` for plot-ready line and point
data.  Output goes to stdout in one of three formats; diagnostics go to
stderr.  Identical invocations produce byte-identical stdout.

Exit codes: 0 success, 2 bad input, 3 oracle measurement disagreeing
with a closed-form prediction (rerun with another seed; persistent
mismatch means a bug on one side or the other).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import atlas, fatpoints, invariants
from .classify import BlowupPair, DeformationClass, TriState, classify, smooth_cover_exists, zone_rule

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3

MIN_PRIME = 10 ** 6

# Fat-point values pinned by independent sources, keyed by (k, r, s).
CURATED_H0 = {(12, 3, 14): 7, (16, 4, 14): 13}
CURATED_H1 = {(12, 3, 14): 0, (16, 4, 14): 0}

CLASSIFY_COLUMNS = [
    "d", "s", "very_ample", "smooth_cover", "alpha_surjective",
    "ext1_nonzero", "deformation", "rule",
    "p_g", "q", "chi", "c1sq", "c2", "slope", "mu", "mu2", "codim",
]
ORACLE_EXTRA_COLUMNS = [
    "alpha_rank", "alpha_dim_source", "alpha_dim_target", "alpha_coker",
    "oracle_flag",
]
H_COLUMNS = ["k", "r", "s", "seed", "trials", "prime",
             "measured", "virtual", "defect", "expected", "flag"]
ALPHA_COLUMNS = ["d", "s", "seed", "trials", "prime",
                 "rank", "dim_source", "dim_target", "coker",
                 "surjective_measured", "surjective_formula", "flag"]
XI_COLUMNS = ["x_prime", "y", "m", "d", "s", "certified",
              "scroll_witness_r", "scroll_witness_l",
              "scroll_witness_a", "scroll_witness_b", "scroll_witness_c"]
GEOGRAPHY_COLUMNS = ["kind", "d", "intercept", "x_min", "x_max",
                     "s", "chi", "c1sq", "deformation"]


@dataclass(frozen=True)
class RunConfig:
    seed: int
    trials: int
    prime: int
    output_format: str


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64 bits of input."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, twos = n - 1, 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(twos - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _int_literal(text: str) -> int:
    """Integer in any Python base notation (42, 0xC0FFEE, 0o7, 0b101)."""
    return int(text, 0)


def _span(text: str) -> range:
    """\"3..5\" -> range(3, 6); a bare \"7\" means 7..7."""
    lo, sep, hi = text.partition("..")
    first = int(lo)
    last = int(hi) if sep else first
    if last < first:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(first, last + 1)


# ---------------------------------------------------------------------------
# output formatting
# ---------------------------------------------------------------------------

def _plain(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _json_ready(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_json_ready(v) for v in value]
    return value


def _flatten(record: dict) -> dict:
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict):
            for sub, subvalue in value.items():
                flat[f"{key}_{sub}"] = subvalue
        else:
            flat[key] = value
    return flat


def emit(records: list[dict], columns: list[str], config: RunConfig,
         out=None, single: bool = False) -> None:
    out = sys.stdout if out is None else out
    fmt = config.output_format
    if fmt == "json":
        payload = _json_ready(records[0] if single else records)
        out.write(json.dumps(payload, indent=2, sort_keys=True))
        out.write("\n")
        return
    flat = [_flatten(r) for r in records]
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\r\n")
        writer.writerow(columns)
        for row in flat:
            writer.writerow([_plain(row.get(c)) for c in columns])
        return
    if single:
        width = max(len(c) for c in columns)
        for c in columns:
            cell = _plain(flat[0].get(c))
            out.write(f"{c:<{width}}  {cell}\n".rstrip() + "\n")
        return
    cells = [[_plain(row.get(c)) for c in columns] for row in flat]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c)
              for i, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    out.write("\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
        out.write("\n")


# ---------------------------------------------------------------------------
# record builders
# ---------------------------------------------------------------------------

def classification_record(pair: BlowupPair, config: RunConfig,
                          with_oracle: bool) -> tuple[dict, bool]:
    """Full row for one pair; second value reports an oracle mismatch."""
    rec = classify(pair)
    row = {
        "d": pair.d,
        "s": pair.s,
        "very_ample": rec.very_ample.value,
        "smooth_cover": rec.smooth_cover.value,
        "alpha_surjective": rec.alpha_surjective.value,
        "ext1_nonzero": rec.ext1_nonzero.value,
        "deformation": rec.deformation.value,
        "rule": zone_rule(pair),
    }
    if rec.smooth_cover is TriState.YES:
        inv = invariants.cover_invariants(pair)
        row.update(p_g=inv.p_g, q=inv.q, chi=inv.chi, c1sq=inv.c1sq,
                   c2=inv.c2, slope=inv.slope)
    else:
        row.update(p_g=None, q=None, chi=None, c1sq=None, c2=None, slope=None)
    if rec.deformation is DeformationClass.DEGREE1:
        dims = invariants.moduli_dims_degree1(pair)
        row.update(mu=dims.mu, mu2=dims.mu2, codim=dims.codim)
    elif rec.deformation is DeformationClass.DEGREE2_ALWAYS:
        row.update(mu=invariants.moduli_dim_degree2(pair), mu2=None, codim=None)
    else:
        row.update(mu=None, mu2=None, codim=None)
    mismatch = False
    if with_oracle:
        rank, dim_source, dim_target = fatpoints.alpha_rank(
            pair.d, pair.s, trials=config.trials, seed=config.seed,
            p=config.prime)
        row.update(alpha_rank=rank, alpha_dim_source=dim_source,
                   alpha_dim_target=dim_target,
                   alpha_coker=dim_target - rank)
        verdict = rec.alpha_surjective
        if verdict is TriState.UNKNOWN:
            row["oracle_flag"] = None
        else:
            agreed = (rank == dim_target) == (verdict is TriState.YES)
            row["oracle_flag"] = "MATCH" if agreed else "MISMATCH"
            mismatch = not agreed
    return row, mismatch


def expected_h0(k: int, r: int, s: int) -> int | None:
    """Closed-form prediction where one is known; None otherwise."""
    if (k, r, s) in CURATED_H0:
        return CURATED_H0[(k, r, s)]
    if r == 1:
        return max(fatpoints.FatPointSystem(k, 1, s).ambient_dim - s, 0)
    if r == 4 and k >= 10 and k % 2 == 0:
        d = (k - 6) // 2
        pair = BlowupPair(d, s)
        if smooth_cover_exists(pair) is TriState.YES:
            return invariants.h0_normal_of_cover(pair) + 1
    return None


def expected_h1(k: int, r: int, s: int) -> int | None:
    if (k, r, s) in CURATED_H1:
        return CURATED_H1[(k, r, s)]
    if r == 1:
        return max(s - fatpoints.FatPointSystem(k, 1, s).ambient_dim, 0)
    if r == 4 and expected_h0(k, r, s) is not None:
        return 0
    return None


def measurement_record(which: str, k: int, r: int, s: int,
                       config: RunConfig) -> tuple[dict, bool]:
    system = fatpoints.FatPointSystem(k, r, s)
    kwargs = dict(trials=config.trials, seed=config.seed, p=config.prime)
    if which == "h0":
        measured = fatpoints.h0_fatpoints(system, **kwargs)
        expected = expected_h0(k, r, s)
        virtual = system.expected_h0
    else:
        measured = fatpoints.h1_fatpoints(system, **kwargs)
        expected = expected_h1(k, r, s)
        virtual = max(system.conditions - system.ambient_dim, 0)
    flag = None if expected is None else (
        "MATCH" if measured == expected else "MISMATCH")
    row = {
        "k": k, "r": r, "s": s,
        "seed": config.seed, "trials": config.trials, "prime": config.prime,
        "measured": measured, "virtual": virtual,
        "defect": measured - virtual, "expected": expected, "flag": flag,
    }
    return row, flag == "MISMATCH"


def alpha_record(d: int, s: int, config: RunConfig) -> tuple[dict, bool]:
    rank, dim_source, dim_target = fatpoints.alpha_rank(
        d, s, trials=config.trials, seed=config.seed, p=config.prime)
    measured = rank == dim_target
    formula = classify(BlowupPair(d, s)).alpha_surjective
    if formula is TriState.UNKNOWN:
        flag = None
    else:
        flag = "MATCH" if measured == (formula is TriState.YES) else "MISMATCH"
    row = {
        "d": d, "s": s,
        "seed": config.seed, "trials": config.trials, "prime": config.prime,
        "rank": rank, "dim_source": dim_source, "dim_target": dim_target,
        "coker": dim_target - rank,
        "surjective_measured": "yes" if measured else "no",
        "surjective_formula": formula.value,
        "flag": flag,
    }
    return row, flag == "MISMATCH"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_classify(args, config: RunConfig) -> int:
    pair = BlowupPair(args.d, args.s)
    row, mismatch = classification_record(pair, config, args.oracle)
    columns = CLASSIFY_COLUMNS + (ORACLE_EXTRA_COLUMNS if args.oracle else [])
    emit([row], columns, config, single=True)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_table(args, config: RunConfig) -> int:
    rows, any_mismatch = [], False
    for d in args.d_range:
        for s in args.s_range:
            row, mismatch = classification_record(
                BlowupPair(d, s), config, args.oracle)
            rows.append(row)
            any_mismatch = any_mismatch or mismatch
    columns = CLASSIFY_COLUMNS + (ORACLE_EXTRA_COLUMNS if args.oracle else [])
    emit(rows, columns, config)
    return EXIT_MISMATCH if any_mismatch else EXIT_OK


def cmd_oracle(args, config: RunConfig) -> int:
    if args.which == "alpha":
        row, mismatch = alpha_record(args.d, args.s, config)
        emit([row], ALPHA_COLUMNS, config, single=True)
    else:
        row, mismatch = measurement_record(
            args.which, args.k, args.r, args.s, config)
        emit([row], H_COLUMNS, config, single=True)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_xi(args, config: RunConfig) -> int:
    result = atlas.two_component_points(args.m, args.dmax)
    certified = args.m <= 17
    if not certified:
        print(f"note: m={args.m} is outside the certified window (m <= 17); "
              "rows are best-effort and marked certified=false",
              file=sys.stderr)
    for miss in result.unwitnessed:
        print(f"note: (d={miss.d}, s={miss.s}) with invariants "
              f"({miss.x_prime}, {miss.y}) lies on the line for m={args.m} "
              f"but no divisor of this line's class realizes it: "
              f"{miss.reason}", file=sys.stderr)
    rows = []
    for pt in result.points:
        record = asdict(pt)
        record["certified"] = certified
        rows.append(record)
    emit(rows, XI_COLUMNS, config)
    return EXIT_OK


def cmd_geography(args, config: RunConfig) -> int:
    rows = [{"kind": "line", **asdict(line),
             "s": None, "chi": None, "c1sq": None, "deformation": None}
            for line in atlas.geography_lines(args.d_range)]
    for d in args.d_range:
        s = 1
        while True:
            pair = BlowupPair(d, s)
            if smooth_cover_exists(pair) is not TriState.YES:
                break
            inv = invariants.cover_invariants(pair)
            rows.append({
                "kind": "point", "d": d, "intercept": None,
                "x_min": None, "x_max": None,
                "s": s, "chi": inv.chi, "c1sq": inv.c1sq,
                "deformation": classify(pair).deformation.value,
            })
            s += 1
    emit(rows, GEOGRAPHY_COLUMNS, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_run_options(parser: argparse.ArgumentParser, top: bool) -> None:
    # Registered on the top-level parser with real defaults and on every
    # subparser with SUPPRESS, so the flags work on either side of the
    # subcommand name and the subcommand position wins.
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--seed", type=_int_literal, default=d(None),
                        help="RNG seed (any base; default env CANGEO_SEED, "
                             "then 0xC0FFEE)")
    parser.add_argument("--trials", type=int, default=d(fatpoints.DEFAULT_TRIALS),
                        help="independent point configurations per oracle call")
    parser.add_argument("--prime", type=int, default=d(fatpoints.DEFAULT_PRIME),
                        help="field modulus, a prime above 10^6")
    parser.add_argument("--format", choices=("json", "csv", "table"),
                        default=d("table"), dest="output_format",
                        help="stdout format")
    parser.add_argument("--oracle", action="store_true",
                        default=d(False),
                        help="cross-check classification rows against the "
                             "finite-field oracle (classify/table)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cangeo",
        description="Invariants, deformation classes and geography of "
                    "canonical degree-2 covers of blown-up planes.")
    _add_run_options(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("classify", help="classify a single (d, s) pair")
    p.add_argument("d", type=int, help="branch curve half-degree, >= 2")
    p.add_argument("s", type=int, help="number of blown-up points, >= 1")
    _add_run_options(p, top=False)

    p = sub.add_parser("table", help="classify a rectangle of (d, s) pairs")
    p.add_argument("--d", dest="d_range", type=_span, required=True,
                   metavar="A..B", help="degree range, e.g. 3..5")
    p.add_argument("--s", dest="s_range", type=_span, required=True,
                   metavar="A..B", help="point-count range, e.g. 1..14")
    _add_run_options(p, top=False)

    p = sub.add_parser("oracle", help="run a finite-field measurement")
    p.add_argument("which", choices=("h0", "h1", "alpha"),
                   help="quantity to measure")
    p.add_argument("--k", type=int, help="curve degree (h0/h1)")
    p.add_argument("--r", type=int, help="vanishing multiplicity (h0/h1)")
    p.add_argument("--d", type=int, help="cover degree parameter (alpha)")
    p.add_argument("--s", type=int, required=True, help="number of points")
    _add_run_options(p, top=False)

    p = sub.add_parser("xi", help="enumerate two-component invariant pairs")
    p.add_argument("--m", type=int, required=True,
                   help="line index, >= 4")
    p.add_argument("--dmax", type=int, required=True,
                   help="largest cover degree to scan, >= 2")
    _add_run_options(p, top=False)

    p = sub.add_parser("geography", help="emit line and point data for the "
                                         "(chi, c1^2) plane")
    p.add_argument("--d", dest="d_range", type=_span, required=True,
                   metavar="A..B", help="degree range, e.g. 2..6")
    _add_run_options(p, top=False)

    return parser


def _resolve_config(parser: argparse.ArgumentParser, args) -> RunConfig:
    seed = args.seed
    if seed is None:
        raw = os.environ.get("CANGEO_SEED")
        if raw is None:
            seed = fatpoints.DEFAULT_SEED
        else:
            try:
                seed = _int_literal(raw)
            except ValueError:
                parser.error(f"CANGEO_SEED is not an integer: {raw!r}")
    if seed < 0:
        parser.error("seed must be nonnegative")
    if args.trials < 1:
        parser.error("trials must be at least 1")
    if args.prime <= MIN_PRIME or not _is_prime(args.prime):
        parser.error(f"prime must be a prime above {MIN_PRIME}")
    return RunConfig(seed=seed, trials=args.trials, prime=args.prime,
                     output_format=args.output_format)


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "classify":
        if args.d < 2 or args.s < 1:
            parser.error("need d >= 2 and s >= 1")
    elif args.command == "table":
        if args.d_range.start < 2 or args.s_range.start < 1:
            parser.error("need d >= 2 and s >= 1")
    elif args.command == "oracle":
        if args.s < 1:
            parser.error("need s >= 1")
        if args.which == "alpha":
            if args.d is None:
                parser.error("oracle alpha needs --d")
            if args.d < 2:
                parser.error("need d >= 2")
        else:
            if args.k is None or args.r is None:
                parser.error(f"oracle {args.which} needs --k and --r")
            if args.k < 0 or args.r < 1:
                parser.error("need k >= 0 and r >= 1")
    elif args.command == "xi":
        if args.m < 4:
            parser.error("need m >= 4")
        if args.dmax < 2:
            parser.error("need dmax >= 2")
    elif args.command == "geography":
        if args.d_range.start < 2:
            parser.error("need d >= 2")


COMMANDS = {
    "classify": cmd_classify,
    "table": cmd_table,
    "oracle": cmd_oracle,
    "xi": cmd_xi,
    "geography": cmd_geography,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    config = _resolve_config(parser, args)
    return COMMANDS[args.command](args, config)


if __name__ == "__main__":
    sys.exit(main())
