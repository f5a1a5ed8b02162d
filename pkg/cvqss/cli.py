import json
import logging
import sys
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from typing import List, Optional

import numpy as np

from . import fixtures, samplers, synthesis
from .errors import DecodabilityError, UsageError, ValidationError
from .metrics import channel_report, db_grid, db_to_r, sweep
from .parsing import curves_to_csv, read_scheme, write_curves, write_scheme
from .search import CRITERIA, random_search
from .sharing import (
    PlayerSubset,
    SharingScheme,
    access_report,
    decodability,
    decoding_plan,
    ramp_bound,
)
from .utils import ordered_map

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

# Interferometers further than this from unitary are projected before synthesis.
SYNTHESIS_UNITARITY_TOL = 1e-12


def parse_subset(text: str) -> PlayerSubset:
    try:
        return PlayerSubset.parse(text)
    except ValidationError as err:
        raise ArgumentTypeError(str(err))


def _emit(report) -> None:
    print(json.dumps(report, indent=2))


def _check_subset(subset: PlayerSubset, scheme: SharingScheme) -> PlayerSubset:
    try:
        subset.check(scheme)
    except ValidationError as err:
        raise UsageError(str(err))
    return subset


def sample(args: Namespace) -> None:
    if args.ancillas < 1 or args.secret < 1:
        raise UsageError("--ancillas and --secret must be positive")
    sampler = samplers.get(args.method).from_args(args)
    interferometer = sampler.sample(args.ancillas + args.secret, args.seed)
    scheme = SharingScheme(args.ancillas, args.secret, interferometer)
    provenance = {"method": args.method, "seed": args.seed}
    if args.method == "euler":
        provenance["marginal"] = sampler.marginal
    write_scheme(args.out, scheme, provenance)
    logger.info(f"Wrote {scheme} to {args.out}")


def export_fixture(args: Namespace) -> None:
    scheme = fixtures.load_fixture(args.name)
    write_scheme(args.out, scheme, {"fixture": args.name}, tolerance=fixtures.FIXTURE_TOL)
    logger.info(f"Wrote fixture {args.name} to {args.out}")


def _subset_entry(scheme: SharingScheme, subset: PlayerSubset, db: Optional[float]) -> dict:
    report = access_report(scheme, subset)
    plan = decoding_plan(scheme, subset)
    entry = {
        "subset": list(subset.indices),
        "decodable": plan.decodable,
        "recoverable": report.recoverable,
        "class": report.access_class.value,
    }
    if plan.decodable:
        entry["D"] = plan.D.tolist()
        entry["B"] = plan.B.tolist()
        entry["trace_BBt"] = float(np.trace(plan.B @ plan.B.T))
        if db is not None:
            quality = channel_report(plan.B, db_to_r(db))
            entry["channel"] = {
                "db": db,
                "nu_max": quality.nu_max,
                "fidelity": quality.fidelity,
                "class": quality.channel_class.value,
            }
    return entry


def analyze(args: Namespace) -> None:
    scheme, _ = read_scheme(args.scheme)
    if args.all:
        subsets = list(PlayerSubset.all(scheme.n_tot))
    else:
        subsets = [_check_subset(args.subset, scheme)]
    entries = ordered_map(lambda subset: _subset_entry(scheme, subset, args.db), subsets, args.workers)
    _emit(
        {
            "n": scheme.n,
            "m": scheme.m,
            "threshold": scheme.threshold,
            "ramp_bound": ramp_bound(scheme.n, scheme.m),
            "subsets": entries,
        }
    )


def run_sweep(args: Namespace) -> None:
    scheme, _ = read_scheme(args.scheme)
    candidates = scheme.threshold_subsets()
    flags = ordered_map(lambda party: decodability(scheme, party), candidates, args.workers)
    parties = [party for party, decodable in zip(candidates, flags) if decodable]
    if not parties:
        raise DecodabilityError("No threshold-size party can decode this scheme")
    points = sweep(scheme, parties, db_grid(args.db_min, args.db_max, args.steps))
    if args.out:
        write_curves(args.out, points)
    else:
        sys.stdout.write(curves_to_csv(points))
        return
    _emit(
        {
            "parties": [party.label for party in parties],
            "points": [
                {"db": point.db, "worst": point.worst.label, "best": point.best.label}
                for point in points
            ],
        }
    )


def search(args: Namespace) -> None:
    if args.ancillas < 1 or args.secret < 1:
        raise UsageError("--ancillas and --secret must be positive")
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    result = random_search(
        args.ancillas, args.secret, args.samples, args.seed, args.method, args.workers
    )
    if args.out:
        write_scheme(
            args.out,
            result.scheme,
            {"method": args.method, "seed": result.seed, "search_seed": args.seed, "index": result.index},
        )
    _emit(
        {
            "criterion": args.criterion,
            "samples": args.samples,
            "index": result.index,
            "seed": result.seed,
            "score": result.score,
            "median_score": float(np.median(result.scores)),
        }
    )


def decoder(args: Namespace) -> None:
    scheme, _ = read_scheme(args.scheme)
    subset = _check_subset(args.subset, scheme)
    error = scheme.interferometer.unitarity_error()
    if error > SYNTHESIS_UNITARITY_TOL:
        logger.info(f"Projecting interferometer onto the unitary group (deviation {error:.3g})")
        scheme = SharingScheme(scheme.n, scheme.m, scheme.interferometer.project())
    plan = decoding_plan(scheme, subset)
    if not plan.decodable:
        raise DecodabilityError(f"Party {subset.label} cannot decode the secret")
    if args.method == "m1" and scheme.m != 1:
        raise UsageError("--method m1 needs a single-mode secret")
    factored = synthesis.complete(plan.D, args.method)
    budget = synthesis.squeezer_budget(factored.composed)
    _emit(
        {
            "subset": list(subset.indices),
            "method": args.method,
            "stages": factored.kinds(),
            "squeezers": budget.count,
            "squeezing": budget.magnitudes,
            "embedding_error": factored.embedding_error(),
            "composed": factored.composed.matrix.tolist(),
        }
    )


def make_parser() -> ArgumentParser:
    parser = ArgumentParser(description="Continuous-variable secret sharing with random interferometers.")
    parser.add_argument("--verbose", action="store_true", help="Log debug output to stderr.")
    commands = parser.add_subparsers(dest="command", required=True)

    sample_parser = commands.add_parser("sample", help="Sample a Haar-random scheme.")
    sample_parser.add_argument("--ancillas", type=int, required=True, help="Number of squeezed ancillas n.")
    sample_parser.add_argument("--secret", type=int, required=True, help="Number of secret modes m.")
    sample_parser.add_argument("--seed", type=int, default=0, help="64-bit sampling seed.")
    sample_parser.add_argument(
        "--method", default="orthonormalize", choices=samplers.SAMPLERS.keys(), help="Haar sampler."
    )
    sample_parser.add_argument("--out", required=True, help="Scheme file to write (.json).")
    samplers.EulerSampler.add_args(sample_parser)
    sample_parser.set_defaults(func=sample)

    fixture_parser = commands.add_parser("fixtures", help="Export a published example scheme.")
    fixture_parser.add_argument("--name", required=True, choices=fixtures.FIXTURES.keys())
    fixture_parser.add_argument("--out", required=True, help="Scheme file to write (.json).")
    fixture_parser.set_defaults(func=export_fixture)

    analyze_parser = commands.add_parser("analyze", help="Decodability and access structure.")
    analyze_parser.add_argument("scheme", help="Scheme file.")
    which = analyze_parser.add_mutually_exclusive_group(required=True)
    which.add_argument("--subset", type=parse_subset, help="Comma separated players, e.g. 1,2,4.")
    which.add_argument("--all", action="store_true", help="Analyze every nonempty subset.")
    analyze_parser.add_argument(
        "--db", type=float, default=None, help="Also report channel quality at this squeezing (dB)."
    )
    analyze_parser.add_argument("--workers", type=int, default=1, help="Worker threads.")
    analyze_parser.set_defaults(func=analyze)

    sweep_parser = commands.add_parser("sweep", help="Reconstruction quality versus squeezing.")
    sweep_parser.add_argument("scheme", help="Scheme file.")
    sweep_parser.add_argument("--db-min", type=float, default=0.0)
    sweep_parser.add_argument("--db-max", type=float, default=40.0)
    sweep_parser.add_argument("--steps", type=int, default=41)
    sweep_parser.add_argument("--parties", choices=["all-threshold"], default="all-threshold")
    sweep_parser.add_argument("--out", default=None, help="Curve file (.csv); stdout if omitted.")
    sweep_parser.add_argument("--workers", type=int, default=1, help="Worker threads.")
    sweep_parser.set_defaults(func=run_sweep)

    search_parser = commands.add_parser("search", help="Random search for a low-noise scheme.")
    search_parser.add_argument("--ancillas", type=int, required=True)
    search_parser.add_argument("--secret", type=int, required=True)
    search_parser.add_argument("--samples", type=int, default=1000)
    search_parser.add_argument("--seed", type=int, default=0)
    search_parser.add_argument("--criterion", choices=CRITERIA, default="min-numax")
    search_parser.add_argument("--method", default="orthonormalize", choices=samplers.SAMPLERS.keys())
    search_parser.add_argument("--workers", type=int, default=1, help="Worker threads.")
    search_parser.add_argument("--out", default=None, help="Write the winning scheme here (.json).")
    search_parser.set_defaults(func=search)

    decoder_parser = commands.add_parser("decoder", help="Synthesize the Gaussian decoder of a party.")
    decoder_parser.add_argument("scheme", help="Scheme file.")
    decoder_parser.add_argument("--subset", type=parse_subset, required=True)
    decoder_parser.add_argument("--method", choices=synthesis.COMPLETIONS.keys(), default="purification")
    decoder_parser.set_defaults(func=decoder)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        args.func(args)
    except UsageError as err:
        logger.error(str(err))
        return EXIT_USAGE
    except ValidationError as err:
        logger.error(str(err))
        return EXIT_VALIDATION
    except OSError as err:
        logger.error(str(err))
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
