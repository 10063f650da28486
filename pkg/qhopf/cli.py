"""Command line entry point: ``qhopf <command> [options]``."""

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError
from tqdm import tqdm

from .bundles import Eigenpair, block_spectrum
from .coefficients import ScalarQ
from .configs import COMMANDS, RunConfig, TripleConfig, load_yaml_config
from .haar import haar, haar_closed_form
from .io import SpectralReport, dumps, parse_element, render, write_output
from .quantum_group import GAMMA, GAMMA_STAR
from .sphere import convention_report, get_conventions
from .verification import run_suite
from .yang_mills import CANONICAL, Displacement, YMSMTriple, ym_check

logger = logging.getLogger("qhopf")

# command line flag -> RunConfig field
OVERRIDES = {
    "n": "n_range",
    "filtration": "filtration",
    "buffer": "buffer",
    "side": "sides",
    "mode": "mode",
    "q": "q_values",
    "format": "output_format",
    "output": "output_path",
    "workers": "workers",
    "suite": "suite",
}


def construct_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="qhopf", description="Exact computations on the quantum Hopf fibration."
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", type=str, default=None, help="YAML run configuration")
    parser.add_argument("--n", type=str, default=None, help="winding range, e.g. --n=-2..2")
    parser.add_argument("--filtration", type=int, default=None)
    parser.add_argument("--buffer", type=int, default=None)
    parser.add_argument("--side", choices=["left", "right"], action="append", default=None)
    parser.add_argument("--mode", choices=["exact", "numeric"], default=None)
    parser.add_argument("--q", action="append", default=None, help="numeric q sample")
    parser.add_argument("--format", choices=["csv", "json", "latex"], default=None)
    parser.add_argument("--output", type=str, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--suite", type=str, default=None)
    parser.add_argument("--log-file", type=str, default=None)
    parser.add_argument("--refresh-cache", action="store_true")
    parser.add_argument("--verbose", action="store_true")
    return parser.parse_args(argv)


def build_config(args: argparse.Namespace) -> RunConfig:
    """Loads ``--config`` (if any) and applies the command line overrides."""
    base = load_yaml_config(args.config) if args.config else RunConfig()
    data = base.model_dump()
    data["command"] = args.command
    for flag, key in OVERRIDES.items():
        value = getattr(args, flag)
        if value is not None:
            data[key] = value
    return RunConfig.model_validate(data)


def setup_logging(log_file: Optional[str], verbose: bool) -> None:
    if verbose:
        logger.setLevel(logging.DEBUG)
    if log_file:
        handler = logging.FileHandler(log_file)
        handler.setFormatter(logging.Formatter("%(asctime)s %(message)s", "%Y-%m-%d %H:%M:%S"))
        logger.addHandler(handler)


def compute_spectra(config: RunConfig, refresh_cache: bool = False) -> List[Eigenpair]:
    """Spectra of every configured (side, n), in a deterministic order."""
    jobs: List[Tuple[str, int]] = [(side, n) for side in config.sides for n in config.windings()]

    def work(job: Tuple[str, int]) -> List[Eigenpair]:
        side, n = job
        return block_spectrum(
            n, config.filtration, side, config.buffer, refresh_cache=refresh_cache
        )

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        results = list(
            tqdm(pool.map(work, jobs), total=len(jobs), desc="blocks", disable=len(jobs) < 2)
        )
    return [pair for block in results for pair in block]


def _spectrum(config: RunConfig, refresh_cache: bool, by_row: bool) -> int:
    pairs = compute_spectra(config, refresh_cache)
    if by_row:
        pairs = sorted(pairs, key=lambda p: (p.side, p.table.row, p.n, p.monomial))
    report = SpectralReport.from_pairs(pairs, config.q_samples())
    write_output(
        render(report, config.output_format, numeric=config.mode == "numeric"),
        config.output_path,
    )
    failures = report.mismatches
    for record in failures:
        logger.warning(
            f"{record['side']} n={record['n']} {record['monomial']}: "
            f"computed {record['eigenvalue'].to_text()}, table {record['table_value'].to_text()}"
        )
    return 1 if failures else 0


def _verify(config: RunConfig) -> int:
    results = run_suite(config)
    write_output(dumps([r.to_dict() for r in results]), config.output_path)
    return 1 if any(r.failed for r in results) else 0


def _triple(spec: TripleConfig) -> YMSMTriple:
    omega = CANONICAL
    if spec.displacement:
        omega = Displacement.exact(parse_element(spec.displacement))
    vprime = ScalarQ.parse(spec.vprime) if spec.vprime else None
    return YMSMTriple.solution(spec.n, spec.family, omega=omega, Vprime=vprime)


def _ym_check(config: RunConfig) -> int:
    q = float(config.q_samples()[0]) if config.q_values else 0.5
    reports = ym_check([_triple(t) for t in config.triples], q=q, filtration=config.filtration)
    write_output(dumps(reports), config.output_path)
    return 0 if all(r["passed"] for r in reports) else 1


def _haar(config: RunConfig) -> int:
    x = GAMMA * GAMMA_STAR
    moments: Dict[str, Dict[str, object]] = {}
    for k in range(config.haar_max_power + 1):
        value = haar(x ** k)
        moments[str(k)] = {
            "value": value.to_text(),
            "closed_form": haar_closed_form(k).to_text(),
            "match": value == haar_closed_form(k),
        }
    write_output(dumps({"h((gamma gamma*)^k)": moments}), config.output_path)
    return 0


def _conventions(config: RunConfig) -> int:
    report = convention_report(get_conventions(config.eta_star))
    write_output(dumps(report.to_dict()), config.output_path)
    return 0 if report.is_valid() else 1


def run(config: RunConfig, refresh_cache: bool = False) -> int:
    """Executes one command; returns the process exit status."""
    if config.command == "spectrum":
        return _spectrum(config, refresh_cache, by_row=False)
    if config.command == "table":
        return _spectrum(config, refresh_cache, by_row=True)
    if config.command == "verify":
        return _verify(config)
    if config.command == "ym-check":
        return _ym_check(config)
    if config.command == "haar":
        return _haar(config)
    return _conventions(config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = construct_args(argv)
    setup_logging(args.log_file, args.verbose)
    try:
        config = build_config(args)
    except (ValidationError, FileNotFoundError) as error:
        logger.error(f"invalid configuration: {error}")
        return 2
    try:
        return run(config, refresh_cache=args.refresh_cache)
    except OSError as error:
        logger.error(f"cannot write output: {error}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
