"""
Argument parsing and exit codes for the AC game toolkit.

Exit codes: 0 success, 1 validation error, 2 runtime error, 3 verification failure.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from analysis import DEFAULT_CATALOG
from cli import __version__
from cli.commands import CURVES, cmd_calibrate, cmd_compare, cmd_simulate, cmd_stability
from cli.verify import run_verification
from config.logging_setup import configure_logging
from game.errors import SimulationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2
EXIT_VERIFY_FAILED = 3


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def fraction(value: str) -> float:
    number = float(value)
    if not 0 < number < 1:
        raise argparse.ArgumentTypeError(f"expected a fraction in (0, 1), got {value}")
    return number


def comma_list(value: str) -> List[str]:
    # strategy params use commas inside braces, e.g. solo_split{k=2}
    items, depth, current = [], 0, ""
    for char in value:
        if char == "{":
            depth += 1
        elif char == "}":
            depth -= 1
        if char == "," and depth == 0:
            items.append(current.strip())
            current = ""
        else:
            current += char
    if current.strip():
        items.append(current.strip())
    return items


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Simulate and analyse the AC game under h-reinvestment")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--log-level', help='Root log level (default: ACGAME_LOG_LEVEL or INFO)')
    sub = parser.add_subparsers(dest='command', required=True)

    simulate = sub.add_parser('simulate', help='Simulate a game config and write the trajectory')
    simulate.add_argument('--config', required=True, help='Game config JSON')
    simulate.add_argument('--out', help='Output path without extension (default: config outputs.path)')
    simulate.add_argument('--horizon', type=positive_int, help='Override the config horizon')

    compare = sub.add_parser('compare', help='Overtaking verdicts between two strategy assignments')
    compare.add_argument('--config', required=True, help='Game config JSON (first assignment)')
    compare.add_argument('--other', help='Second config; defaults to the config alternative assignment')
    compare.add_argument('--horizon', type=positive_int)
    compare.add_argument('--burn-in', type=fraction, help='Share of years ignored before the tail (default 0.5)')
    compare.add_argument('--out', help='Write the JSON report here as well as to stdout')

    stability = sub.add_parser('stability', help='Search for an unstable coalition of at most k players')
    stability.add_argument('--config', required=True)
    stability.add_argument('--catalog', type=comma_list, default=list(DEFAULT_CATALOG),
                           help=f"Deviation families (default: {','.join(DEFAULT_CATALOG)})")
    stability.add_argument('--k', type=int, choices=[1, 2], default=2)
    stability.add_argument('--horizon', type=positive_int)
    stability.add_argument('--burn-in', type=fraction)
    stability.add_argument('--exhaustive', action='store_true', help='Collect every witness')
    stability.add_argument('--out')

    verify = sub.add_parser('verify', help='Run the built-in verification suite')
    verify.add_argument('--horizon', type=positive_int, help='Verdict horizon; closed-form checks run 10x longer')

    calibrate = sub.add_parser('calibrate', help='Median-citation curves and correlations for a corpus')
    calibrate.add_argument('--corpus', required=True)
    calibrate.add_argument('--format', choices=['csv', 'jsonl'], default='csv')
    calibrate.add_argument('--analyses', type=comma_list, default=list(CURVES),
                           help=f"Subset of {','.join(CURVES)}")
    calibrate.add_argument('--out', default='calibration_out', help='Output directory')
    return parser


def run(args: argparse.Namespace) -> int:
    if args.command == 'simulate':
        cmd_simulate(args.config, args.out, args.horizon)
    elif args.command == 'compare':
        print(json.dumps(cmd_compare(args.config, args.other, args.horizon, args.burn_in, args.out), indent=2, sort_keys=True))
    elif args.command == 'stability':
        report = cmd_stability(args.config, args.catalog, args.k, args.horizon, args.burn_in, args.exhaustive, args.out)
        print(json.dumps(report, indent=2, sort_keys=True))
    elif args.command == 'verify':
        results = run_verification(args.horizon)
        return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED
    elif args.command == 'calibrate':
        summary = cmd_calibrate(args.corpus, args.format, args.analyses, args.out)
        print(json.dumps({k: summary[k] for k in ("records", "rejects", "correlations")}, indent=2, sort_keys=True))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return run(args)
    except SimulationError as e:
        logger.error(f"Simulation failed: {e}")
        return EXIT_RUNTIME
    except ValueError as e:
        logger.error(f"{e}")
        return EXIT_VALIDATION
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
