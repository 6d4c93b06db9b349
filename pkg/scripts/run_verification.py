#!/usr/bin/env python3
"""Run the exhaustive verification sweeps and print one JSON report per suite.

Example:

    python3 scripts/run_verification.py --order 6 --tree-order 10
"""

import argparse
import sys
import time
from dataclasses import dataclass

from domiperf.enumeration import verify_chain, verify_corollaries, verify_theorem


@dataclass(frozen=True)
class SweepConfig:
    order: int = 6
    tree_order: int = 10
    line_host_order: int = 6
    middle_host_order: int = 4
    suites: tuple[str, ...] = ("theorem", "chain", "corollaries")


def run(config: SweepConfig) -> int:
    failures = 0
    for suite in config.suites:
        start = time.perf_counter()
        if suite == "theorem":
            report = verify_theorem(config.order)
        elif suite == "chain":
            report = verify_chain(config.order)
        else:
            report = verify_corollaries(
                config.order,
                tree_order_max=config.tree_order,
                line_host_order_max=config.line_host_order,
                middle_host_order_max=config.middle_host_order,
            )
        print(report.to_json())
        status = "clean" if report.clean else "COUNTEREXAMPLES"
        print(
            f"# {suite}: {report.checked} graphs, {status}, "
            f"{time.perf_counter() - start:.1f}s",
            file=sys.stderr,
        )
        failures += 0 if report.clean else 1
    return 1 if failures else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order", type=int, default=6, help="graph universe order cap")
    parser.add_argument("--tree-order", type=int, default=10)
    parser.add_argument("--line-host-order", type=int, default=6)
    parser.add_argument("--middle-host-order", type=int, default=4)
    parser.add_argument(
        "--suite",
        choices=("theorem", "chain", "corollaries", "all"),
        default="all",
    )
    args = parser.parse_args()
    suites = (
        ("theorem", "chain", "corollaries") if args.suite == "all" else (args.suite,)
    )
    config = SweepConfig(
        order=args.order,
        tree_order=args.tree_order,
        line_host_order=args.line_host_order,
        middle_host_order=args.middle_host_order,
        suites=suites,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
