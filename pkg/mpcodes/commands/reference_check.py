"""
reference-check - replay the bundled reference codes and compare with golden values.

Prints one PASS/FAIL line per check and ALL PASS at the end; exits 1 on any mismatch.
"""

import argparse

from commands.common import record
from models.run_log import RunAction
from reference.checks import run_reference_checks


def register(subparsers) -> None:
    parser = subparsers.add_parser("reference-check", help="replay the reference examples")
    parser.add_argument("--trials", type=int, default=10, help="simulation trials per code")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--quick", action="store_true", help="skip brute-force distance enumeration")
    parser.add_argument("--workers", type=int, default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    report = run_reference_checks(trials=args.trials, seed=args.seed,
                                  slow=not args.quick, workers=args.workers)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status}  {check.name}"
        if not check.passed:
            line += f"  (expected {check.expected}, got {check.actual})"
        print(line)

    record(RunAction.REFERENCE_CHECKED, seed=args.seed,
           metadata={"checks": len(report.checks), "failures": len(report.failures)})
    if report.passed:
        print("ALL PASS")
        return 0
    print(f"FAILED: {len(report.failures)} of {len(report.checks)}")
    return 1
