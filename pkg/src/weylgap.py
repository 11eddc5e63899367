# import Python's standard libraries
import sys
if (sys.version_info[0] < 3 or sys.version_info[1] < 9):
    print("This program requires Python version 3.9 or higher!")
    sys.exit(1)
import argparse
import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence

# import local libraries
from utils import *
from utils import __version__, __license__
from utils.weyl_lab import TensorKind

# import third-party libraries
from colorama import init as colorama_init

if (C.USER_PLATFORM == "Windows"):
    # escape ANSI escape sequences on Windows terminal
    colorama_init(autoreset=False, convert=True)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one sub-parser per suite."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        metavar="PATH",
        default=None,
        help="Also write the deterministic JSON report to PATH."
    )
    common.add_argument(
        "--timings",
        action="store_true",
        help="Record the wall time of each check in milliseconds."
    )

    parser = argparse.ArgumentParser(
        prog="weylgap",
        description="Exact verification of Weyl tensor stabilizers, subalgebra censuses and real-form tables."
    )
    parser.add_argument("-V", "--version", action="version", version=f"weylgap v{__version__} ({__license__})")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    report = sub.add_parser(Suite.REPORT.value, parents=[common], help="Riemannian or Lorentzian chain for one n.")
    report.add_argument("case", choices=("riemannian", "lorentzian"))
    report.add_argument("--n", type=int, required=True)

    enumerate_ = sub.add_parser(Suite.ENUMERATE.value, parents=[common],
                                help="Maximal regular reductive subalgebras.")
    enumerate_.add_argument("what", choices=("regular",))
    enumerate_.add_argument("--type", required=True, dest="type_label")
    enumerate_.add_argument("--rank", type=int, default=None)

    levi = sub.add_parser(Suite.LEVI.value, parents=[common], help="Levi factors of maximal parabolics.")
    levi.add_argument("--type", required=True, dest="type_label")
    levi.add_argument("--rank", type=int, default=None)
    levi.add_argument("--cross", type=int, default=None, help="The crossed node; all nodes when omitted.")

    for name, text in ((Suite.IRREP_DIM, "Dimension of an irrep."), (Suite.REP_TYPE, "Self-duality type of an irrep.")):
        irrep = sub.add_parser(name.value, parents=[common], help=text)
        irrep.add_argument("--type", required=True, dest="type_label")
        irrep.add_argument("--rank", type=int, default=None)
        irrep.add_argument("--weight", required=True, help="Comma-separated coefficients r1,...,rL.")

    stabilizer = sub.add_parser(Suite.STABILIZER.value, parents=[common], help="co_stabilizer of a named tensor.")
    stabilizer.add_argument("--tensor", required=True, choices=[k.value for k in TensorKind])
    stabilizer.add_argument("--n", type=int, required=True)
    stabilizer.add_argument("--signature", default=None, metavar="P,Q")

    realforms = sub.add_parser(Suite.REALFORMS.value, parents=[common], help="Real-form table for one rank.")
    realforms.add_argument("--rank", type=int, required=True)

    everything = sub.add_parser(Suite.ALL.value, parents=[common], help="The full acceptance suite.")
    everything.add_argument("--max-n", type=int, default=None, dest="max_n")
    return parser

def _warn_cap(n: int, max_n: int) -> None:
    if (n > max_n):
        print_warning(f"n = {n} is above the configured max_n of {max_n}; expect a long run.", file=sys.stderr)

def collect_checks(args: argparse.Namespace, configs: ConfigSchema) -> list[Check]:
    """Turn the parsed command line into the ordered list of checks.

    Raises:
        WeylGapBaseError:
            If the parameters are invalid.
    """
    command = Suite(args.command)
    if (command == Suite.REPORT):
        _warn_cap(args.n, configs.max_n)
        if (args.case == "riemannian"):
            return riemannian_checks(args.n, configs.max_n, configs.census_cap)
        return lorentzian_checks(args.n, configs.max_n)
    if (command == Suite.ENUMERATE):
        return regular_checks(args.type_label, args.rank)
    if (command == Suite.LEVI):
        return levi_checks(args.type_label, args.rank, args.cross)
    if (command == Suite.IRREP_DIM):
        return irrep_dim_checks(args.type_label, args.rank, parse_int_list(args.weight, "--weight"))
    if (command == Suite.REP_TYPE):
        return rep_type_checks(args.type_label, args.rank, parse_int_list(args.weight, "--weight"))
    if (command == Suite.STABILIZER):
        _warn_cap(args.n, configs.max_n)
        signature = None
        if (args.signature is not None):
            signature = parse_int_list(args.signature, "--signature")
            if (len(signature) != 2):
                raise InvalidParameterError(f"--signature needs two integers p,q, got {args.signature!r}")
        return stabilizer_checks(args.tensor, args.n, signature, configs.max_n)
    if (command == Suite.REALFORMS):
        return real_form_checks(args.rank)

    max_n = args.max_n if (args.max_n is not None) else configs.max_n
    if (max_n < C.MIN_WEYL_N):
        raise InvalidParameterError(f"--max-n must be at least {C.MIN_WEYL_N}, got {max_n}")
    _warn_cap(max_n, configs.max_n)
    return all_checks(max_n, configs.census_cap)

def execute(
    checks: Sequence[Check],
    max_workers: int,
    timings: bool,
    on_done: Optional[Callable[[CheckResult], None]] = None) -> list[CheckResult]:
    """Run the checks, in parallel workers when allowed; results keep the input order.

    on_done is called with each result as soon as it is collected.
    """
    if (max_workers <= 1 or len(checks) <= 1):
        results = (run_check(check, timings) for check in checks)
        return [_collect(result, on_done) for result in results]
    with ProcessPoolExecutor(max_workers=max_workers) as executor:
        results = executor.map(run_check, checks, itertools.repeat(timings))
        return [_collect(result, on_done) for result in results]

def _collect(result: CheckResult, on_done: Optional[Callable[[CheckResult], None]]) -> CheckResult:
    if (on_done is not None):
        on_done(result)
    return result

def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the selected suite and print the report.

    Returns:
        int:
            0 when every check passes, 1 on any failure, 2 on invalid parameters.
    """
    args = build_parser().parse_args(argv)
    configs = load_configs()
    if (not C.DEBUG_MODE):
        logger.setLevel(configs.log_level.value)
    logger.info(f"Running {args.command} with {vars(args)}")

    try:
        checks = collect_checks(args, configs)
    except (WeylGapBaseError) as e:
        print_danger(f"Invalid parameters: {e}", file=sys.stderr)
        logger.info(f"Rejected parameters for {args.command}: {e}")
        return EXIT_USAGE

    with Spinner(
        message=f"Running {len(checks)} checks...",
        colour="light_yellow",
        spinner_type="arc",
        completion_msg=f"Finished {len(checks)} checks.",
        cancelled_msg="Cancelled."
    ) as spinner:
        spinner.track(len(checks))
        results = execute(
            checks, configs.max_workers, args.timings,
            on_done=lambda result: spinner.advance(result.check)
        )

    print(render_table(results, colour=sys.stdout.isatty()))
    if (args.json is not None and write_json(results, args.json) is None):
        print_danger(f"Could not write the JSON report to {args.json}", file=sys.stderr)
        return EXIT_FAIL

    failed = [r for r in results if (not r.passed)]
    if (failed):
        logger.warning(f"{len(failed)} of {len(results)} checks failed")
        return EXIT_FAIL
    return EXIT_PASS

def main() -> None:
    """Main function that will run the program."""
    if (not C.DEBUG_MODE):
        sys.excepthook = exception_handler

    try:
        code = run()
    except (KeyboardInterrupt):
        print_danger("\nProgram terminated by user.", file=sys.stderr)
        code = EXIT_FAIL

    delete_empty_and_old_logs()
    sys.exit(code)

if (__name__ == "__main__"):
    main()
