import argparse
import logging
import sys

from .. import __version__
from ..exceptions import UncorrectableSyndromeError
from .commands import cmd_oracle, cmd_run, cmd_shor, cmd_sweep
from .config import (
    CHEAT_CHOICES,
    DEFAULT_CHEAT,
    DEFAULT_FORMAT,
    DEFAULT_SECRET,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    FORMATS,
    SWEEP_PARTIES,
    RunConfig,
    check_format,
    check_seed,
    parse_cheat,
    parse_error,
    parse_polar,
    parse_secret,
    sweep_angles,
)
from .report import write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_UNCORRECTABLE = 4

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    secret = common.add_mutually_exclusive_group()
    secret.add_argument("--secret", default=None, metavar="RE,IM,RE,IM",
                        help=f"alpha and beta as four reals (default {DEFAULT_SECRET})")
    secret.add_argument("--secret-polar", default=None, metavar="THETA,PHI",
                        help="Bloch angles in radians")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", default=DEFAULT_FORMAT, choices=FORMATS)
    common.add_argument("--out", default=None, metavar="PATH", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="resqss",
        description="Simulate and verify the resilient three-party quantum secret sharing protocol.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--progress", action="store_true", help="show progress bars")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run = subparsers.add_parser("run", parents=[common], help="seeded protocol runs against the exact distribution")
    run.add_argument("--cheat", default=DEFAULT_CHEAT, choices=CHEAT_CHOICES)
    run.add_argument("--cheat-basis-angle", type=float, default=None, metavar="DEG")
    run.add_argument("--bob-angle", type=float, default=None, metavar="DEG")
    run.add_argument("--charlie-angle", type=float, default=None, metavar="DEG")
    run.add_argument("--trials", type=int, default=DEFAULT_TRIALS)

    oracle = subparsers.add_parser("oracle", parents=[common], help="circuit states against the closed forms")
    oracle.add_argument("--basis-angle", type=float, default=None, metavar="DEG",
                        help="Bob's basis for the arbitrary-basis branch (default 45)")

    sweep = subparsers.add_parser("sweep", parents=[common], help="ancilla statistics over measurement bases")
    sweep.add_argument("--who", default="bob", choices=SWEEP_PARTIES)
    sweep.add_argument("--start", type=float, default=0.0)
    sweep.add_argument("--stop", type=float, default=90.0)
    sweep.add_argument("--step", type=float, default=15.0)
    sweep.add_argument("--trials", type=int, default=0, help="0 reports the exact expected fidelity")

    shor = subparsers.add_parser("shor", parents=[common], help="nine-qubit code error recovery")
    shor.add_argument("--error", default="none", metavar="SPEC",
                      help="X:q, Y:q, Z:q, measure:q:t, exhaustive or none")
    shor.add_argument("--random-unitaries", type=int, default=0, metavar="N")
    return parser


def _secret(args):
    if args.secret_polar is not None:
        return parse_polar(args.secret_polar)
    return parse_secret(args.secret if args.secret is not None else DEFAULT_SECRET)


def _prepare(args):
    """Turn parsed arguments into a callable producing the report; raises ValueError on bad values."""
    check_seed(args.seed)
    check_format(args.format)
    secret = _secret(args)
    if args.command == "run":
        cheat = parse_cheat(args.cheat, args.cheat_basis_angle, args.bob_angle, args.charlie_angle)
        config = RunConfig(secret, cheat, args.trials, args.seed, args.format, args.out, args.progress)
        return lambda: cmd_run(config)
    if args.command == "oracle":
        return lambda: cmd_oracle(secret, args.basis_angle)
    if args.command == "sweep":
        if args.trials < 0:
            raise ValueError(f"`--trials` must not be negative. Received {args.trials!r} instead.")
        angles = sweep_angles(args.start, args.stop, args.step)
        return lambda: cmd_sweep(secret, angles, args.who, args.trials, args.seed, args.progress)
    if args.random_unitaries < 0:
        raise ValueError(f"`--random-unitaries` must not be negative. Received {args.random_unitaries!r} instead.")
    error = parse_error(args.error, args.seed)
    return lambda: cmd_shor(secret, error, args.seed, args.random_unitaries, args.progress)


def main(argv=None):
    """
    Entry point of the ``resqss`` command.

    Returns
    -------
    int
        0 on success, 2 for invalid flags or values, 3 when the report
        cannot be written, 4 for an uncorrectable syndrome, 1 otherwise.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )

    try:
        produce = _prepare(args)
    except ValueError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE

    try:
        report = produce()
        write_report(report.render(args.format), args.out)
    except UncorrectableSyndromeError as exc:
        logger.error("%s", exc)
        return EXIT_UNCORRECTABLE
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_IO
    except (ValueError, RuntimeError) as exc:
        logger.error("%s", exc)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
