"""The ``bidisk`` command - classification, K-curves, Julia checks,
iteration and continuation from the shell, with deterministic output."""

import os
import sys
import logging
import argparse
from .base import DEFAULT_SEED, BidiskError, ClassificationError, ParseError
from .core import parse_complex, parse_bidisk_point, parse_boundary_point
from .maps import SelfMap2, swap_args, eval_scalar, VALIDATION_SAMPLES
from .boundary import k_curve, classify_dw, slice_denjoy_wolff, DEFAULT_GRID
from .julia import julia_max_violation, horosphere_invariance_violation
from .julia import wolff_set_structure, JULIA_SAMPLES, INVARIANCE_SAMPLES
from .julia import JULIA_NOISE
from .dynamics import iterate_orbit, continuation_dw, herve_case
from .records import to_record, record_to_string, kcurve_to_csv, orbit_to_csv
from .utilities import map_from_source, save

logger = logging.getLogger(__name__)

USAGE_ERROR = 64
SEED_VARIABLE = "DW_SEED"

class UsageError(Exception):
    """The command line could not be understood."""



class ArgumentParser(argparse.ArgumentParser):
    """An argument parser that reports bad command lines by raising
    :py:class:`.UsageError` rather than exiting, so that :py:func:`.main`
    can choose the exit status."""

    def error(self, message):
        raise UsageError("{}\n{}: error: {}".format(
         self.format_usage().rstrip(), self.prog, message
        ))



def integer(text):
    return int(text, 0)


def build_parser():
    """Creates the parser for every verb.

    :rtype: ``ArgumentParser``"""

    parser = ArgumentParser(
     prog="bidisk", description="Denjoy-Wolff points of bidisk self-maps."
    )
    verbs = parser.add_subparsers(dest="verb", metavar="verb")
    verbs.required = True

    def verb(name, help_text):
        sub = verbs.add_parser(name, help=help_text)
        sub.add_argument("--out", help="file to write (otherwise stdout)")
        sub.add_argument("--seed", type=integer, help="sampling seed")
        sub.add_argument("--samples", type=int, help="number of samples")
        sub.add_argument("-v", "--verbose", action="count", default=0)
        return sub

    def side(sub):
        sub.add_argument("--side", choices=("left", "right"), default="left")

    def pair(sub):
        sub.add_argument("--phi", required=True, help="first component source")
        sub.add_argument("--psi", required=True, help="second component source")

    sub = verb("eval", "evaluate a map at a point of the bidisk")
    sub.add_argument("--map", required=True)
    sub.add_argument("--point", required=True, type=parse_bidisk_point)

    sub = verb("kcurve", "tabulate K(M) at a boundary point")
    sub.add_argument("--map", required=True)
    sub.add_argument("--tau", required=True, type=parse_boundary_point)
    sub.add_argument("--mmin", type=float, default=DEFAULT_GRID[0])
    sub.add_argument("--mmax", type=float, default=DEFAULT_GRID[1])
    sub.add_argument("--n", type=int, default=DEFAULT_GRID[2])
    side(sub)

    sub = verb("classify", "classify a boundary Denjoy-Wolff point")
    sub.add_argument("--map", required=True)
    sub.add_argument("--tau", required=True, type=parse_boundary_point)
    side(sub)

    sub = verb("slice-dw", "find the Denjoy-Wolff point of a slice")
    sub.add_argument("--map", required=True)
    sub.add_argument("--fixed", required=True, type=parse_complex)
    side(sub)

    sub = verb("julia-check", "sample the weighted Julia inequality")
    sub.add_argument("--map", required=True)
    sub.add_argument("--tau", required=True, type=parse_boundary_point)
    sub.add_argument("--M", required=True, type=float)
    sub.add_argument("--alpha", required=True, type=float)

    sub = verb("invariance", "sample weighted horosphere invariance")
    pair(sub)
    sub.add_argument("--tau", required=True, type=parse_boundary_point)
    sub.add_argument("--K", required=True, type=float)

    sub = verb("iterate", "iterate a self-map and tabulate the orbit")
    pair(sub)
    sub.add_argument("--start", required=True, type=parse_bidisk_point)
    sub.add_argument("--n", required=True, type=int)
    sub.add_argument("--tau", required=True, type=parse_boundary_point)
    sub.add_argument("--K", type=float, default=1.0)

    sub = verb("find-dw", "locate the Denjoy-Wolff point by continuation")
    pair(sub)
    sub.add_argument("--kmax", type=int, default=20)

    sub = verb("wolff-set", "work out the shape of the Wolff set")
    pair(sub)
    sub.add_argument("--tau", required=True, type=parse_boundary_point)

    sub = verb("herve-case", "predict the behaviour of the iterates")
    pair(sub)
    sub.add_argument("--tau", required=True, type=parse_boundary_point)
    return parser


def resolve_seed(seed):
    """Works out the sampling seed - the ``--seed`` value if there is one,
    then the ``DW_SEED`` environment variable, then the default.

    :param int seed: the value given on the command line, or ``None``.
    :raises ParseError: if the environment variable is not an integer.
    :rtype: ``int``"""

    if seed is not None: return seed
    if os.environ.get(SEED_VARIABLE):
        try:
            return int(os.environ[SEED_VARIABLE], 0)
        except ValueError:
            raise ParseError("{} must be an integer".format(SEED_VARIABLE))
    return DEFAULT_SEED


def run(args):
    """Carries out a parsed command and returns the text it produces.

    :param argparse.Namespace args: the parsed command line.
    :rtype: ``str``"""

    seed = resolve_seed(args.seed)
    samples = args.samples
    load = lambda source: map_from_source(
     source, samples=samples or VALIDATION_SAMPLES, seed=seed
    )
    if args.verb in ("eval", "kcurve", "classify", "slice-dw", "julia-check"):
        m = load(args.map)
    else:
        F = SelfMap2(load(args.phi), load(args.psi))
    if args.verb == "eval":
        return record_to_string({"value": eval_scalar(m, args.point)})
    if args.verb == "kcurve":
        tau = args.tau
        if args.side == "right": m, tau = swap_args(m), tau.swapped()
        return kcurve_to_csv(k_curve(m, tau, args.mmin, args.mmax, args.n))
    if args.verb == "classify":
        return record_to_string(to_record(classify_dw(m, args.tau, args.side)))
    if args.verb == "slice-dw":
        found = slice_denjoy_wolff(m, args.side, args.fixed)
        return record_to_string(to_record(found))
    if args.verb == "julia-check":
        report = julia_max_violation(
         m, args.tau, args.M, args.alpha, samples or JULIA_SAMPLES, seed
        )
        return record_to_string(to_record(report))
    if args.verb == "invariance":
        violation = horosphere_invariance_violation(
         F, args.tau, args.K, samples or INVARIANCE_SAMPLES, seed
        )
        return record_to_string({
         "K": args.K, "max_violation": violation,
         "invariant": violation <= JULIA_NOISE
        })
    if args.verb == "iterate":
        orbit = iterate_orbit(F, args.start, args.n, args.tau, args.K)
        return orbit_to_csv(orbit)
    if args.verb == "find-dw":
        return record_to_string(to_record(continuation_dw(F, args.kmax)))
    if args.verb == "wolff-set":
        report = wolff_set_structure(
         F, args.tau, samples or INVARIANCE_SAMPLES, seed
        )
        return record_to_string(to_record(report))
    return record_to_string(to_record(herve_case(F, args.tau)))


def main(argv=None):
    """Runs the ``bidisk`` command.

    Exits with 0 on success, 2 when a point is ambiguous or a self-map cannot
    be classified, 1 on any other error and 64 when the command line itself is
    wrong.

    :param list argv: the arguments, defaulting to ``sys.argv[1:]``.
    :rtype: ``int``"""

    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return USAGE_ERROR
    logging.basicConfig(
     level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
     format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        text = run(args)
    except ClassificationError as e:
        print("{}: {}".format(type(e).__name__, e), file=sys.stderr)
        return 2
    except (BidiskError, ValueError, OSError) as e:
        print("{}: {}".format(type(e).__name__, e), file=sys.stderr)
        return 1
    if not text.endswith("\n"): text += "\n"
    if args.out:
        save(text, args.out)
        logger.info("Wrote %s", args.out)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
