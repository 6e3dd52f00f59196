"""
Global Group Laws: Command Line Module

Entry point of the `ggl` console script. Parses the verb and its flags,
configures logging, runs the verb and maps the outcome to an exit code:

    0  success
    1  usage error, unreadable input or any library error
    2  a check failed (fail verdict, fixture mismatch, psi kernel
       mismatch, invalid formal group law)

Text output goes to stdout and is deterministic; logging and error
messages go to stderr.
"""

# Standard library imports
import argparse
import logging
import sys
from typing import List, Optional

# Local application/library specific imports
from .bin import VERBS, run_verb
from .exceptions import GGLError, InvalidFGL
from .helpers import compare_fixture, construct
from .laws import LAW_NAMES
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2

_EPILOG = """\
notation:
  torus variables are t (rank 1) or t1..tr; the additive law writes its
  Euler basis e or e1..er; series variables are x, y, z.
  groups: 1, T, T^r, C2^r, C<n>, 'T^r / [V1; V2]'; characters: '2,-3';
  character lists: '2,0;0,2'.
environment:
  GGL_TRUNCATION, GGL_DEPTH, GGL_DEGREE, GGL_BOUND, GGL_JOBS override
  the defaults of the matching flags.
"""

_HELP = {
    'euler': 'Euler class e_V at a group',
    'psi': 'the element psi_n of X(T)',
    'exact-check': 'check the exact sequence at (A, V)',
    'regular-check': 'check that a tuple of Euler classes is a regular sequence',
    'decompose': 'split decomposition of an element along a split character',
    'flag-expand': 'coefficients of an element of X(A x T) along a flag',
    'fgl': 'the completed formal group law at a group',
    'nseries': 'the n-series [n]_F of the classified law',
    'gamma': 'gamma coefficients of y(eps) in powers of y(V)',
    'change-coord': 'strict coordinate change by a unit lambda of X(T)',
    'fixed-points': 'geometric fixed points of the multiplicative law at C<n>',
    'kan': 'value of the Kan extension at a quotient presentation',
    'lazard-relations': 'relations of the truncated universal formal group law',
    'classify': 'formal group law classifying a global law',
}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--law', default='mult', help=f"one of {', '.join(LAW_NAMES)} (default mult)")
    common.add_argument('--ring', help='coefficient ring: Z, Q or F<p> (default Z)')
    common.add_argument('--group', help='group string, e.g. T^2, C2^3, C5, "T^2 / [2,0]"')
    common.add_argument('--char', help='character, e.g. 2,-3')
    common.add_argument('--chars', help='character list, e.g. "2,0;0,2"')
    common.add_argument('--flag', help='flag characters, e.g. "0;1;-1"')
    common.add_argument('--element', help="element string, e.g. 't1^2 - t2^-1'")
    common.add_argument('--depth', type=int, help='flag depth (default 6)')
    common.add_argument('--degree', type=int, help='degree bound of the Lazard desk (default 6)')
    common.add_argument('--truncation', type=int, help='series truncation for fgl:<file> laws (default 8)')
    common.add_argument('--bound', type=int, help='monomial search bound (default 3)')
    common.add_argument('--jobs', type=int, help='worker threads for sweeps (default 1)')
    common.add_argument('--n', type=int, help='count or index where a verb needs one')
    common.add_argument('--lambda', dest='lam', help='unit of X(T) for change-coord')
    common.add_argument('--two-torsion', action='store_true', help='2-torsion mode of lazard-relations')
    common.add_argument('--random', type=int, metavar='K',
                        help='classify: seed of a random planted law; regular-check: number of random pairs')
    common.add_argument('--all-split', action='store_true', help='exact-check every split character')
    common.add_argument('--entry-bound', type=int, default=3, help='entry range of --all-split (default 3)')
    common.add_argument('--json', action='store_true', help='canonical JSON output')
    common.add_argument('--fixture', help='compare output with a stored file')
    common.add_argument('--verbose', action='store_true', help='debug logging on stderr')
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='ggl',
        description='Exact computations with global group laws.',
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--version', action='version', version=f"ggl {__version__}")
    verbs = parser.add_subparsers(dest='verb', metavar='verb')
    verbs.required = True
    common = _common_parser()
    for verb in VERBS:
        sub = verbs.add_parser(verb, parents=[common], help=_HELP[verb], epilog=_EPILOG,
                               formatter_class=argparse.RawDescriptionHelpFormatter)
        if verb in ('psi', 'nseries'):
            sub.add_argument('value', nargs='?', type=int, help='n')
        else:
            sub.set_defaults(value=None)
    return parser


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(name)s:%(funcName)s:%(message)s',
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run `ggl` with the given arguments and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        # argparse exits 2 on usage errors, 0 for --help and --version
        return EXIT_OK if not exit_request.code else EXIT_ERROR
    _configure_logging(args.verbose)

    try:
        result = run_verb(args)
    except InvalidFGL as err:
        sys.stderr.write(f"ggl {args.verb}: {err}\n")
        return EXIT_CHECK_FAILED
    except (GGLError, ValueError) as err:
        sys.stderr.write(f"ggl {args.verb}: {err}\n")
        return EXIT_ERROR

    if args.json:
        text = construct(verb=args.verb, ok=result.ok, result=result.payload)
    else:
        text = result.text + '\n'
    sys.stdout.write(text)

    if args.fixture:
        try:
            diff = compare_fixture(text, args.fixture)
        except FileNotFoundError as err:
            sys.stderr.write(f"ggl {args.verb}: {err}\n")
            return EXIT_ERROR
        if diff:
            sys.stderr.writelines(diff)
            return EXIT_CHECK_FAILED
    return EXIT_OK if result.ok else EXIT_CHECK_FAILED


def run(argv: Optional[List[str]] = None) -> int:
    return main(argv)


if __name__ == '__main__':
    sys.exit(main())
