"""
Global Group Laws: Single Verb Workers

One worker per command-line verb. A worker receives the law named on the
command line (None for verbs that do not take one), the parsed argument
namespace and the resolved ComputeOptions, calls the operations module
and returns a VerbResult holding the text output, a JSON payload and
whether the check it ran passed.

Supported Verbs:
----------------
euler, psi, exact-check, regular-check, decompose, flag-expand, fgl,
nseries, gamma, change-coord, fixed-points, kan, lazard-relations,
classify.
"""

# Standard library imports
import logging
from dataclasses import dataclass, field
from typing import List, Optional

# Third-party library imports
import numpy as np

# Local application/library specific imports
from .. import calculus
from ..completion import Flag, completion_series, default_flag
from ..exceptions import DimensionMismatch, GroupSyntaxError
from ..groups import (
    Character,
    Family,
    GroupKind,
    GroupSpec,
    enumerate_characters,
    parse_character,
    parse_characters,
    parse_group,
)
from ..helpers import ComputeOptions, gather_verdicts, summarize_reports
from ..kernel import CoefficientRing
from ..laws import GlobalLaw, LawElement
from ..lazard import PLAIN, TWO_TORSION

logger = logging.getLogger(__name__)

# entries of random independent pairs for regular-check --random
_RANDOM_SPREAD = 4


@dataclass
class VerbResult:
    text: str
    payload: dict = field(default_factory=dict)
    ok: bool = True


# region argument helpers
def _group(law: Optional[GlobalLaw], args, default: str) -> GroupSpec:
    text = args.group or default
    if law is None:
        return parse_group(text)
    group = parse_group(text, law.family)
    law.check_family(group)
    return group


def _required(args, name: str, flag: str):
    value = getattr(args, name, None)
    if value is None:
        raise GroupSyntaxError(f"bin:{args.verb}:{flag} is required")
    return value


def _element(law: GlobalLaw, group: GroupSpec, args, default: Optional[str] = None) -> LawElement:
    text = args.element if args.element is not None else default
    if text is None:
        raise GroupSyntaxError(f"bin:{args.verb}:--element is required")
    return law.element(group, text)


def _report_lines(reports) -> List[str]:
    lines = []
    for report in reports:
        chars = '; '.join(','.join(str(v) for v in V) for V in report.chars)
        lines.append(f"[{chars}] {report.verdict} ({report.scope})")
        if report.witness is not None:
            lines.append(f"  witness: {report.witness}")
            lines.append(f"  {report.reason}")
    return lines
# endregion


# region Euler classes and regularity
def euler_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    group = _group(law, args, 'T')
    V = parse_character(_required(args, 'char', '--char'), group)
    e = calculus.euler_class(law, group, V)
    return VerbResult(str(e), {'law': law.law_id, 'group': group.label, 'char': list(V.entries), 'euler': str(e)})


def psi_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    n = args.value if args.value is not None else _required(args, 'n', '--n')
    value = calculus.psi(law, int(n))
    product = calculus.check_euler_product(law, int(n))
    text = str(value) if product else f"{value}\nEuler product check failed for n = {n}"
    return VerbResult(text, {'law': law.law_id, 'n': int(n), 'psi': str(value), 'euler_product': product}, product)


def exact_check_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    group = _group(law, args, 'T')
    if args.all_split:
        chars = list(enumerate_characters(group, bound=args.entry_bound, split_only=True))
    elif args.chars:
        chars = parse_characters(args.chars, group)
    else:
        chars = parse_character(_required(args, 'char', '--char'), group)
    result = calculus.check_exactness(law, group, chars, options.bound, options.jobs)
    reports = result if isinstance(result, list) else [result]
    summary = summarize_reports(reports)
    lines = _report_lines(reports)
    if len(reports) > 1:
        lines.append(f"{summary['passed']}/{summary['checks']} pass, {summary['certified']} certified")
    ok = bool(np.all(gather_verdicts(reports)))
    return VerbResult('\n'.join(lines), {'reports': reports, 'summary': summary}, ok)


def _random_pairs(rank: int, count: int, seed: int = 0) -> List[List[Character]]:
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < count:
        rows = [[int(v) for v in rng.integers(-_RANDOM_SPREAD, _RANDOM_SPREAD + 1, size=rank)] for _ in range(2)]
        matrix = np.array(rows, dtype=object)
        # independent iff some 2x2 minor is nonzero
        minors = [matrix[0, i] * matrix[1, j] - matrix[0, j] * matrix[1, i]
                  for i in range(rank) for j in range(i + 1, rank)]
        if any(minors):
            pairs.append([Character(tuple(row)) for row in rows])
    return pairs


def regular_check_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    if args.random is not None:
        group = _group(law, args, 'T^2')
        if group.rank < 2:
            raise DimensionMismatch(f"bin:regular-check:random pairs need rank at least 2, got {group}")
        pairs = _random_pairs(group.rank, args.random)
        reports = calculus.check_exactness(law, group, pairs, options.bound, options.jobs)
    else:
        text = _required(args, 'chars', '--chars')
        if args.group:
            group = _group(law, args, 'T')
        else:
            rank = len(text.split(';')[0].split(','))
            group = parse_group(f"C2^{rank}" if law.family is Family.ELEM2 else f"T^{rank}", law.family)
        chars = parse_characters(text, group)
        reports = [calculus.check_k_regular(law, chars, options.bound, group)]
    ok = bool(np.all(gather_verdicts(reports)))
    return VerbResult('\n'.join(_report_lines(reports)), {'reports': reports, 'summary': summarize_reports(reports)}, ok)


def decompose_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    group = _group(law, args, 'T^2')
    V = parse_character(_required(args, 'char', '--char'), group)
    x = _element(law, group, args)
    n = args.n if args.n is not None else 3
    decomposition = calculus.split_decompose(law, group, V, x, n)
    round_trip = decomposition.reassemble() == x
    lines = [f"x{i} = {c}" for i, c in enumerate(decomposition.coefficients)]
    lines.append(f"remainder = {decomposition.remainder}")
    if not round_trip:
        lines.append("reassembly does not reproduce the element")
    payload = decomposition.to_json_dict()
    payload['round_trip'] = round_trip
    return VerbResult('\n'.join(lines), payload, round_trip)
# endregion


# region Completion
def _flag(group: GroupSpec, args, options: ComputeOptions) -> Flag:
    if args.flag:
        return Flag.of(group, parse_characters(args.flag, group))
    return default_flag(group, options.depth)


def flag_expand_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    group = _group(law, args, '1')
    x = _element(law, group.times_circle(), args)
    expansion = calculus.flag_expand(law, group, _flag(group, args, options), x)
    lines = [f"a{i} = {c}" for i, c in enumerate(expansion.coeffs)]
    return VerbResult('\n'.join(lines), expansion.to_json_dict())


def fgl_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    group = _group(law, args, '1')
    flag = Flag.of(group, parse_characters(args.flag, group)) if args.flag else None
    completed = calculus.completed_fgl(law, group, options.depth, flag)
    if group.is_trivial():
        fgl = completed.to_fgl()
        return VerbResult(f"F(x, y) = {fgl}", fgl.to_json_dict())
    payload = completed.to_json_dict()
    lines = [f"ground: {payload['ground']}"]
    lines += [f"c{t['i']}{t['j']} = {t['coef']}" for t in payload['coproduct']]
    return VerbResult('\n'.join(lines), payload)


def nseries_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    n = args.value if args.value is not None else _required(args, 'n', '--n')
    fgl = calculus.classify(law, options.depth)
    series = calculus.n_series(fgl, int(n))
    return VerbResult(series.to_string(), {'law': law.law_id, 'n': int(n), 'series': series.to_json_dict()})


def gamma_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    group = _group(law, args, 'T')
    V = parse_character(_required(args, 'char', '--char'), group)
    gammas = calculus.gamma_coefficients(law, group, V, options.depth)
    lines = [f"gamma{i} = {g}" for i, g in enumerate(gammas)]
    return VerbResult('\n'.join(lines), {'char': list(V.entries), 'gamma': [str(g) for g in gammas]})


def change_coord_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    lam = law.element(law.circle(), _required(args, 'lam', '--lambda'))
    changed = calculus.change_coordinate(law, lam, True, options.depth)
    lam_series = completion_series(law, lam, options.depth + 1)
    fgl = calculus.classify(law, options.depth)
    # the conjugated law must be the law of the changed coordinate
    iso = calculus.strict_iso(fgl, lam_series, calculus.classify(changed, options.depth))
    lines = [f"phi(x) = {iso.phi.to_string(('x',))}", f"F'(x, y) = {iso.conjugate}"]
    return VerbResult('\n'.join(lines), {'law': changed.law_id, 'iso': iso})
# endregion


# region Fixed points and Kan extension
def _cyclic_order(group: GroupSpec) -> int:
    if group.kind is GroupKind.QUOTIENT and group.rank == 1 and len(group.kernel_chars) == 1:
        return abs(group.kernel_chars[0].entries[0])
    raise GroupSyntaxError(f"bin:fixed-points:{group} is not a cyclic group C<n>")


def fixed_points_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    n = _cyclic_order(_group(law, args, 'C2'))
    presentation = calculus.cyclic_fixed_points_mult(n, law.ring)
    kernel = calculus.psi_kernel_check(law, n, options.bound)
    lines = [presentation.describe()]
    lines.append('inverted images: ' + ', '.join(u.to_string(('t',)) for u in presentation.inverted_images()))
    lines.append(f"psi kernel check: {'pass' if kernel else 'fail'}")
    payload = presentation.to_json_dict()
    payload['psi_kernel_check'] = kernel
    return VerbResult('\n'.join(lines), payload, kernel)


def kan_verb(law: GlobalLaw, args, options: ComputeOptions) -> VerbResult:
    group = _group(law, args, 'C2')
    value = calculus.kan_value(law, group)
    lines = [value.describe()]
    payload = {'law': law.law_id, 'group': group.label, 'value': value.describe()}
    if args.element is not None:
        x = law.element(group, args.element)
        lines.append(f"normal form: {x}")
        payload['normal_form'] = str(x)
    return VerbResult('\n'.join(lines), payload)
# endregion


# region Lazard desk
def lazard_relations_verb(law: Optional[GlobalLaw], args, options: ComputeOptions) -> VerbResult:
    mode = TWO_TORSION if args.two_torsion else PLAIN
    system = calculus.universal_relations(options.degree, mode)
    ranks = calculus.indecomposable_ranks(system)
    lattice = calculus.smith_invariants(system)
    field_label = 'F2' if system.two_torsion else 'Q'
    lines = []
    for grading, relations in system.by_grading().items():
        lines.append(f"grading {grading}: {len(relations)} relations")
        lines += [f"  {r}" for r in relations]
    lines.append(f"indecomposable ranks over {field_label}: "
                 + ', '.join(f"{g}:{r}" for g, r in sorted(ranks.items())))
    payload = system.to_json_dict()
    payload['ranks'] = {str(g): r for g, r in sorted(ranks.items())}
    payload['lattice'] = lattice
    return VerbResult('\n'.join(lines), payload)


def classify_verb(law: Optional[GlobalLaw], args, options: ComputeOptions) -> VerbResult:
    if args.random is not None:
        ring = CoefficientRing.parse(args.ring or 'Q')
        planted = calculus.random_fgl(ring, options.degree, np.random.default_rng(args.random))
        law = calculus.from_fgl(planted)
        fgl = calculus.classify(law, options.degree)
        ok = fgl == planted
        lines = [f"planted: {planted}", f"classified: {fgl}"]
        if not ok:
            lines.append("classification does not recover the planted law")
        return VerbResult('\n'.join(lines), {'planted': planted, 'classified': fgl, 'round_trip': ok}, ok)
    fgl = calculus.classify(law, options.depth)
    lines = [f"F(x, y) = {fgl}"]
    lines += [f"a{i}{j} = {fgl.ring.to_string(c)}" for i, j, c in fgl.sorted_coefficients()]
    return VerbResult('\n'.join(lines), fgl.to_json_dict())
# endregion
