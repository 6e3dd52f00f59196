"""
Global Group Laws: Element Parsing Module

Turns user strings such as "t1^2*t2^-1 - 3" or "2*e1 - e2" into
`LaurentPoly` values through sympy's expression parser.
"""

# Standard library imports
import logging
from typing import Sequence

# Third-party library imports
from sympy import Add, Integer, Rational, Symbol, expand
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

# Local application/library specific imports
from ..exceptions import GroupSyntaxError
from ._laurent import LaurentPoly
from ._rings import CoefficientRing

logger = logging.getLogger(__name__)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_element(text: str, ring: CoefficientRing, names: Sequence[str]) -> LaurentPoly:
    """Parse `text` as a Laurent polynomial in the variables `names`.

    Raises
    ------
    GroupSyntaxError
        On unknown symbols, non-integral exponents or unparsable input.
    """
    symbols = {name: Symbol(name) for name in names}
    try:
        expr = parse_expr(text, local_dict=dict(symbols), transformations=_TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TypeError, ValueError) as err:
        raise GroupSyntaxError(f"kernel:parse_element:cannot parse '{text}'") from err
    unknown = sorted(str(s) for s in expr.free_symbols if str(s) not in symbols)
    if unknown:
        raise GroupSyntaxError(
            f"kernel:parse_element:unknown symbols {unknown} in '{text}' (expected {list(names)})")
    index = {symbols[name]: i for i, name in enumerate(names)}
    terms = {}
    for term in Add.make_args(expand(expr)):
        coef, rest = term.as_coeff_Mul()
        exp = [0] * len(names)
        for base, power in rest.as_powers_dict().items():
            if base == 1 or base == Integer(1):
                continue
            if base not in index or not power.is_integer:
                raise GroupSyntaxError(f"kernel:parse_element:'{term}' is not a Laurent monomial")
            exp[index[base]] += int(power)
        if not isinstance(coef, (Integer, Rational)):
            raise GroupSyntaxError(f"kernel:parse_element:coefficient {coef} is not rational")
        key = tuple(exp)
        terms[key] = terms.get(key, Integer(0)) + coef
    logger.debug(f"kernel:parse_element:parsed '{text}' into {len(terms)} terms")
    return LaurentPoly(ring, len(names), terms)
