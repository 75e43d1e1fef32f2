from dataclasses import dataclass
from typing import Optional

from src.core.enums import GraphFamily
from src.core.exceptions import InputError, UnsupportedOperationError
from src.codes.code import Code, code_distance
from src.graph.graph import GraphSpec
from src.spectra.exact import ScaledRational
from src.spectra.matrix import QuotientMatrix


@dataclass(frozen=True)
class CodeParameters:
    """Length and forced cardinality of a family of codes.

    ``length`` is n for Hamming graphs and 2m+n for Doob graphs.
    """

    family: GraphFamily
    q: int
    l: int
    length: int
    cardinality: ScaledRational

    def graph(self) -> GraphSpec:
        """A representative graph: H(n,q), or D(length/2, 0) for Doob."""
        if self.family == GraphFamily.hamming:
            return GraphSpec.hamming(self.length, self.q)
        return GraphSpec.doob(self.length // 2, self.length % 2)


def _check_arguments(family: GraphFamily, l: int, q: Optional[int]) -> int:
    if l < 1:
        raise InputError(f"l must be positive, got {l}")
    if family == GraphFamily.doob:
        if q not in (None, 4):
            raise InputError(f"Doob graphs are over Z_4, got q={q}")
        return 4
    if q is None or q < 2:
        raise InputError(f"Hamming parameters need q >= 2, got {q}")
    return q


def admissible_extended_params(family: GraphFamily, l: int, q: Optional[int] = None) -> Optional[CodeParameters]:
    """Parameters of an extended 1-perfect code with index l, or None.

    Hamming: n = (q^l + q - 2)/(q - 1) and |C| = q^(n-l-1).
    Doob: 2m + n = (4^l + 2)/3 and |C| = 4^(2m+n-l-1).
    """
    q = _check_arguments(family, l, q)
    if family == GraphFamily.doob:
        length = (4**l + 2) // 3
    else:
        length, remainder = divmod(q**l + q - 2, q - 1)
        if remainder:
            return None
    return CodeParameters(family, q, l, length, ScaledRational.power(q, length - l - 1))


def admissible_perfect_params(family: GraphFamily, l: int, q: Optional[int] = None) -> CodeParameters:
    """Parameters of a 1-perfect code: n = (q^l - 1)/(q - 1), |C| = q^(n-l)."""
    q = _check_arguments(family, l, q)
    length = (q**l - 1) // (q - 1)
    return CodeParameters(family, q, l, length, ScaledRational.power(q, length - l))


def extended_perfect_matrix(g: GraphSpec) -> QuotientMatrix:
    """Quotient matrix of the distance coloring of an extended 1-perfect code in ``g``."""
    if g.is_doob:
        degree, length = 6 * g.m + 3 * g.n, 2 * g.m + g.n
        return QuotientMatrix.from_rows(
            [[0, degree, 0], [1, 2, degree - 3], [0, length, 2 * length]]
        )
    n, q = g.n, g.q
    return QuotientMatrix.from_rows(
        [[0, n * (q - 1), 0], [1, q - 2, (n - 1) * (q - 1)], [0, n, n * (q - 2)]]
    )


def is_mds(C: Code, d: Optional[int] = None) -> bool:
    """Whether |C| meets the Singleton bound q^(n-d+1)."""
    g = C.graph
    if g.is_doob:
        raise UnsupportedOperationError("The Singleton bound is only checked in Hamming graphs")
    if d is None:
        d = code_distance(C)
    if d == float("inf"):
        d = g.n + 1
    exponent = g.n - d + 1
    return exponent >= 0 and len(C) == g.q**exponent
