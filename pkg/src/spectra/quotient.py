from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Mapping, Optional, Tuple, Union

import networkx as nx
import numpy as np
from sympy import ZZ, Poly, QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from src.core.exceptions import ConsistencyError, UnderdeterminedError
from src.graph.graph import (
    GraphSpec,
    Vertex,
    enumerate_vertices,
    is_graph_eigenvalue,
    iter_index_blocks,
    neighbor_indices,
    neighbors,
)
from src.spectra.exact import ScaledRational
from src.spectra.matrix import QuotientMatrix

if TYPE_CHECKING:
    from src.codes.code import Coloring

x = Symbol("x")


@dataclass(frozen=True)
class SpectrumInfo:
    """Distinct eigenvalues of S, largest first, with multiplicities."""

    eigenvalues: Tuple[int, ...]
    multiplicities: Tuple[int, ...]

    @property
    def principal(self) -> int:
        return self.eigenvalues[0]

    @property
    def nontrivial(self) -> Tuple[int, ...]:
        return self.eigenvalues[1:]


@dataclass(frozen=True)
class Lemma2Violation:
    """S has an eigenvalue that is not an eigenvalue of the graph.

    ``residue`` lists the factors of the characteristic polynomial whose roots
    are not graph eigenvalues.
    """

    polynomial: Tuple[int, ...]
    residue: Tuple[str, ...]
    eigenvalues: Tuple[int, ...] = ()
    multiplicities: Tuple[int, ...] = ()

    @property
    def witness(self) -> str:
        return "; ".join(self.residue)


@dataclass(frozen=True)
class ClassSizes:
    """Colour class sizes, stored as densities |f^-1(i)| / |V(G)|."""

    densities: Tuple[Fraction, ...]
    volume: ScaledRational

    @property
    def sizes(self) -> Tuple[ScaledRational, ...]:
        return tuple(self.volume.scale(density) for density in self.densities)

    def as_ints(self) -> Tuple[int, ...]:
        return tuple(size.to_int() for size in self.sizes)


@dataclass(frozen=True)
class Infeasible:
    """A necessary condition on the class sizes fails."""

    reason: str
    witness: str
    color: Optional[int] = None
    densities: Tuple[Fraction, ...] = field(default=())


def characteristic_polynomial(S: QuotientMatrix) -> list[int]:
    """Integer coefficients of det(xI - S), leading coefficient first."""
    return [int(c) for c in S.to_domain_matrix().charpoly()]


def quotient_eigenvalues(S: QuotientMatrix, g: GraphSpec) -> Union[SpectrumInfo, Lemma2Violation]:
    """Eigenvalues of S, screened against the spectrum of ``g``.

    The characteristic polynomial is factored over Z. Every linear factor whose
    root is a graph eigenvalue contributes an eigenvalue; any other factor is
    the residue that rules the coloring out.
    """
    S.check_row_sums(g.degree)
    coefficients = characteristic_polynomial(S)
    _, factors = Poly(coefficients, x, domain=ZZ).factor_list()

    roots: dict[int, int] = {}
    residue = []
    for factor, multiplicity in factors:
        if factor.degree() == 1:
            lead, constant = factor.all_coeffs()
            root = Fraction(-int(constant), int(lead))
            if root.denominator == 1 and is_graph_eigenvalue(g, root.numerator):
                roots[root.numerator] = roots.get(root.numerator, 0) + multiplicity
                continue
        residue.append(f"({factor.as_expr()})^{multiplicity}" if multiplicity > 1 else str(factor.as_expr()))

    eigenvalues = tuple(sorted(roots, reverse=True))
    multiplicities = tuple(roots[value] for value in eigenvalues)
    if residue:
        return Lemma2Violation(tuple(coefficients), tuple(residue), eigenvalues, multiplicities)
    return SpectrumInfo(eigenvalues, multiplicities)


def support_graph(S: QuotientMatrix) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(S.k))
    graph.add_edges_from((i, j) for i in range(S.k) for j in range(S.k) if S[i, j] > 0)
    return graph


def class_sizes(S: QuotientMatrix, g: GraphSpec) -> Union[ClassSizes, Infeasible]:
    """Colour class sizes forced by S on ``g``.

    Solves the left eigenvector relations x S = d x exactly over Q, checks
    s_ij x_i = s_ji x_j and normalises the solution to densities.

    Raises:
        InputError: the rows of S do not sum to the degree of ``g``.
        UnderdeterminedError: the support of S is not strongly connected.
    """
    S.check_row_sums(g.degree)
    if not nx.is_strongly_connected(support_graph(S)):
        raise UnderdeterminedError(
            f"The support of {S} is not strongly connected, class sizes are not determined"
        )

    shifted = DomainMatrix.from_list(
        [[S[j, i] - (g.degree if i == j else 0) for j in range(S.k)] for i in range(S.k)],
        QQ,
    )
    basis = shifted.nullspace().to_list()
    if len(basis) != 1:
        raise UnderdeterminedError(f"Left eigenspace of {S} at {g.degree} has dimension {len(basis)}")

    vector = [Fraction(int(e.numerator), int(e.denominator)) for e in basis[0]]
    total = sum(vector)
    densities = tuple(value / total for value in vector)

    for i in range(S.k):
        for j in range(i + 1, S.k):
            if S[i, j] * densities[i] != S[j, i] * densities[j]:
                return Infeasible(
                    reason="edge counts between colour classes do not balance",
                    witness=f"s_{i}{j}*x_{i} = {S[i, j] * densities[i]} != s_{j}{i}*x_{j} = {S[j, i] * densities[j]}",
                    densities=densities,
                )

    for i, density in enumerate(densities):
        size = g.volume.scale(density)
        if density <= 0:
            return Infeasible("class size is not positive", str(size), color=i, densities=densities)
        if not size.is_integer():
            return Infeasible("class size is not an integer", str(size), color=i, densities=densities)
    return ClassSizes(densities, g.volume)


def power_diagonal(S: QuotientMatrix, i: int, t_max: int) -> list[int]:
    """s^t_ii for t = 0..t_max."""
    if t_max < 0:
        raise ValueError(f"t_max must be non-negative, got {t_max}")
    row = [1 if j == i else 0 for j in range(S.k)]
    result = [1]
    for _ in range(t_max):
        row = [sum(row[r] * S[r, j] for r in range(S.k)) for j in range(S.k)]
        result.append(row[i])
    return result


def apply_adjacency(g: GraphSpec, vec: Mapping[Vertex, Any], budget: Optional[int] = None) -> dict:
    """(M vec)(x) = sum of vec over the neighbours of x, for every vertex x.

    Vertices missing from ``vec`` count as 0.
    """
    result = {}
    for v in enumerate_vertices(g, budget):
        total = 0
        for u in neighbors(g, v):
            value = vec.get(u)
            if value is not None:
                total = value + total
        result[v] = total
    return result


def apply_adjacency_array(g: GraphSpec, values: np.ndarray, budget: Optional[int] = None) -> np.ndarray:
    """Adjacency operator on an index-ordered array (numeric or object dtype)."""
    values = np.asarray(values)
    if values.shape[0] != g.vertex_count:
        raise ValueError(f"Expected {g.vertex_count} values, got {values.shape[0]}")
    blocks = [values[neighbor_indices(g, block)].sum(axis=1) for block in iter_index_blocks(g, budget)]
    return np.concatenate(blocks)


def lemma1_inner_product(g: GraphSpec, coloring: "Coloring", j: int, t: int) -> int:
    """(M^t f_j, f_j) for the indicator f_j of colour class j."""
    indicator = coloring.indicator(j).astype(np.int64)
    image = indicator
    for _ in range(t):
        image = apply_adjacency_array(g, image)
    return int((image * indicator).sum())


def check_cayley_hamilton(S: QuotientMatrix, i: int, t_max: int) -> None:
    """Raise ConsistencyError unless s^t_ii satisfies the characteristic recurrence."""
    coefficients = characteristic_polynomial(S)
    diagonal = power_diagonal(S, i, t_max)
    k = S.k
    for t in range(k, t_max + 1):
        value = sum(coefficients[r] * diagonal[t - r] for r in range(k + 1))
        if value != 0:
            raise ConsistencyError(f"Cayley-Hamilton recurrence fails at t={t} for colour {i}")


def lemma1_violations(coloring: "Coloring", S: QuotientMatrix, t_max: int) -> list:
    """(colour, t) pairs where (M^t f_j, f_j) differs from s^t_jj |f^-1(j)|."""
    sizes = coloring.class_sizes()
    violations = []
    for j in range(S.k):
        diagonal = power_diagonal(S, j, t_max)
        for t in range(t_max + 1):
            if lemma1_inner_product(coloring.graph, coloring, j, t) != diagonal[t] * sizes[j]:
                violations.append((j, t))
    return violations
