import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Tuple, Union

import numpy as np

from src.core.exceptions import ConsistencyError, InputError, UnsupportedOperationError
from src.core.enums import GraphFamily
from src.graph.graph import (
    GraphSpec,
    Vertex,
    as_vertex,
    bfs_distances,
    check_budget,
    index_vertex,
    indices_to_digits,
    iter_index_blocks,
    neighbor_indices,
    pairwise_distances,
    vertex_index,
)
from src.spectra.matrix import QuotientMatrix

# Rows per block when computing pairwise codeword distances
PAIR_BLOCK = 512


@dataclass(frozen=True)
class Code:
    """A nonempty set of vertices of ``graph``."""

    graph: GraphSpec
    words: frozenset

    def __post_init__(self):
        if not self.words:
            raise InputError("A code needs at least one codeword")

    @classmethod
    def from_words(cls, graph: GraphSpec, words: Iterable) -> "Code":
        vertices = [as_vertex(graph, w) for w in words]
        unique = frozenset(vertices)
        if len(unique) != len(vertices):
            raise InputError(f"Code has {len(vertices) - len(unique)} repeated codewords")
        return cls(graph, unique)

    def __len__(self):
        return len(self.words)

    def __contains__(self, v) -> bool:
        return as_vertex(self.graph, v) in self.words

    def indices(self) -> np.ndarray:
        return np.array(sorted(vertex_index(self.graph, w) for w in self.words), dtype=np.int64)

    def sorted_words(self) -> list[Vertex]:
        return [index_vertex(self.graph, int(i)) for i in self.indices()]


@dataclass(frozen=True, eq=False)
class Coloring:
    """A total map from the vertices of ``graph`` onto {0..k-1}.

    ``colors`` is indexed by vertex index.
    """

    graph: GraphSpec
    colors: np.ndarray

    def __post_init__(self):
        colors = np.asarray(self.colors, dtype=np.int64)
        if colors.shape != (self.graph.vertex_count,):
            raise InputError(
                f"Coloring has {colors.size} entries, {self.graph} has {self.graph.vertex_count} vertices"
            )
        if colors.min() < 0:
            raise InputError("Colours must be non-negative")
        used = np.unique(colors)
        if used.size != int(colors.max()) + 1:
            missing = sorted(set(range(int(colors.max()) + 1)) - set(used.tolist()))
            raise InputError(f"Coloring is not onto 0..{colors.max()}: colours {missing} are unused")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_mapping(cls, graph: GraphSpec, mapping: Mapping) -> "Coloring":
        check_budget(graph)
        colors = np.full(graph.vertex_count, -1, dtype=np.int64)
        for v, color in mapping.items():
            colors[vertex_index(graph, v)] = int(color)
        if (colors < 0).any():
            first = index_vertex(graph, int(np.argmax(colors < 0)))
            raise InputError(f"Coloring is not total: vertex {first} has no colour")
        return cls(graph, colors)

    @property
    def k(self) -> int:
        return int(self.colors.max()) + 1

    def color_of(self, v) -> int:
        return int(self.colors[vertex_index(self.graph, v)])

    def indicator(self, color: int) -> np.ndarray:
        return self.colors == color

    def class_sizes(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in np.bincount(self.colors, minlength=self.k))

    def class_of(self, color: int) -> Code:
        return Code(self.graph, frozenset(index_vertex(self.graph, int(i)) for i in np.flatnonzero(self.colors == color)))


@dataclass(frozen=True)
class Counterexample:
    """Two vertices of one colour whose neighbourhoods have different colour profiles."""

    color: int
    first: Vertex
    second: Vertex
    first_profile: Tuple[int, ...]
    second_profile: Tuple[int, ...]

    def __str__(self):
        return (
            f"vertices {self.first} and {self.second} of colour {self.color} have "
            f"neighbour colour counts {list(self.first_profile)} and {list(self.second_profile)}"
        )


def closest_pair(C: Code) -> Optional[Tuple[Vertex, Vertex, int]]:
    """Two codewords at minimum distance, first in index order, or None for a singleton."""
    if len(C) < 2:
        return None
    g = C.graph
    indices = C.indices()
    digits = indices_to_digits(g, indices)
    best = None
    for start in range(0, len(indices), PAIR_BLOCK):
        block = pairwise_distances(g, digits[start : start + PAIR_BLOCK], digits)
        rows = np.arange(block.shape[0])
        block[rows, rows + start] = np.iinfo(np.int64).max
        position = np.unravel_index(np.argmin(block), block.shape)
        value = int(block[position])
        if best is None or value < best[2]:
            best = (int(indices[start + position[0]]), int(indices[position[1]]), value)
    u, v, d = best
    return index_vertex(g, u), index_vertex(g, v), d


def code_distance(C: Code) -> Union[int, float]:
    """Minimum distance between distinct codewords; ``math.inf`` for a singleton."""
    pair = closest_pair(C)
    return math.inf if pair is None else pair[2]


def covering_radius(C: Code, budget: Optional[int] = None) -> int:
    return int(bfs_distances(C.graph, C.indices(), budget).max())


def projection(C: Code, i: int) -> Code:
    """Puncture ``C`` at coordinate ``i``.

    Coordinates are numbered from 1 in (x;y) order, so for D(m,n) positions
    1..m are Shrikhande coordinates and m+1..m+n are K_4 coordinates.
    """
    g = C.graph
    coordinates = g.m + g.n
    if not 1 <= i <= coordinates:
        raise InputError(f"Position {i} is outside 1..{coordinates} of {g}")
    if i <= g.m:
        raise UnsupportedOperationError(
            f"Position {i} of {g} is a Shrikhande coordinate, only K_4 coordinates can be punctured"
        )
    if g.family == GraphFamily.hamming:
        if g.n == 1:
            raise UnsupportedOperationError(f"{g} has a single coordinate")
        target = GraphSpec.hamming(g.n - 1, g.q)
    else:
        target = GraphSpec.doob(g.m, g.n - 1)
    flat = 2 * g.m + (i - g.m - 1)
    return Code(target, frozenset(w[:flat] + w[flat + 1 :] for w in C.words))


def _ball_counts(C: Code, budget: Optional[int] = None) -> np.ndarray:
    check_budget(C.graph, budget)
    counts = np.zeros(C.graph.vertex_count, dtype=np.int64)
    indices = C.indices()
    counts[indices] += 1
    np.add.at(counts, neighbor_indices(C.graph, indices).ravel(), 1)
    return counts


def is_1perfect(C: Code, budget: Optional[int] = None) -> bool:
    """Every vertex has exactly one codeword within distance 1."""
    return bool((_ball_counts(C, budget) == 1).all())


def sphere_packing_size(g: GraphSpec) -> Optional[int]:
    """|V| / (1 + degree), the cardinality of a 1-perfect code, when it is an integer."""
    size, remainder = divmod(g.vertex_count, 1 + g.degree)
    return None if remainder else size


def is_1perfect_by_parameters(C: Code) -> bool:
    """Distance at least 3 and the sphere-packing cardinality."""
    return code_distance(C) >= 3 and len(C) == sphere_packing_size(C.graph)


def doob_extended_parameter(two_m: int) -> Optional[int]:
    """The l with 2m = (4^l + 2)/3, if any."""
    l, value = 1, 2
    while value < two_m:
        l += 1
        value = (4**l + 2) // 3
    return l if value == two_m else None


def is_trivial_extended(g: GraphSpec) -> bool:
    """Whether a single vertex is an extended 1-perfect code: H(2,q) and D(1,0)."""
    return g.diameter == 2


def is_extended_1perfect(C: Code, budget: Optional[int] = None) -> bool:
    """Distance 4 and a 1-perfect projection at the first K_4 position.

    For D(m,0) there is no K_4 coordinate and the parameter definition is used:
    distance 4, 2m = (4^l+2)/3 and |C| = 4^(2m-l-1).
    """
    g = C.graph
    d = code_distance(C)
    if d < 4:
        return False
    if g.is_doob and g.n == 0:
        l = doob_extended_parameter(2 * g.m)
        return l is not None and len(C) == 4 ** (2 * g.m - l - 1)
    if g.family == GraphFamily.hamming and g.n == 1:
        return False
    return is_1perfect(projection(C, g.m + 1), budget)


def distance_coloring(C: Code, budget: Optional[int] = None) -> Coloring:
    """Colour every vertex by its distance to ``C``."""
    return Coloring(C.graph, bfs_distances(C.graph, C.indices(), budget))


def neighbour_profiles(f: Coloring, block: np.ndarray) -> np.ndarray:
    neighbour_colors = f.colors[neighbor_indices(f.graph, block)]
    return np.stack([(neighbour_colors == j).sum(axis=1) for j in range(f.k)], axis=1)


def verify_perfect_coloring(f: Coloring, budget: Optional[int] = None) -> Union[QuotientMatrix, Counterexample]:
    """Quotient matrix of ``f``, or the first counterexample in vertex order.

    The first vertex of each colour fixes the reference profile.
    """
    g = f.graph
    reference: dict[int, Tuple[int, np.ndarray]] = {}
    expected = np.zeros((f.k, f.k), dtype=np.int64)
    for block in iter_index_blocks(g, budget):
        profiles = neighbour_profiles(f, block)
        block_colors = f.colors[block]
        colors, first_rows = np.unique(block_colors, return_index=True)
        for color, row in zip(colors.tolist(), first_rows.tolist()):
            if color not in reference:
                reference[color] = (int(block[row]), profiles[row])
                expected[color] = profiles[row]
        bad = np.flatnonzero((profiles != expected[block_colors]).any(axis=1))
        if bad.size:
            row = int(bad[0])
            color = int(block_colors[row])
            first, profile = reference[color]
            return Counterexample(
                color=color,
                first=index_vertex(g, first),
                second=index_vertex(g, int(block[row])),
                first_profile=tuple(int(c) for c in profile),
                second_profile=tuple(int(c) for c in profiles[row]),
            )
    return QuotientMatrix.from_rows([[int(c) for c in reference[i][1]] for i in range(f.k)])


def is_completely_regular(C: Code, budget: Optional[int] = None) -> Union[QuotientMatrix, Counterexample]:
    result = verify_perfect_coloring(distance_coloring(C, budget), budget)
    if isinstance(result, QuotientMatrix) and not result.is_tridiagonal():
        raise ConsistencyError(f"Distance coloring has a non-tridiagonal quotient matrix {result}")
    return result
