import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.config import settings
from src.core.enums import GraphFamily
from src.core.exceptions import BudgetExceededError, InputError
from src.spectra.exact import ScaledRational

Vertex = Tuple[int, ...]

# Cayley connecting set of the Shrikhande graph on Z_4 x Z_4
SHRIKHANDE_MOVES: Tuple[Tuple[int, int], ...] = ((0, 1), (1, 0), (0, 3), (3, 0), (1, 1), (3, 3))

SHRIKHANDE_DISTANCE = np.full((4, 4), 2, dtype=np.int64)
SHRIKHANDE_DISTANCE[0, 0] = 0
for _dx, _dy in SHRIKHANDE_MOVES:
    SHRIKHANDE_DISTANCE[_dx, _dy] = 1


class GraphSpec(BaseModel):
    """A Hamming graph H(n,q) or a Doob graph D(m,n).

    Vertices are flat tuples of ``length`` symbols in Z_q. A Doob vertex stores
    each Shrikhande coordinate as two consecutive entries, pairs first, then
    the K_4 symbols. D(0,n) is normalised to H(n,4) on construction.
    """

    model_config = ConfigDict(frozen=True)

    family: GraphFamily
    n: int = Field(ge=0)
    q: int = Field(default=4, ge=2)
    m: int = Field(default=0, ge=0)

    @model_validator(mode="before")
    @classmethod
    def normalize_doob(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("family") in (GraphFamily.doob, "doob"):
            data = dict(data)
            data.setdefault("q", 4)
            if data.get("m", 0) == 0:
                data["family"] = GraphFamily.hamming
        return data

    @model_validator(mode="after")
    def check_family(self) -> "GraphSpec":
        if self.family == GraphFamily.hamming:
            if self.n < 1:
                raise ValueError("Hamming graphs need n >= 1")
            if self.m != 0:
                raise ValueError("Hamming graphs have no Shrikhande coordinates")
        elif self.q != 4:
            raise ValueError(f"Doob graphs are over Z_4, got q={self.q}")
        return self

    @classmethod
    def hamming(cls, n: int, q: int) -> "GraphSpec":
        return cls(family=GraphFamily.hamming, n=n, q=q)

    @classmethod
    def doob(cls, m: int, n: int) -> "GraphSpec":
        return cls(family=GraphFamily.doob, m=m, n=n)

    @property
    def is_doob(self) -> bool:
        return self.family == GraphFamily.doob

    @property
    def length(self) -> int:
        """Number of flat coordinates of a vertex."""
        return 2 * self.m + self.n

    @property
    def diameter(self) -> int:
        return 2 * self.m + self.n

    @property
    def degree(self) -> int:
        return 6 * self.m + (self.q - 1) * self.n

    @property
    def vertex_count(self) -> int:
        return self.q**self.length

    @property
    def volume(self) -> ScaledRational:
        return ScaledRational.power(self.q, self.length)

    def fits(self, budget: int) -> bool:
        """Whether the vertex set has at most ``budget`` elements."""
        # q >= 2, so a length past the bit length of the budget is always too large
        if self.length > budget.bit_length():
            return False
        return self.vertex_count <= budget

    def __str__(self):
        if self.is_doob:
            return f"D({self.m},{self.n})"
        return f"H({self.n},{self.q})"


@dataclass(frozen=True)
class IntersectionArray:
    """Intersection array of a graph with the parameters of H(diameter, q).

    Entries are computed on demand so arrays of astronomically large diameter
    can still be queried.
    """

    diameter: int
    q: int

    def b_at(self, i: int) -> int:
        if not 0 <= i <= self.diameter:
            raise IndexError(f"b_{i} is outside 0..{self.diameter}")
        return (self.diameter - i) * (self.q - 1)

    def c_at(self, i: int) -> int:
        if not 0 <= i <= self.diameter:
            raise IndexError(f"c_{i} is outside 0..{self.diameter}")
        return i

    def a_at(self, i: int) -> int:
        return self.b_at(0) - self.b_at(i) - self.c_at(i)

    @property
    def b(self) -> Tuple[int, ...]:
        return tuple(self.b_at(i) for i in range(self.diameter))

    @property
    def c(self) -> Tuple[int, ...]:
        return tuple(self.c_at(i) for i in range(1, self.diameter + 1))

    @property
    def a(self) -> Tuple[int, ...]:
        return tuple(self.a_at(i) for i in range(self.diameter + 1))


def resolve_budget(budget: Optional[int]) -> int:
    return settings.ENUMERATION_BUDGET if budget is None else budget


def check_budget(g: GraphSpec, budget: Optional[int] = None) -> int:
    """Raise BudgetExceededError unless the vertex set of ``g`` fits the budget."""
    budget = resolve_budget(budget)
    if not g.fits(budget):
        count = g.vertex_count if g.length <= 4096 else f"{g.q}^{g.length}"
        raise BudgetExceededError(count, budget)
    return g.vertex_count


def as_vertex(g: GraphSpec, v: Iterable) -> Vertex:
    """Validate ``v`` as a vertex of ``g`` and reduce its symbols mod q.

    Doob vertices may be given flat or with the Shrikhande coordinates as
    nested pairs.
    """
    flat = []
    try:
        for item in v:
            if isinstance(item, (tuple, list)):
                if len(item) != 2:
                    raise InputError(f"Shrikhande coordinate {item} is not a pair")
                flat.extend(int(x) for x in item)
            else:
                flat.append(int(item))
    except TypeError as e:
        raise InputError(f"Malformed vertex {v!r}: {e}")
    if len(flat) != g.length:
        raise InputError(f"Vertex {v!r} has {len(flat)} symbols, {g} needs {g.length}")
    return tuple(x % g.q for x in flat)


def neighbors(g: GraphSpec, v: Vertex) -> list[Vertex]:
    v = as_vertex(g, v)
    result = []
    for p in range(g.m):
        x, y = v[2 * p], v[2 * p + 1]
        for dx, dy in SHRIKHANDE_MOVES:
            u = list(v)
            u[2 * p] = (x + dx) % 4
            u[2 * p + 1] = (y + dy) % 4
            result.append(tuple(u))
    for i in range(2 * g.m, g.length):
        for shift in range(1, g.q):
            u = list(v)
            u[i] = (v[i] + shift) % g.q
            result.append(tuple(u))
    return result


def shrikhande_distance(dx: int, dy: int) -> int:
    return int(SHRIKHANDE_DISTANCE[dx % 4, dy % 4])


def distance(g: GraphSpec, u: Vertex, v: Vertex) -> int:
    u, v = as_vertex(g, u), as_vertex(g, v)
    total = 0
    for p in range(g.m):
        total += shrikhande_distance(v[2 * p] - u[2 * p], v[2 * p + 1] - u[2 * p + 1])
    return total + sum(1 for i in range(2 * g.m, g.length) if u[i] != v[i])


def intersection_array(g: GraphSpec) -> IntersectionArray:
    # D(m,n) shares the array of H(2m+n,4)
    return IntersectionArray(diameter=g.diameter, q=g.q)


def eigenvalue_index(g: GraphSpec, value: int) -> Optional[int]:
    """The i with value = (q-1)N - q*i, or None if ``value`` is not an eigenvalue."""
    top = (g.q - 1) * g.diameter
    shift = top - value
    if shift % g.q != 0:
        return None
    i = shift // g.q
    return i if 0 <= i <= g.diameter else None


def is_graph_eigenvalue(g: GraphSpec, value: int) -> bool:
    return eigenvalue_index(g, value) is not None


def graph_eigenvalues(g: GraphSpec) -> list[int]:
    """Distinct adjacency eigenvalues of ``g``, largest first."""
    top = (g.q - 1) * g.diameter
    return [top - g.q * i for i in range(g.diameter + 1)]


def enumerate_vertices(g: GraphSpec, budget: Optional[int] = None) -> Iterator[Vertex]:
    """Yield every vertex once, lexicographically with the first coordinate most significant."""
    check_budget(g, budget)
    return itertools.product(range(g.q), repeat=g.length)


def _weights(g: GraphSpec) -> np.ndarray:
    return g.q ** np.arange(g.length - 1, -1, -1, dtype=np.int64)


def vertex_index(g: GraphSpec, v: Vertex) -> int:
    index = 0
    for x in as_vertex(g, v):
        index = index * g.q + x
    return index


def index_vertex(g: GraphSpec, index: int) -> Vertex:
    if not 0 <= index < g.vertex_count:
        raise InputError(f"Vertex index {index} is outside {g}")
    digits = []
    for _ in range(g.length):
        index, x = divmod(index, g.q)
        digits.append(x)
    return tuple(reversed(digits))


def indices_to_digits(g: GraphSpec, indices: np.ndarray) -> np.ndarray:
    """Rows of vertex symbols for an array of vertex indices."""
    indices = np.asarray(indices, dtype=np.int64)
    return (indices[:, None] // _weights(g)[None, :]) % g.q


def digits_to_indices(g: GraphSpec, digits: np.ndarray) -> np.ndarray:
    return np.asarray(digits, dtype=np.int64) @ _weights(g)


def neighbor_indices(g: GraphSpec, indices: np.ndarray) -> np.ndarray:
    """Neighbour indices of a block of vertices, one row per vertex.

    Columns follow the order of ``neighbors``.
    """
    indices = np.asarray(indices, dtype=np.int64)
    digits = indices_to_digits(g, indices)
    weights = _weights(g)
    columns = []
    for p in range(g.m):
        x, y = digits[:, 2 * p], digits[:, 2 * p + 1]
        wx, wy = weights[2 * p], weights[2 * p + 1]
        for dx, dy in SHRIKHANDE_MOVES:
            columns.append(indices + ((x + dx) % 4 - x) * wx + ((y + dy) % 4 - y) * wy)
    for i in range(2 * g.m, g.length):
        x = digits[:, i]
        for shift in range(1, g.q):
            columns.append(indices + ((x + shift) % g.q - x) * weights[i])
    return np.stack(columns, axis=1)


def iter_index_blocks(
    g: GraphSpec, budget: Optional[int] = None, chunk_size: Optional[int] = None
) -> Iterator[np.ndarray]:
    total = check_budget(g, budget)
    chunk_size = chunk_size or settings.CHUNK_SIZE
    for start in range(0, total, chunk_size):
        yield np.arange(start, min(start + chunk_size, total), dtype=np.int64)


def pairwise_distances(g: GraphSpec, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Distance matrix between two blocks of vertices given as symbol rows."""
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    split = 2 * g.m
    result = (left[:, None, split:] != right[None, :, split:]).sum(axis=2)
    if g.m:
        diff = (right[None, :, :split] - left[:, None, :split]) % 4
        result = result + SHRIKHANDE_DISTANCE[diff[..., 0::2], diff[..., 1::2]].sum(axis=2)
    return result


def bfs_distances(
    g: GraphSpec, sources: Sequence[int], budget: Optional[int] = None
) -> np.ndarray:
    """Distance from every vertex index to the nearest source, by level-synchronous BFS."""
    total = check_budget(g, budget)
    dist = np.full(total, -1, dtype=np.int64)
    frontier = np.unique(np.asarray(sources, dtype=np.int64))
    if frontier.size == 0:
        raise InputError("BFS needs at least one source vertex")
    dist[frontier] = 0
    level = 0
    while frontier.size:
        reached = []
        for start in range(0, frontier.size, settings.CHUNK_SIZE):
            block = neighbor_indices(g, frontier[start : start + settings.CHUNK_SIZE]).ravel()
            block = block[dist[block] < 0]
            if block.size:
                block = np.unique(block)
                dist[block] = level + 1
                reached.append(block)
        level += 1
        frontier = np.concatenate(reached) if reached else np.empty(0, dtype=np.int64)
    return dist
