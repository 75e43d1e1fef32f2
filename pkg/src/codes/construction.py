import itertools
from functools import lru_cache
from typing import Sequence

import numpy as np

from src.core.exceptions import ConsistencyError, InputError
from src.codes.code import Code, Coloring, code_distance
from src.graph.graph import GraphSpec, indices_to_digits

# GF(4) = {0, 1, w, w^2} labelled 0, 1, 2, 3; addition is XOR of the labels
GF4_LOG = {1: 0, 2: 1, 3: 2}
GF4_EXP = (1, 2, 3)


def gf4_add(a: int, b: int) -> int:
    return a ^ b


def gf4_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return GF4_EXP[(GF4_LOG[a] + GF4_LOG[b]) % 3]


def gf4_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant over GF(4) by cofactor expansion (signs vanish in characteristic 2)."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = 0
    for j in range(size):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        total = gf4_add(total, gf4_mul(matrix[0][j], gf4_det(minor)))
    return total


def has_nonsingular_minors(block: Sequence[Sequence[int]]) -> bool:
    """Every square submatrix of ``block`` is nonsingular."""
    rows, cols = len(block), len(block[0])
    for size in range(1, min(rows, cols) + 1):
        for row_set in itertools.combinations(range(rows), size):
            for col_set in itertools.combinations(range(cols), size):
                minor = [[block[r][c] for c in col_set] for r in row_set]
                if gf4_det(minor) == 0:
                    return False
    return True


def linear_code(generator: Sequence[Sequence[int]]) -> Code:
    """The GF(4)-span of the rows of ``generator`` as a code in H(n,4)."""
    n = len(generator[0])
    words = set()
    for message in itertools.product(range(4), repeat=len(generator)):
        word = [0] * n
        for coefficient, row in zip(message, generator):
            for i in range(n):
                word[i] = gf4_add(word[i], gf4_mul(coefficient, row[i]))
        words.add(tuple(word))
    return Code(GraphSpec.hamming(n, 4), frozenset(words))


@lru_cache(maxsize=None)
def hexacode() -> Code:
    """A [6,3,4] code over GF(4) with generator [I | P].

    P is the first 3x3 block (lexicographically over nonzero entries) whose
    square submatrices are all nonsingular; the distance of the resulting code
    is then checked exhaustively.
    """
    identity = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    for entries in itertools.product((1, 2, 3), repeat=9):
        block = [list(entries[0:3]), list(entries[3:6]), list(entries[6:9])]
        if not has_nonsingular_minors(block):
            continue
        code = linear_code([identity[i] + block[i] for i in range(3)])
        if code_distance(code) == 4:
            return code
    raise ConsistencyError("No 3x3 block over GF(4) gives a distance 4 code")


def repetition_code(n: int, q: int) -> Code:
    return Code(GraphSpec.hamming(n, q), frozenset((s,) * n for s in range(q)))


def shrikhande_independent_coloring(g: GraphSpec) -> Coloring:
    """Colour 0 on the subgroup 2Z_4^2 of the Shrikhande graph, colour 1 elsewhere."""
    if g != GraphSpec.doob(1, 0):
        raise InputError(f"Expected the Shrikhande graph D(1,0), got {g}")
    digits = indices_to_digits(g, np.arange(g.vertex_count))
    colors = np.where((digits % 2 == 0).all(axis=1), 0, 1)
    return Coloring(g, colors)


def perturb_coloring(f: Coloring, vertex_index: int = 0) -> Coloring:
    """Flip the colour of one vertex to the next colour."""
    colors = f.colors.copy()
    colors[vertex_index] = (colors[vertex_index] + 1) % f.k
    return Coloring(f.graph, colors)


def random_code(g: GraphSpec, size: int, seed: int = 0) -> Code:
    """``size`` distinct vertices of ``g`` drawn uniformly."""
    rng = np.random.default_rng(seed)
    indices = rng.choice(g.vertex_count, size=size, replace=False)
    rows = indices_to_digits(g, indices)
    return Code(g, frozenset(tuple(int(x) for x in row) for row in rows))

