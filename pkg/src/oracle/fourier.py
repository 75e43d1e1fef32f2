from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np
from tqdm import tqdm

from src.codes.code import Coloring, Counterexample, verify_perfect_coloring
from src.core.config import settings
from src.core.exceptions import BudgetExceededError, ConsistencyError, InputError
from src.feasibility.pipeline import theorem1_check
from src.formats.files import format_graph_spec
from src.graph.graph import (
    GraphSpec,
    Vertex,
    as_vertex,
    graph_eigenvalues,
    indices_to_digits,
    neighbor_indices,
)
from src.oracle.cyclotomic import ROOT_COORDINATES, CycloValue, check_alphabet
from src.spectra.matrix import QuotientMatrix
from src.spectra.quotient import SpectrumInfo
from src.utils.utils import timing

# Re(i^a) for a in Z_4
SHRIKHANDE_COSINE = np.array([1, 0, -1, 0], dtype=np.int64)
# Bound on frequency rows times class size per vectorised block
BLOCK_CELLS = 1 << 22


def check_oracle_graph(g: GraphSpec, limit: Optional[int] = None) -> None:
    check_alphabet(g.q)
    limit = settings.ORACLE_VERTEX_LIMIT if limit is None else limit
    if not g.fits(limit):
        raise BudgetExceededError(g.vertex_count if g.length <= 4096 else f"{g.q}^{g.length}", limit)


def inner_product(g: GraphSpec, z: Vertex, t: Vertex) -> int:
    """<z,t>: the flat dot product mod q; for Doob pairs this is x1*v1 + y1*u1."""
    z, t = as_vertex(g, z), as_vertex(g, t)
    return sum(a * b for a, b in zip(z, t)) % g.q


def character_value(g: GraphSpec, z: Vertex, t: Vertex) -> CycloValue:
    """xi^<z,t> without the 1/q^(n/2) normalisation."""
    return CycloValue.root_of_unity(g.q, inner_product(g, z, t))


def character_eigenvalue(g: GraphSpec, z: Vertex) -> int:
    """Eigenvalue of the character with frequency ``z``, coordinate by coordinate.

    A K_q coordinate contributes q-1 if z_i = 0 and -1 otherwise; a Shrikhande
    coordinate [a,b] contributes 2Re(i^a) + 2Re(i^b) + 2Re(i^(a+b)).
    """
    z = as_vertex(g, z)
    total = 0
    for p in range(g.m):
        a, b = z[2 * p], z[2 * p + 1]
        total += 2 * int(SHRIKHANDE_COSINE[a] + SHRIKHANDE_COSINE[b] + SHRIKHANDE_COSINE[(a + b) % 4])
    return total + sum(g.q - 1 if x == 0 else -1 for x in z[2 * g.m :])


def character_eigenvalues(g: GraphSpec) -> np.ndarray:
    """Eigenvalue of every frequency, in vertex index order."""
    check_oracle_graph(g)
    digits = indices_to_digits(g, np.arange(g.vertex_count))
    split = 2 * g.m
    values = np.where(digits[:, split:] == 0, g.q - 1, -1).sum(axis=1)
    if g.m:
        a, b = digits[:, 0:split:2], digits[:, 1:split:2]
        values = values + 2 * (
            SHRIKHANDE_COSINE[a] + SHRIKHANDE_COSINE[b] + SHRIKHANDE_COSINE[(a + b) % 4]
        ).sum(axis=1)
    return values


def _residue_counts(q: int, frequencies: np.ndarray, members: np.ndarray) -> np.ndarray:
    """For each frequency row, how many members x have <z,x> = r, for r in Z_q."""
    exponents = (frequencies @ members.T) % q
    return np.stack([(exponents == r).sum(axis=1) for r in range(q)], axis=1)


def fourier_coefficients(coloring: Coloring, color: int) -> list:
    """sum over the colour class of conj(xi^<z,x>) for every frequency z, in index order.

    Unnormalised: the Fourier coefficient alpha_z is this value divided by q^(n/2).
    """
    g = coloring.graph
    check_oracle_graph(g)
    members = indices_to_digits(g, np.flatnonzero(coloring.indicator(color)))
    if members.shape[0] == 0:
        raise InputError(f"Colour {color} is not used by the coloring")
    frequencies = indices_to_digits(g, np.arange(g.vertex_count))
    step = max(1, BLOCK_CELLS // members.shape[0])
    starts = range(0, g.vertex_count, step)

    with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
        futures = [
            executor.submit(_residue_counts, g.q, frequencies[start : start + step], members)
            for start in starts
        ]
        blocks = [
            future.result()
            for future in tqdm(
                futures, desc=f"Character sums for colour {color}", unit=" blocks", disable=not settings.SHOW_PROGRESS
            )
        ]
    counts = np.concatenate(blocks)
    return [CycloValue.from_residue_counts(g.q, row) for row in counts]


def fourier_coefficient(coloring: Coloring, color: int, z: Vertex) -> CycloValue:
    g = coloring.graph
    check_oracle_graph(g)
    members = indices_to_digits(g, np.flatnonzero(coloring.indicator(color)))
    frequency = np.array([as_vertex(g, z)], dtype=np.int64)
    return CycloValue.from_residue_counts(g.q, _residue_counts(g.q, frequency, members)[0])


def _masses(g: GraphSpec, coefficients: Sequence[CycloValue]) -> dict:
    eigenvalues = character_eigenvalues(g)
    masses = {value: Fraction(0) for value in graph_eigenvalues(g)}
    for value, coefficient in zip(eigenvalues.tolist(), coefficients):
        masses[value] += coefficient.norm()
    return {value: mass / g.vertex_count for value, mass in masses.items()}


def eigenspace_masses(coloring: Coloring, color: int) -> dict:
    """Mass of the colour class indicator on every eigenspace, largest eigenvalue first."""
    return _masses(coloring.graph, fourier_coefficients(coloring, color))


def eigenspace_mass(g: GraphSpec, coloring: Coloring, color: int, value: int) -> Fraction:
    """sum of |alpha_z|^2 over the frequencies z with eigenvalue ``value``."""
    if coloring.graph != g:
        raise InputError(f"Coloring is on {coloring.graph}, not {g}")
    masses = eigenspace_masses(coloring, color)
    if value not in masses:
        raise InputError(f"{value} is not an eigenvalue of {g}")
    return masses[value]


def _witness(g: GraphSpec, value: int, mass: Fraction) -> int:
    scaled = mass * g.vertex_count
    if scaled.denominator != 1:
        raise ConsistencyError(f"mass*|V| = {scaled} at eigenvalue {value} is not an integer")
    return scaled.numerator


def integrality_witness(g: GraphSpec, coloring: Coloring, color: int, value: int) -> int:
    """eigenspace_mass * |V(G)|, which is always a non-negative integer for q in {2,3,4}."""
    return _witness(g, value, eigenspace_mass(g, coloring, color, value))


def eigenfunction_violations(g: GraphSpec, frequencies: Optional[Sequence[int]] = None) -> list:
    """Frequencies z (as indices) for which M phi_z != lambda(z) phi_z somewhere.

    Each side is compared in exact integer coordinates of Z[xi].
    """
    check_oracle_graph(g)
    points = indices_to_digits(g, np.arange(g.vertex_count))
    neighbours = neighbor_indices(g, np.arange(g.vertex_count))
    eigenvalues = character_eigenvalues(g)
    roots = ROOT_COORDINATES[g.q]
    if frequencies is None:
        frequencies = range(g.vertex_count)
    frequencies = np.asarray(list(frequencies), dtype=np.int64)
    step = max(1, BLOCK_CELLS // (g.vertex_count * g.degree))

    violations = []
    for start in range(0, frequencies.size, step):
        block = frequencies[start : start + step]
        exponents = (indices_to_digits(g, block) @ points.T) % g.q
        image = roots[exponents[:, neighbours]].sum(axis=2)
        expected = eigenvalues[block][:, None, None] * roots[exponents]
        bad = (image != expected).any(axis=(1, 2))
        violations.extend(int(z) for z in block[bad])
    return violations


@dataclass
class OracleRow:
    value: int
    mass: Fraction
    mass_times_volume: int
    expected: Optional[Fraction]

    @property
    def matches(self) -> bool:
        return self.expected is not None and self.mass == self.expected

    def to_dict(self) -> dict:
        return {
            "lambda": self.value,
            "mass": str(self.mass),
            "mass_times_V": self.mass_times_volume,
            "matches_theorem1": self.matches,
        }


@dataclass
class OracleReport:
    graph: GraphSpec
    color: int
    quotient: Union[QuotientMatrix, Counterexample]
    rows: list = field(default_factory=list)
    parseval: bool = False
    support: bool = False
    value_form: bool = True

    @property
    def agrees(self) -> bool:
        return (
            not isinstance(self.quotient, Counterexample)
            and all(row.matches for row in self.rows)
            and self.parseval
            and self.support
            and self.value_form
        )

    def to_dict(self) -> dict:
        return {
            "graph": format_graph_spec(self.graph),
            "color": self.color,
            "quotient": str(self.quotient) if isinstance(self.quotient, Counterexample) else self.quotient.to_dict(),
            "rows": [row.to_dict() for row in self.rows],
            "parseval": self.parseval,
            "support": self.support,
            "value_form": self.value_form,
            "agrees": self.agrees,
        }


def _value_form_holds(g: GraphSpec, coefficients: Sequence[CycloValue]) -> bool:
    """For q = 3 every coefficient is (a + b sqrt(-3))/2 with a and b of the same parity."""
    if g.q != 3:
        return True
    for coefficient in coefficients:
        try:
            a, b = coefficient.half_integer_form()
        except ValueError:
            return False
        if (a - b) % 2:
            return False
    return True


@timing
def oracle_report(g: GraphSpec, coloring: Coloring, color: int) -> OracleReport:
    """Recompute the eigenspace masses of one colour class from character sums.

    The masses are compared with a_j from the eigenvalue checks on the quotient
    matrix of the coloring, which must be perfect.
    """
    if coloring.graph != g:
        raise InputError(f"Coloring is on {coloring.graph}, not {g}")
    if not 0 <= color < coloring.k:
        raise InputError(f"Colour {color} is outside 0..{coloring.k - 1}")
    check_oracle_graph(g)

    coefficients = fourier_coefficients(coloring, color)
    masses = _masses(g, coefficients)
    size = coloring.class_sizes()[color]
    quotient = verify_perfect_coloring(coloring)
    report = OracleReport(g, color, quotient)
    report.parseval = sum(masses.values()) == size
    report.value_form = _value_form_holds(g, coefficients)

    expected = {}
    if not isinstance(quotient, Counterexample):
        checked = theorem1_check(g, quotient, color)
        if isinstance(checked.spectrum, SpectrumInfo):
            expected[checked.spectrum.principal] = Fraction(size * size, g.vertex_count)
            for value, a_value in zip(checked.spectrum.nontrivial, checked.a_values.get(color, ())):
                expected[value] = a_value.to_fraction()
            for value in graph_eigenvalues(g):
                expected.setdefault(value, Fraction(0))
        report.support = all(masses[value] == 0 for value in masses if value not in checked.eigenvalues())

    for value, mass in masses.items():
        report.rows.append(OracleRow(value, mass, _witness(g, value, mass), expected.get(value)))
    return report
