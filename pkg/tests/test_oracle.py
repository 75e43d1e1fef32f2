from fractions import Fraction

import numpy as np
import pytest

from src.codes.code import Code, distance_coloring
from src.codes.construction import (
    hexacode,
    perturb_coloring,
    repetition_code,
    shrikhande_independent_coloring,
)
from src.core.exceptions import BudgetExceededError, UnsupportedOperationError
from src.graph.graph import GraphSpec, graph_eigenvalues, index_vertex
from src.oracle.cyclotomic import CycloValue
from src.oracle.fourier import (
    character_eigenvalue,
    character_eigenvalues,
    character_value,
    check_oracle_graph,
    eigenfunction_violations,
    eigenspace_mass,
    eigenspace_masses,
    fourier_coefficient,
    fourier_coefficients,
    inner_product,
    integrality_witness,
    oracle_report,
)


class TestCycloValue:
    def test_roots_of_unity(self):
        omega = CycloValue.root_of_unity(3, 1)
        assert omega * omega * omega == 1
        assert omega * CycloValue.root_of_unity(3, 2) == 1
        assert 1 + omega + omega * omega == 0
        assert (1 + omega).norm() == 1
        assert CycloValue.root_of_unity(4, 1) * CycloValue.root_of_unity(4, 1) == -1

    def test_residue_counts(self):
        assert CycloValue.from_residue_counts(4, [1, 0, 0, 0]) == 1
        assert CycloValue.from_residue_counts(4, [0, 1, 0, 0]) == CycloValue.root_of_unity(4, 3)
        assert CycloValue.from_residue_counts(3, [2, 1, 1]) == 1

    def test_half_integer_form(self):
        value = CycloValue.from_residue_counts(3, [0, 1, 0])
        assert value.half_integer_form() == (-1, -1)
        assert str(CycloValue(Fraction(1, 2), Fraction(-1, 2), 3)) == "1/2 - 1/2*sqrt(-3)"

    def test_unsupported_alphabet(self):
        with pytest.raises(UnsupportedOperationError):
            CycloValue.root_of_unity(5, 1)


class TestCharacters:
    def test_inner_product_on_doob(self):
        g = GraphSpec.doob(1, 1)
        assert inner_product(g, [(1, 2), 3], [(3, 1), 2]) == (3 + 2 + 6) % 4

    def test_character_value(self, ternary_plane):
        assert character_value(ternary_plane, (1, 2), (1, 1)) == 1
        assert character_value(ternary_plane, (1, 0), (2, 0)) == CycloValue.root_of_unity(3, 2)

    def test_shrikhande_spectrum(self, shrikhande):
        values, counts = np.unique(character_eigenvalues(shrikhande), return_counts=True)
        assert dict(zip(values.tolist(), counts.tolist())) == {6: 1, 2: 6, -2: 9}

    @pytest.mark.parametrize("g", [GraphSpec.hamming(3, 3), GraphSpec.doob(1, 1)], ids=str)
    def test_eigenvalues_match_pointwise(self, g):
        values = character_eigenvalues(g)
        for index in (0, 5, g.vertex_count - 1):
            assert character_eigenvalue(g, index_vertex(g, index)) == values[index]
        assert set(values.tolist()) == set(graph_eigenvalues(g))

    @pytest.mark.parametrize(
        "g",
        [GraphSpec.hamming(2, 3), GraphSpec.hamming(3, 2), GraphSpec.doob(1, 0), GraphSpec.doob(1, 1)],
        ids=str,
    )
    def test_characters_are_eigenfunctions(self, g):
        assert eigenfunction_violations(g) == []

    def test_limits(self):
        with pytest.raises(BudgetExceededError):
            check_oracle_graph(GraphSpec.hamming(13, 2))
        with pytest.raises(UnsupportedOperationError):
            check_oracle_graph(GraphSpec.hamming(2, 5))


class TestMasses:
    def test_point_in_ternary_plane(self, ternary_plane):
        f = distance_coloring(Code.from_words(ternary_plane, [(0, 0)]))
        assert eigenspace_masses(f, 0) == {4: Fraction(1, 9), 1: Fraction(4, 9), -2: Fraction(4, 9)}
        assert eigenspace_mass(ternary_plane, f, 0, 1) == Fraction(4, 9)
        assert integrality_witness(ternary_plane, f, 0, -2) == 4
        assert fourier_coefficient(f, 0, (1, 2)) == 1

    def test_all_coefficients_match_pointwise(self):
        f = distance_coloring(repetition_code(4, 2))
        coefficients = fourier_coefficients(f, 0)
        assert len(coefficients) == 16
        for index in (0, 3, 15):
            assert coefficients[index] == fourier_coefficient(f, 0, index_vertex(f.graph, index))
        assert coefficients[0] == 2

    def test_parseval(self, shrikhande):
        f = shrikhande_independent_coloring(shrikhande)
        for color, size in enumerate(f.class_sizes()):
            assert sum(eigenspace_masses(f, color).values()) == size


CASES = {
    "point in H(2,3)": lambda: distance_coloring(Code.from_words(GraphSpec.hamming(2, 3), [(0, 0)])),
    "repetition in H(4,2)": lambda: distance_coloring(repetition_code(4, 2)),
    "point in H(2,4)": lambda: distance_coloring(Code.from_words(GraphSpec.hamming(2, 4), [(2, 1)])),
    "point in D(1,0)": lambda: distance_coloring(Code.from_words(GraphSpec.doob(1, 0), [[(0, 0)]])),
    "Shrikhande independent set": lambda: shrikhande_independent_coloring(GraphSpec.doob(1, 0)),
    "hexacode": lambda: distance_coloring(hexacode()),
}


class TestOracleReport:
    @pytest.mark.parametrize("case", list(CASES))
    def test_agrees_with_the_eigenvalue_checks(self, case):
        f = CASES[case]()
        for color in range(f.k):
            report = oracle_report(f.graph, f, color)
            assert report.parseval
            assert report.support
            assert report.value_form
            assert all(row.matches for row in report.rows)
            assert report.agrees

    def test_hexacode_masses(self):
        f = distance_coloring(hexacode())
        report = oracle_report(f.graph, f, 0)
        masses = {row.value: row.mass_times_volume for row in report.rows}
        assert masses[18] == 64 * 64
        assert masses[18] + masses[2] + masses[-6] == 64 * 4096
        assert sum(1 for row in report.rows if row.mass) == 3

    def test_imperfect_coloring_does_not_agree(self, shrikhande):
        f = perturb_coloring(shrikhande_independent_coloring(shrikhande))
        report = oracle_report(shrikhande, f, 0)
        assert report.parseval
        assert not report.agrees
        assert report.to_dict()["agrees"] is False
