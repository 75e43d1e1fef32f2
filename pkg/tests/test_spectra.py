from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from src.codes.construction import repetition_code, shrikhande_independent_coloring
from src.codes.code import Code, distance_coloring
from src.core.exceptions import InputError, UnderdeterminedError
from src.graph.graph import GraphSpec, vertex_index
from src.spectra.exact import ScaledRational
from src.spectra.matrix import QuotientMatrix
from src.spectra.quotient import (
    ClassSizes,
    Infeasible,
    Lemma2Violation,
    SpectrumInfo,
    apply_adjacency,
    apply_adjacency_array,
    characteristic_polynomial,
    check_cayley_hamilton,
    class_sizes,
    lemma1_inner_product,
    lemma1_violations,
    power_diagonal,
    quotient_eigenvalues,
)

EXTENDED_TERNARY_PLANE = QuotientMatrix.from_rows([[0, 4, 0], [1, 1, 2], [0, 2, 2]])
SHRIKHANDE_INDEPENDENT = QuotientMatrix.from_rows([[0, 6], [2, 4]])


class TestScaledRational:
    def test_integrality_without_expansion(self):
        assert ScaledRational(Fraction(1, 9), 3, 5).is_integer()
        assert not ScaledRational(Fraction(1, 9), 3, 1).is_integer()
        assert not ScaledRational(Fraction(8, 82), 3, 10**6).is_integer()
        assert ScaledRational(Fraction(27, 6), 4, 10**6).is_integer()
        assert ScaledRational(8, 2, -3).is_integer()
        assert not ScaledRational(4, 2, -3).is_integer()

    def test_equality(self):
        assert ScaledRational(1, 2, 3) == 8
        assert ScaledRational(Fraction(1, 2), 2, 4) == ScaledRational(2, 2, 2)
        assert ScaledRational(1, 2, 1000) != ScaledRational(1, 2, 999)
        assert ScaledRational(0, 3, 50) == ScaledRational(0, 3, 2)
        assert ScaledRational(-1, 3, 2) != ScaledRational(1, 3, 2)

    def test_arithmetic(self):
        square = ScaledRational.power(4, 22) * ScaledRational.power(4, 22)
        assert square.exponent == 44
        assert (square * Fraction(1, 2)).coefficient == Fraction(1, 2)
        assert ScaledRational(Fraction(3, 2), 2, 3).to_int() == 12
        with pytest.raises(ValueError):
            ScaledRational(Fraction(1, 3), 2, 3).to_int()

    def test_format(self):
        assert ScaledRational(Fraction(1, 2), 2, 3).format() == "4"
        assert ScaledRational(3, 4, 100).format(60) == "3*4^100"
        assert str(ScaledRational(Fraction(4, 5), 3, 22)) == str(Fraction(4 * 3**22, 5))


class TestQuotientMatrix:
    def test_validation(self):
        with pytest.raises(ValidationError):
            QuotientMatrix(k=2, rows=((0, 1),))
        with pytest.raises(ValidationError):
            QuotientMatrix.from_rows([[0, 1], [2]])
        with pytest.raises(ValidationError):
            QuotientMatrix.from_rows([[0, -1], [1, 0]])

    def test_row_sums(self):
        with pytest.raises(InputError):
            EXTENDED_TERNARY_PLANE.check_row_sums(5)
        EXTENDED_TERNARY_PLANE.check_row_sums(4)

    def test_shape(self):
        assert EXTENDED_TERNARY_PLANE.is_tridiagonal()
        assert EXTENDED_TERNARY_PLANE.is_extended_shape()
        assert not SHRIKHANDE_INDEPENDENT.is_extended_shape()
        assert not QuotientMatrix.from_rows([[0, 2, 2], [1, 1, 2], [1, 1, 2]]).is_tridiagonal()


class TestEigenvalues:
    def test_characteristic_polynomial(self):
        assert characteristic_polynomial(SHRIKHANDE_INDEPENDENT) == [1, -4, -12]

    def test_spectrum(self, ternary_plane):
        spectrum = quotient_eigenvalues(EXTENDED_TERNARY_PLANE, ternary_plane)
        assert spectrum == SpectrumInfo((4, 1, -2), (1, 1, 1))
        assert spectrum.principal == 4
        assert spectrum.nontrivial == (1, -2)

    def test_repeated_eigenvalue(self, shrikhande):
        # cosets of 2Z_4^2: the subgroup, the two axis cosets, the diagonal coset
        S = QuotientMatrix.from_rows([[0, 4, 2], [2, 2, 2], [2, 4, 0]])
        assert quotient_eigenvalues(S, shrikhande) == SpectrumInfo((6, -2), (1, 2))
        assert class_sizes(S, shrikhande).as_ints() == (4, 8, 4)

    def test_eigenvalue_outside_the_graph_spectrum(self, ternary_plane):
        result = quotient_eigenvalues(QuotientMatrix.from_rows([[2, 2], [2, 2]]), ternary_plane)
        assert isinstance(result, Lemma2Violation)
        assert result.eigenvalues == (4,)
        assert result.residue == ("x",)

    def test_integer_root_outside_the_spectrum(self, ternary_plane):
        result = quotient_eigenvalues(QuotientMatrix.from_rows([[1, 3], [2, 2]]), ternary_plane)
        assert isinstance(result, Lemma2Violation)
        assert "x" in result.witness


class TestClassSizes:
    def test_extended_matrix(self, ternary_plane):
        sizes = class_sizes(EXTENDED_TERNARY_PLANE, ternary_plane)
        assert isinstance(sizes, ClassSizes)
        assert sizes.as_ints() == (1, 4, 4)
        assert sizes.densities == (Fraction(1, 9), Fraction(4, 9), Fraction(4, 9))

    def test_huge_graph(self):
        g = GraphSpec.doob(11, 0)
        sizes = class_sizes(QuotientMatrix.from_rows([[0, 66, 0], [1, 2, 63], [0, 22, 44]]), g)
        assert sizes.densities == (Fraction(1, 256), Fraction(66, 256), Fraction(189, 256))
        assert sizes.sizes[0] == ScaledRational.power(4, 18)

    def test_not_an_integer(self, ternary_plane):
        sizes = class_sizes(QuotientMatrix.from_rows([[1, 3], [1, 3]]), ternary_plane)
        assert isinstance(sizes, Infeasible)
        assert sizes.reason == "class size is not an integer"
        assert sizes.color == 0

    def test_unbalanced(self, ternary_plane):
        sizes = class_sizes(QuotientMatrix.from_rows([[0, 3, 1], [1, 0, 3], [3, 1, 0]]), ternary_plane)
        assert isinstance(sizes, Infeasible)
        assert "balance" in sizes.reason

    def test_disconnected_support(self, ternary_plane):
        with pytest.raises(UnderdeterminedError):
            class_sizes(QuotientMatrix.from_rows([[4, 0], [1, 3]]), ternary_plane)


class TestInnerProducts:
    def test_power_diagonal(self):
        assert power_diagonal(SHRIKHANDE_INDEPENDENT, 0, 3) == [1, 0, 12, 48]
        check_cayley_hamilton(SHRIKHANDE_INDEPENDENT, 0, 8)
        check_cayley_hamilton(EXTENDED_TERNARY_PLANE, 2, 8)

    def test_shrikhande_coloring(self, shrikhande):
        f = shrikhande_independent_coloring(shrikhande)
        assert lemma1_inner_product(shrikhande, f, 0, 2) == 12 * 4
        assert lemma1_violations(f, SHRIKHANDE_INDEPENDENT, 4) == []

    def test_distance_coloring(self):
        f = distance_coloring(repetition_code(4, 2))
        S = QuotientMatrix.from_rows([[0, 4, 0], [1, 0, 3], [0, 4, 0]])
        assert lemma1_violations(f, S, 5) == []

    def test_wrong_matrix_is_caught(self, shrikhande):
        f = shrikhande_independent_coloring(shrikhande)
        wrong = QuotientMatrix.from_rows([[2, 4], [2, 4]])
        assert (0, 1) in lemma1_violations(f, wrong, 2)

    def test_mapping_and_array_forms_agree(self, ternary_plane):
        C = Code.from_words(ternary_plane, [(0, 0), (1, 2)])
        vec = {w: 1 for w in C.words}
        array = np.zeros(ternary_plane.vertex_count, dtype=np.int64)
        array[C.indices()] = 1
        by_mapping = apply_adjacency(ternary_plane, vec)
        by_array = apply_adjacency_array(ternary_plane, array)
        assert all(by_array[vertex_index(ternary_plane, v)] == value for v, value in by_mapping.items())
        assert by_mapping[(0, 2)] == 2
