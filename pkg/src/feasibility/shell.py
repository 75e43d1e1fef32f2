from fractions import Fraction
from typing import Optional, Tuple

from src.core.enums import CheckName, ShellCoefficient, Verdict
from src.feasibility.report import CheckVerdict, ShellTable
from src.graph.graph import GraphSpec, intersection_array
from src.spectra.matrix import QuotientMatrix

# Coefficient of |W^0_2| used by the published counting argument
LITERAL_SHELL_COEFFICIENT = 6


def parity_check(S: QuotientMatrix) -> Tuple[CheckVerdict, ShellTable]:
    """|W^1_1| = s_21 must be even, since it equals twice |W^0_2|."""
    table = ShellTable()
    if not S.is_extended_shape():
        return CheckVerdict(CheckName.parity, Verdict.not_applicable, "S is not an extended-perfect shaped matrix"), table
    first_shell = S[2, 1]
    table.entries[(1, 1)] = first_shell
    if first_shell % 2:
        return CheckVerdict(CheckName.parity, Verdict.failed, f"W^1_1 = s_21 = {first_shell} is odd"), table
    table.entries[(0, 2)] = first_shell // 2
    return CheckVerdict(CheckName.parity, Verdict.passed, f"W^0_2 = {first_shell // 2}"), table


def shell_coefficient_value(g: GraphSpec, mode: ShellCoefficient) -> int:
    if mode == ShellCoefficient.literal:
        return LITERAL_SHELL_COEFFICIENT
    return intersection_array(g).a_at(2)


def _shell_failure(name: str, value: Fraction) -> Optional[str]:
    if value.denominator != 1:
        return f"{name} = {value} is not an integer"
    if value < 0:
        return f"{name} = {value} is negative"
    return None


def shell_count_check(
    g: GraphSpec,
    S: QuotientMatrix,
    mode: ShellCoefficient = ShellCoefficient.intersection,
    parity: Optional[CheckVerdict] = None,
) -> Tuple[CheckVerdict, ShellTable]:
    """Count the shells around a colour-2 base vertex up to W^0_3.

    W^1_1 = s_21, W^2_1 = s_22, W^0_2 = W^1_1 / c_2. The edges from the first
    shell into W^1_2 number w = W^1_1 s_11 + W^2_1 s_21 - a_1 W^1_1, so
    W^1_2 = w / c_2, and W^1_2 s_10 = A W^0_2 + c_3 W^0_3 gives W^0_3.
    """
    if parity is None:
        parity, _ = parity_check(S)
    table = ShellTable()
    if not S.is_extended_shape():
        return CheckVerdict(CheckName.shell_count, Verdict.not_applicable, "S is not an extended-perfect shaped matrix"), table
    if parity.status != Verdict.passed:
        return CheckVerdict(CheckName.shell_count, Verdict.not_applicable, "parity check did not pass"), table
    if g.diameter < 3:
        return CheckVerdict(CheckName.shell_count, Verdict.not_applicable, f"{g} has diameter {g.diameter} < 3"), table

    array = intersection_array(g)
    coefficient = shell_coefficient_value(g, mode)

    first_colour_one = S[2, 1]
    first_colour_two = S[2, 2]
    table.entries[(1, 1)] = first_colour_one
    table.entries[(2, 1)] = first_colour_two

    second_colour_zero = Fraction(first_colour_one, array.c_at(2))
    failure = _shell_failure("W^0_2", second_colour_zero)
    if failure:
        return CheckVerdict(CheckName.shell_count, Verdict.failed, failure), table
    table.entries[(0, 2)] = int(second_colour_zero)

    edges = first_colour_one * S[1, 1] + first_colour_two * S[2, 1] - array.a_at(1) * first_colour_one
    table.edges = edges
    second_colour_one = Fraction(edges, array.c_at(2))
    failure = _shell_failure("W^1_2", second_colour_one)
    if failure:
        return CheckVerdict(CheckName.shell_count, Verdict.failed, failure), table
    table.entries[(1, 2)] = int(second_colour_one)

    third_colour_zero = Fraction(
        table[(1, 2)] * S[1, 0] - coefficient * table[(0, 2)], array.c_at(3)
    )
    failure = _shell_failure("W^0_3", third_colour_zero)
    if failure:
        return CheckVerdict(CheckName.shell_count, Verdict.failed, f"{failure} (A = {coefficient})"), table
    table.entries[(0, 3)] = int(third_colour_zero)
    return CheckVerdict(CheckName.shell_count, Verdict.passed, f"W^0_3 = {table[(0, 3)]} (A = {coefficient})"), table
