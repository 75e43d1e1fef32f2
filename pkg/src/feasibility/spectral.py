from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.core.enums import CheckName, GraphFamily, Verdict
from src.core.exceptions import ConsistencyError
from src.feasibility.report import CheckVerdict
from src.graph.graph import GraphSpec
from src.spectra.matrix import QuotientMatrix
from src.spectra.quotient import SpectrumInfo, power_diagonal

# Hamming alphabets for which a_j * |V(G)| is known to be an integer
INTEGRAL_ALPHABETS = (2, 3, 4)


def integrality_applies(g: GraphSpec) -> bool:
    return g.family == GraphFamily.doob or g.q in INTEGRAL_ALPHABETS


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def eigenspace_densities(
    S: QuotientMatrix, spectrum: SpectrumInfo, density: Fraction, color: int
) -> tuple:
    """Solve the Vandermonde system for rho_j = a_j / |V(G)|.

    Row t reads sum_j lambda_j^t rho_j = sigma s^t_ii - sigma^2 lambda_0^t, where
    sigma is the density of colour class i. The solution is re-substituted.
    """
    eigenvalues = spectrum.nontrivial
    l = len(eigenvalues)
    if l == 0:
        return ()
    diagonal = power_diagonal(S, color, l - 1)
    principal = spectrum.principal
    rows = [[value**t for value in eigenvalues] for t in range(l)]
    rhs = [density * diagonal[t] - density**2 * principal**t for t in range(l)]

    system = DomainMatrix.from_list(rows, QQ)
    column = DomainMatrix([[QQ(value.numerator, value.denominator)] for value in rhs], (l, 1), QQ)
    solution = [_to_fraction(row[0]) for row in system.lu_solve(column).to_list()]

    for t in range(l):
        if sum(rows[t][j] * solution[j] for j in range(l)) != rhs[t]:
            raise ConsistencyError(f"Eigenspace system row {t} fails re-substitution for colour {color}")
    return tuple(solution)


def theorem1_verdicts(g: GraphSpec, densities: tuple, color: int) -> list:
    """Non-negativity and integrality of a_j * |V(G)| for one colour."""
    if not densities:
        witness = "S has a single eigenvalue"
        return [
            CheckVerdict(CheckName.theorem1_nonneg, Verdict.passed, witness, color),
            CheckVerdict(CheckName.theorem1_integrality, Verdict.passed, witness, color),
        ]

    square = g.volume * g.volume
    verdicts = []
    negative = next((j for j, rho in enumerate(densities, start=1) if rho < 0), None)
    if negative is None:
        verdicts.append(CheckVerdict(CheckName.theorem1_nonneg, Verdict.passed, "", color))
    else:
        value = g.volume.scale(densities[negative - 1])
        verdicts.append(
            CheckVerdict(CheckName.theorem1_nonneg, Verdict.failed, f"a_{negative} = {value}", color)
        )

    if not integrality_applies(g):
        verdicts.append(
            CheckVerdict(
                CheckName.theorem1_integrality,
                Verdict.not_applicable,
                f"q={g.q} is outside {{2,3,4}}",
                color,
            )
        )
        return verdicts

    for j, rho in enumerate(densities, start=1):
        scaled = square.scale(rho)
        if not scaled.is_integer():
            verdicts.append(
                CheckVerdict(CheckName.theorem1_integrality, Verdict.failed, f"a_{j}*|V| = {scaled}", color)
            )
            return verdicts
    verdicts.append(CheckVerdict(CheckName.theorem1_integrality, Verdict.passed, "", color))
    return verdicts
