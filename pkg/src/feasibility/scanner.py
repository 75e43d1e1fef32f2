from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from tqdm import tqdm

from src.codes.parameters import admissible_extended_params, extended_perfect_matrix
from src.config.config import Config
from src.core.config import settings
from src.core.enums import CheckName, GraphFamily, ShellCoefficient, Verdict
from src.core.exceptions import ConsistencyError, InputError
from src.feasibility.pipeline import run_pipeline
from src.feasibility.report import FeasibilityReport
from src.feasibility.shell import parity_check
from src.graph.graph import GraphSpec
from src.spectra.exact import ScaledRational
from src.utils.utils import timing

PASS_TEXT = "passes all necessary conditions"


@dataclass
class ScanRow:
    """One extended-code parameter set and the verdict of the pipeline on it.

    ``length`` is n for Hamming graphs and 2m+n for Doob graphs. A passing row
    only means no implemented necessary condition rules the code out.
    """

    l: int
    length: int
    cardinality: ScaledRational
    report: Optional[FeasibilityReport]
    verdict: str

    @property
    def passed(self) -> bool:
        return self.report is not None and self.report.passed

    def to_dict(self, max_digits: int = 60) -> dict:
        first = self.report.first_failure if self.report is not None else None
        return {
            "l": self.l,
            "length": self.length,
            "cardinality": self.cardinality.format(max_digits),
            "verdict": self.verdict,
            "first_failure": first.to_dict() if first else None,
            "shell_table": self.report.shell_table.to_dict()
            if self.report is not None and self.report.shell_table is not None
            else None,
        }


def _family_alphabet(family: GraphFamily, q: Optional[int]) -> int:
    if family == GraphFamily.doob:
        if q not in (None, 4):
            raise InputError(f"Doob graphs are over Z_4, got q={q}")
        return 4
    if q is None or q < 2:
        raise InputError(f"Scanning Hamming graphs needs q >= 2, got {q}")
    return q


def prop1_closed_form(family: GraphFamily, l: int, q: Optional[int] = None) -> ScaledRational:
    """Closed form of a_2 * |V(G)| for colour 0 of an extended-perfect matrix.

    Ternary: 3^(2n-l-3) * 8 / (3^(l-1) + 1).
    Doob and quaternary: 4^(2(2m+n)-l-3) * 27 / (4^(l-1) + 2).
    """
    q = _family_alphabet(family, q)
    if q not in (3, 4):
        raise InputError(f"No closed form for a_2 over q={q}")
    params = admissible_extended_params(family, l, q)
    if params is None:
        raise InputError(f"l={l} is not admissible for q={q}")
    length = params.length
    if q == 3:
        return ScaledRational(Fraction(8, 3 ** (l - 1) + 1), 3, 2 * length - l - 3)
    return ScaledRational(Fraction(27, 4 ** (l - 1) + 2), 4, 2 * length - l - 3)


def describe(report: FeasibilityReport) -> str:
    first = report.first_failure
    if first is None:
        return PASS_TEXT
    return f"{first.label()} fails: {first.witness}"


def scan_row(
    family: GraphFamily, l: int, q: Optional[int] = None, shell_coefficient: Optional[ShellCoefficient] = None
) -> ScanRow:
    q = _family_alphabet(family, q)
    params = admissible_extended_params(family, l, q)
    if params is None:
        return ScanRow(l, 0, ScaledRational.power(q, 0), None, f"(q^{l}+q-2) is not divisible by q-1")
    g = params.graph()
    report = run_pipeline(g, extended_perfect_matrix(g), shell_coefficient=shell_coefficient)

    if q in (3, 4) and 0 in report.densities:
        closed = prop1_closed_form(family, l, q)
        computed = report.a_times_volume(0)[-1]
        if computed != closed:
            raise ConsistencyError(f"a_2*|V| = {computed} differs from the closed form {closed} at l={l}")
    return ScanRow(l, params.length, params.cardinality, report, describe(report))


@timing
def scan_extended(
    family: GraphFamily,
    q: Optional[int] = None,
    l_values: Iterable[int] = range(1, 9),
    shell_coefficient: Optional[ShellCoefficient] = None,
) -> list:
    """Run the pipeline on the extended-perfect matrix for every l in ``l_values``."""
    q = _family_alphabet(family, q)
    if shell_coefficient is None:
        shell_coefficient = Config().shell_coefficient
    rows = []
    for l in tqdm(list(l_values), desc=f"Scanning {family.value} q={q}", unit=" l", disable=not settings.SHOW_PROGRESS):
        rows.append(scan_row(family, l, q, shell_coefficient))
    return rows


def mds_distance4_excluded(q: int) -> bool:
    """Whether parity rules out an MDS code of distance 4 in H(q+2,q).

    Such a code is extended 1-perfect with l = 2, and its matrix has s_21 = q+2.
    """
    g = GraphSpec.hamming(q + 2, q)
    verdict, _ = parity_check(extended_perfect_matrix(g))
    return verdict.status == Verdict.failed


def excluded_by_parity(q: int, l: int) -> bool:
    """Whether parity excludes extended codes with index ``l`` over q.

    For odd q the length is 1 + (1 + q + ... + q^(l-1)), which is odd exactly
    when l is even.
    """
    params = admissible_extended_params(GraphFamily.hamming, l, q)
    if params is None:
        return True
    verdict, _ = parity_check(extended_perfect_matrix(params.graph()))
    return verdict.status == Verdict.failed


def parity_failures(q: int, max_length: int) -> list:
    """Admissible odd lengths up to ``max_length`` and whether the pipeline rejects each by parity."""
    config = Config()
    results = []
    l = 1
    while True:
        params = admissible_extended_params(GraphFamily.hamming, l, q)
        if params is not None and params.length > max_length:
            break
        if params is not None and params.length % 2:
            report = run_pipeline(params.graph(), extended_perfect_matrix(params.graph()), config=config)
            results.append((params.length, report.verdict(CheckName.parity).status == Verdict.failed))
        l += 1
    return results
