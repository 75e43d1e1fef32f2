from typing import Iterable, Optional

from src.config.config import Config
from src.core.enums import CheckName, ShellCoefficient, Verdict
from src.core.exceptions import InputError
from src.feasibility.report import CheckVerdict, FeasibilityReport, ShellTable
from src.feasibility.shell import parity_check, shell_count_check
from src.feasibility.spectral import eigenspace_densities, theorem1_verdicts
from src.graph.graph import GraphSpec
from src.spectra.matrix import QuotientMatrix
from src.spectra.quotient import ClassSizes, Lemma2Violation, class_sizes, quotient_eigenvalues


def _not_applicable(name: CheckName, reason: str, color: Optional[int] = None) -> CheckVerdict:
    return CheckVerdict(name, Verdict.not_applicable, reason, color)


class FeasibilityPipeline:
    """Runs the necessary conditions on a quotient matrix in a fixed order.

    lemma2, class_sizes, theorem1 (per colour), parity, shell_count. Every
    verdict is kept in the report.
    """

    def __init__(
        self,
        g: GraphSpec,
        S: QuotientMatrix,
        shell_coefficient: Optional[ShellCoefficient] = None,
        config: Optional[Config] = None,
    ):
        S.check_row_sums(g.degree)
        self.g = g
        self.S = S
        if shell_coefficient is None:
            shell_coefficient = (config or Config()).shell_coefficient
        self.shell_coefficient = shell_coefficient

    def colors(self, colors: Optional[Iterable[int]]) -> tuple:
        if colors is None:
            return tuple(range(self.S.k))
        colors = tuple(colors)
        for color in colors:
            if not 0 <= color < self.S.k:
                raise InputError(f"Colour {color} is outside 0..{self.S.k - 1}")
        return colors

    def run(self, colors: Optional[Iterable[int]] = None, structural: bool = True) -> FeasibilityReport:
        report = FeasibilityReport(self.g, self.S, self.colors(colors), self.shell_coefficient)
        self.check_spectrum(report)
        self.check_class_sizes(report)
        self.check_eigenspaces(report)
        if structural:
            self.check_shells(report)
        else:
            reason = "restricted to the eigenvalue checks"
            report.checks.append(_not_applicable(CheckName.parity, reason))
            report.checks.append(_not_applicable(CheckName.shell_count, reason))
        return report

    def check_spectrum(self, report: FeasibilityReport) -> None:
        spectrum = quotient_eigenvalues(self.S, self.g)
        report.spectrum = spectrum
        if isinstance(spectrum, Lemma2Violation):
            report.checks.append(
                CheckVerdict(
                    CheckName.lemma2,
                    Verdict.failed,
                    f"factors without eigenvalues of {self.g}: {spectrum.witness}",
                )
            )
        else:
            report.checks.append(
                CheckVerdict(CheckName.lemma2, Verdict.passed, ", ".join(str(v) for v in spectrum.eigenvalues))
            )

    def check_class_sizes(self, report: FeasibilityReport) -> None:
        sizes = class_sizes(self.S, self.g)
        report.sizes = sizes
        if isinstance(sizes, ClassSizes):
            report.checks.append(
                CheckVerdict(CheckName.class_sizes, Verdict.passed, ", ".join(str(s) for s in sizes.sizes))
            )
        else:
            report.checks.append(
                CheckVerdict(CheckName.class_sizes, Verdict.failed, f"{sizes.reason}: {sizes.witness}", sizes.color)
            )

    def check_eigenspaces(self, report: FeasibilityReport) -> None:
        reason = None
        if isinstance(report.spectrum, Lemma2Violation):
            reason = "S has eigenvalues outside the graph spectrum"
        elif not isinstance(report.sizes, ClassSizes):
            reason = "class sizes are infeasible"
        for color in report.colors:
            if reason is not None:
                report.checks.append(_not_applicable(CheckName.theorem1_nonneg, reason, color))
                report.checks.append(_not_applicable(CheckName.theorem1_integrality, reason, color))
                continue
            densities = eigenspace_densities(self.S, report.spectrum, report.sizes.densities[color], color)
            report.densities[color] = densities
            report.checks.extend(theorem1_verdicts(self.g, densities, color))

    def check_shells(self, report: FeasibilityReport) -> None:
        parity, parity_table = parity_check(self.S)
        shell, shell_table = shell_count_check(self.g, self.S, self.shell_coefficient, parity)
        report.checks.append(parity)
        report.checks.append(shell)
        if parity_table.entries or shell_table.entries:
            table = ShellTable({**parity_table.entries, **shell_table.entries}, shell_table.edges)
            report.shell_table = table


def run_pipeline(
    g: GraphSpec,
    S: QuotientMatrix,
    colors: Optional[Iterable[int]] = None,
    shell_coefficient: Optional[ShellCoefficient] = None,
    config: Optional[Config] = None,
) -> FeasibilityReport:
    """Run every necessary condition on S over ``g`` for the given colours (default all)."""
    return FeasibilityPipeline(g, S, shell_coefficient, config).run(colors)


def theorem1_check(g: GraphSpec, S: QuotientMatrix, i: int) -> FeasibilityReport:
    """The eigenvalue checks for colour ``i``: lemma2, class sizes, non-negativity and integrality of a_j."""
    return FeasibilityPipeline(g, S).run([i], structural=False)
