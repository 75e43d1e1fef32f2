from dataclasses import dataclass, field
from typing import Optional, Union

from rich.markup import escape
from rich.table import Table

from src.core.enums import CheckName, ShellCoefficient, Verdict
from src.formats.files import format_graph_spec
from src.graph.graph import GraphSpec
from src.spectra.matrix import QuotientMatrix
from src.spectra.quotient import ClassSizes, Infeasible, Lemma2Violation, SpectrumInfo


@dataclass(frozen=True)
class CheckVerdict:
    name: CheckName
    status: Verdict
    witness: str = ""
    color: Optional[int] = None

    @property
    def failed(self) -> bool:
        return self.status == Verdict.failed

    def label(self) -> str:
        if self.color is None:
            return self.name.value
        return f"{self.name.value} (colour {self.color})"

    def to_dict(self) -> dict:
        result = {"name": self.name.value, "verdict": self.status.value, "witness": self.witness}
        if self.color is not None:
            result["color"] = self.color
        return result


@dataclass
class ShellTable:
    """Shell counts W^i_j around a colour-2 base vertex.

    ``edges`` is the number of edges from the first shell into W^1_2.
    """

    entries: dict = field(default_factory=dict)
    edges: Optional[int] = None

    def __getitem__(self, key) -> int:
        return self.entries[key]

    def __contains__(self, key) -> bool:
        return key in self.entries

    def to_dict(self) -> dict:
        result = {f"W^{i}_{j}": value for (i, j), value in sorted(self.entries.items())}
        if self.edges is not None:
            result["w"] = self.edges
        return result


@dataclass
class FeasibilityReport:
    """Verdicts of every necessary-condition check run on one quotient matrix.

    ``a_values`` maps a colour to a_1..a_l as multiples of |V(G)|, in the order
    of the non-principal eigenvalues.
    """

    graph: GraphSpec
    matrix: QuotientMatrix
    colors: tuple
    shell_coefficient: ShellCoefficient = ShellCoefficient.intersection
    spectrum: Union[SpectrumInfo, Lemma2Violation, None] = None
    sizes: Union[ClassSizes, Infeasible, None] = None
    densities: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    shell_table: Optional[ShellTable] = None

    @property
    def color(self) -> Optional[int]:
        return self.colors[0] if len(self.colors) == 1 else None

    @property
    def a_values(self) -> dict:
        return {
            color: tuple(self.graph.volume.scale(rho) for rho in rhos)
            for color, rhos in self.densities.items()
        }

    def a_times_volume(self, color: int) -> tuple:
        """a_j * |V(G)| for every non-principal eigenvalue."""
        square = self.graph.volume * self.graph.volume
        return tuple(square.scale(rho) for rho in self.densities.get(color, ()))

    @property
    def passed(self) -> bool:
        return not any(check.failed for check in self.checks)

    @property
    def first_failure(self) -> Optional[CheckVerdict]:
        return next((check for check in self.checks if check.failed), None)

    def verdicts(self, name: CheckName) -> list:
        return [check for check in self.checks if check.name == name]

    def verdict(self, name: CheckName, color: Optional[int] = None) -> CheckVerdict:
        for check in self.checks:
            if check.name == name and (color is None or check.color == color):
                return check
        raise KeyError(f"No {name.value} verdict for colour {color}")

    def eigenvalues(self) -> tuple:
        return self.spectrum.eigenvalues if self.spectrum is not None else ()

    def multiplicities(self) -> tuple:
        return self.spectrum.multiplicities if self.spectrum is not None else ()

    def to_dict(self, max_digits: int = 60) -> dict:
        class_sizes = None
        if isinstance(self.sizes, ClassSizes):
            class_sizes = [size.format(max_digits) for size in self.sizes.sizes]
        return {
            "graph": format_graph_spec(self.graph),
            "matrix": self.matrix.to_dict(),
            "eigenvalues": list(self.eigenvalues()),
            "multiplicities": list(self.multiplicities()),
            "class_sizes": class_sizes,
            "a_values": {
                str(color): [value.format(max_digits) for value in values]
                for color, values in self.a_values.items()
            },
            "a_times_V": {
                str(color): [value.format(max_digits) for value in self.a_times_volume(color)]
                for color in self.densities
            },
            "shell_coefficient": self.shell_coefficient.value,
            "checks": [check.to_dict() for check in self.checks],
            "shell_table": self.shell_table.to_dict() if self.shell_table else None,
        }


def render_report(report: FeasibilityReport, max_digits: int = 60) -> list:
    """Rich tables for the text output of a report."""
    summary = Table(title=f"Quotient matrix {report.matrix} on {report.graph}")
    summary.add_column("quantity")
    summary.add_column("value")
    summary.add_row("eigenvalues", ", ".join(str(v) for v in report.eigenvalues()) or "-")
    summary.add_row("multiplicities", ", ".join(str(v) for v in report.multiplicities()) or "-")
    if isinstance(report.sizes, ClassSizes):
        summary.add_row("class sizes", ", ".join(s.format(max_digits) for s in report.sizes.sizes))
    for color, values in report.a_values.items():
        summary.add_row(f"a_j, colour {color}", ", ".join(v.format(max_digits) for v in values) or "-")
    if report.shell_table is not None:
        for key, value in report.shell_table.to_dict().items():
            summary.add_row(key, str(value))

    checks = Table(title="Checks")
    checks.add_column("check")
    checks.add_column("verdict")
    checks.add_column("witness")
    styles = {Verdict.passed: "green", Verdict.failed: "bold red", Verdict.not_applicable: "yellow"}
    for check in report.checks:
        checks.add_row(
            check.label(), f"[{styles[check.status]}]{check.status.value}[/{styles[check.status]}]", escape(check.witness)
        )
    return [summary, checks]
