import json
import math
from functools import wraps
from typing import Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from src.codes.code import (
    Counterexample,
    closest_pair,
    covering_radius,
    distance_coloring,
    is_1perfect,
    is_completely_regular,
    is_extended_1perfect,
    projection,
    verify_perfect_coloring,
)
from src.codes.parameters import extended_perfect_matrix
from src.config.config import Config
from src.core.enums import CodeExpectation, GraphFamily, ReportFormat, ShellCoefficient
from src.core.exceptions import BudgetExceededError, ConsistencyError, InputError
from src.feasibility.pipeline import run_pipeline
from src.feasibility.report import render_report
from src.feasibility.scanner import scan_extended as run_scan
from src.formats.files import (
    format_graph_spec,
    format_vertex,
    parse_graph_spec,
    read_code,
    read_coloring,
    read_matrix,
    write_coloring,
)
from src.oracle.fourier import oracle_report
from src.spectra.quotient import lemma1_violations
from src.utils.utils import print_error, print_info, print_separator_message, print_warning

app = typer.Typer()
output = Console()


def exit_codes(command):
    """Map the error taxonomy onto exit codes: 2 for input errors, 3 for budgets."""

    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except BudgetExceededError as e:
            print_error(str(e))
            raise typer.Exit(code=3)
        except (InputError, ValidationError) as e:
            print_error(str(e))
            raise typer.Exit(code=2)
        except ConsistencyError as e:
            print_error(f"Internal consistency check failed: {e}")
            raise typer.Exit(code=1)

    return wrapper


def resolve_format(report_format: Optional[ReportFormat], config: Config) -> ReportFormat:
    return report_format or config.report_format


def emit(data: dict, tables: list, report_format: ReportFormat) -> None:
    if report_format == ReportFormat.json:
        typer.echo(json.dumps(data, indent=2))
    else:
        for table in tables:
            output.print(table)


def key_value_table(title: str, data: dict) -> Table:
    table = Table(title=title)
    table.add_column("field")
    table.add_column("value")
    for key, value in data.items():
        table.add_row(str(key), json.dumps(value) if isinstance(value, (dict, list)) else str(value))
    return table


@app.command()
@exit_codes
def analyze(
    graph: str = typer.Option(..., "--graph", "-g", help="hamming:n=<int>,q=<int> or doob:m=<int>,n=<int>"),
    matrix: str = typer.Option(..., "--matrix", "-m", help="Quotient matrix file"),
    color: Optional[int] = typer.Option(None, "--color", "-c", help="Colour to analyse (default: all)"),
    report_format: Optional[ReportFormat] = typer.Option(None, "--format", "-f"),
    shell_coefficient: Optional[ShellCoefficient] = typer.Option(None, "--shell-coefficient"),
):
    """Run the necessary conditions on a quotient matrix."""
    config = Config()
    g = parse_graph_spec(graph)
    S = read_matrix(matrix)
    report = run_pipeline(g, S, None if color is None else [color], shell_coefficient, config)
    emit(
        report.to_dict(config.max_expanded_digits),
        render_report(report, config.max_expanded_digits),
        resolve_format(report_format, config),
    )
    if not report.passed:
        print_warning(f"{report.first_failure.label()} fails: {report.first_failure.witness}")
        raise typer.Exit(code=1)
    print_info("All necessary conditions pass")


@app.command("scan-extended")
@exit_codes
def scan_extended(
    family: GraphFamily = typer.Option(..., "--family"),
    q: Optional[int] = typer.Option(None, "--q"),
    lmax: Optional[int] = typer.Option(None, "--lmax"),
    lmin: Optional[int] = typer.Option(None, "--lmin"),
    report_format: Optional[ReportFormat] = typer.Option(None, "--format", "-f"),
    shell_coefficient: Optional[ShellCoefficient] = typer.Option(None, "--shell-coefficient"),
):
    """Check the parameters of extended 1-perfect codes for a range of l."""
    config = Config()
    lmin = config.lmin if lmin is None else lmin
    lmax = config.lmax if lmax is None else lmax
    if lmin < 1 or lmax < lmin:
        raise InputError(f"Need 1 <= lmin <= lmax, got lmin={lmin}, lmax={lmax}")

    print_separator_message(f"Scanning extended codes: {family.value}, q={q if q else 4}, l={lmin}..{lmax}")
    rows = run_scan(family, q, range(lmin, lmax + 1), shell_coefficient or config.shell_coefficient)

    table = Table(title="Extended 1-perfect code parameters")
    for column in ("l", "length", "|C|", "verdict"):
        table.add_column(column)
    for row in rows:
        table.add_row(str(row.l), str(row.length), row.cardinality.format(config.max_expanded_digits), row.verdict)
    emit(
        {"family": family.value, "q": q if family == GraphFamily.hamming else 4, "rows": [row.to_dict(config.max_expanded_digits) for row in rows]},
        [table],
        resolve_format(report_format, config),
    )


def _distance_text(value) -> object:
    return "inf" if value == math.inf else value


@app.command("verify-code")
@exit_codes
def verify_code(
    code: str = typer.Option(..., "--code", help="Code file"),
    expect: Optional[CodeExpectation] = typer.Option(None, "--expect"),
    report_format: Optional[ReportFormat] = typer.Option(None, "--format", "-f"),
    budget: Optional[int] = typer.Option(None, "--budget", envvar="ENUMERATION_BUDGET"),
    write_coloring_to: Optional[str] = typer.Option(None, "--write-coloring", help="Write the distance coloring here"),
):
    """Report distance, covering radius, projections and complete regularity of a code."""
    config = Config()
    C = read_code(code)
    g = C.graph
    pair = closest_pair(C)
    distance = math.inf if pair is None else pair[2]

    projections = {}
    for position in range(g.m + 1, g.m + g.n + 1):
        if g.length == 1:
            break
        projections[str(position)] = is_1perfect(projection(C, position), budget)

    quotient = is_completely_regular(C, budget)
    extended = is_extended_1perfect(C, budget)
    perfect = is_1perfect(C, budget)
    data = {
        "graph": format_graph_spec(g),
        "cardinality": len(C),
        "distance": _distance_text(distance),
        "closest_pair": [format_vertex(g, pair[0]), format_vertex(g, pair[1])] if pair else None,
        "covering_radius": covering_radius(C, budget),
        "perfect": perfect,
        "extended_perfect": extended,
        "projections_perfect": projections,
        "completely_regular": not isinstance(quotient, Counterexample),
        "quotient": str(quotient) if isinstance(quotient, Counterexample) else quotient.to_dict(),
        "extended_matrix": quotient == extended_perfect_matrix(g) if not isinstance(quotient, Counterexample) else False,
    }
    emit(data, [key_value_table(f"Code of {len(C)} words in {g}", data)], resolve_format(report_format, config))

    if write_coloring_to:
        write_coloring(write_coloring_to, distance_coloring(C, budget))
        print_info(f"Distance coloring written to {write_coloring_to}")

    if expect is not None:
        holds = {
            CodeExpectation.extended_perfect: extended,
            CodeExpectation.perfect: perfect,
            CodeExpectation.completely_regular: data["completely_regular"],
        }[expect]
        if not holds:
            print_warning(f"The code is not {expect.value}")
            raise typer.Exit(code=1)


@app.command("verify-coloring")
@exit_codes
def verify_coloring(
    coloring: str = typer.Option(..., "--coloring", help="Coloring file"),
    report_format: Optional[ReportFormat] = typer.Option(None, "--format", "-f"),
    budget: Optional[int] = typer.Option(None, "--budget", envvar="ENUMERATION_BUDGET"),
):
    """Check that a coloring is perfect and run the necessary conditions on its quotient matrix."""
    config = Config()
    f = read_coloring(coloring)
    result = verify_perfect_coloring(f, budget)
    if isinstance(result, Counterexample):
        data = {"graph": format_graph_spec(f.graph), "perfect": False, "counterexample": {
            "color": result.color,
            "vertices": [format_vertex(f.graph, result.first), format_vertex(f.graph, result.second)],
            "profiles": [list(result.first_profile), list(result.second_profile)],
        }}
        emit(data, [key_value_table(f"Coloring of {f.graph}", data)], resolve_format(report_format, config))
        print_warning(f"Not perfect: {result}")
        raise typer.Exit(code=1)

    report = run_pipeline(f.graph, result, config=config)
    if not report.passed:
        raise ConsistencyError(f"The quotient matrix of a perfect coloring fails {report.first_failure.label()}")
    violations = lemma1_violations(f, result, config.lemma1_max_power)
    if violations:
        raise ConsistencyError(f"Inner product identity fails for (colour, t) in {violations}")

    data = {"graph": format_graph_spec(f.graph), "perfect": True, "quotient": result.to_dict(),
            "class_sizes": list(f.class_sizes()), "feasibility": report.to_dict(config.max_expanded_digits)}
    emit(data, render_report(report, config.max_expanded_digits), resolve_format(report_format, config))


@app.command()
@exit_codes
def oracle(
    graph: str = typer.Option(..., "--graph", "-g"),
    coloring: str = typer.Option(..., "--coloring"),
    color: int = typer.Option(..., "--color", "-c"),
    report_format: Optional[ReportFormat] = typer.Option(None, "--format", "-f"),
):
    """Recompute eigenspace masses from character sums and compare them with the eigenvalue checks."""
    config = Config()
    g = parse_graph_spec(graph)
    f = read_coloring(coloring)
    if f.graph != g:
        raise InputError(f"The coloring file is on {f.graph}, not {g}")
    report = oracle_report(g, f, color)
    data = report.to_dict()
    table = Table(title=f"Eigenspace masses of colour {color} on {g}")
    for column in ("lambda", "mass", "mass*|V|", "matches"):
        table.add_column(column)
    for row in report.rows:
        table.add_row(str(row.value), str(row.mass), str(row.mass_times_volume), str(row.matches))
    emit(data, [table, key_value_table("Checks", {k: data[k] for k in ("parseval", "support", "value_form", "agrees")})],
         resolve_format(report_format, config))
    if not report.agrees:
        print_warning("Oracle masses disagree with the eigenvalue checks")
        raise typer.Exit(code=1)


if __name__ == "__main__":
    app()
