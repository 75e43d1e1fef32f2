from enum import Enum


class GraphFamily(str, Enum):
    """Graph families the analyzer models."""

    hamming = "hamming"
    doob = "doob"


class Verdict(str, Enum):
    """Outcome of a single necessary-condition check."""

    passed = "pass"
    failed = "fail"
    not_applicable = "not-applicable"


class CheckName(str, Enum):
    """Checks of the feasibility pipeline, in the order they run."""

    lemma2 = "lemma2"
    class_sizes = "class_sizes"
    theorem1_nonneg = "theorem1_nonneg"
    theorem1_integrality = "theorem1_integrality"
    parity = "parity"
    shell_count = "shell_count"


class ShellCoefficient(str, Enum):
    """Coefficient of |W^0_2| in the colour-0 edge count of the shell argument."""

    intersection = "intersection"
    literal = "literal"


class ReportFormat(str, Enum):
    """Output formats of the CLI reports."""

    json = "json"
    text = "text"


class CodeExpectation(str, Enum):
    """Properties verify-code can be asked to confirm."""

    extended_perfect = "extended-perfect"
    perfect = "perfect"
    completely_regular = "completely-regular"
