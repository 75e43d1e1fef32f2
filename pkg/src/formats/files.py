import json
import os
import re
from typing import Iterator, Tuple

from pydantic import ValidationError

from src.codes.code import Code, Coloring
from src.core.exceptions import InputError
from src.graph.graph import GraphSpec, Vertex, as_vertex, enumerate_vertices
from src.spectra.matrix import QuotientMatrix
from src.utils.utils import make_dir

GRAPH_SPEC_PATTERNS = {
    "hamming": re.compile(r"^hamming:n=(?P<n>-?\d+),q=(?P<q>-?\d+)$"),
    "doob": re.compile(r"^doob:m=(?P<m>-?\d+),n=(?P<n>-?\d+)$"),
}


def parse_graph_spec(text: str) -> GraphSpec:
    """Parse ``hamming:n=<int>,q=<int>`` or ``doob:m=<int>,n=<int>``."""
    text = text.strip().replace(" ", "")
    for family, pattern in GRAPH_SPEC_PATTERNS.items():
        match = pattern.match(text)
        if match is None:
            continue
        values = {key: int(value) for key, value in match.groupdict().items()}
        try:
            return GraphSpec(family=family, **values)
        except ValidationError as e:
            raise InputError(f"Invalid graph spec {text!r}: {e.errors()[0]['msg']}")
    raise InputError(
        f"Cannot parse graph spec {text!r}, expected hamming:n=<int>,q=<int> or doob:m=<int>,n=<int>"
    )


def format_graph_spec(g: GraphSpec) -> str:
    if g.is_doob:
        return f"doob:m={g.m},n={g.n}"
    return f"hamming:n={g.n},q={g.q}"


def parse_vertex(g: GraphSpec, text: str) -> Vertex:
    """Parse a vertex: Doob pairs as ``a,b`` tokens first, then single symbols.

    A Hamming vertex may also be written without separators, e.g. ``0101``.
    """
    tokens = text.split()
    if not g.is_doob and len(tokens) == 1 and g.n > 1 and tokens[0].isdigit() and g.q <= 10:
        tokens = list(tokens[0])
    expected = g.m + g.n
    if len(tokens) != expected:
        raise InputError(f"Vertex {text!r} has {len(tokens)} coordinates, {g} needs {expected}")
    symbols = []
    try:
        for position, token in enumerate(tokens):
            if position < g.m:
                parts = token.split(",")
                if len(parts) != 2:
                    raise InputError(f"Shrikhande coordinate {token!r} in {text!r} is not a pair a,b")
                symbols.append((int(parts[0]), int(parts[1])))
            else:
                symbols.append(int(token))
    except ValueError:
        raise InputError(f"Vertex {text!r} has a non-integer symbol")
    return as_vertex(g, symbols)


def format_vertex(g: GraphSpec, v: Vertex) -> str:
    v = as_vertex(g, v)
    pairs = [f"{v[2 * p]},{v[2 * p + 1]}" for p in range(g.m)]
    return " ".join(pairs + [str(x) for x in v[2 * g.m :]])


def _data_lines(path: str) -> Iterator[Tuple[int, str]]:
    if not os.path.isfile(path):
        raise InputError(f"File {path} does not exist")
    with open(path, encoding="utf-8") as stream:
        for number, line in enumerate(stream, start=1):
            line = line.split("#", 1)[0].strip()
            if line:
                yield number, line


def read_code(path: str) -> Code:
    """Read a code file: a graph spec line, then one codeword per line."""
    lines = _data_lines(path)
    try:
        _, header = next(lines)
    except StopIteration:
        raise InputError(f"Code file {path} is empty")
    g = parse_graph_spec(header)
    return Code.from_words(g, [parse_vertex(g, line) for _, line in lines])


def write_code(path: str, C: Code) -> None:
    make_dir(os.path.dirname(path))
    with open(path, "w", encoding="utf-8") as stream:
        stream.write(format_graph_spec(C.graph) + "\n")
        for word in C.sorted_words():
            stream.write(format_vertex(C.graph, word) + "\n")


def read_coloring(path: str) -> Coloring:
    """Read a coloring file: a graph spec line, then ``vertex : colour`` lines."""
    lines = _data_lines(path)
    try:
        _, header = next(lines)
    except StopIteration:
        raise InputError(f"Coloring file {path} is empty")
    g = parse_graph_spec(header)
    mapping = {}
    for number, line in lines:
        if ":" not in line:
            raise InputError(f"{path}:{number}: expected 'vertex : colour', got {line!r}")
        vertex_text, color_text = line.rsplit(":", 1)
        vertex = parse_vertex(g, vertex_text)
        try:
            color = int(color_text)
        except ValueError:
            raise InputError(f"{path}:{number}: colour {color_text.strip()!r} is not an integer")
        if mapping.get(vertex, color) != color:
            raise InputError(f"{path}:{number}: vertex {vertex} is coloured twice")
        mapping[vertex] = color
    return Coloring.from_mapping(g, mapping)


def write_coloring(path: str, f: Coloring) -> None:
    make_dir(os.path.dirname(path))
    with open(path, "w", encoding="utf-8") as stream:
        stream.write(format_graph_spec(f.graph) + "\n")
        for index, vertex in enumerate(enumerate_vertices(f.graph)):
            stream.write(f"{format_vertex(f.graph, vertex)} : {int(f.colors[index])}\n")


def read_matrix(path: str) -> QuotientMatrix:
    if not os.path.isfile(path):
        raise InputError(f"File {path} does not exist")
    with open(path, encoding="utf-8") as stream:
        text = stream.read()
    try:
        return QuotientMatrix.model_validate_json(text)
    except ValidationError as e:
        raise InputError(f"Invalid quotient matrix file {path}: {e.errors()[0]['msg']}")


def write_matrix(path: str, S: QuotientMatrix) -> None:
    make_dir(os.path.dirname(path))
    with open(path, "w", encoding="utf-8") as stream:
        json.dump(S.to_dict(), stream)
        stream.write("\n")
