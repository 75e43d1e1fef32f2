import pytest

from src.codes.construction import hexacode, shrikhande_independent_coloring
from src.core.exceptions import InputError
from src.formats.files import (
    format_graph_spec,
    format_vertex,
    parse_graph_spec,
    parse_vertex,
    read_code,
    read_coloring,
    read_matrix,
    write_code,
    write_coloring,
    write_matrix,
)
from src.graph.graph import GraphSpec
from src.spectra.matrix import QuotientMatrix


class TestGraphSpecText:
    def test_parse(self):
        assert parse_graph_spec("hamming:n=5,q=3") == GraphSpec.hamming(5, 3)
        assert parse_graph_spec(" doob:m=2, n=1 ") == GraphSpec.doob(2, 1)
        assert parse_graph_spec("doob:m=0,n=3") == GraphSpec.hamming(3, 4)
        assert format_graph_spec(GraphSpec.doob(2, 1)) == "doob:m=2,n=1"

    @pytest.mark.parametrize("text", ["hamming:n=0,q=3", "hamming:n=3,q=1", "doob:m=-1,n=2", "H(3,3)", "hamming:q=3,n=5"])
    def test_rejects(self, text):
        with pytest.raises(InputError):
            parse_graph_spec(text)


class TestVertexText:
    def test_hamming(self):
        g = GraphSpec.hamming(4, 2)
        assert parse_vertex(g, "0101") == (0, 1, 0, 1)
        assert parse_vertex(g, "0 1 0 1") == (0, 1, 0, 1)
        assert format_vertex(g, (0, 1, 0, 1)) == "0 1 0 1"

    def test_doob(self):
        g = GraphSpec.doob(1, 2)
        assert parse_vertex(g, "1,2 3 0") == (1, 2, 3, 0)
        assert format_vertex(g, (1, 2, 3, 0)) == "1,2 3 0"

    @pytest.mark.parametrize("text", ["1 2 3", "1,2,3 0 0", "a,b 0 0", "1,2 0"])
    def test_rejects(self, text):
        with pytest.raises(InputError):
            parse_vertex(GraphSpec.doob(1, 2), text)


class TestFiles:
    def test_shipped_inputs(self, input_file):
        C = read_code(input_file("repetition_h42.txt"))
        assert C.words == {(0, 0, 0, 0), (1, 1, 1, 1)}
        f = read_coloring(input_file("shrikhande_even.txt"))
        assert (f.colors == shrikhande_independent_coloring(GraphSpec.doob(1, 0)).colors).all()
        assert read_matrix(input_file("ext_doob_22.json")) == QuotientMatrix.from_rows(
            [[0, 66, 0], [1, 2, 63], [0, 22, 44]]
        )

    def test_code_file(self, tmp_path):
        path = str(tmp_path / "hexacode.txt")
        write_code(path, hexacode())
        assert read_code(path) == hexacode()

    def test_coloring_file(self, tmp_path):
        f = shrikhande_independent_coloring(GraphSpec.doob(1, 0))
        path = str(tmp_path / "coloring.txt")
        write_coloring(path, f)
        assert (read_coloring(path).colors == f.colors).all()

    def test_matrix_file(self, tmp_path):
        path = str(tmp_path / "matrix.json")
        S = QuotientMatrix.from_rows([[0, 6], [2, 4]])
        write_matrix(path, S)
        assert read_matrix(path) == S

    @pytest.mark.parametrize(
        "content",
        ['{"k": 2, "rows": [[0, 6]]}', '{"k": 2, "rows": [[0, 6], [2]]}', "[[0, 6], [2, 4]]", "not json"],
    )
    def test_bad_matrix(self, tmp_path, content):
        path = tmp_path / "matrix.json"
        path.write_text(content)
        with pytest.raises(InputError):
            read_matrix(str(path))

    def test_conflicting_colours(self, tmp_path):
        path = tmp_path / "coloring.txt"
        path.write_text("hamming:n=1,q=2\n0 : 0\n1 : 1\n1 : 0\n")
        with pytest.raises(InputError):
            read_coloring(str(path))

    def test_partial_coloring(self, tmp_path):
        path = tmp_path / "coloring.txt"
        path.write_text("hamming:n=2,q=2\n00 : 0\n01 : 1\n")
        with pytest.raises(InputError):
            read_coloring(str(path))

    def test_missing_and_empty(self, tmp_path):
        with pytest.raises(InputError):
            read_code(str(tmp_path / "missing.txt"))
        path = tmp_path / "empty.txt"
        path.write_text("# nothing here\n\n")
        with pytest.raises(InputError):
            read_code(str(path))
