import pytest

from rhocap.errors import InputError
from rhocap.formats import (
    format_family,
    format_graph,
    load_graph,
    parse_builtin,
    parse_family_text,
    parse_graph_text,
    parse_sizes,
)
from rhocap.graph import build_cycle, clique_union_sizes
from rhocap.independence import VertexFamily


def test_parse_sizes():
    assert parse_sizes("1,2") == [1, 2]
    assert parse_sizes("12x2,6x8") == [2] * 12 + [8] * 6
    for bad in ("", "1,,2", "0", "ax2", "2x-1"):
        with pytest.raises(InputError):
            parse_sizes(bad)


def test_builtins():
    assert sorted(parse_builtin("C5").edges()) == sorted(build_cycle(5).edges())
    assert parse_builtin("K4").num_edges == 6
    g = parse_builtin("K4-K2")
    assert g.n == 4 and g.num_edges == 5
    assert clique_union_sizes(parse_builtin("U:3x4")) == [4, 4, 4]
    assert parse_builtin("pentagon") is None


def test_graph_text_round_trip():
    g = build_cycle(7)
    h = parse_graph_text(format_graph(g))
    assert h.n == 7 and sorted(h.edges()) == sorted(g.edges())


@pytest.mark.parametrize(
    "text,msg",
    [
        ("e 1 2\n", "line 1"),
        ("p 3\ne 1 4\n", "line 2"),
        ("p 3\ne 1 1\n", "self-loop"),
        ("p 3\nx\n", "line 2"),
        ("# nothing\n", "missing"),
        ("p zero\n", "line 1"),
    ],
)
def test_graph_text_errors(text, msg):
    with pytest.raises(InputError, match=msg):
        parse_graph_text(text)


def test_load_graph(tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("p 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert load_graph(str(f)).num_edges == 3
    assert load_graph("C5").n == 5
    with pytest.raises(InputError):
        load_graph(str(tmp_path / "missing.txt"))


def test_family_text():
    fam = parse_family_text("(4,5) (5,5)\n(2,1),(2,5)\n# comment\n(1,3) (2,3)\n", 5, 2)
    assert fam.t == 2 and fam.sizes == [2, 2, 2]
    assert parse_family_text(format_family(fam, 5), 5, 2).subsets == fam.subsets
    flat = parse_family_text("1 2\n4\n", 5)
    assert flat.subsets == (frozenset({0, 1}), frozenset({3}))
    assert format_family(VertexFamily.of([]), 5) == ""


@pytest.mark.parametrize(
    "text,t",
    [("(1,2,3)\n", 2), ("(0,1)\n", 2), ("6\n", 1), ("1 1\n", 1), ("3\n", 2), ("1 ;\n", 1), ("(a,b)\n", 2)],
)
def test_family_text_errors(text, t):
    with pytest.raises(InputError, match="line 1"):
        parse_family_text(text, 5, t)
