import pytest

from rbr import (
    export_dot,
    full_scene,
    parse_game,
    parse_rbr,
    rational_response,
    read_graph,
    serialize_rbr,
)
from rbr.errors import (
    DuplicateDeclaration,
    DuplicateStrategy,
    GraphSyntaxError,
    MissingUtilityEntry,
    SelfBelief,
    UnknownIdentifier,
)

B1_DOC = """\
# complete three-agent graph
agents a b c
node na a
node nb b
node nc c
edge na nb
edge na nc
edge nb na
edge nb nc
edge nc na
edge nc nb
real a na
real b nb
real c nc
"""

B3_DOC = """\
agents a b c
node na a
node nb b
node nc c
edge na nb
edge nb na
edge nc na
edge nc nb
real a na
real b nb
real c nc
"""


def test_parse_b1(b1):
    g = read_graph(B1_DOC)
    assert g.labels == b1.labels
    assert sorted(g.edges()) == sorted(b1.edges())
    assert g.designated == b1.designated


def test_missing_agents_line():
    with pytest.raises(GraphSyntaxError):
        parse_rbr("node na a\n")


def test_parse_validate_separation():
    doc = "agents a b\nnode n1 a\nedge n1 n1\nreal a n1\n"
    raw = parse_rbr(doc)  # parses fine
    with pytest.raises(SelfBelief):
        raw.validate()


def test_parse_errors_carry_line_numbers():
    doc = "agents a b\nnode na a\nnode na a\n"
    with pytest.raises(DuplicateDeclaration) as err:
        parse_rbr(doc)
    assert err.value.line == 3
    with pytest.raises(UnknownIdentifier) as err:
        parse_rbr("agents a\nnode na a\nedge na nb\n")
    assert err.value.line == 3


def test_serialize_round_trip(b2, b4, b5):
    for g in (b2, b4, b5):
        again = read_graph(serialize_rbr(g))
        assert again.labels == g.labels
        assert again.succ == g.succ
        assert again.designated == g.designated


def test_serialize_edge_order():
    text = serialize_rbr(read_graph(B3_DOC))
    edge_lines = [l for l in text.splitlines() if l.startswith("edge")]
    assert edge_lines == ["edge na nb", "edge nb na", "edge nc na", "edge nc nb"]


def test_export_dot(b1, b4):
    dot = export_dot(b4)
    assert dot.count("style=dashed") == 2
    assert dot.count("style=solid") == 3
    b1_dot = export_dot(b1)
    assert b1_dot.count("->") == 6
    single = export_dot(read_graph("agents a\nnode n a\nreal a n\n"))
    assert single.count("style=solid") == 1 and "->" not in single


GAME_DOC = """\
game normal-form
agents a b
strategies a: x y
strategies b: x y
utility a x x 1
utility a x y 1/2
utility a y x 0
utility a y y -1/2
utility b x x 0
utility b x y 1
utility b y x 0
utility b y y 1
"""


def test_parse_game():
    game = parse_game(GAME_DOC)
    assert game.strategies == (("x", "y"), ("x", "y"))
    assert rational_response(game, 0, full_scene(game, 0)) == {"x"}
    assert rational_response(game, 1, full_scene(game, 1)) == {"y"}


def test_parse_game_missing_entry():
    doc = "\n".join(GAME_DOC.splitlines()[:-1]) + "\n"
    with pytest.raises(MissingUtilityEntry):
        parse_game(doc)


def test_parse_game_duplicate_strategy_token():
    doc = GAME_DOC.replace("strategies a: x y", "strategies a: x x")
    with pytest.raises(DuplicateStrategy):
        parse_game(doc)


def test_parse_game_needs_header():
    with pytest.raises(GraphSyntaxError):
        parse_game("agents a b\n")


def test_binary_game_in_dsl_matches_builtin():
    doc = """\
game normal-form
agents a b
strategies a: 0 1
strategies b: 0 1
utility a 0 0 0
utility a 0 1 0
utility a 1 0 1
utility a 1 1 1
utility b 0 0 0
utility b 1 0 0
utility b 0 1 1
utility b 1 1 1
"""
    game = parse_game(doc)
    for a in range(2):
        assert rational_response(game, a, full_scene(game, a)) == {"1"}


def test_serialize_corpus_round_trip(corpus):
    for g in corpus:
        assert read_graph(serialize_rbr(g)).succ == g.succ
