"""Commutation classes, the flip graph on them, and small-graph utilities."""

from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from redux.commutation import (
    FlipGraph,
    class_of,
    classes,
    cycle_space_generated_by_4_8_cycles,
    gf2_rank,
    graph,
    graph_to_dot,
    graph_to_json,
    graphs_isomorphic,
    is_bipartite,
    is_connected,
    is_path,
    is_tree,
    reverse,
    rotate_prefix,
    rotate_suffix,
    simple_cycles_of_length,
)
from redux.permcore import longest_element
from redux.redwords import BudgetError, enumerate_R, format_word

perms5 = st.permutations((1, 2, 3, 4, 5)).map(tuple)


def test_classes_golden_4231():
    cls = classes((4, 2, 3, 1))
    by_rep = {format_word(c.representative): {format_word(j) for j in c.words} for c in cls}
    assert by_rep == {
        "12321": {"12321"},
        "13213": {"13231", "31231", "13213", "31213"},
        "32123": {"32123"},
    }
    assert [c.size for c in cls] == [1, 4, 1]


def test_classes_partition_R():
    for w in ((4, 2, 3, 1), longest_element(4), (3, 1, 2)):
        cls = classes(w)
        words = enumerate_R(w)
        assert sorted(j for c in cls for j in c.words) == list(words)
        for word in words:
            assert word in cls[class_of(word, cls)].words
        for c in cls:
            assert c.representative == min(c.words)


def test_class_counts_longest_elements():
    assert len(classes(longest_element(4))) == 8
    assert len(enumerate_R(longest_element(4))) == 16


def test_graph_structure():
    g = graph(longest_element(4))
    assert g.vertex_count == 8
    assert is_connected(g) and is_bipartite(g)
    assert cycle_space_generated_by_4_8_cycles(g)


def test_graph_path_for_shared_321s():
    g = graph((5, 2, 3, 4, 1))  # three 321-occurrences, all sharing 5 and 1
    assert g.vertex_count == 4
    assert is_path(g)


def test_reverse():
    assert reverse((4, 1, 3, 2)) == (2, 3, 1, 4)
    assert reverse(reverse((5, 3, 2, 4, 1))) == (5, 3, 2, 4, 1)


def _reverse_complement(w):
    n = len(w)
    return tuple(n + 1 - v for v in reversed(w))


@given(perms5)
def test_polygon_reflection_preserves_class_count(w):
    # reflecting the polygon = reverse-complement; plain reversal does not
    # even preserve length
    assert len(classes(w)) == len(classes(_reverse_complement(w)))
    assert graphs_isomorphic(graph(w), graph(_reverse_complement(w)))


def test_rotations():
    w = (5, 4, 1, 3, 2)
    rotated = rotate_prefix(w, 2)
    assert rotated[-2:] == (2, 1)
    assert len(classes(w)) == len(classes(rotated))
    assert graphs_isomorphic(graph(w), graph(rotated))

    u = (3, 5, 4, 2, 1)
    rotated = rotate_suffix(u, 2)
    assert rotated[:2] == (5, 4)
    assert len(classes(u)) == len(classes(rotated))
    assert graphs_isomorphic(graph(u), graph(rotated))

    with pytest.raises(ValueError):
        rotate_prefix((1, 2, 3), 1)
    with pytest.raises(ValueError):
        rotate_suffix((1, 2, 3), 1)


def _path_graph(n):
    return FlipGraph(
        vertices=tuple(range(n)),
        edges=frozenset((i, i + 1) for i in range(n - 1)),
    )


def test_graph_utilities():
    path = _path_graph(4)
    assert is_tree(path) and is_path(path)
    star = FlipGraph(vertices=(0, 1, 2, 3), edges=frozenset({(0, 1), (0, 2), (0, 3)}))
    assert is_tree(star) and not is_path(star)
    square = FlipGraph(vertices=(0, 1, 2, 3), edges=frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
    assert not is_tree(square)
    assert len(simple_cycles_of_length(square, 4)) == 1
    assert simple_cycles_of_length(square, 3) == []


def test_graphs_isomorphic():
    relabeled = FlipGraph(
        vertices=(0, 1, 2, 3), edges=frozenset({(0, 2), (2, 3), (1, 3)})
    )
    assert graphs_isomorphic(_path_graph(4), relabeled)
    star = FlipGraph(vertices=(0, 1, 2, 3), edges=frozenset({(0, 1), (0, 2), (0, 3)}))
    assert not graphs_isomorphic(_path_graph(4), star)
    big = FlipGraph(vertices=tuple(range(65)), edges=frozenset())
    with pytest.raises(BudgetError):
        graphs_isomorphic(big, big)


def test_gf2_rank():
    assert gf2_rank([]) == 0
    assert gf2_rank([0b101, 0b011, 0b110]) == 2
    assert gf2_rank([0b101, 0b011, 0b100]) == 3


def test_graph_exports():
    g = graph((3, 2, 1))
    dot = graph_to_dot(g)
    assert dot.startswith("graph G {")
    assert 'v0 [label="121"]' in dot
    assert "v0 -- v1;" in dot
    import json

    payload = json.loads(graph_to_json(g))
    assert payload["schema"] == 1
    assert payload["vertices"] == ["121", "212"]
    assert payload["edges"] == [[0, 1]]
