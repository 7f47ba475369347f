import random

import pytest

from nonrep.corpus import random_connected_chordal, random_partial_ktree
from nonrep.graphs import (Graph, InputError, complete_graph, cycle_graph,
                           edgeless_graph, induced_subgraph, path_graph)
from nonrep.treedecomp import (TreeDecomposition, chordal_completion, exact_treewidth,
                               heuristic_td, is_chordal, is_r_rich, parse_td,
                               restrict_td, validate_td, width, write_td)


def test_parse_single_bag():
    td = parse_td("s td 1 2 2\nb 1 1 2\n")
    assert td.bags == ((0, 1),) and td.tree_edges == ()


def test_parse_two_bags():
    td = parse_td("s td 2 2 3\nc comment\nb 1 1 2\nb 2 2 3\n1 2\n")
    assert td.bags == ((0, 1), (1, 2))
    assert validate_td(path_graph(3), td) is None


@pytest.mark.parametrize("text", [
    "b 1 1 2",                                    # missing header
    "s td 2 2 3\nb 1 1 2\nb 1 2 3\n1 2",          # duplicate bag id
    "s td 3 2 3\nb 1 1\nb 2 2\nb 3 3\n1 2\n2 3\n3 1",  # cyclic
    "s td 2 2 3\nb 1 1 2\nb 2 2 3",               # missing tree edge
    "s td 1 2 2\nb 1 1 5",                        # vertex out of range
])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        parse_td(text)


def test_pace_round_trip():
    td = parse_td("s td 3 3 5\nb 1 1 2 3\nb 2 3 4\nb 3 4 5\n1 2\n2 3\n")
    assert parse_td(write_td(td, 5)) == td


def test_validate_axioms():
    p3 = path_graph(3)
    td = TreeDecomposition(2, ((0, 1),), ((0, 1), (1, 2)))
    assert validate_td(p3, td) is None
    assert validate_td(complete_graph(3), td) == ("edge-coverage", (0, 2))
    broken = TreeDecomposition(3, ((0, 1), (1, 2)), ((0,), (1,), (0,)))
    assert validate_td(Graph.build(2, [(0, 1)]), broken)[0] == "subtree-connectivity"
    uncovered = TreeDecomposition(1, (), ((0,),))
    assert validate_td(edgeless_graph(2), uncovered) == ("vertex-coverage", 1)


def test_width():
    assert width(TreeDecomposition(1, (), ((0,),))) == 0
    assert width(TreeDecomposition(3, ((0, 1), (1, 2)), ((0, 1), (0, 1, 2), (1, 2)))) == 2
    with pytest.raises(InputError):
        width(TreeDecomposition(1, (), ((),)))


def test_is_r_rich():
    g = path_graph(3)
    td = TreeDecomposition(2, ((0, 1),), ((0, 1), (1, 2)))
    assert is_r_rich(g, td, 1) is None
    g2 = Graph.build(4, [(0, 1), (1, 2), (2, 3), (0, 3)])  # C_4
    td2 = TreeDecomposition(2, ((0, 1),), ((0, 1, 3), (1, 2, 3)))
    hit = is_r_rich(g2, td2, 2)
    assert hit is not None and "not a clique" in hit[1]
    k4 = complete_graph(4)
    td3 = TreeDecomposition(2, ((0, 1),), ((0, 1, 2), (0, 1, 2, 3)))
    hit = is_r_rich(k4, td3, 2)
    assert hit is not None and "exceeds" in hit[1]
    assert is_r_rich(k4, td3, 3) is None


def test_chordal_completion_examples():
    p3 = path_graph(3)
    td = TreeDecomposition(2, ((0, 1),), ((0, 1), (1, 2)))
    assert chordal_completion(p3, td) == p3
    one_bag = TreeDecomposition(1, (), ((0, 1, 2),))
    assert chordal_completion(p3, one_bag) == complete_graph(3)
    assert chordal_completion(edgeless_graph(3), one_bag) == complete_graph(3)


def test_chordal_completion_invariants():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 10)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
        g = Graph.build(n, edges)
        td = heuristic_td(g)
        comp = chordal_completion(g, td)
        assert is_chordal(comp)
        assert validate_td(comp, td) is None
        assert width(td) == width(td)  # unchanged object, width well-defined
        assert set(g.edges) <= set(comp.edges)


def test_is_chordal_known():
    assert is_chordal(path_graph(6))
    assert is_chordal(complete_graph(5))
    assert not is_chordal(cycle_graph(4))
    assert not is_chordal(cycle_graph(6))
    assert is_chordal(cycle_graph(3))


def test_heuristic_examples():
    tree = Graph.build(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    assert width(heuristic_td(tree)) == 1
    assert width(heuristic_td(complete_graph(5))) == 4
    assert width(heuristic_td(cycle_graph(4))) == 2


def test_heuristic_valid_on_random(small_connected_graphs):
    for g in small_connected_graphs[::7]:
        td = heuristic_td(g)
        assert validate_td(g, td) is None


def test_heuristic_edgeless_singleton_bags():
    td = heuristic_td(edgeless_graph(4))
    assert td.num_nodes == 4
    assert all(len(b) == 1 for b in td.bags)
    assert validate_td(edgeless_graph(4), td) is None


def test_exact_examples():
    assert exact_treewidth(path_graph(5)) == 1
    assert exact_treewidth(cycle_graph(5)) == 2
    assert exact_treewidth(complete_graph(4)) == 3


def test_exact_known_families():
    rng = random.Random(1)
    for n in range(2, 13):
        edges = [(rng.randrange(i), i) for i in range(1, n)]
        assert exact_treewidth(Graph.build(n, edges)) == 1
    for n in range(3, 13):
        assert exact_treewidth(cycle_graph(n)) == 2
        assert exact_treewidth(complete_graph(n)) == n - 1
    for _ in range(10):
        g = random_partial_ktree(rng.randint(3, 12), 2, rng, keep_prob=1.0)
        assert exact_treewidth(g) == 2


def test_exact_budget():
    with pytest.raises(InputError):
        exact_treewidth(edgeless_graph(31))
    with pytest.raises(InputError):
        exact_treewidth(Graph.build(12, []), budget=10)


def test_exact_vs_heuristic(small_connected_graphs):
    for g in small_connected_graphs[::11]:
        assert exact_treewidth(g) <= width(heuristic_td(g))


def test_restrict_examples():
    td = TreeDecomposition(2, ((0, 1),), ((0, 1), (1, 2)))
    r = restrict_td(td, [0, 1], {0: 0, 1: 1})
    assert r.bags == ((0, 1), (1,))
    empty = restrict_td(td, [])
    assert empty.bags == ((), ())
    with pytest.raises(InputError):
        width(empty)
    one = restrict_td(TreeDecomposition(1, (), ((0, 1, 2, 3),)), [0, 2], {0: 0, 2: 1})
    assert one.bags == ((0, 1),)


def test_restrict_validates_against_induced():
    rng = random.Random(9)
    for _ in range(40):
        g = random_connected_chordal(rng.randint(2, 10), rng)
        td = heuristic_td(g)
        keep = sorted(rng.sample(range(g.n), rng.randint(1, g.n)))
        sub, mapping = induced_subgraph(g, keep)
        r = restrict_td(td, keep, mapping)
        assert validate_td(sub, r) is None
