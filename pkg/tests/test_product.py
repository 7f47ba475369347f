import random

import pytest

from nonrep.colouring import Colouring
from nonrep.corpus import all_graphs
from nonrep.graphs import InputError, complete_graph, cycle_graph, edgeless_graph, path_graph
from nonrep.product import (ProductVertexIndex, compose_clique_factor, compose_join,
                            compose_path_factor, compose_product_colouring,
                            join_complete, strong_product)
from nonrep.treedecomp import heuristic_td
from nonrep.twcolour import strongly_nonrepetitive_colouring
from nonrep.verify import find_bad_lazy_walk, find_repetitive_path, recheck_lazy_walk


def test_index_row_major():
    idx = ProductVertexIndex(3, 4)
    assert idx.encode(2, 1) == 9
    assert idx.decode(9) == (2, 1)
    assert idx.size == 12
    with pytest.raises(InputError):
        idx.encode(3, 0)
    with pytest.raises(InputError):
        idx.decode(12)


def test_identity_factor():
    b = cycle_graph(5)
    p, _ = strong_product(complete_graph(1), b)
    assert p == b


def test_k2_times_k2():
    p, _ = strong_product(complete_graph(2), complete_graph(2))
    assert p == complete_graph(4)


def test_p2_times_p3_counts():
    p, _ = strong_product(path_graph(2), path_graph(3))
    assert p.n == 6 and p.m == 11


def test_size_limit():
    with pytest.raises(InputError):
        strong_product(edgeless_graph(2000), edgeless_graph(2000))


def test_counts_closed_form_all_pairs_up_to_five():
    graphs = [g for n in range(1, 6) for g in all_graphs(n)]
    for a in graphs:
        for b in graphs:
            p, _ = strong_product(a, b)
            assert p.n == a.n * b.n
            assert p.m == a.n * b.m + b.n * a.m + 2 * a.m * b.m


def test_join_examples():
    assert join_complete(complete_graph(1), 1) == complete_graph(2)
    j = join_complete(edgeless_graph(2), 1)
    assert j.n == 3 and j.edges == ((0, 2), (1, 2))
    j = join_complete(cycle_graph(4), 2)
    assert j.n == 6 and j.m == 13
    with pytest.raises(InputError):
        join_complete(path_graph(2), -1)


def test_projection_of_walks():
    a, b = cycle_graph(4), path_graph(3)
    p, idx = strong_product(a, b)
    rng = random.Random(3)
    for _ in range(50):
        walk = [rng.randrange(p.n)]
        for _ in range(7):
            options = [walk[-1]] + list(p.adj[walk[-1]])
            walk.append(rng.choice(options))
        assert recheck_lazy_walk(p, tuple(walk))
        ua = tuple(idx.decode(v)[0] for v in walk)
        ub = tuple(idx.decode(v)[1] for v in walk)
        assert recheck_lazy_walk(a, ua)
        assert recheck_lazy_walk(b, ub)


def test_compose_palette_arithmetic():
    phi1 = Colouring((0, 4, 2), 5)
    phi2 = Colouring((3, 0), 4)
    idx = ProductVertexIndex(3, 2)
    out = compose_product_colouring(phi1, phi2, idx)
    assert out.palette == 20
    assert out.colours[idx.encode(1, 0)] == 4 * 4 + 3


def test_compose_size_mismatch():
    with pytest.raises(InputError):
        compose_product_colouring(Colouring((0,), 1), Colouring((0,), 1),
                                  ProductVertexIndex(2, 1))


def test_identity_path_factor():
    phi1 = Colouring((0, 1), 2)
    idx = ProductVertexIndex(2, 1)
    out = compose_path_factor(phi1, 1, idx)
    assert out.palette == 8
    assert len(set(out.colours)) == 2


def test_clique_factor():
    idx = ProductVertexIndex(1, 3)
    out = compose_clique_factor(Colouring((0,), 1), 3, idx)
    assert out.colours == (0, 1, 2)
    with pytest.raises(InputError):
        compose_clique_factor(Colouring((0,), 1), 0, idx)
    assert compose_clique_factor(Colouring((0, 3), 7), 3,
                                 ProductVertexIndex(2, 3)).palette == 21


def test_join_colouring():
    phi = Colouring((0, 1, 0), 2)
    assert compose_join(phi, 0) == phi
    out = compose_join(phi, 2)
    assert out.palette == 4 and out.colours[3:] == (2, 3)


def test_verified_composition_clique():
    p4 = path_graph(4)
    phi1 = strongly_nonrepetitive_colouring(p4, heuristic_td(p4))
    prod, idx = strong_product(p4, complete_graph(3))
    phi = compose_clique_factor(phi1, 3, idx)
    assert phi.palette <= 3 * phi1.palette
    assert find_repetitive_path(prod, phi, 10).passed
    assert find_bad_lazy_walk(prod, phi, 10).passed


def test_verified_composition_path():
    k2 = complete_graph(2)
    phi1 = strongly_nonrepetitive_colouring(k2, heuristic_td(k2))
    prod, idx = strong_product(k2, path_graph(6))
    phi = compose_path_factor(phi1, 6, idx)
    assert phi.palette <= 4 * phi1.palette
    v = find_repetitive_path(prod, phi, 12)
    assert v.passed and v.complete
    assert find_bad_lazy_walk(prod, phi, 10).passed


def test_verified_composition_join():
    p4 = path_graph(4)
    phi1 = strongly_nonrepetitive_colouring(p4, heuristic_td(p4))
    joined = join_complete(p4, 2)
    phi = compose_join(phi1, 2)
    assert phi.palette == phi1.palette + 2
    v = find_repetitive_path(joined, phi, 6)
    assert v.passed and v.complete
    assert find_bad_lazy_walk(joined, phi, 10).passed


def test_composed_colourings_over_small_corpus(small_connected_graphs):
    for g in small_connected_graphs[::37]:
        phi1 = strongly_nonrepetitive_colouring(g, heuristic_td(g))
        prod, idx = strong_product(g, complete_graph(2))
        phi = compose_clique_factor(phi1, 2, idx)
        assert phi.palette == 2 * phi1.palette
        assert find_repetitive_path(prod, phi, 8).passed
        assert find_bad_lazy_walk(prod, phi, 8).passed
        prod2, idx2 = strong_product(g, path_graph(3))
        phi2 = compose_path_factor(phi1, 3, idx2)
        assert phi2.palette == 4 * phi1.palette
        assert find_repetitive_path(prod2, phi2, 8).passed
        assert find_bad_lazy_walk(prod2, phi2, 8).passed
