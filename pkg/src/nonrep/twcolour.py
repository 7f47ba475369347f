"""Strongly nonrepetitive colouring with at most 4^k colours from a
width-k tree-decomposition.

One recursion level: chordal-complete within the bags, split into
components, BFS-layer each component, colour the layer index by the
walk-safe path 4-colouring, and recurse on the spanning subgraph of
intra-layer edges with a decomposition one narrower.  A vertex's colour
is the base-4 pairing of the recursive colour with its level digit
(level digit in the least significant position), so palettes compose as
4 * (recursive palette) <= 4^k.

The decomposition for a single layer realises the universal-vertex
minor argument constructively: contract everything above the layer to
one vertex u, map bags through the contraction, keep only the subtree
of nodes whose bag contains u (the Helly property of subtrees keeps
every layer vertex and intra-layer edge covered there), then delete u.
"""
from __future__ import annotations

from .colouring import Colouring
from .graphs import Graph, InputError, connected_components, induced_subgraph
from .layering import Layering, bfs_layering
from .treedecomp import (TreeDecomposition, chordal_completion, restrict_td,
                         validate_td, width)
from .words import path_colouring_4


def layer_td(g_chordal: Graph, td: TreeDecomposition, lay: Layering,
             i: int) -> TreeDecomposition:
    """Decomposition of the i-th layer with width <= width(td) - 1,
    bags in host-graph indices."""
    if i < 0 or i >= len(lay.layers):
        raise InputError(f"layer index {i} out of range")
    if i == 0:
        return TreeDecomposition(1, (), (tuple(lay.layers[0]),))
    below = set()
    for j in range(i):
        below.update(lay.layers[j])
    vi = set(lay.layers[i])
    keep = [x for x in range(td.num_nodes) if below & set(td.bags[x])]
    keep_set = set(keep)
    remap = {x: j for j, x in enumerate(keep)}
    edges = tuple((remap[x], remap[y]) for x, y in td.tree_edges
                  if x in keep_set and y in keep_set)
    bags = tuple(tuple(sorted(vi & set(td.bags[x]))) for x in keep)
    sub = TreeDecomposition(len(keep), edges, bags)
    if __debug__:
        gi, mapping = induced_subgraph(g_chordal, sorted(vi))
        assert validate_td(gi, restrict_td(sub, vi, mapping)) is None
        assert max(len(b) for b in sub.bags) <= max(0, width(td))
    return sub


def _chain(tds: list[TreeDecomposition]) -> TreeDecomposition:
    """Join decompositions of disjoint vertex sets by chaining their trees."""
    bags: list[tuple[int, ...]] = []
    edges: list[tuple[int, int]] = []
    for sub in tds:
        offset = len(bags)
        bags.extend(sub.bags)
        edges.extend((x + offset, y + offset) for x, y in sub.tree_edges)
        if offset:
            edges.append((offset - 1, offset))
    return TreeDecomposition(len(bags), tuple(edges), tuple(bags))


def _colour_rec(g: Graph, td: TreeDecomposition) -> tuple[list[int], int]:
    if g.m == 0:
        return [0] * g.n, 1
    comp_graph = chordal_completion(g, td)
    colours = [0] * g.n
    palette = 1
    for comp in connected_components(comp_graph):
        gc, mapping = induced_subgraph(comp_graph, comp)
        tdc = restrict_td(td, comp, mapping)
        lay = bfs_layering(gc, 0)
        depth = lay.depth_of()
        layer_tds = [layer_td(gc, tdc, lay, i) for i in range(len(lay.layers))]
        intra = [(u, v) for u, v in gc.edges if depth[u] == depth[v]]
        h = Graph.build(gc.n, intra)
        td_h = _chain(layer_tds)
        if __debug__:
            assert validate_td(h, td_h) is None
        sub_colours, sub_palette = _colour_rec(h, td_h)
        pc = path_colouring_4(len(lay.layers))
        for old, new in mapping.items():
            colours[old] = sub_colours[new] * 4 + pc.colours[depth[new]]
        palette = max(palette, 4 * sub_palette)
    return colours, palette


def strongly_nonrepetitive_colouring(g: Graph, td: TreeDecomposition) -> Colouring:
    """Colouring of g with palette <= 4^width(td), strongly nonrepetitive."""
    err = validate_td(g, td)
    if err is not None:
        raise InputError(f"invalid tree-decomposition: {err}")
    colours, palette = _colour_rec(g, td)
    if g.m > 0:
        assert palette <= 4 ** width(td)
    return Colouring(tuple(colours), palette)
