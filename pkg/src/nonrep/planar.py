"""Product structures G inside H box P box K_ell: ingestion, validation,
construction for planar triangulations, and the colouring pipelines.

Construction sketch for a triangulation: recover the (unique) face set,
pick a root face, build a BFS tree, and recursively partition the
vertices into tripods: inside a boundary cycle made of at most three
arcs (each arc lying in one earlier tripod), colour every interior
vertex by the arc its ancestor path hits first; a Sperner-style parity
argument yields a face whose corners see all three arcs, and the three
ancestor paths from that face form the next tripod, splitting the disk
into three smaller subproblems.  Each tripod has at most three vertical
legs (one vertex per BFS layer each), so mapping a vertex to
(tripod, depth, leg) embeds the graph into H box P box K_3 where H is
the tripod quotient; the recursion tree gives a width-<=3
tree-decomposition of H for free (bag = boundary tripods + new tripod).
Nothing is trusted: every emitted structure is checked by the validator
and the treewidth certificate.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .colouring import Colouring
from .graphs import Graph, InputError, is_connected
from .treedecomp import TreeDecomposition, heuristic_td, validate_td, width
from .twcolour import strongly_nonrepetitive_colouring
from .words import path_colouring_4


@dataclass(frozen=True)
class ProductStructure:
    h: Graph
    ell: int
    placement: tuple[tuple[int, int, int], ...]
    h_td: Optional[TreeDecomposition] = None


@dataclass(frozen=True)
class StructureColouring:
    colouring: Colouring
    h_width: int
    claimed_bound: int
    certified: bool


def parse_product_structure(text: str) -> ProductStructure:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad structure JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("structure JSON must be an object")
    for key in ("ell", "H", "placement"):
        if key not in obj:
            raise InputError(f"structure JSON misses field {key!r}")
    ell = obj["ell"]
    if not isinstance(ell, int) or ell < 1:
        raise InputError("ell must be an integer >= 1")
    hobj = obj["H"]
    if not isinstance(hobj, dict) or "n" not in hobj or "edges" not in hobj:
        raise InputError("H must be an object with fields n and edges")
    h = Graph.build(int(hobj["n"]), [tuple(e) for e in hobj["edges"]])
    placement = []
    for entry in obj["placement"]:
        if not (isinstance(entry, list) and len(entry) == 3
                and all(isinstance(x, int) for x in entry)):
            raise InputError(f"bad placement entry {entry!r}")
        hh, p, q = entry
        if hh < 0 or p < 0 or q < 0:
            raise InputError(f"negative placement entry {entry!r}")
        if q >= ell:
            raise InputError(f"copy index {q} outside 0..{ell - 1}")
        placement.append((hh, p, q))
    return ProductStructure(h, ell, tuple(placement))


def serialize_product_structure(s: ProductStructure) -> str:
    return json.dumps({
        "ell": s.ell,
        "H": {"n": s.h.n, "edges": [list(e) for e in s.h.edges]},
        "placement": [list(t) for t in s.placement],
    })


def validate_product_structure(g: Graph, s: ProductStructure):
    """None if the placement embeds g as a subgraph of H box P box K_ell,
    else (kind, witness)."""
    if len(s.placement) != g.n:
        return ("placement-length", (len(s.placement), g.n))
    for v, (h, p, q) in enumerate(s.placement):
        if not 0 <= h < s.h.n:
            return ("h-range", v)
        if not 0 <= q < s.ell:
            return ("copy-range", v)
        if p < 0:
            return ("layer-range", v)
    seen: dict[tuple[int, int, int], int] = {}
    for v, triple in enumerate(s.placement):
        if triple in seen:
            return ("injectivity", (seen[triple], v))
        seen[triple] = v
    for u, v in g.edges:
        hu, pu, _ = s.placement[u]
        hv, pv, _ = s.placement[v]
        if hu != hv and not s.h.has_edge(hu, hv):
            return ("h-adjacency", (u, v))
        if abs(pu - pv) > 1:
            return ("layer-adjacency", (u, v))
        # K_ell is complete, so the copy coordinate never obstructs
    return None


# -- face recovery for triangulations ----------------------------------------

def triangulation_faces(g: Graph) -> list[tuple[int, int, int]]:
    """Face list of a planar triangulation (unique once n >= 4).

    Faces of a maximal planar graph are exactly its non-separating
    triangles.  Validated by Euler counts: m = 3n - 6 and 2n - 4 faces
    with every edge on exactly two of them.
    """
    if g.n < 3:
        raise InputError("a triangulation needs at least 3 vertices")
    if not is_connected(g):
        raise InputError("triangulation must be connected")
    if g.m != 3 * g.n - 6:
        raise InputError(f"not a triangulation: {g.m} edges, expected {3 * g.n - 6}")
    if g.n == 3:
        tri = (0, 1, 2)
        return [tri, tri]
    adj_sets = [set(a) for a in g.adj]
    triangles = set()
    for u, v in g.edges:
        for w in adj_sets[u] & adj_sets[v]:
            triangles.add(tuple(sorted((u, v, w))))
    faces = [t for t in sorted(triangles) if _connected_without(g, t)]
    if len(faces) != 2 * g.n - 4:
        raise InputError("not a planar triangulation: face count mismatch")
    edge_count: dict[tuple[int, int], int] = {}
    for t in faces:
        for e in combinations(t, 2):
            edge_count[e] = edge_count.get(e, 0) + 1
    if any(c != 2 for c in edge_count.values()) or len(edge_count) != g.m:
        raise InputError("not a planar triangulation: edge/face incidence mismatch")
    return faces


def _connected_without(g: Graph, drop: tuple[int, ...]) -> bool:
    gone = set(drop)
    start = next((v for v in range(g.n) if v not in gone), None)
    if start is None:
        return True
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in gone and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n - len(gone)


# -- tripod partition ----------------------------------------------------------

def compute_product_structure(g: Graph) -> ProductStructure:
    """Tripod partition of a planar triangulation: G inside H box P box K_3.

    The returned structure always passes validate_product_structure and
    carries the recursion's width-<=3 tree-decomposition of H.
    """
    faces = triangulation_faces(g)
    depth, parent = _bfs_tree(g, faces)
    tripod_of = [-1] * g.n
    leg_of = [-1] * g.n
    tripods: list[int] = []  # only counted; legs live in tripod_of/leg_of
    bags: list[tuple[int, ...]] = []
    tree_edges: list[tuple[int, int]] = []

    edge_faces: dict[frozenset, list[int]] = {}
    for fid, f in enumerate(faces):
        for e in combinations(f, 2):
            edge_faces.setdefault(frozenset(e), []).append(fid)

    f0_id = min(range(len(faces)), key=lambda i: faces[i])
    f0 = faces[f0_id]
    root_tid = 0
    tripods.append(root_tid)
    for q, v in enumerate(f0):
        tripod_of[v] = root_tid
        leg_of[v] = q

    def add_node(bag: set[int], parent_node: Optional[int]) -> int:
        nid = len(bags)
        bags.append(tuple(sorted(bag)))
        if parent_node is not None:
            tree_edges.append((parent_node, nid))
        return nid

    def solve(cycle: list[int], faces_in: set[int], interior: set[int],
              parent_node: Optional[int]) -> None:
        if not interior:
            add_node({tripod_of[v] for v in cycle}, parent_node)
            return
        arcs = _cyclic_arcs(cycle, tripod_of)
        while len(arcs) < 3:
            arcs = _split_longest(arcs)
        arc_of: dict[int, int] = {}
        for ai, seg in enumerate(arcs):
            for v in seg:
                arc_of[v] = ai
        colour_memo: dict[int, int] = {}

        def sperner(v: int) -> int:
            chain = []
            cur = v
            while cur not in arc_of and cur not in colour_memo:
                chain.append(cur)
                cur = parent[cur]
            c = arc_of[cur] if cur in arc_of else colour_memo[cur]
            for w in chain:
                colour_memo[w] = c
            return c

        tri_id = None
        corners = None
        for fid in sorted(faces_in):
            cols = {}
            for v in faces[fid]:
                cols[arc_of[v] if v in arc_of else sperner(v)] = v
            if len(cols) == 3:
                tri_id = fid
                corners = [cols[0], cols[1], cols[2]]
                break
        if tri_id is None:
            raise RuntimeError("no trichromatic face; embedding data inconsistent")

        legs: list[list[int]] = [[], [], []]
        attach: list[int] = [0, 0, 0]
        for ci in range(3):
            cur = corners[ci]
            while cur not in arc_of:
                legs[ci].append(cur)
                cur = parent[cur]
            attach[ci] = cur
        new_tid: Optional[int] = None
        if any(legs):
            new_tid = len(tripods)
            tripods.append(new_tid)
            for ci, leg in enumerate(legs):
                for v in leg:
                    tripod_of[v] = new_tid
                    leg_of[v] = ci
        bag = {tripod_of[v] for v in cycle}
        if new_tid is not None:
            bag.add(new_tid)
        nid = add_node(bag, parent_node)

        consumed = {tri_id}
        used_interior = {v for leg in legs for v in leg}
        order = list(cycle)
        for i, j, other in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            pair = edge_faces[frozenset((corners[i], corners[j]))]
            others = [f for f in pair if f != tri_id]
            if not others or others[0] not in faces_in:
                continue
            seed = others[0]
            seg = _cycle_segment(order, attach[i], attach[j], attach[other])
            child_cycle = seg + list(reversed(legs[j])) + legs[i]
            walls = set()
            for a, b in zip(child_cycle, child_cycle[1:] + child_cycle[:1]):
                walls.add(frozenset((a, b)))
            child_faces = _flood(seed, faces_in, walls, edge_faces, faces, tri_id)
            boundary = set(child_cycle)
            child_interior = set()
            for fid in child_faces:
                child_interior.update(v for v in faces[fid] if v not in boundary)
            consumed |= child_faces
            used_interior |= child_interior
            solve(child_cycle, child_faces, child_interior, nid)
        assert consumed == faces_in, "faces lost by the region split"
        assert used_interior == interior, "vertices lost by the region split"

    all_faces = set(range(len(faces))) - {f0_id}
    interior0 = set(range(g.n)) - set(f0)
    solve(list(f0), all_faces, interior0, None)

    assert all(t >= 0 for t in tripod_of), "unassigned vertex after recursion"
    h_edges = set()
    for u, v in g.edges:
        tu, tv = tripod_of[u], tripod_of[v]
        if tu != tv:
            h_edges.add((min(tu, tv), max(tu, tv)))
    h = Graph.build(len(tripods), sorted(h_edges))
    h_td = TreeDecomposition(len(bags), tuple(tree_edges), tuple(bags))
    placement = tuple((tripod_of[v], depth[v], leg_of[v]) for v in range(g.n))
    s = ProductStructure(h, 3, placement, h_td)
    assert validate_td(h, h_td) is None, "quotient decomposition invalid"
    assert width(h_td) <= 3, "quotient decomposition too wide"
    assert validate_product_structure(g, s) is None, "structure failed validation"
    return s


def _bfs_tree(g: Graph, faces) -> tuple[list[int], list[int]]:
    root = min(min(f) for f in faces)
    depth = [-1] * g.n
    parent = [-1] * g.n
    depth[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for u in sorted(frontier):
            for w in g.adj[u]:
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    return depth, parent


def _cyclic_arcs(cycle: list[int], tripod_of) -> list[list[int]]:
    """Maximal runs of equal tripod around the cycle (cyclically coalesced)."""
    arcs: list[list[int]] = []
    for v in cycle:
        if arcs and tripod_of[arcs[-1][-1]] == tripod_of[v]:
            arcs[-1].append(v)
        else:
            arcs.append([v])
    if len(arcs) > 1 and tripod_of[arcs[0][0]] == tripod_of[arcs[-1][-1]]:
        arcs[0] = arcs.pop() + arcs[0]
    return arcs


def _split_longest(arcs: list[list[int]]) -> list[list[int]]:
    i = max(range(len(arcs)), key=lambda j: len(arcs[j]))
    arc = arcs[i]
    if len(arc) < 2:
        raise RuntimeError("boundary cycle too short to split")
    mid = len(arc) // 2
    return arcs[:i] + [arc[:mid], arc[mid:]] + arcs[i + 1:]


def _cycle_segment(cycle: list[int], start: int, end: int, avoid: int) -> list[int]:
    pos = {v: i for i, v in enumerate(cycle)}
    n = len(cycle)
    seg = [start]
    i = pos[start]
    while cycle[i] != end:
        i = (i + 1) % n
        seg.append(cycle[i])
    if avoid not in seg:
        return seg
    seg = [start]
    i = pos[start]
    while cycle[i] != end:
        i = (i - 1) % n
        seg.append(cycle[i])
    assert avoid not in seg
    return seg


def _flood(seed: int, faces_in: set[int], walls: set[frozenset],
           edge_faces, faces, banned: int) -> set[int]:
    out = {seed}
    stack = [seed]
    while stack:
        fid = stack.pop()
        for e in combinations(faces[fid], 2):
            fe = frozenset(e)
            if fe in walls:
                continue
            for nb in edge_faces[fe]:
                if nb != banned and nb in faces_in and nb not in out:
                    out.add(nb)
                    stack.append(nb)
    return out


# -- colouring pipelines -------------------------------------------------------

def _colour_structure(g: Graph, s: ProductStructure,
                      td: Optional[TreeDecomposition] = None) -> StructureColouring:
    viol = validate_product_structure(g, s)
    if viol is not None:
        raise InputError(f"invalid product structure: {viol}")
    td_h = td if td is not None else (s.h_td if s.h_td is not None else heuristic_td(s.h))
    err = validate_td(s.h, td_h)
    if err is not None:
        raise InputError(f"invalid decomposition of H: {err}")
    w = width(td_h) if any(td_h.bags) else 0
    phi_h = strongly_nonrepetitive_colouring(s.h, td_h)
    layers = max((p for _, p, _ in s.placement), default=0) + 1
    pc = path_colouring_4(layers)
    colours = tuple((phi_h.colours[h] * 4 + pc.colours[p]) * s.ell + q
                    for h, p, q in s.placement)
    palette = phi_h.palette * 4 * s.ell
    return StructureColouring(Colouring(colours, palette), w, 256 * s.ell, w <= 3)


def colour_planar(g: Graph, s: ProductStructure,
                  td: Optional[TreeDecomposition] = None) -> StructureColouring:
    """Pull the product colouring back along a 3-copy structure; <=768 colours
    when H is certified width <= 3."""
    if s.ell != 3:
        raise InputError("the planar pipeline needs a structure with ell = 3")
    return _colour_structure(g, s, td)


def colour_genus(g: Graph, s: ProductStructure,
                 td: Optional[TreeDecomposition] = None) -> StructureColouring:
    """Same pipeline with an ingested ell-copy structure; bound 256 * ell."""
    return _colour_structure(g, s, td)
