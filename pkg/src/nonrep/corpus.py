"""Seeded generators and exhaustive small-graph enumeration for tests
and the CLI corpus commands."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

from .graphs import Graph, InputError
from .planar import ProductStructure


def random_triangulation(n: int, rng: random.Random, flip_rounds: int | None = None) -> Graph:
    """Random planar triangulation: stacked insertions plus diagonal flips.

    Flips (2-2 bistellar moves) are applied only when both endpoints keep
    degree >= 4 and the new diagonal is absent, so the result stays a
    simple triangulation.
    """
    if n < 4:
        raise InputError("random triangulation needs n >= 4")
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    edges = {frozenset(e) for e in combinations(range(4), 2)}
    for v in range(4, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces += [(a, b, v), (a, c, v), (b, c, v)]
        edges |= {frozenset((a, v)), frozenset((b, v)), frozenset((c, v))}
    deg = {v: 0 for v in range(n)}
    for e in edges:
        for v in e:
            deg[v] += 1
    rounds = 3 * n if flip_rounds is None else flip_rounds
    for _ in range(rounds):
        u, v = sorted(rng.choice(sorted(tuple(sorted(e)) for e in edges)))
        if deg[u] <= 3 or deg[v] <= 3:
            continue
        incident = [f for f in faces if u in f and v in f]
        (f1, f2) = incident
        x = next(w for w in f1 if w not in (u, v))
        y = next(w for w in f2 if w not in (u, v))
        if x == y or frozenset((x, y)) in edges:
            continue
        edges.discard(frozenset((u, v)))
        edges.add(frozenset((x, y)))
        faces.remove(f1)
        faces.remove(f2)
        faces += [tuple(sorted((x, y, u))), tuple(sorted((x, y, v)))]
        deg[u] -= 1
        deg[v] -= 1
        deg[x] += 1
        deg[y] += 1
    return Graph.build(n, [tuple(sorted(e)) for e in edges])


def random_connected_chordal(n: int, rng: random.Random) -> Graph:
    """Connected chordal graph built from a random clique-bag
    tree-decomposition (new bag = subset of its parent plus fresh vertices)."""
    if n < 1:
        raise InputError("need n >= 1")
    first = rng.randint(1, min(4, n))
    bags = [list(range(first))]
    placed = first
    while placed < n:
        parent = bags[rng.randrange(len(bags))]
        keep = rng.sample(parent, rng.randint(1, len(parent)))
        fresh_count = rng.randint(1, min(3, n - placed))
        fresh = list(range(placed, placed + fresh_count))
        placed += fresh_count
        bags.append(keep + fresh)
    edge_set = set()
    for bag in bags:
        edge_set.update((min(a, b), max(a, b)) for a, b in combinations(bag, 2))
    return Graph.build(n, sorted(edge_set))


def random_partial_ktree(n: int, k: int, rng: random.Random,
                         keep_prob: float = 0.7) -> Graph:
    """Connected partial k-tree: a random k-tree with edges subsampled
    around a spanning tree."""
    if n < 1 or k < 1:
        raise InputError("need n >= 1 and k >= 1")
    base = min(k + 1, n)
    edges = {(i, j) for i, j in combinations(range(base), 2)}
    cliques = [c for c in combinations(range(base), k)] if base == k + 1 else []
    for v in range(base, n):
        cl = cliques[rng.randrange(len(cliques))]
        for u in cl:
            edges.add((u, v))
        for miss in range(k):
            cliques.append(tuple(sorted(set(cl) - {cl[miss]} | {v})))
    ktree = Graph.build(n, sorted(edges))
    seen = {0}
    spine = set()
    stack = [0]
    while stack:
        u = stack.pop()
        for w in ktree.adj[u]:
            if w not in seen:
                seen.add(w)
                spine.add((min(u, w), max(u, w)))
                stack.append(w)
    kept = [e for e in sorted(edges) if e in spine or rng.random() < keep_prob]
    return Graph.build(n, kept)


def k5_genus_structure() -> tuple[Graph, ProductStructure]:
    """K_5 placed inside K_2 box P_1 box K_3 (a hand-made ingestible structure)."""
    from .graphs import complete_graph
    k5 = complete_graph(5)
    h = complete_graph(2)
    placement = ((0, 0, 0), (0, 0, 1), (0, 0, 2), (1, 0, 0), (1, 0, 1))
    return k5, ProductStructure(h, 3, placement)


# -- exhaustive small triangulations -------------------------------------------

def _rotation_system(n: int, adj, faces) -> list[list[int]]:
    """Coherently oriented cyclic neighbour order per vertex.

    Each vertex's cycle is recovered from the face set, then directions
    are aligned by propagating the rule: if w follows v around u (so
    {u, v, w} is a face), then u follows w around v.
    """
    rot = []
    for v in range(n):
        nb = list(adj[v])
        link: dict[int, list[int]] = {u: [] for u in nb}
        for f in faces:
            if v in f:
                a, b = (x for x in f if x != v)
                link[a].append(b)
                link[b].append(a)
        order = [nb[0]]
        prev = None
        while len(order) < len(nb):
            cands = link[order[-1]]
            nxt = cands[0] if cands[0] != prev else cands[1]
            prev = order[-1]
            order.append(nxt)
        rot.append(order)

    def successor(u: int, v: int) -> int:
        r = rot[u]
        return r[(r.index(v) + 1) % len(r)]

    oriented = [False] * n
    oriented[0] = True
    queue = [0]
    while queue:
        u = queue.pop()
        r = rot[u]
        for i, v in enumerate(r):
            if oriented[v]:
                continue
            w = r[(i + 1) % len(r)]
            if successor(v, w) != u:
                rot[v].reverse()
            assert successor(v, w) == u
            oriented[v] = True
            queue.append(v)
    return rot


def _map_signature(rot, u0: int, v0: int, direction: int) -> tuple:
    label = {u0: 0}
    order = [u0]
    entry = {u0: v0}
    sig = []
    for w in order:
        r = rot[w]
        i = r.index(entry[w])
        seq = [r[(i + direction * j) % len(r)] for j in range(len(r))]
        row = []
        for x in seq:
            if x not in label:
                label[x] = len(label)
                order.append(x)
                entry[x] = w
            row.append(label[x])
        sig.append(tuple(row))
    return tuple(sig)


def _canonical_map_key(n: int, adj, faces) -> tuple:
    """Canonical form of a plane triangulation: minimal breadth-first
    relabelling over starting darts and both orientations.

    The signature's first row is (1..deg(start)), so only minimum-degree
    vertices can start the minimal relabelling.
    """
    rot = _rotation_system(n, adj, faces)
    dmin = min(len(r) for r in rot)
    best = None
    for u in range(n):
        if len(rot[u]) != dmin:
            continue
        for v in rot[u]:
            for direction in (1, -1):
                sig = _map_signature(rot, u, v, direction)
                if best is None or sig < best:
                    best = sig
    return best


@lru_cache(maxsize=None)
def all_triangulations(n: int) -> tuple[Graph, ...]:
    """All planar triangulations on n vertices up to isomorphism.

    Breadth-first search of the diagonal-flip graph from the stacked
    triangulation; by Wagner's theorem the flip graph on simple
    triangulations of the sphere is connected.
    """
    if n < 4:
        raise InputError("triangulation enumeration needs n >= 4")
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    edges = frozenset(frozenset(e) for e in combinations(range(4), 2))
    for v in range(4, n):
        a, b, c = faces.pop(0)
        faces += [(a, b, v), (a, c, v), (b, c, v)]
        edges |= {frozenset((a, v)), frozenset((b, v)), frozenset((c, v))}

    def graph_of(edge_set):
        return Graph.build(n, sorted(tuple(sorted(e)) for e in edge_set))

    def key_of(edge_set, face_list):
        adj = [[] for _ in range(n)]
        for e in edge_set:
            u, v = e
            adj[u].append(v)
            adj[v].append(u)
        return _canonical_map_key(n, adj, face_list)

    start = (edges, tuple(sorted(faces)))
    seen = {key_of(*start): start}
    queue = [start]
    while queue:
        edge_set, face_list = queue.pop()
        for e in edge_set:
            u, v = sorted(e)
            f1, f2 = (f for f in face_list if u in f and v in f)
            x = next(w for w in f1 if w not in (u, v))
            y = next(w for w in f2 if w not in (u, v))
            if x == y or frozenset((x, y)) in edge_set:
                continue
            new_edges = (edge_set - {e}) | {frozenset((x, y))}
            new_faces = tuple(sorted(
                [f for f in face_list if f not in (f1, f2)]
                + [tuple(sorted((x, y, u))), tuple(sorted((x, y, v)))]))
            key = key_of(new_edges, new_faces)
            if key not in seen:
                seen[key] = (new_edges, new_faces)
                queue.append((new_edges, new_faces))
    return tuple(graph_of(es) for es, _ in seen.values())


# -- exhaustive small graphs ---------------------------------------------------

def _wl_cells(n: int, adj: list[set[int]]) -> list[list[int]]:
    colour = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in adj[v]))) for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        fresh = [order[s] for s in sig]
        if fresh == colour:
            break
        colour = fresh
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _canonical_key(n: int, edges: frozenset) -> tuple:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    cells = _wl_cells(n, adj)
    slots: list[int] = []
    for cell in cells:
        slots.extend(range(len(slots), len(slots) + len(cell)))
    best = None
    for perm_parts in product(*(permutations(c) for c in cells)):
        mapping = {}
        i = 0
        for part in perm_parts:
            for v in part:
                mapping[v] = slots[i]
                i += 1
        key = tuple(sorted((min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                           for u, v in edges))
        if best is None or key < best:
            best = key
    return (n, best)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, by vertex augmentation."""
    if n == 0:
        return ()
    if n == 1:
        return (Graph.build(1, []),)
    out: dict[tuple, Graph] = {}
    for g in all_graphs(n - 1):
        for mask in range(2 ** (n - 1)):
            edges = set(g.edges)
            for u in range(n - 1):
                if mask >> u & 1:
                    edges.add((u, n - 1))
            key = _canonical_key(n, frozenset(edges))
            if key not in out:
                out[key] = Graph.build(n, sorted(edges))
    return tuple(out.values())


def all_connected_graphs(max_n: int) -> list[Graph]:
    from .graphs import is_connected
    result = []
    for n in range(1, max_n + 1):
        result.extend(g for g in all_graphs(n) if is_connected(g))
    return result
