"""Tree-decompositions: representation, PACE I/O, validation, width,
r-richness, chordal completion, min-fill heuristic and exact treewidth.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graphs import Graph, InputError, VertexSet, is_clique


@dataclass(frozen=True)
class TreeDecomposition:
    num_nodes: int
    tree_edges: tuple[tuple[int, int], ...]
    bags: tuple[VertexSet, ...]

    def __post_init__(self):
        if self.num_nodes != len(self.bags):
            raise InputError("bag count does not match node count")
        if self.num_nodes == 0:
            raise InputError("a tree-decomposition needs at least one node")
        if len(self.tree_edges) != self.num_nodes - 1:
            raise InputError("tree edge count must be node count - 1")
        seen = {0} if self.num_nodes else set()
        adj = [[] for _ in range(self.num_nodes)]
        for x, y in self.tree_edges:
            if not (0 <= x < self.num_nodes and 0 <= y < self.num_nodes) or x == y:
                raise InputError(f"bad tree edge ({x}, {y})")
            adj[x].append(y)
            adj[y].append(x)
        stack = [0]
        seen = {0}
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.num_nodes:
            raise InputError("tree edges do not form a tree")

    def node_adj(self) -> list[list[int]]:
        adj = [[] for _ in range(self.num_nodes)]
        for x, y in self.tree_edges:
            adj[x].append(y)
            adj[y].append(x)
        return adj


def width(td: TreeDecomposition) -> int:
    biggest = max(len(b) for b in td.bags)
    if biggest == 0:
        raise InputError("width of an all-empty decomposition is undefined")
    return biggest - 1


def parse_td(text: str) -> TreeDecomposition:
    """Parse a PACE 2017 .td file (1-based on disk, 0-based in memory)."""
    header = None
    bags: dict[int, VertexSet] = {}
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise InputError("duplicate s-line")
            if len(parts) != 5 or parts[1] != "td":
                raise InputError(f"bad s-line {line!r}")
            header = tuple(int(x) for x in parts[2:])
        elif parts[0] == "b":
            if len(parts) < 2:
                raise InputError(f"bad bag line {line!r}")
            bid = int(parts[1])
            if bid in bags:
                raise InputError(f"duplicate bag id {bid}")
            bags[bid] = tuple(sorted(int(v) - 1 for v in parts[2:]))
        else:
            if len(parts) != 2:
                raise InputError(f"bad tree-edge line {line!r}")
            edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
    if header is None:
        raise InputError("missing s-line")
    nbags, _, n = header
    if set(bags) != set(range(1, nbags + 1)):
        raise InputError("bag ids must be 1..#bags")
    bag_list = [bags[i] for i in range(1, nbags + 1)]
    for b in bag_list:
        for v in b:
            if not 0 <= v < n:
                raise InputError(f"bag vertex {v + 1} outside 1..{n}")
    return TreeDecomposition(nbags, tuple(edges), tuple(bag_list))


def write_td(td: TreeDecomposition, n: int) -> str:
    biggest = max(len(b) for b in td.bags)
    out = [f"s td {td.num_nodes} {biggest} {n}"]
    for i, bag in enumerate(td.bags):
        out.append(" ".join(["b", str(i + 1)] + [str(v + 1) for v in bag]))
    for x, y in td.tree_edges:
        out.append(f"{x + 1} {y + 1}")
    return "\n".join(out) + "\n"


def validate_td(g: Graph, td: TreeDecomposition):
    """None if valid for g, else (axiom-name, witness)."""
    for bag in td.bags:
        for v in bag:
            if not 0 <= v < g.n:
                raise InputError(f"bag vertex {v} out of range")
    nodes_of: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for x, bag in enumerate(td.bags):
        for v in bag:
            nodes_of[v].append(x)
    for v in range(g.n):
        if not nodes_of[v]:
            return ("vertex-coverage", v)
    adj = td.node_adj()
    for v, nodes in nodes_of.items():
        inside = set(nodes)
        stack = [nodes[0]]
        seen = {nodes[0]}
        while stack:
            x = stack.pop()
            for ynode in adj[x]:
                if ynode in inside and ynode not in seen:
                    seen.add(ynode)
                    stack.append(ynode)
        if len(seen) != len(inside):
            return ("subtree-connectivity", v)
    bag_sets = [set(b) for b in td.bags]
    for u, v in g.edges:
        if not any(u in b and v in b for b in bag_sets):
            return ("edge-coverage", (u, v))
    return None


def is_r_rich(g: Graph, td: TreeDecomposition, r: int):
    """None if every adjacent-bag intersection is a clique of size <= r,
    else (tree-edge, reason)."""
    for x, y in td.tree_edges:
        inter = tuple(sorted(set(td.bags[x]) & set(td.bags[y])))
        if len(inter) > r:
            return ((x, y), f"intersection of size {len(inter)} exceeds {r}")
        if not is_clique(g, inter):
            return ((x, y), "intersection is not a clique")
    return None


def chordal_completion(g: Graph, td: TreeDecomposition) -> Graph:
    """Supergraph of g in which every bag induces a clique."""
    err = validate_td(g, td)
    if err is not None:
        raise InputError(f"invalid tree-decomposition: {err}")
    edges = set(g.edges)
    for bag in td.bags:
        for u, v in combinations(bag, 2):
            edges.add((u, v))
    return Graph.build(g.n, sorted(edges))


def is_chordal(g: Graph) -> bool:
    """Maximum-cardinality search followed by a perfect-elimination check."""
    n = g.n
    if n == 0:
        return True
    weight = [0] * n
    order: list[int] = []
    picked = [False] * n
    for _ in range(n):
        v = max((w, -u, u) for u, w in enumerate(weight) if not picked[u])[2]
        picked[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not picked[w]:
                weight[w] += 1
    # MCS order reversed is a perfect elimination ordering iff chordal
    rorder = list(reversed(order))
    rpos = {v: i for i, v in enumerate(rorder)}
    for v in rorder:
        later = [w for w in g.adj[v] if rpos[w] > rpos[v]]
        if later:
            first = min(later, key=lambda w: rpos[w])
            rest = set(later) - {first}
            if not rest <= set(g.adj[first]):
                return False
    return True


def _elimination_to_td(g: Graph, order: list[int]) -> TreeDecomposition:
    """Bags from an elimination ordering; classic parent = earliest-eliminated
    other bag member."""
    n = g.n
    if n == 0:
        raise InputError("cannot decompose the empty graph")
    nbrs = [set(a) for a in g.adj]
    pos = {v: i for i, v in enumerate(order)}
    bags: list[VertexSet] = []
    for v in order:
        bag = tuple(sorted({v} | nbrs[v]))
        bags.append(bag)
        for u in nbrs[v]:
            nbrs[u].update(nbrs[v] - {u})
            nbrs[u].discard(v)
        for u in list(nbrs[v]):
            nbrs[v].discard(u)
    edges = []
    for i, v in enumerate(order):
        rest = [u for u in bags[i] if u != v]
        if rest:
            j = min(pos[u] for u in rest)
            edges.append((i, j))
        elif i + 1 < n:
            edges.append((i, i + 1))
    return TreeDecomposition(n, tuple(edges), tuple(bags))


def heuristic_td(g: Graph) -> TreeDecomposition:
    """Min-fill elimination ordering (ties broken by vertex index)."""
    if g.n == 0:
        raise InputError("cannot decompose the empty graph")
    nbrs = [set(a) for a in g.adj]
    alive = set(range(g.n))
    order = []
    while alive:
        best = None
        for v in sorted(alive):
            fill = 0
            nb = sorted(nbrs[v])
            for i in range(len(nb)):
                for j in range(i + 1, len(nb)):
                    if nb[j] not in nbrs[nb[i]]:
                        fill += 1
            if best is None or fill < best[0]:
                best = (fill, v)
        v = best[1]
        order.append(v)
        for u in nbrs[v]:
            nbrs[u].update(nbrs[v] - {u})
            nbrs[u].discard(v)
        nbrs[v] = set()
        alive.discard(v)
    return _elimination_to_td(g, order)


def _max_clique_size(g: Graph) -> int:
    """Bron-Kerbosch with pivoting."""
    best = 0
    adj = [set(a) for a in g.adj]

    def expand(r: int, p: set[int], x: set[int]):
        nonlocal best
        if not p and not x:
            best = max(best, r)
            return
        if r + len(p) <= best:
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r + 1, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(0, set(range(g.n)), set())
    return best


def exact_treewidth(g: Graph, budget: int = 30) -> int:
    """Exact treewidth by branch-and-bound over elimination orderings.

    Simplicial vertices are eliminated eagerly (always safe), the
    max-clique size minus one is the lower bound, and the min-fill width
    is the initial upper bound.
    """
    if g.n > budget:
        raise InputError(f"graph has {g.n} vertices, exceeding the budget {budget}")
    if g.n == 0:
        raise InputError("treewidth of the empty graph is undefined")
    if g.m == 0:
        return 0
    ub = width(heuristic_td(g))
    lb = _max_clique_size(g) - 1
    if lb >= ub:
        return ub
    best = ub
    memo: dict[frozenset, int] = {}

    def simplicial(nbrs, v):
        nb = sorted(nbrs[v])
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if nb[j] not in nbrs[nb[i]]:
                    return False
        return True

    def eliminate(nbrs, v):
        for u in nbrs[v]:
            nbrs[u].update(nbrs[v] - {u})
            nbrs[u].discard(v)
        del nbrs[v]

    def bb(nbrs: dict[int, set[int]], g_so_far: int):
        nonlocal best
        if g_so_far >= best:
            return
        # eliminate simplicial vertices greedily
        changed = True
        while changed:
            changed = False
            for v in sorted(nbrs):
                if simplicial(nbrs, v):
                    g2 = max(g_so_far, len(nbrs[v]))
                    if g2 >= best:
                        return
                    g_so_far = g2
                    eliminate(nbrs, v)
                    changed = True
                    break
        if len(nbrs) <= 1:
            best = min(best, g_so_far)
            return
        key = frozenset(nbrs)
        prev = memo.get(key)
        if prev is not None and prev <= g_so_far:
            return
        memo[key] = g_so_far
        for v in sorted(nbrs, key=lambda u: (len(nbrs[u]), u)):
            if max(g_so_far, len(nbrs[v])) >= best:
                continue
            copy = {u: set(w) for u, w in nbrs.items()}
            g2 = max(g_so_far, len(copy[v]))
            eliminate(copy, v)
            bb(copy, g2)

    bb({v: set(g.adj[v]) for v in range(g.n)}, lb)
    return best


def restrict_td(td: TreeDecomposition, s: Iterable[int],
                mapping: Optional[dict[int, int]] = None) -> TreeDecomposition:
    """Intersect every bag with s, reindexing through mapping if given.

    Empty bags are kept so the tree shape survives.
    """
    keep = set(s)
    bags = []
    for bag in td.bags:
        sel = [v for v in bag if v in keep]
        if mapping is not None:
            sel = [mapping[v] for v in sel]
        bags.append(tuple(sorted(sel)))
    return TreeDecomposition(td.num_nodes, td.tree_edges, tuple(bags))
