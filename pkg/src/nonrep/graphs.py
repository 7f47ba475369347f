"""Simple undirected graphs with dense integer vertices.

Graphs are immutable after construction; every operation returns a new
graph.  Two text formats are supported: an edge-list format with a
mandatory ``n <count>`` header (so isolated vertices survive a
round-trip) and read-only graph6.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class InputError(ValueError):
    """Malformed or out-of-contract input (maps to CLI exit code 1)."""


VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False)

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Normalise and validate: no loops, no duplicates, indices in range."""
        if n < 0:
            raise InputError("vertex count must be >= 0")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u} rejected")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InputError(f"duplicate edge {e} rejected")
            seen.add(e)
        sorted_edges = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted_edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return Graph(n, sorted_edges, tuple(tuple(sorted(a)) for a in nbrs))

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set()

    def _edge_set(self) -> frozenset[tuple[int, int]]:
        es = getattr(self, "_edges_frozen", None)
        if es is None:
            es = frozenset(self.edges)
            object.__setattr__(self, "_edges_frozen", es)
        return es

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)


# -- constructions ----------------------------------------------------------

def edgeless_graph(n: int) -> Graph:
    return Graph.build(n, [])


def path_graph(n: int) -> Graph:
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def octahedron() -> Graph:
    """K_{2,2,2}: all pairs except the three antipodal ones."""
    anti = {(0, 1), (2, 3), (4, 5)}
    return Graph.build(6, [(i, j) for i in range(6) for j in range(i + 1, 6)
                           if (i, j) not in anti])


def icosahedron() -> Graph:
    """Two pentagonal rings between two apexes; 12 vertices, 30 edges."""
    edges = [(0, i) for i in range(1, 6)]
    edges += [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(i, (i - 5) % 5 + 6) for i in range(6, 11)]
    edges += [(11, i) for i in range(6, 11)]
    for i in range(5):
        upper = 1 + i
        edges.append((upper, 6 + i))
        edges.append((upper, 6 + (i + 1) % 5))
    return Graph.build(12, edges)


# -- parsing / serialising --------------------------------------------------

def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise InputError(f"unknown graph format {fmt!r}")


def _parse_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise InputError(f"expected header 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise InputError(f"bad vertex count {head[1]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"malformed edge line {ln!r}") from None
        edges.append((u, v))
    return Graph.build(n, edges)


def serialize_graph(g: Graph) -> str:
    out = [f"n {g.n}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def parse_graph6(text: str) -> Graph:
    """Decode one graph in graph6 format (read-only support)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise InputError("empty graph6 input")
    data = s.encode("ascii", errors="strict") if isinstance(s, str) else s
    for b in data:
        if not 63 <= b <= 126:
            raise InputError(f"invalid graph6 byte {b}")
    pos = 0
    if data[0] == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise InputError("truncated graph6 size")
            n = 0
            for b in data[2:8]:
                n = (n << 6) | (b - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise InputError("truncated graph6 size")
            n = 0
            for b in data[1:4]:
                n = (n << 6) | (b - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos < need:
        raise InputError("truncated graph6 body")
    bits = []
    for b in data[pos:pos + need]:
        x = b - 63
        bits.extend(((x >> shift) & 1) for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.build(n, edges)


# -- elementary queries ------------------------------------------------------

def _check_vertices(g: Graph, s: Iterable[int]) -> None:
    for v in s:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s`` with a dense reindexing; returns (graph, old->new)."""
    vs = sorted(set(s))
    _check_vertices(g, vs)
    mapping = {v: i for i, v in enumerate(vs)}
    inside = set(vs)
    edges = [(mapping[u], mapping[v]) for u, v in g.edges
             if u in inside and v in inside]
    return Graph.build(len(vs), edges), mapping


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = sorted(set(s))
    _check_vertices(g, vs)
    es = g._edge_set()
    return all((vs[i], vs[j]) in es
               for i in range(len(vs)) for j in range(i + 1, len(vs)))


def connected_components(g: Graph) -> list[VertexSet]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def contract_set(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Contract a nonempty connected set ``s`` into one vertex.

    The contracted vertex takes the slot of min(s); all other vertices are
    reindexed densely in order.  Returns (graph, old->new mapping).
    """
    vs = sorted(set(s))
    if not vs:
        raise InputError("cannot contract an empty set")
    _check_vertices(g, vs)
    sub, _ = induced_subgraph(g, vs)
    if not is_connected(sub):
        raise InputError("contracted set must induce a connected subgraph")
    inside = set(vs)
    rep = vs[0]
    kept = [v for v in range(g.n) if v not in inside or v == rep]
    mapping_kept = {v: i for i, v in enumerate(kept)}
    mapping = {v: (mapping_kept[rep] if v in inside else mapping_kept[v])
               for v in range(g.n)}
    edges = set()
    for u, v in g.edges:
        nu, nv = mapping[u], mapping[v]
        if nu != nv:
            edges.add((min(nu, nv), max(nu, nv)))
    return Graph.build(g.n - len(vs) + 1, sorted(edges)), mapping
