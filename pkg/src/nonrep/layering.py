"""Layerings, BFS layerings, shadows and shadow-completeness."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graphs import (Graph, InputError, VertexSet, connected_components,
                     induced_subgraph, is_clique, is_connected)


@dataclass(frozen=True)
class Layering:
    layers: tuple[VertexSet, ...]

    def __post_init__(self):
        if self.layers and not self.layers[-1]:
            raise InputError("trailing empty layer")

    def depth_of(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def to_json(self) -> str:
        return json.dumps([list(layer) for layer in self.layers])

    @staticmethod
    def from_json(text: str) -> "Layering":
        data = json.loads(text)
        return Layering(tuple(tuple(sorted(layer)) for layer in data))


def bfs_layering(g: Graph, root: int) -> Layering:
    """Layer a connected graph by exact distance from the root."""
    if not 0 <= root < g.n:
        raise InputError(f"root {root} out of range")
    if not is_connected(g):
        raise InputError("bfs_layering requires a connected graph; layer per component")
    dist = [-1] * g.n
    dist[root] = 0
    q = deque([root])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    layers: list[list[int]] = [[] for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        layers[d].append(v)
    return Layering(tuple(tuple(sorted(layer)) for layer in layers))


def validate_layering(g: Graph, lay: Layering) -> Optional[tuple[int, int]]:
    """None if every edge spans depths differing by <= 1, else a violating edge."""
    depth = lay.depth_of()
    if sorted(depth) != list(range(g.n)):
        raise InputError("layering is not a partition of the vertex set")
    for u, v in g.edges:
        if abs(depth[u] - depth[v]) > 1:
            return (u, v)
    return None


def shadows(g: Graph, lay: Layering) -> list[tuple[VertexSet, VertexSet]]:
    """(component, shadow) for every component of each depth->=i suffix, i >= 1.

    The shadow of a component H of G[V_i + V_{i+1} + ...] is the set of
    vertices of V_{i-1} adjacent to H.
    """
    if validate_layering(g, lay) is not None:
        raise InputError("invalid layering")
    out: list[tuple[VertexSet, VertexSet]] = []
    for i in range(1, len(lay.layers)):
        suffix = sorted(v for layer in lay.layers[i:] for v in layer)
        above = set(lay.layers[i - 1])
        sub, mapping = induced_subgraph(g, suffix)
        inv = {b: a for a, b in mapping.items()}
        for comp in connected_components(sub):
            horig = tuple(sorted(inv[v] for v in comp))
            sh = set()
            for v in horig:
                sh.update(w for w in g.adj[v] if w in above)
            out.append((horig, tuple(sorted(sh))))
    return out


def is_shadow_complete(g: Graph, lay: Layering) -> Optional[tuple[VertexSet, tuple[int, int]]]:
    """None if every shadow is a clique, else (component, non-adjacent pair)."""
    for comp, sh in shadows(g, lay):
        if not is_clique(g, sh):
            for a in range(len(sh)):
                for b in range(a + 1, len(sh)):
                    if not g.has_edge(sh[a], sh[b]):
                        return (comp, (sh[a], sh[b]))
    return None
