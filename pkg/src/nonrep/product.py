"""Strong products, complete joins, and colouring composition.

Product vertices are indexed row-major: (a, b) -> a * |V(B)| + b, and
paired colours the same way: (c1, c2) -> c1 * p2 + c2.  Certificates
reference this ordering.
"""
from __future__ import annotations

from dataclasses import dataclass

from .colouring import Colouring
from .graphs import Graph, InputError
from .words import path_colouring_4

PRODUCT_SIZE_LIMIT = 10 ** 6


@dataclass(frozen=True)
class ProductVertexIndex:
    n_left: int
    n_right: int

    def encode(self, a: int, b: int) -> int:
        if not (0 <= a < self.n_left and 0 <= b < self.n_right):
            raise InputError(f"pair ({a}, {b}) out of range")
        return a * self.n_right + b

    def decode(self, i: int) -> tuple[int, int]:
        if not 0 <= i < self.size:
            raise InputError(f"product index {i} out of range")
        return divmod(i, self.n_right)

    @property
    def size(self) -> int:
        return self.n_left * self.n_right


def strong_product(a: Graph, b: Graph,
                   limit: int = PRODUCT_SIZE_LIMIT) -> tuple[Graph, ProductVertexIndex]:
    """A box-times B: move along an edge or stay, in each coordinate, not both staying."""
    if a.n * b.n > limit:
        raise InputError(f"product on {a.n * b.n} vertices exceeds limit {limit}")
    idx = ProductVertexIndex(a.n, b.n)
    edges = []
    for u, v in a.edges:
        for x in range(b.n):
            edges.append((idx.encode(u, x), idx.encode(v, x)))
    for x, y in b.edges:
        for u in range(a.n):
            edges.append((idx.encode(u, x), idx.encode(u, y)))
    for u, v in a.edges:
        for x, y in b.edges:
            edges.append((idx.encode(u, x), idx.encode(v, y)))
            edges.append((idx.encode(u, y), idx.encode(v, x)))
    return Graph.build(a.n * b.n, edges), idx


def join_complete(g: Graph, k: int) -> Graph:
    """g plus k fresh vertices adjacent to everything, including each other."""
    if k < 0:
        raise InputError("join size must be >= 0")
    edges = list(g.edges)
    for j in range(k):
        w = g.n + j
        edges.extend((v, w) for v in range(w))
    return Graph.build(g.n + k, edges)


def compose_product_colouring(phi1: Colouring, phi2: Colouring,
                              idx: ProductVertexIndex) -> Colouring:
    """Pair colouring of A box-times B from phi1 on A and phi2 on B.

    phi1 must be strongly nonrepetitive on A and phi2 must make every
    phi2-repetitive lazy walk in B boring; both are caller obligations
    (re-verified in tests, not here).
    """
    if len(phi1.colours) != idx.n_left or len(phi2.colours) != idx.n_right:
        raise InputError("colouring sizes do not match the product index")
    p2 = phi2.palette
    colours = [0] * idx.size
    for a in range(idx.n_left):
        base = phi1.colours[a] * p2
        for b in range(idx.n_right):
            colours[idx.encode(a, b)] = base + phi2.colours[b]
    return Colouring(tuple(colours), phi1.palette * p2)


def compose_path_factor(phi1: Colouring, m: int, idx: ProductVertexIndex) -> Colouring:
    """Colouring of G box-times P_m with palette <= 4 * p1."""
    if m < 1:
        raise InputError("path factor needs at least one vertex")
    return compose_product_colouring(phi1, path_colouring_4(m), idx)


def compose_clique_factor(phi1: Colouring, ell: int, idx: ProductVertexIndex) -> Colouring:
    """Colouring of G box-times K_ell with palette <= ell * p1.

    The clique factor gets the identity colouring: the colour determines
    the vertex, so every repetitive lazy walk in K_ell is boring.
    """
    if ell < 1:
        raise InputError("clique factor needs at least one vertex")
    phi2 = Colouring(tuple(range(ell)), ell)
    return compose_product_colouring(phi1, phi2, idx)


def compose_join(phi: Colouring, k: int) -> Colouring:
    """Colouring of G + K_k: the k join vertices take k fresh colours."""
    if k < 0:
        raise InputError("join size must be >= 0")
    p = phi.palette
    colours = tuple(phi.colours) + tuple(p + j for j in range(k))
    return Colouring(colours, p + k)
