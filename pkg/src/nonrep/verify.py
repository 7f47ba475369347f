"""Sound, bounded-complete certification of colourings.

Repetitive-path search enumerates half/half vertex pairs depth-first, so
the colour constraint prunes at every step.  Lazy-walk searches run over
pairs (w_i, w_{i+k}) as boolean matrix reachability: a violating walk of
length 2k is a pair-path of k steps whose ends satisfy the glue condition
w_{k+1} in N[w_k].  Verdicts always carry the caps used and a
completeness flag; a bounded search never claims more than it covered.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .colouring import Colouring
from .graphs import Graph, InputError

_CHUNK = 32


@dataclass(frozen=True)
class Verdict:
    passed: bool
    kind: str
    counterexample: Optional[tuple[int, ...]]
    caps: dict = field(default_factory=dict)
    complete: bool = False

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "kind": self.kind,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "caps": dict(self.caps),
            "complete": self.complete,
        }


def _check_sizes(g: Graph, phi: Colouring) -> None:
    if len(phi.colours) != g.n:
        raise InputError(f"colouring covers {len(phi.colours)} vertices, graph has {g.n}")


def is_proper(g: Graph, phi: Colouring) -> Verdict:
    _check_sizes(g, phi)
    for u, v in g.edges:
        if phi.colours[u] == phi.colours[v]:
            return Verdict(False, "proper", (u, v), complete=True)
    return Verdict(True, "proper", None, complete=True)


# -- repetitive paths --------------------------------------------------------

def find_repetitive_path(g: Graph, phi: Colouring, max_order: int = 12) -> Verdict:
    """Search all simple paths of even order <= max_order for a repetition.

    A path v_1..v_2t is enumerated as the pair sequence (v_i, v_{t+i}),
    which pins the colour of v_{t+i} to that of v_i; the two halves are
    grown in lockstep and the joining edge v_t v_{t+1} is checked last.
    Enumeration order (t ascending, then start vertex, then neighbours in
    ascending order) makes the first counterexample deterministic.
    """
    _check_sizes(g, phi)
    if max_order < 2 or max_order % 2 != 0:
        raise InputError("max_order must be even and >= 2")
    n = g.n
    complete = max_order >= 2 * (n // 2)
    caps = {"max_order": max_order}
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(phi.colours[v], []).append(v)
    for t in range(1, min(max_order // 2, n // 2) + 1):
        hit = _repetitive_path_half(g, phi.colours, classes, t)
        if hit is not None:
            return Verdict(False, "repetitive-path", hit, caps, complete)
    return Verdict(True, "repetitive-path", None, caps, complete)


def _repetitive_path_half(g, colours, classes, t):
    adj = g.adj
    by_colour: list[dict[int, list[int]]] = []
    for v in range(g.n):
        buckets: dict[int, list[int]] = {}
        for w in adj[v]:
            buckets.setdefault(colours[w], []).append(w)
        by_colour.append(buckets)

    def extend(first: list[int], second: list[int], used: set[int]):
        if len(first) == t:
            if g.has_edge(first[-1], second[0]):
                return tuple(first + second)
            return None
        for a in adj[first[-1]]:
            if a in used:
                continue
            ca = colours[a]
            for b in by_colour[second[-1]].get(ca, ()):
                if b == a or b in used:
                    continue
                used.add(a)
                used.add(b)
                first.append(a)
                second.append(b)
                res = extend(first, second, used)
                if res is not None:
                    return res
                first.pop()
                second.pop()
                used.discard(a)
                used.discard(b)
        return None

    for v1 in range(g.n):
        for w1 in classes.get(colours[v1], ()):
            if w1 == v1:
                continue
            res = extend([v1], [w1], {v1, w1})
            if res is not None:
                return res
    return None


# -- lazy-walk machinery -----------------------------------------------------

def _loops_matrix(g: Graph) -> np.ndarray:
    a = np.eye(g.n, dtype=np.float32)
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def find_bad_lazy_walk(g: Graph, phi: Colouring, max_len: int = 10) -> Verdict:
    """Search for a repetitive lazy walk v_1..v_2k with v_i != v_{i+k} for all i.

    For each candidate second-half start y, reachable pairs (w_i, w_{i+k})
    are propagated by boolean matrix products; success at step k means a
    pair (z, t) is reachable with z adjacent-or-equal to y.  The witness is
    selected deterministically: minimal walk length, then minimal first
    vertex, then minimal y, then greedy lexicographic pair choices.
    """
    _check_sizes(g, phi)
    if max_len < 2 or max_len % 2 != 0:
        raise InputError("max_len must be even and >= 2")
    caps = {"max_len": max_len}
    n = g.n
    complete = g.m == 0
    if n == 0 or g.m == 0:
        return Verdict(True, "bad-lazy-walk", None, caps, complete)

    a = _loops_matrix(g)
    pal = np.array(phi.colours)
    eq = pal[:, None] == pal[None, :]
    np.fill_diagonal(eq, False)
    cmask = eq
    cfloat = cmask.astype(np.float32)
    kmax = max_len // 2

    ys = [y for y in range(n) if cmask[:, y].any()]
    best_k: Optional[int] = None
    hit_ys: list[int] = []
    for lo in range(0, len(ys), _CHUNK):
        chunk = ys[lo:lo + _CHUNK]
        depth_cap = kmax if best_k is None else best_k
        r = np.zeros((len(chunk), n, n), dtype=np.float32)
        for j, y in enumerate(chunk):
            r[j, :, y] = cfloat[:, y]
        for k in range(1, depth_cap + 1):
            if k > 1:
                r = np.matmul(np.matmul(a, r), a)
                r = ((r > 0.5) & cmask).astype(np.float32)
            for j, y in enumerate(chunk):
                if (r[j] * a[:, y][:, None]).any():
                    if best_k is None or k < best_k:
                        best_k, hit_ys = k, [y]
                    elif k == best_k and y not in hit_ys:
                        hit_ys.append(y)
            if best_k is not None and k >= best_k:
                break
    if best_k is None:
        return Verdict(True, "bad-lazy-walk", None, caps, complete)
    walk = None
    for y in sorted(hit_ys):
        x = _bad_walk_min_start(a, cmask, best_k, y)
        if x is not None and (walk is None or (x, y) < walk[:2]):
            walk = (x, y)
    walk = _reconstruct_bad_walk(a, cmask, best_k, walk[1])
    return Verdict(False, "bad-lazy-walk", walk, caps, complete)


def _bad_walk_levels(a, cmask, k, y):
    n = a.shape[0]
    levels = []
    r = np.zeros((n, n), dtype=np.float32)
    r[:, y] = cmask[:, y]
    levels.append(r > 0.5)
    for _ in range(2, k + 1):
        r = np.matmul(np.matmul(a, r), a)
        r = ((r > 0.5) & cmask).astype(np.float32)
        levels.append(r > 0.5)
    glue = a[:, y] > 0.5
    back = [None] * k
    back[k - 1] = levels[k - 1] & glue[:, None]
    for i in range(k - 2, -1, -1):
        pre = np.matmul(np.matmul(a, back[i + 1].astype(np.float32)), a) > 0.5
        back[i] = levels[i] & pre
    return back


def _bad_walk_min_start(a, cmask, k, y):
    back = _bad_walk_levels(a, cmask, k, y)
    starts = np.flatnonzero(back[0][:, y])
    return int(starts[0]) if starts.size else None


def _reconstruct_bad_walk(a, cmask, k, y):
    back = _bad_walk_levels(a, cmask, k, y)
    abool = a > 0.5
    starts = np.flatnonzero(back[0][:, y])
    cur = (int(starts[0]), y)
    first, second = [cur[0]], [cur[1]]
    for i in range(1, k):
        nxt = None
        cand_a = np.flatnonzero(abool[cur[0]])
        for aa in cand_a:
            row = back[i][aa] & abool[cur[1]]
            bb = np.flatnonzero(row)
            if bb.size:
                nxt = (int(aa), int(bb[0]))
                break
        cur = nxt
        first.append(cur[0])
        second.append(cur[1])
    return tuple(first + second)


def find_nonboring_repetitive_walk(g: Graph, phi: Colouring, max_len: int = 12) -> Verdict:
    """Search for a repetitive lazy walk with v_i != v_{i+k} for SOME i.

    Same pair propagation as find_bad_lazy_walk but pairs may coincide;
    a one-bit flag (carried by keeping equal-so-far pairs as a separate
    diagonal front) records whether any unequal pair has occurred.
    """
    _check_sizes(g, phi)
    if max_len < 2 or max_len % 2 != 0:
        raise InputError("max_len must be even and >= 2")
    caps = {"max_len": max_len}
    n = g.n
    complete = g.m == 0
    if n == 0 or g.m == 0:
        return Verdict(True, "non-boring-walk", None, caps, complete)

    a = _loops_matrix(g)
    abool = a > 0.5
    pal = np.array(phi.colours)
    eq_all = pal[:, None] == pal[None, :]
    eq_off = eq_all.copy()
    np.fill_diagonal(eq_off, False)
    kmax = max_len // 2

    best_k: Optional[int] = None
    hit_ys: list[int] = []
    for y in range(n):
        depth_cap = kmax if best_k is None else best_k
        r1 = np.zeros((n, n), dtype=bool)
        r1[:, y] = eq_off[:, y]
        r0 = np.zeros(n, dtype=bool)
        r0[y] = True
        for k in range(1, depth_cap + 1):
            if k > 1:
                d = a[:, r0]
                m = (np.matmul(d, d.T) > 0.5) & eq_off
                r1f = np.matmul(np.matmul(a, r1.astype(np.float32)), a)
                r1 = (((r1f > 0.5) & eq_all) | m)
                r0 = np.matmul(a, r0.astype(np.float32)) > 0.5
            if (r1 & abool[:, y][:, None]).any():
                if best_k is None or k < best_k:
                    best_k, hit_ys = k, [y]
                elif k == best_k:
                    hit_ys.append(y)
                break
    if best_k is None:
        return Verdict(True, "non-boring-walk", None, caps, complete)
    pick = None
    for y in hit_ys:
        parts = _nonboring_backward(a, eq_all, eq_off, best_k, y)
        x = _nonboring_min_start(parts, y)
        if x is not None and (pick is None or (x, y) < pick[:2]):
            pick = (x, y)
    walk = _reconstruct_nonboring_walk(a, eq_all, eq_off, best_k, pick[1])
    return Verdict(False, "non-boring-walk", walk, caps, complete)


def _nonboring_min_start(parts, y):
    b1, b0 = parts
    best = None
    if b0[0][y]:
        best = y
    cands = np.flatnonzero(b1[0][:, y])
    if cands.size and (best is None or int(cands[0]) < best):
        best = int(cands[0])
    return best


def _nonboring_backward(a, eq_all, eq_off, k, y):
    n = a.shape[0]
    abool = a > 0.5
    lv1, lv0 = [], []
    r1 = np.zeros((n, n), dtype=bool)
    r1[:, y] = eq_off[:, y]
    r0 = np.zeros(n, dtype=bool)
    r0[y] = True
    lv1.append(r1)
    lv0.append(r0)
    for _ in range(2, k + 1):
        d = a[:, r0]
        m = (np.matmul(d, d.T) > 0.5) & eq_off
        r1f = np.matmul(np.matmul(a, r1.astype(np.float32)), a)
        r1 = ((r1f > 0.5) & eq_all) | m
        r0 = np.matmul(a, r0.astype(np.float32)) > 0.5
        lv1.append(r1)
        lv0.append(r0)
    b1 = [None] * k
    b0 = [None] * k
    b1[k - 1] = lv1[k - 1] & abool[:, y][:, None]
    b0[k - 1] = np.zeros(n, dtype=bool)
    for i in range(k - 2, -1, -1):
        bf = b1[i + 1].astype(np.float32)
        pre1 = np.matmul(np.matmul(a, bf), a) > 0.5
        b1[i] = lv1[i] & pre1
        off = (b1[i + 1] & eq_off).astype(np.float32)
        land = np.einsum("ij,jk,ki->i", a, off, a) > 0.5
        stay = np.matmul(a, b0[i + 1].astype(np.float32)) > 0.5
        b0[i] = lv0[i] & (stay | land)
    return b1, b0


def _reconstruct_nonboring_walk(a, eq_all, eq_off, k, y):
    abool = a > 0.5
    b1, b0 = _nonboring_backward(a, eq_all, eq_off, k, y)
    # deterministic start: smallest first component among flag-0/flag-1 starts
    start_first = None
    if b0[0][y]:
        start_first = (y, y, False)
    cands = np.flatnonzero(b1[0][:, y])
    if cands.size and (start_first is None or int(cands[0]) < start_first[0]):
        start_first = (int(cands[0]), y, True)
    cur_a, cur_b, flag = start_first
    first, second = [cur_a], [cur_b]
    for i in range(1, k):
        nxt = None
        if not flag:
            for aa in np.flatnonzero(abool[cur_a]):
                opts = []
                if b0[i][aa]:
                    opts.append((int(aa), int(aa), False))
                row = b1[i][aa] & abool[cur_a]
                row[aa] = False  # diagonal landing keeps the flag unset
                bs = np.flatnonzero(row)
                if bs.size:
                    opts.append((int(aa), int(bs[0]), True))
                if opts:
                    nxt = min(opts, key=lambda o: (o[0], o[1]))
                    break
        else:
            for aa in np.flatnonzero(abool[cur_a]):
                row = b1[i][aa] & abool[cur_b]
                bs = np.flatnonzero(row)
                if bs.size:
                    nxt = (int(aa), int(bs[0]), True)
                    break
        cur_a, cur_b, flag = nxt
        first.append(cur_a)
        second.append(cur_b)
    return tuple(first + second)


# -- independent re-checks (used by tests and defensive asserts) -------------

def recheck_lazy_walk(g: Graph, walk: tuple[int, ...]) -> bool:
    return all(u == v or g.has_edge(u, v) for u, v in zip(walk, walk[1:]))


def recheck_repetitive(phi: Colouring, walk: tuple[int, ...]) -> bool:
    k = len(walk) // 2
    return len(walk) % 2 == 0 and k >= 1 and all(
        phi.colours[walk[i]] == phi.colours[walk[i + k]] for i in range(k))


def recheck_repetitive_path(g: Graph, phi: Colouring, path: tuple[int, ...]) -> bool:
    if len(set(path)) != len(path):
        return False
    if not all(g.has_edge(u, v) for u, v in zip(path, path[1:])):
        return False
    return recheck_repetitive(phi, path)


def recheck_bad_lazy_walk(g: Graph, phi: Colouring, walk: tuple[int, ...]) -> bool:
    k = len(walk) // 2
    return (recheck_lazy_walk(g, walk) and recheck_repetitive(phi, walk)
            and all(walk[i] != walk[i + k] for i in range(k)))


def recheck_nonboring_walk(g: Graph, phi: Colouring, walk: tuple[int, ...]) -> bool:
    k = len(walk) // 2
    return (recheck_lazy_walk(g, walk) and recheck_repetitive(phi, walk)
            and any(walk[i] != walk[i + k] for i in range(k)))


# -- exact brute-force oracle -------------------------------------------------

def exact_pi(g: Graph, max_colours: int = 6) -> Optional[int]:
    """Smallest palette admitting a nonrepetitive colouring, or None beyond cap.

    Backtracking over vertices 0..n-1; after each assignment only
    repetitions through the newest vertex are checked, which is sufficient
    because the previous partial colouring was repetition-free.
    """
    if g.n > 10:
        raise InputError("exact_pi is limited to 10 vertices")
    if max_colours > 6:
        raise InputError("exact_pi is limited to 6 colours")
    if g.n == 0:
        return 0
    for p in range(1, max_colours + 1):
        if _search_nonrep(g, p):
            return p
    return None


def _search_nonrep(g: Graph, palette: int) -> bool:
    n = g.n
    colours = [-1] * n

    def creates_repetition(v: int) -> bool:
        # repetitive even path containing v inside the coloured prefix
        limit = v + 1
        for u in g.adj[v]:
            if u < limit and colours[u] == colours[v]:
                return True
        found = False

        def dfs(path: list[int], used: set[int]):
            nonlocal found
            if found:
                return
            ln = len(path)
            if ln >= 2 and ln % 2 == 0 and v in used:
                t = ln // 2
                if all(colours[path[i]] == colours[path[i + t]] for i in range(t)):
                    found = True
                    return
            for w in g.adj[path[-1]]:
                if w >= limit or w in used:
                    continue
                path.append(w)
                used.add(w)
                dfs(path, used)
                path.pop()
                used.discard(w)
                if found:
                    return

        for start in range(limit):
            dfs([start], {start})
            if found:
                return True
        return False

    def assign(v: int, max_used: int) -> bool:
        if v == n:
            return True
        for c in range(min(palette, max_used + 2)):
            colours[v] = c
            if not creates_repetition(v):
                if assign(v + 1, max(max_used, c)):
                    return True
        colours[v] = -1
        return False

    return assign(0, -1)
