"""Square-free ternary words and the walk-safe 4-colouring of paths.

The ternary word is the fixed point of the square-free-preserving
morphism 0 -> 012, 1 -> 02, 2 -> 1 (iteration from "0" yields
successive prefixes of the infinite word, so the output is
deterministic and prefix-consistent).

The path colouring reserves colour 3 for every position p with
p = 1 (mod 3) (1-based) and spends successive letters of the ternary
word on all remaining positions.  Equal colours are then at distance
at least 3, so in a repetitive lazy walk the offsets w_{i+k} - w_i
either all vanish (the walk is boring) or all stay >= 3 in absolute
value; in the latter case the separator grid pins the offsets and any
surviving walk would read a literal square in the ternary word.  The
property is machine-checked by verify_boring, not assumed.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from .colouring import Colouring
from .graphs import InputError, path_graph
from .verify import Verdict, find_nonboring_repetitive_walk

_MORPHISM = {0: (0, 1, 2), 1: (0, 2), 2: (1,)}

Word = tuple[int, ...]


def ternary_squarefree(n: int) -> Word:
    """Length-n prefix of the square-free ternary fixed-point word."""
    if n < 0:
        raise InputError("word length must be >= 0")
    if n == 0:
        return ()
    w: list[int] = [0]
    while len(w) < n:
        w = [x for letter in w for x in _MORPHISM[letter]]
    return tuple(w[:n])


def is_squarefree(word) -> Optional[tuple[int, int]]:
    """None if square-free, else the first square as (position, half-length).

    "First" orders by start position, then by half-length.  The scan is
    exhaustive over all O(n^2) candidate factors; equality of the two
    halves at offset h is tested for all starts at once per h.
    """
    w = np.asarray([int(c) for c in word], dtype=np.int64)
    n = w.size
    best: Optional[tuple[int, int]] = None
    for h in range(1, n // 2 + 1):
        same = w[:-h] == w[h:]
        if same.size < h:
            break
        window = np.convolve(same.astype(np.int32), np.ones(h, dtype=np.int32), "valid")
        hits = np.flatnonzero(window == h)
        hits = hits[hits + 2 * h <= n]
        if hits.size:
            cand = (int(hits[0]), h)
            if best is None or cand < best:
                best = cand
    return best


def word_to_string(word: Word) -> str:
    return "".join(str(c) for c in word)


def word_from_string(text: str) -> Word:
    try:
        return tuple(int(c) for c in text.strip())
    except ValueError:
        raise InputError(f"bad word string {text!r}") from None


def path_colouring_4(n: int) -> Colouring:
    """4-colouring of the path v_1..v_n with only boring repetitive lazy walks."""
    if n < 1:
        raise InputError("path length must be >= 1")
    letters = ternary_squarefree(n)
    colours = []
    next_letter = 0
    for p in range(1, n + 1):
        if p % 3 == 1:
            colours.append(3)
        else:
            colours.append(letters[next_letter])
            next_letter += 1
    return Colouring(tuple(colours), 4)


def verify_boring(pc: Colouring, max_len: int) -> Verdict:
    """Exhaustively check that repetitive lazy walks on the path are boring.

    Returns the first repetitive non-boring lazy walk of even length
    <= max_len, else a pass verdict.  Sound and complete up to the cap.
    """
    return find_nonboring_repetitive_walk(path_graph(len(pc.colours)), pc, max_len)
