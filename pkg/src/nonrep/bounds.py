"""Closed-form palette bounds (exact big-integer arithmetic)."""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import InputError


@dataclass(frozen=True)
class BoundReport:
    formula: str
    value: int
    params: dict

    def to_dict(self) -> dict:
        return {"formula": self.formula, "value": self.value, "params": dict(self.params)}


def bound_planar() -> int:
    return 768


def bound_genus(g: int) -> int:
    if g < 0:
        raise InputError("genus must be >= 0")
    return 256 * max(2 * g, 3)


def bound_treewidth(k: int) -> int:
    if k < 0:
        raise InputError("treewidth must be >= 0")
    return 4 ** k


def bound_almost_embeddable(k: int) -> int:
    if k < 1:
        raise InputError("embeddability parameter must be >= 1")
    return k + 6 * k * 4 ** (11 * (k + 1))


def bound_minor(k: int, r: int) -> int:
    if k < 1 or r < 1:
        raise InputError("need k >= 1 and r >= 1")
    return bound_almost_embeddable(k) * 4 ** r


def bound_topological_minor(k: int, r: int, c_prime: int) -> int:
    if k < 1 or r < 1 or c_prime < 1:
        raise InputError("need k >= 1, r >= 1 and c_prime >= 1")
    return max(bound_almost_embeddable(k), c_prime) * 4 ** r


def bound_rich(c: int, r: int) -> int:
    if c < 1 or r < 1:
        raise InputError("need c >= 1 and r >= 1")
    return c * 4 ** r


_FORMULAS = {
    "planar": (bound_planar, ()),
    "genus": (bound_genus, ("g",)),
    "treewidth": (bound_treewidth, ("k",)),
    "almost-embeddable": (bound_almost_embeddable, ("k",)),
    "minor": (bound_minor, ("k", "r")),
    "topological-minor": (bound_topological_minor, ("k", "r", "c_prime")),
    "rich": (bound_rich, ("c", "r")),
}


def bound_report(formula: str, **params) -> BoundReport:
    if formula not in _FORMULAS:
        raise InputError(f"unknown bound formula {formula!r}; "
                         f"choose from {sorted(_FORMULAS)}")
    fn, names = _FORMULAS[formula]
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise InputError(f"formula {formula!r} needs parameters {missing}")
    args = {p: params[p] for p in names}
    return BoundReport(formula, fn(**args), args)
