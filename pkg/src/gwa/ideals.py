"""Ideals of finite groups with action, their closure, and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import DEFAULT_CAP, CheckReport, FiniteGwa, GwaMorphism, StructureError


@dataclass(frozen=True, eq=False)
class SubsetMask:
    parent: FiniteGwa
    members: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.members, dtype=bool)
        if m.shape != (self.parent.order,):
            raise StructureError(f"mask needs {self.parent.order} entries, got {m.shape}")
        if not m[0]:
            raise StructureError("a subset must contain the zero element")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "members", m)

    @classmethod
    def of(cls, parent: FiniteGwa, elements: Iterable[int]) -> "SubsetMask":
        m = np.zeros(parent.order, dtype=bool)
        els = list(elements)
        if any(not 0 <= e < parent.order for e in els):
            raise StructureError("subset element out of range")
        m[els] = True
        return cls(parent, m)

    @property
    def elements(self) -> list[int]:
        return np.flatnonzero(self.members).tolist()

    def __len__(self):
        return int(self.members.sum())

    def __eq__(self, other):
        return isinstance(other, SubsetMask) and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash(self.members.tobytes())

    def __repr__(self):
        return f"SubsetMask({self.parent.name!r}, {self.elements})"


def _outside(s: SubsetMask, values: np.ndarray, where: np.ndarray) -> np.ndarray:
    """Index tuples (of the grid ``values`` lives on) where ``where`` holds but
    the value is not a member."""
    return np.argwhere(where & ~s.members[values])


def _member_grid(s: SubsetMask, arity: int, pattern: str) -> np.ndarray:
    """Boolean grid marking tuples whose positions flagged ``'m'`` in ``pattern``
    are members (``'g'`` positions range freely)."""
    n = s.parent.order
    grid = np.ones((n,) * arity, dtype=bool)
    for i, p in enumerate(pattern):
        if p == "m":
            shape = [1] * arity
            shape[i] = n
            grid = grid & s.members.reshape(shape)
    return grid


def is_normal_subgroup(s: SubsetMask, cap: int = DEFAULT_CAP) -> CheckReport:
    g = s.parent
    x = np.arange(g.order)
    report = CheckReport(cap=cap)
    report.add("zero", [] if s.members[0] else [(0,)])
    # witnesses (a1, a2), (a,), (a, g)
    report.add("closure-add", map(tuple, _outside(s, g.add, _member_grid(s, 2, "mm"))))
    report.add("closure-neg", map(tuple, _outside(s, g.neg, s.members)))
    conj = g.add[g.add[x[None, :], x[:, None]], g.neg[x][None, :]]  # [a, g] -> g + a - g
    report.add("normality", map(tuple, _outside(s, conj, _member_grid(s, 2, "mg"))))
    return report


def _defect(g: FiniteGwa, left: bool) -> np.ndarray:
    """``[a, h] -> -h + h^a`` (left) or ``h^a - h``."""
    x = np.arange(g.order)
    pw = g.act[x[None, :], x[:, None]]  # [a, h] -> h^a
    if left:
        return g.add[g.neg[x][None, :], pw]
    return g.add[pw, g.neg[x][None, :]]


def is_ideal(s: SubsetMask, cap: int = DEFAULT_CAP) -> CheckReport:
    """Normal subgroup, stable under the action, absorbing ``-g + g^a``.

    The equivalent form ``g^a - g`` is checked as well; on a subgroup the two
    must agree, and a disagreement is reported as ``ideal-3-equivalence``.
    """
    g = s.parent
    report = is_normal_subgroup(s, cap)
    mg = _member_grid(s, 2, "mg")
    # witnesses (a, g)
    report.add("ideal-2", map(tuple, _outside(s, g.act, mg)))
    left = _outside(s, _defect(g, left=True), mg)
    right = _outside(s, _defect(g, left=False), mg)
    report.add("ideal-3", map(tuple, left))
    closed_neg = bool(s.members[g.neg[s.members]].all())
    if closed_neg and (len(left) == 0) != (len(right) == 0):
        report.add("ideal-3-equivalence", [tuple(w) for w in (left if len(left) else right)[:1]])
    return report


def ideal_closure(g: FiniteGwa, seed: SubsetMask | Iterable[int]) -> SubsetMask:
    """Smallest ideal containing ``seed``, by saturation."""
    if isinstance(seed, SubsetMask):
        members = seed.members.copy()
    else:
        members = np.zeros(g.order, dtype=bool)
        members[list(seed)] = True
    members[0] = True
    x = np.arange(g.order)
    conj = g.add[g.add[x[None, :], x[:, None]], g.neg[x][None, :]]
    defect = _defect(g, left=True)
    while True:
        m = members
        new = m.copy()
        new[g.add[np.ix_(m, m)].ravel()] = True
        new[g.neg[m]] = True
        new[conj[m].ravel()] = True
        new[g.act[m].ravel()] = True
        new[defect[m].ravel()] = True
        if np.array_equal(new, members):
            return SubsetMask(g, members)
        members = new


def _cosets(g: FiniteGwa, ideal: SubsetMask) -> tuple[np.ndarray, list[int]]:
    """Coset label of every element, and the sorted representatives."""
    label = np.full(g.order, -1)
    reps = []
    members = np.flatnonzero(ideal.members)
    for x in range(g.order):
        if label[x] < 0:
            label[g.add[x, members]] = len(reps)
            reps.append(x)
    return label, reps


def quotient_map(g: FiniteGwa, ideal: SubsetMask) -> GwaMorphism:
    """Projection of ``g`` onto its quotient by ``ideal``.

    Cosets are numbered by their smallest member, so the zero coset is 0.
    Both operations are checked to be well defined on every pair of elements.
    """
    if ideal.parent is not g and not ideal.parent.same_tables(g):
        raise StructureError("subset belongs to a different algebra")
    if not is_ideal(ideal).ok:
        raise ValueError("not an ideal")
    label, reps = _cosets(g, ideal)
    r = np.array(reps)
    add = label[g.add[np.ix_(r, r)]]
    act = label[g.act[np.ix_(r, r)]]
    if not np.array_equal(label[g.add], add[np.ix_(label, label)]):
        raise ValueError("addition not well-defined on cosets")
    if not np.array_equal(label[g.act], act[np.ix_(label, label)]):
        raise ValueError("action not well-defined on cosets")
    q = FiniteGwa(f"{g.name}/{{{','.join(map(str, ideal.elements))}}}",
                  add, label[g.neg[r]], act)
    return GwaMorphism(g, q, label)


def quotient_gwa(g: FiniteGwa, ideal: SubsetMask) -> FiniteGwa:
    return quotient_map(g, ideal).target


def subgroup_gwa(s: SubsetMask, name: str | None = None) -> FiniteGwa:
    """The sub-object on the members of ``s``, relabelled in ascending order.

    Requires ``s`` to be closed under addition, negation and the action.
    """
    g = s.parent
    els = np.array(s.elements)
    pos = np.full(g.order, -1)
    pos[els] = np.arange(len(els))
    add = pos[g.add[np.ix_(els, els)]]
    act = pos[g.act[np.ix_(els, els)]]
    neg = pos[g.neg[els]]
    if (add < 0).any() or (act < 0).any() or (neg < 0).any():
        raise ValueError("subset is not closed under the operations")
    return FiniteGwa(name or f"{g.name}|{{{','.join(map(str, els))}}}", add, neg, act)
