"""Finite groups with action on themselves, stored as operation tables.

Elements are the indices ``0..n-1`` and index 0 is always the zero. All
tables are row-major with the row as the left (or base) operand, so
``act[g, h]`` is ``g`` raised to ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable

import numpy as np

from .terms import Law, Tables, Zero, var

DEFAULT_CAP = 16


class StructureError(ValueError):
    """Malformed input: wrong shapes, out-of-range entries, unknown names."""


@dataclass
class CheckReport:
    """Verdict of a law scan plus witnesses for each failed law.

    Every tuple is scanned; at most ``cap`` witnesses are kept per law, in
    lexicographic order. ``counts`` holds the untruncated number of failures.
    """

    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.cap < 1:
            raise ValueError("cap must be at least 1")

    @property
    def ok(self) -> bool:
        return not self.counts

    def __bool__(self):
        return self.ok

    @property
    def failed(self) -> list[str]:
        """Failed law ids, in the order they were checked."""
        return list(self.counts)

    def add(self, law_id: str, witnesses: Iterable[tuple[int, ...]]):
        ws = [tuple(int(x) for x in w) for w in witnesses]
        if not ws:
            return
        self.counts[law_id] = self.counts.get(law_id, 0) + len(ws)
        have = sum(1 for lid, _ in self.violations if lid == law_id)
        self.violations.extend((law_id, w) for w in ws[: max(self.cap - have, 0)])

    def merge(self, other: "CheckReport") -> "CheckReport":
        for law_id, w in other.violations:
            if sum(1 for lid, _ in self.violations if lid == law_id) < self.cap:
                self.violations.append((law_id, w))
        for law_id, c in other.counts.items():
            self.counts[law_id] = self.counts.get(law_id, 0) + c
        return self

    def witnesses(self, law_id: str) -> list[tuple[int, ...]]:
        return [w for lid, w in self.violations if lid == law_id]

    def to_text(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{lid} ({','.join(map(str, w))})" for lid, w in self.violations)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"law": lid, "witness": list(w)} for lid, w in self.violations],
        }


def scan_laws(laws: Iterable[Law], tables: Tables, cap: int = DEFAULT_CAP) -> CheckReport:
    report = CheckReport(cap=cap)
    for law in laws:
        bad = np.argwhere(~law.scan(tables))
        report.add(law.id, map(tuple, bad))
    return report


def _as_table(x, shape, n, what) -> np.ndarray:
    try:
        arr = np.array(x, dtype=np.intp)
    except (TypeError, ValueError) as e:
        raise StructureError(f"{what}: not an integer table") from e
    if arr.shape != shape:
        raise StructureError(f"{what}: expected shape {shape}, got {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise StructureError(f"{what}: entries must lie in [0, {n})")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group as an addition table and a negation vector."""

    name: str
    add: np.ndarray
    neg: np.ndarray

    def __post_init__(self):
        n = len(self.add) if hasattr(self.add, "__len__") else 0
        if n < 1:
            raise StructureError("a group needs at least one element")
        object.__setattr__(self, "add", _as_table(self.add, (n, n), n, "add"))
        object.__setattr__(self, "neg", _as_table(self.neg, (n,), n, "neg"))

    @property
    def order(self) -> int:
        return len(self.neg)

    @classmethod
    def from_add(cls, name: str, add) -> "GroupTable":
        """Build the negation vector from an addition table with zero at index 0."""
        add = np.asarray(add, dtype=np.intp)
        neg = []
        for g in range(len(add)):
            inv = np.flatnonzero(add[g] == 0)
            if len(inv) != 1:
                raise StructureError(f"element {g} has no unique inverse")
            neg.append(int(inv[0]))
        return cls(name, add, np.array(neg))


@dataclass(frozen=True, eq=False)
class FiniteGwa(GroupTable):
    """A finite group acting on itself: ``act[g, h] = g^h``."""

    act: np.ndarray = None

    def __post_init__(self):
        super().__post_init__()
        n = self.order
        if self.act is None:
            raise StructureError("act table missing")
        object.__setattr__(self, "act", _as_table(self.act, (n, n), n, "act"))

    def tables(self, sort: str = "G") -> Tables:
        return Tables({f"{sort}.add": self.add, f"{sort}.neg": self.neg, f"{sort}.act": self.act},
                      {sort: self.order})

    def same_tables(self, other: "FiniteGwa") -> bool:
        return (self.order == other.order and np.array_equal(self.add, other.add)
                and np.array_equal(self.neg, other.neg) and np.array_equal(self.act, other.act))

    def __repr__(self):
        return f"FiniteGwa({self.name!r}, order={self.order})"


_g, _h, _k = var("g", "G"), var("h", "G"), var("k", "G")
_0 = Zero("G")

GROUP_LAWS = (
    Law("assoc", (_g + _h) + _k, _g + (_h + _k)),
    Law("identity-left", _0 + _g, _g),
    Law("identity-right", _g + _0, _g),
    Law("inverse", _g + (-_g), _0),
    Law("inverse-left", (-_g) + _g, _0),
)

SELF_ACTION_LAWS = (
    Law("eps-1", _g ** (_h + _k), (_g ** _h) ** _k),
    Law("eps-2", _g ** _0, _g),
    Law("eps-3", (_g + _h) ** _k, _g ** _k + _h ** _k),
    Law("zero-pow", _0 ** _g, _0),
    Law("neg-pow", (-_g) ** _h, -(_g ** _h)),
)

_x, _y, _z = var("x", "G"), var("y", "G"), var("z", "G")

REDUCED_LAWS = (
    Law("reduced-1", _x ** _y + _z, _z + _x ** _y, nonzero=("y",)),
    Law("reduced-2", _x ** (_y ** _z), _x ** _y),
)

GWA_LAWS = GROUP_LAWS + SELF_ACTION_LAWS


def _group_tables(g: GroupTable) -> Tables:
    return Tables({"G.add": g.add, "G.neg": g.neg}, {"G": g.order})


def validate_group(g: GroupTable, cap: int = DEFAULT_CAP) -> CheckReport:
    return scan_laws(GROUP_LAWS, _group_tables(g), cap)


def validate_self_action(g: FiniteGwa, cap: int = DEFAULT_CAP) -> CheckReport:
    """The three self-action axioms and their two consequences."""
    return scan_laws(SELF_ACTION_LAWS, g.tables(), cap)


def validate_gwa(g: FiniteGwa, cap: int = DEFAULT_CAP) -> CheckReport:
    return validate_group(g, cap).merge(validate_self_action(g, cap))


def is_reduced(g: FiniteGwa, cap: int = DEFAULT_CAP) -> CheckReport:
    """``x^y + z = z + x^y`` for ``y != 0`` and ``x^(y^z) = x^y``."""
    return scan_laws(REDUCED_LAWS, g.tables(), cap)


def is_abelian(g: GroupTable) -> bool:
    return bool(np.array_equal(g.add, g.add.T))


@dataclass(frozen=True, eq=False)
class GwaMorphism:
    source: FiniteGwa
    target: FiniteGwa
    map: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "map", _as_table(self.map, (self.source.order,),
                                                  self.target.order, "map"))

    def __call__(self, x):
        return self.map[x]

    def compose(self, after: "GwaMorphism") -> "GwaMorphism":
        """``after ∘ self``."""
        if after.source is not self.target and not after.source.same_tables(self.target):
            raise StructureError("morphisms are not composable")
        return GwaMorphism(self.source, after.target, after.map[self.map])

    @property
    def injective(self) -> bool:
        return len(set(self.map.tolist())) == self.source.order

    @property
    def surjective(self) -> bool:
        return set(self.map.tolist()) == set(range(self.target.order))


def is_morphism(f: GwaMorphism, cap: int = DEFAULT_CAP) -> CheckReport:
    """Additivity and equivariance, ``f(g^h) = f(g)^f(h)``."""
    s, t, m = f.source, f.target, f.map
    g = np.arange(s.order)[:, None]
    h = np.arange(s.order)[None, :]
    report = CheckReport(cap=cap)
    report.add("additive", map(tuple, np.argwhere(m[s.add[g, h]] != t.add[m[g], m[h]])))
    report.add("equivariance", map(tuple, np.argwhere(m[s.act[g, h]] != t.act[m[g], m[h]])))
    return report


def identity_morphism(g: FiniteGwa) -> GwaMorphism:
    return GwaMorphism(g, g, np.arange(g.order))


def _checked_group(grouptable: GroupTable) -> GroupTable:
    report = validate_group(grouptable)
    if not report.ok:
        raise StructureError(f"{grouptable.name} is not a group: {report.failed}")
    return grouptable


def identity_action_gwa(grouptable: GroupTable, name: str | None = None) -> FiniteGwa:
    g = _checked_group(grouptable)
    n = g.order
    act = np.repeat(np.arange(n)[:, None], n, axis=1)
    return FiniteGwa(name or g.name, g.add, g.neg, act)


def conjugation_gwa(grouptable: GroupTable, name: str | None = None) -> FiniteGwa:
    """``g^h = -h + g + h``."""
    g = _checked_group(grouptable)
    x = np.arange(g.order)
    act = g.add[g.add[g.neg[x][None, :], x[:, None]], x[None, :]]
    return FiniteGwa(name or f"{g.name}-conj", g.add, g.neg, act)


def cyclic_group(n: int) -> GroupTable:
    x = np.arange(n)
    return GroupTable(f"Z{n}", (x[:, None] + x[None, :]) % n, (-x) % n)


def klein_four() -> GroupTable:
    x = np.arange(4)
    return GroupTable("V4", x[:, None] ^ x[None, :], x)


def elementary_abelian(k: int) -> GroupTable:
    x = np.arange(2 ** k)
    return GroupTable(f"Z2^{k}", x[:, None] ^ x[None, :], x)


def symmetric_group(m: int = 3) -> GroupTable:
    """Permutations of ``range(m)`` in lexicographic order (identity first).

    ``g + h`` is the permutation ``x -> g[h[x]]``.
    """
    perms = list(permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    add = [[index[tuple(g[h[x]] for x in range(m))] for h in perms] for g in perms]
    return GroupTable.from_add(f"S{m}", add)


def dihedral_group(m: int) -> GroupTable:
    """Order ``2m``; element ``s*m + r`` is ``r`` rotations after ``s`` reflections."""
    n = 2 * m

    def compose(x, y):
        sx, rx = divmod(x, m)
        sy, ry = divmod(y, m)
        r = (rx + (ry if sx == 0 else -ry)) % m
        return ((sx + sy) % 2) * m + r

    add = [[compose(x, y) for y in range(n)] for x in range(n)]
    return GroupTable.from_add(f"D{m}", add)


def quaternion_group() -> GroupTable:
    """Q8 with elements ``±1, ±i, ±j, ±k`` at indices 0..7 (sign bit in the low bit)."""
    units = ["1", "i", "j", "k"]
    mult = {("1", u): (1, u) for u in units}
    mult.update({(u, "1"): (1, u) for u in units})
    mult.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, u) for u in units for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    add = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = mult[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        add.append(row)
    return GroupTable.from_add("Q8", add)


def trivial_group() -> GroupTable:
    return GroupTable("1", [[0]], [0])
