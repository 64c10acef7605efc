"""Action triples of one group with action on another, and the laws they must obey.

A triple of ``B`` acting on ``A`` consists of three tables with entries in A:

* ``dot[b, a]``   the dot action ``b·a``;
* ``star[a, b]``  the action ``a^b``;
* ``dual[b, a]``  the dual action ``b^a``.

Every condition list below is stored as data (``Law`` objects over sorted
variables) and checked by the one generic scanner in :mod:`gwa.terms`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (DEFAULT_CAP, CheckReport, FiniteGwa, StructureError, _as_table,
                   is_reduced, scan_laws)
from .ideals import SubsetMask, is_ideal, subgroup_gwa
from .terms import Law, Tables, Zero, var


@dataclass(frozen=True, eq=False)
class ActionTriple:
    actor: FiniteGwa   # B
    target: FiniteGwa  # A
    dot: np.ndarray
    star: np.ndarray
    dual: np.ndarray

    def __post_init__(self):
        nb, na = self.actor.order, self.target.order
        object.__setattr__(self, "dot", _as_table(self.dot, (nb, na), na, "dot"))
        object.__setattr__(self, "star", _as_table(self.star, (na, nb), na, "star"))
        object.__setattr__(self, "dual", _as_table(self.dual, (nb, na), na, "dual"))

    def tables(self) -> Tables:
        return triple_tables(self.actor, self.target, self.dot, self.star, self.dual)

    def same_tables(self, other: "ActionTriple") -> bool:
        return (np.array_equal(self.dot, other.dot) and np.array_equal(self.star, other.star)
                and np.array_equal(self.dual, other.dual))

    def __repr__(self):
        return f"ActionTriple({self.actor.name!r} on {self.target.name!r})"


def triple_tables(b: FiniteGwa, a: FiniteGwa, dot, star, dual, batched: bool = False) -> Tables:
    arrays = {"A.add": a.add, "A.neg": a.neg, "A.act": a.act,
              "B.add": b.add, "B.neg": b.neg, "B.act": b.act,
              "dot": dot, "star": star, "dual": dual}
    if batched:
        return Tables(arrays, {"A": a.order, "B": b.order}, {"dot", "star", "dual"}, len(dot))
    return Tables(arrays, {"A": a.order, "B": b.order})


a, a1, a2 = var("a", "A"), var("a'", "A"), var("a2", "A")
b, b1, b2 = var("b", "B"), var("b'", "B"), var("b2", "B")
ZA, ZB = Zero("A"), Zero("B")

DOT_LAWS = (
    Law("0·a=a", ZB @ a, a),
    Law("b·(a1+a2)=b·a1+b·a2", b @ (a + a1), b @ a + b @ a1),
    Law("(b1+b2)·a=b1·(b2·a)", (b + b1) @ a, b @ (b1 @ a)),
)

CONDITIONS_A = (
    Law("(1_A)", (a + a1) ** b, a ** b + a1 ** b),
    Law("(2_A)", (b + b1) ** a, b ** a + b @ (b1 ** a)),
    Law("(3_A)", (b @ a) ** a1 + b ** a1, b ** a1 + b @ (a ** a1)),
    Law("(4_A)", (b @ a) ** b1, (b ** b1) @ (a ** b1)),
)

CONDITIONS_B = (
    Law("(1_B)", b ** (a + a1), (b ** a) ** a1 + b ** a1),
    Law("(2_B)", a ** (b + b1), (a ** b) ** b1),
    Law("(3_B)", (a ** (b @ a1)) ** b, (a ** b) ** a1),
    Law("(4_B)", (b ** (b1 @ a)) ** b1, (b ** b1) ** a),
)

UNIT_LAW = Law("a^{0_B}=a", a ** ZB, a)

ZERO_LAWS = (
    Law("0_A^b=0_A", ZA ** b, ZA),
    Law("0_B^a=0_A", ZB ** a, ZA),
    Law("b^{0_A}=0_A", b ** ZA, ZA),
)

UNIT_AND_ZERO_LAWS = ZERO_LAWS + (UNIT_LAW,)

# The ten extra conditions for reduced objects; the zero in b^(b'^a) = 0 is 0_A.
REDUCED_CONDITIONS = (
    Law("b·a^{a'}=a^{a'}", b @ (a ** a1), a ** a1),
    Law("a^b+a'=a'+a^b", a ** b + a1, a1 + a ** b),
    Law("b·a^{b'}=a^{b'}", b @ (a ** b1), a ** b1),
    Law("a^{(a'^b)}=a^{a'}", a ** (a1 ** b), a ** a1),
    Law("b^{b'}·a=a", (b ** b1) @ a, a),
    Law("a^{(b^{a'})}=a", a ** (b ** a1), a),
    Law("b^{(a^{a'})}=b^a", b ** (a ** a1), b ** a),
    Law("b^{(b'^a)}=0", b ** (b1 ** a), ZA),
    Law("a^{(b^{b'})}=a^b", a ** (b ** b1), a ** b),
    Law("b^{(a^{b'})}=b^a", b ** (a ** b1), b ** a),
)

# (2_A)-(4_A) with the dot dropped where the ten conditions absorb it.
SIMPLIFIED_A = (
    Law("(2_A)-reduced", (b + b1) ** a, b ** a + b1 ** a),
    Law("(3_A)-reduced", (b @ a) ** a1 + b ** a1, b ** a1 + a ** a1),
    Law("(4_A)-reduced", (b @ a) ** b1, a ** b1),
)

DERIVED_ACTION_LAWS = DOT_LAWS + CONDITIONS_A + CONDITIONS_B + (UNIT_LAW,)
REDUCED_DERIVED_LAWS = DERIVED_ACTION_LAWS + REDUCED_CONDITIONS

# Cross-check premises: the zero laws follow from these (the derivation of
# 0_B^a = 0_A goes through 0·x = x).
ZERO_LAW_PREMISES = ("(1_A)", "(2_A)", "(1_B)", "0·a=a")

LAW_CATALOGUE = {law.id: law for law in DERIVED_ACTION_LAWS + ZERO_LAWS + REDUCED_CONDITIONS}


def check_dot_group_action(t: ActionTriple, cap: int = DEFAULT_CAP) -> CheckReport:
    return scan_laws(DOT_LAWS, t.tables(), cap)


def check_conditions_A(t: ActionTriple, cap: int = DEFAULT_CAP) -> CheckReport:
    return scan_laws(CONDITIONS_A, t.tables(), cap)


def check_conditions_B(t: ActionTriple, cap: int = DEFAULT_CAP) -> CheckReport:
    return scan_laws(CONDITIONS_B, t.tables(), cap)


def check_unit_and_zero(t: ActionTriple, cap: int = DEFAULT_CAP) -> CheckReport:
    """The four unit/zero laws.

    The three zero laws are consequences of (1_A), (2_A), (1_B) and the dot unit
    law; if those premises hold and a zero law still fails, an extra
    ``zero-law-consequence`` violation is reported.
    """
    tables = t.tables()
    report = scan_laws(UNIT_AND_ZERO_LAWS, tables, cap)
    zero_failed = [law.id for law in ZERO_LAWS if law.id in report.counts]
    if zero_failed:
        premises = scan_laws([LAW_CATALOGUE[i] for i in ZERO_LAW_PREMISES], tables, cap)
        if premises.ok:
            report.add("zero-law-consequence", report.witnesses(zero_failed[0])[:1])
    return report


def is_derived_action(t: ActionTriple, cap: int = DEFAULT_CAP) -> CheckReport:
    return scan_laws(DERIVED_ACTION_LAWS, t.tables(), cap)


def _require_reduced(t: ActionTriple):
    for g in (t.actor, t.target):
        if not is_reduced(g).ok:
            raise ValueError(f"not reduced: {g.name}")


def check_reduced_conditions(t: ActionTriple, cap: int = DEFAULT_CAP) -> CheckReport:
    _require_reduced(t)
    return scan_laws(REDUCED_CONDITIONS, t.tables(), cap)


def is_derived_action_reduced(t: ActionTriple, cap: int = DEFAULT_CAP) -> CheckReport:
    _require_reduced(t)
    return scan_laws(REDUCED_DERIVED_LAWS, t.tables(), cap)


def self_action(g: FiniteGwa) -> ActionTriple:
    """``a·a' = a + a' - a``, ``a'^a`` from ``g``, dual ``a^{a'} - a``."""
    x = np.arange(g.order)
    dot = g.add[g.add[x[:, None], x[None, :]], g.neg[x][:, None]]
    star = g.act.copy()
    dual = g.add[g.act, g.neg[x][:, None]]
    return ActionTriple(g, g, dot, star, dual)


def naive_self_action(g: FiniteGwa) -> ActionTriple:
    """Like :func:`self_action` but with dual ``a^{a'}``; not a derived action."""
    t = self_action(g)
    return ActionTriple(g, g, t.dot, t.star, g.act.copy())


def ideal_action(g: FiniteGwa, ideal: SubsetMask) -> ActionTriple:
    """``g`` acting on its ideal ``I``: ``a·i = a + i - a``, ``i^a``, ``a^i - a``.

    The target is the sub-object on ``I`` with elements relabelled in
    ascending order.
    """
    if not is_ideal(ideal).ok:
        raise ValueError("not an ideal")
    els = np.array(ideal.elements)
    pos = np.full(g.order, -1)
    pos[els] = np.arange(len(els))
    sub = subgroup_gwa(ideal)
    x = np.arange(g.order)
    dot = g.add[g.add[x[:, None], els[None, :]], g.neg[x][:, None]]
    star = g.act[np.ix_(els, x)]
    dual = g.add[g.act[np.ix_(x, els)], g.neg[x][:, None]]
    tables = [pos[t] for t in (dot, star, dual)]
    if any((tb < 0).any() for tb in tables):
        raise ValueError("action leaves the ideal")
    return ActionTriple(g, sub, *tables)
