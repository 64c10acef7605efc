"""Sorted terms over one or two groups with action, and a vectorised law scanner.

Terms are built with ordinary Python operators::

    a, a2 = var("a", "A"), var("a2", "A")
    b = var("b", "B")
    lhs = (a + a2) ** b          # star action, result in A
    rhs = a ** b + a2 ** b
    law = Law("(1_A)", lhs, rhs)

``x ** y`` resolves by the sorts of its operands:

==========  ==========  ===========  ============
base        exponent    table        result sort
==========  ==========  ===========  ============
S           S           ``S.act``    S
A           B           ``star``     A
B           A           ``dual``     A
==========  ==========  ===========  ============

``b @ a`` is the dot action of B on A (result in A).

A scan evaluates a law at every tuple of its variables at once with numpy
fancy indexing. Tables may carry a leading batch axis, in which case a whole
batch of structures is checked in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np


class Term:
    def __add__(self, other: "Term") -> "Term":
        return Add(self, other)

    def __sub__(self, other: "Term") -> "Term":
        return Add(self, Neg(other))

    def __neg__(self) -> "Term":
        return Neg(self)

    def __pow__(self, other: "Term") -> "Term":
        return Pow(self, other)

    def __matmul__(self, other: "Term") -> "Term":
        return Dot(self, other)

    @property
    def sort(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True, eq=True)
class Var(Term):
    name: str
    var_sort: str

    @property
    def sort(self):
        return self.var_sort

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=True)
class Zero(Term):
    zero_sort: str

    @property
    def sort(self):
        return self.zero_sort

    def __str__(self):
        return f"0_{self.zero_sort}"


@dataclass(frozen=True, eq=True)
class Add(Term):
    left: Term
    right: Term

    def __post_init__(self):
        if self.left.sort != self.right.sort:
            raise TypeError(f"cannot add {self.left.sort} to {self.right.sort}")

    @property
    def sort(self):
        return self.left.sort

    def __str__(self):
        r = str(self.right)
        if isinstance(self.right, Neg):
            return f"{self.left} - {self.right.arg}"
        return f"{self.left} + {r}"


@dataclass(frozen=True, eq=True)
class Neg(Term):
    arg: Term

    @property
    def sort(self):
        return self.arg.sort

    def __str__(self):
        return f"-{_wrap(self.arg)}"


@dataclass(frozen=True, eq=True)
class Dot(Term):
    actor: Term
    target: Term

    def __post_init__(self):
        if (self.actor.sort, self.target.sort) != ("B", "A"):
            raise TypeError("dot action needs an actor of sort B and a target of sort A")

    @property
    def sort(self):
        return "A"

    def __str__(self):
        return f"{_wrap(self.actor)}·{_wrap(self.target)}"


@dataclass(frozen=True, eq=True)
class Pow(Term):
    base: Term
    exp: Term

    def __post_init__(self):
        pow_table(self.base.sort, self.exp.sort)

    @property
    def sort(self):
        if self.base.sort == self.exp.sort:
            return self.base.sort
        return "A"

    def __str__(self):
        return f"{_wrap(self.base)}^{_wrap(self.exp)}"


def _wrap(t: Term) -> str:
    return str(t) if isinstance(t, (Var, Zero)) else f"({t})"


def pow_table(base_sort: str, exp_sort: str) -> str:
    """Name of the table that evaluates ``base ** exp`` for the given sorts."""
    if base_sort == exp_sort:
        return f"{base_sort}.act"
    if (base_sort, exp_sort) == ("A", "B"):
        return "star"
    if (base_sort, exp_sort) == ("B", "A"):
        return "dual"
    raise TypeError(f"no action of sort {exp_sort} on sort {base_sort}")


def var(name: str, sort: str) -> Var:
    return Var(name, sort)


def variables(t: Term) -> list[Var]:
    """Variables of ``t`` in order of first occurrence."""
    out: list[Var] = []

    def walk(u):
        if isinstance(u, Var):
            if u not in out:
                out.append(u)
        elif isinstance(u, (Add, Dot, Pow)):
            for child in (getattr(u, f) for f in u.__dataclass_fields__):
                walk(child)
        elif isinstance(u, Neg):
            walk(u.arg)

    walk(t)
    return out


class Tables:
    """Operation tables that terms are evaluated against.

    ``arrays`` maps table names (``"A.add"``, ``"A.neg"``, ``"A.act"``, the same
    for ``B`` or ``G``, and ``"dot"``, ``"star"``, ``"dual"``) to integer arrays.
    Names listed in ``batched`` carry a leading batch axis of length ``size``.
    """

    def __init__(self, arrays: Mapping[str, np.ndarray], orders: Mapping[str, int],
                 batched: frozenset[str] | set[str] = frozenset(), size: int = 1):
        self.arrays = dict(arrays)
        self.orders = dict(orders)
        self.batched = frozenset(batched)
        self.size = size

    def take(self, idx: np.ndarray) -> "Tables":
        arrays = {k: (v[idx] if k in self.batched else v) for k, v in self.arrays.items()}
        return Tables(arrays, self.orders, self.batched, len(idx))

    def lookup(self, name: str, tix, *args):
        arr = self.arrays[name]
        if name in self.batched:
            return arr[(tix,) + args]
        return arr[args]


def evaluate(t: Term, env: Mapping[str, np.ndarray], tables: Tables, tix=None):
    """Evaluate ``t`` with variables bound to (broadcastable) index arrays."""
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Zero):
        return np.zeros((), dtype=np.intp)
    if isinstance(t, Add):
        x = evaluate(t.left, env, tables, tix)
        y = evaluate(t.right, env, tables, tix)
        return tables.lookup(f"{t.sort}.add", tix, x, y)
    if isinstance(t, Neg):
        return tables.lookup(f"{t.sort}.neg", tix, evaluate(t.arg, env, tables, tix))
    if isinstance(t, Dot):
        b = evaluate(t.actor, env, tables, tix)
        a = evaluate(t.target, env, tables, tix)
        return tables.lookup("dot", tix, b, a)
    if isinstance(t, Pow):
        x = evaluate(t.base, env, tables, tix)
        y = evaluate(t.exp, env, tables, tix)
        return tables.lookup(pow_table(t.base.sort, t.exp.sort), tix, x, y)
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class Law:
    """An identity ``lhs = rhs`` quantified over its variables.

    Variables named in ``nonzero`` range over nonzero elements only.
    """

    id: str
    lhs: Term
    rhs: Term
    nonzero: tuple[str, ...] = ()
    vars: tuple[Var, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.lhs.sort != self.rhs.sort:
            raise TypeError(f"{self.id}: sides have sorts {self.lhs.sort} and {self.rhs.sort}")
        if not self.vars:
            vs = variables(self.lhs)
            vs += [v for v in variables(self.rhs) if v not in vs]
            object.__setattr__(self, "vars", tuple(vs))

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"

    def scan(self, tables: Tables) -> np.ndarray:
        """Boolean array, True where the law holds.

        Shape is ``(n_1, ..., n_k)`` over the variables, with a leading batch
        axis if any table the law touches is batched.
        """
        k = len(self.vars)
        batched = bool(tables.batched)
        off = 1 if batched else 0
        shape = [tables.size] if batched else []
        env = {}
        for i, v in enumerate(self.vars):
            n = tables.orders[v.sort]
            s = [1] * (k + off)
            s[i + off] = n
            env[v.name] = np.arange(n).reshape(s)
            shape.append(n)
        tix = np.arange(tables.size).reshape([tables.size] + [1] * k) if batched else None
        holds = evaluate(self.lhs, env, tables, tix) == evaluate(self.rhs, env, tables, tix)
        for name in self.nonzero:
            holds = holds | (env[name] == 0)
        return np.broadcast_to(holds, shape)

    def holds_at(self, tables: Tables, witness: tuple[int, ...]) -> bool:
        """Evaluate the law at a single tuple of an unbatched structure."""
        env = {v.name: np.intp(x) for v, x in zip(self.vars, witness)}
        if any(env[n] == 0 for n in self.nonzero):
            return True
        return bool(evaluate(self.lhs, env, tables) == evaluate(self.rhs, env, tables))


def batch_verdicts(laws, tables: Tables) -> np.ndarray:
    """For a batched ``tables``, whether every law holds, per batch entry.

    Laws are applied in order and only to entries that survived the previous
    ones, so cheap laws belong first.
    """
    alive = np.ones(tables.size, dtype=bool)
    for law in laws:
        idx = np.flatnonzero(alive)
        if len(idx) == 0:
            break
        sub = tables.take(idx)
        ok = law.scan(sub).reshape(len(idx), -1).all(axis=1)
        alive[idx[~ok]] = False
    return alive
