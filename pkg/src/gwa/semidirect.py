"""Semi-direct products, split extensions, and recovering actions from them.

The pair ``(b, a)`` of ``B ⋉ A`` is stored at index ``b * n_A + a``, so the
zero pair sits at index 0. The product operations are::

    (b, a) + (b', a')   = (b + b', a + b·a')
    (b, a) ^ (b', a')   = (b^b', (a^a')^b' + (b^a')^b')
    -(b, a)             = (-b, (-b)·(-a))

The negation is forced by the addition and is checked together with the
other group laws rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .actions import ActionTriple, is_derived_action
from .core import (DEFAULT_CAP, GWA_LAWS, REDUCED_LAWS, CheckReport, FiniteGwa, GwaMorphism,
                   StructureError, is_morphism, is_reduced, validate_gwa)
from .terms import Tables, batch_verdicts


def product_tables(b: FiniteGwa, a: FiniteGwa, dot, star, dual):
    """Addition, negation and action tables of ``B ⋉ A``.

    ``dot``, ``star`` and ``dual`` may carry a leading batch axis; the result
    then does too.
    """
    nb, na = b.order, a.order
    dot, star, dual = (np.asarray(x) for x in (dot, star, dual))
    batched = dot.ndim == 3
    pb = np.repeat(np.arange(nb), na)  # pair index -> b
    pa = np.tile(np.arange(na), nb)    # pair index -> a
    x, y = np.ix_(np.arange(nb * na), np.arange(nb * na))
    bx, ax, by, ay = pb[x], pa[x], pb[y], pa[y]
    if batched:
        t = np.arange(len(dot))[:, None, None]
        tv = t[:, :, 0]
        add_a = a.add[ax, dot[t, bx, ay]]
        act_a = a.add[star[t, a.act[ax, ay], by], star[t, dual[t, bx, ay], by]]
        nb_ = b.neg[pb][None, :]
        neg_a = dot[tv, nb_, a.neg[pa][None, :]]
    else:
        add_a = a.add[ax, dot[bx, ay]]
        act_a = a.add[star[a.act[ax, ay], by], star[dual[bx, ay], by]]
        neg_a = dot[b.neg[pb], a.neg[pa]]
    add = b.add[bx, by] * na + add_a
    act = b.act[bx, by] * na + act_a
    neg = b.neg[pb] * na + neg_a
    return add, neg, act


@dataclass(frozen=True, eq=False)
class SemidirectCandidate:
    actor: FiniteGwa
    target: FiniteGwa
    triple: ActionTriple
    product: FiniteGwa
    validated: bool = False

    def pair(self, index: int) -> tuple[int, int]:
        return divmod(int(index), self.target.order)

    def index(self, b: int, a: int) -> int:
        return b * self.target.order + a


def build_semidirect(b: FiniteGwa, a: FiniteGwa, t: ActionTriple) -> SemidirectCandidate:
    """Fill the product tables from ``t``; no laws are assumed of the triple."""
    if t.actor.order != b.order or t.target.order != a.order:
        raise StructureError("triple does not match the given algebras")
    add, neg, act = product_tables(b, a, t.dot, t.star, t.dual)
    product = FiniteGwa(f"{b.name}⋉{a.name}", add, neg, act)
    return SemidirectCandidate(b, a, t, product)


def validate_candidate(c: SemidirectCandidate, reduced: bool = False,
                       cap: int = DEFAULT_CAP) -> CheckReport:
    """Whether the product is an object of Gwa (or of rGwa with ``reduced``)."""
    report = validate_gwa(c.product, cap)
    if reduced:
        report.merge(is_reduced(c.product, cap))
    return report


def product_verdicts(b: FiniteGwa, a: FiniteGwa, dot, star, dual, reduced: bool = False):
    """Batched :func:`validate_candidate` verdicts for stacked triple tables."""
    add, neg, act = product_tables(b, a, dot, star, dual)
    tables = Tables({"G.add": add, "G.neg": neg, "G.act": act}, {"G": b.order * a.order},
                    {"G.add", "G.neg", "G.act"}, len(add))
    laws = _cheap_first(GWA_LAWS + (REDUCED_LAWS if reduced else ()))
    return batch_verdicts(laws, tables)


def _cheap_first(laws):
    return sorted(laws, key=lambda law: len(law.vars))


@dataclass(frozen=True, eq=False)
class SplitExtension:
    """``0 -> A -i-> E -p-> B -> 0`` with a section ``j`` of ``p``."""

    a: FiniteGwa
    e: FiniteGwa
    b: FiniteGwa
    i: GwaMorphism
    p: GwaMorphism
    j: GwaMorphism

    def check(self, cap: int = DEFAULT_CAP) -> CheckReport:
        report = CheckReport(cap=cap)
        for name, f in (("i", self.i), ("p", self.p), ("j", self.j)):
            sub = is_morphism(f, cap)
            for law_id, w in sub.violations:
                report.add(f"{name}:{law_id}", [w])
        if not self.p.surjective:
            report.add("p-surjective", [tuple(sorted(set(range(self.b.order)) - set(self.p.map.tolist())))])
        if not self.i.injective:
            report.add("i-injective", [()])
        kernel = set(np.flatnonzero(self.p.map == 0).tolist())
        image = set(self.i.map.tolist())
        if kernel != image:
            report.add("i-kernel", [tuple(sorted(kernel ^ image))])
        bad = np.flatnonzero(self.p.map[self.j.map] != np.arange(self.b.order))
        report.add("p∘j=id", [(int(x),) for x in bad])
        return report


def canonical_split_extension(c: SemidirectCandidate) -> SplitExtension:
    """``p(b, a) = b``, ``i(a) = (0, a)``, ``j(b) = (b, 0)``."""
    if not validate_candidate(c).ok:
        raise ValueError("candidate invalid")
    nb, na = c.actor.order, c.target.order
    e = c.product
    x = SplitExtension(
        c.target, e, c.actor,
        i=GwaMorphism(c.target, e, np.arange(na)),
        p=GwaMorphism(e, c.actor, np.arange(nb * na) // na),
        j=GwaMorphism(c.actor, e, np.arange(nb) * na),
    )
    report = x.check()
    if not report.ok:
        raise ValueError(f"canonical extension broken: {report.failed}")
    return x


def extract_derived_actions(x: SplitExtension) -> ActionTriple:
    """The triple induced on A by conjugation, action and dual action inside E:
    ``b·a = j(b) + a - j(b)``, ``a^b = a^j(b)``, ``b^a = j(b)^a - j(b)``."""
    e = x.e
    back = np.full(e.order, -1)
    back[x.i.map] = np.arange(x.a.order)
    jb = x.j.map[:, None]     # (nB, 1)
    ia = x.i.map[None, :]     # (1, nA)
    dot = e.add[e.add[jb, ia], e.neg[jb]]
    dual = e.add[e.act[jb, ia], e.neg[jb]]
    star = e.act[x.i.map[:, None], x.j.map[None, :]]
    out = []
    for name, tbl in (("dot", dot), ("star", star), ("dual", dual)):
        pulled = back[tbl]
        if (pulled < 0).any():
            where = tuple(int(v) for v in np.argwhere(pulled < 0)[0])
            raise ValueError(f"{name} value at {where} not in image of i")
        out.append(pulled)
    return ActionTriple(x.b, x.a, *out)


def roundtrip_check(b: FiniteGwa, a: FiniteGwa, t: ActionTriple,
                    cap: int = DEFAULT_CAP) -> CheckReport:
    """Rebuild ``t`` from the canonical extension of ``B ⋉ A`` and compare tables."""
    x = canonical_split_extension(build_semidirect(b, a, t))
    back = extract_derived_actions(x)
    report = CheckReport(cap=cap)
    for name in ("dot", "star", "dual"):
        diff = np.argwhere(getattr(back, name) != getattr(t, name))
        report.add(f"roundtrip-{name}", map(tuple, diff))
    return report


def direct_product(b: FiniteGwa, a: FiniteGwa) -> FiniteGwa:
    """``B × A`` with componentwise operations, using the pair encoding above."""
    na = a.order
    pb = np.repeat(np.arange(b.order), na)
    pa = np.tile(np.arange(na), b.order)
    x, y = np.ix_(np.arange(len(pb)), np.arange(len(pb)))
    add = b.add[pb[x], pb[y]] * na + a.add[pa[x], pa[y]]
    act = b.act[pb[x], pb[y]] * na + a.act[pa[x], pa[y]]
    neg = b.neg[pb] * na + a.neg[pa]
    return FiniteGwa(f"{b.name}×{a.name}", add, neg, act)


def direct_split_extension(b: FiniteGwa, a: FiniteGwa) -> SplitExtension:
    e = direct_product(b, a)
    nb, na = b.order, a.order
    return SplitExtension(a, e, b,
                          i=GwaMorphism(a, e, np.arange(na)),
                          p=GwaMorphism(e, b, np.arange(nb * na) // na),
                          j=GwaMorphism(b, e, np.arange(nb) * na))


def derived_action_check(x: SplitExtension) -> CheckReport:
    """Extract the triple from ``x`` and run :func:`is_derived_action` on it."""
    return is_derived_action(extract_derived_actions(x))
