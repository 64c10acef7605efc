"""Exhaustive (or seeded sampled) searches and the equivalence auditors."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .actions import (DERIVED_ACTION_LAWS, LAW_CATALOGUE, REDUCED_DERIVED_LAWS, ZERO_LAWS,
                      ActionTriple, triple_tables)
from .core import FiniteGwa, GroupTable, StructureError, is_reduced, validate_group
from .ideals import SubsetMask, is_ideal
from .semidirect import product_verdicts
from .terms import batch_verdicts

MAX_EXHAUSTIVE = 2 ** 24
DEFAULT_SAMPLES = 100_000
BATCH = 8192


def max_exhaustive() -> int:
    return int(os.environ.get("GWA_MAX_EXHAUSTIVE", MAX_EXHAUSTIVE))


# -- self-actions ------------------------------------------------------------

def generators(g: GroupTable) -> list[int]:
    """A small generating set, picked greedily by smallest index."""
    gens: list[int] = []
    span = {0}
    while len(span) < g.order:
        x = min(set(range(g.order)) - span)
        gens.append(x)
        span = _closure(g, gens)
    return gens


def _closure(g: GroupTable, gens: Sequence[int]) -> set[int]:
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = int(g.add[x, s])
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _extend(g: GroupTable, gens, images, compose, unit):
    """Extend generator images along the Cayley graph of ``<gens>``.

    ``compose(value_at_x, image_of_s)`` gives the value at ``x + s``. Returns
    the map as a dict, or None if two paths disagree.
    """
    value = {0: unit}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for s, im in zip(gens, images):
            y = int(g.add[x, s])
            v = compose(value[x], im)
            if y in value:
                if value[y] != v:
                    return None
            else:
                value[y] = v
                frontier.append(y)
    return value


def automorphisms(g: GroupTable) -> list[tuple[int, ...]]:
    """All automorphisms of the group, as permutation tuples, sorted."""
    gens = generators(g)
    n = g.order
    out = []

    def rec(j, images):
        if j == len(gens):
            hom = _extend(g, gens, images, lambda v, im: int(g.add[v, im]), 0)
            if hom is not None and len(hom) == n and len(set(hom.values())) == n:
                out.append(tuple(hom[x] for x in range(n)))
            return
        for im in range(n):
            imgs = images + [im]
            if _extend(g, gens[: j + 1], imgs, lambda v, im: int(g.add[v, im]), 0) is not None:
                rec(j + 1, imgs)

    rec(0, [])
    return sorted(out)


def enumerate_self_actions(grouptable: GroupTable) -> Iterator[FiniteGwa]:
    """Every act table obeying the three self-action axioms, in lexicographic order.

    Each ``g -> g^h`` is an automorphism, and ``h -> (g -> g^h)`` turns ``+``
    into composition (apply ``h`` first). So an action is fixed by where the
    generators go in Aut(G); the search assigns those one at a time and drops
    any partial assignment that is already inconsistent on the subgroup
    generated so far.
    """
    g = grouptable
    if not validate_group(g).ok:
        raise StructureError(f"{g.name} is not a group")
    n = g.order
    gens = generators(g)
    auts = automorphisms(g)
    ident = tuple(range(n))

    def after(p, s):  # x^(h + s) = (x^h)^s
        return tuple(s[p[x]] for x in range(n))

    found = []

    def rec(j, images):
        ext = _extend(g, gens[:j], images, after, ident)
        if ext is None:
            return
        if j == len(gens):
            found.append(np.array([[ext[h][x] for h in range(n)] for x in range(n)]))
            return
        for p in auts:
            rec(j + 1, images + [p])

    rec(0, [])
    found.sort(key=lambda t: tuple(t.ravel()))
    for k, act in enumerate(found):
        yield FiniteGwa(f"{g.name}-act{k}", g.add, g.neg, act)


# -- action triples ----------------------------------------------------------

# Each filter law pins a row or column of one table: (slot, axis, index, values)
# where values is "id" (0..n-1) or "zero".
FILTERS = {
    "0·a=a": ("dot", 0, "id"),
    "a^{0_B}=a": ("star", 1, "id"),
    "0_A^b=0_A": ("star", 0, "zero"),
    "0_B^a=0_A": ("dual", 0, "zero"),
    "b^{0_A}=0_A": ("dual", 1, "zero"),
}


@dataclass(frozen=True)
class TripleSpace:
    """The candidate triples of ``b`` on ``a`` with some entries pinned.

    Candidates are ordered lexicographically over the concatenation of the
    flattened dot, star and dual tables.
    """

    b: FiniteGwa
    a: FiniteGwa
    base: np.ndarray          # flat template with pinned values filled in
    free: np.ndarray          # flat positions left free

    @property
    def size(self) -> int:
        return self.a.order ** len(self.free)

    def split(self, flat: np.ndarray):
        nb, na = self.b.order, self.a.order
        k = nb * na
        t = len(flat)
        return (flat[:, :k].reshape(t, nb, na), flat[:, k:2 * k].reshape(t, na, nb),
                flat[:, 2 * k:].reshape(t, nb, na))

    def decode(self, indices: np.ndarray):
        """dot, star, dual stacks for the given candidate numbers."""
        na = self.a.order
        m = len(self.free)
        flat = np.repeat(self.base[None, :], len(indices), axis=0)
        if m:
            powers = na ** np.arange(m - 1, -1, -1, dtype=np.int64)
            digits = (np.asarray(indices, dtype=np.int64)[:, None] // powers[None, :]) % na
            flat[:, self.free] = digits
        return self.split(flat)

    def random(self, rng: np.random.Generator, count: int):
        flat = np.repeat(self.base[None, :], count, axis=0)
        flat[:, self.free] = rng.integers(0, self.a.order, (count, len(self.free)))
        return self.split(flat)


def triple_space(b: FiniteGwa, a: FiniteGwa, filter: Iterable[str] = ()) -> TripleSpace:
    nb, na = b.order, a.order
    k = nb * na
    base = np.zeros(3 * k, dtype=np.intp)
    pinned = np.zeros(3 * k, dtype=bool)
    offsets = {"dot": 0, "star": k, "dual": 2 * k}
    shapes = {"dot": (nb, na), "star": (na, nb), "dual": (nb, na)}
    for law in filter:
        if law not in FILTERS:
            raise ValueError(f"unsupported filter law {law!r}; choose from {sorted(FILTERS)}")
        slot, axis, what = FILTERS[law]
        rows, cols = shapes[slot]
        for r in range(rows):
            for c in range(cols):
                if (r if axis == 0 else c) != 0:
                    continue
                pos = offsets[slot] + r * cols + c
                val = 0 if what == "zero" else (c if axis == 0 else r)
                if pinned[pos] and base[pos] != val:
                    raise ValueError(f"filters disagree on {slot}[{r}][{c}]")
                base[pos] = val
                pinned[pos] = True
    return TripleSpace(b, a, base, np.flatnonzero(~pinned))


def _batches(space: TripleSpace, batch: int = BATCH) -> Iterator[tuple]:
    for start in range(0, space.size, batch):
        yield space.decode(np.arange(start, min(start + batch, space.size)))


def enumerate_action_triples(b: FiniteGwa, a: FiniteGwa,
                             filter: Iterable[str] = ()) -> Iterator[ActionTriple]:
    """Every triple of ``b`` on ``a`` (with filter laws pinned), in a fixed order."""
    space = triple_space(b, a, filter)
    for dot, star, dual in _batches(space):
        for i in range(len(dot)):
            yield ActionTriple(b, a, dot[i], star[i], dual[i])


# -- audits ------------------------------------------------------------------

@dataclass
class AuditSummary:
    total: int = 0
    agree: int = 0
    disagreements: list[tuple[dict, bool, bool]] = field(default_factory=list)
    elapsed: float = 0.0
    seed: int | None = None
    found: list[ActionTriple] = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return self.agree == self.total

    def merge(self, other: "AuditSummary") -> "AuditSummary":
        return AuditSummary(self.total + other.total, self.agree + other.agree,
                            self.disagreements + other.disagreements,
                            self.elapsed + other.elapsed, self.seed,
                            self.found + other.found)

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "agree": self.agree,
            "disagreements": [{"triple": t, "side_a": sa, "side_b": sb}
                              for t, sa, sb in self.disagreements],
            "seed": self.seed,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def _triple_record(dot, star, dual) -> dict:
    return {"dot": dot.tolist(), "star": star.tolist(), "dual": dual.tolist()}


def _candidates(space: TripleSpace, seed: int | None, samples: int):
    if space.size <= max_exhaustive():
        yield from _batches(space)
        return
    if seed is None:
        raise ValueError(f"{space.size} candidates exceed the exhaustive cap; a seed is required")
    rng = np.random.default_rng(seed)
    left = samples
    while left > 0:
        count = min(BATCH, left)
        yield space.random(rng, count)
        left -= count


def _audit(b, a, side_a, side_b, filter, seed, samples, collect) -> AuditSummary:
    t0 = time.perf_counter()
    space = triple_space(b, a, filter)
    summary = AuditSummary(seed=seed if space.size > max_exhaustive() else None)
    for dot, star, dual in _candidates(space, seed, samples):
        va = side_a(dot, star, dual)
        vb = side_b(dot, star, dual)
        summary.total += len(va)
        summary.agree += int((va == vb).sum())
        for i in np.flatnonzero(va != vb):
            summary.disagreements.append(
                (_triple_record(dot[i], star[i], dual[i]), bool(va[i]), bool(vb[i])))
        if collect:
            summary.found.extend(ActionTriple(b, a, dot[i], star[i], dual[i])
                                 for i in np.flatnonzero(va))
    summary.elapsed = time.perf_counter() - t0
    return summary


def _law_side(b, a, laws):
    def side(dot, star, dual):
        return batch_verdicts(laws, triple_tables(b, a, dot, star, dual, batched=True))
    return side


def audit_theorem_3_3(b: FiniteGwa, a: FiniteGwa, filter: Iterable[str] = (),
                      seed: int | None = None, samples: int = DEFAULT_SAMPLES,
                      collect: bool = False) -> AuditSummary:
    """Compare "the triple is a derived action" with "B ⋉ A is a Gwa object".

    Side A is the law check, side B the product check. ``collect`` keeps the
    triples that pass side A in ``found``.
    """
    return _audit(b, a, _law_side(b, a, DERIVED_ACTION_LAWS),
                  lambda d, s, u: product_verdicts(b, a, d, s, u),
                  tuple(filter), seed, samples, collect)


def audit_theorem_4_3(b: FiniteGwa, a: FiniteGwa, filter: Iterable[str] = (),
                      seed: int | None = None, samples: int = DEFAULT_SAMPLES,
                      collect: bool = False) -> AuditSummary:
    """The reduced version of :func:`audit_theorem_3_3`; both inputs must be reduced."""
    for g in (b, a):
        if not is_reduced(g).ok:
            raise ValueError(f"input not reduced: {g.name}")
    return _audit(b, a, _law_side(b, a, REDUCED_DERIVED_LAWS),
                  lambda d, s, u: product_verdicts(b, a, d, s, u, reduced=True),
                  tuple(filter), seed, samples, collect)


def audit_implication(b: FiniteGwa, a: FiniteGwa,
                      premises: Sequence[str] = ("(1_A)", "(2_A)", "(1_B)"),
                      conclusions: Sequence[str] = tuple(law.id for law in ZERO_LAWS),
                      filter: Iterable[str] = (), seed: int | None = None,
                      samples: int = DEFAULT_SAMPLES) -> AuditSummary:
    """Check ``premises => conclusions`` over all triples.

    A disagreement is a triple where the premises hold and a conclusion fails;
    side A and side B are the premise and conclusion verdicts.
    """
    prem = _law_side(b, a, [LAW_CATALOGUE[i] for i in premises])
    concl = _law_side(b, a, [LAW_CATALOGUE[i] for i in conclusions])

    def side_b(d, s, u):
        # differs from side A exactly where premise holds and conclusion fails
        p = prem(d, s, u)
        return np.where(p, concl(d, s, u), p)

    return _audit(b, a, prem, side_b, tuple(filter), seed, samples, False)


# -- ideals ------------------------------------------------------------------

def enumerate_ideals(g: FiniteGwa) -> Iterator[SubsetMask]:
    """All ideals, by size and then lexicographically by element list."""
    rest = range(1, g.order)
    for k in range(g.order):
        for extra in combinations(rest, k):
            s = SubsetMask.of(g, (0,) + extra)
            if is_ideal(s).ok:
                yield s
