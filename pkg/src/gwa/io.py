"""JSON file formats for algebras, subsets, triples and extensions."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .actions import ActionTriple
from .core import FiniteGwa, StructureError
from .ideals import SubsetMask
from .semidirect import SplitExtension

FIXTURES = ("trivial", "z2", "z3", "v4", "s3", "s3_conj")


def dumps(obj) -> str:
    """Canonical serialisation; ``dumps(json.loads(dumps(x))) == dumps(x)``."""
    return json.dumps(obj, ensure_ascii=False)


def _read(path) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise StructureError(f"{path}: malformed JSON ({e.msg})") from e
    if not isinstance(data, dict):
        raise StructureError(f"{path}: expected a JSON object")
    return data


def _field(data: dict, key: str, where):
    if key not in data:
        raise StructureError(f"{where}: missing field {key!r}")
    return data[key]


def algebra_to_dict(g: FiniteGwa) -> dict:
    return {"name": g.name, "order": g.order, "add": g.add.tolist(),
            "neg": g.neg.tolist(), "act": g.act.tolist()}


def algebra_from_dict(data: dict, where="algebra") -> FiniteGwa:
    order = _field(data, "order", where)
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise StructureError(f"{where}: order must be a positive integer")
    g = FiniteGwa(str(_field(data, "name", where)), _field(data, "add", where),
                  _field(data, "neg", where), _field(data, "act", where))
    if g.order != order:
        raise StructureError(f"{where}: order {order} does not match tables of size {g.order}")
    return g


def load_algebra(path) -> FiniteGwa:
    return algebra_from_dict(_read(path), str(path))


def save_algebra(g: FiniteGwa, path):
    Path(path).write_text(dumps(algebra_to_dict(g)) + "\n", encoding="utf-8")


def triple_to_dict(t: ActionTriple) -> dict:
    return {"actor": t.actor.name, "target": t.target.name, "dot": t.dot.tolist(),
            "star": t.star.tolist(), "dual": t.dual.tolist()}


def triple_from_dict(data: dict, actor: FiniteGwa, target: FiniteGwa,
                     where="triple") -> ActionTriple:
    for key, g in (("actor", actor), ("target", target)):
        if _field(data, key, where) != g.name:
            raise StructureError(f"{where}: {key} {data[key]!r} does not match algebra {g.name!r}")
    return ActionTriple(actor, target, _field(data, "dot", where), _field(data, "star", where),
                        _field(data, "dual", where))


def load_triple(path, actor: FiniteGwa, target: FiniteGwa) -> ActionTriple:
    return triple_from_dict(_read(path), actor, target, str(path))


def save_triple(t: ActionTriple, path):
    Path(path).write_text(dumps(triple_to_dict(t)) + "\n", encoding="utf-8")


def subset_to_dict(s: SubsetMask) -> dict:
    return {"algebra": s.parent.name, "members": s.elements}


def subset_from_dict(data: dict, parent: FiniteGwa, where="subset") -> SubsetMask:
    if _field(data, "algebra", where) != parent.name:
        raise StructureError(f"{where}: subset belongs to {data['algebra']!r}, not {parent.name!r}")
    members = _field(data, "members", where)
    if not isinstance(members, list) or not all(isinstance(x, int) for x in members):
        raise StructureError(f"{where}: members must be a list of indices")
    return SubsetMask.of(parent, members)


def load_subset(path, parent: FiniteGwa) -> SubsetMask:
    return subset_from_dict(_read(path), parent, str(path))


def extension_to_dict(x: SplitExtension) -> dict:
    return {"a": x.a.name, "e": x.e.name, "b": x.b.name,
            "i": x.i.map.tolist(), "p": x.p.map.tolist(), "j": x.j.map.tolist()}


def _data_dir():
    return resources.files("gwa") / "data"


def fixture(name: str) -> FiniteGwa:
    """One of the bundled algebras, by file stem (see ``FIXTURES``)."""
    return algebra_from_dict(json.loads((_data_dir() / f"{name}.json").read_text("utf-8")), name)


def fixture_triple(name: str, actor: FiniteGwa, target: FiniteGwa) -> ActionTriple:
    data = json.loads((_data_dir() / f"{name}.json").read_text("utf-8"))
    return triple_from_dict(data, actor, target, name)


def fixture_path(name: str) -> Path:
    return Path(str(_data_dir() / f"{name}.json"))


def fleet() -> list[FiniteGwa]:
    return [fixture(n) for n in FIXTURES]

