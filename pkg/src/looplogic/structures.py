"""Finite presentations of list superstructures.

A :class:`Structure` fixes an urelement alphabet and, for every predicate of
its signature, a finite set of argument tuples. Predicates are read under the
closed-world assumption: a ground atom holds iff its tuple is listed.

File format (JSON)::

    {"urelements": ["a", "b"],
     "predicates": {"T1": {"arity": 2, "tuples": [["['a]", "nil"]]}}}

Tuple entries use the value literal syntax of :func:`parse_value`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import LoopLogicError, StructureError
from .values import format_value, urelements_of


@dataclass(frozen=True)
class Signature:
    predicates: Mapping[str, int] = field(default_factory=dict)
    urelements: frozenset = frozenset()

    def __post_init__(self):
        for name, arity in self.predicates.items():
            if arity < 1:
                raise StructureError(f"predicate {name} must have arity >= 1, got {arity}")
        object.__setattr__(self, "predicates", MappingProxyType(dict(self.predicates)))
        object.__setattr__(self, "urelements", frozenset(self.urelements))

    def __hash__(self):
        return hash((frozenset(self.predicates.items()), self.urelements))

    def __eq__(self, other):
        return (isinstance(other, Signature)
                and dict(self.predicates) == dict(other.predicates)
                and self.urelements == other.urelements)


class Structure:
    """Urelements plus closed-world extensions of the signature's predicates."""

    __slots__ = ("signature", "_ext")

    def __init__(self, urelements=(), predicates: Mapping[str, int] | None = None,
                 extensions: Mapping[str, object] | None = None):
        predicates = dict(predicates or {})
        extensions = extensions or {}
        for name in extensions:
            if name not in predicates:
                raise StructureError(f"extension given for undeclared predicate {name}")
        self.signature = Signature(predicates, frozenset(urelements))
        ext = {}
        for name, arity in predicates.items():
            rows = set()
            for tup in extensions.get(name, ()):
                tup = tuple(tup)
                if len(tup) != arity:
                    raise StructureError(
                        f"tuple of length {len(tup)} for predicate {name} of arity {arity}")
                unknown = set()
                for v in tup:
                    urelements_of(v, unknown)
                unknown -= self.signature.urelements
                if unknown:
                    raise StructureError(
                        f"tuple for {name} mentions undeclared urelements {sorted(unknown)}")
                rows.add(tup)
            ext[name] = frozenset(rows)
        self._ext = MappingProxyType(ext)

    @property
    def urelements(self) -> frozenset:
        return self.signature.urelements

    @property
    def predicates(self) -> Mapping[str, int]:
        return self.signature.predicates

    def extension(self, name: str) -> frozenset:
        try:
            return self._ext[name]
        except KeyError:
            raise StructureError(f"undeclared predicate {name}") from None

    def atom_holds(self, name: str, args) -> bool:
        arity = self.signature.predicates.get(name)
        if arity is None:
            raise StructureError(f"undeclared predicate {name}")
        args = tuple(args)
        if len(args) != arity:
            raise StructureError(f"{name} has arity {arity}, applied to {len(args)} arguments")
        return args in self._ext[name]

    def __eq__(self, other):
        return (isinstance(other, Structure) and self.signature == other.signature
                and dict(self._ext) == dict(other._ext))

    def __hash__(self):
        return hash((self.signature, frozenset(self._ext.items())))

    def __repr__(self):
        sizes = ", ".join(f"{k}:{len(v)}" for k, v in sorted(self._ext.items()))
        return f"Structure(urelements={sorted(self.urelements)}, extensions={{{sizes}}})"

    def to_dict(self) -> dict:
        return {
            "urelements": sorted(self.urelements),
            "predicates": {
                name: {
                    "arity": arity,
                    "tuples": sorted([format_value(v) for v in tup] for tup in self._ext[name]),
                }
                for name, arity in sorted(self.signature.predicates.items())
            },
        }


EMPTY = Structure()


def atom_holds(s: Structure, name: str, args) -> bool:
    return s.atom_holds(name, args)


def structure_from_dict(data: dict) -> Structure:
    from .parser import parse_value

    if not isinstance(data, dict):
        raise StructureError("structure must be a JSON object")
    unknown_keys = set(data) - {"urelements", "predicates"}
    if unknown_keys:
        raise StructureError(f"unknown keys in structure: {sorted(unknown_keys)}")
    urs = data.get("urelements", [])
    if not isinstance(urs, list) or not all(isinstance(u, str) for u in urs):
        raise StructureError("'urelements' must be a list of names")
    if len(set(urs)) != len(urs):
        raise StructureError("duplicate urelement names")
    predicates, extensions = {}, {}
    for name, entry in (data.get("predicates") or {}).items():
        if not isinstance(entry, dict) or "arity" not in entry:
            raise StructureError(f"predicate {name} needs an 'arity'")
        arity = entry["arity"]
        if not isinstance(arity, int):
            raise StructureError(f"arity of {name} must be an integer")
        predicates[name] = arity
        rows = []
        for row in entry.get("tuples", []):
            if not isinstance(row, list):
                raise StructureError(f"tuple of {name} must be a list of value literals")
            try:
                rows.append(tuple(parse_value(cell) for cell in row))
            except LoopLogicError as exc:
                raise StructureError(f"bad value in tuple of {name}: {exc}") from None
        extensions[name] = rows
    return Structure(urs, predicates, extensions)


def load_structure(text: str) -> Structure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON: {exc}") from None
    return structure_from_dict(data)


def dump_structure(s: Structure) -> str:
    return json.dumps(s.to_dict(), indent=2)
