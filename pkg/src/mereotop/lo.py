"""Extensional logic of names over a finite universe of objects.

A name denotes a finite set of objects drawn from a fixed universe.  Names
with exactly one denoted object are individual (singular); the empty name is
the contradictory constant and the full name is the universal constant.  The
copula ``eta(A, b)`` holds when A is individual and its object falls under b.
All operators below are pure functions of the denotations, which makes every
quantified law checkable by exhaustive enumeration on small universes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

from .errors import ModelMismatch, UnknownObject

ObjectId = Hashable


@dataclass(frozen=True)
class LOModel:
    """A finite universe of objects, ordered for deterministic enumeration."""

    objects: tuple[ObjectId, ...]

    def __post_init__(self) -> None:
        if not self.objects:
            raise ValueError("universe must be nonempty")
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("universe contains duplicate objects")

    @property
    def universe(self) -> frozenset:
        return frozenset(self.objects)

    def name(self, members: Iterable[ObjectId]) -> Name:
        """The name denoting exactly the given objects."""
        den = frozenset(members)
        stray = den - self.universe
        if stray:
            raise UnknownObject(f"objects not in universe: {sorted(map(repr, stray))}")
        return Name(self, den)

    def iota(self, obj: ObjectId) -> Name:
        """The singleton name of one object."""
        if obj not in self.universe:
            raise UnknownObject(f"object not in universe: {obj!r}")
        return Name(self, frozenset((obj,)))

    def empty_name(self) -> Name:
        """The contradictory name (nothing falls under it)."""
        return Name(self, frozenset())

    def full_name(self) -> Name:
        """The universal name (every object falls under it)."""
        return Name(self, self.universe)

    def all_names(self) -> Iterator[Name]:
        """Every name of the model, in a deterministic order."""
        n = len(self.objects)
        for mask in range(1 << n):
            yield Name(
                self,
                frozenset(self.objects[i] for i in range(n) if mask >> i & 1),
            )

    def individuals(self) -> Iterator[Name]:
        for obj in self.objects:
            yield self.iota(obj)


@dataclass(frozen=True)
class Name:
    """A name with its denotation; immutable and hashable."""

    model: LOModel
    objects: frozenset

    @property
    def is_empty(self) -> bool:
        return not self.objects

    def sorted_objects(self) -> list[ObjectId]:
        index = {obj: i for i, obj in enumerate(self.model.objects)}
        return sorted(self.objects, key=index.__getitem__)

    def __and__(self, other: Name) -> Name:
        return name_conj(self, other)

    def __or__(self, other: Name) -> Name:
        return name_disj(self, other)

    def __invert__(self) -> Name:
        return name_neg(self)

    def __repr__(self) -> str:
        return "Name({%s})" % ", ".join(repr(o) for o in self.sorted_objects())


def _require_same_model(a: Name, b: Name) -> None:
    if a.model != b.model:
        raise ModelMismatch("names belong to different universes")


def eta(a: Name, b: Name) -> bool:
    """A is a b: A denotes exactly one object and that object falls under b."""
    _require_same_model(a, b)
    return len(a.objects) == 1 and a.objects <= b.objects


def is_individual(a: Name) -> bool:
    """Equivalent to eta(a, a): the denotation is a singleton."""
    return len(a.objects) == 1


def iota(model: LOModel, obj: ObjectId) -> Name:
    return model.iota(obj)


def name_conj(a: Name, b: Name) -> Name:
    _require_same_model(a, b)
    return Name(a.model, a.objects & b.objects)


def name_disj(a: Name, b: Name) -> Name:
    _require_same_model(a, b)
    return Name(a.model, a.objects | b.objects)


def name_neg(a: Name) -> Name:
    return Name(a.model, a.model.universe - a.objects)


def incl(a: Name, b: Name) -> bool:
    """Name inclusion: everything under a is under b."""
    _require_same_model(a, b)
    return a.objects <= b.objects


def eq_plural(a: Name, b: Name) -> bool:
    """Equality of plural names: mutual inclusion."""
    _require_same_model(a, b)
    return a.objects == b.objects


def eq_singular(a: Name, b: Name) -> bool:
    """Equality of individual names: both singular, same object."""
    _require_same_model(a, b)
    return is_individual(a) and is_individual(b) and a.objects == b.objects
