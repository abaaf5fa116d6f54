"""Mereology over finite quasi-Boolean models.

The carrier is the powerset of a small base of atoms with the empty set
removed, ordered by inclusion.  Part-of is the lattice order, the fusion of a
collection is its supremum, and the meet is partial: two objects without a
common part have no product.  With the interior operator fixed to the
identity box on individuals, every individual is clopen and the internal
boundary of every non-top individual is the empty name.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .common import UNDEFINED_MEET, UndefinedMeet
from .errors import EmptyCollection, NoComplement, NotIndividual, NotPart
from .lo import LOModel, Name, eta, is_individual, name_conj, name_disj

Obj = frozenset  # one model object: a nonempty subset of the base atoms

MeetResult = Name | UndefinedMeet


@dataclass(frozen=True)
class QBAModel:
    """All nonempty subsets of a base of 2 to 4 atoms, ordered by inclusion."""

    base: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.base)) != len(self.base):
            raise ValueError("base atoms must be distinct")
        if not 2 <= len(self.base) <= 4:
            raise ValueError("base size must be between 2 and 4")

    @cached_property
    def objects(self) -> tuple[Obj, ...]:
        atoms = sorted(self.base)
        objs = []
        for size in range(1, len(atoms) + 1):
            for combo in combinations(atoms, size):
                objs.append(frozenset(combo))
        return tuple(objs)

    @cached_property
    def lo(self) -> LOModel:
        return LOModel(self.objects)

    @cached_property
    def _parts(self) -> dict[Obj, tuple[Obj, ...]]:
        # Parts listed smallest first so searches that must fail, fail early.
        return {x: tuple(y for y in self.objects if y <= x) for x in self.objects}

    def obj_name(self, obj: Obj) -> Name:
        return self.lo.iota(obj)

    def _object_of(self, a: Name) -> Obj:
        if not is_individual(a):
            raise NotIndividual(f"not an individual name: {a!r}")
        return next(iter(a.objects))

    # -- part structure -------------------------------------------------

    def pt(self, a: Name) -> Name:
        """The plural name of all parts of an individual."""
        return self.lo.name(self._parts[self._object_of(a)])

    def ext(self, a: Name, b: Name) -> bool:
        """True when two individuals share no common part."""
        return not (self._object_of(a) & self._object_of(b))

    def klass(self, a: Name) -> Name:
        """The fusion of a nonempty collection: its lattice supremum."""
        if a.is_empty:
            raise EmptyCollection("the empty name has no fusion")
        sup: Obj = frozenset().union(*a.objects)
        return self.obj_name(sup)

    def coll(self, a: Name, coll_name: Name) -> bool:
        """True when a is the fusion of some nonempty sub-name of coll_name.

        The candidates below a are exactly the members of coll_name that are
        parts of a; a is such a fusion iff their union recovers a itself.
        """
        if not is_individual(a):
            return False
        target = self._object_of(a)
        below = [c for c in coll_name.objects if c <= target]
        return bool(below) and frozenset().union(*below) == target

    def universe_individual(self) -> Name:
        """The fusion of the universal name: the top object."""
        return self.klass(self.lo.full_name())

    # -- join, meet, complement ------------------------------------------

    def b_sum(self, p: Name, q: Name) -> Name:
        """Binary fusion: the fusion of the disjunction of the parts."""
        return self.klass(name_disj(self.pt(p), self.pt(q)))

    def b_prod(self, p: Name, q: Name) -> MeetResult:
        """Partial meet: the fusion of the common parts, when any exist."""
        shared = name_conj(self.pt(p), self.pt(q))
        if shared.is_empty:
            return UNDEFINED_MEET
        return self.klass(shared)

    def rel_compl(self, q: Name, r: Name) -> MeetResult:
        """The individual disjoint from q that sums with q to r."""
        x = self._object_of(q)
        y = self._object_of(r)
        if not x <= y:
            raise NotPart(f"{q!r} is not a part of {r!r}")
        rest = y - x
        if not rest:
            return UNDEFINED_MEET
        return self.obj_name(rest)

    def compl(self, q: Name) -> MeetResult:
        return self.rel_compl(q, self.universe_individual())

    # -- internal topology ------------------------------------------------

    def interior_m(self, q: Name) -> Name:
        """Interior of an open (individual) name: the name itself."""
        if not is_individual(q):
            raise NotIndividual(f"not an individual name: {q!r}")
        return q

    def closure_m(self, q: Name) -> Name:
        """Complement of the interior of the complement."""
        c = self.compl(q)
        if isinstance(c, UndefinedMeet):
            raise NoComplement("the top individual has no complement")
        inner = self.compl(self.interior_m(c))
        assert isinstance(inner, Name)
        return inner

    def boundary_m(self, q: Name) -> Name:
        """Common parts of the closures of q and of its complement."""
        c = self.compl(q)
        if isinstance(c, UndefinedMeet):
            raise NoComplement("the top individual has no complement")
        return name_conj(
            self.pt(self.closure_m(q)),
            self.pt(self.closure_m(c)),
        )

    # -- definitional oracles ----------------------------------------------

    def satisfies_fusion_def(self, a: Name, coll_name: Name) -> bool:
        """Direct reading of the three-clause fusion definition; a test oracle.

        a must be individual, every member of the collection must be a part
        of a, and every part of a must share a part with some member.
        """
        if not is_individual(a) or coll_name.is_empty:
            return False
        target = self._object_of(a)
        for member in coll_name.objects:
            if not member <= target:
                return False
        for part in self._parts[target]:
            if not any(part & member for member in coll_name.objects):
                return False
        return True

    def is_part(self, a: Name, b: Name) -> bool:
        """Part-of between individuals: eta(a, pt(b))."""
        return eta(a, self.pt(b))
