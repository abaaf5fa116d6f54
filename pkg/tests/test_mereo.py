"""Quasi-Boolean mereology: fusion, join/meet, complement, internal topology.

The expected values below were frozen from independent lattice oracles:
least-upper-bound and greatest-lower-bound searches over the subset order,
and a uniqueness sweep for complements.
"""

import pytest

from mereotop.common import UNDEFINED_MEET, UndefinedMeet
from mereotop.errors import EmptyCollection, NoComplement, NotIndividual, NotPart
from mereotop.lo import eta, name_conj, name_disj
from mereotop.mereo import QBAModel

M2 = QBAModel(("a", "b"))
M3 = QBAModel(("a", "b", "c"))


def obj(model, atoms):
    return model.obj_name(frozenset(atoms))


def lattice_lub(model, members):
    uppers = [x for x in model.objects if all(m <= x for m in members)]
    return next((x for x in uppers if all(x <= u for u in uppers)), None)


def lattice_glb(model, x, y):
    lowers = [z for z in model.objects if z <= x and z <= y]
    return next((z for z in lowers if all(l <= z for l in lowers)), None)


# -- parts ------------------------------------------------------------------


def test_pt_of_top_is_whole_order():
    # Frozen from enumerating the subset order of base {a, b}.
    parts = M2.pt(obj(M2, "ab")).objects
    assert parts == {frozenset("a"), frozenset("b"), frozenset("ab")}


def test_pt_of_atom():
    assert M2.pt(obj(M2, "a")).objects == {frozenset("a")}


def test_atom_is_part_of_top():
    assert eta(obj(M2, "a"), M2.pt(obj(M2, "ab")))


def test_pt_requires_individual():
    with pytest.raises(NotIndividual):
        M2.pt(M2.lo.full_name())


# -- ext --------------------------------------------------------------------


def test_ext_examples():
    assert M2.ext(obj(M2, "a"), obj(M2, "b"))
    assert not M2.ext(obj(M2, "a"), obj(M2, "ab"))


@pytest.mark.parametrize("base", [("a", "b"), ("a", "b", "c"), ("a", "b", "c", "d")])
def test_ext_iff_meet_undefined(base):
    model = QBAModel(base)
    individuals = [model.obj_name(x) for x in model.objects]
    for p in individuals:
        for q in individuals:
            assert model.ext(p, q) == isinstance(model.b_prod(p, q), UndefinedMeet)


# -- fusion -----------------------------------------------------------------


def test_fusion_examples():
    # Frozen from the LUB oracle over the subset lattice.
    assert M2.klass(M2.lo.name((frozenset("a"), frozenset("b")))) == obj(M2, "ab")
    assert M2.klass(M2.lo.name((frozenset("ab"),))) == obj(M2, "ab")
    with pytest.raises(EmptyCollection):
        M2.klass(M2.lo.empty_name())


@pytest.mark.parametrize("model", [M2, M3])
def test_fusion_equals_lub_oracle(model):
    for a in model.lo.all_names():
        if a.is_empty:
            continue
        lub = lattice_lub(model, a.objects)
        assert model.klass(a).objects == frozenset((lub,))


@pytest.mark.parametrize("model", [M2, M3])
def test_fusion_def_equivalence(model):
    # The three-clause fusion definition holds exactly for the fused
    # individual and for nothing else.
    individuals = [model.obj_name(x) for x in model.objects]
    for a in model.lo.all_names():
        for cand in individuals:
            expected = (not a.is_empty) and cand == model.klass(a)
            assert model.satisfies_fusion_def(cand, a) == expected


def test_coll_examples():
    both = M2.lo.name((frozenset("a"), frozenset("b")))
    assert M2.coll(obj(M2, "ab"), both)
    assert M2.coll(obj(M2, "a"), both)
    assert not M2.coll(obj(M2, "b"), M2.lo.name((frozenset("a"),)))


@pytest.mark.parametrize("model", [M2, M3])
def test_coll_matches_subset_enumeration(model):
    # Oracle: literal enumeration over subsets of the collection.
    from itertools import combinations

    individuals = [model.obj_name(x) for x in model.objects]
    for a in model.lo.all_names():
        members = sorted(a.objects, key=sorted)
        for cand in individuals:
            by_enum = False
            for size in range(1, len(members) + 1):
                for sub in combinations(members, size):
                    if model.klass(model.lo.name(sub)) == cand:
                        by_enum = True
            assert model.coll(cand, a) == by_enum


def test_universe():
    assert M2.universe_individual() == obj(M2, "ab")
    assert M3.universe_individual() == obj(M3, "abc")
    top = M3.universe_individual()
    assert eta(top, top)


# -- join and meet ----------------------------------------------------------


def test_b_sum_examples():
    assert M2.b_sum(obj(M2, "a"), obj(M2, "b")) == obj(M2, "ab")
    assert M2.b_sum(obj(M2, "a"), obj(M2, "a")) == obj(M2, "a")
    assert M2.b_sum(obj(M2, "a"), obj(M2, "ab")) == obj(M2, "ab")


def test_b_prod_examples():
    assert M2.b_prod(obj(M2, "ab"), obj(M2, "a")) == obj(M2, "a")
    assert M2.b_prod(obj(M2, "a"), obj(M2, "b")) is UNDEFINED_MEET


@pytest.mark.parametrize("base", [("a", "b"), ("a", "b", "c"), ("a", "b", "c", "d")])
def test_join_meet_agree_with_lattice_oracles(base):
    model = QBAModel(base)
    for x in model.objects:
        for y in model.objects:
            p, q = model.obj_name(x), model.obj_name(y)
            assert model.b_sum(p, q).objects == frozenset((lattice_lub(model, (x, y)),))
            glb = lattice_glb(model, x, y)
            met = model.b_prod(p, q)
            if glb is None:
                assert met is UNDEFINED_MEET
            else:
                assert met.objects == frozenset((glb,))


def test_join_meet_uniqueness_via_fusion_def():
    model = M3
    individuals = [model.obj_name(x) for x in model.objects]
    for p in individuals:
        for q in individuals:
            union_parts = name_disj(model.pt(p), model.pt(q))
            sat = [r for r in individuals if model.satisfies_fusion_def(r, union_parts)]
            assert len(sat) == 1
            shared = name_conj(model.pt(p), model.pt(q))
            sat = [r for r in individuals if model.satisfies_fusion_def(r, shared)]
            assert len(sat) <= 1


# -- complement -------------------------------------------------------------


def test_compl_examples():
    # Frozen from the uniqueness search: the only individual disjoint from
    # {a} that sums with it to the top of base {a, b} is {b}.
    assert M2.compl(obj(M2, "a")) == obj(M2, "b")
    assert M2.compl(M2.universe_individual()) is UNDEFINED_MEET


@pytest.mark.parametrize("base", [("a", "b"), ("a", "b", "c"), ("a", "b", "c", "d")])
def test_complement_uniqueness_and_laws(base):
    model = QBAModel(base)
    top = model.universe_individual()
    individuals = [model.obj_name(x) for x in model.objects]
    for q in individuals:
        if q == top:
            continue
        c = model.compl(q)
        matches = [
            p
            for p in individuals
            if isinstance(model.b_prod(p, q), UndefinedMeet)
            and model.b_sum(p, q) == top
        ]
        assert matches == [c]
        assert model.ext(q, c)
        assert model.b_sum(q, c) == top


def test_rel_compl_requires_parthood():
    with pytest.raises(NotPart):
        M3.rel_compl(obj(M3, "ab"), obj(M3, "a"))
    assert M3.rel_compl(obj(M3, "a"), obj(M3, "a")) is UNDEFINED_MEET
    assert M3.rel_compl(obj(M3, "a"), obj(M3, "ab")) == obj(M3, "b")


# -- internal topology ------------------------------------------------------


def test_interior_identity_and_idempotence():
    for model in (M2, M3):
        for x in model.objects:
            q = model.obj_name(x)
            assert model.interior_m(q) == q
            assert model.interior_m(model.interior_m(q)) == model.interior_m(q)
    with pytest.raises(NotIndividual):
        M2.interior_m(M2.lo.full_name())


def test_closure_examples():
    assert M2.closure_m(obj(M2, "a")) == obj(M2, "a")
    with pytest.raises(NoComplement):
        M2.closure_m(M2.universe_individual())


@pytest.mark.parametrize("base", [("a", "b"), ("a", "b", "c"), ("a", "b", "c", "d")])
def test_closure_identity_for_all_non_top(base):
    model = QBAModel(base)
    top = model.universe_individual()
    for x in model.objects:
        q = model.obj_name(x)
        if q == top:
            continue
        assert model.closure_m(q) == q


def test_boundary_is_empty_name():
    assert M2.boundary_m(obj(M2, "a")).is_empty
    # All six non-top individuals of base three.
    top = M3.universe_individual()
    checked = 0
    for x in M3.objects:
        q = M3.obj_name(x)
        if q == top:
            continue
        assert M3.boundary_m(q).is_empty
        checked += 1
    assert checked == 6
    # Unfolding for a two-atom object inside base three.
    assert M3.boundary_m(obj(M3, "ab")).is_empty


def test_boundary_of_top_has_no_complement():
    with pytest.raises(NoComplement):
        M3.boundary_m(M3.universe_individual())


def test_fusion_is_extensional():
    objs = sorted(M3.objects, key=sorted)
    forward = M3.lo.name(objs)
    backward = M3.lo.name(tuple(reversed(objs)))
    assert M3.klass(forward) == M3.klass(backward)


def test_base_size_validated():
    with pytest.raises(ValueError):
        QBAModel(("a",))
    with pytest.raises(ValueError):
        QBAModel(("a", "b", "c", "d", "e"))
