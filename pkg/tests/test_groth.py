import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import cat_valued_corpus, chain_fv, pick
from oracles import find_category_isomorphism
from tw2cat.errors import NotFiberedInSets
from tw2cat.fincat import (FinFunctor, chain_category, full_subcategory,
                           identity_functor, terminal_category)
from tw2cat.groth import (coinitiality_evidence, fiber_category, grothendieck,
                          is_cocartesian, is_opfibered, verify_cat_valued)
from tw2cat.twocat import (TwoFunctor, from_one_category,
                           terminal_two_category, verify_two_category,
                           verify_two_functor)
from tw2cat.tw2 import b2, cyclic_monoid

CORPUS = cat_valued_corpus()


def built():
    out = []
    for name, fv in CORPUS:
        total, proj = grothendieck(fv)
        out.append((name, fv, total, proj))
    return out


BUILT = built()


def test_corpus_is_large_enough():
    assert len(CORPUS) >= 20
    assert all(len(fv.base.objects) <= 3 for _, fv in CORPUS)


def test_corpus_entries_are_valid():
    for name, fv in CORPUS:
        verify_cat_valued(fv)


def test_grothendieck_outputs_are_two_categories():
    for name, fv, total, proj in BUILT:
        verify_two_category(total)
        verify_two_functor(proj)


def test_every_projection_is_opfibered():
    for name, fv, total, proj in BUILT:
        report = is_opfibered(proj)
        assert report.ok, (name, report.hom_failures, report.lift_failures)


def test_fibers_are_isomorphic_to_values():
    for name, fv, total, proj in BUILT:
        for a in fv.base.objects:
            fib = fiber_category(total, proj, a)
            iso = find_category_isomorphism(fib, fv.value[a])
            assert iso is not None, (name, a)


def test_total_object_count():
    for name, fv, total, proj in BUILT:
        want = sum(len(fv.value[a].objects) for a in fv.base.objects)
        assert len(total.objects) == want, name


def test_constant_terminal_value_total_mirrors_base():
    for name, fv, total, proj in BUILT:
        if name != "const-terminal-over-chain2":
            continue
        base = fv.base
        assert len(total.objects) == len(base.objects)
        for (s, t), h in total.hom.items():
            bh = base.hom[(proj.on_objects[s], proj.on_objects[t])]
            assert len(h.objects) == len(bh.objects)
            assert len(h.morphisms) == len(bh.morphisms)


def test_three_object_example():
    fv = dict(CORPUS)["pick-zero"]
    total, proj = grothendieck(fv)
    assert set(total.objects) == {(0, "*"), (1, 0), (1, 1)}


def test_identity_one_cells_are_cocartesian():
    for name, fv, total, proj in BUILT[:8]:
        for x in total.objects:
            assert is_cocartesian(proj, x, x, total.id1[x]), name


def test_cocartesian_lift_detection():
    fv = dict(CORPUS)["pick-zero"]
    total, proj = grothendieck(fv)
    src, mid, top = (0, "*"), (1, 0), (1, 1)
    to_mid = total.hom[(src, mid)].objects
    to_top = total.hom[(src, top)].objects
    assert len(to_mid) == 1 and len(to_top) == 1
    # the lift ending at the image of the pick functor is coCartesian,
    # the one continuing along the non-identity arrow is not
    assert is_cocartesian(proj, src, mid, to_mid[0])
    assert not is_cocartesian(proj, src, top, to_top[0])


def collapse_two_functor():
    dom = b2(cyclic_monoid(2))
    cod = terminal_two_category()
    h_dom = dom.hom[("*", "*")]
    h_cod = cod.hom[("*", "*")]
    target = h_cod.objects[0]
    fun = FinFunctor(h_dom, h_cod,
                     {f: target for f in h_dom.objects},
                     {m: h_cod.identity[target] for m in h_dom.morphisms})
    return TwoFunctor(dom, cod, {"*": "*"}, {("*", "*"): fun})


def test_collapse_is_not_fibered_in_sets():
    proj = collapse_two_functor()
    verify_two_functor(proj)
    with pytest.raises(NotFiberedInSets):
        is_cocartesian(proj, "*", "*", "id")
    report = is_opfibered(proj)
    assert not report.ok
    assert report.hom_failures
    (hom_pair, witness, count) = report.hom_failures[0]
    assert hom_pair == ("*", "*")
    assert count == 2


def identity_two_functor(tc):
    return TwoFunctor(tc, tc, {x: x for x in tc.objects},
                      {(x, y): identity_functor(tc.hom[(x, y)])
                       for x in tc.objects for y in tc.objects})


def test_identity_projection_is_opfibered():
    tc = from_one_category(chain_category(1))
    proj = identity_two_functor(tc)
    verify_two_functor(proj)
    assert is_opfibered(proj).ok


def _restrict_total(total, keep):
    objs = [o for o in total.objects if o[0] in keep]
    hom = {(s, t): total.hom[(s, t)] for s in objs for t in objs}
    return objs, hom


def test_grothendieck_commutes_with_base_restriction():
    # restricting the chain [2] entry to the sub-chain on {0, 1} gives
    # literally the [1] entry; the construction commutes on the nose
    big = dict(CORPUS)["chain2-pick-then-identity"]
    small = dict(CORPUS)["pick-zero"]
    big_total, _ = grothendieck(big)
    small_total, _ = grothendieck(small)
    objs, hom = _restrict_total(big_total, {0, 1})
    assert set(objs) == set(small_total.objects)
    for key, h in hom.items():
        sh = small_total.hom[key]
        assert set(h.objects) == set(sh.objects)
        assert set(h.morphisms) == set(sh.morphisms)
        assert h.comp == sh.comp
    for o in objs:
        assert big_total.id1[o] == small_total.id1[o]
    for s in objs:
        for t in objs:
            for u in objs:
                assert (big_total.hcomp_obj[(s, t, u)]
                        == small_total.hcomp_obj[(s, t, u)])


def point_inclusion(point):
    cat = chain_category(1)
    sub = full_subcategory(cat, [point])
    return FinFunctor(sub, cat, {point: point},
                      {(point, point): (point, point)})


def test_identity_functor_is_coinitial():
    cat = chain_category(1)
    report = coinitiality_evidence(identity_functor(cat), 2)
    assert report.verdict == "COINITIAL-CERTIFIED"
    assert report.ok
    for (y, verdict, cert) in report.per_object:
        assert verdict == "PROOF"
        assert cert.kind in ("initial-object", "terminal-object")


def test_initial_point_inclusion_certifies():
    report = coinitiality_evidence(point_inclusion(0), 2)
    assert report.verdict == "COINITIAL-CERTIFIED"


def test_terminal_point_inclusion_refutes():
    report = coinitiality_evidence(point_inclusion(1), 2)
    assert report.verdict == "REFUTED"
    assert not report.ok
    refuted = {y: cert for (y, verdict, cert) in report.per_object
               if verdict == "REFUTED"}
    assert 0 in refuted
    # the comma category over 0 is empty: zeroth homology is 0, not Z
    assert refuted[0].degree == 0
    assert refuted[0].group.is_zero


@given(st.integers(0, len(CORPUS) - 1))
@settings(max_examples=22, deadline=None)
def test_projection_covers_base_objects(i):
    name, fv, total, proj = BUILT[i]
    assert {proj.on_objects[o] for o in total.objects} == set(
        fv.base.objects)
