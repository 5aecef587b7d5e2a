import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tw2cat.errors import MissingComposite, MalformedInput
from tw2cat.fincat import (AdjunctionData, FinCategory, FinFunctor,
                           chain_category, check_adjunction, comma,
                           compose_functors, enumerate_functors, find_initial,
                           find_terminal, full_subcategory, identity_functor,
                           is_initial_object, is_terminal_object, opposite,
                           product, skeleton, terminal_category,
                           twisted_arrow, validate_category, verify_category,
                           verify_functor)


SMALL_CATS = [
    terminal_category(),
    chain_category(1),
    chain_category(2),
    product(chain_category(1), chain_category(1)),
]


def bz(n):
    elems = tuple(range(n))
    comp = {(g, f): (g + f) % n for g in elems for f in elems}
    return FinCategory(("*",), elems, {e: "*" for e in elems},
                       {e: "*" for e in elems}, {"*": 0}, comp)


def test_verify_category_accepts_corpus():
    for cat in SMALL_CATS + [bz(2), bz(3)]:
        verify_category(cat)


def test_verify_category_rejects_missing_composite():
    cat = chain_category(1)
    broken = FinCategory(cat.objects, cat.morphisms, cat.src, cat.dst,
                         cat.identity, {})
    with pytest.raises(MissingComposite):
        verify_category(broken)


def test_validate_category_raw_forms():
    raw = {
        "objects": ["a", "b"],
        "morphisms": [{"id": "ia", "src": "a", "dst": "a"},
                      {"id": "ib", "src": "b", "dst": "b"},
                      {"id": "f", "src": "a", "dst": "b"}],
        "identities": [["a", "ia"], ["b", "ib"]],
        "compose": [["ia", "ia", "ia"], ["ib", "ib", "ib"],
                    ["f", "ia", "f"], ["ib", "f", "f"]],
    }
    cat = validate_category(raw)
    assert set(cat.objects) == {"a", "b"}
    assert cat.comp[("ib", "f")] == "f"
    raw_dict_ids = dict(raw, identities={"a": "ia", "b": "ib"})
    cat2 = validate_category(raw_dict_ids)
    assert cat2.identity == cat.identity


def test_validate_category_rejects_garbage():
    with pytest.raises(MalformedInput):
        validate_category({"objects": ["a", "a"], "morphisms": [],
                           "identities": [], "compose": []})


def test_hom_partitions_morphisms():
    for cat in SMALL_CATS:
        total = 0
        for x in cat.objects:
            for y in cat.objects:
                h = cat.hom(x, y)
                total += len(h)
                assert all(cat.src[m] == x and cat.dst[m] == y for m in h)
        assert total == len(cat.morphisms)


def test_chain_category_counts():
    for n in range(5):
        cat = chain_category(n)
        assert len(cat.objects) == n + 1
        assert len(cat.morphisms) == (n + 1) * (n + 2) // 2


def test_opposite_involution():
    for cat in SMALL_CATS:
        op2 = opposite(opposite(cat))
        assert op2.src == cat.src and op2.dst == cat.dst
        assert dict(op2.comp) == dict(cat.comp)


def test_product_sizes():
    a, b = chain_category(1), chain_category(2)
    p = product(a, b)
    verify_category(p)
    assert len(p.objects) == len(a.objects) * len(b.objects)
    assert len(p.morphisms) == len(a.morphisms) * len(b.morphisms)


def test_initial_terminal():
    cat = chain_category(2)
    assert find_initial(cat) == 0
    assert find_terminal(cat) == 2
    assert is_initial_object(cat, 0)
    assert is_terminal_object(cat, 2)
    assert not is_terminal_object(cat, 0)
    assert find_initial(bz(2)) is None


def test_full_subcategory_and_skeleton():
    cat = chain_category(2)
    sub = full_subcategory(cat, (0, 2))
    verify_category(sub)
    assert set(sub.objects) == {0, 2}
    assert len(sub.morphisms) == 3

    # a category with two isomorphic objects collapses to one rep
    objs = ("a", "b")
    mors = ("ia", "ib", "u", "v")
    src = {"ia": "a", "ib": "b", "u": "a", "v": "b"}
    dst = {"ia": "a", "ib": "b", "u": "b", "v": "a"}
    comp = {("ia", "ia"): "ia", ("ib", "ib"): "ib",
            ("u", "ia"): "u", ("ib", "u"): "u",
            ("v", "ib"): "v", ("ia", "v"): "v",
            ("v", "u"): "ia", ("u", "v"): "ib"}
    iso_pair = verify_category(FinCategory(objs, mors, src, dst,
                                           {"a": "ia", "b": "ib"}, comp))
    sk, rep_of = skeleton(iso_pair)
    assert len(sk.objects) == 1
    assert set(rep_of.values()) == set(sk.objects)


def test_twisted_arrow_objects_are_morphisms():
    for cat in SMALL_CATS:
        tw, proj = twisted_arrow(cat)
        verify_category(tw)
        assert set(tw.objects) == set(cat.morphisms)
        verify_functor(proj)


def test_twisted_arrow_morphism_law():
    cat = chain_category(2)
    tw, _ = twisted_arrow(cat)
    for mid in tw.morphisms:
        f, (v, u), g = mid
        assert tw.src[mid] == f and tw.dst[mid] == g
        assert cat.comp[(u, cat.comp[(f, v)])] == g


def test_twisted_arrow_of_groupoid_is_connected():
    tw, _ = twisted_arrow(bz(2))
    seen = {tw.objects[0]}
    frontier = [tw.objects[0]]
    while frontier:
        o = frontier.pop()
        for m in tw.morphisms:
            for o2 in (tw.dst[m], tw.src[m]):
                if (tw.src[m] == o or tw.dst[m] == o) and o2 not in seen:
                    seen.add(o2)
                    frontier.append(o2)
    assert seen == set(tw.objects)


def test_comma_category_over_chain():
    inc = FinFunctor(terminal_category(), chain_category(1),
                     {"*": 0}, {("id", "*"): (0, 0)})
    verify_functor(inc)
    over0, proj0 = comma(inc, 0)
    over1, proj1 = comma(inc, 1)
    assert len(over0.objects) == 1
    assert len(over1.objects) == 1
    verify_category(over0)
    verify_functor(proj0)


def test_enumerate_functors_counts():
    arrow = chain_category(1)
    funs = enumerate_functors(arrow, arrow)
    assert len(funs) == 3
    for f in funs:
        verify_functor(f)
    to_terminal = enumerate_functors(arrow, terminal_category())
    assert len(to_terminal) == 1


def test_functor_composition_identity():
    arrow = chain_category(1)
    for f in enumerate_functors(arrow, arrow):
        idc = identity_functor(arrow)
        assert compose_functors(f, idc).on_objects == f.on_objects
        assert compose_functors(idc, f).on_morphisms == f.on_morphisms


def test_adjunction_initial_object():
    # picking the initial object is left adjoint to the unique functor
    arrow = chain_category(1)
    pt = terminal_category()
    left = FinFunctor(pt, arrow, {"*": 0}, {("id", "*"): (0, 0)})
    right = FinFunctor(arrow, pt, {0: "*", 1: "*"},
                       {m: ("id", "*") for m in arrow.morphisms})
    unit = {"*": ("id", "*")}
    counit = {0: (0, 0), 1: (0, 1)}
    report = check_adjunction(AdjunctionData(left, right, unit, counit))
    assert report.ok


def test_adjunction_detects_failure():
    arrow = chain_category(1)
    pt = terminal_category()
    left = FinFunctor(pt, arrow, {"*": 1}, {("id", "*"): (1, 1)})
    right = FinFunctor(arrow, pt, {0: "*", 1: "*"},
                       {m: ("id", "*") for m in arrow.morphisms})
    unit = {"*": ("id", "*")}
    counit = {0: (1, 1), 1: (1, 1)}
    report = check_adjunction(AdjunctionData(left, right, unit, counit))
    assert not report.ok


@given(st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=24, deadline=None)
def test_product_projections_commute(n, m):
    a, b = chain_category(n), chain_category(m)
    p = product(a, b)
    for (f, g) in p.morphisms:
        assert a.src[f] == p.src[(f, g)][0]
        assert b.dst[g] == p.dst[(f, g)][1]
