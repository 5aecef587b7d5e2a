"""Twisted 2-cell categories and the commutative-monoid example factory.

tw2() realizes the twisted 2-cell category of a finite strict 2-category
as the Grothendieck construction of the mapping-category 2-functor on
hom_twist(C)^op x hom_twist(C).  The rest of the module builds the
one-object tower over a commutative monoid A: the delooping b2(A), the
enveloping category of two-sided translations, the translation groupoid
d_cat(A) with its mapping categories, the natural-numbers mapping
category, and the comparison functor pi together with its fiber checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .errors import ExplosionGuard, MalformedInput, NotCommutative
from .fincat import FinCategory, FinFunctor, is_terminal_object
from .groth import CatValuedTwoFunctor, grothendieck, grothendieck_hom
from .twocat import (FinTwoCategory, TwoFunctor, hom_twist, op_two_category,
                     product_two_category)


@dataclass(frozen=True)
class Monoid:
    elements: tuple
    op: dict = field(hash=False)
    unit: object = None

    def mul(self, *xs):
        acc = self.unit
        for x in xs:
            acc = self.op[(acc, x)]
        return acc

    @property
    def is_commutative(self):
        return all(self.op[(a, b)] == self.op[(b, a)]
                   for a in self.elements for b in self.elements)


def verify_monoid(m):
    elems = set(m.elements)
    if len(elems) != len(m.elements) or m.unit not in elems:
        raise MalformedInput("monoid elements must be distinct and contain the unit")
    for a in m.elements:
        for b in m.elements:
            if m.op.get((a, b)) not in elems:
                raise MalformedInput(f"operation not total at {(a, b)!r}")
    for a in m.elements:
        if m.op[(m.unit, a)] != a or m.op[(a, m.unit)] != a:
            raise MalformedInput(f"unit law fails at {a!r}")
    for a in m.elements:
        for b in m.elements:
            for c in m.elements:
                if m.op[(m.op[(a, b)], c)] != m.op[(a, m.op[(b, c)])]:
                    raise MalformedInput(f"not associative at {(a, b, c)!r}")
    return m


def validate_monoid(raw):
    if not isinstance(raw, dict) or "elements" not in raw or "op" not in raw:
        raise MalformedInput("monoid manifest needs elements, op, unit")
    elems = tuple(raw["elements"])
    op_raw = raw["op"]
    if isinstance(op_raw, list):
        op = {(elems[i], elems[j]): op_raw[i][j]
              for i in range(len(elems)) for j in range(len(elems))}
    else:
        op = {(a, b): op_raw[f"{a},{b}"] for a in elems for b in elems}
    unit = raw.get("unit", elems[0] if elems else None)
    return verify_monoid(Monoid(elems, op, unit))


def cyclic_monoid(n):
    """Integers mod n under addition."""
    elems = tuple(range(n))
    op = {(a, b): (a + b) % n for a in elems for b in elems}
    return Monoid(elems, op, 0)


def trivial_monoid():
    return cyclic_monoid(1)


def symmetric_monoid_3():
    """The six permutations of three letters under composition; the
    standard small noncommutative example."""
    from itertools import permutations
    elems = tuple(sorted(permutations(range(3))))
    op = {(p, q): tuple(p[q[i]] for i in range(3)) for p in elems for q in elems}
    return Monoid(elems, op, (0, 1, 2))


def all_commutative_monoids(max_size):
    """All commutative monoids with at most max_size elements, up to
    isomorphism, with the unit always element 0.  Brute force over
    symmetric tables, then canonical-form deduplication over
    relabelings fixing the unit."""
    from itertools import permutations
    out = []
    for n in range(1, max_size + 1):
        elems = tuple(range(n))
        free = [(i, j) for i in range(1, n) for j in range(i, n)]
        seen = set()
        for values in iproduct(range(n), repeat=len(free)):
            op = {}
            for a in range(n):
                op[(0, a)] = a
                op[(a, 0)] = a
            for (i, j), v in zip(free, values):
                op[(i, j)] = v
                op[(j, i)] = v
            ok = True
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if op[(op[(a, b)], c)] != op[(a, op[(b, c)])]:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                continue
            canon = None
            for perm in permutations(range(1, n)):
                relab = (0,) + perm
                table = tuple(relab[op[(relab.index(a), relab.index(b))]]
                              for a in range(n) for b in range(n))
                if canon is None or table < canon:
                    canon = table
            if canon in seen:
                continue
            seen.add(canon)
            out.append(Monoid(elems, op, 0))
    return out



def _noncommuting_pair(a):
    for p in a.elements:
        for q in a.elements:
            if a.op[(p, q)] != a.op[(q, p)]:
                return p, q
    return None

def b2(a):
    """One object, one 1-cell, the monoid as 2-cells; commutativity is
    forced by interchange, so refuse anything else."""
    verify_monoid(a)
    if not a.is_commutative:
        raise NotCommutative(*_noncommuting_pair(a))
    hom = FinCategory(
        objects=("id",),
        morphisms=tuple(a.elements),
        src={m: "id" for m in a.elements},
        dst={m: "id" for m in a.elements},
        identity={"id": a.unit},
        comp={(m, n): a.op[(m, n)] for m in a.elements for n in a.elements})
    hcomp_obj = {("id", "id"): "id"}
    hcomp_mor = {(m, n): a.op[(m, n)] for m in a.elements for n in a.elements}
    return FinTwoCategory(
        objects=("*",), hom={("*", "*"): hom}, id1={"*": "id"},
        hcomp_obj={("*", "*", "*"): hcomp_obj},
        hcomp_mor={("*", "*", "*"): hcomp_mor})


def envelope(a):
    """The category of two-sided translation contexts: objects (b, x),
    morphisms labelled by pairs acting on both sides."""
    verify_monoid(a)
    if not a.is_commutative:
        raise NotCommutative(*_noncommuting_pair(a))
    objects = [(b, x) for b in a.elements for x in a.elements]
    morphisms, src, dst = [], {}, {}
    for (b, x) in objects:
        for em in a.elements:
            for ep in a.elements:
                b2_ = a.mul(em, b, ep)
                for x2 in a.elements:
                    if a.mul(em, x2, ep) != x:
                        continue
                    mid = ((b, x), (em, ep), (b2_, x2))
                    morphisms.append(mid)
                    src[mid] = (b, x)
                    dst[mid] = (b2_, x2)
    identity = {(b, x): ((b, x), (a.unit, a.unit), (b, x)) for (b, x) in objects}
    comp = {}
    for m2 in morphisms:
        for m1 in morphisms:
            if m1[2] == m2[0]:
                em = a.op[(m2[1][0], m1[1][0])]
                ep = a.op[(m1[1][1], m2[1][1])]
                comp[(m2, m1)] = (m1[0], (em, ep), m2[2])
    return FinCategory(tuple(objects), tuple(morphisms), src, dst, identity, comp)


def envelope_base(a):
    """The one-object 2-category with the envelope as hom category;
    horizontal composition multiplies contexts componentwise."""
    env = envelope(a)
    id1 = (a.unit, a.unit)
    tab_o, tab_m = {}, {}
    for (b, x) in env.objects:
        for (c, y) in env.objects:
            tab_o[((b, x), (c, y))] = (a.op[(c, b)], a.op[(x, y)])
    for m in env.morphisms:
        for n in env.morphisms:
            em = a.op[(m[1][0], n[1][0])]
            ep = a.op[(m[1][1], n[1][1])]
            tab_m[(m, n)] = (tab_o[(m[0], n[0])], (em, ep), tab_o[(m[2], n[2])])
    return FinTwoCategory(
        objects=("*",), hom={("*", "*"): env}, id1={"*": id1},
        hcomp_obj={("*", "*", "*"): tab_o}, hcomp_mor={("*", "*", "*"): tab_m})


def _discrete_on(elements):
    elems = tuple(elements)
    return FinCategory(
        objects=elems, morphisms=elems,
        src={e: e for e in elems}, dst={e: e for e in elems},
        identity={e: e for e in elems},
        comp={(e, e): e for e in elems})


def d_cat_functor(a):
    """The translation 2-functor on the envelope base: the single object
    goes to the underlying set of A, a context (b, x) acts by two-sided
    multiplication."""
    base = envelope_base(a)
    val = _discrete_on(a.elements)
    env = base.hom[("*", "*")]
    on_one = {("*", "*"): {
        (b, x): FinFunctor(val, val,
                           {e: a.mul(b, e, x) for e in a.elements},
                           {e: a.mul(b, e, x) for e in a.elements})
        for (b, x) in env.objects}}
    on_two = {("*", "*"): {
        m: {e: a.mul(m[0][0], e, m[0][1]) for e in a.elements}
        for m in env.morphisms}}
    return CatValuedTwoFunctor(base, {"*": val}, on_one, on_two)


def d_cat(a):
    """Total 2-category of the translation 2-functor; objects are the
    elements of A."""
    return grothendieck(d_cat_functor(a))


def d_cat_hom(a, e, e2):
    """Mapping category between two monoid elements in d_cat(a): the full
    subcategory of the envelope on contexts (b, x) with b e x = e2."""
    env = envelope(a)
    keep = set(o for o in env.objects if a.mul(o[0], e, o[1]) == e2)
    objects = tuple(o for o in env.objects if o in keep)
    morphisms = tuple(m for m in env.morphisms
                      if m[0] in keep and m[2] in keep)
    mset = set(morphisms)
    return FinCategory(
        objects, morphisms,
        {m: env.src[m] for m in morphisms},
        {m: env.dst[m] for m in morphisms},
        {o: env.identity[o] for o in objects},
        {pair: v for pair, v in env.comp.items()
         if pair[0] in mset and pair[1] in mset})


def d_nat_hom(m, n):
    """Mapping category from m to n over the additive natural numbers:
    objects are offsets b with 0 <= b <= n - m, a morphism b -> b2 is a
    left-translation budget e with 0 <= e <= b2 - b."""
    if m > n:
        return FinCategory((), (), {}, {}, {}, {})
    objects = tuple(range(n - m + 1))
    morphisms, src, dst = [], {}, {}
    for b in objects:
        for b2_ in objects:
            if b2_ < b:
                continue
            for e in range(b2_ - b + 1):
                morphisms.append((b, e, b2_))
                src[(b, e, b2_)] = b
                dst[(b, e, b2_)] = b2_
    identity = {b: (b, 0, b) for b in objects}
    comp = {}
    for m2 in morphisms:
        for m1 in morphisms:
            if m1[2] == m2[0]:
                comp[(m2, m1)] = (m1[0], m1[1] + m2[1], m2[2])
    return FinCategory(objects, tuple(morphisms), src, dst, identity, comp)


def _map_two_functor(tc):
    """The mapping-category 2-functor on hom_twist(tc)^op x hom_twist(tc)."""
    tw = hom_twist(tc).cat
    base = product_two_category(op_two_category(tw), tw)
    value = {(x, y): tw.hom[(x, y)] for (x, y) in base.objects}
    on_one, on_two = {}, {}
    for (x, y) in base.objects:
        for (x2, y2) in base.objects:
            h = base.hom[((x, y), (x2, y2))]
            val, val2 = value[(x, y)], value[(x2, y2)]
            fun_tab, nat_tab = {}, {}
            for (u, v) in h.objects:
                om = {s: tw.hcomp1(x2, y, y2, tw.hcomp1(x2, x, y, u, s), v)
                      for s in val.objects}
                iu = tw.hom[(x2, x)].identity[u]
                iv = tw.hom[(y, y2)].identity[v]
                mm = {m: tw.hcomp2(x2, y, y2, tw.hcomp2(x2, x, y, iu, m), iv)
                      for m in val.morphisms}
                fun_tab[(u, v)] = FinFunctor(val, val2, om, mm)
            for (rho, theta) in h.morphisms:
                nat_tab[(rho, theta)] = {
                    s: tw.hcomp2(x2, y, y2,
                                 tw.hcomp2(x2, x, y, rho, val.identity[s]),
                                 theta)
                    for s in val.objects}
            on_one[((x, y), (x2, y2))] = fun_tab
            on_two[((x, y), (x2, y2))] = nat_tab
    return CatValuedTwoFunctor(base, value, on_one, on_two)


def tw2(tc, ceiling=2_000_000):
    """Twisted 2-cell category of a finite strict 2-category, via the
    Grothendieck construction; objects are ((x, y), sigma) with sigma a
    2-cell of tc from some f: x -> y to some g: x -> y."""
    fv = _map_two_functor(tc)
    cost = 0
    for (x, y) in fv.base.objects:
        for (x2, y2) in fv.base.objects:
            h = fv.base.hom[((x, y), (x2, y2))]
            cost += len(h.morphisms) * max(
                len(fv.value[(x2, y2)].morphisms), 1)
    if cost > ceiling:
        raise ExplosionGuard(ceiling, cost)
    return grothendieck(fv)


def tw2_hom(tc, s, t):
    """One mapping category of tw2(tc) without materializing the whole
    total 2-category; s and t are ((x, y), sigma) object ids."""
    fv = _map_two_functor(tc)
    (xy, sigma), (xy2, sigma2) = s, t
    return grothendieck_hom(fv, xy, sigma, xy2, sigma2)


def tw2_b2_hom(a, e, e2):
    """Mapping category of the twisted 2-cell category of b2(a) between
    the 2-cells e and e2, built directly from two-sided translation
    data: objects (b, c, dm, dp) with dm b e c dp = e2."""
    verify_monoid(a)
    if not a.is_commutative:
        raise NotCommutative(*_noncommuting_pair(a))
    objects = []
    for b in a.elements:
        for c in a.elements:
            for dm in a.elements:
                for dp in a.elements:
                    if a.mul(dm, b, e, c, dp) == e2:
                        objects.append((b, c, dm, dp))
    objset = set(objects)
    morphisms, src, dst = [], {}, {}
    for (b, c, dm, dp) in objects:
        for em in a.elements:
            for ep in a.elements:
                for fm in a.elements:
                    for fp in a.elements:
                        b2_ = a.mul(em, b, ep)
                        c2 = a.mul(fm, c, fp)
                        for dm2 in a.elements:
                            if a.mul(em, dm2, fm) != dm:
                                continue
                            for dp2 in a.elements:
                                if a.mul(ep, dp2, fp) != dp:
                                    continue
                                tgt = (b2_, c2, dm2, dp2)
                                if tgt not in objset:
                                    continue
                                mid = ((b, c, dm, dp), (em, ep, fm, fp), tgt)
                                morphisms.append(mid)
                                src[mid] = (b, c, dm, dp)
                                dst[mid] = tgt
    u = a.unit
    identity = {o: (o, (u, u, u, u), o) for o in objects}
    comp = {}
    for m2 in morphisms:
        for m1 in morphisms:
            if m1[2] == m2[0]:
                lab = (a.op[(m2[1][0], m1[1][0])], a.op[(m1[1][1], m2[1][1])],
                       a.op[(m2[1][2], m1[1][2])], a.op[(m1[1][3], m2[1][3])])
                comp[(m2, m1)] = (m1[0], lab, m2[2])
    return FinCategory(tuple(objects), tuple(morphisms), src, dst, identity, comp)


def pi_functor(a, e, e2):
    """The comparison functor from the twisted mapping category to the
    translation mapping category: (b, c, dm, dp) goes to (b, dm c dp),
    a morphism keeps its outer labels."""
    m_cat = tw2_b2_hom(a, e, e2)
    d_hom = d_cat_hom(a, e, e2)
    on_objects = {(b, c, dm, dp): (b, a.mul(dm, c, dp))
                  for (b, c, dm, dp) in m_cat.objects}
    on_morphisms = {}
    for mor in m_cat.morphisms:
        (b, c, dm, dp), (em, ep, fm, fp), tgt = mor
        on_morphisms[mor] = (on_objects[(b, c, dm, dp)], (em, ep),
                             on_objects[tgt])
    return FinFunctor(m_cat, d_hom, on_objects, on_morphisms)


def pi_fiber(a, x):
    """Fiber of the comparison functor over a context with translate x:
    objects (c, dm, dp) with dm c dp = x, morphisms inner label pairs."""
    objects = [(c, dm, dp) for c in a.elements for dm in a.elements
               for dp in a.elements if a.mul(dm, c, dp) == x]
    objset = set(objects)
    morphisms, src, dst = [], {}, {}
    for (c, dm, dp) in objects:
        for fm in a.elements:
            for fp in a.elements:
                c2 = a.mul(fm, c, fp)
                for (c3, dm2, dp2) in objects:
                    if c3 != c2:
                        continue
                    if a.op[(fp, dp2)] != dp or a.op[(dm2, fm)] != dm:
                        continue
                    mid = ((c, dm, dp), (fm, fp), (c3, dm2, dp2))
                    morphisms.append(mid)
                    src[mid] = (c, dm, dp)
                    dst[mid] = (c3, dm2, dp2)
    u = a.unit
    identity = {o: (o, (u, u), o) for o in objects}
    comp = {}
    for m2 in morphisms:
        for m1 in morphisms:
            if m1[2] == m2[0]:
                lab = (a.op[(m2[1][0], m1[1][0])], a.op[(m1[1][1], m2[1][1])])
                comp[(m2, m1)] = (m1[0], lab, m2[2])
    return FinCategory(tuple(objects), tuple(morphisms), src, dst, identity, comp)


@dataclass
class PiFiberReport:
    source: object
    target: object
    checked: list  # (context object, terminal found)
    failures: list  # context objects whose fiber lacks the expected terminal

    @property
    def ok(self):
        return not self.failures


def pi_fiber_check(a, e, e2):
    """For every context (b, x) in the translation mapping category,
    verify the fiber of the comparison functor has the designated
    terminal object (x, unit, unit)."""
    verify_monoid(a)
    if not a.is_commutative:
        raise NotCommutative(*_noncommuting_pair(a))
    d_hom = d_cat_hom(a, e, e2)
    checked, failures = [], []
    cache = {}
    for (b, x) in d_hom.objects:
        if x not in cache:
            fib = pi_fiber(a, x)
            cache[x] = is_terminal_object(fib, (x, a.unit, a.unit))
        good = cache[x]
        checked.append(((b, x), good))
        if not good:
            failures.append((b, x))
    return PiFiberReport(e, e2, checked, failures)
