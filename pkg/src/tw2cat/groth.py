"""The 2-categorical Grothendieck construction and fibration diagnostics.

A CatValuedTwoFunctor assigns a category to every object of a strict
2-category base, a functor to every 1-cell and a natural transformation
to every 2-cell, strictly.  grothendieck() produces the total 2-category
(objects are pairs, 1-cells carry a comparison morphism into the fiber,
2-cells are base 2-cells satisfying the comparison identity) plus the
projection; the diagnostics check the two conditions of being opfibered
in categories: hom functors that are discrete fibrations and existence
of coCartesian lifts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedInput, NotFiberedInSets
from .fincat import FinCategory, FinFunctor, comma, verify_category, verify_functor
from .homology import contractibility
from .twocat import FinTwoCategory, TwoFunctor


@dataclass
class CatValuedTwoFunctor:
    base: FinTwoCategory
    value: dict  # object -> FinCategory
    on_one: dict  # (x, y) -> {1-cell f: FinFunctor value(x) -> value(y)}
    on_two: dict  # (x, y) -> {2-cell m: {object X of value(x): morphism}}

    def fun(self, x, y, f):
        return self.on_one[(x, y)][f]

    def nat(self, x, y, m):
        return self.on_two[(x, y)][m]


def verify_cat_valued(fv):
    """Exhaustive strict functoriality and naturality check."""
    b = fv.base
    for x in b.objects:
        if x not in fv.value:
            raise MalformedInput(f"missing value category at {x!r}")
        verify_category(fv.value[x])
    for x in b.objects:
        for y in b.objects:
            table = fv.on_one.get((x, y))
            if table is None:
                raise MalformedInput(f"missing 1-cell action at {(x, y)!r}")
            for f in b.hom[(x, y)].objects:
                g = table.get(f)
                if g is None:
                    raise MalformedInput(f"missing functor for 1-cell {f!r}")
                if g.dom is not fv.value[x] or g.cod is not fv.value[y]:
                    if (g.dom.morphisms != fv.value[x].morphisms
                            or g.cod.morphisms != fv.value[y].morphisms):
                        raise MalformedInput(f"functor for {f!r} has wrong endpoints")
                verify_functor(g)
    for x in b.objects:
        ident = fv.fun(x, x, b.id1[x])
        for o in fv.value[x].objects:
            if ident.on_objects[o] != o:
                raise MalformedInput(f"id1 at {x!r} does not act as the identity")
        for m in fv.value[x].morphisms:
            if ident.on_morphisms[m] != m:
                raise MalformedInput(f"id1 at {x!r} does not act as the identity")
    for x in b.objects:
        for y in b.objects:
            for z in b.objects:
                for f in b.hom[(x, y)].objects:
                    for g in b.hom[(y, z)].objects:
                        comp = fv.fun(x, z, b.hcomp1(x, y, z, f, g))
                        ff, gf = fv.fun(x, y, f), fv.fun(y, z, g)
                        for o in fv.value[x].objects:
                            if comp.on_objects[o] != gf.on_objects[ff.on_objects[o]]:
                                raise MalformedInput(
                                    f"1-cell action not functorial at {(f, g)!r}")
                        for m in fv.value[x].morphisms:
                            if comp.on_morphisms[m] != gf.on_morphisms[ff.on_morphisms[m]]:
                                raise MalformedInput(
                                    f"1-cell action not functorial at {(f, g)!r}")
    for x in b.objects:
        for y in b.objects:
            h = b.hom[(x, y)]
            val_x, val_y = fv.value[x], fv.value[y]
            for m in h.morphisms:
                eta = fv.nat(x, y, m)
                fm, gm = fv.fun(x, y, h.src[m]), fv.fun(x, y, h.dst[m])
                for o in val_x.objects:
                    c = eta.get(o)
                    if (c is None or val_y.src[c] != fm.on_objects[o]
                            or val_y.dst[c] != gm.on_objects[o]):
                        raise MalformedInput(
                            f"2-cell {m!r} has a bad component at {o!r}")
                for phi in val_x.morphisms:
                    o, o2 = val_x.src[phi], val_x.dst[phi]
                    lhs = val_y.comp[(gm.on_morphisms[phi], eta[o])]
                    rhs = val_y.comp[(eta[o2], fm.on_morphisms[phi])]
                    if lhs != rhs:
                        raise MalformedInput(
                            f"2-cell {m!r} is not natural at {phi!r}")
            for f in h.objects:
                eta = fv.nat(x, y, h.identity[f])
                for o in val_x.objects:
                    if eta[o] != val_y.identity[fv.fun(x, y, f).on_objects[o]]:
                        raise MalformedInput(
                            f"identity 2-cell of {f!r} has non-identity components")
            for (m2, m1), m21 in h.comp.items():
                e1, e2, e21 = fv.nat(x, y, m1), fv.nat(x, y, m2), fv.nat(x, y, m21)
                for o in val_x.objects:
                    if e21[o] != val_y.comp[(e2[o], e1[o])]:
                        raise MalformedInput(
                            f"2-cell action not vertically functorial at {(m2, m1)!r}")
    for x in b.objects:
        for y in b.objects:
            for z in b.objects:
                h1, h2 = b.hom[(x, y)], b.hom[(y, z)]
                for m in h1.morphisms:
                    for n in h2.morphisms:
                        hm = fv.nat(x, z, b.hcomp2(x, y, z, m, n))
                        em, en = fv.nat(x, y, m), fv.nat(y, z, n)
                        g2 = fv.fun(y, z, h2.dst[n])
                        f1 = fv.fun(x, y, h1.src[m])
                        for o in fv.value[x].objects:
                            want = fv.value[z].comp[(
                                g2.on_morphisms[em[o]], en[f1.on_objects[o]])]
                            if hm[o] != want:
                                raise MalformedInput(
                                    f"2-cell action not horizontally functorial at {(m, n)!r}")
    return fv


def grothendieck_hom(fv, a, x_obj, b_obj, y_obj):
    """The hom category of the total 2-category from (a, x_obj) to
    (b_obj, y_obj), built directly: objects (f, comparison), morphisms
    base 2-cells compatible with the comparisons."""
    base = fv.base
    h = base.hom[(a, b_obj)]
    val = fv.value[b_obj]
    arrows_from = {}
    for phi in val.morphisms:
        arrows_from.setdefault(val.src[phi], []).append(phi)
    objects = []
    for f in h.objects:
        fx = fv.fun(a, b_obj, f).on_objects[x_obj]
        for phi in arrows_from.get(fx, ()):
            if val.dst[phi] == y_obj:
                objects.append((f, phi))
    objset = set(objects)
    morphisms, src, dst = [], {}, {}
    for (f, phi) in objects:
        for sigma in h.morphisms:
            if h.src[sigma] != f:
                continue
            g = h.dst[sigma]
            comp_at_x = fv.nat(a, b_obj, sigma)[x_obj]
            for psi in arrows_from.get(val.dst[comp_at_x], ()):
                if val.dst[psi] != y_obj:
                    continue
                if val.comp[(psi, comp_at_x)] == phi and (g, psi) in objset:
                    mid = ((f, phi), sigma, (g, psi))
                    morphisms.append(mid)
                    src[mid] = (f, phi)
                    dst[mid] = (g, psi)
    identity = {(f, phi): ((f, phi), h.identity[f], (f, phi))
                for (f, phi) in objects}
    comp = {}
    for m2 in morphisms:
        for m1 in morphisms:
            if m1[2] == m2[0]:
                comp[(m2, m1)] = (m1[0], h.comp[(m2[1], m1[1])], m2[2])
    return FinCategory(objects, morphisms, src, dst, identity, comp)


def grothendieck(fv):
    """Total 2-category of a Cat-valued 2-functor, with its projection."""
    base = fv.base
    objects = [(a, x) for a in base.objects for x in fv.value[a].objects]
    hom = {}
    for (a, x) in objects:
        for (b, y) in objects:
            hom[((a, x), (b, y))] = grothendieck_hom(fv, a, x, b, y)
    id1 = {}
    for (a, x) in objects:
        id1[(a, x)] = (base.id1[a], fv.value[a].identity[x])
    hcomp_obj, hcomp_mor = {}, {}
    for (a, x) in objects:
        for (b, y) in objects:
            for (c, z) in objects:
                tab_o, tab_m = {}, {}
                val_c = fv.value[c]
                for (f, phi) in hom[((a, x), (b, y))].objects:
                    for (g, psi) in hom[((b, y), (c, z))].objects:
                        gl = fv.fun(b, c, g)
                        tab_o[((f, phi), (g, psi))] = (
                            base.hcomp1(a, b, c, f, g),
                            val_c.comp[(psi, gl.on_morphisms[phi])])
                for m in hom[((a, x), (b, y))].morphisms:
                    for n in hom[((b, y), (c, z))].morphisms:
                        tab_m[(m, n)] = (
                            tab_o[(m[0], n[0])],
                            base.hcomp2(a, b, c, m[1], n[1]),
                            tab_o[(m[2], n[2])])
                hcomp_obj[((a, x), (b, y), (c, z))] = tab_o
                hcomp_mor[((a, x), (b, y), (c, z))] = tab_m
    total = FinTwoCategory(objects, hom, id1, hcomp_obj, hcomp_mor)

    on_objects = {(a, x): a for (a, x) in objects}
    hom_functors = {}
    for (a, x) in objects:
        for (b, y) in objects:
            h = hom[((a, x), (b, y))]
            om = {(f, phi): f for (f, phi) in h.objects}
            mm = {m: m[1] for m in h.morphisms}
            hom_functors[((a, x), (b, y))] = FinFunctor(
                h, base.hom[(a, b)], om, mm)
    proj = TwoFunctor(total, base, on_objects, hom_functors)
    return total, proj


def fiber_category(total, proj, a):
    """The 1-category sitting over an object of the base: objects over a,
    1-cells over id1, 2-cells over the identity 2-cell (these are forced
    to be identities, so the fiber is a 1-category)."""
    base = proj.cod
    objs = [o for o in total.objects if proj.on_objects[o] == a]
    idm = base.hom[(a, a)].identity[base.id1[a]]
    morphisms, src, dst = [], {}, {}
    for o in objs:
        for o2 in objs:
            h = total.hom[(o, o2)]
            pf = proj.hom_functors[(o, o2)]
            for f in h.objects:
                if pf.on_objects[f] != base.id1[a]:
                    continue
                for m in h.morphisms:
                    if pf.on_morphisms[m] == idm and h.src[m] == f and m != h.identity[f]:
                        raise MalformedInput(
                            "fiber has a non-identity 2-cell over the identity")
                morphisms.append((o, f, o2))
                src[(o, f, o2)] = o
                dst[(o, f, o2)] = o2
    identity = {o: (o, total.id1[o], o) for o in objs}
    comp = {}
    for (o, f, o2) in morphisms:
        for (p, g, p2) in morphisms:
            if p2 == o:
                fg = total.hcomp1(p, o, o2, g, f)
                comp[((o, f, o2), (p, g, p2))] = (p, fg, o2)
    return FinCategory(objs, morphisms, src, dst, identity, comp)


def _hom_lift_buckets(proj, x, y):
    h = proj.dom.hom[(x, y)]
    pf = proj.hom_functors[(x, y)]
    buckets = {}
    for m in h.morphisms:
        buckets.setdefault((pf.on_morphisms[m], h.dst[m]), []).append(m)
    return buckets


def discrete_fibration_failures(proj):
    """Condition (i): every hom functor of proj must admit unique lifts of
    base 2-cells with prescribed target (fibered in sets)."""
    failures = []
    d, c = proj.dom, proj.cod
    for x in d.objects:
        for y in d.objects:
            h = d.hom[(x, y)]
            pf = proj.hom_functors[(x, y)]
            ch = c.hom[(proj.on_objects[x], proj.on_objects[y])]
            buckets = _hom_lift_buckets(proj, x, y)
            for o in h.objects:
                for mu in ch.morphisms:
                    if ch.dst[mu] != pf.on_objects[o]:
                        continue
                    lifts = buckets.get((mu, o), ())
                    if len(lifts) != 1:
                        failures.append(((x, y), (o, mu), len(lifts)))
    return failures


def is_cocartesian(proj, x, y, e):
    """Whether the 1-cell e: x -> y of proj.dom is coCartesian, by the
    fiber-bijection criterion (valid in the fibered-in-sets regime,
    which is checked first)."""
    d, c = proj.dom, proj.cod
    for z in d.objects:
        for pair in ((y, z), (x, z)):
            h = d.hom[pair]
            pf = proj.hom_functors[pair]
            ch = c.hom[(proj.on_objects[pair[0]], proj.on_objects[pair[1]])]
            buckets = _hom_lift_buckets(proj, *pair)
            for o in h.objects:
                for mu in ch.morphisms:
                    if ch.dst[mu] == pf.on_objects[o] and len(
                            buckets.get((mu, o), ())) != 1:
                        raise NotFiberedInSets((pair, o, mu),
                                               "hom functor is not fibered in sets")
    px, py = proj.on_objects[x], proj.on_objects[y]
    pe = proj.hom_functors[(x, y)].on_objects[e]
    for z in d.objects:
        pz = proj.on_objects[z]
        h_yz, h_xz = d.hom[(y, z)], d.hom[(x, z)]
        pf_yz = proj.hom_functors[(y, z)]
        pf_xz = proj.hom_functors[(x, z)]
        for g in c.hom[(py, pz)].objects:
            gf = c.hcomp1(px, py, pz, pe, g)
            fiber_g = [h for h in h_yz.objects if pf_yz.on_objects[h] == g]
            fiber_gf = set(h for h in h_xz.objects if pf_xz.on_objects[h] == gf)
            image = [d.hcomp1(x, y, z, e, h) for h in fiber_g]
            if len(set(image)) != len(image) or set(image) != fiber_gf:
                return False
    return True


@dataclass
class OpfibrationReport:
    hom_failures: list  # ((x, y), witness, lift count)
    lift_failures: list  # (object x, base 1-cell f) with no coCartesian lift

    @property
    def ok(self):
        return not self.hom_failures and not self.lift_failures


def is_opfibered(proj):
    """Both conditions of being opfibered in categories, as a report."""
    hom_failures = discrete_fibration_failures(proj)
    lift_failures = []
    if hom_failures:
        return OpfibrationReport(hom_failures, lift_failures)
    d, c = proj.dom, proj.cod
    for x in d.objects:
        px = proj.on_objects[x]
        for cc in c.objects:
            for f in c.hom[(px, cc)].objects:
                found = False
                for y in d.objects:
                    if proj.on_objects[y] != cc:
                        continue
                    pf = proj.hom_functors[(x, y)]
                    for e in d.hom[(x, y)].objects:
                        if pf.on_objects[e] == f and is_cocartesian(proj, x, y, e):
                            found = True
                            break
                    if found:
                        break
                if not found:
                    lift_failures.append((x, f))
    return OpfibrationReport(hom_failures, lift_failures)


@dataclass
class CoinitialityReport:
    per_object: list  # (y, verdict, detail)
    verdict: str  # COINITIAL-CERTIFIED | COINITIAL-EVIDENCE | REFUTED

    @property
    def ok(self):
        return self.verdict != "REFUTED"


def coinitiality_evidence(fun, d):
    """For each object y of the target, certify weak contractibility of
    the comma category over y, and aggregate."""
    rows = []
    worst = "COINITIAL-CERTIFIED"
    for y in fun.cod.objects:
        cat, _ = comma(fun, y)
        cert = contractibility(cat, d)
        rows.append((y, cert.verdict, cert))
        if cert.verdict == "REFUTED":
            worst = "REFUTED"
        elif cert.verdict == "EVIDENCE" and worst != "REFUTED":
            worst = f"COINITIAL-EVIDENCE({d})"
    return CoinitialityReport(rows, worst)
