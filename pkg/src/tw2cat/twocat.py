"""Strict finite 2-categories with total horizontal composition tables.

A FinTwoCategory stores one hom FinCategory per ordered pair of objects
(1-cells are the hom objects, 2-cells the hom morphisms) plus horizontal
composition in diagrammatic order: hcomp(x,y,z) takes f: x -> y and
g: y -> z to f;g: x -> z.  Interchange is exactly functoriality of the
stored hcomp tables and is checked as such.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadIdentity,
    BoundExceeded,
    ExplosionGuard,
    InterchangeFailure,
    MalformedInput,
)
from .fincat import FinCategory, FinFunctor, product, twisted_arrow, verify_category

DEFAULT_ORIENTAL_BOUND = 7


class FinTwoCategory:
    def __init__(self, objects, hom, id1, hcomp_obj, hcomp_mor):
        self.objects = tuple(objects)
        self.hom = dict(hom)
        self.id1 = dict(id1)
        self.hcomp_obj = dict(hcomp_obj)
        self.hcomp_mor = dict(hcomp_mor)

    def hcomp1(self, x, y, z, f, g):
        return self.hcomp_obj[(x, y, z)][(f, g)]

    def hcomp2(self, x, y, z, m, n):
        return self.hcomp_mor[(x, y, z)][(m, n)]

    def one_cells(self):
        for x in self.objects:
            for y in self.objects:
                for f in self.hom[(x, y)].objects:
                    yield x, y, f

    def two_cells(self):
        for x in self.objects:
            for y in self.objects:
                for m in self.hom[(x, y)].morphisms:
                    yield x, y, m

    def __repr__(self):
        n1 = sum(len(h.objects) for h in self.hom.values())
        n2 = sum(len(h.morphisms) for h in self.hom.values())
        return f"FinTwoCategory({len(self.objects)} objects, {n1} 1-cells, {n2} 2-cells)"


def verify_two_category(tc):
    """Exhaustive check of the strict 2-category axioms.

    Includes interchange, reported as InterchangeFailure with the
    offending quadruple of 2-cells.
    """
    objset = set(tc.objects)
    for x in tc.objects:
        for y in tc.objects:
            if (x, y) not in tc.hom:
                raise MalformedInput(f"missing hom category for {(x, y)!r}")
            verify_category(tc.hom[(x, y)])
    for key in tc.hom:
        if key[0] not in objset or key[1] not in objset:
            raise MalformedInput(f"hom category over undeclared objects {key!r}")
    for x in tc.objects:
        if tc.id1.get(x) not in set(tc.hom[(x, x)].objects):
            raise BadIdentity(x, tc.id1.get(x), "id1 is not a 1-cell x -> x")
    for x in tc.objects:
        for y in tc.objects:
            for z in tc.objects:
                h_xy, h_yz, h_xz = tc.hom[(x, y)], tc.hom[(y, z)], tc.hom[(x, z)]
                tab_o = tc.hcomp_obj.get((x, y, z))
                tab_m = tc.hcomp_mor.get((x, y, z))
                if tab_o is None or tab_m is None:
                    raise MalformedInput(f"missing hcomp table for {(x, y, z)!r}")
                objs_xz = set(h_xz.objects)
                for f in h_xy.objects:
                    for g in h_yz.objects:
                        if tab_o.get((f, g)) not in objs_xz:
                            raise MalformedInput(
                                f"hcomp misses 1-cell pair {(f, g)!r} over {(x, y, z)!r}")
                mors_xz = set(h_xz.morphisms)
                for m in h_xy.morphisms:
                    for n in h_yz.morphisms:
                        p = tab_m.get((m, n))
                        if p not in mors_xz:
                            raise MalformedInput(
                                f"hcomp misses 2-cell pair {(m, n)!r} over {(x, y, z)!r}")
                        if (h_xz.src[p] != tab_o[(h_xy.src[m], h_yz.src[n])]
                                or h_xz.dst[p] != tab_o[(h_xy.dst[m], h_yz.dst[n])]):
                            raise InterchangeFailure((m, n), "hcomp 2-cell has wrong frame")
                # functoriality of hcomp = interchange plus identity preservation
                for f in h_xy.objects:
                    for g in h_yz.objects:
                        lhs = tab_m[(h_xy.identity[f], h_yz.identity[g])]
                        if lhs != h_xz.identity[tab_o[(f, g)]]:
                            raise InterchangeFailure((f, g), "hcomp breaks identity 2-cells")
                for (m2, m1), mv in h_xy.comp.items():
                    for (n2, n1), nv in h_yz.comp.items():
                        lhs = tab_m[(mv, nv)]
                        rhs = h_xz.comp[(tab_m[(m2, n2)], tab_m[(m1, n1)])]
                        if lhs != rhs:
                            raise InterchangeFailure((m2, m1, n2, n1),
                                                     f"{lhs!r} != {rhs!r}")
    for x in tc.objects:
        for y in tc.objects:
            h = tc.hom[(x, y)]
            left = tc.hcomp_obj[(x, x, y)]
            right = tc.hcomp_obj[(x, y, y)]
            for f in h.objects:
                if left[(tc.id1[x], f)] != f:
                    raise BadIdentity(x, f, "id1 is not a left hcomp unit")
                if right[(f, tc.id1[y])] != f:
                    raise BadIdentity(y, f, "id1 is not a right hcomp unit")
            lm = tc.hcomp_mor[(x, x, y)]
            rm = tc.hcomp_mor[(x, y, y)]
            idm_x = tc.hom[(x, x)].identity[tc.id1[x]]
            idm_y = tc.hom[(y, y)].identity[tc.id1[y]]
            for m in h.morphisms:
                if lm[(idm_x, m)] != m or rm[(m, idm_y)] != m:
                    raise BadIdentity(x, m, "id 2-cell of id1 is not an hcomp unit")
    for w in tc.objects:
        for x in tc.objects:
            for y in tc.objects:
                for z in tc.objects:
                    t_wxy = tc.hcomp_obj[(w, x, y)]
                    t_wyz = tc.hcomp_obj[(w, y, z)]
                    t_xyz = tc.hcomp_obj[(x, y, z)]
                    t_wxz = tc.hcomp_obj[(w, x, z)]
                    for f in tc.hom[(w, x)].objects:
                        for g in tc.hom[(x, y)].objects:
                            fg = t_wxy[(f, g)]
                            for h in tc.hom[(y, z)].objects:
                                if t_wyz[(fg, h)] != t_wxz[(f, t_xyz[(g, h)])]:
                                    raise InterchangeFailure(
                                        (f, g, h), "hcomp not associative on 1-cells")
                    m_wxy = tc.hcomp_mor[(w, x, y)]
                    m_wyz = tc.hcomp_mor[(w, y, z)]
                    m_xyz = tc.hcomp_mor[(x, y, z)]
                    m_wxz = tc.hcomp_mor[(w, x, z)]
                    for m in tc.hom[(w, x)].morphisms:
                        for n in tc.hom[(x, y)].morphisms:
                            mn = m_wxy[(m, n)]
                            for p in tc.hom[(y, z)].morphisms:
                                if m_wyz[(mn, p)] != m_wxz[(m, m_xyz[(n, p)])]:
                                    raise InterchangeFailure(
                                        (m, n, p), "hcomp not associative on 2-cells")
    return tc


def validate_two_category(raw):
    """Parse a raw two-category description and verify every axiom."""
    from .fincat import validate_category

    if not isinstance(raw, dict):
        raise MalformedInput("two-category description must be a mapping")
    objects = list(raw.get("objects", []))
    hom = {}
    for entry in raw.get("hom", []):
        key = (entry["src"], entry["dst"])
        hom[key] = validate_category(entry["category"])
    id1_raw = raw.get("id1", {})
    pairs = id1_raw.items() if isinstance(id1_raw, dict) else id1_raw
    id1 = {x: f for x, f in pairs}
    hcomp_obj, hcomp_mor = {}, {}
    for entry in raw.get("hcomp", []):
        triple = tuple(entry["triple"])
        hcomp_obj[triple] = {(f, g): h for f, g, h in entry["objects"]}
        hcomp_mor[triple] = {(m, n): p for m, n, p in entry["morphisms"]}
    return verify_two_category(FinTwoCategory(objects, hom, id1, hcomp_obj, hcomp_mor))


def discrete_category(labels):
    """Category with only identity morphisms; each identity reuses its
    object's label (object and morphism namespaces never mix)."""
    labels = tuple(labels)
    return FinCategory(
        labels, labels,
        {x: x for x in labels}, {x: x for x in labels},
        {x: x for x in labels},
        {(x, x): x for x in labels},
    )


def from_one_category(cat):
    """View a category as a 2-category with only identity 2-cells."""
    objects = cat.objects
    hom = {}
    for x in objects:
        for y in objects:
            hom[(x, y)] = discrete_category(cat.hom(x, y))
    id1 = {x: cat.identity[x] for x in objects}
    hcomp_obj, hcomp_mor = {}, {}
    for x in objects:
        for y in objects:
            for z in objects:
                tab = {}
                for f in cat.hom(x, y):
                    for g in cat.hom(y, z):
                        tab[(f, g)] = cat.comp[(g, f)]
                hcomp_obj[(x, y, z)] = tab
                hcomp_mor[(x, y, z)] = dict(tab)
    return FinTwoCategory(objects, hom, id1, hcomp_obj, hcomp_mor)


def terminal_two_category():
    from .fincat import terminal_category

    one = from_one_category(terminal_category())
    return one


def _interval_subsets(i, j):
    """Subsets of {i..j} containing both endpoints, in binary order."""
    if i > j:
        return []
    if i == j:
        return [(i,)]
    interior = list(range(i + 1, j))
    out = []
    for mask in range(1 << len(interior)):
        mid = tuple(interior[b] for b in range(len(interior)) if mask >> b & 1)
        out.append((i,) + mid + (j,))
    return out


def _poset_of_subsets(elems):
    """Category of a family of int tuples ordered by containment."""
    objects = list(elems)
    morphisms, src, dst = [], {}, {}
    sets = {s: frozenset(s) for s in objects}
    for s in objects:
        for t in objects:
            if sets[s] <= sets[t]:
                m = (s, t)
                morphisms.append(m)
                src[m] = s
                dst[m] = t
    identity = {s: (s, s) for s in objects}
    comp = {}
    for g in morphisms:
        for f in morphisms:
            if f[1] == g[0]:
                comp[(g, f)] = (f[0], g[1])
    return FinCategory(objects, morphisms, src, dst, identity, comp)


_oriental_cache = {}


def oriental(n, bound=DEFAULT_ORIENTAL_BOUND):
    """The n-th oriental as a strict 2-category.

    Objects 0..n; the hom from i to j is the poset of subsets of {0..n}
    with minimum i and maximum j, ordered by inclusion; horizontal
    composition takes unions.  Instances are cached; callers must not
    mutate them.
    """
    if n > bound:
        raise BoundExceeded(n, bound, "oriental dimension")
    if n in _oriental_cache:
        return _oriental_cache[n]
    objects = tuple(range(n + 1))
    hom = {}
    for i in objects:
        for j in objects:
            hom[(i, j)] = _poset_of_subsets(_interval_subsets(i, j))
    id1 = {i: (i,) for i in objects}
    hcomp_obj, hcomp_mor = {}, {}
    for i in objects:
        for j in objects:
            for k in objects:
                tab_o, tab_m = {}, {}
                for s in hom[(i, j)].objects:
                    for t in hom[(j, k)].objects:
                        tab_o[(s, t)] = tuple(sorted(set(s) | set(t)))
                for m in hom[(i, j)].morphisms:
                    for p in hom[(j, k)].morphisms:
                        lo = tuple(sorted(set(m[0]) | set(p[0])))
                        hi = tuple(sorted(set(m[1]) | set(p[1])))
                        tab_m[(m, p)] = (lo, hi)
                hcomp_obj[(i, j, k)] = tab_o
                hcomp_mor[(i, j, k)] = tab_m
    _oriental_cache[n] = FinTwoCategory(objects, hom, id1, hcomp_obj, hcomp_mor)
    return _oriental_cache[n]


@dataclass
class TwoFunctor:
    dom: FinTwoCategory
    cod: FinTwoCategory
    on_objects: dict
    hom_functors: dict  # (x, y) -> FinFunctor hom(x,y) -> hom(Fx,Fy)

    def ob(self, x):
        return self.on_objects[x]

    def one(self, x, y, f):
        return self.hom_functors[(x, y)].on_objects[f]

    def two(self, x, y, m):
        return self.hom_functors[(x, y)].on_morphisms[m]


def verify_two_functor(fun):
    from .fincat import verify_functor

    A, B = fun.dom, fun.cod
    for x in A.objects:
        if fun.on_objects.get(x) not in set(B.objects):
            raise MalformedInput(f"2-functor misses object {x!r}")
    for x in A.objects:
        for y in A.objects:
            g = fun.hom_functors.get((x, y))
            if g is None:
                raise MalformedInput(f"2-functor misses hom functor at {(x, y)!r}")
            if g.dom is not A.hom[(x, y)] and g.dom.morphisms != A.hom[(x, y)].morphisms:
                raise MalformedInput(f"hom functor at {(x, y)!r} has wrong domain")
            verify_functor(g)
    for x in A.objects:
        fx = fun.on_objects[x]
        if fun.one(x, x, A.id1[x]) != B.id1[fx]:
            raise BadIdentity(x, A.id1[x], "2-functor does not preserve id1")
    for x in A.objects:
        for y in A.objects:
            for z in A.objects:
                fx, fy, fz = (fun.on_objects[x], fun.on_objects[y], fun.on_objects[z])
                for f in A.hom[(x, y)].objects:
                    for g in A.hom[(y, z)].objects:
                        lhs = fun.one(x, z, A.hcomp1(x, y, z, f, g))
                        rhs = B.hcomp1(fx, fy, fz, fun.one(x, y, f), fun.one(y, z, g))
                        if lhs != rhs:
                            raise InterchangeFailure((f, g), "hcomp of 1-cells not preserved")
                for m in A.hom[(x, y)].morphisms:
                    for n in A.hom[(y, z)].morphisms:
                        lhs = fun.two(x, z, A.hcomp2(x, y, z, m, n))
                        rhs = B.hcomp2(fx, fy, fz, fun.two(x, y, m), fun.two(y, z, n))
                        if lhs != rhs:
                            raise InterchangeFailure((m, n), "hcomp of 2-cells not preserved")
    return fun


class _Budget:
    __slots__ = ("ceiling", "spent")

    def __init__(self, ceiling):
        self.ceiling = ceiling
        self.spent = 0

    def spend(self):
        self.spent += 1
        if self.ceiling is not None and self.spent > self.ceiling:
            raise ExplosionGuard(self.ceiling, self.spent)


def _enumerate_hom_functors(dom, cod, fixed_objects, budget):
    """Functors dom -> cod with some object images pinned, by backtracking."""
    objs = dom.objects
    results = []

    mors_by_stage = []
    for k in range(len(objs)):
        placed = set(objs[: k + 1])
        newly = [m for m in dom.morphisms
                 if dom.src[m] in placed and dom.dst[m] in placed
                 and (dom.src[m] == objs[k] or dom.dst[m] == objs[k])]
        mors_by_stage.append(newly)

    relevant = {}
    for (g, f), gf in dom.comp.items():
        for m in {g, f, gf}:
            relevant.setdefault(m, []).append((g, f, gf))

    def check_new(mm, new_m):
        for (g, f, gf) in relevant.get(new_m, ()):
            if g in mm and f in mm and gf in mm:
                if cod.comp[(mm[g], mm[f])] != mm[gf]:
                    return False
        return True

    def assign_mors(stage, idx, om, mm):
        pending = mors_by_stage[stage]
        if idx == len(pending):
            assign_objs(stage + 1, om, mm)
            return
        m = pending[idx]
        x, y = dom.src[m], dom.dst[m]
        if x == y and dom.identity[x] == m:
            candidates = (cod.identity[om[x]],)
        else:
            candidates = cod.hom(om[x], om[y])
        for c in candidates:
            budget.spend()
            mm[m] = c
            if check_new(mm, m):
                assign_mors(stage, idx + 1, om, mm)
            del mm[m]

    def assign_objs(stage, om, mm):
        if stage == len(objs):
            results.append(FinFunctor(dom, cod, dict(om), dict(mm)))
            return
        x = objs[stage]
        if x in fixed_objects:
            candidates = (fixed_objects[x],)
        else:
            candidates = cod.objects
        for c in candidates:
            budget.spend()
            om[x] = c
            assign_mors(stage, 0, om, mm)
            del om[x]

    assign_objs(0, {}, {})
    return results


def enumerate_two_functors(dom, cod, ceiling=None):
    """All strict 2-functors dom -> cod, deterministically ordered.

    Backtracks over object assignments, then over hom functors pair by
    pair (short spans first), pruning with the horizontal composition
    constraints as soon as all three sides of a triple are assigned.
    The optional ceiling bounds total search nodes via ExplosionGuard.
    """
    budget = _Budget(ceiling)
    objs = dom.objects
    idx = {x: i for i, x in enumerate(objs)}
    pairs = sorted(((x, y) for x in objs for y in objs),
                   key=lambda p: (abs(idx[p[0]] - idx[p[1]]), idx[p[0]], idx[p[1]]))
    triples_by_pair = {}
    for a in objs:
        for b in objs:
            for c in objs:
                key = max(((a, b), (b, c), (a, c)), key=pairs.index)
                triples_by_pair.setdefault(key, []).append((a, b, c))

    results = []

    def hcomp_ok(fun_by_pair, om, triple):
        a, b, c = triple
        gab, gbc, gac = fun_by_pair[(a, b)], fun_by_pair[(b, c)], fun_by_pair[(a, c)]
        fa, fb, fc = om[a], om[b], om[c]
        for f in dom.hom[(a, b)].objects:
            for g in dom.hom[(b, c)].objects:
                lhs = gac.on_objects[dom.hcomp1(a, b, c, f, g)]
                rhs = cod.hcomp1(fa, fb, fc, gab.on_objects[f], gbc.on_objects[g])
                if lhs != rhs:
                    return False
        for m in dom.hom[(a, b)].morphisms:
            for n in dom.hom[(b, c)].morphisms:
                lhs = gac.on_morphisms[dom.hcomp2(a, b, c, m, n)]
                rhs = cod.hcomp2(fa, fb, fc, gab.on_morphisms[m], gbc.on_morphisms[n])
                if lhs != rhs:
                    return False
        return True

    def assign_pair(k, om, fun_by_pair):
        if k == len(pairs):
            results.append(TwoFunctor(dom, cod, dict(om), dict(fun_by_pair)))
            return
        x, y = pairs[k]
        fixed = {}
        if x == y:
            fixed[dom.id1[x]] = cod.id1[om[x]]
        for cand in _enumerate_hom_functors(
                dom.hom[(x, y)], cod.hom[(om[x], om[y])], fixed, budget):
            fun_by_pair[(x, y)] = cand
            ok = all(hcomp_ok(fun_by_pair, om, tr)
                     for tr in triples_by_pair.get((x, y), ())
                     if all(p in fun_by_pair for p in
                            (((tr[0], tr[1])), (tr[1], tr[2]), (tr[0], tr[2]))))
            if ok:
                assign_pair(k + 1, om, fun_by_pair)
            del fun_by_pair[(x, y)]

    def assign_obj(k, om):
        if k == len(objs):
            assign_pair(0, om, {})
            return
        x = objs[k]
        for c in cod.objects:
            budget.spend()
            om[x] = c
            ok = True
            for y in objs[: k + 1]:
                if dom.hom[(x, y)].objects and not cod.hom[(om[x], om[y])].objects:
                    ok = False
                    break
                if dom.hom[(y, x)].objects and not cod.hom[(om[y], om[x])].objects:
                    ok = False
                    break
            if ok:
                assign_obj(k + 1, om)
            del om[x]

    assign_obj(0, {})
    return results


def compose_two_functors(outer, inner):
    """outer after inner; defined whenever inner.cod matches outer.dom
    structurally (object and hom data agree)."""
    from .fincat import compose_functors

    on_objects = {x: outer.on_objects[fx] for x, fx in inner.on_objects.items()}
    hom_functors = {}
    for (x, y), g in inner.hom_functors.items():
        fx, fy = inner.on_objects[x], inner.on_objects[y]
        hom_functors[(x, y)] = compose_functors(outer.hom_functors[(fx, fy)], g)
    return TwoFunctor(inner.dom, outer.cod, on_objects, hom_functors)


def monotone_maps(n, m):
    """All order-preserving maps [n] -> [m] on {0..n}, {0..m}, lex order."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == n + 1:
            out.append(tuple(prefix))
            return
        for v in range(lo, m + 1):
            rec(prefix + [v], v)

    rec([], 0)
    return out


def oriental_map(alpha, n, m, bound=DEFAULT_ORIENTAL_BOUND):
    """The 2-functor between orientals induced by alpha: [n] -> [m]."""
    dom = oriental(n, bound)
    cod = oriental(m, bound)
    on_objects = {i: alpha[i] for i in dom.objects}
    hom_functors = {}
    for i in dom.objects:
        for j in dom.objects:
            h = dom.hom[(i, j)]
            target = cod.hom[(alpha[i], alpha[j])]
            om = {s: tuple(sorted({alpha[e] for e in s})) for s in h.objects}
            mm = {m_: (om[m_[0]], om[m_[1]]) for m_ in h.morphisms}
            hom_functors[(i, j)] = FinFunctor(h, target, om, mm)
    return TwoFunctor(dom, cod, on_objects, hom_functors)


def op_two_category(tc):
    """Reverse 1-cells, keep 2-cell direction (hom categories transpose)."""
    hom = {(x, y): tc.hom[(y, x)] for x in tc.objects for y in tc.objects}
    hcomp_obj, hcomp_mor = {}, {}
    for x in tc.objects:
        for y in tc.objects:
            for z in tc.objects:
                src_tab_o = tc.hcomp_obj[(z, y, x)]
                src_tab_m = tc.hcomp_mor[(z, y, x)]
                hcomp_obj[(x, y, z)] = {
                    (f, g): src_tab_o[(g, f)]
                    for f in hom[(x, y)].objects for g in hom[(y, z)].objects}
                hcomp_mor[(x, y, z)] = {
                    (m, n): src_tab_m[(n, m)]
                    for m in hom[(x, y)].morphisms for n in hom[(y, z)].morphisms}
    return FinTwoCategory(tc.objects, hom, dict(tc.id1), hcomp_obj, hcomp_mor)


def product_two_category(a, b):
    objects = [(x, y) for x in a.objects for y in b.objects]
    hom = {}
    for x in objects:
        for y in objects:
            hom[(x, y)] = product(a.hom[(x[0], y[0])], b.hom[(x[1], y[1])])
    id1 = {x: (a.id1[x[0]], b.id1[x[1]]) for x in objects}
    hcomp_obj, hcomp_mor = {}, {}
    for x in objects:
        for y in objects:
            for z in objects:
                ta_o = a.hcomp_obj[(x[0], y[0], z[0])]
                tb_o = b.hcomp_obj[(x[1], y[1], z[1])]
                ta_m = a.hcomp_mor[(x[0], y[0], z[0])]
                tb_m = b.hcomp_mor[(x[1], y[1], z[1])]
                hcomp_obj[(x, y, z)] = {
                    ((f1, f2), (g1, g2)): (ta_o[(f1, g1)], tb_o[(f2, g2)])
                    for (f1, f2) in hom[(x, y)].objects
                    for (g1, g2) in hom[(y, z)].objects}
                hcomp_mor[(x, y, z)] = {
                    ((m1, m2), (n1, n2)): (ta_m[(m1, n1)], tb_m[(m2, n2)])
                    for (m1, m2) in hom[(x, y)].morphisms
                    for (n1, n2) in hom[(y, z)].morphisms}
    return FinTwoCategory(objects, hom, id1, hcomp_obj, hcomp_mor)


@dataclass
class TwistedHom:
    """A 2-category whose hom categories are twisted arrow categories,
    together with the marked-edge data: a twist edge (v, u) is marked
    when both v and u are isomorphisms in the original hom category."""

    cat: FinTwoCategory
    marked: dict  # (x, y) -> frozenset of marked hom-morphism ids


def hom_twist(tc):
    """Twist every hom category of tc; horizontal composition is induced
    by functoriality of the twisted arrow construction."""
    objects = tc.objects
    hom, marked = {}, {}
    for x in objects:
        for y in objects:
            base = tc.hom[(x, y)]
            tw, _ = twisted_arrow(base)
            hom[(x, y)] = tw
            marked[(x, y)] = frozenset(
                m for m in tw.morphisms
                if base.is_iso(m[1][0]) and base.is_iso(m[1][1]))
    id1 = {}
    for x in objects:
        h = tc.hom[(x, x)]
        id1[x] = h.identity[tc.id1[x]]
    hcomp_obj, hcomp_mor = {}, {}
    for x in objects:
        for y in objects:
            for z in objects:
                tab2 = tc.hcomp_mor[(x, y, z)]
                tab_o, tab_m = {}, {}
                for alpha in hom[(x, y)].objects:
                    for beta in hom[(y, z)].objects:
                        tab_o[(alpha, beta)] = tab2[(alpha, beta)]
                for m in hom[(x, y)].morphisms:
                    for n in hom[(y, z)].morphisms:
                        v = tab2[(m[1][0], n[1][0])]
                        u = tab2[(m[1][1], n[1][1])]
                        tab_m[(m, n)] = (tab2[(m[0], n[0])], (v, u),
                                         tab2[(m[2], n[2])])
                hcomp_obj[(x, y, z)] = tab_o
                hcomp_mor[(x, y, z)] = tab_m
    return TwistedHom(FinTwoCategory(objects, hom, id1, hcomp_obj, hcomp_mor), marked)
