"""Finite categories as total composition tables.

Objects and morphisms are identified by opaque hashable labels: strings,
ints, or nested tuples of these.  Constructions synthesize tuple labels so
that structural bijections (products, twists) stay computable; the JSON
layer turns tuples into arrays and back without loss.

Composition is stored as a total table over composable pairs, in
diagrammatic reading: ``compose(g, f)`` is "f then g" and requires
``dst(f) == src(g)``.  All validation is exhaustive; nothing is assumed
about the input beyond what has been checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadComposite,
    BadIdentity,
    MalformedInput,
    MissingComposite,
    NonAssociative,
)


class FinCategory:
    def __init__(self, objects, morphisms, src, dst, identity, comp):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.src = dict(src)
        self.dst = dict(dst)
        self.identity = dict(identity)
        self.comp = dict(comp)
        self._hom = None
        self._iso = None

    def compose(self, g, f):
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise MissingComposite(g, f) from None

    def hom(self, x, y):
        """Tuple of morphisms x -> y, in declaration order."""
        if self._hom is None:
            table = {}
            for m in self.morphisms:
                table.setdefault((self.src[m], self.dst[m]), []).append(m)
            self._hom = {k: tuple(v) for k, v in table.items()}
        return self._hom.get((x, y), ())

    def is_identity(self, m):
        return self.identity.get(self.src[m]) == m and self.src[m] == self.dst[m]

    def is_iso(self, m):
        """Two-sided invertibility, decided by table scan (cached)."""
        if self._iso is None:
            self._iso = {}
            for f in self.morphisms:
                x, y = self.src[f], self.dst[f]
                ok = False
                for g in self.hom(y, x):
                    if (
                        self.comp.get((g, f)) == self.identity[x]
                        and self.comp.get((f, g)) == self.identity[y]
                    ):
                        ok = True
                        break
                self._iso[f] = ok
        return self._iso[m]

    def composable_pairs(self):
        for g in self.morphisms:
            for f in self.morphisms:
                if self.dst[f] == self.src[g]:
                    yield g, f

    def __repr__(self):
        return (
            f"FinCategory({len(self.objects)} objects, "
            f"{len(self.morphisms)} morphisms)"
        )


def verify_category(cat):
    """Exhaustively check the category axioms on an assembled instance.

    Raises BadIdentity / MissingComposite / BadComposite / NonAssociative
    with a concrete witness.  Returns the instance unchanged on success.
    """
    objset = set(cat.objects)
    morset = set(cat.morphisms)
    if len(objset) != len(cat.objects):
        raise MalformedInput("duplicate object identifiers")
    if len(morset) != len(cat.morphisms):
        raise MalformedInput("duplicate morphism identifiers")
    for m in cat.morphisms:
        if cat.src.get(m) not in objset or cat.dst.get(m) not in objset:
            raise MalformedInput(f"morphism {m!r} has undeclared endpoints")
    for x in cat.objects:
        i = cat.identity.get(x)
        if i not in morset:
            raise BadIdentity(x, i, "identity is not a declared morphism")
        if cat.src[i] != x or cat.dst[i] != x:
            raise BadIdentity(x, i, "identity endpoints differ from its object")
    for (g, f), gf in cat.comp.items():
        if g not in morset or f not in morset:
            raise MalformedInput(f"composite pair ({g!r}, {f!r}) names unknown morphisms")
        if cat.dst[f] != cat.src[g]:
            raise BadComposite(g, f, gf, "pair is not composable")
        if gf not in morset:
            raise BadComposite(g, f, gf, "result is not a declared morphism")
        if cat.src[gf] != cat.src[f] or cat.dst[gf] != cat.dst[g]:
            raise BadComposite(g, f, gf, "result has wrong endpoints")
    for g in cat.morphisms:
        for f in cat.morphisms:
            if cat.dst[f] == cat.src[g] and (g, f) not in cat.comp:
                raise MissingComposite(g, f)
    for m in cat.morphisms:
        i_src = cat.identity[cat.src[m]]
        i_dst = cat.identity[cat.dst[m]]
        if cat.comp[(m, i_src)] != m:
            raise BadIdentity(cat.src[m], m, "right unit law fails")
        if cat.comp[(i_dst, m)] != m:
            raise BadIdentity(cat.dst[m], m, "left unit law fails")
    for h in cat.morphisms:
        for g in cat.morphisms:
            if cat.dst[g] != cat.src[h]:
                continue
            hg = cat.comp[(h, g)]
            for f in cat.morphisms:
                if cat.dst[f] != cat.src[g]:
                    continue
                left = cat.comp[(hg, f)]
                right = cat.comp[(h, cat.comp[(g, f)])]
                if left != right:
                    raise NonAssociative(h, g, f, left, right)
    return cat


def validate_category(raw):
    """Parse a raw description (dict-like) and verify every axiom.

    Expected keys: objects, morphisms (list of {id, src, dst}),
    identities (list of [obj, mor] pairs or mapping), compose (list of
    [g, f, gf] triples).
    """
    if not isinstance(raw, dict):
        raise MalformedInput("category description must be a mapping")
    try:
        objects = list(raw["objects"])
        mor_entries = list(raw["morphisms"])
    except KeyError as e:
        raise MalformedInput(f"missing field {e}") from None
    morphisms, src, dst = [], {}, {}
    for entry in mor_entries:
        try:
            m, s, d = entry["id"], entry["src"], entry["dst"]
        except (TypeError, KeyError):
            raise MalformedInput(f"bad morphism entry {entry!r}") from None
        morphisms.append(m)
        src[m] = s
        dst[m] = d
    ids_raw = raw.get("identities", {})
    pairs = ids_raw.items() if isinstance(ids_raw, dict) else ids_raw
    identity = {}
    for x, i in pairs:
        identity[x] = i
    comp = {}
    for triple in raw.get("compose", []):
        g, f, gf = triple
        if (g, f) in comp and comp[(g, f)] != gf:
            raise BadComposite(g, f, gf, "conflicting table entries")
        comp[(g, f)] = gf
    return verify_category(FinCategory(objects, morphisms, src, dst, identity, comp))


def build_category(objects, hom_elems, compose_fn, identity_fn):
    """Assemble a FinCategory from callables.

    hom_elems(x, y) yields morphism labels, compose_fn(g, f) returns the
    composite label, identity_fn(x) the identity label.  Deterministic as
    long as the callables are.
    """
    objects = tuple(objects)
    morphisms, src, dst = [], {}, {}
    for x in objects:
        for y in objects:
            for m in hom_elems(x, y):
                morphisms.append(m)
                src[m] = x
                dst[m] = y
    identity = {x: identity_fn(x) for x in objects}
    comp = {}
    for g in morphisms:
        for f in morphisms:
            if dst[f] == src[g]:
                comp[(g, f)] = compose_fn(g, f)
    return FinCategory(objects, morphisms, src, dst, identity, comp)


def terminal_category():
    return FinCategory(("*",), (("id", "*"),), {("id", "*"): "*"},
                       {("id", "*"): "*"}, {"*": ("id", "*")},
                       {(("id", "*"), ("id", "*")): ("id", "*")})


def chain_category(n):
    """The poset 0 -> 1 -> ... -> n as a category with one arrow per i <= j."""
    objects = tuple(range(n + 1))
    morphisms, src, dst = [], {}, {}
    for i in objects:
        for j in objects:
            if i <= j:
                m = (i, j)
                morphisms.append(m)
                src[m] = i
                dst[m] = j
    identity = {i: (i, i) for i in objects}
    comp = {}
    for g in morphisms:
        for f in morphisms:
            if f[1] == g[0]:
                comp[(g, f)] = (f[0], g[1])
    return FinCategory(objects, morphisms, src, dst, identity, comp)


def opposite(cat):
    src = {m: cat.dst[m] for m in cat.morphisms}
    dst = {m: cat.src[m] for m in cat.morphisms}
    comp = {(f, g): gf for (g, f), gf in cat.comp.items()}
    return FinCategory(cat.objects, cat.morphisms, src, dst, cat.identity, comp)


def product(a, b):
    objects = [(x, y) for x in a.objects for y in b.objects]
    morphisms, src, dst = [], {}, {}
    for m in a.morphisms:
        for n in b.morphisms:
            p = (m, n)
            morphisms.append(p)
            src[p] = (a.src[m], b.src[n])
            dst[p] = (a.dst[m], b.dst[n])
    identity = {(x, y): (a.identity[x], b.identity[y]) for x in a.objects for y in b.objects}
    comp = {}
    for (g1, f1), c1 in a.comp.items():
        for (g2, f2), c2 in b.comp.items():
            comp[((g1, g2), (f1, f2))] = (c1, c2)
    return FinCategory(objects, morphisms, src, dst, identity, comp)


@dataclass
class FinFunctor:
    dom: FinCategory
    cod: FinCategory
    on_objects: dict
    on_morphisms: dict

    def ob(self, x):
        return self.on_objects[x]

    def mor(self, m):
        return self.on_morphisms[m]


def verify_functor(fun):
    """Exhaustive functoriality check; raises with a witness on failure."""
    dom, cod = fun.dom, fun.cod
    for x in dom.objects:
        if fun.on_objects.get(x) not in set(cod.objects):
            raise MalformedInput(f"functor misses object {x!r}")
    for m in dom.morphisms:
        fm = fun.on_morphisms.get(m)
        if fm is None:
            raise MalformedInput(f"functor misses morphism {m!r}")
        if cod.src[fm] != fun.on_objects[dom.src[m]] or cod.dst[fm] != fun.on_objects[dom.dst[m]]:
            raise BadComposite(m, m, fm, "functor image has wrong endpoints")
    for x in dom.objects:
        if fun.on_morphisms[dom.identity[x]] != cod.identity[fun.on_objects[x]]:
            raise BadIdentity(x, dom.identity[x], "functor does not preserve identity")
    for (g, f), gf in dom.comp.items():
        if cod.comp[(fun.on_morphisms[g], fun.on_morphisms[f])] != fun.on_morphisms[gf]:
            raise NonAssociative(g, f, gf, fun.on_morphisms[gf],
                                 cod.comp[(fun.on_morphisms[g], fun.on_morphisms[f])])
    return fun


def identity_functor(cat):
    return FinFunctor(cat, cat, {x: x for x in cat.objects},
                      {m: m for m in cat.morphisms})


def compose_functors(g, f):
    """g after f."""
    assert f.cod is g.dom or f.cod.morphisms == g.dom.morphisms
    return FinFunctor(
        f.dom, g.cod,
        {x: g.on_objects[f.on_objects[x]] for x in f.dom.objects},
        {m: g.on_morphisms[f.on_morphisms[m]] for m in f.dom.morphisms},
    )


def comma(fun, y):
    """Comma category F/y for a functor F: X -> Y and an object y of Y.

    Objects are pairs (x, a) with a: F(x) -> y; morphisms (x, a) -> (x', a')
    are triples carrying f: x -> x' with a = a' . F(f).
    """
    X, Y = fun.dom, fun.cod
    objects = []
    for x in X.objects:
        for a in Y.morphisms:
            if Y.src[a] == fun.on_objects[x] and Y.dst[a] == y:
                objects.append((x, a))
    objset = set(objects)
    morphisms, src, dst = [], {}, {}
    for (x, a) in objects:
        for f in X.morphisms:
            if X.src[f] != x:
                continue
            for (x2, a2) in objects:
                if x2 != X.dst[f]:
                    continue
                if Y.comp[(a2, fun.on_morphisms[f])] == a:
                    m = ((x, a), f, (x2, a2))
                    morphisms.append(m)
                    src[m] = (x, a)
                    dst[m] = (x2, a2)
    identity = {}
    for (x, a) in objects:
        identity[(x, a)] = ((x, a), X.identity[x], (x, a))
    comp = {}
    for g in morphisms:
        for f in morphisms:
            if dst[f] == src[g]:
                comp[(g, f)] = (src[f], X.comp[(g[1], f[1])], dst[g])
    cat = FinCategory(objects, morphisms, src, dst, identity, comp)
    assert objset == set(cat.objects)
    proj = FinFunctor(cat, X, {(x, a): x for (x, a) in objects},
                      {m: m[1] for m in morphisms})
    return cat, proj


def find_initial(cat):
    """First object (in declaration order) with exactly one arrow to every object."""
    for x in cat.objects:
        if all(len(cat.hom(x, z)) == 1 for z in cat.objects):
            return x
    return None


def find_terminal(cat):
    for x in cat.objects:
        if all(len(cat.hom(z, x)) == 1 for z in cat.objects):
            return x
    return None


def is_terminal_object(cat, x):
    return all(len(cat.hom(z, x)) == 1 for z in cat.objects)


def is_initial_object(cat, x):
    return all(len(cat.hom(x, z)) == 1 for z in cat.objects)


def skeleton(cat):
    """Full subcategory on one object per isomorphism class.

    Representatives are the first object of each class in declaration
    order.  Equivalent categories have weakly equivalent nerves, so nerve
    homology may be computed on the skeleton; that is the reason this
    helper exists.
    """
    reps = []
    rep_of = {}
    for x in cat.objects:
        found = None
        for r in reps:
            for m in cat.hom(x, r):
                if cat.is_iso(m):
                    found = r
                    break
            if found is not None:
                break
        if found is None:
            reps.append(x)
            rep_of[x] = x
        else:
            rep_of[x] = found
    return full_subcategory(cat, reps), rep_of


def full_subcategory(cat, objects):
    objects = tuple(objects)
    objset = set(objects)
    morphisms = [m for m in cat.morphisms
                 if cat.src[m] in objset and cat.dst[m] in objset]
    morset = set(morphisms)
    return FinCategory(
        objects, morphisms,
        {m: cat.src[m] for m in morphisms},
        {m: cat.dst[m] for m in morphisms},
        {x: cat.identity[x] for x in objects},
        {(g, f): gf for (g, f), gf in cat.comp.items()
         if g in morset and f in morset},
    )


def twisted_arrow(cat):
    """Twisted arrow category Tw(C).

    Objects are the morphisms of C.  A morphism from f: X -> Y to
    g: Z -> W is a pair (v: Z -> X, u: Y -> W) with g = u . f . v,
    contravariant on the source side.  The second component of the
    returned pair is the projection functor to op(C) x C.
    """
    objects = list(cat.morphisms)
    morphisms, src, dst = [], {}, {}
    for f in objects:
        for v in cat.morphisms:
            if cat.dst[v] != cat.src[f]:
                continue
            fv = cat.comp[(f, v)]
            for u in cat.morphisms:
                if cat.src[u] != cat.dst[f]:
                    continue
                g = cat.comp[(u, fv)]
                m = (f, (v, u), g)
                morphisms.append(m)
                src[m] = f
                dst[m] = g
    identity = {f: (f, (cat.identity[cat.src[f]], cat.identity[cat.dst[f]]), f)
                for f in objects}
    comp = {}
    for g in morphisms:
        for f in morphisms:
            if dst[f] == src[g]:
                v = cat.comp[(f[1][0], g[1][0])]
                u = cat.comp[(g[1][1], f[1][1])]
                comp[(g, f)] = (src[f], (v, u), dst[g])
    tw = FinCategory(objects, morphisms, src, dst, identity, comp)
    base = product(opposite(cat), cat)
    proj = FinFunctor(
        tw, base,
        {f: (cat.src[f], cat.dst[f]) for f in objects},
        {m: (m[1][0], m[1][1]) for m in morphisms},
    )
    return tw, proj


@dataclass
class AdjunctionData:
    left: FinFunctor
    right: FinFunctor
    unit: dict
    counit: dict


@dataclass
class AdjunctionReport:
    unit_failures: list = field(default_factory=list)
    counit_failures: list = field(default_factory=list)
    triangle_left_failures: list = field(default_factory=list)
    triangle_right_failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not (self.unit_failures or self.counit_failures
                    or self.triangle_left_failures or self.triangle_right_failures)


def check_adjunction(data):
    """Check naturality of unit/counit and both triangle identities.

    Returns an AdjunctionReport listing every failing square or triangle;
    the report is empty exactly when the data is an adjunction F -| G.
    """
    F, G = data.left, data.right
    C, D = F.dom, F.cod
    report = AdjunctionReport()
    for x in C.objects:
        eta = data.unit[x]
        if C.src[eta] != x or C.dst[eta] != G.on_objects[F.on_objects[x]]:
            report.unit_failures.append((x, eta, "endpoints"))
    for y in D.objects:
        eps = data.counit[y]
        if D.src[eps] != F.on_objects[G.on_objects[y]] or D.dst[eps] != y:
            report.counit_failures.append((y, eps, "endpoints"))
    if not report.ok:
        return report
    for f in C.morphisms:
        x, x2 = C.src[f], C.dst[f]
        lhs = C.comp[(G.on_morphisms[F.on_morphisms[f]], data.unit[x])]
        rhs = C.comp[(data.unit[x2], f)]
        if lhs != rhs:
            report.unit_failures.append((f, lhs, rhs))
    for g in D.morphisms:
        y, y2 = D.src[g], D.dst[g]
        lhs = D.comp[(g, data.counit[y])]
        rhs = D.comp[(data.counit[y2], F.on_morphisms[G.on_morphisms[g]])]
        if lhs != rhs:
            report.counit_failures.append((g, lhs, rhs))
    for x in C.objects:
        fx = F.on_objects[x]
        composite = D.comp[(data.counit[fx], F.on_morphisms[data.unit[x]])]
        if composite != D.identity[fx]:
            report.triangle_left_failures.append((x, composite))
    for y in D.objects:
        gy = G.on_objects[y]
        composite = C.comp[(G.on_morphisms[data.counit[y]], data.unit[gy])]
        if composite != C.identity[gy]:
            report.triangle_right_failures.append((y, composite))
    return report


def enumerate_functors(dom, cod, ceiling=None):
    """All functors dom -> cod by backtracking, in a deterministic order.

    Objects are assigned in declaration order; as soon as both endpoints
    of a morphism are fixed its image is chosen from the matching hom set
    and every fully assigned composite is checked.  The optional ceiling
    bounds the number of search nodes (raises ExplosionGuard).
    """
    from .errors import ExplosionGuard

    objs = dom.objects
    results = []
    nodes = 0

    mors_by_stage = []
    for k in range(len(objs)):
        placed = set(objs[: k + 1])
        newly = [m for m in dom.morphisms
                 if dom.src[m] in placed and dom.dst[m] in placed
                 and (dom.src[m] == objs[k] or dom.dst[m] == objs[k])]
        mors_by_stage.append(newly)

    def check_new(om, mm, new_m):
        for (g, f), gf in dom.comp.items():
            if new_m not in (g, f, gf):
                continue
            if g in mm and f in mm and gf in mm:
                if cod.comp[(mm[g], mm[f])] != mm[gf]:
                    return False
        return True

    def assign_mors(stage, idx, om, mm):
        nonlocal nodes
        pending = mors_by_stage[stage]
        if idx == len(pending):
            assign_objs(stage + 1, om, mm)
            return
        m = pending[idx]
        x, y = dom.src[m], dom.dst[m]
        if dom.identity.get(x) == m and x == y:
            candidates = (cod.identity[om[x]],)
        else:
            candidates = cod.hom(om[x], om[y])
        for c in candidates:
            nodes += 1
            if ceiling is not None and nodes > ceiling:
                raise ExplosionGuard(ceiling, nodes)
            mm[m] = c
            if check_new(om, mm, m):
                assign_mors(stage, idx + 1, om, mm)
            del mm[m]

    def assign_objs(stage, om, mm):
        nonlocal nodes
        if stage == len(objs):
            results.append(FinFunctor(dom, cod, dict(om), dict(mm)))
            return
        x = objs[stage]
        for c in cod.objects:
            nodes += 1
            if ceiling is not None and nodes > ceiling:
                raise ExplosionGuard(ceiling, nodes)
            om[x] = c
            assign_mors(stage, 0, om, mm)
            del om[x]

    assign_objs(0, {}, {})
    return results
