"""Endpoint-preserving ordinal combinatorics behind the walking adjunction.

Ordinals here carry two flavour bits (x, y): maps must fix the initial
element when x = 1 and the final element when y = 1.  The module builds
the concatenation tensor, gaps and gap duality, gapped / pointed / split
ordinals with the free and cofree splittings and their adjunction checks,
the compatibility graph of a map (a tree whose Euler characteristic is
the load-bearing count), and bounded truncations of the twisted-arrow
comma categories whose components realize that graph.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import BoundExceeded, MalformedInput, ParameterMismatch
from .fincat import FinCategory


@dataclass(frozen=True)
class OrdMap:
    x: int
    y: int
    n: int
    m: int
    values: tuple

    def __call__(self, i):
        return self.values[i]

    @property
    def is_identity(self):
        return self.n == self.m and self.values == tuple(range(self.n))

    @property
    def is_iso(self):
        return self.n == self.m and self.values == tuple(range(self.n))


def _size_ok(x, y, n):
    if n < 0:
        return False
    if n == 0:
        return x == 0 and y == 0
    return True


def verify_ord_map(f):
    if f.x not in (0, 1) or f.y not in (0, 1):
        raise MalformedInput("flavour bits must be 0 or 1")
    if not _size_ok(f.x, f.y, f.n) or not _size_ok(f.x, f.y, f.m):
        raise MalformedInput(f"illegal sizes ({f.n}, {f.m}) for flavour ({f.x}, {f.y})")
    if len(f.values) != f.n:
        raise MalformedInput("value list length differs from source size")
    for i, v in enumerate(f.values):
        if not 0 <= v < f.m:
            raise MalformedInput(f"value {v} out of range at {i}")
        if i and f.values[i - 1] > v:
            raise MalformedInput(f"not monotone at {i}")
    if f.x == 1 and f.n and f.values[0] != 0:
        raise MalformedInput("initial element not preserved")
    if f.y == 1 and f.n and f.values[-1] != f.m - 1:
        raise MalformedInput("final element not preserved")
    return f


def ord_identity(x, y, n):
    return OrdMap(x, y, n, n, tuple(range(n)))


def compose_ord(g, f):
    if (f.x, f.y) != (g.x, g.y):
        raise ParameterMismatch("flavour mismatch in composition")
    if f.m != g.n:
        raise ParameterMismatch("sizes do not line up")
    return OrdMap(f.x, f.y, f.n, g.m, tuple(g.values[v] for v in f.values))


def ordinal_homs(x, y, n, m, bound=32):
    """All flavour-preserving monotone maps, lexicographic by value tuple."""
    if n > bound or m > bound:
        raise BoundExceeded(max(n, m), bound, "ordinal size")
    if not _size_ok(x, y, n) or not _size_ok(x, y, m):
        return ()
    if n == 0:
        return (OrdMap(x, y, 0, m, ()),)
    if m == 0:
        return ()
    out = []
    for vals in combinations_with_replacement(range(m), n):
        if x == 1 and vals[0] != 0:
            continue
        if y == 1 and vals[-1] != m - 1:
            continue
        out.append(OrdMap(x, y, n, m, vals))
    return tuple(out)


def tensor(y_mid, f, g):
    """Concatenation over a shared middle flavour: glue the final element
    of the first block to the initial element of the second when
    y_mid = 1, otherwise just append."""
    if y_mid not in (0, 1):
        raise ParameterMismatch("middle flavour must be 0 or 1")
    if f.y != y_mid or g.x != y_mid:
        raise ParameterMismatch(
            f"middle flavour {y_mid} does not match ({f.y}, {g.x})")
    n = f.n - y_mid + g.n
    m = f.m - y_mid + g.m
    values = list(f.values)
    for j in range(y_mid, g.n):
        values.append(g.values[j] + f.m - y_mid)
    return verify_ord_map(OrdMap(f.x, g.y, n, m, tuple(values)))


@dataclass(frozen=True, order=True)
class Gap:
    """A monotone 0/1 labelling, recorded by its cut: the number of
    elements labelled 0.  The order by inclusion of 0-parts is the order
    by cut."""
    x: int
    y: int
    n: int
    cut: int

    def as_map(self):
        return OrdMap(self.x, self.y, self.n, 2,
                      tuple(0 if i < self.cut else 1 for i in range(self.n)))

    def label(self, i):
        return 0 if i < self.cut else 1


def verify_gap(g):
    if not _size_ok(g.x, g.y, g.n):
        raise MalformedInput("illegal ordinal size")
    if not g.x <= g.cut <= g.n - g.y:
        raise MalformedInput(f"cut {g.cut} outside [{g.x}, {g.n - g.y}]")
    return g


def gaps_of(x, y, n):
    """All gaps in ascending order; there are n + 1 - x - y of them."""
    if not _size_ok(x, y, n):
        return ()
    return tuple(Gap(x, y, n, t) for t in range(x, n - y + 1))


def gap_of_map(f):
    """Recover the Gap from a monotone map into the two-element ordinal."""
    if f.m != 2:
        raise ParameterMismatch("gap maps must land in the two-element ordinal")
    return Gap(f.x, f.y, f.n, sum(1 for v in f.values if v == 0))


def gap_dual(f):
    """Precomposition on gaps, written on gap indices: a map of
    (x, y)-ordinals induces a map of (1-x, 1-y)-ordinals from the gaps
    of the target to the gaps of the source, contravariantly."""
    verify_ord_map(f)
    xs, ys = 1 - f.x, 1 - f.y
    src_gaps = gaps_of(f.x, f.y, f.m)
    values = []
    for g in src_gaps:
        pulled = sum(1 for v in f.values if v < g.cut)
        values.append(pulled - f.x)
    return verify_ord_map(OrdMap(
        xs, ys, f.m + 1 - f.x - f.y, f.n + 1 - f.x - f.y, tuple(values)))


@dataclass(frozen=True)
class SplitOrdinal:
    """An ordinal with a gap whose 1-part is nonempty; the point is the
    first element of the 1-part, so cut doubles as the point index."""
    x: int
    y: int
    n: int
    cut: int

    @property
    def point(self):
        return self.cut

    @property
    def gap(self):
        return Gap(self.x, self.y, self.n, self.cut)


def verify_split(s):
    verify_gap(Gap(s.x, s.y, s.n, s.cut))
    if s.cut > s.n - 1:
        raise MalformedInput("the 1-part of a split ordinal cannot be empty")
    return s


def split_free(n, g):
    """Insert a fresh element at the cut, labelled 1; the inclusion of
    the original ordinal is the unit of the (free splitting, forget)
    adjunction on gapped ordinals."""
    verify_gap(g)
    if g.n != n:
        raise ParameterMismatch("gap does not live on the stated ordinal")
    split = verify_split(SplitOrdinal(g.x, g.y, n + 1, g.cut))
    unit = verify_ord_map(OrdMap(
        g.x, g.y, n, n + 1,
        tuple(i if i < g.cut else i + 1 for i in range(n))))
    return split, unit


def split_cofree(m, j, x=0, y=0):
    """Insert a fresh element right after the point; collapsing it back
    is the counit of the (forget, cofree splitting) adjunction on
    pointed ordinals."""
    if not 0 <= j < m:
        raise MalformedInput(f"point {j} outside the ordinal of size {m}")
    split = verify_split(SplitOrdinal(x, y, m + 1, j + 1))
    counit = verify_ord_map(OrdMap(
        x, y, m + 1, m,
        tuple(k if k <= j else (j if k == j + 1 else k - 1)
              for k in range(m + 1))))
    return split, counit


def gapped_maps(a, b, bound=32):
    """Maps of gapped ordinals: underlying maps whose pulled-back gap is
    the source gap."""
    out = []
    for f in ordinal_homs(a.x, a.y, a.n, b.n, bound):
        if all((f.values[i] < b.cut) == (i < a.cut) for i in range(a.n)):
            out.append(f)
    return tuple(out)


def pointed_maps(x, y, a, b, bound=32):
    """Maps of pointed ordinals (size, point): point goes to point."""
    (n, i), (m, j) = a, b
    return tuple(f for f in ordinal_homs(x, y, n, m, bound)
                 if f.values[i] == j)


def split_maps(a, b, bound=32):
    """Maps of split ordinals: gap-preserving and point-preserving."""
    return tuple(f for f in gapped_maps(a.gap, b.gap, bound)
                 if f.values[a.point] == b.point)


def l_on_gapped_map(h, a, b):
    """Image of a gapped map under the free splitting: the fresh elements
    go to each other, everything else follows h across the insertions."""
    la, _ = split_free(a.n, a)
    lb, _ = split_free(b.n, b)

    def shift(v):
        return v if v < b.cut else v + 1

    values = []
    for p in range(a.n + 1):
        if p < a.cut:
            values.append(shift(h.values[p]))
        elif p == a.cut:
            values.append(b.cut)
        else:
            values.append(shift(h.values[p - 1]))
    return verify_ord_map(OrdMap(h.x, h.y, la.n, lb.n, tuple(values)))


def r_on_pointed_map(h, a, b):
    """Image of a pointed map under the cofree splitting: the fresh
    points correspond; an element of the 1-part whose image is the
    target point must go to the fresh point to keep the gap."""
    (n, i), (m, j) = a, b
    x, y = h.x, h.y
    ra, _ = split_cofree(n, i, x, y)
    rb, _ = split_cofree(m, j, x, y)
    values = []
    for k in range(n + 1):
        if k == i + 1:
            values.append(j + 1)
            continue
        orig = k if k <= i else k - 1
        v = h.values[orig]
        if orig <= i:
            values.append(v)
        else:
            values.append(j + 1 if v == j else v + 1)
    return verify_ord_map(OrdMap(x, y, ra.n, rb.n, tuple(values)))


def split_counit(s):
    """Counit of the free splitting at a split ordinal: collapse the
    freshly inserted element onto the point."""
    ls, _ = split_free(s.n, s.gap)
    values = tuple(p if p < s.cut else (s.cut if p == s.cut else p - 1)
                   for p in range(ls.n))
    return verify_ord_map(OrdMap(s.x, s.y, ls.n, s.n, values))


def split_unit_r(s):
    """Unit of the cofree splitting at a split ordinal: shift the point
    onto the freshly inserted element."""
    rs, _ = split_cofree(s.n, s.point, s.x, s.y)
    values = tuple(k if k < s.point else k + 1 for k in range(s.n))
    return verify_ord_map(OrdMap(s.x, s.y, s.n, rs.n, values))


@dataclass
class AdjunctionSweepReport:
    checked: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def check_split_adjunctions(max_size, bound=32):
    """Pointwise verification of the two splitting adjunctions on all
    inputs up to max_size, for all four flavours: units and counits are
    legal decorated maps, both triangle identities hold, units and
    counits are natural, and homs biject the way an adjunction demands."""
    failures = []
    checked = 0
    for x in (0, 1):
        for y in (0, 1):
            gapped = [g for n in range(max_size + 1) for g in gaps_of(x, y, n)]
            pointed = [(n, j) for n in range(1, max_size + 1) for j in range(n)]
            splits = [SplitOrdinal(x, y, n, t)
                      for n in range(1, max_size + 2)
                      for t in range(x, min(n - y, n - 1) + 1)]
            units = {g: split_free(g.n, g) for g in gapped}
            counits = {p: split_cofree(p[0], p[1], x, y) for p in pointed}

            for g in gapped:
                checked += 1
                s, eta = units[g]
                if eta not in gapped_maps(g, s.gap, bound):
                    failures.append(("free unit not gapped", g))
                tri = compose_ord(split_counit(s), l_on_gapped_map(eta, g, s.gap))
                if not tri.is_identity:
                    failures.append(("free triangle at L", g))
            for s in splits:
                checked += 1
                ls, eta_fs = split_free(s.n, s.gap)
                eps = split_counit(s)
                if eps not in split_maps(ls, s, bound):
                    failures.append(("free counit not split", s))
                if not compose_ord(eps, eta_fs).is_identity:
                    failures.append(("free triangle at forget", s))
            for g in gapped:
                for g2 in gapped:
                    for h in gapped_maps(g, g2, bound):
                        checked += 1
                        lhs = compose_ord(units[g2][1], h)
                        rhs = compose_ord(l_on_gapped_map(h, g, g2), units[g][1])
                        if lhs != rhs:
                            failures.append(("free unit not natural", (g, g2, h)))
            for s in splits:
                for s2 in splits:
                    for k in split_maps(s, s2, bound):
                        checked += 1
                        lhs = compose_ord(k, split_counit(s))
                        rhs = compose_ord(split_counit(s2),
                                          l_on_gapped_map(k, s.gap, s2.gap))
                        if lhs != rhs:
                            failures.append(("free counit not natural", (s, s2, k)))
            for g in gapped:
                s_free, eta = units[g]
                for s in splits:
                    checked += 1
                    lhs = split_maps(s_free, s, bound)
                    rhs = gapped_maps(g, s.gap, bound)
                    transported = [compose_ord(h, eta) for h in lhs]
                    if (sorted(t.values for t in transported)
                            != sorted(r.values for r in rhs)
                            or len(set(t.values for t in transported)) != len(lhs)):
                        failures.append(("free hom bijection", (g, s)))

            for p in pointed:
                checked += 1
                s, eps = counits[p]
                if eps not in pointed_maps(x, y, (s.n, s.point), p, bound):
                    failures.append(("cofree counit not pointed", p))
                tri = compose_ord(r_on_pointed_map(eps, (s.n, s.point), p),
                                  split_unit_r(s))
                if not tri.is_identity:
                    failures.append(("cofree triangle at R", p))
            for s in splits:
                checked += 1
                rs, eps_fs = split_cofree(s.n, s.point, x, y)
                eta = split_unit_r(s)
                if eta not in split_maps(s, rs, bound):
                    failures.append(("cofree unit not split", s))
                if not compose_ord(eps_fs, eta).is_identity:
                    failures.append(("cofree triangle at forget", s))
            for s in splits:
                for s2 in splits:
                    for k in split_maps(s, s2, bound):
                        checked += 1
                        lhs = compose_ord(split_unit_r(s2), k)
                        rhs = compose_ord(
                            r_on_pointed_map(k, (s.n, s.point), (s2.n, s2.point)),
                            split_unit_r(s))
                        if lhs != rhs:
                            failures.append(("cofree unit not natural", (s, s2, k)))
            for p in pointed:
                for p2 in pointed:
                    for h in pointed_maps(x, y, p, p2, bound):
                        checked += 1
                        lhs = compose_ord(h, counits[p][1])
                        rhs = compose_ord(counits[p2][1],
                                          r_on_pointed_map(h, p, p2))
                        if lhs != rhs:
                            failures.append(("cofree counit not natural",
                                             (p, p2, h)))
            for p in pointed:
                s_cof, eps = counits[p]
                for s in splits:
                    checked += 1
                    lhs = split_maps(s, s_cof, bound)
                    rhs = pointed_maps(x, y, (s.n, s.point), p, bound)
                    transported = [compose_ord(eps, h) for h in lhs]
                    if (sorted(t.values for t in transported)
                            != sorted(r.values for r in rhs)
                            or len(set(t.values for t in transported)) != len(lhs)):
                        failures.append(("cofree hom bijection", (p, s)))
    return AdjunctionSweepReport(checked, failures)


def pg_gapped(x, y, n1, n2):
    """Point-gap assembly, gapped flavour: concatenate an (x,0)-ordinal
    with a (0,y)-ordinal; the gap separates the blocks."""
    if not _size_ok(x, 0, n1) or not _size_ok(0, y, n2):
        raise MalformedInput("illegal block sizes")
    return Gap(x, y, n1 + n2, n1)


def pg_gapped_map(f1, f2):
    return tensor(0, f1, f2)


def pg_gapped_inverse(g):
    return g.cut, g.n - g.cut


def pg_gapped_inverse_map(h, a, b):
    """Restrict a gapped map to its 0-block and 1-block."""
    f1 = OrdMap(a.x, 0, a.cut, b.cut, h.values[:a.cut])
    f2 = OrdMap(0, a.y, a.n - a.cut, b.n - b.cut,
                tuple(v - b.cut for v in h.values[a.cut:]))
    return verify_ord_map(f1), verify_ord_map(f2)


def pg_pointed(x, y, n1, n2):
    """Point-gap assembly, pointed flavour: glue an (x,1)-ordinal to a
    (1,y)-ordinal along the endpoint, which becomes the point."""
    if not _size_ok(x, 1, n1) or not _size_ok(1, y, n2):
        raise MalformedInput("illegal block sizes")
    return (n1 + n2 - 1, n1 - 1)


def pg_pointed_map(f1, f2):
    return tensor(1, f1, f2)


def pg_pointed_inverse(n, i):
    return (i + 1, n - i)


def pg_pointed_inverse_map(h, a, b):
    (n, i), (m, j) = a, b
    f1 = OrdMap(h.x, 1, i + 1, j + 1, h.values[:i + 1])
    f2 = OrdMap(1, h.y, n - i, m - j, tuple(v - j for v in h.values[i:]))
    return verify_ord_map(f1), verify_ord_map(f2)


def pg_split(x, y, n1, n2):
    """Point-gap assembly, split flavour: a 0-block, a fresh point, and
    a 1-block starting at that point."""
    if not _size_ok(x, 0, n1) or not _size_ok(1, y, n2):
        raise MalformedInput("illegal block sizes")
    return verify_split(SplitOrdinal(x, y, n1 + n2, n1))


def pg_split_map(f1, f2):
    mid = ord_identity(0, 1, 1)
    return tensor(1, tensor(0, f1, mid), f2)


def pg_split_inverse(s):
    return (s.cut, s.n - s.cut)


def pg_split_inverse_map(h, a, b):
    f1 = OrdMap(a.x, 0, a.cut, b.cut, h.values[:a.cut])
    f2 = OrdMap(1, a.y, a.n - a.cut, b.n - b.cut,
                tuple(v - b.cut for v in h.values[a.cut:]))
    return verify_ord_map(f1), verify_ord_map(f2)


@dataclass
class CompatGraph:
    x: int
    y: int
    n: int
    m: int
    sigma: OrdMap
    gaps: tuple
    edges: tuple  # (gap cut, target element)

    @property
    def n_vertices(self):
        return len(self.gaps) + self.m

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def connected(self):
        if self.n_vertices == 0:
            return True
        verts = [("g", g.cut) for g in self.gaps] + [
            ("e", j) for j in range(self.m)]
        adj = {v: [] for v in verts}
        for (t, j) in self.edges:
            adj[("g", t)].append(("e", j))
            adj[("e", j)].append(("g", t))
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    @property
    def is_tree(self):
        return self.connected and self.n_edges == self.n_vertices - 1

    def valency(self, j):
        return sum(1 for (_, jj) in self.edges if jj == j)

    def formula_valency(self, j):
        base = sum(1 for v in self.sigma.values if v == j) + 1
        if self.x == 1 and j == 0:
            base -= 1
        if self.y == 1 and j == self.m - 1:
            base -= 1
        return base


def is_compatible(sigma, g, j):
    """The element j is compatible with the gap g when everything mapped
    strictly below j sits in the 0-part and everything mapped strictly
    above j sits in the 1-part."""
    for i in range(sigma.n):
        if sigma.values[i] < j and g.label(i) != 0:
            return False
        if sigma.values[i] > j and g.label(i) != 1:
            return False
    return True


def compat_graph(sigma):
    verify_ord_map(sigma)
    gaps = gaps_of(sigma.x, sigma.y, sigma.n)
    edges = tuple((g.cut, j) for g in gaps for j in range(sigma.m)
                  if is_compatible(sigma, g, j))
    return CompatGraph(sigma.x, sigma.y, sigma.n, sigma.m, sigma, gaps, edges)


def _dec_objects(kind, x, y, max_size):
    out = []
    for k in range(0, max_size + 1):
        if kind == "gp":
            if not _size_ok(x, y, k):
                continue
            for t in range(x, k - y + 1):
                out.append((kind, k, t))
        elif kind == "pt":
            for i in range(k):
                out.append((kind, k, i))
        elif kind == "spl":
            if k == 0:
                continue
            for t in range(x, min(k - y, k - 1) + 1):
                out.append((kind, k, t))
        else:
            raise MalformedInput(f"unknown decoration {kind!r}")
    return out


def _dec_preserving(kind, f, a, b):
    (_, ka, da), (_, kb, db) = a, b
    if kind == "gp":
        return all((f.values[i] < db) == (i < da) for i in range(ka))
    if kind == "pt":
        return f.values[da] == db
    return (all((f.values[i] < db) == (i < da) for i in range(ka))
            and f.values[da] == db)


def _dec_maps(kind, x, y, a, b, bound):
    return tuple(f for f in ordinal_homs(x, y, a[1], b[1], bound)
                 if _dec_preserving(kind, f, a, b))


class _ComposedPairs(Mapping):
    """Total composition table of a comma truncation, computed on demand:
    composition acts componentwise on the (v, u) labels, so storing the
    table would repeat what the labels already determine."""

    def __init__(self, morphisms, by_src):
        self._all = morphisms
        self._members = frozenset(morphisms)
        self._by_src = by_src

    def __getitem__(self, key):
        try:
            m2, m1 = key
        except (TypeError, ValueError):
            raise KeyError(key) from None
        if (m1 not in self._members or m2 not in self._members
                or m1[2] != m2[0]):
            raise KeyError(key)
        return (m1[0],
                (compose_ord(m1[1][0], m2[1][0]),
                 compose_ord(m2[1][1], m1[1][1])),
                m2[2])

    def __iter__(self):
        for m1 in self._all:
            for m2 in self._by_src.get(m1[2], ()):
                yield (m2, m1)

    def __len__(self):
        return sum(len(self._by_src.get(m1[2], ())) for m1 in self._all)


class CommaCategory(FinCategory):
    """FinCategory whose composition table is a computed mapping rather
    than a materialized dict."""

    def __init__(self, objects, morphisms, src, dst, identity, comp):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.src = dict(src)
        self.dst = dict(dst)
        self.identity = dict(identity)
        self.comp = comp
        self._hom = None
        self._iso = None


def _projection_value(kind, o):
    (a, phi, tau, psi, b) = o
    pulled = sum(1 for v in phi.values if v < a[2]) if kind != "pt" else None
    pointed = psi.values[b[2]] if kind != "gp" else None
    if kind == "gp":
        return pulled
    if kind == "pt":
        return pointed
    return (pulled, pointed)


def comma_truncated(kind, sigma, bound, ceiling=5_000_000):
    """Bounded model of the twisted-arrow comma category over sigma for
    a decorated ordinal flavour: objects are factorizations
    sigma = psi . tau . phi with tau decorated and both decorated
    ordinals of size at most bound; morphisms twist on both sides.
    Returns the category and the projection to the decoration invariant
    (pulled-back gap cut, image point, or the pair).  Morphisms never
    cross projection values, so the search runs per projection bucket;
    the composition table is computed on demand."""
    verify_ord_map(sigma)
    if kind not in ("gp", "pt", "spl"):
        raise MalformedInput(f"unknown decoration {kind!r}")
    if bound < max(sigma.n, sigma.m):
        raise BoundExceeded(max(sigma.n, sigma.m), bound, "truncation bound")
    x, y = sigma.x, sigma.y
    decs = _dec_objects(kind, x, y, bound)
    left = []
    for a in decs:
        for phi in ordinal_homs(x, y, sigma.n, a[1], bound):
            left.append((a, phi))
    right = []
    for b in decs:
        for psi in ordinal_homs(x, y, b[1], sigma.m, bound):
            right.append((b, psi))
    if len(left) * len(right) > ceiling:
        raise BoundExceeded(len(left) * len(right), ceiling, "comma enumeration")
    objects = []
    projection = {}
    buckets = {}
    for (a, phi) in left:
        for (b, psi) in right:
            for tau in _dec_maps(kind, x, y, a, b, bound):
                if compose_ord(psi, compose_ord(tau, phi)) == sigma:
                    o = (a, phi, tau, psi, b)
                    objects.append(o)
                    projection[o] = _projection_value(kind, o)
                    buckets.setdefault(projection[o], []).append(o)
    if sum(len(bk) * len(bk) for bk in buckets.values()) > ceiling:
        raise BoundExceeded(
            sum(len(bk) * len(bk) for bk in buckets.values()), ceiling,
            "comma morphism search")
    vcache, ucache, tvcache = {}, {}, {}
    morphisms, src, dst = [], {}, {}
    for bk in buckets.values():
        for o in bk:
            (a, phi, tau, psi, b) = o
            for o2 in bk:
                (a2, phi2, tau2, psi2, b2) = o2
                vkey = (a2, phi2, a, phi)
                if vkey not in vcache:
                    vcache[vkey] = [v for v in _dec_maps(kind, x, y, a2, a, bound)
                                    if compose_ord(v, phi2) == phi]
                if not vcache[vkey]:
                    continue
                ukey = (b, psi, b2, psi2)
                if ukey not in ucache:
                    ucache[ukey] = [u for u in _dec_maps(kind, x, y, b, b2, bound)
                                    if compose_ord(psi2, u) == psi]
                if not ucache[ukey]:
                    continue
                for v in vcache[vkey]:
                    tvkey = (tau, v)
                    tv = tvcache.get(tvkey)
                    if tv is None:
                        tv = tvcache[tvkey] = compose_ord(tau, v)
                    for u in ucache[ukey]:
                        if compose_ord(u, tv) == tau2:
                            mid = (o, (v, u), o2)
                            morphisms.append(mid)
                            src[mid] = o
                            dst[mid] = o2
    identity = {}
    for o in objects:
        (a, phi, tau, psi, b) = o
        identity[o] = (o, (ord_identity(x, y, a[1]), ord_identity(x, y, b[1])), o)
    by_src = {}
    for mm in morphisms:
        by_src.setdefault(mm[0], []).append(mm)
    morphisms = tuple(morphisms)
    comp = _ComposedPairs(morphisms, by_src)
    cat = CommaCategory(objects, morphisms, src, dst, identity, comp)
    return cat, projection


def gp_designated(sigma, cut):
    """The source ordinal carrying the chosen gap, with the identity as
    the decorated map and sigma itself as the comparison to the target."""
    x, y = sigma.x, sigma.y
    a = ("gp", sigma.n, cut)
    i = ord_identity(x, y, sigma.n)
    return (a, i, i, sigma, a)


def pt_designated(sigma, j):
    """The target ordinal carrying the chosen point, with the identity
    as the decorated map and sigma itself as the comparison from the
    source."""
    x, y = sigma.x, sigma.y
    b = ("pt", sigma.m, j)
    i = ord_identity(x, y, sigma.m)
    return (b, sigma, i, i, b)


def spl_designated(sigma, cut, j):
    """The split factorization attached to a compatible (gap, element)
    pair: freely split the source at the cut, cofreely split the target
    at the element, and connect them by the evident map."""
    x, y = sigma.x, sigma.y
    s_a, unit = split_free(sigma.n, Gap(x, y, sigma.n, cut))
    s_b, counit = split_cofree(sigma.m, j, x, y)
    a = ("spl", s_a.n, s_a.cut)
    b = ("spl", s_b.n, s_b.cut)
    values = []
    for p in range(s_a.n):
        if p == cut:
            values.append(j + 1)
            continue
        i = p if p < cut else p - 1
        v = sigma.values[i]
        if v < j:
            values.append(v)
        elif v > j:
            values.append(v + 1)
        else:
            values.append(j if p < cut else j + 1)
    tau = verify_ord_map(OrdMap(x, y, s_a.n, s_b.n, tuple(values)))
    return (a, unit, tau, counit, b)


def connected_components(cat):
    """Zigzag components of a finite category."""
    parent = {o: o for o in cat.objects}

    def find(o):
        while parent[o] != o:
            parent[o] = parent[parent[o]]
            o = parent[o]
        return o

    for m in cat.morphisms:
        a, b = find(cat.src[m]), find(cat.dst[m])
        if a != b:
            parent[a] = b
    groups = {}
    for o in cat.objects:
        groups.setdefault(find(o), []).append(o)
    return list(groups.values())
