"""Dimension-truncated simplicial sets, nerves, 2-nerves, normalized chains.

Simplices are stored explicitly level by level up to a bound, with total
face and degeneracy tables.  The chain complex quotients the degenerate
simplices away; the global sign convention is boundary = sum of
(-1)^i d_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ExplosionGuard, MalformedInput
from .intlinalg import Mat
from .twocat import (
    FinTwoCategory,
    TwoFunctor,
    compose_two_functors,
    oriental,
    oriental_map,
)


@dataclass
class SimplicialSet:
    dim: int
    levels: list  # levels[k] = tuple of simplex ids
    faces: dict  # (k, id) -> tuple of k+1 ids at level k-1, for 1 <= k <= dim
    degeneracies: dict  # (k, id) -> tuple of k+1 ids at level k+1, for k < dim
    thin: frozenset | None = None  # subset of level-2 ids
    _degenerate: list = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._degenerate is None:
            degs = [frozenset()]
            for k in range(1, self.dim + 1):
                degs.append(frozenset(
                    t for s in self.levels[k - 1]
                    for t in self.degeneracies.get((k - 1, s), ())))
            self._degenerate = degs

    def level(self, k):
        return self.levels[k]

    def is_degenerate(self, k, s):
        return s in self._degenerate[k]

    def nondegenerate(self, k):
        return tuple(s for s in self.levels[k] if s not in self._degenerate[k])

    def face(self, k, s, i):
        return self.faces[(k, s)][i]

    def degeneracy(self, k, s, i):
        return self.degeneracies[(k, s)][i]

    def last_vertex(self, k, s):
        for j in range(k, 0, -1):
            s = self.faces[(j, s)][0]
        return s

    def last_edge(self, k, s):
        assert k >= 1
        for j in range(k, 1, -1):
            s = self.faces[(j, s)][0]
        return s

    def __repr__(self):
        counts = ",".join(str(len(lv)) for lv in self.levels)
        return f"SimplicialSet(dim={self.dim}, levels=[{counts}])"


def verify_simplicial_identities(x):
    """Exhaustive check of all face/degeneracy identities stored up to dim."""
    for k in range(1, x.dim + 1):
        prior = set(x.levels[k - 1])
        for s in x.levels[k]:
            fs = x.faces.get((k, s))
            if fs is None or len(fs) != k + 1 or any(f not in prior for f in fs):
                raise MalformedInput(f"bad face tuple for level-{k} simplex {s!r}")
    for k in range(0, x.dim):
        upper = set(x.levels[k + 1])
        for s in x.levels[k]:
            ds = x.degeneracies.get((k, s))
            if ds is None or len(ds) != k + 1 or any(d not in upper for d in ds):
                raise MalformedInput(f"bad degeneracy tuple for level-{k} simplex {s!r}")
    for k in range(2, x.dim + 1):
        for s in x.levels[k]:
            for j in range(1, k + 1):
                for i in range(j):
                    lhs = x.face(k - 1, x.face(k, s, j), i)
                    rhs = x.face(k - 1, x.face(k, s, i), j - 1)
                    if lhs != rhs:
                        raise MalformedInput(
                            f"d_{i} d_{j} != d_{j - 1} d_{i} at level-{k} simplex {s!r}")
    for k in range(0, x.dim - 1):
        for s in x.levels[k]:
            for j in range(k + 1):
                for i in range(j + 1):
                    lhs = x.degeneracy(k + 1, x.degeneracy(k, s, j), i)
                    rhs = x.degeneracy(k + 1, x.degeneracy(k, s, i), j + 1)
                    if lhs != rhs:
                        raise MalformedInput(
                            f"s_{i} s_{j} != s_{j + 1} s_{i} at level-{k} simplex {s!r}")
    for k in range(0, x.dim):
        for s in x.levels[k]:
            for j in range(k + 1):
                sj = x.degeneracy(k, s, j)
                for i in range(k + 2):
                    got = x.face(k + 1, sj, i)
                    if i == j or i == j + 1:
                        want = s
                    elif i < j:
                        want = x.degeneracy(k - 1, x.face(k, s, i), j - 1)
                    else:
                        want = x.degeneracy(k - 1, x.face(k, s, i - 1), j)
                    if got != want:
                        raise MalformedInput(
                            f"d_{i} s_{j} identity fails at level-{k} simplex {s!r}")
    if x.thin is not None and x.dim >= 2:
        for s in x.levels[2]:
            if x.is_degenerate(2, s) and s not in x.thin:
                raise MalformedInput(f"degenerate 2-simplex {s!r} is not thin")
    return x


def nerve(cat, d, ceiling=None):
    """Truncated nerve: level k lists all composable k-chains of morphisms
    (including those passing through identities); level 0 lists objects."""
    levels = [tuple(cat.objects)]
    arrows_from = {}
    for m in cat.morphisms:
        arrows_from.setdefault(cat.src[m], []).append(m)
    total = len(cat.objects)
    for k in range(1, d + 1):
        nxt = []
        if k == 1:
            nxt = [(m,) for m in cat.morphisms]
        else:
            for chain in levels[k - 1]:
                tail = cat.dst[chain[-1]]
                for m in arrows_from.get(tail, ()):
                    nxt.append(chain + (m,))
        total += len(nxt)
        if ceiling is not None and total > ceiling:
            raise ExplosionGuard(ceiling, total)
        levels.append(tuple(nxt))

    faces, degeneracies = {}, {}
    for k in range(1, d + 1):
        for chain in levels[k]:
            fs = []
            for i in range(k + 1):
                if k == 1:
                    fs.append(cat.dst[chain[0]] if i == 0 else cat.src[chain[0]])
                elif i == 0:
                    fs.append(chain[1:])
                elif i == k:
                    fs.append(chain[:-1])
                else:
                    merged = cat.comp[(chain[i], chain[i - 1])]
                    fs.append(chain[:i - 1] + (merged,) + chain[i + 1:])
            faces[(k, chain)] = tuple(fs)
    for k in range(0, d):
        for chain in levels[k]:
            ds = []
            for i in range(k + 1):
                if k == 0:
                    ds.append((cat.identity[chain],))
                else:
                    at = cat.src[chain[0]] if i == 0 else cat.dst[chain[i - 1]]
                    ds.append(chain[:i] + (cat.identity[at],) + chain[i:])
            degeneracies[(k, chain)] = tuple(ds)
    thin = frozenset(levels[2]) if d >= 2 else None
    return SimplicialSet(d, levels, faces, degeneracies, thin)


def coface(i, k):
    """The injection [k-1] -> [k] skipping i, as a value tuple."""
    return tuple(v for v in range(k + 1) if v != i)


def codegeneracy(i, k):
    """The surjection [k+1] -> [k] repeating i, as a value tuple."""
    return tuple(range(i + 1)) + tuple(range(i, k + 1))


def encode_two_functor(fun):
    """Canonical hashable id of a 2-functor out of an oriental-like domain:
    object images in object order, then per ordered pair of objects the
    hom functor's object and morphism images in declaration order."""
    dom = fun.dom
    parts = [tuple(fun.on_objects[x] for x in dom.objects)]
    for x in dom.objects:
        for y in dom.objects:
            g = fun.hom_functors[(x, y)]
            h = dom.hom[(x, y)]
            parts.append(tuple(g.on_objects[o] for o in h.objects))
            parts.append(tuple(g.on_morphisms[m] for m in h.morphisms))
    return tuple(parts)


def _point_two_functor(tc, x):
    from .fincat import FinFunctor

    o0 = oriental(0)
    h = tc.hom[(x, x)]
    idm = h.identity[tc.id1[x]]
    hom_fun = FinFunctor(o0.hom[(0, 0)], h, {(0,): tc.id1[x]},
                         {((0,), (0,)): idm})
    return TwoFunctor(o0, tc, {0: x}, {(0, 0): hom_fun})


def two_nerve(tc, d, ceiling=None):
    """Truncated 2-nerve: level k enumerates the strict 2-functors from the
    k-th oriental; faces and degeneracies precompose with the 2-functors
    induced by cofaces and codegeneracies.  A 2-simplex is thin when its
    hom functor at (0, 2) sends the inclusion 2-cell to an isomorphism."""
    from .twocat import enumerate_two_functors

    funs = [{x: _point_two_functor(tc, x) for x in tc.objects}]
    levels = [tuple(tc.objects)]
    for k in range(1, d + 1):
        table = {}
        for fun in enumerate_two_functors(oriental(k), tc, ceiling):
            table[encode_two_functor(fun)] = fun
        funs.append(table)
        levels.append(tuple(table))

    def resolve(fun, k):
        # id of a composed 2-functor at level k
        return fun.on_objects[0] if k == 0 else encode_two_functor(fun)

    faces, degeneracies = {}, {}
    for k in range(1, d + 1):
        for enc, fun in funs[k].items():
            fs = []
            for i in range(k + 1):
                comp = compose_two_functors(fun, oriental_map(coface(i, k), k - 1, k))
                fid = resolve(comp, k - 1)
                assert fid in funs[k - 1]
                fs.append(fid)
            faces[(k, enc)] = tuple(fs)
    for k in range(0, d):
        for enc, fun in funs[k].items():
            ds = []
            for i in range(k + 1):
                comp = compose_two_functors(fun, oriental_map(codegeneracy(i, k), k + 1, k))
                ds.append(resolve(comp, k + 1))
            degeneracies[(k, enc)] = tuple(ds)

    thin = None
    if d >= 2:
        o2 = oriental(2)
        arrow = (((0, 2), (0, 1, 2)))
        marked = []
        for enc, fun in funs[2].items():
            img = fun.hom_functors[(0, 2)].on_morphisms[arrow]
            hom = tc.hom[(fun.on_objects[0], fun.on_objects[2])]
            if hom.is_iso(img):
                marked.append(enc)
        assert o2.hom[(0, 2)].morphisms  # domain arrow exists
        thin = frozenset(marked)
    return SimplicialSet(d, levels, faces, degeneracies, thin)


@dataclass
class ChainComplex:
    ranks: list  # per degree 0..dim
    boundaries: dict  # k -> Mat of shape ranks[k-1] x ranks[k], 1 <= k <= dim
    bases: list | None = None  # simplex ids indexing each degree

    @property
    def dim(self):
        return len(self.ranks) - 1


def verify_complex(k):
    for deg in range(2, k.dim + 1):
        prod = k.boundaries[deg - 1].mul(k.boundaries[deg])
        if not prod.is_zero():
            raise MalformedInput(f"boundary squared is nonzero in degree {deg}")
    return k


def normalized_chains(x):
    """Chain complex on nondegenerate simplices; faces that land on a
    degenerate simplex contribute zero."""
    bases = [x.nondegenerate(k) for k in range(x.dim + 1)]
    index = [{s: i for i, s in enumerate(b)} for b in bases]
    ranks = [len(b) for b in bases]
    boundaries = {}
    for k in range(1, x.dim + 1):
        m = Mat.zeros(ranks[k - 1], ranks[k])
        for col, s in enumerate(bases[k]):
            for i, f in enumerate(x.faces[(k, s)]):
                row = index[k - 1].get(f)
                if row is not None:
                    m.rows[row][col] += -1 if i % 2 else 1
        boundaries[k] = m
    return verify_complex(ChainComplex(ranks, boundaries, bases))
