"""Exact homological algebra over the integers.

Finitely generated abelian groups in invariant-factor form, homology of
integer chain complexes via Smith normal form, contractibility
certificates for nerves, derived limits of diagrams of finitely
presented abelian groups over a truncated simplicial set, and the
degree-shift wrapper that turns derived limits into Quillen cohomology
for Eilenberg-MacLane coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IncoherentDiagram, InsufficientBound, MalformedInput
from .fincat import find_initial, find_terminal
from .intlinalg import (
    Mat,
    cokernel_invariants,
    column_space_basis,
    kernel_basis,
    rank,
    smith_normal_form,
    solve,
)
from .simplicial import nerve, normalized_chains

__all__ = [
    "AbGroup",
    "ab_group",
    "Z",
    "ZERO",
    "direct_sum",
    "hom_to_z",
    "ext_to_z",
    "cohomology_from_homology",
    "homology",
    "Presentation",
    "presentation_of",
    "AbDiagram",
    "verify_diagram",
    "constant_diagram",
    "diagram_over_nerve",
    "derived_limit",
    "quillen_cohomology",
    "ContractibilityCertificate",
    "ContractibilityRefutation",
    "contractibility",
    "smith_normal_form",
]


@dataclass(frozen=True)
class AbGroup:
    """Finitely generated abelian group: free rank plus invariant factors
    d1 | d2 | ... with every factor at least 2.  Canonical, so equality
    is structural."""

    rank: int
    torsion: tuple

    @property
    def is_zero(self):
        return self.rank == 0 and not self.torsion

    def pretty(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AbGroup({self.pretty()})"


def _prime_powers(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def ab_group(rank, factors=()):
    """Canonicalize an arbitrary list of cyclic orders into the invariant
    factor chain.  Zero factors add to the rank; unit factors drop."""
    rank = int(rank)
    by_prime = {}
    for f in factors:
        f = abs(int(f))
        if f == 0:
            rank += 1
            continue
        if f == 1:
            continue
        for p, e in _prime_powers(f).items():
            by_prime.setdefault(p, []).append(e)
    slots = max((len(v) for v in by_prime.values()), default=0)
    chain = []
    for i in range(slots):
        d = 1
        for p, exps in by_prime.items():
            exps_sorted = sorted(exps, reverse=True)
            if i < len(exps_sorted):
                d *= p ** exps_sorted[i]
        chain.append(d)
    return AbGroup(rank, tuple(reversed(chain)))


Z = ab_group(1)
ZERO = ab_group(0)


def direct_sum(a, b):
    return ab_group(a.rank + b.rank, a.torsion + b.torsion)


def hom_to_z(a):
    return ab_group(a.rank)


def ext_to_z(a):
    return ab_group(0, a.torsion)


def cohomology_from_homology(h):
    """Universal coefficients: H^k = Hom(H_k, Z) + Ext(H_{k-1}, Z).
    Input and output are lists indexed by degree."""
    out = []
    for k, hk in enumerate(h):
        prev = h[k - 1] if k >= 1 else ZERO
        out.append(direct_sum(hom_to_z(hk), ext_to_z(prev)))
    return out


def homology(complex_):
    """Integral homology in degrees 0..dim-1 (the top degree is not
    certified because boundaries from above it are unknown)."""
    out = []
    for k in range(complex_.dim):
        below = rank(complex_.boundaries[k]) if k >= 1 else 0
        above_m = complex_.boundaries[k + 1]
        sf = smith_normal_form(above_m)
        free = complex_.ranks[k] - below - sf.rank
        out.append(ab_group(free, sf.nontrivial_factors()))
    return out


@dataclass(frozen=True)
class Presentation:
    """Z^gens modulo the column span of rels (a gens x nrels matrix)."""

    gens: int
    rels: Mat

    def group(self):
        free, tors = cokernel_invariants(self.rels)
        return ab_group(free, tors)


def presentation_of(group):
    rels = Mat.zeros(group.rank + len(group.torsion), len(group.torsion))
    for i, d in enumerate(group.torsion):
        rels.rows[group.rank + i][i] = d
    return Presentation(group.rank + len(group.torsion), rels)


@dataclass
class AbDiagram:
    """Diagram of finitely presented abelian groups over the vertices of a
    truncated simplicial set; edge_maps carries one integer matrix per
    nondegenerate 1-simplex (degenerate edges act as the identity)."""

    base: object
    groups: dict  # vertex id -> Presentation
    edge_maps: dict  # 1-simplex id -> Mat, shape gens(target) x gens(source)

    def vertex_group(self, v):
        return self.groups[v]

    def edge_matrix(self, e):
        if self.base.is_degenerate(1, e):
            v = self.base.face(1, e, 0)
            return Mat.eye(self.groups[v].gens)
        return self.edge_maps[e]


def _maps_into_span(m, rels):
    if rels.nc == 0:
        return m.is_zero()
    return solve(rels, m) is not None


def verify_diagram(a):
    """Presentations on every vertex, edge maps on every nondegenerate
    edge carrying relations into relations, and coherence of composites
    against the 2-simplices (exact check modulo target relations)."""
    x = a.base
    for v in x.levels[0]:
        pres = a.groups.get(v)
        if pres is None or pres.rels.nr != pres.gens:
            raise MalformedInput(f"missing or malformed presentation at vertex {v!r}")
    for e in x.nondegenerate(1):
        m = a.edge_maps.get(e)
        src_v, dst_v = x.face(1, e, 1), x.face(1, e, 0)
        gs, gd = a.groups[src_v].gens, a.groups[dst_v].gens
        if m is None or m.nr != gd or m.nc != gs:
            raise MalformedInput(f"missing or misshaped edge map at {e!r}")
        if not _maps_into_span(m.mul(a.groups[src_v].rels), a.groups[dst_v].rels):
            raise IncoherentDiagram(e, "edge map does not preserve relations")
    if x.dim < 2:
        return a
    for t in x.levels[2]:
        e01, e12, e02 = x.face(2, t, 2), x.face(2, t, 0), x.face(2, t, 1)
        m01, m12, m02 = a.edge_matrix(e01), a.edge_matrix(e12), a.edge_matrix(e02)
        last = x.face(1, e12, 0)
        diff = m12.mul(m01)
        if diff.nr != m02.nr or diff.nc != m02.nc:
            raise IncoherentDiagram(t, "edge map shapes disagree around a triangle")
        delta = Mat(diff.nr, diff.nc,
                    [[p - q for p, q in zip(r1, r2)]
                     for r1, r2 in zip(diff.rows, m02.rows)])
        if not _maps_into_span(delta, a.groups[last].rels):
            raise IncoherentDiagram(t, "composite disagrees with the long edge")
    return a


def constant_diagram(x, group):
    """The constant diagram at a fixed abelian group over every vertex."""
    pres = presentation_of(group)
    ident = Mat.eye(pres.gens)
    groups = {v: pres for v in x.levels[0]}
    edge_maps = {e: ident for e in x.nondegenerate(1)}
    return verify_diagram(AbDiagram(x, groups, edge_maps))


def diagram_over_nerve(cat, d, groups, maps):
    """Diagram over nerve(cat, d) from per-object presentations and
    per-morphism matrices (functoriality is re-checked via coherence)."""
    x = nerve(cat, d)
    edge_maps = {}
    for e in x.nondegenerate(1):
        edge_maps[e] = maps[e[0]]
    return verify_diagram(AbDiagram(x, groups, edge_maps)), x


def _fp_cohomology(gens, rels, delta_prev, delta_here, rels_next):
    """Cohomology at a spot C_prev -> C -> C_next of finitely presented
    groups: kernel of the induced map on the quotient, modulo image of
    delta_prev and the relations."""
    if gens == 0:
        return ZERO
    kern = kernel_basis(delta_here.hstack(rels_next))
    proj = Mat(gens, kern.nc, [list(kern.rows[i]) for i in range(gens)])
    basis = column_space_basis(proj)
    denom = delta_prev.hstack(rels)
    if basis.nc == 0:
        return ZERO
    ys = solve(basis, denom)
    assert ys is not None, "cycle lattice does not contain the boundaries"
    free, tors = cokernel_invariants(ys)
    return ab_group(free, tors)


def derived_limit(a):
    """Derived functors of the inverse limit of a diagram over the base,
    in degrees 0..dim-1.

    Cochains in degree k are products of the value at the last vertex
    over nondegenerate k-simplices; the coboundary is the alternating
    face sum with the final face twisted by the last edge map; faces
    landing on degenerate simplices contribute zero.  Cohomology of a
    complex of finitely presented groups is computed exactly by integer
    lattice arithmetic.
    """
    verify_diagram(a)
    x = a.base
    d = x.dim
    bases = [x.nondegenerate(k) for k in range(d + 1)]
    gens_at = []
    offsets = []
    rel_blocks = []
    for k in range(d + 1):
        offs, total = {}, 0
        for s in bases[k]:
            offs[s] = total
            total += a.groups[x.last_vertex(k, s)].gens
        offsets.append(offs)
        gens_at.append(total)
        cols = sum(a.groups[x.last_vertex(k, s)].rels.nc for s in bases[k])
        block = Mat.zeros(total, cols)
        c0 = 0
        for s in bases[k]:
            r = a.groups[x.last_vertex(k, s)].rels
            r0 = offs[s]
            for i in range(r.nr):
                for j in range(r.nc):
                    block.rows[r0 + i][c0 + j] = r.rows[i][j]
            c0 += r.nc
        rel_blocks.append(block)

    deltas = []
    for k in range(d):
        m = Mat.zeros(gens_at[k + 1], gens_at[k])
        index_k = set(bases[k])
        for t in bases[k + 1]:
            row0 = offsets[k + 1][t]
            gt = a.groups[x.last_vertex(k + 1, t)].gens
            for i in range(k + 1):
                f = x.face(k + 1, t, i)
                if f not in index_k:
                    continue
                sign = -1 if i % 2 else 1
                col0 = offsets[k][f]
                for r in range(gt):
                    m.rows[row0 + r][col0 + r] += sign
            f = x.face(k + 1, t, k + 1)
            if f in index_k:
                sign = -1 if (k + 1) % 2 else 1
                col0 = offsets[k][f]
                edge = x.last_edge(k + 1, t)
                em = a.edge_matrix(edge)
                for r in range(em.nr):
                    for c in range(em.nc):
                        m.rows[row0 + r][col0 + c] += sign * em.rows[r][c]
        deltas.append(m)

    out = []
    for k in range(d):
        prev = deltas[k - 1] if k >= 1 else Mat.zeros(gens_at[0], 0)
        out.append(_fp_cohomology(
            gens_at[k], rel_blocks[k], prev, deltas[k], rel_blocks[k + 1]))
    return out


def quillen_cohomology(a, n_lo, n_hi):
    """Quillen cohomology with Eilenberg-MacLane coefficients: the derived
    limit shifted down by two.  Degrees below -2 vanish for this
    coefficient class.  Requires base dimension >= n_hi + 3 so every
    reported degree is certified."""
    d = a.base.dim
    if d < n_hi + 3:
        raise InsufficientBound(n_hi + 3, d, "simplicial dimension bound")
    rlim = derived_limit(a)
    out = {}
    for n in range(n_lo, n_hi + 1):
        out[n] = rlim[n + 2] if n + 2 >= 0 else ZERO
    return out


@dataclass
class ContractibilityCertificate:
    kind: str  # "initial-object" | "terminal-object" | "bounded-homology-evidence"
    detail: object

    @property
    def verdict(self):
        if self.kind == "bounded-homology-evidence":
            return "EVIDENCE"
        return "PROOF"


@dataclass
class ContractibilityRefutation:
    degree: int
    group: AbGroup

    @property
    def verdict(self):
        return "REFUTED"


def contractibility(cat, d):
    """Weak contractibility of the nerve: an initial or terminal object is
    a proof; otherwise vanishing reduced homology up to the bound is
    reported as evidence only, and any nonvanishing degree refutes."""
    x = find_initial(cat)
    if x is not None:
        return ContractibilityCertificate("initial-object", x)
    x = find_terminal(cat)
    if x is not None:
        return ContractibilityCertificate("terminal-object", x)
    h = homology(normalized_chains(nerve(cat, d)))
    if h and h[0] != Z:
        return ContractibilityRefutation(0, h[0])
    for k in range(1, len(h)):
        if not h[k].is_zero:
            return ContractibilityRefutation(k, h[k])
    return ContractibilityCertificate("bounded-homology-evidence", d)
