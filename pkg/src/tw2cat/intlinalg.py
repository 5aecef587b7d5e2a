"""Exact integer matrix algebra: Smith normal form and friends.

Everything runs on Python ints, so entries can grow without wrapping;
an optional bit-length policy turns runaway growth into OverflowGuard
instead of a silent slowdown.  Pivoting always picks a smallest nonzero
entry by absolute value, which keeps intermediate entries tame in
practice.

Matrices are dense row-major lists wrapped in Mat so that zero-row and
zero-column shapes stay unambiguous (empty chain groups are routine).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OverflowGuard


@dataclass
class Mat:
    nr: int
    nc: int
    rows: list

    @staticmethod
    def zeros(nr, nc):
        return Mat(nr, nc, [[0] * nc for _ in range(nr)])

    @staticmethod
    def eye(n):
        return Mat(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_rows(rows, nc=None):
        rows = [list(r) for r in rows]
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValueError("ragged matrix")
            got = widths.pop()
            if nc is not None and nc != got:
                raise ValueError("declared width disagrees with rows")
            nc = got
        elif nc is None:
            nc = 0
        return Mat(len(rows), nc, rows)

    def copy(self):
        return Mat(self.nr, self.nc, [row[:] for row in self.rows])

    def mul(self, other):
        if self.nc != other.nr:
            raise ValueError(f"shape mismatch {self.nr}x{self.nc} * {other.nr}x{other.nc}")
        out = Mat.zeros(self.nr, other.nc)
        for i in range(self.nr):
            arow = self.rows[i]
            orow = out.rows[i]
            for k in range(self.nc):
                a = arow[k]
                if a:
                    brow = other.rows[k]
                    for j in range(other.nc):
                        orow[j] += a * brow[j]
        return out

    def transpose(self):
        return Mat(self.nc, self.nr,
                   [[self.rows[i][j] for i in range(self.nr)] for j in range(self.nc)])

    def col(self, j):
        return [self.rows[i][j] for i in range(self.nr)]

    def hstack(self, other):
        if self.nr != other.nr:
            raise ValueError("row counts differ")
        return Mat(self.nr, self.nc + other.nc,
                   [self.rows[i] + other.rows[i] for i in range(self.nr)])

    def submatrix_cols(self, js):
        return Mat(self.nr, len(js), [[row[j] for j in js] for row in self.rows])

    def is_zero(self):
        return all(all(e == 0 for e in row) for row in self.rows)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.nr == other.nr
                and self.nc == other.nc and self.rows == other.rows)


@dataclass
class SmithForm:
    s: Mat
    u: Mat
    v: Mat
    uinv: Mat
    vinv: Mat

    @property
    def diag(self):
        n = min(self.s.nr, self.s.nc)
        return [self.s.rows[i][i] for i in range(n)]

    @property
    def rank(self):
        return sum(1 for d in self.diag if d != 0)

    def nontrivial_factors(self):
        return [d for d in self.diag if d > 1]


def _guard(a, bit_limit):
    if bit_limit is not None:
        for row in a.rows:
            for e in row:
                if e.bit_length() > bit_limit:
                    raise OverflowGuard(e.bit_length(), bit_limit)


def smith_normal_form(m, bit_limit=None):
    """Return SmithForm with s = u * m * v, u and v unimodular.

    The diagonal is nonnegative and each entry divides the next.  The
    inverse transforms are accumulated alongside, so column/kernel bases
    can be read off without inverting anything afterwards.
    """
    a = m.copy()
    nr, nc = a.nr, a.nc
    u, uinv = Mat.eye(nr), Mat.eye(nr)
    v, vinv = Mat.eye(nc), Mat.eye(nc)

    def row_swap(i, j):
        a.rows[i], a.rows[j] = a.rows[j], a.rows[i]
        u.rows[i], u.rows[j] = u.rows[j], u.rows[i]
        for r in uinv.rows:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in a.rows:
            r[i], r[j] = r[j], r[i]
        for r in v.rows:
            r[i], r[j] = r[j], r[i]
        vinv.rows[i], vinv.rows[j] = vinv.rows[j], vinv.rows[i]

    def row_add(i, j, c):
        # row_i += c * row_j
        a.rows[i] = [x + c * y for x, y in zip(a.rows[i], a.rows[j])]
        u.rows[i] = [x + c * y for x, y in zip(u.rows[i], u.rows[j])]
        for r in uinv.rows:
            r[j] -= c * r[i]

    def col_add(j, i, c):
        # col_j += c * col_i
        for r in a.rows:
            r[j] += c * r[i]
        for r in v.rows:
            r[j] += c * r[i]
        vinv.rows[i] = [x - c * y for x, y in zip(vinv.rows[i], vinv.rows[j])]

    def row_negate(i):
        a.rows[i] = [-x for x in a.rows[i]]
        u.rows[i] = [-x for x in u.rows[i]]
        for r in uinv.rows:
            r[i] = -r[i]

    t = 0
    while t < min(nr, nc):
        pivot = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                e = a.rows[i][j]
                if e != 0 and (best is None or abs(e) < best):
                    best = abs(e)
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])
        dirty = False
        for i in range(t + 1, nr):
            e = a.rows[i][t]
            if e:
                q = e // a.rows[t][t]
                row_add(i, t, -q)
                if a.rows[i][t]:
                    dirty = True
        for j in range(t + 1, nc):
            e = a.rows[t][j]
            if e:
                q = e // a.rows[t][t]
                col_add(j, t, -q)
                if a.rows[t][j]:
                    dirty = True
        _guard(a, bit_limit)
        if dirty:
            continue
        p = a.rows[t][t]
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a.rows[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        t += 1
    for i in range(min(nr, nc)):
        if a.rows[i][i] < 0:
            row_negate(i)
    return SmithForm(a, u, v, uinv, vinv)


def rank(m):
    return smith_normal_form(m).rank


def kernel_basis(m):
    """Columns form a basis of the integer kernel of m (nc x k)."""
    sf = smith_normal_form(m)
    r = sf.rank
    free = list(range(r, m.nc))
    return sf.v.submatrix_cols(free)


def column_space_basis(m):
    """Columns form a basis of the column lattice of m (nr x rank)."""
    sf = smith_normal_form(m)
    cols = []
    basis = sf.uinv.mul(sf.s)
    for j in range(min(m.nr, m.nc)):
        if sf.s.rows[j][j] != 0:
            cols.append(j)
    return basis.submatrix_cols(cols)


def solve(m, b):
    """One integer solution x of m x = b (b: nr x k), or None.

    Solves all k right-hand sides at once; returns an nc x k Mat.
    """
    sf = smith_normal_form(m)
    c = sf.u.mul(b)
    y = Mat.zeros(m.nc, b.nc)
    n = min(m.nr, m.nc)
    for i in range(m.nr):
        d = sf.s.rows[i][i] if i < n else 0
        for j in range(b.nc):
            e = c.rows[i][j]
            if d == 0:
                if e != 0:
                    return None
            else:
                if e % d:
                    return None
                y.rows[i][j] = e // d
    return sf.v.mul(y)


def cokernel_invariants(m):
    """Invariants of Z^nr / colspan(m): (free_rank, [d1, d2, ...]).

    Torsion factors are the diagonal entries above 1, in divisibility
    order.
    """
    sf = smith_normal_form(m)
    return m.nr - sf.rank, sf.nontrivial_factors()


def quotient_lattice(basis, gens):
    """Invariants of span(basis) / span(gens).

    basis: nr x k with independent columns; gens: nr x e with each column
    inside the basis lattice.  Raises ValueError if a generator fails to
    lie in the lattice, since that indicates a logic error upstream.
    """
    if basis.nc == 0:
        if not gens.is_zero():
            raise ValueError("generators outside zero lattice")
        return 0, []
    x = solve(basis, gens)
    if x is None:
        raise ValueError("generators do not lie in the lattice")
    return cokernel_invariants(x)


def det(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.nr != m.nc:
        raise ValueError("determinant of non-square matrix")
    n = m.nr
    if n == 0:
        return 1
    a = [row[:] for row in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = None
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    swap = i
                    break
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
