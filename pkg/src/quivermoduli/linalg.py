"""Exact linear algebra over the rationals.

Matrices carry their shape explicitly so that zero-row / zero-column cases
(which appear whenever a dimension vector has zero entries) survive
multiplication and round-trips.  Everything here is pure and float-free.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

Scalar = int | Fraction


class SingularMatrixError(ValueError):
    """Inverse requested for a matrix with zero determinant."""


class Mat(NamedTuple):
    nrows: int
    ncols: int
    rows: tuple[tuple[Fraction, ...], ...]


def from_rows(rows: Iterable[Iterable[Scalar]], ncols: int | None = None) -> Mat:
    """Build a Mat from row data.  `ncols` is required when there are no rows."""
    data = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if data:
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        if ncols is not None and ncols != width:
            raise ValueError("ncols does not match row data")
        ncols = width
    elif ncols is None:
        raise ValueError("ncols required for a matrix with no rows")
    return Mat(len(data), ncols, data)


def identity(n: int) -> Mat:
    return Mat(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))


def zero_mat(m: int, n: int) -> Mat:
    return Mat(m, n, tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(m)))


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch: {a.nrows}x{a.ncols} times {b.nrows}x{b.ncols}")
    rows = tuple(
        tuple(sum((a.rows[i][k] * b.rows[k][j] for k in range(a.ncols)), Fraction(0))
              for j in range(b.ncols))
        for i in range(a.nrows)
    )
    return Mat(a.nrows, b.ncols, rows)


def mat_scale(c: Scalar, m: Mat) -> Mat:
    c = Fraction(c)
    return Mat(m.nrows, m.ncols, tuple(tuple(c * x for x in row) for row in m.rows))


def _require_square(m: Mat) -> None:
    if m.nrows != m.ncols:
        raise ValueError(f"square matrix required, got {m.nrows}x{m.ncols}")


def det(m: Mat) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination.  det of the empty
    (0x0) matrix is 1."""
    _require_square(m)
    n = m.nrows
    work = [list(row) for row in m.rows]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        pv = work[col][col]
        result *= pv
        for r in range(col + 1, n):
            factor = work[r][col] / pv
            if factor:
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return sign * result


def _minor(m: Mat, drop_row: int, drop_col: int) -> Mat:
    rows = tuple(
        tuple(x for j, x in enumerate(row) if j != drop_col)
        for i, row in enumerate(m.rows) if i != drop_row
    )
    return Mat(m.nrows - 1, m.ncols - 1, rows)


def adjugate(m: Mat) -> Mat:
    """Classical adjugate: entry (i, j) is (-1)^(i+j) times the determinant of
    the matrix with row j and column i deleted.  Conventions: the 1x1 adjugate
    is [[1]], the 0x0 adjugate is the 0x0 matrix; in both cases
    M * adj(M) = det(M) * I holds.
    """
    _require_square(m)
    n = m.nrows
    if n == 0:
        return m
    if n == 1:
        return identity(1)
    rows = tuple(
        tuple((-1) ** (i + j) * det(_minor(m, j, i)) for j in range(n))
        for i in range(n)
    )
    return Mat(n, n, rows)


def mat_inv(m: Mat) -> Mat:
    """Exact inverse via Gauss-Jordan; raises SingularMatrixError."""
    _require_square(m)
    n = m.nrows
    work = [list(m.rows[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return Mat(n, n, tuple(tuple(row[n:]) for row in work))


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows, pivots


def rank_rows(rows: Iterable[Sequence[Scalar]]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    _, pivots = _rref(work)
    return len(pivots)


def rank(m: Mat) -> int:
    return rank_rows(m.rows)


def kernel_basis(m: Mat) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of the right kernel, one vector per free column."""
    work = [[Fraction(x) for x in row] for row in m.rows]
    work, pivots = _rref(work)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * m.ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        basis.append(tuple(vec))
    return tuple(basis)


def primitive_integer_vector(v: Sequence[Scalar]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers (sign preserved)."""
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        return tuple(0 for _ in fracs)
    mult = lcm(*(x.denominator for x in fracs)) if fracs else 1
    ints = [int(x * mult) for x in fracs]
    g = gcd(*(abs(x) for x in ints))
    return tuple(x // g for x in ints)


class Definiteness(NamedTuple):
    status: str  # "positive_definite" | "positive_semidefinite" | "indefinite"
    rank: int
    negative_witness: tuple[int, ...] | None  # integer x with x^T S x < 0


def symmetric_definiteness(sym: Sequence[Sequence[Scalar]]) -> Definiteness:
    """Exact definiteness analysis of a symmetric rational matrix.

    Lagrange-style symmetric elimination: repeatedly pivot on a positive
    diagonal entry and pass to the Schur complement.  A negative diagonal
    entry, or a nonzero off-diagonal entry in an all-zero-diagonal remainder,
    certifies indefiniteness; the witness is lifted back through the recorded
    elimination steps, so x^T S x < 0 holds for the returned integer vector.
    """
    n = len(sym)
    s = [[Fraction(x) for x in row] for row in sym]
    for i in range(n):
        for j in range(n):
            if s[i][j] != s[j][i]:
                raise ValueError("matrix is not symmetric")
    active = list(range(n))
    # each step: (pivot index, {j: S[pivot][j] for remaining j}, pivot value)
    steps: list[tuple[int, dict[int, Fraction], Fraction]] = []

    def lift(partial: dict[int, Fraction]) -> tuple[int, ...]:
        vec = dict(partial)
        for p, srow, pv in reversed(steps):
            vec[p] = -sum(srow[j] * vec.get(j, Fraction(0)) for j in srow) / pv
        full = [vec.get(i, Fraction(0)) for i in range(n)]
        return primitive_integer_vector(full)

    rk = 0
    while active:
        neg = next((i for i in active if s[i][i] < 0), None)
        if neg is not None:
            return Definiteness("indefinite", rk, lift({neg: Fraction(1)}))
        pos = next((i for i in active if s[i][i] > 0), None)
        if pos is None:
            # all remaining diagonal entries are zero
            off = next(
                ((i, j) for i in active for j in active if i < j and s[i][j] != 0),
                None,
            )
            if off is None:
                break  # remaining block is zero: semidefinite
            i, j = off
            sign = Fraction(-1) if s[i][j] > 0 else Fraction(1)
            return Definiteness("indefinite", rk, lift({i: Fraction(1), j: sign}))
        active.remove(pos)
        srow = {j: s[pos][j] for j in active}
        pv = s[pos][pos]
        steps.append((pos, srow, pv))
        rk += 1
        for i in active:
            for j in active:
                s[i][j] -= srow[i] * srow[j] / pv
    status = "positive_definite" if rk == n else "positive_semidefinite"
    return Definiteness(status, rk, None)


# --- integer lattices ---------------------------------------------------------

def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_basis(vectors: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Echelon basis over Z of the lattice spanned by the vectors: one row per
    pivot column, positive pivot entries, rows ordered by pivot column."""
    basis: dict[int, list[int]] = {}
    work = [list(map(int, v)) for v in vectors]
    while work:
        vec = work.pop()
        while True:
            nz = next((j for j, x in enumerate(vec) if x), None)
            if nz is None:
                break
            if nz not in basis:
                basis[nz] = [-x for x in vec] if vec[nz] < 0 else vec
                break
            row = basis[nz]
            a, b = row[nz], vec[nz]
            if b % a == 0:
                f = b // a
                vec = [x - f * y for x, y in zip(vec, row)]
                continue
            g, s, t = _xgcd(a, b)
            new = [s * x + t * y for x, y in zip(row, vec)]
            basis[nz] = new
            work.append([x - (a // g) * y for x, y in zip(row, new)])
            vec = [x - (b // g) * y for x, y in zip(vec, new)]
    return tuple(tuple(basis[c]) for c in sorted(basis))


def lattice_reduce(basis: Sequence[Sequence[int]], x: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of x modulo the lattice: every pivot
    coordinate ends up in [0, pivot value).  Two vectors are congruent modulo
    the lattice exactly when they reduce to the same tuple."""
    y = list(map(int, x))
    for row in basis:
        p = next(j for j, v in enumerate(row) if v)
        q = y[p] // row[p]
        if q:
            y = [a - q * b for a, b in zip(y, row)]
    return tuple(y)


# --- exact phase-1 simplex ----------------------------------------------------

def _phase1_feasible(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve: does Ax = b, x >= 0 have a solution (b >= 0 assumed)?

    Bland's rule, exact arithmetic.  Returns one feasible x or None.
    """
    m = len(a)
    if m == 0:
        return []
    n = len(a[0])
    # tableau columns: n structural + m artificial + rhs
    tab = [a[i][:] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # reduced costs for min(sum of artificials); artificial basis => subtract rows
    cost = [Fraction(0)] * (n + m) + [Fraction(0)]
    for j in range(n + m):
        cost[j] = (Fraction(1) if j >= n else Fraction(0)) - sum(tab[i][j] for i in range(m))
    cost[n + m] = -sum(b)

    while True:
        enter = next((j for j in range(n + m) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][n + m] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise AssertionError("phase-1 objective cannot be unbounded")
        _, row = best
        pv = tab[row][enter]
        tab[row] = [x / pv for x in tab[row]]
        for i in range(m):
            if i != row and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
        f = cost[enter]
        if f:
            cost = [x - f * y for x, y in zip(cost, tab[row])]
        basis[row] = enter

    if cost[n + m] != 0:  # optimum of sum(artificials) is -cost[rhs]
        return None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][n + m]
    return x


def positive_functional(vectors: Sequence[Sequence[Scalar]]) -> tuple[Fraction, ...] | None:
    """Find phi with phi . v >= 1 for every v, or None if impossible.

    Existence of such phi is equivalent to the cone generated by the vectors
    being pointed (no nonnegative combination sums to zero nontrivially).
    """
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    if not vecs:
        return ()
    d = len(vecs[0])
    rows = []
    rhs = []
    for k, v in enumerate(vecs):
        # phi = u - w, slack s_k:  u.v - w.v - s_k = 1
        row = list(v) + [-x for x in v] + [Fraction(0)] * len(vecs)
        row[2 * d + k] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(1))
    x = _phase1_feasible(rows, rhs)
    if x is None:
        return None
    phi = tuple(x[i] - x[d + i] for i in range(d))
    assert all(sum(p * c for p, c in zip(phi, v)) >= 1 for v in vecs)
    return phi


def nonneg_combination_exists(
    vectors: Sequence[Sequence[Scalar]], target: Sequence[Scalar]
) -> bool:
    """Exact test: is target a nonnegative rational combination of vectors?"""
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    rhs = [Fraction(x) for x in target]
    if not vecs:
        return all(x == 0 for x in rhs)
    rows = [[v[k] for v in vecs] for k in range(len(rhs))]
    for i, value in enumerate(rhs):
        if value < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -value
    return _phase1_feasible(rows, rhs) is not None
