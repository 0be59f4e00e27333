"""Exact integer matrix and lattice algebra.

Matrices are numpy arrays of dtype ``object`` holding Python ints, so all
arithmetic is arbitrary precision; ``A @ B`` multiplies exactly. Sublattices
of Z^m are represented by matrices whose columns generate them.

Smith normal form is the workhorse: it yields kernels, images, saturations,
integral solving and the elementary-divisor chains of alternating forms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFormError


def intmat(data) -> np.ndarray:
    """2-D object-dtype integer matrix from nested sequences or an array."""
    arr = np.array([[int(x) for x in row] for row in data], dtype=object)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return arr


def zeros(r: int, c: int) -> np.ndarray:
    return np.full((r, c), 0, dtype=object)


def eye(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def mat_equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        return False
    if a.size == 0:
        return True
    return bool((a == b).all())


def is_alternating(g) -> bool:
    g = np.asarray(g, dtype=object)
    return mat_equal(g.T, -g)


def to_lists(m) -> list:
    """Row-major nested lists of Python ints (JSON-ready)."""
    return [[int(x) for x in row] for row in np.asarray(m, dtype=object)]


def det(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in np.asarray(m, dtype=object)]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


class _SnfState:
    """Row/column elimination with unimodular transforms and their inverses."""

    def __init__(self, mat):
        arr = np.asarray(mat, dtype=object)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D matrix")
        self.m, self.n = arr.shape
        self.a = [[int(arr[i, j]) for j in range(self.n)] for i in range(self.m)]
        self.u = [[int(i == j) for j in range(self.m)] for i in range(self.m)]
        self.uinv = [[int(i == j) for j in range(self.m)] for i in range(self.m)]
        self.v = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        self.vinv = [[int(i == j) for j in range(self.n)] for i in range(self.n)]

    # row i += q * row j  (A <- E A, U <- E U, Uinv <- Uinv E^-1)
    def row_add(self, i, j, q):
        ai, aj = self.a[i], self.a[j]
        for c in range(self.n):
            ai[c] += q * aj[c]
        ui, uj = self.u[i], self.u[j]
        for c in range(self.m):
            ui[c] += q * uj[c]
        for r in range(self.m):
            row = self.uinv[r]
            row[j] -= q * row[i]

    def row_swap(self, i, j):
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]
        for r in range(self.m):
            row = self.uinv[r]
            row[i], row[j] = row[j], row[i]

    def row_neg(self, i):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]
        for r in range(self.m):
            self.uinv[r][i] = -self.uinv[r][i]

    # col i += q * col j  (A <- A E, V <- V E, Vinv <- E^-1 V)
    def col_add(self, i, j, q):
        for r in range(self.m):
            row = self.a[r]
            row[i] += q * row[j]
        for r in range(self.n):
            row = self.v[r]
            row[i] += q * row[j]
        vi, vj = self.vinv[i], self.vinv[j]
        for c in range(self.n):
            vj[c] -= q * vi[c]

    def col_swap(self, i, j):
        for r in range(self.m):
            row = self.a[r]
            row[i], row[j] = row[j], row[i]
        for r in range(self.n):
            row = self.v[r]
            row[i], row[j] = row[j], row[i]
        self.vinv[i], self.vinv[j] = self.vinv[j], self.vinv[i]


def _snf_state(mat) -> _SnfState:
    st = _SnfState(mat)
    a, m, n = st.a, st.m, st.n
    t = 0
    while True:
        # smallest nonzero entry of the remaining block becomes the pivot
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            st.row_swap(i, t)
        if j != t:
            st.col_swap(j, t)
        while True:
            # clear column t
            for i in range(m):
                if i != t and a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    if q:
                        st.row_add(i, t, -q)
                    if a[i][t] != 0:
                        st.row_swap(i, t)
            if any(a[i][t] != 0 for i in range(m) if i != t):
                continue
            # clear row t
            for j in range(n):
                if j != t and a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    if q:
                        st.col_add(j, t, -q)
                    if a[t][j] != 0:
                        st.col_swap(j, t)
            if any(a[i][t] != 0 for i in range(m) if i != t):
                continue
            if any(a[t][j] != 0 for j in range(n) if j != t):
                continue
            # pivot must divide the remaining block
            d = a[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % d != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            st.row_add(t, offender, 1)
        if a[t][t] < 0:
            st.row_neg(t)
        t += 1
    return st


def _lists_to_mat(rows, nrows, ncols) -> np.ndarray:
    if nrows == 0 or ncols == 0:
        return zeros(nrows, ncols)
    return intmat(rows)


def snf(mat):
    """Smith normal form: returns ``(U, D, V)`` with ``U @ mat @ V == D``,
    ``U`` and ``V`` unimodular, ``D`` diagonal with a divisibility chain."""
    st = _snf_state(mat)
    U = _lists_to_mat(st.u, st.m, st.m)
    V = _lists_to_mat(st.v, st.n, st.n)
    D = _lists_to_mat(st.a, st.m, st.n)
    M = np.asarray(mat, dtype=object).reshape(st.m, st.n)
    if st.m and st.n and not mat_equal(U @ M @ V, D):
        raise AssertionError("smith normal form self-check failed")
    return U, D, V


def divisors(mat) -> tuple:
    """Nonzero diagonal chain d1 | d2 | ... of the Smith form."""
    _, d, _ = snf(mat)
    out = []
    for i in range(min(d.shape)):
        if d[i, i] != 0:
            out.append(int(d[i, i]))
    return tuple(out)


def rank(mat) -> int:
    return len(divisors(mat))


def _snf_rank(st: _SnfState) -> int:
    return sum(1 for i in range(min(st.m, st.n)) if st.a[i][i] != 0)


def kernel(mat) -> np.ndarray:
    """Columns generate the integer kernel (always saturated)."""
    st = _snf_state(mat)
    r = _snf_rank(st)
    V = _lists_to_mat(st.v, st.n, st.n)
    return V[:, r:]


def image(mat) -> np.ndarray:
    """Columns form a basis of the image lattice (not saturated)."""
    st = _snf_state(mat)
    r = _snf_rank(st)
    uinv = _lists_to_mat(st.uinv, st.m, st.m)
    cols = zeros(st.m, r)
    for i in range(r):
        d = st.a[i][i]
        for rrow in range(st.m):
            cols[rrow, i] = uinv[rrow, i] * d
    return cols


def saturate(mat) -> np.ndarray:
    """Basis of the smallest primitive sublattice containing the column span."""
    st = _snf_state(mat)
    r = _snf_rank(st)
    uinv = _lists_to_mat(st.uinv, st.m, st.m)
    return uinv[:, :r]


def solve_exact(a, b) -> np.ndarray:
    """Integer solution X of ``a @ X == b``; raises ValueError if none exists."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    st = _snf_state(a)
    r = _snf_rank(st)
    U = _lists_to_mat(st.u, st.m, st.m)
    V = _lists_to_mat(st.v, st.n, st.n)
    ub = U @ b if st.m else zeros(0, b.shape[1])
    x = zeros(st.n, b.shape[1])
    for i in range(st.m):
        if i < r:
            d = st.a[i][i]
            for c in range(b.shape[1]):
                q, rem = divmod(int(ub[i, c]), d)
                if rem:
                    raise ValueError("no integral solution")
                x[i, c] = q
        else:
            for c in range(b.shape[1]):
                if ub[i, c] != 0:
                    raise ValueError("no integral solution")
    out = V @ x
    return out[:, 0] if vec else out


def contains(basis, vectors) -> bool:
    """Whether every column of ``vectors`` lies in the column span of ``basis``."""
    try:
        solve_exact(basis, vectors)
        return True
    except ValueError:
        return False


def lattices_equal(a, b) -> bool:
    return contains(a, b) and contains(b, a)


def intersect(a, b) -> np.ndarray:
    """Basis of the intersection of two column-span lattices."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape[0] != b.shape[0]:
        raise ValueError("ambient rank mismatch")
    if a.shape[1] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], 0)
    stacked = np.concatenate([a, -b], axis=1)
    ker = kernel(stacked)
    cand = a @ ker[: a.shape[1], :]
    return image(cand)


def sum_lattices(a, b) -> np.ndarray:
    """Basis of the lattice generated by both column spans."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape[0] != b.shape[0]:
        raise ValueError("ambient rank mismatch")
    return image(np.concatenate([a, b], axis=1))


def unimodular_inverse(u) -> np.ndarray:
    u = np.asarray(u, dtype=object)
    inv = solve_exact(u, eye(u.shape[0]))
    return inv


# ---------------------------------------------------------------------------
# polarized lattices


@dataclass(frozen=True)
class PolarizedLattice:
    """A sublattice of Z^m carrying the restriction of an alternating form.

    ``gram`` is the m x m alternating form on the ambient lattice; ``basis``
    holds the sublattice generators as columns (full column rank).
    """

    gram: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.gram, dtype=object)
        b = np.asarray(self.basis, dtype=object)
        if g.shape[0] != g.shape[1] or g.shape[0] != b.shape[0]:
            raise ValueError("gram/basis shape mismatch")
        if not is_alternating(g):
            raise ValueError("gram matrix must be alternating")

    @property
    def ambient_rank(self) -> int:
        return self.gram.shape[0]

    @property
    def rank(self) -> int:
        return self.basis.shape[1]

    def restricted_gram(self) -> np.ndarray:
        return self.basis.T @ self.gram @ self.basis

    def saturated(self) -> "PolarizedLattice":
        return PolarizedLattice(self.gram, saturate(self.basis))


def ptype(sub: PolarizedLattice) -> tuple:
    """Polarization type of the restricted form: the divisor chain with each
    value reported once (they occur in equal pairs on a nondegenerate
    alternating lattice)."""
    g = sub.restricted_gram()
    r = g.shape[0]
    if r == 0:
        return ()
    ker = kernel(g)
    if ker.shape[1] != 0:
        radical = sub.basis @ ker
        raise DegenerateFormError(
            f"restricted form is degenerate with radical of rank {ker.shape[1]}",
            radical=radical,
        )
    if r % 2 != 0:
        raise DegenerateFormError("nondegenerate alternating form needs even rank")
    chain = divisors(g)
    for i in range(0, r, 2):
        if chain[i] != chain[i + 1]:
            raise AssertionError(f"elementary divisors not paired: {chain}")
    return tuple(chain[i] for i in range(0, r, 2))


def dual_type(t) -> tuple:
    """Type carried by the dual polarization: (d1, d1*dp/d(p-1), ..., dp)."""
    t = tuple(int(x) for x in t)
    if not t:
        return ()
    if any(x < 1 for x in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
        raise ValueError(f"not a divisibility chain: {t}")
    p = len(t)
    top = t[0] * t[-1]
    out = tuple(top // t[p - 1 - i] for i in range(p))
    if any(out[i + 1] % out[i] for i in range(p - 1)):
        raise AssertionError("dual chain failed divisibility")
    return out
