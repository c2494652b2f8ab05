"""Dense exact linear algebra over the rationals.

Matrices are numpy object arrays holding gmpy2 ``mpq`` entries, so the usual
numpy slicing, ``@`` and ``np.kron`` work unchanged while all arithmetic
stays exact.  Vectors are one-dimensional arrays.
"""

import numpy as np
from gmpy2 import mpq

Q = mpq


class NotInvertible(ArithmeticError):
    pass


class NoSolution(ArithmeticError):
    pass


_to_q = np.vectorize(mpq, otypes=[object])


def q(x):
    """Coerce an int, string ``"p/q"``, Fraction or mpq to an exact rational."""
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


def matrix(rows, shape=None):
    if isinstance(rows, np.ndarray):
        arr = rows
    else:
        arr = np.array(rows, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    if arr.ndim == 1 and shape is None:
        arr = arr.reshape(1, -1) if arr.size else np.zeros((0, 0), dtype=object)
    if arr.size == 0:
        return np.zeros(arr.shape, dtype=object)
    if arr.dtype == object and all(type(v) is mpq for v in arr.flat):
        return arr
    return _to_q(arr)


def vector(vals):
    arr = np.array(list(vals), dtype=object).reshape(-1)
    if arr.size == 0:
        return np.zeros(0, dtype=object)
    return _to_q(arr)


def zeros(rows, cols=None):
    shape = (rows,) if cols is None else (rows, cols)
    out = np.empty(shape, dtype=object)
    out.fill(mpq(0))
    return out


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = mpq(1)
    return out


def basis_vector(n, i):
    out = zeros(n)
    out[i] = mpq(1)
    return out


def kron(*factors):
    out = matrix([[1]])
    for f in factors:
        f = np.asarray(f, dtype=object)
        if f.ndim == 1:
            f = f.reshape(-1, 1)
        out = np.kron(out, f)
    return clean(out)


def clean(m):
    """Replace stray python ints produced by empty contractions with mpq."""
    m = np.asarray(m, dtype=object)
    if m.size and any(type(v) is not mpq for v in m.flat):
        return _to_q(m)
    if m.size == 0:
        return np.zeros(m.shape, dtype=object)
    return m


def is_zero(m):
    return not any(v != 0 for v in np.asarray(m).flat)


def equal(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return a.shape == b.shape and is_zero(a - b)


def first_difference(a, b):
    """Column index and residual of the first column where two matrices differ."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    if a.ndim == 1:
        a = a.reshape(-1, 1)
        b = b.reshape(-1, 1)
    diff = a - b
    for j in range(diff.shape[1]):
        col = diff[:, j]
        if any(v != 0 for v in col):
            return j, clean(col)
    return None


def rref(m):
    """Reduced row echelon form; returns (R, rank, pivot_columns)."""
    r = matrix(m).copy()
    nrows, ncols = r.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        hit = None
        for i in range(row, nrows):
            if r[i, col] != 0:
                hit = i
                break
        if hit is None:
            continue
        if hit != row:
            r[[row, hit]] = r[[hit, row]]
        r[row] = r[row] / r[row, col]
        factors = r[:, col].copy()
        factors[row] = mpq(0)
        nz = [i for i in range(nrows) if factors[i] != 0]
        if nz:
            r[nz] = r[nz] - np.outer(factors[nz], r[row])
        pivots.append(col)
        row += 1
    return r, len(pivots), pivots


def rank(m):
    m = matrix(m)
    if m.size == 0:
        return 0
    return rref(m)[1]


def kernel_basis(m):
    """Basis of the null space; each vector scaled so its first nonzero entry is 1."""
    m = matrix(m)
    ncols = m.shape[1]
    if m.shape[0] == 0:
        return [basis_vector(ncols, j) for j in range(ncols)]
    r, rk, pivots = rref(m)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = zeros(ncols)
        v[f] = mpq(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        lead = next(x for x in v if x != 0)
        basis.append(v / lead)
    return basis


def invert(m):
    m = matrix(m)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("invert needs a square matrix")
    if n == 0:
        return zeros(0, 0)
    r, rk, pivots = rref(np.hstack([m, identity(n)]))
    if rk < n or pivots[n - 1] >= n:
        raise NotInvertible(f"rank {rank(m)} < {n}")
    return r[:, n:]


def solve(a, b):
    """One exact solution x of a @ x = b (free variables set to zero)."""
    a = matrix(a)
    b = vector(b)
    nrows, ncols = a.shape
    if b.shape[0] != nrows:
        raise ValueError("right-hand side has the wrong length")
    if nrows == 0:
        return zeros(ncols)
    r, rk, pivots = rref(np.hstack([a, b.reshape(-1, 1)]))
    if pivots and pivots[-1] == ncols:
        raise NoSolution("right-hand side is not in the column space")
    x = zeros(ncols)
    for i, p in enumerate(pivots):
        x[p] = r[i, ncols]
    return x


def stack(blocks, cols):
    """Vertically stack row blocks, tolerating an empty list."""
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return zeros(0, cols)
    return np.vstack(blocks)


def fmt(x):
    x = mpq(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
