"""Exact linear algebra over ZZ, QQ and F_p used throughout the package.

Everything here is arbitrary-precision: integer matrices use Python ints,
rational ones use fractions.Fraction.  numpy only appears in the short
vector enumerator, and every candidate it produces is re-checked exactly.
"""

from fractions import Fraction
from math import isqrt

import numpy as np


# ---------------------------------------------------------------------------
# integer matrices


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_mat(v, a):
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0])))


def hnf(rows):
    """Row Hermite normal form of an integer matrix.

    Returns the list of nonzero rows, in echelon order, with positive pivots
    and entries above each pivot reduced into [0, pivot).
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    basis = []
    for col in range(ncols):
        # gcd-reduce the remaining rows in this column down to one pivot
        while True:
            nz = [r for r in mat if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
            mat = [r for r in mat if any(r)]
        nz = [r for r in mat if r[col] != 0]
        if nz:
            piv = nz[0]
            if piv[col] < 0:
                for j in range(ncols):
                    piv[j] = -piv[j]
            basis.append(piv)
            mat = [r for r in mat if r is not piv]
        if not mat:
            break
    # reduce entries above each pivot
    for i in reversed(range(len(basis))):
        p = next(j for j in range(ncols) if basis[i][j] != 0)
        for k in range(i):
            q = basis[k][p] // basis[i][p]
            if q:
                for j in range(ncols):
                    basis[k][j] -= q * basis[i][j]
    return basis


def det_bareiss(matrix):
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(r) for r in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def mat_inverse_fraction(matrix):
    """Exact inverse of a square matrix (entries int or Fraction)."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_fraction(matrix, rhs):
    """Solve x @ matrix = rhs exactly (row-vector convention)."""
    inv = mat_inverse_fraction(matrix)
    return tuple(sum(Fraction(rhs[i]) * inv[i][j] for i in range(len(rhs)))
                 for j in range(len(matrix)))


# ---------------------------------------------------------------------------
# mod-p matrices (small dense, list based)


def rref_mod_p(rows, p):
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    mat = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [row for row in mat[:r]], pivots


def left_kernel_mod_p(mat, p):
    """Basis of {v : v @ mat == 0 over F_p} as RREF rows.

    Row-reduce [mat | I]; rows whose mat-part vanishes carry the kernel.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    aug = [[mat[i][j] % p for j in range(ncols)] +
           [int(i == k) for k in range(nrows)] for i in range(nrows)]
    red, _ = rref_mod_p(aug, p)
    return [row[ncols:] for row in red if not any(row[:ncols])]


# ---------------------------------------------------------------------------
# lattice reduction and short vectors


def gram_matrix_fraction(rows):
    return [[Fraction(x) for x in r] for r in rows]


def lll_transform(gram, delta=Fraction(3, 4)):
    """LLL on a positive definite Gram matrix; returns the unimodular U with
    U @ gram @ U^T reduced.  Exact rational arithmetic."""
    n = len(gram)
    g = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    u = identity_matrix(n)

    def inner(i, j):
        return sum(u[i][a] * g[a][b] * u[j][b] for a in range(n) for b in range(n))

    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n

    def gso():
        for i in range(n):
            B[i] = inner(i, i)
            for j in range(i):
                mu[i][j] = inner(i, j)
                for k in range(j):
                    mu[i][j] -= mu[j][k] * mu[i][k] * B[k]
                mu[i][j] /= B[j]
                B[i] -= mu[i][j] ** 2 * B[j]

    gso()
    k = 1
    while k < n:
        for j in reversed(range(k)):
            q = mu[k][j]
            r = int(q) if q.denominator == 1 else round(q)
            if r:
                u[k] = [a - r * b for a, b in zip(u[k], u[j])]
                gso()
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            u[k], u[k - 1] = u[k - 1], u[k]
            gso()
            k = max(k - 1, 1)
    return u


def short_vectors(gram, bound):
    """All lattice vectors v (one per +/- pair) with 0 < v G v^T <= bound.

    The Gram matrix must be integral positive definite.  Enumeration uses a
    floating Cholesky with slack on an LLL-reduced copy; every candidate is
    verified against the exact Gram before being returned.
    """
    n = len(gram)
    u = lll_transform(gram)
    g2 = mat_mul(mat_mul(u, [list(r) for r in gram]), list(map(list, zip(*u))))
    gf = np.array(g2, dtype=float)
    # rational Cholesky: gf = R^T R
    r = np.linalg.cholesky(gf).T
    results = []
    slack = 1e-9 * bound + 1e-9
    coords = [0] * n
    centers = [0.0] * n
    partial = [0.0] * (n + 1)

    def recurse(i):
        if i < 0:
            if any(coords):
                v = vec_mat(tuple(coords), u)
                norm = sum(v[a] * gram[a][b] * v[b] for a in range(n) for b in range(n))
                if 0 < norm <= bound:
                    results.append((norm, v))
            return
        rem = bound + slack - partial[i + 1]
        if rem < -slack:
            return
        center = -sum(r[i][j] * coords[j] for j in range(i + 1, n)) / r[i][i]
        radius = (max(rem, 0.0) ** 0.5) / r[i][i]
        lo = int(np.ceil(center - radius - 1e-9))
        hi = int(np.floor(center + radius + 1e-9))
        for c in range(lo, hi + 1):
            coords[i] = c
            d = r[i][i] * (c - center)
            partial[i] = partial[i + 1] + d * d
            recurse(i - 1)
        coords[i] = 0

    # fix sign: enumerate with last nonzero coordinate positive by symmetry,
    # easier to dedupe after the fact
    recurse(n - 1)
    seen = set()
    out = []
    for norm, v in results:
        key = v if v > tuple(-x for x in v) else tuple(-x for x in v)
        if key not in seen:
            seen.add(key)
            out.append((norm, key))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# characteristic polynomials and their factorization


def charpoly(matrix):
    """Monic characteristic polynomial of an integer matrix.

    Faddeev-LeVerrier with exact rationals; returns ascending coefficients
    [c0, c1, ..., 1] of det(xI - A).
    """
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]  # descending: x^n coefficient
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(c)
        m = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    desc = coeffs
    asc = list(reversed(desc))
    out = []
    for c in asc:
        assert c.denominator == 1
        out.append(int(c))
    return out


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_normalize(a):
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def poly_divmod_exact(a, b):
    """Divide in QQ[x], returning (quotient, remainder) with Fraction coeffs."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    b = poly_normalize(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = a[:]
    while len(poly_normalize(r)) >= len(b) and any(r):
        r = poly_normalize(r)
        if len(r) < len(b):
            break
        f = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] += f
        for i, x in enumerate(b):
            r[shift + i] -= f * x
        r = r[:-1]
    return poly_normalize(q), poly_normalize(r)


def poly_gcd(a, b):
    a = poly_normalize([Fraction(x) for x in a])
    b = poly_normalize([Fraction(x) for x in b])
    while any(x != 0 for x in b):
        _, r = poly_divmod_exact(a, b)
        a, b = b, poly_normalize(r)
        if b == [0]:
            break
    # normalize monic
    if a[-1] != 0:
        a = [x / a[-1] for x in a]
    return a


def poly_derivative(a):
    return poly_normalize([i * a[i] for i in range(1, len(a))]) or [0]


def poly_eval(a, x):
    val = 0
    for c in reversed(a):
        val = val * x + c
    return val


def _int_poly(a):
    out = []
    for c in a:
        f = Fraction(c)
        assert f.denominator == 1
        out.append(int(f))
    return out


def factor_charpoly(poly):
    """Factor a monic integer polynomial into irreducible pieces.

    Strategy: squarefree split, integer-root extraction by divisor search,
    then a discriminant test on quadratic leftovers.  Anything of degree >= 3
    that survives is returned unfactored.  Returns [(factor, multiplicity)]
    with ascending integer coefficient lists, monic factors.
    """
    poly = poly_normalize(list(poly))
    assert poly[-1] == 1
    factors = []

    def squarefree_parts(p):
        parts = []
        d = poly_derivative(p)
        g = poly_gcd(p, d)
        if len(g) == 1:
            return [(p, 1)]
        w, _ = poly_divmod_exact(p, g)
        mult = 1
        while len(w) > 1:
            y = poly_gcd(w, g)
            f, _ = poly_divmod_exact(w, y)
            if len(f) > 1:
                parts.append((_int_poly([x / f[-1] for x in f]), mult))
            g2, _ = poly_divmod_exact(g, y)
            w, g = y, poly_normalize(g2)
            mult += 1
        return parts

    for part, mult in squarefree_parts([Fraction(x) for x in poly]):
        rem = [Fraction(x) for x in part]
        # strip zero roots
        while rem[0] == 0 and len(rem) > 1:
            factors.append(([0, 1], mult))
            rem = rem[1:]
        # integer roots divide the constant term (factors are monic)
        changed = True
        while changed and len(rem) > 1:
            changed = False
            c0 = rem[0]
            assert c0.denominator == 1
            c0 = int(c0)
            if c0 == 0:
                factors.append(([0, 1], mult))
                rem = rem[1:]
                changed = True
                continue
            divs = set()
            d = 1
            while d * d <= abs(c0):
                if c0 % d == 0:
                    divs.update({d, -d, c0 // d, -(c0 // d)})
                d += 1
            for root in sorted(divs, key=lambda x: (abs(x), x)):
                if poly_eval(rem, root) == 0:
                    factors.append(([-root, 1], mult))
                    rem, r = poly_divmod_exact(rem, [-root, 1])
                    assert r == [0] or not any(r)
                    changed = True
                    break
        if len(rem) == 3:
            b, c = rem[1], rem[0]
            disc = b * b - 4 * c
            assert disc.denominator == 1
            disc = int(disc)
            s = isqrt(abs(disc)) if disc >= 0 else -1
            if disc >= 0 and s * s == disc:
                r1 = (-b + s) / 2
                r2 = (-b - s) / 2
                factors.append((_int_poly([-r1, 1]), mult))
                factors.append((_int_poly([-r2, 1]), mult))
            else:
                factors.append((_int_poly(rem), mult))
        elif len(rem) > 3:
            factors.append((_int_poly(rem), mult))
        elif len(rem) == 2:
            factors.append((_int_poly([rem[0] / rem[1], 1]), mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return factors


def nullspace(matrix):
    """Basis of {x : matrix @ x = 0} over QQ (column vectors as tuples)."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = [[Fraction(x) for x in row] for row in matrix]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -aug[i][fc]
        basis.append(tuple(vec))
    return basis
