"""Smith normal form over the integers, with transforms, and the linear
algebra over Z_n built on it (valid for composite n)."""

from __future__ import annotations

from math import gcd


def _ext_gcd(a, b):
    """(g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def smith_normal_form(matrix, ncols=None, modulus=None):
    """Return (diag, U, V) with U * A * V = D, U and V unimodular and
    diag[i] | diag[i+1]; diag lists the non-zero invariant factors only.

    With ``modulus`` the computation runs over Z_modulus: entries are reduced
    as they go and the divisibility chain is not enforced (D is diagonal,
    which is all the solvers below need)."""
    n = modulus
    A = [list(map(int, row)) for row in matrix]
    rows = len(A)
    cols = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]
    if n:
        A = [[v % n for v in row] for row in A]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def combine_rows(i, j, a, b, c, d):
        # row_i <- a row_i + b row_j ; row_j <- c row_i + d row_j
        for M in (A, U):
            ri, rj = M[i], M[j]
            for k in range(len(ri)):
                e = ri[k]
                ri[k] = a * e + b * rj[k]
                rj[k] = c * e + d * rj[k]
                if n:
                    ri[k] %= n
                    rj[k] %= n

    def combine_cols(i, j, a, b, c, d):
        for M in (A, V):
            for row in M:
                e = row[i]
                row[i] = a * e + b * row[j]
                row[j] = c * e + d * row[j]
                if n:
                    row[i] %= n
                    row[j] %= n

    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest non-zero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, rows):
                q = A[i][t]
                if not q:
                    continue
                p = A[t][t]
                if q % p == 0:
                    combine_rows(t, i, 1, 0, -(q // p), 1)
                else:
                    g, x, y = _ext_gcd(p, q)
                    combine_rows(t, i, x, y, -q // g, p // g)
                    changed = True
            for j in range(t + 1, cols):
                q = A[t][j]
                if not q:
                    continue
                p = A[t][t]
                if q % p == 0:
                    combine_cols(t, j, 1, 0, -(q // p), 1)
                else:
                    g, x, y = _ext_gcd(p, q)
                    combine_cols(t, j, x, y, -q // g, p // g)
                    changed = True
            if not changed and not any(A[i][t] for i in range(t + 1, rows)):
                break
        if not n:
            # divisibility: pull an entry not divisible by the pivot into the pivot row
            p = A[t][t]
            bad = None
            for i in range(t + 1, rows):
                if any(A[i][j] % p for j in range(t + 1, cols)):
                    bad = i
                    break
            if bad is not None:
                combine_rows(t, bad, 1, 1, 0, 1)
                continue
            if p < 0:
                for M in (A, U):
                    M[t] = [-v for v in M[t]]
        diag.append(A[t][t])
        t += 1
    return diag, U, V


def solution_generators_mod(matrix, ncols, n):
    """Generators of {v in Z_n^ncols : A v = 0 mod n} as (order, vector)
    pairs; the module is the direct sum of the cyclic groups they generate."""
    diag, _, V = smith_normal_form(matrix, ncols, modulus=n)
    gens = []
    for i in range(ncols):
        d = diag[i] if i < len(diag) else 0
        g = gcd(d, n)
        scale = n // g
        order = g
        if order == 1:
            continue
        vec = tuple((scale * V[r][i]) % n for r in range(ncols))
        gens.append((order, vec))
    return gens


def count_solutions_mod(matrix, ncols, n):
    diag, _, _ = smith_normal_form(matrix, ncols, modulus=n)
    total = 1
    for i in range(ncols):
        d = diag[i] if i < len(diag) else 0
        total *= gcd(d, n)
    return total


def span_mod(vectors, ncols, n):
    """Generators (order, vector) of the subgroup of Z_n^ncols spanned by
    the given vectors."""
    if not vectors:
        return []
    # columns of M are the vectors; image of M mod n
    M = [[vec[r] for vec in vectors] for r in range(ncols)]
    diag, U, _ = smith_normal_form(M, len(vectors))
    Uinv = _unimodular_inverse(U)
    gens = []
    for i, d in enumerate(diag):
        g = gcd(d, n)
        order = n // g
        if order == 1:
            continue
        vec = tuple((g * Uinv[r][i]) % n for r in range(ncols))
        gens.append((order, vec))
    return gens


def _unimodular_inverse(U):
    """Exact inverse of an integer unimodular matrix by Gauss-Jordan over Q
    collapsed back to integers."""
    from fractions import Fraction

    n = len(U)
    M = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(U)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [v / pv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    out = []
    for row in M:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ArithmeticError("matrix is not unimodular")
        out.append([int(v) for v in vals])
    return out


def enumerate_group(gens, ncols, n, limit=None):
    """All elements of the direct sum generated by (order, vector) pairs."""
    from itertools import product

    size = 1
    for order, _ in gens:
        size *= order
    if limit is not None and size > limit:
        raise OverflowError("group has %d elements, above the limit %d" % (size, limit))
    out = []
    for coeffs in product(*(range(o) for o, _ in gens)):
        v = [0] * ncols
        for c, (_, g) in zip(coeffs, gens):
            if c:
                for r in range(ncols):
                    v[r] += c * g[r]
        out.append(tuple(x % n for x in v))
    return out
