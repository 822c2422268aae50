"""Exact linear algebra over the rationals.

Everything here is fraction-exact. The basic-solution enumerator walks
co-bases of an integer kernel basis with fraction-free elimination; a
machine-int fast path is used only when a Hadamard bound proves 64-bit
products cannot overflow, otherwise it falls back to big integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, isqrt

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None

from .errors import TooMany


def rref(rows):
    """Reduced row echelon form over Fraction. Returns (matrix, pivot columns)."""
    m = [[Fraction(e) for e in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots


def matrix_rank(rows) -> int:
    if not rows:
        return 0
    _, pivots = rref(rows)
    return len(pivots)


def int_matrix_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination (exact)."""
    m = [[int(e) for e in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nr):
            row = m[i]
            f = row[c]
            m[i] = [(piv * a - f * b) // prev for a, b in zip(row, m[r])]
        prev = piv
        rank += 1
        r += 1
        if r == nr:
            break
    return rank


def solve_particular(rows, rhs):
    """One solution of Ax = b, free variables set to 0; None if inconsistent."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(nr)]
    m, pivots = rref(aug)
    if nc in pivots:
        return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(pivots):
        x[c] = m[i][nc]
    return x


def kernel_basis(rows):
    """Primitive integer basis of ker(A), one vector per free column of rref(A)."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    m, pivots = rref(rows)
    free = [c for c in range(nc) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        den = 1
        for e in v:
            den = den * e.denominator // gcd(den, e.denominator)
        w = [int(e * den) for e in v]
        g = 0
        for e in w:
            g = gcd(g, e)
        if g > 1:
            w = [e // g for e in w]
        lead = next((e for e in w if e != 0), 1)
        if lead < 0:
            w = [-e for e in w]
        basis.append(tuple(w))
    return basis


def affine_rank(points) -> int:
    """Dimension of the affine hull of a set of rational points."""
    pts = [tuple(Fraction(e) for e in p) for p in points]
    if len(pts) <= 1:
        return 0
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    den = 1
    for row in diffs:
        for e in row:
            den = den * e.denominator // gcd(den, e.denominator)
    int_rows = [[int(e * den) for e in row] for row in diffs]
    return int_matrix_rank(int_rows)


# ---------------------------------------------------------------------------
# Vertex enumeration for {x >= 0 : Ax = b}.
#
# With N an n x k integer kernel basis of A and x0 a particular solution, the
# vertices are exactly the points obtained by zeroing a co-basis S (|S| = k,
# N[S] invertible) and solving. The search runs over index-ordered subsets,
# sharing fraction-free elimination work along common prefixes; rows that
# become dependent are pruned, so only invertible co-bases reach a leaf.
# At a leaf the solve is integer Cramer style: with d = det(N[S]) (the last
# fraction-free pivot) and x0 = z0/D, the scaled point xi = d*z0 + N*sigma
# satisfies x = xi/(d*D), so feasibility is a sign check on xi.
# ---------------------------------------------------------------------------


def enumerate_basic_feasible(rows, rhs, max_leaves: int = 80_000_000):
    """All vertices of {x >= 0 : Ax = b}, as sorted tuples of Fractions."""
    nr = len(rows)
    n = len(rows[0]) if nr else 0
    if n == 0:
        return []
    x0 = solve_particular(rows, rhs)
    if x0 is None:
        return []
    kern = kernel_basis(rows)
    k = len(kern)
    if k == 0:
        if all(e >= 0 for e in x0):
            return [tuple(x0)]
        return []
    if comb(n, k) > max_leaves:
        raise TooMany(f"co-basis search over C({n},{k}) subsets exceeds the guard")

    den = 1
    for e in x0:
        den = den * e.denominator // gcd(den, e.denominator)
    z0 = [int(e * den) for e in x0]
    # N[r][c]: value of kernel vector c at cell r
    nmat = [[kern[c][r] for c in range(k)] for r in range(n)]

    max_n = max(1, max(abs(e) for row in nmat for e in row))
    max_z = max(1, max(abs(e) for e in z0))
    root = isqrt(k) + 1
    bound_n = root**k * max_n**k
    bound_a = root**k * max_n ** (k - 1) * max_z
    safe64 = (k + 2) * bound_n * max(bound_n, bound_a) < 2**62

    if _np is not None and safe64:
        sols = _cobasis_search_np(nmat, z0, den, k)
    else:
        sols = _cobasis_search_py(nmat, z0, den, k)
    return sorted(sols)


def _cobasis_search_np(nmat, z0, den, k):
    np = _np
    n = len(nmat)
    c0 = np.empty((n, k + 1), dtype=np.int64)
    for r in range(n):
        c0[r, :k] = nmat[r]
        c0[r, k] = z0[r]
    full_n = c0[:, :k].copy()
    z0v = c0[:, k].copy()
    c0 = c0[np.any(c0[:, :k] != 0, axis=1)]

    sols = set()
    ech = [None] * k
    pivcols = [0] * k
    sigma = np.zeros(k, dtype=np.int64)

    def leaf():
        d = int(ech[k - 1][pivcols[k - 1]])
        sigma[:] = 0
        for i in range(k - 1, -1, -1):
            row = ech[i]
            num = -d * int(row[k]) - int(row[:k] @ sigma)
            sigma[pivcols[i]] = num // int(row[pivcols[i]])
        xi = d * z0v + full_n @ sigma
        if (xi >= 0).all() if d > 0 else (xi <= 0).all():
            dd = d * den
            sols.add(tuple(Fraction(int(v), dd) for v in xi))

    def rec(cand, prev, depth):
        need = k - depth
        m = cand.shape[0]
        for ci in range(m - need + 1):
            pivrow = cand[ci]
            pc = int(np.argmax(pivrow[:k] != 0))
            ech[depth] = pivrow
            pivcols[depth] = pc
            if need == 1:
                leaf()
                continue
            rest = cand[ci + 1 :]
            piv = int(pivrow[pc])
            new = (rest * piv - np.outer(rest[:, pc], pivrow)) // prev
            new = new[np.any(new[:, :k] != 0, axis=1)]
            if new.shape[0] >= need - 1:
                rec(new, piv, depth + 1)

    if c0.shape[0] >= k:
        rec(c0, 1, 0)
    return sols


def _cobasis_search_py(nmat, z0, den, k):
    n = len(nmat)
    rows0 = [tuple(nmat[r]) + (z0[r],) for r in range(n)]
    rows0 = [r for r in rows0 if any(e != 0 for e in r[:k])]

    sols = set()
    ech = [None] * k
    pivcols = [0] * k

    def leaf():
        d = ech[k - 1][pivcols[k - 1]]
        sigma = [0] * k
        for i in range(k - 1, -1, -1):
            row = ech[i]
            num = -d * row[k] - sum(row[c] * sigma[c] for c in range(k))
            sigma[pivcols[i]] = num // row[pivcols[i]]
        xi = [d * z0[r] + sum(nmat[r][c] * sigma[c] for c in range(k)) for r in range(n)]
        if all(v >= 0 for v in xi) if d > 0 else all(v <= 0 for v in xi):
            dd = d * den
            sols.add(tuple(Fraction(v, dd) for v in xi))

    def rec(cand, prev, depth):
        need = k - depth
        m = len(cand)
        for ci in range(m - need + 1):
            pivrow = cand[ci]
            pc = next(c for c in range(k) if pivrow[c] != 0)
            ech[depth] = pivrow
            pivcols[depth] = pc
            if need == 1:
                leaf()
                continue
            piv = pivrow[pc]
            new = []
            for row in cand[ci + 1 :]:
                f = row[pc]
                nr = tuple((piv * a - f * b) // prev for a, b in zip(row, pivrow))
                if any(e != 0 for e in nr[:k]):
                    new.append(nr)
            if len(new) >= need - 1:
                rec(new, piv, depth + 1)

    if len(rows0) >= k:
        rec(rows0, 1, 0)
    return sols
