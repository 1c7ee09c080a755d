"""Exact integer and rational linear algebra.

Everything here runs on Python ints and fractions.Fraction; no floating
point anywhere.  Determinants use fraction-free Bareiss elimination, lattice
indices come from a genuine Smith normal form reduction (not from the
determinant, so the two can cross-check each other), and cone membership is
phase-1 simplex with Bland's rule over the rationals.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

Matrix = tuple[tuple[int, ...], ...]


def determinant(rows) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: Bareiss guarantees divisibility by prev
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _minor(rows, skip_i: int, skip_j: int):
    return [
        [rows[i][j] for j in range(len(rows)) if j != skip_j]
        for i in range(len(rows))
        if i != skip_i
    ]


def adjugate(rows) -> list[list[int]]:
    """Classical adjugate: ``rows @ adjugate(rows) == det(rows) * I``."""
    n = len(rows)
    if n == 0:
        return []
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cof = determinant(_minor(rows, i, j))
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def column_submatrix(rows, cols) -> Matrix:
    return tuple(tuple(row[j] for j in cols) for row in rows)


def invariant_factors(rows) -> tuple[int, ...]:
    """Smith normal form diagonal of an integer matrix, as nonnegative ints.

    Elementary row/column operations only; the returned factors satisfy the
    divisibility chain d1 | d2 | ...  Zero factors appear when the rank is
    smaller than min(rows, cols).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    size = min(nrows, ncols)
    factors = []
    t = 0
    while t < size:
        # locate a nonzero entry of smallest magnitude in the trailing block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(m[i][j])
                if v and (best is None or v < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        while True:
            pivot = m[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // pivot
                    if q:
                        for j in range(t, ncols):
                            m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // pivot
                    if q:
                        for i in range(t, nrows):
                            m[i][j] -= q * m[i][t]
                    if m[t][j]:
                        for i in range(t, nrows):
                            m[i][t], m[i][j] = m[i][j], m[i][t]
                        dirty = True
                        break
            if dirty:
                continue
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if m[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                m[t][j] += m[offender][j]
        factors.append(abs(m[t][t]))
        t += 1
    while len(factors) < size:
        factors.append(0)
    # enforce the divisibility chain among nonzero factors
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            if a and b and b % a:
                g = gcd(a, b)
                factors[i], factors[j] = g, a * b // g
    return tuple(factors)


def lattice_index(rows) -> int:
    """Order of Z^n modulo the column lattice; 0 when rank-deficient."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("lattice index needs a square system")
    factors = invariant_factors(rows)
    if len(factors) < n or any(f == 0 for f in factors):
        return 0
    index = 1
    for f in factors:
        index *= f
    return index


def gcd_of_maximal_minors(rows, degree: int | None = None, workers: int = 1) -> int:
    """gcd of the absolute values of all n x n column minors (0 if all vanish).

    When ``degree`` is given the enumeration stops early once the running
    gcd reaches it; for a stochastic matrix every maximal minor is a
    multiple of the column degree, so the gcd can never drop below it.
    ``workers`` > 1 partitions the column combinations into chunks whose
    gcds are folded deterministically, so the result never depends on it.
    """
    n = len(rows)
    q = len(rows[0]) if n else 0
    if q < n:
        raise ValueError("need at least as many columns as rows")
    combos = list(itertools.combinations(range(q), n))

    def fold(chunk) -> int:
        g = 0
        for cols in chunk:
            g = gcd(g, abs(determinant(column_submatrix(rows, cols))))
            if degree is not None and g == degree:
                break
        return g

    if workers <= 1 or len(combos) < 2 * workers:
        return fold(combos)
    size = (len(combos) + workers - 1) // workers
    chunks = [combos[k:k + size] for k in range(0, len(combos), size)]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        partial = list(pool.map(fold, chunks))
    g = 0
    for value in partial:
        g = gcd(g, value)
    return g


def nonnegative_combination(columns, target) -> list[Fraction] | None:
    """Exact feasibility of ``target = sum_j lam_j * columns[j]`` with lam >= 0.

    Returns one solution as Fractions, or None when infeasible.  Phase-1
    simplex with Bland's rule (entering: smallest index with negative
    reduced cost; leaving: smallest basis index among minimal ratios), which
    cannot cycle.
    """
    m = len(target)
    q = len(columns)
    for col in columns:
        if len(col) != m:
            raise ValueError("dimension mismatch")
    width = q + m
    tab: list[list[Fraction]] = []
    basis = []
    for i in range(m):
        coeffs = [Fraction(columns[j][i]) for j in range(q)]
        rhs = Fraction(target[i])
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        row = coeffs + [Fraction(0)] * m + [rhs]
        row[q + i] = Fraction(1)
        tab.append(row)
        basis.append(q + i)
    # reduced costs for phase-1 objective (minimize sum of artificials);
    # zrow[-1] tracks -objective
    zrow = [Fraction(0)] * (width + 1)
    for j in range(width + 1):
        total = sum(tab[i][j] for i in range(m))
        cost = Fraction(1) if q <= j < width else Fraction(0)
        zrow[j] = (cost - total) if j < width else -total

    while True:
        enter = next((j for j in range(width) if zrow[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return None  # unreachable in phase 1; defensive
        pivot = tab[leave][enter]
        tab[leave] = [v / pivot for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                coef = tab[i][enter]
                tab[i] = [v - coef * p for v, p in zip(tab[i], tab[leave])]
        coef = zrow[enter]
        zrow = [v - coef * p for v, p in zip(zrow, tab[leave])]
        basis[leave] = enter

    if -zrow[width] != 0:
        return None
    solution = [Fraction(0)] * q
    for i, b in enumerate(basis):
        if b < q:
            solution[b] = tab[i][width]
    return solution


def _normalize_inequality(row) -> tuple[int, ...] | None:
    g = 0
    for v in row:
        g = gcd(g, abs(v))
    if g == 0:
        return None
    return tuple(v // g for v in row)


def cone_inequalities(columns) -> tuple[tuple[int, ...], ...]:
    """Half-space description of the cone spanned by ``columns``.

    Returns integer vectors c with membership test ``dot(c, x) <= 0`` for
    every c.  Derived by Fourier-Motzkin elimination of the combination
    coefficients from ``x = sum lam_j columns[j], lam >= 0``.  Exponential in
    the worst case; intended for small cross-check instances.
    """
    q = len(columns)
    m = len(columns[0]) if q else 0
    rows: set[tuple[int, ...]] = set()
    for j in range(q):
        row = [0] * (q + m)
        row[j] = -1
        rows.add(tuple(row))
    for i in range(m):
        row = [0] * (q + m)
        for j in range(q):
            row[j] = -columns[j][i]
        row[q + i] = 1
        rows.add(tuple(row))
        rows.add(tuple(-v for v in row))
    for k in range(q):
        pos = [r for r in rows if r[k] > 0]
        neg = [r for r in rows if r[k] < 0]
        keep = {r for r in rows if r[k] == 0}
        for rp in pos:
            for rn in neg:
                comb = tuple(
                    (-rn[k]) * rp[t] + rp[k] * rn[t] for t in range(q + m)
                )
                norm = _normalize_inequality(comb)
                if norm is not None:
                    keep.add(norm)
        rows = keep
    result = set()
    for r in rows:
        norm = _normalize_inequality(r[q:])
        if norm is not None:
            result.add(norm)
    return tuple(sorted(result))


def satisfies_inequalities(inequalities, point) -> bool:
    return all(sum(c * z for c, z in zip(row, point)) <= 0 for row in inequalities)
