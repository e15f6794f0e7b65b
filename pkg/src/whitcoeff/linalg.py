"""Small exact-rational linear algebra kernel: echelon form, rank,
nullspace, subspace comparisons.  Matrices are lists of row tuples of
Fractions; everything is dense and deterministic.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref rows without zero rows, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Matrix, ncols: int | None = None) -> Matrix:
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(1 if j == i else 0) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in zip(red, pivots):
            vec[p] = -r[f]
        basis.append(vec)
    return basis


def in_span(rows: Matrix, vec: list[Fraction]) -> bool:
    """Whether vec lies in the row span of rows."""
    red, pivots = rref(rows)
    v = list(map(Fraction, vec))
    for r, p in zip(red, pivots):
        if v[p] != 0:
            f = v[p]
            v = [x - f * y for x, y in zip(v, r)]
    return all(x == 0 for x in v)


def same_span(a: Matrix, b: Matrix, ncols: int) -> bool:
    """Whether two row sets span the same subspace."""
    ra, _ = rref(a) if a else ([], [])
    rb, _ = rref(b) if b else ([], [])
    return ra == rb or (len(ra) == len(rb) and all(in_span(b, r) for r in ra))


def intersect(a: Matrix, b: Matrix, ncols: int) -> Matrix:
    """Basis of (row span of a) intersect (row span of b).

    Classic kernel trick: pairs (x, y) with x*a = y*b give intersection
    vectors x*a.
    """
    if not a or not b:
        return []
    # Solve for coefficient vectors (x | y) in the nullspace of [a^T | -b^T].
    na, nb = len(a), len(b)
    system = [[a[i][c] for i in range(na)] + [-b[j][c] for j in range(nb)] for c in range(ncols)]
    combos = nullspace(system, na + nb)
    result = []
    for combo in combos:
        vec = [Fraction(0)] * ncols
        for i in range(na):
            if combo[i] != 0:
                vec = [v + combo[i] * x for v, x in zip(vec, a[i])]
        if any(v != 0 for v in vec):
            result.append(vec)
    red, _ = rref(result)
    return red
