"""Integer kernel and lattice helpers: unimodular row reduction, row-style
Hermite form, and bounded enumeration of lattice points."""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

Vector = list[int]


def kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of {x in Z^ncols : M x = 0} for the matrix M given by `rows`.

    Row-reduces [M^T | I] with unimodular operations; rows whose M^T part
    vanishes yield the kernel. Because only unimodular operations are used,
    the result is a basis of the full (saturated) kernel lattice.
    """
    m = len(rows)
    work = [[rows[i][v] for i in range(m)] + [1 if u == v else 0 for u in range(ncols)]
            for v in range(ncols)]
    pivot_row = 0
    for col in range(m):
        pivot_row = _eliminate_column(work, col, pivot_row)
    kernel = [r[m:] for r in work[pivot_row:]]
    return [list(v) for v in kernel]


def _eliminate_column(work: list[Vector], col: int, start: int) -> int:
    """Clear column `col` below a single pivot at row `start` using gcd steps.

    Returns the next start row (start + 1 if a pivot was found, else start).
    """
    rows = [r for r in range(start, len(work)) if work[r][col] != 0]
    if not rows:
        return start
    while True:
        rows = [r for r in range(start, len(work)) if work[r][col] != 0]
        if len(rows) == 1:
            break
        rows.sort(key=lambda r: abs(work[r][col]))
        small = rows[0]
        for r in rows[1:]:
            q = work[r][col] // work[small][col]
            if q:
                work[r] = [a - q * b for a, b in zip(work[r], work[small])]
    piv = rows[0]
    work[start], work[piv] = work[piv], work[start]
    if work[start][col] < 0:
        work[start] = [-a for a in work[start]]
    return start + 1


def solve_left(rows: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[Vector]:
    """An integer solution v of v M = t for the matrix M given by `rows`,
    or None when no integer solution exists.

    Row-reduces the augmented [M | I] with unimodular operations, then
    back-substitutes the target through the echelon pivots; divisibility
    failures or a nonzero residual mean unsolvability over Z.
    """
    m = len(rows)
    if m == 0:
        return None if any(target) else []
    n = len(rows[0])
    work = [list(rows[i]) + [1 if j == i else 0 for j in range(m)]
            for i in range(m)]
    pivot_row = 0
    pivots: list[tuple[int, int]] = []
    for col in range(n):
        before = pivot_row
        pivot_row = _eliminate_column(work, col, pivot_row)
        if pivot_row > before:
            pivots.append((before, col))
    t = list(target)
    coeffs = [0] * m
    for prow, pcol in pivots:
        p = work[prow][pcol]
        if t[pcol] % p:
            return None
        q = t[pcol] // p
        for j in range(n):
            t[j] -= q * work[prow][j]
        for j in range(m):
            coeffs[j] += q * work[prow][n + j]
    if any(t):
        return None
    return coeffs


def hnf_rows(vectors: Sequence[Sequence[int]]) -> list[Vector]:
    """Row Hermite normal form of the lattice spanned by `vectors`.

    Pivots positive, entries above each pivot reduced into [0, pivot).
    Zero rows are dropped.
    """
    if not vectors:
        return []
    dim = len(vectors[0])
    work = [list(v) for v in vectors]
    pivot_row = 0
    pivots: list[tuple[int, int]] = []  # (row, col)
    for col in range(dim):
        before = pivot_row
        pivot_row = _eliminate_column(work, col, pivot_row)
        if pivot_row > before:
            pivots.append((before, col))
    basis = [r for r in work[:pivot_row]]
    # reduce entries above each pivot
    for prow, pcol in pivots:
        p = basis[prow][pcol]
        for r in range(prow):
            q = basis[r][pcol] // p
            if q:
                basis[r] = [a - q * b for a, b in zip(basis[r], basis[prow])]
    return basis


def bounded_lattice_points(
    basis: Sequence[Sequence[int]], bound: int, include_zero: bool = True
) -> Iterator[Vector]:
    """All lattice points with every coordinate in [-bound, bound].

    The basis is brought to Hermite form first, so pivot coordinates bound
    the combination coefficients exactly and the search recurses over at
    most rank dimensions.
    """
    rows = hnf_rows(basis)
    if not rows:
        if include_zero:
            yield [0] * (len(basis[0]) if basis else 0)
        return
    dim = len(rows[0])
    pivcols = []
    for r in rows:
        pivcols.append(next(j for j, x in enumerate(r) if x != 0))

    def rec(i: int, partial: Vector) -> Iterator[Vector]:
        if i == len(rows):
            if all(-bound <= x <= bound for x in partial):
                yield partial[:]
            return
        p = rows[i][pivcols[i]]
        offset = partial[pivcols[i]]
        # exact integer range for c with -bound <= offset + c*p <= bound
        lo = -((bound + offset) // p)
        hi = (bound - offset) // p
        for c in range(lo, hi + 1):
            nxt = [a + c * b for a, b in zip(partial, rows[i])] if c else partial[:]
            yield from rec(i + 1, nxt)

    for point in rec(0, [0] * dim):
        if include_zero or any(point):
            yield point
