"""Independent brute-force routes used to validate the package's fast paths.

Everything here is deliberately naive: enumeration and textbook linear
algebra over exact rationals, sharing no code with the implementations
under test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from classconv.partitions import Partition, enumerate_partitions


def partitions_brute(r: int) -> set[tuple[int, ...]]:
    """All partitions of r by unordered recursive splitting."""
    if r == 0:
        return {()}
    out = set()
    for first in range(1, r + 1):
        for rest in partitions_brute(r - first):
            out.add(tuple(sorted((first,) + rest, reverse=True)))
    return out


def syt_count_brute(lam: Partition) -> int:
    """Count standard Young tableaux by checking every arrangement."""
    n = lam.size()
    rows = lam.parts
    count = 0
    for perm in permutations(range(1, n + 1)):
        grid = []
        i = 0
        for ln in rows:
            grid.append(perm[i:i + ln])
            i += ln
        ok = all(row[j] < row[j + 1] for row in grid for j in range(len(row) - 1))
        if ok:
            ok = all(grid[i][j] < grid[i + 1][j]
                     for i in range(len(grid) - 1)
                     for j in range(len(grid[i + 1])))
        if ok:
            count += 1
    return count


def skew_syt_count_brute(lam: Partition, mu: Partition) -> int:
    """Count standard tableaux of the skew shape by brute placement."""
    if not lam.contains(mu):
        return 0
    cells = [(i, j) for i, ln in enumerate(lam.parts)
             for j in range(ln) if j >= (mu.parts[i] if i < mu.length() else 0)]
    k = len(cells)
    count = 0
    for perm in permutations(range(1, k + 1)):
        grid = dict(zip(cells, perm))
        ok = True
        for (i, j), v in grid.items():
            if (i, j + 1) in grid and grid[(i, j + 1)] < v:
                ok = False
                break
            if (i + 1, j) in grid and grid[(i + 1, j)] < v:
                ok = False
                break
        if ok:
            count += 1
    return count


def _perm_character(lam: Partition, rho: Partition) -> int:
    """Character of the Young permutation module: count row assignments of
    the cycles of a permutation of type rho filling each row of lam exactly."""
    cycles = list(rho.parts)
    caps = list(lam.parts)

    def place(i: int) -> int:
        if i == len(cycles):
            return 1 if all(c == 0 for c in caps) else 0
        total = 0
        seen = set()
        for r in range(len(caps)):
            if caps[r] >= cycles[i]:
                caps[r] -= cycles[i]
                total += place(i + 1)
                caps[r] += cycles[i]
        return total

    return place(0)


def character_table_bruteforce(n: int) -> dict[tuple[Partition, Partition], int]:
    """Irreducible characters by orthogonalizing permutation characters.

    Permutation characters expand over irreducibles with unitriangular
    Kostka coefficients in dominance order, so processing labels in
    reverse-lexicographic order and subtracting projections recovers each
    irreducible exactly.
    """
    labels = enumerate_partitions(n)

    def inner(f: dict, g: dict) -> Fraction:
        return sum((Fraction(f[r] * g[r], r.centralizer_size()) for r in labels),
                   Fraction(0))

    table: dict[tuple[Partition, Partition], int] = {}
    done: list[tuple[Partition, dict]] = []
    for lam in labels:
        row = {rho: Fraction(_perm_character(lam, rho)) for rho in labels}
        for _, chi in done:
            coeff = inner(row, chi)
            if coeff:
                row = {rho: row[rho] - coeff * chi[rho] for rho in labels}
        norm = inner(row, row)
        assert norm == 1, f"orthogonalization failed at {lam}: norm {norm}"
        for rho in labels:
            assert row[rho].denominator == 1
            table[(lam, rho)] = row[rho].numerator
        done.append((lam, row))
    return table


def rank_over_Q(rows: list[list[Fraction]]) -> int:
    """Row rank by fraction-exact Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                factor = mat[i][col] / pv
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank
