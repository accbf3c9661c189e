"""Exact integer and rational matrix kernel.

Everything here is exact: matrices hold arbitrary-precision Python ints,
symmetrizers are built with ``fractions.Fraction`` and canonicalized to
coprime positive integers, and determinants come from fraction-free
(Bareiss) elimination.  No floating point anywhere; the positivity test
needs the exact sign of every leading principal minor.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence


class NotSkewSymmetrizableError(ValueError):
    """No positive diagonal D with D*B skew-symmetric exists."""


@dataclass(frozen=True)
class SquareIntMatrix:
    """Dense n-by-n matrix of arbitrary-precision integers."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("dimension must be non-negative")
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError("entries must form an n-by-n grid")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "SquareIntMatrix":
        grid = tuple(tuple(int(v) for v in row) for row in rows)
        return cls(len(grid), grid)

    @classmethod
    def identity(cls, n: int) -> "SquareIntMatrix":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def leading_submatrix(self, k: int) -> "SquareIntMatrix":
        """Top-left k-by-k block."""
        return SquareIntMatrix(k, tuple(row[:k] for row in self.entries[:k]))

    def transpose(self) -> "SquareIntMatrix":
        return SquareIntMatrix(self.n, tuple(zip(*self.entries)) if self.n else ())


@dataclass(frozen=True)
class DiagonalRational:
    """Positive diagonal symmetrizer, canonicalized.

    Entries are kept as positive integers with overall gcd 1; any valid
    symmetrizer over the rationals scales to this form.
    """

    d: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v <= 0 for v in self.d):
            raise ValueError("symmetrizer entries must be positive")
        if self.d and gcd(*self.d) != 1:
            raise ValueError("symmetrizer entries must have gcd 1")

    @property
    def n(self) -> int:
        return len(self.d)

    @classmethod
    def from_fractions(cls, values: Sequence[Fraction]) -> "DiagonalRational":
        """Scale positive rationals to coprime positive integers."""
        if not values:
            return cls(())
        if any(v <= 0 for v in values):
            raise ValueError("symmetrizer entries must be positive")
        scale = lcm(*(v.denominator for v in values))
        ints = [int(v * scale) for v in values]
        g = gcd(*ints)
        return cls(tuple(v // g for v in ints))


@dataclass(frozen=True)
class SkewForm:
    """A skew-symmetrizable matrix together with its canonical symmetrizer."""

    B: SquareIntMatrix
    D: DiagonalRational

    def __post_init__(self) -> None:
        if self.B.n != self.D.n:
            raise ValueError("matrix and symmetrizer dimensions differ")
        if not is_skew_symmetric_by_signs(self.B):
            raise NotSkewSymmetrizableError("matrix is not skew-symmetric by signs")
        b, d = self.B.entries, self.D.d
        for i in range(self.B.n):
            for j in range(i + 1, self.B.n):
                if d[i] * b[i][j] != -d[j] * b[j][i]:
                    raise NotSkewSymmetrizableError(
                        f"D*B is not skew-symmetric at ({i}, {j})"
                    )

    @property
    def n(self) -> int:
        return self.B.n


def is_skew_symmetric_by_signs(B: SquareIntMatrix) -> bool:
    """Zero diagonal, and each off-diagonal pair both zero or opposite in sign."""
    b = B.entries
    for i in range(B.n):
        if b[i][i] != 0:
            return False
        for j in range(i + 1, B.n):
            x, y = b[i][j], b[j][i]
            if not ((x == 0 and y == 0) or x * y < 0):
                return False
    return True


def compute_skew_symmetrizer(B: SquareIntMatrix) -> SkewForm:
    """Find the canonical positive diagonal D with D*B skew-symmetric.

    One free scale exists per connected component of the zero/nonzero
    pattern graph; it is fixed by setting d = 1 on the smallest vertex of
    the component and propagating d_j = d_i * (-b_ij / b_ji) breadth-first.
    Every edge is re-verified afterwards, which catches inconsistent
    cycles.  Raises NotSkewSymmetrizableError when no D exists.
    """
    if not is_skew_symmetric_by_signs(B):
        raise NotSkewSymmetrizableError("matrix is not skew-symmetric by signs")
    n, b = B.n, B.entries
    d: list[Optional[Fraction]] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if b[i][j] == 0 or d[j] is not None:
                    continue
                # sign rule guarantees -b_ij / b_ji > 0
                d[j] = d[i] * Fraction(-b[i][j], b[j][i])
                queue.append(j)
    values = [v for v in d if v is not None]
    assert len(values) == n
    for i in range(n):
        for j in range(i + 1, n):
            if values[i] * b[i][j] != -values[j] * b[j][i]:
                raise NotSkewSymmetrizableError(
                    f"inconsistent symmetrizer ratios around a cycle through ({i}, {j})"
                )
    return SkewForm(B, DiagonalRational.from_fractions(values))


def _sparse_rows(M: SquareIntMatrix) -> list[dict[int, int]]:
    return [{j: v for j, v in enumerate(row) if v} for row in M.entries]


def _bareiss_minors(
    M: SquareIntMatrix, stop_nonpositive: bool = False
) -> tuple[list[int], bool]:
    """Leading principal minors by fraction-free elimination.

    Rows are kept as sparse {column: value} dicts, so banded input costs
    O(n * nonzeros) instead of O(n^3).  After step k the (k+1)-th diagonal
    entry equals the (k+1)-th leading minor; each division below is exact.

    Returns (minors, blocked).  ``blocked`` is True when elimination had to
    stop before producing all n minors: either a zero pivot (the next step
    would divide by it) or, with ``stop_nonpositive``, a minor <= 0.
    """
    n = M.n
    rows = _sparse_rows(M)
    minors: list[int] = []
    prev = 1
    for k in range(n):
        p = rows[k].get(k, 0)
        minors.append(p)
        if stop_nonpositive and p <= 0:
            return minors, True
        if k == n - 1:
            break
        if p == 0:
            return minors, True
        pivot_row = [(j, w) for j, w in rows[k].items() if j > k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri.pop(k, 0)
            if aik == 0:
                if ri:
                    rows[i] = {j: v * p // prev for j, v in ri.items()}
                continue
            merged = {j: v * p for j, v in ri.items()}
            for j, w in pivot_row:
                val = merged.get(j, 0) - aik * w
                if val:
                    merged[j] = val
                elif j in merged:
                    del merged[j]
            rows[i] = {j: v // prev for j, v in merged.items()}
        prev = p
    return minors, False


def determinant(M: SquareIntMatrix) -> int:
    """Exact determinant: fraction-free elimination with row pivoting."""
    n = M.n
    if n == 0:
        return 1
    rows = _sparse_rows(M)
    sign = 1
    prev = 1
    for k in range(n):
        if rows[k].get(k, 0) == 0:
            for i in range(k + 1, n):
                if rows[i].get(k, 0) != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        p = rows[k][k]
        if k == n - 1:
            return sign * p
        pivot_row = [(j, w) for j, w in rows[k].items() if j > k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri.pop(k, 0)
            if aik == 0:
                if ri:
                    rows[i] = {j: v * p // prev for j, v in ri.items()}
                continue
            merged = {j: v * p for j, v in ri.items()}
            for j, w in pivot_row:
                val = merged.get(j, 0) - aik * w
                if val:
                    merged[j] = val
                elif j in merged:
                    del merged[j]
            rows[i] = {j: v // prev for j, v in merged.items()}
        prev = p
    raise AssertionError("unreachable")


def leading_principal_minors(M: SquareIntMatrix) -> list[int]:
    """det(M[:k, :k]) for k = 1..n, exactly.

    The single elimination pass covers everything up to and including the
    first zero minor; any minors past a zero pivot are recomputed
    independently per block (rare, and only hit by singular leading
    blocks).
    """
    minors, blocked = _bareiss_minors(M)
    if blocked:
        while len(minors) < M.n:
            minors.append(determinant(M.leading_submatrix(len(minors) + 1)))
    return minors


def _dense_first_nonpositive(rows: Sequence[Sequence[int]]) -> Optional[tuple[int, int]]:
    """Dense variant of the early-exit minor scan; cheap for small matrices."""
    n = len(rows)
    a = [list(r) for r in rows]
    prev = 1
    for k in range(n):
        p = a[k][k]
        if p <= 0:
            return k + 1, p
        if k == n - 1:
            break
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            if aik:
                for j in range(k + 1, n):
                    row_i[j] = (p * row_i[j] - aik * row_k[j]) // prev
            elif prev != p:
                for j in range(k + 1, n):
                    if row_i[j]:
                        row_i[j] = p * row_i[j] // prev
        prev = p
    return None


def first_nonpositive_minor(M: SquareIntMatrix) -> Optional[tuple[int, int]]:
    """(k, det) for the smallest k with det(M[:k, :k]) <= 0, else None.

    k counts block size, so it is 1-based by nature.
    """
    if M.n <= 32:
        return _dense_first_nonpositive(M.entries)
    minors, blocked = _bareiss_minors(M, stop_nonpositive=True)
    if blocked and minors[-1] <= 0:
        return len(minors), minors[-1]
    return None


def is_positive(M: SquareIntMatrix) -> bool:
    """Sylvester criterion: every leading principal minor strictly positive.

    Valid for symmetrizable matrices, not just symmetric ones; the empty
    matrix is vacuously positive.
    """
    return first_nonpositive_minor(M) is None
