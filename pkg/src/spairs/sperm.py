"""S-permutation matrices and their bit-vector occupancy masks.

An S-permutation matrix of block order n is an n²×n² permutation matrix
whose n² blocks of size n×n each contain exactly one 1.  Every such matrix
is described by 2n permutations of [n] = {1, ..., n}: one permutation per
block-row and one per block-column.  Block (s, t) carries its single 1 at
within-block row ``row_perms[s-1][t-1]`` and within-block column
``col_perms[t-1][s-1]`` (all values 1-based).  This parameterization is a
bijection onto the set of S-permutation matrices, so there are exactly
(n!)^(2n) of them and exhaustive generation needs no rejection step.

Cell indexing convention, frozen once for the whole package: global
coordinates are 1-based in the API; occupancy masks are plain integers with
bit index (row-1)*n² + (col-1), i.e. 0-based row-major.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterator, Sequence

Perm = tuple[int, ...]  # images of 1..n, 1-based

ENUMERATION_CAP = 3  # (4!)^8 matrices for n=4 is already out of reach


class SizeLimitError(ValueError):
    """An exhaustive operation was asked to run beyond its scale cap."""


def _checked_perm(p: Sequence[int], n: int, name: str, idx: int) -> Perm:
    t = tuple(p)
    if sorted(t) != list(range(1, n + 1)):
        raise ValueError(f"{name}[{idx}] is not a permutation of 1..{n}: {t!r}")
    return t


@dataclass(frozen=True)
class OnesMask:
    """Occupancy bit vector of an S-permutation matrix.

    ``bits`` has bit (row-1)*n² + (col-1) set for each cell holding a 1;
    popcount is always n².
    """

    n: int
    bits: int

    def popcount(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class SPermMatrix:
    """One n²×n² S-permutation matrix, stored as its 2n block permutations."""

    n: int
    row_perms: tuple[Perm, ...]
    col_perms: tuple[Perm, ...]

    def cells(self) -> list[tuple[int, int]]:
        """Global 1-based (row, col) coordinates of the n² ones, by block."""
        n = self.n
        out = []
        for s in range(1, n + 1):
            for t in range(1, n + 1):
                i = self.row_perms[s - 1][t - 1]
                j = self.col_perms[t - 1][s - 1]
                out.append(((s - 1) * n + i, (t - 1) * n + j))
        return out

    @cached_property
    def mask(self) -> OnesMask:
        n2 = self.n * self.n
        bits = 0
        for r, c in self.cells():
            bits |= 1 << ((r - 1) * n2 + (c - 1))
        return OnesMask(self.n, bits)

    def transpose(self) -> SPermMatrix:
        """Matrix transpose; swaps the roles of row and column permutations."""
        return SPermMatrix(self.n, self.col_perms, self.row_perms)

    def to_dense(self) -> list[list[int]]:
        n2 = self.n * self.n
        rows = [[0] * n2 for _ in range(n2)]
        for r, c in self.cells():
            rows[r - 1][c - 1] = 1
        return rows


def build_matrix(
    n: int,
    row_perms: Sequence[Sequence[int]],
    col_perms: Sequence[Sequence[int]],
) -> SPermMatrix:
    """Validate the 2n block permutations and assemble the matrix.

    Raises ValueError naming the offending entry if any input is not a
    permutation of 1..n.
    """
    if n < 1:
        raise ValueError(f"block order must be >= 1, got {n}")
    if len(row_perms) != n or len(col_perms) != n:
        raise ValueError(
            f"need {n} row and {n} column permutations, "
            f"got {len(row_perms)} and {len(col_perms)}"
        )
    rp = tuple(_checked_perm(p, n, "row_perms", i) for i, p in enumerate(row_perms))
    cp = tuple(_checked_perm(p, n, "col_perms", i) for i, p in enumerate(col_perms))
    return SPermMatrix(n, rp, cp)


def matrix_count(n: int) -> int:
    """Number of S-permutation matrices of block order n: (n!)^(2n)."""
    if n < 1:
        raise ValueError(f"block order must be >= 1, got {n}")
    return math.factorial(n) ** (2 * n)


def enumerate_matrices(n: int, *, max_n: int = ENUMERATION_CAP) -> Iterator[SPermMatrix]:
    """Yield every S-permutation matrix of block order n, exactly once.

    Order is lexicographic over the concatenated permutation words
    (row_perms first, then col_perms).  Refuses n above ``max_n``; pass a
    larger ``max_n`` explicitly to override the cap.
    """
    if n > max_n:
        raise SizeLimitError(
            f"enumerating block order {n} means {matrix_count(n)} matrices; "
            f"pass max_n={n} to force it"
        )
    matrix_count(n)  # range check on n
    words = list(permutations(range(1, n + 1)))  # lexicographic
    for combo in product(words, repeat=2 * n):
        yield SPermMatrix(n, combo[:n], combo[n:])


def ones_mask(a: SPermMatrix) -> OnesMask:
    return a.mask


def is_disjoint(a: OnesMask, b: OnesMask) -> bool:
    """True iff the two matrices share no cell holding a 1 in both."""
    if a.n != b.n:
        raise ValueError(f"mask block orders differ: {a.n} != {b.n}")
    return (a.bits & b.bits) == 0


def mask_is_valid(mask: OnesMask) -> bool:
    """Cell-level check: exactly one 1 per row, per column, and per block.

    Reads only the bit vector, never the permutation parameterization, so
    it serves as an independent validity oracle for generated matrices.
    """
    n = mask.n
    n2 = n * n
    rows = [0] * n2
    cols = [0] * n2
    blocks = [0] * n2
    bits = mask.bits
    while bits:
        low = bits & -bits
        p = low.bit_length() - 1
        r, c = divmod(p, n2)
        rows[r] += 1
        cols[c] += 1
        blocks[(r // n) * n + (c // n)] += 1
        bits ^= low
    return all(v == 1 for v in rows) and all(v == 1 for v in cols) and all(
        v == 1 for v in blocks
    )
