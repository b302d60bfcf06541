"""Bipartite graphs on n+n labeled vertices, up to independent side relabeling.

A graph is an n×n biadjacency matrix: row vertices on one side, column
vertices on the other, entry (r, c) = 1 iff the edge {r, c} is present.
Two graphs are isomorphic here iff one maps to the other by permuting row
indices and column indices independently; the two sides are distinguished
and never exchanged (mirror images count separately).

The canonical form of a graph is the lexicographically smallest n²-bit
string over its whole orbit, reading the biadjacency matrix row-major.  We
store that string as an integer with the (0,0) cell in the most significant
bit, so string order and integer order coincide.  For n <= 4 the orbit of a
matrix has at most (n!)² = 576 members, so brute-force minimization over
all permutation pairs is both exact and cheap.

Per graph we also record two characteristics used by the pair-counting
formula: the degree profile (how many vertices, over both sides, have each
degree 0..n) and the multiset of twin-class sizes, where two vertices are
twins iff they have identical neighborhoods; isolated vertices of one side
form a single twin class, and the two sides never share a class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .sperm import SizeLimitError

CATALOG_CAP = 4  # 2^(n²) masks by (n!)² permutation pairs; n=5 is out of reach


@dataclass(frozen=True)
class Bigraph:
    """Biadjacency matrix packed into an integer, MSB-first row-major."""

    n: int
    code: int

    def bit(self, r: int, c: int) -> int:
        """Entry at 0-based row r, column c."""
        n = self.n
        return (self.code >> (n * n - 1 - (r * n + c))) & 1

    def edges(self) -> list[tuple[int, int]]:
        n = self.n
        return [(r, c) for r in range(n) for c in range(n) if self.bit(r, c)]

    def edge_count(self) -> int:
        return self.code.bit_count()

    def code_hex(self) -> str:
        return format_code(self.n, self.code)


def from_edges(n: int, edges) -> Bigraph:
    code = 0
    for r, c in edges:
        if not (0 <= r < n and 0 <= c < n):
            raise ValueError(f"edge ({r}, {c}) out of range for side size {n}")
        code |= 1 << (n * n - 1 - (r * n + c))
    return Bigraph(n, code)


def format_code(n: int, code: int) -> str:
    """Fixed-width hex rendering of an n²-bit canonical code."""
    return format(code, f"0{(n * n + 3) // 4}x")


@dataclass(frozen=True)
class GraphProfile:
    """Degree profile and twin-class sizes of one graph.

    degree_counts[i] = number of vertices (both sides) of degree i, for
    i = 0..n.  twin_class_sizes is the sorted multiset of neighborhood
    equivalence class sizes.
    """

    degree_counts: tuple[int, ...]
    twin_class_sizes: tuple[int, ...]


@dataclass(frozen=True)
class CatalogEntry:
    code: int
    profile: GraphProfile
    orbit_size: int  # labeled graphs in this class; sums to 2^(n²) per catalog


@dataclass(frozen=True)
class GraphCatalog:
    """Isomorphism-class representatives bucketed by edge count k = 0..n²."""

    n: int
    buckets: dict[int, list[CatalogEntry]]

    def sizes(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.buckets.items()}

    def entries(self) -> Iterator[tuple[int, CatalogEntry]]:
        for k in sorted(self.buckets):
            for e in self.buckets[k]:
                yield k, e


def _cell_maps(n: int) -> list[list[int]]:
    # one row-major cell relocation table per (row perm, col perm) pair
    maps = []
    for pr in permutations(range(n)):
        for pc in permutations(range(n)):
            maps.append([pr[r] * n + pc[c] for r in range(n) for c in range(n)])
    return maps


def _apply(code: int, cmap: list[int], n2: int) -> int:
    out = 0
    bits = code
    while bits:
        low = bits & -bits
        p = n2 - low.bit_length()  # MSB-first position
        out |= 1 << (n2 - 1 - cmap[p])
        bits ^= low
    return out


def canonical_code(g: Bigraph) -> int:
    """Minimum code over every independent relabeling of the two sides."""
    n2 = g.n * g.n
    return min(_apply(g.code, m, n2) for m in _cell_maps(g.n))


def profile(g: Bigraph) -> GraphProfile:
    n = g.n
    row_nbrs = [0] * n  # neighborhood of each row vertex, as a column bitmask
    col_nbrs = [0] * n
    for r, c in g.edges():
        row_nbrs[r] |= 1 << c
        col_nbrs[c] |= 1 << r

    degree_counts = [0] * (n + 1)
    for nb in row_nbrs:
        degree_counts[nb.bit_count()] += 1
    for nb in col_nbrs:
        degree_counts[nb.bit_count()] += 1

    # Twin classes are grouped per side: neighborhoods live in the opposite
    # side's index space, so numerically equal masks on different sides must
    # never merge.  Isolated vertices (mask 0) collapse per side as required.
    sizes: list[int] = []
    for nbrs in (row_nbrs, col_nbrs):
        groups: dict[int, int] = {}
        for nb in nbrs:
            groups[nb] = groups.get(nb, 0) + 1
        sizes.extend(groups.values())
    return GraphProfile(tuple(degree_counts), tuple(sorted(sizes)))


def enumerate_catalog(n: int, *, max_n: int = CATALOG_CAP) -> GraphCatalog:
    """Build the full catalog of isomorphism classes for side size n.

    Scans all 2^(n²) biadjacency masks in ascending order; the first unseen
    mask of each orbit is its minimum, i.e. the canonical code.  Buckets are
    therefore sorted by code.  Includes the k=0 bucket (the empty graph).
    """
    if n > max_n:
        raise SizeLimitError(
            f"catalog for side size {n} needs a scan of 2^{n * n} masks; "
            f"pass max_n={n} to force it"
        )
    if n < 1:
        raise ValueError(f"side size must be >= 1, got {n}")
    n2 = n * n
    maps = _cell_maps(n)
    visited = bytearray(1 << n2)
    buckets: dict[int, list[CatalogEntry]] = {k: [] for k in range(n2 + 1)}
    for code in range(1 << n2):
        if visited[code]:
            continue
        orbit = {_apply(code, m, n2) for m in maps}
        for image in orbit:
            visited[image] = 1
        g = Bigraph(n, code)
        buckets[g.edge_count()].append(CatalogEntry(code, profile(g), len(orbit)))
    return GraphCatalog(n, buckets)


def to_dot(g: Bigraph, name: str | None = None) -> str:
    """GraphViz rendering with row vertices r1..rn and column vertices c1..cn."""
    n = g.n
    label = name or f"g_{g.code_hex()}"
    lines = [f'graph "{label}" {{', "  rankdir=LR;"]
    for r in range(n):
        lines.append(f"  r{r + 1} [shape=point];")
    for c in range(n):
        lines.append(f"  c{c + 1} [shape=circle, label=\"\"];")
    for r, c in g.edges():
        lines.append(f"  r{r + 1} -- c{c + 1};")
    lines.append("}")
    return "\n".join(lines)
