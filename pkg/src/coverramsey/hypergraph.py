"""Immutable hypergraphs with mixed edge sizes, plus the structural
primitives everything else is built on: 2-shadow, covering test, co-degree,
and edge-minimal covering reduction.

Vertices are the integers 1..n.  Edges are stored canonically (each edge an
ascending tuple, the edge list sorted lexicographically), so equality and
serialization are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class Hypergraph:
    """A hypergraph on vertices 1..n with a fixed set of allowed edge sizes.

    Edges are deduplicated, normalized to ascending tuples and kept in
    lexicographic order; instances are immutable by convention and safe to
    share across threads.
    """

    __slots__ = ("n", "edges", "uniformity", "_pair_edges", "_hash")

    def __init__(self, n, edges, uniformity=None):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        canon = []
        seen = set()
        for e in edges:
            t = tuple(sorted(set(e)))
            if len(t) != len(tuple(e)):
                raise ValueError(f"edge {tuple(e)} has repeated vertices")
            if len(t) < 2:
                raise ValueError(f"edge {t} has cardinality < 2")
            if t[0] < 1 or t[-1] > n:
                raise ValueError(f"edge {t} out of vertex range 1..{n}")
            if t in seen:
                raise ValueError(f"duplicate edge {t}")
            seen.add(t)
            canon.append(t)
        canon.sort()
        sizes = {len(e) for e in canon}
        if uniformity is None:
            uniformity = sizes if sizes else {2}
        uniformity = frozenset(int(r) for r in uniformity)
        if any(r < 2 for r in uniformity):
            raise ValueError(f"uniformity set {set(uniformity)} contains sizes < 2")
        bad = sizes - uniformity
        if bad:
            raise ValueError(f"edge sizes {sorted(bad)} not in uniformity set "
                             f"{sorted(uniformity)}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "uniformity", uniformity)
        object.__setattr__(self, "_pair_edges", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    def __reduce__(self):
        return (Hypergraph, (self.n, self.edges, self.uniformity))

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges
                and self.uniformity == other.uniformity)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.n, self.edges, self.uniformity)))
        return self._hash

    def __repr__(self):
        return (f"Hypergraph(n={self.n}, m={len(self.edges)}, "
                f"R={sorted(self.uniformity)})")

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def max_edge_size(self):
        """Largest permitted edge cardinality (k in the uniformity set)."""
        return max(self.uniformity)

    def pair_edges(self):
        """Map each vertex pair (u, v), u < v, to the sorted tuple of indices
        of edges containing both endpoints.  Computed once and cached."""
        if self._pair_edges is None:
            idx = {}
            for i, e in enumerate(self.edges):
                for p in combinations(e, 2):
                    idx.setdefault(p, []).append(i)
            object.__setattr__(
                self, "_pair_edges", {p: tuple(v) for p, v in idx.items()})
        return self._pair_edges

    def shadow(self):
        """2-shadow: the simple graph whose edges are exactly the vertex
        pairs covered by some hyperedge."""
        return ShadowGraph(self.n, frozenset(self.pair_edges()))

    def is_covering(self):
        """True iff every vertex pair lies in some hyperedge (equivalently
        the shadow is complete, equivalently the minimum co-degree is >= 1)."""
        return len(self.pair_edges()) == self.n * (self.n - 1) // 2

    def codegree(self, vertex_set):
        """Number of hyperedges containing every vertex of `vertex_set`."""
        s = set(vertex_set)
        if not s <= set(range(1, self.n + 1)):
            raise ValueError(f"vertex set {sorted(s)} outside 1..{self.n}")
        if len(s) == 2:
            return len(self.pair_edges().get(tuple(sorted(s)), ()))
        return sum(1 for e in self.edges if s <= set(e))

    def min_codegree(self):
        """Minimum co-degree over all vertex pairs (0 if some pair is
        uncovered, or if n < 2)."""
        pairs = self.pair_edges()
        total = self.n * (self.n - 1) // 2
        if len(pairs) < total:
            return 0
        return min((len(v) for v in pairs.values()), default=0)


@dataclass(frozen=True)
class ShadowGraph:
    """Symmetric pair set over vertices 1..n."""

    n: int
    pairs: frozenset

    def is_complete(self):
        return len(self.pairs) == self.n * (self.n - 1) // 2

    def has_pair(self, u, v):
        return (min(u, v), max(u, v)) in self.pairs


@dataclass(frozen=True)
class EdgeColoring:
    """Assignment of a color id to each hyperedge index, in canonical edge
    order.  Color ids are 0-based; blue = 0 and red = 1 by convention."""

    colors: tuple
    palette_size: int = 2

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.palette_size < 1:
            raise ValueError("palette_size must be >= 1")
        for c in self.colors:
            if not 0 <= c < self.palette_size:
                raise ValueError(
                    f"color {c} outside palette 0..{self.palette_size - 1}")

    def __len__(self):
        return len(self.colors)

    def indices_of(self, color):
        return tuple(i for i, c in enumerate(self.colors) if c == color)


def check_coloring(hg, coloring):
    """Raise unless `coloring` has exactly one color per edge of `hg`."""
    if len(coloring) != hg.num_edges:
        raise ValueError(f"coloring length {len(coloring)} != edge count "
                         f"{hg.num_edges}")


def complete_host(n):
    """K_n as a 2-uniform covering hypergraph (every pair is its own edge)."""
    return Hypergraph(n, combinations(range(1, n + 1), 2), uniformity={2})


def minimal_covering_subhypergraph(hg):
    """Strip removable edges until the covering property is edge-minimal.

    Edges are tried for removal in reverse canonical order; an edge is kept
    only if it is the unique cover of some pair.  The result is covering and
    every remaining edge has a private pair, so no single edge can be
    dropped.  Deterministic but not necessarily minimum-cardinality.
    """
    if not hg.is_covering():
        raise ValueError("input hypergraph is not covering")
    cover_count = {p: len(es) for p, es in hg.pair_edges().items()}
    keep = [True] * hg.num_edges
    for i in range(hg.num_edges - 1, -1, -1):
        pairs = list(combinations(hg.edges[i], 2))
        if all(cover_count[p] > 1 for p in pairs):
            keep[i] = False
            for p in pairs:
                cover_count[p] -= 1
    return Hypergraph(hg.n, (e for i, e in enumerate(hg.edges) if keep[i]),
                      hg.uniformity)


# -- text formats -----------------------------------------------------------
#
# Hypergraph file: line 1 is "<n> <m>", then one line per edge with the
# ascending vertex ids separated by single spaces.  Lines starting with '#'
# are ignored.  A trailing newline is required.  Edges are canonicalized on
# load; files written by this package are always in canonical order.
#
# Coloring sidecar: one non-comment line of m digit characters ('0'..'9'),
# giving the color of each edge in canonical edge order.


def format_hypergraph(hg):
    lines = [f"{hg.n} {hg.num_edges}"]
    lines.extend(" ".join(str(v) for v in e) for e in hg.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text, uniformity=None):
    if not text.endswith("\n"):
        raise ValueError("hypergraph text must end with a newline")
    rows = [ln for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty hypergraph text")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be '<n> <m>', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = [tuple(int(v) for v in ln.split()) for ln in rows[1:]]
    for e in edges:
        if list(e) != sorted(set(e)):
            raise ValueError(f"edge line {e} is not strictly ascending")
    return Hypergraph(n, edges, uniformity)


def format_coloring(coloring):
    if any(c > 9 for c in coloring.colors):
        raise ValueError("sidecar format only supports color ids 0..9")
    return "".join(str(c) for c in coloring.colors) + "\n"


def parse_coloring(text, num_edges, palette_size=2):
    rows = [ln for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]
    if len(rows) != 1:
        raise ValueError("coloring sidecar must contain exactly one "
                         "non-comment line")
    digits = rows[0].strip()
    if not digits.isdigit():
        raise ValueError(f"coloring line {digits!r} has non-digit characters")
    if len(digits) != num_edges:
        raise ValueError(f"coloring length {len(digits)} != edge count "
                         f"{num_edges}")
    return EdgeColoring(tuple(int(ch) for ch in digits), palette_size)
