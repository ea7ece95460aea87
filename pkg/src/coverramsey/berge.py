"""Berge subhypergraph detection and certificates.

A hypergraph contains a Berge copy of a graph G when there is an injection
of V(G) into the hypergraph vertices together with an injection of E(G)
into the hyperedges such that each graph edge is contained in its image
hyperedge.  Detection backtracks over the vertex injection and delegates
the edge injection to a bipartite matching (a system of distinct
representatives over the candidate hyperedges of each mapped pair).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .hypergraph import check_coloring

NOT_INJECTIVE_VERTICES = "NOT_INJECTIVE_VERTICES"
NOT_INJECTIVE_EDGES = "NOT_INJECTIVE_EDGES"
CONTAINMENT_FAIL = "CONTAINMENT_FAIL"
COLOR_FAIL = "COLOR_FAIL"


class TargetGraph:
    """Simple graph target on vertices 1..nv; edges in canonical order."""

    __slots__ = ("nv", "edges")

    def __init__(self, nv, edges):
        if nv < 0:
            raise ValueError("vertex count must be >= 0")
        canon = []
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            p = (min(u, v), max(u, v))
            if p[0] < 1 or p[1] > nv:
                raise ValueError(f"edge {p} out of vertex range 1..{nv}")
            if p in seen:
                raise ValueError(f"duplicate edge {p}")
            seen.add(p)
            canon.append(p)
        canon.sort()
        object.__setattr__(self, "nv", int(nv))
        object.__setattr__(self, "edges", tuple(canon))

    def __setattr__(self, name, value):
        raise AttributeError("TargetGraph is immutable")

    def __reduce__(self):
        return (TargetGraph, (self.nv, self.edges))

    def __eq__(self, other):
        if not isinstance(other, TargetGraph):
            return NotImplemented
        return self.nv == other.nv and self.edges == other.edges

    def __hash__(self):
        return hash((self.nv, self.edges))

    def __repr__(self):
        return f"TargetGraph(nv={self.nv}, edges={list(self.edges)})"

    @property
    def num_edges(self):
        return len(self.edges)

    def degrees(self):
        deg = [0] * (self.nv + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def complete_graph(t):
    return TargetGraph(t, combinations(range(1, t + 1), 2))


def path_graph(nv):
    """Path on nv vertices (nv - 1 edges)."""
    return TargetGraph(nv, ((i, i + 1) for i in range(1, nv)))


def cycle_graph(nv):
    if nv < 3:
        raise ValueError("cycles need at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, nv)] + [(1, nv)]
    return TargetGraph(nv, edges)


def format_target(g):
    lines = [f"{g.nv} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_target(text):
    rows = [ln for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty target graph text")
    nv, ne = (int(x) for x in rows[0].split())
    if len(rows) - 1 != ne:
        raise ValueError(f"expected {ne} edge lines, found {len(rows) - 1}")
    return TargetGraph(nv, (tuple(int(x) for x in ln.split()) for ln in rows[1:]))


@dataclass(frozen=True)
class BergeCertificate:
    """Witness of a Berge-G copy: `vertex_map` sends graph vertex -> host
    vertex, `edge_map` sends graph edge index -> hyperedge index.  Both are
    stored as sorted (key, value) tuples."""

    vertex_map: tuple
    edge_map: tuple

    @classmethod
    def from_dicts(cls, vertex_map, edge_map):
        return cls(tuple(sorted(vertex_map.items())),
                   tuple(sorted(edge_map.items())))

    def vertex_dict(self):
        return dict(self.vertex_map)

    def edge_dict(self):
        return dict(self.edge_map)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def verify_certificate(hg, g, cert, coloring=None, color=None):
    """Check a Berge certificate against its host and target.

    Returns a truthy VerifyResult on success; on failure the result carries
    one of the reason codes NOT_INJECTIVE_VERTICES, NOT_INJECTIVE_EDGES,
    CONTAINMENT_FAIL, COLOR_FAIL.
    """
    vmap = cert.vertex_dict()
    emap = cert.edge_dict()
    if (set(vmap) != set(range(1, g.nv + 1))
            or len(set(vmap.values())) != g.nv
            or any(not 1 <= w <= hg.n for w in vmap.values())):
        return VerifyResult(False, NOT_INJECTIVE_VERTICES)
    if (set(emap) != set(range(g.num_edges))
            or len(set(emap.values())) != g.num_edges
            or any(not 0 <= i < hg.num_edges for i in emap.values())):
        return VerifyResult(False, NOT_INJECTIVE_EDGES)
    for ei, (u, v) in enumerate(g.edges):
        host_edge = set(hg.edges[emap[ei]])
        if not {vmap[u], vmap[v]} <= host_edge:
            return VerifyResult(False, CONTAINMENT_FAIL)
    if coloring is not None and color is not None:
        check_coloring(hg, coloring)
        if any(coloring.colors[i] != color for i in emap.values()):
            return VerifyResult(False, COLOR_FAIL)
    return VerifyResult(True)


def _max_matching(candidates):
    """Kuhn's augmenting-path maximum matching.

    `candidates` is a list of candidate-hyperedge lists, one per graph edge;
    returns (size, match) where match[i] is the hyperedge chosen for graph
    edge i (or None).
    """
    match_of_edge = [None] * len(candidates)
    owner = {}

    def augment(i, visited):
        for h in candidates[i]:
            if h in visited:
                continue
            visited.add(h)
            j = owner.get(h)
            if j is None or augment(j, visited):
                owner[h] = i
                match_of_edge[i] = h
                return True
        return False

    size = 0
    for i in range(len(candidates)):
        if augment(i, set()):
            size += 1
    return size, match_of_edge


def matching_for_assignment(hg, g, vertex_map, allowed=None):
    """Given an injective vertex map, pick distinct containing hyperedges
    for all graph edges, or return None if no such injection exists.

    `allowed`, when given, restricts the usable hyperedge indices (e.g. to
    one color class).
    """
    vmap = dict(vertex_map)
    if len(set(vmap.values())) != len(vmap):
        raise ValueError("vertex_map is not injective")
    pair_edges = hg.pair_edges()
    candidates = []
    for u, v in g.edges:
        a, b = vmap[u], vmap[v]
        cand = pair_edges.get((min(a, b), max(a, b)), ())
        if allowed is not None:
            cand = [i for i in cand if i in allowed]
        if not cand:
            return None
        candidates.append(list(cand))
    size, match = _max_matching(candidates)
    if size != g.num_edges:
        return None
    return {i: match[i] for i in range(g.num_edges)}


def find_berge(hg, g, coloring=None, color=None):
    """Search for a Berge-G certificate in the host, optionally restricted
    to hyperedges of one color.

    Backtracks over vertex images (target vertices in descending degree
    order, host vertices ascending), pruning whenever a fully-mapped graph
    edge has no remaining candidate hyperedge or the partial candidate
    lists fail a matching (Hall) test.  Returns a verified certificate or
    None when no copy exists.
    """
    allowed = None
    if coloring is not None and color is not None:
        check_coloring(hg, coloring)
        allowed = frozenset(coloring.indices_of(color))
        if len(allowed) < g.num_edges:
            return None
    if g.num_edges > hg.num_edges or g.nv > hg.n:
        return None

    deg = g.degrees()
    order = sorted(range(1, g.nv + 1), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    # incident[i]: edges whose second endpoint is placed at position i
    incident = [[] for _ in range(g.nv)]
    for ei, (u, v) in enumerate(g.edges):
        later = u if pos[u] > pos[v] else v
        incident[pos[later]].append(ei)
    pair_edges = hg.pair_edges()

    vmap = {}
    used_hosts = set()
    cand_lists = {}
    found = {}

    def assign(i):
        if i == g.nv:
            emap = matching_for_assignment(hg, g, vmap, allowed)
            if emap is None:
                return False
            found["emap"] = emap
            return True
        gv = order[i]
        for hv in range(1, hg.n + 1):
            if hv in used_hosts:
                continue
            vmap[gv] = hv
            used_hosts.add(hv)
            ok = True
            added = []
            for ei in incident[i]:
                u, v = g.edges[ei]
                a, b = vmap[u], vmap[v]
                cand = pair_edges.get((min(a, b), max(a, b)), ())
                if allowed is not None:
                    cand = [h for h in cand if h in allowed]
                if not cand:
                    ok = False
                    break
                cand_lists[ei] = list(cand)
                added.append(ei)
            if ok and added:
                lists = [cand_lists[e] for e in sorted(cand_lists)]
                size, _ = _max_matching(lists)
                ok = size == len(lists)
            if ok and assign(i + 1):
                return True
            for ei in added:
                cand_lists.pop(ei, None)
            del vmap[gv]
            used_hosts.discard(hv)
        return False

    if g.num_edges == 0:
        # vacuous edge map; any injective vertex placement works
        vm = {v: v for v in range(1, g.nv + 1)}
        return BergeCertificate.from_dicts(vm, {})

    if assign(0):
        cert = BergeCertificate.from_dicts(dict(vmap), found["emap"])
        assert verify_certificate(hg, g, cert, coloring, color)
        return cert
    return None


def contains_mono_berge(hg, coloring, g1, g2):
    """First monochromatic Berge target in a 2-colored host: a blue (color
    0) Berge-G1 if one exists, else a red (color 1) Berge-G2, else None."""
    if coloring.palette_size != 2:
        raise ValueError("contains_mono_berge needs a 2-color palette")
    check_coloring(hg, coloring)
    cert = find_berge(hg, g1, coloring, 0)
    if cert is not None:
        return (0, cert)
    cert = find_berge(hg, g2, coloring, 1)
    if cert is not None:
        return (1, cert)
    return None
