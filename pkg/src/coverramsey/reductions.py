"""Executable reductions from colored covering hypergraphs to colored
complete graphs.

Two routes are provided.  The scatter/trace route samples a vertex subset
S meeting every hyperedge in at most 2 points; the trace of the host on S
is then a complete graph whose pairs inherit colors from distinct
hyperedges, so monochromatic subgraphs lift to Berge certificates.  The
product route colors every pair of the full vertex set by (host color of a
chosen containing hyperedge, label of the pair inside that hyperedge),
giving a 2*C(k,2)-colored complete graph whose monochromatic subgraphs
also lift, because two pairs inside one hyperedge always carry different
labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .berge import BergeCertificate, find_berge, verify_certificate
from .hypergraph import Hypergraph, check_coloring


@dataclass(frozen=True)
class ScatterSample:
    """A sampled vertex subset with every hyperedge intersection <= 2."""

    subset: tuple
    attempts: int
    seed: int


def _covered_triples(hg):
    """All 3-element vertex sets contained in some hyperedge."""
    triples = set()
    for edge in hg.edges:
        triples.update(combinations(edge, 3))
    return triples


def _is_scattered(subset, triples):
    return not any(t in triples for t in combinations(subset, 3))


def sample_scattered_subset(hg, s, seed=0, max_attempts=1000):
    """Rejection-sample a uniform s-subset until every hyperedge meets it
    in at most 2 vertices; None after max_attempts rejections."""
    if not hg.is_covering():
        raise ValueError("host must be covering")
    if not 0 <= s <= hg.n:
        raise ValueError(f"subset size {s} outside 0..{hg.n}")
    rng = random.Random(seed)
    triples = _covered_triples(hg)
    for attempt in range(1, max_attempts + 1):
        subset = tuple(sorted(rng.sample(range(1, hg.n + 1), s)))
        if _is_scattered(subset, triples):
            return ScatterSample(subset, attempt, seed)
    return None


def scatter_rejection_trials(hg, s, trials, seed=0):
    """Draw `trials` independent uniform s-subsets and count how many are
    rejected by the scatteredness test.  Used to compare the observed
    rejection rate against the analytic union bound."""
    if not hg.is_covering():
        raise ValueError("host must be covering")
    rng = random.Random(seed)
    triples = _covered_triples(hg)
    rejected = 0
    for _ in range(trials):
        subset = rng.sample(range(1, hg.n + 1), s)
        if not _is_scattered(sorted(subset), triples):
            rejected += 1
    return rejected, trials


def scatter_failure_bound(n, s, k):
    """Union bound 3 C(k,3) C(s,3) / (n-2) on the probability that some
    hyperedge meets a uniform s-subset in 3+ points, as an exact rational."""
    if n < 3:
        raise ValueError("requires n >= 3")
    return Fraction(3 * comb(k, 3) * comb(s, 3), n - 2)


@dataclass(frozen=True)
class TraceColoring:
    """Complete 2-colored graph on a scattered subset, with provenance:
    each pair's color comes from the unique-intersection hyperedge chosen
    for it, and distinct pairs always use distinct hyperedges."""

    subset: tuple
    pair_color: dict
    provenance: dict

    def pairs(self):
        return combinations(self.subset, 2)


def trace_coloring(hg, coloring, sample):
    """Color each pair of the scattered subset by the color of a hyperedge
    whose intersection with the subset is exactly that pair.

    The chosen hyperedge is the canonically smallest admissible one.
    Hyperedges meeting the subset in fewer than 2 vertices contribute
    nothing.  Scatteredness makes the pair -> hyperedge map injective.
    """
    check_coloring(hg, coloring)
    if coloring.palette_size != 2:
        raise ValueError("trace expects a 2-colored host")
    sset = set(sample.subset)
    if any(len(sset.intersection(e)) > 2 for e in hg.edges):
        raise ValueError("sample is not scattered in this host")
    pair_edges = hg.pair_edges()
    pair_color = {}
    provenance = {}
    for pair in combinations(sample.subset, 2):
        # any edge containing both endpoints meets the scattered subset in
        # exactly this pair, so the first containing edge is admissible
        cand = pair_edges.get(pair, ())
        assert cand, \
            f"no admissible hyperedge for pair {pair} (host not covering?)"
        choice = cand[0]
        pair_color[pair] = coloring.colors[choice]
        provenance[pair] = choice
    images = list(provenance.values())
    assert len(set(images)) == len(images), "trace provenance not injective"
    return TraceColoring(sample.subset, pair_color, provenance)


@dataclass(frozen=True)
class ProductReduction:
    """2*C(k,2)-colored complete graph on the host's vertex set.  The color
    of pair uv encodes (host color of h(uv), label of uv inside h(uv));
    labels enumerate each hyperedge's pairs lexicographically from 1."""

    n: int
    palette_size: int
    label_count: int
    pair_color: dict
    provenance: dict

    def color_parts(self, color_id):
        """Decode a product color id into (host color, label)."""
        return color_id // self.label_count, color_id % self.label_count + 1


def multicolor_product_reduction(hg, coloring):
    """Deterministic product reduction: h(uv) is the canonically smallest
    hyperedge containing uv; the product palette has 2*C(k,2) color ids
    where k is the largest permitted edge size."""
    check_coloring(hg, coloring)
    if coloring.palette_size != 2:
        raise ValueError("product reduction expects a 2-colored host")
    if not hg.is_covering():
        raise ValueError("host must be covering")
    k = hg.max_edge_size
    label_count = comb(k, 2)
    edge_labels = [
        {pair: r + 1 for r, pair in enumerate(combinations(edge, 2))}
        for edge in hg.edges
    ]
    pair_color = {}
    provenance = {}
    pair_edges = hg.pair_edges()
    for pair in combinations(range(1, hg.n + 1), 2):
        i = pair_edges[pair][0]
        label = edge_labels[i][pair]
        pair_color[pair] = coloring.colors[i] * label_count + (label - 1)
        provenance[pair] = (i, label)
    return ProductReduction(hg.n, 2 * label_count, label_count,
                            pair_color, provenance)


def _lift(hg, g, embedding, pair_to_edge, coloring=None, color=None):
    vmap = dict(embedding)
    emap = {}
    for ei, (u, v) in enumerate(g.edges):
        a, b = vmap[u], vmap[v]
        emap[ei] = pair_to_edge[(min(a, b), max(a, b))]
    images = list(emap.values())
    assert len(set(images)) == len(images), \
        "provenance maps two target edges to one hyperedge"
    cert = BergeCertificate.from_dicts(vmap, emap)
    result = verify_certificate(hg, g, cert, coloring, color)
    assert result, f"lifted certificate failed verification: {result.reason}"
    return cert


def lift_mono_subgraph(reduction, hg, g, embedding, coloring=None):
    """Lift a monochromatic (in the product palette) embedded copy of the
    target graph to a Berge certificate whose hyperedges all carry the
    host color encoded in the shared product color.

    When the host coloring is supplied, the certificate is additionally
    verified against that host color.
    """
    vmap = dict(embedding)
    colors = set()
    for u, v in g.edges:
        a, b = vmap[u], vmap[v]
        colors.add(reduction.pair_color[(min(a, b), max(a, b))])
    if len(colors) > 1:
        raise ValueError(f"embedding is not monochromatic: colors {colors}")
    host_color = None
    if coloring is not None and colors:
        host_color, _ = reduction.color_parts(next(iter(colors)))
    pair_to_edge = {p: ie for p, (ie, _) in reduction.provenance.items()}
    return _lift(hg, g, embedding, pair_to_edge, coloring, host_color)


def lift_trace_subgraph(trace, hg, g, embedding, coloring=None):
    """Lift a monochromatic embedded copy found in a trace coloring to a
    Berge certificate via the trace provenance."""
    vmap = dict(embedding)
    colors = set()
    for u, v in g.edges:
        a, b = vmap[u], vmap[v]
        colors.add(trace.pair_color[(min(a, b), max(a, b))])
    if len(colors) > 1:
        raise ValueError(f"embedding is not monochromatic: colors {colors}")
    mono = colors.pop() if colors else None
    return _lift(hg, g, embedding, trace.provenance, coloring, mono)


def find_mono_subgraph(pair_color, n, g):
    """Search a pair-colored complete(ish) graph for a monochromatic copy
    of the target; returns (color, embedding dict) or None.  Colors are
    scanned in ascending order."""
    by_color = {}
    for pair, c in pair_color.items():
        by_color.setdefault(c, []).append(pair)
    for c in sorted(by_color):
        pairs = by_color[c]
        if len(pairs) < g.num_edges:
            continue
        host = Hypergraph(n, pairs, uniformity={2})
        cert = find_berge(host, g)
        if cert is not None:
            vmap = cert.vertex_dict()
            return c, vmap
    return None
