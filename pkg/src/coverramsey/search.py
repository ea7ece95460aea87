"""Coloring-space search: exhaustive unavoidability verdicts over all
2-colorings of a host, exact small classical Ramsey numbers (2-uniform
hosts), monochromatic-clique bad-event scans on linear design hosts, a
Moser-Tardos resampler that constructs good colorings, and verified
lower-bound certificates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .berge import complete_graph, contains_mono_berge, find_berge
from .hypergraph import (EdgeColoring, check_coloring, complete_host,
                         format_coloring, format_hypergraph)

UNAVOIDABLE = "UNAVOIDABLE"
AVOIDABLE = "AVOIDABLE"

DEFAULT_COLORING_LIMIT = 2 ** 20


class LimitExceededError(RuntimeError):
    """Coloring space larger than the configured exhaustion limit."""


class VerificationFailure(RuntimeError):
    """A claimed good coloring contains a monochromatic Berge target."""

    def __init__(self, message, color=None, certificate=None):
        super().__init__(message)
        self.color = color
        self.certificate = certificate


@dataclass(frozen=True)
class UnavoidabilityResult:
    verdict: str
    witness: EdgeColoring | None
    colorings_examined: int
    shard_spec: str | None = None


def unavoidable(hg, g1, g2, shard=None, limit=DEFAULT_COLORING_LIMIT):
    """Decide whether every 2-coloring of the host contains a blue Berge-G1
    or a red Berge-G2.

    Iterates colorings in Gray-code order; the first coloring avoiding both
    targets becomes the AVOIDABLE witness.  When g1 == g2 (and no shard is
    given) edge 0's color is fixed to 0, since color swap is a symmetry.
    `shard`, a bit string, instead fixes the colors of the first len(shard)
    edges, letting callers partition the space into independent prefix
    shards.  Raises LimitExceededError if the free space exceeds `limit`.
    """
    m = hg.num_edges
    fixed = {}
    if shard is not None:
        if len(shard) > m or any(ch not in "01" for ch in shard):
            raise ValueError(f"bad shard prefix {shard!r} for {m} edges")
        fixed = {i: int(ch) for i, ch in enumerate(shard)}
    elif g1 == g2 and m > 0:
        fixed = {0: 0}

    free = [i for i in range(m) if i not in fixed]
    if 2 ** len(free) > limit:
        raise LimitExceededError(
            f"{2 ** len(free)} colorings exceed the limit {limit}; "
            f"use shards")

    colors = [0] * m
    for i, c in fixed.items():
        colors[i] = c
    examined = 0
    prev_code = 0
    for step in range(2 ** len(free)):
        code = step ^ (step >> 1)
        diff = code ^ prev_code
        prev_code = code
        while diff:
            bit = diff.bit_length() - 1
            colors[free[bit]] ^= 1
            diff ^= 1 << bit
        coloring = EdgeColoring(tuple(colors), 2)
        examined += 1
        if contains_mono_berge(hg, coloring, g1, g2) is None:
            return UnavoidabilityResult(AVOIDABLE, coloring, examined, shard)
    return UnavoidabilityResult(UNAVOIDABLE, None, examined, shard)


def shard_prefixes(bits):
    """All 2^bits shard descriptors of the given length."""
    return [format(v, f"0{bits}b") for v in range(2 ** bits)] if bits else [""]


def unavoidable_sharded(hg, g1, g2, bits, limit=DEFAULT_COLORING_LIMIT,
                        jobs=1):
    """Run the prefix shards of the given bit length and merge verdicts:
    AVOIDABLE (with the witness) iff any shard is AVOIDABLE.

    Shards are consumed in prefix order and the scan stops at the first
    AVOIDABLE shard, so the merged result (witness included) is identical
    whatever the worker count.
    """
    prefixes = shard_prefixes(min(bits, hg.num_edges))
    results = []
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(unavoidable, hg, g1, g2, p, limit)
                       for p in prefixes]
            try:
                for fut in futures:
                    r = fut.result()
                    results.append(r)
                    if r.verdict == AVOIDABLE:
                        break
            finally:
                for fut in futures:
                    fut.cancel()
    else:
        for p in prefixes:
            r = unavoidable(hg, g1, g2, p, limit)
            results.append(r)
            if r.verdict == AVOIDABLE:
                break
    examined = sum(r.colorings_examined for r in results)
    for r in results:
        if r.verdict == AVOIDABLE:
            return UnavoidabilityResult(AVOIDABLE, r.witness, examined,
                                        f"merged[{bits}]")
    return UnavoidabilityResult(UNAVOIDABLE, None, examined,
                                f"merged[{bits}]")


def classical_ramsey_small(g1, g2, n_max, limit=DEFAULT_COLORING_LIMIT):
    """Smallest n <= n_max such that every 2-coloring of K_n contains a
    blue G1 or red G2, confirmed avoidable at n - 1; None if no such n."""
    if g1.num_edges == 0 or g2.num_edges == 0:
        raise ValueError("Ramsey targets must be non-empty")
    # scanning upward means every returned n was AVOIDABLE at n - 1
    # (K_1 is vacuously avoidable for non-empty targets)
    for n in range(2, n_max + 1):
        res = unavoidable(complete_host(n), g1, g2, limit=limit)
        if res.verdict == UNAVOIDABLE:
            return n
    return None


@dataclass(frozen=True)
class BadEvent:
    """A vertex t-set whose C(t,2) covering blocks are pairwise distinct
    and share one color: exactly a monochromatic Berge clique on a linear
    host."""

    t_set: tuple
    blocks: tuple
    color: int


def _pair_block_map(hg):
    pair_edges = hg.pair_edges()
    total = hg.n * (hg.n - 1) // 2
    if len(pair_edges) != total or any(len(v) != 1 for v in
                                       pair_edges.values()):
        raise ValueError("host must be linear and covering "
                         "(every pair in exactly one hyperedge)")
    return {p: es[0] for p, es in pair_edges.items()}


def scan_bad_events(hg, coloring, t):
    """All monochromatic Berge-K_t vertex sets on a linear covering host.

    A t-set qualifies iff no hyperedge contains 3 of its vertices (with
    one block per pair, that is the same as all blocks being distinct) and
    the blocks all share one color.
    """
    check_coloring(hg, coloring)
    pair_block = _pair_block_map(hg)
    out = []
    for t_set in combinations(range(1, hg.n + 1), t):
        blocks = [pair_block[p] for p in combinations(t_set, 2)]
        distinct = set(blocks)
        if len(distinct) != len(blocks):
            continue
        cs = {coloring.colors[b] for b in distinct}
        if len(cs) == 1:
            out.append(BadEvent(t_set, tuple(sorted(distinct)), cs.pop()))
    return out


@dataclass(frozen=True)
class MTRun:
    """Outcome of a Moser-Tardos run: the good coloring (or None on
    resample exhaustion), the resample count, and the resampled events in
    order (the trace)."""

    coloring: EdgeColoring | None
    resamples: int
    trace: tuple


def moser_tardos_coloring(hg, t, seed=0, max_resamples=10 ** 6):
    """Constructive local-lemma resampling on a linear covering host.

    Start from a uniform random 2-coloring; while monochromatic Berge-K_t
    sets remain, re-randomize the blocks of the lexicographically least
    one.  The returned coloring (when found) scans clean, i.e. the host
    has no monochromatic Berge-K_t under it.  Deterministic per seed.
    """
    _pair_block_map(hg)  # validate the linear covering precondition up front
    rng = random.Random(seed)
    colors = [rng.randrange(2) for _ in range(hg.num_edges)]
    trace = []
    resamples = 0
    while True:
        coloring = EdgeColoring(tuple(colors), 2)
        bad = scan_bad_events(hg, coloring, t)
        if not bad:
            return MTRun(coloring, resamples, tuple(trace))
        if resamples >= max_resamples:
            return MTRun(None, resamples, tuple(trace))
        event = min(bad, key=lambda b: b.t_set)
        trace.append(event)
        for b in event.blocks:
            colors[b] = rng.randrange(2)
        resamples += 1


def _superscript(value):
    return str(value).translate(str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹"))


def _subscript(value):
    return str(value).translate(str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉"))


@dataclass(frozen=True)
class LowerBoundCertificate:
    """Verified statement that a coloring of an n-vertex covering host
    avoids monochromatic Berge-K_t, hence the cover Ramsey number for
    Berge-K_t exceeds n.  Embeds everything needed to re-verify."""

    n: int
    t: int
    uniformity: tuple
    bound: int
    statement: str
    method: str
    host_text: str
    coloring_text: str


def lower_bound_certificate(hg, coloring, t):
    """Re-verify that the coloring avoids monochromatic Berge-K_t in both
    colors and package the result as a standalone certificate.

    Linear hosts are checked by an exhaustive bad-event scan (equivalent
    on such hosts); general covering hosts by the Berge search itself.
    Raises VerificationFailure carrying the offending certificate if a
    monochromatic copy exists.
    """
    if not hg.is_covering():
        raise ValueError("host must be covering")
    check_coloring(hg, coloring)
    if coloring.palette_size != 2:
        raise ValueError("certificate needs a 2-colored host")
    target = complete_graph(t)
    codegrees = [len(v) for v in hg.pair_edges().values()]
    if codegrees and min(codegrees) == max(codegrees) == 1:
        method = "bad-event-scan"
        bad = scan_bad_events(hg, coloring, t)
        if bad:
            event = min(bad, key=lambda b: b.t_set)
            cert = find_berge(hg, target, coloring, event.color)
            raise VerificationFailure(
                f"monochromatic Berge-K_{t} on {event.t_set} "
                f"in color {event.color}", event.color, cert)
    else:
        method = "mono-berge-search"
        hit = contains_mono_berge(hg, coloring, target, target)
        if hit is not None:
            color, cert = hit
            raise VerificationFailure(
                f"monochromatic Berge-K_{t} in color {color}", color, cert)
    uniformity = tuple(sorted(hg.uniformity))
    if len(uniformity) == 1:
        r_tag = _superscript(uniformity[0])
    else:
        r_tag = "^{" + ",".join(str(r) for r in uniformity) + "}"
    bk = f"BK{_subscript(t)}"
    statement = (f"R̂{r_tag}({bk},{bk}) ≥ {hg.n + 1}")
    return LowerBoundCertificate(
        n=hg.n,
        t=t,
        uniformity=uniformity,
        bound=hg.n + 1,
        statement=statement,
        method=method,
        host_text=format_hypergraph(hg),
        coloring_text=format_coloring(coloring),
    )
