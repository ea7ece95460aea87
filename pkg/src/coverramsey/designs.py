"""Resolvable block designs with block size k and every pair in exactly one
block (lambda = 1): construction for the supported families, a full
verifier, and conversion to the covering linear hypergraph used as a
Ramsey lower-bound host.

Implemented families:

* n = k^2 for prime-power k: the affine plane of order k, with the k + 1
  pencils of parallel lines as classes.
* k = 3, n = 3^d: lines of the d-dimensional affine space over GF(3),
  grouped by direction.
* k = 3, n = 15: a fixed verified system (found once by exhaustive
  backtracking; frozen below).
* k = 3, n = 3q for q = 1 (mod 6), 7 <= q <= 25: a direct construction
  with Z_q acting by translation.  One block orbit forms a class that
  develops into q classes; the remaining 3t classes (q = 6t + 1) are
  orbits of transversal base blocks.  Pure same-level pairs are covered by
  difference triples partitioning the difference classes of Z_q.

Anything else raises UnsupportedParametersError; the verifier accepts
arbitrary candidate designs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .hypergraph import Hypergraph

PARTITION_FAIL = "PARTITION_FAIL"
PAIR_COUNT_FAIL = "PAIR_COUNT_FAIL"
CLASS_COUNT_FAIL = "CLASS_COUNT_FAIL"


class UnsupportedParametersError(ValueError):
    """Raised when (n, k) lies outside the implemented design families."""


@dataclass(frozen=True)
class ResolvableDesign:
    """Parallel classes of k-blocks over points 1..n; each class should
    partition the point set and each pair should appear in exactly one
    block overall (checked by `verify_resolvable_bibd`, not on init)."""

    n: int
    k: int
    classes: tuple

    @classmethod
    def from_lists(cls, n, k, classes):
        return cls(int(n), int(k),
                   tuple(tuple(tuple(int(p) for p in blk) for blk in c)
                         for c in classes))

    @property
    def num_classes(self):
        return len(self.classes)

    def blocks(self):
        return [blk for c in self.classes for blk in c]


@dataclass(frozen=True)
class DesignViolation:
    code: str
    detail: str


@dataclass(frozen=True)
class DesignReport:
    violations: tuple

    def ok(self):
        return not self.violations

    def codes(self):
        return {v.code for v in self.violations}


def verify_resolvable_bibd(design):
    """Full audit: every class partitions 1..n into k-blocks, every pair is
    covered exactly once, and the class count is (n - 1)/(k - 1).  Returns
    a report listing each violation (empty report iff valid)."""
    n, k = design.n, design.k
    out = []
    points = set(range(1, n + 1))
    for ci, cls in enumerate(design.classes):
        flat = [p for blk in cls for p in blk]
        for blk in cls:
            if len(blk) != k or len(set(blk)) != k:
                out.append(DesignViolation(
                    PARTITION_FAIL, f"class {ci}: block {blk} is not a "
                                    f"{k}-set"))
        if set(flat) != points or len(flat) != n:
            out.append(DesignViolation(
                PARTITION_FAIL, f"class {ci} does not partition 1..{n}"))
    counts = {}
    for blk in design.blocks():
        for p in combinations(sorted(set(blk)), 2):
            counts[p] = counts.get(p, 0) + 1
    for p in combinations(sorted(points), 2):
        c = counts.get(p, 0)
        if c != 1:
            out.append(DesignViolation(
                PAIR_COUNT_FAIL, f"pair {p} covered {c} times"))
    expected_m = (n - 1) // (k - 1) if k > 1 else 0
    if k > 1 and ((n - 1) % (k - 1) != 0
                  or design.num_classes != expected_m):
        out.append(DesignViolation(
            CLASS_COUNT_FAIL,
            f"{design.num_classes} classes, expected (n-1)/(k-1) = "
            f"{(n - 1) / (k - 1):g}"))
    return DesignReport(tuple(out))


def design_to_hypergraph(design):
    """Blocks of a verified design as a covering k-uniform hypergraph; the
    lambda = 1 property makes every pair co-degree exactly 1."""
    report = verify_resolvable_bibd(design)
    if not report.ok():
        raise ValueError(f"invalid design: {report.violations[0].detail}")
    return Hypergraph(design.n, design.blocks(), uniformity={design.k})


# -- finite fields ------------------------------------------------------------


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_mod(poly, mod, p):
    poly = list(poly)
    while len(poly) >= len(mod):
        lead = poly[-1]
        if lead:
            shift = len(poly) - len(mod)
            for i, c in enumerate(mod):
                poly[shift + i] = (poly[shift + i] - lead * c) % p
        poly.pop()
    return poly


def _monic_polys(deg, p):
    """Monic degree-`deg` polynomials over GF(p), constant term first."""
    for val in range(p ** deg):
        coeffs, v = [], val
        for _ in range(deg):
            coeffs.append(v % p)
            v //= p
        yield coeffs + [1]


class _GF:
    """Arithmetic tables for GF(p^e), elements encoded as 0..q-1 in base p.

    For e > 1 the modulus is the first monic irreducible polynomial of
    degree e over GF(p) in lexicographic coefficient order, found by trial
    division against all lower-degree monic polynomials.
    """

    def __init__(self, q):
        p, e = _prime_power(q)
        self.q, self.p, self.e = q, p, e
        if e == 1:
            self.add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self.mul = [[(a * b) % p for b in range(p)] for a in range(p)]
            return
        modulus = next(
            cand for cand in _monic_polys(e, p)
            if not any(not any(_poly_mod(cand, div, p))
                       for d in range(1, e // 2 + 1)
                       for div in _monic_polys(d, p)))
        elems = [self._digits(a) for a in range(q)]
        self.add = [[self._encode([(x + y) % p for x, y in zip(ea, eb)])
                     for eb in elems] for ea in elems]
        self.mul = [[self._encode(_poly_mod(_poly_mul(ea, eb, p), modulus, p))
                     for eb in elems] for ea in elems]

    def _digits(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, coeffs):
        padded = (list(coeffs) + [0] * self.e)[:self.e]
        val = 0
        for c in reversed(padded):
            val = val * self.p + c
        return val


def _prime_power(q):
    if q < 2:
        raise UnsupportedParametersError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if p * p > q and p != q:
            break
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise UnsupportedParametersError(f"{q} is not a prime power")
            return p, e
    return q, 1


def _affine_plane_classes(q):
    """Parallel classes of AG(2, q): slope classes then the vertical class.
    Point (x, y) gets id 1 + x*q + y."""
    gf = _GF(q)
    pid = lambda x, y: 1 + x * q + y
    classes = []
    for m in range(q):
        cls = []
        for b in range(q):
            line = sorted(pid(x, gf.add[gf.mul[m][x]][b]) for x in range(q))
            cls.append(tuple(line))
        classes.append(tuple(sorted(cls)))
    vertical = tuple(sorted(tuple(pid(a, y) for y in range(q))
                            for a in range(q)))
    classes.append(vertical)
    return classes


def _affine_space_gf3_classes(d):
    """Lines of AG(d, 3) grouped by direction.  Point ids follow base-3
    encoding of the coordinate vector."""
    n = 3 ** d
    pid = lambda vec: 1 + sum(c * 3 ** i for i, c in enumerate(vec))
    coords = []
    for a in range(n):
        vec, v = [], a
        for _ in range(d):
            vec.append(v % 3)
            v //= 3
        coords.append(tuple(vec))
    directions = [v for v in coords[1:]
                  if next(c for c in v if c) == 1]  # canonical rep of +/-v
    classes = []
    for v in directions:
        seen = set()
        cls = []
        for base in coords:
            if base in seen:
                continue
            line = []
            pt = base
            for _ in range(3):
                line.append(pt)
                seen.add(pt)
                pt = tuple((a + b) % 3 for a, b in zip(pt, v))
            cls.append(tuple(sorted(pid(p) for p in line)))
        classes.append(tuple(sorted(cls)))
    return sorted(classes)


# -- Kirkman systems ----------------------------------------------------------

# Resolvable (15, 3, 1) system, found by exhaustive backtracking over
# parallel classes (first class fixed, lexicographic extension) and checked
# by verify_resolvable_bibd.
_KTS15 = (
    ((1, 2, 3), (4, 5, 6), (7, 8, 9), (10, 11, 12), (13, 14, 15)),
    ((1, 4, 7), (2, 5, 8), (3, 10, 13), (6, 11, 14), (9, 12, 15)),
    ((1, 5, 10), (2, 6, 12), (3, 8, 15), (4, 9, 14), (7, 11, 13)),
    ((1, 6, 15), (2, 4, 13), (3, 7, 12), (5, 9, 11), (8, 10, 14)),
    ((1, 8, 11), (2, 7, 14), (3, 6, 9), (4, 10, 15), (5, 12, 13)),
    ((1, 9, 13), (2, 11, 15), (3, 5, 14), (4, 8, 12), (6, 7, 10)),
    ((1, 12, 14), (2, 9, 10), (3, 4, 11), (5, 7, 15), (6, 8, 13)),
)

_KTS_3Q_MAX_Q = 25  # transversal search grows sharply beyond this


def _difference_triples(q):
    """Partition the difference classes {1..3t} of Z_q (q = 6t + 1) into t
    base triples {0, a, b} whose three pair differences hit three distinct
    classes.  First partition in lexicographic order."""
    t = (q - 1) // 6
    cls = lambda d: min(d % q, (-d) % q)
    out = []

    def realize(trip):
        for a in range(1, q):
            for b in range(a + 1, q):
                if {cls(a), cls(b), cls(b - a)} == set(trip):
                    return (0, a, b)
        return None

    def rec(rem):
        if not rem:
            return True
        x = rem[0]
        for pair in combinations(rem[1:], 2):
            trip = (x,) + pair
            base = realize(trip)
            if base is not None:
                out.append(base)
                if rec([r for r in rem if r not in trip]):
                    return True
                out.pop()
        return False

    if not rec(list(range(1, 3 * t + 1))):
        return None
    return out


def _kts_three_q_classes(q):
    """Kirkman system on 3q points, q = 6t + 1, as described in the module
    docstring.  Point (x, level) gets id 1 + level*q + x."""
    t = (q - 1) // 6
    fam = _difference_triples(q)
    if fam is None:
        raise UnsupportedParametersError(
            f"no difference-triple partition for q={q}")

    def dev(base, x):
        return tuple(sorted((p + x) % q + lvl * q + 1 for p, lvl in base))

    # one pure difference triple set per level, translated to be disjoint
    pure = {}
    for lvl in range(3):
        placed, usedpts = [], set()
        for base in fam:
            for s in range(q):
                pts = {(p + s) % q for p in base}
                if not pts & usedpts:
                    placed.append(tuple(sorted(pts)))
                    usedpts |= pts
                    break
            else:
                raise UnsupportedParametersError(
                    f"could not place difference triples for q={q}")
        pure[lvl] = (placed, sorted(set(range(q)) - usedpts))

    rem0, rem1, rem2 = (pure[lvl][1] for lvl in range(3))
    r = 3 * t + 1
    sol = {}

    def finish(bs, cs):
        dset = sorted(set(range(q)) - {(b - a) % q for a, b in zip(rem0, bs)})
        eset = sorted(set(range(q)) - {(c - a) % q for a, c in zip(rem0, cs)})
        need = set(range(q)) - {(c - b) % q for b, c in zip(bs, cs)}
        if len(need) != 3 * t:
            return False  # duplicate (1,2)-differences among transversals
        pairing = []

        def match(i, usede, useddiff):
            if i == 3 * t:
                return True
            d = dset[i]
            for e_val in eset:
                if e_val in usede:
                    continue
                df = (e_val - d) % q
                if df not in need or df in useddiff:
                    continue
                pairing.append((d, e_val))
                if match(i + 1, usede | {e_val}, useddiff | {df}):
                    return True
                pairing.pop()
            return False

        if match(0, set(), set()):
            sol["pairing"] = list(pairing)
            return True
        return False

    def search():
        bs, db = [], set()

        def rb(i):
            if i == r:
                sol["bs"] = list(bs)
                return rc()
            for b in rem1:
                if b in bs:
                    continue
                d = (b - rem0[i]) % q
                if d in db:
                    continue
                bs.append(b)
                db.add(d)
                if rb(i + 1):
                    return True
                bs.pop()
                db.remove(d)
            return False

        def rc():
            cs, dc = [], set()

            def rec(i):
                if i == r:
                    if finish(sol["bs"], cs):
                        sol["cs"] = list(cs)
                        return True
                    return False
                for c in rem2:
                    if c in cs:
                        continue
                    d = (c - rem0[i]) % q
                    if d in dc:
                        continue
                    cs.append(c)
                    dc.add(d)
                    if rec(i + 1):
                        return True
                    cs.pop()
                    dc.remove(d)
                return False

            return rec(0)

        return rb(0)

    if not search():
        raise UnsupportedParametersError(
            f"transversal system search failed for q={q}")

    classes = []
    for d, e_val in sol["pairing"]:
        base = ((0, 0), (d, 1), (e_val, 2))
        classes.append(tuple(sorted(dev(base, x) for x in range(q))))
    floating = []
    for lvl in range(3):
        for pts in pure[lvl][0]:
            floating.append(tuple((p, lvl) for p in pts))
    for a, b, c in zip(rem0, sol["bs"], sol["cs"]):
        floating.append(((a, 0), (b, 1), (c, 2)))
    for x in range(q):
        classes.append(tuple(sorted(dev(base, x) for base in floating)))
    return classes


def _is_prime_power(q):
    try:
        _prime_power(q)
        return True
    except UnsupportedParametersError:
        return False


def construct_resolvable_bibd(n, k):
    """Build a resolvable design for a supported (n, k); raises
    UnsupportedParametersError otherwise.  Output is deterministic and
    always passes verify_resolvable_bibd."""
    if k < 2 or n < k:
        raise UnsupportedParametersError(f"(n={n}, k={k}) is degenerate")
    if n == k * k and _is_prime_power(k):
        return ResolvableDesign.from_lists(n, k, _affine_plane_classes(k))
    if k == 3:
        if n % 6 != 3:
            raise UnsupportedParametersError(
                f"no resolvable (n={n}, k=3, 1) design: n must be 3 (mod 6)")
        d, m = 0, n
        while m % 3 == 0:
            m //= 3
            d += 1
        if m == 1:
            return ResolvableDesign.from_lists(
                n, 3, _affine_space_gf3_classes(d))
        if n == 15:
            return ResolvableDesign.from_lists(15, 3, _KTS15)
        q = n // 3
        if n % 3 == 0 and q % 6 == 1 and 7 <= q <= _KTS_3Q_MAX_Q:
            return ResolvableDesign.from_lists(n, 3, _kts_three_q_classes(q))
        raise UnsupportedParametersError(
            f"n={n} outside the implemented Kirkman families "
            f"(powers of 3, 15, or 3q with q = 1 mod 6, q <= {_KTS_3Q_MAX_Q})")
    raise UnsupportedParametersError(
        f"(n={n}, k={k}) outside the implemented families "
        f"(affine planes n = k^2, or k = 3)")


# -- text format --------------------------------------------------------------
#
# Line 1: "<n> <k> <m>"; then the m classes separated by a '%' line, each
# class given as n/k lines of k ascending point ids.  '#' lines are ignored.


def format_design(design):
    lines = [f"{design.n} {design.k} {design.num_classes}"]
    for ci, cls in enumerate(design.classes):
        if ci:
            lines.append("%")
        lines.extend(" ".join(str(p) for p in blk) for blk in cls)
    return "\n".join(lines) + "\n"


def parse_design(text):
    rows = [ln for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty design text")
    n, k, m = (int(x) for x in rows[0].split())
    classes = [[]]
    for ln in rows[1:]:
        if ln.strip() == "%":
            classes.append([])
        else:
            classes[-1].append(tuple(int(x) for x in ln.split()))
    if len(classes) != m:
        raise ValueError(f"expected {m} classes, found {len(classes)}")
    return ResolvableDesign.from_lists(n, k, classes)
