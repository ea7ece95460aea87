"""Command-line front end.

Every output file embeds a run manifest (subcommand, argv, seed, input
digests, tool version) so runs are reproducible byte for byte; wall time
goes to stderr only.  Certificate-style outputs are JSON records that the
`verify` subcommand can re-check from the file alone.

Exit codes: 0 success / verdict found, 1 precondition violation,
2 search or sampling limit exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .berge import (BergeCertificate, contains_mono_berge, find_berge,
                    parse_target, verify_certificate)
from .bounds import (NoValidNError, asymptotic_lower, lll_inequality_holds,
                     lll_threshold_n, thm1_upper_bound)
from .designs import (UnsupportedParametersError, construct_resolvable_bibd,
                      format_design, parse_design, verify_resolvable_bibd)
from .hypergraph import (format_coloring, format_hypergraph, parse_coloring,
                         parse_hypergraph)
from .reductions import (multicolor_product_reduction, sample_scattered_subset,
                         scatter_failure_bound, scatter_rejection_trials)
from .search import (AVOIDABLE, LimitExceededError, VerificationFailure,
                     lower_bound_certificate, moser_tardos_coloring,
                     unavoidable, unavoidable_sharded)

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_LIMIT = 2
EXIT_VERIFY = 3


def _digest(data):
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read(path, inputs):
    with open(path, "rb") as fh:
        data = fh.read()
    inputs[path] = _digest(data)
    return data.decode("utf-8")


def _manifest(args, inputs, seed=None):
    return {
        "tool": "coverramsey",
        "version": __version__,
        "subcommand": args.command,
        "argv": args._argv,
        "seed": seed,
        "inputs": inputs,
    }


def _emit_json(record, args):
    text = json.dumps(record, indent=2, sort_keys=True,
                      ensure_ascii=False) + "\n"
    _emit_text(text, args)


def _emit_text(text, args):
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _fraction_str(frac):
    frac = Fraction(frac)
    return f"{frac.numerator}/{frac.denominator}"


# -- subcommands --------------------------------------------------------------


def cmd_gen_design(args):
    inputs = {}
    design = construct_resolvable_bibd(args.n, args.k)
    report = verify_resolvable_bibd(design)
    if not report.ok():
        raise VerificationFailure(
            f"constructed design failed its own verifier: "
            f"{report.violations[0].detail}")
    manifest = _manifest(args, inputs)
    header = f"# coverramsey design\n# manifest: {json.dumps(manifest, sort_keys=True)}\n"
    _emit_text(header + format_design(design), args)
    return EXIT_OK


def cmd_check_covering(args):
    inputs = {}
    hg = parse_hypergraph(_read(args.host, inputs))
    record = {
        "record": "covering-check",
        "manifest": _manifest(args, inputs),
        "n": hg.n,
        "m": hg.num_edges,
        "covering": hg.is_covering(),
        "min_codegree": hg.min_codegree(),
    }
    if args.format == "structured":
        _emit_json(record, args)
    else:
        _emit_text(f"covering: {record['covering']} "
                   f"(n={hg.n}, m={hg.num_edges}, "
                   f"min co-degree {record['min_codegree']})\n", args)
    return EXIT_OK


def _load_host_and_coloring(args, inputs):
    hg = parse_hypergraph(_read(args.host, inputs))
    coloring = None
    if getattr(args, "coloring", None):
        coloring = parse_coloring(_read(args.coloring, inputs), hg.num_edges)
    return hg, coloring


def cmd_find_berge(args):
    inputs = {}
    hg, coloring = _load_host_and_coloring(args, inputs)
    target_text = _read(args.target, inputs)
    target = parse_target(target_text)
    color = args.color
    if (coloring is None) != (color is None):
        raise ValueError("--coloring and --color must be given together")
    cert = find_berge(hg, target, coloring, color)
    record = {
        "record": "berge-certificate",
        "manifest": _manifest(args, inputs),
        "host_text": format_hypergraph(hg),
        "target_text": target_text,
        "color": color,
        "found": cert is not None,
    }
    if coloring is not None:
        record["coloring_text"] = format_coloring(coloring)
    if cert is not None:
        record["vertex_map"] = [list(p) for p in cert.vertex_map]
        record["edge_map"] = [list(p) for p in cert.edge_map]
    _emit_json(record, args)
    return EXIT_OK


def cmd_unavoidable(args):
    inputs = {}
    hg = parse_hypergraph(_read(args.host, inputs))
    g1_text = _read(args.g1, inputs)
    g2_text = _read(args.g2, inputs)
    g1 = parse_target(g1_text)
    g2 = parse_target(g2_text)
    if args.jobs > 1 and args.shard is None:
        result = unavoidable_sharded(hg, g1, g2, args.shard_bits,
                                     limit=args.limit, jobs=args.jobs)
    else:
        result = unavoidable(hg, g1, g2, shard=args.shard, limit=args.limit)
    record = {
        "record": "unavoidability-result",
        "manifest": _manifest(args, inputs),
        "host_text": format_hypergraph(hg),
        "g1_text": g1_text,
        "g2_text": g2_text,
        "verdict": result.verdict,
        "colorings_examined": result.colorings_examined,
        "shard": result.shard_spec,
    }
    if result.witness is not None:
        record["witness"] = format_coloring(result.witness).strip()
    if args.format == "structured" or args.output:
        _emit_json(record, args)
    else:
        line = (f"{result.verdict} after {result.colorings_examined} "
                f"colorings")
        if result.witness is not None:
            line += f"; witness {record['witness']}"
        _emit_text(line + "\n", args)
    return EXIT_OK


def cmd_mt_lll(args):
    inputs = {}
    hg = parse_hypergraph(_read(args.host, inputs))
    run = moser_tardos_coloring(hg, args.t, seed=args.seed,
                                max_resamples=args.max_resamples)
    if run.coloring is None:
        print(f"no good coloring within {run.resamples} resamples",
              file=sys.stderr)
        return EXIT_LIMIT
    cert = lower_bound_certificate(hg, run.coloring, args.t)
    record = {
        "record": "lower-bound-certificate",
        "manifest": _manifest(args, inputs, seed=args.seed),
        "statement": cert.statement,
        "n": cert.n,
        "t": cert.t,
        "uniformity": list(cert.uniformity),
        "bound": cert.bound,
        "method": cert.method,
        "resamples": run.resamples,
        "host_text": cert.host_text,
        "coloring_text": cert.coloring_text,
    }
    if args.coloring_out:
        manifest = _manifest(args, inputs, seed=args.seed)
        header = ("# coverramsey coloring\n"
                  f"# manifest: {json.dumps(manifest, sort_keys=True)}\n")
        with open(args.coloring_out, "w", encoding="utf-8") as fh:
            fh.write(header + cert.coloring_text)
        print(f"wrote {args.coloring_out}", file=sys.stderr)
    _emit_json(record, args)
    return EXIT_OK


def cmd_scatter(args):
    inputs = {}
    hg = parse_hypergraph(_read(args.host, inputs))
    k = hg.max_edge_size
    bound = scatter_failure_bound(hg.n, args.s, k)
    record = {
        "record": "scatter-sample",
        "manifest": _manifest(args, inputs, seed=args.seed),
        "host_text": format_hypergraph(hg),
        "s": args.s,
        "k": k,
        "failure_bound": _fraction_str(bound),
        "failure_bound_float": float(bound),
    }
    if args.trials:
        rejected, trials = scatter_rejection_trials(hg, args.s, args.trials,
                                                    seed=args.seed)
        record["trials"] = trials
        record["rejected"] = rejected
        record["empirical_rate"] = rejected / trials
    sample = sample_scattered_subset(hg, args.s, seed=args.seed,
                                     max_attempts=args.max_attempts)
    if sample is None:
        record["found"] = False
        _emit_json(record, args)
        print(f"no scattered subset within {args.max_attempts} attempts",
              file=sys.stderr)
        return EXIT_LIMIT
    record["found"] = True
    record["subset"] = list(sample.subset)
    record["attempts"] = sample.attempts
    _emit_json(record, args)
    return EXIT_OK


def cmd_reduce_product(args):
    inputs = {}
    hg, coloring = _load_host_and_coloring(args, inputs)
    if coloring is None:
        raise ValueError("reduce-product requires a coloring file")
    red = multicolor_product_reduction(hg, coloring)
    matrix = []
    for v in range(2, red.n + 1):
        matrix.append([red.pair_color[(u, v)] for u in range(1, v)])
    provenance = [[u, v, ie, label]
                  for (u, v), (ie, label) in sorted(red.provenance.items())]
    record = {
        "record": "product-reduction",
        "manifest": _manifest(args, inputs),
        "host_text": format_hypergraph(hg),
        "coloring_text": format_coloring(coloring),
        "n": red.n,
        "palette_size": red.palette_size,
        "label_count": red.label_count,
        "color_matrix_lower": matrix,
        "provenance": provenance,
    }
    _emit_json(record, args)
    return EXIT_OK


def cmd_bound(args):
    needed = {"thm1": 2, "lll": 3, "lll-threshold": 2, "asym": 1}[args.formula]
    given = [v for v in (args.a, args.b, args.c) if v is not None]
    if len(given) != needed:
        raise ValueError(f"bound {args.formula} takes {needed} integer "
                         f"argument(s), got {len(given)}")
    if args.formula == "thm1":
        report = thm1_upper_bound(args.a, args.b)
    elif args.formula == "lll":
        report = lll_inequality_holds(args.a, args.b, args.c)
    elif args.formula == "lll-threshold":
        report = lll_threshold_n(args.a, args.b, admissible=args.admissible)
    else:
        report = asymptotic_lower(args.a)
    if args.format == "structured":
        value = report.value
        record = {
            "record": "bound-report",
            "manifest": _manifest(args, {}),
            "formula_id": report.formula_id,
            "inputs": report.inputs,
            "value": (_fraction_str(value) if isinstance(value, Fraction)
                      else value),
            "satisfied": report.satisfied,
            "notes": list(report.notes),
        }
        _emit_json(record, args)
    else:
        _emit_text(report.render(), args)
    return EXIT_OK


def cmd_certify_lower(args):
    inputs = {}
    hg, coloring = _load_host_and_coloring(args, inputs)
    if coloring is None:
        raise ValueError("certify-lower requires a coloring file")
    cert = lower_bound_certificate(hg, coloring, args.t)
    record = {
        "record": "lower-bound-certificate",
        "manifest": _manifest(args, inputs),
        "statement": cert.statement,
        "n": cert.n,
        "t": cert.t,
        "uniformity": list(cert.uniformity),
        "bound": cert.bound,
        "method": cert.method,
        "host_text": cert.host_text,
        "coloring_text": cert.coloring_text,
    }
    _emit_json(record, args)
    print(cert.statement, file=sys.stderr)
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _verify_berge_record(record):
    hg = parse_hypergraph(record["host_text"])
    target = parse_target(record["target_text"])
    if not record.get("found"):
        return True, "record claims absence; nothing to re-verify"
    cert = BergeCertificate(
        tuple(tuple(p) for p in record["vertex_map"]),
        tuple(tuple(p) for p in record["edge_map"]))
    coloring = None
    color = record.get("color")
    if "coloring_text" in record:
        coloring = parse_coloring(record["coloring_text"], hg.num_edges)
    result = verify_certificate(hg, target, cert, coloring, color)
    return bool(result), result.reason or "certificate verifies"


def _verify_lower_bound_record(record):
    hg = parse_hypergraph(record["host_text"])
    coloring = parse_coloring(record["coloring_text"], hg.num_edges)
    try:
        cert = lower_bound_certificate(hg, coloring, record["t"])
    except VerificationFailure as exc:
        return False, str(exc)
    if cert.statement != record["statement"]:
        return False, (f"statement mismatch: recomputed {cert.statement!r}, "
                       f"recorded {record['statement']!r}")
    return True, cert.statement


def _verify_unavoidability_record(record):
    hg = parse_hypergraph(record["host_text"])
    g1 = parse_target(record["g1_text"])
    g2 = parse_target(record["g2_text"])
    if record["verdict"] == AVOIDABLE:
        coloring = parse_coloring(record["witness"] + "\n", hg.num_edges)
        hit = contains_mono_berge(hg, coloring, g1, g2)
        if hit is not None:
            return False, f"witness contains a monochromatic target: {hit[0]}"
        return True, "witness re-verified (avoids both targets)"
    return True, ("UNAVOIDABLE verdicts re-verify only by re-running the "
                  "search")


def _verify_scatter_record(record):
    hg = parse_hypergraph(record["host_text"])
    if not record.get("found"):
        return True, "record claims absence; nothing to re-verify"
    subset = set(record["subset"])
    worst = max(len(subset.intersection(e)) for e in hg.edges)
    if worst > 2:
        return False, f"some hyperedge meets the subset in {worst} vertices"
    return True, "subset is scattered"


def _verify_product_record(record):
    hg = parse_hypergraph(record["host_text"])
    coloring = parse_coloring(record["coloring_text"], hg.num_edges)
    red = multicolor_product_reduction(hg, coloring)
    matrix = []
    for v in range(2, red.n + 1):
        matrix.append([red.pair_color[(u, v)] for u in range(1, v)])
    if matrix != record["color_matrix_lower"]:
        return False, "color matrix does not reproduce"
    return True, "reduction reproduces from host and coloring"


def cmd_verify(args):
    inputs = {}
    text = _read(args.file, inputs)
    stripped = "".join(ln for ln in text.splitlines(keepends=True)
                       if not ln.lstrip().startswith("#"))
    if stripped.lstrip().startswith("{"):
        record = json.loads(text)
        kind = record.get("record")
        handlers = {
            "berge-certificate": _verify_berge_record,
            "lower-bound-certificate": _verify_lower_bound_record,
            "unavoidability-result": _verify_unavoidability_record,
            "scatter-sample": _verify_scatter_record,
            "product-reduction": _verify_product_record,
        }
        if kind not in handlers:
            raise ValueError(f"unknown record type {kind!r}")
        try:
            ok, message = handlers[kind](record)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed {kind} record: {exc!r}") from exc
    else:
        head = stripped.split("\n", 1)[0].split()
        if len(head) == 3:
            design = parse_design(text)
            report = verify_resolvable_bibd(design)
            ok = report.ok()
            message = ("design verifies" if ok else
                       "; ".join(f"{v.code}: {v.detail}"
                                 for v in report.violations))
        elif len(head) == 2:
            hg = parse_hypergraph(text)
            ok = True
            message = (f"hypergraph parses (n={hg.n}, m={hg.num_edges}, "
                       f"covering={hg.is_covering()})")
        else:
            raise ValueError("unrecognized file type")
    print(message)
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser -------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coverramsey",
        description="cover Ramsey toolkit: designs, Berge detection, "
                    "reductions, coloring search and exact bounds")
    parser.add_argument("--version", action="version",
                        version=f"coverramsey {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output=True, fmt=True):
        if output:
            p.add_argument("-o", "--output", help="write result to this file")
        if fmt:
            p.add_argument("--format", choices=("text", "structured"),
                           default="text")

    p = sub.add_parser("gen-design", help="construct a resolvable design")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_gen_design)

    p = sub.add_parser("check-covering", help="covering test for a host file")
    p.add_argument("host")
    add_common(p)
    p.set_defaults(func=cmd_check_covering)

    p = sub.add_parser("find-berge", help="search for a Berge copy")
    p.add_argument("host")
    p.add_argument("target")
    p.add_argument("--coloring", help="coloring sidecar file")
    p.add_argument("--color", type=int, help="restrict to this color class")
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_find_berge)

    p = sub.add_parser("unavoidable",
                       help="exhaustive 2-coloring unavoidability check")
    p.add_argument("host")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--shard", help="bit-string prefix fixing leading edges")
    p.add_argument("--shard-bits", type=int, default=2,
                   help="prefix length when splitting with --jobs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int, default=2 ** 20,
                   help="max colorings per (sharded) search")
    add_common(p)
    p.set_defaults(func=cmd_unavoidable)

    p = sub.add_parser("mt-lll",
                       help="Moser-Tardos resampling on a design host")
    p.add_argument("host")
    p.add_argument("t", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-resamples", type=int, default=10 ** 6)
    p.add_argument("--coloring-out", help="also write the coloring sidecar")
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_mt_lll)

    p = sub.add_parser("scatter", help="sample a scattered vertex subset")
    p.add_argument("host")
    p.add_argument("s", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("--trials", type=int, default=0,
                   help="also estimate the rejection rate empirically")
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("reduce-product",
                       help="product reduction to a multicolored K_n")
    p.add_argument("host")
    p.add_argument("coloring")
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_reduce_product)

    p = sub.add_parser("bound", help="evaluate a closed-form bound")
    p.add_argument("formula",
                   choices=("thm1", "lll", "lll-threshold", "asym"))
    p.add_argument("a", type=int)
    p.add_argument("b", type=int, nargs="?")
    p.add_argument("c", type=int, nargs="?")
    p.add_argument("--admissible", action="store_true",
                   help="restrict lll-threshold to design-admissible n")
    add_common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify-lower",
                       help="verify a coloring and emit a lower-bound "
                            "certificate")
    p.add_argument("host")
    p.add_argument("coloring")
    p.add_argument("t", type=int)
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_certify_lower)

    p = sub.add_parser("verify", help="re-verify an output file standalone")
    p.add_argument("file")
    add_common(p, output=False, fmt=False)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args._argv = argv
    start = time.monotonic()
    try:
        code = args.func(args)
    except (ValueError, UnsupportedParametersError, NoValidNError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except LimitExceededError as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    finally:
        print(f"# wall-time: {time.monotonic() - start:.3f}s",
              file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
