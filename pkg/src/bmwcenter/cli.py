"""Command-line front end.

One subcommand per analysis; deterministic output in text, JSON or DOT
form.  Exit status 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import string
import sys

from . import blocks as blocks_mod
from . import center as center_mod
from . import contentfn
from . import idempotents as idem_mod
from . import tableaux
from . import wheelpoly
from .errors import BmwError
from .partitions import (Partition, diagonal_datum, partition_from_text,
                         text_of_partition)
from .scalars import GENERIC, Regime, content_value, regime_from_text
from .scalars import Content, ADD


def _lp_json(lp):
    return {"shape": text_of_partition(lp.shape), "defect": lp.defect}


def _path_text(path):
    return " -> ".join(text_of_partition(s) for s in path)


def _emit(args, payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_lambda(args, out):
    lps = tableaux.enumerate_lambda(args.n)
    if args.format == "json":
        _emit(args, [_lp_json(lp) for lp in lps])
    else:
        for lp in lps:
            out("(%s, %d)" % (text_of_partition(lp.shape), lp.defect))
    return 0


def cmd_paths(args, out):
    paths = tableaux.enumerate_paths(args.n, args.shape)
    if args.format == "json":
        _emit(args, [[text_of_partition(s) for s in p] for p in paths])
    else:
        for p in paths:
            out(_path_text(p))
        out("total: %d" % len(paths))
    return 0


def cmd_contents(args, out):
    mult = contentfn.drunk_contents(args.n, args.shape)
    items = sorted(mult.items(), key=lambda cm: (cm[0].s, cm[0].i))
    if args.format == "json":
        _emit(args, [{"direction": "add" if c.s == ADD else "remove",
                      "diagonal": c.i, "multiplicity": m,
                      "value": str(content_value(c, args.regime))}
                     for c, m in items])
    else:
        for c, m in items:
            out("%s x %d = %s" % (c, m, content_value(c, args.regime)))
    return 0


def cmd_wheel(args, out):
    n, K = args.n, args.order
    rows = []
    for k in range(K + 1):
        rows.append({"k": k, "w": str(wheelpoly.elementary_wheel(n, k)),
                     "p": str(wheelpoly.power_sum(n, k))})
    newton = wheelpoly.newton_check(n, K)
    if args.format == "json":
        _emit(args, {"n": n, "order": K, "rows": rows, "newton": newton})
    else:
        for r in rows:
            out("w_%d = %s" % (r["k"], r["w"]))
            out("p_%d^- = %s" % (r["k"], r["p"]))
        out("newton identities: %s" % ("ok" if newton else "FAILED"))
    return 0


def cmd_signature(args, out):
    sig = contentfn.signature(args.n, args.shape, args.regime)
    if args.format == "json":
        _emit(args, {"n": args.n, "shape": text_of_partition(args.shape),
                     "regime": str(args.regime),
                     "signature": contentfn.signature_json(sig)})
    else:
        out(str(sig))
    return 0


def _pair_letters(lam, pairs):
    """Letter per pairing orbit, keyed by diagonal."""
    letters = {}
    orbit = {}
    for i in sorted(pairs.paired, reverse=True):
        if i in orbit:
            continue
        mates = pairs.mates.get(i, ())
        label = string.ascii_lowercase[len(letters) % 26]
        letters[label] = True
        orbit[i] = label
        for j in mates:
            orbit.setdefault(j, label)
    return orbit


def cmd_pairs(args, out):
    pairs = contentfn.pairing_set(args.n, args.shape, args.regime)
    if args.format == "json":
        _emit(args, {"n": args.n, "shape": text_of_partition(args.shape),
                     "regime": str(args.regime),
                     "paired": sorted(pairs.paired)})
        return 0
    out("P = %s" % pairs)
    orbit = _pair_letters(args.shape, pairs)
    for i, p in enumerate(args.shape.parts, start=1):
        cells = []
        for j in range(1, p + 1):
            d = j - i
            cells.append("[%3d%s]" % (d, orbit.get(d, " ")))
        out("".join(cells))
    return 0


def cmd_separate(args, out):
    rep = center_mod.separation_classes(args.n, args.regime)
    pred = center_mod.theorem1_predicate(args.n, args.regime)
    ss = blocks_mod.is_semisimple(args.n, args.regime)
    if args.format == "json":
        _emit(args, {"n": args.n, "regime": str(args.regime),
                     "classes": [[_lp_json(lp) for lp in c] for c in rep.classes],
                     "separates": rep.separates,
                     "witnesses": [[_lp_json(a), _lp_json(b)]
                                   for a, b in rep.witnesses],
                     "semisimple": ss, "predicted": pred})
        return 0
    out("classes: %d / %d" % (len(rep.classes), sum(len(c) for c in rep.classes)))
    for c in rep.classes:
        out("  " + "  ".join(str(lp) for lp in c))
    out("separates: %s (predicted: %s)" % (rep.separates, pred))
    for a, b in rep.witnesses:
        out("witness: %s ~ %s" % (a, b))
    out("semisimple: %s" % ss)
    if not ss:
        out("note: with semisimplicity failing, the signature classes "
            "bound the center only conjecturally")
    if ss and rep.separates != pred:
        out("warning: computed separation disagrees with the predicate")
    return 0


def cmd_matrix(args, out):
    if args.order is not None:
        matrix, rank = center_mod.evaluation_matrix(args.n, args.regime, args.order)
        K = args.order
    else:
        matrix, rank, K = center_mod.adaptive_matrix(args.n, args.regime)
    labels = center_mod.matrix_row_labels(K)
    if args.format == "json":
        _emit(args, {"n": args.n, "regime": str(args.regime), "order": K,
                     "rank": rank,
                     "rows": [{"e_power": j, "w_index": k,
                               "entries": [str(x) for x in row]}
                              for (j, k), row in zip(labels, matrix)]})
        return 0
    for (j, k), row in zip(labels, matrix):
        name = "w_%d" % k if j == 0 else "e^%+d*w_%d" % (j, k)
        out("%-10s %s" % (name, "  ".join(str(x) for x in row)))
    out("rank: %d" % rank)
    return 0


def cmd_family(args, out):
    reps, family, K = center_mod.separating_family(args.n, args.regime)
    labels = center_mod.matrix_row_labels(K)
    if args.format == "json":
        _emit(args, {"n": args.n, "regime": str(args.regime), "order": K,
                     "representatives": [_lp_json(lp) for lp in reps],
                     "combinations": [[{"e_power": j, "w_index": k,
                                        "coefficient": str(c)}
                                       for (j, k), c in zip(labels, combo)
                                       if not c.is_zero]
                                      for combo in family]})
        return 0
    for lp, combo in zip(reps, family):
        out("p[%s]:" % lp)
        for (j, k), c in zip(labels, combo):
            if not c.is_zero:
                name = "w_%d" % k if j == 0 else "e^%+d*w_%d" % (j, k)
                out("  %s: %s" % (name, c))
    return 0


def cmd_semisimple(args, out):
    ss = blocks_mod.is_semisimple(args.n, args.regime)
    if args.format == "json":
        _emit(args, {"n": args.n, "regime": str(args.regime), "semisimple": ss})
    else:
        out("true" if ss else "false")
    return 0


def cmd_blocks(args, out):
    rep = blocks_mod.block_partition(args.n, args.regime)
    if args.format == "json":
        _emit(args, {"n": args.n, "regime": str(args.regime),
                     "semisimple": blocks_mod.is_semisimple(args.n, args.regime),
                     "blocks": [[_lp_json(lp) for lp in c] for c in rep.blocks],
                     "agrees_with_W": rep.agrees_with_W})
        return 0
    for c in rep.blocks:
        out("  ".join(str(lp) for lp in c))
    out("agrees with signature classes: %s" % rep.agrees_with_W)
    for a, b in rep.closure_pairs:
        out("closure only: %s ~ %s" % (a, b))
    return 0


def cmd_verify_blocks(args, out):
    ok = blocks_mod.verify_block_theorem(args.n, args.regime)
    if args.format == "json":
        _emit(args, {"n": args.n, "regime": str(args.regime), "verified": ok})
    else:
        out("verified" if ok else "MISMATCH")
    return 0 if ok else 1


def cmd_idempotent(args, out):
    diag = idem_mod.spectral_idempotent(args.n, args.shape)
    sel = diag.selected()
    ok = (len(sel) == 1 and sel[0] == tableaux.drunk_path(args.n, args.shape))
    if args.format == "json":
        _emit(args, {"n": args.n, "lambda": text_of_partition(args.shape),
                     "selected_path": [text_of_partition(s) for s in sel[0]]
                     if sel else [],
                     "all_zero_elsewhere": ok})
        return 0
    for p in sel:
        out("selected: %s" % _path_text(p))
    out("all other paths zero: %s" % ok)
    return 0


def cmd_graph(args, out):
    if args.format == "dot":
        sys.stdout.write(tableaux.branching_graph_dot(args.n, args.regime))
        return 0
    levels, edges = tableaux.branching_graph(args.n, args.regime)
    if args.format == "json":
        _emit(args, {"n": args.n, "regime": str(args.regime),
                     "levels": [[text_of_partition(s) for s in lev]
                                for lev in levels],
                     "edges": [{"level": k,
                                "parent": text_of_partition(a),
                                "child": text_of_partition(b),
                                "value": str(v)} for k, a, b, v in edges]})
        return 0
    for k, a, b, v in edges:
        out("L%d:%s -> L%d:%s  [%s]" % (k - 1, text_of_partition(a), k,
                                        text_of_partition(b), v))
    return 0


def _check_shape(n, lp, regime):
    """Per-shape invariant bundle for selfcheck."""
    from collections import Counter
    lam = lp.shape
    closed = contentfn.drunk_contents(n, lam)
    walked = Counter(tableaux.content_sequence(tableaux.drunk_path(n, lam)))
    if closed != walked:
        return "drunk multiset mismatch at %s" % lp
    sig = contentfn.signature(n, lam, regime)
    for v, e in sig.exponents.items():
        if sig.exponents.get(v.inverse()) != -e:
            return "signature asymmetry at %s" % lp
    if n <= 6 and not contentfn.series_consistency(n, lam, regime, min(3, n)):
        return "series inconsistency at %s" % lp
    return None


def cmd_selfcheck(args, out):
    n = args.n
    failures = []
    lps = tableaux.enumerate_lambda(n)
    if args.parallel:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_check_shape, [n] * len(lps), lps,
                                    [args.regime] * len(lps)))
    else:
        results = [_check_shape(n, lp, args.regime) for lp in lps]
    failures.extend(r for r in results if r)

    expected = 1
    for k in range(1, n + 1):
        expected *= 2 * k - 1
    if tableaux.sum_of_squares(n) != expected:
        failures.append("path-count square sum mismatch at level %d" % n)
    if n <= 4 and not wheelpoly.newton_check(n, min(2 * n, 8)):
        failures.append("newton identities failed at level %d" % n)
    for lam, count in tableaux.path_counts(n).items():
        if count != len(tableaux.enumerate_paths(n, lam)):
            failures.append("path count mismatch at %s" % lam)
    for f in failures:
        out("FAIL: %s" % f)
    out("selfcheck level %d: %s" % (n, "ok" if not failures else
                                    "%d failure(s)" % len(failures)))
    return 0 if not failures else 1


COMMANDS = {
    "lambda": cmd_lambda,
    "paths": cmd_paths,
    "contents": cmd_contents,
    "wheel": cmd_wheel,
    "signature": cmd_signature,
    "pairs": cmd_pairs,
    "separate": cmd_separate,
    "matrix": cmd_matrix,
    "family": cmd_family,
    "semisimple": cmd_semisimple,
    "blocks": cmd_blocks,
    "verify-blocks": cmd_verify_blocks,
    "idempotent": cmd_idempotent,
    "graph": cmd_graph,
    "selfcheck": cmd_selfcheck,
}

NEEDS_SHAPE = {"paths", "contents", "signature", "pairs", "idempotent"}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bmwcenter",
        description="Exact combinatorics of wheel polynomial evaluations "
                    "on updown tableaux")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--t", default="generic",
                       help='regime: "generic", "q^N", "-q^N" or "1"')
        p.add_argument("--shape", help='partition, e.g. "4,2,2" ("0" for empty)')
        p.add_argument("--shape2")
        p.add_argument("--defect", type=int)
        p.add_argument("--order", type=int,
                       default=4 if name == "wheel" else None)
        p.add_argument("--format", choices=("text", "json", "dot"),
                       default="text")
        p.add_argument("--parallel", action="store_true")
    return parser


def run(argv):
    parser = build_parser()
    # let regime values like "-q^-1" follow --t without being read as flags
    merged = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--t" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            merged.append("--t=" + argv[i + 1])
            skip = True
        else:
            merged.append(tok)
    args = parser.parse_args(merged)
    try:
        args.regime = regime_from_text(args.t)
        if args.command in NEEDS_SHAPE:
            if args.shape is None:
                parser.error("--shape is required for %s" % args.command)
            args.shape = partition_from_text(args.shape)
        if args.shape2 is not None:
            args.shape2 = partition_from_text(args.shape2)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return COMMANDS[args.command](args, print)
    except BmwError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
