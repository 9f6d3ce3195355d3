"""Command-line surface: classify, check, identity, catalog, complete.

Exit codes: 0 = ran / all requested checks passed, 1 = some check failed
(SKIP fails only under --strict), 2 = usage or parse error.
"""

import argparse
import json
import sys

from . import catalog, formats, fusion
from .errors import VNCoreError
from .structures import AXIOM_IDS, classify, check_axiom


def _render_scalars(field, values):
    return [field.render(v) for v in values]


def _witness_doc(field, w):
    return {"input": w.input_label, "index": w.input_index,
            "lhs": _render_scalars(field, w.lhs),
            "rhs": _render_scalars(field, w.rhs)}


def _check_doc(field, name, res):
    doc = {"id": name, "verdict": res.verdict}
    if res.witness is not None:
        doc["witness"] = _witness_doc(field, res.witness)
    if res.reason is not None:
        doc["reason"] = res.reason
    if res.note is not None:
        doc["note"] = res.note
    return doc


def _print_text(s, results, labels=None):
    for name, res in results:
        line = f"{name:<18} {res.verdict}"
        if res.verdict == "FAIL":
            w = res.witness
            line += (f"  witness {w.input_label}: "
                     f"lhs={_render_scalars(s.field, w.lhs)} "
                     f"rhs={_render_scalars(s.field, w.rhs)}")
        elif res.verdict == "SKIP":
            line += f"  ({res.reason})"
        if res.note:
            line += f"  [{res.note}]"
        print(line)
    if labels is not None:
        print("labels:", ", ".join(labels) if labels else "(none)")


def _print_json(s, results, labels):
    doc = {"structure": s.name,
           "checks": [_check_doc(s.field, n, r) for n, r in results],
           "labels": list(labels)}
    print(json.dumps(doc, indent=2))


def _exit_code(results, strict):
    bad = {"FAIL", "SKIP"} if strict else {"FAIL"}
    return 1 if any(r.verdict in bad for _, r in results) else 0


def _split_ids(arg, universe, what):
    if arg == "all":
        return list(universe)
    ids = [x.strip() for x in arg.split(",") if x.strip()]
    for x in ids:
        if x not in universe:
            raise VNCoreError(f"unknown {what} id {x!r}")
    if not ids:
        raise VNCoreError(f"no {what} ids given")
    return ids


def _cmd_classify(args):
    s = formats.parse_structure(args.file)
    report = classify(s)
    results = [(a, report.checks[a]) for a in AXIOM_IDS]
    if args.json:
        _print_json(s, results, report.labels)
    else:
        _print_text(s, results, report.labels)
    return 0


def _cmd_check(args):
    s = formats.parse_structure(args.file)
    ids = _split_ids(args.axiom, AXIOM_IDS, "axiom")
    results = [(a, check_axiom(s, a)) for a in ids]
    if args.json:
        _print_json(s, results, classify(s).labels)
    else:
        _print_text(s, results)
    return _exit_code(results, args.strict)


def _cmd_identity(args):
    s = formats.parse_structure(args.file)
    ids = _split_ids(args.id, fusion.IDENTITY_IDS, "identity")
    results = [(i, fusion.check_identity(s, i)) for i in ids]
    if args.json:
        _print_json(s, results, classify(s).labels)
    else:
        _print_text(s, results)
    return _exit_code(results, args.strict)


def _cmd_catalog(args):
    if args.catalog_cmd == "list":
        for name in catalog.CATALOG_NAMES:
            print(name)
        return 0
    s = catalog.make(args.name)
    if args.twist:
        td = formats.parse_twist(args.twist, s)
        s = catalog.twist(s, td)
    if args.unitalize:
        s = catalog.unitalize(s)
    text = formats.structure_to_json(s)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _cmd_complete(args):
    s = formats.parse_structure(args.file)
    out = catalog.unitalize(s)
    formats.write_structure(out, args.output)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="vncore",
        description="Exact checker for semibialgebra / core / Hopf axioms "
                    "and fusion-map identities on structure-constant data.")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("classify", help="run every axiom and print labels")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=_cmd_classify)

    c = sub.add_parser("check", help="check selected axioms")
    c.add_argument("file")
    c.add_argument("--axiom", required=True,
                   help="comma-separated axiom ids, or 'all'")
    c.add_argument("--json", action="store_true")
    c.add_argument("--strict", action="store_true",
                   help="count SKIP as failure")
    c.set_defaults(fn=_cmd_check)

    c = sub.add_parser("identity", help="check fusion-map identities")
    c.add_argument("file")
    c.add_argument("--id", required=True,
                   help="comma-separated identity ids, or 'all'")
    c.add_argument("--json", action="store_true")
    c.add_argument("--strict", action="store_true")
    c.set_defaults(fn=_cmd_identity)

    c = sub.add_parser("catalog", help="list or emit built-in structures")
    csub = c.add_subparsers(dest="catalog_cmd", required=True)
    cl = csub.add_parser("list")
    cl.set_defaults(fn=_cmd_catalog)
    ce = csub.add_parser("emit")
    ce.add_argument("name", choices=catalog.CATALOG_NAMES)
    ce.add_argument("-o", "--output")
    ce.add_argument("--unitalize", action="store_true")
    ce.add_argument("--twist", metavar="TWISTFILE")
    ce.set_defaults(fn=_cmd_catalog)

    c = sub.add_parser("complete", help="adjoin a unit to a structure file")
    c.add_argument("file")
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(fn=_cmd_complete)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except VNCoreError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


run_cli = main


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
