"""Command line front end.

Exit codes: 0 when every check passes, 1 when a check fails or a construction
refuses its input, 2 on malformed input or usage errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import documents as docs
from .algebras import check_lie, check_special_supermodule, check_super_jordan, check_super_jordan_via_brackets
from .constructions import bs_quotient, tag, tkk
from .exactlin import rank
from .jternary import generator_label, innder_basis, validate
from .report import CheckFailed, Report
from .shortdec import decompose, extract_ternary, phi_map, roundtrip_check, verify_short_structure

VERBOSITY_ENV = "SHORTSL2_REPORT_VERBOSITY"
DEFAULT_LIMIT = 20


class UsageError(ValueError):
    pass


def _limit():
    raw = os.environ.get(VERBOSITY_ENV, "").strip().lower()
    if not raw:
        return DEFAULT_LIMIT
    if raw == "all":
        return None
    try:
        return max(0, int(raw))
    except ValueError:
        return DEFAULT_LIMIT


def _dedupe(rep: Report) -> Report:
    seen, out = set(), Report()
    for c in rep.checks:
        if c.id not in seen:
            seen.add(c.id)
            out.add(c)
    return out


def _result(command: str, path, rep: Report, **extra) -> dict:
    body = {"schema": docs.SCHEMA, "command": command, "input": str(path),
            "status": "pass" if rep.ok else "fail", "checks": rep.to_dict(_limit())}
    body.update(extra)
    return body


def _refused(command: str, path, exc: CheckFailed, **extra) -> dict:
    rep = exc.report or Report()
    body = _result(command, path, rep, **extra)
    body["status"] = "fail"
    body["message"] = str(exc)
    return body


# ----------------------------------------------------------------- commands

def cmd_check(path, kind: str) -> dict:
    doc = docs.load_document(path)
    if kind == "lie":
        g, _ = docs.parse_lie(doc)
        return _result("check", path, check_lie(g), dims={"dim": g.dim})
    if kind == "jordan":
        j = docs.parse_ternary(doc).J if doc.get("kind") == "ternary" else docs.parse_jordan(doc)
        rep = check_super_jordan(j).extend(check_super_jordan_via_brackets(j))
        return _result("check", path, _dedupe(rep), dims={"dim": j.dim})
    d = docs.parse_ternary(doc)
    dims = {"J": d.nJ, "M": d.nM}
    if kind == "module":
        rep = check_super_jordan(d.J).extend(check_special_supermodule(d.J, d.M, d.bullet))
        return _result("check", path, rep, dims=dims)
    if kind == "ternary":
        return _result("check", path, validate(d), dims=dims)
    raise UsageError(f"unknown kind {kind!r}")


def _blocks(alg) -> dict:
    return {k: list(v) for k, v in alg.block_layout.items()}


def cmd_build(path, target: str) -> dict:
    doc = docs.load_document(path)
    d = docs.parse_ternary(doc)
    name = doc.get("name", Path(path).stem)
    pre = validate(d)
    if not pre.ok:
        body = _result("build", path, pre, target=target)
        body["message"] = "input fails the J-ternary axioms; construction refused"
        return body
    try:
        if target in ("tkk", "tag"):
            alg = tkk(d) if target == "tkk" else tag(d)
            rep = check_lie(alg.table)
            if target == "tag":
                rep.extend(alg.dblock.report)
            nJ, nM, nD = alg.dims
            art = docs.lie_document(alg.table, f"{target}({name})", alg.sl2,
                                    blocks=_blocks(alg), provenance=alg.provenance.upper())
            return _result("build", path, rep, target=target,
                           dims={"dim": alg.dim, "J": nJ, "M": nM, "D": nD,
                                 "parity": [alg.table.space.sdim[0], alg.table.space.sdim[1]]},
                           artifact=art)
        if target == "bs":
            bs = bs_quotient(d)
            rep = Report(list(bs.report.checks)).extend(check_lie(bs.table))
            art = docs.lie_document(bs.table, f"bs({name})", phi=docs.matrix_doc(bs.phi),
                                    relations_dim=bs.relations.dim)
            return _result("build", path, rep, target=target,
                           dims={"dim": bs.dim, "relations": bs.relations.dim,
                                 "innder": bs.innder.dim}, artifact=art)
        if target == "innder":
            inn = innder_basis(d)
            rep = Report([inn.closure])
            body = _result("build", path, rep, target=target, dims={"dim": inn.dim})
            if inn.table is not None:
                rep.extend(check_lie(inn.table))
                body = _result("build", path, rep, target=target, dims={"dim": inn.dim})
                body["artifact"] = docs.lie_document(
                    inn.table, f"innder({name})", operator_basis=list(d.W.labels),
                    operators={f"d{i}": docs.matrix_doc(A) for i, A in enumerate(inn.basis_ops)},
                    generators={generator_label(d, gen): docs.matrix_doc(gen.matrix)
                                for gen in inn.generators if not gen.matrix.is_zero()})
            return body
    except CheckFailed as exc:
        return _refused("build", path, exc, target=target)
    raise UsageError(f"unknown target {target!r}")


def _lie_with_sl2(path, e=None, f=None, h=None):
    doc = docs.load_document(path)
    g, sl2 = docs.parse_lie(doc)
    names = (e, f, h)
    if any(names):
        if not all(names):
            raise UsageError("--e, --f and --h must be given together")
        sl2 = docs.parse_sl2(g, {"e": e, "f": f, "h": h}, "--e/--f/--h")
    if sl2 is None:
        raise UsageError("no sl2 data: embed an sl2 field or pass --e --f --h")
    return doc, g, sl2


def cmd_decompose(path, e=None, f=None, h=None) -> dict:
    doc, g, sl2 = _lie_with_sl2(path, e, f, h)
    try:
        dec = decompose(g, sl2)
        ops = extract_ternary(dec)
    except CheckFailed as exc:
        return _refused("decompose", path, exc)
    rep = verify_short_structure(dec, ops)
    nJ, nM, nD = dec.dims
    art = docs.ternary_document(ops.data, f"T({doc.get('name', Path(path).stem)})")
    art["embedding"] = {
        "J": [[str(x) for x in v] for v in ops.J_vectors],
        "M": [[str(x) for x in v] for v in ops.M_vectors],
        "D": [[str(x) for x in v] for v in ops.D_vectors],
        "ambient_basis": list(g.space.labels),
    }
    return _result("decompose", path, rep, dims={"J": nJ, "M": nM, "D": nD}, artifact=art)


def cmd_roundtrip(path, e=None, f=None, h=None) -> dict:
    doc = docs.load_document(path)
    if doc.get("kind") == "ternary":
        d = docs.parse_ternary(doc)
        pre = validate(d)
        if not pre.ok:
            body = _result("roundtrip", path, pre)
            body["message"] = "input fails the J-ternary axioms; construction refused"
            return body
        return _result("roundtrip", path, roundtrip_check(d), dims={"J": d.nJ, "M": d.nM})
    _, g, sl2 = _lie_with_sl2(path, e, f, h)
    try:
        G, phi, rep = phi_map(g, sl2)
    except CheckFailed as exc:
        return _refused("roundtrip", path, exc)
    r = rank(phi.matrix) if G.dim else 0
    return _result("roundtrip", path, rep,
                   dims={"tag": G.dim, "target": g.dim, "rank": r,
                         "injective": r == G.dim, "surjective": r == g.dim})


# ------------------------------------------------------------------- output

def render_text(body: dict) -> str:
    lines = [f"{body['command']} {body['input']}: {body['status']}"]
    if "message" in body:
        lines.append(f"  {body['message']}")
    if "dims" in body:
        lines.append("  dims: " + ", ".join(f"{k}={v}" for k, v in body["dims"].items()))
    for c in body.get("checks", []):
        extra = f", {c['violation_count']} violations" if c["violation_count"] else ""
        lines.append(f"  [{c['status']}] {c['id']} ({c['tuples_checked']} tuples{extra})")
        if c.get("note"):
            lines.append(f"      {c['note']}")
        for v in c["violations"]:
            res = ", ".join(f"{k}: {x}" for k, x in v["residual"].items())
            lines.append(f"      ({', '.join(v['tuple'])}) -> {res}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shortsl2", description=__doc__.splitlines()[0])
    p.add_argument("--report", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="run the checker suite for one kind of structure")
    c.add_argument("file")
    c.add_argument("--kind", choices=("lie", "jordan", "module", "ternary"), required=True)
    b = sub.add_parser("build", help="build TKK, TAG, the quotient Bs or InnDer from ternary data")
    b.add_argument("file")
    b.add_argument("--target", choices=("tkk", "tag", "bs", "innder"), required=True)
    b.add_argument("-o", "--output")
    for name, hlp in (("decompose", "decompose a Lie superalgebra under an sl2 action"),
                      ("roundtrip", "round trip ternary data or build φ for a Lie input")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("file")
        s.add_argument("--e")
        s.add_argument("--f")
        s.add_argument("--h")
    for s in sub.choices.values():
        s.add_argument("--report", choices=("json", "text"), default=argparse.SUPPRESS)
    return p


def run(argv=None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            body = cmd_check(args.file, args.kind)
        elif args.command == "build":
            body = cmd_build(args.file, args.target)
            if args.output and "artifact" in body:
                Path(args.output).write_text(docs.dumps(body["artifact"]), encoding="utf-8")
        elif args.command == "decompose":
            body = cmd_decompose(args.file, args.e, args.f, args.h)
        else:
            body = cmd_roundtrip(args.file, args.e, args.f, args.h)
    except (docs.DocumentError, UsageError, OSError) as exc:
        body = {"schema": docs.SCHEMA, "command": args.command, "input": str(args.file),
                "status": "error", "message": str(exc), "checks": []}
    out = docs.dumps(body) if args.report == "json" else render_text(body)
    code = {"pass": 0, "fail": 1}.get(body["status"], 2)
    return code, out


def main(argv=None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
