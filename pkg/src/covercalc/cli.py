"""cover-calc: covering numbers of direct sums of cyclic modules.

Commands:
    sigma        exact covering answer for a descriptor
    cover        sigma plus an explicit witness (--check verifies it)
    phi          punctured coset-cover count (conjectural flag where apt)
    coset-cover  explicit punctured coset cover (--puncture, --check)
    monoid       classify a direct sum of cyclic monoids
    oracle       brute-force sigma or phi on a materialized module
    verify       formula vs. oracle; exits 2 on mismatch
    snf          Smith normal form of a matrix over Z or F_p[t]
    s-set        the planes (R/m)^2 with residue below a bound

Machine output (--json) is a single JSON document with stable field order
and no timing, so identical invocations are byte-identical; exit codes:
0 ok, 1 domain error, 2 verify mismatch, 64 usage, 65 parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import cosets, covering, fppoly, modules, monoids, oracle, parser, rings, snf
from .errors import CoverCalcError, SpecSemanticError, SpecSyntaxError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64
EXIT_PARSE = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="cover-calc", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def spec_cmd(name, **kw):
        c = sub.add_parser(name, **kw)
        c.add_argument("spec")
        c.add_argument("--json", action="store_true")
        return c

    spec_cmd("sigma", help="exact covering answer")
    c = spec_cmd("cover", help="covering answer with witness")
    c.add_argument("--check", action="store_true")
    c.add_argument("--max-size", type=int, default=oracle.SIGMA_SIZE_BOUND)
    spec_cmd("phi", help="punctured coset-cover count")
    c = spec_cmd("coset-cover", help="explicit punctured coset cover")
    c.add_argument("--puncture", default="0")
    c.add_argument("--check", action="store_true")
    c.add_argument("--max-size", type=int, default=oracle.SIGMA_SIZE_BOUND)
    c = sub.add_parser("monoid", help="classify a sum of cyclic monoids")
    c.add_argument("spec")
    c.add_argument("--json", action="store_true")
    c = sub.add_parser("oracle", help="brute-force search")
    c.add_argument("mode", choices=["sigma", "phi"])
    c.add_argument("spec")
    c.add_argument("--json", action="store_true")
    c.add_argument("--max-size", type=int, default=0)
    c.add_argument("--puncture", default="0")
    c.add_argument("--maximal-only", choices=["true", "false"], default="true")
    c = spec_cmd("verify", help="formula vs. oracle")
    c.add_argument("--max-size", type=int, default=oracle.SIGMA_SIZE_BOUND)
    c.add_argument("--phi", action="store_true")
    c.add_argument("--puncture", default="0")
    c = sub.add_parser("snf", help="Smith normal form")
    c.add_argument("ring")
    c.add_argument("matrix")
    c.add_argument("--json", action="store_true")
    c = sub.add_parser("s-set", help="planes (R/m)^2 with residue < n")
    c.add_argument("ring")
    c.add_argument("n", type=int)
    c.add_argument("--json", action="store_true")
    return p


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"cover-calc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    started = time.perf_counter()
    try:
        report, code = _dispatch(args)
    except (SpecSyntaxError, SpecSemanticError) as exc:
        print(f"cover-calc: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CoverCalcError as exc:
        print(f"cover-calc: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if getattr(args, "json", False):
        print(json.dumps(report))
    else:
        _print_human(report, elapsed_ms)
    return code


def _dispatch(args) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "sigma":
        return _cmd_sigma(args), EXIT_OK
    if cmd == "cover":
        return _cmd_cover(args), EXIT_OK
    if cmd == "phi":
        return _cmd_phi(args), EXIT_OK
    if cmd == "coset-cover":
        return _cmd_coset_cover(args), EXIT_OK
    if cmd == "monoid":
        return _cmd_monoid(args), EXIT_OK
    if cmd == "oracle":
        return _cmd_oracle(args), EXIT_OK
    if cmd == "verify":
        return _cmd_verify(args)
    if cmd == "snf":
        return _cmd_snf(args), EXIT_OK
    return _cmd_s_set(args), EXIT_OK


def _base_report(command: str, text: str) -> dict:
    return {"schema": "cover-calc/1", "command": command, "input": text}


def _sigma_payload(d) -> dict:
    ans = covering.sigma(d)
    out = {"answer": ans.token()}
    if rings.is_field(d.ring):
        out["q"] = None
        out["nc"] = None
        return out
    nc = modules.nc_set(d)
    q = modules.q_value(d)
    out["q"] = str(q) if q is not None else None
    out["nc"] = "all" if nc.all_maximal else [str(m) for m in nc.ideals]
    return out


def _cmd_sigma(args) -> dict:
    ring, d = parser.parse_spec(args.spec)
    rep = _base_report("sigma", args.spec)
    rep["ring"] = parser.render_ring(ring)
    rep["descriptor"] = parser.render_descriptor(d)
    rep.update(_sigma_payload(d))
    return rep


def _witness_json(w) -> dict:
    if w.kind == covering.LINES:
        return {"kind": "lines", "ideal": str(w.ideal),
                "summands": list(w.summand_pair),
                "lines": list(w.line_strs),
                "materializable": w.materializable,
                "symbolic": w.symbolic}
    return {"kind": "chain", "chain": w.chain_kind,
            "ideal": str(w.ideal) if w.ideal else None,
            "description": w.description}


def _cmd_cover(args) -> dict:
    ring, d = parser.parse_spec(args.spec)
    rep = _cmd_sigma(args)
    rep["command"] = "cover"
    w = covering.build_cover_witness(d)
    rep["witness"] = _witness_json(w)
    if args.check:
        ok = None
        if w.kind == covering.LINES and w.materializable:
            mod = oracle.materialize(d, max_size=args.max_size)
            ok = oracle.verify_cover_witness(mod, w)
        rep["witness_checked"] = ok
    return rep


def _phi_blocks(d) -> list:
    norm = modules.normalize(d)
    blocks = []
    for m, exps in norm.blocks:
        for e, mult in exps:
            if not mult.is_finite:
                raise SpecSemanticError("phi needs finite multiplicities")
            blocks.extend([(m, e)] * mult.finite_value)
    return blocks


def _cmd_phi(args) -> dict:
    ring, d = parser.parse_spec(args.spec)
    rep = _base_report("phi", args.spec)
    rep["ring"] = parser.render_ring(ring)
    rep["descriptor"] = parser.render_descriptor(d)
    if d.has_divisible_part or d.free_rank > modules.ZERO or d.tail_above:
        raise SpecSemanticError("phi is defined for finite torsion modules")
    value, conjectural = cosets.phi_conjecture_value(ring, _phi_blocks(d))
    rep["answer"] = value
    rep["conjectural"] = conjectural
    return rep


def _cyclic_ideal(ring, d):
    if covering.classify(d).kind != covering.CYCLIC or d.is_zero:
        raise SpecSemanticError(
            "coset-cover needs a cyclic torsion module (coprime annihilators)")
    factors = {}
    for ideal, mult in d.torsion:
        for m, e in ideal.factors:
            factors[m] = factors.get(m, 0) + e * mult.finite_value
    return rings.FactoredIdeal.from_factors(factors)


def _cmd_coset_cover(args) -> dict:
    ring, d = parser.parse_spec(args.spec)
    rep = _base_report("coset-cover", args.spec)
    rep["ring"] = parser.render_ring(ring)
    rep["descriptor"] = parser.render_descriptor(d)
    ideal = _cyclic_ideal(ring, d)
    puncture = parser.parse_element(args.puncture, ring)
    w = cosets.build_coset_cover(ring, ideal, puncture)
    rep["answer"] = w.count()
    rep["witness"] = {
        "kind": "coset-cover",
        "target": w.target_str(),
        "puncture": rings.element_str(ring, w.puncture),
        "cosets": [{"submodule_generators": [rings.element_str(ring, g)],
                    "representative": rings.element_str(ring, r)}
                   for g, r in w.cosets],
    }
    if args.check:
        rep["witness_checked"] = cosets.verify_coset_cover(
            w, max_size=args.max_size)
    return rep


def _cmd_monoid(args) -> dict:
    d = parser.parse_monoid(args.spec)
    rep = _base_report("monoid", args.spec)
    rep["descriptor"] = str(d)
    ans = monoids.classify_monoid(d)
    rep["classification"] = ans.kind
    if ans.kind == monoids.IS_GROUP:
        rep["delegate"] = parser.render_descriptor(ans.group_descriptor)
        rep["answer"] = covering.sigma(ans.group_descriptor).token()
    elif ans.kind == monoids.TWO_SUBMONOIDS:
        a, b = ans.partition.part_strs()
        rep["answer"] = "two-submonoids"
        rep["partition"] = {"pivot": ans.partition.pivot, "parts": [a, b]}
        rep["partition_verified"] = monoids.verify_monoid_partition(d, ans)
    else:
        rep["answer"] = "no-cover"
    return rep


def _materialize_for_oracle(args):
    ring, d = parser.parse_spec(args.spec)
    if args.max_size:
        max_size = args.max_size
    elif args.mode == "phi":
        max_size = oracle.COSET_SIZE_BOUND
    elif args.maximal_only == "false":
        max_size = oracle.ALL_SUBGROUPS_BOUND
    else:
        max_size = oracle.SIGMA_SIZE_BOUND
    return ring, d, oracle.materialize(d, max_size=max_size), max_size


def _puncture_index(args, ring, d, mod) -> int:
    text = args.puncture
    if len(mod.summands) == 1:
        return mod.encode_ring_element(0, parser.parse_element(text, ring))
    try:
        return int(text)
    except ValueError as exc:
        raise SpecSemanticError(
            "puncture on a direct sum is an element index") from exc


def _cmd_oracle(args) -> dict:
    ring, d, mod, max_size = _materialize_for_oracle(args)
    rep = _base_report(f"oracle {args.mode}", args.spec)
    rep["ring"] = parser.render_ring(ring)
    rep["descriptor"] = parser.render_descriptor(d)
    rep["module_size"] = mod.size
    if args.mode == "sigma":
        size, witness = oracle.min_submodule_cover(
            mod, maximal_only=args.maximal_only == "true", max_size=max_size)
        rep["answer"] = size if size is not None else "no-cover"
        rep["witness"] = [{"generators": list(s.generators), "size": s.size()}
                          for s in witness]
    else:
        puncture = _puncture_index(args, ring, d, mod)
        size, witness = oracle.min_coset_cover_punctured(
            mod, puncture, max_size=max_size)
        rep["answer"] = size
        rep["puncture"] = puncture
        rep["witness"] = [{"submodule_generators": list(s.generators),
                           "representative": r}
                          for _, s, r in witness]
    return rep


def _cmd_verify(args) -> tuple[dict, int]:
    ring, d = parser.parse_spec(args.spec)
    rep = _base_report("verify", args.spec)
    rep["ring"] = parser.render_ring(ring)
    rep["descriptor"] = parser.render_descriptor(d)
    mod = oracle.materialize(d, max_size=args.max_size)
    if args.phi:
        value, conjectural = cosets.phi_conjecture_value(ring, _phi_blocks(d))
        puncture = _puncture_index(
            argparse.Namespace(puncture=args.puncture), ring, d, mod)
        got, _ = oracle.min_coset_cover_punctured(mod, puncture,
                                                  max_size=args.max_size)
        rep["formula"] = value
        rep["conjectural"] = conjectural
        rep["oracle"] = {"value": got, "match": got == value}
    else:
        formula = covering.sigma_integer(d)
        size, _ = oracle.min_submodule_cover(mod, max_size=args.max_size)
        got = size if size is not None else math.inf
        rep["formula"] = "no-cover" if formula == math.inf else formula
        rep["oracle"] = {"value": "no-cover" if size is None else size,
                         "match": got == formula}
    code = EXIT_OK if rep["oracle"]["match"] else EXIT_MISMATCH
    return rep, code


def _cmd_snf(args) -> dict:
    ring = parser.parse_ring(args.ring)
    A = parser.parse_matrix(args.matrix, ring)
    diag, U, V = snf.smith_normal_form(ring, A)
    rep = _base_report("snf", args.matrix)
    rep["ring"] = parser.render_ring(ring)
    fmt = (lambda x: fppoly.poly_str(x)) if ring.kind == rings.POLY else str
    rep["diagonal"] = [fmt(x) for x in diag]
    rep["U"] = [[fmt(x) for x in row] for row in U]
    rep["V"] = [[fmt(x) for x in row] for row in V]
    return rep


def _cmd_s_set(args) -> dict:
    ring = parser.parse_ring(args.ring)
    rep = _base_report("s-set", f"{args.ring} n={args.n}")
    rep["ring"] = parser.render_ring(ring)
    rep["modules"] = [parser.render_descriptor(d)
                      for d in covering.s_set(ring, args.n)]
    return rep


def _print_human(report: dict, elapsed_ms: float) -> None:
    for key, value in report.items():
        if key == "schema":
            continue
        if isinstance(value, (dict, list)):
            print(f"{key}: {json.dumps(value)}")
        else:
            print(f"{key}: {value}")
    print(f"elapsed: {elapsed_ms:.1f} ms")


if __name__ == "__main__":
    sys.exit(main())
