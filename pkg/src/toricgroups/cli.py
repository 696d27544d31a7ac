"""Command line front end.

Every subcommand prints either human-readable text or a stable JSON object
with the shape {command, params, bounds, result, status, evidence} and
exits 0 for computed results (including "unknown" and overflow verdicts)
or 2 for input errors.  Identical inputs and seeds produce byte-identical
JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from math import gcd

from . import coxeter, garside, maps, reps, schreier
from .cosets import CayleyTable, element_order, group_order, normal_closure_table, reflection_class_count, todd_coxeter
from .presentations import (
    FamilyParams,
    ParameterError,
    ParseError,
    build,
    serialize,
    tietze_simplify,
)
from .words import Word, WordSyntaxError

FINITE_TORIC_NAMES = {
    (2, 3, 4): "G12",
    (2, 3, 5): "G22",
    (3, 2, 3): "G4",
    (4, 2, 3): "G8",
    (5, 2, 3): "G16",
    (3, 2, 5): "G20",
}

# quotient of each finite toric group by its center (alternating subgroup of
# the corresponding triangle group)
CENTER_QUOTIENT_NAMES = {
    (2, 3, 4): "S4",
    (2, 3, 5): "A5",
    (3, 2, 3): "A4",
    (4, 2, 3): "S4",
    (5, 2, 3): "A5",
    (3, 2, 5): "A5",
}


def _is_finite_toric(k: int, n: int, m: int) -> bool:
    n, m = min(n, m), max(n, m)
    if (k, n, m) in FINITE_TORIC_NAMES:
        return True
    return k == 2 and n == 2 and m % 2 == 1


def _shephard_todd_name(k: int, n: int, m: int) -> str | None:
    n, m = min(n, m), max(n, m)
    if (k, n, m) in FINITE_TORIC_NAMES:
        return FINITE_TORIC_NAMES[(k, n, m)]
    if k == 2 and n == 2 and m % 2 == 1:
        return f"G({m},{m},2)=I2({m})"
    return None


def _emit(args, payload: dict) -> int:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        _emit_text(payload)
    return 0


def _emit_text(payload: dict) -> None:
    print(f"command: {payload['command']}")
    for key, value in sorted(payload.get("params", {}).items()):
        print(f"  {key}: {value}")
    result = payload.get("result", {})
    if isinstance(result, dict):
        for key, value in sorted(result.items()):
            if key == "presentation" and isinstance(value, str):
                print("presentation:")
                for line in value.rstrip("\n").splitlines():
                    print("  " + line)
            else:
                print(f"{key}: {value}")
    else:
        print(result)
    print(f"status: {payload['status']}")
    for item in payload.get("evidence", []):
        print(f"  - {item}")


def _payload(args, command: str, params: dict, result: dict, status: str = "ok",
             evidence: list[str] | None = None) -> dict:
    return {
        "command": command,
        "params": params,
        "bounds": {"max_cosets": args.max_cosets, "budget": args.budget, "seed": args.seed},
        "result": result,
        "status": status,
        "evidence": evidence or [],
    }


# --- subcommands --------------------------------------------------------------


def cmd_present(args) -> int:
    params = FamilyParams(args.family, tuple(args.labels), normalize=not args.no_normalize)
    pres = build(params)
    payload = _payload(
        args,
        "present",
        {"family": args.family, "labels": list(args.labels)},
        {"presentation": serialize(pres), "num_generators": len(pres.gens),
         "num_relators": len(pres.relators)},
    )
    if args.format == "text":
        sys.stdout.write(serialize(pres))
        return 0
    return _emit(args, payload)


def _parse_subgroup_words(pres, text: str) -> list[Word]:
    return [pres.alphabet.word(part) for part in text.split(";") if part.strip()]


def cmd_enumerate(args) -> int:
    params = FamilyParams(args.family, tuple(args.labels), normalize=not args.no_normalize)
    pres = build(params)
    subgens = _parse_subgroup_words(pres, args.subgroup) if args.subgroup else []
    evidence = [f"strategy {args.strategy}, bound {args.max_cosets}"]
    if args.normal_closure:
        table = normal_closure_table(pres, subgens, max_cosets=args.max_cosets, strategy=args.strategy)
        evidence.append(f"normal closure of {len(subgens)} seed(s), "
                        f"{len(table.subgroup_gens)} closure generator(s)")
    else:
        table = todd_coxeter(pres, subgens, max_cosets=args.max_cosets, strategy=args.strategy)
    if table.complete:
        what = "index" if subgens else "order"
        result = {what: table.num_cosets, "cosets": table.num_cosets}
        status = "ok"
    else:
        result = {"order": None, "cosets": table.num_cosets}
        status = "unknown"
        evidence.append(f"overflow at bound {table.bound}")
    return _emit(args, _payload(args, "enumerate",
                                {"family": args.family, "labels": list(args.labels),
                                 "subgroup": args.subgroup or ""},
                                result, status, evidence))


def cmd_classify(args) -> int:
    k, n, m = args.k, args.n, args.m
    if gcd(n, m) != 1:
        raise ParameterError(f"gcd({n},{m}) != 1")
    if min(k, n, m) < 2:
        raise ParameterError("labels must be >= 2")
    nn, mm = min(n, m), max(n, m)
    evidence: list[str] = []
    finite = _is_finite_toric(k, nn, mm)
    name = _shephard_todd_name(k, nn, mm)
    result: dict = {
        "parameters": [k, nn, mm],
        "braid_group": f"G({nn},{mm})",
        "triangle_type": coxeter.classify_triangle(k, n, m),
        "reflection_classes": k - 1,
        "finite": finite,
    }
    if finite:
        evidence.append(f"finite table membership: W({k},{nn},{mm}) = {name}")
        pres = build(FamilyParams("toric", (k, nn, mm)))
        order = group_order(pres, max_cosets=args.max_cosets)
        if order is None:
            evidence.append(f"enumeration overflowed at {args.max_cosets}; membership retained")
        else:
            evidence.append(f"enumeration confirms order {order}")
            cayley = CayleyTable(todd_coxeter(pres, max_cosets=args.max_cosets))
            classes = reflection_class_count(FamilyParams("toric", (k, nn, mm)), cayley)
            evidence.append(f"reflection classes computed: {classes}")
            result["reflection_classes_computed"] = classes
            c = maps.central_element(k, nn, mm)
            result["center_order"] = element_order(cayley, c)
            result["order"] = order
            result["center_quotient_order"] = order // result["center_order"]
            fallback = f"I2({mm})" if (k, nn) == (2, 2) else None
            result["center_quotient"] = CENTER_QUOTIENT_NAMES.get((k, nn, mm), fallback)
        result["shephard_todd"] = name
    else:
        evidence.append("not a finite-table member; group is infinite")
        result["order"] = None
        result["center_order"] = None
        evidence.append("center order unknown in the infinite case")
        report = coxeter.maximal_finite_parabolics(coxeter.CoxeterMatrix.triangle(k, n, m))
        result["maximal_finite_cyclic_orders"] = report.orders_multiset()
        evidence.append("maximal finite cyclic orders from rank-2 parabolic rotation subgroups")
        evidence.append("reflection class count k-1 holds for every toric group (derived, "
                        "confirmed by computation on the finite members)")
    status = "ok"
    return _emit(args, _payload(args, "classify", {"k": k, "n": n, "m": m}, result, status, evidence))


def cmd_sweep(args) -> int:
    jobs = []
    for k in range(2, args.max_k + 1):
        for n in range(2, args.max_m):
            for m in range(n + 1, args.max_m + 1):
                if gcd(n, m) == 1:
                    jobs.append((k, n, m))

    def one(params):
        k, n, m = params
        finite = _is_finite_toric(k, n, m)
        entry = {
            "parameters": [k, n, m],
            "finite": finite,
            "shephard_todd": _shephard_todd_name(k, n, m),
            "reflection_classes": k - 1,
            "triangle_type": coxeter.classify_triangle(k, n, m),
        }
        if finite:
            entry["order"] = group_order(build(FamilyParams("toric", (k, n, m))),
                                         max_cosets=args.max_cosets)
        else:
            rep = coxeter.maximal_finite_parabolics(coxeter.CoxeterMatrix.triangle(k, n, m))
            entry["maximal_finite_cyclic_orders"] = rep.orders_multiset()
        return entry

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            entries = list(pool.map(one, jobs))
    else:
        entries = [one(j) for j in jobs]
    payload = _payload(args, "sweep", {"max_k": args.max_k, "max_m": args.max_m},
                       {"entries": entries, "count": len(entries)})
    return _emit(args, payload)


def cmd_wp(args) -> int:
    system = args.system
    if system == "coxeter":
        k, n, m = args.params_ints(3)
        cm = coxeter.CoxeterMatrix.triangle(k, n, m)
        table = coxeter.minimal_root_table(cm)
        w = cm.alphabet().word(args.word)
        normal = table.nf(w)
        result = {"normal_form": str(normal), "identity": not normal.letters,
                  "length": len(normal.letters), "parity": coxeter.parity(normal)}
        return _emit(args, _payload(args, "wp", {"system": system, "labels": [k, n, m],
                                                 "word": args.word}, result))
    if system == "garside":
        n, m = args.params_ints(2)
        w = garside.standard_alphabet().word(args.word)
        normal = garside.gnf(n, m, w)
        result = {"normal_form": str(normal), "identity": normal.is_identity(),
                  "delta_power": normal.delta_power}
        return _emit(args, _payload(args, "wp", {"system": system, "labels": [n, m],
                                                 "word": args.word}, result))
    if system == "toric":
        k, n, m = args.params_ints(3)
        phi = maps.build_phi(k, n, m)
        w = phi.source.alphabet.word(args.word)
        image_nf = phi.oracle.table.nf(phi.apply(w))
        if image_nf.letters:
            result = {"identity": False, "central": False,
                      "coxeter_image_nf": str(image_nf)}
            return _emit(args, _payload(args, "wp", {"system": system, "labels": [k, n, m],
                                                     "word": args.word}, result))
        # the word is central (it dies in the alternating quotient)
        if _is_finite_toric(k, n, m):
            pres = build(FamilyParams("toric", (k, n, m), normalize=False))
            cayley = CayleyTable(todd_coxeter(pres, max_cosets=args.max_cosets))
            identity = cayley.eval(w) == 0
            result = {"identity": identity, "central": True, "coxeter_image_nf": "1"}
            return _emit(args, _payload(args, "wp", {"system": system, "labels": [k, n, m],
                                                     "word": args.word}, result,
                                        evidence=["decided in the finite quotient's Cayley table"]))
        result = {"identity": None, "central": True, "coxeter_image_nf": "1"}
        return _emit(args, _payload(
            args, "wp", {"system": system, "labels": [k, n, m], "word": args.word},
            result, status="unknown",
            evidence=["word lies in the center; the word problem inside the center "
                      "of an infinite toric group is open and this tool does not guess"]))
    raise ParameterError(f"unknown word-problem system {system!r}")


def cmd_derive(args) -> int:
    a, b, c = args.a, args.b, args.c
    parent = build(FamilyParams("j-parent", (a, b, c)))
    table = normal_closure_table(parent, [parent.alphabet.word("s")], max_cosets=args.max_cosets)
    if not table.complete:
        return _emit(args, _payload(args, "derive", {"a": a, "b": b, "c": c},
                                    {"presentation": None}, status="unknown",
                                    evidence=[f"enumeration overflowed at {args.max_cosets}"]))
    order = [2 * parent.alphabet.index(g) for g in ("u", "t", "s")]
    tr = schreier.schreier_transversal(table, order)
    try:
        labels = schreier.toric_coset_labels(tr)
        namer = lambda c_, g_: f"{g_}_{labels[c_][0]}_{labels[c_][1]}"
    except ValueError:
        namer = None
    rs = schreier.rs_presentation(parent, table, tr, namer=namer)
    simplified = tietze_simplify(rs.presentation, budget=args.budget)
    derived_order = group_order(simplified, max_cosets=args.max_cosets)
    evidence = [
        f"index of the normal closure of s: {table.num_cosets}",
        f"Schreier generators before simplification: {len(rs.presentation.gens)}",
    ]
    result = {
        "presentation": serialize(simplified),
        "num_generators": len(simplified.gens),
        "order": derived_order,
    }
    status = "ok" if derived_order is not None else "unknown"
    if derived_order is None:
        evidence.append(f"order enumeration overflowed at {args.max_cosets}")
    return _emit(args, _payload(args, "derive", {"a": a, "b": b, "c": c}, result, status, evidence))


def cmd_rep(args) -> int:
    rest = list(args.rest)
    if args.action != "witness":
        if len(rest) < 3:
            raise ParameterError(f"rep {args.action} needs three parameters a b c")
        try:
            args.abc = tuple(int(v) for v in rest[:3])
        except ValueError:
            raise ParameterError(f"parameters must be integers, got {rest[:3]}") from None
        args.word = rest[3] if len(rest) > 3 else None
        if args.action == "eval" and args.word is None:
            raise ParameterError("rep eval needs a word argument")
    if args.action == "witness":
        w = reps.unfaithfulness_witness(max_cosets=args.max_cosets)
        result = {
            "parameters": [6, 2, 3],
            "cube_dies_per_preset": w.rho_of_cube_is_identity,
            "order_of_x1x2_in_k3_quotient": w.order_in_small_quotient,
            "rho_stu_order": w.rho_stu_order,
            "rho_stu_is_minus_identity": w.rho_stu_is_minus_identity,
            "zero_preset_commutes": w.zero_preset_commutes,
            "unit_preset_commutes": w.unit_preset_commutes,
            "unfaithful": w.unfaithful,
        }
        return _emit(args, _payload(args, "rep", {"action": "witness"}, result))
    a, b, c = args.abc
    rep = reps.build_rho_preset(a, b, c, args.qr)
    if args.action == "check":
        identity = reps.mat_identity()
        checks = {
            "s_power": reps.mat_pow(rep.mat_s, a) == identity,
            "t_power": reps.mat_pow(rep.mat_t, b) == identity,
            "u_power": reps.mat_pow(rep.mat_u, c) == identity,
        }
        stu = reps.mat_mul(rep.mat_s, reps.mat_mul(rep.mat_t, rep.mat_u))
        tus = reps.mat_mul(rep.mat_t, reps.mat_mul(rep.mat_u, rep.mat_s))
        ust = reps.mat_mul(rep.mat_u, reps.mat_mul(rep.mat_s, rep.mat_t))
        checks["chain"] = stu == tus == ust
        checks["scalar"] = stu == reps.mat_scale(rep.scalar, identity)
        result = {"checks": checks, "all_pass": all(checks.values()),
                  "q": str(rep.q), "r": str(rep.r),
                  "matrices": {"s": reps.mat_str(rep.mat_s), "t": reps.mat_str(rep.mat_t),
                               "u": reps.mat_str(rep.mat_u)}}
        return _emit(args, _payload(args, "rep", {"action": "check", "abc": [a, b, c],
                                                  "qr": args.qr}, result))
    if args.action == "eval":
        from .words import Alphabet

        stu_alphabet = Alphabet(["s", "t", "u"])
        try:
            w = stu_alphabet.word(args.word)
        except WordSyntaxError:
            n_gens = b  # x-words live over x1..xn with n the second parameter
            w = Alphabet([f"x{i+1}" for i in range(n_gens)]).word(args.word)
        matrix = reps.rho_eval(rep, w)
        result = {"matrix": reps.mat_str(matrix),
                  "is_identity": matrix == reps.mat_identity(),
                  "q": str(rep.q), "r": str(rep.r)}
        return _emit(args, _payload(args, "rep", {"action": "eval", "abc": [a, b, c],
                                                  "qr": args.qr, "word": args.word}, result))
    raise ParameterError(f"unknown rep action {args.action!r}")


# --- argument plumbing ----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="toricgroups",
                                  description="torus knot groups, J-groups, and toric reflection groups")
    top.add_argument("--format", choices=("text", "json"), default="text")
    top.add_argument("--seed", type=int, default=0)
    top.add_argument("--max-cosets", type=int, default=10**6, dest="max_cosets")
    top.add_argument("--budget", type=int, default=10**5)
    # the same options are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-cosets", type=int, default=argparse.SUPPRESS, dest="max_cosets")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="command", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    p = sub.add_parser("present", help="print a presentation from one of the families")
    p.add_argument("family")
    p.add_argument("labels", type=int, nargs="+")
    p.add_argument("--no-normalize", action="store_true")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("enumerate", help="Todd-Coxeter enumeration; order or subgroup index")
    p.add_argument("family")
    p.add_argument("labels", type=int, nargs="+")
    p.add_argument("--subgroup", help="semicolon-separated subgroup generator words")
    p.add_argument("--normal-closure", action="store_true")
    p.add_argument("--strategy", choices=("hlt", "felsch"), default="hlt")
    p.add_argument("--no-normalize", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="classification report for W(k,n,m)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="batch classification over a parameter grid")
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--max-m", type=int, default=7)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("wp", help="word problem: coxeter/garside normal form, toric verdict")
    p.add_argument("system", choices=("coxeter", "garside", "toric"))
    p.add_argument("labels", type=int, nargs="+")
    p.add_argument("word")
    p.set_defaults(func=cmd_wp)

    p = sub.add_parser("derive", help="subgroup presentation of the normal closure of s")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("rep", help="rank-two pseudo-reflection representation")
    p.add_argument("action", choices=("check", "eval", "witness"))
    p.add_argument("rest", nargs="*", help="a b c [word]")
    p.add_argument("--qr", help="(q,r) preset name")
    p.set_defaults(func=cmd_rep)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    def params_ints(count: int) -> tuple[int, ...]:
        if len(args.labels) != count:
            raise ParameterError(f"expected {count} labels, got {len(args.labels)}")
        return tuple(args.labels)

    args.params_ints = params_ints
    try:
        return args.func(args)
    except (ParameterError, ParseError, WordSyntaxError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
