"""Batch front-end.

Exit codes: 0 every checked verdict true (or pure construction), 1 a checked
property failed (report carries the witnesses), 2 malformed input or violated
precondition.  The --json report is byte-stable for identical inputs: sorted
keys, canonical scalar strings, no timing field.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .bialgebra import LinMap, bialgebra_report, dualize, loop_algebra
from .errors import FormatError, HopfloopError, NotBijective, PreconditionViolated
from .exactmat import Matrix, field_from_name
from .hopfchecks import (
    antipode_extract,
    check_antipode_axioms,
    check_galois_compat,
    check_hqg_identity,
    convolution_unit,
    convolve,
    equivalence_report,
    invert_galois,
)
from .loops import LOOP_IDENTITY_MODES, analyze_loop, chein_double, check_loop_identity, loop_automorphisms, parse_cayley
from .serialize import (
    bialgebra_from_obj,
    canonical_json,
    emit,
    gpair_from_obj,
    matrix_to_obj,
    ydq_from_obj,
    ydq_to_obj,
)
from .ydq import BRAIDING_STEPS, build_H_alpha_beta, check_braiding_axioms, check_crossed_structure, check_ydq, validate_ydq

import json


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: bad JSON ({exc})") from exc


def _load_table(path):
    with open(path, "rb") as fh:
        return parse_cayley(fh.read())


def _finish(args, command, verdicts, witnesses=None, extra=None, artifacts=None, started=None):
    payload = {"command": command, "field": args.field, "verdicts": dict(verdicts)}
    if witnesses:
        payload["witnesses"] = witnesses
    if extra:
        payload.update(extra)
    if artifacts:
        payload["artifacts"] = list(artifacts)
    ok = all(verdicts.values())
    if args.json:
        sys.stdout.write(canonical_json(payload))
    else:
        print(f"[{command}] field={args.field}")
        for name, flag in verdicts.items():
            print(f"  {name}: {'ok' if flag else 'FAIL'}")
        if witnesses:
            for name, detail in witnesses.items():
                print(f"  witness {name}: {detail}")
        if extra:
            for key, val in extra.items():
                print(f"  {key}: {val}")
        if artifacts:
            for art in artifacts:
                print(f"  wrote {art}")
        if started is not None:
            print(f"  elapsed: {1000 * (time.monotonic() - started):.1f} ms")
        print("  result:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def _scan_payload(report, field):
    return report.as_dict(field.fmt).get("witnesses", {})


# -- verb handlers ---------------------------------------------------------------


def _cmd_check_loop(args, field):
    t = _load_table(args.table)
    started = time.monotonic()
    if args.identity:
        verdicts, witnesses = {}, {}
        for mode in args.identity:
            ok, wit = check_loop_identity(t, mode)
            verdicts[mode] = ok
            if wit is not None:
                witnesses[mode] = list(wit)
        return _finish(args, "check-loop", verdicts, witnesses, started=started)
    rep = analyze_loop(t)
    verdicts = rep.as_dict()
    witnesses = verdicts.pop("witnesses", None)
    verdicts.pop("inverse", None)
    return _finish(args, "check-loop", verdicts, witnesses, started=started)


def _cmd_autos(args, field):
    t = _load_table(args.table)
    autos = loop_automorphisms(t)
    extra = {"count": len(autos), "automorphisms": [list(a) for a in autos]}
    return _finish(args, "autos", {}, extra=extra)


def _cmd_chein(args, field):
    t = _load_table(args.table)
    doubled = chein_double(t)
    emit(doubled, args.out, "structured")
    return _finish(args, "chein", {}, extra={"order": doubled.order}, artifacts=[args.out])


def _cmd_loop_algebra(args, field):
    t = _load_table(args.table)
    b = loop_algebra(t, field)
    emit(b, args.out, "structured")
    return _finish(args, "loop-algebra", {}, extra={"dim": b.dim}, artifacts=[args.out])


def _cmd_dualize(args, field):
    b = bialgebra_from_obj(_load_json(args.bialgebra), field)
    emit(dualize(b), args.out, "structured")
    return _finish(args, "dualize", {}, artifacts=[args.out])


def _cmd_check_bialgebra(args, field):
    b = bialgebra_from_obj(_load_json(args.bialgebra), field)
    rep = bialgebra_report(b)
    wits = {k: str(v) for k, v in rep.witnesses.items()}
    extra = {"associative": rep.associative, "coassociative": rep.coassociative}
    return _finish(args, "check-bialgebra", rep.flags, wits or None, extra=extra)


def _cmd_galois(args, field):
    b = bialgebra_from_obj(_load_json(args.bialgebra), field)
    rep = invert_galois(b, args.which)
    verdicts = {"bijective": rep.bijective}
    if rep.formula_inverse_matches is not None:
        verdicts["formula_inverse_matches"] = rep.formula_inverse_matches
    witnesses = {}
    if args.compat:
        condition = "thm31_module_comodule" if args.compat == "thm31" else "def41_42_compat"
        if rep.bijective:
            comp = check_galois_compat(b, args.which, condition)
            verdicts.update(comp.flags)
            witnesses.update(_scan_payload(comp, field))
        else:
            verdicts[condition] = False
    return _finish(args, "galois", verdicts, witnesses or None)


def _cmd_antipode(args, field):
    b = bialgebra_from_obj(_load_json(args.bialgebra), field)
    verdicts, artifacts = {}, []
    maps = {}
    for which in ("t1", "t2") if args.via == "both" else (args.via,):
        try:
            maps[which] = antipode_extract(b, which)
            verdicts[f"extractable_{which}"] = True
        except NotBijective:
            verdicts[f"extractable_{which}"] = False
    if len(maps) == 2:
        verdicts["t1_t2_agree"] = maps["t1"].matrix == maps["t2"].matrix
    if b.antipode is not None and maps:
        first = next(iter(maps.values()))
        verdicts["matches_stored"] = first.matrix == b.antipode
    if args.out and maps:
        emit(next(iter(maps.values())).matrix, args.out, "structured")
        artifacts.append(args.out)
    return _finish(args, "antipode", verdicts, artifacts=artifacts or None)


def _cmd_check_hopf(args, field):
    b = bialgebra_from_obj(_load_json(args.bialgebra), field)
    if b.antipode is None:
        raise PreconditionViolated("antipode_present", "structure file carries no antipode")
    rep = check_antipode_axioms(b, b.antipode, args.mode)
    verdicts = {f"antipode_{k}": v for k, v in rep.flags.items()}
    witnesses = _scan_payload(rep, field)
    if args.identity:
        variant = "coquasigroup" if args.mode == "coquasigroup" else "quasigroup"
        idrep = check_hqg_identity(b, args.identity, variant)
        verdicts.update(idrep.flags)
        witnesses.update(_scan_payload(idrep, field))
    return _finish(args, "check-hopf", verdicts, witnesses or None)


def _named_map(b, name) -> LinMap:
    if name == "id":
        return LinMap(b.dim, b.dim, Matrix.identity(b.dim, b.field))
    if name == "antipode":
        if b.antipode is None:
            raise PreconditionViolated("antipode_present")
        return LinMap(b.dim, b.dim, b.antipode)
    if name == "unit":
        return convolution_unit(b, b)
    raise FormatError(f"unknown convolution factor {name!r}")


def _cmd_convolve(args, field):
    b = bialgebra_from_obj(_load_json(args.bialgebra), field)
    result = convolve(_named_map(b, args.left), _named_map(b, args.right), b, b)
    extra = {"matrix": matrix_to_obj(result.matrix)}
    verdicts = {}
    if args.expect_unit:
        verdicts["equals_convolution_unit"] = result.matrix == convolution_unit(b, b).matrix
    artifacts = []
    if args.out:
        emit(result.matrix, args.out, "structured")
        artifacts.append(args.out)
    return _finish(args, "convolve", verdicts, extra=extra, artifacts=artifacts or None)


def _cmd_equiv(args, field):
    b = bialgebra_from_obj(_load_json(args.bialgebra), field)
    rep = equivalence_report(b, args.theorem)
    verdicts = dict(rep.verdicts)
    verdicts["coherent"] = rep.coherent
    extra = {"detail": {k: dict(sorted(v.items())) for k, v in sorted(rep.detail.items())}}
    if rep.disagreement:
        extra["disagreement"] = list(rep.disagreement)
    return _finish(args, "equiv", verdicts, extra=extra)


def _cmd_ydq_build(args, field):
    b = bialgebra_from_obj(_load_json(args.bialgebra), field)
    pair = gpair_from_obj(_load_json(args.pair), b, field)
    module, membership = build_H_alpha_beta(b, pair)
    artifacts = []
    if args.out:
        emit(module, args.out, "structured")
        artifacts.append(args.out)
    return _finish(args, "ydq-build", membership.flags, _scan_payload(membership, field) or None,
                   artifacts=artifacts or None)


def _cmd_ydq_check(args, field):
    base = bialgebra_from_obj(_load_json(args.base), field) if args.base else None
    module = ydq_from_obj(_load_json(args.module), field, base)
    verdicts, witnesses = {}, {}
    forms = ("eq51", "eq52") if args.form == "both" else (args.form,)
    for form in forms:
        rep = check_ydq(module, form)
        verdicts.update(rep.flags)
        witnesses.update(_scan_payload(rep, field))
    if args.validate:
        rep = validate_ydq(module)
        verdicts.update({f"module_{k}": v for k, v in rep.flags.items()})
        witnesses.update(_scan_payload(rep, field))
    return _finish(args, "ydq-check", verdicts, witnesses or None)


def _cmd_braid(args, field):
    modules = [ydq_from_obj(_load_json(path), field) for path in args.modules]
    if len(modules) < 2:
        raise FormatError("braid needs at least two module files")
    m, n = modules[0], modules[1]
    p = modules[2] if len(modules) > 2 else None
    steps = args.step or ["bijective"]
    verdicts, witnesses = {}, {}
    for step in steps:
        rep = check_braiding_axioms(m, n, p, step=step)
        verdicts.update(rep.flags)
        witnesses.update(_scan_payload(rep, field))
    return _finish(args, "braid", verdicts, witnesses or None)


def _cmd_crossed_check(args, field):
    modules = [ydq_from_obj(_load_json(path), field) for path in args.modules]
    pairs = None
    if args.pairs:
        base = modules[0].base
        pairs = [gpair_from_obj(_load_json(path), base, field) for path in args.pairs]
    rep = check_crossed_structure(modules, pairs)
    return _finish(args, "crossed-check", rep.flags, _scan_payload(rep, field) or None)


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="hopfloop", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the byte-stable machine report")
    common.add_argument("--field", default="q", help="scalar field: q or fp:<prime>")
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check-loop", parents=[common], help="quasigroup and loop identity verdicts")
    p.add_argument("table")
    p.add_argument("--identity", action="append", choices=LOOP_IDENTITY_MODES)
    p.set_defaults(run=_cmd_check_loop)

    p = sub.add_parser("autos", parents=[common], help="enumerate loop automorphisms")
    p.add_argument("table")
    p.set_defaults(run=_cmd_autos)

    p = sub.add_parser("chein", parents=[common], help="double a group table into a Moufang loop")
    p.add_argument("table")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(run=_cmd_chein)

    p = sub.add_parser("loop-algebra", parents=[common], help="linear span of an IP loop")
    p.add_argument("table")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(run=_cmd_loop_algebra)

    p = sub.add_parser("dualize", parents=[common], help="dual structure constants")
    p.add_argument("bialgebra")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(run=_cmd_dualize)

    p = sub.add_parser("check-bialgebra", parents=[common], help="bialgebra axioms")
    p.add_argument("bialgebra")
    p.set_defaults(run=_cmd_check_bialgebra)

    p = sub.add_parser("galois", parents=[common], help="Galois map bijectivity and compatibility")
    p.add_argument("bialgebra")
    p.add_argument("--which", required=True, choices=("t1", "t2"))
    p.add_argument("--compat", choices=("thm31", "def4142"))
    p.set_defaults(run=_cmd_galois)

    p = sub.add_parser("antipode", parents=[common], help="extract the antipode from a Galois inverse")
    p.add_argument("bialgebra")
    p.add_argument("--via", default="both", choices=("t1", "t2", "both"))
    p.add_argument("-o", "--out")
    p.set_defaults(run=_cmd_antipode)

    p = sub.add_parser("check-hopf", parents=[common], help="antipode laws for the stored antipode")
    p.add_argument("bialgebra")
    p.add_argument("--mode", required=True, choices=("hopf", "quasigroup", "coquasigroup"))
    p.add_argument("--identity", choices=("flexible", "moufang"))
    p.set_defaults(run=_cmd_check_hopf)

    p = sub.add_parser("convolve", parents=[common], help="convolution product of named endomorphisms")
    p.add_argument("bialgebra")
    p.add_argument("--left", required=True, choices=("id", "antipode", "unit"))
    p.add_argument("--right", required=True, choices=("id", "antipode", "unit"))
    p.add_argument("--expect-unit", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(run=_cmd_convolve)

    p = sub.add_parser("equiv", parents=[common], help="characterization equivalence report")
    p.add_argument("bialgebra")
    p.add_argument("--theorem", required=True, choices=("t31", "t43"))
    p.set_defaults(run=_cmd_equiv)

    p = sub.add_parser("ydq-build", parents=[common], help="regular-coaction twisted module")
    p.add_argument("bialgebra")
    p.add_argument("--pair", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(run=_cmd_ydq_build)

    p = sub.add_parser("ydq-check", parents=[common], help="twisted compatibility of a module file")
    p.add_argument("module")
    p.add_argument("--base")
    p.add_argument("--form", default="both", choices=("eq51", "eq52", "both"))
    p.add_argument("--validate", action="store_true")
    p.set_defaults(run=_cmd_ydq_check)

    p = sub.add_parser("braid", parents=[common], help="braiding axioms for module files")
    p.add_argument("modules", nargs="+")
    p.add_argument("--step", action="append", choices=BRAIDING_STEPS)
    p.set_defaults(run=_cmd_braid)

    p = sub.add_parser("crossed-check", parents=[common], help="crossed-category laws over a fixture set")
    p.add_argument("modules", nargs="+")
    p.add_argument("--pairs", action="append")
    p.set_defaults(run=_cmd_crossed_check)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    threads = os.environ.get("HQG_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"error: bad HQG_THREADS value {threads!r}", file=sys.stderr)
            return 2
        # evaluation is sequential, which respects any positive cap
    try:
        field = field_from_name(args.field)
        return args.run(args, field)
    except HopfloopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
