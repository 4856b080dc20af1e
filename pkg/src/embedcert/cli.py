"""Command-line front end.

Anywhere an INPUT is expected, give a facet file path, ``-`` for stdin, or a
generator spec such as ``gen:complete_graph:5`` or
``gen:suspension:complete_bipartite:8:8``.

Exit codes: 0 success / NO_OBSTRUCTION / Yes, 1 OBSTRUCTED / No,
2 input or usage error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .complex import InputError, SimplicialComplex, barycentric_subdivision, format_facets, parse_facets
from .cycles import (
    BudgetExceeded,
    Decision,
    GirthValue,
    SearchBudget,
    m_complete_basis,
    min_weight_cycle,
)
from .generators import generate, is_gen_spec, parse_gen_spec
from .obstruction import Target, Verdict, battery, skeleton_of_manifold
from .report import girth_report, info_report, mcomplete_report, obstruct_report

EXIT_OK, EXIT_OBSTRUCTED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def load_input(spec: str) -> SimplicialComplex:
    if is_gen_spec(spec):
        return parse_gen_spec(spec)
    if spec == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {spec}: {exc.strerror}") from None
    cx = parse_facets(text)
    if cx.dim < 0:
        raise InputError(f"{spec}: no facets found")
    return cx


def _budget(args) -> SearchBudget:
    return SearchBudget(
        max_kernel_dim=args.girth_cap,
        max_basis_kernel_dim=getattr(args, "basis_cap", 14),
        max_nodes=getattr(args, "node_cap", 2_000_000),
    )


def _need_dim1(cx: SimplicialComplex) -> None:
    if cx.dim < 1:
        raise InputError("this command needs a complex of dimension >= 1")


def _emit(args, payload: dict, text: list[str]) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print("\n".join(text))


def _fmt(x) -> str:
    return "-" if x is None else "(" + ", ".join(str(v) for v in x) + ")"


def _rat(pair) -> str:
    if pair is None:
        return "-"
    num, den = pair
    return str(num) if den == 1 else f"{num}/{den}"


def cmd_info(args) -> int:
    cx = load_input(args.input)
    rep = info_report(cx)
    torsion = ", ".join(f"H_{k}: {list(t)}" for k, t in enumerate(rep["torsion"]) if t) or "none"
    lines = [
        f"digest     {rep['input_digest'][:16]}",
        f"dimension  {cx.dim}",
        f"f-vector   {_fmt(rep['f_vector'])}",
        f"betti(Z2)  {_fmt(rep['betti_z2'])}",
        f"delta      {_fmt(rep['delta'])}",
        f"chi_(j-1)  {_fmt(rep['chi'])}",
        f"euler      {rep['euler_characteristic']}",
        f"torsion    {torsion}",
        f"pure       {rep['pure']}",
        f"ridges     {rep['ridge_regularity']}",
        f"balanced   {rep['balanced']}",
    ]
    _emit(args, rep, lines)
    return EXIT_OK


def cmd_obstruct(args) -> int:
    cx = load_input(args.input)
    budget = _budget(args)
    if args.skeleton_of_manifold:
        v = skeleton_of_manifold(cx, budget, short_circuit=not args.full)
        cx = cx.skeleton(cx.dim - 1)
    else:
        _need_dim1(cx)
        v = battery(cx, Target(args.target), budget, short_circuit=not args.full)
    rep = obstruct_report(cx, v)
    lines = [f"target {v.target.value}: {v.verdict.value}"]
    if v.girth is not None:
        lines.append(f"girth {v.girth.value} ({v.girth.quality})")
    if v.torsion_checked:
        lines.append(f"torsion H_{cx.dim - 1}: {list(v.torsion.factors) if v.torsion else 'none'}")
    for r in rep["inequalities"]:
        if not r["applicable"]:
            if args.verbose:
                lines.append(f"  n/a       {r['name']}: {r['reason']}")
            continue
        status = "VIOLATED" if not r["satisfied"] else ("tight" if r["tight"] else "ok")
        lines.append(f"  {status:<9} {r['name']}: {_rat(r['lhs'])} <= {_rat(r['rhs'])}   [{r['formula']}]")
    lines += [f"note: {n}" for n in v.notes]
    _emit(args, rep, lines)
    return EXIT_OBSTRUCTED if v.verdict is Verdict.OBSTRUCTED else EXIT_OK


def cmd_girth(args) -> int:
    cx = load_input(args.input)
    _need_dim1(cx)
    found = min_weight_cycle(cx, _budget(args))
    g = GirthValue(cx.dim + 2, True) if found is None else GirthValue(found[0], True, found[1])
    rep = girth_report(cx, g)
    lines = [str(g.value)]
    if args.verbose and g.witness is not None:
        lines.append("witness: " + "; ".join(" ".join(f) for f in rep["certificates"][0]["supports"][0]))
    _emit(args, rep, lines)
    return EXIT_OK


def cmd_mcomplete(args) -> int:
    cx = load_input(args.input)
    _need_dim1(cx)
    res = m_complete_basis(cx, args.m, _budget(args))
    rep = mcomplete_report(cx, args.m, res)
    lines = [res.decision.value.capitalize()]
    if res.certificate is not None:
        for support in rep["certificates"][0]["supports"]:
            lines.append("  " + "; ".join(" ".join(f) for f in support))
    if res.refutation is not None:
        r = res.refutation
        weak = " (girth lower bound)" if r.weak_bound else ""
        lines.append(f"refutation: {r.girth}*{r.beta} = {r.lhs} > {r.m}*{r.f_top} = {r.rhs}{weak}")
    elif res.reason:
        lines.append(res.reason)
    _emit(args, rep, lines)
    return {Decision.YES: EXIT_OK, Decision.NO: EXIT_OBSTRUCTED, Decision.UNKNOWN: EXIT_BUDGET}[res.decision]


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    spec = [args.family, *args.params]
    if len(spec) == 1 and ":" in args.family:
        cx = parse_gen_spec(args.family)
        label = args.family
    else:
        cx = generate(*spec)
        label = ":".join(spec)
    _write(format_facets(cx, f"generated: {label}"), args.output)
    return EXIT_OK


def cmd_subdivide(args) -> int:
    cx = load_input(args.input)
    _write(format_facets(barycentric_subdivision(cx), "barycentric subdivision"), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="embedcert", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, json_flag=True):
        sp.add_argument("input", help="facet file, '-' for stdin, or gen:family:params")
        if json_flag:
            sp.add_argument("--json", action="store_true", help="emit the JSON report")
        sp.add_argument("-v", "--verbose", action="store_true")
        sp.add_argument("--girth-cap", type=int, default=22, help="max kernel dimension for exact girth")

    sp = sub.add_parser("info", help="f-vector, Betti numbers, torsion, structure")
    common(sp)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("obstruct", help="run the inequality battery")
    common(sp)
    sp.add_argument("--target", choices=[t.value for t in Target], default="codim1")
    sp.add_argument("--basis-cap", type=int, default=14)
    sp.add_argument("--full", action="store_true", help="always compute the exact girth")
    sp.add_argument("--skeleton-of-manifold", action="store_true",
                    help="input is a closed (d+1)-pseudomanifold; test its d-skeleton")
    sp.set_defaults(func=cmd_obstruct)

    sp = sub.add_parser("girth", help="minimum support of a nonzero top cycle")
    common(sp)
    sp.set_defaults(func=cmd_girth)

    sp = sub.add_parser("mcomplete", help="decide whether an m-complete basis exists")
    common(sp)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--basis-cap", type=int, default=14)
    sp.add_argument("--node-cap", type=int, default=2_000_000)
    sp.set_defaults(func=cmd_mcomplete)

    sp = sub.add_parser("gen", help="write a generated complex as a facet file")
    sp.add_argument("family", help="family name, or a full family:p1:p2 spec")
    sp.add_argument("params", nargs="*")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("subdivide", help="barycentric subdivision as a facet file")
    sp.add_argument("input")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_subdivide)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
