"""Command-line front end tying the modules into reproducible runs.

Exit codes: 0 success, 2 file-validation errors, 3 mathematical
precondition failures (with actionable messages), 64 unknown subcommand.
Reports are deterministic byte-for-byte for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from typing import List, Optional

import jsonschema

from . import serialize
from .braids import full_twist_check, presentation_homology, vankampen_presentation
from .curves import (
    cyclic_cover_h1,
    divisibility_check,
    global_alexander,
    global_faces_and_components,
    infinity_alexander,
    local_alexander_product,
)
from .errors import AlexinvError, ValidationError
from .groups import (
    CharacterPoint,
    GroupPresentation,
    branched_cover_betti,
    charvar_membership,
    depth,
    fox_jacobian,
    local_system_h1_dim,
    one_variable_alexander,
    unbranched_cover_betti,
)
from .quasiadj import (
    constants_of_quasiadjunction,
    ideal_of_quasiadjunction,
    lct_region,
    lct_threshold,
    polytopes_and_faces,
)
from .resolution import (
    PlaneCurveGerm,
    acampo_zeta,
    local_alexander,
    multivariable_link_alexander,
    resolve,
)

SUBCOMMANDS = (
    "local",
    "global",
    "fox",
    "charvar",
    "covers",
    "quasiadj",
    "lct",
    "vankampen",
    "faces",
)

USAGE = (
    "usage: alexinv {" + ",".join(SUBCOMMANDS) + "} [options]\n"
    "Run 'alexinv <subcommand> --help' for details.\n"
)


def load_schema(schema_id: str) -> dict:
    text = resources.files("alexinv.schemas").joinpath(f"{schema_id}.json").read_text()
    return json.loads(text)


def parse_and_validate(path: str, schema_id: str):
    """Load a JSON file, check it against the named schema, and build the
    typed value.  All violations are collected, not just the first."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValidationError([f"{path}: cannot read file: {exc}"]) from exc
    except json.JSONDecodeError as exc:
        raise ValidationError([f"{path}: malformed JSON: {exc}"]) from exc
    validator = jsonschema.Draft202012Validator(load_schema(schema_id))
    violations = [
        f"{path}: {'/'.join(str(p) for p in err.path) or '<root>'}: {err.message}"
        for err in sorted(validator.iter_errors(data), key=lambda e: list(e.path))
    ]
    if violations:
        raise ValidationError(violations)
    builder = {
        "presentation": serialize.presentation_from_json,
        "braids": serialize.monodromy_from_json,
        "curve": serialize.curve_from_json,
        "tree": serialize.tree_from_json,
        "character": serialize.character_from_json,
    }[schema_id]
    try:
        return builder(data)
    except ValidationError as exc:
        raise ValidationError([f"{path}: {v}" for v in exc.violations]) from exc


def _fr(x) -> str:
    return serialize.fraction_str(x)


def _parse_character(text: str) -> CharacterPoint:
    return CharacterPoint([Fraction(part.strip()) for part in text.split(",")])


def _emit(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines: List[str] = []

    def walk(value, indent=0, key=None):
        pad = "  " * indent
        label = f"{key}: " if key is not None else ""
        if isinstance(value, dict):
            if key is not None:
                lines.append(f"{pad}{key}:")
            for k in value:
                walk(value[k], indent + (key is not None), k)
        elif isinstance(value, list):
            if key is not None:
                lines.append(f"{pad}{key}:")
            for item in value:
                if isinstance(item, (dict, list)):
                    lines.append(f"{'  ' * (indent + 1)}-")
                    walk(item, indent + 2)
                else:
                    lines.append(f"{'  ' * (indent + 1)}- {item}")
        else:
            lines.append(f"{pad}{label}{value}")

    walk(report)
    return "\n".join(lines) + "\n"


def _germ_from_args(args) -> PlaneCurveGerm:
    return PlaneCurveGerm.from_strings(*args.germ)


# ---------------------------------------------------------------------------
# subcommand handlers, each returning a report dict
# ---------------------------------------------------------------------------


def _cmd_local(args) -> dict:
    if not args.tree and not args.germ:
        raise ValidationError(["local: need --germ or --tree"])
    if args.tree:
        tree = parse_and_validate(args.tree, "tree")
        report = {"tree_file": args.tree}
    else:
        germ = _germ_from_args(args)
        tree = resolve(germ)
        report = {"germ": list(args.germ)}
    zeta = acampo_zeta(tree)
    report.update(
        {
            "resolution_tree": tree.to_json(),
            "zeta": str(zeta),
            "alexander": str(local_alexander(tree)),
        }
    )
    if tree.r >= 2:
        report["multivariable_alexander"] = str(multivariable_link_alexander(tree))
    if tree.r == 1 and tree.has_charts:
        report["constants_of_quasiadjunction"] = [
            _fr(k) for k in constants_of_quasiadjunction(tree)
        ]
    report["lct_threshold_diagonal"] = _fr(lct_threshold(tree, [1] * tree.r))
    return report


def _cmd_global(args) -> dict:
    spec = parse_and_validate(args.curve, "curve")
    fac = global_alexander(spec)
    report = {
        "degree": spec.degree,
        "components": [{"label": l, "degree": d} for l, d in spec.components],
        "factors": [
            {"kappa": _fr(k), "exponent": s} for k, s in fac.factors
        ],
        "t_minus_one_exponent": fac.t_minus_one_exponent,
        "alexander": str(fac.full_polynomial()) if fac.assembled is not None else None,
        "alexander_terms": serialize.laurent_to_json(fac.full_polynomial())
        if fac.assembled is not None
        else None,
        "local_product": str(local_alexander_product(spec)),
        "infinity": str(infinity_alexander(spec.degree)),
    }
    rep = divisibility_check(spec)
    report["divisibility"] = {
        "local": "PASS",
        "infinity": "PASS",
        "local_quotient": str(rep.local_quotient),
        "infinity_quotient": str(rep.infinity_quotient),
    }
    if args.cover:
        rank, eigen = cyclic_cover_h1(fac, args.cover, semisimple=args.semisimple)
        cover = {"n": args.cover, "rank": rank}
        if args.semisimple:
            cover["eigenvalues"] = [
                {"omega": _fr(w), "multiplicity": m} for w, m in eigen
            ]
        report["cyclic_cover"] = cover
    return report


def _cmd_fox(args) -> dict:
    pres = parse_and_validate(args.presentation, "presentation")
    matrix = fox_jacobian(pres)
    report = {
        "generators": pres.generators,
        "relators": len(pres.relators),
        "rank": pres.rank,
        "matrix": [[str(e) for e in row] for row in matrix.entries],
    }
    if pres.rank == 1:
        report["alexander"] = str(one_variable_alexander(pres))
    return report


def _cmd_charvar(args) -> dict:
    pres = parse_and_validate(args.presentation, "presentation")
    chars = [_parse_character(c) for c in args.character or []]
    for path in args.character_file or []:
        chars.append(parse_and_validate(path, "character"))
    if not chars:
        raise ValidationError(["charvar: need --character or --character-file"])
    rows = []
    for chi in chars:
        d = local_system_h1_dim(pres, chi)
        rows.append(
            {
                "character": [_fr(c) for c in chi.coords],
                "h1_dim": d,
                "depth": depth(pres, chi),
                "in_V1": charvar_membership(pres, 1, chi),
            }
        )
    return {"characters": rows}


def _cmd_covers(args) -> dict:
    pres = parse_and_validate(args.presentation, "presentation")
    report: dict = {}
    if args.cyclic is not None:
        if pres.rank != 1:
            raise AlexinvError("--cyclic requires a presentation with r = 1")
        n = args.cyclic
        report["cyclic_order"] = n
        report["unbranched_b1"] = unbranched_cover_betti(pres, (n,))
        report["branched_b1"] = branched_cover_betti({frozenset({0}): pres}, (n,))
    if args.abelian:
        orders = tuple(int(x) for x in args.abelian.split(","))
        report["abelian_orders"] = list(orders)
        report["unbranched_b1_abelian"] = unbranched_cover_betti(pres, orders)
    if not report:
        raise ValidationError(["covers: need --cyclic N or --abelian n1,n2,..."])
    return report


def _staircase_generators(members, bound):
    """Minimal monomials of a staircase (generators of a monomial ideal)."""
    out = []
    for (a, b) in sorted(members):
        if (a == 0 or (a - 1, b) not in members) and (b == 0 or (a, b - 1) not in members):
            if a + b < bound:
                out.append([a, b])
    return out


def _cmd_quasiadj(args) -> dict:
    germ = _germ_from_args(args)
    tree = resolve(germ)
    report: dict = {"germ": list(args.germ)}
    if tree.r == 1:
        report["constants"] = [_fr(k) for k in constants_of_quasiadjunction(tree)]
    if args.xi:
        xi = [Fraction(part.strip()) for part in args.xi.split(",")]
        ideal = ideal_of_quasiadjunction(tree, xi, args.variant, bound=args.jet_bound)
        report["ideal"] = {
            "xi": [_fr(x) for x in xi],
            "variant": args.variant,
            **ideal.staircase_json(),
            "colength": ideal.colength,
        }
    faces = polytopes_and_faces(tree, bound=args.jet_bound)
    rendered = []
    for qp in faces:
        for f in qp.faces:
            cons = qp.polytope.constraints()
            planes = [
                {"coeffs": [_fr(x) for x in cons[i][0]], "level": _fr(cons[i][1])}
                for i in f.face.saturated
                if i < len(qp.polytope.halfspaces)
            ]
            strict_ideal = f.ideals[0]
            rendered.append(
                {
                    "hyperplane": planes[0] if planes else None,
                    "vertices": [[_fr(x) for x in v] for v in f.face.vertices],
                    "dim": f.face.dim,
                    "ideal_staircase": _staircase_generators(
                        strict_ideal.members, strict_ideal.jet_bound
                    ),
                    "dim_quotient": f.dim_quotient,
                }
            )
    report["faces"] = rendered
    return report


def _cmd_lct(args) -> dict:
    if not args.tree and not args.germ:
        raise ValidationError(["lct: need --germ or --tree"])
    if args.tree:
        tree = parse_and_validate(args.tree, "tree")
    else:
        tree = resolve(_germ_from_args(args))
    direction = (
        [Fraction(part.strip()) for part in args.direction.split(",")]
        if args.direction
        else [Fraction(1)] * tree.r
    )
    threshold = lct_threshold(tree, direction)
    return {
        "source": args.tree if args.tree else " , ".join(args.germ),
        "direction": [_fr(d) for d in direction],
        "threshold": _fr(threshold),
        "log_canonical_at_threshold": lct_region(
            tree, [min(threshold * d, Fraction(1)) for d in direction]
        ),
    }


def _cmd_vankampen(args) -> dict:
    data = parse_and_validate(args.braids, "braids")
    pres = vankampen_presentation(data, args.mode)
    free_rank, torsion = presentation_homology(pres)
    report = {
        "mode": args.mode,
        "strands": data.strand_count,
        "full_twist": full_twist_check(data),
        "generators": pres.generators,
        "relators": len(pres.relators),
        "h1_free_rank": free_rank,
        "h1_torsion": torsion,
    }
    if isinstance(pres, GroupPresentation) and pres.rank == 1:
        try:
            report["alexander"] = str(one_variable_alexander(pres))
        except AlexinvError:
            report["alexander"] = "non-torsion module"
    return report


def _cmd_faces(args) -> dict:
    spec = parse_and_validate(args.curve, "curve")
    faces = global_faces_and_components(spec)
    return {
        "degree": spec.degree,
        "faces": [
            {
                "vertices": [[_fr(x) for x in v] for v in f.vertices],
                "level": _fr(f.level) if f.level is not None else None,
                "twist_degree": f.twist_degree,
                "h1": f.h1,
                "predicted_depth": f.predicted_depth,
                "character": f.character_description(),
                "points": f.contributing_points,
            }
            for f in faces
        ],
    }


HANDLERS = {
    "local": _cmd_local,
    "global": _cmd_global,
    "fox": _cmd_fox,
    "charvar": _cmd_charvar,
    "covers": _cmd_covers,
    "quasiadj": _cmd_quasiadj,
    "lct": _cmd_lct,
    "vankampen": _cmd_vankampen,
    "faces": _cmd_faces,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alexinv",
        description="Alexander-type invariants of plane curves and their singularities",
    )
    sub = parser.add_subparsers(dest="subcommand")

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("local", help="resolve a germ and report its local invariants")
    p.add_argument("--germ", action="append", metavar="POLY",
                   help="component polynomial in x, y (repeat for several branches)")
    p.add_argument("--tree", metavar="FILE",
                   help="explicit resolution-tree file instead of a germ")
    p = add("global", help="global Alexander polynomial and divisibility report")
    p.add_argument("--curve", required=True, metavar="FILE")
    p.add_argument("--cover", type=int, metavar="N",
                   help="also report H_1 of the N-fold cyclic cover")
    p.add_argument("--no-semisimple", dest="semisimple", action="store_false",
                   help="report only the rank of the cover homology")
    p = add("fox", help="Fox Jacobian and one-variable Alexander polynomial")
    p.add_argument("--presentation", required=True, metavar="FILE")
    p = add("charvar", help="characteristic-variety membership at characters")
    p.add_argument("--presentation", required=True, metavar="FILE")
    p.add_argument("--character", action="append", metavar="k/m[,k/m...]")
    p.add_argument("--character-file", action="append", metavar="FILE")
    p = add("covers", help="Betti numbers of finite covers")
    p.add_argument("--presentation", required=True, metavar="FILE")
    p.add_argument("--cyclic", type=int, metavar="N")
    p.add_argument("--abelian", metavar="n1,n2,...")
    p = add("quasiadj", help="ideals, constants and faces of quasiadjunction")
    p.add_argument("--germ", action="append", required=True, metavar="POLY")
    p.add_argument("--xi", metavar="k/m[,k/m...]")
    p.add_argument("--variant", choices=("strict", "weight1", "log"), default="strict")
    p.add_argument("--jet-bound", type=int, metavar="B",
                   help="raise the staircase truncation degree")
    p = add("lct", help="log-canonical threshold of a germ")
    p.add_argument("--germ", action="append", metavar="POLY")
    p.add_argument("--tree", metavar="FILE")
    p.add_argument("--direction", metavar="d1[,d2...]")
    p = add("vankampen", help="Zariski-van Kampen presentation from braid data")
    p.add_argument("--braids", required=True, metavar="FILE")
    p.add_argument("--mode", choices=("affine", "projective"), default="affine")
    p = add("faces", help="global faces of quasiadjunction of a curve")
    p.add_argument("--curve", required=True, metavar="FILE")
    return parser


def run(argv: Optional[List[str]] = None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    if not argv or argv[0] in ("-h", "--help"):
        out.write(USAGE)
        return 0
    if argv[0] not in SUBCOMMANDS:
        sys.stderr.write(f"alexinv: unknown subcommand {argv[0]!r}\n")
        sys.stderr.write(USAGE)
        return 64
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        report = HANDLERS[args.subcommand](args)
    except ValidationError as exc:
        for v in exc.violations:
            sys.stderr.write(f"error: {v}\n")
        return 2
    except (AlexinvError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    out.write(_emit(report, args.format))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
