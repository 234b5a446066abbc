"""JSON encoding of the package's values and construction of typed values
from validated JSON documents.

Rationals are serialized as strings "p/q" (or "p") to avoid precision
ambiguity; polynomials are printed and serialized in descending graded
lexicographic order (t1 < ... < tr) so reports diff reproducibly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .braids import BraidWord, MonodromyData
from .curves import ProjectiveCurveSpec, SingularPoint, local_data_for
from .errors import ValidationError
from .groups import GroupPresentation, CharacterPoint
from .laurent import FormalCycloProduct, LaurentPolynomial
from .resolution import PlaneCurveGerm, ResolutionTree


def fraction_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text) -> Fraction:
    return Fraction(str(text))


def laurent_to_json(p: LaurentPolynomial) -> dict:
    return {
        "vars": p.var_count,
        "terms": [
            {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
            for exp, c in p.sorted_terms()
        ],
    }


def laurent_from_json(data: dict) -> LaurentPolynomial:
    terms = {
        tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"]))
        for t in data["terms"]
    }
    return LaurentPolynomial(int(data["vars"]), terms)


def cyclo_product_to_json(f: FormalCycloProduct) -> dict:
    return {
        "vars": f.var_count,
        "sign": f.sign,
        "shift": list(f.shift),
        "factors": [
            {"exp": list(v), "power": e} for v, e in sorted(f.factors.items())
        ],
    }


# ---------------------------------------------------------------------------
# typed values from JSON documents (file formats documented in README)
# ---------------------------------------------------------------------------


def presentation_from_json(data: dict) -> GroupPresentation:
    """{"generators": s, "relators": [[[j, +-1], ...]], "phi": [[..], ..],
    "torsion": bool?}; generator indices are 1-based in files."""
    violations: List[str] = []
    s = int(data["generators"])
    relators = []
    for ri, rel in enumerate(data.get("relators", [])):
        letters = []
        for li, pair in enumerate(rel):
            j, e = int(pair[0]), int(pair[1])
            if not 1 <= j <= s:
                violations.append(
                    f"relator {ri + 1}, letter {li + 1}: generator {j} out of range 1..{s}"
                )
            if e not in (1, -1):
                violations.append(
                    f"relator {ri + 1}, letter {li + 1}: exponent {e} must be +-1"
                )
            letters.append((j - 1, e))
        relators.append(tuple(letters))
    phi = data.get("phi")
    if phi is None:
        phi = [[1]] * s
    if len(phi) != s:
        violations.append(f"phi must list one vector per generator ({s})")
    if violations:
        raise ValidationError(violations)
    return GroupPresentation(
        s, tuple(relators), phi, torsion=bool(data.get("torsion", False))
    )


def character_from_json(data: dict) -> CharacterPoint:
    return CharacterPoint([parse_fraction(c) for c in data["coords"]])


def monodromy_from_json(data: dict) -> MonodromyData:
    violations: List[str] = []
    d = int(data["strands"])
    braids = []
    for bi, letters in enumerate(data.get("braids", [])):
        for li, l in enumerate(letters):
            if l == 0 or abs(int(l)) >= d:
                violations.append(
                    f"braid {bi + 1}, letter {li + 1}: index {l} out of range for {d} strands"
                )
        if not violations:
            braids.append(BraidWord(d, [int(l) for l in letters]))
    labels = {int(k): str(v) for k, v in data.get("labels", {}).items()}
    if labels and set(labels) != set(range(1, d + 1)):
        violations.append("labels must cover strands 1..d exactly")
    if violations:
        raise ValidationError(violations)
    if not labels:
        labels = {i + 1: "C" for i in range(d)}
    return MonodromyData(d, braids, labels)


def tree_from_json(data: dict) -> ResolutionTree:
    return ResolutionTree.from_json(data)


def curve_from_json(data: dict) -> ProjectiveCurveSpec:
    violations: List[str] = []
    degree = int(data["degree"])
    components = [(str(c["label"]), int(c["degree"])) for c in data.get(
        "components", [{"label": "C", "degree": degree}]
    )]
    if sum(d for _, d in components) != degree:
        violations.append("component degrees do not sum to total")
    points = []
    for si, sing in enumerate(data.get("singularities", [])):
        pos = sing.get("pos")
        if pos is None or len(pos) != 2:
            violations.append(f"singularity {si + 1}: pos must be a pair")
            continue
        position = (parse_fraction(pos[0]), parse_fraction(pos[1]))
        incidence = tuple(str(x) for x in sing.get("incidence", ()))
        if "germ" in sing:
            texts = sing["germ"]
            if isinstance(texts, str):
                texts = [texts]
            germ = PlaneCurveGerm.from_strings(*texts)
            data_obj, desc = local_data_for(germ), f"germ({germ})"
        else:
            kind = sing.get("type")
            if kind == "node":
                data_obj, desc = local_data_for("node"), "node"
            elif kind == "cusp":
                data_obj, desc = local_data_for("cusp"), "cusp"
            elif kind == "torus":
                pq = sing.get("pq")
                if not pq or len(pq) != 2:
                    violations.append(f"singularity {si + 1}: torus type needs pq")
                    continue
                data_obj, desc = (
                    local_data_for("torus", (int(pq[0]), int(pq[1]))),
                    f"torus({pq[0]},{pq[1]})",
                )
            else:
                violations.append(
                    f"singularity {si + 1}: unknown type {kind!r} and no germ"
                )
                continue
        if not incidence and len(components) == 1:
            incidence = (components[0][0],)
        points.append(
            SingularPoint(
                position=position, data=data_obj, description=desc, incidence=incidence
            )
        )
    if violations:
        raise ValidationError(violations)
    return ProjectiveCurveSpec(degree, components, points)
