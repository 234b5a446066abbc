"""Global invariants of projective plane curves: homology of the
complement, Alexander polynomial at infinity, local Alexander products,
superabundance-driven global Alexander polynomials, divisibility verdicts,
cyclic-cover Betti numbers, Nori abelianity certificates, and global faces
of quasiadjunction with their predicted characteristic-variety components.

The curve is always assumed transversal to the line at infinity, and all
singular positions lie in one affine chart with rational coordinates.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import cyclotomic_polynomial, root_multiplicity
from .errors import BadGerm, TheoremViolation, UnsupportedDimension
from .laurent import (
    FormalCycloProduct,
    LaurentPolynomial,
    common_root_count,
    exact_divide,
    normalize_unit,
)
from .linalg import cokernel_invariants, rational_rank
from .polytope import RationalPolytope
from .quasiadj import (
    LocalIdealDescription,
    jet_bound,
    kappa_constant,
    monomial_kappa,
    polytopes_and_faces,
    _monomial_orders,
)
from .resolution import (
    PlaneCurveGerm,
    ResolutionTree,
    local_alexander,
    resolve,
    torus_knot_alexander,
)


# ---------------------------------------------------------------------------
# local data attached to one singular point
# ---------------------------------------------------------------------------


class LocalData:
    """Closed-form or resolution-backed invariants of one singular germ."""

    def delta(self) -> LaurentPolynomial:
        raise NotImplementedError

    def constants(self) -> List[Fraction]:
        raise NotImplementedError

    def ideal_at(self, kappa: Fraction) -> LocalIdealDescription:
        """The ideal J_kappa cutting the linear-system conditions: the
        strict ideal of quasiadjunction along the diagonal xi = kappa."""
        raise NotImplementedError

    def branch_count(self) -> int:
        raise NotImplementedError

    def local_faces(self):
        """Faces of quasiadjunction in the local cube (r <= 3), as
        (constraints, dim) data for the global lift; [] when none."""
        return []


class NamedGermData(LocalData):
    """node, cusp, or a (p, q) torus-knot germ, via the monomial formulas."""

    def __init__(self, p: int, q: int, kind: str):
        self.p, self.q, self.kind = p, q, kind

    def delta(self) -> LaurentPolynomial:
        if self.kind == "node":
            t = LaurentPolynomial.variable()
            return t - 1
        return torus_knot_alexander(self.p, self.q)

    def branch_count(self) -> int:
        return 2 if self.kind == "node" else 1

    def constants(self) -> List[Fraction]:
        if self.kind == "node":
            return []
        out = set()
        for i in range(self.p):
            for j in range(self.q):
                k = kappa_constant(self.p, self.q, i, j)
                if 0 < k < 1:
                    out.add(k)
        return sorted(out)

    def ideal_at(self, kappa: Fraction) -> LocalIdealDescription:
        kappa = Fraction(kappa)
        bound = self.p + self.q
        members, nonmembers = set(), []
        for total in range(bound):
            for i in range(total + 1):
                j = total - i
                if self.kind == "node" or kappa > kappa_constant(self.p, self.q, i, j):
                    members.add((i, j))
                else:
                    nonmembers.append((i, j))
        return LocalIdealDescription(
            variant="strict",
            xi=(kappa,),
            jet_bound=bound,
            members=frozenset(members),
            nonmembers=tuple(sorted(nonmembers)),
            tree=None,
        )

    def local_faces(self):
        return [((kappa,), None) for kappa in self.constants()]


class ResolvedGermData(LocalData):
    """Invariants produced by an embedded resolution of an explicit germ."""

    def __init__(self, germ: PlaneCurveGerm):
        self.germ = germ
        self.tree: ResolutionTree = resolve(germ)

    def delta(self) -> LaurentPolynomial:
        return local_alexander(self.tree)

    def branch_count(self) -> int:
        return self.germ.r

    def constants(self) -> List[Fraction]:
        """Jumping values of the diagonal family xi = (kappa, ..., kappa),
        i.e. of the ideals attached to the cyclic covers z^n = f."""
        if not self.tree.nodes:
            return []
        bound = jet_bound(self.tree)
        values = set()
        for _, e in _monomial_orders(self.tree, bound - 1).items():
            k = monomial_kappa(self.tree, e)
            if 0 < k < 1:
                values.add(k)
        return sorted(values)

    def ideal_at(self, kappa: Fraction) -> LocalIdealDescription:
        kappa = Fraction(kappa)
        if not self.tree.nodes:
            bound = 2
            members = {(i, j) for i in range(bound) for j in range(bound - i)}
            return LocalIdealDescription(
                "strict", (kappa,), bound, frozenset(members), (), None
            )
        from .quasiadj import ideal_of_quasiadjunction

        return ideal_of_quasiadjunction(
            self.tree, (kappa,) * self.tree.r, "strict"
        )

    def local_faces(self):
        if not self.tree.nodes:
            return []
        out = []
        for qp in polytopes_and_faces(self.tree):
            for f in qp.faces:
                cons = qp.polytope.constraints()
                saturated = [cons[i] for i in f.face.saturated if i < len(qp.polytope.halfspaces)]
                out.append((None, (f.face, saturated, qp.polytope)))
        return out


def local_data_for(kind_or_germ, pq: Optional[Tuple[int, int]] = None) -> LocalData:
    if kind_or_germ == "node":
        return NamedGermData(2, 2, "node")
    if kind_or_germ == "cusp":
        return NamedGermData(2, 3, "torus")
    if kind_or_germ == "torus":
        p, q = pq
        return NamedGermData(p, q, "torus")
    if isinstance(kind_or_germ, PlaneCurveGerm):
        return ResolvedGermData(kind_or_germ)
    raise BadGerm(f"unknown singularity type {kind_or_germ!r}")


# ---------------------------------------------------------------------------
# curve specifications
# ---------------------------------------------------------------------------


@dataclass
class SingularPoint:
    position: Tuple[Fraction, Fraction]
    data: LocalData
    description: str
    incidence: Tuple[str, ...] = ()


@dataclass
class ProjectiveCurveSpec:
    degree: int
    components: List[Tuple[str, int]]  # (label, degree)
    singularities: List[SingularPoint] = field(default_factory=list)

    def __post_init__(self):
        if sum(d for _, d in self.components) != self.degree:
            raise BadGerm("component degrees do not sum to the total degree")
        if len({lab for lab, _ in self.components}) != len(self.components):
            raise BadGerm("component labels must be distinct")
        positions = [p.position for p in self.singularities]
        if len(set(positions)) != len(positions):
            raise BadGerm("singular positions must be pairwise distinct")
        for p in self.singularities:
            for lab in p.incidence:
                if lab not in {l for l, _ in self.components}:
                    raise BadGerm(f"unknown component label {lab!r} in incidence")
        self._plucker_sanity()

    def _plucker_sanity(self):
        delta = sum(1 for p in self.singularities if p.description == "node")
        kappa = sum(1 for p in self.singularities if p.description == "cusp")
        genus_bound = (self.degree - 1) * (self.degree - 2) // 2
        if delta + kappa > genus_bound:
            warnings.warn(
                f"{delta} nodes + {kappa} cusps exceed (d-1)(d-2)/2 = "
                f"{genus_bound}; the spec may not be realizable",
                stacklevel=3,
            )

    @property
    def r(self) -> int:
        return len(self.components)

    @classmethod
    def build(cls, degree: int, singularities, components=None) -> "ProjectiveCurveSpec":
        """singularities: iterable of (position pair, type) where type is
        'node', 'cusp', (p, q), or a germ string / PlaneCurveGerm."""
        comps = components or [("C", degree)]
        pts = []
        for pos, kind in singularities:
            position = (Fraction(pos[0]), Fraction(pos[1]))
            if kind == "node":
                data, desc = local_data_for("node"), "node"
            elif kind == "cusp":
                data, desc = local_data_for("cusp"), "cusp"
            elif isinstance(kind, tuple):
                data, desc = local_data_for("torus", kind), f"torus({kind[0]},{kind[1]})"
            else:
                germ = kind if isinstance(kind, PlaneCurveGerm) else PlaneCurveGerm.from_strings(kind)
                data, desc = local_data_for(germ), f"germ({germ})"
            pts.append(
                SingularPoint(
                    position=position,
                    data=data,
                    description=desc,
                    incidence=tuple(lab for lab, _ in comps)[:1]
                    if len(comps) == 1
                    else (),
                )
            )
        return cls(degree=degree, components=list(comps), singularities=pts)


def transform_positions(spec: ProjectiveCurveSpec, matrix) -> ProjectiveCurveSpec:
    """Apply a projective change of coordinates (3x3 rational matrix, rows
    act on (x, y, 1)) to the singular positions.  Positions landing at
    infinity are rejected: the affine-chart assumption is mandatory."""
    m = [[Fraction(x) for x in row] for row in matrix]
    new_points = []
    for p in spec.singularities:
        v = (p.position[0], p.position[1], Fraction(1))
        image = [sum(m[i][j] * v[j] for j in range(3)) for i in range(3)]
        if image[2] == 0:
            raise BadGerm(
                f"position {p.position} maps to infinity; choose another chart"
            )
        new_points.append(
            SingularPoint(
                position=(image[0] / image[2], image[1] / image[2]),
                data=p.data,
                description=p.description,
                incidence=p.incidence,
            )
        )
    return ProjectiveCurveSpec(spec.degree, list(spec.components), new_points)


# ---------------------------------------------------------------------------
# elementary global invariants
# ---------------------------------------------------------------------------


def h1_complement(degrees: Sequence[int]) -> Tuple[int, List[int]]:
    """(free rank, torsion factors) of Z^r modulo the degree vector."""
    degrees = [int(d) for d in degrees]
    if any(d < 1 for d in degrees):
        raise BadGerm("degrees must be positive")
    return cokernel_invariants([degrees], len(degrees))


def infinity_alexander(d: int) -> LaurentPolynomial:
    """(t^d - 1)^{d-2} (t - 1), the Alexander polynomial of the link at
    infinity of a curve transversal to the line at infinity."""
    if d < 1:
        raise BadGerm("degree must be positive")
    f = FormalCycloProduct.one_minus_power((d,), d - 2) * FormalCycloProduct.t_minus_one()
    return normalize_unit(f.expand())


def local_alexander_product(spec: ProjectiveCurveSpec) -> LaurentPolynomial:
    out = LaurentPolynomial.one()
    for p in spec.singularities:
        out = out * p.data.delta()
    return normalize_unit(out) if not out.is_one() else out


def nori_abelian_certificate(d: int, nodes: int, cusps: int) -> bool:
    """True certifies an abelian fundamental group: d^2 > 6 kappa + 4 delta.
    False is inconclusive."""
    if nodes < 0 or cusps < 0:
        raise BadGerm("counts must be nonnegative")
    return d * d > 6 * cusps + 4 * nodes


# ---------------------------------------------------------------------------
# superabundance and the global Alexander polynomial
# ---------------------------------------------------------------------------


def _monomials_up_to(m: int):
    return [(i, j) for total in range(m + 1) for i in range(total + 1) for j in [total - i]]


def _condition_rows(spec: ProjectiveCurveSpec, kappa: Fraction, m: int):
    cols = _monomials_up_to(m)
    col_index = {mono: idx for idx, mono in enumerate(cols)}
    rows = []
    colength = 0
    for point in spec.singularities:
        ideal = point.data.ideal_at(kappa)
        colength += ideal.colength
        x0, y0 = point.position
        for alpha, beta in ideal.nonmembers:
            row = [Fraction(0)] * len(cols)
            for (i, j) in cols:
                if i >= alpha and j >= beta:
                    row[col_index[(i, j)]] = (
                        comb(i, alpha) * comb(j, beta) * x0 ** (i - alpha) * y0 ** (j - beta)
                    )
            rows.append(row)
    return rows, colength, len(cols)


def superabundance(spec: ProjectiveCurveSpec, kappa: Fraction) -> int:
    """h^1 of the twisted quasiadjunction ideal sheaf at degree d-3-d*kappa:
    the excess of the actual over the expected dimension of the linear
    system of curves through the singularities with the local conditions
    J_kappa.  Returns 0 when d*kappa is not an integer or the degree is
    negative (non-contributing)."""
    kappa = Fraction(kappa)
    dk = spec.degree * kappa
    if dk.denominator != 1:
        return 0
    m = spec.degree - 3 - int(dk)
    if m < 0:
        return 0
    rows, colength, _ = _condition_rows(spec, kappa, m)
    rank = rational_rank(rows) if rows else 0
    h1 = colength - rank
    assert h1 >= 0
    return h1


@dataclass
class AlexanderFactorization:
    """Factor list ((t - e^{2 pi i kappa})(t - e^{-2 pi i kappa}))^s plus the
    assembled rational polynomial when Galois-conjugate kappas carry equal
    exponents, and the (t-1)^{r-1} bookkeeping factor for reducible curves."""

    factors: List[Tuple[Fraction, int]]
    t_minus_one_exponent: int = 0
    assembled: Optional[LaurentPolynomial] = None
    assembly_warning: Optional[str] = None

    def full_polynomial(self) -> Optional[LaurentPolynomial]:
        if self.assembled is None:
            return None
        t = LaurentPolynomial.variable()
        return normalize_unit(self.assembled * (t - 1) ** self.t_minus_one_exponent)


def assemble_factors(factors: List[Tuple[Fraction, int]]):
    """Multiply conjugate pairs into a rational polynomial when possible."""
    by_order: Dict[int, Dict[Fraction, int]] = {}
    for kappa, s in factors:
        kappa = Fraction(kappa) % 1
        kappa = min(kappa, 1 - kappa)  # the pair covers kappa and -kappa
        m = kappa.denominator
        by_order.setdefault(m, {})[kappa] = by_order.get(m, {}).get(kappa, 0) + s
    poly = LaurentPolynomial.one()
    for m, seen in sorted(by_order.items()):
        needed = {
            min(Fraction(j, m), 1 - Fraction(j, m))
            for j in range(1, m)
            if gcd(j, m) == 1
        }
        exponents = {seen.get(k, 0) for k in needed}
        if len(exponents) != 1:
            return None, (
                f"kappa orbit of order {m} has unequal exponents; "
                "rational assembly impossible"
            )
        s = exponents.pop()
        if s == 0:
            continue
        phi_m = LaurentPolynomial.from_univariate(list(cyclotomic_polynomial(m)))
        power = s * (2 if m <= 2 else 1)
        poly = poly * phi_m**power
    return normalize_unit(poly) if not poly.is_zero() else poly, None


def global_alexander(spec: ProjectiveCurveSpec) -> AlexanderFactorization:
    """Theorem of position of singularities: for each constant of
    quasiadjunction kappa with d*kappa integral, the conjugate-pair factor
    enters with exponent equal to the superabundance at kappa."""
    kappas = sorted({k for p in spec.singularities for k in p.data.constants()})
    factors = []
    for kappa in kappas:
        if (spec.degree * kappa).denominator != 1:
            continue
        if spec.degree - 3 - int(spec.degree * kappa) < 0:
            continue
        s = superabundance(spec, kappa)
        if s > 0:
            factors.append((kappa, s))
    assembled, warning = assemble_factors(factors)
    if warning:
        warnings.warn(warning, stacklevel=2)
    return AlexanderFactorization(
        factors=factors,
        t_minus_one_exponent=spec.r - 1,
        assembled=assembled,
        assembly_warning=warning,
    )


@dataclass
class DivisibilityReport:
    alexander: LaurentPolynomial
    local_product: LaurentPolynomial
    infinity: LaurentPolynomial
    local_quotient: LaurentPolynomial
    infinity_quotient: LaurentPolynomial

    @property
    def passes(self) -> bool:
        return True  # construction fails loudly otherwise


def divisibility_check(spec: ProjectiveCurveSpec) -> DivisibilityReport:
    """Verify Delta_C | prod of local polynomials and Delta_C | Delta_inf.
    A division failure raises TheoremViolation: it cannot happen on data
    describing an actual curve."""
    fac = global_alexander(spec)
    delta = fac.full_polynomial()
    if delta is None:
        raise TheoremViolation("global Alexander polynomial did not assemble")
    local = local_alexander_product(spec)
    inf = infinity_alexander(spec.degree)
    try:
        q_local = normalize_unit(exact_divide(local, delta))
        q_inf = normalize_unit(exact_divide(inf, delta))
    except Exception as exc:  # noqa: BLE001 - reported as theorem violation
        raise TheoremViolation(f"divisibility failed: {exc}") from exc
    return DivisibilityReport(
        alexander=delta,
        local_product=local,
        infinity=inf,
        local_quotient=q_local,
        infinity_quotient=q_inf,
    )


# ---------------------------------------------------------------------------
# homology of cyclic covers
# ---------------------------------------------------------------------------


def cyclic_cover_h1(delta, n: int, semisimple: bool = True):
    """Rank of H_1 of (a resolution of) the n-fold cyclic cover, plus the
    per-eigenvalue multiplicities when the module is semisimple.

    ``delta`` is a one-variable polynomial (treated as a single cyclic
    factor: each common root with t^n - 1 counts once) or an
    AlexanderFactorization (each conjugate-pair factor contributes its
    exponent at every matching root, and the (t-1)^{r-1} part contributes
    r - 1 at the trivial eigenvalue)."""
    if n < 1:
        raise BadGerm("n must be positive")
    eigen: List[Tuple[Fraction, int]] = []
    if isinstance(delta, AlexanderFactorization):
        rank = delta.t_minus_one_exponent
        for kappa, s in delta.factors:
            if (n * kappa).denominator == 1:
                pair = 1 if kappa == Fraction(1, 2) else 2
                rank += pair * s
        if semisimple:
            for k in range(1, n):
                omega = Fraction(k, n)
                mult = sum(
                    s
                    for kappa, s in delta.factors
                    if omega % 1 in (kappa % 1, (-kappa) % 1)
                )
                if mult:
                    eigen.append((omega, mult))
        return rank, eigen
    if delta.is_zero():
        raise BadGerm("zero polynomial")
    rank = common_root_count(delta, n)
    if semisimple:
        for k in range(1, n):
            mult = root_multiplicity(delta, Fraction(k, n))
            if mult:
                eigen.append((Fraction(k, n), mult))
    return rank, eigen


# ---------------------------------------------------------------------------
# global faces of quasiadjunction
# ---------------------------------------------------------------------------


@dataclass
class GlobalFace:
    vertices: Tuple[Tuple[Fraction, ...], ...]
    interior_point: Tuple[Fraction, ...]
    level: Optional[Fraction]
    twist_degree: Optional[int]
    h1: Optional[int]
    predicted_depth: Optional[int]
    contributing_points: List[int]  # indices into spec.singularities
    ideal_colengths: Dict[int, int]

    def character_description(self) -> str:
        coords = ", ".join(str(x) for x in self.interior_point)
        return f"exp(+-2*pi*i*({coords}))"


def _lifted_constraints(spec: ProjectiveCurveSpec, point_idx: int, face_data):
    """Halfspace list over the global cube for one local face."""
    point = spec.singularities[point_idx]
    labels = [lab for lab, _ in spec.components]
    if point.incidence:
        coords = [labels.index(lab) for lab in point.incidence]
    else:
        coords = list(range(len(labels)))[: point.data.branch_count()]
    r = len(labels)
    constraints = []

    def lift(normal_local, bound, strict=False):
        normal = [Fraction(0)] * r
        for c, nl in zip(coords, normal_local):
            normal[c] += Fraction(nl)
        constraints.append((tuple(normal), Fraction(bound), strict))

    simple, rich = face_data
    if rich is None:
        # a 0-dimensional face at xi = kappa on a one-branch germ
        (kappa,) = simple
        lift((1,), kappa)
        lift((-1,), -kappa)
        return constraints
    face, saturated, poly = rich
    for normal, bound, _ in saturated:
        lift(normal, bound)
        lift(tuple(-x for x in normal), -bound)
    for normal, bound, strict in poly.halfspaces:
        lift(normal, bound, strict)
    return constraints


def global_faces_and_components(spec: ProjectiveCurveSpec) -> List[GlobalFace]:
    """Lift each singular point's quasiadjunction faces into the global
    cube, intersect collections of them, and compute on every face with an
    integral level l = sum d_i xi_i the superabundance of the twisted
    ideal sheaf at degree d - 3 - l; the face then predicts a component
    exp(2 pi i F) of depth h^1 in the characteristic variety."""
    r = spec.r
    if r > 3:
        raise UnsupportedDimension("global faces supported for r <= 3 components")
    # identical lifted faces (e.g. many cusps of one component, all lifting
    # to xi = 1/6) are merged before the subset enumeration
    merged: Dict[frozenset, List[int]] = {}
    for idx, point in enumerate(spec.singularities):
        for face_data in point.data.local_faces():
            key = frozenset(_lifted_constraints(spec, idx, face_data))
            merged.setdefault(key, []).append(idx)
    lifted = [(sorted(set(points)), sorted(key)) for key, points in sorted(
        merged.items(), key=lambda kv: sorted(kv[0])
    )]
    results: Dict[tuple, GlobalFace] = {}
    degs = [Fraction(d) for _, d in spec.components]
    max_size = len(lifted) if len(lifted) <= 12 else 3
    for size in range(1, max_size + 1):
        for combo in combinations(range(len(lifted)), size):
            constraints = [c for i in combo for c in lifted[i][1]]
            poly = RationalPolytope(r, constraints)
            verts = poly.vertices()
            if not verts or poly.is_empty():
                continue
            key = tuple(verts)
            interior = tuple(
                sum((v[i] for v in verts), Fraction(0)) / len(verts)
                for i in range(r)
            )
            if any(not 0 < x < 1 for x in interior):
                continue
            levels = {sum(d * v[i] for i, d in enumerate(degs)) for v in verts}
            level = levels.pop() if len(levels) == 1 else None
            if key in results:
                existing = results[key]
                for i in combo:
                    for pt in lifted[i][0]:
                        if pt not in existing.contributing_points:
                            existing.contributing_points.append(pt)
                existing.contributing_points.sort()
                continue
            twist = h1 = None
            colengths: Dict[int, int] = {}
            if level is not None and level.denominator == 1:
                twist = spec.degree - 3 - int(level)
                if twist >= 0:
                    h1, colengths = _face_h1(spec, interior, twist)
            results[key] = GlobalFace(
                vertices=tuple(verts),
                interior_point=interior,
                level=level,
                twist_degree=twist,
                h1=h1,
                predicted_depth=h1,
                contributing_points=sorted({pt for i in combo for pt in lifted[i][0]}),
                ideal_colengths=colengths,
            )
    out = list(results.values())
    out.sort(key=lambda f: (f.level if f.level is not None else Fraction(-1), f.vertices))
    return out


def _face_h1(spec: ProjectiveCurveSpec, xi_global, m: int):
    cols = _monomials_up_to(m)
    col_index = {mono: idx for idx, mono in enumerate(cols)}
    labels = [lab for lab, _ in spec.components]
    rows = []
    colength_total = 0
    colengths = {}
    for idx, point in enumerate(spec.singularities):
        if point.incidence:
            coords = [labels.index(lab) for lab in point.incidence]
        else:
            coords = list(range(len(labels)))[: point.data.branch_count()]
        local_xi = [xi_global[c] for c in coords]
        ideal = _ideal_at_vector(point.data, local_xi)
        colength_total += ideal.colength
        colengths[idx] = ideal.colength
        x0, y0 = point.position
        for alpha, beta in ideal.nonmembers:
            row = [Fraction(0)] * len(cols)
            for (i, j) in cols:
                if i >= alpha and j >= beta:
                    row[col_index[(i, j)]] = (
                        comb(i, alpha) * comb(j, beta) * x0 ** (i - alpha) * y0 ** (j - beta)
                    )
            rows.append(row)
    rank = rational_rank(rows) if rows else 0
    return colength_total - rank, colengths


def _ideal_at_vector(data: LocalData, xi_local):
    if isinstance(data, ResolvedGermData) and data.tree.nodes:
        from .quasiadj import ideal_of_quasiadjunction

        if len(xi_local) == data.tree.r:
            return ideal_of_quasiadjunction(data.tree, xi_local, "strict")
        # single shared coordinate for a multibranch germ on one component
        return ideal_of_quasiadjunction(
            data.tree, list(xi_local) * data.tree.r, "strict"
        )
    return data.ideal_at(xi_local[0])
