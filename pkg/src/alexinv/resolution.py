"""Embedded resolution of plane-curve germs over Q by iterated point
blow-ups, and the invariants read off the resolution tree: A'Campo zeta
functions, local one- and multivariable Alexander polynomials, and
Jordan/Fitting exponents from Hodge data.

Blow-up centers are restricted to Q-rational points; an irrational
infinitely-near point aborts with its minimal polynomial so the user can
supply an explicit tree instead.  All multiplicities are computed by
substitution into the stored chart maps, never by incremental shortcuts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from . import biv, uni
from .errors import (
    BadGerm,
    BadHodgeData,
    NotCoprime,
    NonRationalInfinitelyNearPoint,
    ResolutionDidNotTerminate,
)
from .laurent import FormalCycloProduct, LaurentPolynomial, normalize_unit

MAX_BLOWUPS = 500


@dataclass
class PlaneCurveGerm:
    """A reduced germ at the origin with user-declared components."""

    components: List[biv.Poly2]

    def __post_init__(self):
        biv.validate_germ_components(self.components)

    @classmethod
    def from_strings(cls, *texts: str) -> "PlaneCurveGerm":
        return cls([biv.parse(t) for t in texts])

    @property
    def r(self) -> int:
        return len(self.components)

    def __str__(self):
        return ", ".join(biv.to_string(c) for c in self.components)


@dataclass
class ResolutionNode:
    """One exceptional curve of the resolution."""

    id: int
    a: Tuple[int, ...]  # pullback order of each component
    c: int  # pullback order of dx ^ dy
    adjacent: set = field(default_factory=set)
    strict: Dict[int, int] = field(default_factory=dict)  # component -> points
    chart: Optional[Tuple[biv.Poly2, biv.Poly2]] = None  # (x(U,V), y(U,V)), E = {U=0}

    @property
    def total_multiplicity(self) -> int:
        return sum(self.a)

    def chi_open(self) -> int:
        return 2 - len(self.adjacent) - sum(self.strict.values())


@dataclass
class ResolutionTree:
    """Exceptional curves with multiplicities, adjacency and strict-transform
    incidences.  Trees built by :func:`resolve` carry chart maps so that
    pullback orders of arbitrary germs can be replayed; trees loaded from
    files do not."""

    r: int
    nodes: List[ResolutionNode] = field(default_factory=list)
    germ: Optional[PlaneCurveGerm] = None

    def __post_init__(self):
        for node in self.nodes:
            if len(node.a) != self.r:
                raise BadGerm("node multiplicity vector of wrong length")
            if any(x < 0 for x in node.a) or not any(node.a):
                raise BadGerm("node multiplicities must be >= 0 and not all zero")

    @property
    def has_charts(self) -> bool:
        return all(n.chart is not None for n in self.nodes)

    def pullback_orders(self, phi: biv.Poly2) -> List[int]:
        """e_k(phi) = ord_{E_k} of the pullback of phi, by chart replay."""
        if not self.has_charts:
            raise BadGerm(
                "tree has no chart history (loaded from file?); "
                "pullback orders of germs are unavailable"
            )
        if not phi:
            raise BadGerm("zero germ")
        out = []
        for node in self.nodes:
            px, py = node.chart
            out.append(biv.ord_x(biv.compose(phi, px, py)))
        return out

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "nodes": [
                {
                    "id": n.id,
                    "a": list(n.a),
                    "c": n.c,
                    "adj": sorted(n.adjacent),
                    "strict": sorted([i + 1, cnt] for i, cnt in n.strict.items()),
                }
                for n in self.nodes
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ResolutionTree":
        nodes = []
        for nd in data["nodes"]:
            nodes.append(
                ResolutionNode(
                    id=int(nd["id"]),
                    a=tuple(int(x) for x in nd["a"]),
                    c=int(nd["c"]),
                    adjacent=set(int(x) for x in nd.get("adj", [])),
                    strict={int(i) - 1: int(cnt) for i, cnt in nd.get("strict", [])},
                )
            )
        return cls(r=int(data["r"]), nodes=nodes)


@dataclass
class _Site:
    """An infinitely-near point scheduled for blow-up, in coordinates where
    the exceptional curves through it are the axes."""

    subs_x: biv.Poly2
    subs_y: biv.Poly2
    germs: List[Tuple[int, biv.Poly2]]
    axis_x: Optional[int] = None  # node id with local equation X = 0
    axis_y: Optional[int] = None  # node id with local equation Y = 0


def resolve(germ: PlaneCurveGerm) -> ResolutionTree:
    """Blow up until the reduced total transform has normal crossings.

    Smooth one-branch germs return the empty tree.  Node ordering is
    creation order, which is deterministic.
    """
    components = germ.components
    r = len(components)
    total_mult = biv.multiplicity(
        components[0] if r == 1 else _product(components)
    )
    tree = ResolutionTree(r=r, nodes=[], germ=germ)
    if total_mult == 1:
        return tree
    queue = deque(
        [
            _Site(
                subs_x=biv.variable_x(),
                subs_y=biv.variable_y(),
                germs=[(i, p) for i, p in enumerate(components)],
            )
        ]
    )
    while queue:
        if len(tree.nodes) >= MAX_BLOWUPS:
            raise ResolutionDidNotTerminate(f"more than {MAX_BLOWUPS} blow-ups")
        site = queue.popleft()
        _blow_up(tree, site, components, queue)
    return tree


def _product(polys: Sequence[biv.Poly2]) -> biv.Poly2:
    out = biv.constant(1)
    for p in polys:
        out = biv.mul(out, p)
    return out


def _blow_up(tree: ResolutionTree, site: _Site, components, queue):
    node_id = len(tree.nodes) + 1
    u, uv = biv.variable_x(), {(1, 1): Fraction(1)}
    chart_x = biv.compose(site.subs_x, u, uv)
    chart_y = biv.compose(site.subs_y, u, uv)
    a = tuple(biv.ord_x(biv.compose(f, chart_x, chart_y)) for f in components)
    jac = biv.add(
        biv.mul(biv.partial_x(chart_x), biv.partial_y(chart_y)),
        biv.scale(biv.mul(biv.partial_y(chart_x), biv.partial_x(chart_y)), -1),
    )
    c = biv.ord_x(jac)
    node = ResolutionNode(id=node_id, a=a, c=c, chart=(chart_x, chart_y))
    for axis in (site.axis_x, site.axis_y):
        if axis is not None:
            node.adjacent.add(axis)
            tree.nodes[axis - 1].adjacent.add(node_id)
    if site.axis_x is not None and site.axis_y is not None:
        tree.nodes[site.axis_x - 1].adjacent.discard(site.axis_y)
        tree.nodes[site.axis_y - 1].adjacent.discard(site.axis_x)
    tree.nodes.append(node)

    # --- chart 1: (X, Y) -> (U, U V); E_new = {U = 0}, coordinate V -----
    strict1: List[Tuple[int, biv.Poly2]] = []
    for i, g in site.germs:
        m = biv.multiplicity(g)
        g1 = biv.shift_x(biv.compose(g, u, uv), m)
        strict1.append((i, g1))
    factored: Dict[Tuple[Fraction, ...], Dict[int, int]] = {}
    for i, g1 in strict1:
        rest = biv.restrict_x0(g1)
        _, factors = biv.factor_univariate(rest)
        for coeffs, mult in factors:
            key = tuple(coeffs)
            factored.setdefault(key, {})[i] = factored.get(key, {}).get(i, 0) + mult
    for key in sorted(factored, key=lambda k: (len(k), k)):
        h = list(key)
        per_comp = factored[key]
        total = sum(per_comp.values())
        is_origin = len(h) == 2 and h[0] == 0  # the factor V, root at 0
        corner_here = is_origin and site.axis_y is not None
        if total == 1 and not corner_here:
            (comp,) = per_comp
            node.strict[comp] = node.strict.get(comp, 0) + len(h) - 1
            continue
        if len(h) != 2:
            raise NonRationalInfinitelyNearPoint(uni.to_string(h, "v"))
        v0 = -h[0] / h[1]
        # new coordinates (X, Y) with (old X, old Y) = (X, X (Y + v0));
        # germs are the chart-1 strict transforms recentered at (0, v0)
        recentered_y = {(0, 1): Fraction(1), (0, 0): v0} if v0 else {(0, 1): Fraction(1)}
        new_site = _Site(
            subs_x=biv.compose(site.subs_x, biv.variable_x(), _times_x(recentered_y)),
            subs_y=biv.compose(site.subs_y, biv.variable_x(), _times_x(recentered_y)),
            germs=[
                (i, biv.compose(g1, biv.variable_x(), recentered_y))
                for i, g1 in strict1
                if i in per_comp
            ],
            axis_x=node_id,
            axis_y=site.axis_y if (v0 == 0 and site.axis_y is not None) else None,
        )
        queue.append(new_site)

    # --- chart 2: (X, Y) -> (U V, V); E_new = {V = 0}, origin = [0:1] ---
    vu, v = {(1, 1): Fraction(1)}, biv.variable_y()
    through: List[Tuple[int, biv.Poly2]] = []
    for i, g in site.germs:
        m = biv.multiplicity(g)
        g2 = biv.swap_xy(biv.shift_x(biv.swap_xy(biv.compose(g, vu, v)), m))
        if (0, 0) not in g2:
            through.append((i, g2))
    if through:
        corner = site.axis_x is not None
        total = sum(_ord_at_zero(biv.restrict_y0(g2)) for _, g2 in through)
        if total == 1 and not corner:
            (comp, _) = through[0]
            node.strict[comp] = node.strict.get(comp, 0) + 1
        else:
            new_site = _Site(
                subs_x=biv.compose(site.subs_x, vu, v),
                subs_y=biv.compose(site.subs_y, vu, v),
                germs=list(through),
                axis_x=site.axis_x,
                axis_y=node_id,
            )
            queue.append(new_site)


def _times_x(p: biv.Poly2) -> biv.Poly2:
    return biv.mul(biv.variable_x(), p)


def _ord_at_zero(coeffs: List[Fraction]) -> int:
    for i, c in enumerate(coeffs):
        if c != 0:
            return i
    raise BadGerm("restriction vanished identically (internal error)")


# ---------------------------------------------------------------------------
# invariants from the tree
# ---------------------------------------------------------------------------


def acampo_zeta(tree: ResolutionTree) -> FormalCycloProduct:
    """zeta(t) = prod over nodes of (1 - t^{m_k})^{chi(E_k deg)} with m_k the
    total multiplicity."""
    out = FormalCycloProduct.one(1)
    for node in tree.nodes:
        chi = node.chi_open()
        if chi:
            out = out * FormalCycloProduct.one_minus_power((node.total_multiplicity,), chi)
    return out


def local_alexander_from_zeta(zeta: FormalCycloProduct) -> LaurentPolynomial:
    """Delta(t) = (t - 1) / zeta(t), canonical up to +-t^a."""
    delta = (FormalCycloProduct.t_minus_one() * zeta.inverse()).expand()
    return normalize_unit(delta)


def local_alexander(tree: ResolutionTree) -> LaurentPolynomial:
    """One-variable local Alexander polynomial (total linking) of the germ."""
    return local_alexander_from_zeta(acampo_zeta(tree))


def torus_knot_alexander(p: int, q: int) -> LaurentPolynomial:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q."""
    if p < 1 or q < 1:
        raise BadGerm("p, q must be positive")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    f = (
        FormalCycloProduct.one_minus_power((p * q,))
        * FormalCycloProduct.one_minus_power((1,))
        * FormalCycloProduct.one_minus_power((p,), -1)
        * FormalCycloProduct.one_minus_power((q,), -1)
    )
    return normalize_unit(f.expand())


def multivariable_link_alexander(tree: ResolutionTree) -> FormalCycloProduct:
    """The multivariable Alexander polynomial of the link of a reducible
    germ as a formal product: prod over nodes of (1 - t^{a_k})^{-chi}."""
    if tree.r < 2:
        raise BadGerm("multivariable invariant needs r >= 2 components")
    out = FormalCycloProduct.one(tree.r)
    for node in tree.nodes:
        chi = node.chi_open()
        if chi:
            out = out * FormalCycloProduct.one_minus_power(node.a, -chi)
    return out


def fitting_exponents_from_hodge(h00: int, h10: int, h01: int) -> List[int]:
    """Exponent sequence (a_1 >= a_2 >= ...) of a fixed eigenvalue in the
    generators of the Fitting ideals, from the eigenvalue's Hodge numbers.

    Jordan blocks have size at most 2: h10 + h01 counts the 1x1 blocks and
    h00 the 2x2 blocks.
    """
    if h00 < 0 or h10 < 0 or h01 < 0:
        raise BadHodgeData("Hodge numbers must be nonnegative")
    out = []
    for i in range(1, h00 + h10 + h01 + 1):
        if i <= h00:
            out.append(h10 + h01 + 2 * h00 - 2 * (i - 1))
        else:
            out.append(h10 + h01 - (i - 1 - h00))
    return out
