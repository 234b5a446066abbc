"""Fox calculus on finite presentations: Alexander matrices, one-variable
Alexander polynomials, characteristic-variety membership and depth at
torsion characters, Betti numbers of finite abelian covers, and the Koszul
model for generic-arrangement homotopy modules.

Words are stored unreduced; Fox differentiation is invariant under free
reduction, which the test suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import gcd
from typing import Dict, FrozenSet, List, Sequence, Tuple

from . import uni
from .cyclotomic import (
    character_conductor,
    cyclotomic_polynomial,
    evaluate_character,
)
from .errors import (
    BadWord,
    InvalidAbelianization,
    MissingSublinkData,
    NonTorsionModule,
    TrivialCharacterUnsupported,
)
from .laurent import LaurentPolynomial, normalize_unit, univariate_gcd
from .linalg import cyclotomic_rank, smith_normal_form

Letter = Tuple[int, int]  # (generator index, +-1)
Word = Tuple[Letter, ...]


def word(letters: Sequence[Sequence[int]]) -> Word:
    out = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise BadWord(f"letter exponent must be +-1, got {exp}")
        out.append((int(gen), int(exp)))
    return tuple(out)


def word_inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def free_reduce(w: Word) -> Word:
    out: List[Letter] = []
    for letter in w:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def exponent_sums(w: Word, generators: int) -> List[int]:
    sums = [0] * generators
    for g, e in w:
        sums[g] += e
    return sums


@dataclass(frozen=True)
class CharacterPoint:
    """A torsion character, coordinates k_i/m_i reduced mod 1."""

    coords: Tuple[Fraction, ...]

    def __init__(self, coords):
        object.__setattr__(
            self, "coords", tuple(Fraction(c) % 1 for c in coords)
        )

    @property
    def nontrivial(self) -> bool:
        return any(c != 0 for c in self.coords)

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class GroupPresentation:
    """A finite presentation with a map phi to Z^r on generators.

    phi must send every relator to zero unless ``torsion`` is set; in the
    torsion case (used for groups like the sphere braid groups, whose
    abelianization is finite cyclic) r must be 1 and the relator images
    determine the finite cyclic image.
    """

    generators: int
    relators: Tuple[Word, ...]
    phi: Tuple[Tuple[int, ...], ...]
    torsion: bool = False

    def __init__(self, generators, relators, phi, torsion=False):
        object.__setattr__(self, "generators", int(generators))
        rels = tuple(word(r) if not _is_word(r) else tuple(r) for r in relators)
        object.__setattr__(self, "relators", rels)
        object.__setattr__(self, "phi", tuple(tuple(int(x) for x in v) for v in phi))
        object.__setattr__(self, "torsion", bool(torsion))
        self._validate()

    def _validate(self):
        if self.generators < 1:
            raise BadWord("need at least one generator")
        if len(self.phi) != self.generators:
            raise InvalidAbelianization("phi must give a vector per generator")
        r = self.rank
        if any(len(v) != r for v in self.phi):
            raise InvalidAbelianization("phi vectors of unequal length")
        for rel in self.relators:
            for g, _ in rel:
                if not 0 <= g < self.generators:
                    raise BadWord(f"generator {g} out of range")
            image = self.relator_image(rel)
            if any(image) and not self.torsion:
                raise InvalidAbelianization(
                    f"phi does not kill relator {rel}: image {image}"
                )
        if self.torsion and r != 1:
            raise InvalidAbelianization("torsion abelianizations supported for r = 1")
        if not self.torsion:
            # surjectivity of phi onto Z^r, checked via Smith form
            diag = smith_normal_form([list(v) for v in self.phi])
            if sorted(d for d in diag if d)[: r] != [1] * r or sum(1 for d in diag if d) < r:
                raise InvalidAbelianization("phi is not surjective onto Z^r")

    @property
    def rank(self) -> int:
        return len(self.phi[0]) if self.phi else 0

    def relator_image(self, rel: Word) -> Tuple[int, ...]:
        img = [0] * self.rank
        for g, e in rel:
            for i, x in enumerate(self.phi[g]):
                img[i] += e * x
        return tuple(img)

    def torsion_order(self) -> int:
        """gcd of relator images under phi (r=1); 0 means a true surjection."""
        m = 0
        for rel in self.relators:
            m = gcd(m, abs(self.relator_image(rel)[0]))
        return m

    def character_is_valid(self, chi: CharacterPoint) -> bool:
        """Whether chi factors through the group (kills all relators)."""
        for rel in self.relators:
            image = self.relator_image(rel)
            if sum((Fraction(c) * x for c, x in zip(chi.coords, image)), Fraction(0)) % 1:
                return False
        return True


def _is_word(r) -> bool:
    return isinstance(r, tuple) and all(
        isinstance(l, tuple) and len(l) == 2 for l in r
    )


def free_group(rank: int) -> GroupPresentation:
    phi = [[1 if j == i else 0 for j in range(rank)] for i in range(rank)]
    return GroupPresentation(rank, (), phi)


# ---------------------------------------------------------------------------
# Fox derivatives and the Alexander matrix
# ---------------------------------------------------------------------------


def fox_derivative(
    w: Word, j: int, phi: Sequence[Sequence[int]], rank: int
) -> LaurentPolynomial:
    """Abelianized Fox derivative of the word w with respect to generator j.

    Product rule applied letter by letter; the inverse rule contributes
    -t^{phi(prefix x^-1)} when the letter is x_j^-1.
    """
    out = LaurentPolynomial.zero(rank)
    prefix = [0] * rank
    for g, e in w:
        if e == 1:
            if g == j:
                out = out + LaurentPolynomial.monomial(1, tuple(prefix))
            for i, x in enumerate(phi[g]):
                prefix[i] += x
        else:
            for i, x in enumerate(phi[g]):
                prefix[i] -= x
            if g == j:
                out = out - LaurentPolynomial.monomial(1, tuple(prefix))
    return out


@dataclass
class AlexanderMatrix:
    """Fox Jacobian of a presentation over the Laurent ring in r variables."""

    presentation: GroupPresentation
    entries: List[List[LaurentPolynomial]] = field(default_factory=list)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self.presentation.generators

    def evaluate(self, chi: CharacterPoint, conductor: int | None = None):
        M = conductor or character_conductor(chi.coords)
        return [
            [evaluate_character(e, chi.coords, M) for e in row] for row in self.entries
        ]


def fox_jacobian(p: GroupPresentation) -> AlexanderMatrix:
    r = p.rank
    entries = []
    for rel in p.relators:
        row = [fox_derivative(rel, j, p.phi, r) for j in range(p.generators)]
        # fundamental identity: row . (t^phi(x_j) - 1) = t^phi(rel) - 1
        lhs = LaurentPolynomial.zero(r)
        for j, d in enumerate(row):
            tj = LaurentPolynomial.monomial(1, tuple(p.phi[j]))
            lhs = lhs + d * (tj - LaurentPolynomial.one(r))
        rhs = LaurentPolynomial.monomial(1, p.relator_image(rel)) - LaurentPolynomial.one(r)
        if lhs != rhs:
            raise AssertionError("Fox row identity violated (internal error)")
        entries.append(row)
    return AlexanderMatrix(p, entries)


# ---------------------------------------------------------------------------
# one-variable Alexander polynomial
# ---------------------------------------------------------------------------


def _laurent_matrix_rank(entries: List[List[LaurentPolynomial]], cols: int) -> int:
    """Rank over Q(t) of a matrix of one-variable Laurent polynomials,
    computed by cross-multiplication echelon reduction over Q[t]."""
    # clear the whole matrix by one common power of t, then work with
    # plain coefficient lists; a global unit does not change the rank
    mins = [e.min_degree() for row in entries for e in row if not e.is_zero()]
    if not mins:
        return 0
    shift = -min(mins)

    def coeffs(e: LaurentPolynomial):
        if e.is_zero():
            return []
        out = [Fraction(0)] * (e.max_degree() + shift + 1)
        for (d,), c in e.terms.items():
            out[d + shift] = c
        return uni.trim(out)

    rows = [[coeffs(e) for e in row] for row in entries]
    rank = 0
    col = 0
    while rows and col < cols:
        pivot = next((i for i, rw in enumerate(rows) if rw[col]), None)
        if pivot is None:
            col += 1
            continue
        rows[0], rows[pivot] = rows[pivot], rows[0]
        prow = rows[0]
        new_rows = []
        for rw in rows[1:]:
            if not rw[col]:
                new_rows.append(rw)
                continue
            # rw := rw * pivot - prow * rw[col]
            factor_a, factor_b = prow[col], rw[col]
            combined = []
            for a, b in zip(rw, prow):
                combined.append(uni.sub(uni.mul(a, factor_a), uni.mul(b, factor_b)))
            new_rows.append(combined)
        rows = new_rows
        rank += 1
        col += 1
    return rank


def one_variable_alexander(p: GroupPresentation) -> LaurentPolynomial:
    """Order of the torsion of the Alexander module for r = 1, canonical up
    to +-t^a.

    For presentations whose abelianization is finite cyclic (torsion mode)
    the order is assembled from the twisted homology at the characters of
    the cyclic image.  Raises NonTorsionModule when the module has
    positive rank (e.g. free groups of rank >= 2).
    """
    if p.rank != 1:
        raise ValueError("one-variable Alexander polynomial requires r = 1")
    m = p.torsion_order() if p.torsion else 0
    if m:
        result = LaurentPolynomial.one(1)
        for d in sorted(_divisors(m)):
            if d == 1:
                continue
            k = local_system_h1_dim(p, CharacterPoint([Fraction(1, d)]))
            if k:
                phi_d = LaurentPolynomial.from_univariate(list(cyclotomic_polynomial(d)))
                result = result * phi_d**k
        return normalize_unit(result)
    matrix = fox_jacobian(p)
    s = p.generators
    if s == 1:
        return LaurentPolynomial.one(1)
    rank = _laurent_matrix_rank(matrix.entries, s)
    if rank < s - 1:
        raise NonTorsionModule(
            "Alexander module has positive rank; no polynomial order"
        )
    g = LaurentPolynomial.zero(1)
    size = s - 1
    for ri in combinations(range(matrix.rows), size):
        for ci in combinations(range(s), size):
            minor = _poly_det(
                [[matrix.entries[i][j] for j in ci] for i in ri]
            )
            if minor.is_zero():
                continue
            g = minor if g.is_zero() else univariate_gcd(g, minor)
            if not g.is_zero() and g.max_degree() == g.min_degree():
                return normalize_unit(g)  # unit gcd, stop early
    return normalize_unit(g)


def _poly_det(entries: List[List[LaurentPolynomial]]) -> LaurentPolynomial:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    total = LaurentPolynomial.zero(entries[0][0].var_count)
    for j in range(n):
        if entries[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = entries[0][j] * _poly_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# local systems, characteristic varieties, covers
# ---------------------------------------------------------------------------


def local_system_h1_dim(p: GroupPresentation, chi: CharacterPoint) -> int:
    """dim H_1 of the rank-one local system chi (chi nontrivial):
    s - 1 - rank of the Alexander matrix evaluated at chi."""
    if not chi.nontrivial:
        raise TrivialCharacterUnsupported("identity character excluded")
    if len(chi) != p.rank:
        raise ValueError("character length does not match abelianization rank")
    if not p.character_is_valid(chi):
        raise InvalidAbelianization("character does not kill all relators")
    matrix = fox_jacobian(p)
    evaluated = matrix.evaluate(chi)
    rank = cyclotomic_rank(evaluated)
    return p.generators - 1 - rank


def depth(p: GroupPresentation, chi: CharacterPoint) -> int:
    """Largest k with chi in V_k; equals dim H_1(X, chi) for chi != 1."""
    return local_system_h1_dim(p, chi)


def charvar_membership(p: GroupPresentation, k: int, chi: CharacterPoint) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    return local_system_h1_dim(p, chi) >= k


def fitting_minor_generators(p: GroupPresentation, k: int) -> List[LaurentPolynomial]:
    """Raw generators (minors of size s - k) whose vanishing at chi != 1
    characterizes membership in V_k.  For inspection only."""
    matrix = fox_jacobian(p)
    size = p.generators - k
    if size <= 0:
        return []
    if size > matrix.rows:
        return [LaurentPolynomial.zero(p.rank)]
    minors = []
    for ri in combinations(range(matrix.rows), size):
        for ci in combinations(range(p.generators), size):
            minors.append(_poly_det([[matrix.entries[i][j] for j in ci] for i in ri]))
    return minors


def unbranched_cover_betti(p: GroupPresentation, orders: Sequence[int]) -> int:
    """First Betti number of the finite unbranched abelian cover of orders
    (n_1, ..., n_r): r plus the sum of depths over nontrivial torsion
    characters of the deck group."""
    if len(orders) != p.rank:
        raise ValueError("need one order per Z factor")
    if any(n < 1 for n in orders):
        raise ValueError("orders must be >= 1")
    total = p.rank
    for ks in product(*(range(n) for n in orders)):
        if all(k == 0 for k in ks):
            continue
        chi = CharacterPoint([Fraction(k, n) for k, n in zip(ks, orders)])
        total += depth(p, chi)
    return total


def branched_cover_betti(
    sublink_data: Dict[FrozenSet[int], GroupPresentation], orders: Sequence[int]
) -> int:
    """Middle Betti number of the abelian cover branched over an r-component
    link, from per-sublink presentations.

    For each character chi of the deck group, I_chi is the set of
    components where chi is nontrivial; chi reduced to those components is
    evaluated in the presentation supplied for that subset.
    """
    r = len(orders)
    total = 0
    for ks in product(*(range(n) for n in orders)):
        support = frozenset(i for i, k in enumerate(ks) if k != 0)
        if not support:
            continue
        key = support
        if key not in sublink_data:
            raise MissingSublinkData(f"no presentation for components {sorted(i+1 for i in key)}")
        pres = sublink_data[key]
        reduced = CharacterPoint(
            [Fraction(ks[i], orders[i]) for i in sorted(support)]
        )
        total += depth(pres, reduced)
    return total


def diagonal_multiplicity(p: GroupPresentation, omega: Fraction) -> int:
    """Multiplicity of omega as a Milnor-monodromy eigenvalue: the depth of
    the diagonal character (omega, ..., omega)."""
    omega = Fraction(omega) % 1
    if omega == 0:
        raise TrivialCharacterUnsupported("omega must be nontrivial")
    return depth(p, CharacterPoint([omega] * p.rank))


# ---------------------------------------------------------------------------
# Koszul model for generic-arrangement homotopy modules
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _koszul_presentation(r: int, n: int):
    """Rows presenting the degree-n homotopy module over
    Z[t_1^+-, ..., t_r^+-]/(t_1...t_r - 1): the Koszul boundary from
    degree n+1 together with the relation rows (t_1...t_r - 1) e_T."""
    n_basis = list(combinations(range(r), n))
    index = {T: i for i, T in enumerate(n_basis)}
    rows = []
    for S in combinations(range(r), n + 1):
        row = [LaurentPolynomial.zero(r) for _ in n_basis]
        for pos, j in enumerate(S):
            T = tuple(x for x in S if x != j)
            tj = LaurentPolynomial.variable(j, r) - LaurentPolynomial.one(r)
            row[index[T]] = tj if pos % 2 == 0 else -tj
        rows.append(row)
    full = LaurentPolynomial.monomial(1, (1,) * r) - LaurentPolynomial.one(r)
    for i in range(len(n_basis)):
        row = [LaurentPolynomial.zero(r) for _ in n_basis]
        row[i] = full
        rows.append(row)
    return rows, len(n_basis)


def koszul_support_membership(r: int, n: int, chi: CharacterPoint) -> bool:
    """Whether chi lies in the support of the generic-arrangement homotopy
    module (Koszul cokernel over the subtorus t_1...t_r = 1).

    True implies the product of the coordinates of chi is 1.
    """
    if not 2 <= n <= r - 1:
        raise ValueError("need 2 <= n <= r - 1")
    if len(chi) != r:
        raise ValueError("character length must be r")
    if sum(chi.coords) % 1 != 0:
        return False  # chi is not even a point of the subtorus
    rows, ncols = _koszul_presentation(r, n)
    M = character_conductor(chi.coords)
    evaluated = [
        [evaluate_character(e, chi.coords, M) for e in row] for row in rows
    ]
    return cyclotomic_rank(evaluated) < ncols


# ---------------------------------------------------------------------------
# standard fixtures
# ---------------------------------------------------------------------------


def trefoil_presentation() -> GroupPresentation:
    """<x, y | xyx y^-1 x^-1 y^-1> with the total linking map."""
    rel = word([(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])
    return GroupPresentation(2, (rel,), [[1], [1]])


def hopf_link_presentation() -> GroupPresentation:
    """<x, y | [x, y]> with the identity abelianization to Z^2."""
    rel = word([(0, 1), (1, 1), (0, -1), (1, -1)])
    return GroupPresentation(2, (rel,), [[1, 0], [0, 1]])


def sphere_braid_presentation(d: int) -> GroupPresentation:
    """B_d(S^2) on generators s_1..s_{d-1}: braid relations plus
    s_1 ... s_{d-1} s_{d-1} ... s_1 = 1.  Abelianization is Z/2(d-1),
    so the presentation is built in torsion mode."""
    s = d - 1
    if s < 1:
        raise ValueError("need d >= 2")
    relators = []
    for i in range(s - 1):
        relators.append(
            word(
                [(i, 1), (i + 1, 1), (i, 1), (i + 1, -1), (i, -1), (i + 1, -1)]
            )
        )
    for i in range(s):
        for j in range(i + 2, s):
            relators.append(word([(i, 1), (j, 1), (i, -1), (j, -1)]))
    sphere = [(i, 1) for i in range(s)] + [(i, 1) for i in reversed(range(s))]
    relators.append(word(sphere))
    return GroupPresentation(s, tuple(relators), [[1]] * s, torsion=True)
