"""Multivariable Laurent polynomials over Q and formal products
prod (1 - t^v)^e, the two carriers of every Alexander-type invariant here.

All arithmetic is exact.  One-variable results are canonicalized only up
to the unit group {+-t^a}: rational content is preserved so integral
inputs stay integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from . import uni
from .errors import NotPolynomial, UnsupportedDimension, ZeroInput

Exponent = Tuple[int, ...]


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class LaurentPolynomial:
    """A Laurent polynomial in ``var_count`` variables.

    Stored as a map from integer exponent vectors to nonzero rational
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("var_count", "terms")

    def __init__(self, var_count: int, terms: Dict[Exponent, Fraction] | None = None):
        if var_count < 1:
            raise ValueError("var_count must be positive")
        self.var_count = var_count
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            c = _as_fraction(c)
            if c == 0:
                continue
            exp = tuple(int(e) for e in exp)
            if len(exp) != var_count:
                raise ValueError("exponent vector of wrong length")
            clean[exp] = clean.get(exp, Fraction(0)) + c
            if clean[exp] == 0:
                del clean[exp]
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var_count: int = 1) -> "LaurentPolynomial":
        return cls(var_count, {})

    @classmethod
    def constant(cls, c, var_count: int = 1) -> "LaurentPolynomial":
        return cls(var_count, {(0,) * var_count: _as_fraction(c)})

    @classmethod
    def one(cls, var_count: int = 1) -> "LaurentPolynomial":
        return cls.constant(1, var_count)

    @classmethod
    def variable(cls, index: int = 0, var_count: int = 1) -> "LaurentPolynomial":
        exp = [0] * var_count
        exp[index] = 1
        return cls(var_count, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, coeff, exp: Iterable[int]) -> "LaurentPolynomial":
        exp = tuple(int(e) for e in exp)
        return cls(len(exp), {exp: _as_fraction(coeff)})

    @classmethod
    def from_univariate(cls, coeffs: uni.Poly) -> "LaurentPolynomial":
        return cls(1, {(i,): c for i, c in enumerate(coeffs)})

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.var_count: Fraction(1)}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.var_count == other.var_count and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroInput("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "LaurentPolynomial"):
        if self.var_count != other.var_count:
            raise ValueError("variable counts differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.var_count)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return LaurentPolynomial(self.var_count, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.var_count, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.var_count)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial(
                self.var_count, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return LaurentPolynomial(self.var_count, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use formal products for negative powers")
        result = LaurentPolynomial.one(self.var_count)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exp: Exponent) -> "LaurentPolynomial":
        """Multiply by the monomial t^exp."""
        return LaurentPolynomial(
            self.var_count,
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()},
        )

    # -- univariate views ---------------------------------------------

    def _require_univariate(self):
        if self.var_count != 1:
            raise UnsupportedDimension("operation requires a one-variable polynomial")

    def min_degree(self) -> int:
        if not self.terms:
            raise ZeroInput("zero polynomial")
        self._require_univariate()
        return min(e[0] for e in self.terms)

    def max_degree(self) -> int:
        if not self.terms:
            raise ZeroInput("zero polynomial")
        self._require_univariate()
        return max(e[0] for e in self.terms)

    def to_univariate(self) -> uni.Poly:
        """Coefficient list after shifting the lowest term to degree 0."""
        self._require_univariate()
        if not self.terms:
            return []
        lo = self.min_degree()
        out = [Fraction(0)] * (self.max_degree() - lo + 1)
        for (e,), c in self.terms.items():
            out[e - lo] = c
        return out

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """t -> t^k on a one-variable polynomial."""
        self._require_univariate()
        return LaurentPolynomial(1, {(e[0] * k,): c for e, c in self.terms.items()})

    # -- printing -----------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order (t1 < ... < tr)."""
        return sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = (
            ["t"] if self.var_count == 1 else [f"t{i+1}" for i in range(self.var_count)]
        )
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


# ---------------------------------------------------------------------------
# unit normalization, gcds, root counts (one variable)
# ---------------------------------------------------------------------------


def normalize_unit(p: LaurentPolynomial) -> LaurentPolynomial:
    """Canonical representative of p under multiplication by +-t^a.

    The lowest term is moved to degree 0 and the sign is fixed so the
    leading coefficient is positive.  Idempotent; content is untouched.
    """
    if p.is_zero():
        raise ZeroInput("cannot normalize the zero polynomial")
    p._require_univariate()
    shifted = p.shift((-p.min_degree(),))
    lead = shifted.terms[(shifted.max_degree(),)]
    if lead < 0:
        shifted = -shifted
    return shifted


def univariate_gcd(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Canonical gcd over Q[t, t^-1]; content of the result is an integer-free
    choice made by normalize_unit applied to the monic Euclid output."""
    if p.is_zero() and q.is_zero():
        raise ZeroInput("gcd(0, 0) is undefined")
    if p.is_zero():
        return normalize_unit(q)
    if q.is_zero():
        return normalize_unit(p)
    g = uni.gcd(p.to_univariate(), q.to_univariate())
    return normalize_unit(LaurentPolynomial.from_univariate(g))


def common_root_count(p: LaurentPolynomial, n: int) -> int:
    """Number of common roots of p and t^n - 1 (t^n - 1 is squarefree)."""
    if p.is_zero():
        raise ZeroInput("zero polynomial")
    if n < 1:
        raise ValueError("n must be positive")
    cyc = LaurentPolynomial(1, {(n,): Fraction(1), (0,): Fraction(-1)})
    g = univariate_gcd(p, cyc)
    return g.max_degree() - g.min_degree()


def exact_divide(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """Exact division f / g in the Laurent ring, any number of variables.

    Raises NotPolynomial when g does not divide f.
    """
    f._check(g)
    if g.is_zero():
        raise ZeroInput("division by zero polynomial")
    if f.is_zero():
        return LaurentPolynomial.zero(f.var_count)
    # shift both into the polynomial cone
    fshift = tuple(-min(e[i] for e in f.terms) for i in range(f.var_count))
    gshift = tuple(-min(e[i] for e in g.terms) for i in range(g.var_count))
    fp, gp = f.shift(fshift), g.shift(gshift)
    quo_terms: Dict[Exponent, Fraction] = {}
    glead = max(gp.terms, key=lambda e: (sum(e), e))
    gc = gp.terms[glead]
    rem = fp
    while not rem.is_zero():
        rlead = max(rem.terms, key=lambda e: (sum(e), e))
        exp = tuple(a - b for a, b in zip(rlead, glead))
        if any(e < 0 for e in exp):
            raise NotPolynomial(f"{g} does not divide {f}")
        coeff = rem.terms[rlead] / gc
        quo_terms[exp] = coeff
        rem = rem - LaurentPolynomial.monomial(coeff, exp) * gp
    quo = LaurentPolynomial(f.var_count, quo_terms)
    back = tuple(b - a for a, b in zip(fshift, gshift))
    return quo.shift(back)


# ---------------------------------------------------------------------------
# formal cyclotomic products
# ---------------------------------------------------------------------------


@dataclass
class FormalCycloProduct:
    """A formal product  sign * t^shift * prod_v (1 - t^v)^{e_v}.

    The exponent vectors v are stored as given (content not reduced);
    multiplication only merges identical vectors, which is cancellation
    enough for every zeta-function and link-polynomial identity used here.
    """

    var_count: int
    factors: Dict[Exponent, int] = field(default_factory=dict)
    sign: int = 1
    shift: Exponent = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.shift is None:
            self.shift = (0,) * self.var_count
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        clean = {}
        for v, e in self.factors.items():
            v = tuple(int(x) for x in v)
            if len(v) != self.var_count:
                raise ValueError("exponent vector of wrong length")
            if all(x == 0 for x in v):
                raise ValueError("factor vector must be nonzero")
            e = int(e)
            if e != 0:
                clean[v] = clean.get(v, 0) + e
        self.factors = {v: e for v, e in clean.items() if e != 0}

    @classmethod
    def one(cls, var_count: int = 1) -> "FormalCycloProduct":
        return cls(var_count, {})

    @classmethod
    def one_minus_power(cls, v: Iterable[int], e: int = 1) -> "FormalCycloProduct":
        v = tuple(int(x) for x in v)
        return cls(len(v), {v: e})

    @classmethod
    def t_minus_one(cls) -> "FormalCycloProduct":
        # t - 1 = -(1 - t)
        return cls(1, {(1,): 1}, sign=-1)

    def __mul__(self, other: "FormalCycloProduct") -> "FormalCycloProduct":
        if self.var_count != other.var_count:
            raise ValueError("variable counts differ")
        factors = dict(self.factors)
        for v, e in other.factors.items():
            factors[v] = factors.get(v, 0) + e
        return FormalCycloProduct(
            self.var_count,
            factors,
            sign=self.sign * other.sign,
            shift=tuple(a + b for a, b in zip(self.shift, other.shift)),
        )

    def inverse(self) -> "FormalCycloProduct":
        return FormalCycloProduct(
            self.var_count,
            {v: -e for v, e in self.factors.items()},
            sign=self.sign,
            shift=tuple(-a for a in self.shift),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCycloProduct):
            return NotImplemented
        return (
            self.var_count == other.var_count
            and self.factors == other.factors
            and self.sign == other.sign
            and self.shift == other.shift
        )

    def eq_up_to_unit(self, other: "FormalCycloProduct") -> bool:
        return self.var_count == other.var_count and self.factors == other.factors

    def is_unit(self) -> bool:
        return not self.factors

    def diagonal_specialize(self) -> "FormalCycloProduct":
        """t_i -> t for all i; exponent vectors map to their coordinate sums."""
        factors: Dict[Exponent, int] = {}
        for v, e in self.factors.items():
            key = (sum(v),)
            if key == (0,):
                raise NotPolynomial("diagonal specialization hits 1 - t^0")
            factors[key] = factors.get(key, 0) + e
        return FormalCycloProduct(
            1, factors, sign=self.sign, shift=(sum(self.shift),)
        )

    def expand(self) -> LaurentPolynomial:
        """Multiply the product out exactly; NotPolynomial if it is not one."""
        num = LaurentPolynomial.monomial(self.sign, self.shift)
        den = LaurentPolynomial.one(self.var_count)
        for v, e in self.factors.items():
            base = LaurentPolynomial.one(self.var_count) - LaurentPolynomial.monomial(
                1, v
            )
            if e > 0:
                num = num * base**e
            else:
                den = den * base ** (-e)
        return exact_divide(num, den)

    def __str__(self) -> str:
        names = (
            ["t"] if self.var_count == 1 else [f"t{i+1}" for i in range(self.var_count)]
        )

        def mono(v):
            out = []
            for name, e in zip(names, v):
                if e == 1:
                    out.append(name)
                elif e != 0:
                    out.append(f"{name}^{e}")
            return "*".join(out) or "1"

        parts = []
        if self.sign < 0:
            parts.append("-1")
        if any(self.shift):
            parts.append(mono(self.shift))
        for v in sorted(self.factors):
            e = self.factors[v]
            base = f"(1 - {mono(v)})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return " * ".join(parts) if parts else "1"
