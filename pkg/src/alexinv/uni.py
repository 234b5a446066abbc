"""Dense univariate polynomials over Q, used as a backend for gcds,
cyclotomic polynomials and restriction analysis.

A polynomial is a list of Fractions indexed by degree, normalized so the
last entry is nonzero (the zero polynomial is the empty list).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

Poly = List[Fraction]


def trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def from_coeffs(cs) -> Poly:
    return trim([Fraction(c) for c in cs])


def degree(p: Poly) -> int:
    """Degree, with deg 0 = -1 by convention."""
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: Poly) -> Poly:
    return [-c for c in p]


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return []
    return [a * c for a in p]


def divmod_exact(p: Poly, q: Poly):
    """Quotient and remainder of p by q over Q; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq = degree(q)
    lead = q[-1]
    while degree(r) >= dq and r:
        shift = degree(r) - dq
        c = r[-1] / lead
        quo[shift] = c
        for i in range(len(q)):
            r[shift + i] -= c * q[i]
        trim(r)
    return trim(quo), r


def exact_div(p: Poly, q: Poly) -> Poly:
    quo, rem = divmod_exact(p, q)
    if rem:
        raise ValueError("division is not exact")
    return quo


def monic(p: Poly) -> Poly:
    if not p:
        return []
    return scale(p, Fraction(1) / p[-1])


def gcd(p: Poly, q: Poly) -> Poly:
    a, b = list(p), list(q)
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, r
    return monic(a)


def derivative(p: Poly) -> Poly:
    return trim([p[i] * i for i in range(1, len(p))])


def squarefree_part(p: Poly) -> Poly:
    if not p:
        return []
    g = gcd(p, derivative(p))
    return monic(exact_div(p, g))


def evaluate(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pow_mod(base: Poly, e: int, modulus: Poly) -> Poly:
    result = [Fraction(1)]
    b = divmod_exact(base, modulus)[1]
    while e:
        if e & 1:
            result = divmod_exact(mul(result, b), modulus)[1]
        b = divmod_exact(mul(b, b), modulus)[1]
        e >>= 1
    return result


def x_power(n: int) -> Poly:
    return [Fraction(0)] * n + [Fraction(1)]


def to_string(p: Poly, var: str = "t") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(degree(p), -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        elif i == 1:
            term = f"{var}" if abs(c) == 1 else f"{c}*{var}"
        else:
            term = f"{var}^{i}" if abs(c) == 1 else f"{c}*{var}^{i}"
        if c < 0 and abs(c) == 1 and i > 0:
            term = "-" + term
        if parts:
            parts.append(" - " if c < 0 else " + ")
            if abs(c) == 1 and i > 0:
                parts.append(term.lstrip("-"))
            elif c < 0:
                parts.append(str(-c) if i == 0 else f"{-c}*{var}" + (f"^{i}" if i > 1 else ""))
            else:
                parts.append(term)
        else:
            parts.append(term)
    return "".join(parts)
