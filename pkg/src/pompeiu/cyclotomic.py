"""The cyclotomic field Q(zeta_m) as residues modulo the m-th cyclotomic polynomial.

Polynomials are coefficient lists, lowest degree first, with no trailing zeros.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def poly_sub(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def poly_divmod(p, d):
    """Division with remainder; exact in Fractions (integers stay integers for monic d)."""
    p, d = trim(p), trim(d)
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    lead = d[-1]
    rem = list(p)
    quot = [0] * max(len(p) - len(d) + 1, 0)
    for k in range(len(p) - len(d), -1, -1):
        c = rem[k + len(d) - 1]
        if c:
            if lead != 1:
                c = Fraction(c) / lead
            quot[k] = c
            for i, b in enumerate(d):
                rem[k + i] -= c * b
    return trim(quot), trim(rem)


def poly_derivative(p):
    return trim([i * a for i, a in enumerate(p)][1:])


def poly_monic(p):
    p = trim(p)
    lead = Fraction(p[-1])
    return [Fraction(a) / lead for a in p]


def poly_gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p) if p else []


def squarefree_decomposition(p):
    """Yun's algorithm: [(factor, multiplicity)] with p = c * prod factor^multiplicity."""
    p = poly_monic(p)
    out = []
    a0 = poly_gcd(p, poly_derivative(p))
    b = poly_divmod(p, a0)[0]
    c = poly_divmod(poly_derivative(p), a0)[0]
    d = poly_sub(c, poly_derivative(b))
    i = 1
    while len(b) > 1:
        a = poly_gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = poly_divmod(b, a)[0]
        c = poly_divmod(d, a)[0]
        d = poly_sub(c, poly_derivative(b))
        i += 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Phi_m with integer coefficients, via x^m - 1 = prod_{d | m} Phi_d."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    p = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        p, r = poly_divmod(p, list(cyclotomic_poly(d)))
        assert not r
    return tuple(int(a) for a in p)


class CyclotomicField:
    def __init__(self, m: int):
        self.m = m
        self.modulus = list(cyclotomic_poly(m))
        self.degree = len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.m == self.m

    def __hash__(self):
        return hash(("Q(zeta)", self.m))

    def __repr__(self):
        return f"CyclotomicField({self.m})"

    def element(self, coeffs) -> "CyclotomicElement":
        return CyclotomicElement(self, poly_divmod(trim(coeffs), self.modulus)[1])

    def zeta_power(self, k: int) -> "CyclotomicElement":
        k %= self.m
        return self.element([0] * k + [1])

    def from_exponents(self, exponents) -> "CyclotomicElement":
        """sum_k zeta^{e_k}, collecting exponents mod m before reducing."""
        p = [0] * self.m
        for e in exponents:
            p[e % self.m] += 1
        return self.element(p)


class CyclotomicElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs):
        self.field = field
        self.coeffs = tuple(trim(coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        c = [(self.coeffs[i] if i < len(self.coeffs) else 0) + (other.coeffs[i] if i < len(other.coeffs) else 0)
             for i in range(n)]
        return CyclotomicElement(self.field, c)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return self.field.element(poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.field != self.field:
                raise ValueError("elements of different cyclotomic fields")
            return other
        return self.field.element([other])

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (ValueError, TypeError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.m, self.coeffs))

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.field.m)
        return complex(sum(complex(float(a)) * z ** k for k, a in enumerate(self.coeffs)))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            mon = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                terms.append(str(a))
            elif a == 1:
                terms.append(mon)
            elif a == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{a}{mon}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"<{self} in Q(zeta_{self.field.m})>"
