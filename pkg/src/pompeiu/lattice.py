"""The group Z (and Z^d for multiplication) through Laurent polynomials.

For a finite K in Z the two-sided equations collapse to the single recurrence
sum_{k in K} f(n + k) = 0, whose characteristic polynomial is
p(x) = sum_{k in K} x^(k - min K).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import mpmath
import numpy as np

from .config import settings
from .cyclotomic import cyclotomic_poly, euler_phi, poly_divmod, squarefree_decomposition, trim
from .errors import ConsistencyError, EmptySubsetError, PreconditionError
from .scalar import ZERO, Scalar


def _add_exp(a, b):
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))
    return a + b


class LaurentPoly:
    """Sparse element of C[Z^d]; exponents are ints when d == 1, tuples otherwise."""

    __slots__ = ("coeffs", "nvars")

    def __init__(self, coeffs: Mapping | None = None, nvars: int = 1):
        clean = {}
        for e, a in (coeffs or {}).items():
            if nvars == 1:
                e = int(e)
            else:
                e = tuple(int(x) for x in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
            a = Scalar.coerce(a)
            if a:
                clean[e] = a
        self.coeffs = dict(sorted(clean.items()))
        self.nvars = nvars

    @classmethod
    def monomial(cls, exponent, coeff=1, nvars=1):
        return cls({exponent: coeff}, nvars)

    @classmethod
    def from_subset(cls, K: Iterable, nvars=1):
        """chi_K as a Laurent polynomial."""
        return cls({k: 1 for k in K}, nvars)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, tuple(self.coeffs.items())))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, a in other.coeffs.items():
            out[e] = out.get(e, ZERO) + a
        return LaurentPoly(out, self.nvars)

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self.coeffs.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return laurent_multiply(self, other)
        c = Scalar.coerce(other)
        return LaurentPoly({e: a * c for e, a in self.coeffs.items()}, self.nvars)

    __rmul__ = __mul__

    def shift(self, by) -> "LaurentPoly":
        return LaurentPoly({_add_exp(e, by): a for e, a in self.coeffs.items()}, self.nvars)

    def is_unit(self) -> bool:
        # units of a Laurent ring over a field are the nonzero monomials
        return len(self.coeffs) == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        return "LaurentPoly(" + " + ".join(f"{a}·x^{e}" for e, a in self.coeffs.items()) + ")"


def laurent_multiply(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.nvars != q.nvars:
        raise ValueError("Laurent polynomials in different numbers of variables")
    out: dict = {}
    for e, a in p.coeffs.items():
        for f, b in q.coeffs.items():
            k = _add_exp(e, f)
            out[k] = out.get(k, ZERO) + a * b
    return LaurentPoly(out, p.nvars)


def _normalize_subset(K) -> tuple[int, ...]:
    elems = tuple(sorted(set(int(k) for k in K)))
    if not elems:
        raise EmptySubsetError()
    return elems


def is_pompeiu_subset_Z(K) -> bool:
    """chi_K generates all of C[Z] iff it is a unit, i.e. iff |K| == 1."""
    elems = _normalize_subset(K)
    return LaurentPoly.from_subset(elems).is_unit()


def characteristic_polynomial(K) -> list[int]:
    elems = _normalize_subset(K)
    lo = elems[0]
    p = [0] * (elems[-1] - lo + 1)
    for k in elems:
        p[k - lo] = 1
    return p


def cyclotomic_factor_indices(p: list, bound: int | None = None) -> list[int]:
    """All d >= 2 with Phi_d dividing p (d = 1 never divides: p(1) = |K| > 0)."""
    if bound is None:
        bound = settings().max_cyclotomic_index
    deg = len(trim(p)) - 1
    out = []
    for d in range(2, bound + 1):
        if euler_phi(d) > deg:
            continue
        if not poly_divmod(p, list(cyclotomic_poly(d)))[1]:
            out.append(d)
    return out


def root_of_unity_is_root(p: list, n: int, j: int) -> bool:
    """Is exp(2 pi i j / n) a root of p? Decided exactly through Phi_{n / gcd(n, j)}."""
    d = n // math.gcd(n, j % n) if j % n else 1
    return not poly_divmod(p, list(cyclotomic_poly(d)))[1]


@dataclass(frozen=True)
class RecurrenceWitness:
    subset: tuple
    roots: tuple  # ((complex, multiplicity), ...) of the characteristic polynomial
    window: int
    samples: tuple  # f(-window) .. f(window)
    residual: object  # exact 0 on the periodic path, float otherwise
    exact: bool
    period: tuple | None = None  # one period f(0) .. f(d-1), exact path only
    log_root: complex | None = None  # numerical path: f(n) = exp(n*log_root - log_scale)
    log_scale: float = 0.0

    def value(self, n: int):
        if self.exact:
            return self.period[n % len(self.period)]
        return cmath.exp(n * self.log_root - self.log_scale)

    def __bool__(self):
        return True


def _newton(coeffs, z, steps=3):
    deriv = np.polyder(coeffs)
    for _ in range(steps):
        d = np.polyval(deriv, z)
        if d == 0:
            break
        z = z - np.polyval(coeffs, z) / d
    return complex(z)


def polish_root(factor: list, z: complex) -> complex:
    """Newton refinement of a simple root of `factor` at 40 digits."""
    mp_coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in map(Fraction, reversed(factor))]
    with mpmath.workdps(40):
        z = mpmath.findroot(lambda t: mpmath.polyval(mp_coeffs, t), mpmath.mpc(z.real, z.imag),
                            tol=mpmath.mpf(10) ** -35)
    return complex(z)


def polynomial_roots(p: list) -> list[tuple[complex, int, tuple]]:
    """(root, multiplicity, squarefree factor) triples.

    Multiplicities come from an exact squarefree decomposition, so each factor
    has simple roots; companion-matrix eigenvalues are Newton-polished in
    double precision and merged within the clustering threshold.
    """
    cluster = settings().root_cluster_tol
    out: list = []
    for factor, mult in squarefree_decomposition(p):
        if len(factor) < 2:
            continue
        coeffs = np.array([float(c) for c in reversed(factor)])
        for r in np.roots(coeffs):
            root = _newton(coeffs, complex(r))
            for i, (s, m, f) in enumerate(out):
                if abs(s - root) < cluster:
                    out[i] = (s, m + mult, f)
                    break
            else:
                out.append((root, mult, tuple(factor)))
    out.sort(key=lambda t: (round(abs(math.log(abs(t[0]))), 12), round(cmath.phase(t[0]) % (2 * math.pi), 12)))
    return out


def _window_residual(K: tuple, window: int, value) -> object:
    worst = 0
    lo, hi = K[0], K[-1]
    for g in range(-window - lo, window - hi + 1):
        s = sum(value(g + k) for k in K)
        worst = max(worst, abs(s))
    return worst


def recurrence_witness(K, window: int = 100) -> RecurrenceWitness:
    elems = _normalize_subset(K)
    if len(elems) < 2:
        raise PreconditionError("a singleton is a Pompeiu set in Z: no nonzero witness exists")
    p = characteristic_polynomial(elems)
    found = polynomial_roots(p)
    roots = tuple((r, m) for r, m, _ in found)
    cyclo = cyclotomic_factor_indices(p)
    if cyclo:
        d = cyclo[0]
        q, r = poly_divmod([-1] + [0] * (d - 1) + [1], list(cyclotomic_poly(d)))
        assert not r
        # d-periodic with f(0) = 1; annihilated by Phi_d(shift), hence by p(shift)
        period = tuple(-(q[i] if i < len(q) else 0) for i in range(d))
        samples = tuple(period[n % d] for n in range(-window, window + 1))
        residual = _window_residual(elems, window, lambda n: period[n % d])
        if residual != 0:
            raise ConsistencyError(f"periodic witness for {elems} has residual {residual}")
        return RecurrenceWitness(elems, roots, window, samples, residual, True, period=period)

    # no cyclotomic factor: f(n) = r^n for the root closest to the unit circle,
    # scaled so that max |f| over the window is 1
    root = polish_root(list(found[0][2]), found[0][0])
    log_root = complex(mpmath.log(mpmath.mpc(root.real, root.imag)))
    log_scale = window * abs(log_root.real)
    samples = tuple(cmath.exp(n * log_root - log_scale) for n in range(-window, window + 1))

    def value(n):
        return samples[n + window]

    residual = float(_window_residual(elems, window, value))
    if residual > settings().residual_tol:
        raise ConsistencyError(f"numerical witness for {elems} has residual {residual:.3e}")
    return RecurrenceWitness(elems, roots, window, samples, residual, False,
                             log_root=log_root, log_scale=log_scale)


def partial_energy(w: RecurrenceWitness, N: int):
    """E(N) = sum_{|n| <= N} |f(n)|^2; exact for periodic witnesses, mpmath otherwise."""
    if w.exact:
        d = len(w.period)
        total = 0
        for n in range(-N, N + 1):
            total += w.period[n % d] ** 2
        return total
    a = mpmath.mpf(w.log_root.real)
    s = mpmath.mpf(w.log_scale)
    with mpmath.workdps(30):
        if abs(a) < 1e-12:
            return (2 * N + 1) * mpmath.exp(-2 * s)
        rho2 = mpmath.exp(2 * a)
        geometric = (mpmath.exp(2 * a * (N + 1)) - mpmath.exp(-2 * a * N)) / (rho2 - 1)
        return geometric * mpmath.exp(-2 * s)


def energy_profile(w: RecurrenceWitness, n_max: int | None = None) -> list:
    """[E(0), E(1), ..., E(n_max)], accumulated term by term."""
    if n_max is None:
        n_max = w.window
    if not any(w.samples):
        raise PreconditionError("zero witness has no energy profile")
    if w.exact:
        out = [w.value(0) ** 2]
        for n in range(1, n_max + 1):
            out.append(out[-1] + w.value(n) ** 2 + w.value(-n) ** 2)
        return out
    with mpmath.workdps(30):
        a = mpmath.mpf(w.log_root.real)
        s = mpmath.mpf(w.log_scale)
        out = [mpmath.exp(-2 * s)]
        for n in range(1, n_max + 1):
            out.append(out[-1] + mpmath.exp(2 * a * n - 2 * s) + mpmath.exp(-2 * a * n - 2 * s))
    return out


def energy_growth_bound(w: RecurrenceWitness, N: int):
    """A lower bound c with E(2N) >= E(N) + c.

    Periodic: f = 1 on every multiple of d, and (N, 2N] holds at least floor(N/d)
    of them on each side. Numerical: the N terms on the growing side alone.
    """
    if w.exact:
        return 2 * (N // len(w.period))
    a = abs(mpmath.mpf(w.log_root.real))
    s = mpmath.mpf(w.log_scale)
    return N * mpmath.exp(2 * a * (N + 1) - 2 * s) if a else N * mpmath.exp(-2 * s)
