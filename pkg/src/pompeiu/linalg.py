"""Exact linear algebra over Q(i).

Elimination is fraction-free: each row is scaled to Gaussian integers, pivots
are cleared by cross-multiplication and rows are divided by their integer
content after every step. Only the final (at most ncols) independent rows are
converted back to `Scalar` for Gauss-Jordan reduction.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar


def _lcm_denominators(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        d = d * v.denominator // math.gcd(d, v.denominator)
    return d


def _to_gaussian_ints(row: Sequence) -> tuple[list[int], list[int] | None]:
    """Scale a row to Gaussian integers. Returns (re, im) with im None for real rows."""
    if all(isinstance(x, int) for x in row):
        return list(row), None
    vals = [Scalar.coerce(x) for x in row]
    if all(v.im == 0 for v in vals):
        d = _lcm_denominators(v.re for v in vals)
        return [int(v.re * d) for v in vals], None
    d = _lcm_denominators([v.re for v in vals] + [v.im for v in vals])
    return [int(v.re * d) for v in vals], [int(v.im * d) for v in vals]


def _content_reduce(re: list[int], im: list[int] | None) -> None:
    g = 0
    for x in re:
        g = math.gcd(g, x)
    if im is not None:
        for x in im:
            g = math.gcd(g, x)
    if g > 1:
        for i in range(len(re)):
            re[i] //= g
        if im is not None:
            for i in range(len(im)):
                im[i] //= g


class Echelon:
    """Incrementally maintained row-echelon basis of a row space."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, list[int], list[int] | None]] = []  # (pivot, re, im)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def full(self) -> bool:
        return len(self.rows) == self.ncols

    def reduce(self, row):
        re, im = _to_gaussian_ints(row)
        if len(re) != self.ncols:
            raise ValueError(f"row length {len(re)} != {self.ncols}")
        for piv, bre, bim in self.rows:
            vr = re[piv]
            vi = im[piv] if im is not None else 0
            if vr == 0 and vi == 0:
                continue
            pr = bre[piv]
            pi = bim[piv] if bim is not None else 0
            if im is None and bim is None:
                # real fast path: v <- pr*v - vr*b
                g = math.gcd(pr, vr)
                a, c = pr // g, vr // g
                re = [a * x - c * y for x, y in zip(re, bre)]
            else:
                if im is None:
                    im = [0] * self.ncols
                bi = bim if bim is not None else [0] * self.ncols
                # v <- p*v - v_piv*b with complex p, v_piv
                new_re = [pr * xr - pi * xi - (vr * yr - vi * yi) for xr, xi, yr, yi in zip(re, im, bre, bi)]
                new_im = [pr * xi + pi * xr - (vr * yi + vi * yr) for xr, xi, yr, yi in zip(re, im, bre, bi)]
                re, im = new_re, new_im
            _content_reduce(re, im)
        if im is not None and not any(im):
            im = None
        return re, im

    def add(self, row) -> bool:
        """Insert a row; True when it was independent of the rows so far."""
        re, im = self.reduce(row)
        for j in range(self.ncols):
            if re[j] or (im is not None and im[j]):
                self._insert(j, re, im)
                return True
        return False

    def contains(self, row) -> bool:
        re, im = self.reduce(row)
        return not any(re) and (im is None or not any(im))

    def _insert(self, piv, re, im):
        k = 0
        while k < len(self.rows) and self.rows[k][0] < piv:
            k += 1
        self.rows.insert(k, (piv, re, im))

    def scalar_rows(self) -> list[list[Scalar]]:
        out = []
        for _, re, im in self.rows:
            if im is None:
                out.append([Scalar(x) for x in re])
            else:
                out.append([Scalar(x, y) for x, y in zip(re, im)])
        return out


def echelon(rows: Iterable, ncols: int, stop_when_full=True) -> Echelon:
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
        if stop_when_full and e.full():
            break
    return e


def rank(rows: Iterable, ncols: int) -> int:
    return echelon(rows, ncols).rank


def rref(rows: Iterable, ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form of the row space: (nonzero rows, pivot columns)."""
    mat = echelon(rows, ncols).scalar_rows()
    pivots = []
    for i, row in enumerate(mat):
        piv = next(j for j in range(ncols) if row[j])
        inv = row[piv].inverse()
        row = [x * inv for x in row]
        mat[i] = row
        pivots.append(piv)
    # back-substitute upwards
    for i in range(len(mat) - 1, -1, -1):
        piv = pivots[i]
        for k in range(i):
            c = mat[k][piv]
            if c:
                mat[k] = [x - c * y for x, y in zip(mat[k], mat[i])]
    return mat, pivots


def nullspace(rows: Iterable, ncols: int) -> list[list[Scalar]]:
    """Basis of {v : row . v = 0 for all rows}.

    One vector per free column, ascending; vector j has 1 at free column j,
    0 at the other free columns. This basis is canonical for the subspace.
    """
    mat, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivset:
            continue
        v = [ZERO] * ncols
        v[j] = ONE
        for row, piv in zip(mat, pivots):
            v[piv] = -row[j]
        basis.append(v)
    return basis


def same_span(a: Sequence, b: Sequence, ncols: int) -> bool:
    if not a and not b:
        return True
    return rref(a, ncols)[0] == rref(b, ncols)[0]


def dot(row: Sequence, v: Sequence) -> Scalar:
    total = ZERO
    for x, y in zip(row, v):
        if x and y:
            total = total + Scalar.coerce(x) * y
    return total
