"""The group ring C G over a finite group, with Gaussian-rational coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping

from .errors import GroupMismatchError
from .groups import IDENTITY, FiniteGroup, Subset
from .scalar import ONE, ZERO, Scalar


class GroupRingElement:
    """f = sum a_g g, stored sparsely as {index: Scalar} without zero entries."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs: Mapping[int, object] | None = None):
        clean = {}
        if coeffs:
            for g, a in coeffs.items():
                g = int(g)
                if not 0 <= g < group.order:
                    raise ValueError(f"index {g} outside group of order {group.order}")
                a = Scalar.coerce(a)
                if a:
                    clean[g] = a
        self.group = group
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def zero(cls, group):
        return cls(group)

    @classmethod
    def point(cls, group, g, coeff=1):
        """The point mass coeff * chi_g."""
        return cls(group, {g: coeff})

    @classmethod
    def from_vector(cls, group, values: Iterable):
        return cls(group, dict(enumerate(values)))

    def to_vector(self) -> list[Scalar]:
        return [self.coeffs.get(g, ZERO) for g in range(self.group.order)]

    def __getitem__(self, g: int) -> Scalar:
        return self.coeffs.get(g, ZERO)

    def support(self) -> tuple[int, ...]:
        return tuple(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            return False
        if other.group != self.group:
            raise GroupMismatchError()
        return True

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.group, tuple(self.coeffs.items())))

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        out = dict(self.coeffs)
        for g, a in other.coeffs.items():
            out[g] = out.get(g, ZERO) + a
        return GroupRingElement(self.group, out)

    def __neg__(self):
        return GroupRingElement(self.group, {g: -a for g, a in self.coeffs.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            return convolve(self, other)
        try:
            c = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GroupRingElement(self.group, {g: a * c for g, a in self.coeffs.items()})

    def __rmul__(self, other):
        try:
            c = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GroupRingElement(self.group, {g: c * a for g, a in self.coeffs.items()})

    def __truediv__(self, other):
        c = Scalar.coerce(other)
        return self * c.inverse()

    def __repr__(self):
        return f"GroupRingElement({self.group.label}, {format_element(self)})"


def format_element(f: GroupRingElement) -> str:
    if not f.coeffs:
        return "0"
    terms = []
    for g, a in f.coeffs.items():
        c = str(a)
        if not a.is_real():
            c = f"({c})"
        terms.append(f"{c}·e{g}")
    return " + ".join(terms)


def convolve(f: GroupRingElement, h: GroupRingElement) -> GroupRingElement:
    """(f*h)(g) = sum_x f(g x^-1) h(x), computed as sum_{a,b} f(a) h(b) [ab]."""
    if f.group != h.group:
        raise GroupMismatchError()
    mul = f.group.mul
    out: dict[int, Scalar] = {}
    for a, fa in f.coeffs.items():
        row = mul[a]
        for b, hb in h.coeffs.items():
            ab = row[b]
            out[ab] = out.get(ab, ZERO) + fa * hb
    return GroupRingElement(f.group, out)


def tilde(f: GroupRingElement) -> GroupRingElement:
    """x -> f(x^-1)."""
    inv = f.group.inv
    return GroupRingElement(f.group, {inv[g]: a for g, a in f.coeffs.items()})


def conjugate(f: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(f.group, {g: a.conjugate() for g, a in f.coeffs.items()})


def star(f: GroupRingElement) -> GroupRingElement:
    """Adjoint: sum conj(a_g) g^-1."""
    inv = f.group.inv
    return GroupRingElement(f.group, {inv[g]: a.conjugate() for g, a in f.coeffs.items()})


def translate_left(g: int, f: GroupRingElement) -> GroupRingElement:
    """(L_g f)(x) = f(gx)."""
    G = f.group
    ginv = G.inv[g]
    # f(gx) = a_y at x = g^-1 y
    return GroupRingElement(G, {G.mul[ginv][y]: a for y, a in f.coeffs.items()})


def translate_right(g: int, f: GroupRingElement) -> GroupRingElement:
    """(R_g f)(x) = f(x g^-1)."""
    G = f.group
    return GroupRingElement(G, {G.mul[y][g]: a for y, a in f.coeffs.items()})


def augmentation(f: GroupRingElement) -> Scalar:
    total = ZERO
    for a in f.coeffs.values():
        total = total + a
    return total


def inner_product(f: GroupRingElement, h: GroupRingElement) -> Scalar:
    """<f, h> = sum a_g conj(b_g); conjugate-linear in the second slot."""
    if f.group != h.group:
        raise GroupMismatchError()
    total = ZERO
    for g, a in f.coeffs.items():
        b = h.coeffs.get(g)
        if b is not None:
            total = total + a * b.conjugate()
    return total


def char_fn(K: Subset) -> GroupRingElement:
    return GroupRingElement(K.group, {k: ONE for k in K.elements})


def identity_element(group: FiniteGroup) -> GroupRingElement:
    return GroupRingElement.point(group, IDENTITY)


def point(group: FiniteGroup, g: int, coeff=1) -> GroupRingElement:
    return GroupRingElement.point(group, g, coeff)
