"""Conjugacy classes, class sums, the center of C G and normal subgroups."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import GroupRingElement, char_fn, convolve, point
from .config import settings
from .errors import PreconditionError
from .groups import IDENTITY, FiniteGroup, Subset


@dataclass(frozen=True)
class ConjugacyClassDecomposition:
    classes: tuple  # of Subset
    class_of: tuple

    def __len__(self):
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


@lru_cache(maxsize=256)
def conjugacy_classes(G: FiniteGroup) -> ConjugacyClassDecomposition:
    """Classes ordered by their smallest element."""
    mul, inv = G.mul, G.inv
    class_of = [-1] * G.order
    classes = []
    for x in G.elements():
        if class_of[x] >= 0:
            continue
        members = sorted({mul[mul[inv[g]][x]][g] for g in G.elements()})
        for y in members:
            class_of[y] = len(classes)
        classes.append(Subset(G, tuple(members)))
    return ConjugacyClassDecomposition(tuple(classes), tuple(class_of))


def class_sums(G: FiniteGroup) -> list[GroupRingElement]:
    return [char_fn(c) for c in conjugacy_classes(G).classes]


def conjugate_by(g: int, f: GroupRingElement) -> GroupRingElement:
    """chi_{g^-1} * f * chi_g."""
    G = f.group
    return convolve(convolve(point(G, G.inv[g]), f), point(G, g))


def is_central_by_conjugation(f: GroupRingElement) -> bool:
    return all(conjugate_by(g, f) == f for g in f.group.elements())


def is_class_function(f: GroupRingElement) -> bool:
    dec = conjugacy_classes(f.group)
    return all(len({f[x] for x in c}) == 1 for c in dec.classes)


def is_central(f: GroupRingElement) -> bool:
    """Both characterizations of centrality are evaluated and must agree."""
    a = is_central_by_conjugation(f)
    b = is_class_function(f)
    if a != b:
        from .errors import ConsistencyError

        raise ConsistencyError("conjugation test and class-function test disagree")
    return a


def center_dimension(G: FiniteGroup) -> int:
    return len(conjugacy_classes(G))


def class_sum_coordinates(f: GroupRingElement) -> list | None:
    """Coefficients of f in the class-sum basis, or None if f is not central."""
    dec = conjugacy_classes(f.group)
    coords = []
    for c in dec.classes:
        values = {f[x] for x in c}
        if len(values) != 1:
            return None
        coords.append(values.pop())
    return coords


def is_subgroup(G: FiniteGroup, elems) -> bool:
    s = set(elems)
    if IDENTITY not in s:
        return False
    return all(G.mul[a][b] in s for a in s for b in s) and all(G.inv[a] in s for a in s)


def is_normal_subgroup(K: Subset) -> bool:
    G = K.group
    if not is_subgroup(G, K.elements):
        return False
    s = set(K.elements)
    return all(G.mul[G.mul[g][k]][G.inv[g]] in s for g in G.elements() for k in s)


@lru_cache(maxsize=256)
def normal_subgroups(G: FiniteGroup, max_classes: int | None = None) -> tuple:
    """All normal subgroups, as unions of conjugacy classes closed under multiplication."""
    if max_classes is None:
        max_classes = settings().max_classes
    dec = conjugacy_classes(G)
    rest = dec.classes[1:]
    if len(dec) > max_classes:
        raise PreconditionError(
            f"{G.label} has {len(dec)} conjugacy classes; normal subgroup enumeration is limited to {max_classes}"
        )
    found = set()
    mul = G.mul
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            elems = set(dec.classes[0].elements)
            for c in combo:
                elems.update(c.elements)
            # the order of a subgroup divides |G|
            if G.order % len(elems):
                continue
            # finite + closed under multiplication => subgroup; class union => normal
            if all(mul[a][b] in elems for a in elems for b in elems):
                found.add(tuple(sorted(elems)))
    return tuple(Subset(G, e) for e in sorted(found, key=lambda e: (len(e), e)))


def delta_subgroup(G: FiniteGroup) -> Subset:
    """Elements with finitely many conjugates: everything, for a finite group."""
    dec = conjugacy_classes(G)
    return Subset(G, tuple(x for x in G.elements() if len(dec.classes[dec.class_of[x]]) < float("inf")))


def brute_force_normal_subgroups(G: FiniteGroup) -> set:
    """Every normal subgroup by scanning the full powerset; only for tiny groups."""
    n = G.order
    if n > 16:
        raise PreconditionError("brute-force subgroup scan limited to order 16")
    out = set()
    others = range(1, n)
    for mask in range(1 << (n - 1)):
        elems = (IDENTITY,) + tuple(g for i, g in enumerate(others) if mask >> i & 1)
        K = Subset(G, elems)
        if is_normal_subgroup(K):
            out.add(elems)
    return out
