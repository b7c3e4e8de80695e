"""Finite groups as canonical multiplication tables, plus the standard constructors.

Every group has its identity at index 0. Constructors renumber as needed.
"""
from __future__ import annotations

import itertools
import math
import random
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import settings
from .errors import EmptySubsetError, GroupError, OrderBoundError

IDENTITY = 0


class FiniteGroup:
    __slots__ = ("order", "mul", "inv", "label", "cyclic_factors", "names", "_hash")

    def __init__(self, mul, inv, label="G", cyclic_factors=None, names=None):
        # trusted constructor: callers go through `from_table` or the named constructors
        self.order = len(mul)
        self.mul = tuple(tuple(row) for row in mul)
        self.inv = tuple(inv)
        self.label = label
        self.cyclic_factors = None if cyclic_factors is None else tuple(cyclic_factors)
        self.names = None if names is None else tuple(names)
        self._hash = hash((self.order, self.mul))

    identity = IDENTITY

    @classmethod
    def from_table(cls, table, label="G", cyclic_factors=None, names=None, full_check=None):
        """Validate an arbitrary Cayley table and renumber so the identity is index 0."""
        rows = [list(r) for r in table]
        n = len(rows)
        check_order(n)
        if n == 0:
            raise GroupError("empty table")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise GroupError(f"row {i} has length {len(row)}, expected {n}")
            if sorted(row) != list(range(n)):
                raise GroupError(f"row {i} not a permutation")
        for j in range(n):
            if sorted(rows[i][j] for i in range(n)) != list(range(n)):
                raise GroupError(f"column {j} not a permutation")
        ident = None
        for e in range(n):
            if rows[e] == list(range(n)) and all(rows[g][e] == g for g in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupError("no identity element")
        order = [ident] + [g for g in range(n) if g != ident]
        pos = {g: i for i, g in enumerate(order)}
        mul = [[pos[rows[order[a]][order[b]]] for b in range(n)] for a in range(n)]
        if names is not None:
            names = [names[g] for g in order]
        check_associative(mul, full=full_check)
        inv = [mul[a].index(IDENTITY) for a in range(n)]
        for a in range(n):
            if mul[inv[a]][a] != IDENTITY:
                raise GroupError(f"element {order[a]} has no two-sided inverse")
        return cls(mul, inv, label=label, cyclic_factors=cyclic_factors, names=names)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self._hash == other._hash and self.mul == other.mul

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def __getstate__(self):
        return (self.mul, self.inv, self.label, self.cyclic_factors, self.names)

    def __setstate__(self, state):
        mul, inv, label, factors, names = state
        FiniteGroup.__init__(self, mul, inv, label, factors, names)

    def elements(self) -> range:
        return range(self.order)

    def name(self, g: int) -> str:
        return self.names[g] if self.names else f"e{g}"

    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in range(self.order) for b in range(a))

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != IDENTITY:
            x = self.mul[x][g]
            k += 1
        return k

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        x = IDENTITY
        for _ in range(k):
            x = self.mul[x][g]
        return x

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(g) for g in self.elements()))


def check_order(n: int) -> None:
    bound = settings().max_order
    if n > bound:
        raise OrderBoundError(f"group order {n} exceeds bound {bound} (set POMPEIU_MAX_ORDER)")


def check_associative(mul, full=None, seed=0) -> None:
    n = len(mul)
    if full is None:
        full = n <= settings().full_assoc_order
    if full:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(10 * n * n))
    for a, b, c in triples:
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise GroupError(f"associativity fails at ({a}, {b}, {c})", (a, b, c))


@dataclass(frozen=True)
class Subset:
    group: FiniteGroup = field(repr=False)
    elements: tuple

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        if len(elems) != len(self.elements) or tuple(self.elements) != elems:
            raise ValueError("subset elements must be strictly increasing")
        if elems and not (0 <= elems[0] and elems[-1] < self.group.order):
            raise ValueError(f"subset elements out of range 0..{self.group.order - 1}")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def require_nonempty(self) -> "Subset":
        if not self.elements:
            raise EmptySubsetError()
        return self

    def translate(self, g: int, h: int) -> "Subset":
        """The set gKh."""
        m = self.group.mul
        return Subset(self.group, tuple(sorted(m[m[g][k]][h] for k in self.elements)))


def subset(group: FiniteGroup, elements: Iterable[int]) -> Subset:
    elems = sorted(set(int(x) for x in elements))
    return Subset(group, tuple(elems))


# constructors ---------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    check_order(n)
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    inv = [(-a) % n for a in range(n)]
    return FiniteGroup(mul, inv, label=f"Z{n}", cyclic_factors=(n,) if n > 1 else ())


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; index k + n*e stands for r^k s^e."""
    if n < 1:
        raise GroupError("dihedral group needs n >= 1")
    check_order(2 * n)

    def mul(x, y):
        a, e = x % n, x // n
        b, f = y % n, y // n
        k = (a + (b if e == 0 else -b)) % n
        return k + n * ((e + f) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    names = [("r^%d" % (x % n)) + ("s" if x >= n else "") for x in range(2 * n)]
    return FiniteGroup.from_table(table, label=f"D{n}", names=names)


def _compose(p, q):
    # (p*q)(x) = p(q(x))
    return tuple(p[x] for x in q)


def _group_from_perms(perms, label, names=None):
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[_compose(p, q)] for q in perms] for p in perms]
    if names is None:
        names = [format_cycles(p) for p in perms]
    return FiniteGroup.from_table(table, label=label, names=names)


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("symmetric group needs n >= 1")
    check_order(math.factorial(n))
    perms = list(itertools.permutations(range(n)))
    return _group_from_perms(perms, f"S{n}")


def quaternion8() -> FiniteGroup:
    """Q8 with element order 1, -1, i, -i, j, -j, k, -k."""
    # unit quaternions as (sign, axis) with axis in {1, i, j, k}
    basis = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
    elems = [(s, a) for a in "1ijk" for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        s, a = basis[(x[1], y[1])]
        return index[(x[0] * y[0] * s, a)]

    table = [[mul(x, y) for y in elems] for x in elems]
    names = [("" if s == 1 else "-") + a for s, a in elems]
    return FiniteGroup.from_table(table, label="Q8", names=names)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Pair (a, b) becomes index a*|H| + b."""
    m = H.order
    check_order(G.order * m)
    n = G.order * m
    table = [[G.mul[x // m][y // m] * m + H.mul[x % m][y % m] for y in range(n)] for x in range(n)]
    inv = [G.inv[x // m] * m + H.inv[x % m] for x in range(n)]
    factors = None
    if G.cyclic_factors is not None and H.cyclic_factors is not None:
        factors = G.cyclic_factors + H.cyclic_factors
    names = [f"({G.name(x // m)},{H.name(x % m)})" for x in range(n)]
    return FiniteGroup(table, inv, label=f"{G.label}x{H.label}", cyclic_factors=factors, names=names)


def from_cayley_table(table, label="G", cyclic_factors=None, full_check=None) -> FiniteGroup:
    return FiniteGroup.from_table(table, label=label, cyclic_factors=cyclic_factors, full_check=full_check)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    text = text.strip()
    if not text:
        raise GroupError("empty permutation")
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise GroupError(f"unexpected text {text[pos:m.start()]!r} in cycle notation")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            cycles.append(tuple(int(t) for t in body))
        except ValueError:
            raise GroupError(f"non-integer point in cycle {m.group(0)!r}") from None
    if text[pos:].strip() or not cycles:
        raise GroupError(f"malformed cycle notation {text!r}")
    return cycles


def cycles_to_perm(cycles: Sequence[Sequence[int]], degree: int) -> tuple[int, ...]:
    p = list(range(degree))
    seen = set()
    for cyc in cycles:
        for a in cyc:
            if a < 0 or a >= degree:
                raise GroupError(f"point {a} out of range")
            if a in seen:
                raise GroupError(f"point {a} repeated in cycle notation")
            seen.add(a)
        for i, a in enumerate(cyc):
            p[a] = cyc[(i + 1) % len(cyc)]
    return tuple(p)


def format_cycles(p: Sequence[int]) -> str:
    seen, out = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def from_permutation_generators(generators, label="G", degree=None) -> FiniteGroup:
    """Close a set of permutations (cycle strings or image tuples) by breadth-first products."""
    parsed = []
    for gen in generators:
        if isinstance(gen, str):
            parsed.append(("cycles", parse_cycles(gen)))
        else:
            parsed.append(("perm", tuple(gen)))
    if degree is None:
        degree = 1
        for kind, data in parsed:
            if kind == "cycles":
                degree = max([degree] + [a + 1 for c in data for a in c])
            else:
                degree = max(degree, len(data))
    perms = []
    for kind, data in parsed:
        if kind == "cycles":
            perms.append(cycles_to_perm(data, degree))
        else:
            if sorted(data) != list(range(len(data))):
                raise GroupError(f"{data} is not a permutation")
            perms.append(tuple(data) + tuple(range(len(data), degree)))
    bound = settings().max_order
    ident = tuple(range(degree))
    seen = {ident: 0}
    elements = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in perms:
            y = _compose(x, s)
            if y not in seen:
                seen[y] = len(elements)
                elements.append(y)
                if len(elements) > bound:
                    raise OrderBoundError(f"generated group exceeds order bound {bound}")
                queue.append(y)
    return _group_from_perms(elements, label)


def make_group(spec: str) -> FiniteGroup:
    """Build a group from a short name: Z6, C6, D4, S3, Q8, Z2xZ4, cyclic(5), trivial."""
    text = spec.strip()
    parts = [p for p in re.split(r"\s*[x×]\s*", text) if p] if re.search(r"\d\s*[x×]", text) else [text]
    if len(parts) > 1:
        G = make_group(parts[0])
        for p in parts[1:]:
            G = direct_product(G, make_group(p))
        return G
    m = re.fullmatch(r"(?i)(z|c|cyclic|d|dihedral|s|symmetric)\(?(\d+)\)?", text)
    if m:
        kind, n = m.group(1).lower(), int(m.group(2))
        if kind in ("z", "c", "cyclic"):
            return cyclic(n)
        if kind in ("d", "dihedral"):
            return dihedral(n)
        return symmetric(n)
    if text.lower() in ("q8", "quaternion8"):
        return quaternion8()
    if text.lower() == "trivial":
        return cyclic(1)
    raise GroupError(f"unknown group spec {spec!r}")


def fleet() -> list[FiniteGroup]:
    """The built-in test fleet."""
    groups = [cyclic(n) for n in range(1, 13)]
    groups += [dihedral(n) for n in range(3, 7)]
    groups += [symmetric(3), symmetric(4), quaternion8()]
    groups += [direct_product(cyclic(2), cyclic(2)), direct_product(cyclic(2), cyclic(4))]
    return groups
