"""Deciding the two-sided and one-sided problems on a finite group.

A finite subset K is two-sided Pompeiu when the only f with
sum_{x in gKh} f(x) = 0 for all g, h is f = 0. The solution space of that
system is the annihilator of the ideal generated by chi_K, so the verdict is
"ideal rank == |G|".
"""
from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import linalg
from .algebra import (
    GroupRingElement,
    augmentation,
    char_fn,
    convolve,
    identity_element,
    point,
    tilde,
    translate_left,
    translate_right,
)
from .config import settings
from .cyclotomic import CyclotomicElement, CyclotomicField
from .errors import ConsistencyError, EmptySubsetError, PreconditionError
from .groups import IDENTITY, FiniteGroup, Subset
from .scalar import ZERO, Scalar
from .structure import is_central, is_normal_subgroup, normal_subgroups


# translate sums -------------------------------------------------------------


def translate_set(K: Subset, g: int, h: int) -> tuple[int, ...]:
    mul = K.group.mul
    return tuple(sorted(mul[mul[g][k]][h] for k in K.elements))


def direct_translate_sum(f: GroupRingElement, g: int, K: Subset, h: int) -> Scalar:
    total = ZERO
    for x in translate_set(K, g, h):
        total = total + f[x]
    return total


def convolution_translate_sum(f: GroupRingElement, g: int, K: Subset, h: int) -> Scalar:
    """(tilde(chi_K) * L_g f)(h)."""
    return convolve(tilde(char_fn(K)), translate_left(g, f))[h]


def right_convolution_translate_sum(f: GroupRingElement, g: int, K: Subset, h: int) -> Scalar:
    """The mirrored form: the sum over gKh equals (R_{h^-1} f * tilde(chi_K))(g)."""
    G = f.group
    return convolve(translate_right(G.inv[h], f), tilde(char_fn(K)))[g]


def translate_sum(f: GroupRingElement, g: int, K: Subset, h: int) -> Scalar:
    K.require_nonempty()
    direct = direct_translate_sum(f, g, K, h)
    via_conv = convolution_translate_sum(f, g, K, h)
    if direct != via_conv:
        raise ConsistencyError(f"translate sum mismatch at g={g}, h={h}: {direct} != {via_conv}")
    return direct


def satisfies_two_sided(f: GroupRingElement, K: Subset) -> bool:
    """All |G|^2 equations sum_{x in gKh} f(x) = 0, evaluated directly."""
    G = K.group
    return all(not direct_translate_sum(f, g, K, h) for g in G.elements() for h in G.elements())


def satisfies_one_sided(f: GroupRingElement, K: Subset) -> bool:
    """sum_{x in gK} f(x) = 0 for all g."""
    G = K.group
    for g in G.elements():
        total = ZERO
        for k in K.elements:
            total = total + f[G.mul[g][k]]
        if total:
            return False
    return True


# the ideal generated by chi_K -----------------------------------------------


@lru_cache(maxsize=4096)
def _translate_rows(K: Subset) -> tuple[tuple[int, ...], ...]:
    """Distinct sets gKh as 0/1 rows, in order of first appearance over (g, h)."""
    G = K.group
    n = G.order
    seen = set()
    rows = []
    for g in G.elements():
        gK = [G.mul[g][k] for k in K.elements]
        for h in G.elements():
            mask = 0
            for x in gK:
                mask |= 1 << G.mul[x][h]
            if mask not in seen:
                seen.add(mask)
                rows.append(tuple((mask >> j) & 1 for j in range(n)))
    return tuple(rows)


def translate_system(K: Subset) -> list[tuple[int, ...]]:
    """Rows of the translate-sum system: one per distinct set gKh, columns indexed by G."""
    K.require_nonempty()
    return list(_translate_rows(K))


def ideal_span_rank(K: Subset) -> int:
    """dim of the two-sided ideal generated by chi_K, i.e. rank of the translates chi_g*chi_K*chi_h."""
    K.require_nonempty()
    return linalg.rank(_translate_rows(K), K.group.order)


def ideal_basis_by_saturation(K: Subset) -> list[list[Scalar]]:
    """Span of the ideal generated by chi_K, grown by multiplying by group elements on both sides."""
    G = K.group
    ech = linalg.Echelon(G.order)
    start = char_fn(K)
    ech.add(start.to_vector())
    queue = [start]
    while queue and not ech.full():
        v = queue.pop()
        for g in G.elements():
            for w in (convolve(point(G, g), v), convolve(v, point(G, g))):
                if ech.add(w.to_vector()):
                    queue.append(w)
    return ech.scalar_rows()


def annihilator(rows: Sequence[Sequence[Scalar]], n: int) -> list[list[Scalar]]:
    """{f : <alpha, f> = 0 for every row alpha}; the pairing conjugates f."""
    conj_rows = [[Scalar.coerce(x).conjugate() for x in r] for r in rows]
    return linalg.nullspace(conj_rows, n)


# verdicts ---------------------------------------------------------------------


@dataclass(frozen=True)
class SolutionSpace:
    basis: tuple
    side: str  # "two_sided" | "one_sided"

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class OracleAgreement:
    dft_all_nonzero: bool
    zero_characters: tuple
    agrees: bool

    def summary(self) -> str:
        if self.dft_all_nonzero:
            return "dft:nonvanishing"
        return f"dft:vanishes-at-{len(self.zero_characters)}"


@dataclass(frozen=True)
class PompeiuVerdict:
    subset: Subset
    is_pompeiu: bool
    ideal_rank: int
    witness_basis: tuple
    oracle_agreement: OracleAgreement | None = None

    def __post_init__(self):
        n = self.subset.group.order
        if self.is_pompeiu != (self.ideal_rank == n) or self.is_pompeiu != (not self.witness_basis):
            raise ConsistencyError("verdict, rank and witness basis disagree")
        if self.ideal_rank + len(self.witness_basis) != n:
            raise ConsistencyError(f"rank {self.ideal_rank} + witness dim {len(self.witness_basis)} != {n}")

    @property
    def witness_dim(self) -> int:
        return len(self.witness_basis)


def _vectors_to_elements(G, vectors):
    return tuple(GroupRingElement.from_vector(G, v) for v in vectors)


def two_sided_solution_space(K: Subset, cross_check: bool | None = None) -> SolutionSpace:
    """Nullspace of the translate-sum system, optionally checked against the ideal's annihilator."""
    K.require_nonempty()
    G = K.group
    n = G.order
    rows = _translate_rows(K)
    basis = linalg.nullspace(rows, n)
    for v in basis:
        for r in rows:
            if linalg.dot(r, v):
                raise ConsistencyError("witness violates a translate-sum equation")
    if cross_check is None:
        cross_check = n <= settings().cross_check_order
    if cross_check:
        other = annihilator(ideal_basis_by_saturation(K), n)
        if not linalg.same_span(basis, other, n):
            raise ConsistencyError("translate-sum nullspace differs from the annihilator of the ideal")
    return SolutionSpace(_vectors_to_elements(G, basis), "two_sided")


def has_dft_oracle(G: FiniteGroup) -> bool:
    return G.cyclic_factors is not None and G.is_abelian()


def is_pompeiu_set(K: Subset, cross_check: bool | None = None, oracle: bool | None = None) -> PompeiuVerdict:
    K.require_nonempty()
    G = K.group
    n = G.order
    rank = ideal_span_rank(K)
    if rank == n:
        basis = ()
        if cross_check is None:
            cross_check = n <= settings().cross_check_order
        if cross_check and len(ideal_basis_by_saturation(K)) != n:
            raise ConsistencyError("ideal saturation does not reach the whole group ring")
    else:
        basis = two_sided_solution_space(K, cross_check).basis
    agreement = None
    if oracle is None:
        oracle = has_dft_oracle(G)
    if oracle:
        dft = dft_oracle(K)
        agrees = dft.all_nonzero == (rank == n)
        if not agrees:
            raise ConsistencyError(f"DFT oracle disagrees with rank criterion on {K.elements}")
        agreement = OracleAgreement(dft.all_nonzero, dft.zero_characters(), agrees)
    return PompeiuVerdict(K, rank == n, rank, basis, agreement)


def normal_subgroup_witness(K: Subset) -> GroupRingElement:
    """chi_K - |K| chi_1 for a nontrivial normal subgroup K."""
    if not is_normal_subgroup(K):
        raise PreconditionError(f"{K.elements} is not a normal subgroup of {K.group.label}")
    if len(K) == 1:
        raise PreconditionError("the trivial subgroup gives the zero witness")
    w = char_fn(K) - len(K) * identity_element(K.group)
    if not w or augmentation(w) or not satisfies_two_sided(w, K):
        raise ConsistencyError("normal subgroup witness failed verification")
    return w


def central_idempotent(K: Subset) -> GroupRingElement:
    """chi_K / |K| for a normal subgroup K."""
    if not is_normal_subgroup(K):
        raise PreconditionError(f"{K.elements} is not a normal subgroup of {K.group.label}")
    e = char_fn(K) / len(K)
    if convolve(e, e) != e or not is_central(e):
        raise ConsistencyError("chi_K/|K| is not a central idempotent")
    return e


def one_sided_solution_space(K: Subset) -> SolutionSpace:
    """All f with sum_{x in gK} f(x) = 0 for every g: the kernel of f -> chi_K * tilde(f)."""
    K.require_nonempty()
    G = K.group
    n = G.order
    chi = char_fn(K)
    # column x of the map is chi_K * tilde(chi_x)
    columns = [convolve(chi, tilde(point(G, x))).to_vector() for x in G.elements()]
    rows = [[columns[x][g] for x in G.elements()] for g in G.elements()]
    basis = _vectors_to_elements(G, linalg.nullspace(rows, n))
    for w in basis:
        if not satisfies_one_sided(w, K):
            raise ConsistencyError("one-sided solution failed direct summation")
    return SolutionSpace(basis, "one_sided")


def in_span(f: GroupRingElement, basis: Sequence[GroupRingElement]) -> bool:
    n = f.group.order
    ech = linalg.echelon([b.to_vector() for b in basis], n, stop_when_full=False)
    return ech.contains(f.to_vector())


# abelian DFT oracle -----------------------------------------------------------


@lru_cache(maxsize=256)
def abelian_coordinates(G: FiniteGroup) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """(factors, coords): coords[x] expresses x in a basis of cyclic factors of the recorded orders."""
    if not G.is_abelian():
        raise PreconditionError(f"{G.label} is not abelian; DFT oracle unavailable")
    factors = G.cyclic_factors
    if factors is None:
        raise PreconditionError(f"{G.label} has no recorded cyclic-factor decomposition")
    factors = tuple(f for f in factors if f > 1)
    if math.prod(factors) != G.order:
        raise PreconditionError(f"cyclic factors {factors} do not multiply to |G| = {G.order}")
    by_order: dict[int, list[int]] = {}
    for x in G.elements():
        by_order.setdefault(G.element_order(x), []).append(x)

    def span(gens):
        elems = {IDENTITY}
        for g in gens:
            elems = {G.mul[a][G.power(g, k)] for a in elems for k in range(G.element_order(g))}
        return elems

    def search(chosen):
        if len(chosen) == len(factors):
            return chosen
        size = math.prod(factors[: len(chosen) + 1])
        for cand in by_order.get(factors[len(chosen)], []):
            if len(span(chosen + [cand])) == size:
                found = search(chosen + [cand])
                if found is not None:
                    return found
        return None

    gens = search([])
    if gens is None:
        raise PreconditionError(f"{G.label} is not isomorphic to a product of cyclic groups {factors}")
    coords = [None] * G.order
    for exps in itertools.product(*(range(f) for f in factors)):
        x = IDENTITY
        for g, e in zip(gens, exps):
            x = G.mul[x][G.power(g, e)]
        coords[x] = exps
    return factors, tuple(coords)


@dataclass(frozen=True)
class DftOracleResult:
    field: CyclotomicField
    characters: tuple  # index tuples j
    values: tuple  # CyclotomicElement per character

    @property
    def all_nonzero(self) -> bool:
        return all(not v.is_zero() for v in self.values)

    def zero_characters(self) -> tuple:
        return tuple(j for j, v in zip(self.characters, self.values) if v.is_zero())


def dft_oracle(K: Subset) -> DftOracleResult:
    """sum_{k in K} chi_j(k) for every character chi_j, exactly in Q(zeta_m), m = exponent."""
    K.require_nonempty()
    G = K.group
    factors, coords = abelian_coordinates(G)
    m = math.lcm(*factors) if factors else 1
    F = CyclotomicField(m)
    scale = [m // f for f in factors]
    chars = tuple(itertools.product(*(range(f) for f in factors)))
    values = []
    for j in chars:
        exps = (sum(a * b * s for a, b, s in zip(coords[k], j, scale)) for k in K.elements)
        values.append(F.from_exponents(exps))
    return DftOracleResult(F, chars, tuple(values))


# classification ---------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationRow:
    subset: tuple
    is_pompeiu: bool
    ideal_rank: int
    witness_dim: int
    orbit_size: int
    oracle: str

    @property
    def size(self) -> int:
        return len(self.subset)


@dataclass
class ClassificationReport:
    group: FiniteGroup
    mode: str  # "full" | "orbits"
    max_size: int | None
    rows: list
    is_pompeiu_group: bool | None
    l2: "L2Verdict"
    normal_subgroups: tuple = field(default_factory=tuple)

    def counts(self) -> dict:
        pompeiu = sum(r.orbit_size for r in self.rows if r.is_pompeiu)
        total = sum(r.orbit_size for r in self.rows)
        return {"subsets": total, "pompeiu": pompeiu, "not_pompeiu": total - pompeiu}


class _OrbitTool:
    """Images of subset bitmasks under x -> g x h via byte lookup tables."""

    def __init__(self, G: FiniteGroup):
        n = G.order
        self.nbytes = (n + 7) // 8
        self.tables = []
        for g in G.elements():
            for h in G.elements():
                perm = [G.mul[G.mul[g][x]][h] for x in range(n)]
                tab = []
                for b in range(self.nbytes):
                    t = [0] * 256
                    for v in range(256):
                        m = 0
                        for i in range(8):
                            if v >> i & 1 and 8 * b + i < n:
                                m |= 1 << perm[8 * b + i]
                        t[v] = m
                    tab.append(t)
                self.tables.append(tab)

    def orbit(self, mask: int) -> set:
        out = set()
        for tab in self.tables:
            img = 0
            for b in range(self.nbytes):
                img |= tab[b][(mask >> (8 * b)) & 0xFF]
            out.add(img)
        return out


def _mask_of(elems) -> int:
    m = 0
    for x in elems:
        m |= 1 << x
    return m


def _subsets_in_order(n: int, max_size: int):
    for size in range(1, max_size + 1):
        yield from itertools.combinations(range(n), size)


def _classify_one(G: FiniteGroup, elems: tuple, orbit_size: int, oracle: bool) -> ClassificationRow:
    v = is_pompeiu_set(Subset(G, elems), oracle=oracle)
    summary = v.oracle_agreement.summary() if v.oracle_agreement else "n/a"
    return ClassificationRow(elems, v.is_pompeiu, v.ideal_rank, v.witness_dim, orbit_size, summary)


def _classify_chunk(args):
    G, items, oracle = args
    return [_classify_one(G, elems, size, oracle) for elems, size in items]


def classify_subsets(G: FiniteGroup, max_size: int | None = None, jobs: int = 1,
                     oracle: bool | None = None, chunk_size: int | None = None) -> ClassificationReport:
    """Verdict for every nonempty subset (up to two-sided translation when |G| > 8).

    Work items are processed exactly once and merged by subset order, so the
    report does not depend on `jobs`.
    """
    cfg = settings()
    n = G.order
    if max_size is None:
        if n > cfg.max_powerset_order:
            raise PreconditionError(
                f"full enumeration of {2 ** n - 1} subsets of {G.label} is infeasible; pass max_size"
            )
        max_size = n
    max_size = min(max_size, n)
    if oracle is None:
        oracle = has_dft_oracle(G)
    tool = _OrbitTool(G)
    mode = "full" if n <= cfg.full_enumeration_order else "orbits"

    items = []
    rep_of = {}
    seen = set()
    for elems in _subsets_in_order(n, max_size):
        mask = _mask_of(elems)
        if mask in seen:
            if mode == "full":
                items.append((elems, 1))
            continue
        orb = tool.orbit(mask)
        seen |= orb
        for m in orb:
            rep_of[m] = elems
        items.append((elems, 1 if mode == "full" else len(orb)))

    if chunk_size is None:
        # a few chunks per worker keeps the pool busy; merging below ignores chunking
        chunk_size = max(1, math.ceil(len(items) / (4 * jobs))) if jobs > 1 else max(1, len(items))
    chunks = [(G, items[i:i + chunk_size], oracle) for i in range(0, len(items), chunk_size)]
    rows: list[ClassificationRow] = []
    if jobs <= 1 or len(chunks) <= 1:
        for c in chunks:
            rows.extend(_classify_chunk(c))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_classify_chunk, chunks):
                rows.extend(part)

    by_subset = {r.subset: r for r in rows}
    rng = random.Random(n)
    for r in rows:
        rep = rep_of[_mask_of(r.subset)]
        if mode == "full":
            if by_subset[rep].is_pompeiu != r.is_pompeiu or by_subset[rep].ideal_rank != r.ideal_rank:
                raise ConsistencyError(f"verdict differs between {r.subset} and its translate {rep}")
        else:
            g, h = rng.randrange(n), rng.randrange(n)
            moved = translate_set(Subset(G, r.subset), g, h)
            if ideal_span_rank(Subset(G, moved)) != r.ideal_rank:
                raise ConsistencyError(f"verdict differs between {r.subset} and {moved}")

    rows.sort(key=lambda r: (r.size, r.subset))
    complete = max_size == n
    if any(not r.is_pompeiu for r in rows):
        is_group = False
    else:
        is_group = True if complete else None
    return ClassificationReport(
        group=G,
        mode=mode,
        max_size=None if complete else max_size,
        rows=rows,
        is_pompeiu_group=is_group,
        l2=is_l2_pompeiu_group(G),
        normal_subgroups=tuple(N.elements for N in normal_subgroups(G)),
    )


# finite reading of the l2 characterization ------------------------------------


@dataclass(frozen=True)
class L2Verdict:
    holds: bool
    explanation: str
    subgroup: tuple | None = None
    witness: GroupRingElement | None = None


def is_l2_pompeiu_group(G: FiniteGroup) -> L2Verdict:
    """A finite group is l2-Pompeiu iff it has no nontrivial finite normal subgroup, i.e. iff it is trivial."""
    nontrivial = [N for N in normal_subgroups(G) if len(N) > 1]
    if not nontrivial:
        return L2Verdict(True, f"{G.label} has no nontrivial normal subgroup")
    N = nontrivial[0]
    w = normal_subgroup_witness(N)
    # the witness must pass the two-route translate-sum check at every (g, h)
    for g in G.elements():
        for h in G.elements():
            if translate_sum(w, g, N, h):
                raise ConsistencyError("normal subgroup witness has a nonzero translate sum")
    return L2Verdict(
        False,
        f"normal subgroup {list(N.elements)} of order {len(N)} is not a Pompeiu set; witness chi_N - {len(N)}·e0",
        N.elements,
        w,
    )


def find_dimension_gaps(groups: Sequence[FiniteGroup], max_order: int = 8) -> list[tuple]:
    """(group label, K, two-sided dim, one-sided dim) wherever the two problems differ."""
    out = []
    for G in groups:
        if G.order > max_order:
            continue
        for elems in _subsets_in_order(G.order, G.order):
            K = Subset(G, elems)
            two = G.order - ideal_span_rank(K)
            one = one_sided_solution_space(K).dim
            if two > one:
                raise ConsistencyError("two-sided solutions must be one-sided solutions")
            if two < one:
                out.append((G.label, elems, two, one))
    return out
