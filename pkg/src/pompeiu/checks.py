"""Invariant suite behind `pompeiu selftest`: quick versions of the library's core identities."""
from __future__ import annotations

import itertools
import random
from typing import Callable

from .algebra import (
    GroupRingElement,
    augmentation,
    char_fn,
    convolve,
    identity_element,
    inner_product,
    star,
    tilde,
    translate_left,
    translate_right,
)
from .engine import (
    central_idempotent,
    convolution_translate_sum,
    direct_translate_sum,
    dft_oracle,
    has_dft_oracle,
    ideal_span_rank,
    in_span,
    is_l2_pompeiu_group,
    is_pompeiu_set,
    normal_subgroup_witness,
    one_sided_solution_space,
    right_convolution_translate_sum,
    satisfies_two_sided,
)
from .groups import FiniteGroup, Subset, fleet
from .lattice import energy_growth_bound, partial_energy, recurrence_witness
from .structure import class_sums, conjugacy_classes, is_central, normal_subgroups


def random_element(G: FiniteGroup, rng: random.Random, density=0.6, lo=-3, hi=3) -> GroupRingElement:
    return GroupRingElement(G, {g: rng.randint(lo, hi) for g in G.elements() if rng.random() < density})


def random_subset(G: FiniteGroup, rng: random.Random) -> Subset:
    size = rng.randint(1, G.order)
    return Subset(G, tuple(sorted(rng.sample(range(G.order), size))))


def check_algebra(G, rng):
    for _ in range(5):
        f, h, u = (random_element(G, rng) for _ in range(3))
        assert convolve(convolve(f, h), u) == convolve(f, convolve(h, u))
        assert tilde(convolve(f, h)) == convolve(tilde(h), tilde(f))
        assert star(convolve(f, h)) == convolve(star(h), star(f))
        assert augmentation(convolve(f, h)) == augmentation(f) * augmentation(h)
        assert inner_product(convolve(f, u), h) == inner_product(u, convolve(star(f), h))
        g = rng.randrange(G.order)
        assert translate_left(g, f) == convolve(GroupRingElement.point(G, G.inv[g]), f)
        assert translate_right(g, f) == convolve(f, GroupRingElement.point(G, g))


def check_classes(G, rng):
    dec = conjugacy_classes(G)
    assert sum(dec.sizes()) == G.order
    assert all(G.order % s == 0 for s in dec.sizes())
    sums = class_sums(G)
    for a, b in itertools.combinations(sums, 2):
        assert convolve(a, b) == convolve(b, a)
    for c in sums:
        assert is_central(c)


def check_normal_subgroups(G, rng):
    for N in normal_subgroups(G):
        e = central_idempotent(N)
        assert convolve(e, e) == e
        if len(N) > 1:
            v = is_pompeiu_set(N, oracle=False)
            assert not v.is_pompeiu
            w = normal_subgroup_witness(N)
            assert satisfies_two_sided(w, N) and in_span(w, v.witness_basis)


def check_translate_sums(G, rng):
    for _ in range(20):
        f = random_element(G, rng)
        K = random_subset(G, rng)
        g, h = rng.randrange(G.order), rng.randrange(G.order)
        d = direct_translate_sum(f, g, K, h)
        assert d == convolution_translate_sum(f, g, K, h) == right_convolution_translate_sum(f, g, K, h)


def check_verdicts(G, rng):
    for _ in range(5):
        K = random_subset(G, rng)
        v = is_pompeiu_set(K)
        assert v.ideal_rank + v.witness_dim == G.order
        assert v.witness_dim <= one_sided_solution_space(K).dim
        g, h = rng.randrange(G.order), rng.randrange(G.order)
        assert ideal_span_rank(K.translate(g, h)) == v.ideal_rank
        if has_dft_oracle(G):
            assert dft_oracle(K).all_nonzero == v.is_pompeiu
        assert augmentation(char_fn(K)) == len(K)


def check_l2(G, rng):
    v = is_l2_pompeiu_group(G)
    assert v.holds == (G.order == 1)
    if not v.holds:
        assert satisfies_two_sided(v.witness, Subset(G, v.subgroup))


GROUP_CHECKS: list[tuple[str, Callable]] = [
    ("group-ring identities", check_algebra),
    ("conjugacy classes and class sums", check_classes),
    ("normal subgroups are non-Pompeiu", check_normal_subgroups),
    ("translate sums, three routes", check_translate_sums),
    ("verdict invariants", check_verdicts),
    ("l2 reading for finite groups", check_l2),
]


def check_lattice():
    for K in [(0, 1), (0, 1, 2), (0, 1, 3), (0, 2, 3, 7)]:
        w = recurrence_witness(K, 100)
        for N in (50, 100):
            assert partial_energy(w, 2 * N) >= partial_energy(w, N) + energy_growth_bound(w, N)


def run_selftest(out=print, seed=0) -> bool:
    rng = random.Random(seed)
    ok = True
    for G in fleet():
        for name, fn in GROUP_CHECKS:
            try:
                fn(G, rng)
                out(f"[ok]   {G.label:<6} {name}")
            except AssertionError as exc:
                ok = False
                out(f"[FAIL] {G.label:<6} {name}: {exc}")
    try:
        check_lattice()
        out("[ok]   Z      lattice witnesses and energy growth")
    except AssertionError as exc:
        ok = False
        out(f"[FAIL] Z      lattice witnesses and energy growth: {exc}")
    return ok
