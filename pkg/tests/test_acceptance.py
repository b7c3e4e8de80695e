"""Acceptance criteria, one test per criterion, each printing a single PASS/FAIL line.

Failures are collected rather than raised on first sight so the line can say
how many cases broke; the test then fails if any did.
"""
import itertools
import random
import time

import pytest

from conftest import record_criterion
from pompeiu.algebra import GroupRingElement, char_fn, convolve, identity_element
from pompeiu.checks import random_element, random_subset
from pompeiu.cli import main as cli_main
from pompeiu.engine import (
    convolution_translate_sum,
    dft_oracle,
    direct_translate_sum,
    has_dft_oracle,
    ideal_span_rank,
    in_span,
    is_l2_pompeiu_group,
    is_pompeiu_set,
    normal_subgroup_witness,
    right_convolution_translate_sum,
    translate_sum,
    two_sided_solution_space,
)
from pompeiu.groups import Subset, fleet
from pompeiu.lattice import partial_energy, recurrence_witness
from pompeiu.linalg import nullspace, rank
from pompeiu.structure import class_sum_coordinates, class_sums, conjugacy_classes, is_central, normal_subgroups

FLEET = fleet()


def finish(number, title, failures, detail):
    if failures:
        detail = f"{len(failures)} failures, first: {failures[0]}"
    record_criterion(number, title, not failures, detail)
    assert not failures, failures[:5]


@pytest.mark.slow
def test_criterion_1_oracle_equivalence():
    failures, checked = [], 0
    start = time.perf_counter()
    for G in FLEET:
        if not has_dft_oracle(G):
            continue
        n = G.order
        assert n <= 16  # full powerset for every abelian fleet group
        for r in range(1, n + 1):
            for elems in itertools.combinations(range(n), r):
                K = Subset(G, elems)
                by_rank = ideal_span_rank(K) == n
                space = two_sided_solution_space(K, cross_check=True)
                by_nullspace = space.dim == 0
                by_dft = dft_oracle(K).all_nonzero
                if not (by_rank == by_nullspace == by_dft) or ideal_span_rank(K) + space.dim != n:
                    failures.append((G.label, elems, by_rank, by_nullspace, by_dft))
                checked += 1
    elapsed = time.perf_counter() - start
    if elapsed > 300:
        failures.append(f"runtime {elapsed:.0f}s exceeds 5 minutes")
    finish(1, "rank, nullspace and DFT criteria agree on abelian fleet", failures,
           f"{checked} subsets, {elapsed:.1f}s")


def test_criterion_2_normal_subgroups():
    failures, checked = [], 0
    for G in FLEET:
        for N in normal_subgroups(G):
            if len(N) == 1:
                continue
            checked += 1
            if is_pompeiu_set(N).is_pompeiu:
                failures.append((G.label, N.elements, "Pompeiu"))
            w = char_fn(N) - len(N) * identity_element(G)
            if w != normal_subgroup_witness(N):
                failures.append((G.label, N.elements, "witness form"))
            # all |G|^2 equations, each evaluated by two routes inside translate_sum
            if any(translate_sum(w, g, N, h) for g in G.elements() for h in G.elements()):
                failures.append((G.label, N.elements, "translate sum"))
            if not in_span(w, is_pompeiu_set(N).witness_basis):
                failures.append((G.label, N.elements, "not in witness span"))
            e = char_fn(N) / len(N)
            if convolve(e, e) != e or not is_central(e):
                failures.append((G.label, N.elements, "idempotent"))
    finish(2, "nontrivial normal subgroups are non-Pompeiu with verified witnesses", failures,
           f"{checked} normal subgroups")


def test_criterion_3_translate_sum_routes():
    rng = random.Random(3)
    failures, checked = [], 0
    for G in FLEET:
        for _ in range(1000):
            f = random_element(G, rng)
            if rng.random() < 0.3:
                f = f + GroupRingElement(G, {rng.randrange(G.order): complex(rng.randint(-2, 2), 1)})
            K = random_subset(G, rng)
            g, h = rng.randrange(G.order), rng.randrange(G.order)
            d = direct_translate_sum(f, g, K, h)
            if not (d == convolution_translate_sum(f, g, K, h) == right_convolution_translate_sum(f, g, K, h)):
                failures.append((G.label, K.elements, g, h))
            checked += 1
    finish(3, "direct, left-convolution and right-convolution translate sums agree", failures,
           f"{checked} tuples")


def test_criterion_4_center():
    rng = random.Random(4)
    failures = []
    for G in FLEET:
        n = G.order
        classes = conjugacy_classes(G)
        sums = class_sums(G)
        # the center computed independently: kernel of f -> chi_g * f - f * chi_g for all g
        rows = []
        for g in G.elements():
            for x in G.elements():
                row = [0] * n
                row[G.mul[G.inv[g]][x]] += 1
                row[G.mul[x][G.inv[g]]] -= 1
                rows.append(row)
        center = nullspace(rows, n)
        if len(center) != len(classes):
            failures.append((G.label, "dimension", len(center), len(classes)))
        if rank([s.to_vector() for s in sums], n) != len(sums):
            failures.append((G.label, "class sums dependent"))
        samples = [GroupRingElement.from_vector(G, v) for v in center]
        for _ in range(5):
            combo = GroupRingElement(G)
            for v in samples:
                combo = combo + rng.randint(-3, 3) * v
            samples.append(combo)
        for f in samples:
            coords = class_sum_coordinates(f)
            if coords is None or not is_central(f):
                failures.append((G.label, "central element not a class-sum combination"))
                continue
            recon = GroupRingElement(G)
            for a, c in zip(coords, sums):
                recon = recon + a * c
            if recon != f:
                failures.append((G.label, "reconstruction"))
    finish(4, "center dimension equals class count and class sums span the center", failures,
           f"{len(FLEET)} groups")


def test_criterion_5_l2_reading():
    failures = []
    for G in FLEET:
        v = is_l2_pompeiu_group(G)
        if v.holds != (G.order == 1):
            failures.append((G.label, v.holds))
        if not v.holds:
            N = Subset(G, v.subgroup)
            if any(translate_sum(v.witness, g, N, h) for g in G.elements() for h in G.elements()):
                failures.append((G.label, "witness"))
    finish(5, "only the trivial group is l2-Pompeiu, every refusal has a verified witness", failures,
           f"{len(FLEET)} groups")


def test_criterion_6_duality_and_invariance():
    rng = random.Random(6)
    failures = []
    tested = 0
    for G in FLEET:
        for _ in range(40):
            v = is_pompeiu_set(random_subset(G, rng))
            tested += 1
            if v.ideal_rank + v.witness_dim != G.order:
                failures.append((G.label, v.subset.elements, "duality"))
    samples = 10_000
    for i in range(samples):
        G = FLEET[i % len(FLEET)]
        K = random_subset(G, rng)
        g, h = rng.randrange(G.order), rng.randrange(G.order)
        moved = K.translate(g, h)
        a, b = ideal_span_rank(K), ideal_span_rank(moved)
        if a != b:
            failures.append((G.label, K.elements, g, h, "invariance"))
    finish(6, "rank plus witness dimension equals |G| and verdicts are translate invariant", failures,
           f"{tested} duality checks, {samples} translate samples")


@pytest.mark.slow
def test_criterion_7_lattice():
    failures, built, exact = [], 0, 0
    start = time.perf_counter()
    for size in range(2, 7):
        for K in itertools.combinations(range(13), size):
            w = recurrence_witness(K, 100)
            built += 1
            if not any(w.samples):
                failures.append((K, "zero witness"))
            if w.exact:
                exact += 1
                if w.residual != 0:
                    failures.append((K, "exact residual", w.residual))
            elif not w.residual <= 1e-9:
                failures.append((K, "residual", w.residual))
            for N in (50, 100, 200, 400):
                if not partial_energy(w, 2 * N) > partial_energy(w, N):
                    failures.append((K, "energy", N))
    elapsed = time.perf_counter() - start
    if elapsed > 60:
        failures.append(f"runtime {elapsed:.1f}s exceeds 1 minute")
    finish(7, "lattice witnesses vanish on the window and their energy diverges", failures,
           f"{built} witnesses, {exact} exact, {elapsed:.1f}s")


def test_criterion_8_determinism():
    failures = []
    for name in ("S3", "Q8"):
        for fmt in ("md", "csv", "json"):
            outputs = []
            for jobs in ("1", "8"):
                lines = []
                code = cli_main(["classify", "--group", name, "--format", fmt, "--jobs", jobs], out=lines.append)
                outputs.append((code, "\n".join(lines).encode("utf-8")))
            if outputs[0] != outputs[1] or outputs[0][0] != 0:
                failures.append((name, fmt))
    finish(8, "classify reports are byte-identical for --jobs 1 and --jobs 8", failures, "S3 and Q8, three formats")
