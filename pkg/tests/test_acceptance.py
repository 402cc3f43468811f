"""Acceptance criteria 1-10, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.
"""
import itertools
import sys
import time

import numpy as np
import pytest

from deltanil.alpha import _build
from deltanil.alpha import alpha_table, find_violation, is_annihilating_function
from deltanil.checks import (
    closed_form_mismatches,
    monotonicity_failures,
    perturb,
    perturbable,
    random_exponents,
    random_gapped_type,
    random_type,
    uas_mismatches,
    violation_is_real,
)
from deltanil.group import Case, classify_applicability, delta_order, group_type
from deltanil.oracle import ann_oracle, compare_report, enumerate_delta, ucs_oracle, uas_oracle
from deltanil.render import cell_token
from deltanil.series import nilpotency_class, uas_direct, uas_length, uas_via_alpha, ucs_report, zero_ideal

from golden import EXAMPLE1, EXAMPLE2, WORKED_N, WORKED_UAS, tokens

SEED = 20240611


def _cold():
    _build.cache_clear()


def test_criterion_1_worked_uas(record):
    _cold()
    t0 = time.perf_counter()
    g = group_type(3, WORKED_N)
    uas = uas_via_alpha(g)
    elapsed = time.perf_counter() - t0
    diffs = []
    for t, (m, rows) in enumerate(zip(uas, WORKED_UAS), start=1):
        for i, row in enumerate(tokens(rows), start=1):
            for j, tok in enumerate(row, start=1):
                got = cell_token(m, i, j)
                if got != tok:
                    diffs.append(f"J_{t}({i},{j}) {got} vs {tok}")
    ok = len(uas) == 14 and not diffs and elapsed < 1
    matching = 14 - len({d.split("(")[0] for d in diffs})
    record(1, ok, f"length {len(uas)}, {matching}/14 matrices match, {elapsed:.3f}s; differing cells: {'; '.join(diffs) or 'none'}")


def _grids(ex):
    g = group_type(ex["p"], ex["n"], ex["ranks"])
    rep = ucs_report(g)
    return g, rep, [d.entry_exponents() for d in rep.ucs]


def test_criterion_2_example_one(record):
    _cold()
    t0 = time.perf_counter()
    g, rep, grids = _grids(EXAMPLE1)
    elapsed = time.perf_counter() - t0
    ok = rep.nilpotency_class == EXAMPLE1["cls"] and grids == EXAMPLE1["grids"] and elapsed < 1
    record(2, ok, f"class {rep.nilpotency_class}, grids {'match' if grids == EXAMPLE1['grids'] else 'differ'}, {elapsed:.3f}s")


def test_criterion_3_example_two(record):
    _cold()
    t0 = time.perf_counter()
    g, rep, grids = _grids(EXAMPLE2)
    elapsed = time.perf_counter() - t0
    ok = (
        rep.nilpotency_class == EXAMPLE2["cls"]
        and rep.l == EXAMPLE2["l"]
        and rep.y == EXAMPLE2["y"]
        and grids == EXAMPLE2["grids"]
        and elapsed < 1
    )
    record(3, ok, f"class {rep.nilpotency_class}, l {rep.l}, y {rep.y}, grids {'match' if grids == EXAMPLE2['grids'] else 'differ'}, {elapsed:.3f}s")


def test_criterion_4_uas_two_ways(record):
    _cold()
    rng = np.random.default_rng(SEED)
    types = [random_type(rng, max_s=6, max_n=12) for _ in range(250)]
    t0 = time.perf_counter()
    bad = uas_mismatches(types)
    elapsed = time.perf_counter() - t0
    record(4, not bad and elapsed < 10, f"{len(bad)} mismatches over {len(types)} types, {elapsed:.2f}s")


def test_criterion_5_closed_forms(record):
    _cold()
    rng = np.random.default_rng(SEED + 1)
    t0 = time.perf_counter()
    counts = {}
    nbad = 0
    for case in (1, 2):
        gs = {}
        while len(gs) < 120:
            g = random_gapped_type(rng, case, max_s=8, max_n=30)
            gs.setdefault(g.exponents, g)
        counts[case] = len(gs)
        nbad += sum(1 for g in gs.values() if closed_form_mismatches(g, case))
    elapsed = time.perf_counter() - t0
    ok = nbad == 0 and elapsed < 5 and min(counts.values()) >= 100
    record(5, ok, f"{nbad} disagreeing types; distinct types per case {counts}; {elapsed:.2f}s")


def test_criterion_6_monotonicity_and_checker(record):
    rng = np.random.default_rng(SEED + 2)
    types = [random_type(rng) for _ in range(200)]
    by_prop = {1: 0, 2: 0, 3: 0, 4: 0}
    first = None
    for g in types:
        for prop, i, j, t in monotonicity_failures(g, as_stated=True):
            by_prop[prop] += 1
            first = first or f"({prop}) fails at i={i},j={j},t={t} for n={g.exponents}"
    accepted = sum(1 for g in types if is_annihilating_function(g, alpha_table(g))[0])
    cands = [g for g in types if perturbable(g)]
    rejected = 0
    for k in range(50):
        g = cands[k % len(cands)]
        arr, _ = perturb(g, rng)
        v = find_violation(g, arr)
        rejected += v is not None and violation_is_real(g, arr, v)
    mono_ok = not any(by_prop.values())
    ok = mono_ok and accepted == len(types) and rejected == 50
    record(6, ok, f"property failures {by_prop} (first: {first}); alpha accepted {accepted}/{len(types)}; perturbed rejected {rejected}/50")


ORACLE_INSTANCES = [
    (3, (1, 2), (1, 1)),
    (2, (2,), (2,)),
    (3, (2, 3), (1, 1)),
    (2, (1, 3), (1, 1)),
    (2, (1, 2), (1, 2)),
    (2, (2, 4), (1, 1)),
    (5, (1, 2), (1, 1)),
    (3, (1, 3), (1, 1)),
    (2, (3,), (2,)),
    (5, (2,), (2,)),
]


def test_criterion_7_oracle_agreement(record):
    t0 = time.perf_counter()
    reps = [compare_report(group_type(p, n, r)) for p, n, r in ORACLE_INSTANCES]
    elapsed = time.perf_counter() - t0
    cases = {rep.applicability.tag for rep in reps}
    primes = {rep.g.p for rep in reps}
    bad = [str(rep.g) for rep in reps if not rep.agreement]
    ok = (
        not bad
        and all(rep.order <= 2**13 for rep in reps)
        and all(rep.applicability.guaranteed for rep in reps)
        and {Case.GUARANTEED_CASE1, Case.GUARANTEED_CASE2, Case.GUARANTEED_CASE3} <= cases
        and {2, 3, 5} <= primes
        and elapsed < 120
    )
    record(7, ok, f"{len(reps) - len(bad)}/{len(reps)} instances agree, cases {sorted(c.value for c in cases)}, {elapsed:.1f}s")


def _enumerable():
    out = []
    for p in (2, 3, 5):
        for s in (1, 2, 3):
            for n in itertools.combinations(range(1, 5), s):
                for r in itertools.product((1, 2), repeat=s):
                    g = group_type(p, n, r)
                    if delta_order(g) <= 2**11:
                        out.append(g)
    return out


@pytest.fixture(scope="module")
def oracle_classes():
    return {g: ucs_oracle(enumerate_delta(g)).nilpotency_class for g in _enumerable()}


def test_criterion_8_class_bound(record, oracle_classes):
    bad = [str(g) for g, c in oracle_classes.items() if c > uas_length(g)]
    n_ng = sum(1 for g in oracle_classes if not classify_applicability(g).guaranteed)
    record(8, not bad, f"{len(oracle_classes)} instances ({n_ng} NotGuaranteed), bound violated on {bad or 'none'}")


def test_criterion_9_abelian_characterization(record, oracle_classes):
    wrong = []
    checked = 0
    for g, c in oracle_classes.items():
        if g.s > 2:
            continue
        checked += 1
        abelian = c <= 1
        if abelian != (g.exponents == (2,)):
            wrong.append(f"{g} abelian={abelian}")
    record(9, not wrong, f"{checked} one/two-block instances, {len(wrong)} contradict 'abelian iff type (2)': {'; '.join(wrong[:6])}")


def test_criterion_10_rank_independence(record):
    rng = np.random.default_rng(SEED + 3)
    differing = []
    for _ in range(20):
        n = random_exponents(rng)
        s = len(n)
        ref = None
        for ranks in ((1,) * s, (2,) * s, tuple(1 + (k % 2) for k in range(s))):
            got = [m.beta for m in uas_direct(group_type(3, n, ranks))]
            if ref is None:
                ref = got
            elif got != ref:
                differing.append((n, ranks))
    ga, gb = group_type(2, (1, 2), (1, 1)), group_type(2, (1, 2), (2, 2))
    step_same = ann_oracle(ga, zero_ideal(ga)).beta == ann_oracle(gb, zero_ideal(gb)).beta
    gc = group_type(2, (1, 2), (1, 2))
    chain_same = [m.beta for m in uas_oracle(ga)] == [m.beta for m in uas_oracle(gc)] == [m.beta for m in uas_via_alpha(ga)]
    ok = not differing and step_same and chain_same
    record(10, ok, f"{len(differing)} differing rank vectors over 20 types; oracle first step equal for ranks (1,1)/(2,2): {step_same}; oracle chain equal for (1,1)/(1,2): {chain_same}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
