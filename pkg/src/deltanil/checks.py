"""Fuzzed invariant checks shared by the test suite and ``deltanil check``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .alpha import Violation, alpha_table, closed_form_case1, closed_form_case2, find_violation
from .group import GroupType, group_type, sigma
from .series import uas_direct, uas_via_alpha

PRIMES = (2, 3, 5, 7)


def random_exponents(rng: np.random.Generator, max_s: int = 6, max_n: int = 12) -> tuple[int, ...]:
    s = int(rng.integers(1, max_s + 1))
    return tuple(sorted(int(x) for x in rng.choice(np.arange(1, max_n + 1), size=s, replace=False)))


def random_type(rng: np.random.Generator, max_s: int = 6, max_n: int = 12, max_rank: int = 3) -> GroupType:
    n = random_exponents(rng, max_s, max_n)
    ranks = tuple(int(x) for x in rng.integers(1, max_rank + 1, size=len(n)))
    return group_type(int(rng.choice(PRIMES)), n, ranks)


def random_gapped_type(rng: np.random.Generator, case: int, max_s: int = 6, max_n: int = 12) -> GroupType:
    """A type meeting the closed-form hypotheses: case 1 is sigma >= 2, case 2 is sigma = 1 with top gap 1."""
    while True:
        s = int(rng.integers(2, max_s + 1))
        if case == 1:
            gaps = rng.integers(2, 5, size=s - 1)
        else:
            gaps = rng.integers(1, 4, size=s - 1)
            gaps[-1] = 1
        n1 = int(rng.integers(1, 4))
        n = tuple(int(x) for x in np.concatenate([[n1], n1 + np.cumsum(gaps)]))
        if n[-1] <= max_n:
            g = group_type(int(rng.choice(PRIMES)), n)
            if case == 1 or sigma(g) == 1:
                return g


def uas_mismatches(types: Iterable[GroupType]) -> list[GroupType]:
    return [g for g in types if [m.beta for m in uas_via_alpha(g)] != [m.beta for m in uas_direct(g)]]


def closed_form_mismatches(g: GroupType, case: int) -> list[tuple[int, int, int]]:
    form = closed_form_case1 if case == 1 else closed_form_case2
    tab = alpha_table(g)
    s = g.s
    return [
        (i, j, t)
        for t in range(tab.t_max + 1)
        for i in range(1, s + 1)
        for j in range(1, s + 1)
        if form(g, i, j, t) != tab(i, j, t)
    ]


def monotonicity_failures(g: GroupType, as_stated: bool = True) -> list[tuple[int, int, int, int]]:
    """Indices (property, i, j, t) breaking the four monotonicity properties of alpha.

    With ``as_stated`` properties (1) and (3) are read as alpha(i+1,j,t) <= alpha(i,j,t)
    and alpha(i,j+1,t) <= alpha(i,j,t); otherwise in the opposite direction, which
    is the one the recursion actually produces (alpha grows toward cell (s, s)).
    """
    tab = alpha_table(g)
    a = tab.values
    s = g.s
    L = tab.t_max
    out = []
    for t in range(L + 1):
        for i in range(s):
            for j in range(s):
                if i < s - 1:
                    lo, hi = (a[t, i + 1, j], a[t, i, j]) if as_stated else (a[t, i, j], a[t, i + 1, j])
                    if lo > hi:
                        out.append((1, i + 1, j + 1, t))
                if t < L and a[t, i, j] > a[t + 1, i, j]:
                    out.append((2, i + 1, j + 1, t))
                if j < s - 1:
                    lo, hi = (a[t, i, j + 1], a[t, i, j]) if as_stated else (a[t, i, j], a[t, i, j + 1])
                    if lo > hi:
                        out.append((3, i + 1, j + 1, t))
        for j in range(1, s):
            if g.n(j) - a[t, j - 1, j - 1] > g.n(s) - a[t, s - 1, s - 1]:
                out.append((4, j, j, t))
    return out


def _free_cells(g: GroupType) -> list[tuple[int, int, int]]:
    a = alpha_table(g).values
    sat = alpha_table(g).saturation()
    return [(t, i, j) for t in range(1, a.shape[0]) for i in range(g.s) for j in range(g.s) if a[t, i, j] < sat[i, j]]


def perturbable(g: GroupType) -> bool:
    return bool(_free_cells(g))


def perturb(g: GroupType, rng: np.random.Generator) -> tuple[np.ndarray, tuple[int, int, int]]:
    """Copy of alpha's table with one unsaturated cell at some t >= 1 raised by one."""
    a = np.array(alpha_table(g).values)
    free = _free_cells(g)
    if not free:
        raise ValueError(f"no unsaturated cell to perturb for {g}")
    t, i, j = free[int(rng.integers(len(free)))]
    a[t, i, j] += 1
    return a, (i + 1, j + 1, t)


def violation_is_real(g: GroupType, table: np.ndarray, v: Violation) -> bool:
    """Re-evaluate the cited condition at the cited index, independently of find_violation."""
    def f(i, j, t):
        return int(table[t, i - 1, j - 1])

    i, j, t = v.i, v.j, v.t
    n = g.n
    s = g.s
    if v.condition == 1:
        return t == 1 and f(i, j, 1) != (1 if (i, j) == (s, s) else 0)
    if t < 2:
        return False
    if v.condition == 2:
        return f(i, j, t) > f(i, j, t - 1) + 1
    if v.condition == 3:
        return (i > 1 and f(i - 1, j, t) > f(i, j, t - 1)) or f(i, j, t - 1) > f(i, j, t)
    if v.condition == 4:
        return (j > 1 and f(i, j - 1, t) > f(i, j, t - 1)) or f(i, j, t - 1) > f(i, j, t)
    if v.condition == 5:
        return i < s and f(i + 1, j, t) > n(i + 1) - n(i) + f(i, j, t - 1)
    if v.condition == 6:
        return j < s and f(i, j + 1, t) > n(j + 1) - n(j) + f(i, j, t - 1)
    return False


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'ok  ' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def run_suite(seed: int = 0, count: int = 200) -> list[CheckResult]:
    """The invariants that must hold for every type; used by ``deltanil check``."""
    rng = np.random.default_rng(seed)
    types = [random_type(rng) for _ in range(count)]
    out = []

    bad = uas_mismatches(types)
    out.append(CheckResult("uas via alpha == iterated annihilator", not bad, f"{len(bad)} mismatches over {count} types"))

    for case in (1, 2):
        gs = [random_gapped_type(rng, case) for _ in range(max(1, count // 2))]
        nbad = sum(1 for g in gs if closed_form_mismatches(g, case))
        out.append(CheckResult(f"closed form case {case}", nbad == 0, f"{nbad} of {len(gs)} types disagree"))

    rejected: list[Optional[Violation]] = [find_violation(g, alpha_table(g)) for g in types]
    nacc = sum(1 for v in rejected if v is None)
    out.append(CheckResult("alpha is an annihilating function", nacc == count, f"{nacc} of {count} accepted"))

    candidates = [g for g in types if perturbable(g)]
    hits = 0
    trials = min(50, len(candidates))
    for k in range(trials):
        g = candidates[k]
        arr, _ = perturb(g, rng)
        v = find_violation(g, arr)
        hits += v is not None and violation_is_real(g, arr, v)
    out.append(CheckResult("perturbed tables rejected", hits == trials, f"{hits} of {trials} rejected with a real violation"))

    nmono = sum(1 for g in types if monotonicity_failures(g, as_stated=False))
    out.append(CheckResult("alpha monotone toward (s,s) and in t", nmono == 0, f"{nmono} of {count} types fail"))

    nrank = 0
    for g in types[:20]:
        ref = [m.beta for m in uas_direct(group_type(g.p, g.exponents))]
        for ranks in ((2,) * g.s, tuple(1 + (k % 2) for k in range(g.s))):
            nrank += [m.beta for m in uas_direct(group_type(g.p, g.exponents, ranks))] != ref
    out.append(CheckResult("uas independent of ranks", nrank == 0, f"{nrank} differing rank vectors"))
    return out
