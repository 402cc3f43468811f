"""The upper annihilating function alpha(i, j, t).

alpha(i, j, t) measures how far the t-th term of the upper annihilating
sequence of the radical has grown into cell (i, j): that term has cell
(i, j) equal to p^(n_j - alpha(i, j, t)) times the full cell.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .errors import CaseNotApplicable
from .group import GroupType, f_J, sigma

_INF = np.iinfo(np.int64).max // 4


def _saturation(exponents: tuple[int, ...]) -> np.ndarray:
    s = len(exponents)
    n = np.asarray(exponents, dtype=np.int64)
    idx = np.arange(s)
    sat = n[np.minimum.outer(idx, idx)]
    sat[idx, idx] -= 1
    return sat


def _step(prev: np.ndarray, n: np.ndarray, sat: np.ndarray) -> np.ndarray:
    s = prev.shape[0]
    best = prev + 1
    if s > 1:
        gap = np.diff(n)
        cand = np.full_like(prev, _INF)
        cand[:, 1:] = gap[None, :] + prev[:, :-1]  # n_j - n_{j-1} + alpha(i, j-1)
        best = np.minimum(best, cand)
        cand = np.full_like(prev, _INF)
        cand[1:, :] = gap[:, None] + prev[:-1, :]  # n_i - n_{i-1} + alpha(i-1, j)
        best = np.minimum(best, cand)
        cand = np.full_like(prev, _INF)
        cand[:-1, :] = prev[1:, :]  # alpha(i+1, j)
        best = np.minimum(best, cand)
        cand = np.full_like(prev, _INF)
        cand[:, :-1] = prev[:, 1:]  # alpha(i, j+1)
        best = np.minimum(best, cand)
    return np.minimum(best, sat)


@lru_cache(maxsize=256)
def _build(exponents: tuple[int, ...]) -> np.ndarray:
    s = len(exponents)
    n = np.asarray(exponents, dtype=np.int64)
    sat = _saturation(exponents)
    layers = [np.zeros((s, s), dtype=np.int64)]
    cap = 2 * int(n.sum())
    if (sat == 0).all():
        out = np.stack(layers)
        out.setflags(write=False)
        return out
    first = np.zeros((s, s), dtype=np.int64)
    first[-1, -1] = 1
    layers.append(np.minimum(first, sat))
    while not (layers[-1] == sat).all():
        if len(layers) > cap:
            raise RuntimeError(f"upper function for {exponents} failed to saturate within {cap} steps")
        layers.append(_step(layers[-1], n, sat))
    out = np.stack(layers)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class AlphaTable:
    """Frozen table of alpha(i, j, t) for t = 0..t_max.

    ``values[t, i-1, j-1]`` holds alpha(i, j, t). t_max is the first step at
    which every cell is saturated, so it equals the annihilating length.
    Lookups past t_max return the saturated values.
    """

    g: GroupType
    values: np.ndarray

    @property
    def t_max(self) -> int:
        return self.values.shape[0] - 1

    def __call__(self, i: int, j: int, t: int) -> int:
        if t < 0:
            raise ValueError(f"step t={t} must be non-negative")
        t = min(t, self.t_max)
        return int(self.values[t, i - 1, j - 1])

    def slice(self, t: int) -> np.ndarray:
        """s x s grid of alpha(., ., t) (0-based array)."""
        return self.values[min(t, self.t_max)]

    def saturation(self) -> np.ndarray:
        return _saturation(self.g.exponents)


def alpha_table(g: GroupType) -> AlphaTable:
    return AlphaTable(g, _build(g.exponents))


def alpha(g: GroupType, i: int, j: int, t: int) -> int:
    if not (1 <= i <= g.s and 1 <= j <= g.s):
        raise IndexError(f"cell ({i}, {j}) outside 1..{g.s}")
    return alpha_table(g)(i, j, t)


def _bracket(x: int) -> int:
    return max(0, x)


def closed_form_case1(g: GroupType, i: int, j: int, t: int) -> int:
    """alpha when every gap is at least 2: [t + i + j - 2s]."""
    sg = sigma(g)
    if sg is None or sg < 2:
        raise CaseNotApplicable(f"needs sigma(G) >= 2, got {sg}")
    return min(_bracket(t + i + j - 2 * g.s), f_J(g, i, j))


def closed_form_case2(g: GroupType, i: int, j: int, t: int) -> int:
    """alpha when the minimum gap is 1 and sits at the top: [(t + i + j - 2s + 1) / 2]."""
    sg = sigma(g)
    if sg != 1 or g.n(g.s) - g.n(g.s - 1) != 1:
        raise CaseNotApplicable(f"needs sigma(G) = 1 and n_s - n_(s-1) = 1 for {g}")
    return min(_bracket(t + i + j - 2 * g.s + 1) // 2, f_J(g, i, j))


@dataclass(frozen=True)
class Violation:
    condition: int
    i: int
    j: int
    t: int
    detail: str

    def __str__(self):
        return f"condition ({self.condition}) at (i,j,t)=({self.i},{self.j},{self.t}): {self.detail}"


def find_violation(g: GroupType, table: Union[AlphaTable, np.ndarray]) -> Optional[Violation]:
    """First index at which ``table`` breaks one of the six annihilating-function conditions.

    ``table`` is indexed ``[t, i-1, j-1]`` for t = 0..L. Scanning order is
    t, then condition number, then i, then j. Conditions whose indices fall
    outside 1..s are skipped.
    """
    f = np.asarray(table.values if isinstance(table, AlphaTable) else table)
    s = g.s
    n = g.exponents
    L = f.shape[0] - 1

    def F(i, j, t):
        return int(f[t, i - 1, j - 1])

    cells = [(i, j) for i in range(1, s + 1) for j in range(1, s + 1)]
    for t in range(1, L + 1):
        if t == 1:
            for i, j in cells:
                want = 1 if (i, j) == (s, s) else 0
                if F(i, j, 1) != want:
                    return Violation(1, i, j, 1, f"f({i},{j},1)={F(i, j, 1)}, expected {want}")
            continue
        for i, j in cells:
            if F(i, j, t) > F(i, j, t - 1) + 1:
                return Violation(2, i, j, t, f"f({i},{j},{t})={F(i, j, t)} > f({i},{j},{t - 1})+1")
        for i, j in cells:
            if i > 1 and F(i - 1, j, t) > F(i, j, t - 1):
                return Violation(3, i, j, t, f"f({i - 1},{j},{t}) > f({i},{j},{t - 1})")
            if F(i, j, t - 1) > F(i, j, t):
                return Violation(3, i, j, t, f"f({i},{j},{t - 1}) > f({i},{j},{t})")
        for i, j in cells:
            if j > 1 and F(i, j - 1, t) > F(i, j, t - 1):
                return Violation(4, i, j, t, f"f({i},{j - 1},{t}) > f({i},{j},{t - 1})")
            if F(i, j, t - 1) > F(i, j, t):
                return Violation(4, i, j, t, f"f({i},{j},{t - 1}) > f({i},{j},{t})")
        for i, j in cells:
            if i < s and F(i + 1, j, t) > n[i] - n[i - 1] + F(i, j, t - 1):
                return Violation(5, i, j, t, f"f({i + 1},{j},{t}) > n_{i + 1}-n_{i}+f({i},{j},{t - 1})")
        for i, j in cells:
            if j < s and F(i, j + 1, t) > n[j] - n[j - 1] + F(i, j, t - 1):
                return Violation(6, i, j, t, f"f({i},{j + 1},{t}) > n_{j + 1}-n_{j}+f({i},{j},{t - 1})")
    return None


def is_annihilating_function(g: GroupType, table: Union[AlphaTable, np.ndarray]) -> tuple[bool, Optional[Violation]]:
    v = find_violation(g, table)
    return v is None, v
