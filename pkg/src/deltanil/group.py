"""Group types G = (Z/p^n_1)^r_1 + ... + (Z/p^n_s)^r_s and their scalar invariants.

Block indices are 1-based throughout the public API, matching the usual
(i, j) cell notation for the endomorphism ring.
"""
from __future__ import annotations

import enum
import numbers
from dataclasses import dataclass, field
from typing import Optional, Sequence

from sympy import isprime

from .errors import InvalidGroupType, NonIncreasingExponents, NonPositiveRank, NotPrime

INT64_LIMIT = 2**63


@dataclass(frozen=True)
class GroupType:
    """A bounded abelian p-group, described by its exponents and ranks.

    Construct with :func:`group_type` to get a validated value; the bare
    constructor only normalizes sequences to tuples.
    """

    p: int
    exponents: tuple[int, ...]
    ranks: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        ranks = tuple(self.ranks) if self.ranks else (1,) * len(self.exponents)
        object.__setattr__(self, "ranks", ranks)

    @property
    def s(self) -> int:
        return len(self.exponents)

    @property
    def r(self) -> int:
        return sum(self.ranks)

    def n(self, i: int) -> int:
        """Exponent n_i of block i (1-based)."""
        return self.exponents[i - 1]

    def rank(self, i: int) -> int:
        return self.ranks[i - 1]

    def blocks(self) -> list[int]:
        """Block index (1-based) of each of the r coordinates, in order."""
        return [i + 1 for i, ri in enumerate(self.ranks) for _ in range(ri)]

    def __str__(self):
        n = ",".join(map(str, self.exponents))
        r = ",".join(map(str, self.ranks))
        return f"p={self.p} type=({n}) ranks=({r})"


def _is_finite_int(x) -> bool:
    return isinstance(x, numbers.Integral) and not isinstance(x, bool)


def validate(g: GroupType) -> GroupType:
    if not _is_finite_int(g.p) or g.p < 2 or not isprime(g.p):
        raise NotPrime(f"p={g.p!r} is not a prime")
    if g.s == 0:
        raise InvalidGroupType("the exponent sequence is empty")
    if len(g.ranks) != g.s:
        raise InvalidGroupType(
            f"{len(g.ranks)} ranks given for {g.s} exponents"
        )
    for k, n in enumerate(g.exponents, start=1):
        if not _is_finite_int(n) or n < 1:
            raise NonIncreasingExponents(f"exponent n_{k}={n!r} must be a positive integer")
        if k > 1 and n <= g.exponents[k - 2]:
            raise NonIncreasingExponents(
                f"exponents must strictly increase: n_{k - 1}={g.exponents[k - 2]} >= n_{k}={n}"
            )
    for k, rk in enumerate(g.ranks, start=1):
        if not _is_finite_int(rk):
            raise NonPositiveRank(f"rank r_{k}={rk!r} must be a finite positive integer")
        if rk < 1:
            raise NonPositiveRank(f"rank r_{k}={rk} must be positive")
    if g.p ** g.exponents[-1] >= INT64_LIMIT:
        raise InvalidGroupType(
            f"p^n_s = {g.p}^{g.exponents[-1]} does not fit in a signed 64-bit entry"
        )
    return g


def group_type(p: int, exponents: Sequence[int], ranks: Optional[Sequence[int]] = None) -> GroupType:
    """Build and validate a group type; ranks default to all ones."""
    return validate(GroupType(p, tuple(exponents), tuple(ranks) if ranks else ()))


def sigma(g: GroupType) -> Optional[int]:
    """Minimum gap n_j - n_{j-1}; None for a single block."""
    if g.s == 1:
        return None
    e = g.exponents
    return min(e[j] - e[j - 1] for j in range(1, g.s))


def top_gap_index(g: GroupType) -> Optional[int]:
    """Largest j (1-based) with n_j - n_{j-1} equal to the minimum gap."""
    sg = sigma(g)
    if sg is None:
        return None
    e = g.exponents
    return max(j + 1 for j in range(1, g.s) if e[j] - e[j - 1] == sg)


def f_J(g: GroupType, i: int, j: int) -> int:
    """Saturation value of the upper function at cell (i, j).

    The radical has cell (i, j) equal to p^(n_j - f_J(i, j)) times the full cell.
    """
    if i == j:
        return g.n(j) - 1
    return g.n(min(i, j))


class Case(enum.Enum):
    GUARANTEED_CASE1 = "GuaranteedCase1"
    GUARANTEED_CASE2 = "GuaranteedCase2"
    GUARANTEED_CASE3 = "GuaranteedCase3"
    NOT_GUARANTEED = "NotGuaranteed"


@dataclass(frozen=True)
class Applicability:
    tag: Case
    notes: str

    @property
    def guaranteed(self) -> bool:
        return self.tag is not Case.NOT_GUARANTEED


def classify_applicability(g: GroupType) -> Applicability:
    """Which hypothesis (if any) guarantees that the hypercenters are (J_t + 1)Z.

    Conditions are tried in order: (1) r_s > 1 and s >= 2, (2) sigma >= 2,
    (3) p >= 3. A single block has no gaps, so condition (2) never fires
    there; single blocks with p = 2 are reported under case (1).
    """
    sg = sigma(g)
    if g.s >= 2 and g.ranks[-1] > 1:
        return Applicability(Case.GUARANTEED_CASE1, f"r_s={g.ranks[-1]} > 1 and s={g.s} >= 2")
    if sg is not None and sg >= 2:
        return Applicability(Case.GUARANTEED_CASE2, f"sigma(G)={sg} >= 2")
    if g.p >= 3:
        return Applicability(Case.GUARANTEED_CASE3, f"p={g.p} >= 3")
    if g.s == 1:
        return Applicability(
            Case.GUARANTEED_CASE1,
            "single homocyclic block with p=2; no gap conditions apply",
        )
    return Applicability(
        Case.NOT_GUARANTEED,
        f"p=2, r_s=1, sigma(G)={sg}: none of the three conditions holds",
    )


def delta_order_exponent(g: GroupType) -> int:
    """E with |Delta(G)| = p^E."""
    return sum(
        g.rank(i) * g.rank(j) * f_J(g, i, j)
        for i in range(1, g.s + 1)
        for j in range(1, g.s + 1)
    )


def delta_order(g: GroupType) -> int:
    """|Delta(G)| = |1 + J| as an exact integer."""
    return g.p ** delta_order_exponent(g)
