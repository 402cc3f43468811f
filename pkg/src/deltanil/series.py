"""Upper annihilating sequence of the radical, nilpotency class and hypercenters.

Ideals of End(G) are handled through their exponent matrices: an s x s grid
beta with the ideal's cell (i, j) equal to p^beta(i, j) times the full r_i x r_j
cell over Z/p^(n_j). beta(i, j) = n_j means the zero cell.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .alpha import AlphaTable, alpha_table
from .errors import InternalMismatch, NotContainedInRadical, StepOutOfRange
from .group import Applicability, GroupType, classify_applicability, f_J

Grid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ExponentMatrix:
    g: GroupType
    beta: Grid

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(tuple(int(x) for x in row) for row in self.beta))
        s = self.g.s
        if len(self.beta) != s or any(len(row) != s for row in self.beta):
            raise ValueError(f"exponent grid must be {s} x {s}")
        for i, row in enumerate(self.beta, start=1):
            for j, b in enumerate(row, start=1):
                if not 0 <= b <= self.g.n(j):
                    raise ValueError(f"beta({i},{j})={b} outside [0, n_{j}={self.g.n(j)}]")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.beta[i - 1][j - 1]

    def is_zero(self) -> bool:
        return all(self[i, j] == self.g.n(j) for i in range(1, self.g.s + 1) for j in range(1, self.g.s + 1))

    def same_grid(self, other: "ExponentMatrix") -> bool:
        return self.g.exponents == other.g.exponents and self.beta == other.beta


def _grid(g: GroupType, fn) -> Grid:
    return tuple(tuple(fn(i, j) for j in range(1, g.s + 1)) for i in range(1, g.s + 1))


def radical_shape(g: GroupType) -> ExponentMatrix:
    """Exponent matrix of the Jacobson radical: beta(i, j) = n_j - n_min(i,j) + delta_ij."""
    return ExponentMatrix(g, _grid(g, lambda i, j: g.n(j) - f_J(g, i, j)))


def zero_ideal(g: GroupType) -> ExponentMatrix:
    return ExponentMatrix(g, _grid(g, lambda i, j: g.n(j)))


def ideal_product(a: ExponentMatrix, b: ExponentMatrix) -> ExponentMatrix:
    g = a.g
    s = g.s
    return ExponentMatrix(
        g,
        _grid(g, lambda i, j: min(g.n(j), min(a[i, k] + b[k, j] for k in range(1, s + 1)))),
    )


def ideal_contains(outer: ExponentMatrix, inner: ExponentMatrix) -> bool:
    s = outer.g.s
    return all(outer[i, j] <= inner[i, j] for i in range(1, s + 1) for j in range(1, s + 1))


def annihilator_step(g: GroupType, prev: ExponentMatrix) -> ExponentMatrix:
    """Largest ideal A inside the radical with A*J and J*A both inside ``prev``."""
    J = radical_shape(g)
    if not ideal_contains(J, prev):
        raise NotContainedInRadical("previous term of the sequence is not inside the radical")
    s = g.s
    rng = range(1, s + 1)

    def cell(i, j):
        need = J[i, j]
        for m in rng:
            need = max(need, prev[i, m] - J[j, m], prev[m, j] - J[m, i])
        return min(need, g.n(j))

    return ExponentMatrix(g, _grid(g, cell))


def uas_direct(g: GroupType) -> list[ExponentMatrix]:
    """J_1, ..., J_l by iterating the annihilator from the zero ideal."""
    J = radical_shape(g)
    cur = zero_ideal(g)
    out: list[ExponentMatrix] = []
    cap = 2 * sum(g.exponents)
    while cur.beta != J.beta:
        nxt = annihilator_step(g, cur)
        if nxt.beta == cur.beta:
            raise InternalMismatch(f"annihilator sequence stalled before reaching J for {g}")
        out.append(nxt)
        cur = nxt
        if len(out) > cap:
            raise InternalMismatch(f"annihilator sequence did not reach J within {cap} steps")
    return out


def uas_via_alpha(g: GroupType) -> list[ExponentMatrix]:
    """J_1, ..., J_l read off the upper function: beta_t(i, j) = n_j - alpha(i, j, t)."""
    tab = alpha_table(g)
    return [
        ExponentMatrix(g, _grid(g, lambda i, j: g.n(j) - tab(i, j, t)))
        for t in range(1, tab.t_max + 1)
    ]


def uas_length(g: GroupType) -> int:
    return alpha_table(g).t_max


def y_of_g(g: GroupType) -> int:
    """Least t with every cell except (s, s) saturated."""
    tab = alpha_table(g)
    s = g.s
    if s == 1:
        return 0 if tab.t_max == 0 else 1
    cells = [(i, j) for i in range(1, s + 1) for j in range(1, s + 1) if (i, j) != (s, s)]
    t = 0
    while any(tab(i, j, t) < f_J(g, i, j) for i, j in cells):
        t += 1
    return t


@dataclass(frozen=True)
class ClassResult:
    value: int
    applicability: Applicability

    @property
    def guaranteed(self) -> bool:
        return self.applicability.guaranteed


def nilpotency_class(g: GroupType) -> ClassResult:
    """Class of Delta(G): l(J) when r_s >= 2, y(G) when r_s = 1.

    Only a prediction when the applicability tag is NotGuaranteed.
    """
    value = uas_length(g) if g.ranks[-1] >= 2 else y_of_g(g)
    return ClassResult(value, classify_applicability(g))


@dataclass(frozen=True)
class HypercenterDescription:
    """Congruence rules cutting Gamma_t = (J_t + 1)Z out of Delta(G).

    For C + 1 in Delta(G), with c_ij^(l,k) the entry in row l of block i and
    column k of block j, membership means
      (a) i != j:          c_ij^(l,k) = 0            mod p^(n_j - alpha(i,j,t))
      (b) l != k:          c_ii^(l,k) = 0            mod p^(n_i - alpha(i,i,t))
      (c) diagonal tie:    c_ii^(l,l) = c_ss^(r,r)   mod p^(n_i - alpha(i,i,t))
    """

    g: GroupType
    t: int
    alpha_slice: Grid = field(repr=False)

    def alpha(self, i: int, j: int) -> int:
        return self.alpha_slice[i - 1][j - 1]

    def modulus_exponent(self, i: int, j: int) -> int:
        """Exponent of the modulus for rule (a) when i != j, rules (b)/(c) when i == j."""
        return self.g.n(j) - self.alpha(i, j)

    def tie_exponent(self, i: int) -> int:
        return self.modulus_exponent(i, i)

    def entry_exponents(self) -> list[list[Optional[int]]]:
        """r x r grid of modulus exponents, position by position.

        Diagonal positions carry the tie exponent; the anchor position
        (r, r), against which the ties are taken, is None.
        """
        blocks = self.g.blocks()
        r = len(blocks)
        out = [[self.modulus_exponent(blocks[a], blocks[b]) for b in range(r)] for a in range(r)]
        out[r - 1][r - 1] = None
        return out

    def entails(self, later: "HypercenterDescription") -> bool:
        """True when every element satisfying these rules satisfies ``later``'s."""
        s = self.g.s
        return all(
            self.modulus_exponent(i, j) >= later.modulus_exponent(i, j)
            for i in range(1, s + 1)
            for j in range(1, s + 1)
        )

    def is_whole_delta(self) -> bool:
        """Whether the rules are implied by membership in Delta(G) alone."""
        g = self.g
        s = g.s
        for i in range(1, s + 1):
            for j in range(1, s + 1):
                if i != j and self.alpha(i, j) < f_J(g, i, j):
                    return False
            e = self.tie_exponent(i)
            # within-block rule (b) is live only for r_i >= 2
            if g.rank(i) >= 2 and self.alpha(i, i) < f_J(g, i, i):
                return False
            # tie rule (c) compares two multiples of p, so exponent 1 is vacuous
            is_anchor_only = i == s and g.rank(s) == 1
            if not is_anchor_only and e > 1:
                return False
        return True


def _description(g: GroupType, t: int, tab: Optional[AlphaTable] = None) -> HypercenterDescription:
    tab = tab or alpha_table(g)
    sl = tab.slice(t)
    return HypercenterDescription(g, t, tuple(tuple(int(x) for x in row) for row in sl))


def hypercenter_description(g: GroupType, t: int) -> HypercenterDescription:
    c = nilpotency_class(g).value
    if not 1 <= t <= c:
        raise StepOutOfRange(f"step t={t} outside 1..{c} (nilpotency class) for {g}")
    return _description(g, t)


@dataclass(frozen=True)
class SeriesReport:
    g: GroupType
    applicability: Applicability
    uas: tuple[ExponentMatrix, ...]
    l: int
    y: int
    nilpotency_class: int
    ucs: tuple[HypercenterDescription, ...]

    @property
    def guaranteed(self) -> bool:
        return self.applicability.guaranteed


def ucs_report(g: GroupType) -> SeriesReport:
    via_alpha = uas_via_alpha(g)
    direct = uas_direct(g)
    if [m.beta for m in via_alpha] != [m.beta for m in direct]:
        raise InternalMismatch(f"upper function and direct annihilator disagree for {g}")
    cls = nilpotency_class(g)
    tab = alpha_table(g)
    return SeriesReport(
        g=g,
        applicability=cls.applicability,
        uas=tuple(via_alpha),
        l=tab.t_max,
        y=y_of_g(g),
        nilpotency_class=cls.value,
        ucs=tuple(_description(g, t, tab) for t in range(1, cls.value + 1)),
    )
