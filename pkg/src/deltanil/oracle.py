"""Brute-force ground truth on small instances.

Everything here works on explicit element sets of Delta(G) = 1 + J and uses
only the group (or ring) axioms: the upper central series is computed from
commutators against every group element, and annihilators from products
against every radical element. The only thing borrowed from the theory is
the enumeration of J itself.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NotExponentShaped, OrderExceedsGuard
from .group import Applicability, GroupType, classify_applicability, delta_order, f_J
from .residue import column_moduli, hypercenter_mask
from .series import ExponentMatrix, _description, alpha_table, nilpotency_class, radical_shape, uas_length

log = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 2**13
_CHUNK_ENTRIES = 1 << 22
_SCREEN = 48


def _positions(g: GroupType):
    blocks = g.blocks()
    J = radical_shape(g)
    beta = np.array([[J[bi, bj] for bj in blocks] for bi in blocks], dtype=np.int64)
    radix = np.array([[g.p ** f_J(g, bi, bj) for bj in blocks] for bi in blocks], dtype=np.int64)
    return beta, radix


class EnumeratedGroup:
    """All of Delta(G) as an (N, r, r) array in canonical order.

    Element k has radical part sum_pos digit_pos(k) * p^beta_J(pos), with the
    digits read in mixed radix p^f_J(pos) over the r*r positions in row-major
    order, so element 0 is the identity.
    """

    def __init__(self, g: GroupType, max_order: int = DEFAULT_MAX_ORDER):
        order = delta_order(g)
        if order > max_order:
            raise OrderExceedsGuard(order, max_order)
        self.g = g
        self.order = order
        r = g.r
        self.moduli = column_moduli(g).astype(np.int64)
        beta, radix = _positions(g)
        self._step = (g.p ** beta).ravel()
        self._radix = radix.ravel()
        idx = np.arange(order, dtype=np.int64)
        digits = np.zeros((order, r * r), dtype=np.int64)
        for pos in range(r * r - 1, -1, -1):
            digits[:, pos] = idx % self._radix[pos]
            idx //= self._radix[pos]
        self.radical = (digits * self._step).reshape(order, r, r) % self.moduli
        self.elements = (self.radical + np.eye(r, dtype=np.int64)) % self.moduli
        self._eye = np.eye(r, dtype=np.int64)
        # exact float64 matmul when every partial sum stays below 2^53
        self._float_ok = r * int(self.moduli.max()) ** 2 < 2**53
        self._inverse: Optional[np.ndarray] = None

    def __len__(self):
        return self.order

    def index_of_radical(self, c: np.ndarray) -> np.ndarray:
        """Indices of radical parts ``c`` (..., r, r); entries must already be reduced."""
        r = self.g.r
        flat = c.reshape(-1, r * r) // self._step
        key = np.zeros(flat.shape[0], dtype=np.int64)
        for pos in range(r * r):
            key = key * self._radix[pos] + flat[:, pos]
        return key.reshape(c.shape[:-2])

    def index_of(self, m: np.ndarray) -> np.ndarray:
        return self.index_of_radical((m - self._eye) % self.moduli)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._float_ok:
            out = np.matmul(a.astype(np.float64), b.astype(np.float64)).astype(np.int64)
        else:
            out = np.matmul(a, b)
        return out % self.moduli

    def inverses(self) -> np.ndarray:
        """Index of the inverse of each element."""
        if self._inverse is None:
            a = self.radical
            # (1 + a)^-1 = 1 - a + a^2 - ...
            total = np.broadcast_to(self._eye, a.shape).copy()
            power = total.copy()
            sign = 1
            for _ in range(self.g.s * sum(self.g.exponents) + 1):
                power = self.matmul(power, a)
                if not power.any():
                    break
                sign = -sign
                total = (total + sign * power) % self.moduli
            self._inverse = self.index_of(total)
        return self._inverse

    def all_pairs(self, xs: np.ndarray, ys: np.ndarray, test, ring: bool = False) -> np.ndarray:
        """For each x in xs, whether ``test(keys_xy, keys_yx)`` holds against every y in ys.

        With ``ring`` the products are of radical parts (ring J), otherwise of
        group elements. ``test`` maps two (cx, len(ys)) index arrays to a
        boolean array of the same shape.
        """
        src = self.radical if ring else self.elements
        index = self.index_of_radical if ring else self.index_of
        ok = np.ones(len(xs), dtype=bool)
        Y = src[ys]
        step = max(1, _CHUNK_ENTRIES // (max(1, len(ys)) * self.g.r ** 2))
        for start in range(0, len(xs), step):
            X = src[xs[start:start + step]]
            xy = index(self.matmul(X[:, None], Y[None]))
            yx = index(self.matmul(Y[None], X[:, None]))
            ok[start:start + step] = test(xy, yx).all(axis=1)
        return ok

    def screened(self, xs: np.ndarray, test, ring: bool = False) -> np.ndarray:
        """``all_pairs`` against every element, after a cheap screen on a few of them."""
        if len(xs) == 0:
            return np.zeros(0, dtype=bool)
        rng = np.random.default_rng(0)
        sample = np.unique(np.concatenate([rng.integers(0, self.order, _SCREEN), self._generator_indices()]))
        ok = self.all_pairs(xs, sample, test, ring)
        survivors = xs[ok]
        if len(survivors):
            ok[ok] = self.all_pairs(survivors, np.arange(self.order), test, ring)
        return ok

    def _generator_indices(self) -> np.ndarray:
        # one digit set to 1: the single-position elements
        out = []
        weight = 1
        for pos in range(len(self._radix) - 1, -1, -1):
            if self._radix[pos] > 1:
                out.append(weight)
            weight *= int(self._radix[pos])
        return np.asarray(out, dtype=np.int64)


def enumerate_delta(g: GroupType, max_order: int = DEFAULT_MAX_ORDER) -> EnumeratedGroup:
    return EnumeratedGroup(g, max_order)


def _coset_labels(grp: EnumeratedGroup, mask: np.ndarray) -> np.ndarray:
    """Label each element by its coset of the normal subgroup ``mask``."""
    labels = np.full(grp.order, -1, dtype=np.int64)
    sub = grp.elements[mask]
    label = 0
    for x in range(grp.order):
        if labels[x] < 0:
            labels[grp.index_of(grp.matmul(sub, grp.elements[x]))] = label
            label += 1
    return labels


@dataclass(frozen=True)
class UpperCentralSeries:
    chain: tuple[np.ndarray, ...]  # boolean masks Z_0 = {1}, Z_1, ..., Z_c = Delta

    @property
    def nilpotency_class(self) -> int:
        return len(self.chain) - 1

    def sizes(self) -> list[int]:
        return [int(z.sum()) for z in self.chain]


def ucs_oracle(grp: EnumeratedGroup) -> UpperCentralSeries:
    """Z_t = {x : x^-1 y^-1 x y in Z_(t-1) for all y}, iterated until Z_t = Delta.

    The commutator condition is tested as "xy and yx lie in the same coset of
    Z_(t-1)", which is the same statement.
    """
    z = np.zeros(grp.order, dtype=bool)
    z[0] = True
    chain = [z]
    while not z.all():
        labels = _coset_labels(grp, z)
        cand = np.flatnonzero(~z)
        central = grp.screened(cand, lambda xy, yx: labels[xy] == labels[yx])
        nz = z.copy()
        nz[cand[central]] = True
        if (nz == z).all():
            raise RuntimeError(f"upper central series stalled for {grp.g}; Delta is not nilpotent?")
        z = nz
        chain.append(z)
        log.debug("Z_%d has %d elements", len(chain) - 1, int(z.sum()))
    return UpperCentralSeries(tuple(chain))


def ideal_mask(grp: EnumeratedGroup, shape: ExponentMatrix) -> np.ndarray:
    """Which radical elements lie in the ideal with exponent matrix ``shape``."""
    g = grp.g
    blocks = g.blocks()
    div = np.array([[g.p ** shape[bi, bj] for bj in blocks] for bi in blocks], dtype=np.int64)
    return ~(grp.radical % div).any(axis=(1, 2))


def exponent_matrix_of(grp: EnumeratedGroup, mask: np.ndarray) -> ExponentMatrix:
    """Exponent matrix of an element set of J; NotExponentShaped if the set is not such an ideal."""
    g = grp.g
    off = [0]
    for rk in g.ranks:
        off.append(off[-1] + rk)
    sub = grp.radical[mask]
    beta = []
    for i in range(1, g.s + 1):
        row = []
        for j in range(1, g.s + 1):
            cell = sub[:, off[i - 1]:off[i], off[j - 1]:off[j]]
            k = 0
            while k < g.n(j) and not (cell % g.p ** (k + 1)).any():
                k += 1
            row.append(k)
        beta.append(row)
    shape = ExponentMatrix(g, beta)
    if not (ideal_mask(grp, shape) == mask).all():
        raise NotExponentShaped(f"element set is not an exponent-matrix ideal for {g}")
    return shape


def ann_oracle(g: GroupType, prev: ExponentMatrix, max_order: int = DEFAULT_MAX_ORDER,
               grp: Optional[EnumeratedGroup] = None) -> ExponentMatrix:
    """{a in J : aJ and Ja inside prev}, computed from the element sets."""
    grp = grp or enumerate_delta(g, max_order)
    inside = ideal_mask(grp, prev)
    ok = grp.screened(np.arange(grp.order), lambda ab, ba: inside[ab] & inside[ba], ring=True)
    return exponent_matrix_of(grp, ok)


def uas_oracle(g: GroupType, max_order: int = DEFAULT_MAX_ORDER) -> list[ExponentMatrix]:
    grp = enumerate_delta(g, max_order)
    J = radical_shape(g)
    cur = ExponentMatrix(g, [[g.n(j) for j in range(1, g.s + 1)] for _ in range(g.s)])
    out = []
    while cur.beta != J.beta:
        nxt = ann_oracle(g, cur, grp=grp)
        if nxt.beta == cur.beta:
            raise RuntimeError(f"annihilator sequence stalled for {g}")
        out.append(nxt)
        cur = nxt
    return out


def is_normal_subgroup(grp: EnumeratedGroup, mask: np.ndarray) -> bool:
    """Closure under products and under conjugation by every element."""
    if not mask[0]:
        return False
    idx = np.flatnonzero(mask)
    closed = grp.all_pairs(idx, idx, lambda xy, yx: mask[xy] & mask[yx])
    if not closed.all():
        return False
    inv = grp.inverses()
    sub = grp.elements[idx]
    step = max(1, _CHUNK_ENTRIES // (len(idx) * grp.g.r ** 2))
    for start in range(0, grp.order, step):
        xs = np.arange(start, min(start + step, grp.order))
        conj = grp.matmul(grp.matmul(grp.elements[inv[xs]][:, None], sub[None]), grp.elements[xs][:, None])
        if not mask[grp.index_of(conj)].all():
            return False
    return True


@dataclass(frozen=True)
class StepComparison:
    t: int
    oracle_size: int
    predicted_size: int
    equal: bool


@dataclass(frozen=True)
class OracleReport:
    g: GroupType
    applicability: Applicability
    order: int
    oracle_class: int
    predicted_class: int
    uas_length: int
    steps: tuple[StepComparison, ...]

    @property
    def agreement(self) -> bool:
        return self.oracle_class == self.predicted_class and all(s.equal for s in self.steps)

    @property
    def bound_holds(self) -> bool:
        return self.oracle_class <= self.uas_length

    @property
    def center_agrees(self) -> bool:
        return not self.steps or self.steps[0].equal

    @property
    def abelian(self) -> bool:
        return self.oracle_class <= 1

    @property
    def violates_guarantee(self) -> bool:
        return self.applicability.guaranteed and not self.agreement


def predicted_masks(grp: EnumeratedGroup, upto: int) -> list[np.ndarray]:
    """Gamma_1..Gamma_upto as element masks, from the congruence rules."""
    g = grp.g
    tab = alpha_table(g)
    return [hypercenter_mask(g, _description(g, t, tab), grp.radical) for t in range(1, upto + 1)]


def compare_report(g: GroupType, max_order: int = DEFAULT_MAX_ORDER) -> OracleReport:
    grp = enumerate_delta(g, max_order)
    series = ucs_oracle(grp)
    oc = series.nilpotency_class
    pc = nilpotency_class(g).value
    upto = max(oc, pc)
    steps = []
    for t, pred in enumerate(predicted_masks(grp, upto), start=1):
        actual = series.chain[min(t, oc)]
        steps.append(StepComparison(t, int(actual.sum()), int(pred.sum()), bool((actual == pred).all())))
    rep = OracleReport(
        g=g,
        applicability=classify_applicability(g),
        order=grp.order,
        oracle_class=oc,
        predicted_class=pc,
        uas_length=uas_length(g),
        steps=tuple(steps),
    )
    if not rep.agreement:
        log.info("oracle disagrees with prediction for %s (%s)", g, rep.applicability.tag.value)
    return rep
