"""Explicit endomorphisms of G as r x r integer matrices.

Rows act on row vectors: x -> x @ M, so the composite "M then N" is M @ N.
Entries in block column j live in Z/p^(n_j); an entry in an upper cell
(block i < block j) is a multiple of p^(n_j - n_i).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotInDelta, ShapeViolation
from .group import GroupType
from .series import ExponentMatrix, HypercenterDescription, radical_shape


def _dtype(g: GroupType):
    # products are summed before reduction
    return np.int64 if g.r * g.p ** (2 * g.exponents[-1]) < 2**62 else object


def column_moduli(g: GroupType) -> np.ndarray:
    return np.array([g.p ** g.n(b) for b in g.blocks()], dtype=_dtype(g))


def exponent_grid(g: GroupType, shape: ExponentMatrix) -> np.ndarray:
    """Expand a block exponent matrix to the r x r positions."""
    blocks = g.blocks()
    return np.array([[shape[bi, bj] for bj in blocks] for bi in blocks], dtype=np.int64)


def _upper_divisors(g: GroupType) -> np.ndarray:
    blocks = g.blocks()
    return np.array(
        [[g.p ** max(0, g.n(bj) - g.n(bi)) for bj in blocks] for bi in blocks],
        dtype=_dtype(g),
    )


def reduce(g: GroupType, a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=_dtype(g)) % column_moduli(g)


def mul_arrays(g: GroupType, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Batched product with block-column reduction; broadcasts over leading axes."""
    return np.matmul(a, b) % column_moduli(g)


@dataclass(frozen=True, eq=False)
class ResidueMatrix:
    g: GroupType
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=_dtype(self.g))
        if a.shape != (self.g.r, self.g.r):
            raise ShapeViolation(f"expected {self.g.r} x {self.g.r} entries, got {a.shape}")
        a = a % column_moduli(self.g)
        if (a % _upper_divisors(self.g) != 0).any():
            raise ShapeViolation("an upper-cell entry is not divisible by p^(n_j - n_i)")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    def __eq__(self, other):
        return (
            isinstance(other, ResidueMatrix)
            and self.g == other.g
            and bool((self.entries == other.entries).all())
        )

    def __hash__(self):
        return hash((self.g, tuple(int(x) for x in self.entries.ravel())))

    def __matmul__(self, other: "ResidueMatrix") -> "ResidueMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "ResidueMatrix") -> "ResidueMatrix":
        return ResidueMatrix(self.g, self.entries + other.entries)

    def __sub__(self, other: "ResidueMatrix") -> "ResidueMatrix":
        return ResidueMatrix(self.g, self.entries - other.entries)

    def __neg__(self) -> "ResidueMatrix":
        return ResidueMatrix(self.g, -self.entries)

    def is_zero(self) -> bool:
        return not self.entries.any()

    def __repr__(self):
        return f"ResidueMatrix({self.g}, {self.entries.tolist()})"


def identity(g: GroupType) -> ResidueMatrix:
    return ResidueMatrix(g, np.eye(g.r, dtype=_dtype(g)))


def zero(g: GroupType) -> ResidueMatrix:
    return ResidueMatrix(g, np.zeros((g.r, g.r), dtype=_dtype(g)))


def mat_mul(a: ResidueMatrix, b: ResidueMatrix) -> ResidueMatrix:
    if a.g != b.g:
        raise ShapeViolation("matrices belong to different group types")
    return ResidueMatrix(a.g, mul_arrays(a.g, a.entries, b.entries))


def _offsets(g: GroupType) -> list[int]:
    out = [0]
    for rk in g.ranks:
        out.append(out[-1] + rk)
    return out


def elementary_endomorphisms(g: GroupType) -> list[ResidueMatrix]:
    """One matrix e_ij^(k,l) per cell position: p on diagonal cells, 1 below, p^(n_j - n_i) above."""
    off = _offsets(g)
    out = []
    for i in range(1, g.s + 1):
        for j in range(1, g.s + 1):
            if i == j:
                val = g.p
            elif i > j:
                val = 1
            else:
                val = g.p ** (g.n(j) - g.n(i))
            for k in range(g.rank(i)):
                for l in range(g.rank(j)):
                    m = np.zeros((g.r, g.r), dtype=_dtype(g))
                    m[off[i - 1] + k, off[j - 1] + l] = val
                    out.append(ResidueMatrix(g, m))
    return out


def is_in_ideal(m: ResidueMatrix, shape: ExponentMatrix) -> bool:
    div = np.array(
        [[m.g.p ** e for e in row] for row in exponent_grid(m.g, shape)], dtype=_dtype(m.g)
    )
    return not (m.entries % div).any()


def in_radical(m: ResidueMatrix) -> bool:
    return is_in_ideal(m, radical_shape(m.g))


def delta_inverse(u: ResidueMatrix) -> ResidueMatrix:
    """Inverse of u = 1 + a in Delta(G) via 1 - a + a^2 - ..., which ends since a is nilpotent."""
    g = u.g
    one = identity(g)
    a = u - one
    if not in_radical(a):
        raise NotInDelta("u - 1 is not in the Jacobson radical")
    bound = g.s * sum(g.exponents) + 1
    total = one
    power = one
    sign = 1
    for _ in range(bound):
        power = power @ a
        if power.is_zero():
            return total
        sign = -sign
        total = total + power if sign > 0 else total - power
    raise NotInDelta(f"radical element not nilpotent within {bound} steps")


def in_hypercenter(m: ResidueMatrix, desc: HypercenterDescription) -> bool:
    """Whether m (an element of Delta(G)) satisfies the congruence rules of ``desc``."""
    g = m.g
    c = m.entries - np.eye(g.r, dtype=m.entries.dtype)
    c = c % column_moduli(g)
    if not in_radical(ResidueMatrix(g, c)):
        raise NotInDelta("m - 1 is not in the Jacobson radical")
    return bool(hypercenter_mask(g, desc, c[None, ...])[0])


def hypercenter_mask(g: GroupType, desc: HypercenterDescription, c: np.ndarray) -> np.ndarray:
    """Vectorized rule check on a stack ``c`` of radical parts C (shape (N, r, r))."""
    blocks = g.blocks()
    r = len(blocks)
    p = g.p
    ok = np.ones(c.shape[0], dtype=bool)
    anchor = c[:, r - 1, r - 1]
    for a in range(r):
        for b in range(r):
            if a == b == r - 1:
                continue
            mod = p ** desc.modulus_exponent(blocks[a], blocks[b])
            if a == b:
                ok &= (c[:, a, a] - anchor) % mod == 0
            else:
                ok &= c[:, a, b] % mod == 0
    return ok
