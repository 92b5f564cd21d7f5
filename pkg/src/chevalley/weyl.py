"""Weyl group elements as exact integer matrices on simple-root coordinates."""

from __future__ import annotations

from typing import Sequence

from . import matrices as mx
from .rootsys import RootSystem


class WeylElement:
    """A Weyl group element with its defining word in simple reflections.

    Words use 1-based simple-root indices. The matrix acts on coordinate
    column vectors, so composing words left-to-right multiplies matrices in
    the same order.
    """

    __slots__ = ("rs", "matrix", "word")

    def __init__(self, rs: RootSystem, matrix: mx.Matrix, word: tuple[int, ...]):
        self.rs = rs
        self.matrix = matrix
        self.word = word

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.rs is not self.rs:
            raise ValueError("cannot compose elements over different root systems")
        return WeylElement(self.rs, mx.mat_mul(self.matrix, other.matrix), self.word + other.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def apply(self, v: Sequence) -> tuple:
        return mx.mat_vec(self.matrix, tuple(v))

    def is_identity(self) -> bool:
        return mx.is_identity(self.matrix)

    def inverse(self) -> "WeylElement":
        # simple reflections are involutions, so the reversed word inverts
        return WeylElement(self.rs, mx.inverse(self.matrix), tuple(reversed(self.word)))

    def order(self) -> int:
        """Least m >= 1 with w^m = 1, found by iteration bounded by |W|."""
        bound = self.rs.weyl_order()
        power = self.matrix
        for m in range(1, bound + 1):
            if mx.is_identity(power):
                return m
            power = mx.mat_mul(power, self.matrix)
        raise AssertionError("order exceeded |W|; matrix is not a Weyl element")

    def has_eigenvalue_one(self) -> bool:
        """Exact det(w - I) = 0 test."""
        n = len(self.matrix)
        shifted = mx.mat_sub(self.matrix, mx.identity(n))
        return mx.det(shifted) == 0

    def det_minus_identity(self):
        n = len(self.matrix)
        return mx.det(mx.mat_sub(self.matrix, mx.identity(n)))

    def orbit_sum(self, v: Sequence) -> tuple:
        """Sum of w^i(v) for i = 1..order(w); zero iff v has no invariant component."""
        m = self.order()
        total = list(tuple(0 for _ in v))
        cur = tuple(v)
        for _ in range(m):
            cur = self.apply(cur)
            total = [t + c for t, c in zip(total, cur)]
        return tuple(total)

    def __repr__(self):
        return f"WeylElement({self.rs.label}_{self.rs.rank}, word={list(self.word)})"


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, mx.identity(rs.rank), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """s_i acting on simple-root coordinates; i is 1-based."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple reflection index {i} out of range 1..{rs.rank}")
    k = i - 1
    rows = []
    for r in range(rs.rank):
        if r == k:
            # s_i subtracts <alpha_j, alpha_i> from coordinate i
            rows.append(tuple((1 if j == k else 0) - rs.cartan[j][k] for j in range(rs.rank)))
        else:
            rows.append(tuple(1 if j == r else 0 for j in range(rs.rank)))
    return WeylElement(rs, tuple(rows), (i,))


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    out = identity_element(rs)
    for i in word:
        out = out * simple_reflection(rs, i)
    return out


def coxeter_element(rs: RootSystem) -> WeylElement:
    """Product s_1 s_2 ... s_rank in index order."""
    return from_word(rs, range(1, rs.rank + 1))


def enumerate_elements(rs: RootSystem, max_size: int) -> list[WeylElement]:
    """Breadth-first closure under right multiplication, with shortest words.

    The closed-form group order is checked against max_size before any work.
    """
    total = rs.weyl_order()
    if total > max_size:
        raise ValueError(f"|W({rs.label}_{rs.rank})| = {total} exceeds max_size = {max_size}")
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    start = identity_element(rs)
    seen = {start.matrix}
    out = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = w * g
                if cand.matrix not in seen:
                    seen.add(cand.matrix)
                    out.append(cand)
                    nxt.append(cand)
        frontier = nxt
    assert len(out) == total, "BFS closure disagrees with the closed-form group order"
    return out
