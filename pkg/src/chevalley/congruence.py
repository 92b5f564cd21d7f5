"""Congruence subgroups of the Z[1/p]-points of an adjoint Chevalley group.

Gamma is the subgroup with entries in Z[1/p] and determinant one; Gamma_q is
its principal congruence subgroup mod q. For q > 2 coprime to p, Gamma_q is
torsionfree: torsionfree_probe certifies sampled words and
binomial_obstruction replays the divisibility ledger that rules out prime
torsion. padic_approximate realizes density of q Z[1/p] in the p-adic
integers by explicit modular inversion, and approximate_generator lifts that
to root-group elements to any requested entry-wise precision.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import matrices as mx
from .chevgrp import ChevalleyBasis, GroupElement, torsion_order
from .exactnum import (
    Infinity,
    Q,
    Valuation,
    in_z_inv_p,
    is_prime,
    reduce_mod_q,
    valuate,
)


@dataclass(frozen=True)
class CongruenceContext:
    """Carries the group, the localized prime p, and the congruence modulus q.

    The torsionfree guarantee needs q > 2 and gcd(q, p) = 1; build with
    strict=False to deliberately probe the excluded modulus q = 2.
    """

    cb: ChevalleyBasis
    p: int
    q: int
    strict: bool = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not isinstance(self.q, int) or isinstance(self.q, bool) or self.q < 2:
            raise ValueError(f"q must be an integer >= 2, got {self.q}")
        if math.gcd(self.q, self.p) != 1:
            raise ValueError(f"q must be coprime to p, got q={self.q}, p={self.p}")
        if self.strict and self.q <= 2:
            raise ValueError("torsionfree regime needs q > 2 (pass strict=False to probe q = 2)")

    @property
    def valuation(self) -> Valuation:
        return Valuation(self.p)


def in_gamma(ctx: CongruenceContext, g: GroupElement) -> bool:
    """Entries in Z[1/p] and determinant one."""
    v = ctx.valuation
    for row in g.matrix:
        for entry in row:
            if not in_z_inv_p(v, entry):
                return False
    return mx.det(g.matrix) == 1


def in_gamma_q(ctx: CongruenceContext, g: GroupElement) -> bool:
    """Membership in the principal congruence subgroup: entry-wise I mod q."""
    if not in_gamma(ctx, g):
        return False
    v = ctx.valuation
    for i, row in enumerate(g.matrix):
        for j, entry in enumerate(row):
            if reduce_mod_q(v, entry, ctx.q) != (1 if i == j else 0):
                return False
    return True


def _z_inv_p_sample(rng: random.Random, p: int):
    num = rng.choice([n for n in range(-9, 10) if n])
    return Q(num, p ** rng.randint(0, 3))


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of sampling words in Gamma_q generators for torsion."""

    p: int
    q: int
    words: int
    max_word_len: int
    seed: int
    checked: int
    skipped_identity: int
    verdict: str  # "pass" | "torsion-found"
    violating_word: Optional[list] = None
    violating_order: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "words": self.words,
            "max_word_len": self.max_word_len,
            "seed": self.seed,
            "checked": self.checked,
            "skipped_identity": self.skipped_identity,
            "verdict": self.verdict,
            "violating_word": self.violating_word,
            "violating_order": self.violating_order,
        }


def torsionfree_probe(ctx: CongruenceContext, word_count: int, max_word_len: int, seed: int = 0) -> ProbeReport:
    """Random words in {x(alpha, q*lam) : lam in Z[1/p]} must have infinite order.

    Identity products are skipped. A finite torsion_order is reported, not
    raised, so the q = 2 regime can record findings; callers in the q > 2
    regime treat any non-pass verdict as a failure.
    """
    rng = random.Random(seed)
    cb, qint = ctx.cb, ctx.q
    roots = cb.rs.roots
    checked = 0
    skipped = 0
    for _ in range(word_count):
        length = rng.randint(1 if max_word_len else 0, max_word_len)
        word = []
        g = cb.identity()
        for _ in range(length):
            alpha = rng.choice(roots)
            lam = qint * _z_inv_p_sample(rng, ctx.p)
            word.append((alpha, lam))
            g = g * cb.x(alpha, lam)
        if mx.is_identity(g.matrix):
            skipped += 1
            continue
        checked += 1
        order = torsion_order(g)
        if not isinstance(order, Infinity):
            return ProbeReport(
                ctx.p, qint, word_count, max_word_len, seed, checked, skipped,
                "torsion-found",
                [[list(a), str(l)] for a, l in word],
                int(order),
            )
    return ProbeReport(ctx.p, qint, word_count, max_word_len, seed, checked, skipped, "pass")


def _q_power_divides(ctx: CongruenceContext, x, power: int) -> bool:
    """Whether x in Z[1/p] is divisible by q^power (denominator is a unit mod q)."""
    r = Q(x)
    num = int(r.numerator)
    den = int(r.denominator)
    modulus = ctx.q ** power
    if math.gcd(den, ctx.q) != 1:
        raise ValueError("entry denominator is not a unit modulo q")
    return (num * pow(den, -1, modulus)) % modulus == 0


def _matrix_q_level(ctx: CongruenceContext, b: mx.Matrix) -> int:
    """Largest s >= 0 with every entry of b divisible by q^s."""
    s = 0
    while all(_q_power_divides(ctx, e, s + 1) for row in b for e in row):
        s += 1
        if s > 64:
            raise ValueError("entries vanish to absurd depth; matrix is likely zero")
    return s


def _matrix_divisible(ctx: CongruenceContext, b: mx.Matrix, power: int) -> bool:
    return all(_q_power_divides(ctx, e, power) for row in b for e in row)


@dataclass(frozen=True)
class ObstructionReport:
    """The divisibility ledger that certifies g^r != identity."""

    r: int
    q: int
    s: int
    case: str  # "coprime" | "equal-odd-prime" | "fallback-direct"
    lhs_modulus: int
    lhs_nonzero: bool
    tail_vanishes: bool
    certified: bool

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "q": self.q,
            "s": self.s,
            "case": self.case,
            "lhs_modulus": self.lhs_modulus,
            "lhs_nonzero": self.lhs_nonzero,
            "tail_vanishes": self.tail_vanishes,
            "certified": self.certified,
        }


def binomial_obstruction(ctx: CongruenceContext, g: GroupElement, r: int) -> ObstructionReport:
    """Certify g^r != identity for g in Gamma_q, g != identity, prime r.

    Writes g = I + B with B = 0 mod q^s exactly. When gcd(r, q) = 1 the
    difference g^r - I agrees with rB mod q^(s+1) and rB survives there.
    When r = q is an odd prime the binomial tail is divisible by q^(s+2)
    while qB is not. Any leftover pairing (only r = q = 2) falls back to
    direct exact powering.
    """
    if not is_prime(r):
        raise ValueError(f"r must be prime, got {r}")
    if mx.is_identity(g.matrix):
        raise ValueError("g must differ from the identity")
    if not in_gamma_q(ctx, g):
        raise ValueError("g must lie in the congruence subgroup")
    b = mx.mat_sub(g.matrix, mx.identity(len(g.matrix)))
    s = _matrix_q_level(ctx, b)
    assert s >= 1  # forced by congruence membership
    power_diff = mx.mat_sub(mx.mat_pow(g.matrix, r), mx.identity(len(g.matrix)))
    if math.gcd(r, ctx.q) == 1:
        modulus = s + 1
        rb = mx.mat_scale(r, b)
        lhs_nonzero = not _matrix_divisible(ctx, rb, modulus)
        tail = mx.mat_sub(power_diff, rb)
        tail_vanishes = _matrix_divisible(ctx, tail, modulus)
        certified = lhs_nonzero and tail_vanishes
        case = "coprime"
    elif r == ctx.q and r % 2 == 1:
        modulus = s + 2
        qb = mx.mat_scale(ctx.q, b)
        lhs_nonzero = not _matrix_divisible(ctx, qb, modulus)
        tail = mx.mat_sub(power_diff, qb)
        tail_vanishes = _matrix_divisible(ctx, tail, modulus)
        certified = lhs_nonzero and tail_vanishes
        case = "equal-odd-prime"
    else:
        modulus = 0
        lhs_nonzero = not mx.is_zero(power_diff)
        tail_vanishes = False
        certified = lhs_nonzero
        case = "fallback-direct"
    return ObstructionReport(
        r=r, q=ctx.q, s=s, case=case,
        lhs_modulus=modulus, lhs_nonzero=lhs_nonzero,
        tail_vanishes=tail_vanishes, certified=certified,
    )


def padic_approximate(ctx: CongruenceContext, lam, t: int):
    """A member of q*Z[1/p] agreeing with lam to p-adic precision t.

    Writes lam = a / (b * p^k) with b a unit at p and solves
    mu = q*c / p^k with c the least nonnegative residue of
    a * b^-1 * q^-1 mod p^(t+k). Inputs already in q*Z[1/p] return
    themselves unchanged.
    """
    if t < 1:
        raise ValueError("precision target must be at least 1")
    lam = Q(lam)
    v = ctx.valuation
    if in_z_inv_p(v, lam / ctx.q):
        return lam
    a = int(lam.numerator)
    den = int(lam.denominator)
    k = 0
    while den % ctx.p == 0:
        den //= ctx.p
        k += 1
    b = den
    modulus = ctx.p ** (t + k)
    c = (a * pow(b, -1, modulus) * pow(ctx.q, -1, modulus)) % modulus
    mu = Q(ctx.q) * Q(c) / Q(ctx.p) ** k
    assert valuate(v, lam - mu) >= t
    return mu


@dataclass(frozen=True)
class ApproxReport:
    """x(alpha, lam) approximated by a congruence-subgroup element."""

    alpha: tuple[int, ...]
    lam: str
    mu: str
    target: int
    achieved: object  # int or INFINITY
    element: GroupElement

    def as_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "lam": self.lam,
            "mu": self.mu,
            "target": self.target,
            "achieved": "infinite" if isinstance(self.achieved, Infinity) else int(self.achieved),
        }


def approximate_generator(ctx: CongruenceContext, alpha: Sequence, lam, t: int) -> ApproxReport:
    """x(alpha, mu) in Gamma_q within entry-wise p-adic distance t of x(alpha, lam).

    Entry differences are sums of (lam^j - mu^j) times integer matrices, so
    negative valuation of lam costs up to (j_max - 1) * |nu(lam)| digits; the
    scalar approximation runs at that raised internal precision and the
    achieved entry-wise valuation is then measured and asserted >= t.
    """
    if t < 1:
        raise ValueError("precision target must be at least 1")
    alpha = tuple(alpha)
    lam = Q(lam)
    v = ctx.valuation
    depth = len(ctx.cb.divided_powers(alpha)) - 1
    slack = 0
    if lam != 0:
        slack = (max(depth, 1) - 1) * max(0, -int(valuate(v, lam)))
    mu = padic_approximate(ctx, lam, t + slack)
    h = ctx.cb.x(alpha, mu)
    diff = mx.mat_sub(ctx.cb.x(alpha, lam).matrix, h.matrix)
    achieved = min(valuate(v, e) for row in diff for e in row)
    assert achieved >= t, (achieved, t)
    assert in_gamma_q(ctx, h)
    return ApproxReport(
        alpha=alpha, lam=str(lam), mu=str(mu), target=t, achieved=achieved, element=h,
    )
