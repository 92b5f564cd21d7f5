"""Torsion of Weyl-element representatives in the adjoint group.

A Weyl element w is lifted to n_0 by sending each letter s_i to m_{alpha_i}(1);
the full preimage of w in the monomial normalizer is n_0 * h for torus
elements h. The finiteness of every such representative is controlled by an
eigenvalue criterion on w: all representatives have finite order exactly
when w - 1 is invertible on the reflection representation. When some
orbit sum w(beta) + ... + w^m(beta) is nonzero, n_0 * h_beta(2) is an
explicit infinite-order representative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import matrices as mx
from .chevgrp import ChevalleyBasis, GroupElement, torsion_exponent_bound, torsion_order
from .exactnum import INFINITY, Infinity, Q
from .weyl import WeylElement, enumerate_elements

TORUS_SCALARS = tuple(
    sign * Q(2) ** a * Q(3) ** b
    for sign in (1, -1)
    for a in range(-3, 4)
    for b in range(-3, 4)
)


def criterion(w: WeylElement) -> bool:
    """True when w has no eigenvalue one, i.e. det(w - I) != 0."""
    return not w.has_eigenvalue_one()


@dataclass(frozen=True)
class RepresentativeSurvey:
    """Sampled torsion orders of representatives n_0 * h over one Weyl element."""

    word: tuple[int, ...]
    weyl_order: int
    eigenvalue_one: bool
    orders: tuple[tuple[str, int], ...]  # (order or "infinite", count), sorted
    verdict: str
    samples: int
    seed: int
    power_identity_ok: bool

    def as_dict(self) -> dict:
        return {
            "word": list(self.word),
            "weyl_order": self.weyl_order,
            "eigenvalue_one": self.eigenvalue_one,
            "orders": [[o, c] for o, c in self.orders],
            "verdict": self.verdict,
            "samples": self.samples,
            "seed": self.seed,
            "power_identity_ok": self.power_identity_ok,
        }


def _random_torus(cb: ChevalleyBasis, rng: random.Random) -> GroupElement:
    factors = rng.randint(1, cb.rs.rank + 1)
    out = cb.identity()
    for _ in range(factors):
        beta = rng.choice(cb.rs.roots)
        out = out * cb.h(beta, rng.choice(TORUS_SCALARS))
    return out


def survey(cb: ChevalleyBasis, w: WeylElement, torus_samples: int, seed: int = 0) -> RepresentativeSurvey:
    """Sample torus elements h and record torsion_order(n_0 h).

    Rejects the identity Weyl element. For eigenvalue-free w the sampled
    orders must be finite and uniform; the proof identity
    (n_0 h)^m = n_0^m is asserted exactly per sample in that case.
    """
    if torus_samples < 1:
        raise ValueError("torus_samples must be at least 1")
    if w.is_identity():
        raise ValueError("survey rejects the identity Weyl element")
    rng = random.Random(seed)
    n0 = cb.lift_word(w.word)
    m = w.order()
    eig_one = w.has_eigenvalue_one()
    n0_m = mx.mat_pow(n0.matrix, m)
    counts: dict[str, int] = {}
    power_ok = True
    for _ in range(torus_samples):
        h = _random_torus(cb, rng)
        g = n0 * h
        order = torsion_order(g)
        key = "infinite" if isinstance(order, Infinity) else str(order)
        counts[key] = counts.get(key, 0) + 1
        if not eig_one and not mx.mat_eq(mx.mat_pow(g.matrix, m), n0_m):
            power_ok = False
    orders = tuple(sorted(counts.items(), key=lambda kv: (kv[0] == "infinite", _order_key(kv[0]))))
    if "infinite" in counts:
        verdict = "infinite-witness-found"
    elif len(counts) == 1:
        verdict = "all-finite-uniform"
    else:
        verdict = "mixed-finite"
    if not eig_one:
        # eigenvalue-free elements admit only finite representatives with one
        # common order: m or 2m, dividing m*m, and exactly m when m is odd
        assert verdict == "all-finite-uniform", counts
        common = int(orders[0][0])
        assert common in (m, 2 * m) and (m * m) % common == 0, (common, m)
        if m % 2 == 1:
            assert common == m, (common, m)
    return RepresentativeSurvey(
        word=tuple(w.word),
        weyl_order=m,
        eigenvalue_one=eig_one,
        orders=orders,
        verdict=verdict,
        samples=torus_samples,
        seed=seed,
        power_identity_ok=power_ok,
    )


def _order_key(label: str) -> int:
    return -1 if label == "infinite" else int(label)


def torus_collapse(cb: ChevalleyBasis, w: WeylElement, beta: tuple[int, ...], lam) -> bool:
    """Exact check that the orbit product h_{w(beta)}(lam)...h_{w^m(beta)}(lam) = 1.

    For eigenvalue-free w the operator 1 + w + ... + w^(m-1) vanishes, so the
    coroot orbit sums to zero and the product collapses for every root; this
    is what keeps all representatives torsion.
    """
    m = w.order()
    prod = cb.identity()
    current = tuple(beta)
    for _ in range(m):
        current = w.apply(current)
        prod = prod * cb.h(current, lam)
    return mx.is_identity(prod.matrix)


@dataclass(frozen=True)
class InfiniteWitness:
    """An explicit infinite-order representative over an eigenvalue-one element."""

    word: tuple[int, ...]
    beta: tuple[int, ...]
    orbit_sum: tuple
    element: GroupElement
    exponent: int
    certified: bool

    def as_dict(self) -> dict:
        return {
            "word": list(self.word),
            "beta": list(self.beta),
            "orbit_sum": [str(c) for c in self.orbit_sum],
            "exponent": self.exponent,
            "certified": self.certified,
        }


def infinite_witness(cb: ChevalleyBasis, w: WeylElement) -> InfiniteWitness:
    """Build n_0 * h_beta(2) with orbit_sum(w, beta) != 0 and certify its order.

    The certificate is torsion_order(g) coming back infinite: no power up to
    the exponent bound L(d) reaches the identity. Requires some root with
    nonzero orbit sum, which exists exactly when w has eigenvalue one
    (or w = 1).
    """
    beta = None
    osum = None
    for cand in cb.rs.roots:
        osum = w.orbit_sum(cand)
        if any(c != 0 for c in osum):
            beta = cand
            break
    if beta is None:
        raise ValueError("every orbit sum vanishes; no infinite representative exists")
    g = cb.lift_word(w.word) * cb.h(beta, 2)
    exponent = torsion_exponent_bound(cb.dimension)
    certified = isinstance(torsion_order(g), Infinity)
    return InfiniteWitness(
        word=tuple(w.word),
        beta=beta,
        orbit_sum=tuple(osum),
        element=g,
        exponent=exponent,
        certified=certified,
    )


@dataclass(frozen=True)
class ScanRow:
    word: tuple[int, ...]
    weyl_order: int
    criterion: bool
    det_minus_one: str
    verdict: str

    def as_dict(self) -> dict:
        return {
            "word": list(self.word),
            "weyl_order": self.weyl_order,
            "criterion": self.criterion,
            "det_minus_one": self.det_minus_one,
            "verdict": self.verdict,
        }


def full_scan(
    cb: ChevalleyBasis,
    max_group_size: int = 1152,
    torus_samples: int = 5,
    seed: int = 0,
) -> list[ScanRow]:
    """Classify every Weyl element: survey verdict or infinite-witness flag.

    Criterion-true elements get a sampled survey; criterion-false nontrivial
    elements get an explicit certified witness. The identity is reported as
    such (it is excluded on both sides).
    """
    rows: list[ScanRow] = []
    for w in enumerate_elements(cb.rs, max_group_size):
        det1 = str(w.det_minus_identity())
        if w.is_identity():
            rows.append(ScanRow((), 1, False, det1, "identity"))
            continue
        crit = criterion(w)
        if crit:
            rep = survey(cb, w, torus_samples, seed)
            verdict = rep.verdict
        else:
            wit = infinite_witness(cb, w)
            verdict = "infinite-witness-certified" if wit.certified else "witness-failed"
        rows.append(ScanRow(tuple(w.word), w.order(), crit, det1, verdict))
    return rows
