"""In-process handlers mapping request models to response models.

The HTTP layer and the CLI both call these; the CLI can also replay them
over HTTP against a running service. Domain violations raise ValueError,
which the service maps to 400 and the CLI to a usage exit.
"""

from __future__ import annotations

from functools import lru_cache

from .. import congruence as cong
from .. import rgdcheck, torsion
from ..chevgrp import ChevalleyBasis, build_basis, relation_suite
from ..exactnum import Infinity, Q, Valuation, valuate
from ..rootsys import RootSystem, build
from ..weyl import coxeter_element, enumerate_elements, from_word
from . import schemas as sc


@lru_cache(maxsize=32)
def _system(label: str, rank: int) -> RootSystem:
    return build(label, rank)


@lru_cache(maxsize=32)
def _basis(label: str, rank: int) -> ChevalleyBasis:
    return build_basis(_system(label, rank))


def _fmt_val(x) -> str:
    return "infinite" if isinstance(x, Infinity) else str(int(x))


def roots_op(req: sc.RootsRequest) -> sc.RootsResponse:
    rs = _system(req.type_label, req.rank)
    return sc.RootsResponse(
        type_label=rs.label,
        rank=rs.rank,
        dimension=len(rs.roots) + rs.rank,
        root_count=len(rs.roots),
        positive_count=len(rs.positive_roots),
        weyl_order=rs.weyl_order(),
        coxeter_number=rs.coxeter_number(),
        cartan=[list(row) for row in rs.cartan],
        roots=[sc.RootEntry(coords=list(r), height=rs.height(r)) for r in rs.roots],
    )


def weyl_scan_op(req: sc.WeylScanRequest) -> sc.WeylScanResponse:
    rs = _system(req.type_label, req.rank)
    rows = [
        sc.WeylRow(
            word=list(w.word),
            order=w.order(),
            det_minus_one=str(w.det_minus_identity()),
            eigenvalue_one=w.has_eigenvalue_one(),
        )
        for w in enumerate_elements(rs, req.max_size)
    ]
    return sc.WeylScanResponse(
        type_label=rs.label, rank=rs.rank, size=len(rows), rows=rows,
    )


def relations_op(req: sc.RelationsRequest) -> sc.RelationsResponse:
    cb = _basis(req.type_label, req.rank)
    reports = relation_suite(cb, req.samples, req.seed)
    rows = [
        sc.RelationRow(
            relation=r.relation,
            samples=r.samples,
            ok=r.ok,
            detail=r.detail,
            counterexample=None if r.counterexample is None else [str(v) for v in r.counterexample],
        )
        for r in reports
    ]
    return sc.RelationsResponse(
        seed=req.seed,
        type_label=req.type_label,
        rank=req.rank,
        samples=req.samples,
        all_ok=all(r.ok for r in rows),
        rows=rows,
    )


def _axiom_rows(reports) -> list[sc.AxiomRow]:
    return [
        sc.AxiomRow(
            axiom=r.axiom,
            samples=r.samples,
            status=r.status,
            counterexample=r.counterexample,
            detail=r.detail,
        )
        for r in reports
    ]


def rgd_check_op(req: sc.RgdCheckRequest) -> sc.RgdCheckResponse:
    cb = _basis(req.type_label, req.rank)
    reports = rgdcheck.check_rgd(cb, req.budget, seed=req.seed, prime=req.prime)
    rows = _axiom_rows(reports)
    return sc.RgdCheckResponse(
        seed=req.seed,
        type_label=req.type_label,
        rank=req.rank,
        prime=req.prime,
        budget=req.budget,
        all_ok=all(r.ok for r in reports),
        rows=rows,
    )


def vrgd_check_op(req: sc.VrgdCheckRequest) -> sc.VrgdCheckResponse:
    cb = _basis(req.type_label, req.rank)
    rgv = rgdcheck.RootGroupValuation(cb, Valuation(req.prime))
    reports = rgdcheck.check_vrgd(rgv, req.budget, seed=req.seed)
    rows = _axiom_rows(reports)
    return sc.VrgdCheckResponse(
        seed=req.seed,
        type_label=req.type_label,
        rank=req.rank,
        prime=req.prime,
        budget=req.budget,
        all_ok=all(r.ok for r in reports),
        rows=rows,
    )


def torsion_op(req: sc.TorsionRequest) -> sc.TorsionResponse:
    cb = _basis(req.type_label, req.rank)
    if req.word:
        w = from_word(cb.rs, req.word)
    else:
        w = coxeter_element(cb.rs)
    rep = torsion.survey(cb, w, req.samples, req.seed)
    # a survey passes when the proof identity held and, for eigenvalue-free
    # words, the orders came back uniform; eigenvalue-one words may surface
    # infinite representatives as a finding, not a failure
    ok = rep.power_identity_ok and (rep.eigenvalue_one or rep.verdict == "all-finite-uniform")
    return sc.TorsionResponse(
        seed=req.seed,
        type_label=req.type_label,
        rank=req.rank,
        word=list(rep.word),
        weyl_order=rep.weyl_order,
        eigenvalue_one=rep.eigenvalue_one,
        orders=[sc.OrderCount(order=o, count=c) for o, c in rep.orders],
        verdict=rep.verdict,
        samples=rep.samples,
        power_identity_ok=rep.power_identity_ok,
        ok=ok,
    )


_SCAN_OK = {"identity", "all-finite-uniform", "infinite-witness-certified"}


def torsion_scan_op(req: sc.TorsionScanRequest) -> sc.TorsionScanResponse:
    cb = _basis(req.type_label, req.rank)
    rows = torsion.full_scan(cb, req.max_size, req.samples, req.seed)
    return sc.TorsionScanResponse(
        seed=req.seed,
        type_label=req.type_label,
        rank=req.rank,
        size=len(rows),
        all_ok=all(r.verdict in _SCAN_OK for r in rows),
        rows=[
            sc.TorsionScanRow(
                word=list(r.word),
                weyl_order=r.weyl_order,
                criterion=r.criterion,
                det_minus_one=r.det_minus_one,
                verdict=r.verdict,
            )
            for r in rows
        ],
    )


def congruence_probe_op(req: sc.CongruenceProbeRequest) -> sc.CongruenceProbeResponse:
    cb = _basis(req.type_label, req.rank)
    ctx = cong.CongruenceContext(cb, req.prime, req.modulus, strict=req.strict)
    rep = cong.torsionfree_probe(ctx, req.words, req.max_len, req.seed)
    # in the strict regime any torsion is a failure; the exploratory q = 2
    # regime records the verdict without failing
    ok = rep.ok or not req.strict
    return sc.CongruenceProbeResponse(
        seed=req.seed,
        type_label=req.type_label,
        rank=req.rank,
        prime=req.prime,
        modulus=req.modulus,
        strict=req.strict,
        words=rep.words,
        max_len=rep.max_word_len,
        checked=rep.checked,
        skipped_identity=rep.skipped_identity,
        verdict=rep.verdict,
        violating_word=rep.violating_word,
        violating_order=rep.violating_order,
        ok=ok,
    )


def approx_op(req: sc.ApproxRequest) -> sc.ApproxResponse:
    label = req.type_label or "A"
    rank = req.rank or 1
    cb = _basis(label, rank)
    # approximation only needs gcd(q, p) = 1; the q > 2 hypothesis is for
    # the torsionfree results, so the strict guard stays off here
    ctx = cong.CongruenceContext(cb, req.prime, req.modulus, strict=False)
    lam = Q(req.lam)
    mu = cong.padic_approximate(ctx, lam, req.precision)
    nu_diff = valuate(ctx.valuation, lam - mu)
    generator = None
    if req.type_label is not None:
        if req.root_index > cb.rs.rank:
            raise ValueError(f"root index {req.root_index} exceeds rank {cb.rs.rank}")
        alpha = cb.rs.simple_root(req.root_index)
        rep = cong.approximate_generator(ctx, alpha, lam, req.precision)
        generator = sc.ApproxGeneratorPart(
            type_label=label,
            rank=rank,
            alpha=list(alpha),
            target=rep.target,
            achieved=_fmt_val(rep.achieved),
        )
    return sc.ApproxResponse(
        prime=req.prime,
        modulus=req.modulus,
        lam=str(lam),
        mu=str(mu),
        nu_diff=_fmt_val(nu_diff),
        precision=req.precision,
        generator=generator,
    )


def response_ok(resp) -> bool:
    """Whether a response reports every check passing (exit-code predicate)."""
    for attr in ("all_ok", "ok"):
        if hasattr(resp, attr):
            return bool(getattr(resp, attr))
    return True
