"""Root group datum axioms, plain and valued."""

import pytest

from chevalley.exactnum import INFINITY, Q, Valuation, valuate
from chevalley.rgdcheck import (
    RootGroupValuation,
    check_rgd,
    check_vrgd,
    filtration_member,
)

from conftest import cached_basis

RGD_NAMES = ("RGD0", "RGD1", "RGD2", "RGD3", "RGD4")
VRGD_NAMES = ("VRGD0", "VRGD1", "VRGD2", "VRGD3", "VRGD4")

SMALL_MATRIX = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]


def make_rgv(label, rank, p):
    return RootGroupValuation(cached_basis(label, rank), Valuation(p))


class TestCheckRgd:
    @pytest.mark.parametrize("label,rank", SMALL_MATRIX)
    @pytest.mark.parametrize("prime", [2, 5])
    def test_all_axioms_pass(self, label, rank, prime):
        cb = cached_basis(label, rank)
        reports = check_rgd(cb, sample_budget=8, seed=0, prime=prime)
        assert tuple(r.axiom for r in reports) == RGD_NAMES
        for report in reports:
            assert report.ok, report.as_dict()
            assert report.counterexample is None

    def test_rgd4_is_by_construction(self):
        cb = cached_basis("A", 2)
        report = check_rgd(cb, sample_budget=4)[-1]
        assert report.axiom == "RGD4"
        assert report.status == "by-construction"
        assert report.samples == 0
        assert report.ok

    def test_rgd0_covers_every_root(self):
        cb = cached_basis("B", 2)
        report = check_rgd(cb, sample_budget=4)[0]
        assert report.samples == len(cb.rs.roots)

    def test_deterministic_per_seed(self):
        cb = cached_basis("B", 2)
        first = [r.as_dict() for r in check_rgd(cb, 6, seed=4, prime=5)]
        second = [r.as_dict() for r in check_rgd(cb, 6, seed=4, prime=5)]
        assert first == second


class TestPhi:
    def test_frozen_values(self):
        rgv = make_rgv("A", 2, 2)
        a1 = rgv.cb.rs.simple_root(1)
        assert rgv.phi(a1, rgv.cb.x(a1, 8)) == 3
        assert rgv.phi(a1, rgv.cb.x(a1, Q(3, 4))) == -2
        assert rgv.phi(a1, rgv.cb.identity()) is INFINITY

    def test_matches_parameter_valuation(self):
        rgv = make_rgv("B", 2, 5)
        for alpha in rgv.cb.rs.roots:
            for lam in (Q(25), Q(1, 5), Q(7), Q(-3, 10)):
                assert rgv.phi(alpha, rgv.cb.x(alpha, lam)) == valuate(rgv.v, lam)

    def test_rejects_elements_outside_root_group(self):
        rgv = make_rgv("A", 2, 2)
        a1, a2 = rgv.cb.rs.simple_root(1), rgv.cb.rs.simple_root(2)
        with pytest.raises(ValueError):
            rgv.phi(a1, rgv.cb.x(a2, 1))


class TestFiltration:
    def test_membership_boundary(self):
        rgv = make_rgv("A", 2, 2)
        a1 = rgv.cb.rs.simple_root(1)
        assert filtration_member(rgv, a1, 3, rgv.cb.x(a1, 8))
        assert not filtration_member(rgv, a1, 3, rgv.cb.x(a1, 4))

    def test_identity_in_every_level(self):
        rgv = make_rgv("A", 2, 2)
        a1 = rgv.cb.rs.simple_root(1)
        for k in range(-5, 6):
            assert filtration_member(rgv, a1, k, rgv.cb.identity())

    def test_levels_nest(self):
        rgv = make_rgv("A", 1, 3)
        alpha = (1,)
        for e in range(-3, 4):
            g = rgv.cb.x(alpha, Q(3) ** e)
            for k in range(-4, 5):
                if filtration_member(rgv, alpha, k + 1, g):
                    assert filtration_member(rgv, alpha, k, g)


class TestCheckVrgd:
    @pytest.mark.parametrize("label,rank", SMALL_MATRIX)
    @pytest.mark.parametrize("prime", [2, 5])
    def test_all_axioms_pass(self, label, rank, prime):
        rgv = make_rgv(label, rank, prime)
        reports = check_vrgd(rgv, sample_budget=8, seed=0)
        assert tuple(r.axiom for r in reports) == VRGD_NAMES
        for report in reports:
            assert report.ok, report.as_dict()
            assert report.status == "pass"

    def test_deterministic_per_seed(self):
        rgv = make_rgv("B", 2, 2)
        first = [r.as_dict() for r in check_vrgd(rgv, 6, seed=7)]
        second = [r.as_dict() for r in check_vrgd(rgv, 6, seed=7)]
        assert first == second

    def test_displacement_formula_by_hand(self):
        # conjugating x_beta(mu) by m_alpha(lam)^-1 moves the valuation by
        # <refl(alpha, beta), alpha> * nu(lam), independent of mu
        rgv = make_rgv("A", 2, 2)
        cb = rgv.cb
        a1, a2 = cb.rs.simple_root(1), cb.rs.simple_root(2)
        target = cb.rs.reflect(a1, a2)
        expected = cb.rs.pair(target, a1)
        for lam in (Q(2), Q(4), Q(1, 2)):
            m_u = cb.m(a1, lam)
            shift = expected * valuate(rgv.v, lam)
            for mu in (Q(1), Q(6), Q(3, 8)):
                conj = m_u.inverse() * cb.x(a2, mu) * m_u
                assert rgv.phi(target, conj) == valuate(rgv.v, mu) + shift

    def test_self_displacement_by_hand(self):
        # beta = alpha lands in the opposite root group at -2 nu(lam)
        rgv = make_rgv("A", 1, 2)
        cb = rgv.cb
        alpha = (1,)
        neg = cb.rs.negative(alpha)
        for lam in (Q(2), Q(1, 4)):
            m_u = cb.m(alpha, lam)
            conj = m_u.inverse() * cb.x(alpha, Q(3)) * m_u
            expected = valuate(rgv.v, Q(3)) - 2 * valuate(rgv.v, lam)
            assert rgv.phi(neg, conj) == expected


class TestAxiomReport:
    def test_ok_semantics(self):
        from chevalley.rgdcheck import AxiomReport

        assert AxiomReport("X", 1, "pass").ok
        assert AxiomReport("X", 0, "by-construction").ok
        assert not AxiomReport("X", 1, "fail", {"k": 1}).ok

    def test_as_dict_fields(self):
        from chevalley.rgdcheck import AxiomReport

        doc = AxiomReport("VRGD2", 5, "pass", detail="shifted bound").as_dict()
        assert doc == {
            "axiom": "VRGD2",
            "samples": 5,
            "status": "pass",
            "counterexample": None,
            "detail": "shifted bound",
        }
