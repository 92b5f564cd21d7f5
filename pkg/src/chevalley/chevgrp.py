"""Chevalley basis construction and the adjoint-representation group over Q.

The basis is {e_gamma : gamma a root} plus the simple coroots {h_i}, with
integer structure constants N fixed by the extraspecial-pair convention:
every extraspecial pair gets the positive sign, all other constants follow
from the Jacobi identity and the zero-sum triple rule. Group elements are
exact rational matrices in the adjoint representation, built from the
one-parameter generators x_alpha(lam) = exp(lam * ad e_alpha).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from . import matrices as mx
from .exactnum import INFINITY, Infinity, Q, is_prime
from .rootsys import RootSystem

Coords = tuple[int, ...]
Atom = tuple  # ("x" | "m" | "h", root, scalar)


class GroupElement:
    """An adjoint-group element: exact matrix plus generator provenance."""

    __slots__ = ("matrix", "word")

    def __init__(self, matrix: mx.Matrix, word: tuple[Atom, ...] | None = ()):
        self.matrix = matrix
        self.word = word

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        word = None if self.word is None or other.word is None else self.word + other.word
        return GroupElement(mx.mat_mul(self.matrix, other.matrix), word)

    def inverse(self) -> "GroupElement":
        word = None
        if self.word is not None:
            word = tuple(_invert_atom(a) for a in reversed(self.word))
        return GroupElement(mx.inverse(self.matrix), word)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and mx.mat_eq(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def is_identity(self) -> bool:
        return mx.is_identity(self.matrix)

    def __repr__(self):
        return f"GroupElement(dim={len(self.matrix)}, word={self.word!r})"


def _invert_atom(atom: Atom) -> Atom:
    kind, root, lam = atom
    if kind in ("x", "m"):
        return (kind, root, -lam)
    if kind == "h":
        return (kind, root, 1 / Q(lam))
    raise ValueError(f"unknown atom kind {kind!r}")


@dataclass(frozen=True)
class CheckReport:
    """Pass/fail outcome with the first mismatch, if any."""

    ok: bool
    checked: int = 0
    detail: str = ""
    counterexample: tuple | None = None


@dataclass(frozen=True)
class RelationReport:
    """One relation family checked over seeded samples."""

    relation: str
    samples: int
    ok: bool
    detail: str = ""
    counterexample: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "relation": self.relation,
            "samples": self.samples,
            "ok": self.ok,
            "detail": self.detail,
            "counterexample": None if self.counterexample is None else [str(v) for v in self.counterexample],
        }


class ChevalleyBasis:
    """Structure constants and adjoint matrices for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.dimension = len(rs.roots) + rs.rank
        pos_desc = sorted(rs.positive_roots, key=lambda r: (-rs.height(r), r))
        neg_desc = sorted(
            (r for r in rs.roots if rs.height(r) < 0), key=lambda r: (-rs.height(r), r)
        )
        self.positive_count = len(pos_desc)
        self.cartan_start = self.positive_count
        self.basis_roots = tuple(pos_desc) + tuple(neg_desc)
        self._root_pos: dict[Coords, int] = {}
        for k, gamma in enumerate(pos_desc):
            self._root_pos[gamma] = k
        for k, gamma in enumerate(neg_desc):
            self._root_pos[gamma] = self.cartan_start + rs.rank + k
        self.structure = _structure_constants(rs)
        self._validate_structure()
        self._ad_cache: dict[Coords, mx.Matrix] = {}
        self._divided_cache: dict[Coords, tuple[mx.Matrix, ...]] = {}
        self._readout_cache: dict[Coords, tuple[int, int, int]] = {}
        self._m1_cache: dict[Coords, tuple[mx.Matrix, mx.Matrix]] = {}

    # -- structure-constant access --------------------------------------

    def n_constant(self, alpha: Sequence, beta: Sequence) -> int:
        """N_{alpha,beta}; zero when alpha + beta is not a root."""
        return self.structure.get((tuple(alpha), tuple(beta)), 0)

    def _validate_structure(self):
        rs = self.rs
        for alpha in rs.roots:
            for beta in rs.roots:
                s = tuple(a + b for a, b in zip(alpha, beta))
                if not rs.is_root(s):
                    continue
                n = self.n_constant(alpha, beta)
                p, _ = rs.root_string(alpha, beta)
                if abs(n) != p + 1:
                    raise AssertionError(f"|N{alpha},{beta}| = {abs(n)} != p+1 = {p + 1}")
                if n != -self.n_constant(beta, alpha):
                    raise AssertionError(f"antisymmetry fails at {alpha}, {beta}")
                if n != -self.n_constant(rs.negative(alpha), rs.negative(beta)):
                    raise AssertionError(f"opposite-pair rule fails at {alpha}, {beta}")

    # -- basis bookkeeping ----------------------------------------------

    def basis_label(self, k: int):
        if k < self.cartan_start or k >= self.cartan_start + self.rs.rank:
            return ("e", self.basis_roots[k if k < self.cartan_start else k - self.rs.rank])
        return ("h", k - self.cartan_start)

    def root_position(self, gamma: Sequence) -> int:
        return self._root_pos[tuple(gamma)]

    # -- adjoint operators ----------------------------------------------

    def ad_root(self, alpha: Sequence) -> mx.Matrix:
        """Integer matrix of ad e_alpha on the ordered basis."""
        alpha = tuple(alpha)
        cached = self._ad_cache.get(alpha)
        if cached is not None:
            return cached
        rs, d = self.rs, self.dimension
        cols: list[list[int]] = [[0] * d for _ in range(d)]  # cols[j][i] = entry (i, j)
        neg = rs.negative(alpha)
        for gamma, j in self._root_pos.items():
            if gamma == neg:
                for i, c in enumerate(rs.coroot_coords(alpha)):
                    cols[j][self.cartan_start + i] = c
                continue
            s = tuple(a + g for a, g in zip(alpha, gamma))
            if rs.is_root(s):
                cols[j][self._root_pos[s]] = self.structure[(alpha, gamma)]
        row_alpha = self._root_pos[alpha]
        for i in range(rs.rank):
            pairing = sum(c * rs.cartan[k][i] for k, c in enumerate(alpha))
            cols[self.cartan_start + i][row_alpha] = -pairing
        matrix = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
        self._ad_cache[alpha] = matrix
        return matrix

    def ad_cartan(self, i: int) -> mx.Matrix:
        """ad h_i is diagonal: <gamma, alpha_i> on each root line, zero on Cartan."""
        d = self.dimension
        diag = [0] * d
        for gamma, j in self._root_pos.items():
            diag[j] = sum(c * self.rs.cartan[k][i] for k, c in enumerate(gamma))
        return tuple(tuple(diag[i2] if i2 == j2 else 0 for j2 in range(d)) for i2 in range(d))

    def ad_basis(self, k: int) -> mx.Matrix:
        kind, payload = self.basis_label(k)
        return self.ad_root(payload) if kind == "e" else self.ad_cartan(payload)

    def divided_powers(self, alpha: Sequence) -> tuple[mx.Matrix, ...]:
        """(ad e_alpha)^k / k! for k = 0.., exact integer matrices, up to nilpotency."""
        alpha = tuple(alpha)
        cached = self._divided_cache.get(alpha)
        if cached is not None:
            return cached
        powers = [mx.identity(self.dimension), self.ad_root(alpha)]
        while not mx.is_zero(powers[-1]):
            k = len(powers)
            if k > 5:
                raise AssertionError("nilpotency index exceeded 5")
            raw = mx.mat_mul(powers[-1], powers[1])
            rows = []
            for row in raw:
                out = []
                for entry in row:
                    q, r = divmod(entry, k)
                    if r:
                        raise AssertionError(f"divided power not integral at k = {k}")
                    out.append(q)
                rows.append(tuple(out))
            powers.append(tuple(rows))
        result = tuple(powers[:-1])  # drop the zero matrix
        self._divided_cache[alpha] = result
        return result

    # -- generators ------------------------------------------------------

    def x(self, alpha: Sequence, lam) -> GroupElement:
        """x_alpha(lam) = sum_k lam^k (ad e_alpha)^k / k!."""
        alpha = tuple(alpha)
        lam = Q(lam)
        powers = self.divided_powers(alpha)
        rows = [list(row) for row in powers[0]]
        coeff = Q(1)
        for xk in powers[1:]:
            coeff *= lam
            if coeff == 0:
                break
            for i, row in enumerate(xk):
                ri = rows[i]
                for j, entry in enumerate(row):
                    if entry:
                        ri[j] = ri[j] + coeff * entry
        return GroupElement(tuple(tuple(r) for r in rows), (("x", alpha, lam),))

    def m(self, alpha: Sequence, lam) -> GroupElement:
        """m_alpha(lam) = x_alpha(lam) x_-alpha(-1/lam) x_alpha(lam); lam != 0."""
        alpha = tuple(alpha)
        lam = Q(lam)
        if lam == 0:
            raise ValueError("m requires an invertible parameter")
        neg = self.rs.negative(alpha)
        matrix = mx.mat_mul(
            mx.mat_mul(self.x(alpha, lam).matrix, self.x(neg, -1 / lam).matrix),
            self.x(alpha, lam).matrix,
        )
        return GroupElement(matrix, (("m", alpha, lam),))

    def _m_one(self, alpha: Coords) -> tuple[mx.Matrix, mx.Matrix]:
        cached = self._m1_cache.get(alpha)
        if cached is None:
            m1 = self.m(alpha, 1).matrix
            cached = (m1, self.m(alpha, -1).matrix)  # m(1)^-1 = m(-1)
            assert mx.is_identity(mx.mat_mul(cached[0], cached[1]))
            self._m1_cache[alpha] = cached
        return cached

    def h(self, alpha: Sequence, lam) -> GroupElement:
        """h_alpha(lam) = m_alpha(lam) m_alpha(1)^-1; diagonal on the weight basis."""
        alpha = tuple(alpha)
        lam = Q(lam)
        if lam == 0:
            raise ValueError("h requires an invertible parameter")
        m1_inv = self._m_one(alpha)[1]
        return GroupElement(mx.mat_mul(self.m(alpha, lam).matrix, m1_inv), (("h", alpha, lam),))

    def evaluate_word(self, word: Iterable[Atom]) -> GroupElement:
        """Multiply out provenance atoms; the base case for word/matrix agreement."""
        out = GroupElement(mx.identity(self.dimension), ())
        for kind, root, lam in word:
            factor = {"x": self.x, "m": self.m, "h": self.h}[kind](root, lam)
            out = out * factor
        return out

    def identity(self) -> GroupElement:
        return GroupElement(mx.identity(self.dimension), ())

    # -- parameter recovery ----------------------------------------------

    def readout(self, alpha: Sequence) -> tuple[int, int, int]:
        """(row, col, sign) of a +-1 entry of ad e_alpha that reads off lam."""
        alpha = tuple(alpha)
        cached = self._readout_cache.get(alpha)
        if cached is None:
            ad = self.ad_root(alpha)
            for i, row in enumerate(ad):
                done = False
                for j, entry in enumerate(row):
                    if entry in (1, -1):
                        cached = (i, j, entry)
                        done = True
                        break
                if done:
                    break
            if cached is None:
                raise AssertionError(f"no unit entry in ad e_{alpha}")
            self._readout_cache[alpha] = cached
        return cached

    def recover_parameter(self, alpha: Sequence, g: GroupElement):
        """The lam with g = x_alpha(lam); errors when g is outside that root group."""
        alpha = tuple(alpha)
        i, j, sign = self.readout(alpha)
        lam = Q(g.matrix[i][j]) * sign
        if not mx.mat_eq(g.matrix, self.x(alpha, lam).matrix):
            raise ValueError(f"element is not of the form x_{alpha}(lam)")
        return lam

    # -- relation checks -------------------------------------------------

    def weight_action_check(self, alpha: Sequence, lam) -> CheckReport:
        """h_alpha(lam) must act by lam^<gamma, alpha> on e_gamma and fix the Cartan."""
        alpha = tuple(alpha)
        lam = Q(lam)
        matrix = self.h(alpha, lam).matrix
        checked = 0
        for i in range(self.dimension):
            for j in range(self.dimension):
                if i == j:
                    if i >= self.cartan_start and i < self.cartan_start + self.rs.rank:
                        expected = Q(1)
                    else:
                        gamma = self.basis_label(i)[1]
                        exponent = self.rs.pair(gamma, alpha)
                        assert exponent.denominator == 1
                        expected = lam ** int(exponent)
                else:
                    expected = Q(0)
                if matrix[i][j] != expected:
                    return CheckReport(False, checked, "diagonal weight action violated", (alpha, str(lam), i, j))
                checked += 1
        return CheckReport(True, checked)

    def reflection_conjugation_check(self, alpha: Sequence, beta: Sequence, samples: Sequence[tuple]) -> tuple[CheckReport, int | None]:
        """m_alpha(lam) x_beta(mu) m_alpha(lam)^-1 = x_{s_alpha(beta)}(eps * lam^<s(beta),alpha> mu).

        Returns the report and the recovered constant sign eps, which must not
        depend on the sampled (lam, mu).
        """
        alpha, beta = tuple(alpha), tuple(beta)
        gamma = tuple(int(c) for c in self.rs.reflect(alpha, beta))
        exponent = self.rs.pair(gamma, alpha)
        assert exponent.denominator == 1
        exponent = int(exponent)
        sign: int | None = None
        checked = 0
        for lam, mu in samples:
            lam, mu = Q(lam), Q(mu)
            if lam == 0:
                continue
            g = self.m(alpha, lam)
            ginv = self.m(alpha, -lam)  # m(lam)^-1 = m(-lam)
            conj = (g * self.x(beta, mu) * ginv).matrix
            t = lam**exponent * mu
            if mu == 0:
                if not mx.is_identity(conj):
                    return CheckReport(False, checked, "conjugate of identity moved", (alpha, beta, str(lam), str(mu))), sign
                checked += 1
                continue
            if mx.mat_eq(conj, self.x(gamma, t).matrix):
                observed = 1
            elif mx.mat_eq(conj, self.x(gamma, -t).matrix):
                observed = -1
            else:
                return CheckReport(False, checked, "conjugate left the target root group", (alpha, beta, str(lam), str(mu))), sign
            if sign is None:
                sign = observed
            elif sign != observed:
                return CheckReport(False, checked, "sign varied across samples", (alpha, beta, str(lam), str(mu))), sign
            checked += 1
        return CheckReport(True, checked), sign

    def commutator_constants(self, alpha: Sequence, beta: Sequence) -> dict[tuple[int, int], int]:
        """Integer table C[(i, j)] with, for all lam and mu,

        x_alpha(lam)^-1 x_beta(mu)^-1 x_alpha(lam) x_beta(mu)
            = prod x_{i alpha + j beta}(C[i,j] lam^i mu^j)

        over the interval ordered by (i+j, i). Errors if no consistent
        integer table with |C| <= 3 fits the exact matrices.
        """
        alpha, beta = tuple(alpha), tuple(beta)
        interval = self.rs.interval(alpha, beta)
        probes = [(Q(1), Q(1)), (Q(2), Q(1)), (Q(1), Q(2)), (Q(3), Q(5)), (Q(1, 2), Q(1, 3))]
        fresh = [(Q(2), Q(3)), (Q(5, 7), Q(2))]
        if not interval:
            for lam, mu in probes + fresh:
                if not self._commutator(alpha, beta, lam, mu).is_identity():
                    raise ValueError("empty interval but nontrivial commutator")
            return {}
        table: dict[tuple[int, int], int] | None = None
        for lam, mu in probes:
            current = self._commutator(alpha, beta, lam, mu)
            candidate: dict[tuple[int, int], int] = {}
            for gamma, i, j in interval:
                r, c, sign = self.readout(gamma)
                t = Q(current.matrix[r][c]) * sign
                current = self.x(gamma, -t) * current
                ratio = t / (lam**i * mu**j)
                if ratio.denominator != 1 or abs(ratio) > 3:
                    raise ValueError(f"no integer constant with |C| <= 3 at {(i, j)}")
                candidate[(i, j)] = int(ratio)
            if not current.is_identity():
                raise ValueError("commutator is not a product over the interval")
            if table is None:
                table = candidate
            elif table != candidate:
                raise ValueError("constants varied across probe samples")
        assert table is not None
        for lam, mu in fresh:
            lhs = self._commutator(alpha, beta, lam, mu)
            rhs = self.identity()
            for gamma, i, j in interval:
                rhs = rhs * self.x(gamma, table[(i, j)] * lam**i * mu**j)
            if lhs != rhs:
                raise ValueError("recovered constants fail on fresh samples")
        return table

    def _commutator(self, alpha: Coords, beta: Coords, lam, mu) -> GroupElement:
        return self.x(alpha, -lam) * self.x(beta, -mu) * self.x(alpha, lam) * self.x(beta, mu)

    def lift_word(self, word: Sequence[int]) -> GroupElement:
        """The monomial lift of a Weyl word: product of m_{alpha_i}(1)."""
        out = self.identity()
        for i in word:
            alpha = self.rs.simple_root(i)
            out = out * GroupElement(self._m_one(alpha)[0], (("m", alpha, Q(1)),))
        return out

    def triangularity_check(self, g: GroupElement) -> bool:
        """Upper unitriangular in the descending-height basis order."""
        matrix = g.matrix
        for i, row in enumerate(matrix):
            if row[i] != 1:
                return False
            for j in range(i):
                if row[j] != 0:
                    return False
        return True

    # -- Lie-algebra level checks ---------------------------------------

    def bracket_column(self, k: int, k2: int) -> tuple:
        """Coordinates of [b_k, b_k2] in the ordered basis."""
        ad = self.ad_basis(k)
        return tuple(ad[i][k2] for i in range(self.dimension))

    def jacobi_scan(self) -> CheckReport:
        """ad is a Lie homomorphism: ad [b_i, b_j] = [ad b_i, ad b_j] for all pairs.

        Entry-wise this is the Jacobi identity over every basis triple.
        """
        d = self.dimension
        ads = [self.ad_basis(k) for k in range(d)]
        checked = 0
        for i in range(d):
            for j in range(i + 1, d):
                lhs = mx.mat_sub(mx.mat_mul(ads[i], ads[j]), mx.mat_mul(ads[j], ads[i]))
                coords = self.bracket_column(i, j)
                rows = [[0] * d for _ in range(d)]
                for k, c in enumerate(coords):
                    if c:
                        adk = ads[k]
                        for r in range(d):
                            row = adk[r]
                            target = rows[r]
                            for s in range(d):
                                if row[s]:
                                    target[s] += c * row[s]
                if not mx.mat_eq(lhs, tuple(tuple(r) for r in rows)):
                    return CheckReport(False, checked, "Jacobi identity failed", (i, j))
                checked += 1
        return CheckReport(True, checked)

    def __repr__(self):
        return f"ChevalleyBasis({self.rs.label}_{self.rs.rank}, dim={self.dimension})"


def build_basis(rs: RootSystem) -> ChevalleyBasis:
    return ChevalleyBasis(rs)


# -- structure constants ------------------------------------------------


def _structure_constants(rs: RootSystem) -> dict[tuple[Coords, Coords], int]:
    """All N_{alpha,beta} from extraspecial-pair signs.

    Positive special pairs are computed by ascending height; everything else
    reduces to them through antisymmetry, the opposite-pair rule, and the
    zero-sum triple rule.
    """
    positives = list(rs.positive_roots)  # ascending (height, lex)
    prec = {r: k for k, r in enumerate(positives)}
    pos_set = set(positives)

    def add(u: Coords, v: Coords) -> Coords:
        return tuple(a + b for a, b in zip(u, v))

    def sub(u: Coords, v: Coords) -> Coords:
        return tuple(a - b for a, b in zip(u, v))

    def length2(u: Coords):
        return rs.symmetric_form(u, u)

    n_pos: dict[tuple[Coords, Coords], int] = {}

    def lookup_pos(u: Coords, v: Coords) -> int:
        return n_pos[(u, v)] if prec[u] < prec[v] else -n_pos[(v, u)]

    def resolve(u: Coords, v: Coords) -> int:
        s = add(u, v)
        if not rs.is_root(s):
            return 0
        u_pos = rs.height(u) > 0
        v_pos = rs.height(v) > 0
        if u_pos and v_pos:
            return lookup_pos(u, v)
        if not u_pos and not v_pos:
            return -resolve(rs.negative(u), rs.negative(v))
        if not u_pos:
            return -resolve(v, u)
        # u positive, v negative; z = -(u+v) completes a zero-sum triple
        z = rs.negative(s)
        if rs.height(z) > 0:
            val = Q(length2(z)) * lookup_pos(z, u) / length2(v)
        else:
            nz = rs.negative(z)
            val = Q(length2(z)) * (-lookup_pos(rs.negative(v), nz)) / length2(u)
        assert val.denominator == 1, "triple rule produced a non-integer"
        return int(val)

    for gamma in positives:
        if rs.height(gamma) < 2:
            continue
        special = [
            (a, sub(gamma, a))
            for a in positives
            if sub(gamma, a) in pos_set and prec[a] < prec[sub(gamma, a)]
        ]
        if not special:
            continue
        special.sort(key=lambda pair: prec[pair[0]])
        a1, b1 = special[0]
        p, _ = rs.root_string(a1, b1)
        n_pos[(a1, b1)] = p + 1  # extraspecial pairs take the positive sign
        for a, b in special[1:]:
            term = Q(0)
            d1 = sub(b1, a)
            if rs.is_root(d1):
                term += resolve(b1, rs.negative(a)) * resolve(d1, a1)
            d2 = sub(a1, a)
            if rs.is_root(d2):
                term += resolve(rs.negative(a), a1) * resolve(d2, b1)
            val = Q(length2(gamma)) * term / (Q(length2(b)) * n_pos[(a1, b1)])
            assert val.denominator == 1, "special-pair recursion produced a non-integer"
            n_pos[(a, b)] = int(val)

    full: dict[tuple[Coords, Coords], int] = {}
    for alpha in rs.roots:
        for beta in rs.roots:
            if rs.is_root(add(alpha, beta)):
                full[(alpha, beta)] = resolve(alpha, beta)
    return full


# -- torsion orders -----------------------------------------------------


@lru_cache(maxsize=None)
def torsion_exponent_bound(d: int) -> int:
    """L(d) = lcm of all n whose Euler phi is at most d.

    A finite-order invertible rational d x d matrix has order dividing L(d),
    since its minimal polynomial is a product of cyclotomics of degree <= d.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    out = 1
    for n in range(1, 2 * d * d + 2):  # phi(n) >= sqrt(n/2) bounds the range
        if _euler_phi(n) <= d:
            out = out * n // gcd(out, n)
    return out


def _euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _reduction_prime(matrix: mx.Matrix) -> int:
    """A large prime dividing no entry denominator, so reduction is a ring map."""
    dens = {int(Q(x).denominator) for row in matrix for x in row}
    p = (1 << 61) - 1
    while True:
        if is_prime(p) and all(den % p for den in dens):
            return p
        p += 2


def _mod_matrix(matrix: mx.Matrix, p: int) -> list[list[int]]:
    out = []
    for row in matrix:
        new = []
        for x in row:
            q = Q(x)
            new.append(int(q.numerator) % p * pow(int(q.denominator), -1, p) % p)
        out.append(new)
    return out


def _mod_mul(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def _mod_pow_is_identity(matrix: mx.Matrix, k: int, p: int) -> bool:
    base = _mod_matrix(matrix, p)
    n = len(base)
    result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    while k:
        if k & 1:
            result = _mod_mul(result, base, p)
        k >>= 1
        if k:
            base = _mod_mul(base, base, p)
    return all(result[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def torsion_order(g: GroupElement | mx.Matrix) -> int | Infinity:
    """Exact multiplicative order of an invertible rational matrix, or INFINITY.

    Strategy: growth-guarded direct iteration for small orders; then a
    modular certificate (nonidentity image of g^L(d) under reduction mod a
    large prime proves g^L(d) != I, because reduction away from the
    denominators is a ring homomorphism); then the exact g^L(d) chain with
    divisor descent. Finite orders always divide L(d).
    """
    matrix = g.matrix if isinstance(g, GroupElement) else mx.freeze(g)
    d = len(matrix)
    if mx.det(matrix) == 0:
        raise ValueError("torsion order requires an invertible matrix")
    guard = max(512, 4 * mx.max_entry_bits(matrix) + 64)
    power = matrix
    for k in range(1, 65):
        if mx.is_identity(power):
            return k
        if mx.max_entry_bits(power) > guard:
            break
        power = mx.mat_mul(power, matrix)
    bound = torsion_exponent_bound(d)
    prime = _reduction_prime(matrix)
    if not _mod_pow_is_identity(matrix, bound, prime):
        return INFINITY
    if not mx.is_identity(mx.mat_pow(matrix, bound)):
        return INFINITY
    order = bound
    for p in _prime_factors(bound):
        while order % p == 0 and mx.is_identity(mx.mat_pow(matrix, order // p)):
            order //= p
    return order


def naive_torsion_order(g: GroupElement | mx.Matrix, limit: int = 5040) -> int | Infinity:
    """Oracle-style direct iteration up to limit; INFINITY past the limit."""
    matrix = g.matrix if isinstance(g, GroupElement) else mx.freeze(g)
    power = matrix
    for k in range(1, limit + 1):
        if mx.is_identity(power):
            return k
        power = mx.mat_mul(power, matrix)
    return INFINITY


# -- seeded relation suite ----------------------------------------------


def _sample_scalar(rng: random.Random, nonzero: bool = False):
    num = rng.randint(-9, 9)
    if nonzero:
        while num == 0:
            num = rng.randint(-9, 9)
    return Q(num, rng.choice((1, 1, 1, 2, 3, 4, 5)))


def relation_suite(cb: ChevalleyBasis, samples: int = 50, seed: int = 0) -> list[RelationReport]:
    """Run the six defining relation families over seeded samples, exactly."""
    rng = random.Random(seed)
    rs = cb.rs
    roots = rs.roots
    reports: list[RelationReport] = []

    ok, checked, ce = True, 0, None
    for _ in range(samples):
        alpha = rng.choice(roots)
        lam, mu = _sample_scalar(rng), _sample_scalar(rng)
        if cb.x(alpha, lam) * cb.x(alpha, mu) != cb.x(alpha, lam + mu):
            ok, ce = False, (alpha, str(lam), str(mu))
            break
        checked += 1
    reports.append(RelationReport("one-parameter-additivity", checked, ok, counterexample=ce))

    ok, checked, ce = True, 0, None
    for _ in range(samples):
        alpha = rng.choice(roots)
        lam, mu = _sample_scalar(rng, True), _sample_scalar(rng, True)
        if cb.h(alpha, lam) * cb.h(alpha, mu) != cb.h(alpha, lam * mu):
            ok, ce = False, (alpha, str(lam), str(mu))
            break
        checked += 1
    reports.append(RelationReport("torus-multiplicativity", checked, ok, counterexample=ce))

    ok, checked, ce = True, 0, None
    signs: dict[tuple[Coords, Coords], int] = {}
    for _ in range(samples):
        alpha, beta = rng.choice(roots), rng.choice(roots)
        lam, mu = _sample_scalar(rng, True), _sample_scalar(rng)
        report, sign = cb.reflection_conjugation_check(alpha, beta, [(lam, mu)])
        if not report.ok:
            ok, ce = False, report.counterexample
            break
        if sign is not None:
            prev = signs.setdefault((alpha, beta), sign)
            if prev != sign:
                ok, ce = False, (alpha, beta, "sign drift")
                break
        checked += 1
    reports.append(
        RelationReport(
            "reflection-conjugation", checked, ok, detail=f"signs recorded for {len(signs)} root pairs", counterexample=ce
        )
    )

    ok, checked, ce = True, 0, None
    tables: dict[tuple[Coords, Coords], dict] = {}
    if rs.rank == 1:
        # single root pair +-alpha has no interval; commutator must vanish
        alpha = roots[-1]
        for _ in range(samples):
            lam, mu = _sample_scalar(rng), _sample_scalar(rng)
            if not (cb.x(alpha, lam) * cb.x(alpha, mu) * cb.x(alpha, -lam) * cb.x(alpha, -mu)).is_identity():
                ok, ce = False, (alpha, str(lam), str(mu))
                break
            checked += 1
    else:
        for _ in range(samples):
            alpha = rng.choice(roots)
            beta = rng.choice(roots)
            while beta == alpha or beta == rs.negative(alpha):
                beta = rng.choice(roots)
            key = (alpha, beta)
            if key not in tables:
                tables[key] = cb.commutator_constants(alpha, beta)
            table = tables[key]
            lam, mu = _sample_scalar(rng, True), _sample_scalar(rng, True)
            lhs = cb._commutator(alpha, beta, lam, mu)
            rhs = cb.identity()
            for gamma, i, j in rs.interval(alpha, beta):
                rhs = rhs * cb.x(gamma, table[(i, j)] * lam**i * mu**j)
            if lhs != rhs:
                ok, ce = False, (alpha, beta, str(lam), str(mu))
                break
            checked += 1
    reports.append(
        RelationReport(
            "interval-commutator", checked, ok, detail=f"{len(tables)} constant tables recovered", counterexample=ce
        )
    )

    ok, checked, ce = True, 0, None
    for _ in range(samples):
        alpha, beta = rng.choice(roots), rng.choice(roots)
        gamma = tuple(int(c) for c in rs.reflect(alpha, beta))
        m1 = GroupElement(cb._m_one(alpha)[0], (("m", alpha, Q(1)),))
        m1_inv = GroupElement(cb._m_one(alpha)[1], (("m", alpha, Q(-1)),))
        if m1 * cb.h(beta, -1) * m1_inv != cb.h(gamma, -1):
            ok, ce = False, (alpha, beta)
            break
        checked += 1
    reports.append(RelationReport("lift-torus-conjugation", checked, ok, counterexample=ce))

    ok, checked, ce = True, 0, None
    for _ in range(samples):
        alpha = rng.choice(roots)
        lam = _sample_scalar(rng, True)
        report = cb.weight_action_check(alpha, lam)
        if not report.ok:
            ok, ce = False, report.counterexample
            break
        checked += 1
    reports.append(RelationReport("torus-weight-action", checked, ok, counterexample=ce))

    return reports


def structure_doc(cb: ChevalleyBasis) -> list[dict]:
    """JSON-safe dump of the nonzero structure constants, deterministically ordered."""
    items = sorted(cb.structure.items())
    return [{"alpha": list(a), "beta": list(b), "value": n} for (a, b), n in items]
