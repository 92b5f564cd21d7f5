"""Exact rational scalars and p-adic valuations.

All arithmetic in this package runs over arbitrary-precision rationals.
The scalar type Q is gmpy2.mpq when available (much faster big-integer
arithmetic) and fractions.Fraction otherwise; both keep values in lowest
terms with a positive denominator and a canonical zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

try:
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq

    _HAVE_GMPY2 = False

RationalLike = Union[int, str, "_mpq"]


def Q(value: RationalLike = 0, den: int | None = None):
    """Build an exact rational. Floats are rejected, never rounded."""
    if isinstance(value, float) or isinstance(den, float):
        raise TypeError("floating-point input is not accepted; pass int, str, or rational")
    if den is None:
        return _mpq(value)
    return _mpq(value, den)


ZERO = Q(0)
ONE = Q(1)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the witness set is exact below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Infinity:
    """Order sentinel for the valuation of zero: above every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("chevalley-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, Infinity)

    def __gt__(self, other):
        return not isinstance(other, Infinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("INFINITY has no negative")


INFINITY = Infinity()

ValuationValue = Union[int, Infinity]


@dataclass(frozen=True)
class Valuation:
    """The p-adic valuation on Q for a fixed prime p."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"valuation prime must be prime, got {self.p}")


def _int_valuation(n: int, p: int) -> int:
    # n != 0; counts the exact power of p dividing n
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuate(v: Valuation, x: RationalLike) -> ValuationValue:
    """nu_p(x); INFINITY for x = 0."""
    q = Q(x)
    if q == 0:
        return INFINITY
    return _int_valuation(int(q.numerator), v.p) - _int_valuation(int(q.denominator), v.p)


def in_z_inv_p(v: Valuation, x: RationalLike) -> bool:
    """Membership in Z[1/p]: the reduced denominator is a power of p."""
    den = int(Q(x).denominator)
    while den % v.p == 0:
        den //= v.p
    return den == 1


def reduce_mod_q(v: Valuation, x: RationalLike, q: int) -> int:
    """Reduce x = a/p^k in Z[1/p] modulo q coprime to p, via a * (p^-1 mod q)^k.

    This is the ring map Z[1/p] -> Z/q; the result is the least nonnegative
    residue. Errors if x is not in Z[1/p] or gcd(q, p) > 1.
    """
    if q < 1:
        raise ValueError(f"modulus must be positive, got {q}")
    xq = Q(x)
    if not in_z_inv_p(v, xq):
        raise ValueError(f"{xq} is not in Z[1/{v.p}]")
    den = int(xq.denominator)
    k = _int_valuation(den, v.p) if den > 1 else 0
    try:
        pinv = pow(v.p, -1, q) if q > 1 else 0
    except ValueError as exc:
        raise ValueError(f"gcd({q}, {v.p}) > 1; reduction undefined") from exc
    return int(xq.numerator) * pow(pinv, k, q) % q if q > 1 else 0


@dataclass(frozen=True)
class AxiomCheckResult:
    """Outcome of a sampled valuation-axiom check."""

    ok: bool
    checked: int
    axiom: str = ""
    counterexample: tuple | None = None


def check_valuation_axioms(v: Valuation, samples: Sequence[tuple]) -> AxiomCheckResult:
    """Check multiplicativity, the ultrametric bound, integrality, and symmetry.

    Each sample is a pair (lam, mu). The ultrametric form is
    nu(lam + mu) >= min(nu(lam), nu(mu)), with equality enforced when the
    two valuations differ.
    """
    checked = 0
    for lam, mu in samples:
        a, b = Q(lam), Q(mu)
        va, vb = valuate(v, a), valuate(v, b)
        # (V1) nu(ab) = nu(a) + nu(b)
        if valuate(v, a * b) != (INFINITY if INFINITY in (va, vb) else va + vb):
            return AxiomCheckResult(False, checked, "V1", (str(a), str(b)))
        # (V2) ultrametric: nu(a+b) >= min, with equality for distinct valuations
        vs = valuate(v, a + b)
        lo = min(va, vb, key=_val_key)
        if _val_key(vs) < _val_key(lo):
            return AxiomCheckResult(False, checked, "V2", (str(a), str(b)))
        if va != vb and vs != lo:
            return AxiomCheckResult(False, checked, "V2", (str(a), str(b)))
        # (V3) integers have nonnegative valuation
        for c in (a, b):
            if c.denominator == 1 and c != 0 and valuate(v, c) < 0:
                return AxiomCheckResult(False, checked, "V3", (str(c),))
        # (V4) nu(-a) = nu(a)
        if valuate(v, -a) != va or valuate(v, -b) != vb:
            return AxiomCheckResult(False, checked, "V4", (str(a), str(b)))
        checked += 1
    return AxiomCheckResult(True, checked)


def _val_key(x: ValuationValue):
    # orders ints below INFINITY for min/comparison purposes
    return (1, 0) if isinstance(x, Infinity) else (0, x)


def min_valuation(values: Iterable[ValuationValue]) -> ValuationValue:
    """Minimum of extended valuation values (INFINITY for an empty iterable)."""
    best: ValuationValue = INFINITY
    for x in values:
        if _val_key(x) < _val_key(best):
            best = x
    return best
