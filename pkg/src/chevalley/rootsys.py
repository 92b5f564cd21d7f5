"""Root systems of types A-G from Cartan matrix data.

Roots are stored as integer coordinate tuples over the simple-root basis,
sorted by (height, coordinates) so every downstream enumeration is
deterministic. The symmetric form {.,.} comes from the Cartan matrix with
short roots normalized to squared length 2 in the non-simply-laced types
(long roots then have length 4, or 6 in G_2) and all roots at length 2
otherwise.
"""

from __future__ import annotations

from typing import Sequence

from .exactnum import Q

Coords = tuple[int, ...]

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}

WEYL_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}

COXETER_NUMBERS = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n,
    "C": lambda n: 2 * n,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 12,
    "G": lambda n: 6,
}

_RANK_DOMAIN = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def cartan_matrix(label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [i][j] = <alpha_i, alpha_j> (Bourbaki numbering)."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, rij=-1, rji=-1):
        a[i][j] = rij
        a[j][i] = rji

    if label in ("A", "B", "C"):
        for i in range(rank - 1):
            link(i, i + 1)
        if label == "B" and rank >= 2:
            # alpha_rank is short: <long, short> = -2
            link(rank - 2, rank - 1, -2, -1)
        if label == "C" and rank >= 2:
            # alpha_rank is long: <short, long> = -1, <long, short> = -2
            link(rank - 2, rank - 1, -1, -2)
    elif label == "D":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 3, rank - 1)
    elif label == "E":
        # chain 1-3-4-5-...-rank with node 2 attached to node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for i, j in zip(chain, chain[1:]):
            link(i, j)
        link(1, 3)
    elif label == "F":
        link(0, 1)
        link(1, 2, -2, -1)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(2, 3)
    elif label == "G":
        link(0, 1, -1, -3)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in a)


def _half_lengths(label: str, rank: int) -> tuple[int, ...]:
    """d_i = {alpha_i, alpha_i} / 2 per simple root."""
    if label == "B":
        return tuple([2] * (rank - 1) + [1])
    if label == "C":
        return tuple([1] * (rank - 1) + [2])
    if label == "F":
        return (2, 2, 1, 1)
    if label == "G":
        return (1, 3)
    return tuple([1] * rank)


class RootSystem:
    """An irreducible root system with deterministic root ordering."""

    def __init__(self, label: str, rank: int):
        if label not in ROOT_COUNTS:
            raise ValueError(f"unknown type {label!r}; expected one of A-G")
        if not isinstance(rank, int) or isinstance(rank, bool) or not _RANK_DOMAIN[label](rank):
            raise ValueError(f"rank {rank} is not valid for type {label}")
        self.label = label
        self.rank = rank
        self.cartan = cartan_matrix(label, rank)
        self.half_lengths = _half_lengths(label, rank)
        # {alpha_i, alpha_j} = <alpha_i, alpha_j> * d_j; symmetric by construction
        self.gram = tuple(
            tuple(Q(self.cartan[i][j] * self.half_lengths[j]) for j in range(rank)) for i in range(rank)
        )
        for i in range(rank):
            for j in range(rank):
                assert self.gram[i][j] == self.gram[j][i], "Cartan data is not symmetrizable"
        self.roots = self._generate_roots()
        self._index = {r: k for k, r in enumerate(self.roots)}
        self.positive_roots = tuple(r for r in self.roots if self.height(r) > 0)
        expected = ROOT_COUNTS[label](rank)
        if len(self.roots) != expected:
            raise AssertionError(
                f"{label}_{rank}: generated {len(self.roots)} roots, classification says {expected}"
            )

    def _generate_roots(self) -> tuple[Coords, ...]:
        simples = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(self.rank):
                    image = self._reflect_simple(r, i)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        roots = sorted(seen, key=lambda r: (sum(r), r))
        for r in roots:
            pos, neg = any(c > 0 for c in r), any(c < 0 for c in r)
            assert not (pos and neg), f"mixed-sign root coordinates {r}"
        return tuple(roots)

    def _reflect_simple(self, coords: Coords, i: int) -> Coords:
        pairing = sum(c * self.cartan[j][i] for j, c in enumerate(coords))
        return tuple(c - pairing if j == i else c for j, c in enumerate(coords))

    # -- basic queries ---------------------------------------------------

    def is_root(self, v: Sequence) -> bool:
        return tuple(v) in self._index

    def root_index(self, v: Sequence) -> int:
        return self._index[tuple(v)]

    def simple_root(self, i: int) -> Coords:
        """i is 1-based, matching word notation."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple root index {i} out of range 1..{self.rank}")
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    @staticmethod
    def height(v: Sequence) -> int:
        return sum(v)

    def negative(self, v: Sequence) -> Coords:
        return tuple(-c for c in v)

    def symmetric_form(self, v: Sequence, w: Sequence):
        """{v, w}: the Weyl-invariant symmetric bilinear form."""
        total = Q(0)
        for i, vi in enumerate(v):
            if vi:
                row = self.gram[i]
                total += vi * sum(wj * row[j] for j, wj in enumerate(w) if wj)
        return total

    def pair(self, v: Sequence, w: Sequence):
        """<v, w> = 2{v, w}/{w, w}; errors when w = 0."""
        ww = self.symmetric_form(w, w)
        if ww == 0:
            raise ValueError("pairing against the zero vector is undefined")
        return 2 * self.symmetric_form(v, w) / ww

    def reflect(self, alpha: Sequence, v: Sequence) -> tuple:
        """s_alpha(v) = v - <v, alpha> alpha; alpha must be a root."""
        alpha = tuple(alpha)
        if not self.is_root(alpha):
            raise ValueError(f"{alpha} is not a root")
        c = self.pair(v, alpha)
        return tuple(x - c * a for x, a in zip(v, alpha))

    def root_string(self, alpha: Sequence, beta: Sequence) -> tuple[int, int]:
        """(p, q) with beta - p*alpha .. beta + q*alpha the alpha-string through beta."""
        alpha, beta = tuple(alpha), tuple(beta)
        p = 0
        while self.is_root(tuple(b - (p + 1) * a for a, b in zip(alpha, beta))):
            p += 1
        q = 0
        while self.is_root(tuple(b + (q + 1) * a for a, b in zip(alpha, beta))):
            q += 1
        return p, q

    def interval(self, alpha: Sequence, beta: Sequence) -> tuple[tuple[Coords, int, int], ...]:
        """Roots i*alpha + j*beta with i, j >= 1, as (root, i, j) ordered by (i+j, i).

        Defined for alpha != +-beta; the (i, j) grid up to 4 covers every type.
        """
        alpha, beta = tuple(alpha), tuple(beta)
        if not (self.is_root(alpha) and self.is_root(beta)):
            raise ValueError("interval endpoints must be roots")
        if alpha == beta or alpha == self.negative(beta):
            raise ValueError("interval is undefined for alpha = +-beta")
        found = []
        for i in range(1, 5):
            for j in range(1, 5):
                cand = tuple(i * a + j * b for a, b in zip(alpha, beta))
                if self.is_root(cand):
                    found.append((cand, i, j))
        found.sort(key=lambda t: (t[1] + t[2], t[1]))
        return tuple(found)

    def coroot_coords(self, alpha: Sequence) -> Coords:
        """alpha-vee in the simple-coroot basis; integral for every root."""
        alpha = tuple(alpha)
        if not self.is_root(alpha):
            raise ValueError(f"{alpha} is not a root")
        d_alpha = self.symmetric_form(alpha, alpha) / 2
        out = []
        for i, c in enumerate(alpha):
            val = Q(c) * self.half_lengths[i] / d_alpha
            if val.denominator != 1:
                raise AssertionError(f"non-integral coroot coordinate for {alpha}")
            out.append(int(val))
        return tuple(out)

    def weyl_order(self) -> int:
        return WEYL_ORDERS[self.label](self.rank)

    def coxeter_number(self) -> int:
        return COXETER_NUMBERS[self.label](self.rank)

    def to_doc(self) -> dict:
        return {
            "type": self.label,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "roots": [list(r) for r in self.roots],
            "positive_count": len(self.positive_roots),
        }

    def __repr__(self):
        return f"RootSystem({self.label}_{self.rank}, {len(self.roots)} roots)"


def build(label: str, rank: int) -> RootSystem:
    """Construct the root system for a valid classification entry."""
    return RootSystem(label, rank)
