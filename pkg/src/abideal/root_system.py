"""Finite irreducible root systems over exact rationals.

Everything is coordinatized in the simple-root basis: a root is a tuple of
ints, a weight a tuple of Fractions.  Node indices are 1-based in the public
API (0 is reserved for the extra affine reflection elsewhere); coordinate
tuples are ordinary 0-based Python data.

The invariant inner product is normalized so the highest root theta has
squared length 1/g, where g is the dual Coxeter number.  That single global
rescaling puts the classical identities into denominator-free shape:

    (rho+theta | rho+theta) - (rho | rho) = 1
    1 / (theta | theta) = g
    (rho | rho) = dim / 24            with dim = rank + #roots
    sum_{all roots phi} (phi | phi) = rank
    (theta | theta) + sum_i n_i (alpha_i | alpha_i) = 1

The constructor only *uses* the first normalization (it fixes the scale);
the rest are theorems and live in the test suite and the `verify` command.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

Q = Fraction

Root = Tuple[int, ...]
WeightVector = Tuple[Q, ...]

_RANK_BOUNDS = {"A": (1, 11), "B": (2, 8), "C": (2, 8), "D": (4, 8), "E": (6, 8), "F": (4, 4), "G": (2, 2)}

_TYPE_RE = re.compile(r"^([A-G])([0-9]{1,2})$")


@dataclass(frozen=True, order=True)
class SimpleType:
    """A Cartan-Killing label such as A3, D5 or E8."""

    letter: str
    rank: int

    def __post_init__(self) -> None:
        bounds = _RANK_BOUNDS.get(self.letter)
        if bounds is None:
            raise ValueError(f"unknown family {self.letter!r}")
        lo, hi = bounds
        if not lo <= self.rank <= hi:
            raise ValueError(f"{self.letter}{self.rank} is not supported (rank must be in [{lo}, {hi}])")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = _TYPE_RE.match(text.strip())
        if m is None:
            raise ValueError(f"cannot parse type {text!r}; expected e.g. A3, C5, E8")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"


def supported_types(max_rank: int = 8) -> Tuple[SimpleType, ...]:
    """All types the verification suite covers, in a stable order."""
    out: List[SimpleType] = []
    for letter in "ABCDEFG":
        lo, hi = _RANK_BOUNDS[letter]
        for rank in range(lo, min(hi, max_rank) + 1):
            out.append(SimpleType(letter, rank))
    return tuple(out)


def _chain_edges(rank: int) -> List[Tuple[int, int]]:
    return [(i, i + 1) for i in range(1, rank)]


def _cartan_matrix(st: SimpleType) -> Tuple[Tuple[int, ...], ...]:
    """Entries a[i][j] = <alpha_j, alpha_i-check> (0-based storage)."""
    l = st.rank
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def set_edge(i: int, j: int, down: int = -1, up: int = -1) -> None:
        # 1-based nodes; a_ij = down, a_ji = up
        a[i - 1][j - 1] = down
        a[j - 1][i - 1] = up

    if st.letter == "A":
        for i, j in _chain_edges(l):
            set_edge(i, j)
    elif st.letter == "B":
        # alpha_l is the short root
        for i, j in _chain_edges(l - 1):
            set_edge(i, j)
        set_edge(l - 1, l, down=-1, up=-2)
    elif st.letter == "C":
        # alpha_l is the long root
        for i, j in _chain_edges(l - 1):
            set_edge(i, j)
        set_edge(l - 1, l, down=-2, up=-1)
    elif st.letter == "D":
        for i, j in _chain_edges(l - 2):
            set_edge(i, j)
        set_edge(l - 2, l - 1)
        set_edge(l - 2, l)
    elif st.letter == "E":
        edges = {
            6: [(5, 3), (3, 2), (2, 4), (4, 6), (2, 1)],
            7: [(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (6, 7)],
            8: [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 8)],
        }[l]
        for i, j in edges:
            set_edge(i, j)
    elif st.letter == "F":
        set_edge(1, 2)
        set_edge(2, 3, down=-1, up=-2)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        set_edge(3, 4)
    elif st.letter == "G":
        set_edge(1, 2, down=-3, up=-1)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in a)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> Tuple[Root, ...]:
    """Closure of the simple roots under root-string addition, by height."""
    l = len(cartan)
    simples = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
    roots = set(simples)
    layer = list(simples)
    while layer:
        nxt: List[Root] = []
        for phi in layer:
            for j in range(l):
                pairing = sum(c * cartan[j][k] for k, c in enumerate(phi) if c)
                p = 0
                lower = list(phi)
                while True:
                    lower[j] -= 1
                    if tuple(lower) not in roots:
                        break
                    p += 1
                if p - pairing > 0:
                    up = list(phi)
                    up[j] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        layer = nxt
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def _invert(matrix: Sequence[Sequence[int]]) -> Tuple[Tuple[Q, ...], ...]:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[Q(matrix[i][j]) for j in range(n)] + [Q(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Minimal positive integers d with d_i a_ij = d_j a_ji."""
    l = len(cartan)
    d: List[Q] = [Q(0)] * l
    d[0] = Q(1)
    todo = [0]
    seen = {0}
    while todo:
        i = todo.pop()
        for j in range(l):
            if j not in seen and cartan[i][j]:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                seen.add(j)
                todo.append(j)
    if len(seen) != l:
        raise ValueError("Cartan matrix is not connected")
    mult = lcm(*(x.denominator for x in d))
    ints = [int(x * mult) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


class RootSystem:
    """One finite irreducible root system with its normalized inner product.

    Instances are built once per type via :func:`build` and treated as
    immutable.  All rational data is exact.
    """

    def __init__(self, simple_type: SimpleType) -> None:
        self.simple_type = simple_type
        l = simple_type.rank
        self.rank = l
        self.cartan = _cartan_matrix(simple_type)
        self.positive_roots = _positive_roots(self.cartan)
        self.positive_root_set: FrozenSet[Root] = frozenset(self.positive_roots)
        self.num_positive = len(self.positive_roots)
        self.dimension = l + 2 * self.num_positive  # rank + #roots

        self.theta = self.positive_roots[-1]
        if self.num_positive > 1 and sum(self.positive_roots[-2]) == sum(self.theta):
            raise AssertionError("highest root is not unique")
        self.marks = self.theta
        self.coxeter_number = sum(self.theta) + 1

        hist: Dict[int, int] = {}
        for r in self.positive_roots:
            h = sum(r)
            hist[h] = hist.get(h, 0) + 1
        self.exponents = tuple(sorted(sum(1 for v in hist.values() if v >= i) for i in range(1, l + 1)))

        inv_cartan = _invert(self.cartan)
        # fundamental_weights[i] solves <w, alpha_j-check> = delta_{ij} (0-based here)
        self.fundamental_weights: Tuple[WeightVector, ...] = tuple(
            tuple(inv_cartan[r][c] for r in range(l)) for c in range(l)
        )
        self.rho: WeightVector = tuple(sum(col) for col in zip(*self.fundamental_weights))

        d = _symmetrizer(self.cartan)
        sym = [[d[i] * self.cartan[i][j] for j in range(l)] for i in range(l)]
        for i in range(l):
            for j in range(l):
                if sym[i][j] != sym[j][i]:
                    raise AssertionError("symmetrizer failed")

        def raw_inner(x: Sequence, y: Sequence) -> Q:
            return Q(sum(x[i] * sym[i][j] * y[j] for i in range(l) for j in range(l) if x[i] and sym[i][j]))

        pairing_rho_theta = 2 * raw_inner(self.rho, self.theta) / raw_inner(self.theta, self.theta)
        if pairing_rho_theta.denominator != 1:
            raise AssertionError("<rho, theta-check> is not an integer")
        self.dual_coxeter_number = int(pairing_rho_theta) + 1

        scale = Q(1, self.dual_coxeter_number) / raw_inner(self.theta, self.theta)
        self.gram: Tuple[Tuple[Q, ...], ...] = tuple(
            tuple(scale * sym[i][j] for j in range(l)) for i in range(l)
        )

        self.coweights: Tuple[WeightVector, ...] = tuple(
            tuple(c / self.norm2(self.simple_root(i + 1)) for c in w)
            for i, w in enumerate(self.fundamental_weights)
        )

        theta_norm = self.norm2(self.theta)
        self._long_positive = tuple(r for r in self.positive_roots if self.norm2(r) == theta_norm)

    # ------------------------------------------------------------------
    # basic queries

    def simple_root(self, i: int) -> Root:
        """The i-th simple root, 1-based."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"node index {i} out of range 1..{self.rank}")
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def simple_roots(self) -> Tuple[Root, ...]:
        return tuple(self.simple_root(i) for i in range(1, self.rank + 1))

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.positive_root_set

    def is_root(self, v: Sequence[int]) -> bool:
        t = tuple(v)
        return t in self.positive_root_set or tuple(-c for c in t) in self.positive_root_set

    def height(self, phi: Sequence[int]) -> int:
        return sum(phi)

    def inner(self, x: Sequence, y: Sequence) -> Q:
        """Normalized invariant form (x|y)."""
        total = Q(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.gram[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * row[j] * yj
        return total

    def norm2(self, x: Sequence) -> Q:
        return self.inner(x, x)

    def coroot_pairing(self, lam: Sequence, phi: Sequence[int]) -> Q:
        """<lam, phi-check> = 2 (lam|phi) / (phi|phi)."""
        return 2 * self.inner(lam, phi) / self.norm2(phi)

    def simple_coroot_pairing(self, phi: Sequence[int], j: int) -> int:
        """<phi, alpha_j-check> for integer coordinates, computed Gram-free."""
        row = self.cartan[j - 1]
        return sum(c * row[k] for k, c in enumerate(phi) if c)

    def is_long(self, phi: Sequence[int]) -> bool:
        return self.norm2(phi) == self.norm2(self.theta)

    def long_positive_roots(self) -> Tuple[Root, ...]:
        return self._long_positive

    def level(self, lam: Sequence) -> Q:
        """<lam, theta-check> = 2 g (lam|theta) under this normalization."""
        return self.coroot_pairing(lam, self.theta)

    def length_to_theta(self, phi: Sequence[int]) -> Q:
        """Distance functional 2 (theta - phi | rho) / (theta|theta).

        Vanishes exactly at theta; takes nonnegative integer values on long
        positive roots, where it equals the minimal number of simple
        reflections carrying phi to theta.
        """
        diff = tuple(t - p for t, p in zip(self.theta, phi))
        return 2 * self.inner(diff, self.rho) * self.dual_coxeter_number

    def __repr__(self) -> str:
        return f"RootSystem({self.simple_type})"


@lru_cache(maxsize=None)
def _build_cached(label: str) -> RootSystem:
    return RootSystem(SimpleType.parse(label))


def build(type_or_label) -> RootSystem:
    """Construct (and cache) the root system for a type label like "E6"."""
    if isinstance(type_or_label, RootSystem):
        return type_or_label
    if isinstance(type_or_label, SimpleType):
        return _build_cached(str(type_or_label))
    return _build_cached(str(SimpleType.parse(str(type_or_label))))


# ----------------------------------------------------------------------
# small exact-vector helpers shared by the other modules

def vadd(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence, y: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def vneg(x: Sequence) -> tuple:
    return tuple(-a for a in x)


def vscale(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def vsum(vectors: Iterable[Sequence], rank: int) -> tuple:
    total = [0] * rank
    for v in vectors:
        for i, a in enumerate(v):
            total[i] += a
    return tuple(total)
