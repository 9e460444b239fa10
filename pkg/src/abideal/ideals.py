"""Abelian ideals of a Borel subalgebra, as sets of positive roots.

An abelian ideal is a set of positive roots closed under moving up in the
root poset and containing no pair (even equal) whose sum is a root.  The
direct enumeration walks positive roots from the highest down, including a
root only when everything above it is already in and no pairwise sum is a
root; closure under adding a single simple root is enough because saturated
chains connect any comparable pair.

Independently, each nonzero ideal arises exactly once from a pair
(phi, coset word): phi a long positive root, the word a minimal coset word
of phi's wall subgroup.  The translation between the two descriptions is
the affine word

    (0,) + minimal_word_to_theta(phi) + coset_word,

whose inversion roots all sit at level one; negating their finite parts
yields the ideal.  Construction functions cross-check one description
against the other and raise InvariantViolation when they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .affine import (
    AffineElement,
    AffineWord,
    _is_left_minimal,
    affine_inversion_set,
    coset_poincare,
    element_of_affine_word,
    in_2A,
    minimal_coset_reps,
    perp_generators,
)
from .qpoly import poly_degree, poly_eval_one
from .root_system import Q, Root, RootSystem, build, vadd, vneg, vsub, vsum
from .weyl import inversion_roots, minimal_word_to_theta, subgroup_positive_count


class InvariantViolation(AssertionError):
    """An internal consistency check failed; inputs were valid."""


def _root_sort_key(r: Root):
    return (sum(r), r)


@dataclass(frozen=True)
class AbelianIdeal:
    """An abelian ideal, stored as its positive roots sorted by height."""

    roots: Tuple[Root, ...]

    @property
    def dim(self) -> int:
        return len(self.roots)

    @property
    def root_set(self) -> FrozenSet[Root]:
        return frozenset(self.roots)

    def root_sum(self, rank: int) -> Tuple[int, ...]:
        return vsum(self.roots, rank)

    def sort_key(self, rank: int):
        return (self.dim, self.root_sum(rank), self.roots)

    def __contains__(self, root: Sequence[int]) -> bool:
        return tuple(root) in self.root_set

    def __le__(self, other: "AbelianIdeal") -> bool:
        return self.root_set <= other.root_set


def make_ideal(roots: Iterable[Root]) -> AbelianIdeal:
    return AbelianIdeal(tuple(sorted({tuple(r) for r in roots}, key=_root_sort_key)))


def is_abelian_ideal(rs: RootSystem, roots: Iterable[Root]) -> bool:
    """Direct check of the defining conditions."""
    chosen = {tuple(r) for r in roots}
    for psi in chosen:
        if not rs.is_positive_root(psi):
            return False
        for i in range(1, rs.rank + 1):
            up = vadd(psi, rs.simple_root(i))
            if rs.is_positive_root(up) and up not in chosen:
                return False
    listed = sorted(chosen)
    for a in range(len(listed)):
        for b in range(a, len(listed)):
            if rs.is_positive_root(vadd(listed[a], listed[b])):
                return False
    return True


def enumerate_all(rs: RootSystem) -> Tuple[AbelianIdeal, ...]:
    """Every abelian ideal, by descending-height inclusion search.

    Returned in the canonical order (dim, root sum, roots)."""
    roots = sorted(rs.positive_roots, key=lambda r: (-sum(r), r))
    n = len(roots)
    index = {r: k for k, r in enumerate(roots)}
    cover_mask = [0] * n
    conflict_mask = [0] * n
    for k, phi in enumerate(roots):
        cm = 0
        for i in range(1, rs.rank + 1):
            j = index.get(vadd(phi, rs.simple_root(i)))
            if j is not None:
                cm |= 1 << j
        cover_mask[k] = cm
        xm = 0
        for j, other in enumerate(roots):
            if j != k and rs.is_positive_root(vadd(phi, other)):
                xm |= 1 << j
        conflict_mask[k] = xm

    found: List[int] = []

    def walk(k: int, chosen: int) -> None:
        if k == n:
            found.append(chosen)
            return
        walk(k + 1, chosen)
        if (cover_mask[k] & ~chosen) == 0 and (conflict_mask[k] & chosen) == 0:
            walk(k + 1, chosen | (1 << k))

    walk(0, 0)
    ideals = [make_ideal(roots[k] for k in range(n) if mask >> k & 1) for mask in found]
    ideals.sort(key=lambda a: a.sort_key(rs.rank))
    return tuple(ideals)


# ----------------------------------------------------------------------
# the quadratic criterion

def kostant_value(rs: RootSystem, roots: Iterable[Root]) -> Q:
    """|rho + sum|^2 - |rho|^2; at most the number of roots, with equality
    exactly on abelian ideals."""
    sigma = vsum(list(roots), rs.rank)
    return 2 * rs.inner(rs.rho, sigma) + rs.inner(sigma, sigma)


class KostantScorer:
    """Integer-only evaluation of the quadratic criterion, for bulk tests.

    value(roots) * den equals numerator(roots); comparing numerator
    against len(roots) * den avoids Fraction arithmetic in hot loops.
    """

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        entries = [x for row in rs.gram for x in row]
        linear = [2 * rs.inner(rs.rho, e) for e in
                  (rs.simple_root(i) for i in range(1, rs.rank + 1))]
        self.den = lcm(*(x.denominator for x in entries + linear))
        self.gram_int = [[int(x * self.den) for x in row] for row in rs.gram]
        self.linear_int = [int(x * self.den) for x in linear]

    def numerator(self, roots: Sequence[Root]) -> int:
        sigma = [0] * self.rs.rank
        for r in roots:
            for i, c in enumerate(r):
                sigma[i] += c
        lin = sum(u * s for u, s in zip(self.linear_int, sigma))
        quad = 0
        for i, si in enumerate(sigma):
            if si:
                row = self.gram_int[i]
                quad += si * sum(row[j] * sj for j, sj in enumerate(sigma) if sj)
        return lin + quad

    def is_ideal_value(self, roots: Sequence[Root]) -> bool:
        return self.numerator(roots) == len(roots) * self.den

    def deficiency_sign(self, roots: Sequence[Root]) -> int:
        """Sign of len(roots) - value(roots)."""
        diff = len(roots) * self.den - self.numerator(roots)
        return (diff > 0) - (diff < 0)


# ----------------------------------------------------------------------
# construction from the affine parametrization

def _ideal_from_affine_word(rs: RootSystem, word: AffineWord) -> AbelianIdeal:
    inv = affine_inversion_set(rs, word)
    roots = []
    for beta in inv:
        if beta.level != 1:
            raise InvariantViolation(
                f"inversion {beta} of parameter word {word} is not at level one")
        psi = vneg(beta.finite)
        if not rs.is_positive_root(psi):
            raise InvariantViolation(
                f"inversion {beta} of parameter word {word} has bad finite part")
        roots.append(psi)
    ideal = make_ideal(roots)
    if ideal.dim != len(word):
        raise InvariantViolation(f"parameter word {word} lost inversions")
    if not is_abelian_ideal(rs, ideal.roots):
        raise InvariantViolation(f"parameter word {word} does not give an abelian ideal")
    point = element_of_affine_word(rs, word)(rs.rho)
    if point != vadd(rs.rho, ideal.root_sum(rs.rank)):
        raise InvariantViolation(f"rho point of {word} does not match the root sum")
    if not in_2A(rs, point):
        raise InvariantViolation(f"rho point of {word} leaves the doubled alcove")
    return ideal


def parameter_word(rs: RootSystem, phi: Root, coset_word: Sequence[int]) -> AffineWord:
    return (0,) + minimal_word_to_theta(rs, phi) + tuple(coset_word)


def from_param(rs: RootSystem, phi: Root, coset_word: Sequence[int] = ()) -> AbelianIdeal:
    """The ideal named by a long positive root and a minimal coset word."""
    phi = tuple(phi)
    if not (rs.is_positive_root(phi) and rs.is_long(phi)):
        raise ValueError(f"{phi} is not a long positive root")
    gens = set(perp_generators(rs, phi))
    coset_word = tuple(coset_word)
    for i in coset_word:
        if i not in gens:
            raise ValueError(f"letter {i} does not fix the walls through {phi}")
    affine_inversion_set(rs, coset_word)  # raises if not reduced
    if not _is_left_minimal(rs, coset_word, tuple(i for i in gens if i != 0)):
        raise ValueError(f"{coset_word} is not a minimal coset word for {phi}")
    return _ideal_from_affine_word(rs, parameter_word(rs, phi, coset_word))


def a_min(rs: RootSystem, phi: Root) -> AbelianIdeal:
    """Smallest ideal whose roots off theta's wall point at phi:
    theta together with theta minus each inversion of the word to theta."""
    phi = tuple(phi)
    w = minimal_word_to_theta(rs, phi)
    roots = [rs.theta] + [vsub(rs.theta, psi) for psi in inversion_roots(rs, w)]
    ideal = make_ideal(roots)
    if ideal.dim != 1 + len(w):
        raise InvariantViolation(f"repeated roots in the minimal ideal of {phi}")
    return ideal


def a_min_plus(rs: RootSystem, phi: Root) -> AbelianIdeal:
    """One step above a_min: defined when phi is orthogonal to theta."""
    phi = tuple(phi)
    if rs.inner(rs.theta, phi) != 0:
        raise ValueError(f"{phi} is not orthogonal to the highest root")
    return from_param(rs, phi, (0,))


def a_max(rs: RootSystem, phi: Root) -> AbelianIdeal:
    """Largest ideal in phi's family: the unique longest coset word."""
    phi = tuple(phi)
    reps = minimal_coset_reps(rs, phi)
    top = max(len(w) for w in reps)
    longest = [w for w in reps if len(w) == top]
    if len(longest) != 1:
        raise InvariantViolation(f"no unique longest coset word for {phi}")
    return from_param(rs, phi, longest[0])


# ----------------------------------------------------------------------
# the catalog: every ideal with its parameter

@dataclass
class CatalogEntry:
    ideal: AbelianIdeal
    phi: Optional[Root]
    coset_word: AffineWord
    word: AffineWord
    element: AffineElement


class IdealCatalog:
    """All abelian ideals of one type, each with its unique parameter."""

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        oracle = enumerate_all(rs)
        by_roots: Dict[FrozenSet[Root], int] = {a.root_set: k for k, a in enumerate(oracle)}
        if len(by_roots) != len(oracle):
            raise InvariantViolation("duplicate ideals in enumeration")

        entries: List[Optional[CatalogEntry]] = [None] * len(oracle)
        zero = make_ideal(())
        entries[by_roots[zero.root_set]] = CatalogEntry(
            zero, None, (), (), element_of_affine_word(rs, ()))

        for phi in rs.long_positive_roots():
            for rep in minimal_coset_reps(rs, phi):
                ideal = from_param(rs, phi, rep)
                k = by_roots.get(ideal.root_set)
                if k is None:
                    raise InvariantViolation(
                        f"parameter ({phi}, {rep}) built a set outside the enumeration")
                if entries[k] is not None:
                    raise InvariantViolation(
                        f"ideal {ideal.roots} parametrized twice: "
                        f"({entries[k].phi}, {entries[k].coset_word}) and ({phi}, {rep})")
                word = parameter_word(rs, phi, rep)
                entries[k] = CatalogEntry(ideal, phi, rep, word,
                                          element_of_affine_word(rs, word))

        missing = [oracle[k] for k, e in enumerate(entries) if e is None]
        if missing:
            raise InvariantViolation(f"{len(missing)} ideals have no parameter")
        self.entries: Tuple[CatalogEntry, ...] = tuple(entries)  # type: ignore[arg-type]
        self.ideals: Tuple[AbelianIdeal, ...] = tuple(e.ideal for e in self.entries)
        self.index: Dict[FrozenSet[Root], int] = by_roots

    def __len__(self) -> int:
        return len(self.entries)

    def entry_of(self, ideal: AbelianIdeal) -> CatalogEntry:
        k = self.index.get(ideal.root_set)
        if k is None:
            raise ValueError("not an abelian ideal of this system")
        return self.entries[k]


@lru_cache(maxsize=None)
def catalog(label: str) -> IdealCatalog:
    return IdealCatalog(build(label))


def catalog_of(rs: RootSystem) -> IdealCatalog:
    return catalog(str(rs.simple_type))


# ----------------------------------------------------------------------
# structure maps

def not_perp_theta(rs: RootSystem, ideal: AbelianIdeal) -> AbelianIdeal:
    """The sub-ideal of roots not orthogonal to the highest root."""
    kept = [r for r in ideal.roots if rs.inner(r, rs.theta) != 0]
    out = make_ideal(kept)
    if not is_abelian_ideal(rs, out.roots):
        raise InvariantViolation("roots off theta's wall do not form an ideal")
    return out


@lru_cache(maxsize=None)
def _a_min_table(label: str) -> Dict[FrozenSet[Root], Root]:
    rs = build(label)
    table: Dict[FrozenSet[Root], Root] = {}
    for phi in rs.long_positive_roots():
        key = a_min(rs, phi).root_set
        if key in table:
            raise InvariantViolation("two long roots share a minimal ideal")
        table[key] = phi
    return table


def associated_long_root(rs: RootSystem, ideal: AbelianIdeal) -> Root:
    """The long positive root whose minimal ideal matches the roots of the
    ideal that are off theta's wall."""
    if ideal.dim == 0:
        raise ValueError("the zero ideal has no associated long root")
    key = not_perp_theta(rs, ideal).root_set
    table = _a_min_table(str(rs.simple_type))
    phi = table.get(key)
    if phi is None:
        raise InvariantViolation("no long root matches this ideal's theta-visible part")
    return phi


def maximal_ideals(rs: RootSystem) -> Tuple[AbelianIdeal, ...]:
    cat = catalog_of(rs)
    out = []
    for a in cat.ideals:
        if not any(a.root_set < b.root_set for b in cat.ideals):
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class MaxDimensionReport:
    value: int
    multiplicity: int            # number of ideals attaining the maximum
    witnesses: Tuple[int, ...]   # long simple nodes whose family reaches it
    decompositions: Tuple[Tuple[int, int, int, int], ...]
    # per witness: (g, n_hat, n_perp, value) with value = g - 1 + n_hat - n_perp


def long_simple_nodes(rs: RootSystem) -> Tuple[int, ...]:
    return tuple(i for i in range(1, rs.rank + 1) if rs.is_long(rs.simple_root(i)))


def max_dimension(rs: RootSystem) -> MaxDimensionReport:
    cat = catalog_of(rs)
    value = max(a.dim for a in cat.ideals)
    multiplicity = sum(1 for a in cat.ideals if a.dim == value)
    g = rs.dual_coxeter_number
    witnesses = []
    decomps = []
    for i in long_simple_nodes(rs):
        alpha = rs.simple_root(i)
        p = coset_poincare(rs, alpha)
        finite_nodes = tuple(j for j in perp_generators(rs, alpha) if j != 0)
        n_perp = subgroup_positive_count(rs, finite_nodes)
        n_hat = n_perp + poly_degree(p)
        if g - 1 + poly_degree(p) == value:
            witnesses.append(i)
            decomps.append((g, n_hat, n_perp, g - 1 + n_hat - n_perp))
    if not witnesses:
        raise InvariantViolation("no long simple node explains the maximal dimension")
    return MaxDimensionReport(value, multiplicity, tuple(witnesses), tuple(decomps))


# ----------------------------------------------------------------------
# roots that no abelian ideal contains

def forbidden_roots(rs: RootSystem) -> Tuple[Root, ...]:
    """Positive roots phi for which theta - 2*phi is a nonempty sum of
    positive roots; exactly the roots missing from every ideal."""
    roots = rs.positive_roots
    memo: Dict[Tuple[Root, int], bool] = {}

    def reachable(vec: Root, imax: int) -> bool:
        if all(c == 0 for c in vec):
            return True
        key = (vec, imax)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = False
        for j in range(imax, -1, -1):
            r = roots[j]
            rest = vsub(vec, r)
            if all(c >= 0 for c in rest) and reachable(rest, j):
                out = True
                break
        memo[key] = out
        return out

    out = []
    for phi in roots:
        target = vsub(rs.theta, tuple(2 * c for c in phi))
        if any(c < 0 for c in target) or all(c == 0 for c in target):
            continue
        if reachable(target, len(roots) - 1):
            out.append(phi)
    return tuple(sorted(out, key=_root_sort_key))


# ----------------------------------------------------------------------
# sum formulas

def affine_adjacency(rs: RootSystem) -> Dict[int, Tuple[int, ...]]:
    from .affine import _affine_cartan_entry

    nodes = range(0, rs.rank + 1)
    return {
        a: tuple(b for b in nodes if b != a and _affine_cartan_entry(rs, a, b) != 0)
        for a in nodes
    }


def projection_node(rs: RootSystem, phi: Root) -> Optional[int]:
    """Support node nearest to node 0 in the extended diagram; None when
    the nearest node is not unique (the extended diagram of A_l is a cycle)."""
    adj = affine_adjacency(rs)
    dist = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    support = [i + 1 for i, c in enumerate(phi) if c]
    best = min(dist[i] for i in support)
    nearest = [i for i in support if dist[i] == best]
    if len(nearest) != 1:
        return None
    return nearest[0]


@dataclass(frozen=True)
class SumFormulaReport:
    type_label: str
    first_total: int                 # sum of coset counts over long positive roots
    first_expected: int              # 2^rank - 1
    per_node: Optional[Tuple[int, ...]]   # r_i counts by node, tree types only
    second_total: int                # sum of n_i * coset count over long simple nodes
    second_expected: int             # 2^(rank-1)

    @property
    def first_holds(self) -> bool:
        return self.first_total == self.first_expected

    @property
    def second_holds(self) -> bool:
        return self.second_total == self.second_expected


def sum_formula_report(rs: RootSystem) -> SumFormulaReport:
    counts: Dict[Root, int] = {}
    for phi in rs.long_positive_roots():
        counts[phi] = poly_eval_one(coset_poincare(rs, phi))
    first_total = sum(counts.values())

    per_node: Optional[Tuple[int, ...]] = None
    if rs.simple_type.letter != "A":
        r = [0] * rs.rank
        for phi in rs.long_positive_roots():
            node = projection_node(rs, phi)
            if node is None:
                raise InvariantViolation(f"no unique nearest support node for {phi}")
            node_count = poly_eval_one(coset_poincare(rs, rs.simple_root(node)))
            if counts[phi] != node_count:
                raise InvariantViolation(
                    f"coset count of {phi} differs from its projection node {node}")
            r[node - 1] += 1
        per_node = tuple(r)

    second_total = 0
    for i in long_simple_nodes(rs):
        second_total += rs.marks[i - 1] * counts[rs.simple_root(i)]

    return SumFormulaReport(
        str(rs.simple_type),
        first_total,
        2 ** rs.rank - 1,
        per_node,
        second_total,
        2 ** (rs.rank - 1),
    )
