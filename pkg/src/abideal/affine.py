"""Affine Weyl machinery in the rho-scaled picture.

Letters 0..rank name the affine generators; letter 0 reflects in the wall
where the pairing with theta-check equals the dual Coxeter number g, so

    s_0(x) = s_theta(x) + g * theta,      s_0(rho) = rho + theta.

With this scaling every generator preserves the lattice spanned by the
simple roots, so affine group elements are integer matrices plus integer
translation vectors, and equality of elements is equality of those pairs.

Affine roots are (finite root, level) pairs; the extra simple root is
(-theta, 1).  Positive means level > 0, or level 0 with positive finite
part.

The fundamental alcove A has vertices 0 and covee_i / n_i (n_i the marks);
the doubled alcove 2A is cut out by dominance together with (x|theta) <= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .qpoly import Poly, poly, poly_divexact, poly_prod
from .root_system import Q, Root, RootSystem, WeightVector, build, vadd, vscale
from .weyl import (
    classify_components,
    identity_matrix,
    mat_mul,
    mat_vec,
    reflection_matrix,
    subgroup_poincare,
)

AffineWord = Tuple[int, ...]


@dataclass(frozen=True)
class AffineRoot:
    finite: Root
    level: int

    @property
    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return sum(self.finite) > 0 and all(c >= 0 for c in self.finite)

    def __str__(self) -> str:
        return f"({self.finite}, {self.level})"


@dataclass(frozen=True)
class AffineElement:
    """x -> matrix @ x + shift, with integer entries throughout."""

    matrix: Tuple[Tuple[int, ...], ...]
    shift: Tuple[int, ...]

    def __call__(self, vec: Sequence) -> tuple:
        return vadd(mat_vec(self.matrix, vec), self.shift)

    def compose(self, other: "AffineElement") -> "AffineElement":
        return AffineElement(
            mat_mul(self.matrix, other.matrix),
            vadd(mat_vec(self.matrix, other.shift), self.shift),
        )

    def is_identity(self) -> bool:
        n = len(self.shift)
        return self.shift == (0,) * n and self.matrix == identity_matrix(n)


@lru_cache(maxsize=None)
def _affine_data(label: str):
    """Per-type cache: theta-check pairings, s_theta matrix, generator elements."""
    rs = build(label)
    l = rs.rank
    theta_pairings = []
    for j in range(1, l + 1):
        c = rs.coroot_pairing(rs.simple_root(j), rs.theta)
        if c.denominator != 1:
            raise AssertionError("nonintegral pairing with theta-check")
        theta_pairings.append(int(c))
    # s_theta: column j is alpha_j - <alpha_j, theta-check> theta
    s_theta = tuple(
        tuple((1 if r == j else 0) - theta_pairings[j] * rs.theta[r] for j in range(l))
        for r in range(l)
    )
    g = rs.dual_coxeter_number
    gens: Dict[int, AffineElement] = {
        0: AffineElement(s_theta, tuple(g * c for c in rs.theta))
    }
    zero = (0,) * l
    for i in range(1, l + 1):
        gens[i] = AffineElement(reflection_matrix(rs, i), zero)
    return tuple(theta_pairings), gens


def theta_check_pairing(rs: RootSystem, vec: Sequence) -> Q:
    return rs.coroot_pairing(vec, rs.theta)


def affine_generator(rs: RootSystem, i: int) -> AffineElement:
    _, gens = _affine_data(str(rs.simple_type))
    if i not in gens:
        raise ValueError(f"letter {i} out of range 0..{rs.rank}")
    return gens[i]


def element_of_affine_word(rs: RootSystem, word: Sequence[int]) -> AffineElement:
    out = AffineElement(identity_matrix(rs.rank), (0,) * rs.rank)
    for i in word:
        out = out.compose(affine_generator(rs, i))
    return out


def inverse_word(word: Sequence[int]) -> AffineWord:
    return tuple(reversed(word))


def apply_affine(rs: RootSystem, word_or_element, vec: Sequence) -> tuple:
    if isinstance(word_or_element, AffineElement):
        return word_or_element(vec)
    return element_of_affine_word(rs, word_or_element)(vec)


def affine_simple_root(rs: RootSystem, i: int) -> AffineRoot:
    if i == 0:
        return AffineRoot(tuple(-c for c in rs.theta), 1)
    return AffineRoot(rs.simple_root(i), 0)


def reflect_affine_root(rs: RootSystem, i: int, beta: AffineRoot) -> AffineRoot:
    """Action of generator i on affine roots."""
    if i == 0:
        pairings, gens = _affine_data(str(rs.simple_type))
        c = sum(pairings[j] * beta.finite[j] for j in range(rs.rank) if beta.finite[j])
        return AffineRoot(mat_vec(gens[0].matrix, beta.finite), beta.level + c)
    if not 1 <= i <= rs.rank:
        raise ValueError(f"letter {i} out of range 0..{rs.rank}")
    row = rs.cartan[i - 1]
    c = sum(row[j] * beta.finite[j] for j in range(rs.rank) if beta.finite[j])
    out = list(beta.finite)
    out[i - 1] -= c
    return AffineRoot(tuple(out), beta.level)


def apply_word_to_affine_root(rs: RootSystem, word: Sequence[int], beta: AffineRoot) -> AffineRoot:
    for i in reversed(word):
        beta = reflect_affine_root(rs, i, beta)
    return beta


def affine_inversion_set(rs: RootSystem, word: Sequence[int]) -> Tuple[AffineRoot, ...]:
    """One positive affine root per letter of a reduced word; errors on repeats."""
    seen: List[AffineRoot] = []
    prefix: List[int] = []
    for i in word:
        beta = apply_word_to_affine_root(rs, prefix, affine_simple_root(rs, i))
        if beta in seen:
            raise ValueError(f"affine word {tuple(word)} is not reduced: {beta} repeats")
        if not beta.is_positive:
            raise ValueError(f"affine word {tuple(word)} is not reduced: {beta} is negative")
        seen.append(beta)
        prefix.append(i)
    return tuple(seen)


def affine_length(rs: RootSystem, word: Sequence[int]) -> int:
    return len(affine_inversion_set(rs, word))


# ----------------------------------------------------------------------
# alcoves

def fundamental_alcove_vertices(rs: RootSystem) -> Tuple[WeightVector, ...]:
    """Vertex i is covee_i / n_i; vertex 0 is the origin."""
    zero = tuple(Q(0) for _ in range(rs.rank))
    verts = [zero]
    for i in range(rs.rank):
        verts.append(vscale(Q(1, rs.marks[i]), rs.coweights[i]))
    return tuple(verts)


def alcove_vertices(rs: RootSystem, word_or_element) -> Tuple[WeightVector, ...]:
    """Images of the fundamental alcove's vertices; index = vertex type."""
    el = word_or_element if isinstance(word_or_element, AffineElement) else element_of_affine_word(rs, word_or_element)
    return tuple(el(v) for v in fundamental_alcove_vertices(rs))


def in_2A(rs: RootSystem, vec: Sequence) -> bool:
    """Dominant and on the origin side of the doubled theta-wall."""
    for i in range(1, rs.rank + 1):
        if rs.inner(rs.simple_root(i), vec) < 0:
            return False
    return rs.inner(vec, rs.theta) <= 1


# ----------------------------------------------------------------------
# the subgroup fixing a root's walls, and its minimal coset words

def perp_generators(rs: RootSystem, phi: Root) -> Tuple[int, ...]:
    """Letters whose mirror contains phi: finite ones orthogonal to phi,
    plus 0 when theta is orthogonal to phi."""
    out = [0] if rs.inner(rs.theta, phi) == 0 else []
    for i in range(1, rs.rank + 1):
        if rs.inner(rs.simple_root(i), phi) == 0:
            out.append(i)
    return tuple(sorted(out))


def _is_left_minimal(rs: RootSystem, word: Sequence[int], finite_gens: Sequence[int]) -> bool:
    rev = inverse_word(word)
    for f in finite_gens:
        if not apply_word_to_affine_root(rs, rev, affine_simple_root(rs, f)).is_positive:
            return False
    return True


def minimal_coset_reps(rs: RootSystem, phi: Root) -> Tuple[AffineWord, ...]:
    """Minimal-length coset words for the finite part of the wall subgroup.

    Walk the subgroup generated by all perpendicular letters, extending on
    the right only when the length grows, and keep the words no finite
    perpendicular letter can shorten from the left.  Minimal words are
    closed under prefixes, so a layered walk finds them all.  Ordered by
    (length, word).
    """
    return _minimal_coset_reps_cached(str(rs.simple_type), tuple(phi))


@lru_cache(maxsize=None)
def _minimal_coset_reps_cached(label: str, phi: Root) -> Tuple[AffineWord, ...]:
    rs = build(label)
    if not rs.is_positive_root(phi):
        raise ValueError(f"{phi} is not a positive root")
    gens = perp_generators(rs, phi)
    finite_gens = tuple(i for i in gens if i != 0)
    reps: List[AffineWord] = [()]
    seen = {element_of_affine_word(rs, ())}
    layer: List[AffineWord] = [()]
    while layer:
        nxt: List[AffineWord] = []
        for word in layer:
            for j in gens:
                if not apply_word_to_affine_root(rs, word, affine_simple_root(rs, j)).is_positive:
                    continue  # length would drop
                cand = word + (j,)
                el = element_of_affine_word(rs, cand)
                if el in seen:
                    continue
                if not _is_left_minimal(rs, cand, finite_gens):
                    continue
                seen.add(el)
                nxt.append(cand)
        nxt.sort()
        reps.extend(nxt)
        layer = nxt
    return tuple(reps)


def _affine_cartan_entry(rs: RootSystem, a: int, b: int) -> int:
    def root_of(i: int) -> Root:
        return tuple(-c for c in rs.theta) if i == 0 else rs.simple_root(i)

    c = rs.coroot_pairing(root_of(b), root_of(a))
    if c.denominator != 1:
        raise AssertionError("nonintegral Cartan pairing")
    return int(c)


def wall_subgroup_poincare(rs: RootSystem, phi: Root, include_zero: bool) -> Poly:
    """Exponent-product Poincare series of the wall subgroup of phi,
    with or without letter 0."""
    gens = perp_generators(rs, phi)
    if not include_zero:
        gens = tuple(i for i in gens if i != 0)
        return subgroup_poincare(rs, gens)
    comps = classify_components(gens, lambda a, b: _affine_cartan_entry(rs, a, b))
    return poly_prod(comp.poincare for comp in comps)


def coset_poincare(rs: RootSystem, phi: Root) -> Poly:
    """Length generating function of the minimal coset words, cross-checked
    against the quotient of the two wall-subgroup series."""
    return _coset_poincare_cached(str(rs.simple_type), tuple(phi))


@lru_cache(maxsize=None)
def _coset_poincare_cached(label: str, phi: Root) -> Poly:
    rs = build(label)
    reps = minimal_coset_reps(rs, phi)
    counts: List[int] = []
    for w in reps:
        k = len(w)
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    walked = poly(counts)
    quotient = poly_divexact(
        wall_subgroup_poincare(rs, phi, include_zero=True),
        wall_subgroup_poincare(rs, phi, include_zero=False),
    )
    if walked != quotient:
        raise AssertionError(f"coset walk and Poincare quotient disagree at phi={phi}")
    return walked
