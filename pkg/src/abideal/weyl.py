"""Finite Weyl groups: words, reflections, inversion sets, Poincare series.

A word is a tuple of node indices (1-based).  Words compose like the
reflections they name: the rightmost letter acts first, so the word
(3, 1) means "apply s_1, then s_3".  Group elements are integer matrices
acting on simple-root coordinates by left multiplication.

Subsets of nodes name standard parabolic subgroups.  Their length
generating functions come from an orbit walk of rho when the subgroup is
small enough to enumerate, and from the classified diagram's exponent
product otherwise; whenever the walk runs, its total is checked against
the product formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .qpoly import Poly, bracket, poly_eval_one, poly_prod
from .root_system import Root, RootSystem

WeylWord = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]

# orbit walks above this order fall back to the exponent product formula
_ORBIT_LIMIT = 200_000


def identity_matrix(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))


def reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Matrix of s_i on simple-root coordinates (columns are images)."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"letter {i} out of range 1..{rs.rank}")
    rows = []
    for k in range(rs.rank):
        if k == i - 1:
            rows.append(tuple(-rs.cartan[i - 1][j] if j != k else -1 for j in range(rs.rank)))
        else:
            rows.append(tuple(1 if j == k else 0 for j in range(rs.rank)))
    return tuple(rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def element_of_word(rs: RootSystem, word: Sequence[int]) -> Matrix:
    m = identity_matrix(rs.rank)
    for i in word:
        m = mat_mul(m, reflection_matrix(rs, i))
    return m


def reflect_simple(rs: RootSystem, i: int, vec: Sequence) -> tuple:
    """s_i(vec): only coordinate i-1 changes."""
    c = sum(rs.cartan[i - 1][j] * vec[j] for j in range(rs.rank) if vec[j])
    out = list(vec)
    out[i - 1] -= c
    return tuple(out)


def apply_word(rs: RootSystem, word: Sequence[int], vec: Sequence) -> tuple:
    out = tuple(vec)
    for i in reversed(word):
        out = reflect_simple(rs, i, out)
    return out


def length_of_element(rs: RootSystem, m: Matrix) -> int:
    count = 0
    for phi in rs.positive_roots:
        img = mat_vec(m, phi)
        if all(c <= 0 for c in img):
            count += 1
    return count


def inversion_roots(rs: RootSystem, word: Sequence[int]) -> Tuple[Root, ...]:
    """The positive roots sent negative by the inverse, one per letter.

    For a reduced word (i_1, ..., i_k) these are
    alpha_{i_1}, s_{i_1} alpha_{i_2}, s_{i_1} s_{i_2} alpha_{i_3}, ...
    and they sum to rho - w(rho).  A repeated root means the word is not
    reduced, which is reported as an error.
    """
    seen: List[Root] = []
    prefix: List[int] = []
    for i in word:
        beta = apply_word(rs, prefix, rs.simple_root(i))
        if beta in seen:
            raise ValueError(f"word {tuple(word)} is not reduced: root {beta} repeats")
        if not rs.is_positive_root(beta):
            raise ValueError(f"word {tuple(word)} is not reduced: {beta} is negative")
        seen.append(beta)
        prefix.append(i)
    return tuple(seen)


def minimal_word_to_theta(rs: RootSystem, phi: Root) -> WeylWord:
    """A shortest word w with w(phi) = theta, for a long positive root phi.

    Greedy: repeatedly reflect by the lowest-indexed simple root having
    negative inner product with the current root.  Each step raises the
    distance functional by exactly one, so the word length equals
    length_to_theta(phi); the resulting group element does not depend on the
    tie-break.
    """
    if not (rs.is_positive_root(phi) and rs.is_long(phi)):
        raise ValueError(f"{phi} is not a long positive root")
    letters: List[int] = []
    current = tuple(phi)
    while current != rs.theta:
        for i in range(1, rs.rank + 1):
            if rs.inner(rs.simple_root(i), current) < 0:
                letters.append(i)
                current = reflect_simple(rs, i, current)
                break
        else:
            raise AssertionError(f"stuck before reaching the highest root from {phi}")
    return tuple(reversed(letters))


# ----------------------------------------------------------------------
# diagram classification for node subsets
#
# Any proper subset of the extended diagram's nodes spans a finite-type
# diagram; its connected components are recognized here by edge weights
# and branch shape.  Families B and C share a Weyl group, hence "BC".

_FAMILY_EXPONENTS: Dict[str, Callable[[int], Tuple[int, ...]]] = {
    "A": lambda n: tuple(range(1, n + 1)),
    "BC": lambda n: tuple(range(1, 2 * n, 2)),
    "D": lambda n: tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])),
    "E6": lambda n: (1, 4, 5, 7, 8, 11),
    "E7": lambda n: (1, 5, 7, 9, 11, 13, 17),
    "E8": lambda n: (1, 7, 11, 13, 17, 19, 23, 29),
    "F4": lambda n: (1, 5, 7, 11),
    "G2": lambda n: (1, 5),
}

_FAMILY_POSITIVE_COUNT: Dict[str, Callable[[int], int]] = {
    "A": lambda n: n * (n + 1) // 2,
    "BC": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E6": lambda n: 36,
    "E7": lambda n: 63,
    "E8": lambda n: 120,
    "F4": lambda n: 24,
    "G2": lambda n: 6,
}


@dataclass(frozen=True)
class DiagramComponent:
    family: str
    size: int
    nodes: Tuple[int, ...]

    @property
    def exponents(self) -> Tuple[int, ...]:
        return _FAMILY_EXPONENTS[self.family](self.size)

    @property
    def num_positive(self) -> int:
        return _FAMILY_POSITIVE_COUNT[self.family](self.size)

    @property
    def order(self) -> int:
        out = 1
        for m in self.exponents:
            out *= m + 1
        return out

    @property
    def poincare(self) -> Poly:
        return poly_prod(bracket(m + 1) for m in self.exponents)


def classify_components(nodes: Sequence[int], entry: Callable[[int, int], int]) -> Tuple[DiagramComponent, ...]:
    """Split a node set into components and name each one's family.

    `entry(i, j)` returns the Cartan integer pairing node j against node
    i's coroot.  Only finite-type shapes are accepted.
    """
    nodes = sorted(set(nodes))
    adj: Dict[int, List[int]] = {i: [] for i in nodes}
    weight: Dict[Tuple[int, int], int] = {}
    for a in nodes:
        for b in nodes:
            if a < b:
                w = entry(a, b) * entry(b, a)
                if w:
                    adj[a].append(b)
                    adj[b].append(a)
                    weight[(a, b)] = weight[(b, a)] = w

    out: List[DiagramComponent] = []
    unseen = set(nodes)
    while unseen:
        start = min(unseen)
        comp = [start]
        unseen.discard(start)
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y in unseen:
                    unseen.discard(y)
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        out.append(_classify_one(comp, adj, weight))
    return tuple(sorted(out, key=lambda c: (c.family, c.size, c.nodes)))


def _classify_one(comp: List[int], adj: Dict[int, List[int]], weight: Dict[Tuple[int, int], int]) -> DiagramComponent:
    n = len(comp)
    nodes = tuple(comp)
    edges = [(a, b) for (a, b) in weight if a < b and a in comp and b in comp]
    if len(edges) >= n:
        raise ValueError(f"nodes {nodes} contain a cycle; not a finite-type diagram")
    degrees = {x: sum(1 for y in adj[x] if y in comp) for x in comp}
    heavy = [e for e in edges if weight[e] > 1]

    if any(weight[e] == 3 for e in edges):
        if n != 2:
            raise ValueError(f"nodes {nodes}: triple edge in a component of size {n}")
        return DiagramComponent("G2", 2, nodes)

    if heavy:
        if len(heavy) > 1 or any(d > 2 for d in degrees.values()):
            raise ValueError(f"nodes {nodes}: not a finite-type diagram")
        # a path; F4 exactly when the double edge is the middle of a 4-chain
        (a, b) = heavy[0]
        if n == 4 and degrees[a] == 2 and degrees[b] == 2:
            return DiagramComponent("F4", 4, nodes)
        return DiagramComponent("BC", n, nodes)

    branch = [x for x in comp if degrees[x] >= 3]
    if not branch:
        return DiagramComponent("A", n, nodes)
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise ValueError(f"nodes {nodes}: not a finite-type diagram")
    center = branch[0]
    legs = []
    for first in adj[center]:
        if first not in comp:
            continue
        length = 1
        prev, cur = center, first
        while True:
            nxt = [y for y in adj[cur] if y in comp and y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return DiagramComponent("D", legs[2] + 3, nodes)
    if legs == [1, 2, 2]:
        return DiagramComponent("E6", 6, nodes)
    if legs == [1, 2, 3]:
        return DiagramComponent("E7", 7, nodes)
    if legs == [1, 2, 4]:
        return DiagramComponent("E8", 8, nodes)
    raise ValueError(f"nodes {nodes}: branch shape {legs} is not finite-type")


# ----------------------------------------------------------------------
# standard parabolic subgroups of the finite group

def finite_components(rs: RootSystem, nodes: Iterable[int]) -> Tuple[DiagramComponent, ...]:
    nodes = list(nodes)
    for i in nodes:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"node {i} out of range 1..{rs.rank}")
    return classify_components(nodes, lambda a, b: rs.cartan[a - 1][b - 1])


def subgroup_order(rs: RootSystem, nodes: Iterable[int]) -> int:
    out = 1
    for comp in finite_components(rs, nodes):
        out *= comp.order
    return out


def subgroup_positive_count(rs: RootSystem, nodes: Iterable[int]) -> int:
    """Positive roots supported on the given nodes; also the longest length."""
    allowed = set(nodes)
    count = 0
    for phi in rs.positive_roots:
        if all(i + 1 in allowed for i, c in enumerate(phi) if c):
            count += 1
    return count


def _orbit_poincare(rs: RootSystem, nodes: Sequence[int]) -> Poly:
    """Length generating function from the rho orbit walk.

    rho sits strictly inside the dominant chamber, so the subgroup acts
    freely on its orbit and breadth-first depth equals length.
    """
    denom = lcm(*(x.denominator for x in rs.rho))
    start = tuple(int(x * denom) for x in rs.rho)
    rows = {i: rs.cartan[i - 1] for i in nodes}

    def step(i: int, vec: tuple) -> tuple:
        row = rows[i]
        c = sum(row[j] * vec[j] for j in range(rs.rank) if vec[j])
        out = list(vec)
        out[i - 1] -= c
        return tuple(out)

    seen = {start}
    layer = [start]
    counts = [1]
    while layer:
        nxt = []
        for vec in layer:
            for i in nodes:
                img = step(i, vec)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        if nxt:
            counts.append(len(nxt))
        layer = nxt
    return tuple(counts)


def subgroup_poincare(rs: RootSystem, nodes: Iterable[int]) -> Poly:
    """Length generating function of the parabolic subgroup on `nodes`."""
    nodes = sorted(set(nodes))
    comps = finite_components(rs, nodes)
    product = poly_prod(c.poincare for c in comps)
    order = poly_eval_one(product)
    if order > _ORBIT_LIMIT:
        return product
    walked = _orbit_poincare(rs, nodes)
    if walked != product:
        raise AssertionError(f"orbit walk and exponent product disagree on nodes {nodes}")
    return walked


def weyl_order(rs: RootSystem) -> int:
    return subgroup_order(rs, range(1, rs.rank + 1))


def weyl_poincare(rs: RootSystem) -> Poly:
    return subgroup_poincare(rs, range(1, rs.rank + 1))
