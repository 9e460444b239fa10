"""The Hasse graph of the abelian-ideal poset, plus alcove geometry.

Nodes are the catalog's ideals in canonical order; an edge joins ideals
differing by exactly one root.  A separate verification confirms these
edges are precisely the cover relations of inclusion, and each edge is
labeled by the unique affine letter carrying one endpoint's group element
to the other's.

Automorphisms are computed on the unlabeled undirected graph: partition
refinement (degree and distance profile, then neighborhood colors to a
fixpoint) followed by backtracking that collects every color- and
adjacency-preserving permutation.  The resulting group is identified by
comparing order, abelianness, element orders and center size against a
catalog of small groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .affine import alcove_vertices, element_of_affine_word, inverse_word
from .ideals import (
    CatalogEntry,
    IdealCatalog,
    InvariantViolation,
    catalog_of,
)
from .root_system import Q, Root, RootSystem, vsub

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class HasseEdge:
    lower: int
    upper: int
    letter: int


class HasseGraph:
    def __init__(self, rs: RootSystem, cat: IdealCatalog, edges: Tuple[HasseEdge, ...]) -> None:
        self.rs = rs
        self.catalog = cat
        self.edges = edges
        n = len(cat.ideals)
        adj: List[set] = [set() for _ in range(n)]
        for e in edges:
            adj[e.lower].add(e.upper)
            adj[e.upper].add(e.lower)
        self.adjacency: Tuple[FrozenSet[int], ...] = tuple(frozenset(s) for s in adj)

    @property
    def num_nodes(self) -> int:
        return len(self.catalog.ideals)


def build_graph(rs: RootSystem) -> HasseGraph:
    return _build_graph_cached(str(rs.simple_type))


@lru_cache(maxsize=None)
def _build_graph_cached(label: str) -> HasseGraph:
    from .root_system import build

    rs = build(label)
    cat = catalog_of(rs)
    gen_elements = {j: element_of_affine_word(rs, (j,)) for j in range(0, rs.rank + 1)}
    edges: List[HasseEdge] = []
    for k, entry in enumerate(cat.entries):
        for r in entry.ideal.roots:
            below = entry.ideal.root_set - {r}
            j = cat.index.get(frozenset(below))
            if j is None:
                continue
            letter = _edge_letter(rs, cat.entries[j], entry, gen_elements)
            edges.append(HasseEdge(j, k, letter))
    edges.sort(key=lambda e: (e.lower, e.upper))
    return HasseGraph(rs, cat, tuple(edges))


def _edge_letter(rs: RootSystem, low: CatalogEntry, high: CatalogEntry,
                 gen_elements) -> int:
    """The affine letter i with element(high) = element(low) * s_i."""
    diff = element_of_affine_word(rs, inverse_word(low.word)).compose(high.element)
    for j, gen in gen_elements.items():
        if diff == gen:
            return j
    raise InvariantViolation(
        f"elements of adjacent ideals do not differ by one reflection "
        f"({low.coset_word} vs {high.coset_word})")


def verify_cover_structure(graph: HasseGraph) -> None:
    """Check the one-root edges are exactly the covers of inclusion.

    It suffices that between any strictly nested pair some single root can
    be added to the smaller ideal staying inside the larger: then every
    cover has dimension gap one, and those pairs are exactly the edges.
    """
    cat = graph.catalog
    ideals = cat.ideals
    for b in ideals:
        for a in ideals:
            if a.dim >= b.dim or not a.root_set < b.root_set:
                continue
            grown = (a.root_set | {r} for r in b.root_set - a.root_set)
            if not any(g in cat.index for g in grown):
                raise InvariantViolation(
                    f"no one-root step from {a.roots} toward {b.roots}")


def to_dot(graph: HasseGraph) -> str:
    rs = graph.rs
    lines = [f"graph hasse_{rs.simple_type} {{", "  node [shape=circle];"]
    is_type_a = rs.simple_type.letter == "A"
    if is_type_a:
        from .young import young_encode, young_of_ideal

        for k, a in enumerate(graph.catalog.ideals):
            code = young_encode(young_of_ideal(rs, a), rs.rank + 1)
            lines.append(f'  {k} [dim={a.dim}, rim="{code:b}"];')
    else:
        for k, a in enumerate(graph.catalog.ideals):
            lines.append(f"  {k} [dim={a.dim}];")
    for e in graph.edges:
        lines.append(f'  {e.lower} -- {e.upper} [label="{e.letter}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# upper alcoves

@dataclass(frozen=True)
class UpperAlcove:
    node: int                  # catalog index
    lower_vertex_type: int     # 1-based node index of the off-wall vertex


def upper_alcoves(rs: RootSystem) -> Tuple[UpperAlcove, ...]:
    """Alcoves in the doubled alcove with a facet on the far theta-wall.

    An ideal's alcove is upper when all vertices but one pair to 1 with
    theta; the remaining "lower" vertex always carries a long simple type.
    """
    cat = catalog_of(rs)
    out: List[UpperAlcove] = []
    for k, entry in enumerate(cat.entries):
        verts = alcove_vertices(rs, entry.element)
        off_wall = []
        for i, v in enumerate(verts):
            t = rs.inner(v, rs.theta)
            if t > 1:
                raise InvariantViolation(f"alcove vertex beyond the doubled wall at node {k}")
            if t != 1:
                off_wall.append(i)
        if len(off_wall) == 1:
            t = off_wall[0]
            if t == 0 or not rs.is_long(rs.simple_root(t)):
                raise InvariantViolation(
                    f"lower vertex of upper alcove {k} has type {t}, not a long simple type")
            out.append(UpperAlcove(k, t))
    return tuple(out)


# ----------------------------------------------------------------------
# facet volumes of the fundamental alcove

def _det(rows: List[List[Q]]) -> Q:
    n = len(rows)
    m = [row[:] for row in rows]
    det = Q(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c]), None)
        if pivot is None:
            return Q(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def facet_volume_ratios(rs: RootSystem) -> Tuple[Q, ...]:
    """Squared volume of facet i over squared volume of facet 0.

    Facet i of the fundamental alcove is spanned by all vertices but
    vertex i; its squared (rank-1)-volume is a Gram determinant of edge
    vectors, and the common factorial normalization cancels in ratios.
    """
    from .affine import fundamental_alcove_vertices

    verts = fundamental_alcove_vertices(rs)

    def gram_det(skip: int) -> Q:
        pts = [v for i, v in enumerate(verts) if i != skip]
        edges = [vsub(p, pts[0]) for p in pts[1:]]
        return _det([[rs.inner(a, b) for b in edges] for a in edges])

    base = gram_det(0)
    if base == 0:
        raise InvariantViolation("degenerate base facet")
    return tuple(gram_det(i) / base for i in range(rs.rank + 1))


def expected_facet_ratios(rs: RootSystem) -> Tuple[Q, ...]:
    """n_i^2 |alpha_i|^2 / |theta|^2, with 1 in slot 0."""
    out = [Q(1)]
    for i in range(1, rs.rank + 1):
        n_i = rs.marks[i - 1]
        out.append(n_i * n_i * rs.norm2(rs.simple_root(i)) / rs.norm2(rs.theta))
    return tuple(out)


# ----------------------------------------------------------------------
# automorphisms

def _distance_profiles(adj: Sequence[FrozenSet[int]]) -> List[Tuple[int, ...]]:
    n = len(adj)
    profiles = []
    for start in range(n):
        dist = {start: 0}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        profiles.append(tuple(sorted(dist.values())))
    return profiles


def _refine_colors(adj: Sequence[FrozenSet[int]], initial: List) -> List[int]:
    palette: Dict = {}
    colors = []
    for key in initial:
        if key not in palette:
            palette[key] = len(palette)
        colors.append(palette[key])
    while True:
        palette = {}
        fresh = []
        for v in range(len(adj)):
            key = (colors[v], tuple(sorted(colors[u] for u in adj[v])))
            if key not in palette:
                palette[key] = len(palette)
            fresh.append(palette[key])
        if fresh == colors:
            return colors
        colors = fresh


def graph_automorphisms(graph: HasseGraph) -> Tuple[Permutation, ...]:
    """Every adjacency-preserving permutation of the nodes."""
    adj = graph.adjacency
    n = len(adj)
    degrees = [len(adj[v]) for v in range(n)]
    profiles = _distance_profiles(adj)
    colors = _refine_colors(adj, [(degrees[v], profiles[v]) for v in range(n)])

    by_color: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    candidates = {v: tuple(by_color[colors[v]]) for v in range(n)}

    # assign vertices in an order that keeps each new vertex anchored to
    # already-assigned neighbors where possible
    order: List[int] = []
    placed = set()
    pool = sorted(range(n), key=lambda v: (len(candidates[v]), v))
    while len(order) < n:
        anchored = [v for v in pool if v not in placed and any(u in placed for u in adj[v])]
        v = anchored[0] if anchored else next(v for v in pool if v not in placed)
        order.append(v)
        placed.add(v)

    found: List[Permutation] = []
    image: Dict[int, int] = {}
    used = set()

    def extend(k: int) -> None:
        if k == n:
            found.append(tuple(image[v] for v in range(n)))
            return
        v = order[k]
        for t in candidates[v]:
            if t in used:
                continue
            ok = True
            for u in order[:k]:
                if (u in adj[v]) != (image[u] in adj[t]):
                    ok = False
                    break
            if ok:
                image[v] = t
                used.add(t)
                extend(k + 1)
                used.discard(t)
                del image[v]

    extend(0)
    return tuple(sorted(found))


# ----------------------------------------------------------------------
# naming the group

@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    abelian: bool
    element_orders: Tuple[int, ...]
    center_order: int


def _perm_mul(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[x] for x in q)


def _perm_order(p: Permutation) -> int:
    from math import lcm

    n = len(p)
    seen = [False] * n
    out = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        out = lcm(out, length)
    return out


def group_fingerprint(perms: Sequence[Permutation]) -> GroupFingerprint:
    elems = list(perms)
    orders = tuple(sorted(_perm_order(p) for p in elems))
    abelian = all(_perm_mul(p, q) == _perm_mul(q, p) for p in elems for q in elems)
    center = sum(1 for p in elems if all(_perm_mul(p, q) == _perm_mul(q, p) for q in elems))
    return GroupFingerprint(len(elems), abelian, orders, center)


def _closure(gens: List[Permutation], n: int) -> List[Permutation]:
    identity = tuple(range(n))
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _perm_mul(p, g)
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(elems)


@lru_cache(maxsize=1)
def _named_fingerprints() -> Dict[GroupFingerprint, str]:
    def cyc(n: int) -> Permutation:
        return tuple((i + 1) % n for i in range(n))

    def flip(n: int) -> Permutation:
        return tuple((n - i) % n for i in range(n))

    table: Dict[GroupFingerprint, str] = {}

    def put(name: str, gens: List[Permutation], n: int) -> None:
        fp = group_fingerprint(_closure(gens, n))
        other = table.get(fp)
        if other is not None and other != name:
            raise AssertionError(f"fingerprint collision: {name} vs {other}")
        table[fp] = name

    put("1", [], 1)
    for n in range(2, 13):
        put(f"Z/{n}", [cyc(n)], n)
    put("Z/2 x Z/2", [(1, 0, 2, 3), (0, 1, 3, 2)], 4)
    put("Sym_3", [cyc(3), flip(3)], 3)
    for n in range(4, 13):
        put(f"Dih_{n}", [cyc(n), flip(n)], n)
    put("Sym_4", [cyc(4), (1, 0, 2, 3)], 4)
    put("Alt_4", [(1, 2, 0, 3), (0, 2, 3, 1)], 4)
    return table


def identify_group(perms: Sequence[Permutation]) -> str:
    fp = group_fingerprint(perms)
    name = _named_fingerprints().get(fp)
    if name is None:
        return f"unidentified(order={fp.order})"
    return name


def hasse_automorphism_name(rs: RootSystem) -> str:
    return identify_group(graph_automorphisms(build_graph(rs)))
