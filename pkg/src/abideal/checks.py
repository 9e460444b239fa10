"""Named invariant checks, one function per verification concern.

Each check takes a built root system and returns a :class:`CheckResult`
with a stable name, so reports stay machine-comparable across runs.  The
heavy inputs (ideal catalogs, cover graphs, coset polynomials) are cached
at module level in their home modules; running the whole battery twice
costs little more than running it once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Callable, Dict, List, Sequence, Tuple

from .affine import coset_poincare, element_of_affine_word, perp_generators
from .hasse import (
    build_graph,
    expected_facet_ratios,
    facet_volume_ratios,
    hasse_automorphism_name,
    upper_alcoves,
    verify_cover_structure,
)
from .ideals import (
    InvariantViolation,
    KostantScorer,
    catalog_of,
    forbidden_roots,
    from_param,
    is_abelian_ideal,
    long_simple_nodes,
    make_ideal,
    max_dimension,
    maximal_ideals,
    sum_formula_report,
)
from .qpoly import poly_divexact, poly_eval_one
from .reference import (
    GALLERY_A11_LEFT_STEPS,
    GALLERY_A11_LEFT_WORD,
    GALLERY_A11_RIGHT_STEPS,
    GALLERY_A11_RIGHT_WORD,
    GALLERY_A11_RIM_CODE,
    GALLERY_A11_SHAPE,
    REFERENCE_DECOMPOSITIONS,
    reference_fiber_poly,
    reference_first_sum_per_node,
    reference_hasse_group,
    reference_max_dimension,
    reference_max_dimension_multiplicity,
    reference_num_long_positive,
    reference_theta_quotient,
    reference_word_to_theta,
)
from .root_system import RootSystem, build, supported_types, vadd, vsub
from .weyl import (
    apply_word,
    element_of_word,
    minimal_word_to_theta,
    subgroup_poincare,
    weyl_poincare,
)
from .young import ideal_of_young, young_encode, young_of_ideal


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


def _ok(name: str, details: str = "") -> CheckResult:
    return CheckResult(name, True, details)


def _fail(name: str, details: str) -> CheckResult:
    return CheckResult(name, False, details)


def _compact(root: Sequence[int]) -> str:
    return "".join(str(c) for c in root)


# ----------------------------------------------------------------------
# normalization of the invariant form

def check_normalization(rs: RootSystem) -> CheckResult:
    """Five exact identities pinning the scale of the bilinear form."""
    g = rs.dual_coxeter_number
    rho, theta = rs.rho, rs.theta
    rho_plus = vadd(rho, theta)

    identities = (
        ("casimir", rs.norm2(rho_plus) - rs.norm2(rho), Q(1)),
        ("theta_norm", rs.norm2(theta), Q(1, g)),
        ("strange", rs.norm2(rho), Q(rs.dimension, 24)),
        ("root_norm_sum", 2 * sum((rs.norm2(r) for r in rs.positive_roots), Q(0)), Q(rs.rank)),
        ("mark_weighted", rs.norm2(theta)
         + sum((n * rs.norm2(rs.simple_root(i + 1)) for i, n in enumerate(rs.marks)), Q(0)),
         Q(1)),
    )
    bad = [f"{name}: {got} != {want}" for name, got, want in identities if got != want]
    if bad:
        return _fail("normalization", "; ".join(bad))
    return _ok("normalization", f"five identities hold, 1/|theta|^2 = {g}")


# ----------------------------------------------------------------------
# counting and the quadratic criterion

def check_ideal_count(rs: RootSystem) -> CheckResult:
    cat = catalog_of(rs)
    expected = 2 ** rs.rank
    if len(cat) != expected:
        return _fail("ideal_count", f"enumerated {len(cat)}, expected {expected}")
    return _ok("ideal_count", f"{expected} abelian ideals")


def _random_non_ideal_subsets(rs: RootSystem, rng: random.Random,
                              count: int) -> List[Tuple[Tuple[int, ...], ...]]:
    roots = rs.positive_roots
    n = len(roots)
    if n == 1:
        # rank one: both subsets of the single positive root are ideals
        return []
    out: List[Tuple[Tuple[int, ...], ...]] = []
    while len(out) < count:
        k = rng.randint(1, n)
        picked = tuple(roots[i] for i in sorted(rng.sample(range(n), k)))
        if is_abelian_ideal(rs, picked):
            continue
        out.append(picked)
    return out


def check_kostant(rs: RootSystem, samples: int = 1000) -> CheckResult:
    """|rho + sum|^2 - |rho|^2 = dim on ideals, strictly below elsewhere."""
    cat = catalog_of(rs)
    scorer = KostantScorer(rs)
    for a in cat.ideals:
        if not scorer.is_ideal_value(a.roots):
            return _fail("kostant", f"equality fails on ideal {[_compact(r) for r in a.roots]}")

    rng = random.Random(f"kostant:{rs.simple_type}")
    subsets = _random_non_ideal_subsets(rs, rng, samples)
    for s in subsets:
        if scorer.deficiency_sign(s) != 1:
            return _fail("kostant", f"non-ideal subset of size {len(s)} not strictly below")
    tail = (f"{len(subsets)} random non-ideal subsets strictly below"
            if subsets else "no non-ideal subsets exist at rank one")
    return _ok("kostant", f"equality on {len(cat)} ideals; {tail}")


def check_parametrization(rs: RootSystem) -> CheckResult:
    """Nonzero ideals are hit once each by (long root, minimal coset word)."""
    cat = catalog_of(rs)
    params = set()
    for e in cat.entries:
        if e.phi is None:
            if e.ideal.dim != 0 or e.word != ():
                return _fail("parametrization", "unparametrized entry is not the zero ideal")
            continue
        params.add((e.phi, e.coset_word))
        rebuilt = from_param(rs, e.phi, e.coset_word)
        if rebuilt.root_set != e.ideal.root_set:
            return _fail("parametrization",
                         f"from_param({_compact(e.phi)}, {list(e.coset_word)}) disagrees")
        if len(e.word) != e.ideal.dim:
            return _fail("parametrization",
                         f"parameter word length {len(e.word)} != dim {e.ideal.dim}")
    if len(params) != len(cat) - 1:
        return _fail("parametrization",
                     f"{len(params)} distinct parameters for {len(cat) - 1} nonzero ideals")
    return _ok("parametrization", f"{len(params)} parameters cover all nonzero ideals once")


def check_forbidden_roots(rs: RootSystem) -> CheckResult:
    """Roots in no ideal are exactly those listed by the difference test."""
    cat = catalog_of(rs)
    covered = set()
    for a in cat.ideals:
        covered |= a.root_set
    complement = sorted(r for r in rs.positive_roots if r not in covered)
    listed = sorted(forbidden_roots(rs))
    if complement != listed:
        return _fail("forbidden_roots",
                     f"complement {[_compact(r) for r in complement]} != "
                     f"test {[_compact(r) for r in listed]}")
    return _ok("forbidden_roots", f"{len(listed)} positive roots lie in no ideal")


# ----------------------------------------------------------------------
# words, fibers, Poincare identities

def check_word_table(rs: RootSystem) -> CheckResult:
    g = rs.dual_coxeter_number
    st = rs.simple_type
    checked = 0
    for i in long_simple_nodes(rs):
        alpha = rs.simple_root(i)
        word = minimal_word_to_theta(rs, alpha)
        if len(word) != g - 2:
            return _fail("word_table", f"node {i}: word length {len(word)} != {g - 2}")
        if apply_word(rs, word, alpha) != rs.theta:
            return _fail("word_table", f"node {i}: word does not send the root to theta")
        ref = reference_word_to_theta(st, i)
        if ref is not None and element_of_word(rs, ref) != element_of_word(rs, word):
            return _fail("word_table", f"node {i}: element differs from the tabulated word")
        checked += 1
    return _ok("word_table", f"{checked} long nodes, all words of length {g - 2}")


def check_fiber_polynomials(rs: RootSystem) -> CheckResult:
    st = rs.simple_type
    for i in long_simple_nodes(rs):
        got = coset_poincare(rs, rs.simple_root(i))
        want = reference_fiber_poly(st, i)
        if got != want:
            return _fail("fiber_polynomials", f"node {i}: {got} != closed form {want}")
    return _ok("fiber_polynomials",
               f"closed forms match on {len(long_simple_nodes(rs))} long nodes")


def check_theta_quotient(rs: RootSystem) -> CheckResult:
    """W(t)/W_perp(t) against its closed form and the two-shell identity."""
    st = rs.simple_type
    perp = tuple(j for j in perp_generators(rs, rs.theta) if j != 0)
    ratio = poly_divexact(weyl_poincare(rs), subgroup_poincare(rs, perp))
    want = reference_theta_quotient(st)
    if ratio != want:
        return _fail("theta_quotient", f"{ratio} != closed form {want}")

    g = rs.dual_coxeter_number
    shell = [0] * (2 * g - 2)
    for phi in rs.long_positive_roots():
        lv = int(rs.length_to_theta(phi))
        shell[lv] += 1
        shell[2 * g - 3 - lv] += 1
    if tuple(shell) != ratio:
        return _fail("theta_quotient", "quotient is not the two-shell length sum")

    nu = reference_num_long_positive(st)
    if len(rs.long_positive_roots()) != nu:
        return _fail("theta_quotient", f"{len(rs.long_positive_roots())} long roots, expected {nu}")
    if poly_eval_one(ratio) != 2 * nu:
        return _fail("theta_quotient", f"value at one {poly_eval_one(ratio)} != {2 * nu}")
    return _ok("theta_quotient", f"degree {len(ratio) - 1}, value at one {2 * nu}")


def check_first_sum(rs: RootSystem) -> CheckResult:
    rep = sum_formula_report(rs)
    if not rep.first_holds:
        return _fail("first_sum", f"total {rep.first_total} != {rep.first_expected}")
    want = reference_first_sum_per_node(rs.simple_type)
    if want is not None and rep.per_node != want:
        return _fail("first_sum", f"per-node counts {rep.per_node} != {want}")
    per = "" if rep.per_node is None else f", per node {list(rep.per_node)}"
    return _ok("first_sum", f"total {rep.first_total} = 2^{rs.rank} - 1{per}")


def check_second_sum(rs: RootSystem) -> CheckResult:
    rep = sum_formula_report(rs)
    if not rep.second_holds:
        return _fail("second_sum", f"total {rep.second_total} != {rep.second_expected}")
    return _ok("second_sum", f"mark-weighted total {rep.second_total} = 2^{rs.rank - 1}")


# ----------------------------------------------------------------------
# extremal ideals

def check_max_dimension(rs: RootSystem) -> CheckResult:
    st = rs.simple_type
    rep = max_dimension(rs)
    want = reference_max_dimension(st)
    if rep.value != want:
        return _fail("max_dimension", f"maximum {rep.value} != {want}")
    want_mult = reference_max_dimension_multiplicity(st)
    if rep.multiplicity != want_mult:
        return _fail("max_dimension",
                     f"multiplicity {rep.multiplicity} != {want_mult}")
    for g, n_hat, n_perp, value in rep.decompositions:
        if value != rep.value or g - 1 + n_hat - n_perp != value:
            return _fail("max_dimension", f"bad decomposition {(g, n_hat, n_perp, value)}")
    golden = REFERENCE_DECOMPOSITIONS.get(str(st))
    if golden is not None and golden not in rep.decompositions:
        return _fail("max_dimension",
                     f"decompositions {rep.decompositions} miss the tabulated {golden}")
    g, n_hat, n_perp, value = rep.decompositions[0]
    return _ok("max_dimension",
               f"max {rep.value} = {g - 1}+{n_hat}-{n_perp}, "
               f"multiplicity {rep.multiplicity}, witness nodes {list(rep.witnesses)}")


def check_maximal_ideals(rs: RootSystem) -> CheckResult:
    maxi = maximal_ideals(rs)
    nodes = long_simple_nodes(rs)
    if len(maxi) != len(nodes):
        return _fail("maximal_ideals",
                     f"{len(maxi)} maximal ideals, {len(nodes)} long simple roots")
    return _ok("maximal_ideals", f"{len(maxi)} maximal ideals, one per long simple root")


# ----------------------------------------------------------------------
# cover graph

def check_hasse_covers(rs: RootSystem) -> CheckResult:
    graph = build_graph(rs)
    if graph.num_nodes != 2 ** rs.rank:
        return _fail("hasse_covers", f"{graph.num_nodes} nodes != {2 ** rs.rank}")
    for e in graph.edges:
        if not 0 <= e.letter <= rs.rank:
            return _fail("hasse_covers", f"edge letter {e.letter} out of range")
    try:
        verify_cover_structure(graph)
    except InvariantViolation as exc:
        return _fail("hasse_covers", str(exc))
    return _ok("hasse_covers", f"{len(graph.edges)} labelled one-root covers")


def check_hasse_automorphisms(rs: RootSystem) -> CheckResult:
    got = hasse_automorphism_name(rs)
    want = reference_hasse_group(rs.simple_type)
    if got != want:
        return _fail("hasse_automorphisms", f"identified {got}, expected {want}")
    return _ok("hasse_automorphisms", f"automorphism group {got}")


# ----------------------------------------------------------------------
# geometry of the doubled alcove

_UPPER_GOLDEN = {"A2": (1, 2), "C2": (2, 2), "G2": (2,)}


def check_upper_alcoves(rs: RootSystem) -> CheckResult:
    ups = upper_alcoves(rs)
    types = sorted(u.lower_vertex_type for u in ups)
    if set(types) != set(long_simple_nodes(rs)):
        return _fail("upper_alcoves",
                     f"lower-vertex types {types} != long nodes {long_simple_nodes(rs)}")
    golden = _UPPER_GOLDEN.get(str(rs.simple_type))
    if golden is not None and tuple(types) != golden:
        return _fail("upper_alcoves", f"type multiset {types} != {list(golden)}")
    return _ok("upper_alcoves", f"{len(ups)} upper alcoves, vertex types {types}")


def check_facet_ratios(rs: RootSystem) -> CheckResult:
    got = facet_volume_ratios(rs)
    want = expected_facet_ratios(rs)
    if got != want:
        return _fail("facet_ratios", f"{[str(x) for x in got]} != {[str(x) for x in want]}")
    return _ok("facet_ratios",
               f"squared ratios {[str(x) for x in got]}")


# ----------------------------------------------------------------------
# type A extras

def check_young_bridge(rs: RootSystem) -> CheckResult:
    """Ideals of A_l are the diagrams with hooks below l+1, compatibly coded."""
    from .ideals import enumerate_all

    n = rs.rank + 1
    ideals = enumerate_all(rs)
    seen: Dict[Tuple[int, ...], int] = {}
    for a in ideals:
        d = young_of_ideal(rs, a)
        if d.rows and d.max_hook > n - 1:
            return _fail("young_bridge", f"diagram {d.rows} has hook above {n - 1}")
        code = young_encode(d, n)
        if code in seen.values() or d.rows in seen:
            return _fail("young_bridge", f"diagram {d.rows} repeats")
        seen[d.rows] = code
        if ideal_of_young(rs, d).root_set != a.root_set:
            return _fail("young_bridge", f"diagram {d.rows} does not return to its ideal")
    if len(seen) != 2 ** rs.rank or sorted(seen.values()) != list(range(2 ** rs.rank)):
        return _fail("young_bridge", "codes are not a bijection onto the full range")
    return _ok("young_bridge", f"{len(seen)} ideals <-> diagrams <-> codes 0..{2 ** rs.rank - 1}")


def golden_a11_check() -> CheckResult:
    """Replay the 26-step rank-11 walk, one column at a time.

    Each prefix of either word moves the base point by exactly one positive
    root, read off as an 11-bit string; the final alcove is the staircase
    diagram (5,4,4,4,4,3,2) with rim code 1697.
    """
    rs = build("A11")
    columns = (
        ("left", GALLERY_A11_LEFT_WORD, GALLERY_A11_LEFT_STEPS),
        ("right", GALLERY_A11_RIGHT_WORD, GALLERY_A11_RIGHT_STEPS),
    )
    for col, word, steps in columns:
        if len(word) != 26 or len(steps) != 26:
            return _fail("golden_gallery", f"{col} column is not 26 rows")
        point = rs.rho
        roots = []
        for r in range(1, 27):
            moved = element_of_affine_word(rs, word[:r])(rs.rho)
            diff = vsub(moved, point)
            bits = "".join("1" if c else "0" for c in diff)
            if bits != steps[r - 1]:
                return _fail("golden_gallery",
                             f"{col} column row {r}: step {bits} != {steps[r - 1]}")
            step_root = tuple(int(c) for c in diff)
            if tuple(diff) != step_root or not rs.is_positive_root(step_root):
                return _fail("golden_gallery",
                             f"{col} column row {r}: step is not a positive root")
            roots.append(step_root)
            point = moved
        shape = young_of_ideal(rs, make_ideal(roots))
        if shape.rows != GALLERY_A11_SHAPE:
            return _fail("golden_gallery", f"{col} final shape {shape.rows} != {GALLERY_A11_SHAPE}")
        if young_encode(shape, 12) != GALLERY_A11_RIM_CODE:
            return _fail("golden_gallery", f"{col} rim code != {GALLERY_A11_RIM_CODE}")
    return _ok("golden_gallery",
               "both 26-step columns replay exactly; final rim code "
               f"{GALLERY_A11_RIM_CODE}")


# ----------------------------------------------------------------------
# assembly

_CHECK_FUNCTIONS: Tuple[Tuple[str, Callable[[RootSystem], CheckResult]], ...] = (
    ("normalization", check_normalization),
    ("ideal_count", check_ideal_count),
    ("kostant", check_kostant),
    ("parametrization", check_parametrization),
    ("forbidden_roots", check_forbidden_roots),
    ("word_table", check_word_table),
    ("fiber_polynomials", check_fiber_polynomials),
    ("theta_quotient", check_theta_quotient),
    ("first_sum", check_first_sum),
    ("second_sum", check_second_sum),
    ("max_dimension", check_max_dimension),
    ("maximal_ideals", check_maximal_ideals),
    ("hasse_covers", check_hasse_covers),
    ("hasse_automorphisms", check_hasse_automorphisms),
    ("upper_alcoves", check_upper_alcoves),
    ("facet_ratios", check_facet_ratios),
)


@dataclass(frozen=True)
class TypeReport:
    label: str
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def check_names(label: str) -> Tuple[str, ...]:
    names = [name for name, _ in _CHECK_FUNCTIONS]
    if label.startswith("A"):
        names.append("young_bridge")
    if label == "A11":
        names.append("golden_gallery")
    return tuple(names)


def verify_type(label: str) -> TypeReport:
    rs = build(label)
    results: List[CheckResult] = []
    for name, fn in _CHECK_FUNCTIONS:
        try:
            results.append(fn(rs))
        except (InvariantViolation, ValueError, ArithmeticError) as exc:
            results.append(_fail(name, f"raised {type(exc).__name__}: {exc}"))
    if rs.simple_type.letter == "A":
        results.append(check_young_bridge(rs))
    if label == "A11":
        results.append(golden_a11_check())
    return TypeReport(label, tuple(results))


def verify_all(max_rank: int = 8) -> Tuple[TypeReport, ...]:
    return tuple(verify_type(str(st)) for st in supported_types(max_rank))


# ----------------------------------------------------------------------
# summary tables

def summary_row(label: str) -> Dict[str, object]:
    """Per-type headline numbers, all integers, JSON-ready."""
    rs = build(label)
    rep = max_dimension(rs)
    sums = sum_formula_report(rs)
    return {
        "type": label,
        "dual_coxeter_minus_one": rs.dual_coxeter_number - 1,
        "positive_roots": rs.num_positive,
        "long_positive_roots": len(rs.long_positive_roots()),
        "max_dim": rep.value,
        "max_dim_multiplicity": rep.multiplicity,
        "witness_nodes": list(rep.witnesses),
        "decompositions": [list(d) for d in rep.decompositions],
        "first_sum": {
            "total": sums.first_total,
            "expected": sums.first_expected,
            "per_node": None if sums.per_node is None else list(sums.per_node),
        },
        "second_sum": {"total": sums.second_total, "expected": sums.second_expected},
    }


def summary_rows(max_rank: int = 8) -> List[Dict[str, object]]:
    return [summary_row(str(st)) for st in supported_types(max_rank)]
