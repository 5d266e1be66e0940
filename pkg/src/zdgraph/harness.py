"""Cross-checking harness: every structural characterization is evaluated
on both sides over families of rings, graph computation against algebraic
predicate, and any disagreement is reported with the offending ring.

Check ids (used by the CLI and in JSON reports):

  completeness          extended graph complete  <=>  boolean ring, or zero
                        divisors form an ideal, or the ring embeds in a
                        product of two integral domains
  gamma-coincidence     extended graph == product-zero graph  <=>  the
                        product-zero graph is complete  <=>  order-4 boolean
                        ring or all products of zero divisors vanish
  zstar-coincidence     extended graph == sum graph  <=>  indecomposable
                        <=>  sum graph complete  <=>  zero divisors form an
                        ideal (the whole chain must agree)
  edge-triangles        with >= 3 vertices, every edge lies in a triangle
  universal-vertex      with >= 1 vertex, some vertex meets all others
  hamiltonian           with >= 3 vertices, the block construction yields a
                        valid cycle and the backtracking search concurs
  product-implications  complete with >= 3 local factors forces boolean;
                        embedding in two domains forces complete
  poly-completeness     the polynomial-extension completeness predicate
                        against an exhaustive degree-1 witness search

Graph sides are always brute-force recomputations on adjacency bitmasks;
algebraic sides never consult the graphs, so one bug cannot hide another.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .exprs import QuotientAtom
from .graphs import build_graph, graphs_equal
from .hamiltonian import (
    DEFAULT_NODE_BUDGET,
    constructive_hamiltonian_cycle,
    find_hamiltonian_cycle,
    validate_cycle,
)
from .polynomials import find_nonadjacent_zero_divisors, poly_graph_is_complete
from .rings import DEFAULT_ORDER_CAP, FiniteRing, make_ring


@dataclass
class TheoremReport:
    """One check on one ring: both raw sides, verdict and timing."""

    check: str
    ring: str
    lhs: object
    rhs: object
    verdict: str  # "agree" | "disagree" | "skipped"
    elapsed_ms: float
    reason: str | None = None
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {
            "theorem": self.check,
            "ring": self.ring,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class CheckOptions:
    oracle_budget: int = DEFAULT_NODE_BUDGET
    poly_degree_bound: int = 1
    poly_budget: int = 200_000
    seed: int = 0


def _report(check, ring, started, lhs, rhs, agree, *, reason=None, counterexample=None):
    elapsed = (time.perf_counter() - started) * 1000.0
    verdict = "agree" if agree else "disagree"
    if agree and counterexample is not None:
        counterexample = None
    return TheoremReport(check, ring.expr(), lhs, rhs, verdict, elapsed,
                         reason=reason, counterexample=counterexample)


def _skipped(check, ring, started, reason):
    elapsed = (time.perf_counter() - started) * 1000.0
    return TheoremReport(check, ring.expr(), None, None, "skipped", elapsed, reason=reason)


def _tilde_complete(ring) -> bool:
    # empty vertex sets count as trivially complete graphs
    if not ring.nonzero_zero_divisors:
        return True
    return build_graph(ring, "tilde").is_complete()


def check_completeness(ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    started = time.perf_counter()
    lhs = _tilde_complete(ring)
    rhs = (
        ring.is_boolean
        or ring.zero_divisors_form_ideal
        or ring.embeds_in_two_integral_domains
    )
    return _report(
        "completeness", ring, started, lhs, rhs, lhs == rhs,
        counterexample={"graph_complete": lhs, "predicate": rhs},
    )


def check_gamma_coincidence(ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    started = time.perf_counter()
    if not ring.nonzero_zero_divisors:
        same, complete = True, True
    else:
        tilde = build_graph(ring, "tilde")
        gamma = build_graph(ring, "gamma")
        same = graphs_equal(tilde, gamma)
        complete = gamma.is_complete()
    zs = sorted(ring.zero_divisors)
    all_products_zero = all(
        ring.mul(x, y) == 0 for i, x in enumerate(zs) for y in zs[i:]
    )
    structural = (ring.order == 4 and ring.is_boolean) or all_products_zero
    agree = same == complete == structural
    return _report(
        "gamma-coincidence", ring, started, same, structural, agree,
        counterexample={
            "graphs_equal": same,
            "product_graph_complete": complete,
            "structural": structural,
        },
    )


def check_zstar_coincidence(ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    started = time.perf_counter()
    if not ring.nonzero_zero_divisors:
        same, complete = True, True
    else:
        tilde = build_graph(ring, "tilde")
        zstar = build_graph(ring, "zstar")
        same = graphs_equal(tilde, zstar)
        complete = zstar.is_complete()
    indecomposable = ring.is_indecomposable
    ideal = ring.zero_divisors_form_ideal
    agree = same == indecomposable == complete == ideal
    return _report(
        "zstar-coincidence", ring, started, same, indecomposable, agree,
        counterexample={
            "graphs_equal": same,
            "indecomposable": indecomposable,
            "sum_graph_complete": complete,
            "zero_divisors_form_ideal": ideal,
        },
    )


def check_edge_triangles(ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    started = time.perf_counter()
    if len(ring.nonzero_zero_divisors) < 3:
        return _skipped("edge-triangles", ring, started, "fewer than 3 nonzero zero divisors")
    lhs = build_graph(ring, "tilde").is_hypertriangulated()
    return _report("edge-triangles", ring, started, lhs, True, lhs)


def check_universal_vertex(ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    started = time.perf_counter()
    if not ring.nonzero_zero_divisors:
        return _skipped("universal-vertex", ring, started, "no nonzero zero divisors")
    count = len(build_graph(ring, "tilde").universal_vertices())
    return _report("universal-vertex", ring, started, count >= 1, True, count >= 1)


def check_hamiltonian(ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    started = time.perf_counter()
    if len(ring.nonzero_zero_divisors) < 3:
        return _skipped("hamiltonian", ring, started, "fewer than 3 nonzero zero divisors")
    graph = build_graph(ring, "tilde")
    try:
        cycle = constructive_hamiltonian_cycle(ring)
        validate_cycle(graph, cycle)
        constructed = True
    except Exception as exc:  # a construction failure is a disagreement
        constructed = False
        failure = repr(exc)
    search = find_hamiltonian_cycle(graph, options.oracle_budget)
    agree = constructed and search.status != "none"
    reason = None
    if search.status == "unknown" and constructed:
        reason = "backtracking budget exhausted; constructed cycle stands as the witness"
    counterexample = None
    if not agree:
        counterexample = {"constructed": constructed, "search": search.status}
        if not constructed:
            counterexample["construction_error"] = failure
    return _report(
        "hamiltonian", ring, started,
        "valid-cycle" if constructed else "construction-failed",
        search.status, agree, reason=reason, counterexample=counterexample,
    )


def check_product_implications(ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    started = time.perf_counter()
    complete = _tilde_complete(ring)
    factor_count = len(ring.local_decomposition())

    if factor_count >= 3 and complete:
        boolean_side = "holds" if ring.is_boolean else "fails"
    else:
        boolean_side = "vacuous"
    if ring.embeds_in_two_integral_domains:
        complete_side = "holds" if complete else "fails"
    else:
        complete_side = "vacuous"
    agree = "fails" not in (boolean_side, complete_side)
    return _report(
        "product-implications", ring, started, boolean_side, complete_side, agree,
        counterexample={
            "factor_count": factor_count,
            "graph_complete": complete,
            "boolean": ring.is_boolean,
            "embeds_in_two_domains": ring.embeds_in_two_integral_domains,
        },
    )


def check_poly_completeness(ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    started = time.perf_counter()
    predicate = poly_graph_is_complete(ring)
    search = find_nonadjacent_zero_divisors(
        ring, options.poly_degree_bound, budget=options.poly_budget, seed=options.seed,
    )
    if not search.exhaustive:
        return _skipped(
            "poly-completeness", ring, started,
            f"degree-{options.poly_degree_bound} search not exhaustive within budget",
        )
    witnessed = search.pair is not None
    if witnessed:
        p, q = search.pair
        # re-verify the witness through the polynomial arithmetic itself
        valid = (
            p.is_zero_divisor()
            and q.is_zero_divisor()
            and not p.is_zero
            and not q.is_zero
            and not (p * q).is_zero
            and not (p + q).is_zero_divisor()
        )
        if not valid:
            return _report(
                "poly-completeness", ring, started, predicate, "invalid-witness", False,
                counterexample={"p": str(p), "q": str(q)},
            )
    agree = predicate != witnessed
    counterexample = None
    if not agree:
        counterexample = {"predicate": predicate}
        if witnessed:
            counterexample["p"] = str(search.pair[0])
            counterexample["q"] = str(search.pair[1])
    return _report(
        "poly-completeness", ring, started, predicate,
        f"witness: {search.pair[0]} | {search.pair[1]}" if witnessed else "no-witness",
        agree, counterexample=counterexample,
    )


CHECKS = {
    "completeness": check_completeness,
    "gamma-coincidence": check_gamma_coincidence,
    "zstar-coincidence": check_zstar_coincidence,
    "edge-triangles": check_edge_triangles,
    "universal-vertex": check_universal_vertex,
    "hamiltonian": check_hamiltonian,
    "product-implications": check_product_implications,
    "poly-completeness": check_poly_completeness,
}

ALL_CHECK_IDS = tuple(CHECKS)


def run_check(check_id: str, ring: FiniteRing, options: CheckOptions = CheckOptions()) -> TheoremReport:
    if check_id not in CHECKS:
        raise ValueError(f"unknown check id {check_id!r}")
    return CHECKS[check_id](ring, options)


# -- ring families ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Deterministic generator of ring expressions for sweeps.

    family selects the generator:
      "zn"             Z_n for lo <= n <= hi
      "products"       all multisets of the seed expressions (size >= 1)
                       whose order product stays within max_order
      "quotients"      Z_modulus[x]/(f) for every monic f, 1 <= deg <= max_degree
      "idealizations"  Id(Z_n, Z_m) for 2 <= n <= max_n and divisors m >= 2

    exclude_fields drops rings without nonzero zero divisors.
    """

    family: str
    lo: int = 2
    hi: int = 50
    seeds: tuple[str, ...] = ()
    max_order: int = 256
    modulus: int = 2
    max_degree: int = 2
    max_n: int = 12
    exclude_fields: bool = False

    def expressions(self) -> list[str]:
        if self.family == "zn":
            return [f"Z{n}" for n in range(self.lo, self.hi + 1)]
        if self.family == "products":
            if not self.seeds:
                raise ValueError("products family needs seed expressions")
            seed_rings = [make_ring(s) for s in self.seeds]
            min_order = min(r.order for r in seed_rings)
            out = []
            size = 1
            while min_order**size <= self.max_order:
                for combo in itertools.combinations_with_replacement(
                    range(len(seed_rings)), size
                ):
                    order = 1
                    for i in combo:
                        order *= seed_rings[i].order
                    if order <= self.max_order:
                        out.append(" x ".join(self.seeds[i] for i in combo))
                size += 1
            return out
        if self.family == "quotients":
            m = self.modulus
            out = []
            for deg in range(1, self.max_degree + 1):
                for idx in range(m**deg):
                    coeffs = tuple((idx // m**j) % m for j in range(deg)) + (1,)
                    out.append(str(QuotientAtom(m, coeffs)))
            return out
        if self.family == "idealizations":
            return [
                f"Id(Z{n},Z{m})"
                for n in range(2, self.max_n + 1)
                for m in range(2, n + 1)
                if n % m == 0
            ]
        raise ValueError(f"unknown family {self.family!r}")

    def rings(self, *, max_order_cap: int = DEFAULT_ORDER_CAP) -> list[FiniteRing]:
        exprs = self.expressions()
        if not exprs:
            raise ValueError(f"family {self.family!r} generated no rings")
        rings = [make_ring(e, max_order=max_order_cap) for e in exprs]
        if self.exclude_fields:
            rings = [r for r in rings if r.nonzero_zero_divisors]
            if not rings:
                raise ValueError(f"family {self.family!r} is empty after filtering")
        return rings


def _family_worker(args) -> list[TheoremReport]:
    expr, check_ids, options, cap = args
    ring = make_ring(expr, max_order=cap)
    return [run_check(cid, ring, options) for cid in check_ids]


def run_family(
    spec: FamilySpec,
    check_ids=None,
    *,
    options: CheckOptions = CheckOptions(),
    jobs: int = 1,
    max_order_cap: int = DEFAULT_ORDER_CAP,
) -> list[TheoremReport]:
    """Run the requested checks over every ring of the family, in order.

    The report list is deterministic for a given spec regardless of `jobs`.
    """
    if check_ids is None:
        check_ids = ALL_CHECK_IDS
    check_ids = tuple(check_ids)
    for cid in check_ids:
        if cid not in CHECKS:
            raise ValueError(f"unknown check id {cid!r}")
    rings = spec.rings(max_order_cap=max_order_cap)
    if jobs <= 1:
        reports = []
        for ring in rings:
            for cid in check_ids:
                reports.append(run_check(cid, ring, options))
        return reports
    tasks = [(ring.expr(), check_ids, options, max_order_cap) for ring in rings]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunks = list(pool.map(_family_worker, tasks, chunksize=4))
    return [report for chunk in chunks for report in chunk]


def summarize(reports) -> dict:
    """Aggregate verdict counts per check id; ok means zero disagreements."""
    per_check: dict[str, dict[str, int]] = {}
    disagreements = []
    for r in reports:
        bucket = per_check.setdefault(r.check, {"agree": 0, "disagree": 0, "skipped": 0})
        bucket[r.verdict] += 1
        if r.verdict == "disagree":
            disagreements.append(r.to_json())
    return {
        "checks": per_check,
        "total": len(reports),
        "disagreements": disagreements,
        "ok": not disagreements,
    }
