"""Connected f-factors by recursive partition refinement.

Starting from any f-factor ``H_0`` and the one-part partition ``{V}``, every
level splits each part into the components of the current factor inside it.
If nothing splits, the factor is connected.  Otherwise some f-factor ``H'``
containing a spanning tree of the quotient is found, and the current factor
is moved toward it by switching the minimal alternating circuits of the
symmetric difference that carry the newly needed tree edges.  When no f-factor
connects the refined partition, that partition certifies that no connected
f-factor exists.

In weighted mode ``H_0`` is a minimum-weight f-factor and ``H'`` the lightest
f-factor connecting the refined partition, which makes the final connected
factor a minimum-weight one.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice

from cfactor.alternating import ColoredSubgraph, color_difference, min_ac_set, switching
from cfactor.factor import (
    _as_spec,
    f_factor,
    f_factor_with_forced,
    is_f_factor,
    min_weight_f_factor,
    min_weight_f_factor_with_forced,
)
from cfactor.graph import (
    DegreeSpec,
    Edge,
    FactorSubgraph,
    Graph,
    Partition,
    ValidationError,
    Weight,
    connects,
    refine_partition,
    spanning_trees,
)

log = logging.getLogger(__name__)

FOUND = "found"
NO_F_FACTOR = "no-f-factor"
UNCONNECTABLE = "partition-unconnectable"


class SolverInvariantError(RuntimeError):
    """An internal invariant of the recursion broke; indicates a solver bug."""


@dataclass
class LevelRecord:
    level: int
    parts: int
    trees_examined: int
    fallback_used: bool
    circuits: int = 0
    min_retention_slack: int | None = None


@dataclass
class SolveTrace:
    records: list[LevelRecord] = field(default_factory=list)
    outcome: str | None = None
    witness: Partition | None = None
    g: Fraction | None = None
    bound_premise: bool = False

    @property
    def recursive_calls(self) -> int:
        return len(self.records)

    @property
    def fallback_used(self) -> bool:
        return any(r.fallback_used for r in self.records)

    def to_dict(self) -> dict:
        return {
            "levels": [
                {
                    "level": r.level,
                    "parts": r.parts,
                    "trees_examined": r.trees_examined,
                    "fallback_used": r.fallback_used,
                    "circuits": r.circuits,
                    "min_retention_slack": r.min_retention_slack,
                }
                for r in self.records
            ],
            "fallback_used": self.fallback_used,
            "recursive_calls": self.recursive_calls,
            "g": None if self.g is None else str(self.g),
            "bound_premise": self.bound_premise,
        }


@dataclass
class SolveResult:
    factor: FactorSubgraph | None
    trace: SolveTrace

    @property
    def found(self) -> bool:
        return self.factor is not None

    @property
    def weight(self) -> Weight | None:
        if self.factor is None or not self.factor.graph.weighted:
            return None
        return self.factor.weight()


@dataclass
class NextFactorResult:
    factor: FactorSubgraph
    circuits: list[ColoredSubgraph]
    fallback_used: bool


def _g_of(G: Graph, f: DegreeSpec) -> Fraction | None:
    low = min(f.values, default=0)
    return Fraction(G.n, low) if low > 0 else None


def partition_connector(
    G: Graph,
    f: DegreeSpec | Sequence[int],
    Q: Partition,
    H_prev: FactorSubgraph,
    weighted: bool = False,
    threads: int = 1,
) -> tuple[FactorSubgraph, tuple[Edge, ...], int] | None:
    """Find an f-factor containing a spanning tree of G/Q.

    Returns ``(H', tree, trees_examined)`` or ``None`` when no f-factor
    connects ``Q``.  Unweighted mode takes the first tree (in the fixed
    enumeration order) that extends to an f-factor; weighted mode scans every
    tree and keeps the lightest factor, earliest tree winning ties.
    """
    f = _as_spec(f)
    solve = min_weight_f_factor_with_forced if weighted else f_factor_with_forced

    def attempt(tree: tuple[Edge, ...]) -> FactorSubgraph | None:
        # forcing the whole tree keeps H' connecting Q even where the tree
        # reuses edges of H_prev
        if weighted:
            return solve(G, f, None, tree)
        return solve(G, f, tree)

    trees = spanning_trees(G, Q)
    examined = 0
    best: tuple[Weight, FactorSubgraph, tuple[Edge, ...]] | None = None
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while True:
            batch = list(islice(trees, max(threads, 1) * 4)) if pool else list(islice(trees, 1))
            if not batch:
                break
            results = list(pool.map(attempt, batch)) if pool else [attempt(batch[0])]
            for tree, H in zip(batch, results):
                examined += 1
                if H is None:
                    continue
                if not weighted:
                    return H, tree, examined
                hw = H.weight()
                if best is None or hw < best[0]:
                    best = (hw, H, tree)
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
    if best is None:
        return None
    return best[1], best[2], examined


def next_factor(
    H_prev: FactorSubgraph,
    H_new: FactorSubgraph,
    Q: Partition,
    tree: Sequence[Edge],
    weighted: bool = False,
) -> NextFactorResult:
    """Move ``H_prev`` toward ``H_new`` through minimal alternating circuits.

    The circuits switched are those of ``H_prev`` vs ``H_new`` that carry the
    tree edges missing from ``H_prev``.  If the switched factor fails to
    connect ``Q`` (or, weighted, is heavier than ``H_new``) ``H_new`` itself
    is returned and ``fallback_used`` is set.
    """
    forced = {e for e in tree if e not in H_prev.edges}
    if not set(tree) <= H_new.edges:
        raise SolverInvariantError("tree is not contained in the connecting factor")
    if H_prev.degree != H_new.degree:
        raise SolverInvariantError("factors passed to next_factor have different degrees")
    if not connects(H_new.edges, Q):
        raise SolverInvariantError("connecting factor does not connect the partition")
    diff = color_difference(H_prev, H_new)
    circuits: list[ColoredSubgraph] = []
    for comp in diff.components():
        circuits.extend(min_ac_set(comp, forced & comp.edges))
    H_next = switching(H_prev, circuits)
    ok = connects(H_next.edges, Q)
    if ok and weighted and H_next.weight() != H_new.weight():
        ok = False
    if not ok:
        return NextFactorResult(H_new, circuits, True)
    return NextFactorResult(H_next, circuits, False)


def _retention_slack(
    H_prev: FactorSubgraph, H_next: FactorSubgraph, f: DegreeSpec, parts: int
) -> int:
    slack = None
    for v in range(H_prev.graph.n):
        kept = len(H_prev.neighbors(v) & H_next.neighbors(v))
        s = kept - (f[v] - 2 * (parts - 1))
        slack = s if slack is None else min(slack, s)
    return 0 if slack is None else slack


def restricted_f_factor(
    G: Graph,
    f: DegreeSpec | Sequence[int],
    H: FactorSubgraph,
    Q: Partition,
    weighted: bool = False,
    trace: SolveTrace | None = None,
    threads: int = 1,
) -> FactorSubgraph | None:
    """Refine ``Q`` by ``H`` and recurse until the factor is connected.

    Returns a connected f-factor, or ``None`` after recording the partition
    that no f-factor connects as ``trace.witness``.
    """
    f = _as_spec(f)
    if trace is None:
        trace = SolveTrace()
    while True:
        if not is_f_factor(G, f, H):
            raise SolverInvariantError("current subgraph is not an f-factor")
        if not connects(H.edges, Q):
            raise SolverInvariantError("current factor does not connect its partition")
        Q_next = refine_partition(H, Q)
        if Q_next == Q:
            trace.outcome = FOUND
            return H
        if len(trace.records) >= G.n:
            raise SolverInvariantError("recursion deeper than the vertex count")
        found = partition_connector(G, f, Q_next, H, weighted, threads)
        if found is None:
            trace.outcome = UNCONNECTABLE
            trace.witness = Q_next
            return None
        H_new, tree, examined = found
        step = next_factor(H, H_new, Q_next, tree, weighted)
        record = LevelRecord(
            level=len(trace.records) + 1,
            parts=len(Q_next),
            trees_examined=examined,
            fallback_used=step.fallback_used,
            circuits=len(step.circuits),
        )
        if not step.fallback_used:
            record.min_retention_slack = _retention_slack(H, step.factor, f, len(Q_next))
        trace.records.append(record)
        log.debug("level %d: %d parts, %d trees", record.level, record.parts, examined)
        H, Q = step.factor, Q_next


def _solve(G: Graph, f, weighted: bool, threads: int) -> SolveResult:
    f = _as_spec(f)
    f.check_length(G)
    trace = SolveTrace(g=_g_of(G, f))
    if trace.g is not None:
        trace.bound_premise = G.n >= 2 * trace.g**4
    H0 = min_weight_f_factor(G, f) if weighted else f_factor(G, f)
    if H0 is None:
        trace.outcome = NO_F_FACTOR
        return SolveResult(None, trace)
    H = restricted_f_factor(G, f, H0, Partition.whole(G.n), weighted, trace, threads)
    return SolveResult(H, trace)


def connected_f_factor(G: Graph, f: DegreeSpec | Sequence[int], threads: int = 1) -> SolveResult:
    """A connected f-factor of ``G`` (``result.factor``) or ``None`` with the
    reason recorded in ``result.trace.outcome``."""
    return _solve(G.unweighted(), f, False, threads)


def min_connected_f_factor(
    G: Graph, f: DegreeSpec | Sequence[int], w=None, threads: int = 1
) -> SolveResult:
    """Minimum-weight connected f-factor; weights come from ``w`` or ``G``."""
    if w is not None:
        G = G.with_weights(w)
    if not G.weighted:
        raise ValidationError("min_connected_f_factor needs edge weights")
    return _solve(G, f, True, threads)
