"""Hamiltonian cycle to connected f-factor: the instance family generator.

For a graph ``G`` on ``N`` vertices the host graph ``G'`` is a disjoint union
of ``N - 2`` cliques, one representative vertex per clique forming the set
``A``.  For each 4-vertex path ``u0, u1, u2, u3`` of ``G`` with ``u1`` fixed,
``G - {u1, u2}`` is copied onto ``A`` and the targets force every clique edge
plus a Hamiltonian path of ``G'[A]`` from ``sigma(u0)`` to ``sigma(u3)``.  So
some emitted instance has a connected f-factor iff ``G`` is Hamiltonian.

Paper mode sizes the construction by ``n = ceil(2 ** N ** (1 / (1 + eps)))``
which is only materializable for tiny inputs; desk mode fixes every clique to
``part_size_override`` vertices.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from cfactor.graph import DegreeSpec, Graph, Partition, SizeLimitError, ValidationError
from cfactor.oracle import HAMILTON_SOFT_LIMIT, has_connected_f_factor, has_hamiltonian_cycle

MATERIALIZE_LIMIT = 5000
VERIFY_EDGE_LIMIT = 40


@dataclass(frozen=True)
class ReductionParams:
    epsilon: Fraction = Fraction(1)
    part_size_override: int | None = None
    max_output: int | None = None

    def __post_init__(self) -> None:
        eps = Fraction(self.epsilon)
        object.__setattr__(self, "epsilon", eps)
        if eps <= 0:
            raise ValidationError("epsilon must be positive")
        if self.part_size_override is not None and self.part_size_override < 3:
            raise ValidationError("part size override must be at least 3")
        if self.max_output is not None and self.max_output < 0:
            raise ValidationError("max_output must be non-negative")


@dataclass(frozen=True)
class ReductionLayout:
    """Size parameters of the construction for an ``N``-vertex input."""

    N: int
    n: int
    part_sizes: tuple[int, ...]
    min_part_size: int
    mode: str
    fits: bool


@dataclass(frozen=True)
class ReductionInstance:
    graph: Graph
    f: DegreeSpec
    path_witness: tuple[int, int, int, int]
    sigma: dict[int, int]
    partition: Partition
    representatives: tuple[int, ...]


def parts_floor_bound(m: int, k: int) -> bool:
    """Whether ``floor(m / (ceil(m / k) + 1)) >= k - 2``; requires ``k < sqrt(m)``."""
    if k <= 0 or k * k >= m:
        raise ValidationError(f"need 0 < k < sqrt(m), got m={m}, k={k}")
    return m // (-(-m // k) + 1) >= k - 2


def layout(N: int, params: ReductionParams) -> ReductionLayout:
    """Vertex count and clique sizes for an ``N``-vertex source graph.

    Paper-mode quantities involve real logarithms and are evaluated in
    floating point; they only size the construction.
    """
    if N < 4:
        raise ValidationError("the reduction needs at least 4 vertices")
    parts = N - 2
    if params.part_size_override is not None:
        s = params.part_size_override
        return ReductionLayout(N, s * parts, (s,) * parts, s, "desk", True)
    eps = float(params.epsilon)
    exponent = N ** (1.0 / (1.0 + eps))
    if exponent > 60:
        raise SizeLimitError(
            f"paper-mode vertex count 2**{exponent:.1f} is astronomically large; "
            "pass a part size override"
        )
    n = math.ceil(2.0**exponent)
    k = math.log2(n) ** (1.0 + eps) if n > 1 else 0.0
    s = (math.ceil(n / k) if k > 0 else n) + 1
    fits = parts * s <= n
    if N * N < n:
        # k >= N, so cliques of size ceil(n/N) + 1 >= s must already fit
        fits = fits and parts_floor_bound(n, N)
    if not fits:
        return ReductionLayout(N, n, (), s, "paper", False)
    sizes = [s] * parts
    for i in range(n - parts * s):
        sizes[i % parts] += 1
    return ReductionLayout(N, n, tuple(sizes), s, "paper", True)


def four_paths(G: Graph, u1: int = 0) -> Iterator[tuple[int, int, int, int]]:
    """Ordered simple paths ``u0, u1, u2, u3`` with ``u1`` fixed, both orientations."""
    for u0 in G.neighbors(u1):
        for u2 in G.neighbors(u1):
            if u2 == u0:
                continue
            for u3 in G.neighbors(u2):
                if u3 not in (u0, u1):
                    yield (u0, u1, u2, u3)


def build_instance(
    G: Graph, sizes: tuple[int, ...], path: tuple[int, int, int, int]
) -> ReductionInstance:
    u0, u1, u2, u3 = path
    starts = [sum(sizes[:i]) for i in range(len(sizes))]
    n = sum(sizes)
    reps = tuple(starts)
    edges = []
    clique_deg = [0] * n
    blocks = []
    for start, size in zip(starts, sizes):
        block = range(start, start + size)
        blocks.append(block)
        for a in block:
            clique_deg[a] = size - 1
            for b in range(a + 1, start + size):
                edges.append((a, b))
    rest = [v for v in range(G.n) if v not in (u1, u2)]
    sigma = dict(zip(rest, reps))
    for x, y in G.edges:
        if x in sigma and y in sigma:
            edges.append((sigma[x], sigma[y]))
    f = list(clique_deg)
    for a in reps:
        f[a] += 2
    f[sigma[u0]] -= 1
    f[sigma[u3]] -= 1
    return ReductionInstance(
        graph=Graph.from_edges(n, edges),
        f=DegreeSpec(tuple(f)),
        path_witness=path,
        sigma=sigma,
        partition=Partition(blocks, n),
        representatives=reps,
    )


def generate_family(G: Graph, params: ReductionParams | None = None) -> Iterator[ReductionInstance]:
    """Emit one instance per ordered 4-vertex path through vertex 0.

    Raises:
        ValidationError: fewer than 4 vertices, or paper-mode cliques do not fit.
        SizeLimitError: paper-mode vertex count too large to materialize.
    """
    params = params or ReductionParams()
    lay = layout(G.n, params)
    if not lay.fits:
        raise ValidationError(
            f"paper-mode cliques of size {lay.min_part_size} do not fit in {lay.n} vertices; "
            "pass a part size override"
        )
    if lay.n > MATERIALIZE_LIMIT:
        raise SizeLimitError(f"paper-mode instance has {lay.n} vertices; pass a part size override")
    for count, path in enumerate(four_paths(G)):
        if params.max_output is not None and count >= params.max_output:
            return
        yield build_instance(G, lay.part_sizes, path)


def verify_reduction(G: Graph, params: ReductionParams | None = None) -> bool:
    """Check that ``G`` is Hamiltonian iff some emitted instance has a
    connected f-factor, deciding both sides by brute force.

    Raises:
        SizeLimitError: when either side exceeds the oracle limits.
    """
    if G.n > HAMILTON_SOFT_LIMIT:
        raise SizeLimitError(f"{G.n} vertices exceed the Hamiltonian oracle limit")
    hamiltonian = has_hamiltonian_cycle(G)
    solvable = False
    for inst in generate_family(G, params):
        if inst.graph.m > VERIFY_EDGE_LIMIT:
            raise SizeLimitError(
                f"instance with {inst.graph.m} edges exceeds the oracle limit {VERIFY_EDGE_LIMIT}"
            )
        if has_connected_f_factor(inst.graph, inst.f):
            solvable = True
            break
    return hamiltonian == solvable
