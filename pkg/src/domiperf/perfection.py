"""Common-domination perfection decided three independent ways.

The definition-based and gamma=2-based checks sweep every induced subgraph
using per-graph bitmask tables (closed-neighborhood unions, an independence
DP over submasks, and a full domination-number table).  The theorem-based
check only runs the forbidden-pattern search, so the two routes stay
independent and their agreement is itself a verifiable claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from domiperf.graph import Graph, GraphError, mask_of, set_of
from domiperf.patterns import Embedding, Pattern, forbidden_free

DEFAULT_CAP = 16


@dataclass(frozen=True)
class SubsetWitness:
    """An induced subgraph with a domination / common-independence gap."""

    vertices: frozenset[int]
    gamma: int
    common_ind: int


@dataclass(frozen=True)
class PerfectionVerdict:
    perfect: bool
    method: str  # "definition" | "gamma2-definition" | "theorem"
    witness: SubsetWitness | tuple[Pattern, Embedding] | None = None


class SubgraphTables:
    """Bitmask tables for gamma and alpha_c over every induced subgraph.

    gamma comes from exhaustive minimization over dominating subsets (the
    3^n subset-of-subset sweep), alpha from the standard include/exclude DP
    on the lowest vertex.  Cost is exponential; capped at ``DEFAULT_CAP``
    unless the caller raises it.
    """

    def __init__(self, G: Graph, cap: int = DEFAULT_CAP):
        if G.n > cap:
            raise GraphError(f"order {G.n} exceeds the subset-sweep cap {cap}")
        self.graph = G
        n = G.n
        size = 1 << n
        closed = G.closed_masks()
        self.closed = closed

        ncl = [0] * size
        for m in range(1, size):
            lb = m & -m
            ncl[m] = ncl[m ^ lb] | closed[lb.bit_length() - 1]
        self._ncl = ncl

        alpha = [0] * size
        for m in range(1, size):
            lb = m & -m
            v = lb.bit_length() - 1
            without = alpha[m ^ lb]
            with_v = 1 + alpha[m & ~closed[v]]
            alpha[m] = with_v if with_v > without else without
        self.alpha = alpha

        gamma = [0] * size
        for s in range(1, size):
            best = s.bit_count()
            d = (s - 1) & s
            while d:
                if not s & ~ncl[d]:
                    c = d.bit_count()
                    if c < best:
                        best = c
                d = (d - 1) & s
            gamma[s] = best
        self.gamma = gamma

    def common_ind(self, s: int) -> int:
        """alpha_c of the induced subgraph on mask ``s`` (nonempty)."""
        alpha = self.alpha
        closed = self.closed
        best = self.graph.n + 1
        m = s
        while m:
            lb = m & -m
            m ^= lb
            v = lb.bit_length() - 1
            cur = 1 + alpha[s & ~closed[v]]
            if cur < best:
                best = cur
        return best


def _ascending_subsets(n: int):
    # increasing size, lexicographic within a size
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            yield mask_of(combo)


def perfect_by_definition(
    G: Graph, cap: int = DEFAULT_CAP, tables: SubgraphTables | None = None
) -> PerfectionVerdict:
    """Check gamma == alpha_c on every nonempty induced subgraph directly."""
    if G.n == 0:
        raise GraphError("perfection undefined on the empty graph")
    t = tables if tables is not None else SubgraphTables(G, cap)
    for s in _ascending_subsets(G.n):
        g = t.gamma[s]
        ac = t.common_ind(s)
        if g != ac:
            return PerfectionVerdict(False, "definition", SubsetWitness(set_of(s), g, ac))
    return PerfectionVerdict(True, "definition")


def perfect_by_gamma2(
    G: Graph, cap: int = DEFAULT_CAP, tables: SubgraphTables | None = None
) -> PerfectionVerdict:
    """Only induced subgraphs with gamma = 2 are tested; failure is alpha_c = 3."""
    if G.n == 0:
        raise GraphError("perfection undefined on the empty graph")
    t = tables if tables is not None else SubgraphTables(G, cap)
    for s in _ascending_subsets(G.n):
        if t.gamma[s] != 2:
            continue
        ac = t.common_ind(s)
        if ac == 3:
            return PerfectionVerdict(
                False, "gamma2-definition", SubsetWitness(set_of(s), 2, ac)
            )
    return PerfectionVerdict(True, "gamma2-definition")


def perfect_by_theorem(G: Graph) -> PerfectionVerdict:
    """Forbidden-pattern route: perfect iff none of the ten patterns embeds."""
    free, witness = forbidden_free(G)
    return PerfectionVerdict(free, "theorem", witness)


def is_minimal_imperfect(G: Graph, cap: int = DEFAULT_CAP) -> bool:
    """gamma < alpha_c on G itself, equality on every proper induced subgraph."""
    if G.n == 0:
        raise GraphError("perfection undefined on the empty graph")
    t = SubgraphTables(G, cap)
    full = G.vertex_mask
    if t.gamma[full] >= t.common_ind(full):
        return False
    for s in range(1, full):
        if t.gamma[s] != t.common_ind(s):
            return False
    return True


def search_minimal_imperfect(order: int) -> list[Graph]:
    """All non-isomorphic minimal imperfect graphs of the given order."""
    from domiperf.enumeration import canonical_graph, enumerate_graphs

    if order > 8:
        raise GraphError("minimal-imperfect search capped at order 8")
    found = []
    for G in enumerate_graphs(order):
        t = SubgraphTables(G)
        full = G.vertex_mask
        if t.gamma[full] >= t.common_ind(full):
            continue
        # quick hereditary filter: every vertex-deleted subgraph must be perfect
        if any(
            not perfect_by_definition(G.induced_mask(full & ~(1 << v))).perfect
            for v in range(G.n)
        ):
            continue
        if is_minimal_imperfect(G):
            found.append(canonical_graph(G))
    return found
