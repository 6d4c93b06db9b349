"""Non-isomorphic graph/tree universes and the exhaustive verification drivers.

Canonical forms come from a labeling search that minimizes the upper-triangle
adjacency bitstring column by column: at each position only vertices achieving
the minimal next column are branched on, with global prefix pruning.  Graph
universes grow one vertex at a time from the previous order's representatives,
deduplicated by canonical token; trees grow by leaf attachment, deduplicated
by a center-rooted subtree code.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from domiperf.graph import Graph, GraphError, bits, build_graph
from domiperf.formats import emit_graph6
from domiperf.graph_classes import (
    block_graph_corollary,
    chordal_corollary,
    claw_free_corollary,
    is_block_graph,
    is_chordal,
    line_graph,
    line_graph_criterion,
    middle_graph,
    middle_graph_criterion,
    middle_graph_star_phrasing,
    tree_corollary_conditions,
)
from domiperf.invariants import parameter_profile, verify_witness
from domiperf.patterns import is_claw_free
from domiperf.perfection import (
    SubgraphTables,
    is_minimal_imperfect,
    perfect_by_definition,
    perfect_by_gamma2,
    perfect_by_theorem,
)

MAX_ENUM_ORDER = 8
MAX_TREE_ORDER = 12
MAX_CANONICAL_ORDER = 10
COUNTEREXAMPLE_CAP = 100


@dataclass(frozen=True)
class CanonicalForm:
    order: int
    token: str


@dataclass
class VerificationReport:
    """Per-universe tally of exhaustively checked graphs."""

    universe: str
    checked: int = 0
    agreements: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    counterexample_total: int = 0
    elapsed_seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    def record(self, ok: bool, detail: dict | None = None) -> None:
        self.checked += 1
        if ok:
            self.agreements += 1
        else:
            self.counterexample_total += 1
            if detail is not None and len(self.counterexamples) < COUNTEREXAMPLE_CAP:
                self.counterexamples.append(detail)

    @property
    def clean(self) -> bool:
        return self.counterexample_total == 0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


# -- canonical labeling -----------------------------------------------------

def _min_labeling(G: Graph) -> list[int]:
    """Vertex order whose relabeling minimizes the triangle bitstring."""
    n = G.n
    if n <= 1:
        return list(range(n))
    adj = G.adj
    best_cols: list[int] | None = None
    best_map: list[int] | None = None
    mapping: list[int] = []
    cols: list[int] = []

    def rec(vals: dict[int, int]) -> None:
        # vals: next column value for each unused vertex, w.r.t. the current
        # mapping prefix; earlier rows are higher bits
        nonlocal best_cols, best_map
        q = len(mapping)
        if not vals:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_map = mapping.copy()
            return
        cmin = min(vals.values())
        if best_cols is not None:
            prefix = best_cols[: q - 1]
            if cols > prefix or (cols == prefix and cmin > best_cols[q - 1]):
                return
        cols.append(cmin)
        for u in sorted(w for w, c in vals.items() if c == cmin):
            mapping.append(u)
            rec({w: (c << 1) | (adj[w] >> u & 1) for w, c in vals.items() if w != u})
            mapping.pop()
        cols.pop()

    for first in range(n):
        mapping.append(first)
        rec({w: adj[w] >> first & 1 for w in range(n) if w != first})
        mapping.pop()
    assert best_map is not None
    return best_map


def _relabel(G: Graph, order: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(order)}
    rows = [0] * G.n
    for v in range(G.n):
        for u in bits(G.adj[v]):
            rows[index[v]] |= 1 << index[u]
    return Graph(G.n, tuple(rows))


def canonical_graph(G: Graph, max_order: int = MAX_CANONICAL_ORDER) -> Graph:
    if G.n > max_order:
        raise GraphError(f"canonical labeling capped at order {max_order}")
    return _relabel(G, _min_labeling(G))


def canonical_form(G: Graph, max_order: int = MAX_CANONICAL_ORDER) -> CanonicalForm:
    """Isomorphism-invariant token: graph6 of the minimum labeling."""
    return CanonicalForm(G.n, emit_graph6(canonical_graph(G, max_order)))


# -- universes --------------------------------------------------------------

_UNIVERSE_CACHE: dict[int, list[Graph]] = {}
_TREE_CACHE: dict[int, list[Graph]] = {}

_FILTERS: dict[str, Callable[[Graph], bool]] = {
    "connected": Graph.is_connected,
    "tree": Graph.is_tree,
    "chordal": is_chordal,
    "block-graph": is_block_graph,
    "claw-free": is_claw_free,
}


def _all_graphs(order: int) -> list[Graph]:
    if order in _UNIVERSE_CACHE:
        return _UNIVERSE_CACHE[order]
    if order == 1:
        level = {emit_graph6(build_graph(1, [])): build_graph(1, [])}
    else:
        prev = _all_graphs(order - 1)
        k = order - 1
        level = {}
        for parent in prev:
            for nbmask in range(1 << k):
                rows = [
                    parent.adj[v] | ((nbmask >> v & 1) << k) for v in range(k)
                ]
                rows.append(nbmask)
                child = Graph(order, tuple(rows))
                token = emit_graph6(_relabel(child, _min_labeling(child)))
                if token not in level:
                    level[token] = child
        level = dict(sorted(level.items()))
    out = list(level.values())
    _UNIVERSE_CACHE[order] = out
    return out


def _tree_code(G: Graph) -> str:
    """Rooted-subtree code minimized over the tree's one or two centers."""
    if G.n == 1:
        return "()"

    def peel_centers() -> list[int]:
        degrees = [G.degree(v) for v in range(G.n)]
        alive = set(range(G.n))
        leaves = [v for v in alive if degrees[v] <= 1]
        while len(alive) > 2:
            nxt = []
            for v in leaves:
                alive.discard(v)
                for u in bits(G.adj[v]):
                    if u in alive:
                        degrees[u] -= 1
                        if degrees[u] == 1:
                            nxt.append(u)
            leaves = nxt
        return sorted(alive)

    def rooted(v: int, parent: int) -> str:
        subs = sorted(rooted(u, v) for u in bits(G.adj[v]) if u != parent)
        return "(" + "".join(subs) + ")"

    return min(rooted(c, -1) for c in peel_centers())


def _all_trees(order: int) -> list[Graph]:
    if order in _TREE_CACHE:
        return _TREE_CACHE[order]
    if order == 1:
        out = [build_graph(1, [])]
    else:
        out = []
        seen = set()
        for parent in _all_trees(order - 1):
            k = order - 1
            for v in range(k):
                child = build_graph(order, parent.edges() + [(v, k)])
                code = _tree_code(child)
                if code not in seen:
                    seen.add(code)
                    out.append(child)
    _TREE_CACHE[order] = out
    return out


def enumerate_graphs(
    order: int, filter: str | Callable[[Graph], bool] | None = None
) -> Iterator[Graph]:
    """One representative per isomorphism class at the given order."""
    if order < 1:
        raise GraphError("enumeration starts at order 1")
    predicate = _FILTERS[filter] if isinstance(filter, str) else filter
    if filter == "tree":
        if order > MAX_TREE_ORDER:
            raise GraphError(f"tree enumeration capped at order {MAX_TREE_ORDER}")
        yield from _all_trees(order)
        return
    if order > MAX_ENUM_ORDER:
        raise GraphError(f"full enumeration capped at order {MAX_ENUM_ORDER}")
    for G in _all_graphs(order):
        if predicate is None or predicate(G):
            yield G


def enumerate_up_to(order_max: int, filter=None) -> Iterator[Graph]:
    for order in range(1, order_max + 1):
        yield from enumerate_graphs(order, filter)


# -- verification drivers ---------------------------------------------------

def verify_theorem(order_max: int) -> VerificationReport:
    """Compare the three perfection methods on every graph up to order_max."""
    if order_max > MAX_ENUM_ORDER:
        raise GraphError(f"verification capped at order {MAX_ENUM_ORDER}")
    start = time.perf_counter()
    report = VerificationReport(universe=f"all graphs, orders 1..{order_max}")
    minimal_tokens = []
    for G in enumerate_up_to(order_max):
        tables = SubgraphTables(G)
        vd = perfect_by_definition(G, tables=tables)
        vg = perfect_by_gamma2(G, tables=tables)
        vt = perfect_by_theorem(G)
        ok = vd.perfect == vg.perfect == vt.perfect
        detail = None
        if not ok:
            detail = {
                "graph6": emit_graph6(G),
                "definition": vd.perfect,
                "gamma2": vg.perfect,
                "theorem": vt.perfect,
            }
        report.record(ok, detail)
        if not vd.perfect and is_minimal_imperfect(G):
            minimal_tokens.append(canonical_form(G).token)
    report.notes.append(
        f"minimal imperfect graphs found: {len(minimal_tokens)}"
        + (f" ({', '.join(sorted(minimal_tokens))})" if minimal_tokens else "")
    )
    report.elapsed_seconds = time.perf_counter() - start
    return report


def verify_chain(order_max: int) -> VerificationReport:
    """Assert gamma <= i <= alpha_c <= alpha plus witness soundness everywhere."""
    if order_max > MAX_ENUM_ORDER:
        raise GraphError(f"verification capped at order {MAX_ENUM_ORDER}")
    start = time.perf_counter()
    report = VerificationReport(universe=f"all graphs, orders 1..{order_max}")
    for G in enumerate_up_to(order_max):
        try:
            profile = parameter_profile(G)
            ok = verify_witness(G, profile)
        except AssertionError:
            ok = False
        report.record(ok, None if ok else {"graph6": emit_graph6(G)})
    report.elapsed_seconds = time.perf_counter() - start
    return report


def verify_corollaries(
    order_max: int,
    tree_order_max: int = MAX_TREE_ORDER,
    line_host_order_max: int = 7,
    middle_host_order_max: int = 5,
) -> VerificationReport:
    """Run every class-restricted equivalence exhaustively and aggregate."""
    if order_max > MAX_ENUM_ORDER:
        raise GraphError(f"verification capped at order {MAX_ENUM_ORDER}")
    if tree_order_max > MAX_TREE_ORDER:
        raise GraphError(f"tree sweep capped at order {MAX_TREE_ORDER}")
    if line_host_order_max > 7 or middle_host_order_max > 5:
        raise GraphError("line hosts capped at order 7, middle hosts at order 5")
    start = time.perf_counter()
    report = VerificationReport(
        universe=(
            f"corollary sweeps: trees<={tree_order_max}, classes<={order_max}, "
            f"line hosts<={line_host_order_max}, middle hosts<={middle_host_order_max}"
        )
    )

    tree_checked = 0
    for G in enumerate_up_to(tree_order_max, "tree"):
        conds = tree_corollary_conditions(G)
        ok = len(set(conds)) == 1
        report.record(ok, None if ok else {"sweep": "tree", "conditions": list(conds)})
        tree_checked += 1
    report.notes.append(f"tree sweep: {tree_checked} trees")

    for name, recognizer, criterion in (
        ("chordal", is_chordal, chordal_corollary),
        ("claw-free", is_claw_free, claw_free_corollary),
    ):
        count = 0
        for G in enumerate_up_to(order_max):
            if not recognizer(G):
                continue
            ok = criterion(G) == perfect_by_theorem(G).perfect
            report.record(ok, None if ok else {"sweep": name, "graph6": emit_graph6(G)})
            count += 1
        report.notes.append(f"{name} sweep: {count} graphs")

    count = 0
    for G in enumerate_up_to(order_max):
        if not (G.is_connected() and is_block_graph(G)):
            continue
        ok = block_graph_corollary(G) == perfect_by_theorem(G).perfect
        report.record(ok, None if ok else {"sweep": "block", "graph6": emit_graph6(G)})
        count += 1
    report.notes.append(f"block graph sweep: {count} graphs")

    count = 0
    for H in enumerate_up_to(line_host_order_max):
        ok = line_graph_criterion(H) == perfect_by_theorem(line_graph(H)).perfect
        report.record(ok, None if ok else {"sweep": "line", "host_graph6": emit_graph6(H)})
        count += 1
    report.notes.append(f"line graph sweep: {count} hosts")

    count = 0
    phrasing_gaps = []
    for H in enumerate_up_to(middle_host_order_max):
        matching_ok = middle_graph_criterion(H)
        ok = matching_ok == perfect_by_theorem(middle_graph(H)).perfect
        report.record(ok, None if ok else {"sweep": "middle", "host_graph6": emit_graph6(H)})
        count += 1
        if matching_ok and not middle_graph_star_phrasing(H):
            phrasing_gaps.append(emit_graph6(H))
    report.notes.append(f"middle graph sweep: {count} hosts")
    if phrasing_gaps:
        report.notes.append(
            "middle-graph star phrasing disagrees with the matching criterion on "
            "hosts whose only nontrivial component is a triangle: "
            + ", ".join(phrasing_gaps)
        )

    report.elapsed_seconds = time.perf_counter() - start
    return report
