"""The forbidden-graph catalog and the induced/non-induced embedding search.

The ten minimal imperfect graphs are stored with the 1-based labels of their
published drawings.  Utility patterns (claw, paths, a 6-cycle, disjoint path
pairs) share the same search engine so the class-restricted criteria reuse it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations

from domiperf.graph import Graph, build_graph


@dataclass(frozen=True)
class Pattern:
    """A named catalog graph with its edge list on labels 1..order."""

    name: str
    order: int
    edges: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        return build_graph(self.order, [(u - 1, v - 1) for u, v in self.edges])


@dataclass(frozen=True)
class Embedding:
    """Injective pattern-to-host vertex map."""

    mapping: tuple[int, ...]
    mode: str  # "induced" | "subgraph"

    def check(self, host: Graph, pattern: Pattern) -> bool:
        pg = pattern.graph()
        if len(set(self.mapping)) != pg.n:
            return False
        for p in range(pg.n):
            for q in range(p + 1, pg.n):
                pe = pg.has_edge(p, q)
                he = host.has_edge(self.mapping[p], self.mapping[q])
                if pe and not he:
                    return False
                if self.mode == "induced" and not pe and he:
                    return False
        return True


_H_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    "H1": ((1, 2), (1, 3), (1, 5), (4, 5), (5, 6)),
    "H2": ((1, 2), (1, 3), (1, 5), (4, 5), (5, 6), (3, 4)),
    "H3": ((1, 2), (1, 3), (1, 5), (4, 5), (5, 6), (3, 4), (3, 6)),
    "H4": ((1, 2), (1, 3), (1, 5), (4, 5), (5, 6), (3, 4), (3, 6), (2, 4), (2, 6)),
    "H5": ((1, 2), (1, 3), (1, 5), (3, 4), (4, 5), (5, 6), (2, 6)),
    "H6": ((1, 2), (1, 3), (1, 5), (3, 4), (3, 6), (4, 5), (5, 6), (2, 6)),
    "H7": ((1, 3), (3, 5), (2, 4), (4, 6)),
    "H8": ((1, 3), (3, 5), (2, 4), (4, 6), (1, 2)),
    "H9": ((1, 3), (3, 5), (2, 4), (4, 6), (1, 2), (5, 6)),
    "H10": ((1, 2), (2, 4), (3, 4), (3, 5), (4, 6), (5, 6)),
}

_UTILITY_EDGES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "CLAW": (4, ((1, 2), (1, 3), (1, 4))),
    "P2": (2, ((1, 2),)),
    "P3": (3, ((1, 2), (2, 3))),
    "P4": (4, ((1, 2), (2, 3), (3, 4))),
    "P5": (5, ((1, 2), (2, 3), (3, 4), (4, 5))),
    "P6": (6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6))),
    "P7": (7, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7))),
    "C6": (6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1))),
    "TWO_P3": (6, ((1, 2), (2, 3), (4, 5), (5, 6))),
    "TWO_P4": (8, ((1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8))),
}

FORBIDDEN_NAMES = tuple(f"H{k}" for k in range(1, 11))


def _isomorphic_small(a: Graph, b: Graph) -> bool:
    # exhaustive label search; catalog graphs only (order <= 8)
    if a.n != b.n or a.m != b.m or a.degree_sequence() != b.degree_sequence():
        return False
    for perm in permutations(range(a.n)):
        if all(b.adj[perm[v]] == sum(1 << perm[u] for u in range(a.n) if a.adj[v] >> u & 1)
               for v in range(a.n)):
            return True
    return False


@cache
def catalog() -> tuple[Pattern, ...]:
    """All named patterns; the forbidden ten come first, in order."""
    pats = [Pattern(name, 6, edges) for name, edges in _H_EDGES.items()]
    pats.extend(Pattern(name, order, edges) for name, (order, edges) in _UTILITY_EDGES.items())
    by_name = {p.name: p for p in pats}
    # the catalog identities the class-restricted criteria rely on
    assert _isomorphic_small(by_name["H7"].graph(), by_name["TWO_P3"].graph())
    assert _isomorphic_small(by_name["H8"].graph(), by_name["P6"].graph())
    assert _isomorphic_small(by_name["H9"].graph(), by_name["C6"].graph())
    return tuple(pats)


@cache
def forbidden_catalog() -> tuple[Pattern, ...]:
    return tuple(p for p in catalog() if p.name in FORBIDDEN_NAMES)


def pattern_by_name(name: str) -> Pattern:
    """Look up a catalog pattern; tokens are case-insensitive, 2P3 == TWO_P3."""
    key = name.strip().upper().replace("2P", "TWO_P")
    for p in catalog():
        if p.name == key:
            return p
    raise KeyError(f"unknown pattern {name!r}")


def _search(host: Graph, pattern: Pattern, induced: bool) -> tuple[int, ...] | None:
    pg = pattern.graph()
    p = pg.n
    if p > host.n:
        return None
    full = host.vertex_mask
    hadj = host.adj
    padj = pg.adj
    pdeg = [pg.degree(v) for v in range(p)]
    mapping = [0] * p

    def extend(q: int, used: int) -> bool:
        if q == p:
            return True
        cand = full & ~used
        for r in range(q):
            if padj[q] >> r & 1:
                cand &= hadj[mapping[r]]
            elif induced:
                cand &= ~hadj[mapping[r]]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            if not induced and host.degree(v) < pdeg[q]:
                continue
            mapping[q] = v
            if extend(q + 1, used | b):
                return True
        return False

    return tuple(mapping) if extend(0, 0) else None


def find_induced(G: Graph, P: Pattern) -> Embedding | None:
    """First induced embedding of P in G (backtracking order), or None."""
    found = _search(G, P, induced=True)
    return Embedding(found, "induced") if found is not None else None


def contains_subgraph(G: Graph, P: Pattern) -> bool:
    """True iff a not-necessarily-induced embedding of P exists in G."""
    return _search(G, P, induced=False) is not None


def forbidden_free(G: Graph) -> tuple[bool, tuple[Pattern, Embedding] | None]:
    """Check the ten-pattern family in order; return the first witness if any."""
    if G.n < 6:
        return True, None
    for pat in forbidden_catalog():
        emb = find_induced(G, pat)
        if emb is not None:
            return False, (pat, emb)
    return True, None


def is_claw_free(G: Graph) -> bool:
    return find_induced(G, pattern_by_name("CLAW")) is None


def is_pattern_free(G: Graph, names: tuple[str, ...]) -> bool:
    return all(find_induced(G, pattern_by_name(n)) is None for n in names)
