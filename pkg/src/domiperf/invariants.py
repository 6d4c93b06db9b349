"""Exact domination and independence solvers with optimal witness sets.

Minimum dominating / independent dominating sets come from an
increasing-cardinality search (greedy upper bound, coverage pruning) that
visits candidate sets in lexicographic order, so the reported witness is the
lexicographically smallest optimal set.  Maximum independent sets come from
branch and bound on a max-degree vertex with memoization over bitmasks.

The ``brute_*`` functions are deliberately naive 2^n enumerations kept as
independent oracles for the solvers; do not "optimize" them.
"""

from __future__ import annotations

from dataclasses import dataclass

from domiperf.graph import Graph, GraphError, bits, mask_of


@dataclass(frozen=True)
class ParameterProfile:
    """The invariant quadruple of one graph plus optimal witnesses."""

    gamma: int
    ind_dom: int
    common_ind: int
    ind: int
    witness_gamma: frozenset[int]
    witness_ind_dom: frozenset[int]
    witness_ind: frozenset[int]
    per_vertex_ind: tuple[int, ...]


# -- maximum independent set ------------------------------------------------

def _alpha_mask(adj: tuple[int, ...], closed: list[int], mask: int, memo: dict) -> int:
    """Independence number of the subgraph induced by ``mask``."""
    if mask == 0:
        return 0
    cached = memo.get(mask)
    if cached is not None:
        return cached
    best_v, best_d = -1, -1
    m = mask
    while m:
        b = m & -m
        m ^= b
        v = b.bit_length() - 1
        d = (adj[v] & mask).bit_count()
        if d > best_d:
            best_d, best_v = d, v
    if best_d == 0:
        res = mask.bit_count()
    else:
        v = best_v
        res = max(
            1 + _alpha_mask(adj, closed, mask & ~closed[v], memo),
            _alpha_mask(adj, closed, mask & ~(1 << v), memo),
        )
    memo[mask] = res
    return res


def independence_number(G: Graph) -> tuple[int, frozenset[int]]:
    """alpha(G) with the lexicographically smallest maximum independent set."""
    closed = G.closed_masks()
    memo: dict[int, int] = {}
    total = _alpha_mask(G.adj, closed, G.vertex_mask, memo)
    chosen = []
    allowed = G.vertex_mask
    for v in range(G.n):
        if not allowed >> v & 1:
            continue
        rest = allowed & ~closed[v]
        if len(chosen) + 1 + _alpha_mask(G.adj, closed, rest, memo) == total:
            chosen.append(v)
            allowed = rest
    return total, frozenset(chosen)


def max_independent_with(G: Graph, v: int) -> int:
    """Largest independent set constrained to contain v."""
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} outside 0..{G.n - 1}")
    closed = G.closed_masks()
    rest = G.vertex_mask & ~closed[v]
    return 1 + _alpha_mask(G.adj, closed, rest, {})


def common_independence_number(G: Graph) -> int:
    """Minimum over vertices of the largest independent set containing each."""
    if G.n == 0:
        raise GraphError("common independence number undefined on the empty graph")
    closed = G.closed_masks()
    memo: dict[int, int] = {}
    full = G.vertex_mask
    return min(
        1 + _alpha_mask(G.adj, closed, full & ~closed[v], memo) for v in range(G.n)
    )


# -- minimum (independent) dominating set -----------------------------------

def _greedy_cover_size(G: Graph) -> int:
    closed = G.closed_masks()
    uncovered = G.vertex_mask
    size = 0
    while uncovered:
        best = max(range(G.n), key=lambda v: (closed[v] & uncovered).bit_count())
        uncovered &= ~closed[best]
        size += 1
    return size


def _greedy_maximal_independent_size(G: Graph) -> int:
    closed = G.closed_masks()
    allowed = G.vertex_mask
    size = 0
    while allowed:
        v = (allowed & -allowed).bit_length() - 1
        allowed &= ~closed[v]
        size += 1
    return size


def _lex_dominating(G: Graph, k: int, independent: bool) -> list[int] | None:
    """Lexicographically first (independent) dominating set of size at most k."""
    n = G.n
    full = G.vertex_mask
    adj = G.adj
    closed = G.closed_masks()
    # suffix coverage: union and max cover size over vertices >= i
    suffix_cov = [0] * (n + 1)
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_cov[i] = suffix_cov[i + 1] | closed[i]
        suffix_max[i] = max(suffix_max[i + 1], closed[i].bit_count())

    chosen: list[int] = []

    def rec(idx: int, chosen_mask: int, dom: int) -> bool:
        if dom == full:
            return True
        slots = k - len(chosen)
        if slots == 0 or idx == n:
            return False
        need = full & ~dom
        if need & ~suffix_cov[idx]:
            return False
        if slots * suffix_max[idx] < need.bit_count():
            return False
        for v in range(idx, n):
            if independent and adj[v] & chosen_mask:
                continue
            chosen.append(v)
            if rec(v + 1, chosen_mask | (1 << v), dom | closed[v]):
                return True
            chosen.pop()
        return False

    return list(chosen) if rec(0, 0, 0) else None


def _minimum_dominating(G: Graph, independent: bool) -> tuple[int, frozenset[int]]:
    if G.n == 0:
        raise GraphError("domination undefined on the empty graph")
    maxdeg = max(G.degree(v) for v in range(G.n))
    lb = -(-G.n // (maxdeg + 1))
    ub = _greedy_maximal_independent_size(G) if independent else _greedy_cover_size(G)
    for k in range(lb, ub + 1):
        found = _lex_dominating(G, k, independent)
        if found is not None:
            return len(found), frozenset(found)
    raise AssertionError("greedy bound unreachable")  # pragma: no cover


def domination_number(G: Graph) -> tuple[int, frozenset[int]]:
    """gamma(G) with the lexicographically smallest minimum dominating set."""
    return _minimum_dominating(G, independent=False)


def independent_domination_number(G: Graph) -> tuple[int, frozenset[int]]:
    """i(G) with the lexicographically smallest minimum ID-set."""
    return _minimum_dominating(G, independent=True)


# -- private neighborhoods and profiles -------------------------------------

def private_neighborhood(G: Graph, v: int, S) -> frozenset[int]:
    """Vertices whose closed neighborhood meets S exactly in {v}."""
    smask = mask_of(S)
    G._check_mask(smask)
    if not smask >> v & 1:
        raise GraphError(f"vertex {v} not in S")
    return frozenset(w for w in range(G.n) if G.closed(w) & smask == 1 << v)


def parameter_profile(G: Graph) -> ParameterProfile:
    """All four invariants with witnesses; the inequality chain is asserted."""
    if G.n == 0:
        raise GraphError("parameter profile undefined on the empty graph")
    gamma, wg = domination_number(G)
    ind_dom, wi = independent_domination_number(G)
    alpha, wa = independence_number(G)
    closed = G.closed_masks()
    memo: dict[int, int] = {}
    full = G.vertex_mask
    per_vertex = tuple(
        1 + _alpha_mask(G.adj, closed, full & ~closed[v], memo) for v in range(G.n)
    )
    common = min(per_vertex)
    if not gamma <= ind_dom <= common <= alpha:
        raise AssertionError(
            f"invariant chain violated: {gamma} <= {ind_dom} <= {common} <= {alpha}"
        )
    return ParameterProfile(gamma, ind_dom, common, alpha, wg, wi, wa, per_vertex)


# -- brute-force oracles ----------------------------------------------------

def _is_independent_mask(G: Graph, mask: int) -> bool:
    return all(G.adj[v] & mask == 0 for v in bits(mask))

def _is_dominating_mask(G: Graph, mask: int) -> bool:
    cov = mask
    for v in bits(mask):
        cov |= G.adj[v]
    return cov == G.vertex_mask


def brute_domination(G: Graph) -> int:
    if G.n == 0:
        raise GraphError("domination undefined on the empty graph")
    return min(
        m.bit_count() for m in range(1 << G.n) if _is_dominating_mask(G, m)
    )


def brute_independent_domination(G: Graph) -> int:
    if G.n == 0:
        raise GraphError("domination undefined on the empty graph")
    return min(
        m.bit_count()
        for m in range(1 << G.n)
        if _is_dominating_mask(G, m) and _is_independent_mask(G, m)
    )


def brute_independence(G: Graph) -> int:
    return max(
        (m.bit_count() for m in range(1 << G.n) if _is_independent_mask(G, m)),
        default=0,
    )


def brute_common_independence(G: Graph) -> int:
    """Direct "greatest r" reading: every vertex lies in an independent set of size >= r."""
    if G.n == 0:
        raise GraphError("common independence number undefined on the empty graph")
    best_with = [0] * G.n
    for m in range(1, 1 << G.n):
        if _is_independent_mask(G, m):
            size = m.bit_count()
            for v in bits(m):
                if size > best_with[v]:
                    best_with[v] = size
    r = 0
    while r + 1 <= G.n and all(b >= r + 1 for b in best_with):
        r += 1
    return r


def verify_witness(G: Graph, profile: ParameterProfile) -> bool:
    """Re-check every witness against its defining predicate and cardinality."""
    return (
        G.is_dominating(profile.witness_gamma)
        and len(profile.witness_gamma) == profile.gamma
        and G.is_dominating(profile.witness_ind_dom)
        and G.is_independent(profile.witness_ind_dom)
        and len(profile.witness_ind_dom) == profile.ind_dom
        and G.is_independent(profile.witness_ind)
        and len(profile.witness_ind) == profile.ind
        and profile.common_ind == min(profile.per_vertex_ind)
    )
