"""Extremal tree families for redundant locating-domination.

Two families are handled: trees whose optimum equals n (every vertex must
be a detector) and trees meeting the universal lower bound ceil((2n+2)/3).
The first family is characterized locally (every vertex is a leaf or a
support vertex) and closed under specific leaf attachments/removals.  The
second is classified by a strip-and-dispatch procedure keyed on n mod 3
and generated bottom-up from four base trees by three combination rules.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, NamedTuple, Optional, Sequence

from .graph import Graph, build_path
from .verify import DetectorSet, is_redld_set


def tree_lower_bound(n: int) -> int:
    """ceil((2n+2)/3), valid for every tree on n >= 2 vertices."""
    if n < 2:
        raise ValueError("bound defined for n >= 2")
    return -(-(2 * n + 2) // 3)


def _require_tree(g: Graph) -> None:
    if g.n < 2 or not g.is_tree():
        raise ValueError("expected a tree on at least 2 vertices")


# ---------------------------------------------------------------------------
# All-detector family: optimum == n.


def is_tmax(g: Graph) -> bool:
    """True iff every vertex is a leaf or adjacent to a leaf."""
    _require_tree(g)
    leaves = {v for v in range(g.n) if g.degree(v) == 1}
    return all(v in leaves or any(w in leaves for w in g.adj[v]) for v in range(g.n))


def tmax_extensions(g: Graph) -> list[tuple[int, Graph]]:
    """All (attach vertex, extended tree) pairs staying in the family.

    A new leaf may go on a support vertex, or on a leaf whose own support
    has at least two leaf neighbors.
    """
    if not is_tmax(g):
        raise ValueError("tree is not in the all-detector family")
    leaves = {v for v in range(g.n) if g.degree(v) == 1}
    out = []
    for u in range(g.n):
        ok = any(w in leaves for w in g.adj[u])
        if not ok and u in leaves:
            support = g.adj[u][0]
            ok = sum(1 for w in g.adj[support] if w in leaves) >= 2
        if ok:
            out.append((u, Graph(g.n + 1, list(g.edges()) + [(u, g.n)])))
    return out


def tmax_removals(g: Graph) -> list[int]:
    """Leaves whose removal keeps the tree in the all-detector family:
    those with a sibling leaf, or whose support has degree 2."""
    if g.n < 3:
        raise ValueError("removals defined for n >= 3")
    if not is_tmax(g):
        raise ValueError("tree is not in the all-detector family")
    leaves = {v for v in range(g.n) if g.degree(v) == 1}
    out = []
    for v in sorted(leaves):
        support = g.adj[v][0]
        has_sibling = any(w != v and w in leaves for w in g.adj[support])
        if has_sibling or g.degree(support) == 2:
            out.append(v)
    return out


def enumerate_tmax(n: int) -> list[str]:
    """Canonical codes of all family members on n vertices, grown from P_2."""
    if n < 2:
        raise ValueError("family starts at n = 2")
    reps: dict[str, Graph] = {}
    p2 = build_path(2)
    reps[canonical_code(p2)] = p2
    for _ in range(3, n + 1):
        grown: dict[str, Graph] = {}
        for t in reps.values():
            for _u, t2 in tmax_extensions(t):
                code = canonical_code(t2)
                if code not in grown:
                    grown[code] = t2
        reps = grown
    return sorted(reps)


# ---------------------------------------------------------------------------
# Canonical forms.


def _centers(g: Graph) -> list[int]:
    if g.n <= 2:
        return list(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    alive = g.n
    layer = [v for v in range(g.n) if deg[v] == 1]
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            for w in g.adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        alive -= len(layer)
        layer = nxt
    return sorted(v for v in range(g.n) if not removed[v])


def canonical_code(g: Graph, detectors: Optional[Iterable[int]] = None) -> str:
    """Canonical string for a tree, rooted at its center; isomorphic trees
    (with matching detector colorings, when given) get equal codes."""
    if g.n != 1:
        _require_tree(g)
    colored = frozenset(detectors) if detectors is not None else None

    def rooted(v: int, parent: int) -> str:
        kids = sorted(rooted(w, v) for w in g.adj[v] if w != parent)
        tag = "*" if colored is not None and v in colored else ""
        return tag + "(" + "".join(kids) + ")"

    centers = _centers(g)
    if len(centers) == 1:
        return rooted(centers[0], -1)
    a, b = centers
    return "|".join(sorted([rooted(a, b), rooted(b, a)]))


# ---------------------------------------------------------------------------
# Minimum family: optimum == ceil((2n+2)/3).


class StripResult(NamedTuple):
    pairs: tuple[tuple[int, int], ...]
    nondetectors: tuple[int, ...]
    residual: Graph


def _adj_dict(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.adj[v]) for v in range(g.n)}


def _drop(adj: dict[int, set[int]], x: int) -> None:
    for nb in adj.pop(x):
        adj[nb].discard(x)


_DEG0_RULES = ("current", "original", "both")


def _w_has_degree_2(adj: dict[int, set[int]], deg0: dict[int, int],
                    rule: str, w: int) -> bool:
    cur = len(adj[w]) == 2
    orig = deg0[w] == 2
    if rule == "current":
        return cur
    if rule == "original":
        return orig
    return cur and orig


def _strip(adj: dict[int, set[int]], q: int, deg0: dict[int, int], rule: str):
    """Repeatedly remove (leaf u, its degree-2 neighbor v, v's other
    neighbor w) triples while at least q vertices remain.

    w must have degree 2, measured per rule: in the current forest, in
    the forest as it was when deg0 was snapshotted, or in both.  "both"
    means w is an intact degree-2 connector, which keeps the removed
    non-detectors pairwise non-adjacent and their remaining neighbors
    un-strippable, so the accumulated witness stays 2-dominating.
    """
    pairs: list[tuple[int, int]] = []
    nondets: list[int] = []
    while len(adj) >= q:
        found = None
        for v in sorted(adj):
            if len(adj[v]) != 2:
                continue
            a, b = sorted(adj[v])
            for u, w in ((a, b), (b, a)):
                if len(adj[u]) == 1 and _w_has_degree_2(adj, deg0, rule, w):
                    found = (u, v, w)
                    break
            if found:
                break
        if found is None:
            break
        u, v, w = found
        for x in (u, v, w):
            _drop(adj, x)
        pairs.append((u, v))
        nondets.append(w)
    return pairs, nondets, adj


def _deg_snapshot(adj: dict[int, set[int]]) -> dict[int, int]:
    return {v: len(nbrs) for v, nbrs in adj.items()}


def strip_exterior_p2(g: Graph, q: int, deg0_rule: str = "both") -> StripResult:
    """Strip exterior P_2-plus-nondetector triples while >= q vertices remain."""
    _require_tree(g)
    if deg0_rule not in _DEG0_RULES:
        raise ValueError(f"deg0_rule must be one of {_DEG0_RULES}")
    adj = _adj_dict(g)
    pairs, nondets, rest = _strip(adj, q, _deg_snapshot(adj), deg0_rule)
    residual, _ = g.induced_subgraph(sorted(rest))
    return StripResult(tuple(pairs), tuple(nondets), residual)


def _extremal_cls2(adj: dict[int, set[int]], rule: str) -> set[int]:
    pairs, _nds, rest = _strip(adj, 0, _deg_snapshot(adj), rule)
    s1 = {x for p in pairs for x in p}
    if len(rest) == 2:
        return set(rest) | s1
    return set()


def _extremal_cls0(adj: dict[int, set[int]], rule: str) -> set[int]:
    pairs, _nds, rest = _strip(adj, 0, _deg_snapshot(adj), rule)
    s1 = {x for p in pairs for x in p}
    if len(rest) == 3:
        return set(rest) | s1
    return set()


def _t7_center(adj: dict[int, set[int]]) -> Optional[int]:
    # spider with three legs of two vertices; its degree-3 center is the
    # one non-detector of the optimal set
    if len(adj) != 7:
        return None
    if sorted(len(nbrs) for nbrs in adj.values()) != [1, 1, 1, 2, 2, 2, 3]:
        return None
    c = next(v for v, nbrs in adj.items() if len(nbrs) == 3)
    for x in adj[c]:
        if len(adj[x]) != 2:
            return None
        u = next(t for t in adj[x] if t != c)
        if len(adj[u]) != 1:
            return None
    return c


def _hanging_component(adj: dict[int, set[int]], w: int, x: int) -> set[int]:
    # component of the forest minus w that contains w's neighbor x
    seen = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        for t in adj[v]:
            if t != w and t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def _branches(adj: dict[int, set[int]], deg0: dict[int, int], rule: str):
    # a branch is a 3-vertex component hanging off a parent w of degree 2;
    # it is either a pendant path or a pendant 2-leaf star
    out = []
    for w in sorted(adj):
        if not _w_has_degree_2(adj, deg0, rule, w):
            continue
        for x in sorted(adj[w]):
            comp = _hanging_component(adj, w, x)
            if len(comp) == 3:
                out.append((w, frozenset(comp)))
    return out


def _deg3_splits(rest: dict[int, set[int]], s1: set[int],
                 rule: str) -> list[set[int]]:
    # a degree-3 non-detector whose removal splits the residual into three
    # components of order 2 mod 3, each contributing its own extremal set
    out = []
    for v in sorted(rest):
        if len(rest[v]) != 3:
            continue
        comps = [_hanging_component(rest, v, x) for x in sorted(rest[v])]
        if any(len(c) % 3 != 2 for c in comps):
            continue
        union: set[int] = set()
        for comp in comps:
            sub = {t: rest[t] & comp for t in comp}
            inner = _extremal_cls2(sub, rule)
            if not inner:
                break
            union |= inner
        else:
            out.append(union | s1)
    return out


def _extremal_cls1(adj: dict[int, set[int]], rule: str) -> list[set[int]]:
    """Candidate optimal sets for a tree on 3k+1 vertices.

    Several residual decompositions can qualify and the wrong pick can
    spoil an otherwise valid witness, so every candidate is offered; the
    caller keeps the first one that actually verifies.
    """
    deg0 = _deg_snapshot(adj)
    pairs, _nds, rest = _strip(adj, 5, deg0, rule)
    s1 = {x for p in pairs for x in p}
    r = len(rest)
    if r <= 3:
        return []
    if r == 4:
        return [set(rest) | s1]
    candidates: list[set[int]] = []
    center = _t7_center(rest)
    if center is not None:
        candidates.append((set(rest) - {center}) | s1)
    branches = _branches(rest, deg0, rule)
    for (w1, b1), (w2, b2) in combinations(branches, 2):
        if w1 == w2 and not b1 & b2:
            candidates.append(b1 | b2 | s1)
    for (w1, b1), (w2, b2) in combinations(branches, 2):
        if w1 != w2 and not (b1 | {w1}) & (b2 | {w2}):
            remainder = {v: set(nbrs) for v, nbrs in rest.items()}
            for x in b1 | b2 | {w1, w2}:
                _drop(remainder, x)
            inner = _extremal_cls2(remainder, rule)
            if inner:
                candidates.append(b1 | b2 | inner | s1)
    candidates.extend(_deg3_splits(rest, s1, rule))
    return candidates


@dataclass(frozen=True)
class TminClass:
    residue: int
    member: bool
    witness: Optional[DetectorSet]


def classify_tmin(g: Graph, deg0_rule: str = "both") -> TminClass:
    """Decide membership in the minimum family, with an optimal witness.

    The dispatch on n mod 3 returns candidate sets; one counts only if it
    has the extremal cardinality and verifies, which screens out trees the
    strip happens to reduce to a recognized residual by accident.
    """
    _require_tree(g)
    if deg0_rule not in _DEG0_RULES:
        raise ValueError(f"deg0_rule must be one of {_DEG0_RULES}")
    residue = g.n % 3
    if residue == 1:
        candidates = _extremal_cls1(_adj_dict(g), deg0_rule)
    else:
        single = {2: _extremal_cls2, 0: _extremal_cls0}[residue](
            _adj_dict(g), deg0_rule
        )
        candidates = [single] if single else []
    bound = tree_lower_bound(g.n)
    for candidate in candidates:
        if len(candidate) == bound and is_redld_set(g, candidate).ok:
            return TminClass(residue, True, DetectorSet(candidate))
    return TminClass(residue, False, None)


def is_2dom_redld_on_tree(g: Graph, s: Iterable[int]) -> bool:
    """2-domination check; on a tree this already implies a valid set."""
    _require_tree(g)
    members = set(s)
    for v in range(g.n):
        dom = (v in members) + sum(1 for w in g.adj[v] if w in members)
        if dom < 2:
            return False
    return True


# ---------------------------------------------------------------------------
# Bottom-up generation of the minimum family.
#
# All (tree, optimal set) pairs of each residue class are produced from the
# four base pairs by the three combination rules; keeping whole pairs (not
# just trees) matters because a later combination may attach at any detector
# of any optimal set.


def _join2(g1: Graph, s1: frozenset[int], g2: Graph, s2: frozenset[int],
           w1: int, w2: int) -> tuple[Graph, frozenset[int]]:
    off = g1.n
    v = g1.n + g2.n
    edges = list(g1.edges())
    edges.extend((a + off, b + off) for a, b in g2.edges())
    edges.extend([(w1, v), (w2 + off, v)])
    return Graph(v + 1, edges), s1 | {x + off for x in s2}


def _join3(parts: Sequence[tuple[Graph, frozenset[int]]],
           attach: Sequence[int]) -> tuple[Graph, frozenset[int]]:
    offs = []
    total = 0
    for g, _s in parts:
        offs.append(total)
        total += g.n
    w = total
    edges: list[tuple[int, int]] = []
    members: set[int] = set()
    for (g, s), off, x in zip(parts, offs, attach):
        edges.extend((a + off, b + off) for a, b in g.edges())
        members.update(m + off for m in s)
        edges.append((x + off, w))
    return Graph(total + 1, edges), frozenset(members)


@lru_cache(maxsize=None)
def _tmin_pairs(n_max: int) -> dict[int, dict[int, dict[str, tuple[Graph, frozenset[int]]]]]:
    pairs: dict[int, dict[int, dict[str, tuple[Graph, frozenset[int]]]]] = {
        0: {},
        1: {},
        2: {},
    }

    def add(cls: int, g: Graph, s: frozenset[int]) -> None:
        code = canonical_code(g, s)
        pairs[cls].setdefault(g.n, {}).setdefault(code, (g, s))

    add(2, build_path(2), frozenset({0, 1}))
    add(0, build_path(3), frozenset({0, 1, 2}))
    add(1, build_path(4), frozenset(range(4)))
    add(1, Graph(4, [(0, 1), (0, 2), (0, 3)]), frozenset(range(4)))

    def at(cls: int, order: int):
        return list(pairs[cls].get(order, {}).values())

    for m in range(5, n_max + 1):
        cls = m % 3
        if cls == 2:
            for n1 in range(2, m - 1, 3):
                n2 = m - 1 - n1
                if n2 < n1 or n2 % 3 != 2:
                    continue
                for (g1, s1), (g2, s2) in product(at(2, n1), at(2, n2)):
                    for w1, w2 in product(sorted(s1), sorted(s2)):
                        add(2, *_join2(g1, s1, g2, s2, w1, w2))
        elif cls == 0:
            for n1 in range(3, m, 3):
                n2 = m - 1 - n1
                if n2 < 2 or n2 % 3 != 2:
                    continue
                for (g1, s1), (g2, s2) in product(at(0, n1), at(2, n2)):
                    for w1, w2 in product(sorted(s1), sorted(s2)):
                        add(0, *_join2(g1, s1, g2, s2, w1, w2))
        else:
            for n1 in range(3, m, 3):
                n2 = m - 1 - n1
                if n2 < n1 or n2 % 3 != 0:
                    continue
                for (g1, s1), (g2, s2) in product(at(0, n1), at(0, n2)):
                    for w1, w2 in product(sorted(s1), sorted(s2)):
                        add(1, *_join2(g1, s1, g2, s2, w1, w2))
            for n1 in range(4, m, 3):
                n2 = m - 1 - n1
                if n2 < 2 or n2 % 3 != 2:
                    continue
                for (g1, s1), (g2, s2) in product(at(1, n1), at(2, n2)):
                    for w1, w2 in product(sorted(s1), sorted(s2)):
                        add(1, *_join2(g1, s1, g2, s2, w1, w2))
            for n1 in range(2, m, 3):
                for n2 in range(n1, m, 3):
                    n3 = m - 1 - n1 - n2
                    if n3 < n2 or n3 % 3 != 2:
                        continue
                    for parts in product(at(2, n1), at(2, n2), at(2, n3)):
                        sets = [p[1] for p in parts]
                        vs = [range(p[0].n) for p in parts]
                        for attach in product(*vs):
                            inside = sum(x in sets[i] for i, x in enumerate(attach))
                            if inside >= 2:
                                add(1, *_join3(parts, attach))
    return pairs


def enumerate_tmin(n: int) -> list[str]:
    """Canonical codes of all minimum-family trees on n vertices."""
    if n < 2:
        raise ValueError("family starts at n = 2")
    found = _tmin_pairs(n)[n % 3].get(n, {})
    return sorted({canonical_code(g) for g, _s in found.values()})


def tmin_representatives(n: int) -> list[tuple[Graph, DetectorSet]]:
    """One (tree, optimal set) pair per colored isomorphism class."""
    found = _tmin_pairs(n)[n % 3].get(n, {})
    return [(g, DetectorSet(s)) for g, s in found.values()]


# ---------------------------------------------------------------------------
# Random trees for property sweeps.


def prufer_decode(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    deg = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError("sequence entry out of range")
        deg[x] += 1
    edges = []
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(heap, x)
    a = heapq.heappop(heap)
    b = heapq.heappop(heap)
    edges.append((a, b))
    return Graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return build_path(2)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)])
