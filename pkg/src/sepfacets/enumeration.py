"""Exhaustive enumeration of small connected graphs, one per isomorphism
class, with a brute-force canonical form.

The canonical form of a graph is the lexicographically smallest adjacency
encoding over all vertex relabelings.  Color refinement (degrees, then
iterated neighbor-color multisets) splits the vertices into classes first,
and only relabelings that keep the class order need to be searched, with
prefix pruning.  This is quadratic-ish in practice at desk scale and is
deliberately simple; n <= 8 is the supported regime, enforced by a guard.

Classes are generated level by level: trees by leaf augmentation, then one
extra edge at a time.  Every connected graph above a tree has a non-bridge
edge whose removal stays connected, so augmenting every representative by
every missing edge reaches every class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .facets import facet_count
from .graph import Graph

DEFAULT_GUARD = 8


class GuardExceeded(RuntimeError):
    """Desk-scale resource guard tripped; pass a higher guard to override."""


CanonicalForm = tuple[int, tuple[int, ...]]


def _refine_colors(n: int, adj: list[int]) -> list[int]:
    """Iterated color refinement; returns a canonical color id per vertex."""
    nbrs = [[w for w in range(n) if (adj[v] >> w) & 1] for v in range(n)]
    colors = [len(nbrs[v]) for v in range(n)]
    for _ in range(n):
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(n)
        ]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    return colors


def canonical_form(g: Graph) -> CanonicalForm:
    """Smallest adjacency encoding of g over all relabelings.

    The encoding is (n, rows) where rows[p-1] packs the adjacency between
    the vertex placed at position p and positions 0..p-1, earliest position
    in the highest bit.  Equal forms mean isomorphic graphs and vice versa.
    """
    n = g.n
    if n == 0:
        return (0, ())
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if n == 1:
        return (1, ())
    colors = _refine_colors(n, adj)
    # position p must hold a vertex of block_color[p]; blocks in color order
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    block_color = []
    for c in sorted(by_color):
        block_color += [c] * len(by_color[c])

    infinity = 1 << (n + 1)
    best = [infinity] * (n - 1)
    placed = [0] * n  # placed[p] = vertex at position p
    used = [False] * n

    def dfs(pos: int) -> None:
        prev_mask_bits = placed[:pos]
        want = block_color[pos]
        for v in by_color[want]:
            if used[v]:
                continue
            row = 0
            av = adj[v]
            for q in range(pos):
                row = (row << 1) | ((av >> prev_mask_bits[q]) & 1)
            slot = pos - 1
            if row > best[slot]:
                continue
            if row < best[slot]:
                best[slot] = row
                for k in range(pos, n - 1):
                    best[k] = infinity
            used[v] = True
            placed[pos] = v
            if pos + 1 == n:
                pass  # best already holds the full minimum prefix
            else:
                dfs(pos + 1)
            used[v] = False

    # position 0 carries no row; try each vertex of the first block there
    first_block = by_color[block_color[0]]
    for v0 in first_block:
        used[v0] = True
        placed[0] = v0
        dfs(1)
        used[v0] = False
    return (n, tuple(best))


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled representative of g's isomorphism class."""
    n, rows = canonical_form(g)
    edges = []
    for p, row in enumerate(rows, start=1):
        for q in range(p):
            if (row >> (p - 1 - q)) & 1:
                edges.append((q, p))
    return Graph(n, tuple(edges))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Apply the vertex relabeling v -> perm[v]."""
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


# ---------------------------------------------------------------------------
# class generation
# ---------------------------------------------------------------------------

_TREES: dict[int, tuple[Graph, ...]] = {1: (Graph(1, ()),)}
_LEVELS: dict[tuple[int, int], tuple[Graph, ...]] = {}


def trees(n: int) -> tuple[Graph, ...]:
    """All trees on n vertices, one canonical representative per class."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    for k in range(2, n + 1):
        if k in _TREES:
            continue
        seen: dict[CanonicalForm, Graph] = {}
        for t in _TREES[k - 1]:
            for v in range(t.n):
                bigger = Graph(k, t.edges + ((v, k - 1),))
                cg = canonical_graph(bigger)
                seen.setdefault(canonical_form(cg), cg)
        _TREES[k] = tuple(seen[key] for key in sorted(seen))
    return _TREES[n]


def connected_graphs(n: int, e: int, guard: int | None = DEFAULT_GUARD):
    """Yield one canonical representative per isomorphism class of
    connected simple graphs with n vertices and e edges.

    Results are cached per (n, e) level and streamed in canonical-form
    order, so repeat sweeps are cheap and deterministic.  The default
    guard refuses n > 8; pass a larger guard (or None) to override.
    """
    if n < 1 or e < 0:
        raise ValueError(f"need n >= 1 and e >= 0, got n={n}, e={e}")
    if guard is not None and n > guard:
        raise GuardExceeded(
            f"connected-graph enumeration at n={n} exceeds the guard ({guard}); "
            "raise the guard to override"
        )
    if e < n - 1 or e > n * (n - 1) // 2:
        return
    yield from _level(n, e)


def _level(n: int, e: int) -> tuple[Graph, ...]:
    if e == n - 1:
        return trees(n)
    key = (n, e)
    if key not in _LEVELS:
        seen: dict[CanonicalForm, Graph] = {}
        for g in _level(n, e - 1):
            present = set(g.edges)
            for u in range(n):
                for v in range(u + 1, n):
                    if (u, v) in present:
                        continue
                    bigger = Graph(n, g.edges + ((u, v),))
                    cg = canonical_graph(bigger)
                    seen.setdefault(canonical_form(cg), cg)
        _LEVELS[key] = tuple(seen[k] for k in sorted(seen))
    return _LEVELS[key]


@dataclass(frozen=True)
class MaximizerRecord:
    """Result of an exhaustive facet-maximum search over an (n, e) class."""

    n: int
    e: int
    maximum: int
    witnesses: tuple[Graph, ...]  # every class attaining the maximum

    def check(self) -> bool:
        """Re-verify every witness against the facet engine."""
        return all(facet_count(g) == self.maximum for g in self.witnesses)


def max_facets(
    n: int, e: int, guard: int | None = DEFAULT_GUARD, jobs: int = 1
) -> MaximizerRecord:
    """Exhaustive facet-count maximum over all connected (n, e) classes."""
    classes = list(connected_graphs(n, e, guard))
    if not classes:
        raise ValueError(f"no connected graphs with n={n}, e={e}")
    counts = facet_counts(classes, jobs)
    best = max(counts)
    witnesses = tuple(g for g, c in zip(classes, counts) if c == best)
    return MaximizerRecord(n, e, best, witnesses)


def facet_counts(graphs: list[Graph], jobs: int = 1) -> list[int]:
    """Facet counts for many graphs, optionally sharded across processes.

    Order of results always matches the input order, so parallel runs are
    byte-identical to sequential ones.
    """
    if jobs <= 1 or len(graphs) < 4:
        return [facet_count(g) for g in graphs]
    import multiprocessing as mp

    try:
        ctx = mp.get_context("fork")
    except ValueError:
        ctx = mp.get_context()
    chunk = max(1, len(graphs) // (jobs * 4))
    with ctx.Pool(jobs) as pool:
        return pool.map(facet_count, graphs, chunksize=chunk)
