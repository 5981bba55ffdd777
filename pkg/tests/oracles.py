"""Test-only brute-force oracles, kept independent of the production paths.

Nothing in here may call into ucenergy's generators, canonical forms, or
recurrences: counts come from labeled exhaustion with isomorphism dedup
(networkx VF2), matchings from subset enumeration, and the graph6 reference
encoder is a literal transcription of the published format description.
"""

from __future__ import annotations

import heapq
import itertools
import math


def labeled_unicyclic_edge_sets(n: int) -> set[frozenset]:
    """All labeled connected unicyclic graphs on n vertices (edge sets).

    Every such graph is a labeled spanning tree (from its Pruefer sequence)
    plus one extra edge, so the enumeration below hits each exactly once
    after set dedup.
    """
    out: set[frozenset] = set()
    if n < 3:
        return out
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        heap = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(heap)
        tree = []
        for v in seq:
            leaf = heapq.heappop(heap)
            tree.append((min(leaf, v), max(leaf, v)))
            degree[leaf] -= 1
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(heap, v)
        last = [v for v in range(n) if degree[v] == 1]
        tree.append((min(last), max(last)))
        tree_set = frozenset(tree)
        for extra in itertools.combinations(range(n), 2):
            if extra not in tree_set:
                out.add(tree_set | {extra})
    return out


def unicyclic_class_count_vf2(n: int) -> int:
    """Isomorphism classes by labeled exhaustion plus VF2 dedup (n <= 6)."""
    import networkx as nx

    buckets: dict[tuple, list] = {}
    for edges in labeled_unicyclic_edge_sets(n):
        g = nx.Graph(list(edges))
        g.add_nodes_from(range(n))
        key = tuple(sorted(d for _, d in g.degree()))
        bucket = buckets.setdefault(key, [])
        for rep in bucket:
            if nx.is_isomorphic(g, rep):
                break
        else:
            bucket.append(g)
    return sum(len(b) for b in buckets.values())


def automorphism_count(n: int, edges) -> int:
    """|Aut| by brute force over all vertex permutations."""
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    count = 0
    for perm in itertools.permutations(range(n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edge_set
               for u, v in edge_set):
            count += 1
    return count


def orbit_sum_matches_labeled(n: int, representatives) -> bool:
    """Check sum over classes of n!/|Aut| against the labeled census.

    ``representatives`` is an iterable of ucenergy Graphs claimed to be one
    per isomorphism class; the orbit-counting identity holds iff they cover
    every labeled graph exactly once.
    """
    import networkx as nx

    labeled = len(labeled_unicyclic_edge_sets(n))
    reps = list(representatives)
    # candidates must be pairwise non-isomorphic for the identity to bite
    buckets: dict[tuple, list] = {}
    for g in reps:
        ng = nx.Graph(list(g.edges))
        ng.add_nodes_from(range(g.n))
        key = tuple(sorted(d for _, d in ng.degree()))
        for other in buckets.setdefault(key, []):
            if nx.is_isomorphic(ng, other):
                return False
        buckets[key].append(ng)
    total = sum(math.factorial(n) // automorphism_count(g.n, g.edges) for g in reps)
    return total == labeled


def matchings_brute(n: int, edges, k: int) -> int:
    """k-matchings by enumerating all k-subsets of the edge set."""
    count = 0
    for combo in itertools.combinations(edges, k):
        used = set()
        ok = True
        for u, v in combo:
            if u in used or v in used:
                ok = False
                break
            used.add(u)
            used.add(v)
        if ok:
            count += 1
    return count


def graph6_reference(n: int, edges) -> str:
    """Throwaway graph6 encoder transcribed from the format description.

    Bit vector is the upper triangle read column-wise (x_01, x_02, x_12,
    x_03, ...), padded with zeros to a multiple of six, each sixtet emitted
    as chr(value + 63) after a single order byte chr(n + 63).
    """
    assert n <= 62
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    bitstring = "".join(
        "1" if (i, j) in edge_set else "0"
        for j in range(1, n)
        for i in range(j)
    )
    bitstring += "0" * (-len(bitstring) % 6)
    chunks = [bitstring[i: i + 6] for i in range(0, len(bitstring), 6)]
    return chr(n + 63) + "".join(chr(int(chunk, 2) + 63) for chunk in chunks)


def rooted_tree_class_count(k: int) -> int:
    """Non-isomorphic rooted trees on k vertices by labeled brute force.

    Labeled trees come from Pruefer sequences; rooted isomorphism is decided
    by a locally computed canonical form (sorted nested child tuples).
    """
    def canon(adj, v, parent):
        return tuple(sorted(canon(adj, w, v) for w in adj[v] if w != parent))

    seen = set()
    if k == 1:
        return 1
    for seq in itertools.product(range(k), repeat=max(k - 2, 0)):
        degree = [1] * k
        for v in seq:
            degree[v] += 1
        heap = [v for v in range(k) if degree[v] == 1]
        heapq.heapify(heap)
        adj = {v: [] for v in range(k)}
        for v in seq:
            leaf = heapq.heappop(heap)
            adj[leaf].append(v)
            adj[v].append(leaf)
            degree[leaf] -= 1
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(heap, v)
        last = [v for v in range(k) if degree[v] == 1]
        adj[last[0]].append(last[1])
        adj[last[1]].append(last[0])
        for root in range(k):
            seen.add(canon(adj, root, None))
    return len(seen)
