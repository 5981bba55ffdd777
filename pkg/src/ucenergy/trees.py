"""Canonical rooted-tree level sequences.

A rooted tree on k vertices is identified by its canonical level sequence:
the depth of each vertex in preorder, root at depth 0, with the children of
every vertex ordered so the sequence is lexicographically maximal.  Two
rooted trees are isomorphic iff their canonical sequences are equal, which
makes the sequences usable both as generator output and as memoisation keys.

``rooted_trees`` generates all canonical sequences of a given size with the
constant-amortised-time successor rule of Beyer and Hedetniemi (sequences are
emitted in decreasing lexicographic order, path first, star last).
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


def rooted_trees(k: int) -> list[tuple[int, ...]]:
    """All canonical level sequences of rooted trees on k >= 1 vertices."""
    if k < 1:
        raise ValueError("need k >= 1, got %d" % k)
    if k == 1:
        return [(0,)]
    seq = list(range(k))  # the path, lexicographically largest
    out = [tuple(seq)]
    while True:
        nxt = _successor(seq)
        if nxt is None:
            return out
        seq = nxt
        out.append(tuple(seq))


def _successor(seq: list[int]) -> list[int] | None:
    """Next canonical sequence in decreasing lex order, None after the star."""
    k = len(seq)
    p = max((i for i in range(k) if seq[i] > 1), default=None)
    if p is None:
        return None
    q = max(i for i in range(p) if seq[i] == seq[p] - 1)
    out = seq[:p]
    pattern = seq[q:p]
    while len(out) < k:
        out.extend(pattern[: k - len(out)])
    return out


def canonical_level_sequence(
    neighbors: Mapping[int, Iterable[int]], root
) -> tuple[int, ...]:
    """Canonical (lexicographically maximal) level sequence of a rooted tree."""

    def build(v, parent) -> tuple[int, ...]:
        children = [build(w, v) for w in neighbors[v] if w != parent]
        children.sort(reverse=True)
        seq = [0]
        for ch in children:
            seq.extend(level + 1 for level in ch)
        return tuple(seq)

    return build(root, None)


def tree_centroids(neighbors: Mapping[int, Iterable[int]], vertices: Sequence) -> list:
    """Centroid vertex (or the two of them) of a tree, by leaf stripping."""
    remaining = set(vertices)
    degree = {v: sum(1 for w in neighbors[v] if w in remaining) for v in remaining}
    layer = [v for v in remaining if degree[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
        for v in layer:
            for w in neighbors[v]:
                if w in remaining:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(remaining)


def free_tree_code(
    neighbors: Mapping[int, Iterable[int]], vertices: Sequence
) -> tuple[int, ...]:
    """Isomorphism code of an unrooted tree: best rooting at a centroid."""
    cents = tree_centroids(neighbors, vertices)
    return max(canonical_level_sequence(neighbors, c) for c in cents)


def decode_level_sequence(seq: Sequence[int]) -> list[int | None]:
    """Parent indices (preorder) for a level sequence; the root parent is None."""
    parents: list[int | None] = [None]
    stack = [0]  # indices of the current root-to-vertex path
    for i in range(1, len(seq)):
        depth = seq[i]
        del stack[depth:]
        parents.append(stack[-1])
        stack.append(i)
    return parents
