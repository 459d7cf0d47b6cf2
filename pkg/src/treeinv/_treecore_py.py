"""Pure-Python labeled-tree enumeration kernel.

Trees in the (V, d) stratum live on T = d*V + 2 vertices: root 0 with
valence 1, internal vertices 1..V with valence d+1, leaves V+1..T-1 with
valence 1.  Their linear-sequence encodings are exactly the distinct
permutations of the multiset {1^d, ..., V^d}: a vertex appears
(valence - 1) times, so the root and the leaves never occur.

The census walks every sequence in lexicographic order, decodes it, and
aggregates trees by the canonical code of their rooted shape.  Amplitude
evaluation only depends on the shape, so downstream code needs one
representative parent array plus a multiplicity per shape.

A compiled twin with the same two entry points may shadow this module;
both must produce identical output, including census ordering.
"""

from __future__ import annotations


def decode_parents(seq, T: int) -> list[int]:
    """Rooted parent array of the tree encoded by seq on vertices 0..T-1.

    seq must have length T - 2; entry parents[0] is -1.  The decode pairs
    the smallest available valence-1 vertex with each sequence element,
    then joins the last such vertex to T - 1, and a breadth-first pass
    from vertex 0 orients every edge toward the root.
    """
    degree = [1] * T
    for v in seq:
        degree[v] += 1

    adj: list[list[int]] = [[] for _ in range(T)]
    ptr = 0
    leaf = -1
    for v in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
            ptr += 1
        adj[leaf].append(v)
        adj[v].append(leaf)
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    if leaf < 0:
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
    adj[leaf].append(T - 1)
    adj[T - 1].append(leaf)

    parents = [-1] * T
    order = [0]
    seen = [False] * T
    seen[0] = True
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parents[v] = u
                order.append(v)
    return parents


def _shape_code(parents: list[int], T: int, intern: dict) -> int:
    """Canonical integer code of the rooted shape, by subtree interning.

    Leaves code to 0; an internal vertex codes to the interned sorted
    tuple of its children's codes.  The tree's code is the code of the
    root's single child.
    """
    children: list[list[int]] = [[] for _ in range(T)]
    for v in range(1, T):
        children[parents[v]].append(v)

    code = [0] * T
    # parents came from a breadth-first pass, so children always carry
    # higher discovery depth; a reverse sweep over a depth-ordered list
    # is obtained by re-walking from the root.  The root itself stays
    # uncoded: only its child's code identifies the shape.
    order = [0]
    head = 0
    while head < len(order):
        order.extend(children[order[head]])
        head += 1
    for v in reversed(order):
        kids = children[v]
        if kids and v != 0:
            key = tuple(sorted(code[c] for c in kids))
            idx = intern.get(key)
            if idx is None:
                idx = len(intern) + 1
                intern[key] = idx
            code[v] = idx
    return code[children[0][0]]


def labeled_shape_census(V: int, d: int) -> list[tuple[int, tuple[int, ...]]]:
    """(multiplicity, representative parent tuple) per rooted shape.

    Walks all (d*V)!/(d!)^V labeled trees of the stratum; shapes are
    listed in order of first appearance.  V = 0 is the bare root-leaf
    edge.
    """
    if V == 0:
        return [(1, (-1, 0))]
    T = d * V + 2
    seq = []
    for v in range(1, V + 1):
        seq.extend([v] * d)
    L = len(seq)

    intern: dict = {}
    counts: dict[int, int] = {}
    reps: dict[int, tuple[int, ...]] = {}
    order: list[int] = []

    while True:
        parents = decode_parents(seq, T)
        key = _shape_code(parents, T, intern)
        if key in counts:
            counts[key] += 1
        else:
            counts[key] = 1
            reps[key] = tuple(parents)
            order.append(key)

        # lexicographic next permutation of seq, in place
        i = L - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            break
        j = L - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1 :] = reversed(seq[i + 1 :])

    return [(counts[k], reps[k]) for k in order]
