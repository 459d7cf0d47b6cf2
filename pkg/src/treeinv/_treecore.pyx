# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled labeled-tree enumeration kernel.

Twin of the pure-Python module with the same name minus the extension
suffix; both expose decode_parents and labeled_shape_census with
identical output, census ordering included.  The inner loop (sequence
stepping, decode, rooting, shape coding) runs on C arrays; Python
objects only appear once per tree for the tally and once per new shape
for the representative.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef int _decode_into(int* seq, int L, int T, int* degree, int* adj,
                      int* adj_n, int stride) nogil:
    """Fill adjacency lists for the tree encoded by seq[0..L-1]."""
    cdef int i, v, ptr, leaf
    for i in range(T):
        degree[i] = 1
        adj_n[i] = 0
    for i in range(L):
        degree[seq[i]] += 1
    ptr = 0
    leaf = -1
    for i in range(L):
        v = seq[i]
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
            ptr += 1
        adj[leaf * stride + adj_n[leaf]] = v
        adj_n[leaf] += 1
        adj[v * stride + adj_n[v]] = leaf
        adj_n[v] += 1
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    if leaf < 0:
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
    adj[leaf * stride + adj_n[leaf]] = T - 1
    adj_n[leaf] += 1
    adj[(T - 1) * stride + adj_n[T - 1]] = leaf
    adj_n[T - 1] += 1
    return 0


cdef int _root_into(int T, int* adj, int* adj_n, int stride,
                    int* parents, int* order) nogil:
    """Breadth-first orientation toward vertex 0; fills parents and order."""
    cdef int head = 0, tail = 1, u, v, k
    for v in range(T):
        parents[v] = -2
    parents[0] = -1
    order[0] = 0
    while head < tail:
        u = order[head]
        head += 1
        for k in range(adj_n[u]):
            v = adj[u * stride + k]
            if parents[v] == -2:
                parents[v] = u
                order[tail] = v
                tail += 1
    return 0


def decode_parents(seq, int T):
    """Rooted parent list for one encoded tree; mirrors the pure twin."""
    cdef int L = len(seq)
    cdef int stride = T
    cdef int* buf = <int*> malloc((L + T * stride + 4 * T) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* cseq = buf
    cdef int* adj = buf + L
    cdef int* degree = adj + T * stride
    cdef int* adj_n = degree + T
    cdef int* parents = adj_n + T
    cdef int* order = parents + T
    cdef int i
    try:
        for i in range(L):
            cseq[i] = seq[i]
        _decode_into(cseq, L, T, degree, adj, adj_n, stride)
        _root_into(T, adj, adj_n, stride, parents, order)
        return [parents[i] for i in range(T)]
    finally:
        free(buf)


def labeled_shape_census(int V, int d):
    """(multiplicity, representative parent tuple) per rooted shape."""
    if V == 0:
        return [(1, (-1, 0))]
    cdef int T = d * V + 2
    cdef int L = d * V
    cdef int stride = d + 1
    cdef bint fold = d <= 4  # 15-bit code fields packed into one int64
    cdef int total = L + T * stride + 6 * T + T * d + d
    cdef int* buf = <int*> malloc(total * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* seq = buf
    cdef int* adj = seq + L
    cdef int* degree = adj + T * stride
    cdef int* adj_n = degree + T
    cdef int* parents = adj_n + T
    cdef int* order = parents + T
    cdef int* code = order + T
    cdef int* child_cnt = code + T
    cdef int* child_flat = child_cnt + T
    cdef int* kid_codes = child_flat + T * d

    cdef dict intern = {}
    cdef dict counts = {}
    cdef dict reps = {}
    cdef list first_seen = []
    cdef int i, j, v, p, nk, t, c, idx
    cdef long long key
    cdef object okey, got

    try:
        for v in range(V):
            for i in range(d):
                seq[v * d + i] = v + 1

        while True:
            _decode_into(seq, L, T, degree, adj, adj_n, stride)
            _root_into(T, adj, adj_n, stride, parents, order)

            for v in range(T):
                child_cnt[v] = 0
            for v in range(1, T):
                p = parents[v]
                child_flat[p * d + child_cnt[p]] = v
                child_cnt[p] += 1

            # children strictly precede parents in reversed breadth-first
            # order; the root itself is skipped since only its child's
            # code identifies the shape (and a 1-child key could collide
            # with a folded d-child key).
            for i in range(T - 1, 0, -1):
                v = order[i]
                nk = child_cnt[v]
                if nk == 0:
                    code[v] = 0
                    continue
                for t in range(nk):
                    c = code[child_flat[v * d + t]]
                    j = t
                    while j > 0 and kid_codes[j - 1] > c:
                        kid_codes[j] = kid_codes[j - 1]
                        j -= 1
                    kid_codes[j] = c
                if fold:
                    key = kid_codes[0]
                    for t in range(1, nk):
                        key = (key << 15) | kid_codes[t]
                    okey = key
                else:
                    okey = tuple([kid_codes[t] for t in range(nk)])
                got = intern.get(okey)
                if got is None:
                    idx = len(intern) + 1
                    if fold and idx >= 32768:
                        raise RuntimeError("shape intern table overflow")
                    intern[okey] = idx
                    code[v] = idx
                else:
                    code[v] = got

            okey = code[child_flat[0]]
            got = counts.get(okey)
            if got is None:
                counts[okey] = 1
                reps[okey] = tuple([parents[i] for i in range(T)])
                first_seen.append(okey)
            else:
                counts[okey] = got + 1

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
            i += 1
            j = L - 1
            while i < j:
                seq[i], seq[j] = seq[j], seq[i]
                i += 1
                j -= 1

        return [(counts[k], reps[k]) for k in first_seen]
    finally:
        free(buf)
