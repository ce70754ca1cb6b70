"""Compiled inner loops.

The triangle kernel walks a degree-ordered orientation of the graph: each
link is stored once, in the row of its lower-ranked endpoint, where rank
orders nodes by (degree, index).  For every stored link ``u -> v`` the
sorted rows of ``u`` and ``v`` are merged; each common entry ``w`` closes
one triangle, which is therefore found exactly once.

``flags`` carries arc directions for directed input: bit 0 set means an
arc from the row node to the column node exists, bit 1 the reverse.
Undirected input passes 3 everywhere.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def count_triangles(indptr, indices, flags, delta, delta_in, delta_out):
    n = len(indptr) - 1
    for u in range(n):
        u_end = indptr[u + 1]
        for i in range(indptr[u], u_end):
            v = indices[i]
            f_uv = flags[i]
            a = indptr[u]
            b = indptr[v]
            v_end = indptr[v + 1]
            while a < u_end and b < v_end:
                x = indices[a]
                y = indices[b]
                if x < y:
                    a += 1
                elif x > y:
                    b += 1
                else:
                    w = x
                    f_uw = flags[a]
                    f_vw = flags[b]
                    delta[u] += 1
                    delta[v] += 1
                    delta[w] += 1
                    # u: v and w both point at u / u points at both
                    if (f_uv & 2) and (f_uw & 2):
                        delta_in[u] += 1
                    if (f_uv & 1) and (f_uw & 1):
                        delta_out[u] += 1
                    if (f_uv & 1) and (f_vw & 2):
                        delta_in[v] += 1
                    if (f_uv & 2) and (f_vw & 1):
                        delta_out[v] += 1
                    if (f_uw & 1) and (f_vw & 1):
                        delta_in[w] += 1
                    if (f_uw & 2) and (f_vw & 2):
                        delta_out[w] += 1
                    a += 1
                    b += 1


@njit(cache=True)
def ba_attach(n_final, m, m0, seed, endpoints, n_endpoints, src, dst):
    """Grow a Barabasi-Albert graph in place.

    ``endpoints[:n_endpoints]`` holds the seed graph's link endpoints, i.e.
    the degree-weighted node multiset.  New node ``t`` picks ``m`` distinct
    targets by drawing from that multiset and rejecting repeats; while the
    multiset is empty it draws uniformly among existing nodes.  Links are
    appended to ``src``/``dst`` in creation order.
    """
    np.random.seed(seed)
    n_links = 0
    targets = np.empty(m, dtype=np.int64)
    for t in range(m0, n_final):
        chosen = 0
        while chosen < m:
            r = np.random.random()
            if n_endpoints > 0:
                cand = endpoints[int(r * n_endpoints)]
            else:
                cand = int(r * t)
            dup = False
            for j in range(chosen):
                if targets[j] == cand:
                    dup = True
                    break
            if not dup:
                targets[chosen] = cand
                chosen += 1
        for j in range(m):
            src[n_links] = t
            dst[n_links] = targets[j]
            n_links += 1
            endpoints[n_endpoints] = t
            endpoints[n_endpoints + 1] = targets[j]
            n_endpoints += 2
    return n_links
