# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled packing kernel; same search, same result as ``_pack_py.pack``."""

from libc.stdint cimport uint64_t

from treeconn import _pack_py

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long)
    int ctz "__builtin_ctzll"(unsigned long long)

cdef enum:
    MAXN = 64


cdef struct Ctx:
    int n
    int t
    int nss
    int nfree
    int nterms
    uint64_t smask
    uint64_t root
    uint64_t U
    uint64_t D
    uint64_t adj[MAXN]
    uint64_t inc[MAXN]
    uint64_t vm[MAXN]
    uint64_t em[MAXN]
    int done[MAXN]
    int terms[MAXN]
    int free[MAXN]
    int ss_a[MAXN]
    int ss_b[MAXN]


cdef inline uint64_t bit(int v):
    return (<uint64_t>1) << v


cdef uint64_t reach(Ctx* c, uint64_t allowed, uint64_t ssok):
    cdef uint64_t seen = c.root
    cdef uint64_t frontier = c.root
    cdef uint64_t nxt, f, es
    cdef int v, i, w
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = ctz(f)
            f &= f - 1
            if c.smask >> v & 1:
                nxt |= c.adj[v] & allowed
                es = c.inc[v] & ssok
                while es:
                    i = ctz(es)
                    es &= es - 1
                    w = c.ss_b[i] if c.ss_a[i] == v else c.ss_a[i]
                    nxt |= bit(w)
            else:
                nxt |= c.adj[v] & (allowed | c.smask)
        frontier = nxt & ~seen
        seen |= frontier
    return seen


cdef bint slot_ok(Ctx* c, int i):
    cdef uint64_t r = reach(c, c.vm[i] | c.U, c.em[i] | c.D)
    return (r & c.smask) == c.smask and (c.vm[i] & ~r) == 0


cdef bint degrees_ok(Ctx* c):
    cdef int a, s, i, need
    for a in range(c.nterms):
        s = c.terms[a]
        need = 0
        for i in range(c.t):
            if (c.adj[s] & c.vm[i]) == 0 and (c.em[i] & c.inc[s]) == 0:
                need += 1
        if need > popcount(c.adj[s] & c.U) + popcount(c.D & c.inc[s]):
            return False
    return True


cdef bint consistent(Ctx* c, int used):
    cdef int i
    for i in range(used):
        if not c.done[i] and not slot_ok(c, i):
            return False
    if used < c.t and not slot_ok(c, used):
        return False
    return degrees_ok(c)


cdef bint rec(Ctx* c, int k, int used, int ndone):
    cdef int nvars = c.nss + c.nfree
    cdef bint is_edge
    cdef uint64_t b, r
    cdef int top, idx, j, nused
    cdef bint closed
    if ndone == c.t:
        return True
    if k == nvars:
        return False
    is_edge = k < c.nss
    b = bit(k) if is_edge else bit(c.free[k - c.nss])
    top = used + 1 if used + 1 < c.t else c.t
    for idx in range(top + 1):
        j = idx if idx < top else -1
        if j >= 0 and c.done[j]:
            continue
        if is_edge:
            c.D &= ~b
            if j >= 0:
                c.em[j] |= b
        else:
            c.U &= ~b
            if j >= 0:
                c.vm[j] |= b
        nused = used + 1 if j == used else used
        if consistent(c, nused):
            closed = False
            if j >= 0:
                r = reach(c, c.vm[j], c.em[j])
                closed = (r & c.smask) == c.smask
                c.done[j] = closed
            if rec(c, k + 1, nused, ndone + closed):
                return True
            if j >= 0:
                c.done[j] = False
        if is_edge:
            c.D |= b
            if j >= 0:
                c.em[j] &= ~b
        else:
            c.U |= b
            if j >= 0:
                c.vm[j] &= ~b
    return False


def pack(int n, adj, smask, int t):
    """See ``treeconn._pack_py.pack``."""
    terms = [v for v in range(n) if smask >> v & 1]
    ss = [(a, b) for i, a in enumerate(terms) for b in terms[i + 1:] if adj[a] >> b & 1]
    if n > MAXN or len(ss) > 64 or t > MAXN:
        return _pack_py.pack(n, adj, smask, t)
    cdef Ctx c
    cdef int i, v
    c.n = n
    c.t = t
    c.nss = len(ss)
    c.nterms = len(terms)
    c.smask = smask
    c.root = bit(terms[0])
    c.U = 0
    for v in range(n):
        c.adj[v] = adj[v]
        c.inc[v] = 0
    c.nfree = 0
    for v in range(n):
        if not (smask >> v & 1):
            c.free[c.nfree] = v
            c.nfree += 1
            c.U |= bit(v)
    for i in range(c.nterms):
        c.terms[i] = terms[i]
    for i in range(c.nss):
        c.ss_a[i] = ss[i][0]
        c.ss_b[i] = ss[i][1]
        c.inc[ss[i][0]] |= bit(i)
        c.inc[ss[i][1]] |= bit(i)
    c.D = bit(c.nss) - 1 if c.nss < 64 else ~(<uint64_t>0)
    for i in range(t):
        c.vm[i] = 0
        c.em[i] = 0
        c.done[i] = 0
    if not consistent(&c, 0):
        return None
    if rec(&c, 0, 0, 0):
        return [c.vm[i] for i in range(t)], [c.em[i] for i in range(t)]
    return None
