# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels over bitmask adjacency (mirror of ``_pykernels``)."""

from libc.string cimport memcpy, memcmp

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64) nogil
    int ctz "__builtin_ctzll"(u64) nogil

cdef enum:
    MAXN = 64

NAME = "cython"
MAX_ORDER = 62

cdef u64 ONE = 1


cdef int _load(object adj, u64* out) except -1:
    cdef Py_ssize_t n = len(adj)
    cdef Py_ssize_t i
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds kernel limit {MAX_ORDER}")
    cdef Py_ssize_t j
    for i in range(n):
        try:
            out[i] = <u64>adj[i]
        except OverflowError:
            raise ValueError(f"row {i} is not a valid bitmask") from None
        if out[i] >> n:
            raise ValueError(f"row {i} has bits outside 0..{n - 1}")
    for i in range(n):
        if out[i] >> i & 1:
            raise ValueError(f"self-loop at vertex {i}")
        for j in range(i + 1, n):
            if (out[i] >> j & 1) != (out[j] >> i & 1):
                raise ValueError(f"adjacency is not symmetric at ({i}, {j})")
    return <int>n


cdef bint _bipartite(const u64* adj, int n) noexcept nogil:
    cdef u64 unseen = (ONE << n) - 1
    cdef u64 side0, side1, frontier, nb, new, f
    cdef int s, p, v
    while unseen:
        s = ctz(unseen)
        side0 = ONE << s
        side1 = 0
        frontier = side0
        unseen &= ~frontier
        p = 0
        while frontier:
            nb = 0
            f = frontier
            while f:
                v = ctz(f)
                f &= f - 1
                nb |= adj[v]
            if p == 0:
                if nb & side0:
                    return False
                new = nb & unseen
                side1 |= new
            else:
                if nb & side1:
                    return False
                new = nb & unseen
                side0 |= new
            unseen &= ~new
            frontier = new
            p ^= 1
    return True


def is_bipartite(adj):
    cdef u64 a[MAXN]
    cdef int n = _load(adj, a)
    return _bipartite(a, n)


cdef int _short_odd(const u64* adj, int n, int* cyc) noexcept nogil:
    """Length of a shortest odd cycle written into ``cyc``; 0 if none."""
    cdef int best = 0
    cdef int parent[MAXN]
    cdef int left[MAXN]
    cdef int s, depth, u, v, hu, hv, nl, nr, i, w
    cdef u64 frontier, seen, same, f, nxt, new
    for s in range(n):
        if adj[s] == 0:
            continue
        frontier = ONE << s
        seen = frontier
        depth = 0
        while frontier:
            if best and 2 * depth + 1 >= best:
                break
            hu = -1
            f = frontier
            while f:
                u = ctz(f)
                f &= f - 1
                same = adj[u] & frontier
                if same:
                    hu = u
                    hv = ctz(same)
                    break
            if hu >= 0:
                nl = 0
                left[nl] = hu
                nl += 1
                while left[nl - 1] != s:
                    left[nl] = parent[left[nl - 1]]
                    nl += 1
                for i in range(nl):
                    cyc[i] = left[nl - 1 - i]
                nr = nl
                cyc[nr] = hv
                nr += 1
                while parent[cyc[nr - 1]] != s:
                    cyc[nr] = parent[cyc[nr - 1]]
                    nr += 1
                best = nr
                break
            nxt = 0
            f = frontier
            while f:
                u = ctz(f)
                f &= f - 1
                new = adj[u] & ~seen & ~nxt
                while new:
                    w = ctz(new)
                    new &= new - 1
                    parent[w] = u
                    nxt |= ONE << w
            seen |= nxt
            frontier = nxt
            depth += 1
        if best == 3:
            break
    return best


def shortest_odd_cycle(adj):
    cdef u64 a[MAXN]
    cdef int cyc[MAXN]
    cdef int n = _load(adj, a)
    cdef int L = _short_odd(a, n, cyc)
    if L == 0:
        return None
    return [cyc[i] for i in range(L)]


cdef int _packing(const u64* adj, int n) noexcept nogil:
    cdef u64 tmp[MAXN]
    cdef int cyc[MAXN]
    cdef int count = 0
    cdef int L, i, a, b
    memcpy(tmp, adj, n * sizeof(u64))
    while True:
        L = _short_odd(tmp, n, cyc)
        if L == 0:
            return count
        count += 1
        for i in range(L):
            a = cyc[i]
            b = cyc[(i + 1) % L]
            tmp[a] &= ~(ONE << b)
            tmp[b] &= ~(ONE << a)


def odd_cycle_packing(adj):
    cdef u64 a[MAXN]
    cdef int n = _load(adj, a)
    return _packing(a, n)


cdef bint _frust_dfs(u64* adj, int n, int budget, u64* keep, int* removed, int* nrem) noexcept nogil:
    cdef int cyc[MAXN]
    cdef int marked[2 * MAXN]
    cdef int nm = 0
    cdef int L = _short_odd(adj, n, cyc)
    cdef int i, a, b, t
    if L == 0:
        return True
    if budget == 0 or _packing(adj, n) > budget:
        return False
    for i in range(L):
        a = cyc[i]
        b = cyc[(i + 1) % L]
        if a > b:
            t = a
            a = b
            b = t
        if (keep[a] >> b) & 1:
            continue
        adj[a] &= ~(ONE << b)
        adj[b] &= ~(ONE << a)
        removed[2 * nrem[0]] = a
        removed[2 * nrem[0] + 1] = b
        nrem[0] += 1
        if _frust_dfs(adj, n, budget - 1, keep, removed, nrem):
            return True
        nrem[0] -= 1
        adj[a] |= ONE << b
        adj[b] |= ONE << a
        keep[a] |= ONE << b
        keep[b] |= ONE << a
        marked[2 * nm] = a
        marked[2 * nm + 1] = b
        nm += 1
    for i in range(nm):
        a = marked[2 * i]
        b = marked[2 * i + 1]
        keep[a] &= ~(ONE << b)
        keep[b] &= ~(ONE << a)
    return False


def frustration(adj):
    cdef u64 a[MAXN]
    cdef u64 work[MAXN]
    cdef u64 keep[MAXN]
    cdef int removed[2 * MAXN * MAXN]
    cdef int nrem = 0
    cdef int n = _load(adj, a)
    cdef int budget, i
    cdef bint found
    if _bipartite(a, n):
        return 0, []
    budget = _packing(a, n)
    while True:
        memcpy(work, a, n * sizeof(u64))
        for i in range(n):
            keep[i] = 0
        nrem = 0
        with nogil:
            found = _frust_dfs(work, n, budget, keep, removed, &nrem)
        if found:
            return budget, sorted([(removed[2 * i], removed[2 * i + 1]) for i in range(nrem)])
        budget += 1


cdef void _order_by_degree(const u64* adj, int n, int* order) noexcept nogil:
    cdef int i, j, v, dv
    for i in range(n):
        order[i] = i
    # insertion sort: degree descending, index ascending
    for i in range(1, n):
        v = order[i]
        dv = popcount(adj[v])
        j = i - 1
        while j >= 0 and (popcount(adj[order[j]]) < dv or
                          (popcount(adj[order[j]]) == dv and order[j] > v)):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = v


cdef struct MonoState:
    int n
    int blocks
    int lower
    int best
    const u64* adj
    int* order
    u64* classes
    int* cur
    int* best_colors


cdef bint _mono_dfs(MonoState* st, int i, int used, int cost) noexcept nogil:
    cdef int v, c, inc, lim, nu
    cdef u64 bit
    cdef bint done
    if cost >= st.best:
        return False
    if i == st.n:
        st.best = cost
        memcpy(st.best_colors, st.cur, st.n * sizeof(int))
        return cost <= st.lower
    v = st.order[i]
    bit = ONE << v
    lim = used + 1
    if lim > st.blocks:
        lim = st.blocks
    for c in range(lim):
        inc = popcount(st.adj[v] & st.classes[c])
        st.classes[c] |= bit
        st.cur[v] = c
        nu = used if used > c + 1 else c + 1
        done = _mono_dfs(st, i + 1, nu, cost + inc)
        st.classes[c] ^= bit
        if done:
            return True
    return False


def min_mono_partition(adj, int blocks, int lower=0):
    cdef u64 a[MAXN]
    cdef u64 classes[MAXN]
    cdef int order[MAXN]
    cdef int colors[MAXN]
    cdef int cur[MAXN]
    cdef int n = _load(adj, a)
    cdef int i, v, c, inc, best_c, best_inc, used, cost, lim
    cdef MonoState st
    if blocks < 1:
        raise ValueError("blocks must be >= 1")
    if blocks > MAXN:
        blocks = MAXN
    _order_by_degree(a, n, order)
    for c in range(blocks):
        classes[c] = 0
    cost = 0
    used = 0
    for i in range(n):
        v = order[i]
        best_c = 0
        best_inc = -1
        lim = used + 1
        if lim > blocks:
            lim = blocks
        for c in range(lim):
            inc = popcount(a[v] & classes[c])
            if best_inc < 0 or inc < best_inc:
                best_c = c
                best_inc = inc
        classes[best_c] |= ONE << v
        colors[v] = best_c
        cost += best_inc
        if best_c + 1 > used:
            used = best_c + 1
    if cost > lower:
        for c in range(blocks):
            classes[c] = 0
        st.n = n
        st.blocks = blocks
        st.lower = lower
        st.best = cost
        st.adj = a
        st.order = order
        st.classes = classes
        st.cur = cur
        st.best_colors = colors
        with nogil:
            _mono_dfs(&st, 0, 0, 0)
        cost = st.best
    return cost, [colors[i] for i in range(n)]


cdef int _grow_clique(const u64* adj, int n, int s, const int* order, int* clique) noexcept nogil:
    cdef int q = 1
    cdef int i, v
    cdef u64 common = adj[s]
    clique[0] = s
    for i in range(n):
        v = order[i]
        if (common >> v) & 1:
            clique[q] = v
            q += 1
            common &= adj[v]
    return q


cdef struct ColorState:
    int n
    int k
    int nrest
    const u64* adj
    int* rest
    int* colors
    u64* forbid


cdef bint _color_dfs(ColorState* st, int i, int used) noexcept nogil:
    cdef int v, c, w, lim, nch, j
    cdef int changed[MAXN]
    cdef u64 full, nb
    cdef bint dead
    if i == st.nrest:
        return True
    full = (ONE << st.k) - 1
    v = st.rest[i]
    lim = used + 1
    if lim > st.k:
        lim = st.k
    for c in range(lim):
        if (st.forbid[v] >> c) & 1:
            continue
        st.colors[v] = c
        nch = 0
        dead = False
        nb = st.adj[v]
        while nb:
            w = ctz(nb)
            nb &= nb - 1
            if st.colors[w] < 0 and not ((st.forbid[w] >> c) & 1):
                st.forbid[w] |= ONE << c
                changed[nch] = w
                nch += 1
                if (st.forbid[w] & full) == full:
                    dead = True
        if not dead and _color_dfs(st, i + 1, used if used > c + 1 else c + 1):
            return True
        for j in range(nch):
            st.forbid[changed[j]] &= ~(ONE << c)
        st.colors[v] = -1
    return False


cdef int _k_coloring(const u64* a, int n, int k, int* colors) noexcept nogil:
    """1 if a k-coloring was written into ``colors``, else 0."""
    cdef int order[MAXN]
    cdef int clique[MAXN]
    cdef int rest[MAXN]
    cdef u64 forbid[MAXN]
    cdef int q, i, c, v, nrest
    cdef u64 full, nb
    cdef ColorState st
    if n == 0:
        return 1
    if k < 1:
        return 0
    if k > 62:
        k = 62
    _order_by_degree(a, n, order)
    q = _grow_clique(a, n, order[0], order, clique)
    if q > k:
        return 0
    full = (ONE << k) - 1
    for i in range(n):
        colors[i] = -1
        forbid[i] = 0
    for c in range(q):
        v = clique[c]
        colors[v] = c
        nb = a[v]
        while nb:
            i = ctz(nb)
            nb &= nb - 1
            forbid[i] |= ONE << c
    for v in range(n):
        if colors[v] < 0 and (forbid[v] & full) == full:
            return 0
    nrest = 0
    for i in range(n):
        if colors[order[i]] < 0:
            rest[nrest] = order[i]
            nrest += 1
    st.n = n
    st.k = k
    st.nrest = nrest
    st.adj = a
    st.rest = rest
    st.colors = colors
    st.forbid = forbid
    if _color_dfs(&st, 0, q):
        for i in range(n):
            if colors[i] < 0:
                colors[i] = 0
        return 1
    return 0


def k_coloring(adj, int k):
    cdef u64 a[MAXN]
    cdef int colors[MAXN]
    cdef int n = _load(adj, a)
    cdef int ok
    with nogil:
        ok = _k_coloring(a, n, k, colors)
    if not ok:
        return None
    return [colors[i] for i in range(n)]


def chromatic_number(adj):
    cdef u64 a[MAXN]
    cdef int order[MAXN]
    cdef int clique[MAXN]
    cdef int colors[MAXN]
    cdef int n = _load(adj, a)
    cdef int i, s, q, lower, upper, k, c, w, ok
    cdef u64 taken, nb
    cdef bint edgeless = True
    if n == 0:
        return 0, []
    for i in range(n):
        if a[i]:
            edgeless = False
    if edgeless:
        return 1, [0] * n
    _order_by_degree(a, n, order)
    lower = 0
    for i in range(n):
        q = _grow_clique(a, n, order[i], order, clique)
        if q > lower:
            lower = q
    for i in range(n):
        colors[i] = -1
    upper = 0
    for i in range(n):
        s = order[i]
        taken = 0
        nb = a[s]
        while nb:
            w = ctz(nb)
            nb &= nb - 1
            if colors[w] >= 0:
                taken |= ONE << colors[w]
        c = 0
        while (taken >> c) & 1:
            c += 1
        colors[s] = c
        if c + 1 > upper:
            upper = c + 1
    greedy = [colors[i] for i in range(n)]
    for k in range(lower, upper):
        with nogil:
            ok = _k_coloring(a, n, k, colors)
        if ok:
            return k, [colors[i] for i in range(n)]
    return upper, greedy


cdef struct CensusState:
    int n
    int s
    int cutoff
    long long odd
    long long total
    bint stop
    u64 higher
    const u64* adj
    int* path
    int depth


cdef void _census_dfs(CensusState* st, int u, u64 pmask, list witnesses, int max_witnesses):
    cdef u64 nb
    cdef int w, i
    if st.depth >= 3 and ((st.adj[u] >> st.s) & 1) and st.path[1] < u:
        st.total += 1
        if st.depth & 1:
            st.odd += 1
            if len(witnesses) < max_witnesses:
                witnesses.append([st.path[i] for i in range(st.depth)])
            if st.cutoff and st.odd >= st.cutoff:
                st.stop = True
                return
    nb = st.adj[u] & st.higher & ~pmask
    while nb:
        w = ctz(nb)
        nb &= nb - 1
        st.path[st.depth] = w
        st.depth += 1
        _census_dfs(st, w, pmask | (ONE << w), witnesses, max_witnesses)
        st.depth -= 1
        if st.stop:
            return


def cycle_census(adj, int cutoff=0, int max_witnesses=0):
    cdef u64 a[MAXN]
    cdef int path[MAXN]
    cdef int n = _load(adj, a)
    cdef int s
    cdef CensusState st
    cdef list witnesses = []
    st.n = n
    st.cutoff = cutoff
    st.odd = 0
    st.total = 0
    st.stop = False
    st.adj = a
    st.path = path
    for s in range(n):
        st.s = s
        st.higher = ((ONE << n) - 1) & ~((ONE << (s + 1)) - 1)
        path[0] = s
        st.depth = 1
        _census_dfs(&st, s, ONE << s, witnesses, max_witnesses)
        if st.stop:
            break
    return st.odd, st.total, bool(st.stop), witnesses


cdef int _refine(const u64* adj, int n, u64* cells, int ncells) noexcept nogil:
    cdef u64 out[MAXN]
    cdef int sig[MAXN][MAXN]
    cdef int verts[MAXN]
    cdef int nout, ci, nv, i, j, k, v, cmp
    cdef u64 cell, f, group
    while True:
        nout = 0
        for ci in range(ncells):
            cell = cells[ci]
            if (cell & (cell - 1)) == 0:
                out[nout] = cell
                nout += 1
                continue
            nv = 0
            f = cell
            while f:
                v = ctz(f)
                f &= f - 1
                for j in range(ncells):
                    sig[v][j] = popcount(adj[v] & cells[j])
                # insertion sort by signature, stable in vertex index
                k = nv
                while k > 0:
                    cmp = 0
                    for j in range(ncells):
                        if sig[verts[k - 1]][j] != sig[v][j]:
                            cmp = 1 if sig[verts[k - 1]][j] > sig[v][j] else -1
                            break
                    if cmp <= 0:
                        break
                    verts[k] = verts[k - 1]
                    k -= 1
                verts[k] = v
                nv += 1
            group = ONE << verts[0]
            for i in range(1, nv):
                cmp = 0
                for j in range(ncells):
                    if sig[verts[i - 1]][j] != sig[verts[i]][j]:
                        cmp = 1
                        break
                if cmp:
                    out[nout] = group
                    nout += 1
                    group = 0
                group |= ONE << verts[i]
            out[nout] = group
            nout += 1
        if nout == ncells:
            return ncells
        memcpy(cells, out, nout * sizeof(u64))
        ncells = nout


cdef struct CanonState:
    int n
    int nbits
    bint have
    const u64* adj
    unsigned char* best_code
    unsigned char* code
    int* best_lab


cdef void _canon_leaf(CanonState* st, const u64* cells) noexcept nogil:
    cdef int lab[MAXN]
    cdef int i, j, p = 0
    cdef u64 row
    for i in range(st.n):
        lab[i] = ctz(cells[i])
    for j in range(1, st.n):
        row = st.adj[lab[j]]
        for i in range(j):
            st.code[p] = (row >> lab[i]) & 1
            p += 1
    if not st.have or memcmp(st.code, st.best_code, st.nbits) < 0:
        memcpy(st.best_code, st.code, st.nbits)
        memcpy(st.best_lab, lab, st.n * sizeof(int))
        st.have = True


cdef void _canon_search(CanonState* st, const u64* cells_in, int ncells) noexcept nogil:
    cdef u64 cells[MAXN]
    cdef u64 child[MAXN]
    cdef int tried[MAXN]
    cdef int ntried = 0
    cdef int idx, i, v, u
    cdef u64 target, f
    cdef bint twin
    memcpy(cells, cells_in, ncells * sizeof(u64))
    ncells = _refine(st.adj, st.n, cells, ncells)
    if ncells == st.n:
        _canon_leaf(st, cells)
        return
    idx = 0
    while (cells[idx] & (cells[idx] - 1)) == 0:
        idx += 1
    target = cells[idx]
    f = target
    while f:
        v = ctz(f)
        f &= f - 1
        twin = False
        for i in range(ntried):
            u = tried[i]
            if (st.adj[u] & ~(ONE << v)) == (st.adj[v] & ~(ONE << u)):
                twin = True
                break
        if twin:
            continue
        tried[ntried] = v
        ntried += 1
        for i in range(idx):
            child[i] = cells[i]
        child[idx] = ONE << v
        child[idx + 1] = target & ~(ONE << v)
        for i in range(idx + 1, ncells):
            child[i + 1] = cells[i]
        _canon_search(st, child, ncells + 1)


def canonical_labeling(adj):
    cdef u64 a[MAXN]
    cdef u64 cells[MAXN]
    cdef unsigned char best_code[2048]
    cdef unsigned char code[2048]
    cdef int best_lab[MAXN]
    cdef int n = _load(adj, a)
    cdef CanonState st
    if n == 0:
        return []
    st.n = n
    st.nbits = n * (n - 1) // 2
    st.have = False
    st.adj = a
    st.best_code = best_code
    st.code = code
    st.best_lab = best_lab
    cells[0] = (ONE << n) - 1
    with nogil:
        _canon_search(&st, cells, 1)
    return [best_lab[i] for i in range(n)]


cdef bint _fast32(u64* work, int n) noexcept nogil:
    cdef int cyc[MAXN]
    cdef int a, b, c, d, L, i
    cdef u64 nb
    cdef bint ok
    for a in range(n):
        nb = work[a] >> (a + 1) << (a + 1)
        while nb:
            b = ctz(nb)
            nb &= nb - 1
            work[a] &= ~(ONE << b)
            work[b] &= ~(ONE << a)
            L = _short_odd(work, n, cyc)
            ok = False
            for i in range(L):
                c = cyc[i]
                d = cyc[(i + 1) % L]
                work[c] &= ~(ONE << d)
                work[d] &= ~(ONE << c)
                ok = _bipartite(work, n)
                work[c] |= ONE << d
                work[d] |= ONE << c
                if ok:
                    break
            work[a] |= ONE << b
            work[b] |= ONE << a
            if not ok:
                return False
    return True


def fast32_conditions(adj):
    cdef u64 work[MAXN]
    cdef int n = _load(adj, work)
    cdef bint ok
    with nogil:
        ok = _fast32(work, n)
    return ok
