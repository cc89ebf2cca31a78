"""Pure-Python kernels over bitmask adjacency.

Every function takes ``adj``, a sequence of ints where bit ``j`` of
``adj[i]`` is set iff ``ij`` is an edge. Results and tie-breaking are
identical to the compiled ``_ckernels`` module.
"""

from __future__ import annotations

NAME = "python"
MAX_ORDER = 62


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


def _check(adj):
    adj = list(adj)
    if len(adj) > MAX_ORDER:
        raise ValueError(f"order {len(adj)} exceeds kernel limit {MAX_ORDER}")
    n = len(adj)
    for i, row in enumerate(adj):
        if row < 0 or row >> n:
            raise ValueError(f"row {i} has bits outside 0..{n - 1}")
        if row >> i & 1:
            raise ValueError(f"self-loop at vertex {i}")
        for j in _bits(row):
            if not adj[j] >> i & 1:
                raise ValueError(f"adjacency is not symmetric at ({i}, {j})")
    return adj


def _bipartite(adj, n):
    unseen = (1 << n) - 1
    while unseen:
        s = (unseen & -unseen).bit_length() - 1
        sides = [1 << s, 0]
        frontier = 1 << s
        unseen &= ~frontier
        p = 0
        while frontier:
            nb = 0
            for v in _bits(frontier):
                nb |= adj[v]
            if nb & sides[p]:
                return False
            new = nb & unseen
            sides[p ^ 1] |= new
            unseen &= ~new
            frontier = new
            p ^= 1
    return True


def is_bipartite(adj):
    adj = _check(adj)
    return _bipartite(adj, len(adj))


def _short_odd(adj, n):
    best = None
    parent = [-1] * n
    for s in range(n):
        if not adj[s]:
            continue
        frontier = seen = 1 << s
        depth = 0
        while frontier:
            if best is not None and 2 * depth + 1 >= len(best):
                break
            hit = None
            for u in _bits(frontier):
                same = adj[u] & frontier
                if same:
                    hit = (u, (same & -same).bit_length() - 1)
                    break
            if hit is not None:
                u, v = hit
                left = [u]
                while left[-1] != s:
                    left.append(parent[left[-1]])
                left.reverse()
                right = [v]
                while parent[right[-1]] != s:
                    right.append(parent[right[-1]])
                best = left + right
                break
            nxt = 0
            for u in _bits(frontier):
                new = adj[u] & ~seen & ~nxt
                for w in _bits(new):
                    parent[w] = u
                nxt |= new
            seen |= nxt
            frontier = nxt
            depth += 1
        if best is not None and len(best) == 3:
            break
    return best


def shortest_odd_cycle(adj):
    """Vertex sequence of a shortest odd cycle, or None if bipartite."""
    adj = _check(adj)
    return _short_odd(adj, len(adj))


def _drop_cycle(adj, cyc):
    L = len(cyc)
    for i in range(L):
        a, b = cyc[i], cyc[(i + 1) % L]
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)


def _packing(adj, n):
    tmp = list(adj)
    count = 0
    while True:
        cyc = _short_odd(tmp, n)
        if cyc is None:
            return count
        count += 1
        _drop_cycle(tmp, cyc)


def odd_cycle_packing(adj):
    """Size of a greedy packing of edge-disjoint shortest odd cycles."""
    adj = _check(adj)
    return _packing(adj, len(adj))


def _frust_dfs(adj, n, budget, keep, removed):
    cyc = _short_odd(adj, n)
    if cyc is None:
        return True
    if budget == 0 or _packing(adj, n) > budget:
        return False
    L = len(cyc)
    marked = []
    for i in range(L):
        a, b = cyc[i], cyc[(i + 1) % L]
        if a > b:
            a, b = b, a
        if keep[a] >> b & 1:
            continue
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)
        removed.append((a, b))
        if _frust_dfs(adj, n, budget - 1, keep, removed):
            return True
        removed.pop()
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        keep[a] |= 1 << b
        keep[b] |= 1 << a
        marked.append((a, b))
    for a, b in marked:
        keep[a] &= ~(1 << b)
        keep[b] &= ~(1 << a)
    return False


def frustration(adj):
    """Minimum edge set whose deletion leaves a bipartite graph.

    Iterative deepening from the packing bound; each node branches on the
    edges of a shortest odd cycle, and edges rejected by earlier siblings
    are frozen so that no deletion set is visited twice.
    """
    adj = _check(adj)
    n = len(adj)
    if _bipartite(adj, n):
        return 0, []
    budget = _packing(adj, n)
    while True:
        work = list(adj)
        removed = []
        if _frust_dfs(work, n, budget, [0] * n, removed):
            return budget, sorted(removed)
        budget += 1


def _order_by_degree(adj, n):
    return sorted(range(n), key=lambda v: (-_popcount(adj[v]), v))


def min_mono_partition(adj, blocks, lower=0):
    """Assignment into at most ``blocks`` classes minimising monochromatic edges.

    Returns ``(cost, colors)``. The search stops as soon as ``cost <= lower``.
    """
    adj = _check(adj)
    n = len(adj)
    if blocks < 1:
        raise ValueError("blocks must be >= 1")
    order = _order_by_degree(adj, n)
    classes = [0] * blocks
    colors = [0] * n
    cost = 0
    used = 0
    for v in order:
        best_c, best_inc = 0, None
        for c in range(min(used + 1, blocks)):
            inc = _popcount(adj[v] & classes[c])
            if best_inc is None or inc < best_inc:
                best_c, best_inc = c, inc
        classes[best_c] |= 1 << v
        colors[v] = best_c
        cost += best_inc
        used = max(used, best_c + 1)
    state = {"best": cost, "colors": colors}
    if cost <= lower:
        return cost, colors

    classes = [0] * blocks
    cur = [0] * n

    def dfs(i, used, cost):
        if cost >= state["best"]:
            return False
        if i == n:
            state["best"] = cost
            state["colors"] = list(cur)
            return cost <= lower
        v = order[i]
        bit = 1 << v
        for c in range(min(used + 1, blocks)):
            inc = _popcount(adj[v] & classes[c])
            classes[c] |= bit
            cur[v] = c
            done = dfs(i + 1, max(used, c + 1), cost + inc)
            classes[c] ^= bit
            if done:
                return True
        return False

    dfs(0, 0, 0)
    return state["best"], state["colors"]


def _grow_clique(adj, s, order):
    clique = [s]
    common = adj[s]
    for v in order:
        if common >> v & 1:
            clique.append(v)
            common &= adj[v]
    return clique


def _greedy_clique(adj, order):
    best = []
    for s in order:
        clique = _grow_clique(adj, s, order)
        if len(clique) > len(best):
            best = clique
    return best


def k_coloring(adj, k):
    """A proper coloring with colors ``0..k-1`` or None.

    Backtracking in descending-degree order with forward checking; the
    vertices of a greedily grown clique are pre-colored ``0..q-1`` and any
    later vertex may open only the next unused color.
    """
    adj = _check(adj)
    n = len(adj)
    if n == 0:
        return []
    if k < 1:
        return None
    order = _order_by_degree(adj, n)
    clique = _grow_clique(adj, order[0], order)
    if len(clique) > k:
        return None
    full = (1 << k) - 1
    colors = [-1] * n
    forbid = [0] * n
    for c, v in enumerate(clique):
        colors[v] = c
        for w in _bits(adj[v]):
            forbid[w] |= 1 << c
    for v in range(n):
        if colors[v] < 0 and forbid[v] & full == full:
            return None
    rest = [v for v in order if colors[v] < 0]

    def dfs(i, used):
        if i == len(rest):
            return True
        v = rest[i]
        for c in range(min(used + 1, k)):
            if forbid[v] >> c & 1:
                continue
            colors[v] = c
            changed = []
            dead = False
            for w in _bits(adj[v]):
                if colors[w] < 0 and not forbid[w] >> c & 1:
                    forbid[w] |= 1 << c
                    changed.append(w)
                    if forbid[w] & full == full:
                        dead = True
            if not dead and dfs(i + 1, max(used, c + 1)):
                return True
            for w in changed:
                forbid[w] &= ~(1 << c)
            colors[v] = -1
        return False

    if dfs(0, len(clique)):
        return [max(c, 0) for c in colors]
    return None


def _greedy_coloring(adj, order, n):
    colors = [-1] * n
    for v in order:
        taken = 0
        for w in _bits(adj[v]):
            if colors[w] >= 0:
                taken |= 1 << colors[w]
        c = 0
        while taken >> c & 1:
            c += 1
        colors[v] = c
    return colors


def chromatic_number(adj):
    """``(chi, coloring)`` bracketed by a greedy clique and a greedy coloring."""
    adj = _check(adj)
    n = len(adj)
    if n == 0:
        return 0, []
    if not any(adj):
        return 1, [0] * n
    order = _order_by_degree(adj, n)
    lower = len(_greedy_clique(adj, order))
    greedy = _greedy_coloring(adj, order, n)
    upper = max(greedy) + 1
    for k in range(lower, upper):
        colors = k_coloring(adj, k)
        if colors is not None:
            return k, colors
    return upper, greedy


def cycle_census(adj, cutoff=0, max_witnesses=0):
    """Count simple cycles, each once, anchored at their smallest vertex.

    Returns ``(odd, total, saturated, witnesses)``; enumeration stops once
    ``cutoff`` odd cycles were seen (``cutoff=0`` means no limit).
    """
    adj = _check(adj)
    n = len(adj)
    st = {"odd": 0, "total": 0, "stop": False}
    witnesses = []
    path = []

    def dfs(s, higher, u, pmask):
        depth = len(path)
        if depth >= 3 and adj[u] >> s & 1 and path[1] < u:
            st["total"] += 1
            if depth & 1:
                st["odd"] += 1
                if len(witnesses) < max_witnesses:
                    witnesses.append(list(path))
                if cutoff and st["odd"] >= cutoff:
                    st["stop"] = True
                    return
        for w in _bits(adj[u] & higher & ~pmask):
            path.append(w)
            dfs(s, higher, w, pmask | (1 << w))
            path.pop()
            if st["stop"]:
                return

    for s in range(n):
        higher = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        path.append(s)
        dfs(s, higher, s, 1 << s)
        path.pop()
        if st["stop"]:
            break
    return st["odd"], st["total"], st["stop"], witnesses


def _refine(adj, cells):
    while True:
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups = {}
            for v in _bits(cell):
                key = tuple(_popcount(adj[v] & c) for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            out.extend(groups[key] for key in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _twins(adj, u, v):
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_labeling(adj):
    """Labeling ``lab`` (position -> vertex) of the canonical relabeled graph.

    Individualization-refinement search; among the discrete leaves the one
    with the smallest upper-triangle code (graph6 bit order) wins. Twin
    vertices of a target cell are branched on once.
    """
    adj = _check(adj)
    n = len(adj)
    if n == 0:
        return []
    best = {"code": None, "lab": None}

    def leaf(cells):
        lab = [c.bit_length() - 1 for c in cells]
        code = 0
        for j in range(1, n):
            row = adj[lab[j]]
            for i in range(j):
                code = (code << 1) | (row >> lab[i] & 1)
        if best["code"] is None or code < best["code"]:
            best["code"] = code
            best["lab"] = lab

    def search(cells):
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf(cells)
            return
        idx = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        tried = []
        for v in _bits(target):
            if any(_twins(adj, u, v) for u in tried):
                continue
            tried.append(v)
            search(cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:])

    search([(1 << n) - 1])
    return best["lab"]


def fast32_conditions(adj):
    """Every ``G-e`` is non-bipartite and some ``G-{e,f}`` is bipartite."""
    adj = _check(adj)
    n = len(adj)
    edges = [(u, v) for u in range(n) for v in _bits(adj[u] >> (u + 1) << (u + 1))]
    work = list(adj)
    for a, b in edges:
        work[a] &= ~(1 << b)
        work[b] &= ~(1 << a)
        cyc = _short_odd(work, n)
        ok = False
        if cyc is not None:
            L = len(cyc)
            for i in range(L):
                c, d = cyc[i], cyc[(i + 1) % L]
                work[c] &= ~(1 << d)
                work[d] &= ~(1 << c)
                ok = _bipartite(work, n)
                work[c] |= 1 << d
                work[d] |= 1 << c
                if ok:
                    break
        work[a] |= 1 << b
        work[b] |= 1 << a
        if not ok:
            return False
    return True
