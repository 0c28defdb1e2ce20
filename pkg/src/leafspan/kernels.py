"""Bitmask search kernels.

Every function here is written in the subset of Python that numba compiles in
nopython mode.  Graphs arrive as ``adj``: one neighbourhood bitmask per
vertex (an ``int64`` array under numba, a list of ints otherwise).  Vertex
sets are bitmasks too; bit 63 may show up as a negative ``int64`` under numba
and callers mask results back with ``& 0xFFFFFFFFFFFFFFFF``.

No kernel recurses: searches keep explicit per-depth stacks allocated with
:func:`leafspan._jit.buf`.
"""

from ._jit import buf, kernel


# ---------------------------------------------------------------------------
# bit helpers


@kernel
def popcount(x):
    c = 0
    while x != 0:
        x &= x - 1
        c += 1
    return c


@kernel
def ctz(x):
    """Index of the lowest set bit of a nonzero mask."""
    i = 0
    while ((x >> i) & 1) == 0:
        i += 1
    return i


@kernel
def prefix_mask(s):
    # bits 0..s inclusive; avoids the undefined 1 << 64
    return ((1 << s) - 1) | (1 << s)


@kernel
def full_mask(n):
    return prefix_mask(n - 1)


@kernel
def neighbours_of(adj, mask):
    out = 0
    while mask != 0:
        low = mask & -mask
        mask ^= low
        out |= adj[ctz(low)]
    return out


@kernel
def reach(adj, start, allowed):
    """Vertices reachable from ``start`` moving only through ``allowed``."""
    seen = start
    frontier = start
    while frontier != 0:
        nxt = neighbours_of(adj, frontier) & allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@kernel
def is_connected_set(adj, mask):
    if mask == 0:
        return False
    return reach(adj, mask & -mask, mask) == mask


# ---------------------------------------------------------------------------
# minimum connected dominating set


@kernel
def _cds_of_size(adj, n, k, full):
    # include-first DFS over vertices 0..n-1: the first hit is the
    # lexicographically smallest feasible k-set
    chosen = buf(n + 1)
    forb = buf(n + 1)
    phase = buf(n + 1)
    d = 0
    while d >= 0:
        c = chosen[d]
        f = forb[d]
        if phase[d] == 0:
            phase[d] = 1
            cnt = popcount(c)
            if cnt == k or d == n:
                if (
                    cnt == k
                    and (c | neighbours_of(adj, c)) == full
                    and is_connected_set(adj, c)
                ):
                    return c
                d -= 1
                continue
            if cnt + (n - d) < k:
                d -= 1
                continue
            avail = full & ~f
            if (avail | neighbours_of(adj, avail)) != full:
                d -= 1
                continue
            if c != 0 and (reach(adj, c & -c, avail) & c) != c:
                d -= 1
                continue
            chosen[d + 1] = c | (1 << d)
            forb[d + 1] = f
            phase[d + 1] = 0
            d += 1
        elif phase[d] == 1:
            phase[d] = 2
            chosen[d + 1] = c
            forb[d + 1] = f | (1 << d)
            phase[d + 1] = 0
            d += 1
        else:
            d -= 1
    return 0


@kernel
def min_cds(adj, n):
    """Lexicographically smallest minimum connected dominating set.

    The graph must be connected with n >= 2.
    """
    full = full_mask(n)
    if n <= 2:
        return 1
    max_deg = 0
    for v in range(n):
        dv = popcount(adj[v])
        if dv > max_deg:
            max_deg = dv
    # a spanning tree with i internal vertices has at most (D-2)i + 2 leaves
    lo = 1
    if max_deg > 1:
        lo = (n - 2 + max_deg - 2) // (max_deg - 1)
        if lo < 1:
            lo = 1
    for k in range(lo, n + 1):
        found = _cds_of_size(adj, n, k, full)
        if found != 0:
            return found
    return full


# ---------------------------------------------------------------------------
# spanning-tree enumeration (leaf number oracle)


@kernel
def max_leaf_by_trees(eu, ev, m, n):
    """Maximum leaf count over all spanning trees, by edge-subset DFS.

    Component labels are copied per depth so backtracking is free.
    """
    need = n - 1
    comp = buf((m + 1) * n)
    for v in range(n):
        comp[v] = v
    picked = buf(m + 1)
    phase = buf(m + 1)
    taken = buf(need + 1)
    deg = buf(n)
    best = 0
    d = 0
    while d >= 0:
        if best == n - 1:
            break
        base = d * n
        if phase[d] == 0:
            phase[d] = 1
            if picked[d] == need:
                for v in range(n):
                    deg[v] = 0
                for t in range(need):
                    deg[eu[taken[t]]] += 1
                    deg[ev[taken[t]]] += 1
                leaves = 0
                for v in range(n):
                    if deg[v] == 1:
                        leaves += 1
                if leaves > best:
                    best = leaves
                d -= 1
                continue
            if d == m or picked[d] + (m - d) < need:
                d -= 1
                continue
            a = comp[base + eu[d]]
            b = comp[base + ev[d]]
            if a != b:
                nb = base + n
                for v in range(n):
                    x = comp[base + v]
                    comp[nb + v] = a if x == b else x
                taken[picked[d]] = d
                picked[d + 1] = picked[d] + 1
                phase[d + 1] = 0
                d += 1
                continue
        if phase[d] == 1:
            phase[d] = 2
            nb = base + n
            for v in range(n):
                comp[nb + v] = comp[base + v]
            picked[d + 1] = picked[d]
            phase[d + 1] = 0
            d += 1
        else:
            d -= 1
    return best


# ---------------------------------------------------------------------------
# longest cycle / longest path: pruned DFS


@kernel
def longest_cycle_dfs(adj, n):
    """Return (length, vertices) of a longest cycle; length 0 for forests.

    Cycles are searched from their smallest vertex s using only vertices
    above s.  A branch is cut when every vertex it could still reach would
    not beat the incumbent, or when it can no longer get back to s.
    """
    full = full_mask(n)
    best = 0
    best_path = buf(n)
    path = buf(n)
    cand = buf(n)
    for s in range(n):
        if n - s <= best:
            break
        allowed = full & ~prefix_mask(s)
        home = adj[s] & allowed
        if popcount(home) < 2:
            continue
        start_reach = reach(adj, 1 << s, allowed | (1 << s))
        if popcount(start_reach) <= best:
            continue
        path[0] = s
        visited = 1 << s
        cand[0] = home
        d = 0
        while d >= 0:
            if cand[d] == 0:
                visited &= ~(1 << path[d])
                d -= 1
                continue
            low = cand[d] & -cand[d]
            cand[d] ^= low
            u = ctz(low)
            d += 1
            path[d] = u
            visited |= low
            length = d + 1
            if length >= 3 and length > best and ((adj[u] >> s) & 1) == 1:
                best = length
                for i in range(length):
                    best_path[i] = path[i]
                if best == n - s:
                    break
            free = allowed & ~visited
            r = reach(adj, low, free | low)
            if length - 1 + popcount(r) <= best or (r & adj[s]) == 0:
                visited &= ~low
                d -= 1
                continue
            cand[d] = adj[u] & free
        if best == n:
            break
    out = buf(best)
    for i in range(best):
        out[i] = best_path[i]
    return best, out


@kernel
def longest_path_dfs(adj, n):
    """Return (order, vertices) of a longest path (order 1 for edgeless)."""
    full = full_mask(n)
    best = 1
    best_path = buf(n)
    best_path[0] = 0
    path = buf(n)
    cand = buf(n)
    for s in range(n):
        comp = reach(adj, 1 << s, full)
        if popcount(comp) <= best:
            continue
        path[0] = s
        visited = 1 << s
        cand[0] = adj[s]
        d = 0
        while d >= 0:
            if cand[d] == 0:
                visited &= ~(1 << path[d])
                d -= 1
                continue
            low = cand[d] & -cand[d]
            cand[d] ^= low
            u = ctz(low)
            d += 1
            path[d] = u
            visited |= low
            length = d + 1
            if length > best:
                best = length
                for i in range(length):
                    best_path[i] = path[i]
                if best == n:
                    break
            free = full & ~visited
            r = reach(adj, low, free | low)
            if length - 1 + popcount(r) <= best:
                visited &= ~low
                d -= 1
                continue
            cand[d] = adj[u] & free
        if best == n:
            break
    out = buf(best)
    for i in range(best):
        out[i] = best_path[i]
    return best, out


# ---------------------------------------------------------------------------
# longest cycle / longest path: subset dynamic programming (oracles)


@kernel
def longest_cycle_dp(adj, n):
    """Circumference by DP over (vertex set, endpoint); n <= 20.

    ends[mask] holds the endpoints v of paths that start at the lowest
    vertex of mask and visit exactly mask.
    """
    size = 1 << n
    ends = buf(size)
    for v in range(n):
        ends[1 << v] = 1 << v
    best = 0
    for mask in range(1, size):
        e = ends[mask]
        if e == 0:
            continue
        s = ctz(mask & -mask)
        cnt = popcount(mask)
        if cnt >= 3 and cnt > best and (e & adj[s]) != 0:
            best = cnt
        above = ~prefix_mask(s)
        while e != 0:
            low = e & -e
            e ^= low
            ext = adj[ctz(low)] & ~mask & above
            while ext != 0:
                lw = ext & -ext
                ext ^= lw
                ends[mask | lw] |= lw
    return best


@kernel
def longest_path_dp(adj, n):
    """Longest path order by DP over (vertex set, endpoint); n <= 20."""
    size = 1 << n
    ends = buf(size)
    for v in range(n):
        ends[1 << v] = 1 << v
    best = 1
    for mask in range(1, size):
        e = ends[mask]
        if e == 0:
            continue
        cnt = popcount(mask)
        if cnt > best:
            best = cnt
        while e != 0:
            low = e & -e
            e ^= low
            ext = adj[ctz(low)] & ~mask
            while ext != 0:
                lw = ext & -ext
                ext ^= lw
                ends[mask | lw] |= lw
    return best


# ---------------------------------------------------------------------------
# independence


@kernel
def _clique_cover_bound(adj, p):
    # greedy colouring of the complement restricted to p
    cover = 0
    cliques = buf(64)
    while p != 0:
        low = p & -p
        p ^= low
        v = ctz(low)
        placed = False
        for i in range(cover):
            if (cliques[i] & ~adj[v]) == 0:
                cliques[i] |= low
                placed = True
                break
        if not placed:
            cliques[cover] = low
            cover += 1
    return cover


@kernel
def max_independent_set(adj, n):
    """Maximum independent set by branch and bound.

    Branch vertex: minimum degree inside the candidate set.  When that degree
    is at most one, taking the vertex is always safe and the exclude branch is
    skipped.  Bound: greedy clique cover of the remaining candidates.
    """
    cand = buf(n + 2)
    cur = buf(n + 2)
    pivot = buf(n + 2)
    phase = buf(n + 2)
    cand[0] = full_mask(n)
    best = 0
    best_set = 0
    d = 0
    while d >= 0:
        p = cand[d]
        r = cur[d]
        if phase[d] == 0:
            phase[d] = 1
            if p == 0:
                size = popcount(r)
                if size > best:
                    best = size
                    best_set = r
                d -= 1
                continue
            if popcount(r) + _clique_cover_bound(adj, p) <= best:
                d -= 1
                continue
            v = -1
            vdeg = 1 << 20
            q = p
            while q != 0:
                low = q & -q
                q ^= low
                w = ctz(low)
                dw = popcount(adj[w] & p)
                if dw < vdeg:
                    vdeg = dw
                    v = w
            pivot[d] = v
            if vdeg <= 1:
                phase[d] = 2
            cand[d + 1] = p & ~adj[v] & ~(1 << v)
            cur[d + 1] = r | (1 << v)
            phase[d + 1] = 0
            d += 1
        elif phase[d] == 1:
            phase[d] = 2
            cand[d + 1] = p & ~(1 << pivot[d])
            cur[d + 1] = r
            phase[d + 1] = 0
            d += 1
        else:
            d -= 1
    return best_set


@kernel
def min_degree_sum(adj, n, k):
    """Minimum degree sum over independent k-sets, or -1 if none exists.

    Vertices are visited in nondecreasing degree order, so the cheapest
    possible completion of a partial set is the next k - depth degrees.
    """
    deg = buf(n)
    order = buf(n)
    for v in range(n):
        deg[v] = popcount(adj[v])
        order[v] = v
    for i in range(1, n):
        j = i
        while j > 0 and deg[order[j - 1]] > deg[order[j]]:
            t = order[j - 1]
            order[j - 1] = order[j]
            order[j] = t
            j -= 1
    best = -1
    idx = buf(k + 1)
    chosen = buf(k + 1)
    sums = buf(k + 1)
    d = 0
    idx[0] = 0
    chosen[0] = 0
    sums[0] = 0
    while d >= 0:
        if d == k:
            if best < 0 or sums[d] < best:
                best = sums[d]
            d -= 1
            continue
        i = idx[d]
        advanced = False
        while i <= n - (k - d):
            v = order[i]
            i += 1
            if (chosen[d] & ((1 << v) | adj[v])) != 0:
                continue
            if best >= 0:
                lower = sums[d]
                for t in range(k - d):
                    lower += deg[order[i - 1 + t]]
                if lower >= best:
                    # later candidates are no cheaper
                    i = n
                    break
            idx[d] = i
            chosen[d + 1] = chosen[d] | (1 << v)
            sums[d + 1] = sums[d] + deg[v]
            idx[d + 1] = i
            d += 1
            advanced = True
            break
        if not advanced:
            d -= 1
    return best


# ---------------------------------------------------------------------------
# canonical labelling: individualisation + refinement


@kernel
def _refine(adj, n, lab, start, off, cnt):
    """Refine the ordered partition stored at lab[off:off+n] to equitable.

    Cells are split by neighbour count inside a splitter cell and the pieces
    are ordered by that count, so the result depends only on the ordered
    partition, never on vertex names.
    """
    changed = True
    while changed:
        changed = False
        p = 0
        while p < n:
            q = p + 1
            while q < n and start[off + q] == 0:
                q += 1
            wmask = 0
            for i in range(p, q):
                wmask |= 1 << lab[off + i]
            r = 0
            while r < n:
                e = r + 1
                while e < n and start[off + e] == 0:
                    e += 1
                if e - r > 1:
                    same = True
                    for i in range(r, e):
                        cnt[i] = popcount(adj[lab[off + i]] & wmask)
                        if cnt[i] != cnt[r]:
                            same = False
                    if not same:
                        for i in range(r + 1, e):
                            j = i
                            while j > r and cnt[j - 1] > cnt[j]:
                                t = cnt[j - 1]
                                cnt[j - 1] = cnt[j]
                                cnt[j] = t
                                t = lab[off + j - 1]
                                lab[off + j - 1] = lab[off + j]
                                lab[off + j] = t
                                j -= 1
                        for i in range(r + 1, e):
                            if cnt[i] != cnt[i - 1]:
                                start[off + i] = 1
                        changed = True
                r = e
            p = q
    return 0


@kernel
def _compare_code(adj, n, lab, off, best):
    """Compare the relabelled upper triangle with ``best`` column by column.

    Returns -1, 0 or 1; on -1 ``best`` is overwritten with the new code.
    """
    result = 0
    for j in range(1, n):
        vj = lab[off + j]
        col = 0
        for i in range(j):
            col = (col << 1) | ((adj[lab[off + i]] >> vj) & 1)
        if result == 0:
            if col < best[j]:
                result = -1
            elif col > best[j]:
                return 1
        if result == -1:
            best[j] = col
    return result


@kernel
def canonical_labelling(adj, n, colour):
    """Return (lab, code) minimising the graph6 bit string.

    ``lab[i]`` is the original vertex placed at canonical position i.  The
    initial partition groups vertices by ``colour`` in ascending order.
    Vertices with identical neighbourhoods (twins) in the same target cell are
    swapped by an automorphism, so only one of them is branched on.
    """
    depth_cap = n + 1
    lab = buf(depth_cap * n)
    start = buf(depth_cap * n)
    tried = buf(depth_cap)
    target = buf(depth_cap)
    cnt = buf(n)
    best = buf(n)
    best_lab = buf(n)
    for i in range(n):
        lab[i] = i
    for i in range(1, n):
        j = i
        while j > 0 and colour[lab[j - 1]] > colour[lab[j]]:
            t = lab[j - 1]
            lab[j - 1] = lab[j]
            lab[j] = t
            j -= 1
    start[0] = 1
    for i in range(1, n):
        if colour[lab[i]] != colour[lab[i - 1]]:
            start[i] = 1
    _refine(adj, n, lab, start, 0, cnt)
    have_best = False
    d = 0
    target[0] = -1
    while d >= 0:
        off = d * n
        if target[d] == -1:
            # fresh node: leaf or pick the first non-singleton cell
            t = 0
            while t < n:
                e = t + 1
                while e < n and start[off + e] == 0:
                    e += 1
                if e - t > 1:
                    break
                t = e
            if t >= n:
                if not have_best:
                    have_best = True
                    for j in range(1, n):
                        vj = lab[off + j]
                        col = 0
                        for i in range(j):
                            col = (col << 1) | ((adj[lab[off + i]] >> vj) & 1)
                        best[j] = col
                    for i in range(n):
                        best_lab[i] = lab[off + i]
                elif _compare_code(adj, n, lab, off, best) < 0:
                    for i in range(n):
                        best_lab[i] = lab[off + i]
                d -= 1
                continue
            target[d] = t
            tried[d] = 0
        t = target[d]
        e = t + 1
        while e < n and start[off + e] == 0:
            e += 1
        pick = -1
        for i in range(t, e):
            v = lab[off + i]
            if (tried[d] >> v) & 1:
                continue
            twin = False
            rest = tried[d]
            while rest != 0:
                low = rest & -rest
                rest ^= low
                w = ctz(low)
                if (adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)):
                    twin = True
                    break
            if twin:
                tried[d] |= 1 << v
                continue
            pick = i
            break
        if pick < 0:
            d -= 1
            continue
        v = lab[off + pick]
        tried[d] |= 1 << v
        noff = off + n
        for i in range(n):
            lab[noff + i] = lab[off + i]
            start[noff + i] = start[off + i]
        lab[noff + pick] = lab[noff + t]
        lab[noff + t] = v
        start[noff + t + 1] = 1
        _refine(adj, n, lab, start, noff, cnt)
        d += 1
        target[d] = -1
    return best_lab, best


# ---------------------------------------------------------------------------
# isomorph-free augmentation


@kernel
def _non_cut_last(adj, n, lab):
    full = full_mask(n)
    for i in range(n - 1, -1, -1):
        v = lab[i]
        rest = full & ~(1 << v)
        if n == 1 or is_connected_set(adj, rest):
            return v
    return lab[n - 1]


@kernel
def _same_code(a, b, n):
    for j in range(1, n):
        if a[j] != b[j]:
            return False
    return True


@kernel
def augment_accept(parent_adj, m):
    """Scan every one-vertex extension of a connected order-m parent.

    Child S gets the new vertex m adjacent to the nonempty set S.  It is
    accepted when the new vertex lies in the automorphism orbit of the child's
    canonical deletion vertex (the last non-cut vertex in canonical order), so
    each isomorphism class is accepted from exactly one parent class.  Returns
    a flag array indexed by S; duplicates within one parent remain.
    """
    n = m + 1
    size = 1 << m
    flags = buf(size)
    adj = buf(n)
    colour = buf(n)
    for s in range(1, size):
        for v in range(m):
            adj[v] = parent_adj[v]
            if (s >> v) & 1:
                adj[v] |= 1 << m
        adj[m] = s
        for v in range(n):
            colour[v] = 0
        lab, _ = canonical_labelling(adj, n, colour)
        w_star = _non_cut_last(adj, n, lab)
        if w_star == m:
            flags[s] = 1
            continue
        colour[m] = 1
        _, code_new = canonical_labelling(adj, n, colour)
        colour[m] = 0
        colour[w_star] = 1
        _, code_star = canonical_labelling(adj, n, colour)
        if _same_code(code_new, code_star, n):
            flags[s] = 1
    return flags
