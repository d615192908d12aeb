"""Slow, independent reference implementations used only by the tests."""

from itertools import product


def naive_rank(rows, ncols):
    m = [[(r >> j) & 1 for j in range(ncols)] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                m[i] = [a ^ b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def in_span(vectors, v, n):
    return naive_rank(list(vectors) + [v], n) == naive_rank(list(vectors), n)


def table_mul(mul, u, v):
    out = 0
    n = len(mul)
    for s in range(n):
        if (u >> s) & 1:
            for t in range(n):
                if (v >> t) & 1:
                    out ^= 1 << mul[s][t]
    return out


def naive_closure_rank(mul, gens):
    """Two-sided ideal by multiplying every spanning vector by every group element."""
    n = len(mul)
    span = []
    todo = list(gens)
    while todo:
        v = todo.pop()
        if not v or in_span(span, v, n):
            continue
        span.append(v)
        for g in range(n):
            todo.append(table_mul(mul, 1 << g, v))
            todo.append(table_mul(mul, v, 1 << g))
    return naive_rank(span, n)


def naive_center(mul):
    n = len(mul)
    return {g for g in range(n) if all(mul[g][h] == mul[h][g] for h in range(n))}


def naive_order(mul, g):
    k, x = 1, g
    while x != 0:
        x = mul[x][g]
        k += 1
    return k


def generated(mul, gens):
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                p = mul[h][s]
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


def naive_hom_count(gmul, hmul, gens):
    """Try every tuple of generator images; build the map by words and check all pairs."""
    n = len(gmul)
    count = 0
    for images in product(range(len(hmul)), repeat=len(gens)):
        f = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for h in frontier:
                for s, img in zip(gens, images):
                    p = gmul[h][s]
                    val = hmul[f[h]][img]
                    if p in f:
                        if f[p] != val:
                            ok = False
                            break
                    else:
                        f[p] = val
                        nxt.append(p)
                if not ok:
                    break
            frontier = nxt
        if ok and len(f) == n and all(f[gmul[a][b]] == hmul[f[a]][f[b]]
                                      for a in range(n) for b in range(n)):
            count += 1
    return count
