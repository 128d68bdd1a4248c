"""Polynomial-time subroutines: bipartiteness and list coloring with lists of size <= 2."""

from collections import deque

from .errors import UsageError


def two_color(g):
    """Proper coloring of ``g`` with colors {1, 2}, or None if ``g`` has an odd cycle."""
    color = {}
    for s in g.vertices():
        if s in color:
            continue
        color[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            cu = color[u]
            for w in g.neighbors(u):
                cw = color.get(w)
                if cw is None:
                    color[w] = 3 - cu
                    queue.append(w)
                elif cw == cu:
                    return None
    return color


def _check_lists(g, lists):
    for v in g.vertices():
        if v not in lists:
            raise UsageError(f"vertex {v} has no list")
        lst = lists[v]
        if len(lst) > 2 or not set(lst) <= {1, 2, 3}:
            raise UsageError(f"list of vertex {v} must be a subset of {{1,2,3}} of size <= 2")


def _strong_components(n_nodes, start, targets):
    """Iterative Tarjan over a CSR graph (out-edges of u are
    ``targets[start[u]:start[u + 1]]``). Component ids come out in reverse
    topological order."""
    index = [0] * n_nodes
    low = [0] * n_nodes
    comp = [-1] * n_nodes
    ptr = start[:-1]
    stack = []
    counter = 1
    n_comp = 0
    for root in range(n_nodes):
        if index[root]:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        work = [root]
        while work:
            node = work[-1]
            p, end = ptr[node], start[node + 1]
            while p < end:
                w = targets[p]
                p += 1
                if not index[w]:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    work.append(w)
                    break
                # comp[w] < 0 means w is still on the stack
                if comp[w] < 0 and index[w] < low[node]:
                    low[node] = index[w]
            else:
                ptr[node] = p
                work.pop()
                if work:
                    parent = work[-1]
                    if low[node] < low[parent]:
                        low[parent] = low[node]
                if low[node] == index[node]:
                    while True:
                        w = stack.pop()
                        comp[w] = n_comp
                        if w == node:
                            break
                    n_comp += 1
                continue
            ptr[node] = p
    return comp


def list_color_width2(g, lists):
    """Proper coloring with ``coloring[v] in lists[v]``, or None if none exists.

    Each vertex is a boolean choice between its (at most two) list entries;
    every edge forbids the combinations giving both ends the same color. The
    resulting 2-SAT system is decided through strongly connected components of
    its implication graph, which also yields a witness.
    """
    _check_lists(g, lists)
    verts = g.vertices()
    if any(len(lists[v]) == 0 for v in verts):
        return None
    pos = {v: i for i, v in enumerate(verts)}
    # choice[i] maps each color on vertex i's list to its choice bit
    choice = []
    for v in verts:
        lst = sorted(lists[v])
        choice.append({c: j for j, c in enumerate(lst)})

    # literal 2*i + j: vertex i takes choice j; negation is literal ^ 1
    src, dst = [], []
    for i, ch in enumerate(choice):
        if len(ch) == 1:
            src.append(2 * i + 1)
            dst.append(2 * i)
    for a in verts:
        i = pos[a]
        chi = choice[i]
        for b in g.neighbors(a):
            if b < a:
                continue
            k = pos[b]
            chk = choice[k]
            for c, ji in chi.items():
                jk = chk.get(c)
                if jk is not None:
                    # not (i takes ji and k takes jk)
                    src.append(2 * i + ji)
                    dst.append(2 * k + 1 - jk)
                    src.append(2 * k + jk)
                    dst.append(2 * i + 1 - ji)

    n_lit = 2 * len(verts)
    start = [0] * (n_lit + 1)
    for u in src:
        start[u + 1] += 1
    for u in range(n_lit):
        start[u + 1] += start[u]
    fill = start[:-1]
    targets = [0] * len(src)
    for u, w in zip(src, dst):
        targets[fill[u]] = w
        fill[u] += 1

    comp = _strong_components(n_lit, start, targets)
    coloring = {}
    for i, v in enumerate(verts):
        c0, c1 = comp[2 * i], comp[2 * i + 1]
        if c0 == c1:
            return None
        want = 1 if c1 < c0 else 0
        coloring[v] = next(c for c, j in choice[i].items() if j == want)
    return coloring
