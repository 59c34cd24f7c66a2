"""Pure-Python kernels; the reference twin of ``_kernels.pyx``.

Every function here has the same signature and results as its compiled
counterpart.  Tables use the flat layout of :class:`gammalab.core.PoGammaStructure`.
"""

UNSET = 255


def _upmasks(leq, n):
    return [sum(1 << t for t in range(n) if leq[a * n + t]) for a in range(n)]


def closure_mask(op, leq, n, g, seed):
    """Least set containing ``seed`` closed under products, factors and upper bounds."""
    up = _upmasks(leq, n)
    nn = n * n
    cur = seed
    while True:
        new = cur
        members = [x for x in range(n) if (cur >> x) & 1]
        for x in members:
            new |= up[x]
        for t in range(g):
            base = t * nn
            for x in members:
                row = base + x * n
                for y in members:
                    new |= 1 << op[row + y]
            for x in range(n):
                row = base + x * n
                for y in range(n):
                    if (cur >> op[row + y]) & 1:
                        new |= (1 << x) | (1 << y)
        if new == cur:
            return cur
        cur = new


def filter_masks(op, leq, n, g):
    """Masks of all filters, ascending."""
    up = _upmasks(leq, n)
    nn = n * n
    need = list(up)
    for t in range(g):
        for x in range(n):
            for y in range(n):
                need[op[t * nn + x * n + y]] |= (1 << x) | (1 << y)
    out = []
    for mask in range(1, 1 << n):
        members = [x for x in range(n) if (mask >> x) & 1]
        if any(need[v] & ~mask for v in members):
            continue
        ok = True
        for t in range(g):
            base = t * nn
            for x in members:
                row = base + x * n
                for y in members:
                    if not (mask >> op[row + y]) & 1:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(mask)
    return out


def compatible(op, leq, n, g):
    nn = n * n
    for a in range(n):
        for b in range(n):
            if a == b or not leq[a * n + b]:
                continue
            for t in range(g):
                base = t * nn
                for c in range(n):
                    if not leq[op[base + a * n + c] * n + op[base + b * n + c]]:
                        return False
                    if not leq[op[base + c * n + a] * n + op[base + c * n + b]]:
                        return False
    return True


def cell_order(n, g):
    """Fill order for the table search: growing square blocks, labels innermost."""
    cells = [(max(a, b), a, b, t) for t in range(g) for a in range(n) for b in range(n)]
    cells.sort()
    return [(t * n + a) * n + b for _, a, b, t in cells]


def _consistent(tab, n, g, t0, a0, b0):
    # every mixed-associativity instance that uses cell (t0, a0, b0)
    nn = n * n
    # (a0 t0 b0) m z  vs  a0 t0 (b0 m z)
    v = tab[t0 * nn + a0 * n + b0]
    for m in range(g):
        for z in range(n):
            w = tab[m * nn + b0 * n + z]
            if w == UNSET:
                continue
            lhs = tab[m * nn + v * n + z]
            rhs = tab[t0 * nn + a0 * n + w]
            if lhs != UNSET and rhs != UNSET and lhs != rhs:
                return False
    # (x t a0) t0 b0  vs  x t (a0 t0 b0)
    for t in range(g):
        for x in range(n):
            u = tab[t * nn + x * n + a0]
            if u == UNSET:
                continue
            lhs = tab[t0 * nn + u * n + b0]
            rhs = tab[t * nn + x * n + v]
            if lhs != UNSET and rhs != UNSET and lhs != rhs:
                return False
    # cell as outer-left: (x t y) t0 b0 with x t y = a0
    for t in range(g):
        for x in range(n):
            for y in range(n):
                if tab[t * nn + x * n + y] != a0:
                    continue
                w = tab[t0 * nn + y * n + b0]
                if w == UNSET:
                    continue
                rhs = tab[t * nn + x * n + w]
                if rhs != UNSET and rhs != v:
                    return False
    # cell as outer-right: a0 t0 (y m z) with y m z = b0
    for m in range(g):
        for y in range(n):
            for z in range(n):
                if tab[m * nn + y * n + z] != b0:
                    continue
                u = tab[t0 * nn + a0 * n + y]
                if u == UNSET:
                    continue
                lhs = tab[m * nn + u * n + z]
                if lhs != UNSET and lhs != v:
                    return False
    return True


def search_tables(n, g, values, assoc, limit, budget):
    """Backtracking over table cells.

    ``values`` gives, per flat cell index, the order in which candidate values
    are tried (``n`` bytes per cell).  Returns ``(solutions, exhausted)`` where
    ``exhausted`` is true when ``budget`` nodes were spent before the search
    finished.  ``limit`` / ``budget`` of 0 mean unbounded.
    """
    order = cell_order(n, g)
    ncells = len(order)
    tab = bytearray([UNSET]) * ncells
    out = []
    nodes = 0
    pos = 0
    choice = [-1] * ncells
    while pos >= 0:
        cell = order[pos]
        choice[pos] += 1
        if choice[pos] >= n:
            tab[cell] = UNSET
            choice[pos] = -1
            pos -= 1
            continue
        nodes += 1
        if budget and nodes > budget:
            return out, True
        tab[cell] = values[cell * n + choice[pos]]
        if assoc:
            t0, rest = divmod(cell, n * n)
            if not _consistent(tab, n, g, t0, rest // n, rest % n):
                continue
        if pos == ncells - 1:
            out.append(bytes(tab))
            if limit and len(out) >= limit:
                return out, False
            continue
        pos += 1
    return out, False


def canonical_form(op, leq, n, g, mperms, gperms):
    """Lexicographically least (tables, order) byte string over all relabelings.

    ``mperms`` / ``gperms`` are lists of permutations (old -> new) of the
    carrier and of the labels.
    """
    nn = n * n
    best = None
    for tau in gperms:
        tinv = [0] * g
        for old, new in enumerate(tau):
            tinv[new] = old
        for pi in mperms:
            pinv = [0] * n
            for old, new in enumerate(pi):
                pinv[new] = old
            cand = bytearray()
            for t in range(g):
                base = tinv[t] * nn
                for a in range(n):
                    row = base + pinv[a] * n
                    cand.extend(pi[op[row + pinv[b]]] for b in range(n))
            for a in range(n):
                row = pinv[a] * n
                cand.extend(leq[row + pinv[b]] for b in range(n))
            if best is None or cand < best:
                best = cand
    return bytes(best)


def structure_forms(families, orders, n, g, mperms, gperms):
    """``(canonical form, family index, order index)`` for every compatible pairing."""
    out = []
    for i, op in enumerate(families):
        for j, leq in enumerate(orders):
            if compatible(op, leq, n, g):
                out.append((canonical_form(op, leq, n, g, mperms, gperms), i, j))
    return out
