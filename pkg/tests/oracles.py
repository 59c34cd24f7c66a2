"""Independent brute-force checks used as test oracles.

Nothing here imports the package's algorithms; structures are read through
``tables()`` / ``order_rows()`` only.
"""
from itertools import permutations, product


def axioms_hold(s) -> bool:
    T, L = s.tables(), s.order_rows()
    n, g = s.n, s.g
    R = range(n)
    le = lambda a, b: L[a][b] == 1
    if not all(le(a, a) for a in R):
        return False
    if any(a != b and le(a, b) and le(b, a) for a in R for b in R):
        return False
    if any(le(a, b) and le(b, c) and not le(a, c) for a in R for b in R for c in R):
        return False
    for t in range(g):
        for a, b, c in product(R, R, R):
            if le(a, b) and not (le(T[t][a][c], T[t][b][c]) and le(T[t][c][a], T[t][c][b])):
                return False
    if s.kind == "semigroup":
        for t, m in product(range(g), repeat=2):
            for a, b, c in product(R, R, R):
                if T[m][T[t][a][b]][c] != T[t][a][T[m][b][c]]:
                    return False
    return True


def isomorphic(s1, s2) -> bool:
    if (s1.n, s1.g) != (s2.n, s2.g):
        return False
    T1, T2 = s1.tables(), s2.tables()
    L1, L2 = s1.order_rows(), s2.order_rows()
    n, g = s1.n, s1.g
    for pi in permutations(range(n)):
        if any(L1[a][b] != L2[pi[a]][pi[b]] for a in range(n) for b in range(n)):
            continue
        for tau in permutations(range(g)):
            if all(pi[T1[t][a][b]] == T2[tau[t]][pi[a]][pi[b]]
                   for t in range(g) for a in range(n) for b in range(n)):
                return True
    return False


def is_filter_naive(s, F) -> bool:
    T, L = s.tables(), s.order_rows()
    n = s.n
    F = set(F)
    if not F:
        return False
    for t in range(s.g):
        for x in range(n):
            for y in range(n):
                p = T[t][x][y]
                if x in F and y in F and p not in F:
                    return False
                if p in F and (x not in F or y not in F):
                    return False
    return all(y in F for x in F for y in range(n) if L[x][y])


def principal_filter_naive(s, a):
    n = s.n
    result = set(range(n))
    for bits in range(1 << n):
        F = {x for x in range(n) if bits >> x & 1}
        if a in F and is_filter_naive(s, F):
            result &= F
    return result
