"""Semilattice congruences, the relation N, class orders and quotients M/sigma."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .core import (SEMIGROUP, ElementSet, PoGammaStructure, StructureError,
                   require_semigroup)
from .filters import principal_filter

MAX_PARTITION_SCAN_N = 10


class InvariantError(RuntimeError):
    """A property that must hold by theory failed; indicates a bug."""


class NotSemilatticeCongruence(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Equivalence on ``0..n-1``; class ids ranked by each class's least element."""

    class_of: tuple

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Relabel arbitrary hashable class labels canonically."""
        ids: dict = {}
        return cls(tuple(ids.setdefault(lab, len(ids)) for lab in labels))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def single(cls, n: int) -> "Partition":
        return cls((0,) * n)

    def __post_init__(self):
        seen = -1
        for c in self.class_of:
            if c > seen + 1 or c < 0:
                raise StructureError(f"class ids not canonical: {self.class_of}")
            seen = max(seen, c)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def k(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def classes(self) -> list[ElementSet]:
        masks = [0] * self.k
        for x, c in enumerate(self.class_of):
            masks[c] |= 1 << x
        return [ElementSet(self.n, m) for m in masks]

    def meet(self, other: "Partition") -> "Partition":
        return Partition.from_labels(list(zip(self.class_of, other.class_of)))

    def refines(self, other: "Partition") -> bool:
        return all(other.class_of[a] == other.class_of[b]
                   for a in range(self.n) for b in range(a + 1, self.n)
                   if self.class_of[a] == self.class_of[b])

    def is_discrete(self) -> bool:
        return self.k == self.n

    def __repr__(self) -> str:
        return "{" + ", ".join(repr(c) for c in self.classes()) + "}"


@dataclass(frozen=True)
class CongruenceCheck:
    is_congruence: bool
    is_semilattice: bool
    is_complete: bool
    witness: tuple | None = None
    is_equivalence: bool = True


def _shape(s: PoGammaStructure, p: Partition) -> None:
    if p.n != s.n:
        raise StructureError(f"partition over {p.n} elements used with structure of n={s.n}")


def check_congruence(s: PoGammaStructure, p: Partition) -> CongruenceCheck:
    """Scan compatibility, the two semilattice laws and completeness.

    Witnesses are tagged tuples: ``("right", a, b, gamma, c)`` when
    ``a ~ b`` but ``a gamma c`` and ``b gamma c`` are split (``"left"`` for
    ``c gamma a``), ``("idempotent", a, gamma)``, ``("commutative", a, gamma, b)``
    and ``("complete", a, gamma, b)`` for ``a <= b`` with ``a`` split from
    ``a gamma b``.
    """
    _shape(s, p)
    n, g, op, leq = s.n, s.g, s.op, s.leq
    nn = n * n
    cl = p.class_of
    witness = None
    for a in range(n):
        for b in range(a + 1, n):
            if cl[a] != cl[b]:
                continue
            for t, c in product(range(g), range(n)):
                base = t * nn
                if cl[op[base + a * n + c]] != cl[op[base + b * n + c]]:
                    witness = ("right", a, b, t, c)
                elif cl[op[base + c * n + a]] != cl[op[base + c * n + b]]:
                    witness = ("left", a, b, t, c)
                if witness:
                    return CongruenceCheck(False, False, False, witness)
    for a, t in product(range(n), range(g)):
        if cl[op[t * nn + a * n + a]] != cl[a]:
            return CongruenceCheck(True, False, False, ("idempotent", a, t))
    for a, t, b in product(range(n), range(g), range(n)):
        if b > a and cl[op[t * nn + a * n + b]] != cl[op[t * nn + b * n + a]]:
            return CongruenceCheck(True, False, False, ("commutative", a, t, b))
    for a, t, b in product(range(n), range(g), range(n)):
        if leq[a * n + b] and cl[a] != cl[op[t * nn + a * n + b]]:
            return CongruenceCheck(True, True, False, ("complete", a, t, b))
    return CongruenceCheck(True, True, True)


def _require_semilattice(s: PoGammaStructure, p: Partition) -> None:
    chk = check_congruence(s, p)
    if not chk.is_semilattice:
        raise NotSemilatticeCongruence(f"not a semilattice congruence, witness {chk.witness}")


def relation_N(s: PoGammaStructure) -> Partition:
    """a N b iff N(a) = N(b)."""
    require_semigroup(s, "relation N")
    p = Partition.from_labels([principal_filter(s, a).mask for a in range(s.n)])
    chk = check_congruence(s, p)
    if not chk.is_semilattice:
        raise InvariantError(f"N is not a semilattice congruence: {chk.witness}")
    return p


def _class_order_unchecked(s: PoGammaStructure, p: Partition) -> tuple:
    n, g, op = s.n, s.g, s.op
    nn = n * n
    cl = p.class_of
    reps = [cls.tolist()[0] for cls in p.classes()]
    k = p.k
    rows = []
    for i in range(k):
        a = reps[i]
        rows.append(tuple(all(cl[op[t * nn + a * n + reps[j]]] == i for t in range(g))
                          for j in range(k)))
    if __debug__:
        for a, b in product(range(n), repeat=2):
            i, j = cl[a], cl[b]
            if all(cl[op[t * nn + a * n + b]] == i for t in range(g)) != rows[i][j]:
                raise InvariantError(f"class order depends on representatives at ({a},{b})")
    return tuple(rows)


def class_order(s: PoGammaStructure, p: Partition) -> tuple:
    """k x k matrix of booleans: entry (i, j) iff class i precedes class j."""
    _require_semilattice(s, p)
    return _class_order_unchecked(s, p)


@dataclass(frozen=True)
class QuotientStructure:
    k: int
    g: int
    qop: bytes
    class_leq: bytes
    kind: str = SEMIGROUP

    def as_structure(self) -> PoGammaStructure:
        return PoGammaStructure(self.k, self.g, self.qop, self.class_leq, self.kind)

    def precedes(self, i: int, j: int) -> bool:
        return self.class_leq[i * self.k + j] == 1


def quotient(s: PoGammaStructure, p: Partition) -> QuotientStructure:
    """M/p with products of classes and the class order."""
    _require_semilattice(s, p)
    n, g, op = s.n, s.g, s.op
    nn = n * n
    cl = p.class_of
    k = p.k
    qop = [-1] * (g * k * k)
    for t, a, b in product(range(g), range(n), range(n)):
        idx = (t * k + cl[a]) * k + cl[b]
        v = cl[op[t * nn + a * n + b]]
        if qop[idx] == -1:
            qop[idx] = v
        elif qop[idx] != v:
            raise InvariantError(f"class product not well defined at ({a},{t},{b})")
    order = _class_order_unchecked(s, p)
    leq = bytes(1 if order[i][j] else 0 for i in range(k) for j in range(k))
    return QuotientStructure(k, g, bytes(qop), leq, s.kind)


def quotient_upset_T(s: PoGammaStructure, p: Partition, x: int) -> ElementSet:
    """Classes lying above the class of ``x``, as a subset of the quotient."""
    s.check_element(x)
    q = quotient(s, p)
    i = p.class_of[x]
    return ElementSet.of(q.k, (j for j in range(q.k) if q.precedes(i, j)))


def set_partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``0..n-1`` as restricted growth strings, lexicographically."""
    rgs = [0] * n
    if n == 0:
        yield Partition(())
        return

    def rec(i: int, top: int):
        if i == n:
            yield Partition(tuple(rgs))
            return
        for c in range(top + 2):
            rgs[i] = c
            yield from rec(i + 1, max(top, c))

    rgs[0] = 0
    yield from rec(1, 0)


def enumerate_semilattice_congruences(s: PoGammaStructure) -> list[Partition]:
    if s.n > MAX_PARTITION_SCAN_N:
        raise ValueError(f"partition scan limited to n <= {MAX_PARTITION_SCAN_N}, got n={s.n}")
    return [p for p in set_partitions(s.n) if check_congruence(s, p).is_semilattice]


def smallest_semilattice_congruence(s: PoGammaStructure, complete: bool = False) -> Partition:
    """Meet of all (complete, if flagged) semilattice congruences."""
    cands = [p for p in enumerate_semilattice_congruences(s)
             if not complete or check_congruence(s, p).is_complete]
    result = Partition.single(s.n)
    for p in cands:
        result = result.meet(p)
    chk = check_congruence(s, result)
    if not chk.is_semilattice or (complete and not chk.is_complete):
        raise InvariantError(f"meet of semilattice congruences fails: {chk.witness}")
    return result


def generated_semilattice_congruence(s: PoGammaStructure, complete: bool = False) -> Partition:
    """Least semilattice congruence by union-find closure from the defining pairs.

    No size bound; used to cross-check :func:`smallest_semilattice_congruence`.
    """
    n, g, op, leq = s.n, s.g, s.op, s.leq
    nn = n * n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    for t, a, b in product(range(g), range(n), range(n)):
        if a == b:
            union(op[t * nn + a * n + a], a)
        else:
            union(op[t * nn + a * n + b], op[t * nn + b * n + a])
        if complete and leq[a * n + b]:
            union(a, op[t * nn + a * n + b])
    changed = True
    while changed:
        changed = False
        for a in range(1, n):
            r = find(a)
            if r == a:
                continue
            for t, c in product(range(g), range(n)):
                base = t * nn
                changed |= union(op[base + a * n + c], op[base + r * n + c])
                changed |= union(op[base + c * n + a], op[base + c * n + r])
    return Partition.from_labels([find(x) for x in range(n)])
