"""Filters, principal filters N(a) and the K/A/B/C sets around N(a)."""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import kernels
from .core import ElementSet, PoGammaStructure, StructureError

MAX_SUBSET_SCAN_N = 20


class ScanBoundError(ValueError):
    """Exhaustive scan requested on a carrier that is too large."""


@dataclass(frozen=True)
class FilterCheck:
    is_nonempty: bool
    is_subsemigroup: bool
    is_factor_closed: bool
    is_up_closed: bool
    witness: tuple | None = None

    @property
    def verdict(self) -> bool:
        return (self.is_nonempty and self.is_subsemigroup
                and self.is_factor_closed and self.is_up_closed)


def _check_owner(s: PoGammaStructure, F: ElementSet) -> None:
    if F.n != s.n:
        raise StructureError(f"element set over n={F.n} used with structure of n={s.n}")


def is_filter(s: PoGammaStructure, F: ElementSet) -> FilterCheck:
    """Check the three filter conditions on ``F``.

    The witness reports the first failure, looking at emptiness, then upward
    closure ``(x, y)``, then products ``(x, gamma, y)`` leaving ``F``, then
    factors ``(x, gamma, y)`` whose product lies in ``F``.
    """
    _check_owner(s, F)
    n, g, op, leq = s.n, s.g, s.op, s.leq
    nn = n * n
    mask = F.mask
    nonempty = mask != 0
    up_w = sub_w = fac_w = None
    for x in F:
        for y in range(n):
            if leq[x * n + y] and not (mask >> y) & 1:
                up_w = (x, y)
                break
        if up_w:
            break
    for x in F:
        for t in range(g):
            for y in F:
                if not (mask >> op[t * nn + x * n + y]) & 1:
                    sub_w = (x, t, y)
                    break
            if sub_w:
                break
        if sub_w:
            break
    for x in range(n):
        for t in range(g):
            for y in range(n):
                if (mask >> op[t * nn + x * n + y]) & 1 and not ((mask >> x) & (mask >> y) & 1):
                    fac_w = (x, t, y)
                    break
            if fac_w:
                break
        if fac_w:
            break
    if not nonempty:
        witness = ()
    else:
        witness = up_w or sub_w or fac_w
    return FilterCheck(nonempty, sub_w is None, fac_w is None, up_w is None, witness)


def _closure_by_rules(s: PoGammaStructure, mask: int, rules: list[str]) -> int:
    n, g, op, leq = s.n, s.g, s.op, s.leq
    nn = n * n
    changed = True
    while changed:
        changed = False
        for rule in rules:
            before = mask
            if rule == "product":
                for x in range(n):
                    if (mask >> x) & 1:
                        for t in range(g):
                            for y in range(n):
                                if (mask >> y) & 1:
                                    mask |= 1 << op[t * nn + x * n + y]
            elif rule == "factor":
                for t in range(g):
                    for x in range(n):
                        for y in range(n):
                            if (mask >> op[t * nn + x * n + y]) & 1:
                                mask |= (1 << x) | (1 << y)
            else:
                for x in range(n):
                    if (mask >> x) & 1:
                        for y in range(n):
                            if leq[x * n + y]:
                                mask |= 1 << y
            changed |= mask != before
    return mask


def filter_closure(s: PoGammaStructure, seed: ElementSet, rule_seed: int | None = None) -> ElementSet:
    """Smallest filter containing ``seed``.

    With ``rule_seed`` the three closure rules are applied one at a time in a
    shuffled order instead of through the kernel; the fixed point is the same.
    """
    _check_owner(s, seed)
    if not seed:
        raise ValueError("filter closure needs a nonempty seed")
    if rule_seed is not None:
        rules = ["product", "factor", "upper"]
        random.Random(rule_seed).shuffle(rules)
        return ElementSet(s.n, _closure_by_rules(s, seed.mask, rules))
    if s.n > 64:
        return ElementSet(s.n, kernels._pykernels.closure_mask(s.op, s.leq, s.n, s.g, seed.mask))
    return ElementSet(s.n, kernels.closure_mask(s.op, s.leq, s.n, s.g, seed.mask))


def principal_filter(s: PoGammaStructure, a: int) -> ElementSet:
    """N(a)."""
    s.check_element(a)
    return filter_closure(s, ElementSet(s.n, 1 << a))


def all_filters(s: PoGammaStructure) -> list[ElementSet]:
    """Every filter of ``s``, by ascending bitmask."""
    if s.n > MAX_SUBSET_SCAN_N:
        raise ScanBoundError(f"subset scan limited to n <= {MAX_SUBSET_SCAN_N}, got n={s.n}")
    return [ElementSet(s.n, m) for m in kernels.filter_masks(s.op, s.leq, s.n, s.g)]


def principal_filter_oracle(s: PoGammaStructure, a: int) -> ElementSet:
    """N(a) as the intersection of all filters containing ``a`` (brute force).

    Uses its own subset scan and :func:`is_filter`, sharing no code with the
    closure kernel.
    """
    s.check_element(a)
    n = s.n
    if n > MAX_SUBSET_SCAN_N:
        raise ScanBoundError(f"subset scan limited to n <= {MAX_SUBSET_SCAN_N}, got n={n}")
    result = (1 << n) - 1
    for mask in range(1, 1 << n):
        if (mask >> a) & 1 and is_filter(s, ElementSet(n, mask)).verdict:
            result &= mask
    return ElementSet(n, result)


@dataclass(frozen=True)
class Theorem27Sets:
    """K(a), A, B and C for one base element ``a``."""

    a: int
    K: ElementSet
    A: ElementSet
    B: ElementSet
    C: ElementSet

    @property
    def K_eq_A(self) -> bool:
        return self.K == self.A

    @property
    def K_eq_B(self) -> bool:
        return self.K == self.B

    @property
    def K_eq_C(self) -> bool:
        return self.K == self.C

    @property
    def all_equal(self) -> bool:
        return self.K == self.A == self.B == self.C


def theorem27_sets(s: PoGammaStructure, a: int) -> Theorem27Sets:
    from .congruences import class_order, relation_N

    s.check_element(a)
    p = relation_N(s)
    order = class_order(s, p)
    n = s.n
    ca = p.class_of[a]
    above = [order[ca][j] and j != ca for j in range(p.k)]
    K = ElementSet.of(n, (b for b in range(n) if above[p.class_of[b]]))
    Na = principal_filter(s, a)
    classes = p.classes()
    B = ElementSet(n, 0)
    for j, members in enumerate(classes):
        if above[j]:
            B = B | members
    return Theorem27Sets(a, K, K & Na, B, Na - classes[ca])
