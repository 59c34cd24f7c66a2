"""Corpus generation: exhaustive enumeration, canonical keys, random structures."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from . import kernels
from .core import (GROUPOID, KINDS, SEMIGROUP, PoGammaStructure, StructureError,
                   discrete_order, require_valid)

ALL_COMPATIBLE = "all_compatible"
DISCRETE_ONLY = "discrete_only"
ORDER_MODES = (ALL_COMPATIBLE, DISCRETE_ONLY)

EXHAUSTIVE_MAX_N = 4
EXHAUSTIVE_MAX_G = 2
# groupoid tables are not pruned, so their count n**(g*n*n) is capped instead
GROUPOID_MAX_TABLES = 1 << 20
CANONICAL_MAX_N = 8
CANONICAL_MAX_G = 3
# random table search restarts after RANDOM_NODE_BUDGET nodes, at most RANDOM_ATTEMPTS times
RANDOM_NODE_BUDGET = 2_000
RANDOM_ATTEMPTS = 500


class BoundsError(ValueError):
    """Requested shape exceeds an exhaustive-scan bound."""


class GenerationError(RuntimeError):
    """Random generation ran out of its search budget."""


@dataclass(frozen=True)
class EnumConfig:
    n: int
    g: int = 1
    order_mode: str = ALL_COMPATIBLE
    iso_dedup: bool = True
    kind: str = SEMIGROUP

    def __post_init__(self):
        if self.n < 1 or self.g < 1:
            raise ValueError(f"need n >= 1 and g >= 1, got n={self.n}, g={self.g}")
        if self.order_mode not in ORDER_MODES:
            raise ValueError(f"unknown order mode {self.order_mode!r}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")


@lru_cache(maxsize=None)
def partial_orders(n: int) -> tuple:
    """Every labeled partial order on ``0..n-1`` as a flat 0/1 matrix."""
    pairs = list(combinations(range(n), 2))
    out = []
    for choice in product(range(3), repeat=len(pairs)):
        m = bytearray(discrete_order(n))
        for (a, b), c in zip(pairs, choice):
            if c == 1:
                m[a * n + b] = 1
            elif c == 2:
                m[b * n + a] = 1
        if all(m[a * n + c] or not (m[a * n + b] and m[b * n + c])
               for a, b, c in product(range(n), repeat=3)):
            out.append(bytes(m))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple:
    return tuple(permutations(range(n)))


def canonical_key(s: PoGammaStructure) -> bytes:
    """Least serialization of (tables, order) over relabelings of M and of Gamma."""
    if s.n > CANONICAL_MAX_N or s.g > CANONICAL_MAX_G:
        raise BoundsError(f"canonical key limited to n <= {CANONICAL_MAX_N}, g <= {CANONICAL_MAX_G}")
    form = kernels.canonical_form(s.op, s.leq, s.n, s.g, _perms(s.n), _perms(s.g))
    return bytes((s.n, s.g)) + form


def relabel(s: PoGammaStructure, pi: Sequence[int], tau: Sequence[int] | None = None) -> PoGammaStructure:
    """Image of ``s`` under ``pi`` on M and ``tau`` on Gamma (both old -> new)."""
    n, g = s.n, s.g
    tau = tuple(range(g)) if tau is None else tau
    op = bytearray(len(s.op))
    leq = bytearray(n * n)
    for t, a, b in product(range(g), range(n), range(n)):
        op[(tau[t] * n + pi[a]) * n + pi[b]] = pi[s.mul(t, a, b)]
    for a, b in product(range(n), repeat=2):
        leq[pi[a] * n + pi[b]] = s.leq[a * n + b]
    return PoGammaStructure(n, g, bytes(op), bytes(leq), s.kind)


def table_families(n: int, g: int, kind: str = SEMIGROUP) -> list[bytes]:
    """All g-tuples of tables (flat), mixed-associative when ``kind`` is semigroup."""
    values = bytes(range(n)) * (g * n * n)
    sols, _ = kernels.search_tables(n, g, values, kind == SEMIGROUP, 0, 0)
    return sorted(sols)


def _check_bounds(cfg: EnumConfig) -> None:
    if cfg.kind == SEMIGROUP:
        if cfg.n > EXHAUSTIVE_MAX_N or cfg.g > EXHAUSTIVE_MAX_G:
            raise BoundsError(f"exhaustive enumeration limited to n <= {EXHAUSTIVE_MAX_N}, "
                              f"g <= {EXHAUSTIVE_MAX_G}")
    elif cfg.n ** (cfg.g * cfg.n * cfg.n) > GROUPOID_MAX_TABLES:
        raise BoundsError(f"groupoid enumeration limited to {GROUPOID_MAX_TABLES} table families")
    if cfg.iso_dedup and (cfg.n > CANONICAL_MAX_N or cfg.g > CANONICAL_MAX_G):
        raise BoundsError("isomorphism dedup beyond canonical-key bounds")


def enumerate_structures(cfg: EnumConfig) -> Iterator[PoGammaStructure]:
    """Every structure of the configured shape, ascending by canonical key.

    With ``iso_dedup`` each isomorphism class is represented by its canonical
    form; otherwise ties on the key are broken by the raw tables and order.
    """
    _check_bounds(cfg)
    n, g = cfg.n, cfg.g
    orders = partial_orders(n) if cfg.order_mode == ALL_COMPATIBLE else (discrete_order(n),)
    families = table_families(n, g, cfg.kind)
    found: dict = {}
    for form, i, j in kernels.structure_forms(families, orders, n, g, _perms(n), _perms(g)):
        if cfg.iso_dedup:
            if form not in found:
                # the least labeled member of an isomorphism class is its canonical form
                found[form] = form
        else:
            found[(form, families[i], orders[j])] = families[i] + orders[j]
    split = g * n * n
    for k in sorted(found):
        raw = found[k]
        yield PoGammaStructure(n, g, raw[:split], raw[split:], cfg.kind)


def corpus(max_n: int = 3, max_g: int = 2, order_mode: str = ALL_COMPATIBLE,
           iso_dedup: bool = True, kind: str = SEMIGROUP) -> list[PoGammaStructure]:
    """Concatenated enumeration over ``1..max_n`` x ``1..max_g``, ascending by key."""
    out = []
    for n in range(1, max_n + 1):
        for g in range(1, max_g + 1):
            out.extend(enumerate_structures(EnumConfig(n, g, order_mode, iso_dedup, kind)))
    return out


def _random_tables(n: int, g: int, kind: str, rng: random.Random) -> bytes:
    if kind == GROUPOID:
        return bytes(rng.randrange(n) for _ in range(g * n * n))
    for _ in range(RANDOM_ATTEMPTS):
        values = bytearray()
        for _ in range(g * n * n):
            vals = list(range(n))
            rng.shuffle(vals)
            values.extend(vals)
        sols, _ = kernels.search_tables(n, g, bytes(values), True, 1, RANDOM_NODE_BUDGET)
        if sols:
            return sols[0]
    raise GenerationError(f"no table family found in {RANDOM_ATTEMPTS} attempts "
                          f"of {RANDOM_NODE_BUDGET} search nodes")


def _order_closure(op: bytes, n: int, g: int, rel: bytearray) -> bytearray:
    """Least transitive relation containing ``rel`` and closed under every table on both sides."""
    nn = n * n
    changed = True
    while changed:
        changed = False
        for a, b in product(range(n), repeat=2):
            if not rel[a * n + b] or a == b:
                continue
            for t, c in product(range(g), range(n)):
                base = t * nn
                for x, y in ((op[base + a * n + c], op[base + b * n + c]),
                             (op[base + c * n + a], op[base + c * n + b])):
                    if not rel[x * n + y]:
                        rel[x * n + y] = 1
                        changed = True
        for k, a, b in product(range(n), repeat=3):
            if rel[a * n + k] and rel[k * n + b] and not rel[a * n + b]:
                rel[a * n + b] = 1
                changed = True
    return rel


def random_compatible_order(op: bytes, n: int, g: int, rng: random.Random) -> bytes:
    """Grow a compatible order from the discrete one by random pairs, skipping
    any pair whose compatible closure breaks antisymmetry."""
    leq = bytearray(discrete_order(n))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    rng.shuffle(pairs)
    for a, b in pairs:
        if leq[a * n + b] or rng.random() < 0.5:
            continue
        trial = bytearray(leq)
        trial[a * n + b] = 1
        trial = _order_closure(op, n, g, trial)
        if all(not (trial[x * n + y] and trial[y * n + x])
               for x in range(n) for y in range(x + 1, n)):
            leq = trial
    return bytes(leq)


def random_structure(cfg: EnumConfig, seed: int) -> PoGammaStructure:
    """Deterministic in ``(cfg, seed)``; ``iso_dedup`` is ignored."""
    rng = random.Random(f"{cfg.n}/{cfg.g}/{cfg.kind}/{cfg.order_mode}/{seed}")
    op = _random_tables(cfg.n, cfg.g, cfg.kind, rng)
    if cfg.order_mode == ALL_COMPATIBLE:
        leq = random_compatible_order(op, cfg.n, cfg.g, rng)
    else:
        leq = discrete_order(cfg.n)
    return require_valid(PoGammaStructure(cfg.n, cfg.g, op, leq, cfg.kind))


def gamma_from_semigroup(tableS: Sequence[Sequence[int]], gamma_subset: Sequence[int],
                         order: Sequence[Sequence[int]] | None = None) -> PoGammaStructure:
    """Gamma-semigroup on S with ``a gamma b = a * gamma * b`` for gamma in ``gamma_subset``."""
    base = PoGammaStructure.from_tables([tableS], order)
    require_valid(base)
    if not gamma_subset:
        raise StructureError("gamma subset must be nonempty")
    n = base.n
    for x in gamma_subset:
        base.check_element(x)
    mul = base.mul
    op = bytes(mul(0, mul(0, a, x), b) for x in gamma_subset for a in range(n) for b in range(n))
    return require_valid(PoGammaStructure(n, len(gamma_subset), op, base.leq, SEMIGROUP))

