"""Executable catalog of claims about filters and the relation N, and a
counterexample search driver over enumerated corpora."""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

from .congruences import (Partition, _class_order_unchecked,
                          enumerate_semilattice_congruences, quotient,
                          relation_N, smallest_semilattice_congruence)
from .core import (ElementSet, PoGammaStructure, require_semigroup,
                   structural_profile, up_set)
from .enumerate import EnumConfig, enumerate_structures, random_structure
from .filters import is_filter, principal_filter, theorem27_sets

PROVED = "proved_in_comment"
DOUBTED = "original_doubted"
REFUTED_PROOF = "original_refuted_proof"
EXPLORATORY = "exploratory"

HOLDS = "holds"
FAILS = "fails"


class UnknownClaim(KeyError):
    pass


@dataclass(frozen=True)
class Witness:
    elements: tuple
    partition: Partition | None = None
    structure: PoGammaStructure | None = None
    note: str = ""


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    status: str
    witness: Witness | None = None
    vacuous: bool = False

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


class _Facts:
    """Lazily computed data about one structure, shared by the predicates."""

    def __init__(self, s: PoGammaStructure):
        self.s = s

    @cached_property
    def N(self) -> list[ElementSet]:
        return [principal_filter(self.s, a) for a in range(self.s.n)]

    @cached_property
    def up(self) -> list[ElementSet]:
        return [up_set(self.s, a) for a in range(self.s.n)]

    @cached_property
    def relN(self) -> Partition:
        return relation_N(self.s)

    @cached_property
    def order(self) -> tuple:
        return _class_order_unchecked(self.s, self.relN)

    @cached_property
    def profile(self):
        return structural_profile(self.s)

    def precedes(self, a: int, b: int) -> bool:
        cl = self.relN.class_of
        return self.order[cl[a]][cl[b]]

    def first_same_class_pair(self) -> tuple | None:
        cl = self.relN.class_of
        n = self.s.n
        return next(((a, b) for a in range(n) for b in range(a + 1, n) if cl[a] == cl[b]), None)

    def first_non_semilattice(self) -> tuple | None:
        s = self.s
        for a in range(s.n):
            for t in range(s.g):
                if s.mul(t, a, a) != a:
                    return (a, t)
        for a in range(s.n):
            for t in range(s.g):
                for b in range(a + 1, s.n):
                    if s.mul(t, a, b) != s.mul(t, b, a):
                        return (a, t, b)
        return None

    def first_N_ne_up(self) -> int | None:
        return next((a for a in range(self.s.n) if self.N[a] != self.up[a]), None)


# A predicate returns (witness or None, vacuous).
Outcome = tuple


def _c1(f: _Facts) -> Outcome:
    n = f.s.n
    for a in range(n):
        for b in range(n):
            if f.precedes(a, b) and not f.N[b] <= f.N[a]:
                return Witness((a, b)), False
    return None, False


def _c2(f: _Facts) -> Outcome:
    n = f.s.n
    for a in range(n):
        for b in range(n):
            if f.N[a] == f.N[b] and not f.precedes(a, b):
                return Witness((a, b)), False
    return None, False


def _c3(f: _Facts) -> Outcome:
    n = f.s.n
    for a in range(n):
        for b in range(n):
            if f.N[b] <= f.N[a] and not f.precedes(a, b):
                return Witness((a, b), note=f"N({b})={f.N[b]} within N({a})={f.N[a]}"), False
    return None, False


def _c4(f: _Facts) -> Outcome:
    for a in range(f.s.n):
        sets = theorem27_sets(f.s, a)
        if not sets.all_equal:
            note = f"K={sets.K} A={sets.A} B={sets.B} C={sets.C}"
            return Witness((a,), note=note), False
    return None, False


def _c5(f: _Facts) -> Outcome:
    if not f.profile.is_band:
        return None, True
    for a in range(f.s.n):
        chk = is_filter(f.s, f.up[a])
        if not chk.is_subsemigroup:
            for x in f.up[a]:
                for t in range(f.s.g):
                    for y in f.up[a]:
                        if f.s.mul(t, x, y) not in f.up[a]:
                            return Witness((a, x, t, y)), False
    return None, False


def _c6(f: _Facts) -> Outcome:
    if f.first_N_ne_up() is not None:
        return None, True
    pair = f.first_same_class_pair()
    return (Witness(pair, f.relN) if pair else None), False


def _c7(f: _Facts) -> Outcome:
    if not f.relN.is_discrete():
        return None, True
    bad = f.first_non_semilattice()
    return (Witness(bad) if bad else None), False


def _c8(f: _Facts) -> Outcome:
    if not (f.profile.is_semilattice and f.profile.order_iff):
        return None, True
    a = f.first_N_ne_up()
    return (Witness((a,), note=f"N={f.N[a]} up={f.up[a]}") if a is not None else None), False


def _c9(f: _Facts) -> Outcome:
    if not f.profile.order_forward:
        return None, True
    s = f.s
    for a in range(s.n):
        for t in range(s.g):
            if s.mul(t, a, a) != a:
                return Witness((a, t)), False
    return None, False


def _c10(f: _Facts) -> Outcome:
    s = f.s
    for p in enumerate_semilattice_congruences(s):
        q = quotient(s, p)
        qs = q.as_structure()
        for x in range(s.n):
            i = p.class_of[x]
            T = ElementSet.of(q.k, (j for j in range(q.k) if q.precedes(i, j)))
            chk = is_filter(qs, T)
            if not chk.verdict:
                return Witness((x,), p, note=f"T={T} witness={chk.witness}"), False
    return None, False


def _c11(f: _Facts) -> Outcome:
    if not f.relN.is_discrete():
        return None, True
    a = f.first_N_ne_up()
    return (Witness((a,), note=f"N={f.N[a]} up={f.up[a]}") if a is not None else None), False


def _c12(f: _Facts) -> Outcome:
    if not f.profile.is_semilattice:
        return None, True
    pair = f.first_same_class_pair()
    return (Witness(pair, f.relN) if pair else None), False


def _c13(f: _Facts) -> Outcome:
    smallest = smallest_semilattice_congruence(f.s, complete=True)
    if smallest == f.relN:
        return None, False
    n = f.s.n
    cl, sm = f.relN.class_of, smallest.class_of
    pair = next((a, b) for a in range(n) for b in range(a + 1, n)
                if (cl[a] == cl[b]) != (sm[a] == sm[b]))
    return Witness(pair, smallest, note=f"N={f.relN}"), False


@dataclass(frozen=True)
class Claim:
    id: str
    statement_kind: str
    statement: str
    predicate: Callable[[_Facts], Outcome] = field(repr=False)
    needs_semigroup: bool = True


CATALOG: dict[str, Claim] = {c.id: c for c in [
    Claim("C1", PROVED, "(a)N <= (b)N implies N(b) is contained in N(a)", _c1),
    Claim("C2", PROVED, "N(b) = N(a) implies (a)N <= (b)N", _c2),
    Claim("C3", DOUBTED, "N(b) contained in N(a) implies (a)N <= (b)N", _c3),
    Claim("C4", DOUBTED, "K(a) = A = B = C for every a", _c4),
    Claim("C5", PROVED, "band implies every [a) is a subsemigroup", _c5, needs_semigroup=False),
    Claim("C6", PROVED, "N(a) = [a) for all a implies N is the equality", _c6),
    Claim("C7", PROVED, "N is the equality implies M is a semilattice", _c7),
    Claim("C8", PROVED, "semilattice with (a <= b iff a gamma b = a for all gamma) "
                        "implies N(a) = [a) for all a", _c8),
    Claim("C9", PROVED, "(a <= b implies a gamma b = a for all gamma) implies band", _c9,
          needs_semigroup=False),
    Claim("C10", PROVED, "for every semilattice congruence and every x, the classes above "
                         "(x) form a filter of the quotient", _c10),
    Claim("C11", REFUTED_PROOF, "N is the equality implies N(a) = [a) for all a", _c11),
    Claim("C12", REFUTED_PROOF, "semilattice implies N is the equality", _c12),
    Claim("C13", EXPLORATORY, "N equals the smallest complete semilattice congruence", _c13),
]}

PROVED_IDS = tuple(c.id for c in CATALOG.values() if c.statement_kind == PROVED)


def get_claim(claim_id: str) -> Claim:
    try:
        return CATALOG[claim_id.upper()]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}; known: {', '.join(CATALOG)}") from None


def check_claim(claim_id: str, s: PoGammaStructure) -> ClaimVerdict:
    claim = get_claim(claim_id)
    if claim.needs_semigroup:
        require_semigroup(s, f"claim {claim.id}")
    witness, vacuous = claim.predicate(_Facts(s))
    if witness is None:
        return ClaimVerdict(claim.id, HOLDS, None, vacuous)
    return ClaimVerdict(claim.id, FAILS, witness, False)


def check_all(s: PoGammaStructure, ids: Iterable[str] | None = None) -> list[ClaimVerdict]:
    """Verdicts for ``ids``, or for every applicable catalog claim when None."""
    if ids is None:
        ids = [c.id for c in CATALOG.values() if s.kind == "semigroup" or not c.needs_semigroup]
    return [check_claim(cid, s) for cid in ids]


@dataclass
class SearchReport:
    claim_id: str
    cfg: EnumConfig
    mode: str
    structures_checked: int
    failures: int
    vacuous: int
    counterexamples: list
    limit: int
    elapsed: float = 0.0

    @property
    def truncated(self) -> bool:
        return self.failures > len(self.counterexamples)


def search_threads() -> int:
    """Worker count from ``GAMMA_LAB_THREADS`` (0 or unset = one per CPU)."""
    raw = os.environ.get("GAMMA_LAB_THREADS", "0").strip() or "0"
    try:
        k = int(raw)
    except ValueError:
        raise ValueError(f"GAMMA_LAB_THREADS must be an integer, got {raw!r}") from None
    return k if k > 0 else (os.cpu_count() or 1)


def _verdicts(args) -> list[ClaimVerdict]:
    claim_id, chunk = args
    return [check_claim(claim_id, s) for s in chunk]


def search_stream(cfg: EnumConfig, cumulative: bool = True, samples: int = 0,
                  seed: int = 0) -> tuple[str, list[PoGammaStructure]]:
    """Corpus for a search: exhaustive (optionally over every smaller shape) or
    ``samples`` seeded random structures of exactly the configured shape."""
    if samples:
        rng = random.Random(seed)
        seeds = [rng.randrange(1 << 32) for _ in range(samples)]
        return "random", [random_structure(cfg, sd) for sd in seeds]
    if not cumulative:
        return "exhaustive", list(enumerate_structures(cfg))
    out = []
    for n in range(1, cfg.n + 1):
        for g in range(1, cfg.g + 1):
            out.extend(enumerate_structures(EnumConfig(n, g, cfg.order_mode, cfg.iso_dedup, cfg.kind)))
    return "exhaustive", out


def search_counterexamples(claim_id: str, cfg: EnumConfig, limit: int = 10,
                           cumulative: bool = True, samples: int = 0, seed: int = 0,
                           threads: int | None = None) -> SearchReport:
    """Run one claim over a corpus and keep the first ``limit`` counterexamples."""
    claim = get_claim(claim_id)
    start = time.perf_counter()
    mode, stream = search_stream(cfg, cumulative, samples, seed)
    workers = search_threads() if threads is None else threads
    if workers > 1 and len(stream) > 64:
        size = max(16, len(stream) // (workers * 4))
        chunks = [(claim.id, stream[i:i + size]) for i in range(0, len(stream), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = [v for part in pool.map(_verdicts, chunks) for v in part]
    else:
        verdicts = _verdicts((claim.id, stream))
    found = []
    failures = vacuous = 0
    for s, v in zip(stream, verdicts):
        if v.vacuous:
            vacuous += 1
        if not v.holds:
            failures += 1
            if len(found) < limit:
                w = v.witness
                found.append(Witness(w.elements, w.partition, s, w.note))
    return SearchReport(claim.id, cfg, mode, len(stream), failures, vacuous, found, limit,
                        time.perf_counter() - start)
