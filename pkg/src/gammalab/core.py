"""Finite ordered Gamma-structures: representation, axiom checks, up-sets.

A structure has a carrier ``0..n-1``, a label set ``0..g-1`` and one
multiplication table per label.  Tables are stored flat in a ``bytes``
object indexed ``(gamma * n + a) * n + b``; the order is an ``n * n``
byte matrix with ``leq[a * n + b] == 1`` iff ``a <= b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

SEMIGROUP = "semigroup"
GROUPOID = "groupoid"
KINDS = (SEMIGROUP, GROUPOID)
MAX_N = 255


class StructureError(ValueError):
    """Malformed shape or out-of-range entry (not an axiom violation)."""


class AxiomError(ValueError):
    """Raised when a structure is required to validate but does not."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations[:5]))


class KindError(ValueError):
    """Operation needs mixed associativity but got a groupoid."""


@dataclass(frozen=True)
class ElementSet:
    """Subset of ``0..n-1`` stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise StructureError(f"member out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "ElementSet":
        mask = 0
        for x in members:
            if not 0 <= x < n:
                raise StructureError(f"element {x} out of range 0..{n - 1}")
            mask |= 1 << x
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, x: int) -> bool:
        return x >= 0 and (self.mask >> x) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __le__(self, other: "ElementSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.n, self.mask & other.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.n, self.mask | other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.n, self.mask & ~other.mask)

    def tolist(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


@dataclass(frozen=True)
class PoGammaStructure:
    n: int
    g: int
    op: bytes
    leq: bytes
    kind: str = SEMIGROUP

    def __post_init__(self):
        n, g = self.n, self.g
        if not isinstance(n, int) or not 1 <= n <= MAX_N:
            raise StructureError(f"n must be an integer in 1..{MAX_N}, got {n!r}")
        if not isinstance(g, int) or g < 1:
            raise StructureError(f"g must be an integer >= 1, got {g!r}")
        if self.kind not in KINDS:
            raise StructureError(f"unknown kind {self.kind!r}")
        if len(self.op) != g * n * n:
            raise StructureError(f"op has {len(self.op)} entries, expected {g * n * n}")
        if len(self.leq) != n * n:
            raise StructureError(f"leq has {len(self.leq)} entries, expected {n * n}")
        if self.op and max(self.op) >= n:
            i = next(i for i, v in enumerate(self.op) if v >= n)
            gm, rest = divmod(i, n * n)
            raise StructureError(
                f"op[{gm}]({rest // n},{rest % n}) = {self.op[i]} out of range 0..{n - 1}")
        if max(self.leq) > 1:
            raise StructureError("leq entries must be 0 or 1")

    @classmethod
    def from_tables(cls, tables: Sequence[Sequence[Sequence[int]]],
                    leq: Sequence[Sequence[int]] | None = None,
                    kind: str = SEMIGROUP) -> "PoGammaStructure":
        """Build from nested ``tables[gamma][a][b]`` and ``leq[a][b]`` (discrete if None)."""
        g = len(tables)
        if g == 0:
            raise StructureError("at least one table is required")
        n = len(tables[0])
        flat = []
        for t, tab in enumerate(tables):
            if len(tab) != n:
                raise StructureError(f"table {t} has {len(tab)} rows, expected {n}")
            for a, row in enumerate(tab):
                if len(row) != n:
                    raise StructureError(f"table {t} row {a} has {len(row)} entries, expected {n}")
                for v in row:
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise StructureError(f"table {t} row {a}: entry {v!r} out of range")
                flat.extend(row)
        if leq is None:
            order = discrete_order(n)
        else:
            if len(leq) != n or any(len(r) != n for r in leq):
                raise StructureError(f"leq must be {n}x{n}")
            order = bytes(1 if x else 0 for r in leq for x in r)
        return cls(n, g, bytes(flat), order, kind)

    def mul(self, gamma: int, a: int, b: int) -> int:
        n = self.n
        return self.op[(gamma * n + a) * n + b]

    def le(self, a: int, b: int) -> bool:
        return self.leq[a * self.n + b] == 1

    def tables(self) -> list[list[list[int]]]:
        n = self.n
        return [[list(self.op[(t * n + a) * n:(t * n + a + 1) * n]) for a in range(n)]
                for t in range(self.g)]

    def order_rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.leq[a * n:(a + 1) * n]) for a in range(n)]

    def check_element(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < self.n:
            raise StructureError(f"element {a!r} out of range 0..{self.n - 1}")


def discrete_order(n: int) -> bytes:
    return bytes(1 if a == b else 0 for a in range(n) for b in range(n))


def chain_order(n: int) -> bytes:
    return bytes(1 if a <= b else 0 for a in range(n) for b in range(n))


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom} at ({','.join(map(str, self.witness))})"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        # truthy when there is something to report
        return bool(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)


def validate(s: PoGammaStructure) -> ValidationReport:
    """Scan every axiom for ``s.kind`` and list each violation with its witness.

    Axiom ids: ``reflexivity`` (a,a), ``antisymmetry`` (a,b), ``transitivity``
    (a,b,c), ``compatibility-right`` / ``compatibility-left`` (a,gamma,b,c)
    meaning ``a <= b`` but ``a gamma c`` (resp. ``c gamma a``) is not below its
    counterpart, and ``associativity`` (a,gamma,b,mu,c).
    """
    n, g, op, leq = s.n, s.g, s.op, s.leq
    nn = n * n
    out: list[Violation] = []
    for a in range(n):
        if not leq[a * n + a]:
            out.append(Violation("reflexivity", (a, a)))
    for a in range(n):
        for b in range(a + 1, n):
            if leq[a * n + b] and leq[b * n + a]:
                out.append(Violation("antisymmetry", (a, b)))
    for a, b, c in product(range(n), repeat=3):
        if leq[a * n + b] and leq[b * n + c] and not leq[a * n + c]:
            out.append(Violation("transitivity", (a, b, c)))
    for a, b in product(range(n), repeat=2):
        if a == b or not leq[a * n + b]:
            continue
        for t in range(g):
            base = t * nn
            for c in range(n):
                if not leq[op[base + a * n + c] * n + op[base + b * n + c]]:
                    out.append(Violation("compatibility-right", (a, t, b, c)))
                if not leq[op[base + c * n + a] * n + op[base + c * n + b]]:
                    out.append(Violation("compatibility-left", (a, t, b, c)))
    if s.kind == SEMIGROUP:
        for a, t, b, m, c in product(range(n), range(g), range(n), range(g), range(n)):
            lhs = op[m * nn + op[t * nn + a * n + b] * n + c]
            rhs = op[t * nn + a * n + op[m * nn + b * n + c]]
            if lhs != rhs:
                out.append(Violation("associativity", (a, t, b, m, c)))
    return ValidationReport(tuple(out))


def require_valid(s: PoGammaStructure) -> PoGammaStructure:
    report = validate(s)
    if report:
        raise AxiomError(report)
    return s


def require_semigroup(s: PoGammaStructure, what: str) -> None:
    if s.kind != SEMIGROUP:
        raise KindError(f"{what} requires kind=semigroup (mixed associativity)")


def up_set(s: PoGammaStructure, a: int) -> ElementSet:
    """``[a)``: every ``t`` with ``a <= t``."""
    s.check_element(a)
    n = s.n
    row = s.leq[a * n:(a + 1) * n]
    return ElementSet(n, sum(1 << t for t in range(n) if row[t]))


@dataclass(frozen=True)
class StructuralProfile:
    is_band: bool
    is_commutative: bool
    is_semilattice: bool
    order_forward: bool
    order_iff: bool


def structural_profile(s: PoGammaStructure) -> StructuralProfile:
    n, g, op, leq = s.n, s.g, s.op, s.leq
    nn = n * n
    band = all(op[t * nn + a * n + a] == a for t in range(g) for a in range(n))
    comm = all(op[t * nn + a * n + b] == op[t * nn + b * n + a]
               for t in range(g) for a in range(n) for b in range(a + 1, n))
    # absorbs[a][b]: a gamma b == a for every gamma
    forward = True
    iff = True
    for a, b in product(range(n), repeat=2):
        absorbs = all(op[t * nn + a * n + b] == a for t in range(g))
        if leq[a * n + b] and not absorbs:
            forward = iff = False
        elif absorbs and not leq[a * n + b]:
            iff = False
    return StructuralProfile(band, comm, band and comm, forward, iff)
