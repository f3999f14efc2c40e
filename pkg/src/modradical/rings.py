"""Exact arithmetic for small finite commutative unital rings and their ideals.

Every ring here is explicit: elements are dense integer encodings
``0..size-1`` and both operations are total tables over those encodings.
Constructors cover Z/n, GF(p^k) as polynomial residues modulo an irreducible
polynomial, and finite products with componentwise arithmetic.  Values are
immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

# Ring axioms are verified by full enumeration up to this size; all the stock
# corpus rings are far below it.
AXIOM_CHECK_LIMIT = 256

_RING_CACHE: dict[str, "FiniteRing"] = {}


class RingConstructionError(ValueError):
    """Rejected ring construction (bad modulus, composite p, reducible poly)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FiniteRing:
    """A finite commutative unital ring on encodings ``0..size-1``.

    Instances come from :func:`make_zn`, :func:`make_gf` or
    :func:`make_product`.  ``descriptor`` is the canonical construction
    recipe (``Z/12``, ``GF(4) poly=[1,1,1]``, ``product(Z/2, Z/4)``) and two
    rings are equal exactly when their descriptors are.
    """

    def __init__(self, size: int, add_table, mul_table, zero: int, one: int,
                 descriptor: str):
        self.size = size
        self.zero = zero
        self.one = one
        self.descriptor = descriptor
        self._add = add_table
        self._mul = mul_table
        neg = [None] * size
        for a in range(size):
            for b in range(size):
                if add_table[a][b] == zero:
                    neg[a] = b
                    break
        self._neg = neg
        # product rings fill these in; None elsewhere
        self.factors: tuple[FiniteRing, ...] | None = None
        self._strides: tuple[int, ...] | None = None
        if size <= AXIOM_CHECK_LIMIT:
            self._verify_axioms()

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative powers are not defined in a ring")
        out = self.one
        for _ in range(k):
            out = self._mul[out][a]
        return out

    @property
    def elements(self) -> range:
        return range(self.size)

    def element(self, code: int) -> "RingElement":
        return RingElement(self, code)

    # -- product helpers ----------------------------------------------------

    def split(self, code: int) -> tuple[int, ...]:
        """Component codes of a product-ring element."""
        if self.factors is None:
            raise ValueError(f"{self.descriptor} is not a product ring")
        return tuple((code // s) % f.size
                     for s, f in zip(self._strides, self.factors))

    def join(self, codes: Sequence[int]) -> int:
        if self.factors is None:
            raise ValueError(f"{self.descriptor} is not a product ring")
        return sum(c * s for c, s in zip(codes, self._strides))

    # -- plumbing -----------------------------------------------------------

    def _verify_axioms(self) -> None:
        n, add, mul = self.size, self._add, self._mul
        zero, one = self.zero, self.one
        for a in range(n):
            assert add[a][zero] == a, f"{self.descriptor}: additive identity fails at {a}"
            assert mul[a][one] == a, f"{self.descriptor}: multiplicative identity fails at {a}"
            assert self._neg[a] is not None, f"{self.descriptor}: no additive inverse for {a}"
        for a in range(n):
            for b in range(n):
                assert add[a][b] == add[b][a], f"{self.descriptor}: + not commutative at ({a},{b})"
                assert mul[a][b] == mul[b][a], f"{self.descriptor}: * not commutative at ({a},{b})"
        for a in range(n):
            for b in range(n):
                ab_add = add[a][b]
                ab_mul = mul[a][b]
                row_a = mul[a]
                for c in range(n):
                    assert add[ab_add][c] == add[a][add[b][c]], \
                        f"{self.descriptor}: + not associative at ({a},{b},{c})"
                    assert mul[ab_mul][c] == mul[a][mul[b][c]], \
                        f"{self.descriptor}: * not associative at ({a},{b},{c})"
                    assert row_a[add[b][c]] == add[row_a[b]][row_a[c]], \
                        f"{self.descriptor}: distributivity fails at ({a},{b},{c})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"FiniteRing({self.descriptor})"


@dataclass(frozen=True)
class RingElement:
    """A ring element: a reference to its ring plus the canonical encoding."""

    ring: FiniteRing
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.ring.size:
            raise ValueError(f"code {self.code} out of range for {self.ring.descriptor}")

    def _coerce(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError("elements of different rings")
            return other.code
        if isinstance(other, int):
            if not 0 <= other < self.ring.size:
                raise ValueError(f"code {other} out of range for {self.ring.descriptor}")
            return other
        return NotImplemented

    def __add__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.add(self.code, code))

    __radd__ = __add__

    def __sub__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(self.code, code))

    def __mul__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.mul(self.code, code))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.code))

    def __pow__(self, k: int):
        return RingElement(self.ring, self.ring.pow(self.code, k))

    def __repr__(self) -> str:
        return f"{self.code}@{self.ring.descriptor}"


# -- constructors -------------------------------------------------------------


def make_zn(n: int) -> FiniteRing:
    """The ring of integers modulo ``n`` (``n >= 2``)."""
    if not isinstance(n, int) or n < 2:
        raise RingConstructionError(f"modulus must be an integer >= 2, got {n!r}")
    descriptor = f"Z/{n}"
    cached = _RING_CACHE.get(descriptor)
    if cached is not None:
        return cached
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    ring = FiniteRing(n, add, mul, 0, 1 % n, descriptor)
    ring.modulus = n
    _RING_CACHE[descriptor] = ring
    return ring


def _poly_mod(coeffs: list[int], divisor: Sequence[int], p: int) -> list[int]:
    """Remainder of ``coeffs`` modulo a monic ``divisor``, both ascending."""
    out = [c % p for c in coeffs]
    d = len(divisor) - 1
    for i in range(len(out) - 1, d - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(d):
                out[i - d + j] = (out[i - d + j] - c * divisor[j]) % p
    return out[:d] if d > 0 else []


def _monic_polys(degree: int, p: int) -> Iterable[tuple[int, ...]]:
    def rec(i: int, acc: list[int]):
        if i == degree:
            yield tuple(acc) + (1,)
            return
        for c in range(p):
            acc.append(c)
            yield from rec(i + 1, acc)
            acc.pop()
    yield from rec(0, [])


def make_gf(p: int, k: int, poly: Sequence[int]) -> FiniteRing:
    """The field GF(p^k) as residues modulo an irreducible monic polynomial.

    ``poly`` lists coefficients in ascending degree order (length ``k + 1``,
    leading coefficient 1).  Element encodings are base-p digit strings: the
    code of ``c0 + c1*x + ...`` is ``sum(ci * p**i)``.  Irreducibility is
    checked by trial division against every lower-degree monic polynomial,
    which is exhaustive and cheap at the sizes this library targets (k <= 4).
    """
    if not _is_prime(p):
        raise RingConstructionError(f"characteristic must be prime, got {p}")
    if not isinstance(k, int) or k < 1:
        raise RingConstructionError(f"extension degree must be >= 1, got {k!r}")
    poly = tuple(c % p for c in poly)
    if len(poly) != k + 1:
        raise RingConstructionError(
            f"reduction polynomial must have degree {k} ({k + 1} coefficients), got {len(poly)}")
    if poly[k] != 1:
        raise RingConstructionError("reduction polynomial must be monic")
    for d in range(1, k):
        for g in _monic_polys(d, p):
            if not any(_poly_mod(list(poly), g, p)):
                raise RingConstructionError(
                    f"polynomial {list(poly)} is reducible over Z/{p} "
                    f"(divisible by {list(g)})")
    size = p ** k
    descriptor = f"GF({size}) poly=[{','.join(map(str, poly))}]"
    cached = _RING_CACHE.get(descriptor)
    if cached is not None:
        return cached

    def digits(code: int) -> list[int]:
        out = []
        for _ in range(k):
            out.append(code % p)
            code //= p
        return out

    def code_of(cs: Sequence[int]) -> int:
        out = 0
        for c in reversed(cs):
            out = out * p + c
        return out

    add = tuple(
        tuple(code_of([(x + y) % p for x, y in zip(digits(a), digits(b))])
              for b in range(size))
        for a in range(size))
    mul_rows = []
    for a in range(size):
        da = digits(a)
        row = []
        for b in range(size):
            db = digits(b)
            conv = [0] * (2 * k - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        conv[i + j] += x * y
            row.append(code_of(_poly_mod(conv, poly, p)))
        mul_rows.append(tuple(row))
    ring = FiniteRing(size, add, tuple(mul_rows), 0, 1, descriptor)
    ring.char_p = p
    ring.degree_k = k
    ring.poly = poly
    _RING_CACHE[descriptor] = ring
    return ring


def make_product(rings: Sequence[FiniteRing]) -> FiniteRing:
    """Componentwise product of finitely many rings (mixed-radix encodings)."""
    rings = tuple(rings)
    if not rings:
        raise RingConstructionError("product of an empty list of rings")
    descriptor = f"product({', '.join(r.descriptor for r in rings)})"
    cached = _RING_CACHE.get(descriptor)
    if cached is not None:
        return cached
    strides = []
    s = 1
    for r in rings:
        strides.append(s)
        s *= r.size
    size = s

    def split(code: int) -> tuple[int, ...]:
        return tuple((code // st) % r.size for st, r in zip(strides, rings))

    def join(codes) -> int:
        return sum(c * st for c, st in zip(codes, strides))

    parts = [split(a) for a in range(size)]
    add = tuple(
        tuple(join(r.add(x, y) for r, x, y in zip(rings, parts[a], parts[b]))
              for b in range(size))
        for a in range(size))
    mul = tuple(
        tuple(join(r.mul(x, y) for r, x, y in zip(rings, parts[a], parts[b]))
              for b in range(size))
        for a in range(size))
    ring = FiniteRing(size, add, mul, join(r.zero for r in rings),
                      join(r.one for r in rings), descriptor)
    ring.factors = rings
    ring._strides = tuple(strides)
    _RING_CACHE[descriptor] = ring
    return ring


# -- ideals -------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """An ideal as its full member set plus the generators that produced it."""

    ring: FiniteRing
    members: frozenset[int]
    generators: tuple[int, ...] = field(compare=False, default=())

    def __contains__(self, r) -> bool:
        if isinstance(r, RingElement):
            r = r.code
        return r in self.members

    @property
    def members_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.ring.size

    @property
    def is_zero(self) -> bool:
        return self.members == frozenset({self.ring.zero})

    def issubset(self, other: "Ideal") -> bool:
        return self.members <= other.members

    def __repr__(self) -> str:
        return f"Ideal({sorted(self.members)} of {self.ring.descriptor})"


def additive_closure(zero, step_elements, add) -> set:
    """Closure of ``{zero}`` under adding any of ``step_elements``.

    In a finite abelian group this is exactly the subgroup generated by the
    step elements; each member is visited once, so the cost is
    ``O(|result| * |steps|)``.
    """
    seen = {zero}
    frontier = [zero]
    steps = list(step_elements)
    while frontier:
        nxt = []
        for x in frontier:
            for g in steps:
                y = add(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def is_ideal_members(ring: FiniteRing, members) -> bool:
    """Literal check: contains zero, closed under + and under every r*."""
    ms = set(members)
    if ring.zero not in ms:
        return False
    for a in ms:
        for b in ms:
            if ring.add(a, b) not in ms:
                return False
        for r in range(ring.size):
            if ring.mul(r, a) not in ms:
                return False
    return True


def _coerce_codes(ring: FiniteRing, gens) -> list[int]:
    out = []
    for g in gens:
        if isinstance(g, RingElement):
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            out.append(g.code)
        else:
            code = int(g)
            if not 0 <= code < ring.size:
                raise ValueError(f"code {code} out of range for {ring.descriptor}")
            out.append(code)
    return out


def ideal_generate(ring: FiniteRing, gens) -> Ideal:
    """Smallest ideal of ``ring`` containing ``gens``.

    The member set is the additive closure of all ring multiples of the
    generators; that set is already closed under multiplication because
    ``r * (sum si*gi) = sum (r*si)*gi``.
    """
    codes = _coerce_codes(ring, gens)
    multiples = {ring.mul(r, g) for g in codes for r in range(ring.size)}
    members = additive_closure(ring.zero, multiples, ring.add)
    return Ideal(ring, frozenset(members), tuple(codes))


def zero_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset({ring.zero}), ())


def unit_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset(range(ring.size)), (ring.one,))


def is_semiprime_ideal(I: Ideal) -> bool:
    """True iff every element whose square lies in ``I`` lies in ``I``."""
    ring = I.ring
    ms = I.members
    return all(r in ms for r in range(ring.size) if ring.mul(r, r) in ms)


def is_prime_ideal(I: Ideal) -> bool:
    """True iff ``I`` is proper and ``a*b in I`` forces ``a in I`` or ``b in I``."""
    ring = I.ring
    ms = I.members
    if len(ms) == ring.size:
        return False
    for a in range(ring.size):
        if a in ms:
            continue
        row = ring._mul[a]
        for b in range(ring.size):
            if row[b] in ms and b not in ms:
                return False
    return True


def nilpotent_radical_of_ideal(I: Ideal) -> Ideal:
    """All elements with some power in ``I`` (the classical radical of an ideal)."""
    ring = I.ring
    ms = I.members
    members = set()
    for r in range(ring.size):
        x = r
        for _ in range(ring.size):
            if x in ms:
                members.add(r)
                break
            x = ring.mul(x, r)
    assert is_ideal_members(ring, members), \
        f"radical of {sorted(ms)} in {ring.descriptor} is not an ideal"
    return Ideal(ring, frozenset(members), tuple(sorted(members)))


def enumerate_ideals(ring: FiniteRing) -> list[Ideal]:
    """Every ideal of ``ring``, found by join-closure over principal ideals.

    Results are sorted by (size, member list), smallest first.
    """
    principals: dict[frozenset[int], int] = {}
    for r in range(ring.size):
        ms = frozenset(ideal_generate(ring, [r]).members)
        principals.setdefault(ms, r)
    cyclics = sorted(principals, key=lambda ms: (len(ms), sorted(ms)))
    zero_ms = frozenset({ring.zero})
    gens_of: dict[frozenset[int], tuple[int, ...]] = {zero_ms: ()}
    frontier = [zero_ms]
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyclics:
                if C <= S:
                    continue
                # S + C, one full coset of S at a time
                total = set(S)
                for c in sorted(C):
                    if c not in total:
                        total.update(ring.add(s, c) for s in S)
                J = frozenset(total)
                if J not in gens_of:
                    gens_of[J] = gens_of[S] + (principals[C],)
                    nxt.append(J)
        frontier = nxt
    out = [Ideal(ring, ms, gens) for ms, gens in gens_of.items()]
    out.sort(key=lambda I: (len(I.members), I.members_sorted))
    return out
