"""Primeness and semiprimeness predicates on submodules, with witnesses.

All quantifiers run as exhaustive scans over the finite carrier, so every
verdict is a decision.  A false verdict carries a witness recording the
violating elements together with the intermediate sets that were computed;
``replays()`` re-derives everything from the definitions and confirms the
failure, which keeps reported counterexamples honest.

Throughout, conditions on single elements are membership conditions: the
colon ideal (N : m) is {r : r*m in N}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .modules import ModulePresentation, Submodule, colon_codes


@dataclass(frozen=True)
class PredicateWitness:
    """The data of one predicate violation.

    ``kind`` selects the definition being violated; ``r`` / ``m`` are the
    violating scalar code and element representative; the remaining fields
    freeze the intermediate sets (sorted member lists) that exhibit the
    failure for that kind.
    """

    kind: str
    submodule: Submodule
    r: Optional[int] = None
    m: Optional[tuple] = None
    colon_members: Optional[tuple] = None      # (N:m) codes
    product_members: Optional[tuple] = None    # (N:m)M representatives
    scaled_members: Optional[tuple] = None     # r*M representatives

    def replays(self) -> bool:
        """Recompute the violated definition from scratch; True iff it still fails."""
        N = self.submodule
        M = N.module
        ms = N.member_indices
        if self.kind == "semiprime":
            mi = M.index_of(self.m)
            colon = colon_codes(N, mi)
            product = M.ideal_action(colon)
            return (tuple(sorted(colon)) == self.colon_members
                    and _reps(M, product) == self.product_members
                    and mi in product and mi not in ms)
        if self.kind == "prime":
            mi = M.index_of(self.m)
            rm = M.scale_i(self.r, mi)
            image = M.image_set(self.r)
            return (_reps(M, image) == self.scaled_members
                    and rm in ms and not image <= ms and mi not in ms)
        if self.kind == "dauns":
            mi = M.index_of(self.m)
            r2m = M.scale_i(self.r, M.scale_i(self.r, mi))
            rm = M.scale_i(self.r, mi)
            return r2m in ms and rm not in ms
        if self.kind == "cimpric":
            mi = M.index_of(self.m)
            coords = self.m
            return (all(M.scale_i(c, mi) in ms for c in coords)
                    and mi not in ms)
        raise ValueError(f"unknown witness kind {self.kind!r}")


def _reps(M: ModulePresentation, indices) -> tuple:
    els = M.elements
    return tuple(els[i] for i in sorted(indices))


@dataclass(frozen=True)
class Verdict:
    """A boolean predicate outcome plus the witness when it is false."""

    holds: bool
    witness: Optional[PredicateWitness] = None

    def __bool__(self) -> bool:
        return self.holds


def is_prime_submodule(P: Submodule) -> Verdict:
    """P proper and: r*m in P implies r*M <= P or m in P.

    The scan runs scalars-major, so a false verdict carries the
    lexicographically first violating (r, m).
    """
    M = P.module
    ms = P.member_indices
    if not P.is_proper:
        return Verdict(False)
    for r in range(M.ring.size):
        image = M.image_set(r)
        if image <= ms:
            continue
        row = M.scaled_row(r)
        for mi in range(M.element_count):
            if row[mi] in ms and mi not in ms:
                return Verdict(False, PredicateWitness(
                    kind="prime", submodule=P, r=r, m=M.elements[mi],
                    scaled_members=_reps(M, image)))
    return Verdict(True)


def is_semiprime_submodule(N: Submodule) -> Verdict:
    """m in (N:m)M implies m in N, for every element m.

    Verdicts are cached on the module per member set; the corpus sweeps
    re-ask constantly.
    """
    M = N.module
    cached = M._semiprime_cache.get(N.member_indices)
    if cached is not None:
        return cached
    ms = N.member_indices
    verdict = Verdict(True)
    for mi in range(M.element_count):
        if mi in ms:
            continue  # m in N never violates
        colon = colon_codes(N, mi)
        product = M.ideal_action(colon)
        if mi in product:
            verdict = Verdict(False, PredicateWitness(
                kind="semiprime", submodule=N, m=M.elements[mi],
                colon_members=tuple(sorted(colon)),
                product_members=_reps(M, product)))
            break
    M._semiprime_cache[N.member_indices] = verdict
    return verdict


def is_dauns_semiprime(N: Submodule) -> Verdict:
    """r*r*m in N implies r*m in N, for all scalars r and elements m."""
    M = N.module
    ms = N.member_indices
    for r in range(M.ring.size):
        row = M.scaled_row(r)
        for mi in range(M.element_count):
            rm = row[mi]
            if row[rm] in ms and rm not in ms:
                return Verdict(False, PredicateWitness(
                    kind="dauns", submodule=N, r=r, m=M.elements[mi]))
    return Verdict(True)


def is_cimpric_semiprime(N: Submodule) -> Verdict:
    """On a free module: if every coordinate of m multiplies m into N, then m in N.

    Raises ``ValueError`` on a non-free presentation; the coordinate reading
    only makes sense when vectors are their own representatives.
    """
    M = N.module
    if not M.is_free:
        raise ValueError("coordinate semiprimeness is defined on free modules only")
    ms = N.member_indices
    for mi, vec in enumerate(M.elements):
        if mi in ms:
            continue
        if all(M.scaled_row(c)[mi] in ms for c in vec):
            return Verdict(False, PredicateWitness(
                kind="cimpric", submodule=N, m=vec))
    return Verdict(True)


@dataclass(frozen=True)
class NotionRow:
    """One line of a notion-comparison table."""

    submodule: Submodule
    prime: bool
    semiprime: bool
    dauns: bool
    cimpric: Optional[bool]           # None when the module is not free
    flags: tuple[str, ...]


def compare_notions(M: ModulePresentation,
                    lattice_bound: int | None = None) -> list[NotionRow]:
    """Evaluate all predicates on every submodule of ``M``.

    Rows that violate an expected implication (semiprime must imply the
    squares condition; on free modules semiprime and the coordinate
    condition must agree) are flagged ``CONTRADICTS-THEOREM``.  A row where
    the squares condition holds but semiprime fails is only ``SEPARATION``:
    nothing promises the converse implication.
    """
    from .modules import DEFAULT_LATTICE_BOUND, enumerate_submodules
    bound = DEFAULT_LATTICE_BOUND if lattice_bound is None else lattice_bound
    rows = []
    for N in enumerate_submodules(M, bound):
        prime = bool(is_prime_submodule(N))
        semiprime = bool(is_semiprime_submodule(N))
        dauns = bool(is_dauns_semiprime(N))
        cimpric = bool(is_cimpric_semiprime(N)) if M.is_free else None
        flags = []
        if ((prime and not semiprime) or (semiprime and not dauns)
                or (cimpric is not None and semiprime != cimpric)):
            flags.append("CONTRADICTS-THEOREM")
        if dauns and not semiprime:
            flags.append("SEPARATION")
        rows.append(NotionRow(N, prime, semiprime, dauns, cimpric, tuple(flags)))
    return rows
