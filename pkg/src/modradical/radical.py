"""Three independent radical computations for submodules, with traces.

``radical_by_iteration`` is the scalable path: it only scans elements, never
the submodule lattice, and records a step-by-step trace of the growing
chain.  ``radical_by_primes`` and ``smallest_semiprime_over`` realize the
definitional forms (intersection of primes above N; intersection of
semiprimes above N) and are gated by the lattice bound.  On every module the
three must agree, which the harness and the acceptance suite certify.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modules import (
    DEFAULT_LATTICE_BOUND,
    ModulePresentation,
    Submodule,
    colon_codes,
    enumerate_submodules,
    full_submodule,
    intersect,
    _generate_from_indices,
)
from .predicates import is_prime_submodule, is_semiprime_submodule


@dataclass(frozen=True)
class RadicalGeneratorWitness:
    """Why one element qualified for the next chain step.

    ``m`` satisfies m in (N:m)M against the previous chain member N; the
    member lists of the colon ideal and of its action on M are frozen here
    so the qualification can be replayed literally.
    """

    m: tuple
    colon_members: tuple
    product_members: tuple

    def replays_against(self, previous: Submodule) -> bool:
        M = previous.module
        mi = M.index_of(self.m)
        colon = colon_codes(previous, mi)
        product = M.ideal_action(colon)
        els = M.elements
        return (tuple(sorted(colon)) == self.colon_members
                and tuple(els[i] for i in sorted(product)) == self.product_members
                and mi in product)


@dataclass(frozen=True)
class RadicalStep:
    """One link of the chain N = N0 <= N1 <= ... produced by the iteration."""

    index: int
    submodule: Submodule
    new_members: tuple
    witnesses: tuple[RadicalGeneratorWitness, ...]


@dataclass(frozen=True)
class RadicalTrace:
    """The full chain of one iterated-radical run.

    ``fixpoint_index`` is the first i with the i-th chain member equal to
    its predecessor; the step list covers i = 1..fixpoint_index, so the last
    step always records no new members.
    """

    start: Submodule
    steps: tuple[RadicalStep, ...]
    fixpoint_index: int

    @property
    def fixpoint(self) -> Submodule:
        return self.steps[-1].submodule if self.steps else self.start


def first_radical_step(N: Submodule) -> tuple[Submodule, tuple[RadicalGeneratorWitness, ...]]:
    """One chain step: the submodule generated by {m : m in (N:m)M}.

    Elements of N always qualify (their colon ideal is the whole ring), so
    the chain can only grow.  Witnesses are recorded for the qualifying
    elements outside N.
    """
    M = N.module
    ms = N.member_indices
    qualifying = []
    witnesses = []
    els = M.elements
    for mi in range(M.element_count):
        if mi in ms:
            qualifying.append(mi)
            continue
        colon = colon_codes(N, mi)
        product = M.ideal_action(colon)
        if mi in product:
            qualifying.append(mi)
            witnesses.append(RadicalGeneratorWitness(
                m=els[mi],
                colon_members=tuple(sorted(colon)),
                product_members=tuple(els[i] for i in sorted(product))))
    return _generate_from_indices(M, tuple(qualifying)), tuple(witnesses)


def first_radical(N: Submodule) -> Submodule:
    """The submodule generated by all m with m in (N:m)M."""
    return first_radical_step(N)[0]


def radical_by_iteration(N: Submodule) -> tuple[Submodule, RadicalTrace]:
    """Iterate the single-step radical until the member set stabilizes.

    Returns the fixpoint and the trace; the fixpoint is checked to be
    semiprime, which is what makes it the radical.
    """
    M = N.module
    steps = []
    current = N
    index = 0
    while True:
        index += 1
        nxt, witnesses = first_radical_step(current)
        assert current.member_indices <= nxt.member_indices
        new = tuple(M.elements[i]
                    for i in sorted(nxt.member_indices - current.member_indices))
        steps.append(RadicalStep(index, nxt, new, witnesses))
        if nxt.member_indices == current.member_indices:
            break
        current = nxt
    assert index <= max(M.element_count, 1)
    fixpoint = steps[-1].submodule
    assert is_semiprime_submodule(fixpoint).holds, \
        f"iteration fixpoint {sorted(fixpoint.member_indices)} is not semiprime"
    return fixpoint, RadicalTrace(start=N, steps=tuple(steps), fixpoint_index=index)


def prime_submodules(M: ModulePresentation,
                     lattice_bound: int = DEFAULT_LATTICE_BOUND) -> list[Submodule]:
    """All prime submodules of ``M``, in lattice order (cached)."""
    cached = M._prime_cache.get("primes")
    if cached is not None:
        return list(cached)
    primes = [P for P in enumerate_submodules(M, lattice_bound)
              if is_prime_submodule(P).holds]
    M._prime_cache["primes"] = primes
    return list(primes)


def radical_by_primes(N: Submodule,
                      lattice_bound: int = DEFAULT_LATTICE_BOUND) -> Submodule:
    """Intersection of every prime submodule containing N; M when none does."""
    M = N.module
    cached = M._radical_cache.get(N.member_indices)
    if cached is not None:
        return cached
    above = [P for P in prime_submodules(M, lattice_bound) if N.issubset(P)]
    if not above:
        out = full_submodule(M)
    else:
        out = above[0]
        for P in above[1:]:
            out = intersect(out, P)
    M._radical_cache[N.member_indices] = out
    return out


def smallest_semiprime_over(N: Submodule,
                            lattice_bound: int = DEFAULT_LATTICE_BOUND) -> Submodule:
    """Intersection of every semiprime submodule containing N.

    The family is never empty (the whole module is semiprime), and the
    intersection of semiprimes is itself semiprime, which is re-checked here.
    """
    M = N.module
    out = full_submodule(M)
    for S in enumerate_submodules(M, lattice_bound):
        if N.issubset(S) and is_semiprime_submodule(S).holds:
            out = intersect(out, S)
    assert is_semiprime_submodule(out).holds
    return out
