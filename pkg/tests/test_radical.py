from __future__ import annotations

import pytest

from modradical.modules import (
    enumerate_submodules,
    free_module,
    full_submodule,
    presented_module,
    submodule_generate,
    zero_submodule,
)
from modradical.predicates import is_semiprime_submodule
from modradical.radical import (
    first_radical,
    prime_submodules,
    radical_by_iteration,
    radical_by_primes,
    smallest_semiprime_over,
)
from modradical.rings import make_gf, make_product, make_zn

import oracles


@pytest.fixture
def z4_line():
    return free_module(make_zn(4), 1)


@pytest.fixture
def z12_line():
    return free_module(make_zn(12), 1)


@pytest.fixture
def z4_plane():
    return free_module(make_zn(4), 2)


SMALL_MODULES = [
    lambda: free_module(make_zn(4), 1),
    lambda: free_module(make_zn(6), 1),
    lambda: free_module(make_zn(8), 1),
    lambda: free_module(make_zn(12), 1),
    lambda: free_module(make_zn(2), 2),
    lambda: free_module(make_zn(4), 2),
    lambda: free_module(make_gf(2, 2, [1, 1, 1]), 1),
    lambda: free_module(make_product([make_zn(2), make_zn(4)]), 1),
    lambda: presented_module(make_zn(8), 2, [(2, 4)]),
]


def members_of(N):
    return set(N.members)


# -- prime enumeration ---------------------------------------------------------


def test_prime_submodules_of_z4(z4_line):
    primes = prime_submodules(z4_line)
    assert [members_of(P) for P in primes] == [{(0,), (2,)}]


def test_prime_submodules_match_definition_oracle():
    for factory in SMALL_MODULES:
        M = factory()
        if M.element_count > 16:
            continue
        expected = {frozenset(s) for s in oracles.prime_sets_by_definition(M)}
        assert {P.member_indices for P in prime_submodules(M)} == expected


# -- radical by primes ----------------------------------------------------------


def test_radical_by_primes_examples(z4_line, z12_line):
    assert members_of(radical_by_primes(zero_submodule(z4_line))) == {(0,), (2,)}
    four = submodule_generate(z12_line, [(4,)])
    assert members_of(radical_by_primes(four)) == {(0,), (2,), (4,), (6,), (8,), (10,)}
    whole = full_submodule(z4_line)
    assert radical_by_primes(whole).member_indices == whole.member_indices


# -- first radical ----------------------------------------------------------------


def test_first_radical_examples(z4_line, z4_plane):
    assert members_of(first_radical(zero_submodule(z4_line))) == {(0,), (2,)}
    semiprime = submodule_generate(z4_line, [(2,)])
    assert first_radical(semiprime).member_indices == semiprime.member_indices
    N = submodule_generate(z4_plane, [(2, 0)])
    assert members_of(first_radical(N)) == {(0, 0), (0, 2), (2, 0), (2, 2)}


def test_first_radical_qualifiers_recorded(z4_plane):
    from modradical.radical import first_radical_step
    N = submodule_generate(z4_plane, [(2, 0)])
    _, witnesses = first_radical_step(N)
    assert [w.m for w in witnesses] == [(0, 2), (2, 2)]
    for w in witnesses:
        assert w.replays_against(N)


# -- iteration --------------------------------------------------------------------


def test_radical_by_iteration_z4(z4_line):
    fixpoint, trace = radical_by_iteration(zero_submodule(z4_line))
    assert members_of(fixpoint) == {(0,), (2,)}
    assert trace.fixpoint_index == 2
    assert members_of(trace.steps[0].submodule) == {(0,), (2,)}
    assert trace.steps[0].new_members == ((2,),)
    assert trace.steps[1].new_members == ()


def test_radical_by_iteration_semiprime_is_immediate(z4_line):
    semiprime = submodule_generate(z4_line, [(2,)])
    fixpoint, trace = radical_by_iteration(semiprime)
    assert fixpoint.member_indices == semiprime.member_indices
    assert trace.fixpoint_index == 1


def test_radical_by_iteration_plane(z4_plane):
    N = submodule_generate(z4_plane, [(2, 0)])
    fixpoint, trace = radical_by_iteration(N)
    assert members_of(fixpoint) == {(0, 0), (0, 2), (2, 0), (2, 2)}
    assert trace.fixpoint_index == 2


def test_trace_chain_is_weakly_increasing_and_replayable():
    for factory in SMALL_MODULES:
        M = factory()
        for N in enumerate_submodules(M):
            fixpoint, trace = radical_by_iteration(N)
            prev = trace.start
            for step in trace.steps:
                assert prev.member_indices <= step.submodule.member_indices
                for w in step.witnesses:
                    assert w.replays_against(prev)
                prev = step.submodule
            assert trace.fixpoint_index <= M.element_count or M.element_count == 0
            assert fixpoint.member_indices == trace.fixpoint.member_indices


# -- smallest semiprime -------------------------------------------------------------


def test_smallest_semiprime_examples(z4_line, z12_line):
    assert members_of(smallest_semiprime_over(zero_submodule(z4_line))) == {(0,), (2,)}
    semiprime = submodule_generate(z4_line, [(2,)])
    assert smallest_semiprime_over(semiprime).member_indices == semiprime.member_indices
    four = submodule_generate(z12_line, [(4,)])
    assert members_of(smallest_semiprime_over(four)) == \
        {(0,), (2,), (4,), (6,), (8,), (10,)}


# -- agreement and characterization ---------------------------------------------------


def test_three_methods_agree_on_small_modules():
    for factory in SMALL_MODULES:
        M = factory()
        for N in enumerate_submodules(M):
            by_primes = radical_by_primes(N)
            by_iter, _ = radical_by_iteration(N)
            by_smallest = smallest_semiprime_over(N)
            assert by_primes.member_indices == by_iter.member_indices
            assert by_primes.member_indices == by_smallest.member_indices


def test_semiprime_iff_radical_fixpoint():
    for factory in SMALL_MODULES:
        M = factory()
        for N in enumerate_submodules(M):
            if not N.is_proper:
                continue
            fixed = radical_by_primes(N).member_indices == N.member_indices
            assert is_semiprime_submodule(N).holds == fixed


def test_radical_monotone_and_idempotent():
    for factory in SMALL_MODULES[:6]:
        M = factory()
        lat = enumerate_submodules(M)
        rads = {N.member_indices: radical_by_primes(N) for N in lat}
        for N1 in lat:
            r1 = rads[N1.member_indices]
            again = radical_by_primes(r1)
            assert again.member_indices == r1.member_indices
            for N2 in lat:
                if N1.issubset(N2):
                    assert r1.issubset(rads[N2.member_indices])


def test_first_radical_absorbed_by_every_prime_above():
    for factory in SMALL_MODULES:
        M = factory()
        primes = prime_submodules(M)
        for N in enumerate_submodules(M):
            fr = first_radical(N)
            for P in primes:
                if N.issubset(P):
                    assert fr.issubset(P)


def test_whole_module_radical_is_whole_module():
    for factory in SMALL_MODULES[:4]:
        M = factory()
        whole = full_submodule(M)
        assert radical_by_primes(whole).member_indices == whole.member_indices
        fixpoint, _ = radical_by_iteration(whole)
        assert fixpoint.member_indices == whole.member_indices
        assert smallest_semiprime_over(whole).member_indices == whole.member_indices
