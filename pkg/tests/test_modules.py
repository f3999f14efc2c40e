from __future__ import annotations

import pytest

from modradical.modules import (
    BoundExceededError,
    colon_ideal,
    colon_module,
    contains,
    enumerate_submodules,
    free_module,
    full_submodule,
    ideal_times_module,
    intersect,
    join,
    presented_module,
    quotient_module,
    submodule_generate,
    zero_submodule,
)
from modradical.rings import ideal_generate, is_ideal_members, make_zn, unit_ideal, zero_ideal

import oracles


@pytest.fixture
def z4():
    return make_zn(4)


@pytest.fixture
def z4_line(z4):
    return free_module(z4, 1)


@pytest.fixture
def z4_plane(z4):
    return free_module(z4, 2)


def members_of(N):
    return set(N.members)


# -- construction and canonical forms -----------------------------------------


def test_free_module_sizes(z4):
    assert free_module(z4, 2).element_count == 16
    assert free_module(make_zn(2), 0).element_count == 1
    assert free_module(make_zn(12), 1).element_count == 12


def test_free_module_every_vector_is_its_own_rep(z4_plane):
    for vec in z4_plane.elements:
        assert z4_plane.reduce(vec) == vec


def test_element_bound_is_enforced():
    with pytest.raises(BoundExceededError) as err:
        free_module(make_zn(12), 5)  # 12^5 = 248832
    assert "--element-bound" in str(err.value)


def test_presented_module_interning(z4):
    a = presented_module(z4, 2, [(2, 0)])
    b = presented_module(z4, 2, [(2, 0), (0, 0)])
    assert a is b  # same relation submodule


def test_reduction_canonicalization_exhaustive():
    # reduce(v) == reduce(w) iff v - w lies in the relation submodule
    cases = [
        presented_module(make_zn(4), 1, [(2,)]),
        presented_module(make_zn(6), 1, [(4,)]),
        presented_module(make_zn(4), 2, [(2, 0)]),
        presented_module(make_zn(2), 3, [(1, 1, 0)]),
    ]
    for M in cases:
        ring = M.ring
        vectors = list(__import__("itertools").product(range(ring.size), repeat=M.rank))
        assert len(vectors) <= 256
        for v in vectors:
            for w in vectors:
                diff = tuple(ring.sub(a, b) for a, b in zip(v, w))
                same = M.reduce(v) == M.reduce(w)
                assert same == (diff in M.relation_members)


def test_rep_of_rep_is_itself():
    M = presented_module(make_zn(6), 2, [(3, 3)])
    for rep in M.elements:
        assert M.reduce(rep) == rep


def test_coset_count_times_relation_size_is_ambient():
    M = presented_module(make_zn(6), 2, [(2, 0), (0, 3)])
    assert M.element_count * len(M.relation_members) == 36


# -- quotients -----------------------------------------------------------------


def test_quotient_of_z4_by_two_torsion_behaves_like_z2(z4_line):
    two = submodule_generate(z4_line, [(2,)])
    q = quotient_module(z4_line, two)
    Q = q.module
    assert Q.element_count == 2
    one = Q.index_of((1,))
    assert Q.add_i(one, one) == Q.zero_index


def test_quotient_by_zero_is_identity_on_reps(z4_line):
    q = quotient_module(z4_line, zero_submodule(z4_line))
    assert q.module.element_count == 4
    for rep in z4_line.elements:
        assert q.forward(rep).rep == rep


def test_quotient_by_whole_module_is_zero(z4_line):
    q = quotient_module(z4_line, full_submodule(z4_line))
    assert q.module.element_count == 1


def test_quotient_correspondence_round_trip(z4_plane):
    mp = submodule_generate(z4_plane, [(2, 0)])
    q = quotient_module(z4_plane, mp)
    for N in enumerate_submodules(z4_plane):
        if not mp.issubset(N):
            continue
        back = q.backward_submodule(q.forward_submodule(N))
        assert back.member_indices == N.member_indices
    for Nq in enumerate_submodules(q.module):
        fwd = q.forward_submodule(q.backward_submodule(Nq))
        assert fwd.member_indices == Nq.member_indices


# -- submodule generation and membership ----------------------------------------


def test_submodule_generate_examples(z4_plane):
    N = submodule_generate(z4_plane, [(2, 0)])
    assert members_of(N) == {(0, 0), (2, 0)}
    assert members_of(submodule_generate(z4_plane, [])) == {(0, 0)}
    assert submodule_generate(z4_plane, [(1, 0), (0, 1)]).size == 16


def test_contains(z4_line):
    N = submodule_generate(z4_line, [(2,)])
    assert contains(N, (2,))
    assert not contains(N, (1,))
    assert contains(N, (0,))


def test_submodule_contains_reduces_vectors():
    M = presented_module(make_zn(4), 1, [(2,)])
    N = zero_submodule(M)
    # (2,) reduces to the zero coset in Z/4 / <2>
    assert (2,) in N and (1,) not in N


# -- colon ideals -----------------------------------------------------------------


def test_colon_ideal_examples(z4_line, z4_plane):
    N0 = zero_submodule(z4_line)
    assert colon_ideal(N0, (2,)).members == frozenset({0, 2})
    N = submodule_generate(z4_line, [(2,)])
    assert colon_ideal(N, (2,)).members == frozenset(range(4))  # m in N
    N2 = submodule_generate(z4_plane, [(2, 0)])
    assert colon_ideal(N2, (0, 2)).members == frozenset({0, 2})


def test_colon_ideal_is_always_an_ideal(z4_plane):
    for N in enumerate_submodules(z4_plane):
        for rep in z4_plane.elements:
            I = colon_ideal(N, rep)
            assert is_ideal_members(z4_plane.ring, I.members)


def test_colon_module_examples(z4_plane):
    two_m = submodule_generate(z4_plane, [(2, 0), (0, 2)])
    assert colon_module(two_m, z4_plane).members == frozenset({0, 2})
    assert colon_module(full_submodule(z4_plane), z4_plane).members == frozenset(range(4))
    z6_plane = free_module(make_zn(6), 2)
    assert colon_module(zero_submodule(z6_plane), z6_plane).members == frozenset({0})


def test_colon_module_is_intersection_of_element_colons(z4_plane):
    for N in enumerate_submodules(z4_plane):
        expected = frozenset(range(4))
        for rep in z4_plane.elements:
            expected &= colon_ideal(N, rep).members
        assert colon_module(N, z4_plane).members == expected


def test_colon_module_contained_in_every_colon_ideal(z4_plane):
    for N in enumerate_submodules(z4_plane):
        cm = colon_module(N, z4_plane).members
        for rep in z4_plane.elements:
            assert cm <= colon_ideal(N, rep).members


# -- ideal action -----------------------------------------------------------------


def test_ideal_times_module_examples(z4_plane):
    ring = z4_plane.ring
    two = ideal_generate(ring, [2])
    N = ideal_times_module(two, z4_plane)
    assert members_of(N) == {(0, 0), (0, 2), (2, 0), (2, 2)}
    assert ideal_times_module(zero_ideal(ring), z4_plane).is_zero
    assert ideal_times_module(unit_ideal(ring), z4_plane).size == 16


def test_colon_module_action_is_contained_in_submodule(z4_plane):
    # (N : M) * M <= N for every submodule N
    for N in enumerate_submodules(z4_plane):
        I = colon_module(N, z4_plane)
        assert ideal_times_module(I, z4_plane).issubset(N)


# -- intersection and join ---------------------------------------------------------


def test_intersect_and_join_examples(z4_line, z4_plane):
    two = submodule_generate(z4_line, [(2,)])
    whole = full_submodule(z4_line)
    assert intersect(two, whole).member_indices == two.member_indices
    assert intersect(two, two).member_indices == two.member_indices
    a = submodule_generate(z4_plane, [(2, 0)])
    b = submodule_generate(z4_plane, [(0, 2)])
    assert members_of(join(a, b)) == {(0, 0), (0, 2), (2, 0), (2, 2)}


def test_intersect_rejects_module_mismatch(z4_line, z4_plane):
    with pytest.raises(ValueError):
        intersect(zero_submodule(z4_line), zero_submodule(z4_plane))
    with pytest.raises(ValueError):
        join(zero_submodule(z4_line), zero_submodule(z4_plane))


# -- lattice enumeration ------------------------------------------------------------


def test_enumerate_submodules_examples(z4_line):
    lat = enumerate_submodules(z4_line)
    assert [members_of(N) for N in lat] == [{(0,)}, {(0,), (2,)}, {(0,), (1,), (2,), (3,)}]
    z2_plane = free_module(make_zn(2), 2)
    assert len(enumerate_submodules(z2_plane)) == 5
    zero_mod = free_module(make_zn(2), 0)
    assert len(enumerate_submodules(zero_mod)) == 1


def test_enumerate_submodules_matches_subset_oracle():
    cases = [
        free_module(make_zn(4), 1),
        free_module(make_zn(2), 2),
        free_module(make_zn(6), 1),
        free_module(make_zn(4), 2),          # 16 elements
        presented_module(make_zn(4), 2, [(2, 2)]),
        free_module(make_zn(12), 1),
    ]
    for M in cases:
        expected = sorted(oracles.all_submodule_sets(M),
                          key=lambda s: (len(s), sorted(s)))
        got = enumerate_submodules(M)
        assert [sorted(N.member_indices) for N in got] == [sorted(s) for s in expected]


def test_enumerate_submodules_closure_invariants(z4_plane):
    lat = enumerate_submodules(z4_plane)
    seen = set()
    for N in lat:
        assert N.member_indices not in seen
        seen.add(N.member_indices)
        regen = submodule_generate(z4_plane, list(N.generator_indices))
        assert regen.member_indices == N.member_indices


def test_enumerate_submodules_bound(z4_plane):
    with pytest.raises(BoundExceededError) as err:
        enumerate_submodules(z4_plane, lattice_bound=8)
    assert "--lattice-bound" in str(err.value)


def test_rank_zero_module_fully_supported(z4):
    M = free_module(z4, 0)
    assert M.element_count == 1
    assert enumerate_submodules(M)[0].size == 1
    N = zero_submodule(M)
    assert colon_ideal(N, ()).members == frozenset(range(4))
    assert not N.is_proper
