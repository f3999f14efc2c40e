"""Finitely presented modules over finite rings.

A module is presented as R^rank modulo the relation submodule generated by a
list of relation vectors.  Construction enumerates the ambient space once,
picks the lexicographically least vector of each coset as its canonical
representative, and from then on works with dense element indices; the tuple
representatives only appear at the API surface.  Everything is immutable
after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Sequence

from .rings import (
    FiniteRing,
    Ideal,
    RingElement,
    additive_closure,
    is_ideal_members,
)

DEFAULT_ELEMENT_BOUND = 65536
DEFAULT_LATTICE_BOUND = 256

_PRESENTATION_CACHE: dict[tuple, "ModulePresentation"] = {}


class BoundExceededError(RuntimeError):
    """A requested enumeration is larger than the configured bound."""

    def __init__(self, what: str, needed: int, bound: int, flag: str):
        super().__init__(
            f"{what} needs {needed} elements but the bound is {bound}; "
            f"raise it with {flag}")
        self.needed = needed
        self.bound = bound
        self.flag = flag


class ModulePresentation:
    """M = R^rank / K with explicit canonical coset representatives.

    ``relations`` generate K inside R^rank.  ``elements[i]`` is the canonical
    representative (a tuple of ring codes) of the i-th coset, listed in
    lexicographic order, so index order and representative order agree.
    Addition and scalar action are exposed on indices (``add_i``,
    ``scale_i``) with lazily built rows, which keeps huge free modules cheap
    to construct while making the small quotients used by the predicates
    fast to scan.
    """

    def __init__(self, ring: FiniteRing, rank: int, relations=(),
                 element_bound: int = DEFAULT_ELEMENT_BOUND):
        if rank < 0:
            raise ValueError(f"rank must be non-negative, got {rank}")
        relations = tuple(tuple(_as_code(ring, c) for c in rel) for rel in relations)
        for rel in relations:
            if len(rel) != rank:
                raise ValueError(
                    f"relation {rel} has length {len(rel)}, expected rank {rank}")
        ambient = ring.size ** rank
        if ambient > element_bound:
            raise BoundExceededError(
                f"enumerating {ring.descriptor}^{rank}", ambient, element_bound,
                "--element-bound")
        self.ring = ring
        self.rank = rank
        self.relations = relations

        zero_vec = (ring.zero,) * rank
        add = ring.add

        def vadd(u, v):
            return tuple(add(a, b) for a, b in zip(u, v))

        multiples = {tuple(ring.mul(r, c) for c in rel)
                     for rel in relations for r in range(ring.size)}
        multiples.discard(zero_vec)
        self.relation_members = frozenset(
            additive_closure(zero_vec, multiples, vadd))

        # Lexicographic sweep: the first unseen vector of a coset is its
        # lexicographically least member, hence the canonical representative.
        rep_of: dict[tuple, tuple] = {}
        reps: list[tuple] = []
        k_list = sorted(self.relation_members)
        for vec in _cartesian(range(ring.size), repeat=rank):
            if vec in rep_of:
                continue
            reps.append(vec)
            for kv in k_list:
                rep_of[vadd(vec, kv)] = vec
        self.elements: tuple[tuple, ...] = tuple(reps)
        self.element_count = len(reps)
        assert self.element_count * len(self.relation_members) == ambient
        self._rep_of = rep_of
        self._index = {rep: i for i, rep in enumerate(reps)}
        self.zero_index = self._index[zero_vec]

        self._vadd = vadd
        self._add_rows: dict[int, list[int]] = {}
        self._scale_rows: dict[int, list[int]] = {}
        self._image_sets: dict[int, frozenset[int]] = {}
        self._action_cache: dict[frozenset[int], frozenset[int]] = {}
        self._cyclic_cache: dict[int, frozenset[int]] = {}
        self._lattice: list[Submodule] | None = None
        self._quotients: dict[frozenset[int], "Quotient"] = {}
        self._semiprime_cache: dict = {}
        self._prime_cache: dict = {}
        self._radical_cache: dict = {}
        self._hash = hash((ring, rank, self.relation_members))

    # -- canonical forms ------------------------------------------------------

    @property
    def is_free(self) -> bool:
        return len(self.relation_members) == 1

    def reduce(self, vec: Sequence[int]) -> tuple:
        """Canonical representative of the coset of ``vec``."""
        vec = tuple(_as_code(self.ring, c) for c in vec)
        if len(vec) != self.rank:
            raise ValueError(f"vector {vec} has length {len(vec)}, expected {self.rank}")
        return self._rep_of[vec]

    def index_of(self, item) -> int:
        """Element index of a vector, representative, or :class:`ModuleElement`."""
        if isinstance(item, ModuleElement):
            if item.module is not self and item.module != self:
                raise ValueError("element from a different module")
            return self._index[item.rep]
        return self._index[self.reduce(item)]

    def element(self, vec) -> "ModuleElement":
        return ModuleElement(self, self.reduce(vec))

    def element_at(self, index: int) -> "ModuleElement":
        return ModuleElement(self, self.elements[index])

    # -- index arithmetic ------------------------------------------------------

    def add_i(self, i: int, j: int) -> int:
        row = self._add_rows.get(i)
        if row is None:
            ei = self.elements[i]
            idx, rep_of, vadd = self._index, self._rep_of, self._vadd
            row = [idx[rep_of[vadd(ei, e)]] for e in self.elements]
            self._add_rows[i] = row
        return row[j]

    def scale_i(self, r: int, i: int) -> int:
        return self.scaled_row(r)[i]

    def scaled_row(self, r: int) -> list[int]:
        """Index row of the scalar action of ring code ``r``."""
        row = self._scale_rows.get(r)
        if row is None:
            mul = self.ring.mul
            idx, rep_of = self._index, self._rep_of
            row = [idx[rep_of[tuple(mul(r, c) for c in e)]] for e in self.elements]
            self._scale_rows[r] = row
        return row

    def image_set(self, r: int) -> frozenset[int]:
        """Member indices of r*M."""
        out = self._image_sets.get(r)
        if out is None:
            out = frozenset(self.scaled_row(r))
            self._image_sets[r] = out
        return out

    @property
    def unit_indices(self) -> tuple[int, ...]:
        """Indices of the images of the standard basis vectors (generators of M)."""
        out = []
        for i in range(self.rank):
            vec = tuple(self.ring.one if j == i else self.ring.zero
                        for j in range(self.rank))
            out.append(self._index[self._rep_of[vec]])
        return tuple(out)

    def ideal_action(self, codes: frozenset[int]) -> frozenset[int]:
        """Member indices of I*M for the ideal with member codes ``codes``.

        I*M is generated additively by {r * e_j : r in I, e_j a basis image},
        because every product r*x with x = sum r_j e_j expands into such
        terms.  Cached per member set; colon ideals repeat heavily.
        """
        cached = self._action_cache.get(codes)
        if cached is not None:
            return cached
        gens = {self.scale_i(r, u) for r in codes for u in self.unit_indices}
        gens.discard(self.zero_index)
        members = frozenset(additive_closure(self.zero_index, gens, self.add_i))
        self._action_cache[codes] = members
        return members

    def cyclic_members(self, i: int) -> frozenset[int]:
        """Member indices of R*m for the element at index ``i``."""
        out = self._cyclic_cache.get(i)
        if out is None:
            out = frozenset(self.scale_i(r, i) for r in range(self.ring.size))
            self._cyclic_cache[i] = out
        return out

    # -- value semantics --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModulePresentation):
            return NotImplemented
        return (self.ring == other.ring and self.rank == other.rank
                and self.relation_members == other.relation_members)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        rel = "" if not self.relations else f" mod <{len(self.relations)} relations>"
        return f"Module({self.ring.descriptor}^{self.rank}{rel}, {self.element_count} elements)"


@dataclass(frozen=True)
class ModuleElement:
    """A module element: its module plus the canonical representative vector."""

    module: ModulePresentation
    rep: tuple

    def __post_init__(self):
        if self.rep not in self.module._index:
            raise ValueError(f"{self.rep} is not a canonical representative")

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        m = self.module
        i = m.add_i(m.index_of(self), m.index_of(other))
        return ModuleElement(m, m.elements[i])

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def __neg__(self) -> "ModuleElement":
        m = self.module
        minus_one = m.ring.neg(m.ring.one)
        return ModuleElement(m, m.elements[m.scale_i(minus_one, m.index_of(self))])

    def __rmul__(self, r) -> "ModuleElement":
        if isinstance(r, RingElement):
            r = r.code
        m = self.module
        return ModuleElement(m, m.elements[m.scale_i(r, m.index_of(self))])

    def __repr__(self) -> str:
        return f"{self.rep}@{self.module!r}"


class Submodule:
    """A submodule as an explicit member set plus the generators that built it.

    ``member_indices`` is a frozenset of element indices into the parent
    module; the public ``members``/``generators`` views give representative
    vectors in lexicographic order.
    """

    __slots__ = ("module", "member_indices", "generator_indices", "_hash")

    def __init__(self, module: ModulePresentation, member_indices: frozenset[int],
                 generator_indices: tuple[int, ...]):
        self.module = module
        self.member_indices = member_indices
        self.generator_indices = generator_indices
        self._hash = hash((module._hash, member_indices))

    @property
    def members(self) -> tuple[tuple, ...]:
        els = self.module.elements
        return tuple(els[i] for i in sorted(self.member_indices))

    @property
    def generators(self) -> tuple[tuple, ...]:
        els = self.module.elements
        return tuple(els[i] for i in self.generator_indices)

    @property
    def size(self) -> int:
        return len(self.member_indices)

    @property
    def is_proper(self) -> bool:
        return self.size < self.module.element_count

    @property
    def is_zero(self) -> bool:
        return self.member_indices == frozenset({self.module.zero_index})

    def __contains__(self, item) -> bool:
        if isinstance(item, int):
            return item in self.member_indices
        return self.module.index_of(item) in self.member_indices

    def issubset(self, other: "Submodule") -> bool:
        return self.member_indices <= other.member_indices

    def __eq__(self, other) -> bool:
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.module == other.module and self.member_indices == other.member_indices

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Submodule({self.size} of {self.module.element_count} elements)"


# -- constructors ---------------------------------------------------------------


def presented_module(ring: FiniteRing, rank: int, relations=(),
                     element_bound: int = DEFAULT_ELEMENT_BOUND) -> ModulePresentation:
    """Build (or reuse) the presentation R^rank / <relations>.

    Presentations are interned on (ring, rank, relation submodule), so equal
    presentations share element tables and caches.
    """
    mod = ModulePresentation(ring, rank, relations, element_bound)
    key = (ring.descriptor, rank, mod.relation_members)
    cached = _PRESENTATION_CACHE.get(key)
    if cached is not None:
        return cached
    _PRESENTATION_CACHE[key] = mod
    return mod


def free_module(ring: FiniteRing, rank: int,
                element_bound: int = DEFAULT_ELEMENT_BOUND) -> ModulePresentation:
    """The free module R^rank (empty relation list)."""
    return presented_module(ring, rank, (), element_bound)


def zero_submodule(M: ModulePresentation) -> Submodule:
    return Submodule(M, frozenset({M.zero_index}), ())


def full_submodule(M: ModulePresentation) -> Submodule:
    return Submodule(M, frozenset(range(M.element_count)), M.unit_indices)


def submodule_generate(M: ModulePresentation, gens) -> Submodule:
    """Smallest submodule of ``M`` containing ``gens``."""
    gen_indices = tuple(M.index_of(g) if not isinstance(g, int) else g
                        for g in gens)
    return _generate_from_indices(M, gen_indices)


def _generate_from_indices(M: ModulePresentation, gen_indices) -> Submodule:
    steps = {M.scale_i(r, i) for i in gen_indices for r in range(M.ring.size)}
    steps.discard(M.zero_index)
    members = frozenset(additive_closure(M.zero_index, steps, M.add_i))
    return Submodule(M, members, tuple(gen_indices))


def contains(N: Submodule, m) -> bool:
    """Membership of an element in a submodule (on canonical representatives)."""
    return m in N


# -- colon ideals and ideal action ------------------------------------------------


def colon_codes(N: Submodule, m_index: int) -> frozenset[int]:
    """Member codes of the colon ideal (N : m) = {r : r*m in N}."""
    M = N.module
    ms = N.member_indices
    return frozenset(r for r in range(M.ring.size) if M.scaled_row(r)[m_index] in ms)


def colon_ideal(N: Submodule, m) -> Ideal:
    """The colon ideal (N : m) as a full :class:`~modradical.rings.Ideal`."""
    M = N.module
    codes = colon_codes(N, M.index_of(m) if not isinstance(m, int) else m)
    assert is_ideal_members(M.ring, codes), \
        f"colon set {sorted(codes)} is not an ideal in {M.ring.descriptor}"
    return Ideal(M.ring, codes, tuple(sorted(codes)))


def colon_module(N: Submodule, M: ModulePresentation) -> Ideal:
    """(N : M) = {r : r*x in N for every x in M}.

    Checking the basis images suffices: N is closed under sums and scalar
    multiples, so r*e_j in N for all j already forces r*x in N for every x.
    """
    if N.module != M:
        raise ValueError("submodule does not live in the given module")
    ms = N.member_indices
    codes = frozenset(
        r for r in range(M.ring.size)
        if all(M.scaled_row(r)[u] in ms for u in M.unit_indices))
    assert is_ideal_members(M.ring, codes)
    return Ideal(M.ring, codes, tuple(sorted(codes)))


def ideal_times_module(I: Ideal, M: ModulePresentation) -> Submodule:
    """The submodule I*M, generated by {r * e_j : r a generator of I}."""
    if I.ring != M.ring:
        raise ValueError("ideal and module have different base rings")
    members = M.ideal_action(I.members)
    gens = tuple(dict.fromkeys(
        M.scale_i(r, u) for r in I.generators for u in M.unit_indices))
    return Submodule(M, members, gens)


# -- lattice operations ------------------------------------------------------------


def intersect(N1: Submodule, N2: Submodule) -> Submodule:
    """Set intersection of two submodules (always a submodule)."""
    if N1.module != N2.module:
        raise ValueError("submodules of different modules")
    members = N1.member_indices & N2.member_indices
    return Submodule(N1.module, members, tuple(sorted(members)))


def join(N1: Submodule, N2: Submodule) -> Submodule:
    """Smallest submodule containing both, i.e. the sum N1 + N2."""
    if N1.module != N2.module:
        raise ValueError("submodules of different modules")
    M = N1.module
    members = _sum_sets(M, N1.member_indices, N2.member_indices)
    return Submodule(M, members, N1.generator_indices + N2.generator_indices)


def _sum_sets(M: ModulePresentation, S: frozenset[int], C: frozenset[int]) -> frozenset[int]:
    # S + C one coset of S at a time: if c already landed, so did all of S + c.
    total = set(S)
    s_list = list(S)
    for c in sorted(C):
        if c not in total:
            add_row = M._add_rows.get(c)
            if add_row is None:
                M.add_i(c, c)
                add_row = M._add_rows[c]
            total.update(add_row[s] for s in s_list)
    return frozenset(total)


def enumerate_submodules(M: ModulePresentation,
                         lattice_bound: int = DEFAULT_LATTICE_BOUND) -> list[Submodule]:
    """Every submodule of ``M``, by join-closure over cyclic submodules.

    Starts from the zero submodule and repeatedly joins known submodules
    with cyclic ones until nothing new appears; every submodule is a join of
    cyclics, so the sweep is exhaustive.  The result is sorted by (size,
    member list) and cached on the module.
    """
    if M.element_count > lattice_bound:
        raise BoundExceededError(
            f"submodule lattice of {M!r}", M.element_count, lattice_bound,
            "--lattice-bound")
    if M._lattice is not None:
        return list(M._lattice)
    cyclic_gen: dict[frozenset[int], int] = {}
    for i in range(M.element_count):
        cyclic_gen.setdefault(M.cyclic_members(i), i)
    cyclics = sorted(cyclic_gen, key=lambda ms: (len(ms), sorted(ms)))
    zero_ms = frozenset({M.zero_index})
    gens_of: dict[frozenset[int], tuple[int, ...]] = {zero_ms: ()}
    frontier = [zero_ms]
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyclics:
                if C <= S:
                    continue
                J = _sum_sets(M, S, C)
                if J not in gens_of:
                    gens_of[J] = gens_of[S] + (cyclic_gen[C],)
                    nxt.append(J)
        frontier = nxt
    out = [Submodule(M, ms, gens) for ms, gens in gens_of.items()]
    out.sort(key=lambda N: (N.size, sorted(N.member_indices)))
    M._lattice = out
    return list(out)


# -- quotients -----------------------------------------------------------------------


class Quotient:
    """The quotient M/M' together with its forward and backward coset maps."""

    def __init__(self, source: ModulePresentation, sub: Submodule):
        if sub.module != source:
            raise ValueError("submodule does not live in the given module")
        self.source = source
        self.submodule = sub
        relations = source.relations + sub.generators
        # the ambient space was already enumerated for the source module
        ambient = source.ring.size ** source.rank
        self.module = presented_module(source.ring, source.rank, relations,
                                       element_bound=max(ambient, DEFAULT_ELEMENT_BOUND))
        q = self.module
        self.forward_row = [q.index_of(vec) for vec in source.elements]

    def forward(self, m) -> ModuleElement:
        """Image in M/M' of an element of M."""
        i = self.source.index_of(m) if not isinstance(m, int) else m
        return self.module.element_at(self.forward_row[i])

    def forward_submodule(self, N: Submodule) -> Submodule:
        """Image of a submodule of M (its coset set) in M/M'."""
        if N.module != self.source:
            raise ValueError("submodule of a different module")
        members = frozenset(self.forward_row[i] for i in N.member_indices)
        gens = tuple(dict.fromkeys(self.forward_row[i] for i in N.generator_indices))
        return Submodule(self.module, members, gens)

    def backward_submodule(self, Nq: Submodule) -> Submodule:
        """Full preimage in M of a submodule of M/M'."""
        if Nq.module != self.module:
            raise ValueError("submodule of a different quotient")
        src = self.source
        lifted = tuple(src.index_of(self.module.elements[i])
                       for i in Nq.generator_indices)
        out = _generate_from_indices(
            src, lifted + self.submodule.generator_indices)
        preimage = frozenset(i for i in range(src.element_count)
                             if self.forward_row[i] in Nq.member_indices)
        assert out.member_indices == preimage
        return out


def quotient_module(M: ModulePresentation, sub: Submodule) -> Quotient:
    """Quotient presentation M/M' plus coset maps, cached per submodule."""
    cached = M._quotients.get(sub.member_indices)
    if cached is None:
        cached = Quotient(M, sub)
        M._quotients[sub.member_indices] = cached
    return cached


def _as_code(ring: FiniteRing, c) -> int:
    if isinstance(c, RingElement):
        if c.ring != ring:
            raise ValueError("scalar from a different ring")
        return c.code
    code = int(c)
    if not 0 <= code < ring.size:
        raise ValueError(f"scalar {code} out of range for {ring.descriptor}")
    return code
