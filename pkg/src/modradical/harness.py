"""Corpus generation and exhaustive certification of the structure claims.

``expand_corpus`` deterministically turns a :class:`CorpusSpec` into a list
of (module, submodules) instances; ``verify_all`` then checks every claim on
every applicable instance and reports per-claim tallies.  Failures are data,
not errors: a counterexample is serialized as instance-file text so it can
be rebuilt and re-checked (:meth:`Finding.replay`) long after the run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .instance import format_vec, format_vec_list, parse_instance, parse_ring_descriptor
from .modules import (
    DEFAULT_ELEMENT_BOUND,
    DEFAULT_LATTICE_BOUND,
    ModulePresentation,
    Submodule,
    colon_ideal,
    enumerate_submodules,
    intersect,
    presented_module,
    quotient_module,
    submodule_generate,
    zero_submodule,
    full_submodule,
)
from .predicates import (
    is_cimpric_semiprime,
    is_dauns_semiprime,
    is_prime_submodule,
    is_semiprime_submodule,
)
from .radical import (
    first_radical,
    prime_submodules,
    radical_by_iteration,
    radical_by_primes,
    smallest_semiprime_over,
)
from .rings import is_semiprime_ideal

# One claim id per certified proposition/theorem; the manifest test pins this.
CLAIM_IDS = (
    "PROP-COLON-SEMIPRIME",
    "PROP-FREE-EQUIV",
    "PROP-INTERSECTION",
    "PROP-PRIME-IMPLIES-SP",
    "PROP-QUOTIENT-CORRESPONDENCE",
    "THM-ITERATION",
    "THM-RADICAL-EQ-SEMIPRIME",
)

SEPARATION_PAIRS = ("semiprime-vs-prime", "dauns-vs-semiprime")


@dataclass(frozen=True)
class CorpusSpec:
    """Deterministic recipe for an instance corpus.

    ``rings`` hold descriptor strings; ``relation_strategies`` are a subset
    of {"free", "cyclic", "random"}; ``element_bound`` caps the size of
    modules admitted to the corpus; modules at most ``lattice_bound`` large
    get their full submodule lattice, larger ones a seeded random sample.
    """

    rings: tuple[str, ...]
    max_rank: int = 2
    relation_strategies: tuple[str, ...] = ("free", "cyclic")
    element_bound: int = 64
    lattice_bound: int = 256
    seed: int = 0
    relation_samples: int = 4
    submodule_samples: int = 8


DEFAULT_CORPUS_SPEC = CorpusSpec(
    rings=("Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "Z/9", "Z/12",
           "GF(4) poly=[1,1,1]", "product(Z/2, Z/4)"),
)


@dataclass(frozen=True)
class Instance:
    """One corpus entry: a module plus the submodules selected for it."""

    instance_id: str
    module: ModulePresentation
    submodules: tuple[Submodule, ...]
    lattice_complete: bool


def expand_corpus(spec: CorpusSpec) -> list[Instance]:
    """Deterministic instance list for ``spec`` (same spec, same list)."""
    instances: list[Instance] = []
    seen: set = set()
    for desc in spec.rings:
        ring = parse_ring_descriptor(desc)
        for rank in range(1, spec.max_rank + 1):
            if ring.size ** rank > DEFAULT_ELEMENT_BOUND:
                continue
            for strategy in ("free", "cyclic", "random"):
                if strategy not in spec.relation_strategies:
                    continue
                for rels in _relation_lists(spec, ring, rank, strategy):
                    module = presented_module(ring, rank, rels)
                    if module.element_count > spec.element_bound:
                        continue
                    key = (ring.descriptor, rank, module.relation_members)
                    if key in seen:
                        continue
                    seen.add(key)
                    instance_id = (f"{ring.descriptor} rank={rank} "
                                   f"relations={format_vec_list(module.relations)}")
                    subs, complete = _select_submodules(spec, module, instance_id)
                    instances.append(Instance(instance_id, module, subs, complete))
    return instances


def _relation_lists(spec: CorpusSpec, ring, rank: int, strategy: str):
    from itertools import product as cartesian
    if strategy == "free":
        yield ()
    elif strategy == "cyclic":
        for vec in cartesian(range(ring.size), repeat=rank):
            yield (vec,)
    else:
        rng = random.Random(f"{spec.seed}|{ring.descriptor}|{rank}|relations")
        for _ in range(spec.relation_samples):
            count = rng.randint(1, max(1, rank))
            yield tuple(tuple(rng.randrange(ring.size) for _ in range(rank))
                        for _ in range(count))


def _select_submodules(spec: CorpusSpec, module: ModulePresentation,
                       instance_id: str) -> tuple[tuple[Submodule, ...], bool]:
    if module.element_count <= spec.lattice_bound:
        return tuple(enumerate_submodules(module, spec.lattice_bound)), True
    rng = random.Random(f"{spec.seed}|{instance_id}|submodules")
    found = {zero_submodule(module), full_submodule(module)}
    for _ in range(spec.submodule_samples):
        count = rng.randint(1, 3)
        gens = [module.elements[rng.randrange(module.element_count)]
                for _ in range(count)]
        found.add(submodule_generate(module, gens))
    ordered = sorted(found, key=lambda N: (N.size, sorted(N.member_indices)))
    return tuple(ordered), False


# -- findings ----------------------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    """A failed check, serialized so it can be rebuilt and re-run."""

    claim_id: str
    instance_text: str
    detail: str

    def replay(self) -> bool:
        """Rebuild the instance from its serialized text and re-run the check.

        True iff the check still fails, i.e. the finding reproduces.
        """
        inst = parse_instance(self.instance_text)
        return _replay_check(self.claim_id, inst.module, inst.submodules) is not None


def _serialize(module: ModulePresentation, subs: dict[str, Submodule]) -> str:
    lines = [f"ring {module.ring.descriptor}",
             f"module rank={module.rank} relations={format_vec_list(module.relations)}"]
    for name, sub in subs.items():
        lines.append(f"submodule {name} gens={format_vec_list(sub.generators)}")
    return "\n".join(lines) + "\n"


# -- per-claim unit checks -----------------------------------------------------------
#
# Each checker takes the module plus named submodules and returns a failure
# description or None.  ``verify_all`` and ``Finding.replay`` share them.


def _check_prime_implies_sp(module, subs):
    N = subs["N"]
    if is_prime_submodule(N).holds and not is_semiprime_submodule(N).holds:
        return "prime submodule is not semiprime"
    return None


def _check_colon_semiprime(module, subs):
    N = subs["N"]
    if not is_semiprime_submodule(N).holds:
        return None
    if not is_dauns_semiprime(N).holds:
        return "semiprime submodule fails the squares condition"
    for rep in module.elements:
        if not is_semiprime_ideal(colon_ideal(N, rep)):
            return f"colon ideal at {format_vec(rep)} is not semiprime"
    return None


def _check_free_equiv(module, subs):
    if not module.is_free:
        return None
    N = subs["N"]
    if is_semiprime_submodule(N).holds != is_cimpric_semiprime(N).holds:
        return "semiprime and coordinate conditions disagree on a free module"
    return None


def _check_intersection(module, subs):
    N1, N2 = subs["N1"], subs["N2"]
    if not (is_semiprime_submodule(N1).holds and is_semiprime_submodule(N2).holds):
        return None
    if not is_semiprime_submodule(intersect(N1, N2)).holds:
        return "intersection of two semiprime submodules is not semiprime"
    return None


def _check_iteration(module, subs, lattice_ok=True,
                     lattice_bound=DEFAULT_LATTICE_BOUND):
    N = subs["N"]
    fixpoint, trace = radical_by_iteration(N)
    prev = trace.start
    for step in trace.steps:
        if not prev.member_indices <= step.submodule.member_indices:
            return f"chain shrinks at step {step.index}"
        for w in step.witnesses:
            if not w.replays_against(prev):
                return f"step {step.index} witness {format_vec(w.m)} does not replay"
        prev = step.submodule
    if not is_semiprime_submodule(fixpoint).holds:
        return "iteration fixpoint is not semiprime"
    if lattice_ok:
        by_primes = radical_by_primes(N, lattice_bound)
        if fixpoint.member_indices != by_primes.member_indices:
            return ("iterated radical differs from the intersection of primes: "
                    f"{format_vec_list(fixpoint.members)} vs "
                    f"{format_vec_list(by_primes.members)}")
        fr = first_radical(N)
        for P in prime_submodules(module, lattice_bound):
            if N.issubset(P) and not fr.issubset(P):
                return ("one-step radical escapes the prime "
                        f"{format_vec_list(P.members)}")
    return None


def _check_radical_eq(module, subs, lattice_bound=DEFAULT_LATTICE_BOUND):
    N = subs["N"]
    by_primes = radical_by_primes(N, lattice_bound)
    smallest = smallest_semiprime_over(N, lattice_bound)
    if by_primes.member_indices != smallest.member_indices:
        return ("radical differs from the smallest semiprime overmodule: "
                f"{format_vec_list(by_primes.members)} vs "
                f"{format_vec_list(smallest.members)}")
    if N.is_proper:
        fixed = by_primes.member_indices == N.member_indices
        if is_semiprime_submodule(N).holds != fixed:
            return "semiprime does not coincide with being a radical submodule"
    return None


def _check_quotient(module, subs, lattice_ok=True,
                    lattice_bound=DEFAULT_LATTICE_BOUND,
                    available: tuple[Submodule, ...] | None = None):
    mp = subs["MP"]
    q = quotient_module(module, mp)
    if lattice_ok:
        above = [N for N in enumerate_submodules(module, lattice_bound)
                 if mp.issubset(N)]
        quotient_lattice = enumerate_submodules(q.module, lattice_bound)
    else:
        above = [N for N in (available or ()) if mp.issubset(N)]
        quotient_lattice = []
    for N in above:
        image = q.forward_submodule(N)
        if is_semiprime_submodule(N).holds != is_semiprime_submodule(image).holds:
            return (f"semiprimeness not preserved for {format_vec_list(N.members)} "
                    "under the quotient map")
        back = q.backward_submodule(image)
        if back.member_indices != N.member_indices:
            return f"backward(forward(N)) != N for {format_vec_list(N.members)}"
    if lattice_ok:
        sp_list = [N for N in above if is_semiprime_submodule(N).holds]
        sp_above = {q.forward_submodule(N).member_indices for N in sp_list}
        sp_quotient = {N.member_indices for N in quotient_lattice
                       if is_semiprime_submodule(N).holds}
        if len(sp_list) != len(sp_quotient) or sp_above != sp_quotient:
            return ("semiprime submodules above the kernel do not biject onto "
                    f"the quotient's: {len(sp_list)} vs {len(sp_quotient)}")
        for Nq in quotient_lattice:
            fwd = q.forward_submodule(q.backward_submodule(Nq))
            if fwd.member_indices != Nq.member_indices:
                return "forward(backward(Nq)) != Nq in the quotient"
    return None


def _check_sep_semiprime_not_prime(module, subs):
    N = subs["N"]
    if not N.is_proper:
        return None
    if is_semiprime_submodule(N).holds and not is_prime_submodule(N).holds:
        return "semiprime but not prime"
    return None


def _check_sep_dauns_not_semiprime(module, subs):
    N = subs["N"]
    if is_dauns_semiprime(N).holds and not is_semiprime_submodule(N).holds:
        return "satisfies the squares condition but is not semiprime"
    return None


def _replay_check(claim_id: str, module, subs):
    bound = max(DEFAULT_LATTICE_BOUND, module.element_count)
    if claim_id == "PROP-PRIME-IMPLIES-SP":
        return _check_prime_implies_sp(module, subs)
    if claim_id == "PROP-COLON-SEMIPRIME":
        return _check_colon_semiprime(module, subs)
    if claim_id == "PROP-FREE-EQUIV":
        return _check_free_equiv(module, subs)
    if claim_id == "PROP-INTERSECTION":
        return _check_intersection(module, subs)
    if claim_id == "PROP-QUOTIENT-CORRESPONDENCE":
        return _check_quotient(module, subs, lattice_bound=bound)
    if claim_id == "THM-ITERATION":
        return _check_iteration(module, subs, lattice_bound=bound)
    if claim_id == "THM-RADICAL-EQ-SEMIPRIME":
        return _check_radical_eq(module, subs, lattice_bound=bound)
    if claim_id == "SEP-SEMIPRIME-NOT-PRIME":
        return _check_sep_semiprime_not_prime(module, subs)
    if claim_id == "SEP-DAUNS-NOT-SEMIPRIME":
        return _check_sep_dauns_not_semiprime(module, subs)
    raise ValueError(f"unknown claim id {claim_id!r}")


# -- the certification run ------------------------------------------------------------


@dataclass
class ClaimResult:
    claim_id: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    findings: tuple[Finding, ...] = ()


@dataclass
class VerificationReport:
    spec: CorpusSpec
    instances: int
    submodules: int
    claims: tuple[ClaimResult, ...]
    wall_time: float

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.claims)

    @property
    def findings(self) -> tuple[Finding, ...]:
        out = []
        for c in self.claims:
            out.extend(c.findings)
        return tuple(out)


class _Tally:
    def __init__(self, claim_id: str):
        self.claim_id = claim_id
        self.checked = 0
        self.passed = 0
        self.failed = 0
        self.skipped = 0
        self.findings: list[Finding] = []

    def unit(self, module, subs, detail):
        self.checked += 1
        if detail is None:
            self.passed += 1
        else:
            self.failed += 1
            self.findings.append(
                Finding(self.claim_id, _serialize(module, subs), detail))

    def skip(self, count=1):
        self.skipped += count

    def result(self) -> ClaimResult:
        return ClaimResult(self.claim_id, self.checked, self.passed,
                           self.failed, self.skipped, tuple(self.findings))


def verify_all(spec: CorpusSpec) -> VerificationReport:
    """Check every claim on every applicable corpus instance.

    Lattice-dependent checks are skipped (and counted as such) on instances
    whose module exceeds the lattice bound; everything else still runs on
    the sampled submodules.
    """
    t0 = time.perf_counter()
    corpus = expand_corpus(spec)
    tallies = {cid: _Tally(cid) for cid in CLAIM_IDS}
    total_submodules = 0
    for inst in corpus:
        module = inst.module
        subs = inst.submodules
        total_submodules += len(subs)
        lattice_ok = inst.lattice_complete
        for N in subs:
            named = {"N": N}
            tallies["PROP-PRIME-IMPLIES-SP"].unit(
                module, named, _check_prime_implies_sp(module, named))
            tallies["PROP-COLON-SEMIPRIME"].unit(
                module, named, _check_colon_semiprime(module, named))
            if module.is_free:
                tallies["PROP-FREE-EQUIV"].unit(
                    module, named, _check_free_equiv(module, named))
            tallies["THM-ITERATION"].unit(
                module, named,
                _check_iteration(module, named, lattice_ok, spec.lattice_bound))
            if lattice_ok:
                tallies["THM-RADICAL-EQ-SEMIPRIME"].unit(
                    module, named,
                    _check_radical_eq(module, named, spec.lattice_bound))
            else:
                tallies["THM-RADICAL-EQ-SEMIPRIME"].skip()
        semis = [N for N in subs if is_semiprime_submodule(N).holds]
        for i, N1 in enumerate(semis):
            for N2 in semis[i + 1:]:
                named = {"N1": N1, "N2": N2}
                tallies["PROP-INTERSECTION"].unit(
                    module, named, _check_intersection(module, named))
        for mp in subs:
            named = {"MP": mp}
            tallies["PROP-QUOTIENT-CORRESPONDENCE"].unit(
                module, named,
                _check_quotient(module, named, lattice_ok, spec.lattice_bound,
                                available=subs))
    claims = tuple(tallies[cid].result() for cid in CLAIM_IDS)
    return VerificationReport(spec, len(corpus), total_submodules, claims,
                              time.perf_counter() - t0)


def parse_corpus_spec(text: str) -> CorpusSpec:
    """Parse a corpus spec file: one ``key value`` pair per line.

    Keys: ``rings`` (comma-separated descriptors), ``max_rank``,
    ``strategies`` (comma-separated), ``element_bound``, ``lattice_bound``,
    ``seed``, ``relation_samples``, ``submodule_samples``.  Missing keys take
    the defaults of :class:`CorpusSpec`; ``#`` starts a comment.
    """
    values: dict = {}
    int_keys = {"max_rank", "element_bound", "lattice_bound", "seed",
                "relation_samples", "submodule_samples"}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "rings":
            values["rings"] = tuple(_split_top_level(rest))
        elif key == "strategies":
            values["relation_strategies"] = tuple(
                s.strip() for s in rest.split(",") if s.strip())
        elif key in int_keys:
            try:
                values[key] = int(rest)
            except ValueError:
                raise ValueError(f"corpus spec line {line_no}: {key} needs an integer, "
                                 f"got {rest!r}") from None
        else:
            raise ValueError(f"corpus spec line {line_no}: unknown key {key!r}")
    if "rings" not in values:
        raise ValueError("corpus spec must declare a 'rings' line")
    for strategy in values.get("relation_strategies", ()):
        if strategy not in ("free", "cyclic", "random"):
            raise ValueError(f"unknown relation strategy {strategy!r}")
    for desc in values["rings"]:
        parse_ring_descriptor(desc)
    return CorpusSpec(**values)


def _split_top_level(text: str) -> list[str]:
    """Split on commas that are not nested inside () or []."""
    out, depth, current = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    tail = "".join(current).strip()
    if tail:
        out.append(tail)
    return out


def find_separation(spec: CorpusSpec, pair: str) -> list[Finding]:
    """All corpus instances where the weaker notion holds and the stronger fails.

    ``pair`` is ``"semiprime-vs-prime"`` or ``"dauns-vs-semiprime"``.  The
    result records observations, not counterexamples: the claims certified
    by :func:`verify_all` say nothing about these converses.
    """
    if pair not in SEPARATION_PAIRS:
        raise ValueError(f"unknown notion pair {pair!r}; expected one of {SEPARATION_PAIRS}")
    claim_id = ("SEP-SEMIPRIME-NOT-PRIME" if pair == "semiprime-vs-prime"
                else "SEP-DAUNS-NOT-SEMIPRIME")
    out = []
    for inst in expand_corpus(spec):
        for N in inst.submodules:
            named = {"N": N}
            detail = _replay_check(claim_id, inst.module, named)
            if detail is not None:
                out.append(Finding(claim_id, _serialize(inst.module, named), detail))
    return out
