"""Semiprime submodules and radicals over finite commutative rings.

Exact, fully enumerative algebra on explicit finite rings and finitely
presented modules: primeness/semiprimeness predicates with replayable
witnesses, three independent radical computations, and a verification
harness that certifies the underlying structure theorems over instance
corpora.
"""

from .rings import (
    FiniteRing,
    Ideal,
    RingConstructionError,
    RingElement,
    enumerate_ideals,
    ideal_generate,
    is_prime_ideal,
    is_semiprime_ideal,
    make_gf,
    make_product,
    make_zn,
    nilpotent_radical_of_ideal,
    unit_ideal,
    zero_ideal,
)
from .modules import (
    BoundExceededError,
    ModuleElement,
    ModulePresentation,
    Quotient,
    Submodule,
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
from .predicates import (
    NotionRow,
    PredicateWitness,
    Verdict,
    compare_notions,
    is_cimpric_semiprime,
    is_dauns_semiprime,
    is_prime_submodule,
    is_semiprime_submodule,
)
from .radical import (
    RadicalGeneratorWitness,
    RadicalStep,
    RadicalTrace,
    first_radical,
    prime_submodules,
    radical_by_iteration,
    radical_by_primes,
    smallest_semiprime_over,
)
from .harness import (
    CLAIM_IDS,
    CorpusSpec,
    DEFAULT_CORPUS_SPEC,
    Finding,
    Instance,
    VerificationReport,
    expand_corpus,
    find_separation,
    parse_corpus_spec,
    verify_all,
)
from .instance import (
    InstanceFile,
    ParseError,
    parse_instance,
    parse_ring_descriptor,
    render_instance,
)

__all__ = [
    "BoundExceededError",
    "CLAIM_IDS",
    "CorpusSpec",
    "DEFAULT_CORPUS_SPEC",
    "Finding",
    "FiniteRing",
    "Ideal",
    "Instance",
    "InstanceFile",
    "ModuleElement",
    "ModulePresentation",
    "NotionRow",
    "ParseError",
    "PredicateWitness",
    "Quotient",
    "RadicalGeneratorWitness",
    "RadicalStep",
    "RadicalTrace",
    "RingConstructionError",
    "RingElement",
    "Submodule",
    "Verdict",
    "VerificationReport",
    "colon_ideal",
    "colon_module",
    "compare_notions",
    "contains",
    "enumerate_ideals",
    "enumerate_submodules",
    "expand_corpus",
    "find_separation",
    "first_radical",
    "free_module",
    "full_submodule",
    "ideal_generate",
    "ideal_times_module",
    "intersect",
    "is_cimpric_semiprime",
    "is_dauns_semiprime",
    "is_prime_ideal",
    "is_prime_submodule",
    "is_semiprime_ideal",
    "is_semiprime_submodule",
    "join",
    "make_gf",
    "make_product",
    "make_zn",
    "nilpotent_radical_of_ideal",
    "parse_corpus_spec",
    "parse_instance",
    "parse_ring_descriptor",
    "presented_module",
    "prime_submodules",
    "quotient_module",
    "radical_by_iteration",
    "radical_by_primes",
    "render_instance",
    "smallest_semiprime_over",
    "submodule_generate",
    "unit_ideal",
    "verify_all",
    "zero_ideal",
    "zero_submodule",
]
