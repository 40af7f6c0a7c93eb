"""Certified hamiltonian paths in cartesian powers of directed cycles.

The headline entry point is `hamiltonian_path(m, k, u, v)`, which returns a
trace-verified `PathCertificate` whenever the endpoint congruence
sum(v - u) = -1 (mod m) holds with k >= 3, and a `Refusal` explaining the
obstruction otherwise.  The `oracle` module provides independent brute-force
ground truth on small (possibly mixed-moduli) tori.
"""

from .torus import TorusSpec, Vertex, identity_perm, invert_perm, transposition
from .words import (
    Concat,
    ConstructionError,
    CycleRejection,
    CycleWitness,
    PathCertificate,
    Power,
    Symbol,
    Word,
    cycle_distance,
    endpoint,
    expand,
    flat_length,
    symbol_counts,
    trace,
    verify_ham_cycle,
    verify_ham_path,
    word_from_arcs,
    word_from_flat,
    word_from_text,
    word_to_flat,
    word_to_text,
)
from .cycles import (
    Case,
    CaseInfo,
    CaseNotApplicableError,
    any_cycle_power,
    classify_case,
    conjugate_cycle,
    even_distance_cycle_2d,
    even_distance_cycle_power,
    product_embed,
    staircase_a,
    staircase_b,
)
from .paths import (
    ArcForcingIso,
    Refusal,
    hamiltonian_path,
    path_for_even_m,
    path_for_odd_m,
    path_from_inner_cycle,
    prism_path_word,
)
from .oracle import (
    DEFAULT_CAP,
    HARD_CAP,
    EndpointReport,
    SizeCapError,
    conjecture_scan,
    endpoint_set,
    enumerate_torus_specs,
    ham_cycle_exists_2d,
    ham_cycle_witness,
    ham_path_exists,
    ham_path_witness,
)

__all__ = [
    "ArcForcingIso",
    "Case",
    "CaseInfo",
    "CaseNotApplicableError",
    "Concat",
    "ConstructionError",
    "CycleRejection",
    "CycleWitness",
    "DEFAULT_CAP",
    "EndpointReport",
    "HARD_CAP",
    "PathCertificate",
    "Power",
    "Refusal",
    "SizeCapError",
    "Symbol",
    "TorusSpec",
    "Vertex",
    "Word",
    "any_cycle_power",
    "classify_case",
    "conjecture_scan",
    "conjugate_cycle",
    "cycle_distance",
    "endpoint",
    "endpoint_set",
    "enumerate_torus_specs",
    "even_distance_cycle_2d",
    "even_distance_cycle_power",
    "expand",
    "flat_length",
    "ham_cycle_exists_2d",
    "ham_cycle_witness",
    "ham_path_exists",
    "ham_path_witness",
    "hamiltonian_path",
    "identity_perm",
    "invert_perm",
    "path_for_even_m",
    "path_for_odd_m",
    "path_from_inner_cycle",
    "prism_path_word",
    "product_embed",
    "staircase_a",
    "staircase_b",
    "symbol_counts",
    "trace",
    "transposition",
    "verify_ham_cycle",
    "verify_ham_path",
    "word_from_arcs",
    "word_from_flat",
    "word_from_text",
    "word_to_flat",
    "word_to_text",
]
