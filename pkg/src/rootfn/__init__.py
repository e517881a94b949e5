"""Root functions: isolated, maximal, non-vacuous Boolean functions.

A root function's true minterms form an independent dominating set of the
n-cube.  No stuck-at fault in an irredundant two-level circuit ever produces
one, and every other function is a faulty response of some root's circuit.
"""
from .boolfn import (
    Bounds,
    Minterm,
    TruthTable,
    cofactor,
    dominators_of,
    essentially_dominated,
    format_truth_table,
    hamming_distance,
    is_isolated,
    is_maximal,
    is_non_vacuous,
    is_root,
    neighbors,
    parse_truth_table,
    root_size_bounds,
    support,
)
from .construct import catalog, lift, parity_max_roots
from .enumeration import (
    Census,
    HypercubeGraph,
    all_roots,
    census,
    enumerate_roots,
    min_root_size,
    missing_cardinalities,
)
from .faultsim import (
    TwoLevelCircuit,
    audit_root_circuits,
    build_circuit,
    reachable_responses,
    simulate,
    synthesize_root_and_faults,
    universal_module_experiment,
)
from .sop import Cube, SopCover, irredundant_cover, prime_implicants, verify_irredundant
from .symmetry import NpTransform, apply_transform, np_canonical, np_orbit

__version__ = "0.1.0"
