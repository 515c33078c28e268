"""Verification lab for the lattice-point constructions behind quadratic
reciprocity: three independent Legendre symbol engines, the half-rectangle
and its partition by q*x = p*y, the Klein four-group of rectangle
symmetries, and an exhaustive claim-sweeping harness with counterexample
search.
"""

from .arith import (
    EuclideanStep,
    HalfSystem,
    OddPrime,
    PrimePair,
    euclid_step,
    half_system,
    is_odd_prime,
    legendre_euler,
)
from .claims import (
    REGISTRY,
    ClaimId,
    ClaimInfo,
    ClaimOutcome,
    SweepReport,
    find_counterexample,
    iter_prime_pairs,
    odd_primes_below,
    reverify,
    sweep,
    verify_claim,
)
from .errors import CoprimalityError, InputError, ResourceCapError
from .gauss import (
    GaussCount,
    ResidueTable,
    count_large_residues,
    epsilon_product_full,
    epsilon_product_half,
    legendre_gauss,
    residue_table,
)
from .lattice import (
    DEFAULT_ENUM_CAP,
    ENUM_CAP_ENV,
    LatticePoint,
    LatticeRect,
    PartitionCounts,
    enumerate_points,
    floor_sum,
    legendre_eisenstein,
    partition_counts,
    side_value_grid,
)
from .render import render_svg
from .report import ReportDocument, from_json, sweep_document, sweep_to_csv, to_json
from .symmetry import (
    FixedPointReport,
    Orbit,
    Symmetry,
    fixed_points,
    orbit_sizes,
    orbits,
    side_flip_violations,
)

__version__ = "0.1.0"

__all__ = [
    "CoprimalityError",
    "InputError",
    "ResourceCapError",
    "EuclideanStep",
    "HalfSystem",
    "OddPrime",
    "PrimePair",
    "euclid_step",
    "half_system",
    "is_odd_prime",
    "legendre_euler",
    "GaussCount",
    "ResidueTable",
    "count_large_residues",
    "epsilon_product_full",
    "epsilon_product_half",
    "legendre_gauss",
    "residue_table",
    "DEFAULT_ENUM_CAP",
    "ENUM_CAP_ENV",
    "LatticePoint",
    "LatticeRect",
    "PartitionCounts",
    "enumerate_points",
    "floor_sum",
    "legendre_eisenstein",
    "partition_counts",
    "side_value_grid",
    "FixedPointReport",
    "Orbit",
    "Symmetry",
    "fixed_points",
    "orbit_sizes",
    "orbits",
    "side_flip_violations",
    "REGISTRY",
    "ClaimId",
    "ClaimInfo",
    "ClaimOutcome",
    "SweepReport",
    "find_counterexample",
    "iter_prime_pairs",
    "odd_primes_below",
    "reverify",
    "sweep",
    "verify_claim",
    "ReportDocument",
    "from_json",
    "sweep_document",
    "sweep_to_csv",
    "to_json",
    "render_svg",
]
