"""Periodic-point structure of x -> x**n + c over prime fields."""

from .dynamics import (
    OrbitInfo,
    PeriodicSet,
    SystemParams,
    functional_graph,
    is_bijective,
    orbit_info,
    periodic_points,
    periodic_points_naive,
    step,
)
from .numtheory import (
    ResidueClass,
    classify_power_residue,
    count_power_residues,
    first_primes,
    gcd,
    is_prime,
    num_nth_roots,
    pow_mod,
)
from .ppd import (
    LineClass,
    LineKind,
    PpdGrid,
    build_ppd,
    check_odd_symmetry,
    classify_line,
    desert_offsets,
    empirical_desert_offsets,
    fixed_points_total,
    reduced_ppd,
)
from .tpd import BranchPartition, TpdRecord, branch_partition, per_bounds, per_count, tpd_sweep

__version__ = "0.1.0"
