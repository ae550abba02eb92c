"""Exact arithmetic for sums, products, and elementary symmetric functions
of element orders of finite abelian groups, with empirical verification
sweeps against independent brute-force oracles."""

from .errors import ConsistencyError, DomainError, NotationError, SizeLimitError
from .groups import (
    AbelianGroup,
    OrderSpectrum,
    PGroupType,
    brute_force_spectrum,
    canonicalize,
    enumerate_abelian_groups,
    group_type_to_partition,
    iter_abelian_groups_up_to,
    order_spectrum,
    partition_to_group_type,
)
from .notation import (
    format_group,
    group_from_json_dict,
    group_to_json_dict,
    parse_group,
    spectrum_to_json_dict,
)
from .partitions import Partition, iter_partitions, lex_compare, parse_partition, partitions_of
from .psi import (
    ONE,
    FactoredInteger,
    combine_coprime,
    f_eval,
    factored_compare,
    psi_prime,
    psi_prime_cyclic_closed_form,
    psi_prime_exponent,
    psi_prime_from_spectrum,
    psi_prime_pgroup,
    psi_prime_rank2_closed_form,
    psi_sum,
)
from .symmetric import OrderPolynomial, order_polynomial, psi_all, psi_k
from .verify import (
    CollisionReport,
    ConjectureFReport,
    ConjectureFSweep,
    InjectivityReport,
    InjectivitySweep,
    MonotonicityReport,
    check_conjecture_f,
    check_injectivity,
    check_theorem_c,
    find_cross_order_collisions,
    sweep_conjecture_f,
    sweep_injectivity,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CollisionReport",
    "ConjectureFReport",
    "ConjectureFSweep",
    "ConsistencyError",
    "DomainError",
    "FactoredInteger",
    "InjectivityReport",
    "InjectivitySweep",
    "MonotonicityReport",
    "NotationError",
    "ONE",
    "OrderPolynomial",
    "OrderSpectrum",
    "Partition",
    "PGroupType",
    "SizeLimitError",
    "brute_force_spectrum",
    "canonicalize",
    "check_conjecture_f",
    "check_injectivity",
    "check_theorem_c",
    "combine_coprime",
    "enumerate_abelian_groups",
    "f_eval",
    "factored_compare",
    "find_cross_order_collisions",
    "format_group",
    "group_from_json_dict",
    "group_to_json_dict",
    "group_type_to_partition",
    "iter_abelian_groups_up_to",
    "iter_partitions",
    "lex_compare",
    "order_polynomial",
    "order_spectrum",
    "parse_group",
    "parse_partition",
    "partition_to_group_type",
    "partitions_of",
    "psi_all",
    "psi_k",
    "psi_prime",
    "psi_prime_cyclic_closed_form",
    "psi_prime_exponent",
    "psi_prime_from_spectrum",
    "psi_prime_pgroup",
    "psi_prime_rank2_closed_form",
    "psi_sum",
    "spectrum_to_json_dict",
    "sweep_conjecture_f",
    "sweep_injectivity",
]
