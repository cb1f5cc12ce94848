"""Combinatorial power sum quasisymmetric functions via weighted P-partitions."""

from .compositions import Composition, Partition, parse_composition
from .hopf import (
    TensorElement,
    coproduct_M,
    coproduct_oracle,
    coproduct_power_sum,
    multiply,
    multiply_power_sums,
    omega,
    psi,
    rho,
)
from .posets import (
    LabelledChain,
    LabelledInteger,
    WeightedLabelledPoset,
    antichain_poset,
    linear_extensions,
    lower_sets,
    poset_from_covers,
)
from .qsym import (
    QSymElement,
    chain_to_F,
    chain_to_M,
    count_Q,
    count_R,
    count_R_symmetric,
    f_to_m,
    m_to_f,
    power_sum,
    power_sum_to_F,
    reverse_power_sum,
    symmetric_power_sum,
)

__all__ = [
    "antichain_poset",
    "chain_to_F",
    "chain_to_M",
    "Composition",
    "coproduct_M",
    "coproduct_oracle",
    "coproduct_power_sum",
    "count_Q",
    "count_R",
    "count_R_symmetric",
    "f_to_m",
    "LabelledChain",
    "LabelledInteger",
    "linear_extensions",
    "lower_sets",
    "m_to_f",
    "multiply",
    "multiply_power_sums",
    "omega",
    "parse_composition",
    "Partition",
    "poset_from_covers",
    "power_sum",
    "power_sum_to_F",
    "psi",
    "QSymElement",
    "reverse_power_sum",
    "rho",
    "symmetric_power_sum",
    "TensorElement",
    "WeightedLabelledPoset",
]

__version__ = "0.1.0"
