"""Passivity-preserving channels, Hoffman majorization and virtual-qubit refrigeration.

Submodules
----------
majorization
    Majorization orders, Hoffman matrices and their partition decompositions.
states
    Passive states, the virtually-cooler order, ergotropy and pure-state monotones.
channels
    Kraus channels, property certificates and constructive builders.
ttransforms
    Passive t-transforms and their ordered products.
refrigeration
    Virtual-qubit refrigeration of an external qubit.
sampling, serialization, cli
    Random instances, JSON formats and the command-line interface.
"""

from .majorization import (
    DimensionCapError,
    HoffmanDecomposition,
    InfeasibleError,
    NotMajorizedError,
    Partition,
    asymmetric_hoffman_majorizes,
    decompose_hoffman,
    enumerate_partitions,
    find_hoffman_matrix,
    hoffman_majorizes,
    hoffman_weights,
    is_asymmetric_hoffman_matrix,
    is_hoffman_matrix,
    majorizes,
    partition_matrix,
)
from .states import (
    Hamiltonian,
    PureStateD,
    energy,
    ergotropy,
    extremal_passive,
    in_set_D,
    is_passive,
    is_virtually_cooler,
    monotone_A,
    monotone_B,
    relative_passivity_witness,
    strip_phases,
    thermal_populations,
    vc_extreme_points,
    virtual_temperatures,
)
from .channels import (
    Certificate,
    KrausChannel,
    PovmSet,
    apply,
    build_abo,
    build_athermal,
    build_qubit_ppo_pure,
    build_rppo_pure,
    certify_ppo,
    certify_rppo,
    channels_equal,
    choi,
    is_abo,
    is_incoherent,
    is_ppo,
    is_rppo,
    is_strictly_incoherent,
    is_trace_preserving,
    qubit_ppo_canonical,
    qubit_stinespring_ppo,
    qutrit_stinespring_counterexample,
    transform_pure_state,
)
from .ttransforms import ordered_product_passive, t_transform
from .refrigeration import (
    ExternalQubit,
    VirtualQubit,
    compare_refrigeration,
    final_bias,
    swap_simulate,
    virtual_qubit,
)

__version__ = "0.1.0"
