"""Clock-register Hamiltonians for quantum circuits.

Build positive-semidefinite and linear-dispersion clock Hamiltonians
from explicit circuits, propagate broad wavepackets through their
history chains, and measure how fast the clock advances per unit of
energy -- together with 2-D grid compilation and compressed fixed-weight
clock encodings that keep every term few-body and geometrically local.
"""

__version__ = "0.1.0"

from .circuits import (
    Circuit,
    Gate,
    LayeredCircuit,
    apply_circuit_oracle,
    build_circuit,
    circuit_to_json,
    decompose_into_layers,
    named_gate,
    pad_with_identities,
    random_circuit,
)
from .clockenc import (
    ClockEncoding,
    clock_qubit_count,
    combinadic_encoding,
    decode_clock_string,
    encode_clock_index,
    pulse_encoding,
    transition_support,
    transition_union_support,
)
from .dynamics import Trajectory, evolve_fullspace, evolve_subspace, overlap_series
from .gridcompile import (
    GridCircuit,
    appendix_example_circuit,
    clock_path_diameters,
    compile_to_grid,
    simulate_grid,
)
from .hamiltonian import (
    AuditReport,
    LocalTerm,
    SubspaceOperator,
    TermHamiltonian,
    apply_clock_indexed,
    build_fk_hamiltonian,
    build_lin_hamiltonian,
    dense_matrix,
    history_state,
    history_weights_to_clock_indexed,
    locality_audit,
    restrict_to_subspace,
    subspace_operator,
)
from .metrics import (
    EnergyStats,
    SpeedLimitReport,
    chain_position_moments,
    energy_stats,
    fit_loglog_slope,
    orthogonality_metrics,
    path_length,
    path_length_from_energy,
    speed_limit_bounds,
    success_probability,
)
from .packets import (
    GaussianParams,
    analytic_gaussian_moments,
    cosine_profile,
    make_cosine_packet,
    make_gaussian,
)
from .experiments import (
    clock_speed_ratio_sweep,
    run_experiment,
    standard_fk_run,
    standard_lin_run,
    sweep_scaling,
)
