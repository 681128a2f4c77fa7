"""Trotterized continuous-time quantum walks from Laplacian partitions.

Pipeline: sample or load a graph, partition its Laplacian into
permutation-similar components with 2x2 blocks, compile each component
into CNOT conjugations plus multiplexed rotations, and simulate the
resulting Trotterized walk against the exact evolution.
"""

from .analysis import (
    ExperimentRecord,
    LocalizationProfile,
    ScalingFit,
    accumulated_error_bound,
    complete_graph_ipr,
    complete_graph_ipr_average,
    complete_graph_return_average,
    complete_graph_return_probability,
    cutoff_time,
    fidelity_curve,
    fit_exponential,
    ipr,
    localization_test,
    log_time_grid,
    time_averaged_probability,
    trotter_error_bound,
)
from .circuits import (
    Circuit,
    Cnot,
    DiagPhase,
    GlobalPhase,
    Rotation,
    circuit_from_json,
    circuit_to_json,
    disassemble,
    gate_count,
    rotation_matrix,
)
from .graphs import (
    Graph,
    complete_graph,
    extremal_degree_vertex,
    generate_erdos_renyi,
    graph_from_edges,
    laplacian,
    read_edge_list,
    write_edge_list,
)
from .partition import (
    LaplacianPartition,
    PartitionComponent,
    component_of,
    conjugated_blocks,
    operation_count,
    partition_from_json,
    partition_laplacian,
    partition_to_json,
)
from .permutations import (
    CnotSequence,
    CycleSpec,
    cnot_sequence_for,
    cnot_sequence_matrix,
    cycles_for,
    permutation_index_map,
    permutation_matrix,
    verify_cnot_equals_cycles,
)
from .simulator import (
    EvolutionParams,
    Statevector,
    apply_gate,
    circuit_unitary,
    exact_evolution,
    fidelity,
    jacobi_eigh,
    run_circuit,
    step_unitary,
    trotter_evolution,
)
from .synthesis import (
    BlockUnitary,
    block_exponential,
    compile_multiplexor,
    decompose_diag_phase,
    default_masks,
    sign_matrix,
    solve_multiplexor_angles,
    synthesize_block_diagonal,
    synthesize_component,
    synthesize_trotter_step,
    zyz_decompose,
)

__version__ = "0.1.0"
