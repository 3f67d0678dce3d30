"""teleportlab: quantum teleportation simulator over six entangled-channel families.

Builds the Bell, GHZ, two-/three-qubit cluster, Brown and Borras channels,
runs the teleportation protocol with derived correction operators, accounts
gate cost by primitive lowering, applies six parametric Kraus noise models,
and sweeps fidelity against the noise strength.
"""

from .channels import ChannelSpec, ChannelState, build_channel, enumerate_variants, prep_circuit
from .circuit import Circuit, Gate, lower, quantum_cost, simulate, unitary_of
from .fidelity import (
    AxialAverage,
    FixedInput,
    SampledAverage,
    SweepConfig,
    SweepResult,
    average_fidelity,
    noisy_fidelity,
    sweep,
)
from .linalg import embed, fidelity_pure, kron, partial_trace, validate_density
from .noise import (
    NOISE_KINDS,
    NoiseModel,
    apply_collective,
    apply_independent,
    kraus_set,
    paper_density_oracle,
)
from .teleport import (
    CorrectionTable,
    MessageState,
    ProtocolRun,
    compare_tables,
    compose,
    derive_corrections,
    protocol_circuit,
    run,
)

__version__ = "0.1.0"

__all__ = [
    "AxialAverage",
    "ChannelSpec",
    "ChannelState",
    "Circuit",
    "CorrectionTable",
    "FixedInput",
    "Gate",
    "MessageState",
    "NOISE_KINDS",
    "NoiseModel",
    "ProtocolRun",
    "SampledAverage",
    "SweepConfig",
    "SweepResult",
    "apply_collective",
    "apply_independent",
    "average_fidelity",
    "build_channel",
    "compare_tables",
    "compose",
    "derive_corrections",
    "embed",
    "enumerate_variants",
    "fidelity_pure",
    "kraus_set",
    "kron",
    "lower",
    "noisy_fidelity",
    "paper_density_oracle",
    "partial_trace",
    "prep_circuit",
    "protocol_circuit",
    "quantum_cost",
    "run",
    "simulate",
    "sweep",
    "unitary_of",
    "validate_density",
]
