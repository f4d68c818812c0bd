"""Exact strong simulation of stabilizer circuits via quadratic forms over Z4."""

from ._core import (
    Circuit,
    DyadicAmplitude,
    NonClassicalForm,
    ParseError,
    Probability,
    PromiseViolation,
    SignedPow2,
    amplitude,
    amplitudes_for_outputs,
    count,
    count_linear,
    enumerate_netzero,
    net_class,
    normalize,
    path_sum,
    polymatroid_sum,
    probability,
    rank,
    rank_via_simulation,
    reduce,
    statevector_amplitude,
)

__all__ = [
    "Circuit",
    "DyadicAmplitude",
    "NonClassicalForm",
    "ParseError",
    "Probability",
    "PromiseViolation",
    "SignedPow2",
    "amplitude",
    "amplitudes_for_outputs",
    "count",
    "count_linear",
    "enumerate_netzero",
    "net_class",
    "normalize",
    "path_sum",
    "polymatroid_sum",
    "probability",
    "rank",
    "rank_via_simulation",
    "reduce",
    "statevector_amplitude",
]
