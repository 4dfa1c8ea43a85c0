"""Decoherence-free qubit under collective noise"""

from darkstates.dfs.qubit import (
    CARDINAL_INPUTS,
    ChannelSpec,
    DfsReport,
    InputFidelity,
    LogicalEncoding,
    bare_qubit,
    collective_channel,
    decode,
    dfs_experiment,
    encode,
    fidelity,
    shot_deviations,
)

__all__ = [
    "CARDINAL_INPUTS",
    "ChannelSpec",
    "DfsReport",
    "InputFidelity",
    "LogicalEncoding",
    "bare_qubit",
    "collective_channel",
    "decode",
    "dfs_experiment",
    "encode",
    "fidelity",
    "shot_deviations",
]
