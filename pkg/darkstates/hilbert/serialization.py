"""
JSON wire format for states

State:   {"d": 2, "n": 2, "terms": [{"labels": ["1/2", "-1/2"], "re": 0.7, "im": 0.0}, ...]}
Density: {"d": 2, "n": 2, "kind": "density", "re": [[...]], "im": [[...]]}

Labels travel as exact rational strings so half-integers never drift.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, Union

import numpy as np

from darkstates.core.errors import DarkStatesError, SerializationError
from darkstates.core.types import DensityMatrix, StateVector
from darkstates.hilbert.basis import label_of
from darkstates.hilbert.states import state_from_terms

JsonLike = Union[str, bytes, Mapping[str, Any]]

DROP_ATOL = 1e-15


def _load(data: JsonLike) -> Mapping[str, Any]:
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SerializationError(f"Malformed JSON: {exc}") from exc
    if not isinstance(data, Mapping):
        raise SerializationError("Expected a JSON object")
    return data


def _dims(data: Mapping[str, Any]) -> tuple[int, int]:
    try:
        d, n = int(data["d"]), int(data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SerializationError("State JSON needs integer 'd' and 'n'") from exc
    return d, n


def state_to_json(psi: StateVector, atol: float = DROP_ATOL) -> dict[str, Any]:
    terms = []
    for index in np.flatnonzero(np.abs(psi.amplitudes) > atol):
        amplitude = psi.amplitudes[index]
        labels = label_of(psi.d, psi.n, int(index)).labels
        terms.append(
            {
                "labels": [str(label) for label in labels],
                "re": float(amplitude.real),
                "im": float(amplitude.imag),
            }
        )
    return {"d": psi.d, "n": psi.n, "terms": terms}


def state_from_json(data: JsonLike, normalize: bool = False) -> StateVector:
    payload = _load(data)
    if payload.get("kind") == "density":
        raise SerializationError("Expected a state, got a density matrix")
    d, n = _dims(payload)
    try:
        terms = [
            (
                tuple(Fraction(label) for label in term["labels"]),
                complex(float(term.get("re", 0.0)), float(term.get("im", 0.0))),
            )
            for term in payload["terms"]
        ]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SerializationError(f"Malformed term list: {exc}") from exc

    try:
        return state_from_terms(d, n, terms, normalize=normalize)
    except DarkStatesError as exc:
        raise SerializationError(str(exc)) from exc


def density_to_json(rho: DensityMatrix) -> dict[str, Any]:
    return {
        "d": rho.d,
        "n": rho.n,
        "kind": "density",
        "re": rho.matrix.real.tolist(),
        "im": rho.matrix.imag.tolist(),
    }


def density_from_json(data: JsonLike) -> DensityMatrix:
    payload = _load(data)
    d, n = _dims(payload)
    try:
        matrix = np.asarray(payload["re"], dtype=float) + 1j * np.asarray(payload["im"], dtype=float)
        return DensityMatrix(d=d, n=n, matrix=matrix)
    except (KeyError, TypeError, ValueError, DarkStatesError) as exc:
        raise SerializationError(f"Malformed density matrix: {exc}") from exc
