"""JSON encoding of states, channels, POVMs and reports.

Complex matrices are stored as ``{"re": [[...]], "im": [[...]]}``. Reports
carry a top-level ``"schema"`` tag so downstream tools can detect format
changes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .channels import Certificate, KrausChannel, PovmSet
from .majorization import HoffmanDecomposition
from .states import Hamiltonian, PureStateD

SCHEMA = "passivity-lab/1"

__all__ = [
    "SCHEMA",
    "InputError",
    "loads",
    "load_input",
    "to_float_array",
    "matrix_to_json",
    "matrix_from_json",
    "channel_to_json",
    "channel_from_json",
    "povm_to_json",
    "povm_from_json",
    "hamiltonian_to_json",
    "hamiltonian_from_json",
    "passive_state_to_json",
    "pure_state_to_json",
    "pure_state_from_json",
    "decomposition_to_json",
    "decomposition_from_json",
    "certificate_to_json",
    "report",
    "dumps",
]


class InputError(ValueError):
    """Malformed user input; the message names the offending field or position."""


# bare fractions such as 1/3 or -2/5 that are not already inside a string
_FRACTION = re.compile(r'(?<!["\w.])(-?\d+(?:\.\d+)?)\s*/\s*(\d+(?:\.\d+)?)(?![\w."])')


def _fraction_hook(value):
    if isinstance(value, str):
        try:
            return float(Fraction(value))
        except (ValueError, ZeroDivisionError):
            return value
    if isinstance(value, list):
        return [_fraction_hook(v) for v in value]
    if isinstance(value, dict):
        return {k: _fraction_hook(v) for k, v in value.items()}
    return value


def loads(text: str, field: str = "input") -> Any:
    """Parse JSON, accepting exact fractions like ``1/3`` or ``"1/3"`` as numbers."""
    quoted = _FRACTION.sub(lambda m: f'"{m.group(1)}/{m.group(2)}"', text)
    try:
        return _fraction_hook(json.loads(quoted))
    except json.JSONDecodeError as exc:
        raise InputError(f"{field}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_input(arg: str, field: str = "input") -> Any:
    """Inline JSON, or the contents of a file when ``arg`` starts with ``@``."""
    if arg.startswith("@"):
        path = Path(arg[1:])
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"{field}: cannot read {path}: {exc.strerror}") from None
        return loads(text, f"{field} ({path})")
    return loads(arg, field)


def to_float_array(value, field: str, key: str | None = None) -> np.ndarray:
    """Numeric vector from a bare list or from ``value[key]`` of an object."""
    if isinstance(value, dict):
        if key is None or key not in value:
            raise InputError(f"{field}: expected a list or an object with key '{key}'")
        value = value[key]
    try:
        arr = np.asarray(value, dtype=float)
    except (TypeError, ValueError):
        raise InputError(f"{field}: expected numbers, got {value!r}") from None
    if arr.ndim != 1:
        raise InputError(f"{field}: expected a 1-d vector")
    return arr


def matrix_to_json(M) -> dict:
    M = np.asarray(M, dtype=complex)
    return {"re": M.real.tolist(), "im": M.imag.tolist()}


def matrix_from_json(obj, field: str = "matrix") -> np.ndarray:
    """Complex matrix from ``{re, im}``, ``{diag}``, a nested real list or a vector (as populations)."""
    try:
        if isinstance(obj, dict):
            if "diag" in obj:
                return np.diag(np.asarray(obj["diag"], dtype=complex))
            if "re" not in obj:
                raise InputError(f"{field}: missing field 're'")
            re_ = np.asarray(obj["re"], dtype=float)
            im_ = np.asarray(obj.get("im", np.zeros_like(re_)), dtype=float)
            if re_.shape != im_.shape:
                raise InputError(f"{field}: 're' and 'im' shapes differ")
            M = re_ + 1j * im_
        else:
            M = np.asarray(obj, dtype=complex)
    except (TypeError, ValueError):
        raise InputError(f"{field}: expected a numeric matrix") from None
    if M.ndim == 1:
        M = np.diag(M)
    if M.ndim != 2:
        raise InputError(f"{field}: expected a 2-d matrix")
    return M


def channel_to_json(ch: KrausChannel) -> dict:
    return {"in_dim": ch.in_dim, "out_dim": ch.out_dim, "kraus": [matrix_to_json(K) for K in ch.kraus]}


def channel_from_json(obj, field: str = "channel") -> KrausChannel:
    if isinstance(obj, dict) and "kraus" not in obj and isinstance(obj.get("channel"), dict):
        obj = obj["channel"]  # a whole build report
    if not isinstance(obj, dict) or "kraus" not in obj:
        raise InputError(f"{field}: expected an object with field 'kraus'")
    ops = [matrix_from_json(K, f"{field}.kraus[{i}]") for i, K in enumerate(obj["kraus"])]
    try:
        return KrausChannel(ops, obj.get("in_dim"), obj.get("out_dim"))
    except ValueError as exc:
        raise InputError(f"{field}: {exc}") from None


def povm_to_json(povm: PovmSet) -> dict:
    return {"dim": povm.dim, "elements": [matrix_to_json(G) for G in povm.elements]}


def povm_from_json(obj, field: str = "povm") -> PovmSet:
    els = obj.get("elements") if isinstance(obj, dict) else obj
    if not isinstance(els, list):
        raise InputError(f"{field}: expected a list of matrices or an object with 'elements'")
    try:
        return PovmSet(tuple(matrix_from_json(G, f"{field}.elements[{i}]") for i, G in enumerate(els)))
    except ValueError as exc:
        raise InputError(f"{field}: {exc}") from None


def hamiltonian_to_json(H: Hamiltonian) -> dict:
    return {"energies": list(H.energies)}


def hamiltonian_from_json(obj, field: str = "hamiltonian") -> Hamiltonian:
    try:
        return Hamiltonian(tuple(to_float_array(obj, field, "energies")))
    except ValueError as exc:
        raise InputError(f"{field}: {exc}") from None


def passive_state_to_json(p) -> dict:
    return {"populations": np.asarray(p, dtype=float).tolist()}


def pure_state_to_json(psi: PureStateD) -> dict:
    return {"probs": list(psi.probs), "phases": list(psi.phases)}


def pure_state_from_json(obj, field: str = "psi") -> PureStateD:
    if isinstance(obj, dict):
        probs = to_float_array(obj, field, "probs")
        phases = obj.get("phases")
        phases = None if phases is None else to_float_array(phases, f"{field}.phases")
    else:
        probs, phases = to_float_array(obj, field), None
    try:
        return PureStateD(probs, phases)
    except ValueError as exc:
        raise InputError(f"{field}: {exc}") from None


def decomposition_to_json(dec: HoffmanDecomposition) -> dict:
    return {"dim": dec.dim, "weights": dec.to_records()}


def decomposition_from_json(obj) -> HoffmanDecomposition:
    return HoffmanDecomposition.from_records(obj["weights"])


def certificate_to_json(cert: Certificate) -> dict:
    return cert.to_dict()


def report(command: str, **fields) -> dict:
    return {"schema": SCHEMA, "command": command, **fields}


def _default(o):
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (np.floating, np.integer, np.bool_)):
        return o.item()
    if isinstance(o, complex):
        return {"re": o.real, "im": o.imag}
    raise TypeError(f"cannot serialize {type(o).__name__}")


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(obj, indent=indent, default=_default)
