"""JSON on-disk format for curvature tensors.

A tensor file is a single JSON object:

    {
      "format": "ahcurv/1",
      "n": 3,
      "kind": "random-rk",          # free-form provenance label
      "seed": 7,                    # optional, null when not seed-derived
      "components": [ ... ]         # dim^4 floats, row-major
    }

Floats round-trip exactly (json uses repr-level precision).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import FileFormatError

__all__ = ["FORMAT", "TensorFile", "write_tensor_file", "read_tensor_file"]

FORMAT = "ahcurv/1"


@dataclass(frozen=True)
class TensorFile:
    """A curvature tensor plus the metadata needed to regenerate it."""

    n: int
    tensor: np.ndarray
    kind: str = "unknown"
    seed: int | None = None


def write_tensor_file(path, tf: TensorFile) -> None:
    dim = 2 * tf.n
    if tf.tensor.shape != (dim,) * 4:
        raise FileFormatError(
            f"tensor shape {tf.tensor.shape} does not match n = {tf.n}")
    payload = {
        "format": FORMAT,
        "n": tf.n,
        "kind": tf.kind,
        "seed": tf.seed,
        "components": np.asarray(tf.tensor, dtype=float).ravel().tolist(),
    }
    Path(path).write_text(json.dumps(payload) + "\n")


def read_tensor_file(path) -> TensorFile:
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"cannot read tensor file {path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise FileFormatError("tensor file must contain a JSON object")
    if payload.get("format") != FORMAT:
        raise FileFormatError(
            f"unsupported format tag {payload.get('format')!r}, expected {FORMAT!r}")
    try:
        n = int(payload["n"])
        components = payload["components"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed tensor file: {exc}") from exc
    if n < 1:
        raise FileFormatError(f"n must be positive, got {n}")
    dim = 2 * n
    if not isinstance(components, list) or len(components) != dim ** 4:
        raise FileFormatError(
            f"expected {dim ** 4} components for n = {n}, "
            f"got {len(components) if isinstance(components, list) else type(components).__name__}")
    try:
        tensor = np.array(components, dtype=float).reshape((dim,) * 4)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"components are not all numeric: {exc}") from exc
    seed = payload.get("seed")
    if seed is not None:
        seed = int(seed)
    return TensorFile(n=n, tensor=tensor, kind=str(payload.get("kind", "unknown")),
                      seed=seed)
