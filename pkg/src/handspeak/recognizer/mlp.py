"""From-scratch feed-forward network: ReLU hidden layers, softmax output.

Kept deliberately small (default 84-64-32-K) so CPU inference comfortably
outpaces a webcam frame rate. Backprop returns gradients in the same
layout as the parameters; the gradient-check test compares them against
central finite differences.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

MODEL_FILE_VERSION = 1
DEFAULT_HIDDEN = (64, 32)


class DimensionMismatch(ValueError):
    pass


class SerializationError(Exception):
    pass


class VersionMismatch(SerializationError):
    def __init__(self, found):
        super().__init__(f"unsupported model file version: {found!r}")
        self.found = found


def softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - np.max(logits, axis=-1, keepdims=True)
    exp = np.exp(shifted)
    return exp / np.sum(exp, axis=-1, keepdims=True)


@dataclass
class MlpModel:
    dims: list[int]
    weights: list[np.ndarray]   # weights[i]: (dims[i], dims[i+1])
    biases: list[np.ndarray]    # biases[i]: (dims[i+1],)
    classes: list[str]

    @classmethod
    def init(cls, dims: list[int], classes: list[str],
             rng: np.random.Generator) -> "MlpModel":
        if dims[-1] != len(classes):
            raise DimensionMismatch(f"output dim {dims[-1]} != {len(classes)} classes")
        weights, biases = [], []
        for fan_in, fan_out in zip(dims[:-1], dims[1:]):
            # He init: variance scaled to the ReLU fan-in
            weights.append(rng.normal(0.0, np.sqrt(2.0 / fan_in), (fan_in, fan_out)))
            biases.append(np.zeros(fan_out))
        return cls(dims=list(dims), weights=weights, biases=biases,
                   classes=list(classes))

    @property
    def n_classes(self) -> int:
        return self.dims[-1]

    def _check_input(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if x.shape[-1] != self.dims[0]:
            raise DimensionMismatch(f"expected input dim {self.dims[0]}, "
                                    f"got {x.shape[-1]}")
        return x

    def forward_batch(self, x: np.ndarray) -> np.ndarray:
        """Class probabilities for a (N, in_dim) batch."""
        return self._forward_cached(self._check_input(x))[-1]

    def forward(self, x: np.ndarray) -> np.ndarray:
        """Class probabilities for a single input vector."""
        return self.forward_batch(np.atleast_2d(self._check_input(x)))[0]

    def _forward_cached(self, x: np.ndarray) -> list[np.ndarray]:
        """Activations per layer; last entry is the softmax output."""
        acts = [x]
        h = x
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            z = h @ w + b
            h = softmax(z) if i == len(self.weights) - 1 else np.maximum(z, 0.0)
            acts.append(h)
        return acts

    def loss_and_gradients(self, x: np.ndarray, y: np.ndarray):
        """Mean cross-entropy over the batch plus parameter gradients.

        y is an (N,) int array of class ids.
        """
        x = self._check_input(np.atleast_2d(x))
        n = x.shape[0]
        acts = self._forward_cached(x)
        probs = acts[-1]
        loss = -np.mean(np.log(probs[np.arange(n), y] + 1e-300))

        grad_w = [np.empty_like(w) for w in self.weights]
        grad_b = [np.empty_like(b) for b in self.biases]
        delta = probs.copy()
        delta[np.arange(n), y] -= 1.0
        delta /= n
        for i in range(len(self.weights) - 1, -1, -1):
            grad_w[i] = acts[i].T @ delta
            grad_b[i] = delta.sum(axis=0)
            if i > 0:
                delta = (delta @ self.weights[i].T) * (acts[i] > 0.0)
        return loss, grad_w, grad_b

    # -- persistence -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "version": MODEL_FILE_VERSION,
            "dims": self.dims,
            "classes": self.classes,
            "weights": [w.tolist() for w in self.weights],
            "biases": [b.tolist() for b in self.biases],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "MlpModel":
        if doc.get("version") != MODEL_FILE_VERSION:
            raise VersionMismatch(doc.get("version"))
        try:
            dims = [int(d) for d in doc["dims"]]
            weights = [np.asarray(w, dtype=np.float64) for w in doc["weights"]]
            biases = [np.asarray(b, dtype=np.float64) for b in doc["biases"]]
            classes = [str(c) for c in doc["classes"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise SerializationError(f"malformed model document: {exc}") from exc
        if len(weights) != len(dims) - 1 or len(biases) != len(dims) - 1:
            raise SerializationError("layer count does not match dims")
        for i, (w, b) in enumerate(zip(weights, biases)):
            if w.shape != (dims[i], dims[i + 1]) or b.shape != (dims[i + 1],):
                raise SerializationError(f"bad shapes at layer {i}")
        if len(classes) != dims[-1]:
            raise SerializationError("class list does not match output dim")
        return cls(dims=dims, weights=weights, biases=biases, classes=classes)


def save_model(model: MlpModel, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(model.to_dict(), f)


def load_model(path) -> MlpModel:
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise SerializationError(f"cannot read model file {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise SerializationError("model file is not a JSON object")
    return MlpModel.from_dict(doc)
