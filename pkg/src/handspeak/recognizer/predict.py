"""Single-frame and batch prediction helpers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .landmarks import LandmarkFrame, normalize_features
from .mlp import MlpModel


@dataclass(frozen=True)
class SignClass:
    id: int
    label: str


def predict(model: MlpModel, frame: LandmarkFrame) -> tuple[SignClass, float]:
    probs = model.forward(normalize_features(frame))
    cls = int(np.argmax(probs))  # argmax takes the lowest id on ties
    return SignClass(id=cls, label=model.classes[cls]), float(probs[cls])


def predict_batch(model: MlpModel, frames) -> tuple[SignClass, float]:
    """Majority label over per-frame argmax predictions; confidence is the
    mean confidence of the frames that voted for the winner."""
    preds = [predict(model, frame) for frame in frames]
    votes: dict[int, list[float]] = {}
    for cls, conf in preds:
        votes.setdefault(cls.id, []).append(conf)
    winner = max(votes, key=lambda c: (len(votes[c]), -c))
    return (SignClass(id=winner, label=model.classes[winner]),
            float(np.mean(votes[winner])))
