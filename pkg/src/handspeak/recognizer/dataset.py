"""Labeled feature datasets and the JSONL recording format."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .landmarks import FEATURE_DIM, frame_from_dict, normalize_features

DEFAULT_CLASS_LABELS = [
    "Hello there", "I love you", "I am sorry", "Please", "I need help",
    "Go there", "Why are you crying?", "Be careful", "Stop it", "Don't do that",
]


class DegenerateDataset(ValueError):
    pass


@dataclass
class LandmarkDataset:
    features: np.ndarray      # (N, 84)
    labels: np.ndarray        # (N,) int class ids
    class_labels: list[str]

    def __post_init__(self):
        self.features = np.asarray(self.features, dtype=np.float64)
        self.labels = np.asarray(self.labels, dtype=np.int64)
        if self.features.ndim != 2 or self.features.shape[1] != FEATURE_DIM:
            raise ValueError(f"features must be (N, {FEATURE_DIM})")
        if len(self.labels) != len(self.features):
            raise ValueError("feature/label length mismatch")
        if len(self.labels) and self.labels.max() >= len(self.class_labels):
            raise ValueError("class id out of range")

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n_classes(self) -> int:
        return len(self.class_labels)

    def class_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.n_classes)

    def check_trainable(self) -> None:
        if len(self) == 0:
            raise DegenerateDataset("dataset is empty")
        present = np.flatnonzero(self.class_counts())
        if len(present) < 2:
            raise DegenerateDataset("need at least 2 classes with samples")
        thin = [self.class_labels[c] for c in present if self.class_counts()[c] < 2]
        if thin:
            raise DegenerateDataset(f"classes with fewer than 2 samples: {thin}")


def load_dataset_jsonl(path) -> LandmarkDataset:
    """Read labeled landmark frames and encode them as features.

    Class ids follow first-appearance order of the labels in the file,
    except that when every label is one of the stock 10 phrases the stock
    ordering is used (keeps ids stable across recordings).
    """
    frames = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            if line.strip():
                frames.append(frame_from_dict(json.loads(line)))
    labeled = [fr for fr in frames if fr.label is not None]
    if not labeled:
        raise DegenerateDataset(f"no labeled frames in {path}")

    seen = {fr.label for fr in labeled}
    if seen <= set(DEFAULT_CLASS_LABELS):
        class_labels = list(DEFAULT_CLASS_LABELS)
    else:
        class_labels = list(dict.fromkeys(fr.label for fr in labeled))
    ids = {label: i for i, label in enumerate(class_labels)}

    features = np.stack([normalize_features(fr) for fr in labeled])
    labels = np.array([ids[fr.label] for fr in labeled])
    return LandmarkDataset(features=features, labels=labels, class_labels=class_labels)
