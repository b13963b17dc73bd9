"""Synthetic landmark data: parameterized hand poses plus jitter.

Stands in for real recordings: each class gets a randomly drawn base pose
(one or two hands); samples are the base pose jittered, then randomly
translated and scaled so that only shape carries class information, exactly
what the feature normalization preserves.
"""

from __future__ import annotations

import numpy as np

from .dataset import DEFAULT_CLASS_LABELS, DegenerateDataset, LandmarkDataset
from .landmarks import Hand, LandmarkFrame, POINTS_PER_HAND, normalize_features


def class_labels_for(n_classes: int) -> list[str]:
    if n_classes == len(DEFAULT_CLASS_LABELS):
        return list(DEFAULT_CLASS_LABELS)
    return [f"sign-{i:02d}" for i in range(n_classes)]


def _base_pose(rng: np.random.Generator) -> list[tuple[str, np.ndarray]]:
    """One or two hands of random keypoints around the frame center."""
    sides = ["Left", "Right"] if rng.random() < 0.5 else [str(rng.choice(["Left", "Right"]))]
    return [(side, rng.uniform(0.3, 0.7, (POINTS_PER_HAND, 2))) for side in sides]


def synth_frames(n_classes: int = 10, per_class: int = 200, seed: int = 7,
                 jitter: float = 0.004) -> list[LandmarkFrame]:
    """Labeled frames, `per_class` per class, deterministic per seed."""
    if n_classes < 2:
        raise DegenerateDataset("need at least 2 classes")
    if per_class < 2:
        raise DegenerateDataset("need at least 2 samples per class")
    rng = np.random.default_rng(seed)
    labels = class_labels_for(n_classes)
    poses = [_base_pose(rng) for _ in range(n_classes)]

    frames = []
    t = 0
    for cls in range(n_classes):
        for _ in range(per_class):
            hands = []
            for side, base in poses[cls]:
                noisy = base + rng.normal(0.0, jitter, base.shape)
                scale = rng.uniform(0.6, 1.4)
                shift = rng.uniform(-0.25, 0.25, 2)
                pts = np.clip((noisy - 0.5) * scale + 0.5 + shift, 0.0, 1.0)
                hands.append(Hand(handedness=side, points=pts))
            frames.append(LandmarkFrame(timestamp_ms=t, hands=tuple(hands),
                                        label=labels[cls]))
            t += 33
    return frames


def synth_dataset(n_classes: int = 10, per_class: int = 200,
                  seed: int = 7, jitter: float = 0.004) -> LandmarkDataset:
    frames = synth_frames(n_classes, per_class, seed, jitter)
    labels = class_labels_for(n_classes)
    ids = {label: i for i, label in enumerate(labels)}
    features = np.stack([normalize_features(fr) for fr in frames])
    y = np.array([ids[fr.label] for fr in frames])
    return LandmarkDataset(features=features, labels=y, class_labels=labels)
