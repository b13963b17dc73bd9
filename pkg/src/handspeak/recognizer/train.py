"""Minibatch SGD-with-momentum training of the landmark classifier."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import LandmarkDataset
from .mlp import DEFAULT_HIDDEN, MlpModel


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 500
    batch_size: int = 128
    validation_fraction: float = 0.25
    learning_rate: float = 0.01
    momentum: float = 0.9
    rng_seed: int = 0
    hidden_dims: tuple[int, ...] = DEFAULT_HIDDEN

    def __post_init__(self):
        if not 0.0 < self.validation_fraction < 1.0:
            raise ValueError("validation_fraction must be in (0, 1)")
        if self.batch_size < 1 or self.epochs < 1:
            raise ValueError("batch_size and epochs must be >= 1")


@dataclass
class EpochStats:
    epoch: int
    train_loss: float
    val_accuracy: float


@dataclass
class TrainingLog:
    epochs: list[EpochStats] = field(default_factory=list)

    def final_val_accuracy(self) -> float:
        return self.epochs[-1].val_accuracy if self.epochs else 0.0


def stratified_split(labels: np.ndarray, fraction: float,
                     rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Per-class shuffled split; every sampled class keeps >=1 sample on
    each side. Returns (train_idx, val_idx)."""
    train, val = [], []
    for cls in np.unique(labels):
        idx = np.flatnonzero(labels == cls)
        idx = rng.permutation(idx)
        n_val = int(round(len(idx) * fraction))
        n_val = min(max(n_val, 1), len(idx) - 1)
        val.append(idx[:n_val])
        train.append(idx[n_val:])
    return np.sort(np.concatenate(train)), np.sort(np.concatenate(val))


def train(dataset: LandmarkDataset, config: TrainConfig) -> tuple[MlpModel, TrainingLog]:
    dataset.check_trainable()
    rng = np.random.default_rng(config.rng_seed)

    train_idx, val_idx = stratified_split(dataset.labels,
                                          config.validation_fraction, rng)
    x_train, y_train = dataset.features[train_idx], dataset.labels[train_idx]
    x_val, y_val = dataset.features[val_idx], dataset.labels[val_idx]

    dims = [dataset.features.shape[1], *config.hidden_dims, dataset.n_classes]
    model = MlpModel.init(dims, dataset.class_labels, rng)
    vel_w = [np.zeros_like(w) for w in model.weights]
    vel_b = [np.zeros_like(b) for b in model.biases]

    log = TrainingLog()
    n = len(x_train)
    for epoch in range(1, config.epochs + 1):
        order = rng.permutation(n)
        losses = []
        for start in range(0, n, config.batch_size):
            batch = order[start:start + config.batch_size]
            loss, grad_w, grad_b = model.loss_and_gradients(x_train[batch],
                                                            y_train[batch])
            losses.append(loss)
            for i in range(len(model.weights)):
                vel_w[i] = config.momentum * vel_w[i] - config.learning_rate * grad_w[i]
                vel_b[i] = config.momentum * vel_b[i] - config.learning_rate * grad_b[i]
                model.weights[i] += vel_w[i]
                model.biases[i] += vel_b[i]
        preds = np.argmax(model.forward_batch(x_val), axis=1)
        log.epochs.append(EpochStats(epoch=epoch,
                                     train_loss=float(np.mean(losses)),
                                     val_accuracy=float(np.mean(preds == y_val))))
    return model, log
