"""Evaluation artifacts: confusion matrix, per-class F1, confidence curve."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import LandmarkDataset
from .mlp import DimensionMismatch, MlpModel

CURVE_THRESHOLDS = [round(t * 0.05, 2) for t in range(21)]  # 0.00 .. 1.00


@dataclass
class EvalReport:
    accuracy: float
    confusion: np.ndarray              # (K, K), rows = true, cols = predicted
    precision: np.ndarray              # (K,)
    recall: np.ndarray
    f1: np.ndarray
    f1_confidence_curve: list[tuple[float, float]]  # (threshold, macro F1)
    class_labels: list[str]

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "classes": self.class_labels,
            "confusion_matrix": self.confusion.tolist(),
            "per_class": [
                {"label": label, "precision": float(p), "recall": float(r),
                 "f1": float(f)}
                for label, p, r, f in zip(self.class_labels, self.precision,
                                          self.recall, self.f1)
            ],
            "f1_confidence_curve": [
                {"threshold": t, "macro_f1": f} for t, f in self.f1_confidence_curve
            ],
        }


def _prf(tp: np.ndarray, fp: np.ndarray, fn: np.ndarray):
    with np.errstate(invalid="ignore", divide="ignore"):
        precision = np.where(tp + fp > 0, tp / (tp + fp), 0.0)
        recall = np.where(tp + fn > 0, tp / (tp + fn), 0.0)
        denom = precision + recall
        f1 = np.where(denom > 0, 2 * precision * recall / denom, 0.0)
    return precision, recall, f1


def _thresholded_macro_f1(y_true, y_pred, confidence, threshold, k) -> float:
    """Macro F1 where low-confidence predictions are rejected: a rejected
    sample is a false negative for its true class and counts toward no
    other class."""
    accepted = confidence >= threshold
    tp = np.zeros(k)
    fp = np.zeros(k)
    fn = np.zeros(k)
    for cls in range(k):
        true_is = y_true == cls
        hit = accepted & (y_pred == cls)
        tp[cls] = np.sum(hit & true_is)
        fp[cls] = np.sum(hit & ~true_is)
        fn[cls] = np.sum(true_is) - tp[cls]
    _, _, f1 = _prf(tp, fp, fn)
    return float(np.mean(f1))


def evaluate(model: MlpModel, dataset: LandmarkDataset) -> EvalReport:
    if dataset.n_classes != model.n_classes:
        raise DimensionMismatch(f"dataset has {dataset.n_classes} classes, "
                                f"model predicts {model.n_classes}")
    k = model.n_classes
    probs = model.forward_batch(dataset.features)
    y_pred = np.argmax(probs, axis=1)
    confidence = probs[np.arange(len(y_pred)), y_pred]
    y_true = dataset.labels

    confusion = np.zeros((k, k), dtype=np.int64)
    np.add.at(confusion, (y_true, y_pred), 1)
    accuracy = float(np.trace(confusion) / max(len(y_true), 1))

    tp = np.diag(confusion).astype(np.float64)
    fp = confusion.sum(axis=0) - tp
    fn = confusion.sum(axis=1) - tp
    precision, recall, f1 = _prf(tp, fp, fn)

    curve = [(t, _thresholded_macro_f1(y_true, y_pred, confidence, t, k))
             for t in CURVE_THRESHOLDS]

    return EvalReport(accuracy=accuracy, confusion=confusion,
                      precision=precision, recall=recall, f1=f1,
                      f1_confidence_curve=curve,
                      class_labels=list(dataset.class_labels))
