import numpy as np
import pytest

from handspeak.recognizer import (DegenerateDataset, DimensionMismatch,
                                  LandmarkDataset, MlpModel, TrainConfig,
                                  evaluate, predict, stratified_split,
                                  synth_dataset, train)
from handspeak.recognizer.landmarks import FEATURE_DIM


def two_class_separable(n_per_class=200, seed=0):
    """Well-separated clusters in feature space; trivially learnable."""
    rng = np.random.default_rng(seed)
    a = rng.normal(0.5, 0.05, (n_per_class, FEATURE_DIM))
    b = rng.normal(-0.5, 0.05, (n_per_class, FEATURE_DIM))
    feats = np.clip(np.vstack([a, b]), -1, 1)
    labels = np.array([0] * n_per_class + [1] * n_per_class)
    return LandmarkDataset(feats, labels, ["first", "second"])


def nearest_centroid_accuracy(dataset):
    """Independent check that the classes really are separable."""
    centroids = np.stack([dataset.features[dataset.labels == c].mean(axis=0)
                          for c in range(dataset.n_classes)])
    d = np.linalg.norm(dataset.features[:, None, :] - centroids[None], axis=2)
    return float(np.mean(np.argmin(d, axis=1) == dataset.labels))


class TestSplit:
    def test_stratified_fractions(self):
        labels = np.array([0] * 80 + [1] * 40)
        train_idx, val_idx = stratified_split(labels, 0.25,
                                              np.random.default_rng(0))
        assert len(train_idx) + len(val_idx) == 120
        assert np.sum(labels[val_idx] == 0) == 20
        assert np.sum(labels[val_idx] == 1) == 10
        assert len(np.intersect1d(train_idx, val_idx)) == 0

    def test_every_class_on_both_sides(self):
        labels = np.array([0, 0, 1, 1, 1])
        train_idx, val_idx = stratified_split(labels, 0.25,
                                              np.random.default_rng(1))
        for side in (labels[train_idx], labels[val_idx]):
            assert set(side) == {0, 1}


class TestTrain:
    def test_separable_reaches_perfect_validation(self):
        dataset = two_class_separable(200)
        assert nearest_centroid_accuracy(dataset) == 1.0
        model, log = train(dataset, TrainConfig(epochs=100, batch_size=64,
                                                rng_seed=3))
        assert log.final_val_accuracy() == 1.0

    def test_determinism_bitwise(self):
        dataset = synth_dataset(3, 30, seed=5)
        config = TrainConfig(epochs=10, batch_size=16, rng_seed=9)
        m1, log1 = train(dataset, config)
        m2, log2 = train(dataset, config)
        for w1, w2 in zip(m1.weights, m2.weights):
            assert np.array_equal(w1, w2)
        for b1, b2 in zip(m1.biases, m2.biases):
            assert np.array_equal(b1, b2)
        assert [(s.train_loss, s.val_accuracy) for s in log1.epochs] == \
               [(s.train_loss, s.val_accuracy) for s in log2.epochs]

    def test_single_class_rejected(self):
        feats = np.zeros((10, FEATURE_DIM))
        dataset = LandmarkDataset(feats, np.zeros(10, dtype=int), ["only"])
        with pytest.raises(DegenerateDataset):
            train(dataset, TrainConfig(epochs=1))

    def test_thin_class_rejected(self):
        feats = np.zeros((3, FEATURE_DIM))
        dataset = LandmarkDataset(feats, np.array([0, 0, 1]), ["a", "b"])
        with pytest.raises(DegenerateDataset):
            train(dataset, TrainConfig(epochs=1))

    def test_overfit_loss_nonincreasing(self):
        # 10-sample overfit run at lr 1e-3: loss must never go up
        dataset = two_class_separable(5, seed=2)
        model, log = train(dataset, TrainConfig(epochs=300, batch_size=10,
                                                validation_fraction=0.2,
                                                learning_rate=1e-3,
                                                rng_seed=1))
        losses = [s.train_loss for s in log.epochs]
        assert all(b <= a + 1e-12 for a, b in zip(losses, losses[1:]))
        train_preds = np.argmax(model.forward_batch(dataset.features), axis=1)
        assert np.mean(train_preds == dataset.labels) == 1.0


class TestPredict:
    def test_zero_model_ties_to_class_zero(self):
        model = MlpModel.init([FEATURE_DIM, 4], list("abcd"),
                              np.random.default_rng(0))
        for w in model.weights:
            w[:] = 0.0
        frame = synthetic_frame()
        cls, conf = predict(model, frame)
        assert cls.id == 0
        assert abs(conf - 0.25) < 1e-12

    def test_trained_model_recovers_training_sample(self, trained_small):
        model, dataset, _ = trained_small
        probs = model.forward_batch(dataset.features)
        assert np.mean(np.argmax(probs, axis=1) == dataset.labels) >= 0.99

    def test_no_hands_is_defined(self, trained_small):
        from handspeak.recognizer import LandmarkFrame
        model, _, _ = trained_small
        cls, conf = predict(model, LandmarkFrame(0, ()))
        assert 0.0 < conf <= 1.0


def synthetic_frame():
    from handspeak.recognizer import Hand, LandmarkFrame
    rng = np.random.default_rng(0)
    return LandmarkFrame(0, (Hand("Right", rng.uniform(0, 1, (21, 2))),))


class TestEvaluate:
    def test_perfect_classifier(self, trained_small):
        model, dataset, _ = trained_small
        report = evaluate(model, dataset)
        assert report.accuracy >= 0.99
        assert np.trace(report.confusion) == int(report.accuracy * len(dataset))

    def test_constant_classifier_on_balanced_set(self):
        dataset = synth_dataset(10, 20, seed=4)
        model = MlpModel.init([FEATURE_DIM, 10], dataset.class_labels,
                              np.random.default_rng(0))
        for w in model.weights:
            w[:] = 0.0
        for b in model.biases:
            b[:] = 0.0
        model.biases[-1][0] = 10.0  # always predicts class 0
        report = evaluate(model, dataset)
        assert abs(report.accuracy - 0.1) < 1e-12
        assert np.all(report.confusion[:, 0] == 20)

    def test_row_sums_equal_class_counts(self, trained_small):
        model, dataset, _ = trained_small
        report = evaluate(model, dataset)
        assert np.array_equal(report.confusion.sum(axis=1),
                              dataset.class_counts())

    def test_threshold_zero_equals_unthresholded_macro_f1(self, trained_small):
        model, dataset, _ = trained_small
        report = evaluate(model, dataset)
        t0, f1_at_0 = report.f1_confidence_curve[0]
        assert t0 == 0.0
        assert abs(f1_at_0 - float(np.mean(report.f1))) < 1e-12

    def test_curve_shape(self, trained_small):
        model, dataset, _ = trained_small
        report = evaluate(model, dataset)
        thresholds = [t for t, _ in report.f1_confidence_curve]
        assert thresholds == [round(0.05 * i, 2) for i in range(21)]

    def test_dimension_mismatch(self, trained_small):
        model, _, _ = trained_small
        other = synth_dataset(4, 10, seed=8)
        with pytest.raises(DimensionMismatch):
            evaluate(model, other)
