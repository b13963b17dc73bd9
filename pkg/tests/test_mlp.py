import json

import numpy as np
import pytest

from handspeak.recognizer import (DimensionMismatch, MlpModel,
                                  SerializationError, VersionMismatch,
                                  load_model, save_model, softmax)


def zero_model(dims, classes):
    model = MlpModel.init(dims, classes, np.random.default_rng(0))
    for w in model.weights:
        w[:] = 0.0
    for b in model.biases:
        b[:] = 0.0
    return model


class TestForward:
    def test_zero_model_is_uniform(self):
        model = zero_model([84, 8, 4], ["a", "b", "c", "d"])
        probs = model.forward(np.random.default_rng(1).normal(size=84))
        assert np.allclose(probs, 0.25, atol=1e-12)

    def test_constructed_logits(self):
        # single layer, weights pick logits (ln 3, 0) for input [1]
        model = zero_model([1, 2], ["a", "b"])
        model.weights[0][0, 0] = np.log(3.0)
        probs = model.forward(np.array([1.0]))
        assert np.allclose(probs, [0.75, 0.25], atol=1e-12)

    def test_sums_to_one(self):
        rng = np.random.default_rng(2)
        model = MlpModel.init([84, 64, 32, 10], [str(i) for i in range(10)], rng)
        x = rng.normal(size=(40, 84)) * 50  # large inputs stress the softmax
        probs = model.forward_batch(x)
        assert np.all(np.abs(probs.sum(axis=1) - 1.0) < 1e-9)
        assert np.all(probs > 0.0)

    def test_dimension_mismatch(self):
        model = zero_model([6, 3], ["a", "b", "c"])
        with pytest.raises(DimensionMismatch):
            model.forward(np.zeros(7))


class TestGradients:
    def numeric_grad(self, model, x, y, array, idx, eps=1e-5):
        orig = array[idx]
        array[idx] = orig + eps
        lp, _, _ = model.loss_and_gradients(x, y)
        array[idx] = orig - eps
        lm, _, _ = model.loss_and_gradients(x, y)
        array[idx] = orig
        return (lp - lm) / (2 * eps)

    def test_analytic_matches_finite_differences(self):
        rng = np.random.default_rng(7)
        for trial in range(5):
            model = MlpModel.init([6, 5, 4, 3], ["a", "b", "c"], rng)
            x = rng.normal(size=(8, 6))
            y = rng.integers(0, 3, 8)
            _, grad_w, grad_b = model.loss_and_gradients(x, y)
            for layer in range(3):
                for idx in [(0, 0), (2, 1)]:
                    num = self.numeric_grad(model, x, y, model.weights[layer], idx)
                    rel = abs(num - grad_w[layer][idx]) / max(abs(num), 1e-8)
                    assert rel < 1e-4
                num = self.numeric_grad(model, x, y, model.biases[layer], (0,))
                rel = abs(num - grad_b[layer][0]) / max(abs(num), 1e-8)
                assert rel < 1e-4


class TestSerialization:
    def test_roundtrip_bitwise(self, tmp_path):
        rng = np.random.default_rng(3)
        model = MlpModel.init([84, 16, 5], [f"c{i}" for i in range(5)], rng)
        path = tmp_path / "model.json"
        save_model(model, path)
        loaded = load_model(path)
        x = rng.normal(size=(100, 84))
        assert np.array_equal(model.forward_batch(x), loaded.forward_batch(x))
        assert loaded.classes == model.classes

    def test_wrong_version(self, tmp_path):
        rng = np.random.default_rng(4)
        model = MlpModel.init([4, 2], ["a", "b"], rng)
        doc = model.to_dict()
        doc["version"] = 99
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(VersionMismatch):
            load_model(path)

    def test_truncated_file(self, tmp_path):
        path = tmp_path / "trunc.json"
        save_model(MlpModel.init([4, 2], ["a", "b"], np.random.default_rng(5)), path)
        path.write_text(path.read_text()[:-40])
        with pytest.raises(SerializationError):
            load_model(path)

    def test_shape_mismatch_rejected(self, tmp_path):
        model = MlpModel.init([4, 2], ["a", "b"], np.random.default_rng(6))
        doc = model.to_dict()
        doc["dims"] = [4, 3]
        path = tmp_path / "shape.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(SerializationError):
            load_model(path)


def test_softmax_stability():
    probs = softmax(np.array([1000.0, 1000.0, 0.0]))
    assert np.isfinite(probs).all()
    assert abs(probs.sum() - 1.0) < 1e-12
