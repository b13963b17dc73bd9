import json

import numpy as np
import pytest
from fastapi.testclient import TestClient

from handspeak.lexicon import create_stub_pack
from handspeak.recognizer import (TrainConfig, frame_to_dict, save_model,
                                  synth_dataset, synth_frames, train)
from handspeak.service import ServiceConfig, create_app

from conftest import DEMO_WORDS


@pytest.fixture(scope="module")
def trained_model_path(tmp_path_factory):
    dataset = synth_dataset(3, 60, seed=21)
    model, _ = train(dataset, TrainConfig(epochs=60, batch_size=32, rng_seed=21))
    path = tmp_path_factory.mktemp("model") / "model.json"
    save_model(model, path)
    return path


@pytest.fixture
def client(tmp_path, trained_model_path):
    manifest = create_stub_pack(tmp_path / "pack", DEMO_WORDS)
    app = create_app(ServiceConfig(
        lexicon_manifest=manifest,
        data_dir=tmp_path / "data",
        model_path=trained_model_path,
    ))
    with TestClient(app) as c:
        yield c


@pytest.fixture
def token(client):
    client.post("/api/signup", json={"username": "ada", "password": "longenough"})
    return client.post("/api/login", json={"username": "ada",
                                           "password": "longenough"}).json()["token"]


def auth(token):
    return {"Authorization": f"Bearer {token}"}


class TestAccounts:
    def test_signup_login_flow(self, client):
        r = client.post("/api/signup", json={"username": "u1", "password": "password1"})
        assert r.status_code == 201
        r = client.post("/api/login", json={"username": "u1", "password": "password1"})
        assert r.status_code == 200 and r.json()["token"]

    def test_duplicate_signup(self, client):
        client.post("/api/signup", json={"username": "u2", "password": "password1"})
        r = client.post("/api/signup", json={"username": "u2", "password": "password2"})
        assert r.status_code == 409

    def test_short_password(self, client):
        r = client.post("/api/signup", json={"username": "u3", "password": "shrt"})
        assert r.status_code == 400

    def test_bad_credentials_indistinguishable(self, client):
        client.post("/api/signup", json={"username": "real", "password": "password1"})
        wrong = client.post("/api/login", json={"username": "real",
                                                "password": "wrongpass1"})
        unknown = client.post("/api/login", json={"username": "ghost",
                                                  "password": "whatever1"})
        assert wrong.status_code == unknown.status_code == 401
        assert wrong.content == unknown.content


class TestTranslate:
    def test_happy_path(self, client, token):
        r = client.post("/api/translate", json={"text": "I am happy"},
                        headers=auth(token))
        assert r.status_code == 200
        doc = r.json()
        assert doc["keywords"] == ["i", "happy"]
        assert doc["tense"] == "Present"
        assert doc["entries"][0]["kind"] == "TenseMarker"

    def test_empty_input(self, client, token):
        r = client.post("/api/translate", json={"text": "  ...  "},
                        headers=auth(token))
        assert r.status_code == 422

    def test_unauthenticated(self, client):
        r = client.post("/api/translate", json={"text": "hello"})
        assert r.status_code == 401

    def test_oversize(self, client, token):
        r = client.post("/api/translate", json={"text": "a " * 600},
                        headers=auth(token))
        assert r.status_code == 413

    def test_repeat_is_byte_identical(self, client, token):
        bodies = {client.post("/api/translate", json={"text": "I will eat rice"},
                              headers=auth(token)).content for _ in range(3)}
        assert len(bodies) == 1


class TestRecognize:
    def frames(self, n=5, cls=0, seed=21):
        return [frame_to_dict(f)
                for f in synth_frames(3, 60, seed=seed)[cls * 60:cls * 60 + n]]

    def test_batch_recognition(self, client, token):
        frames = self.frames()
        for f in frames:
            f.pop("label", None)
        r = client.post("/api/recognize", json={"frames": frames},
                        headers=auth(token))
        assert r.status_code == 200
        doc = r.json()
        assert doc["label"] == "sign-00"
        assert doc["confidence"] > 0.5

    def test_invalid_frame(self, client, token):
        bad = {"t": 0, "hands": [{"handedness": "Left",
                                  "points": [[0.1, 0.2]] * 20}]}
        r = client.post("/api/recognize", json={"frames": [bad]},
                        headers=auth(token))
        assert r.status_code == 422

    def test_empty_frames(self, client, token):
        r = client.post("/api/recognize", json={"frames": []},
                        headers=auth(token))
        assert r.status_code == 422

    def test_streaming_emits_once_per_steady_segment(self, client, token):
        frames = self.frames(n=8)
        with client.websocket_connect(f"/ws/recognize?token={token}") as ws:
            emissions = []
            for f in frames:
                f.pop("label", None)
                ws.send_json(f)
            # a steady segment produces exactly one transition message
            msg = ws.receive_json()
            emissions.append(msg["label"])
        assert emissions == ["sign-00"]

    def test_streaming_rejects_bad_token(self, client):
        with pytest.raises(Exception):
            with client.websocket_connect("/ws/recognize?token=bogus") as ws:
                ws.receive_json()


class TestLexiconRoutes:
    def test_hot_add_then_translate(self, client, token):
        r = client.post("/api/translate", json={"text": "thanks"},
                        headers=auth(token))
        kinds = {e["kind"] for e in r.json()["entries"]}
        assert kinds == {"Letter"}

        r = client.post("/api/lexicon",
                        data={"gloss": "thanks", "kind": "Word"},
                        files={"asset": ("thanks.mp4", b"fakevideo", "video/mp4")},
                        headers=auth(token))
        assert r.status_code == 201

        r = client.post("/api/translate", json={"text": "thanks"},
                        headers=auth(token))
        kinds = {e["kind"] for e in r.json()["entries"]}
        assert kinds == {"Word"}

    def test_duplicate_upload(self, client, token):
        for expected in (201, 409):
            r = client.post("/api/lexicon",
                            data={"gloss": "dupword", "kind": "Word"},
                            files={"asset": ("d.mp4", b"x", "video/mp4")},
                            headers=auth(token))
            assert r.status_code == expected

    def test_non_video_rejected(self, client, token):
        r = client.post("/api/lexicon",
                        data={"gloss": "nope", "kind": "Word"},
                        files={"asset": ("nope.txt", b"text", "text/plain")},
                        headers=auth(token))
        assert r.status_code == 415

    def test_asset_download(self, client, token):
        r = client.get("/api/assets/word-hello", headers=auth(token))
        assert r.status_code == 200
        assert r.headers["content-type"].startswith("video/")

    def test_unknown_asset(self, client, token):
        r = client.get("/api/assets/word-nonexistent", headers=auth(token))
        assert r.status_code == 404


class TestAuthBoundary:
    def test_all_api_routes_except_signup_login_require_token(self, client):
        open_paths = {"/api/signup", "/api/login"}
        for route in client.app.routes:
            path = getattr(route, "path", "")
            if not path.startswith("/api/") or path in open_paths:
                continue
            for method in route.methods - {"HEAD", "OPTIONS"}:
                r = client.request(method, path.replace("{asset_id}", "x"),
                                   json={})
                assert r.status_code == 401, (method, path, r.status_code)
