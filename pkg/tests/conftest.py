import numpy as np
import pytest

from handspeak.lexicon import LexiconStore, create_stub_pack
from handspeak.recognizer import TrainConfig, synth_dataset, train

DEMO_WORDS = ("hello", "happy", "i", "go", "eat", "rice", "you", "help",
              "careful", "stop", "why", "cry", "love", "please", "there",
              "now", "not", "need", "me", "sorry")


@pytest.fixture
def stub_pack(tmp_path):
    return create_stub_pack(tmp_path / "pack", DEMO_WORDS)


@pytest.fixture
def lexicon_store(stub_pack):
    return LexiconStore(stub_pack)


@pytest.fixture
def lexicon_view(lexicon_store):
    return lexicon_store.snapshot()


@pytest.fixture(scope="session")
def session_lexicon_view(tmp_path_factory):
    """Read-only snapshot shared across property tests (views are immutable)."""
    pack = create_stub_pack(tmp_path_factory.mktemp("pack"), DEMO_WORDS)
    return LexiconStore(pack).snapshot()


@pytest.fixture(scope="session")
def trained_small():
    """A quickly trained 3-class model plus its dataset."""
    dataset = synth_dataset(n_classes=3, per_class=40, seed=11)
    model, log = train(dataset, TrainConfig(epochs=40, batch_size=32, rng_seed=11))
    return model, dataset, log


def random_frame_dict(rng: np.random.Generator, label=None) -> dict:
    hands = []
    for side in ("Left", "Right"):
        if rng.random() < 0.7:
            hands.append({"handedness": side,
                          "points": rng.uniform(0, 1, (21, 2)).tolist()})
    doc = {"t": int(rng.integers(0, 10_000)), "hands": hands}
    if label is not None:
        doc["label"] = label
    return doc
