"""Hand-landmark frames and their normalized feature encoding.

A frame holds up to two hands of 21 (x, y) keypoints (point 0 = wrist).
Features are an 84-vector [left 42 | right 42]: each present hand is
wrist-centered and scaled by its max absolute coordinate, which makes the
encoding exactly invariant to translation and to uniform scaling about the
wrist. A missing hand is all zeros.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

POINTS_PER_HAND = 21
FEATURES_PER_HAND = 2 * POINTS_PER_HAND
FEATURE_DIM = 2 * FEATURES_PER_HAND

HANDEDNESS = ("Left", "Right")


class InvalidFrame(ValueError):
    pass


@dataclass(frozen=True)
class Hand:
    handedness: str
    points: np.ndarray  # (21, 2) float64

    def __post_init__(self):
        if self.handedness not in HANDEDNESS:
            raise InvalidFrame(f"handedness must be Left or Right: {self.handedness!r}")
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.shape != (POINTS_PER_HAND, 2):
            raise InvalidFrame(f"hand must have exactly {POINTS_PER_HAND} (x, y) "
                               f"points, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise InvalidFrame("landmark coordinates must be finite")
        object.__setattr__(self, "points", pts)


@dataclass(frozen=True)
class LandmarkFrame:
    timestamp_ms: int
    hands: tuple[Hand, ...]
    label: str | None = None

    def __post_init__(self):
        hands = tuple(self.hands)
        sides = [h.handedness for h in hands]
        if len(sides) != len(set(sides)):
            raise InvalidFrame("at most one hand per handedness")
        object.__setattr__(self, "hands", hands)


def normalize_hand(points: np.ndarray) -> np.ndarray:
    """Wrist-center and max-abs scale one hand; returns a flat 42-vector."""
    centered = points - points[0]
    scale = np.max(np.abs(centered))
    if scale == 0.0:
        return np.zeros(FEATURES_PER_HAND)
    return (centered / scale).reshape(-1)


def normalize_features(frame: LandmarkFrame) -> np.ndarray:
    features = np.zeros(FEATURE_DIM)
    for hand in frame.hands:
        offset = 0 if hand.handedness == "Left" else FEATURES_PER_HAND
        features[offset:offset + FEATURES_PER_HAND] = normalize_hand(hand.points)
    return features


# -- JSON Lines wire format ----------------------------------------------
# {"t": ms, "hands": [{"handedness": "Left", "points": [[x, y], ...]}],
#  "label": "optional"}

def frame_from_dict(doc: dict) -> LandmarkFrame:
    try:
        hands = tuple(
            Hand(handedness=h["handedness"],
                 # a producer may send [x, y, z]; z is dropped
                 points=np.asarray(h["points"], dtype=np.float64)[:, :2])
            for h in doc.get("hands", [])
        )
        return LandmarkFrame(timestamp_ms=int(doc.get("t", 0)), hands=hands,
                             label=doc.get("label"))
    except InvalidFrame:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InvalidFrame(f"malformed landmark frame: {exc}") from exc


def frame_to_dict(frame: LandmarkFrame) -> dict:
    doc = {
        "t": frame.timestamp_ms,
        "hands": [
            {"handedness": h.handedness, "points": h.points.tolist()}
            for h in frame.hands
        ],
    }
    if frame.label is not None:
        doc["label"] = frame.label
    return doc


def read_frames_jsonl(path) -> list[LandmarkFrame]:
    frames = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            if line.strip():
                frames.append(frame_from_dict(json.loads(line)))
    return frames


def write_frames_jsonl(path, frames) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for frame in frames:
            f.write(json.dumps(frame_to_dict(frame)) + "\n")
