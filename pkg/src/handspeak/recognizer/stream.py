"""Sliding-window smoothing of per-frame predictions.

One smoother per client stream. A label is emitted when at least 3 of the
last 5 predictions agree and those agreeing predictions average >= 0.7
confidence; everything else comes out as "none". A label that is already
showing is not re-emitted until a different label or "none" breaks the run.
"""

from __future__ import annotations

from collections import Counter, deque

NO_LABEL = "none"

WINDOW_SIZE = 5
MIN_AGREEMENT = 3
MIN_MEAN_CONFIDENCE = 0.7


class StreamSmoother:
    def __init__(self):
        self._window: deque[tuple[str, float]] = deque(maxlen=WINDOW_SIZE)
        self._last = NO_LABEL

    @property
    def current(self) -> str:
        """The label currently considered stable ("none" if no agreement)."""
        return self._last

    def update(self, label: str, confidence: float) -> str:
        self._window.append((label, confidence))
        counts = Counter(lbl for lbl, _ in self._window)
        top, top_count = counts.most_common(1)[0]
        candidate = NO_LABEL
        if top_count >= MIN_AGREEMENT:
            confs = [c for lbl, c in self._window if lbl == top]
            if sum(confs) / len(confs) >= MIN_MEAN_CONFIDENCE:
                candidate = top
        if candidate == NO_LABEL:
            self._last = NO_LABEL
            return NO_LABEL
        if candidate == self._last:
            return NO_LABEL  # suppressed repeat; run continues
        self._last = candidate
        return candidate


def smooth_stream(predictions) -> list[str]:
    """Smooth an iterable of (label, confidence) pairs; one output per input."""
    smoother = StreamSmoother()
    return [smoother.update(label, conf) for label, conf in predictions]
