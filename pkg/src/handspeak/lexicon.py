"""File-backed registry of gloss -> video-asset mappings.

The manifest is one JSON file next to an assets directory:
    {"version": 3, "entries": [{"gloss": "hello", "kind": "Word",
                                "asset": "assets/hello.mp4"}, ...]}

Reads hand out immutable snapshots; writes rewrite the manifest atomically
and bump the version. Letters a-z, digits 0-9 and the three tense markers
are mandatory so any string over [a-z0-9] can always be fingerspelled.
"""

from __future__ import annotations

import enum
import json
import os
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path


class GlossKind(enum.Enum):
    WORD = "Word"
    LETTER = "Letter"
    DIGIT = "Digit"
    TENSE_MARKER = "TenseMarker"


TENSE_MARKER_GLOSSES = ("before", "will", "now")

MANDATORY_GLOSSES = (
    [(GlossKind.LETTER, chr(c)) for c in range(ord("a"), ord("z") + 1)]
    + [(GlossKind.DIGIT, str(d)) for d in range(10)]
    + [(GlossKind.TENSE_MARKER, g) for g in TENSE_MARKER_GLOSSES]
)


class LexiconError(Exception):
    pass


class ManifestParseError(LexiconError):
    pass


class MissingAssetFile(LexiconError):
    def __init__(self, path):
        super().__init__(f"asset file does not exist: {path}")
        self.path = str(path)


class IncompleteMandatorySet(LexiconError):
    def __init__(self, missing):
        super().__init__(f"lexicon is missing {len(missing)} mandatory entries: "
                         + ", ".join(f"{k.value}:{g}" for k, g in missing[:5])
                         + ("..." if len(missing) > 5 else ""))
        self.missing = missing


class DuplicateGloss(LexiconError):
    def __init__(self, gloss, kind):
        super().__init__(f"gloss already registered: {kind.value}:{gloss}")
        self.gloss = gloss
        self.kind = kind


@dataclass(frozen=True)
class LexiconEntry:
    gloss: str
    kind: GlossKind
    asset_path: str          # relative to the manifest's directory
    added_at: float = 0.0

    @property
    def asset_id(self) -> str:
        return f"{self.kind.value.lower()}-{self.gloss}"


@dataclass(frozen=True)
class LexiconView:
    version: int
    root: Path
    _index: dict = field(repr=False)

    def lookup(self, kind: GlossKind, gloss: str) -> LexiconEntry | None:
        return self._index.get((kind, gloss.lower()))

    def has_word(self, lemma: str) -> bool:
        return (GlossKind.WORD, lemma.lower()) in self._index

    def by_asset_id(self, asset_id: str) -> LexiconEntry | None:
        for entry in self._index.values():
            if entry.asset_id == asset_id:
                return entry
        return None

    def asset_file(self, entry: LexiconEntry) -> Path:
        return self.root / entry.asset_path

    def __len__(self) -> int:
        return len(self._index)


class LexiconStore:
    """Owner of the manifest file. One writer at a time; snapshot readers."""

    def __init__(self, manifest_path: str | Path):
        self.manifest_path = Path(manifest_path)
        self.root = self.manifest_path.parent
        self._lock = threading.Lock()
        self._view: LexiconView | None = None
        self._mtime: float = -1.0
        self._load()

    # -- reading ---------------------------------------------------------

    def _load(self) -> None:
        try:
            raw = json.loads(self.manifest_path.read_text("utf-8"))
            version = int(raw["version"])
            entries = [
                LexiconEntry(
                    gloss=str(e["gloss"]).lower(),
                    kind=GlossKind(e["kind"]),
                    asset_path=str(e["asset"]),
                    added_at=float(e.get("added_at", 0.0)),
                )
                for e in raw["entries"]
            ]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise ManifestParseError(f"cannot parse {self.manifest_path}: {exc}") from exc

        index = {}
        for entry in entries:
            key = (entry.kind, entry.gloss)
            if key in index:
                raise DuplicateGloss(entry.gloss, entry.kind)
            if not (self.root / entry.asset_path).is_file():
                raise MissingAssetFile(self.root / entry.asset_path)
            index[key] = entry

        missing = [k for k in MANDATORY_GLOSSES if k not in index]
        if missing:
            raise IncompleteMandatorySet(missing)

        self._view = LexiconView(version=version, root=self.root, _index=index)
        self._mtime = self.manifest_path.stat().st_mtime

    def snapshot(self) -> LexiconView:
        with self._lock:
            if self.manifest_path.stat().st_mtime != self._mtime:
                self._load()
            return self._view

    # -- writing ---------------------------------------------------------

    def add_entry(self, gloss: str, kind: GlossKind, asset_path: str | Path) -> int:
        """Register a new gloss. Returns the new manifest version."""
        gloss = gloss.strip().lower()
        asset_path = Path(asset_path)
        with self._lock:
            if self.manifest_path.stat().st_mtime != self._mtime:
                self._load()
            view = self._view
            if view.lookup(kind, gloss) is not None:
                raise DuplicateGloss(gloss, kind)
            if asset_path.is_absolute():
                rel = asset_path.relative_to(self.root)
            else:
                rel = asset_path
            if not (self.root / rel).is_file():
                raise MissingAssetFile(self.root / rel)

            entry = LexiconEntry(gloss=gloss, kind=kind, asset_path=str(rel),
                                 added_at=time.time())
            index = dict(view._index)
            index[(kind, gloss)] = entry
            new_version = view.version + 1
            self._write_manifest(new_version, index.values())
            self._view = LexiconView(version=new_version, root=self.root, _index=index)
            self._mtime = self.manifest_path.stat().st_mtime
            return new_version

    def _write_manifest(self, version: int, entries) -> None:
        doc = {
            "version": version,
            "entries": [
                {"gloss": e.gloss, "kind": e.kind.value, "asset": e.asset_path,
                 "added_at": e.added_at}
                for e in entries
            ],
        }
        tmp = self.manifest_path.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, indent=2), "utf-8")
        os.replace(tmp, self.manifest_path)


def create_stub_pack(root: str | Path, words=("hello",)) -> Path:
    """Build a minimal asset pack: mandatory entries plus the given words.

    Assets are placeholder clips (a few bytes each); the real 150-video pack
    from the original dataset is not redistributable.
    """
    root = Path(root)
    assets = root / "assets"
    assets.mkdir(parents=True, exist_ok=True)
    entries = []

    def add(gloss, kind, name):
        path = assets / f"{name}.mp4"
        path.write_bytes(b"\x00\x00\x00\x18ftypmp42" + gloss.encode())
        entries.append({"gloss": gloss, "kind": kind.value,
                        "asset": f"assets/{name}.mp4"})

    for _, letter in [(None, chr(c)) for c in range(ord("a"), ord("z") + 1)]:
        add(letter, GlossKind.LETTER, f"letter_{letter}")
    for d in range(10):
        add(str(d), GlossKind.DIGIT, f"digit_{d}")
    for marker in TENSE_MARKER_GLOSSES:
        add(marker, GlossKind.TENSE_MARKER, f"marker_{marker}")
    for word in words:
        add(word.lower(), GlossKind.WORD, f"word_{word.lower()}")

    manifest = root / "lexicon.json"
    manifest.write_text(json.dumps({"version": 1, "entries": entries}, indent=2), "utf-8")
    return manifest
