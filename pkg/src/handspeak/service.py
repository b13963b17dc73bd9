"""HTTP service: translation, recognition, lexicon admin, asset delivery.

All /api/* routes except signup and login require a Bearer session token.
Translation is stateless: the response depends only on the input text and
the lexicon snapshot, so identical requests under an unchanged lexicon are
byte-identical.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass
from pathlib import Path

from fastapi import (Depends, FastAPI, File, Form, HTTPException, Request,
                     Response, UploadFile, WebSocket, WebSocketDisconnect)
from fastapi.responses import FileResponse, JSONResponse
from pydantic import BaseModel

from . import gloss
from .accounts import (AccountStore, DuplicateUsername, InvalidCredentials,
                       PolicyViolation, Session)
from .lexicon import DuplicateGloss, GlossKind, LexiconStore
from .nlp import NlpResources, default_resources, extract_keywords, normalize_text
from .recognizer import (InvalidFrame, MlpModel, StreamSmoother, frame_from_dict,
                         load_model, predict, predict_batch)

log = logging.getLogger("handspeak.service")

MAX_TEXT_LEN = 1000
MAX_BATCH_FRAMES = 100
MAX_UPLOAD_BYTES = 50 * 1024 * 1024
VIDEO_SUFFIXES = {".mp4", ".webm"}


@dataclass
class ServiceConfig:
    lexicon_manifest: Path
    data_dir: Path
    assets_dir: Path | None = None   # default: next to the manifest
    model_path: Path | None = None


class Credentials(BaseModel):
    username: str
    password: str


class TranslateRequest(BaseModel):
    text: str


class RecognizeRequest(BaseModel):
    frames: list[dict]


def create_app(config: ServiceConfig,
               resources: NlpResources | None = None) -> FastAPI:
    resources = resources or default_resources()
    config.data_dir.mkdir(parents=True, exist_ok=True)
    store = LexiconStore(config.lexicon_manifest)
    accounts = AccountStore(config.data_dir / "accounts.sqlite3")
    assets_dir = config.assets_dir or config.lexicon_manifest.parent / "assets"

    model: MlpModel | None = None
    if config.model_path is not None and Path(config.model_path).is_file():
        model = load_model(config.model_path)

    app = FastAPI(title="handspeak")
    app.state.lexicon = store
    app.state.accounts = accounts
    app.state.model = model

    @app.middleware("http")
    async def request_log(request: Request, call_next):
        start = time.monotonic()
        response = await call_next(request)
        log.info(json.dumps({
            "method": request.method, "path": request.url.path,
            "status": response.status_code,
            "ms": round((time.monotonic() - start) * 1000, 2),
        }))
        return response

    def current_session(request: Request) -> Session:
        auth = request.headers.get("authorization", "")
        token = auth[7:] if auth.lower().startswith("bearer ") else None
        if token is None:
            token = request.query_params.get("token")
        session = accounts.validate(token)
        if session is None:
            raise HTTPException(401, "missing or expired session token")
        return session

    # -- accounts --------------------------------------------------------

    @app.post("/api/signup", status_code=201)
    def signup(body: Credentials):
        try:
            accounts.signup(body.username, body.password)
        except PolicyViolation as exc:
            raise HTTPException(400, str(exc))
        except DuplicateUsername:
            raise HTTPException(409, "username already exists")
        return {"username": body.username}

    @app.post("/api/login")
    def login(body: Credentials):
        try:
            session = accounts.login(body.username, body.password)
        except InvalidCredentials:
            # identical body for unknown user and wrong password
            raise HTTPException(401, "invalid credentials")
        return {"token": session.token}

    # -- translation -----------------------------------------------------

    @app.post("/api/translate")
    def translate(body: TranslateRequest, _: Session = Depends(current_session)):
        if len(body.text) > MAX_TEXT_LEN:
            raise HTTPException(413, f"text exceeds {MAX_TEXT_LEN} characters")
        if not normalize_text(body.text, resources):
            raise HTTPException(422, "empty input after normalization")
        tense, keywords = extract_keywords(body.text, resources)
        manifest = gloss.translate(body.text, tense, keywords, store.snapshot())
        payload = json.dumps(manifest.to_dict(), separators=(",", ":"))
        return Response(content=payload, media_type="application/json")

    # -- recognition -----------------------------------------------------

    @app.post("/api/recognize")
    def recognize(body: RecognizeRequest, _: Session = Depends(current_session)):
        if model is None:
            raise HTTPException(503, "no model loaded")
        if not body.frames:
            raise HTTPException(422, "empty frame list")
        if len(body.frames) > MAX_BATCH_FRAMES:
            raise HTTPException(413, f"at most {MAX_BATCH_FRAMES} frames per request")
        try:
            frames = [frame_from_dict(doc) for doc in body.frames]
        except InvalidFrame as exc:
            raise HTTPException(422, str(exc))
        cls, confidence = predict_batch(model, frames)
        return {"label": cls.label, "confidence": confidence}

    @app.websocket("/ws/recognize")
    async def recognize_stream(ws: WebSocket):
        session = accounts.validate(ws.query_params.get("token"))
        if session is None:
            await ws.close(code=4401)
            return
        await ws.accept()
        if model is None:
            await ws.send_json({"error": "no model loaded"})
            await ws.close(code=4503)
            return
        smoother = StreamSmoother()
        last_sent = smoother.current  # "none": quiet until a label stabilizes
        try:
            while True:
                doc = await ws.receive_json()
                try:
                    frame = frame_from_dict(doc)
                except InvalidFrame as exc:
                    await ws.send_json({"error": str(exc)})
                    continue
                cls, confidence = predict(model, frame)
                smoother.update(cls.label, confidence)
                if smoother.current != last_sent:
                    last_sent = smoother.current
                    await ws.send_json({"label": last_sent,
                                        "t": frame.timestamp_ms})
        except WebSocketDisconnect:
            pass

    # -- lexicon administration and assets -------------------------------

    @app.post("/api/lexicon", status_code=201)
    async def add_lexicon_entry(gloss_name: str = Form(alias="gloss"),
                                kind: str = Form("Word"),
                                asset: UploadFile = File(...),
                                _: Session = Depends(current_session)):
        try:
            gloss_kind = GlossKind(kind)
        except ValueError:
            raise HTTPException(422, f"unknown gloss kind: {kind}")
        suffix = Path(asset.filename or "").suffix.lower()
        if suffix not in VIDEO_SUFFIXES:
            raise HTTPException(415, "asset must be an .mp4 or .webm video")
        data = await asset.read()
        if len(data) > MAX_UPLOAD_BYTES:
            raise HTTPException(413, "upload exceeds 50 MB")
        normalized = gloss_name.strip().lower()
        if not normalized:
            raise HTTPException(422, "empty gloss")
        if store.snapshot().lookup(gloss_kind, normalized) is not None:
            raise HTTPException(409, "gloss already registered")
        assets_dir.mkdir(parents=True, exist_ok=True)
        dest = assets_dir / f"{gloss_kind.value.lower()}_{normalized}{suffix}"
        dest.write_bytes(data)
        try:
            version = store.add_entry(normalized, gloss_kind, dest)
        except DuplicateGloss:
            raise HTTPException(409, "gloss already registered")
        return {"gloss": normalized, "kind": gloss_kind.value, "version": version}

    @app.get("/api/lexicon")
    def list_lexicon(_: Session = Depends(current_session)):
        view = store.snapshot()
        return {"version": view.version,
                "entries": [{"gloss": e.gloss, "kind": e.kind.value,
                             "asset_id": e.asset_id}
                            for e in sorted(view._index.values(),
                                            key=lambda e: (e.kind.value, e.gloss))]}

    @app.get("/api/assets/{asset_id}")
    def get_asset(asset_id: str, _: Session = Depends(current_session)):
        view = store.snapshot()
        entry = view.by_asset_id(asset_id)
        if entry is None:
            raise HTTPException(404, "unknown asset")
        path = view.asset_file(entry)
        media = "video/webm" if path.suffix == ".webm" else "video/mp4"
        return FileResponse(path, media_type=media)

    return app
