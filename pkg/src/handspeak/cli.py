"""Operator command line: translation, datasets, training, eval, serving.

Exit codes: 0 success, 2 operational failure, 64 usage/parse error.
Machine-readable JSON/CSV goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click

from . import gloss as gloss_mod
from .gloss import TENSE_MARKERS
from .lexicon import GlossKind, LexiconError, LexiconStore
from .nlp import Tense, extract_keywords, normalize_text
from .recognizer import (DegenerateDataset, DimensionMismatch, InvalidFrame,
                         SerializationError, TrainConfig, evaluate,
                         load_dataset_jsonl, load_model, predict,
                         read_frames_jsonl, save_model, smooth_stream,
                         synth_frames, train, write_frames_jsonl)


class OperationalError(click.ClickException):
    exit_code = 2


@click.group()
def cli():
    """Sign-language translation and recognition toolkit."""


# -- translation ---------------------------------------------------------

@cli.command()
@click.option("--text", required=True, help="English sentence to translate.")
@click.option("--lexicon", "lexicon_path", type=click.Path(), default=None,
              help="Path to the lexicon manifest JSON.")
@click.option("--keywords-only", is_flag=True,
              help="Print tense marker and keywords instead of the manifest.")
def translate(text, lexicon_path, keywords_only):
    """Compile a sentence into a sign playlist manifest (JSON on stdout)."""
    if not normalize_text(text):
        raise OperationalError("empty input")
    tense, keywords = extract_keywords(text)
    if keywords_only:
        marker = TENSE_MARKERS.get(tense)
        click.echo(" ".join(([marker] if marker else []) + keywords))
        return
    if lexicon_path is None:
        raise OperationalError("--lexicon is required unless --keywords-only")
    try:
        store = LexiconStore(lexicon_path)
    except (LexiconError, OSError) as exc:
        raise OperationalError(f"cannot load lexicon: {exc}")
    manifest = gloss_mod.translate(text, tense, keywords, store.snapshot())
    click.echo(json.dumps(manifest.to_dict(), indent=2))


# -- lexicon management --------------------------------------------------

@cli.group()
def lexicon():
    """Inspect and extend the gloss-to-asset registry."""


@lexicon.command("add")
@click.option("--manifest", required=True, type=click.Path())
@click.option("--gloss", "gloss_name", required=True)
@click.option("--kind", type=click.Choice([k.value for k in GlossKind]),
              default="Word")
@click.option("--asset", required=True, type=click.Path())
def lexicon_add(manifest, gloss_name, kind, asset):
    """Register a new gloss backed by an existing asset file."""
    try:
        store = LexiconStore(manifest)
        version = store.add_entry(gloss_name, GlossKind(kind), asset)
    except (LexiconError, OSError) as exc:
        raise OperationalError(str(exc))
    click.echo(json.dumps({"gloss": gloss_name.lower(), "version": version}))


@lexicon.command("list")
@click.option("--manifest", required=True, type=click.Path())
def lexicon_list(manifest):
    """Print all registered glosses as JSON."""
    try:
        view = LexiconStore(manifest).snapshot()
    except (LexiconError, OSError) as exc:
        raise OperationalError(str(exc))
    entries = sorted(view._index.values(), key=lambda e: (e.kind.value, e.gloss))
    click.echo(json.dumps({
        "version": view.version,
        "entries": [{"gloss": e.gloss, "kind": e.kind.value, "asset": e.asset_path}
                    for e in entries],
    }, indent=2))


@lexicon.command("check")
@click.option("--manifest", required=True, type=click.Path())
def lexicon_check(manifest):
    """Validate the manifest: assets present, mandatory set complete."""
    try:
        view = LexiconStore(manifest).snapshot()
    except (LexiconError, OSError) as exc:
        raise OperationalError(str(exc))
    click.echo(f"ok: {len(view)} entries, version {view.version}")


# -- datasets ------------------------------------------------------------

@cli.group()
def dataset():
    """Create and inspect landmark datasets."""


@dataset.command("synth")
@click.option("--classes", default=10, show_default=True)
@click.option("--per-class", default=200, show_default=True)
@click.option("--seed", default=7, show_default=True)
@click.option("--out", required=True, type=click.Path())
def dataset_synth(classes, per_class, seed, out):
    """Generate a separable synthetic landmark dataset (JSONL)."""
    try:
        frames = synth_frames(classes, per_class, seed)
    except DegenerateDataset as exc:
        raise OperationalError(str(exc))
    write_frames_jsonl(out, frames)
    click.echo(f"wrote {len(frames)} frames to {out}", err=True)


@dataset.command("inspect")
@click.option("--data", required=True, type=click.Path())
def dataset_inspect(data):
    """Print per-class sample counts for a JSONL dataset."""
    try:
        ds = load_dataset_jsonl(data)
    except (DegenerateDataset, InvalidFrame, OSError, ValueError) as exc:
        raise OperationalError(str(exc))
    counts = ds.class_counts()
    click.echo(json.dumps({
        "samples": len(ds),
        "classes": [{"label": label, "count": int(c)}
                    for label, c in zip(ds.class_labels, counts)],
    }, indent=2))


# -- training and evaluation ---------------------------------------------

@cli.command("train")
@click.option("--data", required=True, type=click.Path())
@click.option("--epochs", default=500, show_default=True)
@click.option("--batch", default=128, show_default=True)
@click.option("--val", default=0.25, show_default=True,
              help="Validation fraction of the stratified split.")
@click.option("--seed", default=0, show_default=True)
@click.option("--lr", default=0.01, show_default=True)
@click.option("--momentum", default=0.9, show_default=True)
@click.option("--model-out", required=True, type=click.Path())
@click.option("--log-out", type=click.Path(), default=None,
              help="Per-epoch CSV log (epoch, train_loss, val_acc).")
def train_cmd(data, epochs, batch, val, seed, lr, momentum, model_out, log_out):
    """Train the landmark classifier and write the model file."""
    try:
        ds = load_dataset_jsonl(data)
        config = TrainConfig(epochs=epochs, batch_size=batch,
                             validation_fraction=val, learning_rate=lr,
                             momentum=momentum, rng_seed=seed)
        model, tlog = train(ds, config)
    except (DegenerateDataset, InvalidFrame, OSError, ValueError) as exc:
        raise OperationalError(str(exc))
    save_model(model, model_out)
    if log_out:
        with open(log_out, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["epoch", "train_loss", "val_acc"])
            for stats in tlog.epochs:
                writer.writerow([stats.epoch, repr(stats.train_loss),
                                 repr(stats.val_accuracy)])
    click.echo(json.dumps({"final_val_accuracy": tlog.final_val_accuracy(),
                           "epochs": len(tlog.epochs)}))


@cli.command("eval")
@click.option("--model", "model_path", required=True, type=click.Path())
@click.option("--data", required=True, type=click.Path())
@click.option("--plot", type=click.Path(), default=None,
              help="Write the F1-confidence curve as CSV for plotting.")
def eval_cmd(model_path, data, plot):
    """Evaluate a model: confusion matrix, per-class F1, confidence curve."""
    try:
        model = load_model(model_path)
        ds = load_dataset_jsonl(data)
        report = evaluate(model, ds)
    except (SerializationError, DegenerateDataset, DimensionMismatch,
            InvalidFrame, OSError, ValueError) as exc:
        raise OperationalError(str(exc))
    click.echo(json.dumps(report.to_dict(), indent=2))
    if plot:
        with open(plot, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["threshold", "macro_f1"])
            for t, f1 in report.f1_confidence_curve:
                writer.writerow([t, repr(f1)])


@cli.command("predict")
@click.option("--model", "model_path", required=True, type=click.Path())
@click.option("--frames", required=True, type=click.Path(),
              help="Landmark frames as JSON Lines.")
@click.option("--smooth", is_flag=True,
              help="Also print the smoothed emission per frame.")
def predict_cmd(model_path, frames, smooth):
    """Classify recorded frames; one JSON line per frame on stdout."""
    try:
        model = load_model(model_path)
        frame_list = read_frames_jsonl(frames)
        preds = [predict(model, fr) for fr in frame_list]
    except (SerializationError, InvalidFrame, OSError, ValueError) as exc:
        raise OperationalError(str(exc))
    smoothed = smooth_stream((c.label, conf) for c, conf in preds) \
        if smooth else [None] * len(preds)
    for (cls, conf), emitted, frame in zip(preds, smoothed, frame_list):
        doc = {"t": frame.timestamp_ms, "label": cls.label,
               "confidence": round(conf, 6)}
        if smooth:
            doc["emitted"] = emitted
        click.echo(json.dumps(doc))


# -- serving -------------------------------------------------------------

@cli.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--lexicon-manifest", required=True, type=click.Path())
@click.option("--assets-dir", type=click.Path(), default=None)
@click.option("--model-path", type=click.Path(), default=None)
@click.option("--data-dir", required=True, type=click.Path())
def serve(port, host, lexicon_manifest, assets_dir, model_path, data_dir):
    """Run the HTTP service."""
    import uvicorn

    from .service import ServiceConfig, create_app

    try:
        app = create_app(ServiceConfig(
            lexicon_manifest=Path(lexicon_manifest),
            data_dir=Path(data_dir),
            assets_dir=Path(assets_dir) if assets_dir else None,
            model_path=Path(model_path) if model_path else None,
        ))
    except (LexiconError, SerializationError, OSError) as exc:
        raise OperationalError(str(exc))
    uvicorn.run(app, host=host, port=port, log_level="info")


def main(argv=None):
    try:
        return cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.UsageError as exc:
        exc.show()
        sys.exit(64)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(1)


if __name__ == "__main__":
    main()
