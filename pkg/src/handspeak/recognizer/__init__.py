from .dataset import (DEFAULT_CLASS_LABELS, DegenerateDataset, LandmarkDataset,
                      load_dataset_jsonl)
from .evaluate import CURVE_THRESHOLDS, EvalReport, evaluate
from .landmarks import (FEATURE_DIM, Hand, InvalidFrame, LandmarkFrame,
                        frame_from_dict, frame_to_dict, normalize_features,
                        read_frames_jsonl, write_frames_jsonl)
from .mlp import (DimensionMismatch, MlpModel, SerializationError,
                  VersionMismatch, load_model, save_model, softmax)
from .predict import SignClass, predict, predict_batch
from .stream import NO_LABEL, StreamSmoother, smooth_stream
from .synth import synth_dataset, synth_frames
from .train import EpochStats, TrainConfig, TrainingLog, stratified_split, train
