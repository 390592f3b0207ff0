"""Gait features from 2-D pose keypoints, and classifiers over them.

Typical use::

    import gaitlab
    corpus = gaitlab.generate_corpus(seed=1)
    feats = [gaitlab.extract_video(seq) for seq, _ in corpus]
    labels = [label for _, label in corpus]
    model = gaitlab.train("forest", feats, labels, seed=1)
    model.predict(feats[0])
"""

import json

from . import _core
from ._core import (
    FRAME_DIMS,
    VIDEO_DIMS,
    GaitlabError,
    GeometryError,
    Hyperparameters,
    InputError,
    InsufficientDataError,
    Model,
    PoseSequence,
    SchemaMismatchError,
    VideoFeatures,
    algorithms,
    extract_video,
    filter_valid,
    frame_feature_names,
    frame_features,
    generate_corpus,
    keypoint_names,
    labels,
    load_model,
    parse_keypoints,
    read_keypoints,
    read_video_csv,
    schema_fingerprint,
    synthesize,
    train,
    video_feature_names,
    write_keypoints,
    write_video_csv,
)


def evaluate(features, labels, algorithms="all", tasks="multi", folds=5, seed=0, hyper=None):
    """Stratified split, k-fold CV and held-out test; returns the report as a dict.

    ``algorithms`` and ``tasks`` take a name or a list of names. ``tasks="all"``
    runs the 5-class task and every abnormality-vs-normal task.
    """
    if isinstance(algorithms, str):
        algorithms = _core.algorithms() if algorithms == "all" else [algorithms]
    if isinstance(tasks, str):
        if tasks == "all":
            tasks = ["multi"] + [f"binary:{l}" for l in _core.labels() if l != "Normal"]
        else:
            tasks = [tasks]
    text = _core.evaluate_json(
        list(features), list(labels), list(algorithms), list(tasks), folds, seed, hyper or Hyperparameters()
    )
    return json.loads(text)


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
