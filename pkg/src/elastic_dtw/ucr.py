"""Loading, admission and round-tripping of UCR-style dataset files.

One record per line: the first field is the class label (kept as a raw
string), the remaining fields are the series values. Tab-separated files are
the norm; comma- or whitespace-separated files load too (tabs win when
present, then commas). ``NaN`` tokens, empty fields and non-finite values are
recorded as missing data; rows of differing lengths mark the split as
variable length. No normalization of any kind happens here: values are used
exactly as they appear in the file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import DatasetError, LabeledDataset, ParseError

__all__ = [
    "DatasetPair",
    "load_split",
    "write_split",
    "load_dataset",
    "admit",
    "dataset_metadata",
    "metadata_json",
]


@dataclass(frozen=True)
class DatasetPair:
    """The train and test splits of one dataset."""

    name: str
    train: LabeledDataset
    test: LabeledDataset


def _split_fields(line: str) -> list[str]:
    if "\t" in line:
        return line.split("\t")
    if "," in line:
        return line.split(",")
    return line.split()


def _infer_identity(path: Path) -> tuple[str, str]:
    stem = path.stem
    upper = stem.upper()
    for suffix, split in (("_TRAIN", "train"), ("_TEST", "test")):
        if upper.endswith(suffix):
            return stem[: -len(suffix)], split
    return stem, "train"


def load_split(path, *, name: str | None = None, split: str | None = None) -> LabeledDataset:
    """Load one split file into a :class:`LabeledDataset`.

    ``name`` and ``split`` default to what the filename suggests
    (``<Name>_TRAIN.tsv`` style). Missing values are stored as NaN and
    surface through the dataset's ``has_missing`` flag rather than failing
    the load; admission decides what to do about them.
    """
    path = Path(path)
    inferred_name, inferred_split = _infer_identity(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc
    # Typographic minus appears in some exports; normalize before parsing.
    text = text.replace("−", "-")
    series: list[np.ndarray] = []
    labels: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = _split_fields(line)
        label = fields[0].strip()
        if not label:
            raise ParseError("record has an empty label", path, lineno)
        tokens = fields[1:]
        if not tokens:
            raise ParseError("record has no values", path, lineno)
        values = np.empty(len(tokens), dtype=np.float64)
        for k, token in enumerate(tokens):
            token = token.strip()
            if token == "" or token.lower() == "nan":
                values[k] = np.nan
                continue
            try:
                values[k] = float(token)
            except ValueError:
                raise ParseError(f"malformed numeric field {token!r}", path, lineno) from None
        series.append(values)
        labels.append(label)
    if not series:
        raise ParseError("file contains no records", path)
    return LabeledDataset(
        name=name if name is not None else inferred_name,
        split=split if split is not None else inferred_split,
        series=tuple(series),
        labels=tuple(labels),
    )


def write_split(dataset: LabeledDataset, path) -> None:
    """Write a split back to tab-separated text; reloading reproduces it bit for bit."""
    path = Path(path)
    lines = []
    for values, label in zip(dataset.series, dataset.labels):
        cells = [label] + [repr(float(v)) for v in values]
        lines.append("\t".join(cells))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_dataset(root, name: str) -> DatasetPair:
    """Load ``<root>/<name>/<name>_TRAIN.tsv`` and the matching test file."""
    root = Path(root)
    train_path = root / name / f"{name}_TRAIN.tsv"
    test_path = root / name / f"{name}_TEST.tsv"
    for p in (train_path, test_path):
        if not p.is_file():
            raise DatasetError(f"dataset {name!r}: missing split file {p}")
    train = load_split(train_path, name=name, split="train")
    test = load_split(test_path, name=name, split="test")
    return DatasetPair(name=name, train=train, test=test)


def admit(pair: DatasetPair) -> tuple[bool, str]:
    """Decide whether a dataset is usable for the evaluation pipeline.

    Rejection reasons, checked in order: ``variable length`` (within either
    split or between them), ``missing data``, ``single class`` and
    ``single exemplar class`` (a train class with fewer than two items).
    Admitted datasets return ``(True, "")``.
    """
    train, test = pair.train, pair.test
    if train.variable_length or test.variable_length or train.length != test.length:
        return False, "variable length"
    if train.has_missing or test.has_missing:
        return False, "missing data"
    if len(train.classes) < 2:
        return False, "single class"
    if any(count < 2 for count in train.class_counts.values()):
        return False, "single exemplar class"
    return True, ""


def dataset_metadata(pair: DatasetPair) -> dict:
    """JSON-ready description of a dataset pair, admission verdict included."""
    admitted, reason = admit(pair)
    meta = {
        "name": pair.name,
        "train_size": len(pair.train),
        "test_size": len(pair.test),
        "length": pair.train.length if pair.train.length == pair.test.length else None,
        "classes": list(pair.train.classes),
        "train_class_counts": pair.train.class_counts,
        "test_class_counts": pair.test.class_counts,
        "variable_length": pair.train.variable_length or pair.test.variable_length,
        "has_missing": pair.train.has_missing or pair.test.has_missing,
        "admitted": admitted,
        "rejection_reason": reason,
    }
    return meta


def metadata_json(pairs) -> str:
    """Serialize metadata for several dataset pairs as deterministic JSON."""
    payload = [dataset_metadata(p) for p in pairs]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
