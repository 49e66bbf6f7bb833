"""Point files, histogram files and 8-bit PGM images."""

from __future__ import annotations

import math
import re
from pathlib import Path

import numpy as np

from bregkern.core.coords import ETA, LAMBDA, THETA, Point, as_tag
from bregkern.errors import BregkernError, DomainError, InputError
from bregkern.manifolds.categorical import smooth_histogram

KNOWN_TAGS = {"theta": THETA, "eta": ETA, "lambda": LAMBDA}
HISTOGRAM_BINS = 256


def parse_tag(text: str):
    key = text.strip().lower()
    if key not in KNOWN_TAGS:
        raise ValueError(f"unknown coordinate tag {text.strip()!r}")
    return KNOWN_TAGS[key]


def _read_lines(path):
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise FileNotFoundError(f"no such file: {path}") from None
    except UnicodeDecodeError as exc:
        raise InputError(f"not a text file ({exc.reason})", path) from None


def _parse_reals(text, path, lineno):
    try:
        vals = [float(tok) for tok in text.split(",")]
    except ValueError:
        raise InputError(f"cannot parse {text.strip()!r} as comma-separated reals", path, lineno) from None
    if not all(math.isfinite(v) for v in vals):
        raise InputError("values must be finite", path, lineno)
    return vals


def ingest_points(path, coords=None, manifold=None) -> list[Point]:
    """Read ``tag;v1,v2,...`` records, one per line.

    Blank lines and ``#`` comments are skipped. A record without ``tag;`` uses
    ``coords``. When ``manifold`` is given each record must have the chart's
    length and lie in the domain of both flat coordinate systems.
    """
    default = as_tag(coords) if coords is not None else None
    out = []
    for lineno, raw in enumerate(_read_lines(path), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ";" in line:
            tag_text, body = line.split(";", 1)
            try:
                tag = parse_tag(tag_text)
            except ValueError as exc:
                raise InputError(str(exc), path, lineno) from None
        elif default is not None:
            tag, body = default, line
        else:
            raise InputError("record has no coordinate tag and no default was given", path, lineno)
        p = Point(tag, _parse_reals(body, path, lineno))
        if manifold is not None:
            try:
                manifold.check_point(p)
                manifold.coords(p, THETA)
                manifold.coords(p, ETA)
            except (BregkernError, ValueError, KeyError) as exc:
                raise InputError(str(exc), path, lineno) from None
        out.append(p)
    return out


def ingest_histogram(path, smoothing: float = 1e-8) -> np.ndarray:
    """One non-negative count (or density) per line, smoothed and normalised."""
    counts = []
    for lineno, raw in enumerate(_read_lines(path), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        vals = _parse_reals(line, path, lineno)
        if len(vals) != 1:
            raise InputError("expected a single value per line", path, lineno)
        if vals[0] < 0:
            raise InputError("histogram counts must be non-negative", path, lineno)
        counts.append(vals[0])
    if not counts:
        raise InputError("histogram is empty", path)
    try:
        return smooth_histogram(counts, smoothing)
    except DomainError as exc:
        raise InputError(str(exc), path) from None


_PGM_HEADER = re.compile(rb"P5(?:\s|#[^\n]*\n)+(\d+)(?:\s|#[^\n]*\n)+(\d+)(?:\s|#[^\n]*\n)+(\d+)\s")


def read_pgm(path) -> np.ndarray:
    """Pixel array of a binary (P5) PGM image with maxval below 256."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise FileNotFoundError(f"no such file: {path}") from None
    m = _PGM_HEADER.match(data)
    if m is None:
        raise InputError("not a binary (P5) PGM file", path)
    width, height, maxval = (int(g) for g in m.groups())
    if not 0 < maxval < 256:
        raise InputError(f"only 8-bit PGM images are supported (maxval {maxval})", path)
    body = data[m.end() : m.end() + width * height]
    if len(body) != width * height:
        raise InputError(f"truncated pixel data: expected {width * height} bytes, got {len(body)}", path)
    return np.frombuffer(body, dtype=np.uint8).reshape(height, width)


def pgm_histogram(path) -> np.ndarray:
    """256-bin intensity counts of a PGM image, rescaled to the 0..255 range."""
    pixels = read_pgm(path).astype(np.int64)
    maxval = int(_PGM_HEADER.match(Path(path).read_bytes()).group(3))
    if maxval != 255:
        pixels = np.rint(pixels * (255.0 / maxval)).astype(np.int64)
    return np.bincount(pixels.reshape(-1), minlength=HISTOGRAM_BINS).astype(float)
