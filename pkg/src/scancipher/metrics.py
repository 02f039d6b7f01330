"""Distortion metrics: histogram, Shannon entropy, adjacent-pixel
correlation, and the pairwise NPCR / UACI change rates."""

import json
from dataclasses import dataclass

import numpy as np

DIRECTIONS = ("horizontal", "vertical", "diagonal")


def histogram(img: np.ndarray) -> np.ndarray:
    """Counts of each pixel value 0..255."""
    return np.bincount(np.asarray(img, dtype=np.uint8).ravel(), minlength=256)


def entropy(img: np.ndarray) -> float:
    """Shannon entropy in bits per pixel, 0 for constant images, 8 max."""
    counts = histogram(img)
    p = counts[counts > 0] / counts.sum()
    return float(-np.sum(p * np.log2(p)))


def _adjacent_pairs(img, direction):
    if direction == "horizontal":
        return img[:, :-1], img[:, 1:]
    if direction == "vertical":
        return img[:-1, :], img[1:, :]
    if direction == "diagonal":
        return img[:-1, :-1], img[1:, 1:]
    raise ValueError(f"unknown direction {direction!r}")


def adjacent_correlation(img: np.ndarray, direction: str):
    """Pearson correlation over all adjacent pixel pairs in one direction.

    Returns None (not an error) when either marginal is constant. Raises
    ValueError if the image has no pair at all in that direction.
    """
    img = np.asarray(img, dtype=np.float64)
    x, y = _adjacent_pairs(img, direction)
    if x.size < 2:
        raise ValueError(
            f"image too small for {direction} correlation: needs at least "
            "2 adjacent pairs"
        )
    x, y = x.ravel(), y.ravel()
    dx, dy = x - x.mean(), y - y.mean()
    sx = np.sqrt(np.sum(dx * dx))
    sy = np.sqrt(np.sum(dy * dy))
    if sx == 0.0 or sy == 0.0:
        return None
    return float(np.sum(dx * dy) / (sx * sy))


def npcr_uaci(a: np.ndarray, b: np.ndarray):
    """Percentage of changed pixels and mean absolute change over 255."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    npcr = 100.0 * np.count_nonzero(a != b) / a.size
    uaci = 100.0 * np.abs(a - b).mean() / 255.0
    return float(npcr), float(uaci)


@dataclass
class MetricsReport:
    rows: int
    cols: int
    histogram: np.ndarray
    entropy: float
    correlations: dict  # direction -> float | None
    npcr: float | None = None
    uaci: float | None = None

    def to_text(self) -> str:
        """Line-oriented key=value rendering (histogram as a CSV line)."""
        lines = [
            f"rows={self.rows}",
            f"cols={self.cols}",
            f"entropy={self.entropy:.6f}",
        ]
        for direction in DIRECTIONS:
            value = self.correlations.get(direction)
            rendered = "undefined" if value is None else f"{value:.6f}"
            lines.append(f"correlation_{direction}={rendered}")
        if self.npcr is not None:
            lines.append(f"npcr={self.npcr:.6f}")
            lines.append(f"uaci={self.uaci:.6f}")
        lines.append("histogram=" + ",".join(str(c) for c in self.histogram))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "rows": self.rows,
            "cols": self.cols,
            "entropy": self.entropy,
            "correlations": dict(self.correlations),
            "histogram": [int(c) for c in self.histogram],
        }
        if self.npcr is not None:
            doc["npcr"] = self.npcr
            doc["uaci"] = self.uaci
        return json.dumps(doc, indent=2) + "\n"


def report(img: np.ndarray, reference: np.ndarray | None = None) -> MetricsReport:
    """All metrics for one image, plus NPCR/UACI against a reference."""
    img = np.asarray(img, dtype=np.uint8)
    correlations = {}
    for direction in DIRECTIONS:
        try:
            correlations[direction] = adjacent_correlation(img, direction)
        except ValueError:
            correlations[direction] = None
    result = MetricsReport(
        rows=img.shape[0],
        cols=img.shape[1],
        histogram=histogram(img),
        entropy=entropy(img),
        correlations=correlations,
    )
    if reference is not None:
        result.npcr, result.uaci = npcr_uaci(img, reference)
    return result
