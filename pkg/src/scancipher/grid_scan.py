"""SCAN-pattern path generation and permutation of grayscale images.

Four base patterns over an R x C grid, each with eight transformations:

* C - continuous raster: boustrophedon by rows.
* D - continuous diagonal: zigzag over anti-diagonals (classic JPEG-style
  traversal, generalized to rectangles).
* O - continuous orthogonal: boustrophedon by columns.
* S - spiral: clockwise inward spiral starting at the top-left corner.

Transform 0 is the base path; 2, 4, 6 are the horizontal mirror, 180-degree
rotation, and vertical mirror of it; each odd transform t is the exact
reverse of transform t - 1.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

PATTERNS = "CDOS"


class Pattern(str, Enum):
    C = "C"
    D = "D"
    O = "O"
    S = "S"


@dataclass(frozen=True)
class ScanSpec:
    """A (pattern, transform) pair naming one of the 32 scan orders."""

    pattern: Pattern
    transform: int

    def __post_init__(self):
        if not isinstance(self.pattern, Pattern):
            object.__setattr__(self, "pattern", Pattern(self.pattern))
        if not 0 <= self.transform <= 7:
            raise ValueError(f"transform must be in 0..7, got {self.transform}")

    def __str__(self):
        return f"{self.pattern.value}{self.transform}"

    @classmethod
    def parse(cls, text: str) -> "ScanSpec":
        """Parse a spec like "D3". Raises ValueError on anything else."""
        if len(text) != 2 or text[0] not in PATTERNS or text[1] not in "01234567":
            raise ValueError(
                f"invalid scan spec {text!r}: expected one of C/D/O/S "
                "followed by a digit 0-7"
            )
        return cls(Pattern(text[0]), int(text[1]))


@dataclass(frozen=True)
class ScanPath:
    """An explicit visit order over an R x C grid.

    `order` holds flat row-major cell indices; element k is the cell visited
    at step k. A valid path visits every cell exactly once.
    """

    rows: int
    cols: int
    order: np.ndarray

    def cells(self):
        """Visit order as (row, col) pairs."""
        return [(int(i) // self.cols, int(i) % self.cols) for i in self.order]


class PathMismatchError(ValueError):
    """Image dimensions do not match the path's grid."""


def _raster_path(rows, cols):
    # Boustrophedon by rows: even rows left to right, odd rows reversed.
    grid = np.arange(rows * cols).reshape(rows, cols)
    grid[1::2] = grid[1::2, ::-1]
    return grid.ravel()


def _orthogonal_path(rows, cols):
    # Boustrophedon by columns: transpose of the raster construction.
    grid = np.arange(rows * cols).reshape(rows, cols).T.copy()
    grid[1::2] = grid[1::2, ::-1]
    return grid.ravel()


def _diagonal_path(rows, cols):
    # Anti-diagonal zigzag from (0, 0). Odd diagonals run top-right to
    # bottom-left, even diagonals the other way, so consecutive cells stay
    # 8-adjacent across diagonal boundaries.
    order = np.empty(rows * cols, dtype=np.int64)
    k = 0
    for d in range(rows + cols - 1):
        r_lo = max(0, d - cols + 1)
        r_hi = min(d, rows - 1)
        rs = range(r_lo, r_hi + 1) if d % 2 else range(r_hi, r_lo - 1, -1)
        for r in rs:
            order[k] = r * cols + (d - r)
            k += 1
    return order


def _spiral_path(rows, cols):
    # Clockwise inward spiral: top row right, right edge down, bottom row
    # left, left edge up, then the next ring.
    order = np.empty(rows * cols, dtype=np.int64)
    top, bottom, left, right = 0, rows - 1, 0, cols - 1
    k = 0
    while top <= bottom and left <= right:
        for c in range(left, right + 1):
            order[k] = top * cols + c
            k += 1
        for r in range(top + 1, bottom + 1):
            order[k] = r * cols + right
            k += 1
        if top < bottom:
            for c in range(right - 1, left - 1, -1):
                order[k] = bottom * cols + c
                k += 1
        if left < right:
            for r in range(bottom - 1, top, -1):
                order[k] = r * cols + left
                k += 1
        top, bottom, left, right = top + 1, bottom - 1, left + 1, right - 1
    return order


_BASE = {
    Pattern.C: _raster_path,
    Pattern.D: _diagonal_path,
    Pattern.O: _orthogonal_path,
    Pattern.S: _spiral_path,
}


@lru_cache(maxsize=256)
def _base_order(pattern, rows, cols):
    order = _BASE[pattern](rows, cols)
    order.flags.writeable = False
    return order


def generate_path(spec: ScanSpec, rows: int, cols: int) -> ScanPath:
    """Build the visit order for `spec` over a rows x cols grid."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    order = _base_order(spec.pattern, rows, cols)
    even = spec.transform & ~1
    r, c = np.divmod(order, cols)
    if even == 2:  # horizontal mirror, start top-right
        c = cols - 1 - c
    elif even == 4:  # 180-degree rotation, start bottom-right
        r, c = rows - 1 - r, cols - 1 - c
    elif even == 6:  # vertical mirror, start bottom-left
        r = rows - 1 - r
    order = r * cols + c
    if spec.transform % 2:
        order = order[::-1]
    return ScanPath(rows, cols, np.ascontiguousarray(order))


def invert_path(path: ScanPath) -> ScanPath:
    """Path sending each cell back to its position index; an involution."""
    inverse = np.empty_like(path.order)
    inverse[path.order] = np.arange(path.order.size)
    return ScanPath(path.rows, path.cols, inverse)


def _check_dims(img: np.ndarray, path: ScanPath):
    if img.shape != (path.rows, path.cols):
        raise PathMismatchError(
            f"image is {img.shape[0]}x{img.shape[1]} but path covers "
            f"{path.rows}x{path.cols}"
        )


def apply_path(img: np.ndarray, path: ScanPath) -> np.ndarray:
    """Gather pixels along the path into raster order."""
    _check_dims(img, path)
    return img.ravel()[path.order].reshape(img.shape)


def unapply_path(img: np.ndarray, path: ScanPath) -> np.ndarray:
    """Exact inverse of apply_path."""
    _check_dims(img, path)
    out = np.empty_like(img).ravel()
    out[path.order] = img.ravel()
    return out.reshape(img.shape)
