"""Pipeline evaluation: encryption, structural decryption, and the five
preset pipelines (scan-only, carrier-only, and the three hybrid stagings).
"""

import numpy as np

from . import keylang
from .carrier import build_carrier
from .grid_scan import ScanSpec, apply_path, generate_path, unapply_path
from .keylang import Add, Img, Key, PipelineExpr, Scan

PRESET_VARIANTS = "abcde"


class PipelineValidationError(ValueError):
    """Pipeline failed the decryptability check."""

    def __init__(self, diagnostics):
        super().__init__("; ".join(diagnostics))
        self.diagnostics = diagnostics


class DimensionError(ValueError):
    """Operands of a pixel-wise operation have different shapes."""


def _check_same_shape(a, b):
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")


def add_mod256(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pixel-wise (a + b) mod 256."""
    _check_same_shape(a, b)
    return (a.astype(np.uint8) + b.astype(np.uint8))


def sub_mod256(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pixel-wise (a - b) mod 256; inverts add_mod256."""
    _check_same_shape(a, b)
    return (a.astype(np.uint8) - b.astype(np.uint8))


def _validate(expr):
    diagnostics = keylang.validate_decryptable(expr)
    if diagnostics:
        raise PipelineValidationError(diagnostics)


def _evaluate(expr, img):
    rows, cols = img.shape
    match expr:
        case Img():
            return img
        case Key(keyword):
            return build_carrier(keyword, rows, cols)
        case Scan(spec, child):
            return apply_path(_evaluate(child, img), generate_path(spec, rows, cols))
        case Add(left, right):
            return add_mod256(_evaluate(left, img), _evaluate(right, img))
    raise TypeError(f"not a pipeline node: {expr!r}")


def encrypt(img: np.ndarray, expr: PipelineExpr) -> np.ndarray:
    """Evaluate the pipeline over `img`. Carriers and scan paths take the
    image's dimensions."""
    _validate(expr)
    img = np.asarray(img, dtype=np.uint8)
    return _evaluate(expr, img)


def decrypt(img: np.ndarray, expr: PipelineExpr) -> np.ndarray:
    """Invert the pipeline structurally, peeling stages off the plaintext-
    bearing spine from the outside in."""
    _validate(expr)
    img = np.asarray(img, dtype=np.uint8)
    rows, cols = img.shape
    node = expr
    while True:
        match node:
            case Img():
                return img
            case Scan(spec, child):
                img = unapply_path(img, generate_path(spec, rows, cols))
                node = child
            case Add(left, right):
                # The non-plaintext operand is key-determined, so it can be
                # recomputed forward and subtracted off.
                spine, other = (
                    (left, right) if keylang.count_img_leaves(left) else (right, left)
                )
                img = sub_mod256(img, _evaluate(other, img))
                node = spine
            case _:
                raise TypeError(f"not a pipeline node: {node!r}")


def preset_pipeline(variant: str, spec: ScanSpec, keyword: str) -> PipelineExpr:
    """One of the five reference pipelines, tagged 'a' through 'e':

    a) scan the plaintext;
    b) add a carrier;
    c) scan the plaintext, then add a carrier;
    d) add a scanned carrier;
    e) scan both, add, scan again.
    """
    match variant.lower():
        case "a":
            return Scan(spec, Img())
        case "b":
            return Add(Img(), Key(keyword))
        case "c":
            return Add(Scan(spec, Img()), Key(keyword))
        case "d":
            return Add(Img(), Scan(spec, Key(keyword)))
        case "e":
            return Scan(spec, Add(Scan(spec, Img()), Scan(spec, Key(keyword))))
    raise ValueError(f"unknown preset variant {variant!r}; expected a-e")
