"""Regenerate the deterministic test fixtures in fixtures/."""

import pathlib

import numpy as np

from scancipher.pgm import write_pgm

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def gradient(size=256):
    # Horizontal ramp compressed to 0..199. A full 0..255 ramp would have an
    # exactly uniform histogram (entropy already maximal), which makes
    # entropy useless as a distortion measure; the compressed ramp keeps the
    # image smooth while leaving headroom.
    col = (np.arange(size) * 200) // size
    return np.tile(col.astype(np.uint8), (size, 1))


def synthetic_photo(size=256):
    # Smooth photographic-style stand-in: overlapping radial and sinusoidal
    # shading with mild deterministic texture.
    y, x = np.mgrid[0:size, 0:size] / size
    base = (
        110
        + 70 * np.sin(2 * np.pi * (1.3 * x + 0.4 * y))
        + 45 * np.cos(2 * np.pi * 2.1 * np.hypot(x - 0.35, y - 0.55))
    )
    texture = 12 * np.sin(40 * np.pi * x) * np.sin(34 * np.pi * y)
    return np.clip(base + texture, 0, 255).astype(np.uint8)


def main():
    OUT.mkdir(exist_ok=True)
    write_pgm(gradient(), OUT / "gradient.pgm")
    write_pgm(synthetic_photo(), OUT / "synthetic.pgm")


if __name__ == "__main__":
    main()
