"""Binary PGM (P5) reading and canonical, bit-exact writing."""

import numpy as np


class PgmFormatError(ValueError):
    """File is not a well-formed 8-bit binary PGM."""


def _read_token(data, pos):
    # Skip whitespace and '#' comments, then take one whitespace-delimited
    # token. Returns (token, position just past it).
    n = len(data)
    while pos < n:
        ch = data[pos:pos + 1]
        if ch.isspace():
            pos += 1
        elif ch == b"#":
            end = data.find(b"\n", pos)
            pos = n if end < 0 else end + 1
        else:
            break
    start = pos
    while pos < n and not data[pos:pos + 1].isspace():
        pos += 1
    if start == pos:
        raise PgmFormatError("truncated header")
    return data[start:pos], pos


def parse_pgm(data: bytes) -> np.ndarray:
    if data[:2] != b"P5":
        magic = data[:2].decode("ascii", "replace")
        raise PgmFormatError(
            f"unsupported magic {magic!r}: only binary P5 graymaps are accepted"
        )
    pos = 2
    fields = []
    for _ in range(3):
        token, pos = _read_token(data, pos)
        try:
            fields.append(int(token))
        except ValueError:
            raise PgmFormatError(f"non-numeric header field {token!r}") from None
    cols, rows, maxval = fields
    if rows < 1 or cols < 1:
        raise PgmFormatError(f"invalid dimensions {cols}x{rows}")
    if maxval != 255:
        raise PgmFormatError(f"unsupported maxval {maxval}: must be 255")
    # Exactly one whitespace byte separates the header from the payload.
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise PgmFormatError("missing separator before pixel payload")
    pos += 1
    payload = data[pos:pos + rows * cols]
    if len(payload) < rows * cols:
        raise PgmFormatError(
            f"short pixel payload: expected {rows * cols} bytes, "
            f"got {len(payload)}"
        )
    return np.frombuffer(payload, dtype=np.uint8).reshape(rows, cols).copy()


def read_pgm(path) -> np.ndarray:
    """Load an 8-bit grayscale image from a binary PGM file."""
    with open(path, "rb") as fh:
        return parse_pgm(fh.read())


def pgm_bytes(img: np.ndarray) -> bytes:
    img = np.asarray(img, dtype=np.uint8)
    rows, cols = img.shape
    return f"P5\n{cols} {rows}\n255\n".encode("ascii") + img.tobytes()


def write_pgm(img: np.ndarray, path):
    """Write the canonical P5 encoding; read_pgm round-trips it bit-exactly."""
    with open(path, "wb") as fh:
        fh.write(pgm_bytes(img))
