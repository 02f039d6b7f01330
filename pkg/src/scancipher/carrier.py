"""Keyword-to-carrier-image synthesis via the 4-out-of-8 code.

Every codeword is a byte with exactly two 1-bits in each nibble, which gives
6 * 6 = 36 possibilities - one per alphanumeric symbol class (letters are
case-insensitive). A carrier image is the keyword's codewords tiled
row-major over the target dimensions.
"""

import numpy as np

# The 36 codewords in table order (ascending byte value). Letters A..Z take
# rows 1-26, digits 0..9 take rows 27-36.
CODEWORDS = (
    0x33, 0x35, 0x36, 0x39, 0x3A, 0x3C,  # A-F
    0x53, 0x55, 0x56, 0x59, 0x5A, 0x5C,  # G-L
    0x63, 0x65, 0x66, 0x69, 0x6A, 0x6C,  # M-R
    0x93, 0x95, 0x96, 0x99, 0x9A, 0x9C,  # S-X
    0xA3, 0xA5,                          # Y-Z
    0xA6, 0xA9, 0xAA, 0xAC, 0xC3, 0xC5, 0xC6, 0xC9, 0xCA, 0xCC,  # 0-9
)

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"

_LOOKUP = {ch: cw for ch, cw in zip(ALPHABET, CODEWORDS)}
_LOOKUP.update({ch.lower(): cw for ch, cw in zip(ALPHABET[:26], CODEWORDS)})


class KeywordError(ValueError):
    """Keyword is empty or contains a non-alphanumeric character."""


def code_table():
    """All 36 (characters, codeword) entries in table order."""
    entries = []
    for ch, cw in zip(ALPHABET, CODEWORDS):
        chars = f"{ch},{ch.lower()}" if ch.isalpha() else ch
        entries.append((chars, cw))
    return entries


def codeword(ch: str) -> int:
    """Codeword for one alphanumeric character (case-insensitive)."""
    try:
        return _LOOKUP[ch]
    except KeyError:
        raise KeywordError(
            f"character {ch!r} is not alphanumeric; keywords use A-Z, a-z, 0-9"
        ) from None


def keyword_bytes(keyword: str) -> list:
    """Map every keyword character through the code table."""
    if not keyword:
        raise KeywordError("keyword must be non-empty")
    out = []
    for i, ch in enumerate(keyword):
        if ch not in _LOOKUP:
            raise KeywordError(
                f"character {ch!r} at position {i} is not alphanumeric; "
                "keywords use A-Z, a-z, 0-9"
            )
        out.append(_LOOKUP[ch])
    return out


def build_carrier(keyword: str, rows: int, cols: int) -> np.ndarray:
    """Tile the keyword's codewords row-major to a rows x cols image."""
    if rows < 1 or cols < 1:
        raise ValueError("carrier dimensions must be positive")
    pattern = np.array(keyword_bytes(keyword), dtype=np.uint8)
    n = rows * cols
    reps = -(-n // pattern.size)
    return np.tile(pattern, reps)[:n].reshape(rows, cols)
