"""Grayscale-image permutation cipher: SCAN-pattern pixel permutations
combined with keyword-derived carrier keystreams, driven by a small
pipeline-expression key language."""

from .carrier import build_carrier, code_table, codeword, keyword_bytes
from .cipher import (
    add_mod256,
    decrypt,
    encrypt,
    preset_pipeline,
    sub_mod256,
)
from .grid_scan import (
    Pattern,
    ScanPath,
    ScanSpec,
    apply_path,
    generate_path,
    invert_path,
    unapply_path,
)
from .keylang import (
    Add,
    Img,
    Key,
    Scan,
    format_pipeline,
    parse_pipeline,
    validate_decryptable,
)
from .metrics import adjacent_correlation, entropy, histogram, npcr_uaci, report
from .pgm import read_pgm, write_pgm

__version__ = "0.1.0"
