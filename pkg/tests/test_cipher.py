import numpy as np
import pytest

from conftest import random_image
from scancipher.carrier import build_carrier
from scancipher.cipher import (
    DimensionError,
    PipelineValidationError,
    add_mod256,
    decrypt,
    encrypt,
    preset_pipeline,
    sub_mod256,
)
from scancipher.grid_scan import ScanSpec
from scancipher.keylang import format_pipeline, parse_pipeline

D0 = ScanSpec.parse("D0")
KW = "UniversityOfMysore"


def test_add_sub_mod256():
    a = np.array([[200, 0, 255]], dtype=np.uint8)
    b = np.array([[170, 0, 1]], dtype=np.uint8)
    assert add_mod256(a, b).tolist() == [[114, 0, 0]]
    assert sub_mod256(add_mod256(a, b), b).tolist() == a.tolist()
    assert sub_mod256(np.array([[114]], dtype=np.uint8),
                      np.array([[170]], dtype=np.uint8)).tolist() == [[200]]
    assert sub_mod256(np.array([[0]], dtype=np.uint8),
                      np.array([[1]], dtype=np.uint8)).tolist() == [[255]]


def test_add_dimension_mismatch():
    with pytest.raises(DimensionError):
        add_mod256(np.zeros((2, 2), np.uint8), np.zeros((2, 3), np.uint8))
    with pytest.raises(DimensionError):
        sub_mod256(np.zeros((2, 2), np.uint8), np.zeros((3, 2), np.uint8))


def test_identity_pipeline(rng):
    img = random_image(rng, 5, 7)
    expr = parse_pipeline("img")
    assert (encrypt(img, expr) == img).all()
    assert (decrypt(img, expr) == img).all()


def test_constant_carrier_shift(rng):
    img = random_image(rng, 6, 6)
    expr = parse_pipeline('add(img, key("A"))')
    out = encrypt(img, expr)
    assert (out == (img.astype(int) + 51) % 256).all()
    back = decrypt(out, expr)
    assert (back == img).all()


def test_scan_pipeline_matches_apply():
    img = np.array([[1, 2], [3, 4]], dtype=np.uint8)
    out = encrypt(img, parse_pipeline("scan(C0, img)"))
    assert out.tolist() == [[1, 2], [4, 3]]


def test_invalid_pipeline_rejected_before_evaluation(rng):
    img = random_image(rng, 4, 4)
    for text in ("add(img, img)", 'add(key("A"), key("B"))'):
        expr = parse_pipeline(text)
        with pytest.raises(PipelineValidationError):
            encrypt(img, expr)
        with pytest.raises(PipelineValidationError):
            decrypt(img, expr)


def test_preset_shapes():
    assert format_pipeline(preset_pipeline("a", D0, KW)) == "scan(D0, img)"
    assert format_pipeline(preset_pipeline("b", D0, KW)) == f'add(img, key("{KW}"))'
    assert (format_pipeline(preset_pipeline("c", D0, KW))
            == f'add(scan(D0, img), key("{KW}"))')
    assert (format_pipeline(preset_pipeline("d", D0, KW))
            == f'add(img, scan(D0, key("{KW}")))')
    assert (format_pipeline(preset_pipeline("e", D0, KW))
            == f'scan(D0, add(scan(D0, img), scan(D0, key("{KW}"))))')
    with pytest.raises(ValueError):
        preset_pipeline("f", D0, KW)


def test_round_trip_all_presets(rng):
    img = random_image(rng, 64, 64)
    for variant in "abcde":
        for spec_text in ("C0", "D3", "O5", "S6"):
            expr = preset_pipeline(variant, ScanSpec.parse(spec_text), KW)
            assert (decrypt(encrypt(img, expr), expr) == img).all()


def test_round_trip_deep_expression(rng):
    img = random_image(rng, 16, 24)
    expr = parse_pipeline(
        'scan(S2, add(scan(D1, add(scan(O4, img), key("abc"))), '
        'scan(C7, key("Zz9"))))'
    )
    assert (decrypt(encrypt(img, expr), expr) == img).all()


def test_scan_only_preserves_histogram(rng):
    img = random_image(rng, 32, 32)
    for spec_text in ("C0", "D3", "O5", "S6"):
        out = encrypt(img, preset_pipeline("a", ScanSpec.parse(spec_text), KW))
        assert (np.bincount(out.ravel(), minlength=256)
                == np.bincount(img.ravel(), minlength=256)).all()


def test_key_sensitivity_ciphertext_diff_equals_carrier_diff(rng):
    img = random_image(rng, 12, 12)
    c1 = encrypt(img, preset_pipeline("b", D0, "HybridApproch128z"))
    c2 = encrypt(img, preset_pipeline("b", D0, "MyDateOfBirthIs21May1983"))
    k1 = build_carrier("HybridApproch128z", 12, 12)
    k2 = build_carrier("MyDateOfBirthIs21May1983", 12, 12)
    assert ((c1 - c2) == (k1 - k2)).all()  # uint8 arithmetic is mod 256


def test_dimensions_preserved_and_deterministic(rng):
    img = random_image(rng, 9, 31)
    for variant in "abcde":
        expr = preset_pipeline(variant, ScanSpec.parse("S3"), KW)
        out1 = encrypt(img, expr)
        out2 = encrypt(img, expr)
        assert out1.shape == img.shape
        assert (out1 == out2).all()
