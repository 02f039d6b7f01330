import json

import numpy as np
import pytest

from conftest import FIXTURES, random_image
from scancipher.cli import run_cli
from scancipher.pgm import read_pgm, write_pgm


@pytest.fixture
def sample(tmp_path, rng):
    path = tmp_path / "in.pgm"
    write_pgm(random_image(rng, 32, 32), path)
    return path


def test_encrypt_decrypt_round_trip_preset(tmp_path, sample):
    enc = tmp_path / "enc.pgm"
    dec = tmp_path / "dec.pgm"
    assert run_cli([
        "encrypt", "--input", str(sample), "--output", str(enc),
        "--preset", "e", "--scan", "D0", "--key", "UniversityOfMysore",
    ]) == 0
    assert run_cli([
        "decrypt", "--input", str(enc), "--output", str(dec),
        "--preset", "e", "--scan", "D0", "--key", "UniversityOfMysore",
    ]) == 0
    assert (read_pgm(dec) == read_pgm(sample)).all()
    assert enc.read_bytes() != sample.read_bytes()


def test_encrypt_with_pipeline_text(tmp_path, sample):
    enc = tmp_path / "enc.pgm"
    assert run_cli([
        "encrypt", "--input", str(sample), "--output", str(enc),
        "--pipeline", 'add(scan(S4, img), key("Ab1"))',
    ]) == 0
    assert enc.exists()


def test_pipeline_parse_error_exits_2(tmp_path, sample, capsys):
    code = run_cli([
        "encrypt", "--input", str(sample), "--output", str(tmp_path / "o.pgm"),
        "--pipeline", "scan(Q1, img)",
    ])
    assert code == 2
    assert "invalid scan spec" in capsys.readouterr().err


def test_pipeline_validation_error_exits_4(tmp_path, sample, capsys):
    code = run_cli([
        "encrypt", "--input", str(sample), "--output", str(tmp_path / "o.pgm"),
        "--pipeline", "add(img, img)",
    ])
    assert code == 4
    assert "not decryptable" in capsys.readouterr().err


def test_missing_input_exits_3(tmp_path):
    code = run_cli([
        "encrypt", "--input", str(tmp_path / "missing.pgm"),
        "--output", str(tmp_path / "o.pgm"), "--preset", "a",
    ])
    assert code == 3


def test_malformed_pgm_exits_3(tmp_path):
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"P2\n2 2\n255\n1 2 3 4\n")
    code = run_cli([
        "metrics", "--input", str(bad),
    ])
    assert code == 3


def test_usage_error_exits_2(capsys):
    assert run_cli(["encrypt", "--input", "x.pgm"]) == 2
    assert run_cli(["frobnicate"]) == 2
    capsys.readouterr()


def test_both_pipeline_and_preset_rejected(tmp_path, sample):
    assert run_cli([
        "encrypt", "--input", str(sample), "--output", str(tmp_path / "o.pgm"),
        "--pipeline", "img", "--preset", "a",
    ]) == 2


def test_metrics_self_reference(sample, capsys):
    assert run_cli([
        "metrics", "--input", str(sample), "--reference", str(sample),
    ]) == 0
    out = capsys.readouterr().out
    assert "npcr=0.000000" in out
    assert "uaci=0.000000" in out


def test_metrics_structured_output(sample, capsys):
    assert run_cli(["metrics", "--input", str(sample), "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["rows"] == 32
    assert len(doc["histogram"]) == 256


def test_scan_path_listing(capsys):
    assert run_cli(["scan-path", "--scan", "S0", "--rows", "3", "--cols", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["0 0", "0 1", "0 2", "1 2", "2 2", "2 1", "2 0", "1 0", "1 1"]


def test_carrier_subcommand(tmp_path, capsys):
    out = tmp_path / "carrier.pgm"
    assert run_cli([
        "carrier", "--key", "A", "--rows", "2", "--cols", "2",
        "--output", str(out),
    ]) == 0
    assert read_pgm(out).tolist() == [[51, 51], [51, 51]]


def test_carrier_bad_keyword_exits_2(tmp_path, capsys):
    code = run_cli([
        "carrier", "--key", "no way", "--rows", "2", "--cols", "2",
        "--output", str(tmp_path / "c.pgm"),
    ])
    assert code == 2
    assert "alphanumeric" in capsys.readouterr().err


def test_presets_listing(capsys):
    assert run_cli(["presets", "--scan", "D0", "--key", "UniversityOfMysore"]) == 0
    out = capsys.readouterr().out
    assert "(a) scan(D0, img)" in out
    assert '(e) scan(D0, add(scan(D0, img), scan(D0, key("UniversityOfMysore"))))' in out


def test_fixture_images_are_valid():
    for name in ("gradient.pgm", "synthetic.pgm"):
        img = read_pgm(FIXTURES / name)
        assert img.shape == (256, 256)
        assert img.dtype == np.uint8
