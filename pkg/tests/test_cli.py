#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import json
import os

import pytest

from polytile.constants import ExitCodes, Labels
from polytile.encoder.catalog import corrected_words
from polytile.run import main


def _report(capsys):
    return json.loads(capsys.readouterr().out)


def test_labels(capsys):
    assert main(["--json", "labels"]) == ExitCodes.SUCCESS
    report = _report(capsys)
    assert set(report["labels"]) == set(Labels.ORDER)
    assert len(report["labels"]) == 17
    assert report["problems"] == []


def test_labels_out(tmp_path, capsys):
    out = str(tmp_path / "labels.poly")
    assert main(["labels", "--out", out]) == ExitCodes.SUCCESS
    assert "all checks pass" in capsys.readouterr().out
    assert open(out).read().count("poly ") == 17


def test_corrupted_label_words(tmp_path, capsys):
    words = corrected_words()
    words[Labels.I_0N] = words[Labels.I_0N].replace("u12 t u5 t", "u12 t u6", 1)
    path = tmp_path / "corrupted.words"
    path.write_text("".join(f"label {name} {word}\n" for name, word in words.items()))
    assert main(["--json", "labels", "--words", str(path)]) == ExitCodes.FAILURE
    assert any(p.startswith(f"{Labels.I_0N}:") for p in _report(capsys)["problems"])


def test_missing_words_file(tmp_path):
    assert main(["labels", "--words", str(tmp_path / "nope.words")]) == ExitCodes.USAGE


def test_encode(resources, tmp_path, capsys):
    out = str(tmp_path / "single.poly")
    assert main(["--json", "encode", f"{resources}/single.wang", "--out", out]) == 0
    report = _report(capsys)
    assert set(report["pieces"]) == {"tooth", "rod", "blade"}
    assert os.path.exists(out)


def test_bad_header(resources):
    assert main(["encode", f"{resources}/bad-header.wang"]) == ExitCodes.USAGE


@pytest.mark.parametrize("size, status", [("2x1", ExitCodes.SUCCESS), ("1x1", ExitCodes.FAILURE)])
def test_wang_solve(resources, size, status):
    assert main(["wang-solve", f"{resources}/alternating.wang", "--torus", size]) == status


def test_bad_size_is_a_usage_error(resources):
    with pytest.raises(SystemExit) as e:
        main(["wang-solve", f"{resources}/alternating.wang", "--torus", "2by1"])
    assert e.value.code == ExitCodes.USAGE


def test_build_refuses_broken_assignment(resources):
    args = ["build", f"{resources}/alternating.wang", f"{resources}/broken.assign"]
    assert main(args) == ExitCodes.FAILURE


@pytest.mark.parametrize(
    "flags, status",
    [
        (["--rect", "2x2"], ExitCodes.SUCCESS),
        (["--torus", "2x2"], ExitCodes.SUCCESS),
        (["--rect", "3x3"], ExitCodes.FAILURE),
        (["--rect", "2x2", "--torus", "2x2"], ExitCodes.USAGE),
        ([], ExitCodes.USAGE),
        (["--rect", "6x6", "--limit", "1", "--threads", "1"], ExitCodes.BUDGET),
    ],
)
def test_solve(resources, flags, status):
    assert main(["solve", f"{resources}/domino.poly"] + flags) == status


def test_solve_writes_a_tiling_that_verifies(resources, tmp_path):
    out = str(tmp_path / "found.tiling")
    assert main(["solve", f"{resources}/domino.poly", "--rect", "4x2", "--out", out]) == 0
    assert main(["verify", f"{resources}/domino.poly", out]) == ExitCodes.SUCCESS


def test_verify(resources, capsys):
    poly = f"{resources}/domino.poly"
    assert main(["verify", poly, f"{resources}/domino.tiling"]) == ExitCodes.SUCCESS
    capsys.readouterr()
    assert main(["--json", "verify", poly, f"{resources}/overlap.tiling"]) == ExitCodes.FAILURE
    report = _report(capsys)
    assert report["valid"] is False
    assert report["overlap_count"] == 2


def test_render(resources, tmp_path):
    svg = str(tmp_path / "domino.svg")
    args = ["render", f"{resources}/domino.poly", f"{resources}/domino.tiling", "--svg", svg]
    assert main(args + ["--color-by", "orientation"]) == ExitCodes.SUCCESS
    assert open(svg).read().count("<rect") == 2


@pytest.mark.parametrize("scale, status", [("51", ExitCodes.SUCCESS), ("50", ExitCodes.FAILURE)])
def test_kl(resources, scale, status):
    args = ["kl", f"{resources}/monomino.poly", f"{resources}/opposite.graph"]
    assert main(args + ["--length", "4", "--scale", scale]) == status


def test_refute_teeth(capsys):
    assert main(["--json", "refute", "teeth", "--radius", "3"]) == ExitCodes.SUCCESS
    assert _report(capsys)["status"] == "refuted"


def test_refute_rods_needs_a_tile_set():
    assert main(["refute", "rods"]) == ExitCodes.USAGE


def test_build_and_verify(resources, tmp_path, capsys):
    tiling, pieces = str(tmp_path / "unit.tiling"), str(tmp_path / "unit.poly")
    args = ["--json", "build", f"{resources}/single.wang", f"{resources}/single.assign"]
    assert main(args + ["--out", tiling, "--pieces", pieces]) == ExitCodes.SUCCESS
    report = _report(capsys)
    assert report["pieces"] == 80
    assert report["census"]["rod"] == [0, 1, 2]
    assert report["validation"]["valid"] is True
    assert main(["verify", pieces, tiling]) == ExitCodes.SUCCESS


def test_solve_all_uses_enumerate_cap(resources, capsys, monkeypatch):
    poly = f"{resources}/domino.poly"
    assert main(["--json", "solve", poly, "--rect", "4x4", "--all"]) == ExitCodes.SUCCESS
    report = _report(capsys)
    assert report["count"] == 36
    assert report["cap_exceeded"] is False

    monkeypatch.setenv("ENUMERATE_CAP", "5")
    assert main(["--json", "solve", poly, "--rect", "4x4", "--all"]) == ExitCodes.SUCCESS
    report = _report(capsys)
    assert report["count"] == 5
    assert report["cap_exceeded"] is True
    assert main(["--json", "solve", poly, "--rect", "4x4", "--all", "--cap", "7"]) == 0
    assert _report(capsys)["count"] == 7
