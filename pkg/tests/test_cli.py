from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import GOLDEN, validate
from k25free import verification
from k25free.cli import main
from k25free.families import cycle_square
from k25free.graph6 import emit_graph6, parse_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def single_doc(out: str):
    lines = out.splitlines()
    assert len(lines) == 1
    return json.loads(lines[0])


class TestGolden:
    def test_check_k4(self, capsys):
        code, out, _ = run(capsys, "check", "--graph6", "C~")
        assert code == 0
        assert out == (GOLDEN / "check_k4.json").read_text()
        doc = single_doc(out)
        assert doc["planar"] is True and doc["four_connected"] is False
        validate(doc, "property_report")

    def test_minor_k25_in_hexagon_square(self, capsys):
        code, out, _ = run(capsys, "minor", "--family", "c2:6", "--pattern", "k2,5")
        assert code == 0
        assert out == (GOLDEN / "minor_c2_6_k25.json").read_text()
        validate(single_doc(out), "minor_model")

    def test_verify_up_to_seven(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "7")
        assert code == 0
        doc = single_doc(out)
        golden = json.loads((GOLDEN / "verify_max_n_7.json").read_text())
        doc.pop("elapsed")
        golden.pop("elapsed")
        assert doc == golden
        validate(single_doc(out), "verification_report")


class TestCommands:
    def test_minor_found(self, capsys):
        code, out, _ = run(capsys, "minor", "--family", "c2:7", "--pattern", "k5")
        doc = single_doc(out)
        assert code == 0 and doc["found"] and doc["pattern"] == "D~{"
        validate(doc, "minor_model")

    def test_minor_bipartite_large_host(self, capsys):
        code, out, _ = run(capsys, "minor", "--family", "k:3,20", "--pattern", "k3,3")
        doc = single_doc(out)
        assert code == 0 and doc["found"]
        validate(doc, "minor_model")

    @pytest.mark.parametrize(
        "spec, expected",
        [("c:5", "Dhc"),  # reference encoder value
         ("c2:8", emit_graph6(cycle_square(8))), ("k:4", "C~"), ("k:2,5", None),
         ("petersen", None), ("prism", None), ("q3", None)],
    )
    def test_gen(self, capsys, spec, expected):
        code, out, _ = run(capsys, "gen", "--family", spec)
        assert code == 0
        text = out.strip()
        parse_graph6(text)
        if expected is not None:
            assert text == expected

    def test_gen_sizes(self, capsys):
        for spec, (n, m) in {"k:2,5": (7, 10), "petersen": (10, 15), "prism": (6, 9), "q3": (8, 12)}.items():
            _, out, _ = run(capsys, "gen", "--family", spec)
            g = parse_graph6(out.strip())
            assert (g.n, g.m) == (n, m)

    def test_embed(self, capsys):
        code, out, _ = run(capsys, "embed", "--family", "c2:8")
        faces = single_doc(out)
        assert code == 0 and len(faces) == 10 and faces[0] == [0, 2, 4, 6]
        validate(faces, "face_list")

    def test_embed_rejects_odd(self, capsys):
        code, _, err = run(capsys, "embed", "--family", "c2:7")
        assert code == 1 and "even" in err

    def test_check_from_edges(self, capsys, tmp_path):
        path = tmp_path / "g.txt"
        g = cycle_square(8)
        path.write_text("\n".join(f"{u} {v}" for u, v in g.edges()) + "\n\n")
        code, out, _ = run(capsys, "check", "--edges", str(path))
        doc = single_doc(out)
        assert code == 0 and doc["squared_even_cycle_ge6"] == 8 and doc["graph6"] == emit_graph6(g)

    def test_check_nonplanar(self, capsys):
        code, out, _ = run(capsys, "check", "--family", "c2:9")
        doc = single_doc(out)
        assert code == 0 and doc["planar"] is False
        validate(doc, "property_report")

    def test_verify_stream(self, capsys, tmp_path):
        path = tmp_path / "s.g6"
        path.write_text(emit_graph6(cycle_square(10)) + "\n")
        code, out, _ = run(capsys, "verify", "--stream", str(path))
        doc = single_doc(out)
        assert code == 0 and doc["graphs_passing_hypotheses"] == 1

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "o.json"
        code, out, _ = run(capsys, "check", "--family", "k:4", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text() == (GOLDEN / "check_k4.json").read_text()


class TestLemmaCommand:
    def test_lemma1(self, capsys):
        code, out, _ = run(capsys, "lemma", "1", "--family", "c2:10")
        doc = single_doc(out)
        assert code == 0 and doc["holds"]
        validate(doc, "lemma_report")

    def test_lemma1_hypothesis_error(self, capsys):
        code, out, err = run(capsys, "lemma", "1", "--family", "k:5")
        assert code == 1 and out == "" and "not planar" in err

    @pytest.mark.parametrize("number", ["2", "3"])
    def test_lemma2_3(self, capsys, number):
        code, out, _ = run(capsys, "lemma", number, "--family", "c2:8")
        doc = single_doc(out)
        assert code == 0 and doc["hypotheses"] and doc["holds"]
        validate(doc, "lemma_report")

    def test_lemma4(self, capsys):
        code, out, _ = run(capsys, "lemma", "4", "--family", "petersen")
        doc = single_doc(out)
        assert code == 0 and doc["applicable"]
        validate(doc, "lemma_report")

    def test_lemma4_k4(self, capsys):
        code, out, _ = run(capsys, "lemma", "4", "--family", "k:4")
        doc = single_doc(out)
        assert code == 0 and doc["applicable"] is False
        validate(doc, "lemma_report")


class TestErrors:
    @pytest.mark.parametrize(
        "argv, fragment",
        [
            (["frobnicate"], "invalid choice"),
            (["check", "--graph6", "C"], "byte offset"),
            (["check"], "exactly one"),
            (["check", "--graph6", "C~", "--family", "k:4"], "exactly one"),
            (["minor", "--family", "k:4"], "--pattern"),
            (["minor", "--family", "k:4", "--pattern", "petersen"], "unknown pattern"),
            (["gen", "--family", "wheel:5"], "unknown family"),
            (["gen", "--family", "c:2"], "at least 3"),
            (["check", "--family", "c2:19"], "limited"),
            (["verify", "--max-n", "9"], "limited"),
            (["verify"], "exactly one"),
            (["lemma", "5", "--family", "k:4"], "invalid choice"),
        ],
    )
    def test_exit_one(self, capsys, argv, fragment):
        code, out, err = run(capsys, *argv)
        assert code == 1
        assert out == ""
        assert fragment in err

    def test_stream_error_has_line(self, capsys, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("C~\nC\n")
        code, _, err = run(capsys, "verify", "--stream", str(path))
        assert code == 1 and "line 2" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "check", "--edges", str(tmp_path / "nope"))
        assert code == 1

    def test_bad_edge_list(self, capsys, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("0 1\n1 x\n")
        code, _, err = run(capsys, "check", "--edges", str(path))
        assert code == 1 and "line 2" in err


class TestViolationExit:
    def test_verify_exit_two_on_counterexample(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setattr(verification, "evaluate", lambda g: (True, False))
        path = tmp_path / "s.g6"
        path.write_text("C~\n")
        code, out, _ = run(capsys, "verify", "--stream", str(path))
        doc = single_doc(out)
        assert code == 2 and not doc["verified"] and doc["counterexamples"][0]["graph6"] == "C~"
        validate(doc, "verification_report")

    def test_verify_exit_two_on_enumeration(self, capsys, monkeypatch):
        real = verification.evaluate
        monkeypatch.setattr(verification, "evaluate", lambda g: (not real(g)[0], real(g)[1]))
        code, out, _ = run(capsys, "verify", "--max-n", "5")
        assert code == 2 and single_doc(out)["counterexamples"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "k25free", "minor", "--family", "c2:6", "--pattern", "k2,5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == '{"found":false}\n'
    proc = subprocess.run([sys.executable, "-m", "k25free", "check", "--graph6", "C"], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == ""
