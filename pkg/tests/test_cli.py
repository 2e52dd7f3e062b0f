import json
import subprocess
import sys

import pytest

from toposense.cli import main

from helpers import write_embedding_file, write_ground_truth_file
from planted import planted_clusters, planted_embedding


@pytest.fixture
def tight_cluster_file(rng, tmp_path):
    points = rng.normal(scale=0.01, size=(10, 4))
    path = tmp_path / "emb.txt"
    write_embedding_file(path, [f"w{i}" for i in range(10)], points)
    return path


@pytest.fixture
def planted_files(rng, tmp_path):
    senses = {f"w{g}": g for g in range(2, 6)}
    matrix, k = planted_embedding(rng, senses, dim=8, region_total=36)
    emb = tmp_path / "emb.txt"
    write_embedding_file(emb, matrix.tokens, matrix.vectors)
    truth = tmp_path / "truth.tsv"
    write_ground_truth_file(truth, senses)
    return emb, truth, k


class TestInduce:
    def test_tight_cluster_is_one_sense(self, tight_cluster_file, capsys):
        code = main(
            ["induce", "w0", "--embeddings", str(tight_cluster_file), "-k", "9"]
        )
        assert code == 0
        record = json.loads(capsys.readouterr().out)
        assert record["predicted_senses"] == 1
        assert record["word"] == "w0"
        assert record["deaths"] == sorted(record["deaths"])
        assert len(record["deaths"]) == 9

    def test_multiple_words_one_line_each(self, tight_cluster_file, capsys):
        code = main(
            ["induce", "w0", "w3", "w5", "--embeddings", str(tight_cluster_file), "-k", "4"]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert [json.loads(l)["word"] for l in lines] == ["w0", "w3", "w5"]

    def test_literal_reduction_matches_default(self, rng, tmp_path, capsys):
        points, _ = planted_clusters(rng, [6, 6, 6], dim=8)
        path = tmp_path / "emb.txt"
        write_embedding_file(path, [f"p{i}" for i in range(len(points))], points)
        args = ["induce", "p0", "--embeddings", str(path), "-k", str(len(points) - 1)]
        assert main(args) == 0
        default_out = capsys.readouterr().out
        assert main(args + ["--literal-reduction"]) == 0
        assert capsys.readouterr().out == default_out
        assert json.loads(default_out)["predicted_senses"] == 3

    def test_unknown_word_exit_5(self, tight_cluster_file, capsys):
        code = main(
            ["induce", "nope", "--embeddings", str(tight_cluster_file), "-k", "3"]
        )
        assert code == 5
        assert "nope" in capsys.readouterr().err

    def test_k_too_large_exit_5(self, tight_cluster_file, capsys):
        code = main(
            ["induce", "w0", "--embeddings", str(tight_cluster_file), "-k", "10"]
        )
        assert code == 5

    def test_invalid_k_usage_error(self, tight_cluster_file):
        with pytest.raises(SystemExit) as err:
            main(["induce", "w0", "--embeddings", str(tight_cluster_file), "-k", "0"])
        assert err.value.code == 2

    def test_missing_file_exit_3(self, tmp_path, capsys):
        code = main(["induce", "w0", "--embeddings", str(tmp_path / "no.txt"), "-k", "2"])
        assert code == 3

    def test_malformed_embeddings_exit_4(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("2 3\ncat 1 0\n", encoding="utf-8")
        code = main(["induce", "cat", "--embeddings", str(bad), "-k", "1"])
        assert code == 4


class TestBarcode:
    def test_csv_to_stdout(self, tight_cluster_file, capsys):
        code = main(["barcode", "w2", "--embeddings", str(tight_cluster_file), "-k", "5"])
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "bar_id,birth,death,essential"
        assert len(lines) == 7  # 5 finite bars + 1 essential + header
        assert lines[-1].endswith(",0,,1")

    def test_output_file(self, tight_cluster_file, tmp_path):
        out = tmp_path / "bars.csv"
        code = main(
            [
                "barcode",
                "w2",
                "--embeddings",
                str(tight_cluster_file),
                "-k",
                "5",
                "--output",
                str(out),
            ]
        )
        assert code == 0
        assert out.read_text().startswith("bar_id,birth,death,essential")


class TestProbe:
    def test_collinear_bridge(self, tmp_path, capsys):
        emb = tmp_path / "emb.txt"
        write_embedding_file(emb, ["left", "mid", "right"], [[0.0], [1.0], [2.0]])
        code = main(
            ["probe", "mid", "--embeddings", str(emb), "-k", "2", "--epsilon", "1.2"]
        )
        assert code == 0
        record = json.loads(capsys.readouterr().out)
        assert record == {
            "changed": True,
            "components_with": 1,
            "components_without": 2,
            "word": "mid",
        }


class TestEvaluate:
    def test_report_written(self, planted_files, tmp_path):
        emb, truth, k = planted_files
        out = tmp_path / "report.json"
        code = main(
            [
                "evaluate",
                "--embeddings",
                str(emb),
                "--ground-truth",
                str(truth),
                "-k",
                str(k),
                "--bucket",
                "2",
                "9",
                "--output",
                str(out),
            ]
        )
        assert code == 0
        report = json.loads(out.read_text())
        assert report["relative_error"] == 0.0
        assert report["n_evaluated"] == 4

    def test_missing_ground_truth_names_path(self, planted_files, tmp_path, capsys):
        emb, _, k = planted_files
        missing = tmp_path / "absent.tsv"
        code = main(
            [
                "evaluate",
                "--embeddings",
                str(emb),
                "--ground-truth",
                str(missing),
                "-k",
                str(k),
                "--output",
                str(tmp_path / "r.json"),
            ]
        )
        assert code == 3
        assert "absent.tsv" in capsys.readouterr().err


class TestSweep:
    def run_sweep(self, emb, truth, k, out_dir, workers="1"):
        return main(
            [
                "sweep",
                "--embeddings",
                f"8={emb}",
                "--ground-truth",
                str(truth),
                "-k",
                "5",
                str(k),
                "--bucket",
                "2",
                "9",
                "--workers",
                workers,
                "--output-dir",
                str(out_dir),
            ]
        )

    def test_outputs_and_determinism_across_workers(self, planted_files, tmp_path):
        emb, truth, k = planted_files
        outputs = {}
        for name, workers in [("a", "1"), ("b", "1"), ("c", "4")]:
            out_dir = tmp_path / name
            assert self.run_sweep(emb, truth, k, out_dir, workers) == 0
            outputs[name] = {
                f.name: f.read_bytes() for f in sorted(out_dir.iterdir())
            }
        assert set(outputs["a"]) == {"plot.csv", "reports.json", "summary.csv"}
        assert outputs["a"] == outputs["b"], "re-run must be byte-identical"
        assert outputs["a"] == outputs["c"], "worker width must not leak into output"

    def test_unknown_flag_fails_fast(self, planted_files, tmp_path):
        emb, truth, k = planted_files
        with pytest.raises(SystemExit) as err:
            main(["sweep", "--embeddings", f"8={emb}", "--nope"])
        assert err.value.code == 2


def test_module_entry_point(tight_cluster_file):
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "toposense",
            "induce",
            "w1",
            "--embeddings",
            str(tight_cluster_file),
            "-k",
            "4",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["predicted_senses"] == 1
