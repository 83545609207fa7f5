import csv
import io
import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from clustagree.cli import main
from clustagree.io import load_clusterings, serialize_clustering

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture()
def runner():
    return CliRunner()


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestCompare:
    def test_ari_value(self, runner):
        res = runner.invoke(main, [
            "compare", str(FIXTURES / "small_A.clu"), str(FIXTURES / "small_B.clu"),
            "--measure", "ari"])
        assert res.exit_code == 0
        rows = csv_rows(res.output)
        assert len(rows) == 1
        assert float(rows[0]["value"]) == pytest.approx(0.312, abs=1e-3)

    def test_multiple_measures(self, runner):
        res = runner.invoke(main, [
            "compare", str(FIXTURES / "small_A.clu"), str(FIXTURES / "small_B.clu"),
            "--measure", "ri", "--measure", "jaccard", "--measure", "vi"])
        assert res.exit_code == 0
        rows = csv_rows(res.output)
        values = {r["measure"]: float(r["value"]) for r in rows}
        assert values["ri"] == pytest.approx(0.667, abs=1e-3)
        assert values["jaccard"] == pytest.approx(0.375, abs=1e-3)
        assert values["vi"] == pytest.approx(0.8658, abs=1e-3)

    def test_structure_transform(self, runner):
        res = runner.invoke(main, [
            "compare", str(FIXTURES / "hub_truth.clu"), str(FIXTURES / "hub_cand_leaf.clu"),
            "--measure", "ari-delta", "--structure", "transform",
            "--variant", "approx", "--graph", str(FIXTURES / "hub.edges")])
        assert res.exit_code == 0
        rows = csv_rows(res.output)
        assert float(rows[0]["value"]) == pytest.approx(0.752, abs=1e-3)
        assert "structure=transform" in rows[0]["variant"]

    def test_gen_measure(self, runner):
        res = runner.invoke(main, [
            "compare", str(FIXTURES / "small_A.clu"), str(FIXTURES / "small_B.clu"),
            "--measure", "gen", "--phi", "xxm1"])
        assert res.exit_code == 0
        assert float(csv_rows(res.output)[0]["value"]) == pytest.approx(
            0.312, abs=1e-3)

    def test_self_compare_is_one(self, runner):
        for name, measure in [("small_A.clu", "ari"), ("overlap_crisp.clu", "omega"),
                              ("overlap_soft.clu", "ri-delta")]:
            res = runner.invoke(main, [
                "compare", str(FIXTURES / name), str(FIXTURES / name),
                "--measure", measure])
            assert res.exit_code == 0
            assert float(csv_rows(res.output)[0]["value"]) == pytest.approx(1.0)

    def test_json_output(self, runner):
        res = runner.invoke(main, [
            "compare", str(FIXTURES / "small_A.clu"), str(FIXTURES / "small_B.clu"),
            "--measure", "ari", "--format", "json"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload[0]["measure"] == "ari"
        assert payload[0]["value"] == pytest.approx(0.312, abs=1e-3)

    def test_output_file(self, runner, tmp_path):
        out = tmp_path / "report.csv"
        res = runner.invoke(main, [
            "compare", str(FIXTURES / "small_A.clu"), str(FIXTURES / "small_B.clu"),
            "--measure", "ri", "--output", str(out)])
        assert res.exit_code == 0
        assert float(csv_rows(out.read_text())[0]["value"]) == pytest.approx(
            0.667, abs=1e-3)

    def test_missing_file_exit_2(self, runner):
        res = runner.invoke(main, [
            "compare", str(FIXTURES / "nope.clu"), str(FIXTURES / "small_B.clu")])
        assert res.exit_code == 2

    def test_malformed_file_exit_2(self, runner, tmp_path):
        bad = tmp_path / "bad.clu"
        bad.write_text("0 a\n1 b extra junk here\n")
        res = runner.invoke(main, [
            "compare", str(bad), str(FIXTURES / "small_B.clu")])
        assert res.exit_code == 2

    def test_universe_mismatch_and_pad_union(self, runner, tmp_path):
        small = tmp_path / "small.clu"
        small.write_text("".join(f"{i} a\n" for i in range(9)))
        args = ["compare", str(small), str(FIXTURES / "small_A.clu"),
                "--measure", "ri-delta"]
        assert runner.invoke(main, args).exit_code == 2
        assert runner.invoke(main, args + ["--pad-union"]).exit_code == 0

    def test_degenerate_measure_exit_3(self, runner, tmp_path):
        a = tmp_path / "a.clu"
        b = tmp_path / "b.clu"
        a.write_text("0 x\n1 x\n2 x\n")
        b.write_text("0 x\n1 x\n2 y\n")
        res = runner.invoke(main, [
            "compare", str(a), str(b), "--measure", "nmi-sqrt"])
        assert res.exit_code == 3

    def test_classic_measure_on_overlap_exit_3(self, runner):
        res = runner.invoke(main, [
            "compare", str(FIXTURES / "overlap_crisp.clu"), str(FIXTURES / "overlap_crisp.clu"),
            "--measure", "ari"])
        assert res.exit_code == 3


class TestBatch:
    @pytest.fixture()
    def candidate_dir(self, tmp_path):
        d = tmp_path / "cands"
        d.mkdir()
        (d / "b_shift.clu").write_text(
            "".join(f"{i} {'p' if i < 5 else 'q'}\n" for i in range(10)))
        (d / "a_same.clu").write_text((FIXTURES / "small_B.clu").read_text())
        (d / "c_bad.clu").write_text("0 x y z w\n")
        return d

    def test_rows_and_order(self, runner, candidate_dir):
        res = runner.invoke(main, [
            "batch", str(candidate_dir), str(FIXTURES / "small_B.clu"),
            "--measure", "ari", "--pad-union"])
        assert res.exit_code == 0
        lines = res.output.splitlines()
        names = [ln.split(",")[0] for ln in lines[1:]]
        assert names == ["a_same.clu", "b_shift.clu", "c_bad.clu"]
        assert float(lines[1].split(",")[1]) == pytest.approx(1.0)
        assert "error:" in lines[3]

    def test_deterministic(self, runner, candidate_dir):
        args = ["batch", str(candidate_dir), str(FIXTURES / "small_B.clu"),
                "--measure", "ri", "--pad-union"]
        assert runner.invoke(main, args).output == runner.invoke(main, args).output

    def test_empty_dir(self, runner, tmp_path):
        d = tmp_path / "empty"
        d.mkdir()
        res = runner.invoke(main, [
            "batch", str(d), str(FIXTURES / "small_B.clu")])
        assert res.exit_code == 0
        assert len(res.output.splitlines()) == 1  # header only

    def test_not_a_directory(self, runner):
        res = runner.invoke(main, [
            "batch", str(FIXTURES / "small_B.clu"), str(FIXTURES / "small_B.clu")])
        assert res.exit_code == 2

    def test_json(self, runner, candidate_dir):
        res = runner.invoke(main, [
            "batch", str(candidate_dir), str(FIXTURES / "small_B.clu"),
            "--measure", "ari", "--pad-union", "--format", "json"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload[0]["file"] == "a_same.clu"


class TestValidate:
    def test_disjoint_crisp(self, runner):
        res = runner.invoke(main, ["validate", str(FIXTURES / "small_A.clu")])
        assert res.exit_code == 0
        assert "classification: disjoint-crisp" in res.output
        assert "points: 10" in res.output
        assert "clusters: 2" in res.output
        assert "overlap: none" in res.output

    def test_crisp_overlapping(self, runner):
        res = runner.invoke(main, ["validate", str(FIXTURES / "overlap_crisp.clu")])
        assert "classification: crisp" in res.output
        assert "overlap: 1 point(s)" in res.output

    def test_soft(self, runner):
        res = runner.invoke(main, ["validate", str(FIXTURES / "overlap_soft.clu")])
        assert "classification: soft" in res.output

    def test_with_graph(self, runner):
        res = runner.invoke(main, [
            "validate", str(FIXTURES / "hub_truth.clu"),
            "--graph", str(FIXTURES / "hub.edges")])
        assert "graph: 9 nodes, 15 edges" in res.output


class TestSerializeRoundTrip:
    def test_round_trip(self, tmp_path, overlap_trio):
        v, u1, _ = overlap_trio
        for idx, c in enumerate((v, u1)):
            path = tmp_path / f"c{idx}.clu"
            path.write_text(serialize_clustering(c))
            (reloaded,), _ = load_clusterings([path])
            assert reloaded.n == c.n and reloaded.k == c.k
            assert (reloaded.matrix != c.matrix).nnz == 0
