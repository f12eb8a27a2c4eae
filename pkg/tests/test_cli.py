"""Command-line interface: subcommands, exit codes, JSON schema, round trips."""

import json

import pytest

from iasl_lab import parse_graph, parse_labeling
from iasl_lab.cli import main

K12_GRAPH = "c l1\nc l2\n"
K12_LABELING = "X {0,1}\nc {0}\nl1 {1}\nl2 {0,1}\n"
C6_GRAPH = "v1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v6\nv6 v1\n"


@pytest.fixture
def k12(tmp_path):
    g = tmp_path / "g.txt"
    f = tmp_path / "f.txt"
    g.write_text(K12_GRAPH)
    f.write_text(K12_LABELING)
    return str(g), str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestVerify:
    def test_iasgl_true(self, capsys, k12):
        g, f = k12
        code, out, _ = run(capsys, "verify", "--class", "iasgl", g, f)
        assert code == 0
        assert "verdict: true" in out

    def test_json_payload(self, capsys, k12):
        g, f = k12
        code, out, _ = run(capsys, "verify", "--class", "iasgl", g, f, "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["schema"] == "iasl-lab/1"
        assert payload["verdict"] is True
        assert payload["violations"] == []

    def test_false_verdict_exits_one(self, capsys, tmp_path, k12):
        g, _ = k12
        f = tmp_path / "bad.txt"
        f.write_text("X {0,1}\nc {1}\nl1 {1}\nl2 {0,1}\n")
        code, out, _ = run(capsys, "verify", "--class", "iasgl", g, str(f))
        assert code == 1
        assert "injectivity" in out

    @pytest.mark.parametrize("cls", ["iasl", "iasi", "top-iasl", "top-iasgl",
                                     "uniform:1"])
    def test_all_classes_accepted(self, capsys, k12, cls):
        g, f = k12
        code, _, _ = run(capsys, "verify", "--class", cls, g, f)
        assert code in (0, 1)

    def test_uniform_without_degree(self, capsys, k12):
        g, f = k12
        code, _, err = run(capsys, "verify", "--class", "uniform", g, f)
        assert code == 2
        assert "error" in err

    def test_unknown_class(self, capsys, k12):
        g, f = k12
        code, _, _ = run(capsys, "verify", "--class", "rainbow", g, f)
        assert code == 2

    def test_parse_error_reports_line(self, capsys, tmp_path, k12):
        _, f = k12
        bad = tmp_path / "bad.txt"
        bad.write_text("a b\na b\n")
        code, _, err = run(capsys, "verify", "--class", "iasl", str(bad), f)
        assert code == 2
        assert "line 2" in err


class TestClassify:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "classify", "{0,1,2}")
        assert code == 0
        assert "rho = 3" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "classify", "{0,1,2}", "--json")
        payload = json.loads(out)
        assert payload["rho"] == 3
        assert payload["rho_prime"] == 1
        assert payload["x_is_sumset"] is True
        by_set = {s["set"]: s for s in payload["subsets"]}
        assert by_set["{2}"]["nontrivial_sumset"] is True
        assert by_set["{2}"]["witness"] == ["{1}", "{1}"]

    def test_bare_literal(self, capsys):
        code, out, _ = run(capsys, "classify", "0,1", "--json")
        assert json.loads(out)["rho"] == 0


class TestSearch:
    def test_found(self, capsys, tmp_path):
        g = tmp_path / "k16.txt"
        g.write_text("\n".join(f"c l{i}" for i in range(1, 7)) + "\n")
        code, out, _ = run(capsys, "search", "--mode", "iasgl", str(g),
                           "{0,1,2}", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["found"] is True
        assert payload["labeling"]["assignment"]["c"] == "{0}"

    def test_not_found_exits_one(self, capsys, tmp_path):
        g = tmp_path / "c6.txt"
        g.write_text(C6_GRAPH)
        code, out, _ = run(capsys, "search", "--mode", "top-iasgl", str(g),
                           "{0,1,2}", "--json")
        payload = json.loads(out)
        assert code == 1
        assert payload["found"] is False
        assert payload["screen"]["pendant_floor_ok"] is False

    def test_unknown_mode(self, capsys, tmp_path):
        g = tmp_path / "g.txt"
        g.write_text("a b\n")
        code, _, _ = run(capsys, "search", "--mode", "foo", str(g), "{0,1}")
        assert code == 2

    def test_text_mode_prints_labels(self, capsys, tmp_path):
        g = tmp_path / "k12.txt"
        g.write_text(K12_GRAPH)
        code, out, _ = run(capsys, "search", "--mode", "iasgl", str(g), "{0,1}")
        assert code == 0
        assert "found: yes" in out
        assert "{0}" in out


class TestRealize:
    TOPOLOGY = "∅\n{0}\n{0,1}\n{0,1,2}\n"

    def test_writes_files_that_reparse(self, capsys, tmp_path):
        t = tmp_path / "t.txt"
        t.write_text(self.TOPOLOGY)
        og = tmp_path / "out_g.txt"
        of = tmp_path / "out_f.txt"
        code, _, _ = run(capsys, "realize", str(t), "--out-graph", str(og),
                         "--out-labeling", str(of))
        assert code == 0
        g = parse_graph(og.read_text())
        f = parse_labeling(of.read_text())
        assert g.n == 3 and g.m == 2
        assert str(f.assignment["c"]) == "{0}"
        # verify the emitted pair through the CLI as well
        code, out, _ = run(capsys, "verify", "--class", "top-iasl", str(og),
                           str(of))
        assert code == 0

    def test_json(self, capsys, tmp_path):
        t = tmp_path / "t.txt"
        t.write_text(self.TOPOLOGY)
        code, out, _ = run(capsys, "realize", str(t), "--json")
        payload = json.loads(out)
        assert payload["graph"]["vertices"] == ["c", "p1", "p2"]
        assert payload["labeling"]["assignment"]["c"] == "{0}"

    def test_not_realizable(self, capsys, tmp_path):
        t = tmp_path / "t.txt"
        t.write_text("∅\n{1}\n{0,1}\n")
        code, _, err = run(capsys, "realize", str(t))
        assert code == 2
        assert "{0}" in err

    def test_degenerate(self, capsys, tmp_path):
        t = tmp_path / "t.txt"
        t.write_text("∅\n{0,1}\n")
        code, _, _ = run(capsys, "realize", str(t))
        assert code == 2

    def test_stdout_mode_sections_reparse(self, capsys, tmp_path):
        t = tmp_path / "t.txt"
        t.write_text(self.TOPOLOGY)
        code, out, _ = run(capsys, "realize", str(t))
        assert code == 0
        graph_part, labeling_part = out.split("# labeling")
        g = parse_graph(graph_part)
        f = parse_labeling(labeling_part)
        assert g.n == 3
        assert str(f.assignment["c"]) == "{0}"


class TestEnumTopologies:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "enum-topologies", "{0,1,2}", "--count")
        assert code == 0
        assert out.strip() == "29"

    def test_with_zero(self, capsys):
        code, out, _ = run(capsys, "enum-topologies", "{0,1}", "--with-zero",
                           "--count")
        assert out.strip() == "2"

    def test_text_listing(self, capsys):
        code, out, _ = run(capsys, "enum-topologies", "{0,1}")
        assert code == 0
        assert "4 topologies" in out
        assert "{} {0} {0,1}" in out

    def test_json_lists_opens(self, capsys):
        code, out, _ = run(capsys, "enum-topologies", "{0,1}", "--json")
        payload = json.loads(out)
        assert payload["count"] == 4
        assert {"opens": ["{}", "{0,1}"],
                "is_topology": True} in payload["topologies"]

    def test_infeasible(self, capsys):
        code, _, err = run(capsys, "enum-topologies", "{0,1,2,3,4}")
        assert code == 2


class TestMinGroundSet:
    def test_found(self, capsys, tmp_path):
        g = tmp_path / "g.txt"
        g.write_text(K12_GRAPH)
        code, out, _ = run(capsys, "min-ground-set", "--mode", "iasgl", str(g))
        assert code == 0
        assert out.strip() == "{0,1}"

    def test_none(self, capsys, tmp_path):
        g = tmp_path / "g.txt"
        g.write_text("a b\n")
        code, out, _ = run(capsys, "min-ground-set", "--mode", "iasgl", str(g),
                           "--json")
        payload = json.loads(out)
        assert code == 1
        assert payload["found"] is False
        assert payload["ground"] is None


class TestOracle:
    def test_single_check(self, capsys):
        code, out, _ = run(capsys, "oracle", "T-real", "--max-vertices", "4",
                           "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["clean"] is True
        assert payload["reports"][0]["id"] == "T-real"

    def test_all_small(self, capsys):
        code, out, _ = run(capsys, "oracle", "all", "--max-vertices", "4")
        assert code == 0
        assert "suite clean" in out

    def test_custom_ground_set(self, capsys):
        code, out, _ = run(capsys, "oracle", "P1", "--max-vertices", "3",
                           "--ground-set", "{0,1}", "--json")
        payload = json.loads(out)
        assert payload["ground_sets"] == ["{0,1}"]

    def test_unknown_id(self, capsys):
        code, _, err = run(capsys, "oracle", "T-zzz", "--max-vertices", "3")
        assert code == 2
        assert "unknown theorem id" in err


class TestExitCodeContract:
    def test_verdict_and_exit_agree(self, capsys, k12, tmp_path):
        g, f = k12
        for cls in ("iasl", "iasgl", "top-iasl", "top-iasgl"):
            code, out, _ = run(capsys, "verify", "--class", cls, g, f, "--json")
            assert (code == 0) == json.loads(out)["verdict"]

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "classify", "{0,1}")
        assert code == 0
        code, _, err = run(capsys, "verify", "--class", "iasl",
                           "/nonexistent/g.txt", "/nonexistent/f.txt")
        assert code == 2
