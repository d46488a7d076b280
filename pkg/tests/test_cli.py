"""CLI behavior: spec'd examples, exit-code protocol, determinism."""

import json

import pytest

from zdgraph.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompress:
    def test_field_gives_empty_graph(self, capsys):
        code, out, err = invoke(capsys, "compress", "Z/7")
        assert code == 0
        assert out == ""
        assert err == ""

    def test_z12_dot_has_loop_at_6(self, capsys):
        code, out, _ = invoke(capsys, "compress", "Z/12", "--loops", "--format", "dot")
        assert code == 0
        assert out.count("[label=") == 4
        assert 'n3 [label="6"' in out
        assert "n3 -- n3;" in out

    def test_z12_json_four_vertices(self, capsys):
        code, out, _ = invoke(capsys, "compress", "Z/12", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert [v["label"] for v in payload["vertices"]] == ["2", "3", "4", "6"]
        assert payload["edges"] == [[0, 3], [1, 2], [2, 3]]
        assert all(v["loop"] is False for v in payload["vertices"])

    def test_bivariate_uses_oracle_with_sizes(self, capsys):
        code, out, _ = invoke(capsys, "compress", "F2[x,y]/(x^2,y^2)", "--loops")
        assert code == 0
        assert "size" in out
        assert "loop" in out

    def test_table_lists_vertices_and_edges(self, capsys):
        code, out, _ = invoke(capsys, "compress", "Z/12", "--loops")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "vertex 2"
        assert "vertex 6  loop" in lines
        assert "edge 2 -- 6" in lines


class TestGraph:
    def test_z8_table(self, capsys):
        code, out, _ = invoke(capsys, "graph", "Z/8")
        assert code == 0
        assert out.splitlines() == [
            "vertex 2",
            "vertex 4",
            "vertex 6",
            "edge 2 -- 4",
            "edge 4 -- 6",
        ]

    def test_z8_json(self, capsys):
        code, out, _ = invoke(capsys, "graph", "Z/8", "--format", "json")
        payload = json.loads(out)
        assert payload["vertices"] == ["2", "4", "6"]
        assert payload["edges"] == [[0, 1], [1, 2]]

    def test_dot_output(self, capsys):
        code, out, _ = invoke(capsys, "graph", "Z/8", "--format", "dot")
        assert code == 0
        assert out.startswith("graph zero_divisor_graph {")


class TestIso:
    def test_z8_z6_looped_not_isomorphic(self, capsys):
        code, out, _ = invoke(capsys, "iso", "Z/8", "Z/6", "--loops")
        assert code == 1
        assert out.splitlines()[0] == "not isomorphic"
        assert "separating: loop count" in out

    def test_z8_z6_unlooped_isomorphic(self, capsys):
        code, out, _ = invoke(capsys, "iso", "Z/8", "Z/6")
        assert code == 0
        assert out.splitlines()[0] == "isomorphic"
        assert "  2 -> 2" in out.splitlines()

    def test_poly_vs_integer_witness(self, capsys):
        code, out, _ = invoke(capsys, "iso", "F2[x]/(x^3)", "Z/8", "--loops")
        assert code == 0
        assert "isomorphic" in out

    def test_budget_exhaustion_exits_3(self, capsys):
        code, _, err = invoke(
            capsys, "iso", "Z/512", "Z/19683", "--loops", "--budget", "3"
        )
        assert code == 3
        assert "budget" in err

    def test_json_format(self, capsys):
        code, out, _ = invoke(capsys, "iso", "Z/8", "Z/6", "--loops", "--format", "json")
        assert code == 1
        payload = json.loads(out)
        assert payload["isomorphic"] is False
        assert payload["separating"] == "loop count"
        assert payload["witness"] is None


class TestErrors:
    def test_bad_ring_spec_exits_2(self, capsys):
        code, _, err = invoke(capsys, "compress", "Z/banana")
        assert code == 2
        assert "error:" in err

    def test_ring_too_large_exits_2(self, capsys):
        code, _, err = invoke(capsys, "graph", "Z/20001")
        assert code == 2
        assert "error:" in err

    def test_missing_subcommand_exits_2(self, capsys):
        assert run([]) == 2

    def test_unknown_flag_exits_2(self, capsys):
        assert run(["compress", "Z/8", "--nope"]) == 2

    def test_missing_instances_file_exits_2(self, capsys):
        code, _, err = invoke(capsys, "conjecture", "2", "--instances", "/tmp/nope-zd")
        assert code == 2

    def test_malformed_instance_line_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("Z/8\n")
        code, _, err = invoke(capsys, "conjecture", "1", "--instances", str(path))
        assert code == 2
        assert "bad.txt:1" in err


class TestVerify:
    def test_small_bound_passes(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--max-n", "40")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["sweep", "checked", "failures", "status"]
        names = [line.split()[0] for line in lines[1:]]
        assert names == ["oracle-equivalence", "gcd-theorem", "blow-up"]
        assert all(line.endswith("pass") for line in lines[1:])

    def test_jobs_flag_keeps_output_identical(self, capsys):
        _, out1, _ = invoke(capsys, "verify", "--max-n", "40")
        _, out3, _ = invoke(capsys, "verify", "--max-n", "40", "--jobs", "3")
        assert out1 == out3


class TestConjecture:
    def test_scan_1_small(self, capsys):
        code, out, _ = invoke(capsys, "conjecture", "1", "--max-n", "8")
        assert code == 0
        lines = out.splitlines()
        assert "counterexample  Z/6 | Z/8" in lines
        assert lines[-1].startswith("checked 21:")

    def test_instances_file_and_report(self, capsys, tmp_path):
        instances = tmp_path / "instances.txt"
        instances.write_text(
            "# conjecture 3 fixtures\n"
            "Z/48 | 12\n"
            "\n"
            "F2[x]/(x^4) | x^2\n"
        )
        report_path = tmp_path / "reports.jsonl"
        code, out, _ = invoke(
            capsys,
            "conjecture",
            "3",
            "--instances",
            str(instances),
            "--report",
            str(report_path),
        )
        assert code == 0
        assert out.splitlines()[-1] == "checked 2: 2 supported, 0 counterexample, 0 skipped"
        payloads = [
            json.loads(line) for line in report_path.read_text().splitlines()
        ]
        assert [p["verdict"] for p in payloads] == ["supported", "supported"]
        assert payloads[0]["instance"] == "Z/48 | 12"

    def test_conjecture4_defaults(self, capsys):
        code, out, _ = invoke(capsys, "conjecture", "4")
        assert code == 0
        assert out.splitlines()[-1] == "checked 6: 4 supported, 0 counterexample, 2 skipped"

    def test_jobs_flag_keeps_output_identical(self, capsys):
        _, out1, _ = invoke(capsys, "conjecture", "4")
        _, out4, _ = invoke(capsys, "conjecture", "4", "--jobs", "4")
        assert out1 == out4

    def test_counterexamples_still_exit_0(self, capsys):
        code, out, _ = invoke(capsys, "conjecture", "1", "--max-n", "8")
        assert code == 0
        assert "counterexample" in out


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("compress", "Z/720", "--loops", "--format", "json"),
            ("graph", "Z/30", "--format", "dot"),
            ("iso", "Z/8", "Z/6", "--loops", "--format", "json"),
            ("conjecture", "2", "--max-n", "6"),
        ],
    )
    def test_repeated_invocations_identical(self, capsys, argv):
        code1, out1, _ = invoke(capsys, *argv)
        code2, out2, _ = invoke(capsys, *argv)
        assert code1 == code2
        assert out1 == out2
