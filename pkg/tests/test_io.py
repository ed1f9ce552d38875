import hashlib
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from toricfano import fixtures
from toricfano.cli import main
from toricfano.io import (
    ParseError,
    ScanOptions,
    analyze_entry,
    emit,
    fmt_rat,
    parse,
    scan,
)

GOOD = """\
# two entries, with comments and blank lines

polytope plane
dim 2
vertices 3
1 0
0 1
-1 -1
end

polytope cross
dim 2
vertices 4
1 0
0 1
-1 0
0 -1
end
"""


class TestParse:
    def test_two_entries(self):
        pf = parse(GOOD)
        assert pf.names() == ["plane", "cross"]
        name, dim, rows = pf.entry("plane")
        assert dim == 2
        assert rows == ((1, 0), (0, 1), (-1, -1))

    def test_missing_entry_raises_keyerror(self):
        with pytest.raises(KeyError):
            parse(GOOD).entry("nope")

    @pytest.mark.parametrize(
        "text, line_no",
        [
            ("polytope a\npolytope b\n", 2),          # dim line missing
            ("polytope a\ndim x\n", 2),               # non-integer dim
            ("polytope a\ndim 0\n", 2),               # dim must be positive
            ("polytope a\ndim 2\nvertices 1\n1 2 3\nend\n", 4),  # row too long
            ("polytope a\ndim 2\nvertices 2\n1 0\nend\n", 5),    # early end
            ("polytope a\ndim 2\nvertices 1\n1 q\nend\n", 4),    # bad token
            ("bogus a\n", 1),                         # wrong keyword
            ("polytope a b\n", 1),                    # extra name token
        ],
    )
    def test_error_line_numbers(self, text, line_no):
        with pytest.raises(ParseError) as exc:
            parse(text)
        assert exc.value.line_no == line_no

    def test_duplicate_names_rejected(self):
        with pytest.raises(ParseError):
            parse(GOOD + GOOD)

    def test_truncated_file(self):
        with pytest.raises(ParseError) as exc:
            parse("polytope a\ndim 2\nvertices 1\n1 0\n")
        assert exc.value.line_no == 1

    def test_corpus_round_trip(self):
        pf = parse(fixtures.corpus_text())
        assert len(pf.entries) >= 14
        assert pf.names() == [e[0] for e in fixtures.corpus_entries()]


class TestFormatting:
    def test_fmt_rat(self):
        assert fmt_rat(0) == "0"
        assert fmt_rat(7) == "7"
        assert fmt_rat(Fraction(-9, 6)) == "-3/2"
        assert fmt_rat(Fraction(4, 2)) == "2"


class TestAnalyze:
    def test_plane_report(self):
        entry = parse(GOOD).entry("plane")
        r = analyze_entry(entry)
        assert r["name"] == "plane"
        assert r["is_smooth_fano"] and r["is_reflexive"]
        assert r["is_ke"] and r["is_symmetric"]
        assert r["barycenter"] == ["0", "0"]
        assert r["group_order"] == 6
        assert r["alpha"] == "1" and r["lct"] == "1"
        assert r["volume"] == "9/2" and r["degree"] == "9"
        assert r["fano_index"] == 3
        assert r["ehrhart"] == ["1", "9/2", "9/2"]
        assert "seconds" not in r

    def test_non_smooth_entry_gets_certificate(self):
        r = analyze_entry(("bad", 2, ((2, 1), (-1, 0), (0, -1))))
        assert r["is_smooth_fano"] is False
        assert isinstance(r["certificate"], str) and r["certificate"]
        assert "is_ke" not in r

    def test_ehrhart_dim_cap(self):
        entry = parse(GOOD).entry("plane")
        r = analyze_entry(entry, ScanOptions(ehrhart_max_dim=1))
        assert "ehrhart" not in r

    def test_timing_flag(self):
        entry = parse(GOOD).entry("plane")
        r = analyze_entry(entry, ScanOptions(timing=True))
        assert isinstance(r["seconds"], float)


class TestScanEmit:
    def test_scan_preserves_order(self):
        pf = parse(GOOD)
        reports = scan(pf)
        assert [r["name"] for r in reports] == ["plane", "cross"]

    def test_parallel_matches_serial(self):
        pf = parse(GOOD)
        serial = emit(scan(pf, ScanOptions(conjectures=True)))
        parallel = emit(scan(pf, ScanOptions(conjectures=True, jobs=2)))
        assert serial == parallel

    def test_json_is_deterministic(self):
        pf = parse(GOOD)
        assert emit(scan(pf)) == emit(scan(pf))

    def test_json_has_no_floats(self):
        pf = parse(GOOD)
        data = json.loads(emit(scan(pf, ScanOptions(conjectures=True))))

        def walk(x):
            if isinstance(x, float):
                raise AssertionError(f"float leaked into report: {x}")
            if isinstance(x, dict):
                for v in x.values():
                    walk(v)
            elif isinstance(x, list):
                for v in x:
                    walk(v)

        walk(data)

    def test_csv(self):
        pf = parse(GOOD)
        lines = emit(scan(pf), "csv").decode().splitlines()
        assert lines[0].startswith("name,dim,n_vertices")
        assert lines[1].split(",")[0] == "plane"
        assert len(lines) == 3

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit([], "xml")


class TestFixtureIntegrity:
    """The embedded matrices are load-bearing; pin them byte-for-byte."""

    @staticmethod
    def digest(rows):
        blob = ";".join(",".join(str(x) for x in row) for row in rows)
        return hashlib.sha256(blob.encode()).hexdigest()

    def test_q1(self):
        assert self.digest(fixtures.Q1_VERTICES) == (
            "104c695d0e3d0e34f607723990fe67cba9ba77898bd40f08a8428613ba30125c"
        )

    def test_q3(self):
        assert self.digest(fixtures.Q3_VERTICES) == (
            "0a462e5b692ca39dcfc2a8451f1b659b69d35734ad2d1e89b58df9b4e67a44f6"
        )

    def test_cx5(self):
        assert self.digest(fixtures.CX5_VERTICES) == (
            "130a9bc0c78a297b4e38bf922ad508bb1ae33b044fe293d5e480b333e0dd5328"
        )


class TestCLI:
    @pytest.fixture()
    def good_file(self, tmp_path):
        path = tmp_path / "corpus.txt"
        path.write_text(GOOD)
        return str(path)

    def test_check(self, good_file, capsys):
        assert main(["check", good_file, "--name", "plane"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data[0]["name"] == "plane"
        assert data[0]["is_ke"] is True

    def test_scan_to_file(self, good_file, tmp_path):
        out = tmp_path / "out.json"
        assert main(["scan", good_file, "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert [r["name"] for r in data] == ["plane", "cross"]

    def test_scan_csv(self, good_file, capsys):
        assert main(["scan", good_file, "--format", "csv"]) == 0
        assert capsys.readouterr().out.startswith("name,")

    def test_dual(self, good_file, capsys):
        assert main(["dual", good_file, "--name", "plane"]) == 0
        out = capsys.readouterr().out
        pf = parse(out)
        _, dim, rows = pf.entry("plane_dual")
        assert dim == 2
        assert set(rows) == {(-1, -1), (-1, 2), (2, -1)}

    def test_parse_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("bogus\n")
        with pytest.raises(SystemExit) as exc:
            main(["check", str(bad)])
        assert exc.value.code == 1
        assert "line 1" in capsys.readouterr().err

    def test_missing_file_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", "/nonexistent/file.txt"])
        assert exc.value.code == 1

    def test_missing_name_exit_code(self, good_file, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", good_file, "--name", "missing"])
        assert exc.value.code == 1

    def test_console_script_runs(self, good_file):
        proc = subprocess.run(
            [sys.executable, "-m", "toricfano.cli", "scan", good_file, "--format", "csv"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("name,")
