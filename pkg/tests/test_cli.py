import json
import subprocess
import sys

from zigzaginv.cli import main


def run_cli(*args, out=None):
    argv = list(args)
    if out is not None:
        argv += ["--out", str(out)]
    return main(argv)


def test_info_contains_expected_fields(tmp_path):
    out = tmp_path / "info.json"
    code = run_cli("info", "--m", "2", "--q", "1/2", out=out)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["digit_poly"] == ["1", "-2", "-2", "1"]
    assert data["kneading"] == "2 1 k1"
    assert data["rotation_at_infinity"] == "1/2"
    assert data["prongs_at_infinity"] == 2
    assert data["postcritical_count"] == 4
    assert data["lambda"]["decimal"].startswith("2.6180339887")
    assert data["markov"]["strong"]["columns"] == [[1, 1, 1], [0, 1, 1],
                                                   [2, 1, 0]]
    assert data["surface_polynomials"]["symplectic"] == ["1", "-3", "1"]
    assert data["double_cover"] == {"genus": 1, "punctures": 6,
                                    "homology_rank_split": [4, 3]}
    assert data["zeta_prefix"] == ["1", "2", "6", "15", "40"]


def test_info_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli("info", "--m", "3", "--q", "2/5", out=a)
    run_cli("info", "--m", "3", "--q", "2/5", out=b)
    assert a.read_bytes() == b.read_bytes()


def test_scan_csv(tmp_path):
    out = tmp_path / "scan.csv"
    code = run_cli("scan", "--m", "2", "--max-den", "3", out=out)
    assert code == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "q_num,q_den,q_decimal,lambda,width"
    assert len(lines) == 4
    lams = [float(line.split(",")[3]) for line in lines[1:]]
    assert lams == sorted(lams)
    assert abs(lams[1] - 2.618033988750) < 1e-9
    row = lines[1].split(",")
    assert row[0] == "1" and row[1] == "3"


def test_scan_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli("scan", "--m", "3", "--max-den", "6", out=a)
    run_cli("scan", "--m", "3", "--max-den", "6", out=b)
    assert a.read_bytes() == b.read_bytes()


def test_scan_plot(tmp_path):
    out = tmp_path / "scan.csv"
    fig = tmp_path / "scan.png"
    code = run_cli("scan", "--m", "2", "--max-den", "5", "--plot", str(fig),
                   out=out)
    assert code == 0
    assert fig.exists() and fig.stat().st_size > 1000


def test_tree_command(tmp_path):
    out = tmp_path / "tree.json"
    code = run_cli("tree", "--m", "2", "--depth", "4", out=out)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["violations"] == 0
    assert len(data["nodes"]) == 15
    by_q = {node["q"]: node for node in data["nodes"]}
    assert by_q["7/12"] is not None if "7/12" in by_q else True
    assert by_q["3/5"]["laws"] == {"first": "ok", "second": "ok"}
    assert by_q["1/3"]["laws"] == {"edge": "ok"}


def test_verify_command(tmp_path):
    out = tmp_path / "verify.json"
    code = run_cli("verify", "--m", "2", "--max-den", "8", out=out)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["ok"] is True
    assert data["violations"] == []
    assert data["checks"] > 50


def test_burau_command(tmp_path):
    out = tmp_path / "burau.json"
    code = run_cli("burau", "--m", "2", "--q", "1/2", "--word", "1,1,1,1,1,2",
                   out=out)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["match"] in ("plus", "minus")
    assert data["strands"] == 4
    code = run_cli("burau", "--m", "2", "--q", "1/2", "--word", "1", out=out)
    data = json.loads(out.read_text())
    assert data["match"] == "none"


def test_usage_errors():
    assert run_cli("info", "--m", "2", "--q", "0.5") == 2
    assert run_cli("info", "--m", "1", "--q", "1/2") == 2
    assert run_cli("info", "--m", "2", "--q", "3/2") == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zigzaginv.cli", "info", "--m", "2",
         "--q", "1/3"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["digit_poly"] == ["1", "-2", "0", "-2", "1"]
