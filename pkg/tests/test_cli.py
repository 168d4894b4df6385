import json

import pytest

from eef.cli import main
from eef.modelspec import format_model, four_cycle, independence_2x2, parse_model

from fourcycle_tables import BASIS_COLUMNS, EXPANSION_X16, ROWS


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["indep"] = tmp_path / "indep22.txt"
    paths["indep"].write_text(format_model(independence_2x2()))
    paths["id3"] = tmp_path / "identity3.txt"
    paths["id3"].write_text("3 3\n1 0 0\n0 1 0\n0 0 1\n")
    paths["fc"] = tmp_path / "fourcycle.txt"
    paths["fc"].write_text(format_model(four_cycle()))
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kernel(capsys, files):
    code, out, _ = run(capsys, "kernel", files["indep"])
    d = json.loads(out)
    assert code == 0
    assert d["kernel"] in ([[1, -1, -1, 1]], [[-1, 1, 1, -1]])
    assert d["rank"] == 3
    code, out, _ = run(capsys, "kernel", files["id3"])
    assert json.loads(out)["kernel"] == []


def test_kernel_markov(capsys, tmp_path):
    code, out, _ = run(capsys, "example", "markov", "--steps", "2")
    f = tmp_path / "markov.txt"
    f.write_text(out)
    code, out, _ = run(capsys, "kernel", f)
    assert json.loads(out)["confounding"] == [["1/1", "1/1", "0/1", "0/1", "0/1", "0/1"], ["0/1", "0/1", "1/1", "1/1", "1/1", "1/1"]]


def test_hilbert(capsys, files):
    code, out, _ = run(capsys, "hilbert", files["indep"], "--oracle", "3")
    d = json.loads(out)
    assert code == 0 and len(d["vectors"]) == 4
    assert d["oracle"] == {"agrees": True, "bound": 3, "size": 4}
    code, out, _ = run(capsys, "hilbert", files["id3"])
    assert json.loads(out)["vectors"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    code, out, _ = run(capsys, "hilbert", files["fc"])
    d = json.loads(out)
    table = {tuple(r[j] for r in BASIS_COLUMNS) for j in range(24)}
    assert {tuple(v) for v in d["vectors"]} == table and d["redundant"] == []


def test_hilbert_errors(capsys, files, tmp_path):
    code, _, err = run(capsys, "hilbert", files["indep"], "--oracle", "0")
    assert code == 2 and "oracle" in err
    big = tmp_path / "big.txt"
    big.write_text("1 30\n" + " ".join(["1"] * 30) + "\n")
    code, _, err = run(capsys, "hilbert", big, "--oracle", "1")
    assert code == 2 and "guard" in err


def test_hilbert_pretty(capsys, files):
    code, out, _ = run(capsys, "hilbert", files["indep"], "--pretty")
    assert code == 0 and "b4" in out


def test_faces_fourcycle(capsys, files):
    code, out, _ = run(capsys, "faces", files["fc"])
    d = json.loads(out)
    assert d["rows"] == list(ROWS)
    assert len(d["faces"]) == 24
    by_vec = {tuple(e["vector"]): e["coefficients"] for e in d["expansions"]}
    for j in range(24):
        b = tuple(r[j] for r in BASIS_COLUMNS)
        coef = by_vec[b]
        for i, r in enumerate(ROWS):
            num, den = map(int, coef[r].split("/"))
            assert num * 16 == EXPANSION_X16[i][j] * den


def test_faces_independence(capsys, files):
    code, out, _ = run(capsys, "faces", files["indep"])
    faces = json.loads(out)["faces"]
    assert len(faces) == 4 and all(len(f["states"]) == 2 for f in faces)
    code, out, _ = run(capsys, "faces", files["indep"], "--pretty")
    assert "face 1" in out


@pytest.mark.parametrize(
    "values,kind",
    [(["1/4"] * 4, "interior"), (["1/2", "1/2", "0", "0"], "border"), (["1/2", "0", "0", "1/2"], "outside")],
)
def test_check(capsys, files, tmp_path, values, kind):
    dens = tmp_path / "q.txt"
    dens.write_text("# density\n" + "\n".join(values) + "\n")
    code, out, _ = run(capsys, "check", files["indep"], dens, "--expect", kind)
    assert code == 0 and json.loads(out)["kind"] == kind
    code, _, _ = run(capsys, "check", files["indep"], dens, "--expect", "closure")
    assert code == (1 if kind == "outside" else 0)


def test_check_border_face(capsys, files, tmp_path):
    dens = tmp_path / "q.txt"
    dens.write_text("0.5\n0.5\n0\n0\n")
    code, out, _ = run(capsys, "check", files["indep"], dens)
    d = json.loads(out)
    assert d["kind"] == "border" and d["face"]["states"] == ["00", "01"]


def test_check_errors(capsys, files, tmp_path):
    dens = tmp_path / "q.txt"
    dens.write_text("1/3\n1/3\n1/3\n1/3\n")
    code, _, err = run(capsys, "check", files["indep"], dens)
    assert code == 2 and "4/3" in err
    dens.write_text("1/2\n1/2\n")
    code, _, err = run(capsys, "check", files["indep"], dens)
    assert code == 2 and "2 values" in err
    dens.write_text("1/2\nabc\n0\n1/2\n")
    assert run(capsys, "check", files["indep"], dens)[0] == 2
    code, _, err = run(capsys, "check", files["indep"], tmp_path / "missing.txt")
    assert code == 2


def test_limit(capsys, files):
    code, out, _ = run(capsys, "limit", files["fc"], "--face", "0")
    d = json.loads(out)
    assert code == 0 and d["density"]["values"] == pytest.approx([1 / 16] * 16)
    code, out, _ = run(capsys, "limit", files["fc"], "--face", "1")
    d = json.loads(out)
    nz = [v for v in d["density"]["values"] if v]
    assert d["converged"] and len(nz) == 12 and nz == pytest.approx([1 / 12] * 12, abs=1e-12)
    assert d["gap"] < 1e-10


def test_limit_independence_trace(capsys, files):
    import numpy as np

    from eef.family import density_theta, trace_model

    theta = [0.3, -0.8, 1.4]
    code, out, _ = run(capsys, "limit", files["indep"], "--face", "4", "--theta", ",".join(map(str, theta)))
    d = json.loads(out)
    M = independence_2x2()
    S = [M.labels.index(s) for s in d["face"]["states"]]
    cond = density_theta(trace_model(M, S), theta).values
    got = [d["density"]["values"][x] for x in S]
    assert 0.5 * np.abs(np.array(got) - np.array(cond)).sum() < 1e-8


def test_limit_errors(capsys, files):
    assert run(capsys, "limit", files["indep"], "--face", "9")[0] == 2
    assert run(capsys, "limit", files["indep"], "--theta", "1,2")[0] == 2
    assert run(capsys, "limit", files["indep"], "--theta", "a,b,c")[0] == 2
    assert run(capsys, "limit", files["indep"], "--tol", "0")[0] == 2


def test_example_outputs(capsys):
    code, out, _ = run(capsys, "example", "four-cycle")
    M = parse_model(out)
    assert M == four_cycle()
    assert M.A[M.row_names.index("BA"), M.labels.index("+-+-")] == -1
    code, out, _ = run(capsys, "example", "markov", "--steps", "3")
    M = parse_model(out)
    assert M.column(M.labels.index("0101")) == (1, 0, 0, 2, 1, 0)
    code, out, _ = run(capsys, "example", "markov", "--steps", "2")
    M = parse_model(out)
    assert M.column(M.labels.index("000"))[1:] == (0, 2, 0, 0, 0)


def test_example_errors(capsys):
    assert run(capsys, "example", "markov")[0] == 2
    assert run(capsys, "example", "markov", "--steps", "13")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["example", "nope"])
    assert exc.value.code == 2


def test_parse_error_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 3\n1 1 1\n1 x 1\n")
    code, _, err = run(capsys, "kernel", bad)
    assert code == 2 and "line 3" in err


def test_deterministic(capsys, files):
    for cmd in ("kernel", "hilbert", "faces"):
        outs = {run(capsys, cmd, files["fc"])[1] for _ in range(2)}
        assert len(outs) == 1
