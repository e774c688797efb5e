import json

from freegrowth.cli import main


def _write(path, *words):
    path.write_text("".join(w + "\n" for w in words))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce(capsys):
    assert run(capsys, "reduce", "xYyyXx") == (0, "xy\n", "")
    assert run(capsys, "reduce", "xX")[1] == "1\n"
    assert run(capsys, "reduce", "xz")[0] == 2


def test_period(capsys):
    assert run(capsys, "period", "xyxyx")[1] == "period=xy exponent=2 tail=x\n"
    assert run(capsys, "period", "xyxyx", "--side", "right")[1] == "period=yx exponent=2 tail=x\n"
    assert run(capsys, "period", "xyx")[1] == "aperiodic\n"


def test_product_and_power(capsys, tmp_path):
    a = _write(tmp_path / "a.txt", "x", "y", "yy", "yyy")
    b = _write(tmp_path / "b.txt", "X")
    code, out, _ = run(capsys, "product", a, b)
    assert code == 0 and out.split() == ["1", "yX", "yyX", "yyyX"]
    code, out, _ = run(capsys, "power", a, "-n", "3")
    assert code == 0 and len(out.split()) == 36
    dest = tmp_path / "a3.txt"
    assert run(capsys, "power", a, "-n", "3", "-o", str(dest))[0] == 0
    assert len(dest.read_text().split()) == 36


def test_power_cap(capsys, tmp_path):
    a = _write(tmp_path / "a.txt", "x", "X", "y", "Y")
    code, _, err = run(capsys, "power", a, "-n", "6", "--max-size", "50")
    assert code == 2 and "A^" in err


def test_growth_csv(capsys, tmp_path):
    a = _write(tmp_path / "a.txt", "x", "y")
    code, out, _ = run(capsys, "growth", a, "--nmax", "3")
    assert code == 0
    assert out.splitlines() == ["n,size,ratio_num,ratio_den,ratio", "1,2,1,1,1", "2,4,2,1,2", "3,8,2,1,2"]
    dest = tmp_path / "g.csv"
    run(capsys, "growth", a, "--nmax", "2", "--csv", str(dest))
    assert dest.read_text().splitlines()[-1] == "2,4,2,1,2"


def test_lemma1_trace(capsys, tmp_path):
    a = _write(tmp_path / "a.txt", "xyX", "xyyX", "xyyyX")
    trace = tmp_path / "t.json"
    code, out, _ = run(capsys, "lemma1", a, "--trace", str(trace))
    assert code == 0
    assert out.splitlines() == ["u=X", "A0=y,yy", "B0=yy,yyy"]
    doc = json.loads(trace.read_text())
    assert doc["steps"][0] == {"kind": "conjugate", "letter": "X"}
    assert doc["a0"] == ["y", "yy"]


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "-k", "3", "-n", "3")
    lines = out.splitlines()
    assert code == 0 and lines[:4] == ["x", "y", "yy", "yyy"]
    assert lines[-1].startswith("3,36,9,")


def test_check_files(capsys, tmp_path):
    p = [_write(tmp_path / f"p{i}.txt", *["xy" * j for j in range(1, 13)]) for i in (0, 1)]
    v = _write(tmp_path / "v.txt", "xy" * 12)
    code, out, _ = run(capsys, "check", "lemma2", "--files", p[0], v, p[1])
    assert code == 0 and "|UVW|=23" in out and "common_period=xy" in out
    code, out, _ = run(capsys, "check", "lemma3", "--files", p[0], v, p[1])
    assert code == 0 and "period=xy" in out
    code, out, _ = run(capsys, "check", "lemma4", "--files", p[0], v, p[1])
    assert code == 2  # precondition: v ends with an element of U


def test_check_theorem_file(capsys, tmp_path):
    a = _write(tmp_path / "a.txt", "x", "y", "yy", "yyy")
    code, out, _ = run(capsys, "check", "theorem", "--files", a, "-n", "3")
    assert code == 0 and "|A^n|=36" in out and "bound_ok=True" in out
    bad = _write(tmp_path / "c.txt", "x", "xx")
    assert run(capsys, "check", "theorem", "--files", bad)[0] == 2


def test_check_generated(capsys):
    code, out, _ = run(capsys, "check", "lemma0", "--maxlen", "6")
    assert code == 0 and out.startswith("PASS lemma0")
    code, out, _ = run(capsys, "check", "lemma2", "--maxlen", "2", "--maxsize", "2", "--random", "--exhaustive", "--count", "50")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = run(capsys, "check", "lemma6", "--count", "50")
    assert code == 0


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "check", "lemma5", "--random")[0] == 2
    assert run(capsys, "check", "lemma2", "--files", "a")[0] == 2
    assert run(capsys, "power", str(tmp_path / "missing.txt"), "-n", "2")[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_verification_failure_exit_code(capsys, monkeypatch, tmp_path):
    import freegrowth.cli as cli
    from freegrowth.errors import VerificationFailure

    def boom(*a, **k):
        raise VerificationFailure("forced", {"v": "xy"})

    monkeypatch.setattr(cli, "lemma2_dichotomy", boom)
    f = _write(tmp_path / "f.txt", "x")
    code, out, _ = run(capsys, "check", "lemma2", "--files", f, f, f)
    assert code == 1 and "counterexample" in out
