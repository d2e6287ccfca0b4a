from lmtkauffman.cli import main
from lmtkauffman.corpus import CORPUS, get

HOPF = "Xr 1 3 4 2\nXr 3 1 2 4\n"


def write(tmp_path, text, name="d.pd"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_unknot(tmp_path, capsys):
    path = write(tmp_path, "loops 1\n")
    code, out, err = run(capsys, "compute", path)
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0].startswith(f"# {path}: 0 crossings, 1 components")
    assert lines[1] == "lambda=1"


def test_compute_porcelain_has_no_comments(tmp_path, capsys):
    path = write(tmp_path, "Xr 1 1 2 2\n")
    code, out, _ = run(capsys, "--porcelain", "compute", path)
    assert code == 0
    assert out == "lambda=a\n"


def test_compute_oriented_and_specialized(tmp_path, capsys):
    path = write(tmp_path, HOPF)
    code, out, _ = run(
        capsys, "--porcelain", "compute", path, "--oriented", "--specialize"
    )
    assert code == 0
    got = dict(line.split("=", 1) for line in out.splitlines())
    assert got["writhe"] == "2"
    assert got["lambda"] == "-a^-1*z^-1 + a^-1*z + 1 - a*z^-1 + a*z"
    assert got["f"] == "-a^-3*z^-1 + a^-3*z + a^-2 - a^-1*z^-1 + a^-1*z"
    assert got["f_specialized"] == "-a^-4 - 1"


def test_compute_specialize_without_orientation(tmp_path, capsys):
    path = write(tmp_path, "loops 2\n")
    code, out, _ = run(capsys, "--porcelain", "compute", path, "--specialize")
    assert code == 0
    got = dict(line.split("=", 1) for line in out.splitlines())
    assert got["lambda_specialized"] == "-2"


def test_compute_orientation_mask(tmp_path, capsys):
    path = write(tmp_path, HOPF)
    code, out, _ = run(
        capsys, "--porcelain", "compute", path, "--oriented",
        "--specialize", "--orientation", "10",
    )
    assert code == 0
    got = dict(line.split("=", 1) for line in out.splitlines())
    assert got["writhe"] == "-2"
    assert got["f_specialized"] == "-1 - a^4"


def test_bad_orientation_mask(tmp_path, capsys):
    path = write(tmp_path, HOPF)
    code, out, err = run(capsys, "compute", path, "--oriented", "--orientation", "1")
    assert code == 1
    assert "error:" in err


def test_gtau_and_lmt_verbs(tmp_path, capsys):
    path = write(tmp_path, HOPF)
    code, out, _ = run(capsys, "--porcelain", "gtau", path)
    assert code == 0 and out == "gtau=2*a^-2 + 2*a^2\n"
    code, out, _ = run(capsys, "--porcelain", "lmt", path)
    assert code == 0 and out == "lmt_rhs=-a^-4 - 1\n"


def test_missing_file(capsys):
    code, out, err = run(capsys, "compute", "/no/such/file.pd")
    assert code == 1
    assert err.startswith("error:")


def test_malformed_diagram(tmp_path, capsys):
    path = write(tmp_path, "Xr 1 2 3\n")
    code, out, err = run(capsys, "compute", path)
    assert code == 1
    assert "error:" in err


def test_verify_file(tmp_path, capsys):
    path = write(tmp_path, HOPF)
    code, out, _ = run(capsys, "verify", path)
    assert code == 0
    lines = out.splitlines()
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert lines[-1].startswith("# ") and "0 failures" in lines[-1]


def test_verify_corpus_porcelain(capsys):
    code, out, _ = run(capsys, "--porcelain", "verify", "--corpus")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "result=pass"
    assert all("=" in l for l in lines)
    assert any(l == "borromean.sublink-formula=pass" for l in lines)


def test_verify_random_is_deterministic(capsys):
    code1, out1, _ = run(
        capsys, "--porcelain", "verify", "--random", "5", "--seed", "7"
    )
    code2, out2, _ = run(
        capsys, "--porcelain", "verify", "--random", "5", "--seed", "7"
    )
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3, _ = run(
        capsys, "--porcelain", "verify", "--random", "5", "--seed", "8"
    )
    assert code3 == 0


def test_verify_without_target(capsys):
    code, out, err = run(capsys, "verify")
    assert code == 1
    assert "error:" in err


def test_corpus_list(capsys):
    code, out, _ = run(capsys, "--porcelain", "corpus", "list")
    assert code == 0
    assert out.splitlines() == [e.name for e in CORPUS]


def test_corpus_show_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, "corpus", "show", "trefoil_right")
    assert code == 0
    assert out == get("trefoil_right").pd_text
    path = write(tmp_path, out)
    code, out2, _ = run(capsys, "--porcelain", "compute", path)
    assert code == 0 and out2.startswith("lambda=")


def test_corpus_show_unknown_name(capsys):
    code, out, err = run(capsys, "corpus", "show", "nope")
    assert code == 1 and "nope" in err


def test_corpus_show_without_name(capsys):
    code, out, err = run(capsys, "corpus", "show")
    assert code == 1 and "name" in err
