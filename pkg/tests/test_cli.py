import json

import pytest

from htdet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_seq_bfile(capsys):
    code, out, _ = run(capsys, "seq", "Catalan", "--max-n", "4")
    assert code == 0
    assert out == "0 1\n1 1\n2 2\n3 5\n4 14\n"


def test_seq_json_and_csv(capsys):
    code, out, _ = run(capsys, "seq", "t", "--max-n", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["values"] == ["0", "1", "0", "1", "2", "6"]
    code, out, _ = run(capsys, "seq", "U", "--max-n", "3", "--format", "csv")
    assert out.splitlines() == ["n,value", "1,1", "2,1", "3,2"]


def test_det(capsys):
    code, out, _ = run(capsys, "det", "--plus", "--sequence", "LargeSchroeder", "--max-n", "4")
    assert code == 0
    assert out.split("\n")[:4] == ["1 2", "2 -2", "3 6", "4 -22"]


def test_trudi_modes(capsys):
    for mode in ("partitions", "compositions"):
        code, out, _ = run(capsys, "trudi", "--a0", "-1", "--sequence", "s", "--offset", "0", "--n", "3", "--mode", mode)
        assert (code, out.strip()) == (0, "6")


def test_trudi_cap_is_usage_error(capsys):
    code, _, err = run(capsys, "trudi", "--a0", "1", "--sequence", "t", "--n", "8", "--mode", "compositions", "--cap", "5")
    assert code == 2
    assert "error" in err


def test_series(capsys):
    code, out, _ = run(capsys, "series", "Catalan", "--order", "4")
    assert out.strip() == "1 + 1*x + 2*x^2 + 5*x^3 + O(x^4)"
    code, out, _ = run(capsys, "series", "Fine", "--order", "3", "--json")
    assert json.loads(out) == ["0", "1", "0"]


def test_paths(capsys):
    code, out, err = run(capsys, "paths", "signed-sum", "--family", "Ttuple", "--n", "3", "--dump")
    assert (code, out.strip()) == (0, "2")
    assert err.strip()
    code, out, _ = run(capsys, "paths", "count", "--family", "Q", "--n", "3")
    assert out.strip() == "11"


def test_paths_cap(capsys):
    code, _, _ = run(capsys, "paths", "count", "--family", "A", "--n", "11")
    assert code == 2


def test_verify_pass_and_json(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "--identity", "thm1.e1", "--identity", "hankel.fine2",
                       "--max-n", "6", "--json", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert [d["identity"] for d in doc] == ["thm1.e1", "hankel.fine2"]
    assert all(d["pass"] for d in doc)
    assert "2/2 identities pass" in err


def test_verify_json_stdout_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--identity", "thm3.e22", "--max-n", "5", "--json", "-")
    _, b, _ = run(capsys, "verify", "--identity", "thm3.e22", "--max-n", "5", "--json", "-")
    assert a == b


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--identity", "nope")[0] == 2
    assert run(capsys, "verify", "--routes", "recurrence,warp")[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["seq", "Motzkin"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_oeis_check(capsys):
    code, out, err = run(capsys, "oeis", "check", "A134425", "--json")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_failure_exit_1(capsys, monkeypatch):
    import dataclasses

    from htdet import verify

    spec = verify.get_identity("thm1.e1")
    bad = dataclasses.replace(spec, rhs=dataclasses.replace(spec.rhs, shift=spec.rhs.shift + 1))
    monkeypatch.setattr(verify, "REGISTRY", (bad,))
    monkeypatch.setattr(verify, "_BY_ID", {bad.id: bad})
    code, _, err = run(capsys, "verify", "--max-n", "5")
    assert code == 1
    assert "FAIL thm1.e1" in err
