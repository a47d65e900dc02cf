import json
from pathlib import Path

import pytest

from plusalg.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_OK, JobSpec, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *args):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def rows(out):
    return [line.split("\t") for line in out.splitlines() if line and not line.startswith("#")]


def test_homology_tsv_and_reduced(capsys):
    code, out, _ = run(capsys, "homology", "--theory", "ce", "--algebra", DATA / "sl2_Q.alg", "--max-degree", 3)
    assert code == EXIT_OK
    assert rows(out)[1:] == [["0", "1"], ["1", "0"], ["2", "0"], ["3", "1"]]
    code, out, _ = run(capsys, "homology", "--theory", "ce", "--algebra", DATA / "sl2_Q.alg", "--max-degree", 3, "--reduced")
    assert [r[1] for r in rows(out)[1:]] == ["0", "0", "0", "1"]


def test_homology_json(capsys):
    code, out, _ = run(
        capsys, "homology", "--theory", "hochschild", "--algebra", DATA / "dual_numbers.alg", "--max-degree", 2, "--format", "json"
    )
    data = json.loads(out)
    assert [r["dimension"] for r in data["rows"]] == [2, 1, 1]


def test_output_is_deterministic(capsys):
    args = ["homology", "--theory", "cyclic", "--algebra", DATA / "trunc_t3.alg", "--max-degree", 3]
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_output_file(capsys, tmp_path):
    target = tmp_path / "r.tsv"
    code, out, _ = run(capsys, "plus", "pi0", "--algebra", DATA / "gl2_Q.alg", "--output", target)
    assert code == EXIT_OK and target.read_text() == out


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "corollary", "--ring", DATA / "dual_numbers.alg", "--n", 4, "--degree", 1],
        ["verify", "corollary", "--ring", DATA / "Q.alg", "--n", 3, "--degree", 0],
        ["verify", "morita", "--ring", DATA / "Q.alg"],
        ["verify", "products", "--ring", DATA / "dual_numbers.alg", "--ring2", DATA / "Q.alg"],
        ["utree", "check", "--family", "as", "--r-max", 1],
        ["utree", "cone", "--tree", DATA / "lie_minimal.tree", "--r-max", 1],
        ["operad", "check", "--operad", "lie"],
        ["hurewicz", "--presentation", DATA / "lie_x3.pres", "--max-degree", 7],
    ],
    ids=lambda a: " ".join(map(str, a[:2])) if isinstance(a, list) else "",
)
def test_checks_pass(capsys, args):
    code, out, _ = run(capsys, *args)
    assert code == EXIT_OK, out
    assert "FAIL" not in out


def test_sweep_and_budget(capsys):
    code, out, _ = run(capsys, "sweep", "--ring", DATA / "dual_numbers.alg", "--n-range", "2..3")
    assert code == EXIT_OK and "last_two_agree=True" in out
    code, out, _ = run(capsys, "sweep", "--ring", DATA / "trunc_t3.alg", "--n-range", "2..4", "--budget", 300)
    assert code == EXIT_BUDGET and "TRUNCATED" in out


def test_operad_dims_and_probe(capsys):
    code, out, _ = run(capsys, "operad", "free", "--rep", "trivial", "--arity-max", 4)
    assert [r[1] for r in rows(out)[1:]] == ["1", "1", "3", "15"]
    code, out, _ = run(capsys, "operad", "probe", "--operad", "com", "--scalars", "Fp:2")
    assert "verdict: obstruction" in out


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "homology", "--theory", "ce", "--algebra", tmp_path / "none.alg", "--max-degree", 2)
    assert code == EXIT_INPUT and "cannot read" in err
    bad = tmp_path / "bad.alg"
    bad.write_text("format = 1\nkind = lie\ndim = 2\nbasis = a b\nproducts:\n  a b zz 1\n")
    code, _, err = run(capsys, "homology", "--theory", "ce", "--algebra", bad, "--max-degree", 2)
    assert code == EXIT_INPUT and "bad.alg:6" in err
    code, _, err = run(capsys, "homology", "--theory", "hochschild", "--algebra", DATA / "sl2_Q.alg", "--max-degree", 2)
    assert code == EXIT_INPUT and "associative" in err
    code, _, _ = run(capsys, "verify", "products", "--ring", DATA / "Q.alg")
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, "sweep", "--ring", DATA / "Q.alg", "--n-range", "5..2")
    assert code == EXIT_INPUT


def test_failing_identity_exits_one(capsys, monkeypatch):
    import plusalg.cli as cli

    real = cli.homology_dim
    monkeypatch.setattr(cli, "homology_dim", lambda th, a, k, b=None: real(th, a, k) + (th == "cyclic"))
    code, out, _ = run(capsys, "verify", "corollary", "--ring", DATA / "Q.alg", "--n", 2, "--degree", 0)
    assert code == EXIT_FAIL and "FAIL" in out


def test_job_spec_validation():
    with pytest.raises(ValueError):
        JobSpec("homology", budget=0).validate()
    with pytest.raises(ValueError):
        JobSpec("homology", fmt="xml").validate()
