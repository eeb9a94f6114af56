"""End-to-end command-line behavior: exit codes, JSON output, config and
seed precedence, and the dump formats."""

import json
import os
import subprocess

from rslab.cli import main, read_config


def run_cli(*argv, env=None):
    """Invoke the entry point in-process, capturing stdout/stderr."""
    import contextlib
    import io

    out, err = io.StringIO(), io.StringIO()
    if env is not None:
        old = {k: os.environ.get(k) for k in env}
        os.environ.update(env)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = main(list(argv))
            except SystemExit as exc:
                code = int(exc.code or 0)
    finally:
        if env is not None:
            for k, v in old.items():
                if v is None:
                    os.environ.pop(k, None)
                else:
                    os.environ[k] = v
    return code, out.getvalue(), err.getvalue()


def test_verify_single_suite_passes():
    code, out, err = run_cli("verify", "--suite", "cauchy", "--n-max", "60", "--p-max", "20")
    assert code == 0
    assert "PASS" in out
    assert "FAIL" not in out


def test_verify_json_records():
    code, out, _ = run_cli(
        "verify", "--suite", "gauss", "--json", "--n-max", "60", "--p-max", "20",
        "--seed", "5",
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines() if line.strip()]
    assert records
    for rec in records:
        assert rec["suite"] == "gauss"
        assert rec["ok"] is True
        assert rec["seed"] == 5
        assert "anchor" in rec and rec["anchor"]


def test_verify_fault_injection_exits_2():
    code, out, err = run_cli(
        "verify", "--suite", "doublesum", "--inject-fault", "doublesum-random",
        "--n-max", "60", "--p-max", "20",
    )
    assert code == 2
    assert "FAIL" in out
    assert "reproduce" in err


def test_verify_rejects_bad_suite():
    code, _, err = run_cli("verify", "--suite", "nope")
    assert code == 3


def test_verify_seed_precedence_cli_over_env(tmp_path):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text("seed=99\nn_max=60\np_max=20\n")
    # config file supplies 99 ...
    code, out, _ = run_cli(
        "verify", "--suite", "cauchy", "--json", "--config", str(cfgfile)
    )
    assert code == 0
    assert json.loads(out.splitlines()[0])["seed"] == 99
    # ... env var beats config ...
    code, out, _ = run_cli(
        "verify", "--suite", "cauchy", "--json", "--config", str(cfgfile),
        env={"RS_LAB_SEED": "123"},
    )
    assert json.loads(out.splitlines()[0])["seed"] == 123
    # ... and the explicit flag beats both
    code, out, _ = run_cli(
        "verify", "--suite", "cauchy", "--json", "--config", str(cfgfile),
        "--seed", "7", env={"RS_LAB_SEED": "123"},
    )
    assert json.loads(out.splitlines()[0])["seed"] == 7


def test_read_config_rejects_unknown_keys(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("volume=11\n")
    code, _, err = run_cli("verify", "--config", str(bad))
    assert code == 3


def test_config_comments_and_blanks(tmp_path):
    f = tmp_path / "c.cfg"
    f.write_text("# comment line\n\nseed=3\nmode=exact\n")
    cfg = read_config(str(f))
    assert cfg == {"seed": "3", "mode": "exact"}


def test_gauss_output_shape():
    code, out, _ = run_cli("gauss", "--q", "5")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines() if line.strip()]
    # phi(5) = 4 characters, each with phi(5) = 4 beta values
    assert len(records) == 16
    for rec in records:
        assert rec["q"] == 5
        assert set(rec) >= {"q", "chi_index", "beta", "value", "abs2"}
        if rec["chi_index"] == 0:
            # trivial character: Ramanujan sum, |c_5(r)|^2 = mu(5)^2 = 1
            assert abs(rec["abs2"] - 1) < 1e-9
        else:
            # primitive characters mod 5: |tau|^2 = 5
            assert abs(rec["abs2"] - 5) < 1e-9


def test_gauss_q12_has_vanishing_rows():
    """Imprimitive characters mod 12 produce genuinely zero sums."""
    code, out, _ = run_cli("gauss", "--q", "12")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines() if line.strip()]
    assert len(records) == 16
    assert any(rec["abs2"] < 1e-18 for rec in records)


def test_dump_coeffs_csv(tmp_path):
    target = tmp_path / "rows.csv"
    code, out, _ = run_cli("dump", "coeffs", "--N", "12", "--out", str(target))
    assert code == 0
    lines = target.read_text().strip().splitlines()
    assert lines[0] == "n,lambda,c,pair,residual"
    row2 = lines[2].split(",")
    assert row2[0] == "2"
    assert row2[2] == "18"
    row4 = lines[4].split(",")
    assert row4[2] == "197"
    assert all(line.rsplit(",", 1)[1] == "0" for line in lines[1:])


def test_dump_gauss_matches_gauss_command(tmp_path):
    target = tmp_path / "g.jsonl"
    code, _, _ = run_cli("dump", "gauss", "--q", "7", "--out", str(target))
    assert code == 0
    dumped = [json.loads(l) for l in target.read_text().splitlines() if l.strip()]
    code, out, _ = run_cli("gauss", "--q", "7")
    direct = [json.loads(l) for l in out.splitlines() if l.strip()]
    assert dumped == direct


def test_twist_command(tmp_path):
    rep = tmp_path / "pi.rep"
    lines = []
    from rslab.arith import primes_up_to

    for p in primes_up_to(50):
        lines.append(f"{p} 0 1 0.9 1.1 {1/(0.9*1.1):.17g}")
    rep.write_text("\n".join(lines) + "\n")
    code, out, _ = run_cli("twist", "--pi-file", str(rep), "--beta", "1/4", "--N", "20")
    assert code == 0
    records = [json.loads(l) for l in out.splitlines() if l.strip()]
    assert len(records) == 20
    assert all(len(rec["coeff"]) == 2 for rec in records)


def test_twist_requires_pi_file():
    code, _, err = run_cli("twist", "--beta", "1/4", "--N", "10")
    assert code == 3
    # the dump route reaches the same guard past argparse
    code, _, err = run_cli("dump", "twist", "--beta", "1/4", "--N", "10")
    assert code == 3


def test_reduce_command():
    code, out, _ = run_cli(
        "reduce", "--matrix", "1/5,0;3,5", "--ctx", "5,3,2"
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["gamma1"] == "5"
    assert rec["gamma2"] == "1/25"
    assert rec["in_support"] in (True, False)


def test_reduce_rejects_singular():
    code, _, err = run_cli("reduce", "--matrix", "1,1;1,1", "--ctx", "5,3,2")
    assert code == 3


def test_funceq_command():
    code, out, _ = run_cli(
        "funceq", "--q", "5", "--chi-index", "1", "--points", "0.5,0.5+1j"
    )
    assert code == 0
    records = [json.loads(l) for l in out.splitlines() if l.strip()]
    assert len(records) == 2
    assert all(rec["residual"] < 1e-8 for rec in records)


def test_funceq_rejects_imprimitive():
    # mod 4 has exactly one nontrivial character; index 0 is the trivial one
    code, _, err = run_cli("funceq", "--q", "4", "--chi-index", "0", "--points", "0.5")
    assert code == 3


def test_console_script_installed():
    """The rslab entry point responds to --help without error."""
    proc = subprocess.run(
        ["rslab", "--help"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "verify" in proc.stdout
