import json

import pytest

from tstrata import cli, systems


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------
# hj subcommands
# ----------------------------------------------------------------------

def test_expand(capsys):
    code, out, _ = run_cli(capsys, "hj", "expand", "4", "1")
    assert code == 0
    assert out.strip() == "[4]  T delta=1 m=2 a=1  2-Gorenstein"


def test_eval(capsys):
    code, out, _ = run_cli(capsys, "hj", "eval", "2", "5")
    assert (code, out.strip()) == (0, "9/5")


def test_discrepancies(capsys):
    code, out, _ = run_cli(capsys, "hj", "discrepancies", "3", "2", "3")
    assert (code, out.strip()) == (0, "-1/2 -1/2 -1/2")


def test_classify_chain_and_fraction(capsys):
    code, out, _ = run_cli(capsys, "hj", "classify", "3", "2")
    assert code == 0 and out.strip() == "[3,2]  NotT"
    code, out, _ = run_cli(capsys, "hj", "classify", "9/5")
    assert code == 0 and "T delta=1 m=3 a=2" in out


def test_grow_and_enum(capsys):
    code, out, _ = run_cli(capsys, "hj", "grow", "--side", "right", "4")
    assert code == 0 and out.strip() == "[5,2]"
    code, out, _ = run_cli(capsys, "hj", "enum", "--max-len", "2",
                           "--two-gorenstein")
    assert code == 0
    assert [line.split()[0] for line in out.strip().splitlines()] == ["[4]", "[3,3]"]


# ----------------------------------------------------------------------
# exit codes
# ----------------------------------------------------------------------

def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "hj", "expand", "4", "2")
    assert code == 1
    assert "coprime" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["hj", "expand", "four", "1"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_table_precondition_exit_code(capsys):
    code, _, err = run_cli(capsys, "tables", "T1", "--n", "10")
    assert code == 1
    assert "n >= 14" in err


# ----------------------------------------------------------------------
# tables
# ----------------------------------------------------------------------

def test_t1_text_spot_value(capsys):
    code, out, _ = run_cli(capsys, "tables", "T1", "--n", "20", "--d", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].split()[:5] == ["20", "7", "D'", "ge3dm1", "152"]
    assert lines[2].split()[:5] == ["20", "7", "D''", "ge3dm1", "151"]


def test_t2_spot_value(capsys):
    code, out, _ = run_cli(capsys, "tables", "T2", "--n", "20", "--d", "7")
    assert code == 0
    assert out.strip().splitlines()[1].split()[:5] == ["20", "7", "ge3dm1", "161", "161"]


def test_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "tables", "T1", "--n", "14:22",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["table"] == "T1"
    assert payload["rows"] == cli._t1_rows(14, 22, None)
    code, out, _ = run_cli(capsys, "tables", "topology", "--n", "13",
                           "--kind", "first", "--format", "json")
    payload = json.loads(out)
    assert payload["rows"] == cli._topology_rows(13, 13, ["first"])


def test_json_round_trip_every_table(capsys):
    builders = {
        "T1": lambda: cli._t1_rows(14, 17, None),
        "T2": lambda: cli._t2_rows(14, 17, None),
        "T3": lambda: cli._t3_rows(14, 17, None),
        "strata": lambda: cli._strata_rows(14, 17, None),
        "hj": lambda: cli._hj_rows(14, 17, False),
        "topology": lambda: cli._topology_rows(14, 17,
                                               [cli.moduli.FIRST, cli.moduli.SECOND]),
        "chains": lambda: cli._chains_rows(4, False, False),
    }
    for table, build in builders.items():
        args = ["tables", table, "--n", "14:17", "--format", "json"]
        if table == "chains":
            args += ["--max-len", "4"]
        code, out, _ = run_cli(capsys, *args)
        assert code == 0
        assert json.loads(out)["rows"] == build()


def test_eval_flag_strips_formula_columns(capsys):
    code, out, _ = run_cli(capsys, "tables", "T1", "--n", "20", "--d", "9",
                           "--eval", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows and all("formula" not in row for row in rows)
    assert rows[0]["value"] == 153


def test_csv_output(capsys):
    code, out, _ = run_cli(capsys, "tables", "strata", "--n", "16",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,d,eta,value,")
    assert lines[1].split(",")[:4] == ["16", "1", "0", "131"]


def test_empty_cells_render(capsys):
    _, out_default, _ = run_cli(capsys, "tables", "T1", "--n", "17", "--d", "10")
    assert "∅" in out_default
    _, out_minus, _ = run_cli(capsys, "tables", "T1", "--n", "17", "--d", "10",
                              "--print-empty-as", "-1")
    assert "∅" not in out_minus and "-1" in out_minus
    # undefined linear-system cells stay "x" whatever the stratum option says
    _, out_t2, _ = run_cli(capsys, "tables", "T2", "--n", "17", "--d", "10",
                           "--print-empty-as", "-1")
    assert "x" in out_t2 and "-1" not in out_t2.splitlines()[1]


def test_empty_range_note(capsys):
    code, out, _ = run_cli(capsys, "tables", "T1", "--n", "14", "--d", "2")
    assert code == 0
    assert "no admissible rows" in out


def test_du_val_view_flag(capsys):
    _, out_plain, _ = run_cli(capsys, "tables", "hj", "--n", "3")
    assert "DuVal" in out_plain
    _, out_flag, _ = run_cli(capsys, "tables", "hj", "--n", "3",
                             "--du-val-counts-as-t")
    line = [l for l in out_flag.splitlines() if l.startswith("3")][0]
    assert "DuVal" not in out_flag
    assert line.split()[3:7] == ["T", "3", "1", "1"]  # delta=n, m=1, a=1


def test_chains_table_dedupe(capsys):
    _, out_full, _ = run_cli(capsys, "tables", "chains", "--max-len", "3")
    _, out_dedup, _ = run_cli(capsys, "tables", "chains", "--max-len", "3",
                              "--dedupe-chains")
    assert len(out_full.splitlines()) > len(out_dedup.splitlines())
    assert "[2,5]" in out_full and "[5,2]" in out_full
    assert ("[2,5]" in out_dedup) != ("[5,2]" in out_dedup)


def test_output_determinism(capsys):
    _, first, _ = run_cli(capsys, "tables", "T3", "--n", "14:30", "--format", "csv")
    _, second, _ = run_cli(capsys, "tables", "T3", "--n", "14:30", "--format", "csv")
    assert first == second


def test_bad_range(capsys):
    code, _, err = run_cli(capsys, "tables", "T1", "--n", "20:14")
    assert code == 1 and "range" in err


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def test_verify_scope_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "moduli", "--n-max", "20")
    assert code == 0
    assert "verification PASSED" in out
    assert "SKIPPED" in out  # out-of-scope checks are listed, not hidden
    assert "table1-two-path" in out


def test_verify_json_structure(capsys):
    code, out, _ = run_cli(capsys, "verify", "tangent", "--n-max", "16",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    names = {c["name"] for c in payload["checks"]}
    assert "tangent-assembly" in names and "hj-round-trip" in names
    statuses = {c["name"]: c["status"] for c in payload["checks"]}
    assert statuses["hj-round-trip"] == "skipped"


def test_verify_bad_n_max(capsys):
    code, _, err = run_cli(capsys, "verify", "--n-max", "5")
    assert code == 1 and "n_max" in err


def test_verify_fault_injection_exit_and_cell(capsys, monkeypatch):
    broken = dict(systems.TABLE2)
    broken["ge3dm1"] = (
        (lambda n, d: 7 * n + 20, "7n+20"),  # wrong closed form
        systems.TABLE2["ge3dm1"][1],
    )
    monkeypatch.setattr(systems, "TABLE2", broken)
    code, out, _ = run_cli(capsys, "verify", "systems", "--n-max", "15")
    assert code == 1
    assert "FAIL" in out and "first failing cell" in out
    assert "'n': 14" in out or '"n": 14' in out
