"""
test_cli
========

End-to-end tests of the command-line front end: exit codes, the JSON
document layout, golden outputs, certificate verification (in-process and
in a separate interpreter) and configuration overrides.
"""

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from src.cli import parse_int_list, parse_rows, run
from src.config import PROJECT_ROOT, THREADS_ENV_VAR
from src.errors import MalformedInputError

GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(autouse=True)
def _no_thread_override(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)


def _invoke(argv, stdin=None):
    out = io.StringIO()
    code = run(argv, stdout=out, stdin=stdin)
    return code, json.loads(out.getvalue()), out.getvalue()


def _golden(name):
    return json.loads((GOLDEN / name).read_text())


def test_flat_argument_parsers() -> None:
    assert parse_int_list("2, 3,-5") == [2, 3, -5]
    assert parse_rows("1,2;3,1") == [[1, 2], [3, 1]]
    with pytest.raises(MalformedInputError):
        parse_int_list("2,x")
    with pytest.raises(MalformedInputError):
        parse_rows(";")


def test_surjectivity_command() -> None:
    code, doc, _ = _invoke(["surjectivity", "--group", "sl", "--k", "1", "--ideals", "2,3",
                            "--level", "5", "--weights", "1,1;1,1"])
    assert code == 0
    assert doc["result"]["targets"] == 12
    assert doc["result"]["lifted"] == 12
    assert doc["request"]["command"] == "surjectivity"
    assert doc["request"]["guards"]["pf_tuples"] == 500000


def test_output_is_byte_identical_across_runs() -> None:
    argv = ["surjectivity", "--group", "sp", "--ideals", "5,7", "--level", "2",
            "--weights", "1,1;1,1", "--samples", "5", "--seed", "3", "--certificates"]
    first = _invoke(argv)[2]
    second = _invoke(argv)[2]
    assert first == second


def test_pf_enum_matches_golden() -> None:
    code, doc, _ = _invoke(["pf-enum", "--k", "1", "--ideal", "3", "--weights", "1,1"])
    assert code == 0
    assert doc["result"] == _golden("pf_enum_k1_mod3.json")


def test_pf_enum_count_only_and_pf_canon() -> None:
    code, doc, _ = _invoke(["pf-enum", "--k", "1", "--ideal", "5", "--weights", "1,2", "--count-only"])
    assert code == 0
    assert doc["result"] == {"count": 7}

    code, doc, _ = _invoke(["pf-canon", "--ideal", "3", "--rep", "2,2"])
    assert code == 0
    assert doc["result"]["canonical"]["rep"] == ["1", "1"]


def test_usc_witness_matches_golden() -> None:
    code, doc, _ = _invoke(["usc-witness", "--set", "2,3", "--ideal", "4"])
    assert code == 0
    assert doc["result"] == _golden("usc_witness_2_3_mod4.json")


def test_usc_zero_ideal_refutation_fails_the_verdict() -> None:
    code, doc, _ = _invoke(["usc-witness", "--set", "5,7"])
    assert code == 1
    assert doc["result"] == _golden("usc_refute_5_7.json")

    code, doc, _ = _invoke(["usc-witness", "--set", "3,2"])
    assert code == 0
    assert doc["result"]["usc_holds"]


def test_usc_polynomial_example() -> None:
    code, doc, _ = _invoke(["usc-witness", "--poly-example", "2"])
    assert code == 1
    assert doc["result"]["refutation"]["candidates"] == 125
    assert "stats" not in doc["result"]["refutation"]


def test_usc_check_command() -> None:
    code, doc, _ = _invoke(["usc-check", "--moduli", "2,3", "--ideal", "0,0", "--max-set-size", "2"])
    assert code == 0
    assert doc["result"]["verdict"]
    code, doc, _ = _invoke(["usc-check", "--moduli", "2,3", "--ideal", "0"])
    assert code == 2
    assert doc["error"]["code"] == "malformed_input"


def test_timings_flag_keeps_statistics() -> None:
    argv = ["sap-check", "--group", "sl", "--modulus", "2"]
    _, bare, _ = _invoke(argv)
    _, timed, _ = _invoke(["--timings", *argv])
    assert "stats" not in bare["result"]
    assert set(timed["result"]["stats"]) == {"elapsed_s", "throughput", "memory_mb"}


def test_sap_and_ge_commands() -> None:
    code, doc, _ = _invoke(["sap-check", "--group", "sp", "--k", "1", "--modulus", "3"])
    assert code == 0
    assert doc["result"]["coverage"] == "24/24"

    code, doc, _ = _invoke(["sap-check", "--modulus", "6", "--converse"])
    assert code == 0

    code, doc, _ = _invoke(["ge-check", "--modulus", "6"])
    assert code == 0
    assert doc["result"]["closure_size"] == doc["result"]["group_order"] == 144


def test_ge_decompose_command() -> None:
    code, doc, _ = _invoke(["ge-decompose", "--matrix", "0,-1;1,0"])
    assert code == 0
    assert doc["result"]["reproduces"]
    assert doc["result"]["length"] == len(doc["result"]["word"]["factors"])

    code, doc, _ = _invoke(["ge-decompose", "--modulus", "5", "--matrix", "2,1;1,4", "--gl"])
    assert code == 0
    assert doc["result"]["determinant"] == "2"

    code, doc, _ = _invoke(["ge-decompose", "--matrix", "2,0;0,1"])
    assert code == 2
    assert doc["error"]["code"] == "contract_violation"


def test_lemma41_command() -> None:
    code, doc, _ = _invoke(["lemma41-check", "--ideals", "2,3", "--samples", "4", "--seed", "0"])
    assert code == 0
    assert doc["result"]["orders"] == {"first": 6, "second": 24, "product": 144}

    code, doc, _ = _invoke(["lemma41-check", "--ideals", "2,3"])
    assert code == 2
    assert doc["error"]["code"] == "malformed_input"


def test_lift_then_verify_round_trip(tmp_path) -> None:
    code, doc, text = _invoke(["lift-sl", "--rows", "1,2;3,1", "--ideals", "2,3", "--level", "5"])
    assert code == 0
    assert doc["result"]["valid"]
    path = tmp_path / "lift.json"
    path.write_text(text)

    code, verdict, _ = _invoke(["verify", "--certificate", str(path)])
    assert code == 0
    assert verdict["result"] == {"valid": True, "group": {"kind": "sl", "k": 1}}

    # a bare certificate on stdin
    bare = json.dumps(doc["result"]["certificate"])
    code, verdict, _ = _invoke(["verify", "--certificate", "-"], stdin=io.StringIO(bare))
    assert code == 0


def test_verify_rejects_tampered_certificates(tmp_path) -> None:
    _, doc, _ = _invoke(["lift-sp", "--rows", "1,2;3,1", "--ideals", "5,7", "--level", "2"])
    certificate = doc["result"]["certificate"]
    certificate["B"]["rows"][0][0] = str(int(certificate["B"]["rows"][0][0]) + 1)
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(certificate))
    code, verdict, _ = _invoke(["verify", "--certificate", str(path)])
    assert code == 1
    assert not verdict["result"]["valid"]


def test_verify_reports_malformed_documents(tmp_path) -> None:
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, doc, _ = _invoke(["verify", "--certificate", str(path)])
    assert code == 2
    assert doc["error"]["code"] == "malformed_input"

    code, doc, _ = _invoke(["verify", "--certificate", "-"], stdin=io.StringIO('{"B": 3}'))
    assert code == 2
    assert doc["error"]["code"] == "malformed_input"


def test_verify_in_a_separate_process(tmp_path) -> None:
    _, _, text = _invoke(["lift-sl", "--rows", "1,2,3;4,5,6;0,1,7", "--ideals", "5,1,7", "--level", "3"])
    path = tmp_path / "lift.json"
    path.write_text(text)
    completed = subprocess.run(
        [sys.executable, "-m", "src.cli", "verify", "--certificate", str(path)],
        cwd=PROJECT_ROOT,
        capture_output=True,
        text=True,
    )
    assert completed.returncode == 0
    assert json.loads(completed.stdout)["result"]["valid"]


def test_contract_violation_names_the_pair() -> None:
    code, doc, _ = _invoke(["lift-sl", "--rows", "1,2;3,1", "--ideals", "2,4", "--level", "5"])
    assert code == 2
    assert doc["error"]["code"] == "contract_violation"
    assert doc["error"]["pair"] == [0, 1]


def test_bad_flags_exit_with_malformed_input() -> None:
    code, doc, _ = _invoke(["pf-enum", "--k", "one", "--ideal", "3"])
    assert code == 2
    assert doc["error"]["code"] == "malformed_input"
    code, doc, _ = _invoke(["no-such-command"])
    assert code == 2


def test_sampling_without_seed_is_a_contract_violation() -> None:
    code, doc, _ = _invoke(["surjectivity", "--ideals", "2,3", "--level", "5",
                            "--weights", "1,1;1,1", "--samples", "3"])
    assert code == 2
    assert doc["error"]["code"] == "contract_violation"


def test_config_file_lowers_a_guard(tmp_path) -> None:
    config = tmp_path / "tight.yaml"
    config.write_text("guards:\n  group_candidates: 10\n")
    code, doc, _ = _invoke(["--config", str(config), "sap-check", "--modulus", "3"])
    assert code == 2
    assert doc["error"]["code"] == "guard_exceeded"
    assert doc["request"]["guards"]["group_candidates"] == 10


def test_thread_count_from_environment(monkeypatch) -> None:
    monkeypatch.setenv(THREADS_ENV_VAR, "2")
    code, doc, _ = _invoke(["pf-enum", "--k", "1", "--ideal", "2", "--count-only"])
    assert code == 0
    assert doc["request"]["n_jobs"] == 2

    monkeypatch.setenv(THREADS_ENV_VAR, "many")
    code, doc, _ = _invoke(["pf-enum", "--k", "1", "--ideal", "2"])
    assert code == 2
    assert doc["error"]["code"] == "malformed_input"
