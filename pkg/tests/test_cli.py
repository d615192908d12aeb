import json

import pytest

from fullreal.cli import EXIT_FAIL, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, RecipeError, main, parse_group
from fullreal.engine import CASE_NAMES
from fullreal.groups import GroupTable, build_cyclic
from oracles import table_mul


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_group_info_cyclic(capsys):
    code, out, _ = run(capsys, "group", "cyclic:12", "--info")
    assert code == EXIT_OK
    assert "order 12" in out and "abelian yes" in out and "exponent 12" in out


def test_group_info_a4(capsys):
    code, out, _ = run(capsys, "group", "sdp:Y_C3", "--info")
    assert code == EXIT_OK
    assert "order 12" in out and "abelian no" in out and "center size 1" in out


def test_group_info_quaternion_json(capsys):
    code, out, _ = run(capsys, "group", "quaternion:8", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["schema"] == 1
    assert doc["order_histogram"]["2"] == 1


def test_group_roundtrip_through_file(capsys, tmp_path):
    path = tmp_path / "g.txt"
    assert run(capsys, "group", "product(dihedral:8,cyclic:3)", "--out", str(path))[0] == EXIT_OK
    G = GroupTable.load(path)
    assert G.mul == parse_group("product(dihedral:8,cyclic:3)").group.mul
    code, out, _ = run(capsys, "group", f"file:{path}", "--info")
    assert code == EXIT_OK and "order 24" in out


def test_recipe_errors_carry_position():
    with pytest.raises(RecipeError) as exc:
        parse_group("product(cyclic:2,,cyclic:3)")
    assert exc.value.pos == 17
    assert "position 17" in str(exc.value)
    with pytest.raises(RecipeError):
        parse_group("cyclic:")
    with pytest.raises(RecipeError):
        parse_group("sdp:NOPE")


def test_bad_recipe_exit_code(capsys):
    code, _, err = run(capsys, "group", "cyclc:3")
    assert code == EXIT_USAGE and "position" in err
    code, _, err = run(capsys, "group", "dihedral:7")
    assert code == EXIT_USAGE


def test_check_v4(capsys):
    code, out, _ = run(capsys, "check", "product(cyclic:2,cyclic:2)", "builtin:V4")
    assert code == EXIT_OK and "verdict FULLY_REALIZES" in out


def test_check_q8_prints_witness(capsys):
    code, out, _ = run(capsys, "check", "quaternion:8", "1+x+y+xy")
    assert code == EXIT_FAIL
    assert "verdict REALIZES_NOT_INVARIANT" in out and "violation" in out


def brute_units(G):
    one = 1
    return [a for a in range(1 << G.order) if any(table_mul(G.mul, a, b) == one for b in range(1 << G.order))]


def test_check_zero_ideal_on_c3(capsys):
    assert len(brute_units(build_cyclic(3))) == 3
    code, out, _ = run(capsys, "check", "cyclic:3", "zero", "--json")
    doc = json.loads(out)
    assert doc["unit_count"] == 3 and doc["units_are_group"]
    assert code == (EXIT_OK if doc["verdict"] == "FULLY_REALIZES" else EXIT_FAIL)


def test_check_resource_limit(capsys):
    code, _, err = run(capsys, "check", "sdp:YQ_C6", "zero")
    assert code == EXIT_RESOURCE and "resource limit" in err


def test_check_bad_ideal(capsys):
    assert run(capsys, "check", "cyclic:3", "1+q")[0] == EXIT_USAGE
    assert run(capsys, "check", "cyclic:3", "builtin:SDP_C3")[0] == EXIT_USAGE


def test_check_ideal_file_and_verify(capsys, tmp_path):
    ideal = tmp_path / "ideal.txt"
    ideal.write_text("# V4 ideal\n1+x+x'+xx'\n")
    code, out, _ = run(capsys, "check", "product(cyclic:2,cyclic:2)", f"file:{ideal}")
    assert code == EXIT_OK and "verdict FULLY_REALIZES" in out
    cert = tmp_path / "cert.json"
    code, _, _ = run(capsys, "check", "sdp:Y_C3", "builtin:SDP_C3", "--out", str(cert))
    assert code == EXIT_OK
    assert run(capsys, "verify", str(cert))[1].strip().endswith("verified")
    doc = json.loads(cert.read_text())
    doc["unit_count"] += 1
    cert.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == EXIT_FAIL and "problem" in out


def test_refute_quaternion(capsys, tmp_path):
    out_path = tmp_path / "r.json"
    code, out, _ = run(capsys, "refute", "quaternion:8", "--depth", "1", "--out", str(out_path))
    assert code == EXIT_OK and "8 branches" in out
    code, out, _ = run(capsys, "verify", str(out_path))
    assert code == EXIT_OK and "verified" in out


def test_refute_dihedral_and_cyclic(capsys):
    assert run(capsys, "refute", "dihedral:8", "--depth", "2")[0] == EXIT_OK
    code, out, _ = run(capsys, "refute", "cyclic:3", "--depth", "3")
    assert code == EXIT_FAIL and "inconclusive" in out


def test_refute_seed_flag_is_reproducible(capsys):
    a = run(capsys, "refute", "quaternion:8", "--seed", "7", "--json")
    b = run(capsys, "refute", "quaternion:8", "--seed", "7", "--json")
    assert a == b and json.loads(a[1])["proof"]


def test_repro_single_and_unknown(capsys):
    code, out, _ = run(capsys, "repro", "A4")
    assert code == EXIT_OK and out.startswith("PASS") and "1/1 PASS" in out
    code, _, err = run(capsys, "repro", "NOPE")
    assert code == EXIT_USAGE
    assert all(name in err for name in CASE_NAMES)


def test_repro_all(capsys):
    code, out, _ = run(capsys, "repro", "--all")
    assert code == EXIT_OK and f"{len(CASE_NAMES)}/{len(CASE_NAMES)} PASS" in out
