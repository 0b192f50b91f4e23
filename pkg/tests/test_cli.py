import json

import pytest

from edwards_isogeny.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestClassify:
    def test_worked_curve(self, capsys):
        code, doc = run_json(capsys, "classify", "--p", "23", "--a", "1", "--d", "-1")
        assert code == 0
        assert doc["status"] == "ok"
        assert doc["class"] == "complete"
        assert set(doc["counters"]) == {"M", "S", "I", "A"}

    def test_hex_modulus(self, capsys):
        code, doc = run_json(capsys, "classify", "--p", "0x17", "--d", "2")
        assert code == 0
        assert doc["class"] == "quadratic"


class TestJ:
    def test_worked_value(self, capsys):
        code, doc = run_json(capsys, "j", "--p", "23", "--d", "-1")
        assert code == 0
        assert doc["j"] == 3


class TestPoints:
    def test_order_24(self, capsys):
        code, doc = run_json(capsys, "points", "--p", "23", "--d", "-1")
        assert code == 0
        assert doc["order"] == 24
        assert doc["affine_count"] == 24
        assert [3, 6] in doc["points"]
        assert [-10, 9] in doc["points"]


class TestOrder:
    def test_order_8(self, capsys):
        code, doc = run_json(capsys, "order", "--p", "23", "--d", "-1",
                             "--point", "2,2")
        assert code == 0
        assert doc["order"] == 8


class TestIsogeny:
    def test_worked_example(self, capsys):
        code, doc = run_json(capsys, "isogeny", "--p", "23", "--d", "-1",
                             "--degree", "3", "--gen", "-10,9",
                             "--point", "2,2")
        assert code == 0
        assert doc["image"] == [7, 7]
        assert doc["d_prime"] == -2
        assert doc["A"] == -10
        assert doc["codomain_class"] == "complete"

    def test_additive_mode_agrees(self, capsys):
        _, a = run_json(capsys, "isogeny", "--p", "19", "--d", "-1",
                        "--degree", "5", "--gen", "6,4", "--point", "2,8")
        _, b = run_json(capsys, "isogeny", "--p", "19", "--d", "-1",
                        "--degree", "5", "--gen", "6,4", "--point", "2,8",
                        "--mode", "additive")
        assert a["image"] == b["image"] == [0, 1]

    def test_bad_generator_is_domain_error(self, capsys):
        code, doc = run_json(capsys, "isogeny", "--p", "23", "--d", "-1",
                             "--degree", "3", "--gen", "2,2")
        assert code == 1
        assert doc["status"] == "error"
        assert doc["code"] == "BadKernelGenerator"


class TestChain:
    def test_two_step(self, capsys):
        code, doc = run_json(capsys, "chain", "--p", "59", "--d", "-1",
                             "--gen", "7,5", "--degrees", "3,5",
                             "--point", "9,25")
        assert code == 0
        assert [s["degree"] for s in doc["steps"]] == [3, 5]
        assert "j" in doc and "image" in doc


class TestSearchPrimes:
    def test_smallest(self, capsys):
        code, out = run(capsys, "search-primes", "--bits", "6",
                        "--tolerance", "0")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        rows, summary = lines[:-1], lines[-1]
        assert {"m": 1, "n": 1, "p_hex": "3b", "bits": 6,
                "sidh_key_bits": 36, "quantum_security_bits": 1} in rows
        assert summary["status"] == "ok"
        assert summary["target_key_bits"] == 36

    def test_key_sizing_for_128_bit_level(self, capsys):
        """The sizing identity: a 768-bit modulus means 4608-bit keys."""
        code, out = run(capsys, "search-primes", "--bits", "768",
                        "--tolerance", "0", "--window", "0", "--limit", "0")
        summary = json.loads(out.splitlines()[-1])
        assert summary["target_key_bits"] == 4608


class TestVerifyTable:
    def test_report(self, capsys):
        code, doc = run_json(capsys, "verify-table1", "--rounds", "4")
        assert code == 0
        assert doc["all_bits_match"] is True
        assert doc["all_prime"] is True
        assert doc["all_hex_match"] is False
        assert [r["hex_match"] for r in doc["rows"]] == [True, False, True]


class TestSidhDemo:
    def test_agreement(self, capsys):
        code, doc = run_json(capsys, "sidh-demo", "--m", "1", "--n", "1",
                             "--seed", "42")
        assert code == 0
        assert doc["agree"] is True
        assert doc["shared_j_a"] == doc["shared_j_b"]

    def test_seed_determinism(self, capsys):
        _, a = run_json(capsys, "sidh-demo", "--m", "2", "--n", "1",
                        "--seed", "9")
        _, b = run_json(capsys, "sidh-demo", "--m", "2", "--n", "1",
                        "--seed", "9")
        assert a == b


class TestOpcountBench:
    def test_proj3(self, capsys):
        code, doc = run_json(capsys, "opcount-bench", "--op", "proj3")
        assert code == 0
        assert (doc["M"], doc["S"]) == (6, 5)
        assert doc["breakdown"]["codomain"]["M"] == 2
        assert doc["breakdown"]["codomain"]["S"] == 3
        assert doc["breakdown"]["eval"]["M"] == 4
        assert doc["breakdown"]["eval"]["S"] == 2

    def test_proj5(self, capsys):
        code, doc = run_json(capsys, "opcount-bench", "--op", "proj5")
        assert code == 0
        assert (doc["M"], doc["S"]) == (21, 12)
        assert doc["breakdown"]["eval"]["M"] == 19
        assert doc["breakdown"]["eval"]["S"] == 6
        assert doc["breakdown"]["codomain"]["M"] == 2
        assert doc["breakdown"]["codomain"]["S"] == 6


class TestErrors:
    def test_composite_modulus(self, capsys):
        code, doc = run_json(capsys, "classify", "--p", "21", "--d", "2")
        assert code == 1
        assert doc["status"] == "error"

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "--p", "23"])       # missing --d
        assert exc.value.code == 2
        capsys.readouterr()

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
        capsys.readouterr()
