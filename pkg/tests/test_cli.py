import json

import pytest

from complements.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestTextOutput:
    def test_n1_standard(self, capsys):
        code, out, _ = invoke(capsys, "n1", "--set", "0,1", "--m-max", "20", "--n-max", "10")
        assert code == 0 and out.strip() == "{1,2,3,4,6}"

    def test_min_index_e8(self, capsys):
        code, out, _ = invoke(capsys, "min-index", "--boundary", "1/2,2/3,5/6", "--variant", "geq")
        assert code == 0 and out.strip() == "6"

    def test_kodaira_iistar(self, capsys):
        code, out, _ = invoke(capsys, "kodaira", "--type", "IIstar")
        assert code == 0 and out.strip() == "5/6"

    def test_phi_membership(self, capsys):
        code, out, _ = invoke(capsys, "phi", "--set", "0,1", "--value", "3/4")
        assert code == 0 and out.strip() == "yes (r=1, m=4)"

    def test_phi_enumerate(self, capsys):
        code, out, _ = invoke(capsys, "phi", "--set", "0,1", "--m-max", "4")
        assert code == 0 and out.strip() == "{0,1/2,2/3,3/4,1}"

    def test_closure(self, capsys):
        code, out, _ = invoke(capsys, "closure", "--set", "0,2/3,1")
        assert code == 0 and out.strip() == "{0,1/3,2/3,1}"

    def test_closure_interval(self, capsys):
        code, out, _ = invoke(capsys, "closure", "--set", "0,1/2,2/3,3/4,5/6,1", "--interval")
        assert code == 0 and out.strip() == "12"

    def test_rn_union(self, capsys):
        code, out, _ = invoke(capsys, "rn", "--set", "0,1", "--n", "1,2,3,4,6")
        assert code == 0 and out.strip() == "{0,1/6,1/4,1/3,1/2,2/3,3/4,5/6,1}"

    def test_pn_value(self, capsys):
        code, out, _ = invoke(capsys, "pn", "--n", "2", "--value", "3/10")
        assert code == 0 and out.strip() == "false"

    def test_complement(self, capsys):
        code, out, _ = invoke(
            capsys, "complement", "--boundary", "1,2/3,1/3", "--n", "1", "--variant", "definition"
        )
        assert code == 0 and out.strip() == "n=1 numerators=1,1,0 extra=-"

    def test_complement_absent(self, capsys):
        code, out, _ = invoke(
            capsys, "complement", "--boundary", "1,2/3,1/3", "--n", "1", "--variant", "geq"
        )
        assert code == 0 and out.strip() == "none"

    def test_lct_cusp(self, capsys):
        code, out, _ = invoke(capsys, "lct", "--germ", "1:0,2:-1,3:-2,6:-4")
        assert code == 0 and out.strip() == "c_w=5/6 d_w=1/6"

    def test_radius(self, capsys):
        code, out, _ = invoke(capsys, "radius", "--boundary", "2/3,1/2", "--n", "3")
        assert code == 0 and out.strip() == "1/12"

    def test_diff(self, capsys):
        code, out, _ = invoke(capsys, "diff", "--n", "3", "--terms", "1:1/2")
        assert code == 0 and out.strip() == "5/6"

    def test_pair_discr(self, capsys):
        code, out, _ = invoke(capsys, "pair-discr", "--lambdas", "1,1")
        assert code == 0 and out.strip() == "sum=2 bound_ok=true discrepancy=-1"

    def test_ruled_moduli(self, capsys):
        code, out, _ = invoke(
            capsys, "ruled-moduli", "--e", "1", "--sections", "1/2:0,1/2:1,1/2:1,1/2:1"
        )
        assert code == 0 and out.strip() == "1/2"

    def test_approx(self, capsys):
        code, out, _ = invoke(capsys, "approx", "--b", "2/3,1/3", "--q-max", "10")
        assert code == 0 and out.strip() == "q=3 numerators=2,1 error=0"

    def test_elliptic(self, capsys):
        code, out, _ = invoke(
            capsys, "elliptic", "--genus", "0",
            "--fibers", "P1:mI_n:2,P2:mI_n:3,P3:mI_n:6", "--j-degree", "0",
        )
        assert code == 0
        assert "deg total = 0" in out and "torsion index = 6" in out


class TestJsonOutput:
    def test_n1_schema(self, capsys):
        code, out, _ = invoke(
            capsys, "n1", "--set", "0,1", "--m-max", "20", "--n-max", "10", "--json"
        )
        payload = json.loads(out)
        assert payload["indices"] == [1, 2, 3, 4, 6]
        assert payload["cap"] == {"m_max": 20, "n_max": 10}
        assert set(payload["witnesses"]) == {"1", "2", "3", "4", "6"}
        for witness in payload["witnesses"].values():
            assert all(isinstance(lbl, str) and isinstance(m, str) for lbl, m in witness)

    def test_sweep_lines(self, capsys):
        code, out, _ = invoke(
            capsys, "n1-sweep", "--set", "0,1", "--m-max", "8,12", "--n-max", "10"
        )
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert [l["m_max"] for l in lines] == [8, 12]
        assert all(l["indices"] == [1, 2, 3, 4, 6] for l in lines)

    def test_phi_witness_schema(self, capsys):
        code, out, _ = invoke(capsys, "phi", "--set", "0,1", "--value", "3/4", "--json")
        payload = json.loads(out)
        assert payload == {"member": True, "witness": {"value": "3/4", "r": "1", "m": 4}}

    def test_multset_schema(self, capsys):
        code, out, _ = invoke(capsys, "closure", "--set", "0,2/3,1", "--json")
        assert json.loads(out) == ["0", "1/3", "2/3", "1"]

    def test_approx_schema(self, capsys):
        code, out, _ = invoke(
            capsys, "approx", "--b", "2/3,1/3", "--q-max", "10", "--floor-n", "2", "--json"
        )
        payload = json.loads(out)
        assert payload == {
            "q": 3,
            "numerators": [2, 1],
            "error": "0",
            "cassels_ok": True,
            "floor_claim": True,
        }

    def test_certificate_schema(self, capsys):
        code, out, _ = invoke(
            capsys, "complement", "--boundary", "1,1", "--n", "1", "--json", "-I", "5"
        )
        assert json.loads(out) == {"n": 5, "numerators": [5, 5], "extra_points": []}

    def test_germ_roundtrip(self, capsys):
        code, out, _ = invoke(capsys, "lct", "--germ", "4:0", "--shift", "1/4", "--json")
        payload = json.loads(out)
        assert payload == {"germ": [["4", "1"]], "c_w": "0", "d_w": "1"}

    def test_elliptic_schema(self, capsys):
        code, out, _ = invoke(
            capsys, "elliptic", "--genus", "0", "--fibers", "P1:IIstar", "--j-degree", "14",
            "--json",
        )
        payload = json.loads(out)
        assert payload["d_div"] == [["P1", "5/6"]]
        assert payload["deg_dmod"] == "7/6"
        assert payload["torsion_index"] == 6


class TestExitCodes:
    def test_usage_error(self, capsys):
        code, _, _ = invoke(capsys, "n1", "--set", "0,1")  # missing caps
        assert code == 2

    def test_unknown_command(self, capsys):
        code, _, _ = invoke(capsys, "frobnicate")
        assert code == 2

    def test_domain_error(self, capsys):
        code, _, err = invoke(capsys, "pn", "--n", "1", "--set", "0,2/3,1", "--m-max", "10")
        assert code == 1 and "does not divide" in err

    def test_malformed_rational(self, capsys):
        code, _, err = invoke(capsys, "phi", "--set", "0,1", "--value", "1.5")
        assert code == 1 and "malformed" in err

    def test_deterministic_output(self, capsys):
        a = invoke(capsys, "n1", "--set", "0,1", "--m-max", "20", "--n-max", "10", "--json")
        b = invoke(capsys, "n1", "--set", "0,1", "--m-max", "20", "--n-max", "10", "--json")
        assert a == b
