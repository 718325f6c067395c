"""Grammar round-trips, parse errors with positions, CLI behaviour."""

import json
import subprocess
import sys

import pytest

from covercalc import cli, parser, rings
from covercalc.errors import SpecSemanticError, SpecSyntaxError

ROUNDTRIP = [
    "Z: R/(12) + R/(18) + R^2",
    "Z: R/(4)^aleph0 + R/(9)",
    "Z: Q^3 + Pruefer(2)^2 + R/(6)",
    "Z: 0",
    "Z: primes(10, infinite)",
    "Z: R/(7) + primes(5, infinite)",
    "Zi: R/(5) + R/(1+i)^2",
    "Zi: R/(3-2i)",
    "Fp[t] p=3: R/(t^2+1) + R^1",
    "F q=4: R^3",
    "F q=aleph0: R^2",
    "local residue=5: R/(m^2) + Q",
    "local residue=aleph0 label=p: R/(p)^2",
    "dedekind {m1:3, m2:aleph0} min=3: R/(m1^2*m2) + R",
    "dedekind {m1:4} min=2 spectrum=finite: R/(m1)",
]


class TestRoundTrip:
    @pytest.mark.parametrize("text", ROUNDTRIP)
    def test_render_reparses_equal(self, text):
        ring, d = parser.parse_spec(text)
        rendered = parser.render_descriptor(d)
        ring2, d2 = parser.parse_spec(rendered)
        assert ring2 == ring
        assert d2 == d

    def test_spec_example(self):
        ring, d = parser.parse_spec("Z: R/(12) + R/(18) + R^2")
        assert ring == rings.integers()
        assert d.free_rank.finite_value == 2
        assert len(d.torsion) == 2

    def test_gaussian_five(self):
        _, d = parser.parse_spec("Zi: R/(5)")
        gens = {m.generator_str() for m, _ in d.torsion[0][0].factors}
        assert gens == {"2+i", "2-i"}


class TestErrors:
    def test_syntax_error_position(self):
        with pytest.raises(SpecSyntaxError) as info:
            parser.parse_spec("Z: R/(12) & R/(3)")
        assert info.value.position == 10

    def test_unknown_ring(self):
        with pytest.raises(SpecSyntaxError):
            parser.parse_spec("Q8: R/(2)")

    def test_semantic_unit_annihilator(self):
        with pytest.raises(SpecSemanticError):
            parser.parse_spec("Z: R/(1)")

    def test_semantic_q_over_dedekind(self):
        with pytest.raises(SpecSemanticError):
            parser.parse_spec("dedekind {m1:3} min=3: Q")

    def test_pruefer_needs_prime(self):
        with pytest.raises(SpecSemanticError):
            parser.parse_spec("Z: Pruefer(6)")

    def test_undeclared_label(self):
        with pytest.raises(SpecSemanticError):
            parser.parse_spec("dedekind {m1:3} min=3: R/(m2)")


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "covercalc.cli", *args],
                          capture_output=True, text=True)
    return proc


class TestCli:
    def test_sigma_inprocess(self, capsys):
        code = cli.main(["sigma", "Z: R/(5) + R/(9) + R^1", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["answer"] == "threshold(4)"
        assert out["q"] == "3"
        assert out["nc"] == ["(3)", "(5)"]

    def test_verify_match(self, capsys):
        code = cli.main(["verify", "Z: R/(2) + R/(2)", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["oracle"] == {"value": 3, "match": True}

    def test_phi(self, capsys):
        code = cli.main(["phi", "Z: R/(12)", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["answer"] == 4 and out["conjectural"] is False

    def test_cover_checked(self, capsys):
        code = cli.main(["cover", "Z: R/(12) + R/(18)", "--check", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["witness"]["lines"] == ["(1:0)", "(0:1)", "(1:1)"]
        assert out["witness_checked"] is True

    def test_coset_cover(self, capsys):
        code = cli.main(["coset-cover", "Z: R/(4)", "--puncture", "1",
                         "--check", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["answer"] == 2
        assert out["witness"]["cosets"] == [
            {"submodule_generators": ["2"], "representative": "0"},
            {"submodule_generators": ["0"], "representative": "3"}]
        assert out["witness_checked"] is True

    def test_oracle_sigma(self, capsys):
        code = cli.main(["oracle", "sigma", "Z: R/(3)^2", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["answer"] == 4

    def test_oracle_phi(self, capsys):
        code = cli.main(["oracle", "phi", "Z: R/(6)", "--puncture", "0",
                         "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["answer"] == 3

    def test_monoid(self, capsys):
        code = cli.main(["monoid", "N + C(0,4)", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["classification"] == "two-submonoids"
        assert out["partition_verified"] is True

    def test_snf(self, capsys):
        code = cli.main(["snf", "Z", "[[2,4],[6,8]]", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["diagonal"] == ["2", "4"]

    def test_s_set(self, capsys):
        code = cli.main(["s-set", "Z", "4", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["modules"] == ["Z: R/(2)^2", "Z: R/(3)^2"]

    def test_usage_exit(self, capsys):
        assert cli.main(["nonsense"]) == 64

    def test_parse_exit(self, capsys):
        assert cli.main(["sigma", "Z: R/("]) == 65

    def test_json_byte_identical(self):
        a = run_cli("cover", "Z: R/(12) + R/(18)", "--json")
        b = run_cli("cover", "Z: R/(12) + R/(18)", "--json")
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout

    def test_verify_subprocess_exit_codes(self):
        ok = run_cli("verify", "Z: R/(2) + R/(2)")
        assert ok.returncode == 0

    def test_verify_phi_mode(self, capsys):
        code = cli.main(["verify", "Z: R/(12)", "--phi", "--puncture", "0",
                         "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["formula"] == 4 and out["oracle"]["match"] is True

    def test_verify_mismatch_exits_2(self, capsys, monkeypatch):
        def wrong_cover(mod, maximal_only=True, max_size=4096):
            return 17, []

        monkeypatch.setattr(cli.oracle, "min_submodule_cover", wrong_cover)
        code = cli.main(["verify", "Z: R/(2) + R/(2)", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 2
        assert out["oracle"]["match"] is False
