import json
import math

import pytest

from umbra.cli import main
from umbra.functions import tricomi
from umbra.series import TruncatedSeries


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpecialEval:
    def test_tricomi_at_origin(self, capsys):
        code, out, _ = run_cli(capsys, "special", "eval", "--family", "tricomi",
                               "--n", "0", "--x", "0")
        assert code == 0
        assert out.startswith("value=1 ")

    def test_hermite(self, capsys):
        code, out, _ = run_cli(capsys, "special", "eval", "--family", "hermite2",
                               "--n", "2", "--y", "1", "--x", "1")
        assert code == 0
        assert out.startswith("value=3 ")

    def test_besselj(self, capsys):
        code, out, _ = run_cli(capsys, "special", "eval", "--family", "besselj",
                               "--n", "0", "--x", "2")
        assert code == 0
        assert float(out.split()[0].split("=")[1]) == pytest.approx(
            0.2238907791, abs=1e-9)

    def test_cs_family(self, capsys):
        code, out, _ = run_cli(capsys, "special", "eval", "--family", "cs",
                               "--p", "1", "--x", "0")
        assert code == 0
        assert float(out.split()[0].split("=")[1]) == pytest.approx(2.0)

    def test_hyp2f2_requires_params(self, capsys):
        code, _, err = run_cli(capsys, "special", "eval", "--family", "hyp2f2",
                               "--x", "0.5")
        assert code == 2
        assert "params" in err

    def test_emit_samples(self, capsys):
        code, out, _ = run_cli(capsys, "special", "eval", "--family", "sn",
                               "--p", "0", "--emit-samples", "0:2:5")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,value"
        assert len(lines) == 6
        assert float(lines[1].split(",")[0]) == 0.0

    def test_emit_samples_bad_format(self, capsys):
        code, _, err = run_cli(capsys, "special", "eval", "--family", "sn",
                               "--emit-samples", "junk")
        assert code == 2

    def test_evaluation_failure_is_exit_1(self, capsys):
        code, _, err = run_cli(capsys, "special", "eval", "--family", "besselj",
                               "--n", "0", "--x", "80")
        assert code == 1
        assert "error" in err


class TestTransform:
    def test_tricomi_to_exp(self, capsys, monkeypatch, tmp_path):
        src = tmp_path / "series.json"
        src.write_text(tricomi(0, 16).to_json())
        code, out, _ = run_cli(capsys, "transform", "--alpha", "1",
                               "--input", str(src))
        assert code == 0
        result = TruncatedSeries.from_json(out)
        expected = TruncatedSeries.exp(16).compose_linear(-1.0)
        assert result.isclose(expected)

    def test_round_trip(self, capsys, tmp_path):
        src = tmp_path / "series.json"
        src.write_text(tricomi(0, 12).to_json())
        code, out, _ = run_cli(capsys, "transform", "--alpha", "1",
                               "--input", str(src))
        mid = tmp_path / "mid.json"
        mid.write_text(out)
        code, out, _ = run_cli(capsys, "transform", "--alpha", "1", "--inverse",
                               "--input", str(mid))
        assert code == 0
        back = TruncatedSeries.from_json(out)
        _, rel = back.max_difference(tricomi(0, 12))
        assert rel <= 1e-14

    def test_beta_family_mittag_leffler(self, capsys, tmp_path):
        src = tmp_path / "series.json"
        src.write_text(TruncatedSeries.exp(16).scale(
            1.0 / math.gamma(2.0)).to_json())
        code, out, _ = run_cli(capsys, "transform", "--family", "beta",
                               "--alpha", "1", "--beta", "2", "--gamma", "1",
                               "--delta", "0", "--input", str(src))
        assert code == 0
        result = TruncatedSeries.from_json(out)
        for k in range(17):
            assert result[k].real == pytest.approx(1 / math.gamma(k + 3),
                                                   rel=1e-12)

    def test_beta_flags_on_plain_family_rejected(self, capsys, tmp_path):
        src = tmp_path / "series.json"
        src.write_text(tricomi(0, 4).to_json())
        code, _, err = run_cli(capsys, "transform", "--alpha", "1",
                               "--beta", "2", "--input", str(src))
        assert code == 1

    def test_bad_spec_is_exit_1(self, capsys, tmp_path):
        src = tmp_path / "series.json"
        src.write_text(tricomi(0, 4).to_json())
        code, _, err = run_cli(capsys, "transform", "--alpha", "-1",
                               "--input", str(src))
        assert code == 1


class TestNegDeriv:
    def test_j0(self, capsys):
        code, out, _ = run_cli(capsys, "negderiv", "--f", "j0", "--x", "1",
                               "--terms", "30")
        assert code == 0
        fields = dict(kv.split("=") for kv in out.split())
        assert float(fields["abs_diff"]) < 1e-9

    def test_gauss_cos(self, capsys):
        code, out, _ = run_cli(capsys, "negderiv", "--integrand", "cos",
                               "--f", "gauss:-0.5,0.0", "--x", "0.8",
                               "--terms", "30")
        assert code == 0
        fields = dict(kv.split("=") for kv in out.split())
        assert float(fields["abs_diff"]) < 1e-9

    def test_hermite_provider(self, capsys):
        code, out, _ = run_cli(capsys, "negderiv", "--f", "hermite:2,1.0",
                               "--x", "1.0", "--terms", "5")
        assert code == 0
        fields = dict(kv.split("=") for kv in out.split())
        assert float(fields["value"]) == pytest.approx(7 / 3, abs=1e-10)

    def test_unknown_integrand(self, capsys):
        code, _, err = run_cli(capsys, "negderiv", "--f", "mystery", "--x", "1")
        assert code == 1


class TestCheck:
    def test_list(self, capsys):
        code, out, _ = run_cli(capsys, "check", "list")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 38
        assert any(line.startswith("mehler:") for line in lines)
        assert any("[slow]" in line for line in lines)

    def test_single_check_text(self, capsys):
        code, out, _ = run_cli(capsys, "check", "run", "--id", "mehler")
        assert code == 0
        assert out.startswith("PASS mehler:")

    def test_unknown_id_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "check", "run", "--id", "nope")
        assert code == 2

    def test_all_json_deterministic(self, capsys):
        code1, out1, _ = run_cli(capsys, "check", "run", "--all",
                                 "--filter", "gf-", "--format", "json")
        code2, out2, _ = run_cli(capsys, "check", "run", "--all",
                                 "--filter", "gf-", "--format", "json")
        assert code1 == code2 == 0
        assert out1 == out2
        parsed = json.loads(out1)
        assert all(item["pass"] for item in parsed)

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "check", "run", "--id", "mehler",
                               "--format", "csv")
        assert code == 0
        assert out.splitlines()[0].startswith("id,pass,")

    def test_failing_suite_exit_1(self, capsys):
        code, out, _ = run_cli(capsys, "check", "run", "--id", "prop1",
                               "--tolerance-scale", "1e-9")
        assert code == 1
        assert out.startswith("FAIL")

    def test_env_tolerance_scale(self, capsys, monkeypatch):
        monkeypatch.setenv("UMBRA_TOL_SCALE", "1e-9")
        code, _, _ = run_cli(capsys, "check", "run", "--id", "prop1")
        assert code == 1
        # explicit flag wins over the environment
        code, _, _ = run_cli(capsys, "check", "run", "--id", "prop1",
                             "--tolerance-scale", "1.0")
        assert code == 0

    def test_include_slow_runs_everything(self, capsys):
        code, out, _ = run_cli(capsys, "check", "run", "--all",
                               "--include-slow", "--format", "csv")
        assert code == 0
        assert len(out.strip().splitlines()) == 39  # header + 38 checks

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check"])
        assert exc.value.code == 2


class TestEnvOrder:
    def test_order_env_controls_series_length(self, capsys, monkeypatch):
        monkeypatch.setenv("UMBRA_ORDER", "6")
        code, out, _ = run_cli(capsys, "special", "eval", "--family",
                               "epsilon-half", "--x", "0.9")
        assert code == 0
        short_tail = float(out.split()[1].split("=")[1])
        monkeypatch.setenv("UMBRA_ORDER", "64")
        code, out, _ = run_cli(capsys, "special", "eval", "--family",
                               "epsilon-half", "--x", "0.9")
        long_tail = float(out.split()[1].split("=")[1])
        assert long_tail < short_tail
