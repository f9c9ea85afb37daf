import json

import pytest
from django.test import override_settings

from conftest import run_cli, run_command, series_path
from lab.forms import HeckeForm, ProbeForm
from qseries import deserialize, serialize, theta_series, truncate


class TestCensusCommand:

    def test_partition_census_mod_5(self):
        result = run_command(
            "census", "--sequence", "partition", "--modulus", "5",
            "--xmax", "10",
        )
        assert result.code == 3, "Непокрытый класс вычетов даёт код 3."
        lines = result.stdout.splitlines()
        assert lines[0] == "r,X,count,curve,fitted_C"
        assert [line.split(",")[2] for line in lines[1:]] == [
            "3", "2", "4", "1", "0"
        ]
        assert "residue class unhit: 4" in str(result.error)

    def test_small_xmax_is_unhit(self):
        result = run_command(
            "census", "--sequence", "partition", "--modulus", "5",
            "--xmax", "4",
        )
        assert result.code == 3

    def test_all_classes_hit(self):
        result = run_command(
            "census", "--sequence", "partition", "--modulus", "7",
            "--xmax", "5000", "--s", "1",
        )
        assert result.code == 0
        assert result.stdout.count("\n") == 1 + 7 * 9

    def test_regular_and_file_sequences(self, tmp_path):
        regular = run_command(
            "census", "--sequence", "regular:3,1", "--modulus", "3",
            "--xmax", "500",
        )
        assert regular.code == 0
        path = series_path(
            tmp_path, "theta.qs", serialize(theta_series(25, 400))
        )
        from_file = run_command(
            "census", "--sequence", f"file:{path}", "--modulus", "5",
            "--xmax", "400",
        )
        assert from_file.code == 3
        short = run_command(
            "census", "--sequence", f"file:{path}", "--modulus", "5",
            "--xmax", "401",
        )
        assert short.code == 5

    def test_missing_modulus(self, capsys):
        result = run_cli(
            ["census", "--sequence", "partition", "--xmax", "10"], capsys
        )
        assert result.code == 2
        assert run_command(
            "census", "--sequence", "partition", "--xmax", "10"
        ).code == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["--sequence", "regular:4,1", "--modulus", "5", "--xmax", "10"],
            ["--sequence", "fibonacci", "--modulus", "5", "--xmax", "10"],
            ["--sequence", "partition", "--modulus", "0", "--xmax", "10"],
            ["--sequence", "partition", "--modulus", "5", "--xmax", "ten"],
            ["--sequence", "partition", "--modulus", "5", "--xmax", "10",
             "--ratio", "1"],
        ],
    )
    def test_bad_flags(self, argv):
        assert run_command("census", *argv).code == 2

    def test_argparse_errors_exit_2(self, capsys):
        result = run_cli(
            ["census", "--sequence", "partition", "--modulus", "5",
             "--xmax", "10", "--scale", "cubic"],
            capsys,
        )
        assert result.code == 2

    @override_settings(CONGRUENCE_LAB_MEM_CAP=100)
    def test_memory_cap(self):
        result = run_command(
            "census", "--sequence", "partition", "--modulus", "5",
            "--xmax", "1000",
        )
        assert result.code == 4

    def test_output_file_and_determinism(self, tmp_path):
        out = tmp_path / "census.csv"
        argv = ["--sequence", "partition", "--modulus", "11",
                "--xmax", "3000", "--out", str(out)]
        assert run_command("census", *argv).code == 0
        first = out.read_bytes()
        assert run_command("census", *argv, "--workers", "3").code == 0
        assert out.read_bytes() == first, (
            "Одинаковые флаги дают побайтно одинаковый результат."
        )


class TestHeckeCommand:

    def test_half_integral_monomial(self, monomial_file):
        result = run_command(
            "hecke", "--input", str(monomial_file), "--weight", "half:1",
            "--level", "4", "--p", "3",
        )
        assert result.code == 0
        assert result.stdout == "QS1 modulus=97 prec=11\n1 96\n9 3\n"

    def test_empty_composition_copies_input(self, monomial_file, tmp_path):
        out = tmp_path / "copy.qs"
        result = run_command(
            "hecke", "--input", str(monomial_file), "--weight", "half:1",
            "--level", "4", "--out", str(out),
        )
        assert result.code == 0
        assert out.read_bytes() == monomial_file.read_bytes()

    def test_iterated_integer_weight(self, delta_file, delta_mod_5):
        result = run_command(
            "hecke", "--input", str(delta_file), "--weight", "int:12",
            "--level", "1", "--p", "11",
        )
        image = deserialize(result.stdout)
        assert image.precision == 2000 // 11
        assert image == truncate(
            delta_mod_5 * 2, image.precision
        ), "Δ|T_11 ≡ 2Δ (mod 5)."

    @pytest.mark.parametrize(
        "argv",
        [
            ["--weight", "half:1", "--level", "4", "--p", "2"],
            ["--weight", "half:1", "--level", "6", "--p", "3"],
            ["--weight", "half:1", "--level", "4", "--p", "9"],
            ["--weight", "quarter:1", "--level", "4", "--p", "3"],
            ["--weight", "int:2", "--level", "4", "--char", "kron:0",
             "--p", "3"],
        ],
    )
    def test_rejected_flags(self, monomial_file, argv):
        result = run_command("hecke", "--input", str(monomial_file), *argv)
        assert result.code == 2

    def test_precision_exhausted(self, monomial_file):
        result = run_command(
            "hecke", "--input", str(monomial_file), "--weight", "half:1",
            "--level", "4", "--p", "3", "--p", "5",
        )
        assert result.code == 5

    def test_malformed_input(self, tmp_path):
        path = series_path(tmp_path, "bad.qs", "QS1 modulus=4 prec=2\n1 7\n")
        result = run_command(
            "hecke", "--input", str(path), "--weight", "int:2",
            "--level", "1", "--p", "2",
        )
        assert result.code == 2

    def test_missing_input_file(self, tmp_path):
        result = run_command(
            "hecke", "--input", str(tmp_path / "absent.qs"),
            "--weight", "int:2", "--level", "1", "--p", "2",
        )
        assert result.code == 2

    @pytest.mark.parametrize("p_flag", [["--p", "3"], []])
    def test_half_integral_needs_odd_modulus(self, tmp_path, p_flag):
        path = series_path(
            tmp_path, "even.qs", "QS1 modulus=4 prec=100\n1 1\n"
        )
        result = run_command(
            "hecke", "--input", str(path), "--weight", "half:1",
            "--level", "4", *p_flag,
        )
        assert result.code == 2, "Полуцелый вес требует нечётного M."

    def test_non_ascii_input(self, tmp_path):
        path = tmp_path / "cyrillic.qs"
        path.write_bytes("QS1 модуль=5 prec=2\n".encode("utf-8"))
        result = run_command(
            "hecke", "--input", str(path), "--weight", "int:2",
            "--level", "1", "--p", "2",
        )
        assert result.code == 2


class TestProbeCommand:

    def test_theta_class_verified(self, theta_file):
        result = run_command(
            "probe", "--input", str(theta_file), "--weight", "half:0",
            "--level", "4", "--scalar", "2", "--class", "1,5",
            "--budget", "3",
        )
        assert result.code == 0
        reports = [json.loads(line) for line in result.stdout.splitlines()]
        assert [report["p"] for report in reports] == [11, 31, 41]
        assert {report["verdict"] for report in reports} == {"verified"}

    def test_schema_on_integer_form(self, delta_file):
        result = run_command(
            "probe", "--input", str(delta_file), "--weight", "int:12",
            "--level", "1", "--scalar", "2", "--class", "1,240",
            "--budget", "50",
        )
        assert result.code == 0
        for line in result.stdout.splitlines():
            report = json.loads(line)
            assert set(report) == {
                "p", "class", "scalar", "precision", "verdict",
                "proportion", "kind", "level_divides",
            }
            assert report["p"] % 240 == 1
            assert report["verdict"] in {
                "verified", "refuted", "insufficient-precision"
            }
            assert 0 <= report["proportion"] <= 1
            assert report["level_divides"] is False

    def test_power_probe_sorted_by_kind(self, delta_file):
        result = run_command(
            "probe", "--input", str(delta_file), "--weight", "int:12",
            "--level", "1", "--n0", "1", "--power", "1", "--budget", "6",
        )
        kinds = [
            json.loads(line)["kind"] for line in result.stdout.splitlines()
        ]
        assert kinds == sorted(kinds)
        assert kinds.count("power") == 6

    def test_no_primes_in_range(self, monomial_file):
        result = run_command(
            "probe", "--input", str(monomial_file), "--weight", "half:1",
            "--level", "4", "--class", "1,240",
        )
        assert result.code == 5

    @pytest.mark.parametrize(
        "extra", [["--class", "2,4"], ["--class", "1"], ["--budget", "0"]]
    )
    def test_bad_flags(self, monomial_file, extra):
        result = run_command(
            "probe", "--input", str(monomial_file), "--weight", "half:1",
            "--level", "4", *extra,
        )
        assert result.code == 2

    def test_even_modulus_for_half_weight(self, tmp_path):
        path = series_path(
            tmp_path, "even.qs", "QS1 modulus=4 prec=100\n1 1\n"
        )
        result = run_command(
            "probe", "--input", str(path), "--weight", "half:1",
            "--level", "4", "--class", "1,3",
        )
        assert result.code == 2

    @override_settings(CONGRUENCE_LAB_MEM_CAP=1000)
    def test_memory_cap(self, delta_file):
        result = run_command(
            "probe", "--input", str(delta_file), "--weight", "int:12",
            "--level", "1", "--class", "1,240", "--budget", "5",
        )
        assert result.code == 4


class TestPiSCommand:

    def test_prime_file(self, primes_file):
        result = run_command(
            "pis", "--set", f"file:{primes_file}", "--s", "2", "--x", "15"
        )
        assert result.stdout == "3\n"

    def test_prime_class(self):
        result = run_command("pis", "--set", "class:1,4", "--s", "2",
                             "--x", "100")
        assert result.stdout == "2\n"

    def test_all_primes_and_repeat(self):
        assert run_command(
            "pis", "--set", "all", "--s", "1", "--x", "100"
        ).stdout == "25\n"
        assert run_command(
            "pis", "--set", "all", "--s", "2", "--x", "10", "--repeat"
        ).stdout == "4\n"

    def test_non_prime_in_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2 3 4", encoding="utf-8")
        result = run_command(
            "pis", "--set", f"file:{path}", "--s", "2", "--x", "15"
        )
        assert result.code == 2

    @override_settings(CONGRUENCE_LAB_MEM_CAP=1000)
    @pytest.mark.parametrize(
        "prime_set, s", [("all", "1"), ("all", "2"), ("class:1,4", "1")]
    )
    def test_memory_cap(self, prime_set, s):
        result = run_command(
            "pis", "--set", prime_set, "--s", s, "--x", "100000"
        )
        assert result.code == 4, "Решето больше предела даёт код 4."


class TestSquareClassCommand:

    def test_squares(self, squares_file):
        result = run_command(
            "squareclass", "--input", str(squares_file), "--ell", "5"
        )
        assert result.stdout == "1\n"

    def test_sorted_kernels_and_growth(self, tmp_path):
        path = series_path(
            tmp_path, "f.qs", "QS1 modulus=5 prec=20\n2 1\n3 4\n12 2\n"
        )
        result = run_command("squareclass", "--input", str(path),
                             "--ell", "5")
        assert result.stdout == "2\n3\n"
        growth = run_command("squareclass", "--input", str(path),
                             "--ell", "5", "--growth", "2,10,20")
        assert growth.stdout == "2,1\n10,2\n20,2\n"

    def test_ell_must_divide_modulus(self, squares_file):
        result = run_command(
            "squareclass", "--input", str(squares_file), "--ell", "7"
        )
        assert result.code == 2


class TestPTableCommand:

    def test_csv(self):
        result = run_command("ptable", "--kind", "partition", "--modulus",
                             "1000", "--xmax", "5", "--format", "csv")
        assert result.stdout == "n,value\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n"

    def test_qs1(self):
        result = run_command("ptable", "--kind", "regular:3,1",
                             "--modulus", "100", "--xmax", "5")
        assert result.stdout == (
            "QS1 modulus=100 prec=5\n0 1\n1 1\n2 2\n3 2\n4 4\n5 5\n"
        )

    def test_targets(self):
        result = run_command("ptable", "--kind", "ftarget:13,1",
                             "--xmax", "40")
        assert result.stdout == "QS1 modulus=13 prec=40\n11 11\n35 9\n"
        reduced = run_command("ptable", "--kind", "gtarget:5,2",
                              "--modulus", "5", "--xmax", "50")
        assert reduced.stdout.startswith("QS1 modulus=5 prec=50\n23 1\n")

    def test_partition_requires_modulus(self):
        result = run_command("ptable", "--kind", "partition", "--xmax", "5")
        assert result.code == 2


class TestSelfCheckCommand:

    def test_suites_pass_and_repeat(self):
        first = run_command("selfcheck", "--seed", "7", "--trials", "3")
        assert first.code == 0
        assert first.stdout.count(": ok (3 trials)") == 5
        again = run_command("selfcheck", "--seed", "7", "--trials", "3")
        assert again.stdout == first.stdout

    def test_from_command_line(self, capsys):
        result = run_cli(["selfcheck", "--trials", "1", "--verbosity", "0"],
                         capsys)
        assert result.code == 0
        assert "ring-laws: ok" in result.stdout


class TestForms:

    def test_run_config_from_flags(self, monomial_file):
        form = ProbeForm(data={
            "input": str(monomial_file),
            "weight": "half:1",
            "level": "4",
            "budget": "3",
        })
        assert form.is_valid(), form.errors
        config = form.run_config()
        assert config.budget == 3
        assert config.input == monomial_file
        assert not hasattr(config, "precision"), (
            "RunConfig хранит только значения флагов."
        )

    def test_half_integral_rejects_even_modulus(self, tmp_path):
        path = series_path(
            tmp_path, "even.qs", "QS1 modulus=4 prec=100\n1 1\n"
        )
        form = HeckeForm(data={
            "input": str(path), "weight": "half:1", "level": "4"
        })
        assert not form.is_valid()
        assert "нечётный модуль" in form.errors.as_text()
