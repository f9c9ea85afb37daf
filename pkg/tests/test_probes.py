import json

import pytest

from census import (
    ProbeKind,
    Verdict,
    density_from_reports,
    jsonl_to_reports,
    nonresidue_witness,
    probe_eigen,
    probe_integer,
    reports_to_jsonl,
    residue_exponents,
    verify_chain,
    verify_integer_chain,
    zero_class_spot_check,
)
from core.exceptions import (
    ArithmeticDomainError,
    PrecisionExhaustedError,
    ResourceLimitError,
    WeightError,
)
from hecke import FormMeta, hecke_half
from qseries import QSeries, congruent, scale

TAU_2_MOD_5 = {3, 11, 13}


@pytest.fixture
def theta_reports(theta_mod_5, theta_meta):
    return probe_eigen(theta_mod_5, theta_meta, (1, 5), 2, 3)


class TestProbeEigen:

    def test_theta_primes_verify(self, theta_reports):
        assert [r.p for r in theta_reports] == [11, 31, 41]
        assert [r.precision for r in theta_reports] == [991, 124, 71]
        assert all(r.verdict is Verdict.VERIFIED for r in theta_reports)
        assert theta_reports[-1].proportion == 1.0
        assert all(r.kind is ProbeKind.HECKE for r in theta_reports)
        assert not any(r.level_divides for r in theta_reports)

    def test_zero_form_verifies_any_scalar(self):
        reports = probe_eigen(
            QSeries.zero(7, 1000), FormMeta.half(1), (1, 4), 3, 5
        )
        assert [r.p for r in reports] == [5, 13, 17, 29]
        assert all(r.verdict is Verdict.VERIFIED for r in reports)

    def test_matches_direct_application(self):
        meta = FormMeta.half(1)
        f = QSeries.monomial(97, 1000, 1)
        (report,) = probe_eigen(f, meta, (1, 4), 2, 1)
        assert report.p == 5
        direct = congruent(hecke_half(f, meta, 5), scale(f, 2))
        assert (report.verdict is Verdict.VERIFIED) == direct
        assert report.verdict is Verdict.REFUTED

    def test_insufficient_precision(self, theta_mod_5, theta_meta):
        reports = probe_eigen(
            theta_mod_5, theta_meta, (1, 5), 2, 3, min_precision=500
        )
        assert [r.verdict for r in reports] == [
            Verdict.VERIFIED, Verdict.INSUFFICIENT, Verdict.INSUFFICIENT
        ]
        assert reports[-1].proportion == 1.0

    def test_no_candidates(self):
        with pytest.raises(PrecisionExhaustedError):
            probe_eigen(QSeries.one(5, 3), FormMeta.half(1), (1, 4), 2, 10)

    def test_workers_do_not_change_reports(self, theta_mod_5, theta_meta):
        single = probe_eigen(theta_mod_5, theta_meta, (1, 5), 2, 6)
        pooled = probe_eigen(
            theta_mod_5, theta_meta, (1, 5), 2, 6, workers=3
        )
        assert single == pooled

    def test_density(self, theta_reports):
        estimate = density_from_reports(theta_reports)
        assert estimate.relative == 1.0
        assert estimate.density == 0.25
        assert estimate.descriptor == "1 mod 5"
        assert estimate.bound == 41

    def test_jsonl(self, theta_reports):
        text = reports_to_jsonl(theta_reports)
        first = json.loads(text.splitlines()[0])
        assert set(first) == {
            "p", "class", "scalar", "precision", "verdict", "proportion",
            "kind", "level_divides",
        }
        assert first["class"] == [1, 5]
        assert first["verdict"] == "verified"
        assert jsonl_to_reports(text) == theta_reports

    def test_level_divides_survives_jsonl(self):
        reports = probe_eigen(
            QSeries.monomial(7, 1000, 1), FormMeta.half(1, 12), (1, 2), 2, 3
        )
        assert [r.p for r in reports] == [3, 5, 7]
        assert [r.level_divides for r in reports] == [True, False, False]
        text = reports_to_jsonl(reports)
        assert json.loads(text.splitlines()[0])["level_divides"] is True
        assert jsonl_to_reports(text) == reports

    def test_even_modulus_rejected(self):
        with pytest.raises(ArithmeticDomainError):
            probe_eigen(
                QSeries.monomial(4, 1000, 1), FormMeta.half(1), (1, 4), 2, 3
            )

    def test_memory_cap(self, theta_mod_5, theta_meta):
        with pytest.raises(ResourceLimitError):
            probe_eigen(theta_mod_5, theta_meta, (1, 5), 2, 3, mem_cap=100)


class TestChains:

    def test_single_prime(self, theta_mod_5, theta_meta, theta_reports):
        for report in theta_reports[:2]:
            result = verify_chain(theta_mod_5, theta_meta, 1, [report])
            assert result.verdict is Verdict.VERIFIED
            assert result.image_holds is True
            assert result.four_term_holds is None

    def test_two_primes(self, theta_mod_5, theta_meta, theta_reports):
        result = verify_chain(theta_mod_5, theta_meta, 1, theta_reports[:2])
        assert result.verdict is Verdict.VERIFIED
        assert result.primes == (11, 31)
        assert result.chain_holds and result.four_term_holds
        assert result.image_holds

    def test_empty_chain(self, theta_mod_5, theta_meta):
        result = verify_chain(theta_mod_5, theta_meta, 5, [])
        assert result.verdict is Verdict.VERIFIED
        assert result.primes == ()

    def test_chain_errors(self, theta_mod_5, theta_meta, theta_reports):
        with pytest.raises(PrecisionExhaustedError):
            verify_chain(theta_mod_5, theta_meta, 2, theta_reports[:2])
        with pytest.raises(ArithmeticDomainError):
            verify_chain(theta_mod_5, theta_meta, 1, [11, 11])
        with pytest.raises(WeightError):
            verify_chain(theta_mod_5, FormMeta.integral(2), 1, [11])
        refuted = probe_eigen(theta_mod_5, theta_meta, (1, 5), 3, 1)
        with pytest.raises(ArithmeticDomainError):
            verify_chain(theta_mod_5, theta_meta, 1, refuted)
        with pytest.raises(ArithmeticDomainError):
            verify_chain(QSeries.one(10, 100), theta_meta, 1, [3])


class TestIntegerWeight:

    def test_power_and_hecke_probes(self, delta_mod_5, delta_meta):
        reports = probe_integer(delta_mod_5, delta_meta, 1, 1, 6)
        power = [r for r in reports if r.kind is ProbeKind.POWER]
        hecke = [r for r in reports if r.kind is ProbeKind.HECKE]
        assert [r.p for r in power] == [2, 3, 5, 7, 11, 13]
        verified = {r.p for r in power if r.verdict is Verdict.VERIFIED}
        assert verified == TAU_2_MOD_5
        assert [r.p for r in hecke] == [11, 31, 41, 61, 71, 101]
        assert all(r.verdict is Verdict.VERIFIED for r in hecke), (
            "τ(p) ≡ p(1 + p) ≡ 2 (mod 5) при p ≡ 1 (mod 5)."
        )

    def test_exponent_zero(self, delta_mod_5, delta_meta):
        reports = probe_integer(delta_mod_5, delta_meta, 1, 0, 5)
        power = [r for r in reports if r.kind is ProbeKind.POWER]
        assert all(r.verdict is Verdict.VERIFIED for r in power)

    def test_rejects_half_integral(self, theta_mod_5, theta_meta):
        with pytest.raises(WeightError):
            probe_integer(theta_mod_5, theta_meta, 1, 1, 5)

    def test_memory_cap(self, delta_mod_5, delta_meta):
        with pytest.raises(ResourceLimitError):
            probe_integer(delta_mod_5, delta_meta, 1, 0, 6, mem_cap=100)

    def test_integer_chain(self, delta_mod_5):
        result = verify_integer_chain(delta_mod_5, 1, 3, 1, [11, 31])
        assert result.verdict is Verdict.VERIFIED
        with pytest.raises(ArithmeticDomainError):
            verify_integer_chain(delta_mod_5, 1, 3, 1, [3, 11])

    def test_residue_exponents(self):
        exponents = residue_exponents(1, 5, 1)
        for r, i in exponents.items():
            assert 2 * (i + 1) % 5 == r
        assert exponents[2] == 0
        with pytest.raises(ArithmeticDomainError):
            residue_exponents(5, 5, 1)


class TestZeroClass:

    def test_spot_check(self, theta_mod_5):
        verdict, checked = zero_class_spot_check(theta_mod_5, 3)
        assert verdict is Verdict.VERIFIED
        assert checked == 2963
        bad = QSeries.from_dict(5, 100, {54: 1})
        assert zero_class_spot_check(bad, 3)[0] is Verdict.REFUTED
        assert zero_class_spot_check(QSeries.one(5, 20), 3) == (
            Verdict.INSUFFICIENT, 0
        )

    def test_nonresidue_witness(self, theta_mod_5):
        assert nonresidue_witness(theta_mod_5, [2, 3, 5, 7]) is None
        f = QSeries.from_dict(5, 10, {2: 1})
        assert nonresidue_witness(f, [2, 3]) == (3, 2)
