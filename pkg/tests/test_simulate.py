import json

import numpy as np
import pytest

from nzcod.construction import nzcod_design, scod_design
from nzcod.corpus import load_design
from nzcod.design import verify_orthogonality
from nzcod.forms import EntryForm
from nzcod.simulate import (
    PowerConstraint,
    SimConfig,
    constellation_by_name,
    decode,
    encode,
    papr,
    power_scale,
    read_csv,
    run_ser,
    snr_at_ser,
    square_qam,
    write_csv,
    write_metadata,
)

from oracles import JointMLDecoder

Q4 = square_qam(4)
Q16 = square_qam(16)


def rayleigh(rng, n, r=1):
    return (rng.standard_normal((n, r)) + 1j * rng.standard_normal((n, r))) / np.sqrt(2)


class TestConstellations:
    @pytest.mark.parametrize("order", [4, 16, 64])
    def test_unit_average_energy(self, order):
        c = square_qam(order)
        assert np.mean(np.abs(c.points) ** 2) == pytest.approx(1.0, abs=1e-12)
        assert len(c.points) == order
        assert c.bits == int(np.log2(order))

    def test_lookup(self):
        assert constellation_by_name("qam16").label == "qam16"
        with pytest.raises(ValueError):
            constellation_by_name("psk8")


class TestEncode:
    def test_alamouti_example(self):
        cw = encode(scod_design(1), [1, 1j])
        assert np.allclose(cw, np.array([[1, 1j], [1j, 1]]))

    def test_zero_symbols(self):
        assert np.allclose(encode(scod_design(2), [0, 0, 0]), 0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            encode(scod_design(1), [1])

    @pytest.mark.parametrize("a", [1, 2, 3])
    def test_energy_identity(self, a):
        # Frobenius norm^2 == n * sum |s_k|^2 for every orthogonal design
        rng = np.random.default_rng(5)
        for d in (scod_design(a), nzcod_design(a)):
            for _ in range(1000):
                s = rng.standard_normal(d.k) + 1j * rng.standard_normal(d.k)
                cw = encode(d, s)
                assert np.linalg.norm(cw) ** 2 == pytest.approx(
                    d.n * np.sum(np.abs(s) ** 2), rel=1e-9)


class TestPowerAccounting:
    def test_alamouti_papr_one(self):
        assert papr(scod_design(1), Q4) == pytest.approx(1.0, abs=1e-12)

    def test_g3_papr_two(self):
        assert papr(scod_design(3), Q4) == pytest.approx(2.0, abs=1e-12)

    def test_l3_papr_one(self):
        assert papr(nzcod_design(3), Q4) == pytest.approx(1.0, abs=1e-12)

    def test_papr_ratio_g4_l4(self):
        assert papr(scod_design(4), Q16) / papr(nzcod_design(4), Q16) == \
            pytest.approx(2.0, abs=1e-9)

    def test_peak_scale_ordering(self):
        g4 = power_scale(scod_design(4), Q16, PowerConstraint.PEAK)
        l4 = power_scale(nzcod_design(4), Q16, PowerConstraint.PEAK)
        assert g4 < l4

    def test_average_scales_equal(self):
        g = power_scale(scod_design(4), Q16, PowerConstraint.AVERAGE)
        l = power_scale(nzcod_design(4), Q16, PowerConstraint.AVERAGE)
        assert g == pytest.approx(l, rel=1e-12)
        assert g == pytest.approx(1 / np.sqrt(5), rel=1e-9)

    def test_constant_envelope_scales_coincide(self):
        avg = power_scale(scod_design(1), Q4, PowerConstraint.AVERAGE)
        peak = power_scale(scod_design(1), Q4, PowerConstraint.PEAK)
        assert avg == pytest.approx(peak, rel=1e-12)


class TestDecode:
    def test_noiseless_round_trip(self):
        rng = np.random.default_rng(0)
        for d in (scod_design(1), load_design("l2"), nzcod_design(3)):
            for _ in range(20):
                s = Q4.points[rng.integers(0, 4, d.k)]
                H = rayleigh(rng, d.n)
                Y = 0.5 * encode(d, s) @ H
                assert np.allclose(decode(d, Y, H, Q4, beta=0.5), s)

    def test_rejects_non_orthogonal(self):
        broken = scod_design(1).with_entry(0, 1, EntryForm.variable(1))
        assert not verify_orthogonality(broken).ok
        with pytest.raises(ValueError):
            decode(broken, np.zeros((2, 1)), np.ones((2, 1)), Q4)

    @pytest.mark.parametrize("design,trials", [(scod_design(1), 300),
                                               (load_design("l2"), 150)])
    def test_matches_joint_ml(self, design, trials):
        # noisy draws around the SNR where errors actually happen
        rng = np.random.default_rng(11)
        beta = power_scale(design, Q4, PowerConstraint.AVERAGE)
        oracle = JointMLDecoder(design, Q4, beta)
        for _ in range(trials):
            s = Q4.points[rng.integers(0, 4, design.k)]
            H = rayleigh(rng, design.n)
            noise = rayleigh(rng, design.n) * 0.4
            Y = beta * encode(design, s) @ H + noise
            assert decode(design, Y, H, Q4, beta) == pytest.approx(
                oracle.decode(Y, H))


class TestRunSer:
    def make_config(self, **overrides):
        base = dict(code="scod", design=scod_design(1), constellation=Q4,
                    constraint=PowerConstraint.AVERAGE,
                    snr_grid_db=(0.0, 8.0, 16.0), trials_per_point=4000, seed=9)
        base.update(overrides)
        return SimConfig(**base)

    def test_seed_determinism(self):
        c1 = run_ser(self.make_config())
        c2 = run_ser(self.make_config())
        assert [(p.snr_db, p.symbol_errors) for p in c1.points] == \
            [(p.snr_db, p.symbol_errors) for p in c2.points]

    def test_seed_changes_draws(self):
        c1 = run_ser(self.make_config())
        c2 = run_ser(self.make_config(seed=10))
        assert [p.symbol_errors for p in c1.points] != \
            [p.symbol_errors for p in c2.points]

    def test_ser_decreases_with_snr(self):
        curve = run_ser(self.make_config())
        sers = [p.ser for p in curve.points]
        assert sers[0] > sers[-1]

    def test_high_snr_is_error_free(self):
        curve = run_ser(self.make_config(snr_grid_db=(60.0,),
                                         trials_per_point=10_000))
        assert curve.points[0].symbol_errors == 0

    def test_ser_normalization(self):
        cfg = self.make_config(trials_per_point=1000)
        curve = run_ser(cfg)
        for p in curve.points:
            assert p.ser == p.symbol_errors / (1000 * cfg.design.k)

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            self.make_config(snr_grid_db=(3.0, 1.0))


class TestArtifacts:
    def test_csv_round_trip(self, tmp_path):
        cfg = TestRunSer().make_config(trials_per_point=500)
        curve = run_ser(cfg)
        path = tmp_path / "out.csv"
        write_csv([curve], path)
        write_metadata([cfg], tmp_path / "out.meta.json")
        [back] = read_csv(path)
        assert back.code == curve.code
        assert [(p.snr_db, p.symbol_errors, p.trials, p.ser) for p in back.points] \
            == [(p.snr_db, p.symbol_errors, p.trials, p.ser) for p in curve.points]
        meta = json.loads((tmp_path / "out.meta.json").read_text())
        assert meta[0]["seed"] == cfg.seed
        assert "snr_definition" in meta[0]

    def test_csv_header_guard(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("nope\n")
        with pytest.raises(ValueError):
            read_csv(bad)


def test_snr_at_ser_interpolation():
    from nzcod.simulate import SerCurve, SerPoint

    curve = SerCurve(code="x", antennas=2, constellation="qam4",
                     constraint="avg",
                     points=[SerPoint(0, 100, 1000, 1e-1),
                             SerPoint(10, 10, 1000, 1e-2),
                             SerPoint(20, 1, 1000, 1e-3)])
    assert snr_at_ser(curve, 1e-2) == pytest.approx(10.0)
    assert snr_at_ser(curve, 10 ** -1.5) == pytest.approx(5.0)
    assert snr_at_ser(curve, 1e-9) is None
