"""Monte Carlo symbol-error-rate engine for quasi-static Rayleigh fading.

Channel model: the channel matrix H (transmit x receive antennas) has
i.i.d. unit-variance complex Gaussian entries, stays constant over one
code block and is known at the receiver; noise is i.i.d. complex Gaussian.

Power normalization: both constraints are referred to the same
per-antenna-per-use power budget 1/n (total budget 1 per channel use).
Under the average constraint the scale beta makes the mean transmitted
power hit the budget; under the peak constraint beta caps the worst-case
instantaneous per-entry power at the budget, so designs with zeros or
uneven entry magnitudes transmit less average power.  SNR on the grid is
defined as budget energy per channel use over the noise variance per
receive antenna: sigma^2 = 10**(-snr_db/10).

Decoding: orthogonality makes the ML metric separate per real coordinate.
Each coordinate is estimated by a matched filter and sliced to the nearest
PAM level, which coincides with exhaustive joint ML for square QAM.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .design import DesignMatrix, extract_dispersion, verify_orthogonality

_CHUNK = 8192

SNR_DEFINITION = ("budget energy per channel use (1.0) divided by noise "
                  "variance per receive antenna")


# ---------------------------------------------------------------------------
# Constellations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constellation:
    label: str
    bits: int
    levels: tuple[float, ...]  # per-coordinate PAM levels, ascending

    @property
    def points(self) -> np.ndarray:
        lv = np.array(self.levels)
        return (lv[:, None] + 1j * lv[None, :]).ravel()

    @property
    def max_level(self) -> float:
        return max(abs(l) for l in self.levels)

    @property
    def coordinate_power(self) -> float:
        return float(np.mean(np.square(self.levels)))


def square_qam(order: int) -> Constellation:
    """Square M-QAM with unit average symbol energy."""
    side = int(round(order ** 0.5))
    if side * side != order or side < 2:
        raise ValueError("order must be a perfect even square (4, 16, 64, ...)")
    raw = np.arange(-(side - 1), side, 2, dtype=float)
    scale = np.sqrt(2.0 * np.mean(raw**2))
    levels = tuple(raw / scale)
    return Constellation(label=f"qam{order}", bits=order.bit_length() - 1,
                         levels=levels)


CONSTELLATIONS = {"qam4": 4, "qam16": 16, "qam64": 64}


def constellation_by_name(name: str) -> Constellation:
    if name not in CONSTELLATIONS:
        raise ValueError(f"unknown constellation {name!r}")
    return square_qam(CONSTELLATIONS[name])


# ---------------------------------------------------------------------------
# Config / results
# ---------------------------------------------------------------------------


class PowerConstraint(str, Enum):
    AVERAGE = "avg"
    PEAK = "peak"


@dataclass
class SimConfig:
    code: str  # label used in outputs
    design: DesignMatrix
    constellation: Constellation
    constraint: PowerConstraint
    snr_grid_db: tuple[float, ...]
    trials_per_point: int
    seed: int
    receive_antennas: int = 1

    def __post_init__(self) -> None:
        if self.trials_per_point < 1:
            raise ValueError("trials_per_point must be >= 1")
        if any(b <= a for a, b in zip(self.snr_grid_db, self.snr_grid_db[1:])):
            raise ValueError("snr grid must be strictly increasing")
        if self.receive_antennas < 1:
            raise ValueError("receive_antennas must be >= 1")

    def metadata(self) -> dict:
        return {
            "code": self.code,
            "antennas": self.design.n,
            "variables": self.design.k,
            "constellation": self.constellation.label,
            "constraint": self.constraint.value,
            "snr_grid_db": list(self.snr_grid_db),
            "trials_per_point": self.trials_per_point,
            "seed": self.seed,
            "receive_antennas": self.receive_antennas,
            "snr_definition": SNR_DEFINITION,
            "power_scale": power_scale(self.design, self.constellation,
                                       self.constraint),
        }


@dataclass
class SerPoint:
    snr_db: float
    symbol_errors: int
    trials: int
    ser: float


@dataclass
class SerCurve:
    code: str
    antennas: int
    constellation: str
    constraint: str
    points: list[SerPoint]


# ---------------------------------------------------------------------------
# Encoding and power accounting
# ---------------------------------------------------------------------------


def _coord_tensor(d: DesignMatrix) -> np.ndarray:
    return extract_dispersion(d).to_float_tensor()


def _coords_from_symbols(symbols: Sequence[complex]) -> np.ndarray:
    s = np.asarray(symbols)
    out = np.empty(2 * len(s))
    out[0::2] = s.real
    out[1::2] = s.imag
    return out


def encode(d: DesignMatrix, symbols: Sequence[complex]) -> np.ndarray:
    """Numeric codeword: substitute the symbol coordinates into the design."""
    if len(symbols) != d.k:
        raise ValueError(f"expected {d.k} symbols, got {len(symbols)}")
    return np.tensordot(_coords_from_symbols(symbols), _coord_tensor(d), axes=1)


def _entry_worst_power(coeffs: np.ndarray, max_level: float) -> float:
    """Max of |sum c_u r_u|^2 over r_u = +-max_level (box vertices)."""
    worst = 0.0
    for signs in itertools.product((1.0, -1.0), repeat=len(coeffs)):
        val = abs(np.dot(coeffs, signs)) * max_level
        worst = max(worst, val * val)
    return worst


def worst_entry_power(d: DesignMatrix, c: Constellation) -> float:
    tensor = _coord_tensor(d)
    worst = 0.0
    for i in range(d.n):
        for j in range(d.n):
            coeffs = tensor[:, i, j]
            nz = coeffs[coeffs != 0]
            if len(nz):
                worst = max(worst, _entry_worst_power(nz, c.max_level))
    return worst


def papr(d: DesignMatrix, c: Constellation) -> float:
    """Per-antenna peak-to-average power ratio, maximized over antennas
    (columns); peak over worst-case symbols, average over the constellation."""
    tensor = _coord_tensor(d)
    coord_power = c.coordinate_power
    worst_ratio = 0.0
    for j in range(d.n):
        peak = 0.0
        avg_energy = 0.0
        for i in range(d.n):
            coeffs = tensor[:, i, j]
            nz = coeffs[coeffs != 0]
            if not len(nz):
                continue
            peak = max(peak, _entry_worst_power(nz, c.max_level))
            avg_energy += float(np.sum(np.abs(nz) ** 2)) * coord_power
        worst_ratio = max(worst_ratio, peak / (avg_energy / d.n))
    return worst_ratio


def power_scale(d: DesignMatrix, c: Constellation,
                constraint: PowerConstraint) -> float:
    """Scale beta mapping the design onto the 1/n per-antenna-use budget."""
    budget = 1.0 / d.n
    if constraint is PowerConstraint.AVERAGE:
        tensor = _coord_tensor(d)
        col_avg = np.sum(np.abs(tensor) ** 2, axis=(0, 1)) * c.coordinate_power / d.n
        return float(np.sqrt(budget / np.mean(col_avg)))
    return float(np.sqrt(budget / worst_entry_power(d, c)))


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------


def _slice_levels(values: np.ndarray, levels: np.ndarray) -> np.ndarray:
    """Indices of the nearest PAM level for each value."""
    mids = (levels[1:] + levels[:-1]) / 2.0
    return np.searchsorted(mids, values)


def _decode_batch(tensor: np.ndarray, Y: np.ndarray, H: np.ndarray,
                  levels: np.ndarray, beta: float) -> np.ndarray:
    """Per-coordinate matched filter + slicer.

    tensor: (2k, n, n); Y: (B, n, r); H: (B, n, r).  Returns level indices
    of shape (B, 2k).
    """
    ch = np.einsum("unm,bmr->bunr", tensor, H)
    z = np.einsum("bunr,bnr->bu", ch.conj(), Y).real
    denom = beta * np.sum(np.abs(H) ** 2, axis=(1, 2))
    return _slice_levels(z / denom[:, None], levels)


def decode(d: DesignMatrix, Y: np.ndarray, H: np.ndarray, c: Constellation,
           beta: float = 1.0) -> list[complex]:
    """Single-symbol decoding of one received block.  Output coincides with
    exhaustive joint ML for orthogonal designs and square QAM."""
    if not verify_orthogonality(d).ok:
        raise ValueError("design is not orthogonal; separate decoding invalid")
    levels = np.array(c.levels)
    idx = _decode_batch(_coord_tensor(d), Y[None], H[None], levels, beta)[0]
    vals = levels[idx]
    return [complex(vals[2 * i], vals[2 * i + 1]) for i in range(d.k)]


# ---------------------------------------------------------------------------
# The Monte Carlo loop
# ---------------------------------------------------------------------------


def _point_rng(seed: int, point_index: int) -> np.random.Generator:
    # Per-point substream: reordering or parallelizing points cannot change
    # any point's draws.
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(point_index,))
    return np.random.Generator(np.random.Philox(ss))


def run_ser(cfg: SimConfig) -> SerCurve:
    if not verify_orthogonality(cfg.design).ok:
        raise ValueError("design is not orthogonal; separate decoding invalid")
    tensor = _coord_tensor(cfg.design)
    levels = np.array(cfg.constellation.levels)
    beta = power_scale(cfg.design, cfg.constellation, cfg.constraint)
    n, k, r = cfg.design.n, cfg.design.k, cfg.receive_antennas

    points = []
    for pi, snr_db in enumerate(cfg.snr_grid_db):
        rng = _point_rng(cfg.seed, pi)
        sigma = float(np.sqrt(10.0 ** (-snr_db / 10.0)))
        errors = 0
        remaining = cfg.trials_per_point
        while remaining > 0:
            batch = min(_CHUNK, remaining)
            remaining -= batch
            sent = rng.integers(0, len(levels), size=(batch, 2 * k))
            coords = levels[sent]
            H = (rng.standard_normal((batch, n, r))
                 + 1j * rng.standard_normal((batch, n, r))) / np.sqrt(2.0)
            X = np.einsum("bu,bunr->bnr", coords, np.einsum("unm,bmr->bunr", tensor, H))
            noise = (rng.standard_normal((batch, n, r))
                     + 1j * rng.standard_normal((batch, n, r))) * (sigma / np.sqrt(2.0))
            Y = beta * X + noise
            decided = _decode_batch(tensor, Y, H, levels, beta)
            wrong_coord = decided != sent
            symbol_wrong = wrong_coord[:, 0::2] | wrong_coord[:, 1::2]
            errors += int(symbol_wrong.sum())
        trials = cfg.trials_per_point
        points.append(SerPoint(snr_db=snr_db, symbol_errors=errors,
                               trials=trials, ser=errors / (trials * k)))
    return SerCurve(code=cfg.code, antennas=n,
                    constellation=cfg.constellation.label,
                    constraint=cfg.constraint.value, points=points)


def snr_at_ser(curve: SerCurve, target: float) -> Optional[float]:
    """SNR (dB) where the curve crosses the target SER, by log-linear
    interpolation between grid points; None when the curve never crosses."""
    pts = [(p.snr_db, p.ser) for p in curve.points if p.ser > 0]
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if y0 >= target >= y1 and y0 != y1:
            t = (np.log10(y0) - np.log10(target)) / (np.log10(y0) - np.log10(y1))
            return float(x0 + t * (x1 - x0))
    return None


# ---------------------------------------------------------------------------
# Artifacts
# ---------------------------------------------------------------------------

CSV_HEADER = "code,antennas,constellation,constraint,snr_db,trials,errors,ser"


def curve_csv_rows(curve: SerCurve) -> list[str]:
    return [
        f"{curve.code},{curve.antennas},{curve.constellation},{curve.constraint},"
        f"{p.snr_db:g},{p.trials},{p.symbol_errors},{p.ser:.10g}"
        for p in curve.points
    ]


def write_csv(curves: Sequence[SerCurve], path: Path | str) -> None:
    lines = [CSV_HEADER]
    for curve in curves:
        lines.extend(curve_csv_rows(curve))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_metadata(configs: Sequence[SimConfig], path: Path | str) -> None:
    payload = [cfg.metadata() for cfg in configs]
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def read_csv(path: Path | str) -> list[SerCurve]:
    lines = Path(path).read_text(encoding="utf-8").strip().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: unexpected CSV header")
    curves: dict[tuple, SerCurve] = {}
    for line in lines[1:]:
        code, antennas, constellation, constraint, snr, trials, errors, ser = \
            line.split(",")
        key = (code, antennas, constellation, constraint)
        if key not in curves:
            curves[key] = SerCurve(code=code, antennas=int(antennas),
                                   constellation=constellation,
                                   constraint=constraint, points=[])
        curves[key].points.append(SerPoint(
            snr_db=float(snr), symbol_errors=int(errors), trials=int(trials),
            ser=float(ser)))
    return list(curves.values())
