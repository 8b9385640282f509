"""HTTP service wrapping the core package."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, validation
from ..construction import nzcod_design, scod_design
from ..corpus import load_design, verify_corpus
from ..design import DesignMatrix, classify_design
from ..notation import format_grid, print_design
from ..simulate import (
    CSV_HEADER,
    SNR_DEFINITION,
    PowerConstraint,
    SimConfig,
    constellation_by_name,
    curve_csv_rows,
    papr,
    power_scale,
    run_ser,
)
from . import schemas

app = FastAPI(title="nzcod", version=__version__,
              description="Construction, verification and simulation of "
                          "square orthogonal designs with no zero entries.")


def _build(kind: str, a: int) -> DesignMatrix:
    return nzcod_design(a) if kind == "nzcod" else scod_design(a)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/designs/generate", response_model=schemas.GenerateResponse)
def generate(req: schemas.GenerateRequest) -> schemas.GenerateResponse:
    design = _build(req.kind, req.a)
    out = schemas.GenerateResponse(a=req.a, kind=req.kind, antennas=design.n,
                                   variables=design.k)
    if req.format == "json":
        out.design = design.to_json_dict()
    elif req.format == "text":
        out.text = format_grid(design)
    else:
        out.text = print_design(design)
    return out


def _classification(design: DesignMatrix) -> schemas.ClassificationResponse:
    cls = classify_design(design)
    return schemas.ClassificationResponse(
        orthogonal=cls.orthogonal,
        failed_condition=cls.failed_condition,
        zero_count=cls.zero_count,
        is_cod=cls.is_cod,
        is_scaled_cod=cls.is_scaled_cod,
        is_cis_cod=cls.is_cis_cod,
        has_general_linear=cls.has_general_linear,
        interleaved_pairs=sorted(sorted(p) for p in cls.interleaved_pairs),
    )


def _design_from_wire(data: dict) -> DesignMatrix:
    try:
        return DesignMatrix.from_json_dict(data)
    except Exception as exc:
        raise HTTPException(status_code=422, detail=f"bad design payload: {exc}")


@app.post("/designs/classify", response_model=schemas.ClassificationResponse)
def classify(req: schemas.ClassifyRequest) -> schemas.ClassificationResponse:
    return _classification(_design_from_wire(req.design))


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    ceiling = validation.DEEP_CEILING if req.deep else validation.DEFAULT_CEILING
    if req.a > ceiling:
        raise HTTPException(status_code=422,
                            detail=f"a={req.a} needs deep=true (ceiling {ceiling})")
    reports = validation.check_all(req.a, deep=req.deep)
    return schemas.VerifyResponse(
        a=req.a,
        all_passed=all(r.passed for r in reports),
        reports=[schemas.CheckReportModel(name=r.name, a=r.a, passed=r.passed,
                                          detail=r.detail) for r in reports],
    )


@app.get("/tables/interleaver", response_model=schemas.Table1Response)
def table1() -> schemas.Table1Response:
    result = validation.reproduce_table1()
    return schemas.Table1Response(
        rows=[schemas.Table1RowModel(a=r.a, b=r.b, M=sorted(r.M),
                                     M_tilde=sorted(r.M_tilde),
                                     M_prime=sorted(r.M_prime))
              for r in result.rows],
        errata=[schemas.Table1ErratumModel(a=a, column=col, printed=sorted(p),
                                           computed=sorted(c))
                for a, col, p, c in result.errata],
        matches_up_to_errata=result.matches_up_to_errata,
    )


@app.get("/tables/zero-fraction", response_model=list[schemas.ZeroFractionRowModel])
def zero_fraction(a_max: int = 4) -> list[schemas.ZeroFractionRowModel]:
    if not 1 <= a_max <= validation.DEFAULT_CEILING:
        raise HTTPException(status_code=422, detail="a_max must be in [1, 8]")
    return [
        schemas.ZeroFractionRowModel(
            a=row.a,
            scod_fraction=str(row.scod_fraction),
            r_code_fraction=str(row.r_code_fraction),
            nzcod_fraction=str(row.nzcod_fraction),
            scod_fraction_float=float(row.scod_fraction),
        )
        for row in validation.zero_fraction_table(a_max)
    ]


@app.get("/corpus/reports", response_model=list[schemas.CorpusReportModel])
def corpus_reports() -> list[schemas.CorpusReportModel]:
    return [
        schemas.CorpusReportModel(name=r.name, passed=r.passed,
                                  transcription_suspect=r.transcription_suspect,
                                  details=r.details)
        for r in verify_corpus()
    ]


@app.post("/analyze", response_model=schemas.AnalyzeResponse)
def analyze(req: schemas.AnalyzeRequest) -> schemas.AnalyzeResponse:
    if req.design is not None:
        design = _design_from_wire(req.design)
    elif req.a is not None:
        design = _build(req.kind, req.a)
    else:
        raise HTTPException(status_code=422, detail="pass either a or design")
    c = constellation_by_name(req.constellation)
    cls = classify_design(design)
    return schemas.AnalyzeResponse(
        antennas=design.n,
        variables=design.k,
        rate=f"{design.k}/{design.n}",
        orthogonal=cls.orthogonal,
        zero_count=cls.zero_count,
        zero_fraction=cls.zero_count / (design.n * design.n),
        is_cod=cls.is_cod,
        is_scaled_cod=cls.is_scaled_cod,
        is_cis_cod=cls.is_cis_cod,
        interleaved_pairs=sorted(sorted(p) for p in cls.interleaved_pairs),
        constellation=c.label,
        papr=papr(design, c),
        power_scale_avg=power_scale(design, c, PowerConstraint.AVERAGE),
        power_scale_peak=power_scale(design, c, PowerConstraint.PEAK),
    )


@app.post("/simulate", response_model=schemas.SimulateResponse)
def simulate(req: schemas.SimulateRequest) -> schemas.SimulateResponse:
    if req.code == "r3":
        if req.a != 3:
            raise HTTPException(status_code=422,
                                detail="the r3 reference code requires a=3")
        design = load_design("r3")
    else:
        design = _build(req.code, req.a)
    try:
        cfg = SimConfig(code=req.code, design=design,
                        constellation=constellation_by_name(req.constellation),
                        constraint=PowerConstraint(req.constraint),
                        snr_grid_db=tuple(req.snr_grid_db),
                        trials_per_point=req.trials_per_point,
                        seed=req.seed, receive_antennas=req.receive_antennas)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    curve = run_ser(cfg)
    return schemas.SimulateResponse(
        code=curve.code,
        antennas=curve.antennas,
        constellation=curve.constellation,
        constraint=curve.constraint,
        power_scale=power_scale(cfg.design, cfg.constellation, cfg.constraint),
        snr_definition=SNR_DEFINITION,
        points=[schemas.SerPointModel(snr_db=p.snr_db, symbol_errors=p.symbol_errors,
                                      trials=p.trials, ser=p.ser)
                for p in curve.points],
        csv="\n".join([CSV_HEADER] + curve_csv_rows(curve)) + "\n",
    )
