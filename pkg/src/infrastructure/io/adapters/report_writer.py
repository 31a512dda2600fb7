"""
결과 파일 작성 어댑터

JSON 은 Python 의 최단 왕복 repr 로, CSV 는 17 유효숫자로 실수를 기록합니다.
같은 입력에 대해 파일 바이트가 항상 같도록 시각 정보는 넣지 않습니다.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence

import pandas as pd

from ....application.bootstrap.dto.bootstrap_dto import ConfidenceBand
from ....application.fitting.dto.fit_response_dto import (
    CurvePointDTO,
    ErrorDistributionDTO,
)
from ....application.fitting.services.bandwidth_comparison_service import BandwidthComparison
from ....application.simulation.dto.simulation_dto import MonteCarloReport
from .csv_dataset_adapter import FLOAT_FORMAT, PathLike

SCHEMA_VERSION = 1


def _point_label(t: float) -> str:
    return f"t={t:g}"


def write_json(path: PathLike, payload: Mapping[str, Any]) -> Path:
    """{"schema": 1, ...} JSON 저장"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    body = {"schema": SCHEMA_VERSION, **payload}
    target.write_text(json.dumps(body, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return target


def write_frame(path: PathLike, frame: pd.DataFrame) -> Path:
    """DataFrame 을 헤더 있는 CSV 로 저장"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(target, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return target


def fhat_frame(distribution: ErrorDistributionDTO) -> pd.DataFrame:
    return pd.DataFrame({"t": distribution.t, "F_hat": distribution.f_hat})


def curves_frame(curves: Sequence[CurvePointDTO]) -> pd.DataFrame:
    """x 격자 위 π̂, m̂, ŝ (정의되지 않으면 빈 칸)"""
    return pd.DataFrame(
        [curve.model_dump() for curve in curves],
        columns=["x", "pi_hat", "m_hat", "s_hat", "error"],
    )


def band_frame(band: ConfidenceBand) -> pd.DataFrame:
    return pd.DataFrame(band.rows(), columns=["t", "lower", "point", "upper"])


def comparison_frame(comparison: BandwidthComparison) -> pd.DataFrame:
    """t 열 다음에 규칙별 F̂ 열 ("F_hat[C,γ]")"""
    frame = pd.DataFrame({"t": comparison.grid})
    for label, curve in zip(comparison.labels, comparison.curves):
        frame[f"F_hat[{label}]"] = curve
    return frame


def _rule_columns(report: MonteCarloReport) -> Dict[str, Any]:
    return {"n": report.config.n, "C": report.config.c, "gamma": report.config.gamma}


def amse_table(reports: Sequence[MonteCarloReport]) -> pd.DataFrame:
    """
    AMSE 표 (행: n × (C, γ), 열: 평가 지점)

    Args:
        reports: n 다음 (C, γ) 순서의 보고서

    Returns:
        pd.DataFrame: n, C, gamma, t=... 열
    """
    rows: List[Dict[str, Any]] = []
    for report in reports:
        row = _rule_columns(report)
        row.update({_point_label(t): value for t, value in report.amse.items()})
        rows.append(row)
    return pd.DataFrame(rows)


def amise_table(reports: Sequence[MonteCarloReport]) -> pd.DataFrame:
    """
    AMISE 표 (행: (C, γ), 열: n)

    같은 (C, γ) 는 처음 등장한 순서를 유지합니다.
    """
    long = pd.DataFrame(
        [{**_rule_columns(report), "amise": report.amise} for report in reports],
        columns=["n", "C", "gamma", "amise"],
    )
    wide = long.pivot_table(index=["C", "gamma"], columns="n", values="amise", sort=False)
    wide.columns = [f"n={n}" for n in wide.columns]
    return wide.reset_index()


def simulation_payload(reports: Sequence[MonteCarloReport]) -> Dict[str, Any]:
    """report.json 본문"""
    return {
        "cells": [
            {
                "n": report.config.n,
                "C": report.config.c,
                "gamma": report.config.gamma,
                "runs": report.runs,
                "failures": report.failures,
                "failure_kinds": report.failure_kinds,
                "mean_bandwidth": report.mean_bandwidth,
                "amse": {_point_label(t): value for t, value in report.amse.items()},
                "amise": report.amise,
                "config": report.config.model_dump(),
            }
            for report in reports
        ]
    }
