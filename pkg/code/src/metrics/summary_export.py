#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  summary_export.py

@Time    :  2025-08-15 14:03:51

@Desc    :  运行汇总 CSV 的写出与读回
"""
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import pandas as pd
from loguru import logger

from metrics.job_metrics import MetricsSummary
from utils.sim_error import ExperimentIOError, TraceFormatError

SUMMARY_COLUMNS = ("run_id", "shape", "policy", "n", "mu", "rho", "theta_s", "mrt_s", "mjs",
                   "p50_r", "p90_r", "p99_r", "p50_s", "p90_s", "p99_s", "jobs", "tasks")


@dataclass(frozen=True, slots=True)
class SummaryRow:
    """汇总表的一行: 运行坐标 + 指标"""
    run_id: str
    shape: str
    policy: str
    n: int
    mu: float
    rho: float
    theta_s: float | None
    summary: MetricsSummary

    def to_row(self) -> dict:
        summary = self.summary
        return {"run_id": self.run_id, "shape": self.shape, "policy": self.policy, "n": self.n,
                "mu": self.mu, "rho": self.rho, "theta_s": self.theta_s,
                "mrt_s": summary.mrt, "mjs": summary.mjs,
                "p50_r": summary.p50_r, "p90_r": summary.p90_r, "p99_r": summary.p99_r,
                "p50_s": summary.p50_s, "p90_s": summary.p90_s, "p99_s": summary.p99_s,
                "jobs": summary.job_count, "tasks": summary.task_count}

    @classmethod
    def from_row(cls, row: dict) -> "SummaryRow":
        theta = row["theta_s"]
        summary = MetricsSummary(mrt=float(row["mrt_s"]), mjs=float(row["mjs"]),
                                 job_count=int(row["jobs"]), task_count=int(row["tasks"]),
                                 p50_r=float(row["p50_r"]), p90_r=float(row["p90_r"]), p99_r=float(row["p99_r"]),
                                 p50_s=float(row["p50_s"]), p90_s=float(row["p90_s"]), p99_s=float(row["p99_s"]))
        return cls(run_id=str(row["run_id"]), shape=str(row["shape"]), policy=str(row["policy"]),
                   n=int(row["n"]), mu=float(row["mu"]), rho=float(row["rho"]),
                   theta_s=None if theta is None or (isinstance(theta, float) and math.isnan(theta)) else float(theta),
                   summary=summary)


def summary_frame(rows: Iterable[SummaryRow]) -> pd.DataFrame:
    return pd.DataFrame([row.to_row() for row in rows], columns=list(SUMMARY_COLUMNS))


def export_summary(rows: Iterable[SummaryRow], path: str | Path, append: bool = False) -> Path:
    """写出汇总 CSV, 列顺序固定

    Args:
        rows: 汇总行, 可以为空 (只写表头)
        path: 输出文件
        append: 追加到已有文件, 已有内容时不再写表头
    Returns:
        Path: 输出文件路径
    """
    summary_path = Path(path)
    frame = summary_frame(rows)
    has_content = append and summary_path.exists() and summary_path.stat().st_size > 0
    try:
        summary_path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(summary_path, mode="a" if has_content else "w", header=not has_content, index=False,
                     encoding="utf-8", lineterminator="\n", na_rep="")
    except OSError as e:
        logger.error("写出汇总 {} 失败: {}", summary_path, e)
        raise ExperimentIOError(f"cannot write summary {summary_path}: {e}") from e
    logger.debug("写出汇总 {} 行到 {}", len(frame), summary_path)
    return summary_path


def read_summaries(path: str | Path) -> list[SummaryRow]:
    """读回 export_summary 写出的文件"""
    summary_path = Path(path)
    try:
        frame = pd.read_csv(summary_path, dtype={"run_id": str, "shape": str, "policy": str},
                            float_precision="round_trip", encoding="utf-8")
    except FileNotFoundError as e:
        raise ExperimentIOError(f"summary file not found: {summary_path}") from e
    except OSError as e:
        raise ExperimentIOError(f"cannot read summary {summary_path}: {e}") from e

    if tuple(frame.columns) != SUMMARY_COLUMNS:
        raise TraceFormatError(f"unexpected summary columns in {summary_path}: {list(frame.columns)}")
    return [SummaryRow.from_row(row) for row in frame.to_dict(orient="records")]
