#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  result_table.py

@Time    :  2025-08-17 09:20:54

@Desc    :  结果汇总: 跨种子聚合, 固定预算检查, 最优阈值
"""
from collections import defaultdict
from typing import Iterable

import pandas as pd
from loguru import logger

from experiments.run_point import RunResult
from metrics.summary_export import summary_frame
from utils.sim_error import ValidationFailure

POINT_KEYS = ["shape", "policy", "n", "rho", "theta_s"]
METRIC_COLUMNS = ["mrt_s", "mjs", "p50_r", "p90_r", "p99_r", "p50_s", "p90_s", "p99_s"]
BUDGET_TOLERANCE = 1e-12


def runs_frame(results: Iterable[RunResult]) -> pd.DataFrame:
    """每次运行一行, 列同汇总 CSV"""
    return summary_frame(result.row for result in results)


def point_table(runs: pd.DataFrame) -> pd.DataFrame:
    """按网格点聚合各种子的结果

    指标取均值; 多于一个种子时另加 `<指标>_std` 列 (样本标准差)
    """
    grouped = runs.groupby(POINT_KEYS, sort=False, dropna=False)
    table = grouped[["mu", "jobs", "tasks"] + METRIC_COLUMNS].mean()
    seeds = grouped.size()
    table.insert(0, "seeds", seeds)
    if int(seeds.max()) > 1:
        dispersion = grouped[METRIC_COLUMNS].std(ddof=1).add_suffix("_std")
        table = table.join(dispersion)
    return table.reset_index()


def check_fixed_budget(results: Iterable[RunResult], tolerance: float = BUDGET_TOLERANCE) -> float:
    """同一种子、同一目标负载下的所有运行必须有相同的 N·μ

    Returns:
        float: 最大相对偏差
    """
    budgets = defaultdict(list)
    for result in results:
        budgets[(result.point.seed, result.point.rho)].append(result.budget)

    worst = 0.0
    for (seed, rho), values in budgets.items():
        reference = values[0]
        deviation = max(abs(value - reference) / reference for value in values)
        worst = max(worst, deviation)
        if deviation >= tolerance:
            logger.error("固定预算被破坏: seed={}, rho={}, 相对偏差 {}", seed, rho, deviation)
            raise ValidationFailure(f"fixed budget violated for seed {seed}, rho {rho}: relative deviation {deviation}")
    logger.debug("固定预算检查通过, 最大相对偏差 {}", worst)
    return worst


def best_theta(table: pd.DataFrame) -> pd.DataFrame:
    """每个 N 下 MRT 最小的阈值"""
    two_stage = table[table["theta_s"].notna()]
    best_index = two_stage.groupby("n", sort=True)["mrt_s"].idxmin()
    return two_stage.loc[best_index, ["n", "theta_s", "mrt_s", "mjs"]].reset_index(drop=True)


def rank_configurations(table: pd.DataFrame) -> pd.DataFrame:
    """按 MRT 升序排列, 加上名次列"""
    ranked = table.sort_values(["mrt_s"] + POINT_KEYS, kind="mergesort", na_position="first").reset_index(drop=True)
    ranked.insert(0, "rank", range(1, len(ranked) + 1))
    return ranked
