#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  run_point.py

@Time    :  2025-08-16 14:30:09

@Desc    :  实验网格中的一个点: 固定预算下配置系统, 仿真, 校验, 汇总
"""
import time
from dataclasses import dataclass

from loguru import logger

from architecture.system_config import SystemConfig
from engine.completion_record import CompletionRecord
from engine.server import ServerState
from engine.simulator import ClusterSimulator
from engine.validation import ValidationReport, validate_run
from metrics.job_metrics import aggregate
from metrics.summary_export import SummaryRow
from workload.task import Workload
from workload.workload_stats import compute_stats


@dataclass(frozen=True, slots=True)
class RunPoint:
    """网格点坐标

    Attributes:
        config: 系统配置模板, speed 在运行时按 rho 重新计算
        rho: 目标负载
        seed: 重复实验种子
    """
    config: SystemConfig
    rho: float
    seed: int

    @property
    def run_id(self) -> str:
        config = self.config
        theta = "na" if config.theta is None else f"{config.theta:g}"
        return f"{config.shape.tag}-{config.policy_label}-n{config.n_total}-rho{self.rho:g}-theta{theta}-s{self.seed}"


@dataclass(frozen=True, slots=True)
class RunResult:
    """一个网格点的结果, runtime_s 只写日志不进 CSV"""
    point: RunPoint
    config: SystemConfig
    row: SummaryRow
    runtime_s: float
    workload_fingerprint: str

    @property
    def budget(self) -> float:
        """N·μ"""
        return self.config.n_total * self.config.speed


@dataclass(slots=True)
class RunOutput:
    """单次运行的完整产出, simulate / validate 命令使用"""
    config: SystemConfig
    records: list[CompletionRecord]
    servers: list[ServerState]
    report: ValidationReport
    final_time: int


def simulate_point(point: RunPoint, workload: Workload) -> RunOutput:
    """按固定预算 μ = λC̄/(ρN) 配置系统后运行一次仿真, 并校验结果"""
    config = point.config.with_budget(compute_stats(workload), point.rho)
    simulator = ClusterSimulator(workload, config, point.seed)
    records = simulator.run()
    report = validate_run(records, workload, simulator.server_states)
    return RunOutput(config, records, simulator.server_states, report, simulator.final_time)


def execute_point(point: RunPoint, workload: Workload, fingerprint: str = "") -> RunResult:
    """运行一个网格点, 校验不通过时抛出 ValidationFailure"""
    started = time.perf_counter()
    output = simulate_point(point, workload)
    output.report.raise_if_dirty()

    config = output.config
    summary = aggregate(output.records, workload, config.stage1_speed, config.stage2_speed)
    row = SummaryRow(run_id=point.run_id,
                     shape=config.shape.tag,
                     policy=config.policy_label,
                     n=config.n_total,
                     mu=config.speed,
                     rho=point.rho,
                     theta_s=config.theta,
                     summary=summary)
    runtime_s = time.perf_counter() - started
    logger.info("{} 完成: MRT={:.4f}s MJS={:.3f}, 耗时 {:.2f}s", point.run_id, summary.mrt, summary.mjs, runtime_s)
    return RunResult(point=point, config=config, row=row, runtime_s=runtime_s, workload_fingerprint=fingerprint)
