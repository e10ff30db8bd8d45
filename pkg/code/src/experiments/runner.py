#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  runner.py

@Time    :  2025-08-17 14:15:48

@Desc    :  实验命令: 单次运行, 负载 / 服务器数 / 阈值扫描, 架构对比, 负载生成, 校验
"""
from collections import defaultdict
from pathlib import Path

import pandas as pd
from loguru import logger

from architecture.system_config import SystemConfig
from architecture.system_shape import SystemShape
from engine.completion_record import export_records
from engine.validation import ValidationReport
from experiments.experiment_kind import ExperimentKind
from experiments.experiment_spec import ExperimentSpec
from experiments.plotter import plot_lines
from experiments.point_pool import WorkloadProvider, run_points
from experiments.result_table import best_theta, check_fixed_budget, point_table, rank_configurations, runs_frame
from experiments.run_point import RunPoint, RunResult, simulate_point
from metrics.job_metrics import aggregate, job_table, utilization, write_frame
from metrics.summary_export import SummaryRow, export_summary
from utils.file_parse import write_yaml_file
from utils.sim_error import ConfigurationError
from workload.synthetic import SyntheticSpec, generate_synthetic
from workload.trace_loader import write_trace


def _arms(spec: ExperimentSpec, n: int, theta: float | None = None) -> list[SystemConfig]:
    """某个 N 下要比较的系统: 单阶段每个策略一个, 两阶段只有一个"""
    if spec.shape is SystemShape.SINGLE_STAGE:
        return [spec.system_config(SystemShape.SINGLE_STAGE, n, policy) for policy in spec.policies]
    return [spec.system_config(SystemShape.TWO_STAGE, n, theta=theta)]


def _provider(spec: ExperimentSpec) -> WorkloadProvider:
    return WorkloadProvider(spec.workload_source, spec.time_scale)


def _write_common(spec: ExperimentSpec, results: list[RunResult]) -> tuple[pd.DataFrame, pd.DataFrame]:
    out_dir = spec.out_dir
    write_yaml_file(out_dir / "run_config.yaml", spec.to_mapping())
    export_summary([result.row for result in results], out_dir / "runs.csv")
    runs = runs_frame(results)
    table = point_table(runs)
    write_frame(table, out_dir / "table.csv")
    return runs, table


def _run(spec: ExperimentSpec, points: list[RunPoint], log_level: str) -> list[RunResult]:
    logger.info("开始{}: {} 个网格点, 输出目录 {}", spec.kind.cn_name, len(points), spec.out_dir)
    return run_points(points, _provider(spec), spec.workers, log_level)


def _single_point(spec: ExperimentSpec) -> RunPoint:
    theta = spec.theta_s if spec.theta_s is not None else (spec.theta_grid[0] if spec.theta_grid else None)
    config = _arms(spec, spec.n, theta)[0]
    return RunPoint(config=config, rho=spec.rho0, seed=spec.seeds[0])


def cmd_simulate(spec: ExperimentSpec, log_level: str = "INFO") -> SummaryRow:
    """单次运行: 第一个策略, N0, ρ0, 第一个种子

    输出 records.csv, jobs.csv, servers.csv, summary.csv, run_config.yaml
    """
    point = _single_point(spec)
    workload, fingerprint = _provider(spec).workload_for(point.seed)
    output = simulate_point(point, workload)
    output.report.raise_if_dirty()

    out_dir = spec.out_dir
    config = output.config
    summary = aggregate(output.records, workload, config.stage1_speed, config.stage2_speed)
    row = SummaryRow(run_id=point.run_id, shape=config.shape.tag, policy=config.policy_label, n=config.n_total,
                     mu=config.speed, rho=point.rho, theta_s=config.theta, summary=summary)

    write_yaml_file(out_dir / "run_config.yaml", spec.to_mapping())
    export_records(output.records, out_dir / "records.csv")
    write_frame(job_table(output.records, workload, config.stage1_speed), out_dir / "jobs.csv")
    write_frame(utilization(output.servers, output.final_time), out_dir / "servers.csv")
    export_summary([row], out_dir / "summary.csv")
    logger.info("{}: MRT={:.4f}s MJS={:.3f} ({} 个作业, 负载指纹 {})",
                point.run_id, summary.mrt, summary.mjs, summary.job_count, fingerprint[:12])
    return row


def cmd_validate(spec: ExperimentSpec, log_level: str = "INFO") -> ValidationReport:
    """运行配置的系统并输出校验报告, 有违规时抛出 ValidationFailure"""
    point = _single_point(spec)
    workload, _ = _provider(spec).workload_for(point.seed)
    report = simulate_point(point, workload).report
    logger.info("{}: {}", point.run_id, report)
    report.raise_if_dirty()
    return report


def cmd_sweep_load(spec: ExperimentSpec, log_level: str = "INFO") -> pd.DataFrame:
    """固定 N0, 每个 ρ 取 μ = λC̄/(ρN0)"""
    points = [RunPoint(config=config, rho=rho, seed=seed)
              for seed in spec.seeds
              for rho in spec.effective_rho_grid
              for config in _arms(spec, spec.n, spec.theta_s)]
    results = _run(spec, points, log_level)
    _, table = _write_common(spec, results)
    if spec.plots:
        plot_lines(table, "rho", "mrt_s", "policy", spec.out_dir / "mrt_vs_load.svg",
                   f"MRT vs load (N={spec.n})", "load ρ", "MRT (s)")
    return table


def cmd_sweep_servers(spec: ExperimentSpec, log_level: str = "INFO") -> pd.DataFrame:
    """固定 ρ0, 每个 N 取 μ = λC̄/(ρ0 N), N·μ 在整张表中不变"""
    points = [RunPoint(config=config, rho=spec.rho0, seed=seed)
              for seed in spec.seeds
              for n in spec.effective_n_grid
              for config in _arms(spec, n, spec.theta_s)]
    results = _run(spec, points, log_level)
    check_fixed_budget(results)
    _, table = _write_common(spec, results)
    if spec.plots:
        plot_lines(table, "n", "mrt_s", "policy", spec.out_dir / "mrt_vs_servers.svg",
                   f"MRT vs number of servers (ρ0={spec.rho0:g})", "servers N", "MRT (s)", log_x=True)
        plot_lines(table, "n", "mjs", "policy", spec.out_dir / "slowdown_vs_servers.svg",
                   f"Mean job slowdown vs number of servers (ρ0={spec.rho0:g})", "servers N", "MJS", log_x=True)
    return table


def cmd_sweep_theta(spec: ExperimentSpec, log_level: str = "INFO") -> pd.DataFrame:
    """两阶段系统, 在 (θ, N) 网格上扫描, 输出每个 N 的最优阈值"""
    points = [RunPoint(config=spec.system_config(SystemShape.TWO_STAGE, n, theta=theta), rho=spec.rho0, seed=seed)
              for seed in spec.seeds
              for n in spec.effective_n_grid
              for theta in spec.effective_theta_grid]
    results = _run(spec, points, log_level)
    check_fixed_budget(results)
    _, table = _write_common(spec, results)
    write_frame(best_theta(table), spec.out_dir / "best_theta.csv")
    if spec.plots:
        plot_lines(table, "theta_s", "mrt_s", "n", spec.out_dir / "mrt_vs_theta.svg",
                   f"Two-stage MRT vs threshold (ρ0={spec.rho0:g})", "threshold θ (s)", "MRT (s)", log_x=True)
    return table


def _check_same_workload(results: list[RunResult]) -> None:
    fingerprints = defaultdict(set)
    for result in results:
        fingerprints[result.point.seed].add(result.workload_fingerprint)
    for seed, seen in fingerprints.items():
        if len(seen) > 1:
            logger.error("种子 {} 的各组实验使用了不同的负载", seed)
            raise ConfigurationError(f"mismatched workloads between arms for seed {seed}")


def cmd_compare_architectures(spec: ExperimentSpec, log_level: str = "INFO") -> pd.DataFrame:
    """同一负载, 同一 ρ0: 单阶段 (策略 × N) 对比两阶段 (θ × N), 按 MRT 排名"""
    points = []
    for seed in spec.seeds:
        for n in spec.effective_n_grid:
            points.extend(RunPoint(config=spec.system_config(SystemShape.SINGLE_STAGE, n, policy),
                                   rho=spec.rho0, seed=seed)
                          for policy in spec.policies)
            points.extend(RunPoint(config=spec.system_config(SystemShape.TWO_STAGE, n, theta=theta),
                                   rho=spec.rho0, seed=seed)
                          for theta in spec.effective_theta_grid)
    results = _run(spec, points, log_level)
    _check_same_workload(results)
    check_fixed_budget(results)
    _, table = _write_common(spec, results)
    ranked = rank_configurations(table)
    write_frame(ranked, spec.out_dir / "ranking.csv")
    best = ranked.iloc[0]
    logger.info("MRT 最优配置: {} {} N={} θ={} MRT={:.4f}s",
                best["shape"], best["policy"], best["n"], best["theta_s"], best["mrt_s"])
    return ranked


def cmd_generate(spec: ExperimentSpec, log_level: str = "INFO") -> Path:
    """按合成负载描述写出 trace CSV 到 <out>/workload.csv"""
    source = spec.workload_source
    if not isinstance(source, SyntheticSpec):
        raise ConfigurationError("generate needs a synthetic spec, not a trace")
    trace_path = write_trace(generate_synthetic(source), spec.out_dir / "workload.csv")
    logger.info("合成负载已写出到 {}", trace_path)
    return trace_path


COMMANDS = {
    ExperimentKind.SINGLE_RUN: cmd_simulate,
    ExperimentKind.SWEEP_LOAD: cmd_sweep_load,
    ExperimentKind.SWEEP_SERVERS: cmd_sweep_servers,
    ExperimentKind.SWEEP_THETA: cmd_sweep_theta,
    ExperimentKind.COMPARE: cmd_compare_architectures,
}


def run_experiment(spec: ExperimentSpec, log_level: str = "INFO"):
    """按 spec.kind 分发到对应命令"""
    return COMMANDS[spec.kind](spec, log_level)
