#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  workload_stats.py

@Time    :  2025-08-10 09:31:18

@Desc    :  负载统计量 (λ, C̄) 与固定算力预算下的单服务器速率 μ
"""
import math
from dataclasses import dataclass

from loguru import logger

from utils.sim_error import ConfigurationError, WorkloadStatsError
from workload.task import Workload


@dataclass(frozen=True, slots=True)
class WorkloadStats:
    """负载统计量

    Attributes:
        task_count: 任务总数
        job_count: 不同 job_id 的个数
        span: 最晚到达与最早到达之差, 秒
        lambda_rate: 平均任务到达率, 任务/秒 (span 为 0 时为 None)
        mean_cpu_demand: 平均 CPU 需求, GNCU 秒
    """
    task_count: int
    job_count: int
    span: float
    lambda_rate: float | None
    mean_cpu_demand: float

    def require_rate(self) -> float:
        """需要 λ 的实验模式调用, λ 无定义时报错"""
        if self.lambda_rate is None:
            raise WorkloadStatsError("arrival span is 0: all tasks arrive simultaneously, lambda is undefined")
        return self.lambda_rate

    @property
    def offered_work_rate(self) -> float:
        """λ·C̄, 单位时间到达的 GNCU 秒"""
        return self.require_rate() * self.mean_cpu_demand


def compute_stats(workload: Workload, require_rate: bool = True) -> WorkloadStats:
    """计算负载统计量

    λ 按 任务数 / 到达跨度 计算 (速率), 与 ρ = λC̄/(μN) 的量纲一致

    Args:
        workload: 非空负载
        require_rate: 为 True 时 span 为 0 直接报错
    Returns:
        WorkloadStats: 统计结果
    """
    tasks = workload.tasks
    task_count = len(tasks)
    span = tasks[-1].arrival - tasks[0].arrival
    total_demand = math.fsum(task.cpu_demand for task in tasks)
    job_count = len({task.job_id for task in tasks})

    lambda_rate = task_count / span if span > 0 else None
    if lambda_rate is None and require_rate:
        logger.error("负载的到达跨度为 0, 无法计算到达率")
        raise WorkloadStatsError("arrival span is 0: all tasks arrive simultaneously, lambda is undefined")

    stats = WorkloadStats(task_count=task_count,
                          job_count=job_count,
                          span=span,
                          lambda_rate=lambda_rate,
                          mean_cpu_demand=total_demand / task_count)
    logger.debug("负载统计: {}", stats)
    return stats


def derive_service_rate(stats: WorkloadStats, n_servers: int, rho0: float) -> float:
    """在目标负载 ρ0 下求单服务器速率 μ = λC̄ / (ρ0 N)

    Args:
        stats: 负载统计量
        n_servers: 服务器总数 N
        rho0: 目标负载, 开区间 (0, 1)
    Returns:
        float: 每台服务器的 GNCU 数
    """
    if not 0 < rho0 < 1:
        raise ConfigurationError(f"rho0 must lie in (0, 1), got {rho0}")
    if n_servers < 1:
        raise ConfigurationError(f"n_servers must be >= 1, got {n_servers}")
    return stats.offered_work_rate / (rho0 * n_servers)

