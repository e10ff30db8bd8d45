#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  stage_service.py

@Time    :  2025-08-13 14:22:51

@Desc    :  两阶段系统中任务在各阶段的服务规则
"""
from typing import NamedTuple

from architecture.system_shape import MigrationMode
from engine.sim_time import SimTime, rescale_ns, service_ns
from workload.task import Task


class StagePath(NamedTuple):
    """任务在两阶段系统中的路径

    Attributes:
        stage1_ns: 第 1 阶段占用服务器的时间, 即 min(X, θ)
        migrated: 是否迁移到第 2 阶段
        stage2_ns: 第 2 阶段的服务时间, 未迁移时为 0
    """
    stage1_ns: SimTime
    migrated: bool
    stage2_ns: SimTime


def stage1_serve(task: Task,
                 stage1_speed: float,
                 theta_ns: SimTime,
                 mode: MigrationMode = MigrationMode.RESUME,
                 stage2_speed: float | None = None) -> StagePath:
    """第 1 阶段: 最多服务 θ, X <= θ 时完成并离开, 否则在 θ 时刻迁移

    Args:
        task: 任务
        stage1_speed: μ1
        theta_ns: 阈值 θ, 纳秒
        mode: 续做 / 重做
        stage2_speed: μ2, 默认与 μ1 相同
    Returns:
        StagePath: 该任务的阶段路径
    """
    if theta_ns <= 0:
        raise ValueError(f"theta must be > 0, got {theta_ns} ns")
    stage2_speed = stage1_speed if stage2_speed is None else stage2_speed

    full_ns = service_ns(task.cpu_demand, stage1_speed)
    if full_ns <= theta_ns:
        # 恰好等于 θ 也算在阈值内完成
        return StagePath(full_ns, False, 0)

    if mode is MigrationMode.RESTART:
        return StagePath(theta_ns, True, service_ns(task.cpu_demand, stage2_speed))
    return StagePath(theta_ns, True, rescale_ns(full_ns - theta_ns, stage1_speed, stage2_speed))


def stage2_serve(path: StagePath) -> SimTime:
    """第 2 阶段: FCFS 非抢占地服务剩余工作量"""
    if not path.migrated:
        raise ValueError("only migrated tasks are served at stage 2")
    return path.stage2_ns
