#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  system_builder.py

@Time    :  2025-08-13 16:05:39

@Desc    :  按配置组装服务器与分派器
"""
from dataclasses import dataclass

from loguru import logger

from architecture.system_config import SystemConfig
from engine.server import ServerState
from policies.dispatch_policy import DispatchPolicy
from policies.dispatcher_factory import make_dispatcher
from utils.sim_error import ConfigurationError


@dataclass(slots=True)
class Stage:
    """一个阶段: 一组同速服务器和它们前面的分派器"""
    index: int
    speed: float
    servers: list[ServerState]
    dispatcher: DispatchPolicy


@dataclass(slots=True)
class SystemWiring:
    config: SystemConfig
    stages: list[Stage]

    @property
    def stage1(self) -> Stage:
        return self.stages[0]

    @property
    def stage2(self) -> Stage | None:
        return self.stages[1] if len(self.stages) > 1 else None

    @property
    def servers(self) -> list[ServerState]:
        return [server for stage in self.stages for server in stage.servers]


def _build_stage(index: int, n_servers: int, speed: float, dispatcher: DispatchPolicy) -> Stage:
    if n_servers < 1:
        raise ConfigurationError(f"stage {index} has no servers")
    servers = [ServerState(id=server_id, stage=index, speed=speed) for server_id in range(n_servers)]
    return Stage(index=index, speed=speed, servers=servers, dispatcher=dispatcher)


def build_system(config: SystemConfig, seed: int = 0) -> SystemWiring:
    """单阶段: 一个分派器管 N 台服务器; 两阶段: 两个独立分派器分别管 N1 / N2 台

    Args:
        config: 已校验的系统配置
        seed: 运行种子, 决定 JIQ 兜底随机流
    Returns:
        SystemWiring: 一次运行专用的服务器和分派器状态
    """
    if not config.is_two_stage:
        dispatcher = make_dispatcher(config.single_policy, config.n_total, seed, 1, config.jiq_fallback)
        stages = [_build_stage(1, config.n_total, config.speed, dispatcher)]
    else:
        stage1_dispatcher = make_dispatcher(config.stage1_policy, config.n_stage1, seed, 1, config.jiq_fallback)
        stage2_dispatcher = make_dispatcher(config.stage2_policy, config.n_stage2, seed, 2, config.jiq_fallback)
        stages = [_build_stage(1, config.n_stage1, config.stage1_speed, stage1_dispatcher),
                  _build_stage(2, config.n_stage2, config.stage2_speed, stage2_dispatcher)]

    logger.debug("组装{}系统: {}", config.shape.cn_name, [len(stage.servers) for stage in stages])
    return SystemWiring(config=config, stages=stages)
