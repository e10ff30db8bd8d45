#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  dispatcher_factory.py

@Time    :  2025-08-12 15:40:58

@Desc    :  按策略标签构造分派器
"""
import numpy as np

from policies.dispatch_policy import DispatchPolicy
from policies.join_idle_queue import JiqState
from policies.least_work_left import LwlState
from policies.policy_type import JiqFallback, PolicyType
from policies.round_robin import RoundRobinState


def fallback_rng(seed: int, stage: int) -> np.random.Generator:
    """每个阶段一个独立的随机流, 由 (seed, stage) 唯一确定"""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(stage,)))


def make_dispatcher(policy: PolicyType,
                    n_servers: int,
                    seed: int = 0,
                    stage: int = 1,
                    fallback: JiqFallback = JiqFallback.RANDOM) -> DispatchPolicy:
    """构造分派器
    Args:
        policy: 策略
        n_servers: 该分派器管理的服务器数
        seed: 运行种子
        stage: 阶段编号, 用于区分随机流
        fallback: JIQ 兜底模式
    Returns:
        DispatchPolicy: 新的分派器状态
    """
    match PolicyType.covert_from_str(policy):
        case PolicyType.RR:
            return RoundRobinState(n_servers)
        case PolicyType.JIQ:
            return JiqState(n_servers, fallback_rng(seed, stage), JiqFallback.covert_from_str(fallback))
        case PolicyType.LWL:
            return LwlState(n_servers)
