#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  system_config.py

@Time    :  2025-08-13 09:40:36

@Desc    :  系统拓扑配置: 单阶段 N 台服务器, 或两阶段 N1 + N2 台服务器加阈值 θ
"""
import math
from dataclasses import dataclass, replace
from typing import Any

from architecture.system_shape import MigrationMode, SystemShape
from engine.sim_time import SimTime, seconds_to_ns
from policies.policy_type import JiqFallback, PolicyType
from utils.sim_error import ConfigurationError
from workload.workload_stats import WorkloadStats, derive_service_rate


@dataclass(frozen=True, slots=True)
class SystemConfig:
    """系统配置

    Attributes:
        shape: 单阶段 / 两阶段
        n_total: 服务器总数 N
        speed: 每台服务器的速率 μ (两阶段时为第 1 阶段速率)
        single_policy: 单阶段分派策略
        n_stage1: 第 1 阶段服务器数, 两阶段且未指定时平分
        theta: 第 1 阶段最多提供的服务时间, 秒
        stage1_policy: 第 1 阶段分派策略
        stage2_policy: 第 2 阶段分派策略
        migration_mode: 迁移后续做 (resume) 还是重做 (restart)
        jiq_fallback: JIQ 没有空闲服务器时的兜底方式
        stage2_speed_ratio: μ2 / μ1, 默认 1
    """
    shape: SystemShape
    n_total: int
    speed: float
    single_policy: PolicyType = PolicyType.RR
    n_stage1: int | None = None
    theta: float | None = None
    stage1_policy: PolicyType = PolicyType.RR
    stage2_policy: PolicyType = PolicyType.RR
    migration_mode: MigrationMode = MigrationMode.RESUME
    jiq_fallback: JiqFallback = JiqFallback.RANDOM
    stage2_speed_ratio: float = 1.0

    def __post_init__(self):
        # 允许传入字符串标签
        object.__setattr__(self, "shape", SystemShape.covert_from_str(self.shape))
        object.__setattr__(self, "single_policy", PolicyType.covert_from_str(self.single_policy))
        object.__setattr__(self, "stage1_policy", PolicyType.covert_from_str(self.stage1_policy))
        object.__setattr__(self, "stage2_policy", PolicyType.covert_from_str(self.stage2_policy))
        object.__setattr__(self, "migration_mode", MigrationMode.covert_from_str(self.migration_mode))
        object.__setattr__(self, "jiq_fallback", JiqFallback.covert_from_str(self.jiq_fallback))

        if int(self.n_total) != self.n_total:
            raise ConfigurationError(f"n_total must be an integer, got {self.n_total}")
        object.__setattr__(self, "n_total", int(self.n_total))
        if not (self.speed > 0 and math.isfinite(self.speed)):
            raise ConfigurationError(f"speed must be > 0, got {self.speed}")
        if not (self.stage2_speed_ratio > 0 and math.isfinite(self.stage2_speed_ratio)):
            raise ConfigurationError(f"stage2_speed_ratio must be > 0, got {self.stage2_speed_ratio}")

        if self.shape is SystemShape.SINGLE_STAGE:
            if self.n_total < 1:
                raise ConfigurationError(f"single_stage needs n_total >= 1, got {self.n_total}")
            return

        if self.n_stage1 is None:
            if self.n_total % 2 != 0:
                raise ConfigurationError(f"two_stage with equal split needs an even n_total, got {self.n_total}")
            object.__setattr__(self, "n_stage1", self.n_total // 2)
        if self.n_stage1 < 1 or self.n_total - self.n_stage1 < 1:
            raise ConfigurationError(
                f"two_stage needs at least one server per stage, got n_stage1={self.n_stage1}, n_total={self.n_total}")
        if self.theta is None or not (self.theta > 0 and math.isfinite(self.theta)):
            raise ConfigurationError(f"two_stage needs a finite theta > 0, got {self.theta}")
        if seconds_to_ns(self.theta) == 0:
            raise ConfigurationError(f"theta {self.theta} s rounds to 0 ns")

    @property
    def is_two_stage(self) -> bool:
        return self.shape is SystemShape.TWO_STAGE

    @property
    def n_stage2(self) -> int:
        return self.n_total - self.n_stage1 if self.is_two_stage else 0

    @property
    def stage1_speed(self) -> float:
        return self.speed

    @property
    def stage2_speed(self) -> float:
        return self.speed * self.stage2_speed_ratio

    @property
    def theta_ns(self) -> SimTime | None:
        return seconds_to_ns(self.theta) if self.is_two_stage else None

    @property
    def policy_label(self) -> str:
        """结果表中 policy 列的取值"""
        if self.is_two_stage:
            return f"{self.stage1_policy.tag}+{self.stage2_policy.tag}"
        return self.single_policy.tag

    def with_budget(self, stats: WorkloadStats, rho0: float) -> "SystemConfig":
        """按固定算力预算 N·μ = λC̄/ρ0 设置 μ"""
        return replace(self, speed=derive_service_rate(stats, self.n_total, rho0))

    @classmethod
    def from_mapping(cls, mapping: dict[str, Any]) -> "SystemConfig":
        """从配置映射构造, 键与配置文件一致"""
        try:
            return cls(shape=mapping.get("shape", "single_stage"),
                       n_total=mapping["n_total"] if "n_total" in mapping else mapping["n"],
                       speed=float(mapping.get("speed", 1.0)),
                       single_policy=mapping.get("policy", "rr"),
                       n_stage1=mapping.get("n_stage1"),
                       theta=mapping.get("theta_s"),
                       stage1_policy=mapping.get("stage1_policy", "rr"),
                       stage2_policy=mapping.get("stage2_policy", "rr"),
                       migration_mode=mapping.get("migration", "resume"),
                       jiq_fallback=mapping.get("jiq_fallback", "random"),
                       stage2_speed_ratio=float(mapping.get("stage2_speed_ratio", 1.0)))
        except KeyError as e:
            raise ConfigurationError(f"system config is missing key {e}") from e
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigurationError):
                raise
            raise ConfigurationError(f"invalid system config: {e}") from e

    def to_mapping(self) -> dict[str, Any]:
        mapping = {
            "shape": self.shape.tag,
            "n_total": self.n_total,
            "speed": self.speed,
            "policy": self.single_policy.tag,
            "jiq_fallback": self.jiq_fallback.value,
        }
        if self.is_two_stage:
            mapping.update(n_stage1=self.n_stage1,
                           theta_s=self.theta,
                           stage1_policy=self.stage1_policy.tag,
                           stage2_policy=self.stage2_policy.tag,
                           migration=self.migration_mode.value,
                           stage2_speed_ratio=self.stage2_speed_ratio)
        return mapping
