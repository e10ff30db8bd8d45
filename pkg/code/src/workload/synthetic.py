#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  synthetic.py

@Time    :  2025-08-10 14:05:52

@Desc    :  合成负载生成 (桌面规模的重尾负载, 用来代替一整天的 Google trace)
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any

import numpy as np
from loguru import logger

from utils.sim_error import ConfigurationError
from workload.task import Task, Workload


class ArrivalProcess(Enum):
    """到达过程"""
    POISSON = "poisson"
    DETERMINISTIC = "deterministic"


class SizeDistribution(Enum):
    """任务 CPU 需求分布"""
    EXPONENTIAL = "exponential"
    BOUNDED_PARETO = "bounded_pareto"
    DETERMINISTIC = "deterministic"


class JobGrouping(Enum):
    """每个作业包含的任务数"""
    FIXED = "fixed"
    GEOMETRIC = "geometric"


def _covert_enum(enum_cls, raw: Any):
    try:
        return enum_cls(str(raw).strip().lower())
    except ValueError as e:
        raise ConfigurationError(f"Invalid {enum_cls.__name__}: {raw}") from e


def _require_positive(name: str, value: float | None) -> float:
    if value is None or not float(value) > 0 or not np.isfinite(float(value)):
        raise ConfigurationError(f"{name} must be strictly positive, got {value}")
    return float(value)


@dataclass(frozen=True, slots=True)
class ArrivalSpec:
    process: ArrivalProcess
    rate: float | None = None
    interval: float | None = None

    def __post_init__(self):
        if self.process is ArrivalProcess.POISSON:
            _require_positive("poisson rate", self.rate)
        else:
            _require_positive("deterministic interval", self.interval)

    @classmethod
    def poisson(cls, rate: float) -> "ArrivalSpec":
        return cls(ArrivalProcess.POISSON, rate=rate)

    @classmethod
    def deterministic(cls, interval: float) -> "ArrivalSpec":
        return cls(ArrivalProcess.DETERMINISTIC, interval=interval)


@dataclass(frozen=True, slots=True)
class SizeSpec:
    distribution: SizeDistribution
    mean: float | None = None
    alpha: float | None = None
    lower: float | None = None
    upper: float | None = None
    value: float | None = None

    def __post_init__(self):
        if self.distribution is SizeDistribution.EXPONENTIAL:
            _require_positive("exponential mean", self.mean)
        elif self.distribution is SizeDistribution.BOUNDED_PARETO:
            _require_positive("bounded_pareto alpha", self.alpha)
            lower = _require_positive("bounded_pareto lower", self.lower)
            upper = _require_positive("bounded_pareto upper", self.upper)
            if not lower < upper:
                raise ConfigurationError(f"bounded_pareto requires lower < upper, got {lower} >= {upper}")
        else:
            _require_positive("deterministic value", self.value)

    @classmethod
    def exponential(cls, mean: float) -> "SizeSpec":
        return cls(SizeDistribution.EXPONENTIAL, mean=mean)

    @classmethod
    def bounded_pareto(cls, alpha: float, lower: float, upper: float) -> "SizeSpec":
        return cls(SizeDistribution.BOUNDED_PARETO, alpha=alpha, lower=lower, upper=upper)

    @classmethod
    def deterministic(cls, value: float) -> "SizeSpec":
        return cls(SizeDistribution.DETERMINISTIC, value=value)

    def theoretical_mean(self) -> float:
        """分布的理论均值"""
        if self.distribution is SizeDistribution.EXPONENTIAL:
            return self.mean
        if self.distribution is SizeDistribution.DETERMINISTIC:
            return self.value
        alpha, lower, upper = self.alpha, self.lower, self.upper
        norm = 1.0 - (lower / upper) ** alpha
        if alpha == 1.0:
            return lower * np.log(upper / lower) / norm
        return (alpha * lower ** alpha / norm) * (upper ** (1 - alpha) - lower ** (1 - alpha)) / (1 - alpha)


@dataclass(frozen=True, slots=True)
class JobSizeSpec:
    grouping: JobGrouping
    k: int | None = None
    mean: float | None = None

    def __post_init__(self):
        if self.grouping is JobGrouping.FIXED:
            if self.k is None or int(self.k) != self.k or self.k < 1:
                raise ConfigurationError(f"fixed tasks_per_job must be an integer >= 1, got {self.k}")
        else:
            mean = _require_positive("geometric tasks_per_job mean", self.mean)
            if mean < 1:
                raise ConfigurationError(f"geometric tasks_per_job mean must be >= 1, got {mean}")

    @classmethod
    def fixed(cls, k: int) -> "JobSizeSpec":
        return cls(JobGrouping.FIXED, k=k)

    @classmethod
    def geometric(cls, mean: float) -> "JobSizeSpec":
        return cls(JobGrouping.GEOMETRIC, mean=mean)


@dataclass(frozen=True, slots=True)
class SyntheticSpec:
    """合成负载描述, 给定 seed 时生成结果完全确定"""
    arrival: ArrivalSpec
    size: SizeSpec
    tasks_per_job: JobSizeSpec = field(default_factory=lambda: JobSizeSpec.fixed(1))
    total_tasks: int = 100_000
    seed: int = 1

    def __post_init__(self):
        if int(self.total_tasks) != self.total_tasks or self.total_tasks < 1:
            raise ConfigurationError(f"total_tasks must be an integer >= 1, got {self.total_tasks}")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigurationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def with_seed(self, seed: int) -> "SyntheticSpec":
        return replace(self, seed=seed)

    @classmethod
    def default_heavy_tailed(cls, total_tasks: int = 100_000, seed: int = 1) -> "SyntheticSpec":
        """默认重尾负载: 泊松到达, 有界 Pareto(1.5, 1, 1e4) 需求, 几何分布 (均值 5) 的作业大小"""
        return cls(arrival=ArrivalSpec.poisson(4.0),
                   size=SizeSpec.bounded_pareto(1.5, 1.0, 1.0e4),
                   tasks_per_job=JobSizeSpec.geometric(5.0),
                   total_tasks=total_tasks,
                   seed=seed)

    @classmethod
    def from_mapping(cls, mapping: dict[str, Any]) -> "SyntheticSpec":
        """从配置映射构造 (YAML 中的 synthetic 块)
        Args:
            mapping: 形如 {arrival: {process, rate|interval}, size: {distribution, ...},
                     tasks_per_job: {kind, k|mean}, total_tasks, seed}
        Returns:
            SyntheticSpec: 校验过的描述
        """
        if "synthetic" in mapping and isinstance(mapping["synthetic"], dict):
            mapping = mapping["synthetic"]
        try:
            arrival_map = dict(mapping["arrival"])
            size_map = dict(mapping["size"])
        except (KeyError, TypeError) as e:
            raise ConfigurationError(f"synthetic spec needs 'arrival' and 'size' mappings: {e}") from e
        grouping_map = dict(mapping.get("tasks_per_job", {"kind": "fixed", "k": 1}))

        process = _covert_enum(ArrivalProcess, arrival_map.get("process"))
        arrival = ArrivalSpec(process, rate=arrival_map.get("rate"), interval=arrival_map.get("interval"))

        distribution = _covert_enum(SizeDistribution, size_map.get("distribution"))
        size = SizeSpec(distribution,
                        mean=size_map.get("mean"),
                        alpha=size_map.get("alpha"),
                        lower=size_map.get("lower"),
                        upper=size_map.get("upper"),
                        value=size_map.get("value"))

        grouping = _covert_enum(JobGrouping, grouping_map.get("kind"))
        tasks_per_job = JobSizeSpec(grouping, k=grouping_map.get("k"), mean=grouping_map.get("mean"))

        return cls(arrival=arrival,
                   size=size,
                   tasks_per_job=tasks_per_job,
                   total_tasks=int(mapping.get("total_tasks", 100_000)),
                   seed=int(mapping.get("seed", 1)))

    def to_mapping(self) -> dict[str, Any]:
        arrival = {"process": self.arrival.process.value}
        if self.arrival.process is ArrivalProcess.POISSON:
            arrival["rate"] = self.arrival.rate
        else:
            arrival["interval"] = self.arrival.interval

        size = {"distribution": self.size.distribution.value}
        if self.size.distribution is SizeDistribution.EXPONENTIAL:
            size["mean"] = self.size.mean
        elif self.size.distribution is SizeDistribution.BOUNDED_PARETO:
            size.update(alpha=self.size.alpha, lower=self.size.lower, upper=self.size.upper)
        else:
            size["value"] = self.size.value

        grouping = {"kind": self.tasks_per_job.grouping.value}
        if self.tasks_per_job.grouping is JobGrouping.FIXED:
            grouping["k"] = int(self.tasks_per_job.k)
        else:
            grouping["mean"] = self.tasks_per_job.mean

        return {"arrival": arrival, "size": size, "tasks_per_job": grouping,
                "total_tasks": int(self.total_tasks), "seed": int(self.seed)}


class SyntheticWorkloadGenerator:
    """按 SyntheticSpec 生成负载"""

    def __init__(self, spec: SyntheticSpec):
        self._spec = spec
        self._rng = np.random.default_rng(spec.seed)

    def generate(self) -> Workload:
        spec = self._spec
        total = int(spec.total_tasks)

        # 抽样顺序固定: 到达间隔 -> 需求 -> 作业大小
        arrivals = self.__draw_arrivals(total)
        demands = self.__draw_demands(total)
        job_sizes = self.__draw_job_sizes(total)

        tasks = []
        index = 0
        for job_index, job_size in enumerate(job_sizes):
            for task_index in range(job_size):
                tasks.append(Task(f"j{job_index}", f"t{task_index}", arrivals[index], demands[index]))
                index += 1

        workload = Workload(tasks)
        logger.info("合成负载生成完成: {} 个任务, {} 个作业, seed={}", len(workload), len(job_sizes), spec.seed)
        logger.debug("需求样本均值 {:.4f}, 理论均值 {:.4f}", float(np.mean(demands)), spec.size.theoretical_mean())
        return workload

    def __draw_arrivals(self, total: int) -> list[float]:
        arrival = self._spec.arrival
        if arrival.process is ArrivalProcess.DETERMINISTIC:
            return (np.arange(total, dtype=np.float64) * arrival.interval).tolist()
        gaps = self._rng.exponential(1.0 / arrival.rate, size=total - 1)
        return np.concatenate(([0.0], np.cumsum(gaps))).tolist()

    def __draw_demands(self, total: int) -> list[float]:
        size = self._spec.size
        if size.distribution is SizeDistribution.DETERMINISTIC:
            return [float(size.value)] * total
        if size.distribution is SizeDistribution.EXPONENTIAL:
            demands = self._rng.exponential(size.mean, size=total)
            # 需求必须严格为正
            demands[demands <= 0.0] = np.finfo(np.float64).tiny
            return demands.tolist()

        # 有界 Pareto 逆变换抽样, 结果落在 [lower, upper)
        uniforms = self._rng.random(total)
        tail = 1.0 - (size.lower / size.upper) ** size.alpha
        demands = size.lower * (1.0 - uniforms * tail) ** (-1.0 / size.alpha)
        return demands.tolist()

    def __draw_job_sizes(self, total: int) -> list[int]:
        grouping = self._spec.tasks_per_job
        sizes = []
        remaining = total
        while remaining > 0:
            if grouping.grouping is JobGrouping.FIXED:
                batch = np.full(max(1, remaining // int(grouping.k) + 1), int(grouping.k))
            else:
                batch = self._rng.geometric(1.0 / grouping.mean, size=max(16, int(remaining / grouping.mean) + 1))
            for job_size in batch.tolist():
                job_size = min(int(job_size), remaining)
                sizes.append(job_size)
                remaining -= job_size
                if remaining == 0:
                    break
        return sizes


def generate_synthetic(spec: SyntheticSpec) -> Workload:
    """生成合成负载, 是 spec (含 seed) 的纯函数"""
    return SyntheticWorkloadGenerator(spec).generate()
