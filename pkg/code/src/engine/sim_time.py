#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  sim_time.py

@Time    :  2025-08-11 10:02:17

@Desc    :  整数纳秒仿真时钟与服务时间换算 (四舍五入到纳秒)
"""
from decimal import Context, Decimal, ROUND_HALF_UP

from utils.sim_error import ConfigurationError, SimTimeOverflowError
from workload.task import Task

type SimTime = int

NS_PER_SECOND = 1_000_000_000
MAX_SIM_TIME_NS: SimTime = 2 ** 63 - 1

_NS = Decimal(NS_PER_SECOND)
_ONE = Decimal(1)
_CONTEXT = Context(prec=50, rounding=ROUND_HALF_UP)


def _to_decimal(value: float) -> Decimal:
    return Decimal(repr(float(value)))


def _round_half_up(value: Decimal) -> int:
    return int(value.quantize(_ONE, rounding=ROUND_HALF_UP, context=_CONTEXT))


def check_sim_time(value: SimTime) -> SimTime:
    """超出 64 位有符号纳秒范围时报错, 不回绕"""
    if value > MAX_SIM_TIME_NS:
        raise SimTimeOverflowError(f"simulation time {value} ns exceeds {MAX_SIM_TIME_NS} ns")
    return value


def seconds_to_ns(seconds: float) -> SimTime:
    """秒转整数纳秒, 四舍五入 (half-up)"""
    if seconds < 0:
        raise ConfigurationError(f"negative time {seconds}")
    return check_sim_time(_round_half_up(_CONTEXT.multiply(_to_decimal(seconds), _NS)))


def ns_to_seconds(value: SimTime) -> float:
    return value / NS_PER_SECOND


def ns_to_str(value: SimTime) -> str:
    """纳秒转精确的十进制秒字符串, 例如 1500000000 -> '1.500000000'"""
    seconds, nanos = divmod(value, NS_PER_SECOND)
    return f"{seconds}.{nanos:09d}"


def service_ns(cpu_demand: float, speed: float) -> SimTime:
    """X = C/μ 换算为纳秒并四舍五入, 至少 1 ns

    Args:
        cpu_demand: CPU 需求, GNCU 秒
        speed: 服务器速率 μ, GNCU
    Returns:
        SimTime: 服务时间, 纳秒
    """
    if not speed > 0:
        raise ConfigurationError(f"server speed must be > 0, got {speed}")
    seconds = _CONTEXT.divide(_to_decimal(cpu_demand), _to_decimal(speed))
    return check_sim_time(max(1, _round_half_up(_CONTEXT.multiply(seconds, _NS))))


def service_time(task: Task, speed: float) -> SimTime:
    """任务在速率为 speed 的服务器上的服务时间, 纳秒"""
    return service_ns(task.cpu_demand, speed)


def rescale_ns(value: SimTime, from_speed: float, to_speed: float) -> SimTime:
    """把在 from_speed 上需要 value 纳秒的工作量换算到 to_speed 上, 至少 1 ns"""
    if from_speed == to_speed:
        return value
    ratio = _CONTEXT.divide(_to_decimal(from_speed), _to_decimal(to_speed))
    return check_sim_time(max(1, _round_half_up(_CONTEXT.multiply(Decimal(value), ratio))))
