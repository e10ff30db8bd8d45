#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  policy_type.py

@Time    :  2025-08-12 09:15:33

@Desc    :  调度策略与 JIQ 兜底模式枚举
"""
from enum import Enum

from utils.sim_error import ConfigurationError


class PolicyType(Enum):
    """分派策略"""
    RR = ("rr", "Round Robin")
    JIQ = ("jiq", "Join Idle Queue")
    LWL = ("lwl", "Least Work Left")

    @property
    def tag(self) -> str:
        return self.value[0]

    @property
    def full_name(self) -> str:
        return self.value[1]

    @classmethod
    def covert_from_str(cls, policy_str: str) -> "PolicyType":
        """将字符串策略标签转换为 PolicyType 枚举
        Args:
            policy_str: 策略标签, rr / jiq / lwl
        Returns:
            PolicyType: 对应的枚举
        """
        if isinstance(policy_str, PolicyType):
            return policy_str
        for member in cls:
            if member.tag == str(policy_str).strip().lower():
                return member
        raise ConfigurationError(f"Invalid PolicyType: {policy_str}")


class JiqFallback(Enum):
    """没有空闲服务器时 JIQ 的兜底选择方式"""
    RANDOM = "random"
    ROUND_ROBIN = "round_robin"

    @staticmethod
    def covert_from_str(fallback_str: str) -> "JiqFallback":
        if isinstance(fallback_str, JiqFallback):
            return fallback_str
        try:
            return JiqFallback(str(fallback_str).strip().lower())
        except ValueError as e:
            raise ConfigurationError(f"Invalid JiqFallback: {fallback_str}") from e
