#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  test_sim_time.py

@Time    :  2025-08-19 09:18:33

@Desc    :  纳秒时钟与服务时间换算测试类
"""
import unittest

from engine.sim_time import (MAX_SIM_TIME_NS, check_sim_time, ns_to_seconds, ns_to_str, rescale_ns, seconds_to_ns,
                             service_ns, service_time)
from utils.sim_error import ConfigurationError, SimTimeOverflowError
from workload.task import Task


class TestSimTime(unittest.TestCase):
    def test_service_time_examples(self):
        self.assertEqual(2_000_000_000, service_time(Task("j", "t", 0.0, 2.0), 1.0))
        self.assertEqual(500_000_000, service_time(Task("j", "t", 0.0, 2.0), 4.0))
        self.assertEqual(2, service_ns(1.5e-9, 1.0))

    def test_round_half_up(self):
        self.assertEqual(1, service_ns(0.5e-9, 1.0))
        self.assertEqual(3, service_ns(2.5e-9, 1.0))
        self.assertEqual(333_333_333, service_ns(1.0, 3.0))
        self.assertEqual(666_666_667, service_ns(2.0, 3.0))

    def test_at_least_one_ns(self):
        self.assertEqual(1, service_ns(1e-15, 1.0))

    def test_bad_speed(self):
        with self.assertRaises(ConfigurationError):
            service_ns(1.0, 0.0)

    def test_seconds_round_trip(self):
        self.assertEqual(1_500_000_000, seconds_to_ns(1.5))
        self.assertEqual(100_000_000, seconds_to_ns(0.1))
        self.assertEqual(1.5, ns_to_seconds(1_500_000_000))
        self.assertEqual("1.500000000", ns_to_str(1_500_000_000))
        self.assertEqual("0.000000007", ns_to_str(7))

    def test_overflow(self):
        self.assertEqual(MAX_SIM_TIME_NS, check_sim_time(MAX_SIM_TIME_NS))
        with self.assertRaises(SimTimeOverflowError):
            check_sim_time(MAX_SIM_TIME_NS + 1)
        with self.assertRaises(ArithmeticError):
            service_ns(1e12, 1e-3)

    def test_rescale(self):
        self.assertEqual(1_500_000_000, rescale_ns(1_500_000_000, 2.0, 2.0))
        self.assertEqual(750_000_000, rescale_ns(1_500_000_000, 1.0, 2.0))
        self.assertEqual(3_000_000_000, rescale_ns(1_500_000_000, 2.0, 1.0))
