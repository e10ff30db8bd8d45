#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  test_sim_error.py

@Time    :  2025-08-18 15:10:40

@Desc    :  异常层级与退出码
"""
import unittest

from utils.sim_error import (ConfigurationError, ExperimentIOError, SimTimeOverflowError, SimulationError,
                             TraceFormatError, ValidationFailure, WorkloadStatsError)


class TestSimError(unittest.TestCase):
    def test_exit_codes(self):
        self.assertEqual(1, SimulationError("x").exit_code)
        self.assertEqual(1, ValidationFailure("x").exit_code)
        self.assertEqual(1, SimTimeOverflowError("x").exit_code)
        self.assertEqual(2, ConfigurationError("x").exit_code)
        self.assertEqual(2, TraceFormatError("x", 3).exit_code)
        self.assertEqual(2, WorkloadStatsError("x").exit_code)
        self.assertEqual(3, ExperimentIOError("x").exit_code)

    def test_builtin_bases(self):
        self.assertIsInstance(ConfigurationError("x"), ValueError)
        self.assertIsInstance(SimTimeOverflowError("x"), ArithmeticError)
        self.assertIsInstance(ExperimentIOError("x"), OSError)

    def test_payloads(self):
        self.assertEqual(7, TraceFormatError("malformed row 7", 7).row)
        self.assertEqual(["a", "b"], ValidationFailure("dirty", ["a", "b"]).violations)
        self.assertEqual([], ValidationFailure("dirty").violations)
