#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  test_join_idle_queue.py

@Time    :  2025-08-12 11:46:02

@Desc    :  Join Idle Queue 分派测试类
"""
import unittest

from policies.dispatcher_factory import fallback_rng
from policies.join_idle_queue import JiqState, jiq_notify_idle, jiq_select
from policies.policy_type import JiqFallback


class TestJoinIdleQueue(unittest.TestCase):
    def busy_state(self, n: int, mode: JiqFallback, seed: int = 5) -> JiqState:
        return JiqState(n, fallback_rng(seed, 1), mode, initially_idle=False)

    def test_initially_idle(self):
        state = JiqState(3, fallback_rng(0, 1))
        self.assertEqual([0, 1, 2], [jiq_select(state) for _ in range(3)])
        self.assertEqual([], state.idle_set)

    def test_lowest_idle_id(self):
        state = self.busy_state(6, JiqFallback.ROUND_ROBIN)
        jiq_notify_idle(state, 5)
        jiq_notify_idle(state, 2)
        self.assertEqual([2, 5], state.idle_set)
        self.assertEqual(2, jiq_select(state))
        self.assertEqual([5], state.idle_set)

    def test_notify_idempotent(self):
        state = self.busy_state(4, JiqFallback.ROUND_ROBIN)
        for _ in range(3):
            jiq_notify_idle(state, 1)
        self.assertEqual([1], state.idle_set)
        self.assertEqual(1, jiq_select(state))
        self.assertEqual(0, jiq_select(state))

    def test_round_robin_fallback(self):
        state = self.busy_state(2, JiqFallback.ROUND_ROBIN)
        self.assertEqual([0, 1, 0], [jiq_select(state) for _ in range(3)])

    def test_random_fallback_reproducible(self):
        first = self.busy_state(10, JiqFallback.RANDOM, seed=42)
        second = self.busy_state(10, JiqFallback.RANDOM, seed=42)
        draws = [jiq_select(first) for _ in range(50)]
        self.assertEqual(draws, [jiq_select(second) for _ in range(50)])
        self.assertTrue(all(0 <= server < 10 for server in draws))
        self.assertGreater(len(set(draws)), 1)

    def test_stage_streams_differ(self):
        stage1 = fallback_rng(3, 1).integers(1_000_000, size=8).tolist()
        stage2 = fallback_rng(3, 2).integers(1_000_000, size=8).tolist()
        self.assertNotEqual(stage1, stage2)
        self.assertEqual(stage1, fallback_rng(3, 1).integers(1_000_000, size=8).tolist())
