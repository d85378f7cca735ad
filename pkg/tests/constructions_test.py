# Copyright 2022 Samsung Electronics Co., Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import unittest
from unittest import mock

from .utils import setUpModule, AssertRaisesChainedContext, long_test
from centres.words import Word, EMPTY, is_prefix, drop_suffix
from centres.constructions import build_wn, lemma2_compose, verify_wn, expected_wn_length
from centres.analysis import is_overlap_free, centres, count_centres
from centres.thue_morse import alpha
from centres.errors import RangeError


W = Word


class BuildWnTest(unittest.TestCase):
    def test_w1(self):
        result = build_wn(1)
        self.assertEqual(result.word, W('0010011010011'))
        self.assertEqual(len(result.word), 13)
        self.assertEqual(result.expected_length, 13)
        self.assertEqual(result.report.M, 8)
        self.assertTrue(result.report.tight)

    def test_q_bracketing(self):
        result = build_wn(1)
        self.assertEqual(result.q, W('010011'))
        for n in range(1, 5):
            result = build_wn(n)
            self.assertEqual(W('0') + result.q + result.q, result.word)

    def test_w2(self):
        result = build_wn(2)
        self.assertEqual(len(result.word), 25)
        self.assertEqual(result.report.M, 14)

    def test_lengths(self):
        for n in range(1, 6):
            self.assertEqual(len(build_wn(n).word), expected_wn_length(n))

    def test_invalid(self):
        with AssertRaisesChainedContext(RangeError, self, 'n >= 1'):
            build_wn(0)

    def test_as_dict(self):
        doc = build_wn(1).as_dict()
        self.assertEqual(doc['word'], '0010011010011')
        self.assertEqual(doc['q'], '010011')
        self.assertEqual(doc['report']['M'], 8)


class VerifyWnTest(unittest.TestCase):
    def test_small(self):
        for n in range(1, 6):
            outcome = verify_wn(n)
            self.assertTrue(outcome, outcome.failures)
            self.assertEqual(outcome.failures, ())

    def test_w5(self):
        outcome = verify_wn(5)
        self.assertEqual(len(outcome.result.word), 193)
        self.assertTrue(is_prefix(W('001001'), outcome.result.word))

    @long_test
    def test_up_to_10(self):
        for n in range(1, 11):
            self.assertTrue(verify_wn(n))


class HalvesTest(unittest.TestCase):
    def test_doubled_alpha(self):
        for n in range(1, 7):
            a = alpha(n)
            found = centres(a + a)
            self.assertTrue(all(p % 2 == 0 for p in found), (n, found))
            self.assertEqual(len(found), len(a) - 1)

    def test_alpha_1(self):
        a = alpha(1)
        self.assertEqual(centres(a + a), [2, 4, 6, 8, 10])

    def test_truncated_alpha(self):
        for n in range(1, 7):
            a = alpha(n)
            self.assertEqual(count_centres(a + drop_suffix(a, 1)), len(a) - 1)

    def test_wn_centres_3_and_4(self):
        for n in range(1, 7):
            report = build_wn(n).report
            self.assertIn(3, report.centres)
            self.assertIn(4, report.centres)

    def test_failure_reported(self):
        with mock.patch('centres.constructions.alpha', return_value=W('0')):
            outcome = verify_wn(1)
        self.assertFalse(outcome)
        self.assertIn('alpha_n alpha_n has an odd centre at 1', outcome.failures)
        self.assertIn('alpha_n alpha_n has 1 centres, expected 0', outcome.failures)
        self.assertIn('no centre at 3, 4', outcome.failures)


class ComposeTest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(lemma2_compose(W('0'), W('100110')), W('010011010011'))
        self.assertEqual(lemma2_compose(W('1'), W('01')), W('1010'))
        self.assertEqual(lemma2_compose(EMPTY, W('0110')), W('01100110'))

    def test_text_arguments(self):
        self.assertEqual(lemma2_compose('1', '01'), W('1010'))

    def test_total(self):
        # hypothesis not satisfied, the composition is still defined
        self.assertEqual(lemma2_compose(W('00'), W('0')), W('000'))

    def test_overlap_free_result(self):
        self.assertTrue(is_overlap_free(lemma2_compose(W('0'), W('100110'))))


if __name__ == '__main__':
    unittest.main()
