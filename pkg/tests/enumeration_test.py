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

import os
import unittest
import collections
from unittest import mock

from .utils import setUpModule, all_texts, naive_overlap_free
from centres.words import Word, EMPTY, complement, reverse
from centres.analysis import count_centres
from centres.enumeration import WordClass, enumerate_overlap_free, enumerate_all, enumerate_words, words, stats, \
    iter_overlap_free_upto, check_cap, check_length_cap
from centres.constructions import build_wn
from centres.config import Config, MAX_WORKERS_ENV
from centres.errors import RangeError, ResourceError


W = Word


class WordClassTest(unittest.TestCase):
    def test_parse(self):
        self.assertIs(WordClass.parse('all'), WordClass.ALL_BINARY)
        self.assertIs(WordClass.parse('all-binary'), WordClass.ALL_BINARY)
        self.assertIs(WordClass.parse('overlap-free'), WordClass.OVERLAP_FREE)
        self.assertIs(WordClass.parse(WordClass.OVERLAP_FREE), WordClass.OVERLAP_FREE)
        with self.assertRaises(RangeError):
            WordClass.parse('cube-free')


class EnumerateTest(unittest.TestCase):
    def test_counts(self):
        self.assertEqual([enumerate_overlap_free(n) for n in range(7)], [1, 2, 4, 6, 10, 14, 20])

    def test_empty_word(self):
        seen = []
        self.assertEqual(enumerate_overlap_free(0, seen.append), 1)
        self.assertEqual(seen, [EMPTY])

    def test_length_3(self):
        self.assertEqual(set(words(3, 'overlap-free')), { W(t) for t in all_texts(3) } - { W('000'), W('111') })

    def test_lexicographic(self):
        for n in range(10):
            found = words(n, WordClass.OVERLAP_FREE)
            self.assertEqual(found, sorted(found))

    def test_matches_filter(self):
        for n in range(11):
            expected = [W(t) for t in all_texts(n) if naive_overlap_free(t)]
            self.assertEqual(words(n, WordClass.OVERLAP_FREE), expected)

    def test_all(self):
        seen = []
        self.assertEqual(enumerate_all(3, seen.append), 8)
        self.assertEqual(seen, [W(t) for t in all_texts(3)])
        self.assertEqual(enumerate_words(4, 'all'), 16)

    def test_negative(self):
        with self.assertRaises(RangeError):
            enumerate_overlap_free(-1)
        with self.assertRaises(RangeError):
            enumerate_all(-1)

    def test_upto(self):
        by_length = collections.Counter(n for _, n in iter_overlap_free_upto(6))
        self.assertEqual([by_length[n] for n in range(7)], [1, 2, 4, 6, 10, 14, 20])


class StatsTest(unittest.TestCase):
    def test_all_binary_5(self):
        summary = stats(5, 'all')
        self.assertEqual(summary.total, 32)
        self.assertEqual(summary.m_min, 1)
        self.assertEqual(sum(summary.m_histogram.values()), summary.total)
        self.assertEqual(summary.m_max, 4)
        self.assertIn(W('00000'), summary.max_witnesses)

    def test_all_binary_3(self):
        summary = stats(3, WordClass.ALL_BINARY)
        self.assertEqual(summary.m_min, 0)
        self.assertEqual(summary.min_witnesses, (W('010'), W('101')))

    def test_overlap_free_13(self):
        summary = stats(13, WordClass.OVERLAP_FREE)
        self.assertEqual(summary.m_max, 8)
        self.assertIn(build_wn(1).word, summary.max_witnesses)

    def test_histogram_consistent(self):
        for n in range(8):
            summary = stats(n, 'overlap-free')
            self.assertEqual(sum(summary.m_histogram.values()), summary.total)
            self.assertEqual(min(summary.m_histogram), summary.m_min)
            self.assertEqual(max(summary.m_histogram), summary.m_max)
            self.assertEqual(list(summary.m_histogram), sorted(summary.m_histogram))

    def test_histogram_matches_words(self):
        summary = stats(9, 'overlap-free')
        expected = collections.Counter(count_centres(w) for w in words(9, 'overlap-free'))
        self.assertEqual(summary.m_histogram, dict(expected))

    def test_symmetries(self):
        found = words(10, 'overlap-free')
        counts = collections.Counter(count_centres(w) for w in found)
        self.assertEqual(collections.Counter(count_centres(complement(w)) for w in found), counts)
        self.assertEqual(collections.Counter(count_centres(reverse(w)) for w in found), counts)

    def test_witness_limit(self):
        summary = stats(8, 'all', witness_limit=2)
        self.assertLessEqual(len(summary.min_witnesses), 2)
        self.assertEqual(list(summary.min_witnesses), sorted(summary.min_witnesses))
        config = Config.build_from_cmdline('witness_limit=1')
        self.assertEqual(len(stats(8, 'all', config=config).max_witnesses), 1)

    def test_as_dict(self):
        doc = stats(3, 'all').as_dict()
        self.assertEqual(doc['word_class'], 'all-binary')
        self.assertEqual(doc['min_witnesses'], ['010', '101'])
        self.assertNotIn('max_witnesses', stats(3, 'all').as_dict(witnesses=('min',)))

    def test_cap(self):
        with self.assertRaises(ResourceError):
            stats(19, 'all')
        config = Config.build_from_cmdline('caps.all_binary_max_length=2')
        with self.assertRaises(ResourceError):
            stats(3, 'all', config=config)
        with self.assertRaises(ResourceError):
            stats(31, 'overlap-free')

    def test_cap_helpers(self):
        config = Config.build_from_cmdline('caps.construction_max_n=3')
        check_cap(3, 'caps.construction_max_n', 'Building w_n for n=3', config)
        with self.assertRaises(ResourceError) as ctx:
            check_cap(4, 'caps.construction_max_n', 'Building w_n for n=4', config)
        self.assertEqual(ctx.exception.cap, 3)
        self.assertEqual(ctx.exception.key, 'caps.construction_max_n')
        self.assertIn('Building w_n for n=4 exceeds the cap of 3', str(ctx.exception))

        check_length_cap(18, 'all')
        with self.assertRaises(ResourceError) as ctx:
            check_length_cap(31, WordClass.OVERLAP_FREE)
        self.assertEqual(ctx.exception.key, 'caps.overlap_free_max_length')
        with self.assertRaises(RangeError):
            check_length_cap(-1, 'all')

    def test_parallel_matches_sequential(self):
        config = Config.build_from_cmdline('parallel.prefix_length=3')
        with mock.patch.dict(os.environ, { MAX_WORKERS_ENV: '2' }):
            for n, word_class in [(11, 'overlap-free'), (2, 'overlap-free'), (9, 'all')]:
                sequential = stats(n, word_class, config=config, workers=1, witness_limit=3)
                parallel = stats(n, word_class, config=config, workers=2, witness_limit=3)
                self.assertEqual(parallel, sequential)


if __name__ == '__main__':
    unittest.main()
