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
import threading

from .utils import setUpModule
from centres.words import Word, EMPTY, drop_suffix, is_conjugate, is_prefix
from centres.thue_morse import MU, mu, tm_prefix, tm_letter, tm_factor, alpha, alpha_by_recurrence, mu_alpha_offset
from centres.analysis import is_overlap_free
from centres.errors import RangeError


W = Word


class MorphismTest(unittest.TestCase):
    def test_letters(self):
        self.assertEqual(mu(W('0')), W('01'))
        self.assertEqual(mu(W('1')), W('10'))
        self.assertEqual(MU.image_of_zero, W('01'))
        self.assertEqual(MU.image_of_one, W('10'))

    def test_word(self):
        self.assertEqual(mu(W('100110')), W('100101101001'))
        self.assertEqual(mu(EMPTY), EMPTY)

    def test_power(self):
        self.assertEqual(mu(W('0'), 3), tm_prefix(8))
        self.assertEqual(mu(W('01'), 0), W('01'))
        with self.assertRaises(RangeError):
            mu(W('0'), -1)

    def test_doubles_length(self):
        self.assertEqual(len(mu(tm_prefix(37))), 74)


class PrefixTest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(tm_prefix(1), W('0'))
        self.assertEqual(tm_prefix(8), W('01101001'))
        self.assertEqual(tm_prefix(24), W('011010011001011010010110'))
        self.assertEqual(tm_prefix(0), EMPTY)

    def test_negative(self):
        with self.assertRaises(RangeError):
            tm_prefix(-1)

    def test_prefix_closed(self):
        longest = tm_prefix(300)
        for length in (1, 2, 3, 5, 64, 65, 127, 299):
            self.assertTrue(is_prefix(tm_prefix(length), longest))

    def test_fixed_point(self):
        self.assertEqual(mu(tm_prefix(64)), tm_prefix(128))

    def test_letters_closed_form(self):
        self.assertEqual(list(tm_prefix(200)), [tm_letter(i) for i in range(1, 201)])
        with self.assertRaises(RangeError):
            tm_letter(0)

    def test_overlap_free(self):
        self.assertTrue(is_overlap_free(tm_prefix(16)))
        self.assertTrue(is_overlap_free(tm_prefix(2000)))

    def test_threads(self):
        results = {}

        def grow(length):
            results[length] = tm_prefix(length)

        threads = [threading.Thread(target=grow, args=(length,)) for length in (3000, 5000, 7000, 9000)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        for length, prefix in results.items():
            self.assertEqual(len(prefix), length)
            self.assertTrue(is_prefix(prefix, results[9000]))


class FactorTest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(tm_factor(5, 6), W('100110'))
        self.assertEqual(tm_factor(5, 12), W('100110010110'))
        self.assertEqual(tm_factor(1, 4), W('0110'))

    def test_invalid(self):
        with self.assertRaises(RangeError):
            tm_factor(0, 3)
        with self.assertRaises(RangeError):
            tm_factor(1, -1)


class AlphaTest(unittest.TestCase):
    def test_printed_values(self):
        self.assertEqual(alpha(1), W('100110'))
        self.assertEqual(alpha(2), W('100110010110'))

    def test_recurrence(self):
        self.assertEqual(alpha(3), W('1001') + drop_suffix(mu(alpha(2)), 4))
        self.assertEqual(alpha(3), tm_factor(5, 24))
        for n in range(1, 8):
            self.assertEqual(alpha_by_recurrence(n), alpha(n))

    def test_length(self):
        for n in range(1, 8):
            self.assertEqual(len(alpha(n)), 3 * 2 ** n)

    def test_conjugate_of_image(self):
        for n in range(1, 7):
            self.assertTrue(is_conjugate(alpha(n + 1), mu(alpha(n))))

    def test_square_overlap_free(self):
        for n in range(1, 6):
            self.assertTrue(is_overlap_free(alpha(n) + alpha(n)))

    def test_invalid(self):
        with self.assertRaises(RangeError):
            alpha(0)
        with self.assertRaises(RangeError):
            alpha_by_recurrence(0)

    def test_image_offset(self):
        self.assertEqual(mu_alpha_offset(1), 9)
        for n in range(1, 6):
            offset = mu_alpha_offset(n)
            self.assertIsNotNone(offset)
            self.assertEqual(tm_factor(offset, 6 * 2 ** n), mu(alpha(n)))


if __name__ == '__main__':
    unittest.main()
