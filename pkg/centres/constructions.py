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

''' The extremal words ``w_n = 00 alpha_n alpha_n'`` (``alpha_n'`` is ``alpha_n`` without
    its last letter), which reach ``2 M(w) = |w| + 3``, and the composition
    ``x w (w s^-1)`` which keeps words overlap-free.
'''

import dataclasses

from . import errors
from .words import Word, from_text, to_text, drop_suffix, is_prefix, longest_common_suffix
from .analysis import AnalysisReport, analyze, centres, count_centres, PREFIX_SPECIAL
from .thue_morse import alpha


WN_PREFIX = from_text('00')


@dataclasses.dataclass(frozen=True)
class ConstructionResult():
    word: Word
    n: int
    expected_length: int
    report: AnalysisReport
    q: Word

    def as_dict(self):
        return {
            'n': self.n,
            'word': to_text(self.word),
            'length': len(self.word),
            'expected_length': self.expected_length,
            'q': to_text(self.q),
            'report': self.report.as_dict()
        }


@dataclasses.dataclass(frozen=True)
class WnVerification():
    passed: bool
    result: ConstructionResult
    failures: tuple

    def __bool__(self):
        return self.passed


def expected_wn_length(n):
    return 6 * 2 ** n + 1


@errors.api_entry
def build_wn(n):
    ''' Builds ``w_n = 00 + alpha(n) + alpha(n)[:-1]`` together with its analysis.
    '''
    if n < 1:
        raise errors.RangeError(f'w_n is defined for n >= 1, got: {n}')

    a = alpha(n)
    truncated = drop_suffix(a, 1)
    word = WN_PREFIX + a + truncated
    q = from_text('0') + truncated
    return ConstructionResult(word=word, n=n, expected_length=expected_wn_length(n), report=analyze(word), q=q)


def lemma2_compose(x, w):
    ''' Returns ``x + w + w'`` where ``w'`` is ``w`` with the longest common suffix of
        ``x`` and ``w`` removed.

        The composition is total: whether ``x + w`` and ``w + w`` are overlap-free
        (which makes the result overlap-free) is left for the caller to check.
    '''
    x = from_text(x)
    w = from_text(w)
    s = longest_common_suffix(x, w)
    return x + w + drop_suffix(w, len(s))


@errors.api_entry
def verify_wn(n):
    ''' Checks that ``w_n`` is overlap-free, starts with ``001001``, satisfies ``2 M = |w_n| + 3``
        and has centres at positions 3 and 4. The halves it is built from are checked too:
        ``alpha_n alpha_n`` has only even centres, ``|alpha_n| - 1`` of them, and so many
        centres remain once the last letter is dropped.
    '''
    result = build_wn(n)
    report = result.report
    failures = []
    if len(result.word) != result.expected_length:
        failures.append(f'length {len(result.word)} differs from the expected {result.expected_length}')
    if not report.overlap_free:
        failures.append(f'not overlap-free, overlap at letter {report.overlap.start}')
    if not is_prefix(PREFIX_SPECIAL[0], result.word):
        failures.append('does not start with 001001')
    if report.bound_lhs != report.bound_rhs:
        failures.append(f'2M = {report.bound_lhs} but |w| + 3 = {report.bound_rhs}')
    missing = [p for p in (3, 4) if p not in report.centres]
    if missing:
        failures.append('no centre at ' + ', '.join(map(str, missing)))

    a = alpha(n)
    doubled = centres(a + a)
    odd = [p for p in doubled if p % 2]
    if odd:
        failures.append(f'alpha_n alpha_n has an odd centre at {odd[0]}')
    if len(doubled) != len(a) - 1:
        failures.append(f'alpha_n alpha_n has {len(doubled)} centres, expected {len(a) - 1}')
    truncated = count_centres(a + drop_suffix(a, 1))
    if truncated != len(a) - 1:
        failures.append(f'alpha_n without its last letter appended has {truncated} centres, expected {len(a) - 1}')

    return WnVerification(passed=not failures, result=result, failures=tuple(failures))


__all__ = ['ConstructionResult', 'WnVerification', 'build_wn', 'lemma2_compose', 'verify_wn', 'expected_wn_length']
