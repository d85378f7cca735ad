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

''' Verification sweeps: each function checks one statement about squares and
    overlaps over a finite range of words and returns a :py:class:`VerificationReport`.

    A report fails exactly when it holds at least one counterexample. Informative
    findings which are not asserted (e.g. lengths at which the upper bound is reached)
    go to the report's notes.
'''

import random
import logging
import dataclasses
import collections

from . import errors
from .words import Word, from_text, to_text, factor, drop_suffix, is_conjugate, occurs_in
from .utils import mask
from .analysis import PREFIX_SPECIAL, SUFFIX_SPECIAL, centres, centres_bruteforce, count_centres, count_centres_packed, \
    frames, consecutive_centres, minimal_square_at, is_overlap_free, is_overlap_free_packed
from .thue_morse import ALPHA_START, ALPHA_RECURRENCE_PREFIX, mu, tm_prefix, alpha, mu_alpha_offset
from .constructions import verify_wn, lemma2_compose
from .enumeration import WordClass, stats, words, iter_overlap_free_upto, check_cap, check_length_cap
from .config import Config


logger = logging.getLogger(__name__)

FRAME_ROOTS = tuple(from_text(r) for r in ('0', '1', '01', '10'))
EXPECTED_MU_ALPHA_OFFSET = 9
PRINTED_ALPHA = { 1: from_text('100110'), 2: from_text('100110010110') }


@dataclasses.dataclass(frozen=True)
class VerificationReport():
    check_name: str
    parameters: dict
    passed: bool
    counterexamples: tuple
    notes: tuple

    def __bool__(self):
        return self.passed

    def as_dict(self):
        return {
            'check_name': self.check_name,
            'parameters': dict(self.parameters),
            'passed': self.passed,
            'counterexamples': [to_text(w) for w in self.counterexamples],
            'notes': list(self.notes)
        }


class _Check():
    ''' Collects the outcome of a single sweep. At most ``limit`` counterexamples
        are kept, the total number of violations is noted when some were dropped.
    '''
    def __init__(self, name, limit, **parameters):
        self.name = name
        self.limit = max(1, limit)
        self.parameters = parameters
        self.violations = 0
        self.counterexamples = []
        self.notes = []
        logger.info('Running %s with %s', name, ', '.join(f'{k}={v}' for k, v in parameters.items()) or 'no parameters')

    def fail(self, word, note=None):
        self.violations += 1
        if len(self.counterexamples) < self.limit:
            self.counterexamples.append(from_text(word))
            if note is not None:
                self.notes.append(note)
        logger.debug('%s: counterexample %s', self.name, to_text(from_text(word)))

    def note(self, text):
        self.notes.append(text)

    def report(self):
        if self.violations > len(self.counterexamples):
            self.notes.append(f'{self.violations} violations in total, only the first {len(self.counterexamples)} are listed')
        passed = not self.violations
        logger.info('%s: %s', self.name, 'pass' if passed else 'FAIL')
        return VerificationReport(
            check_name=self.name,
            parameters=self.parameters,
            passed=passed,
            counterexamples=tuple(self.counterexamples),
            notes=tuple(self.notes))


def _start(name, config, **parameters):
    return _Check(name, config.witness_limit, **parameters)


def _is_square_packed(bits, n):
    if n % 2:
        return False
    half = n // 2
    return (bits >> half) == (bits & mask(half))


def min_centres_formula(n):
    ''' ``ceil(n / 2) - 2`` '''
    return -(-n // 2) - 2


@errors.api_entry
def verify_min_centres(n_from, n_to, config=None, workers=None):
    ''' Compares the least ``M`` over all binary words of each length in ``[n_from, n_to]``
        with ``ceil(n / 2) - 2``. Lengths listed in ``min_centres.exceptions`` are reported
        but never fail the check.
    '''
    config = config or Config.default()
    if not 3 <= n_from <= n_to:
        raise errors.RangeError(f'Expected 3 <= n_from <= n_to, got: n_from={n_from}, n_to={n_to}')
    check_length_cap(n_to, WordClass.ALL_BINARY, config)

    check = _start('min-centres', config, n_from=n_from, n_to=n_to)
    exceptions = set(config.min_centres.exceptions or [])
    for n in range(n_from, n_to + 1):
        summary = stats(n, WordClass.ALL_BINARY, config=config, workers=workers)
        expected = min_centres_formula(n)
        if summary.m_min == expected:
            check.note(f'n={n}: minimum {summary.m_min} matches the formula')
        elif n in exceptions:
            check.note(f'n={n}: minimum {summary.m_min} differs from the formula value {expected}, documented exception (witness {to_text(summary.min_witnesses[0])})')
        else:
            check.fail(summary.min_witnesses[0], f'n={n}: minimum {summary.m_min} differs from the formula value {expected}')

    return check.report()


@errors.api_entry
def verify_upper_bound(n_max, config=None):
    ''' Checks ``2 M(w) <= |w| + 3`` for every overlap-free word of length at most ``n_max``,
        and that every word reaching equality has odd length and the shape ``a u u`` or ``u u a``.
        The lengths at which equality occurs are listed in the notes.
    '''
    config = config or Config.default()
    if n_max < 1:
        raise errors.RangeError(f'Expected n_max >= 1, got: {n_max}')
    check_length_cap(n_max, WordClass.OVERLAP_FREE, config)

    check = _start('upper-bound', config, n_max=n_max)
    visited = 0
    equality = collections.Counter()
    for bits, n in iter_overlap_free_upto(n_max):
        visited += 1
        m = count_centres_packed(bits, n)
        if 2 * m < n + 3:
            continue

        word = Word.from_int(bits, n)
        if 2 * m > n + 3:
            check.fail(word, f'{to_text(word)}: 2M = {2 * m} exceeds |w| + 3 = {n + 3}')
            continue

        equality[n] += 1
        if not n % 2:
            check.fail(word, f'{to_text(word)}: equality at even length {n}')
        if not _is_square_packed(bits & mask(n - 1), n - 1) and not _is_square_packed(bits >> 1, n - 1):
            check.fail(word, f'{to_text(word)}: equality but the word is neither a u u nor u u a')

    check.note(f'{visited} overlap-free words checked')
    for n in sorted(equality):
        check.note(f'equality at length {n}: {equality[n]} words, length mod 4 = {n % 4}')
    if equality:
        all_one = all(n % 4 == 1 for n in equality)
        check.note(f'all equality lengths are 1 mod 4: {"yes" if all_one else "no"}')
    else:
        check.note('no word reaches equality')

    return check.report()


@errors.api_entry
def verify_construction(n_max, config=None):
    ''' Runs :py:func:`centres.constructions.verify_wn` for ``n = 1 .. n_max``.
    '''
    config = config or Config.default()
    if n_max < 1:
        raise errors.RangeError(f'Expected n_max >= 1, got: {n_max}')
    check_cap(n_max, 'caps.construction_max_n', f'Checking w_n up to n={n_max}', config)

    check = _start('construction', config, n_max=n_max)
    for n in range(1, n_max + 1):
        outcome = verify_wn(n)
        word = outcome.result.word
        if outcome:
            check.note(f'n={n}: length {len(word)}, M {outcome.result.report.M}')
        else:
            check.fail(word, f'n={n}: ' + '; '.join(outcome.failures))

    return check.report()


def _lemma_exceptions(config):
    ret = set()
    for entry in config.lemma_compose.exceptions or []:
        if not isinstance(entry, list) or len(entry) != 2 or not all(isinstance(part, str) for part in entry):
            raise errors.ConfigError(f'Entries of \'lemma_compose.exceptions\' should be pairs of quoted binary strings, got: {entry!r}')
        ret.add((to_text(from_text(entry[0])), to_text(from_text(entry[1]))))
    return ret


@errors.api_entry
def verify_lemma_compose(x_max, w_max, config=None):
    ''' For every ``x`` with ``|x| <= x_max`` and ``w`` with ``1 <= |w| <= w_max`` such that
        ``x w`` and ``w w`` are overlap-free, checks that :py:func:`centres.constructions.lemma2_compose`
        yields an overlap-free word, and that ``x w w`` is overlap-free when ``x`` and ``w`` end
        with different letters.

        The composition is not overlap-free for every such pair: a few pairs with ``|x| > |w|``
        (e.g. ``x = 01001``, ``w = 0``) break it. Pairs listed in ``lemma_compose.exceptions``
        are reported in the notes as documented exceptions. Pairs with ``|x| <= |w|`` always
        fail the check when they break it, whatever the configuration says.
    '''
    config = config or Config.default()
    if x_max < 0 or w_max < 0:
        raise errors.RangeError(f'Bounds cannot be negative, got: x_max={x_max}, w_max={w_max}')
    check_length_cap(max(x_max, w_max), WordClass.OVERLAP_FREE, config)
    exceptions = _lemma_exceptions(config)

    check = _start('lemma-compose', config, x_max=x_max, w_max=w_max)

    # x w overlap-free requires x overlap-free, so other x never satisfy the hypothesis
    xs = [Word.from_int(bits, n) for bits, n in iter_overlap_free_upto(x_max)]
    ws = [Word.from_int(bits, n) for bits, n in iter_overlap_free_upto(w_max) if n and is_overlap_free_packed((bits << n) | bits, 2 * n)]

    pairs = 0
    short_pairs = 0
    corollary = 0
    excused = 0
    for w in ws:
        for x in xs:
            if not is_overlap_free(x + w):
                continue
            pairs += 1
            if len(x) <= len(w):
                short_pairs += 1

            broken = []
            composed = lemma2_compose(x, w)
            if not is_overlap_free(composed):
                broken.append((composed, f'{to_text(composed)} is not overlap-free'))

            if not x or x[-1] != w[-1]:
                corollary += 1
                xww = x + w + w
                # with an empty common suffix the composition is x w w itself
                if xww != composed and not is_overlap_free(xww):
                    broken.append((xww, 'x w w is not overlap-free although the common suffix is empty'))

            if not broken:
                continue

            key = (to_text(x), to_text(w))
            if len(x) > len(w) and key in exceptions:
                excused += 1
                check.note(f'x={key[0]}, w={key[1]}: {to_text(broken[0][0])} is not overlap-free, documented exception')
                continue

            for word, problem in broken:
                check.fail(word, f'x={key[0]}, w={key[1]}: {problem}')

    check.note(f'{pairs} pairs satisfy the hypothesis, {corollary} of them with an empty common suffix')
    check.note(f'{short_pairs} pairs have |x| <= |w|, {excused} pairs with |x| > |w| are documented exceptions')
    return check.report()


@errors.api_entry
def verify_tm_even(len_max, config=None, offsets=None):
    ''' Checks that every factor of ``t`` of even length ``n`` (``4 <= n <= len_max``) which
        starts after an even-length prefix has only even centres and ``M = n / 2 - 1``.

        Arguments:
            len_max : longest factor length to check
            config : the start offsets default to ``0, tm_even.offset_step, ..., tm_even.max_offset``
            offsets : explicit even start offsets, overriding the config
    '''
    config = config or Config.default()
    if len_max < 4:
        raise errors.RangeError(f'Expected len_max >= 4, got: {len_max}')
    if offsets is None:
        step = config.tm_even.offset_step
        if step < 2 or step % 2:
            raise errors.ConfigError(f'tm_even.offset_step should be a positive even number, got: {step}')
        offsets = range(0, config.tm_even.max_offset + 1, step)

    offsets = sorted(offsets)
    if any(o < 0 or o % 2 for o in offsets):
        raise errors.RangeError(f'Start offsets should be nonnegative and even, got: {offsets}')

    logger.info('tm-even start offsets: %s', ', '.join(map(str, offsets)))
    check = _start('tm-even', config, len_max=len_max, offsets=f'{offsets[0]}..{offsets[-1]}' if offsets else '')
    check.note('start offsets: ' + ','.join(map(str, offsets)))

    prefix = tm_prefix(max(offsets, default=0) + len_max)
    for n in range(4, len_max + 1, 2):
        for offset in offsets:
            word = factor(prefix, offset + 1, n)
            found = centres(word)
            if len(found) != n // 2 - 1 or any(p % 2 for p in found):
                check.fail(word, f'offset {offset}, length {n}: centres {found}')

    return check.report()


@errors.api_entry
def verify_pansiot(prefix_len, config=None):
    ''' Checks that every frame of the prefix of ``t`` of length ``prefix_len`` has a root in
        ``{0, 1, 01, 10}`` and that no two consecutive positions are centres.
    '''
    config = config or Config.default()
    if prefix_len < 4:
        raise errors.RangeError(f'Expected prefix_len >= 4, got: {prefix_len}')

    check = _start('pansiot', config, prefix_len=prefix_len)
    word = tm_prefix(prefix_len)
    roots = set()
    for square in frames(word):
        roots.add(square.root)
        if square.root not in FRAME_ROOTS:
            check.fail(square.root, f'frame centred at {square.centre} has root {to_text(square.root)}')

    for p in consecutive_centres(word):
        check.fail(minimal_square_at(word, p).root, f'positions {p} and {p + 1} are both centres')

    check.note('frame roots: ' + ', '.join(to_text(r) for r in sorted(roots)))
    return check.report()


@errors.api_entry
def verify_unary(n_max=64, config=None):
    ''' Checks ``M(0^n) = n - 1`` for ``n = 2 .. n_max``.
    '''
    config = config or Config.default()
    if n_max < 2:
        raise errors.RangeError(f'Expected n_max >= 2, got: {n_max}')

    check = _start('unary', config, n_max=n_max)
    for n in range(2, n_max + 1):
        word = Word.from_int(0, n)
        m = count_centres(word)
        if m != n - 1:
            check.fail(word, f'n={n}: M = {m}')

    return check.report()


@errors.api_entry
def verify_alpha_recurrence(n_max, config=None):
    ''' Checks the recurrence ``alpha(n+1) = 1001 mu(alpha(n))`` minus the last four letters and
        the related facts used by the construction of ``w_n``, for ``n = 1 .. n_max``.
    '''
    config = config or Config.default()
    if n_max < 1:
        raise errors.RangeError(f'Expected n_max >= 1, got: {n_max}')
    check_cap(n_max + 1, 'caps.construction_max_n', f'Checking alpha up to n={n_max + 1}', config)

    check = _start('alpha', config, n_max=n_max)
    for n, printed in PRINTED_ALPHA.items():
        if alpha(n) != printed:
            check.fail(alpha(n), f'alpha({n}) = {to_text(alpha(n))}, expected {to_text(printed)}')

    offsets = []
    for n in range(1, n_max + 1):
        a = alpha(n)
        image = mu(a)
        following = alpha(n + 1)
        recurrence = ALPHA_RECURRENCE_PREFIX + drop_suffix(image, len(ALPHA_RECURRENCE_PREFIX))
        if following != recurrence:
            check.fail(following, f'n={n}: alpha(n+1) differs from the recurrence')
        if len(image) != len(following) or not is_conjugate(following, image):
            check.fail(following, f'n={n}: alpha(n+1) is not a conjugate of mu(alpha(n))')
        if not is_overlap_free(a + a):
            check.fail(a + a, f'n={n}: alpha(n) alpha(n) is not overlap-free')

        extended = ALPHA_RECURRENCE_PREFIX + image
        if not is_overlap_free(extended) or not occurs_in(extended, tm_prefix(2 * (ALPHA_START + len(a)) + len(extended))):
            check.fail(extended, f'n={n}: 1001 mu(alpha(n)) is not an overlap-free factor of t')

        offsets.append(mu_alpha_offset(n))

    if all(o == EXPECTED_MU_ALPHA_OFFSET for o in offsets):
        check.note(f'mu(alpha(n)) first occurs in t at letter {EXPECTED_MU_ALPHA_OFFSET} for every n')
    else:
        check.note('mu(alpha(n)) first occurs in t at letters: ' + ', '.join(f'n={n}: {o}' for n, o in enumerate(offsets, 1)))

    return check.report()


@errors.api_entry
def verify_special_words(config=None):
    ''' Checks that prefix-special words cannot be extended to the left and suffix-special
        words cannot be extended to the right without creating an overlap.
    '''
    config = config or Config.default()
    check = _start('special-words', config)
    letters = (from_text('0'), from_text('1'))
    for special in PREFIX_SPECIAL + SUFFIX_SPECIAL:
        if not is_overlap_free(special):
            check.fail(special, f'{to_text(special)} is not overlap-free')

    for special in PREFIX_SPECIAL:
        for letter in letters:
            if is_overlap_free(letter + special):
                check.fail(letter + special, f'{to_text(letter + special)} is overlap-free')
    for special in SUFFIX_SPECIAL:
        for letter in letters:
            if is_overlap_free(special + letter):
                check.fail(special + letter, f'{to_text(special + letter)} is overlap-free')

    return check.report()


@errors.api_entry
def verify_mu_preserves(n_max, config=None):
    ''' Checks that ``mu`` maps every overlap-free word of length at most ``n_max`` to an overlap-free word.
    '''
    config = config or Config.default()
    if n_max < 0:
        raise errors.RangeError(f'Expected n_max >= 0, got: {n_max}')
    check_length_cap(n_max, WordClass.OVERLAP_FREE, config)

    check = _start('mu-preserves', config, n_max=n_max)
    for bits, n in iter_overlap_free_upto(n_max):
        word = Word.from_int(bits, n)
        if not is_overlap_free(mu(word)):
            check.fail(word, f'mu({to_text(word)}) is not overlap-free')

    return check.report()


@errors.api_entry
def verify_oracle(length, random_count, max_random_length, seed=0, config=None):
    ''' Compares the fast and the brute-force centre computations on all binary words
        of the given ``length`` and on ``random_count`` random words of length up to
        ``max_random_length`` drawn with ``seed``.
    '''
    config = config or Config.default()
    if length < 0 or random_count < 0 or max_random_length < 0:
        raise errors.RangeError(f'Expected nonnegative arguments, got: length={length}, random_count={random_count}, max_random_length={max_random_length}')
    check_length_cap(length, WordClass.ALL_BINARY, config)

    check = _start('oracle', config, length=length, random_count=random_count, max_random_length=max_random_length, seed=seed)

    def compare(word):
        if centres(word) != centres_bruteforce(word):
            check.fail(word, f'{to_text(word)}: centres differ between tiers')
        elif is_overlap_free(word) != is_overlap_free(word, algorithm='bruteforce'):
            check.fail(word, f'{to_text(word)}: overlap-freeness differs between tiers')

    for bits in range(1 << length):
        compare(Word.from_int(bits, length))

    rng = random.Random(seed)
    for _ in range(random_count):
        n = rng.randint(0, max_random_length)
        compare(Word.from_int(rng.getrandbits(n) if n else 0, n))

    check.note(f'{(1 << length) + random_count} words compared')
    return check.report()


@errors.api_entry
def verify_enumerator(n_max, config=None, workers=None):
    ''' Compares the backtracking enumeration of overlap-free words of each length up to
        ``n_max`` with a brute-force filter over all binary words, and (for ``workers > 1``)
        the parallel statistics at ``n_max`` with the sequential ones.
    '''
    config = config or Config.default()
    if n_max < 0:
        raise errors.RangeError(f'Expected n_max >= 0, got: {n_max}')
    check_length_cap(n_max, WordClass.ALL_BINARY, config)

    check = _start('enumerator', config, n_max=n_max)
    counts = []
    for n in range(n_max + 1):
        enumerated = words(n, WordClass.OVERLAP_FREE)
        filtered = [Word.from_int(bits, n) for bits in range(1 << n) if is_overlap_free(Word.from_int(bits, n), algorithm='bruteforce')]
        counts.append(len(enumerated))
        if enumerated != filtered:
            missing = sorted(set(filtered) - set(enumerated))
            extra = sorted(set(enumerated) - set(filtered))
            if not missing and not extra:
                check.fail(enumerated[0], f'n={n}: words are enumerated out of lexicographic order')
            for word in missing:
                check.fail(word, f'n={n}: {to_text(word)} was not enumerated')
            for word in extra:
                check.fail(word, f'n={n}: {to_text(word)} was enumerated but is not overlap-free')

    check.note('counts: ' + ', '.join(map(str, counts)))

    workers = config.max_workers(workers)
    if workers > 1:
        sequential = stats(n_max, WordClass.OVERLAP_FREE, config=config, workers=1)
        parallel = stats(n_max, WordClass.OVERLAP_FREE, config=config, workers=workers)
        if sequential != parallel:
            witness = (parallel.min_witnesses or sequential.min_witnesses)[0]
            check.fail(witness, f'n={n_max}: statistics computed with {workers} workers differ from the sequential ones')
        else:
            check.note(f'n={n_max}: statistics with {workers} workers match the sequential ones')

    return check.report()


def run_suite(config=None, workers=None):
    ''' Runs every sweep with the ranges configured under ``suite`` and returns the list
        of reports; the suite passes iff all of them pass.
    '''
    config = config or Config.default()
    suite = config.suite
    return [
        verify_unary(suite.unary_max_length, config=config),
        verify_min_centres(suite.min_centres_from, suite.min_centres_to, config=config, workers=workers),
        verify_upper_bound(suite.upper_bound_max_length, config=config),
        verify_construction(suite.construction_max_n, config=config),
        verify_lemma_compose(suite.lemma_compose_max_x, suite.lemma_compose_max_w, config=config),
        verify_tm_even(suite.tm_even_max_length, config=config),
        verify_pansiot(suite.pansiot_prefix_length, config=config),
        verify_alpha_recurrence(suite.alpha_max_n, config=config),
        verify_special_words(config=config),
        verify_mu_preserves(suite.mu_preserves_max_length, config=config),
        verify_oracle(suite.oracle_length, suite.oracle_random, suite.oracle_max_random_length, seed=suite.oracle_seed, config=config),
        verify_enumerator(suite.enumerator_max_length, config=config, workers=workers)
    ]


__all__ = ['VerificationReport', 'verify_min_centres', 'verify_upper_bound', 'verify_construction', 'verify_lemma_compose',
    'verify_tm_even', 'verify_pansiot', 'verify_unary', 'verify_alpha_recurrence', 'verify_special_words',
    'verify_mu_preserves', 'verify_oracle', 'verify_enumerator', 'run_suite', 'min_centres_formula']
