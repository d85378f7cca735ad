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

''' Exhaustive enumeration of binary words and of overlap-free binary words, and
    per-length statistics of ``M`` over them.

    Overlap-free words are enumerated depth-first: a word is extended by one letter
    at a time and only overlaps ending at the new letter are checked, since any other
    overlap would already occur in the (overlap-free) parent. Children are visited
    ``0`` first, so words of a fixed length come out in lexicographic order.

    Statistics can be computed by several worker processes. The search space is then
    split by fixed-length prefixes, each worker summarizes the words below its prefixes
    and the partial summaries are merged in prefix order; merging is associative and
    the result is identical to a sequential run.
'''

import enum
import bisect
import logging
import dataclasses
import collections
import concurrent.futures

from . import errors
from .words import Word, to_text
from .analysis import count_centres_packed, ends_with_overlap_packed
from .config import Config


logger = logging.getLogger(__name__)


class WordClass(enum.Enum):
    ALL_BINARY = 'all-binary'
    OVERLAP_FREE = 'overlap-free'

    @classmethod
    def parse(cls, value):
        ''' Accepts a :py:class:`WordClass`, its value, or ``'all'`` as a short name for all binary words.
        '''
        if isinstance(value, WordClass):
            return value
        if value == 'all':
            return cls.ALL_BINARY
        try:
            return cls(value)
        except ValueError:
            raise errors.RangeError(f'Unknown word class: {value!r}, expected one of: all, all-binary, overlap-free') from None


@dataclasses.dataclass(frozen=True)
class EnumerationSummary():
    length: int
    word_class: WordClass
    total: int
    m_min: int
    m_max: int
    m_histogram: dict
    min_witnesses: tuple
    max_witnesses: tuple

    def as_dict(self, witnesses=('min', 'max')):
        ret = {
            'length': self.length,
            'word_class': self.word_class.value,
            'total': self.total,
            'm_min': self.m_min,
            'm_max': self.m_max,
            'm_histogram': dict(self.m_histogram)
        }
        if 'min' in witnesses:
            ret['min_witnesses'] = [to_text(w) for w in self.min_witnesses]
        if 'max' in witnesses:
            ret['max_witnesses'] = [to_text(w) for w in self.max_witnesses]
        return ret


class _Accumulator():
    ''' Partial statistics over packed words of a single length.

        Words have to be added in increasing order for the witness lists to hold the
        lexicographically least words; partial results of consecutive ranges can then
        be combined with :py:meth:`merge`.
    '''
    def __init__(self, limit):
        self.limit = limit
        self.total = 0
        self.histogram = collections.Counter()
        self.m_min = None
        self.m_max = None
        self.min_witnesses = []
        self.max_witnesses = []

    def add(self, bits, m):
        self.total += 1
        self.histogram[m] += 1

        if self.m_min is None or m < self.m_min:
            self.m_min = m
            self.min_witnesses = [bits]
        elif m == self.m_min and len(self.min_witnesses) < self.limit:
            self.min_witnesses.append(bits)

        if self.m_max is None or m > self.m_max:
            self.m_max = m
            self.max_witnesses = [bits]
        elif m == self.m_max and len(self.max_witnesses) < self.limit:
            self.max_witnesses.append(bits)

    def _merge_extreme(self, mine, my_witnesses, theirs, their_witnesses, better):
        if theirs is None:
            return mine, my_witnesses
        if mine is None or better(theirs, mine):
            return theirs, list(their_witnesses)
        if theirs == mine:
            merged = list(my_witnesses)
            for bits in their_witnesses:
                bisect.insort(merged, bits)
            return mine, merged[:self.limit]
        return mine, my_witnesses

    def merge(self, other):
        self.total += other.total
        self.histogram.update(other.histogram)
        self.m_min, self.min_witnesses = self._merge_extreme(self.m_min, self.min_witnesses, other.m_min, other.min_witnesses, lambda a, b: a < b)
        self.m_max, self.max_witnesses = self._merge_extreme(self.m_max, self.max_witnesses, other.m_max, other.max_witnesses, lambda a, b: a > b)
        return self

    def summary(self, n, word_class):
        return EnumerationSummary(
            length=n,
            word_class=word_class,
            total=self.total,
            m_min=self.m_min,
            m_max=self.m_max,
            m_histogram={ m: self.histogram[m] for m in sorted(self.histogram) },
            min_witnesses=tuple(Word.from_int(bits, n) for bits in self.min_witnesses),
            max_witnesses=tuple(Word.from_int(bits, n) for bits in self.max_witnesses))


def overlap_free_extensions(prefix_bits, prefix_length, n):
    ''' Yields, in lexicographic order, the packed overlap-free words of length ``n``
        which extend the packed overlap-free word ``(prefix_bits, prefix_length)``.
    '''
    if prefix_length > n:
        return

    stack = [(prefix_bits, prefix_length)]
    while stack:
        bits, length = stack.pop()
        if length == n:
            yield bits
            continue

        length += 1
        for letter in (1, 0):
            child = (bits << 1) | letter
            if not ends_with_overlap_packed(child, length):
                stack.append((child, length))


def iter_overlap_free_upto(n_max):
    ''' Yields ``(bits, length)`` of every overlap-free word of length at most ``n_max``,
        in depth-first order (each word before its extensions).
    '''
    stack = [(0, 0)]
    while stack:
        bits, length = stack.pop()
        yield bits, length
        if length == n_max:
            continue

        length += 1
        for letter in (1, 0):
            child = (bits << 1) | letter
            if not ends_with_overlap_packed(child, length):
                stack.append((child, length))


def enumerate_overlap_free(n, consumer=None):
    ''' Calls ``consumer`` with every overlap-free binary word of length ``n``, in
        lexicographic order, and returns the number of words visited.
    '''
    if n < 0:
        raise errors.RangeError(f'Word length cannot be negative, got: {n}')

    count = 0
    for bits in overlap_free_extensions(0, 0, n):
        if consumer is not None:
            consumer(Word.from_int(bits, n))
        count += 1

    logger.debug('Visited %d overlap-free words of length %d', count, n)
    return count


def enumerate_all(n, consumer=None):
    ''' Calls ``consumer`` with every binary word of length ``n``, in lexicographic order,
        and returns the number of words visited.
    '''
    if n < 0:
        raise errors.RangeError(f'Word length cannot be negative, got: {n}')

    if consumer is not None:
        for bits in range(1 << n):
            consumer(Word.from_int(bits, n))
    return 1 << n


def enumerate_words(n, word_class, consumer=None):
    word_class = WordClass.parse(word_class)
    if word_class is WordClass.ALL_BINARY:
        return enumerate_all(n, consumer)
    return enumerate_overlap_free(n, consumer)


def words(n, word_class):
    ''' Returns the list of all words of length ``n`` in ``word_class``, in lexicographic order.
    '''
    ret = []
    enumerate_words(n, word_class, ret.append)
    return ret


def check_cap(value, key, action, config=None):
    ''' Raises :py:class:`centres.errors.ResourceError` if ``value`` exceeds the cap stored
        under the dotted config ``key`` (e.g. ``'caps.construction_max_n'``). ``action`` starts the message.
    '''
    config = config or Config.default()
    cap = config.get_path(key)
    if value > cap:
        raise errors.ResourceError(f'{action} exceeds the cap of {cap}, raise {key!r} to allow it', cap=cap, key=key)


def check_length_cap(n, word_class, config=None):
    ''' Raises :py:class:`centres.errors.ResourceError` if enumerating ``word_class`` at length ``n``
        exceeds the configured cap.
    '''
    word_class = WordClass.parse(word_class)
    if n < 0:
        raise errors.RangeError(f'Word length cannot be negative, got: {n}')

    key = 'caps.all_binary_max_length' if word_class is WordClass.ALL_BINARY else 'caps.overlap_free_max_length'
    check_cap(n, key, f'Enumerating {word_class.value} words of length {n}', config)


def _summarize_partition(task):
    n, word_class, prefix_bits, prefix_length, limit = task
    acc = _Accumulator(limit)
    if word_class is WordClass.ALL_BINARY:
        rest = n - prefix_length
        for bits in range(prefix_bits << rest, (prefix_bits + 1) << rest):
            acc.add(bits, count_centres_packed(bits, n))
    else:
        for bits in overlap_free_extensions(prefix_bits, prefix_length, n):
            acc.add(bits, count_centres_packed(bits, n))
    return acc


def _partition(n, word_class, prefix_length):
    k = min(prefix_length, n)
    if word_class is WordClass.ALL_BINARY:
        return [(bits, k) for bits in range(1 << k)]
    return [(bits, k) for bits in overlap_free_extensions(0, 0, k)]


@errors.api_entry
def stats(n, word_class, config=None, workers=None, witness_limit=None):
    ''' Computes the histogram of ``M`` over all words of length ``n`` in ``word_class``,
        together with the extreme values and up to ``witness_limit`` lexicographically least
        witnesses for each of them.

        Arguments:
            n : word length
            word_class : :py:class:`WordClass` or its name (``'all'``, ``'all-binary'``, ``'overlap-free'``)
            config : :py:class:`centres.config.Config`, defaults are used if ``None``
            workers : number of worker processes, ``None`` means ``parallel.workers`` from the config;
                the ``CENTRES_MAX_WORKERS`` environment variable caps it either way
            witness_limit : overrides ``witness_limit`` from the config

        Raises:
            :py:class:`centres.errors.ResourceError` if ``n`` exceeds the cap configured for ``word_class``.
    '''
    config = config or Config.default()
    word_class = WordClass.parse(word_class)
    check_length_cap(n, word_class, config)
    limit = max(1, witness_limit if witness_limit is not None else config.witness_limit)
    workers = config.max_workers(workers)

    if workers == 1:
        logger.debug('Summarizing %s words of length %d sequentially', word_class.value, n)
        acc = _summarize_partition((n, word_class, 0, 0, limit))
    else:
        tasks = [(n, word_class, bits, k, limit) for bits, k in _partition(n, word_class, config.parallel.prefix_length)]
        logger.info('Summarizing %s words of length %d with %d workers over %d prefixes', word_class.value, n, workers, len(tasks))
        acc = _Accumulator(limit)
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            for partial in executor.map(_summarize_partition, tasks):
                acc.merge(partial)

    logger.info('Length %d, %s: %d words, M in [%s, %s]', n, word_class.value, acc.total, acc.m_min, acc.m_max)
    return acc.summary(n, word_class)


__all__ = ['WordClass', 'EnumerationSummary', 'enumerate_overlap_free', 'enumerate_all', 'enumerate_words', 'words', 'stats', 'iter_overlap_free_upto', 'overlap_free_extensions', 'check_cap', 'check_length_cap']
