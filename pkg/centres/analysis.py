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

''' Squares, centres, frames and overlaps.

    A position ``p`` of ``w`` is a centre if some nonempty ``u`` is both a suffix of
    the prefix of length ``p`` and a prefix of the remaining suffix. ``M(w)`` is the
    number of centres.

    Two tiers compute the centres:

     - ``'bruteforce'`` scans every position independently, comparing candidate roots
       symbol by symbol; it shares nothing between positions and serves as the oracle,
     - ``'fast'`` (default) compares the bit-packed word against each of its shifts at
       once. For a root length ``l`` the bit vector ``E_l`` of letter equalities
       ``w[i] == w[i+l]`` is a single XOR, and the squares with root length ``l`` are
       exactly the runs of ``l`` ones in ``E_l``, found with a logarithmic number of
       shifts (:py:func:`centres.utils.window_and`). This resolves every position for
       a fixed ``l`` in a constant number of big-integer operations.

    Bit masks produced by the fast tier index positions from the right: bit ``r``
    stands for position ``len(w) - r``.
'''

import collections
import dataclasses

from . import errors
from .words import Word, from_text, to_text, factor, is_prefix, is_suffix, is_unbordered, check_position, positions
from .utils import mask, iter_set_bits, window_and


ALGORITHMS = ('fast', 'bruteforce')

PREFIX_SPECIAL = (from_text('001001'), from_text('110110'))
SUFFIX_SPECIAL = (from_text('100100'), from_text('011011'))

SpecialStatus = collections.namedtuple('SpecialStatus', ['prefix_special_prefix', 'suffix_special_suffix'])


@dataclasses.dataclass(frozen=True)
class SquareOccurrence():
    ''' A square ``root root`` centred at position ``centre``.
    '''
    centre: int
    root: Word

    @property
    def root_length(self):
        return len(self.root)

    def as_dict(self):
        return { 'centre': self.centre, 'root': to_text(self.root), 'root_length': self.root_length }


@dataclasses.dataclass(frozen=True)
class OverlapOccurrence():
    ''' An overlap ``c x c x c`` starting at the 1-based letter index ``start``.
    '''
    start: int
    letter: int
    inner: Word

    @property
    def length(self):
        return 2 * len(self.inner) + 3

    @property
    def period(self):
        return len(self.inner) + 1

    def as_dict(self):
        return { 'start': self.start, 'letter': self.letter, 'inner': to_text(self.inner) }


@dataclasses.dataclass(frozen=True)
class AnalysisReport():
    word: Word
    length: int
    overlap_free: bool
    centres: list
    M: int
    minimal_squares: list
    bound_lhs: int
    bound_rhs: int
    tight: bool
    special: SpecialStatus
    consecutive_centres: list
    overlap: OverlapOccurrence = None
    frames: list = None

    @property
    def slack(self):
        return self.bound_rhs - self.bound_lhs

    def as_dict(self):
        ret = {
            'word': to_text(self.word),
            'length': self.length,
            'overlap_free': self.overlap_free,
            'centres': list(self.centres),
            'M': self.M,
            'minimal_squares': [sq.as_dict() for sq in self.minimal_squares],
            'bound_lhs': self.bound_lhs,
            'bound_rhs': self.bound_rhs,
            'tight': self.tight,
            'slack': self.slack,
            'special': dict(self.special._asdict()),
            'consecutive_centres': list(self.consecutive_centres)
        }
        if self.overlap is not None:
            ret['overlap'] = self.overlap.as_dict()
        if self.frames is not None:
            ret['frames'] = [sq.as_dict() for sq in self.frames]
        return ret


def _check_algorithm(algorithm):
    if algorithm not in ALGORITHMS:
        raise errors.RangeError(f'Unknown algorithm: {algorithm!r}, expected one of: {", ".join(ALGORITHMS)}')


def _square_masks(bits, n):
    ''' Yields ``(root_length, squares)`` for every root length with at least one square,
        where bit ``r`` of ``squares`` is set iff position ``n - r`` hosts a square with that root length.
    '''
    for length in range(1, n // 2 + 1):
        equal = ~(bits ^ (bits >> length)) & mask(n - length)
        if not equal:
            continue
        window = window_and(equal, length)
        if window:
            yield length, window << length


def _all_positions(n):
    return mask(n) & ~1


def centre_mask(bits, n):
    ''' Returns the fast-tier centre mask of the word packed as ``(bits, n)``.
    '''
    full = _all_positions(n)
    found = 0
    for _, squares in _square_masks(bits, n):
        found |= squares
        if found == full:
            break
    return found


def count_centres_packed(bits, n):
    return bin(centre_mask(bits, n)).count('1')


def _positions_from_mask(centre_bits, n):
    return [n - r for r in reversed(list(iter_set_bits(centre_bits)))]


def _minimal_roots(bits, n):
    ''' Returns a dict mapping every centre to the length of its shortest root.
    '''
    full = _all_positions(n)
    roots = {}
    found = 0
    for length, squares in _square_masks(bits, n):
        new = squares & ~found
        if new:
            for r in iter_set_bits(new):
                roots[n - r] = length
            found |= new
            if found == full:
                break
    return roots


def _minimal_root_bruteforce(text, p):
    for length in range(1, min(p, len(text) - p) + 1):
        if text[p - length:p] == text[p:p + length]:
            return length
    return None


def minimal_square_at(w, p):
    ''' Returns the :py:class:`SquareOccurrence` with the shortest root centred at
        position ``p`` of ``w``, or ``None`` if ``p`` is not a centre.

        Raises:
            :py:class:`centres.errors.RangeError` unless ``1 <= p < len(w)``.
    '''
    w = from_text(w)
    check_position(w, p)
    n = len(w)
    bits = w.bits
    for length in range(1, min(p, n - p) + 1):
        left = (bits >> (n - p)) & mask(length)
        right = (bits >> (n - p - length)) & mask(length)
        if left == right:
            return SquareOccurrence(p, Word.from_int(right, length))
    return None


def centres(w, algorithm='fast'):
    ''' Returns the ascending list of positions of ``w`` which are centres of squares.
    '''
    _check_algorithm(algorithm)
    w = from_text(w)
    if algorithm == 'bruteforce':
        return centres_bruteforce(w)
    return _positions_from_mask(centre_mask(w.bits, len(w)), len(w))


def centres_bruteforce(w):
    ''' Oracle version of :py:func:`centres`, scanning each position on its own.
    '''
    w = from_text(w)
    text = to_text(w)
    return [p for p in positions(w) if _minimal_root_bruteforce(text, p) is not None]


def count_centres(w, algorithm='fast'):
    ''' Returns ``M(w)``.
    '''
    _check_algorithm(algorithm)
    w = from_text(w)
    if algorithm == 'bruteforce':
        return len(centres_bruteforce(w))
    return count_centres_packed(w.bits, len(w))


def minimal_squares(w):
    ''' Returns the shortest-root square of every centre of ``w``, ordered by centre.
    '''
    w = from_text(w)
    n = len(w)
    roots = _minimal_roots(w.bits, n)
    return [SquareOccurrence(p, factor(w, p + 1, roots[p])) for p in sorted(roots)]


def consecutive_centres(w):
    ''' Returns every position ``p`` such that both ``p`` and ``p+1`` are centres.
    '''
    w = from_text(w)
    n = len(w)
    found = centre_mask(w.bits, n)
    both = found & (found >> 1)
    return [n - t - 1 for t in reversed(list(iter_set_bits(both)))]


def frames(w):
    ''' Returns all squares of ``w`` with unbordered roots, ordered by centre and root length.

        The centres of frames are exactly the centres of ``w``: the shortest square at
        a centre is always a frame.
    '''
    w = from_text(w)
    n = len(w)
    bits = w.bits
    unbordered = {}
    ret = []
    for length, squares in _square_masks(bits, n):
        for r in iter_set_bits(squares):
            root_bits = (bits >> (r - length)) & mask(length)
            key = (root_bits, length)
            if key not in unbordered:
                unbordered[key] = is_unbordered(Word.from_int(root_bits, length))
            if unbordered[key]:
                ret.append(SquareOccurrence(n - r, Word.from_int(root_bits, length)))

    ret.sort(key=lambda sq: (sq.centre, sq.root_length))
    return ret


def _overlap_windows(bits, n):
    ''' Yields ``(period, windows)`` for overlaps ``cxcxc`` with ``|x| = period - 1``;
        bit ``k`` of ``windows`` marks an overlap starting at 0-based letter ``n - 1 - 2*period - k``.
    '''
    for period in range(1, (n - 1) // 2 + 1):
        equal = ~(bits ^ (bits >> period)) & mask(n - period)
        if not equal:
            continue
        window = window_and(equal, period + 1)
        if window:
            yield period, window


def _overlap_occurrence(w, start, period):
    return OverlapOccurrence(start + 1, w[start], factor(w, start + 2, period - 1))


def find_overlap(w, algorithm='fast'):
    ''' Returns the leftmost (and then shortest) overlap ``cxcxc`` occurring in ``w``,
        or ``None`` if ``w`` is overlap-free.
    '''
    _check_algorithm(algorithm)
    w = from_text(w)
    if algorithm == 'bruteforce':
        return find_overlap_bruteforce(w)

    n = len(w)
    best = None
    for period, window in _overlap_windows(w.bits, n):
        start = n - 1 - 2 * period - (window.bit_length() - 1)
        if best is None or start < best[0]:
            best = (start, period)
            if not start:
                break

    if best is None:
        return None
    return _overlap_occurrence(w, *best)


def find_overlap_bruteforce(w):
    w = from_text(w)
    text = to_text(w)
    n = len(text)
    for start in range(n):
        for period in range(1, (n - start - 1) // 2 + 1):
            if text[start:start + period + 1] == text[start + period:start + 2 * period + 1]:
                return _overlap_occurrence(w, start, period)
    return None


def is_overlap_free(w, algorithm='fast'):
    _check_algorithm(algorithm)
    w = from_text(w)
    if algorithm == 'bruteforce':
        return find_overlap_bruteforce(w) is None
    return is_overlap_free_packed(w.bits, len(w))


def is_overlap_free_packed(bits, n):
    for _ in _overlap_windows(bits, n):
        return False
    return True


def ends_with_overlap_packed(bits, n):
    ''' Whether the word packed as ``(bits, n)`` has an overlap ending at its last letter.

        If the word without its last letter is overlap-free, this is equivalent to
        the word not being overlap-free.
    '''
    for period in range(1, (n - 1) // 2 + 1):
        if not ((bits ^ (bits >> period)) & mask(period + 1)):
            return True
    return False


def special_status(w):
    ''' Reports whether ``w`` starts with a prefix-special word (001001 or 110110)
        and whether it ends with a suffix-special word (100100 or 011011).
    '''
    w = from_text(w)
    return SpecialStatus(
        prefix_special_prefix=any(is_prefix(c, w) for c in PREFIX_SPECIAL),
        suffix_special_suffix=any(is_suffix(c, w) for c in SUFFIX_SPECIAL))


def analyze(w, with_frames=False):
    ''' Builds the full :py:class:`AnalysisReport` of ``w``.

        Arguments:
            w : a :py:class:`centres.words.Word` or its text
            with_frames : if ``True``, the report also lists all frames (see :py:func:`frames`)
    '''
    w = from_text(w)
    n = len(w)
    squares = minimal_squares(w)
    found = [sq.centre for sq in squares]
    overlap = find_overlap(w)
    overlap_free = overlap is None
    m = len(found)
    centre_set = set(found)

    return AnalysisReport(
        word=w,
        length=n,
        overlap_free=overlap_free,
        centres=found,
        M=m,
        minimal_squares=squares,
        bound_lhs=2 * m,
        bound_rhs=n + 3,
        tight=overlap_free and 2 * m == n + 3,
        special=special_status(w),
        consecutive_centres=[p for p in found if p + 1 in centre_set],
        overlap=overlap,
        frames=frames(w) if with_frames else None)


__all__ = [
    'SquareOccurrence', 'OverlapOccurrence', 'AnalysisReport', 'SpecialStatus',
    'minimal_square_at', 'centres', 'centres_bruteforce', 'count_centres', 'minimal_squares',
    'consecutive_centres', 'frames', 'find_overlap', 'find_overlap_bruteforce',
    'is_overlap_free', 'special_status', 'analyze'
]
