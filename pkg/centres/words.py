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

''' Immutable binary words and the elementary operations on them.

    A :py:class:`Word` is stored bit-packed in a single Python integer together with
    its length. The first letter is the most significant bit, so for a fixed length
    the numeric order of the packed values is the lexicographic order of the words,
    and ``int(text, 2)`` is the packed form of ``text``.

    Two index conventions are in use and should not be confused:

     - letter indices are 1-based (``factor(w, 1, len(w)) == w``),
     - positions are gaps: position ``p`` with ``1 <= p < len(w)`` is the place
       right after the prefix of length ``p``.

    Python's own ``w[i]`` indexing and slicing stay 0-based.
'''

import re

from . import errors
from .utils import mask


_illegal_symbol = re.compile(r'[^01]')
_to_complement = str.maketrans('01', '10')


class Word():
    ''' A finite word over the alphabet ``{0, 1}``.

        Instances are immutable and hashable. Equality is equality of the symbol
        sequences; ordering sorts shorter words first and words of equal length
        lexicographically.
    '''
    __slots__ = ('_bits', '_length')

    def __init__(self, text=''):
        ''' Arguments:
                text : a string of ``'0'`` and ``'1'`` characters, or another ``Word``
        '''
        if isinstance(text, Word):
            bits, length = text._bits, text._length
        else:
            parsed = from_text(text)
            bits, length = parsed._bits, parsed._length

        object.__setattr__(self, '_bits', bits)
        object.__setattr__(self, '_length', length)

    @classmethod
    def from_int(cls, bits, length):
        ''' Creates a word of ``length`` letters from its bit-packed form (first letter
            is the most significant bit).
        '''
        if length < 0:
            raise errors.RangeError(f'Word length cannot be negative, got: {length}')
        if bits < 0 or bits >> length:
            raise errors.RangeError(f'Value {bits} does not fit in a word of length {length}')
        ret = object.__new__(cls)
        object.__setattr__(ret, '_bits', bits)
        object.__setattr__(ret, '_length', length)
        return ret

    @classmethod
    def _unchecked(cls, bits, length):
        ret = object.__new__(cls)
        object.__setattr__(ret, '_bits', bits)
        object.__setattr__(ret, '_length', length)
        return ret

    @property
    def bits(self):
        return self._bits

    def __setattr__(self, name, value):
        raise AttributeError(f'{type(self).__name__!r} objects are immutable')

    def __delattr__(self, name):
        raise AttributeError(f'{type(self).__name__!r} objects are immutable')

    def __reduce__(self):
        return (Word.from_int, (self._bits, self._length))

    def __len__(self):
        return self._length

    def __bool__(self):
        return self._length > 0

    def __iter__(self):
        bits = self._bits
        for shift in range(self._length - 1, -1, -1):
            yield (bits >> shift) & 1

    def __getitem__(self, key):
        if isinstance(key, slice):
            start, stop, step = key.indices(self._length)
            if step == 1:
                if stop <= start:
                    return EMPTY
                return factor(self, start + 1, stop - start)
            return Word._unchecked_text(to_text(self)[key])

        if key < 0:
            key += self._length
        if key < 0 or key >= self._length:
            raise IndexError(f'Word index out of range: {key}')
        return (self._bits >> (self._length - 1 - key)) & 1

    @classmethod
    def _unchecked_text(cls, text):
        return cls._unchecked(int(text, 2) if text else 0, len(text))

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return Word._unchecked((self._bits << other._length) | other._bits, self._length + other._length)

    def __mul__(self, times):
        if not isinstance(times, int):
            return NotImplemented
        if times < 0:
            raise errors.RangeError(f'Cannot repeat a word a negative number of times: {times}')
        return Word._unchecked_text(to_text(self) * times)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._length == other._length and self._bits == other._bits

    def _key(self):
        return (self._length, self._bits)

    def __lt__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._key() < other._key()

    def __le__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._key() <= other._key()

    def __gt__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._key() > other._key()

    def __ge__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._key() >= other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f'Word({to_text(self)!r})'


EMPTY = Word._unchecked(0, 0)


def from_text(text, name=None, line=None, column=0):
    ''' Parses ``text`` into a :py:class:`Word`.

        Arguments:
            text : ``str`` containing only ``'0'`` and ``'1'`` characters, no whitespace
            name : optional name of the source (e.g. a file name), used in error messages
            line : optional 1-based line number of ``text`` within the source
            column : offset of ``text`` within its line

        Raises:
            :py:class:`centres.errors.ParsingError` pointing at the first illegal character,
            its ``index`` attribute is the 1-based character position.
    '''
    if isinstance(text, Word):
        return text
    if not isinstance(text, str):
        raise errors.ParsingError(f'Expected str, got: {type(text).__name__}', index=None)

    illegal = _illegal_symbol.search(text)
    if illegal is not None:
        pos = illegal.start()
        raise errors.ParsingError(
            f'Illegal symbol {text[pos]!r} at character {pos + 1}, words may only contain 0 and 1',
            mark=errors.make_mark(text, pos, name=name, line=line, column=column),
            index=pos + 1)

    return Word._unchecked_text(text)


def to_text(w):
    ''' Inverse of :py:func:`from_text`.
    '''
    if not w._length:
        return ''
    return format(w._bits, f'0{w._length}b')


def _check_factor_range(w, start, length):
    if start < 1 or length < 0 or start + length - 1 > w._length:
        raise errors.RangeError(f'Factor of length {length} starting at letter {start} does not fit in a word of length {w._length}')


def factor(w, start, length):
    ''' Returns ``length`` letters of ``w`` starting at the 1-based letter index ``start``.
    '''
    _check_factor_range(w, start, length)
    shift = w._length - (start - 1) - length
    return Word._unchecked((w._bits >> shift) & mask(length), length)


def complement(w):
    ''' Flips every symbol of ``w``.
    '''
    return Word._unchecked(w._bits ^ mask(w._length), w._length)


def reverse(w):
    if w._length <= 1:
        return w
    return Word._unchecked(int(to_text(w)[::-1], 2), w._length)


def drop_suffix(w, k):
    ''' Returns ``w`` with its last ``k`` letters removed (``wv^-1`` for ``|v| = k``).
    '''
    if k < 0 or k > w._length:
        raise errors.RangeError(f'Cannot drop {k} letters from a word of length {w._length}')
    return Word._unchecked(w._bits >> k, w._length - k)


def prefix(w, length):
    return drop_suffix(w, w._length - length)


def suffix(w, length):
    if length < 0 or length > w._length:
        raise errors.RangeError(f'Word of length {w._length} has no suffix of length {length}')
    return Word._unchecked(w._bits & mask(length), length)


def is_prefix(u, w):
    return u._length <= w._length and (w._bits >> (w._length - u._length)) == u._bits


def is_suffix(u, w):
    return u._length <= w._length and (w._bits & mask(u._length)) == u._bits


def occurs_in(u, w):
    ''' Whether ``u`` is a factor of ``w``.
    '''
    return u._length <= w._length and to_text(u) in to_text(w)


def find(u, w, start=1):
    ''' Returns the 1-based letter index of the first occurrence of ``u`` in ``w``
        at or after ``start``, or ``None``.
    '''
    idx = to_text(w).find(to_text(u), start - 1)
    if idx < 0:
        return None
    return idx + 1


def shortest_border(w):
    ''' Returns the shortest nonempty word ``v != w`` which is both a prefix and
        a suffix of ``w``, or ``None`` if ``w`` is unbordered (always the case when ``len(w) <= 1``).
    '''
    n = w._length
    bits = w._bits
    for length in range(1, n):
        if (bits >> (n - length)) == (bits & mask(length)):
            return Word._unchecked(bits & mask(length), length)
    return None


def is_unbordered(w):
    return shortest_border(w) is None


def longest_common_suffix(x, w):
    length = min(x._length, w._length)
    diff = (x._bits ^ w._bits) & mask(length)
    if diff:
        length = (diff & -diff).bit_length() - 1
    return Word._unchecked(w._bits & mask(length), length)


def is_conjugate(u, v):
    ''' Whether ``v`` is a cyclic rotation of ``u``.
    '''
    return u._length == v._length and occurs_in(v, u + u)


def positions(w):
    ''' All positions of ``w``, i.e. ``range(1, len(w))``.
    '''
    return range(1, max(w._length, 1))


def check_position(w, p):
    if not 1 <= p < w._length:
        raise errors.RangeError(f'Position {p} is not valid for a word of length {w._length}, expected 1 <= p < {w._length}')


def concat(*words):
    ret = EMPTY
    for w in words:
        ret = ret + from_text(w)
    return ret
