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

''' The Thue-Morse morphism ``mu`` (0 -> 01, 1 -> 10), its fixed point ``t`` and the
    family of factors ``alpha(n)`` of ``t``.
'''

import logging
import threading
import collections

from . import errors
from .words import Word, EMPTY, from_text, to_text, complement, drop_suffix, factor, find


logger = logging.getLogger(__name__)

MorphismImage = collections.namedtuple('MorphismImage', ['image_of_zero', 'image_of_one'])

MU = MorphismImage(image_of_zero=from_text('01'), image_of_one=from_text('10'))

ALPHA_START = 5
ALPHA_RECURRENCE_PREFIX = from_text('1001')

_mu_table = str.maketrans({ '0': to_text(MU.image_of_zero), '1': to_text(MU.image_of_one) })

_prefix_lock = threading.Lock()
_prefix = from_text('0')


def mu(w, k=1):
    ''' Applies the morphism ``k`` times to ``w``; ``len(mu(w)) == 2 * len(w)``.
    '''
    if k < 0:
        raise errors.RangeError(f'The morphism cannot be applied a negative number of times: {k}')
    text = to_text(from_text(w))
    for _ in range(k):
        text = text.translate(_mu_table)
    return Word._unchecked_text(text)


def tm_prefix(length):
    ''' Returns the prefix of ``t`` of the given ``length``.

        ``t`` is grown by doubling (``w -> w + complement(w)``), which produces the same
        words as iterating the morphism on ``0``. The longest prefix computed so far is
        cached and shared between threads.
    '''
    global _prefix
    if length < 0:
        raise errors.RangeError(f'Prefix length cannot be negative, got: {length}')

    current = _prefix
    if len(current) < length:
        with _prefix_lock:
            current = _prefix
            while len(current) < length:
                current = current + complement(current)
            if len(current) > len(_prefix):
                logger.debug('Thue-Morse prefix cache grown to %d letters', len(current))
                _prefix = current

    if not length:
        return EMPTY
    return drop_suffix(current, len(current) - length)


def tm_letter(index):
    ''' Returns the letter of ``t`` at the 1-based ``index``: the parity of the number
        of ones in the binary expansion of ``index - 1``.
    '''
    if index < 1:
        raise errors.RangeError(f'Letter index should be at least 1, got: {index}')
    return bin(index - 1).count('1') & 1


def tm_factor(start, length):
    ''' Returns the factor of ``t`` of the given ``length`` starting at the 1-based letter ``start``.
    '''
    if start < 1 or length < 0:
        raise errors.RangeError(f'Invalid factor of t: start={start}, length={length}')
    return factor(tm_prefix(start + length - 1), start, length)


def alpha(n):
    ''' Returns ``alpha_n``, the factor of ``t`` of length ``3 * 2**n`` starting at letter 5::

            alpha(1) == Word('100110')
            alpha(2) == Word('100110010110')
    '''
    if n < 1:
        raise errors.RangeError(f'alpha(n) is defined for n >= 1, got: {n}')
    return tm_factor(ALPHA_START, 3 * 2 ** n)


def alpha_by_recurrence(n):
    ''' Computes ``alpha_n`` from ``alpha_1`` with ``alpha_{k+1} = 1001 + mu(alpha_k)`` minus its last four letters.
    '''
    if n < 1:
        raise errors.RangeError(f'alpha(n) is defined for n >= 1, got: {n}')
    ret = alpha(1)
    for _ in range(n - 1):
        ret = ALPHA_RECURRENCE_PREFIX + drop_suffix(mu(ret), len(ALPHA_RECURRENCE_PREFIX))
    return ret


def mu_alpha_offset(n):
    ''' Returns the 1-based letter index of the first occurrence of ``mu(alpha(n))`` in ``t``,
        or ``None`` if it does not occur within a prefix long enough to contain ``mu`` of the
        prefix ``0110 alpha(n)``.
    '''
    target = mu(alpha(n))
    horizon = 2 * (ALPHA_START - 1 + 3 * 2 ** n) + len(target)
    return find(target, tm_prefix(horizon))


__all__ = ['MU', 'MorphismImage', 'mu', 'tm_prefix', 'tm_letter', 'tm_factor', 'alpha', 'alpha_by_recurrence', 'mu_alpha_offset']
