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

''' Timing of the two centre computations on generated inputs.
'''

import time
import random
import logging
import dataclasses

from . import errors
from .words import Word, prefix
from .analysis import ALGORITHMS, centres, centres_bruteforce
from .thue_morse import tm_prefix
from .constructions import build_wn
from .verify import VerificationReport


logger = logging.getLogger(__name__)

INPUTS = ('random', 'tm', 'wn')
TSV_COMMENT = '# timing columns are wall-clock measurements and differ between runs\n'
TSV_COLUMNS = ('algorithm', 'input', 'length', 'trials', 'seconds_total', 'seconds_per_trial', 'mean_M')


@dataclasses.dataclass(frozen=True)
class BenchResult():
    algorithm: str
    input_kind: str
    length: int
    trials: int
    seconds_total: float
    mean_m: float

    @property
    def seconds_per_trial(self):
        return self.seconds_total / self.trials if self.trials else 0.0

    def tsv_row(self):
        return '\t'.join([self.algorithm, self.input_kind, str(self.length), str(self.trials),
            f'{self.seconds_total:.6f}', f'{self.seconds_per_trial:.6f}', f'{self.mean_m:.3f}'])


def generate_inputs(kind, length, trials, seed):
    ''' Returns ``trials`` words of the given ``length``:

         - ``random``: uniformly random words drawn with ``seed``,
         - ``tm``: prefixes of ``t`` (the same word every trial),
         - ``wn``: prefixes of the shortest ``w_n`` which is at least ``length`` letters long.
    '''
    if length < 0 or trials < 1:
        raise errors.RangeError(f'Expected length >= 0 and trials >= 1, got: length={length}, trials={trials}')

    if kind == 'random':
        rng = random.Random(seed)
        return [Word.from_int(rng.getrandbits(length) if length else 0, length) for _ in range(trials)]
    if kind == 'tm':
        return [tm_prefix(length)] * trials
    if kind == 'wn':
        n = 1
        while 6 * 2 ** n + 1 < length:
            n += 1
        return [prefix(build_wn(n).word, length)] * trials

    raise errors.RangeError(f'Unknown input kind: {kind!r}, expected one of: {", ".join(INPUTS)}')


def check_agreement(inputs):
    ''' Compares both tiers on ``inputs`` and returns a :py:class:`centres.verify.VerificationReport`.
    '''
    mismatches = [w for w in inputs if centres(w) != centres_bruteforce(w)]
    return VerificationReport(
        check_name='bench-agreement',
        parameters={ 'words': len(inputs) },
        passed=not mismatches,
        counterexamples=tuple(mismatches),
        notes=tuple(f'tiers disagree on a word of length {len(w)}' for w in mismatches))


@errors.api_entry
def run(algorithm, length, trials, seed, kind='random'):
    ''' Returns ``(result, agreement)``; ``result`` is ``None`` if the two tiers disagree on any input.
    '''
    if algorithm not in ALGORITHMS:
        raise errors.RangeError(f'Unknown algorithm: {algorithm!r}, expected one of: {", ".join(ALGORITHMS)}')

    inputs = generate_inputs(kind, length, trials, seed)
    agreement = check_agreement(inputs)
    if not agreement:
        logger.error('Centre computations disagree on %d inputs, skipping timing', len(agreement.counterexamples))
        return None, agreement

    total_m = 0
    start = time.perf_counter()
    for w in inputs:
        total_m += len(centres(w, algorithm=algorithm))
    elapsed = time.perf_counter() - start

    logger.info('%s on %d %s words of length %d: %.6f s', algorithm, trials, kind, length, elapsed)
    return BenchResult(algorithm, kind, length, trials, elapsed, total_m / trials), agreement


def render(result):
    return TSV_COMMENT + '\t'.join(TSV_COLUMNS) + '\n' + result.tsv_row() + '\n'
