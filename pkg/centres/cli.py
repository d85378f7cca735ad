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

''' The ``centres`` command.

    Exit codes: 0 on success, 1 if a verification (or the tier agreement check of
    ``bench``) fails, 2 on invalid usage or input. Reports go to stdout, diagnostics
    and logs to stderr.
'''

import sys
import logging
import pathlib
import argparse
import dataclasses

from . import errors
from . import reports
from . import bench
from . import verify
from .config import Config
from .words import from_text, to_text
from .analysis import ALGORITHMS, analyze
from .thue_morse import alpha, tm_prefix
from .constructions import build_wn
from .enumeration import WordClass, stats, enumerate_words, check_cap, check_length_cap


PROG = 'centres'

logger = logging.getLogger(__name__)
_handler = None


@dataclasses.dataclass(frozen=True)
class CommandOutcome():
    exit_code: int
    payload: str
    diagnostics: str = ''


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise errors.UsageError(message, usage=self.format_usage())


def _configure_logging(verbosity):
    global _handler
    root = logging.getLogger(__package__)
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter('%(levelname)s:%(name)s: %(message)s'))
        root.addHandler(_handler)
    root.setLevel(logging.DEBUG if verbosity >= 2 else logging.INFO if verbosity == 1 else logging.WARNING)


def _add_format(parser):
    parser.add_argument('--format', choices=reports.FORMATS, default=reports.DEFAULT_FORMAT, help='Output format (default: %(default)s)')


def _add_workers(parser):
    parser.add_argument('--workers', type=int, default=None, help='Number of worker processes, overrides parallel.workers')


def _read_word_file(path):
    ret = []
    with errors.rethrow_point(errors.UsageError, file=path):
        with open(path, 'r') as f:
            lines = f.read().split('\n')

    for lineno, line in enumerate(lines, 1):
        line = line.rstrip('\r')
        if not line.strip() or line.startswith('#'):
            continue
        ret.append(from_text(line, name=path, line=lineno))
    return ret


def cmd_analyze(args, config):
    if args.word is not None:
        inputs = [from_text(args.word, name='--word')]
    else:
        inputs = _read_word_file(args.file)

    return 0, reports.render((analyze(w, with_frames=args.frames) for w in inputs), args.format)


def cmd_construct(args, config):
    if args.kind == 'wn':
        check_cap(args.n, 'caps.construction_max_n', f'Building w_n for n={args.n}', config)
        obj = build_wn(args.n)
    elif args.kind == 'alpha':
        obj = reports.WordRecord('alpha', 'n', args.n, alpha(args.n))
    else:
        obj = reports.WordRecord('tm', 'length', args.length, tm_prefix(args.length))

    return 0, reports.render_one(obj, args.format)


def cmd_enumerate(args, config):
    word_class = WordClass.parse(args.word_class)
    if args.stats:
        summary = stats(args.length, word_class, config=config, workers=args.workers)
        witnesses = (args.witnesses,) if args.witnesses else ('min', 'max')
        return 0, reports.render_one(summary, args.format, document=summary.as_dict(witnesses=witnesses))

    if args.witnesses:
        summary = stats(args.length, word_class, config=config, workers=args.workers)
        chosen = summary.min_witnesses if args.witnesses == 'min' else summary.max_witnesses
        return 0, ''.join(to_text(w) + '\n' for w in chosen)

    check_length_cap(args.length, word_class, config)
    lines = []
    enumerate_words(args.length, word_class, lambda w: lines.append(to_text(w) + '\n'))
    return 0, ''.join(lines)


def _run_check(args, config):
    check = args.check
    if check == 'min-centres':
        return [verify.verify_min_centres(args.n_from, args.n_to, config=config, workers=args.workers)]
    if check == 'upper-bound':
        return [verify.verify_upper_bound(args.max_length, config=config)]
    if check == 'construction':
        return [verify.verify_construction(args.max_n, config=config)]
    if check == 'lemma-compose':
        return [verify.verify_lemma_compose(args.max_x, args.max_w, config=config)]
    if check == 'tm-even':
        return [verify.verify_tm_even(args.max_length, config=config)]
    if check == 'pansiot':
        return [verify.verify_pansiot(args.prefix_length, config=config)]
    if check == 'unary':
        return [verify.verify_unary(args.max_length, config=config)]
    if check == 'alpha':
        return [verify.verify_alpha_recurrence(args.max_n, config=config)]
    if check == 'special-words':
        return [verify.verify_special_words(config=config)]
    if check == 'mu-preserves':
        return [verify.verify_mu_preserves(args.max_length, config=config)]
    if check == 'oracle':
        return [verify.verify_oracle(args.length, args.random, args.max_random_length, seed=args.seed, config=config)]
    if check == 'enumerator':
        return [verify.verify_enumerator(args.max_length, config=config, workers=args.workers)]
    return verify.run_suite(config=config, workers=args.workers)


def cmd_verify(args, config):
    results = _run_check(args, config)
    exit_code = 0 if all(results) else 1
    return exit_code, reports.render(results, args.format)


def cmd_bench(args, config):
    trials = args.trials if args.trials is not None else config.bench.trials
    seed = args.seed if args.seed is not None else config.bench.seed
    kind = args.input or config.bench.input
    result, agreement = bench.run(args.algorithm, args.length, trials, seed, kind=kind)
    if result is None:
        return 1, reports.render_one(agreement, 'json')
    return 0, bench.render(result)


def _build_verify_parser(subparsers):
    parser = subparsers.add_parser('verify', help='Run a verification sweep')
    checks = parser.add_subparsers(dest='check', metavar='CHECK', required=True)

    def add(name, help):
        sub = checks.add_parser(name, help=help)
        _add_format(sub)
        _add_workers(sub)
        return sub

    sub = add('min-centres', 'Least M over all binary words of each length')
    sub.add_argument('--from', dest='n_from', type=int, required=True)
    sub.add_argument('--to', dest='n_to', type=int, required=True)

    sub = add('upper-bound', '2M <= |w| + 3 over overlap-free words')
    sub.add_argument('--max-length', type=int, required=True)

    sub = add('construction', 'The extremal words w_n')
    sub.add_argument('--max-n', type=int, required=True)

    sub = add('lemma-compose', 'x w (w s^-1) is overlap-free')
    sub.add_argument('--max-x', type=int, required=True)
    sub.add_argument('--max-w', type=int, required=True)

    sub = add('tm-even', 'Even-length factors of t at even offsets')
    sub.add_argument('--max-length', type=int, required=True)

    sub = add('pansiot', 'Frames and consecutive centres in a prefix of t')
    sub.add_argument('--prefix-length', type=int, required=True)

    sub = add('unary', 'M(0^n) = n - 1')
    sub.add_argument('--max-length', type=int, default=64)

    sub = add('alpha', 'The recurrence of alpha_n')
    sub.add_argument('--max-n', type=int, required=True)

    add('special-words', 'Special words cannot be extended on one side')

    sub = add('mu-preserves', 'mu keeps words overlap-free')
    sub.add_argument('--max-length', type=int, required=True)

    sub = add('oracle', 'Fast and brute-force centre computations agree')
    sub.add_argument('--length', type=int, required=True)
    sub.add_argument('--random', type=int, default=0)
    sub.add_argument('--max-random-length', type=int, default=0)
    sub.add_argument('--seed', type=int, default=0)

    sub = add('enumerator', 'Backtracking enumeration equals filtered brute force')
    sub.add_argument('--max-length', type=int, required=True)

    add('all', 'Every sweep with the ranges configured under suite')
    parser.set_defaults(handler=cmd_verify)


def build_parser():
    parser = _ArgumentParser(prog=PROG, description='Squares, overlaps and centres in binary words.')
    parser.add_argument('--config', action='append', default=[], metavar='FILE', help='Yaml file with config overrides, can be repeated')
    parser.add_argument('--set', action='append', default=[], metavar='KEY=VALUE', help='Override a single config value, e.g. caps.all_binary_max_length=20')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='Log progress to stderr, repeat for more detail')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND', required=True)

    sub = subparsers.add_parser('analyze', help='Report squares and overlaps of words')
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument('--word')
    source.add_argument('--file', metavar='PATH', help='Text file with one word per line, # starts a comment line')
    sub.add_argument('--frames', action='store_true', help='Include all frames in the reports')
    _add_format(sub)
    sub.set_defaults(handler=cmd_analyze)

    sub = subparsers.add_parser('construct', help='Build one of the special words')
    kinds = sub.add_subparsers(dest='kind', metavar='KIND', required=True)
    for name, param in [('wn', '--n'), ('alpha', '--n'), ('tm', '--length')]:
        kind = kinds.add_parser(name)
        kind.add_argument(param, type=int, required=True)
        _add_format(kind)
    sub.set_defaults(handler=cmd_construct)

    sub = subparsers.add_parser('enumerate', help='List words of a given length or summarize M over them')
    sub.add_argument('--length', type=int, required=True)
    sub.add_argument('--class', dest='word_class', choices=['overlap-free', 'all', 'all-binary'], default='overlap-free')
    sub.add_argument('--stats', action='store_true', help='Print the histogram of M instead of the words')
    sub.add_argument('--witnesses', choices=['min', 'max'], default=None)
    _add_format(sub)
    _add_workers(sub)
    sub.set_defaults(handler=cmd_enumerate)

    _build_verify_parser(subparsers)

    sub = subparsers.add_parser('bench', help='Time a centre computation')
    sub.add_argument('--algorithm', choices=ALGORITHMS, required=True)
    sub.add_argument('--length', type=int, required=True)
    sub.add_argument('--trials', type=int, default=None)
    sub.add_argument('--seed', type=int, default=None)
    sub.add_argument('--input', choices=bench.INPUTS, default=None)
    sub.set_defaults(handler=cmd_bench)

    return parser


def run(arguments):
    ''' Executes the command described by ``arguments`` (without the program name)
        and returns a :py:class:`CommandOutcome`; nothing is written to stdout.
    '''
    parser = build_parser()
    try:
        args = parser.parse_args(arguments)
        _configure_logging(args.verbose)
        logger.debug('Running %s with %s', args.command, arguments)
        config = Config.build(*[pathlib.Path(p) for p in args.config], *Config.process_cmdline(args.set))
        exit_code, payload = args.handler(args, config)
        return CommandOutcome(exit_code, payload)
    except SystemExit as e:
        # --help
        return CommandOutcome(e.code or 0, '')
    except errors.UsageError as e:
        usage = getattr(e, 'usage', None) or parser.format_usage()
        return CommandOutcome(2, '', f'{usage}{PROG}: error: {e.error_msg}\n')
    except errors.Error as e:
        return CommandOutcome(2, '', f'{PROG}: error: {e}\n')


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    outcome = run(argv)
    if outcome.payload:
        sys.stdout.write(outcome.payload)
        sys.stdout.flush()
    if outcome.diagnostics:
        sys.stderr.write(outcome.diagnostics)
    return outcome.exit_code
