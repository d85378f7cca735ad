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
import pathlib
import functools
import collections.abc as cabc

from .utils import Bunch
from . import errors
from . import yaml


DEFAULTS_FILE = pathlib.Path(__file__).parent.joinpath('defaults.yaml')
MAX_WORKERS_ENV = 'CENTRES_MAX_WORKERS'


class Config(Bunch):
    ''' Settings of the package: enumeration caps, witness limits, parallelism and
        the ranges used by the verification suite.

        A config always starts from ``defaults.yaml`` shipped with the package; further
        sources can only override existing keys, so a misspelled key is reported
        instead of being silently ignored.
    '''

    @classmethod
    @errors.api_entry
    def build(cls, *sources, raw_yaml=None, filename=None):
        ''' Builds a config from the defaults and the provided yaml ``sources``,
            later sources taking precedence.

            Arguments:
                *sources : file names, :py:class:`pathlib.Path` objects, yaml strings or mappings
                raw_yaml : if ``None`` (default), a string source is treated as a file name
                    when such a file exists and as yaml otherwise; ``True``/``False``
                    force one interpretation for all sources
                filename : a name associated with raw yaml sources, used in error messages
        '''
        merged = _load_defaults()
        for source in sources:
            document, name = cls._read_source(source, raw_yaml=raw_yaml, filename=filename)
            if document is None:
                continue
            if not isinstance(document, cabc.Mapping):
                raise errors.ConfigError(f'Expected a mapping at the top level of {name!r}, got: {type(document).__name__}')
            merged = _merge(merged, document, path=(), name=name)

        return cls(merged)

    @staticmethod
    def _read_source(source, raw_yaml=None, filename=None):
        if isinstance(source, cabc.Mapping):
            return source, filename or '<mapping>'

        if isinstance(source, pathlib.Path):
            source = str(source)
            raw_yaml = False

        if raw_yaml is None:
            raw_yaml = not os.path.isfile(os.path.expanduser(source))

        if raw_yaml:
            name = filename or '<raw yaml>'
            return yaml.load(source, name=name), name

        name = filename or source
        try:
            with open(os.path.expanduser(source), 'r') as f:
                return yaml.load(f, name=name), name
        except OSError as e:
            raise errors.ConfigError(f'Cannot read config file {source!r}: {e.strerror}') from e

    @classmethod
    def process_cmdline(cls, args):
        ''' Turns command-line assignments like ``caps.all_binary_max_length=20`` into
            yaml documents which can be passed to :py:meth:`build`. Values are parsed as yaml,
            so ``parallel.workers=4`` yields an integer and ``min_centres.exceptions=[]`` a list.
        '''
        documents = []
        for idx, option in enumerate(args):
            if '=' not in option:
                raise errors.ConfigError(f'Expected an assignment of the form key=value in command-line argument #{idx+1}, got: {option!r}')

            key, value = [o.strip() for o in option.split('=', maxsplit=1)]
            if not key or any(not part for part in key.split('.')):
                raise errors.ConfigError(f'Invalid key in command-line argument #{idx+1}: {key!r}')

            parts = key.split('.')
            document = '{ ' + ': { '.join(parts) + ': ' + (value or 'null') + ' ' + '}' * len(parts)
            documents.append(document)

        return documents

    @classmethod
    def build_from_cmdline(cls, *assignments, sources=()):
        documents = cls.process_cmdline(assignments)
        return cls.build(*sources, *documents)

    @classmethod
    def default(cls):
        return _default_config()

    def max_workers(self, requested=None):
        ''' Returns the number of workers to use: ``requested`` (or ``parallel.workers``
            if ``None``), capped by the ``CENTRES_MAX_WORKERS`` environment variable.
        '''
        workers = self.parallel.workers if requested is None else requested
        cap = os.environ.get(MAX_WORKERS_ENV)
        if cap:
            try:
                cap = int(cap)
            except ValueError:
                raise errors.ConfigError(f'{MAX_WORKERS_ENV} should be an integer, got: {cap!r}') from None
            workers = min(workers, cap)
        return max(1, workers)


def _load_defaults():
    with DEFAULTS_FILE.open('r') as f:
        return yaml.load(f, name=str(DEFAULTS_FILE))


@functools.lru_cache(maxsize=None)
def _default_config():
    return Config.build()


def _merge(base, override, path, name):
    ret = dict(base)
    for key, value in override.items():
        key_path = '.'.join(map(str, path + (key,)))
        if key not in base:
            raise errors.ConfigError(f'Unknown config key {key_path!r} in {name!r}')

        current = base[key]
        if isinstance(current, cabc.Mapping):
            if not isinstance(value, cabc.Mapping):
                raise errors.ConfigError(f'Config key {key_path!r} expects a mapping, got: {value!r} in {name!r}')
            ret[key] = _merge(current, value, path + (key,), name)
        else:
            if isinstance(value, cabc.Mapping):
                raise errors.ConfigError(f'Config key {key_path!r} expects a scalar or a list, got a mapping in {name!r}')
            if current is not None and value is None:
                raise errors.ConfigError(f'Config key {key_path!r} expects a value of type {type(current).__name__!r}, got null in {name!r}')
            if current is not None and not _compatible(current, value):
                raise errors.ConfigError(f'Config key {key_path!r} expects a value of type {type(current).__name__!r}, got: {value!r} in {name!r}')
            ret[key] = value

    return ret


def _compatible(current, value):
    if isinstance(current, bool) or isinstance(value, bool):
        return isinstance(current, bool) and isinstance(value, bool)
    if isinstance(current, int):
        return isinstance(value, int)
    if isinstance(current, list):
        return isinstance(value, list)
    return isinstance(value, type(current))
