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

import yaml

from .words import Word, from_text, to_text
from . import errors


class CentresLoader(yaml.SafeLoader):
    ''' A safe loader which additionally understands the ``!word`` tag::

            target: !word 0010011010011
    '''
    pass


class CentresDumper(yaml.SafeDumper):
    ''' A safe dumper which writes :py:class:`centres.words.Word` values as their text.
        Texts like ``0110`` would resolve as integers, so they always come out quoted.
    '''
    pass


def add_constructor(tag, constructor):
    yaml.add_constructor(tag, constructor, Loader=CentresLoader)


def add_representer(data_type, representer):
    yaml.add_representer(data_type, representer, Dumper=CentresDumper)


def _word_constructor(loader, node):
    value = loader.construct_scalar(node)
    if value is None:
        value = ''
    mark = node.start_mark
    column = mark.column
    if node.style in ('"', "'"):
        column += 1
    return from_text(str(value), name=mark.name, line=mark.line + 1, column=column)


def _word_representer(dumper, value):
    return dumper.represent_str(to_text(value))


add_constructor('!word', _word_constructor)
add_representer(Word, _word_representer)


def load(stream, name=None):
    ''' Parses a single yaml document from ``stream`` (a string or a file object).
        Syntax errors are rethrown as :py:class:`centres.errors.ConfigError`.
    '''
    with errors.rethrow_point(errors.ConfigError, source=name):
        loader = CentresLoader(stream)
        if name is not None:
            loader.name = name
        try:
            return loader.get_single_data()
        finally:
            loader.dispose()


def dump(data, stream=None, **kwargs):
    kwargs.setdefault('sort_keys', False)
    kwargs.setdefault('default_flow_style', None)
    return yaml.dump(data, stream=stream, Dumper=CentresDumper, **kwargs)


def dump_all(documents, stream=None, **kwargs):
    kwargs.setdefault('sort_keys', False)
    kwargs.setdefault('default_flow_style', None)
    kwargs.setdefault('explicit_start', True)
    return yaml.dump_all(documents, stream=stream, Dumper=CentresDumper, **kwargs)
