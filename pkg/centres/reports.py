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

''' Serialization of reports to the machine-readable output formats.

    Every format renders one document per report and the rendering of a list is the
    concatenation of the renderings of its elements:

     - ``json``: one compact JSON document per line, keys in a fixed order,
     - ``yaml``: one ``---`` document per report,
     - ``tsv``: one tab-separated row per report, no header.
'''

import json
import dataclasses

from . import errors
from . import yaml
from .words import Word, to_text
from .analysis import AnalysisReport
from .constructions import ConstructionResult
from .enumeration import EnumerationSummary
from .verify import VerificationReport


FORMATS = ('json', 'yaml', 'tsv')
DEFAULT_FORMAT = 'json'


@dataclasses.dataclass(frozen=True)
class WordRecord():
    ''' A generated word without an analysis, e.g. ``alpha(n)`` or a prefix of ``t``.
    '''
    kind: str
    parameter: str
    value: int
    word: Word

    def as_dict(self):
        return {
            'kind': self.kind,
            self.parameter: self.value,
            'length': len(self.word),
            'word': to_text(self.word)
        }


def to_document(obj):
    if isinstance(obj, Word):
        return to_text(obj)
    if hasattr(obj, 'as_dict'):
        return obj.as_dict()
    if isinstance(obj, (list, tuple)):
        return [to_document(o) for o in obj]
    return obj


def _flag(value):
    return 'true' if value else 'false'


def _join(values):
    return ','.join(map(str, values))


def _report_row(report):
    return [to_text(report.word), report.length, _flag(report.overlap_free), report.M, _join(report.centres)]


def tsv_row(obj):
    if isinstance(obj, AnalysisReport):
        fields = _report_row(obj)
    elif isinstance(obj, ConstructionResult):
        fields = _report_row(obj.report)
    elif isinstance(obj, EnumerationSummary):
        fields = [obj.length, obj.word_class.value, obj.total, obj.m_min, obj.m_max, _join(f'{m}:{c}' for m, c in obj.m_histogram.items())]
    elif isinstance(obj, VerificationReport):
        fields = [obj.check_name, 'pass' if obj.passed else 'fail', len(obj.counterexamples), _join(to_text(w) for w in obj.counterexamples)]
    elif isinstance(obj, WordRecord):
        fields = [to_text(obj.word)]
    elif isinstance(obj, Word):
        fields = [to_text(obj)]
    else:
        raise TypeError(f'Cannot render {type(obj).__name__!r} as a tsv row')

    return '\t'.join(map(str, fields))


def render_one(obj, fmt=DEFAULT_FORMAT, document=None):
    ''' Renders a single report, ``document`` overrides the default ``as_dict()`` view in json and yaml.
    '''
    if fmt == 'tsv':
        return tsv_row(obj) + '\n'

    if document is None:
        document = to_document(obj)
    if fmt == 'json':
        return json.dumps(document) + '\n'
    if fmt == 'yaml':
        return yaml.dump(document, explicit_start=True)

    raise errors.UsageError(f'Unknown output format: {fmt!r}, expected one of: {", ".join(FORMATS)}')


def render(objects, fmt=DEFAULT_FORMAT):
    if fmt == 'yaml':
        return yaml.dump_all(to_document(obj) for obj in objects)
    return ''.join(render_one(obj, fmt) for obj in objects)


__all__ = ['FORMATS', 'DEFAULT_FORMAT', 'WordRecord', 'to_document', 'tsv_row', 'render_one', 'render']
