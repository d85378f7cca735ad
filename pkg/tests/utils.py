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
import re
import unittest
import traceback


LONG_TESTS_ENV = 'CENTRES_LONG_TESTS'


def import_name(symbol_name):
    ''' Resolves a dotted name like 'centres.errors.ParsingError', plain names are looked up in builtins.
    '''
    import builtins
    import importlib

    module_name, _, name = symbol_name.rpartition('.')
    module = importlib.import_module(module_name) if module_name else builtins
    return getattr(module, name)


def setUpModule():
    import sys
    new_path = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
    sys.path = [new_path] + sys.path
    try:
        import centres
    finally:
        sys.path = sys.path[1:]


def long_test(fn):
    ''' Marks a test running a full-size sweep, skipped unless ``CENTRES_LONG_TESTS=1``.
    '''
    return unittest.skipUnless(os.environ.get(LONG_TESTS_ENV) == '1', f'set {LONG_TESTS_ENV}=1 to run')(fn)


def all_texts(n):
    return [format(i, f'0{n}b') if n else '' for i in range(2 ** n)]


def naive_centres(text):
    return [p for p in range(1, len(text)) if any(text[p-l:p] == text[p:p+l] for l in range(1, min(p, len(text) - p) + 1))]


def naive_overlap_free(text):
    n = len(text)
    for i in range(n):
        for j in range(i + 3, n + 1):
            # every overlap contains one of the form c x c x c, of length 2 |cx| + 1
            length = j - i
            if length % 2 and all(text[k] == text[k + (length - 1) // 2] for k in range(i, j - (length - 1) // 2)):
                return False
    return True


class AssertRaisesChainedContext():
    ''' Like ``assertRaises`` but also accepts the expected exception anywhere in the
        ``__context__`` chain of the raised one.
    '''
    def __init__(self, expected, test_case, expected_regex=None):
        self.test_case = test_case
        self.expected = expected
        if expected_regex is not None:
            expected_regex = re.compile(expected_regex)
        self.expected_regex = expected_regex
        self.exception = None

    def _fail(self, msg):
        raise self.test_case.failureException(msg)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, tb):
        if exc_type is None:
            self._fail(f'{getattr(self.expected, "__name__", self.expected)} not raised')
        traceback.clear_frames(tb)

        found = None
        while exc_value is not None:
            if isinstance(exc_value, self.expected):
                found = exc_value
                if self.expected_regex is None or self.expected_regex.search(str(exc_value)):
                    self.exception = exc_value.with_traceback(None)
                    return True
            exc_value = exc_value.__context__

        if found is None:
            return False

        self._fail(f'"{self.expected_regex.pattern}" does not match "{found}"')
