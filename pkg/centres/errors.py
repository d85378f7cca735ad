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


import functools
import threading
import contextlib
import yaml.error


rethrow = True # whether unexpected errors happening inside centres should be rethrown as higher-level errors (listed below)
include_original_exception = True # if exceptions are rethrown, whether to include the original exception as "__cause__" of the new exception
shorten_traceback = True # if exceptions are rethrown, whether to shorten their stack by removing intermediate frames

_api_entered = threading.local()


def api_entry(fn):
    ''' Marks ``fn`` as a public entry point. Errors raised by nested calls are
        re-raised from here as fresh objects, which drops the internal frames from
        the reported traceback. Nested entry points are transparent.
    '''
    @functools.wraps(fn)
    def impl(*args, **kwargs):
        if getattr(_api_entered, 'value', False) or not rethrow or not shorten_traceback:
            return fn(*args, **kwargs)

        _api_entered.value = True
        try:
            return fn(*args, **kwargs)
        except Error as e:
            reason = None
            if include_original_exception:
                reason = e.__cause__

            raise e.rebuild() from reason
        finally:
            _api_entered.value = False

    return impl


def make_mark(text, index, name=None, line=None, column=0):
    ''' Creates a :py:class:`yaml.error.Mark` pointing at character ``index`` (0-based)
        of ``text``. ``line`` is 1-based, as reported by editors; ``column`` is the
        offset of ``text`` within that line.
    '''
    if name is None:
        name = '<word>'
    line = 0 if line is None else line - 1
    return yaml.error.Mark(name, index, line, column + index, text, index)


class Error(yaml.error.MarkedYAMLError):
    ''' Base class of all errors raised by the package.
    '''
    base_msg = None

    def __init__(self, error_msg, mark=None, note=None, **details):
        self.error_msg = error_msg
        self.mark = mark
        self.details = details
        for name, value in details.items():
            setattr(self, name, value)

        msg = self.base_msg or ''
        if error_msg:
            if msg:
                msg += '\n'
            msg += error_msg

        super().__init__(problem=msg, problem_mark=mark, note=note)

    def rebuild(self):
        return type(self)(self.error_msg, mark=self.mark, note=self.note, **self.details)


class ParsingError(Error, ValueError):
    ''' Raised when text does not spell a binary word. ``index`` holds the 1-based
        position of the first illegal character.
    '''
    base_msg = 'Could not parse a binary word'


class RangeError(Error, ValueError):
    ''' Raised when an index, length or parameter falls outside of its valid range.
    '''
    base_msg = 'Argument out of range'


class ResourceError(Error):
    ''' Raised when a request would exceed one of the configured enumeration caps.
    '''
    base_msg = 'Request exceeds a configured resource cap'


class ConfigError(Error):
    base_msg = 'Invalid configuration'


class UsageError(Error):
    base_msg = 'Invalid command-line usage'


@contextlib.contextmanager
def rethrow_point(error_type, mark=None, **details):
    ''' Converts any unexpected exception raised inside the ``with`` block into
        ``error_type``, attaching ``mark`` and ``details``. Errors which already
        are of the package's types pass through unchanged.
    '''
    try:
        yield
    except Error:
        raise
    except Exception as e:
        if not rethrow:
            raise

        reason = e if include_original_exception else None
        raise error_type(str(e), mark=mark, **details) from reason
