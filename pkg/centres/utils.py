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

import sys
import collections.abc as cabc


def mask(width):
    ''' Returns an integer with the lowest ``width`` bits set.
    '''
    return (1 << width) - 1


def iter_set_bits(value):
    ''' Yields indices of bits set in a non-negative integer ``value``, lowest first.
    '''
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def window_and(bits, width):
    ''' Given an integer ``bits`` treated as a bit vector, returns another integer
        whose bit ``j`` is set iff all bits ``j, j+1, ..., j+width-1`` of ``bits`` are set.

        The window is built by doubling, so the cost is logarithmic in ``width``
        (measured in big-integer operations)::

            window_and(0b0111, 2) == 0b0011
            window_and(0b0111, 3) == 0b0001

        ``width`` has to be positive.
    '''
    if width <= 0:
        raise ValueError(f'Window width should be positive, got: {width}')

    acc = None
    shift = 0
    block = bits
    size = 1
    while width:
        if width & 1:
            if acc is None:
                acc = block
            else:
                acc &= block >> shift
            shift += size
        width >>= 1
        if width:
            block &= block >> size
            size *= 2
            if not block:
                return 0

    return acc


class Bunch(dict):
    ''' A dict which exposes its keys as attributes. Nested mappings are converted
        to :py:class:`Bunch` as well, so ``b.caps.all_binary_max_length`` works.
    '''
    def __init__(self, other=None):
        if other is None:
            other = {}
        super().__init__({ key: Bunch._wrap(value) for key, value in other.items() })

    @staticmethod
    def _wrap(value):
        if isinstance(value, cabc.Mapping) and not isinstance(value, Bunch):
            return Bunch(value)
        return value

    def __getattr__(self, name):
        if name not in self:
            raise AttributeError(f'Object {type(self).__name__!r} does not have attribute {name!r}')
        return self[name]

    def __setattr__(self, name, value):
        if name.startswith('_'):
            return super().__setattr__(name, value)

        if name in self.__dict__:
            raise ValueError('Name conflict!')

        self[name] = Bunch._wrap(value)

    def __delattr__(self, name):
        try:
            super().__delattr__(name)
        except AttributeError:
            del self[name]

    def get_path(self, path):
        ''' Returns a value stored under a dotted ``path``, e.g. ``'caps.all_binary_max_length'``.
        '''
        ret = self
        for component in path.split('.'):
            ret = ret[component]
        return ret


class staticproperty(property):
    def __init__(self, fget=None, fset=None, fdel=None, doc=None):
        if fget is not None and not isinstance(fget, staticmethod):
            raise ValueError('fget should be a staticmethod')
        if fset is not None and not isinstance(fset, staticmethod):
            raise ValueError('fset should be a staticmethod')
        if fdel is not None and not isinstance(fdel, staticmethod):
            raise ValueError('fdel should be a staticmethod')
        super().__init__(fget, fset, fdel, doc)

    def __get__(self, inst, cls=None):
        if inst is None:
            return self
        if self.fget is None:
            raise AttributeError("unreadable attribute")
        return self.fget.__get__(inst, cls)() # pylint: disable=no-member


class LazyModule():
    def __init__(self, module):
        self.module = module

    def __getattr__(self, name):
        return getattr(self.module, name)


def add_module_properties(module_name, properties):
    ''' Attaches ``properties`` (a dict of name -> descriptor) to the module ``module_name``
        by replacing it in ``sys.modules`` with a thin proxy type, so values like
        ``centres.__version__`` can be computed lazily.
    '''
    module = sys.modules[module_name]
    replace = False
    if isinstance(module, LazyModule):
        lazy_type = type(module)
    else:
        lazy_type = type('LazyModule({})'.format(module_name), (LazyModule,), {})
        replace = True

    for name, prop in properties.items():
        setattr(lazy_type, name, prop)

    if replace:
        sys.modules[module_name] = lazy_type(module)
