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

from . import errors
from . import words
from . import analysis
from . import thue_morse
from . import constructions
from . import enumeration
from . import verify
from . import config

Word = words.Word
Config = config.Config

from_text = words.from_text
to_text = words.to_text

analyze = analysis.analyze
centres = analysis.centres
count_centres = analysis.count_centres
frames = analysis.frames
find_overlap = analysis.find_overlap
is_overlap_free = analysis.is_overlap_free

mu = thue_morse.mu
tm_prefix = thue_morse.tm_prefix
alpha = thue_morse.alpha

build_wn = constructions.build_wn
lemma2_compose = constructions.lemma2_compose
verify_wn = constructions.verify_wn

WordClass = enumeration.WordClass
enumerate_overlap_free = enumeration.enumerate_overlap_free
stats = enumeration.stats


from .utils import add_module_properties, staticproperty


def _get_version():
    from . import version
    return version.version

def _get_has_repo():
    from . import version
    return version.has_repo

def _get_repo():
    from . import version
    return version.repo

def _get_commit():
    from . import version
    return version.commit


add_module_properties(__name__, {
    '__version__': staticproperty(staticmethod(_get_version)),
    '__has_repo__': staticproperty(staticmethod(_get_has_repo)),
    '__repo__': staticproperty(staticmethod(_get_repo)),
    '__commit__': staticproperty(staticmethod(_get_commit))
})
