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

import importlib.util
from pathlib import Path

version = '0.1.0'
repo = 'unknown'
commit = 'unknown'
has_repo = False


def _git_info(root):
    ''' Returns ``(repo, commit)`` of the git checkout at ``root``, the commit is
        suffixed with the state of the working tree when it is not clean.
    '''
    import git
    r = git.Repo(root)
    url = r.remotes.origin.url if r.remotes else 'local'
    sha = r.head.commit.hexsha
    status = []
    if r.is_dirty():
        status.append('dirty')
    if r.untracked_files:
        status.append(f'+{len(r.untracked_files)} untracked')
    if status:
        sha += f' ({",".join(status)})'
    return url, sha


try:
    import git
    try:
        repo, commit = _git_info(Path(__file__).parents[1])
        has_repo = True
    except (git.InvalidGitRepositoryError, git.NoSuchPathError, ValueError):
        pass
except ImportError:
    pass

_dist_info_file = Path(__file__).parent.joinpath('_dist_info.py')
if not has_repo and _dist_info_file.exists():
    _spec = importlib.util.spec_from_file_location('_dist_info', _dist_info_file)
    _dist_info = importlib.util.module_from_spec(_spec)
    _spec.loader.exec_module(_dist_info)
    assert version == _dist_info.version, 'frozen version info does not match the package'
    repo = _dist_info.repo
    commit = _dist_info.commit


def info():
    g = globals()
    return { k: g[k] for k in __all__ }


__all__ = ['version', 'repo', 'commit', 'has_repo']
