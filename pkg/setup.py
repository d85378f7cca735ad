#!/usr/bin/env python

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

from setuptools import setup, find_packages
from setuptools.command.build_py import build_py
from setuptools.command.sdist import sdist

import importlib.util
from pathlib import Path

package_name = 'centres'
description = 'Centres of squares and overlaps in binary words'
author = 'Samsung Electronics Co., Ltd.'
root = Path(__file__).parent
data_files = {}

version_file = root.joinpath(package_name, 'version.py')
spec = importlib.util.spec_from_file_location('{}.version'.format(package_name), version_file)
package_version = importlib.util.module_from_spec(spec)
spec.loader.exec_module(package_version)

long_desc = None
long_desc_type = None
readme_md = root.joinpath('README.md')
if readme_md.exists():
    data_files.setdefault('.', []).append(readme_md.name)
    long_desc = readme_md.read_text()
    long_desc_type = 'text/markdown'


def _freeze_dist_info():
    ''' Writes the git information of the checkout next to ``version.py``, so it survives packaging.
    '''
    dist_file = version_file.parent.joinpath('_dist_info.py')
    dist_file.write_text(''.join(f'{name} = {getattr(package_version, name)!r}\n' for name in package_version.__all__))
    return dist_file


class build_with_dist_info(build_py):
    def run(self):
        dist_file = _freeze_dist_info()
        try:
            return super().run()
        finally:
            dist_file.unlink()


class sdist_with_dist_info(sdist):
    def run(self):
        dist_file = _freeze_dist_info()
        try:
            return super().run()
        finally:
            dist_file.unlink()
            manifest = root.joinpath('MANIFEST')
            if manifest.exists():
                manifest.unlink()


setup(name=package_name,
      version=package_version.version,
      description=description,
      author=author,
      long_description=long_desc,
      long_description_content_type=long_desc_type,
      python_requires='>=3.7.0',
      setup_requires=[
          'GitPython'
      ],
      install_requires=[
          'pyyaml >= 5.1'
      ],
      packages=find_packages(where='.', exclude=['tests']),
      package_data={ package_name: ['defaults.yaml'] },
      data_files=list(data_files.items()),
      package_dir={ '': '.' },
      entry_points={
          'console_scripts': [
              'centres = centres.cli:main'
          ]
      },
      cmdclass={
          'build_py': build_with_dist_info,
          'sdist': sdist_with_dist_info
      }
)
