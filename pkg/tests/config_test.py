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
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from .utils import setUpModule, AssertRaisesChainedContext
from centres.config import Config, MAX_WORKERS_ENV
from centres.errors import ConfigError


class DefaultsTest(unittest.TestCase):
    def test_values(self):
        cfg = Config.default()
        self.assertEqual(cfg.caps.all_binary_max_length, 18)
        self.assertEqual(cfg.caps.overlap_free_max_length, 30)
        self.assertEqual(cfg.caps.construction_max_n, 10)
        self.assertEqual(cfg.witness_limit, 16)
        self.assertEqual(cfg.min_centres.exceptions, [4])
        self.assertEqual(cfg.get_path('tm_even.max_offset'), 64)

    def test_build_without_sources(self):
        self.assertEqual(Config.build(), Config.default())


class CmdlineTest(unittest.TestCase):
    def test_simple(self):
        cfg = Config.build_from_cmdline('caps.all_binary_max_length=20')
        self.assertEqual(cfg.caps.all_binary_max_length, 20)
        self.assertEqual(cfg.caps.overlap_free_max_length, 30)

    def test_top_level(self):
        cfg = Config.build_from_cmdline('witness_limit=3')
        self.assertEqual(cfg.witness_limit, 3)

    def test_list(self):
        cfg = Config.build_from_cmdline('min_centres.exceptions=[4, 6]')
        self.assertEqual(cfg.min_centres.exceptions, [4, 6])

    def test_later_wins(self):
        cfg = Config.build_from_cmdline('witness_limit=3', 'witness_limit=5')
        self.assertEqual(cfg.witness_limit, 5)

    def test_process(self):
        self.assertEqual(Config.process_cmdline(['a.b=1']), ['{ a: { b: 1 }}'])

    def test_typo(self):
        with self.assertRaisesRegex(ConfigError, r"Unknown config key 'caps.all_binary_max_lenght'"):
            Config.build_from_cmdline('caps.all_binary_max_lenght=20')

    def test_wrong_type(self):
        with self.assertRaisesRegex(ConfigError, 'witness_limit'):
            Config.build_from_cmdline('witness_limit=many')
        with self.assertRaises(ConfigError):
            Config.build_from_cmdline('caps=1')
        with self.assertRaises(ConfigError):
            Config.build_from_cmdline('parallel.workers=true')

    def test_null_value(self):
        with self.assertRaisesRegex(ConfigError, r"'caps.all_binary_max_length' expects a value of type 'int', got null"):
            Config.build_from_cmdline('caps.all_binary_max_length=')
        with self.assertRaises(ConfigError):
            Config.build_from_cmdline('min_centres.exceptions=null')
        with self.assertRaises(ConfigError):
            Config.build('witness_limit: ~')

    def test_not_an_assignment(self):
        with self.assertRaisesRegex(ConfigError, 'key=value'):
            Config.build_from_cmdline('witness_limit')
        with self.assertRaises(ConfigError):
            Config.build_from_cmdline('caps..x=1')


class SourcesTest(unittest.TestCase):
    def test_raw_yaml(self):
        cfg = Config.build('{ parallel: { workers: 3 } }')
        self.assertEqual(cfg.parallel.workers, 3)

    def test_mapping(self):
        cfg = Config.build({ 'bench': { 'seed': 7 } })
        self.assertEqual(cfg.bench.seed, 7)

    def test_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp).joinpath('cfg.yaml')
            path.write_text('caps:\n    overlap_free_max_length: 40\n')
            self.assertEqual(Config.build(path).caps.overlap_free_max_length, 40)
            self.assertEqual(Config.build(str(path)).caps.overlap_free_max_length, 40)

    def test_missing_file(self):
        with self.assertRaisesRegex(ConfigError, 'Cannot read config file'):
            Config.build(Path('/nonexistent/centres.yaml'))

    def test_not_a_mapping(self):
        with self.assertRaisesRegex(ConfigError, 'Expected a mapping'):
            Config.build('[1, 2]')

    def test_empty_document(self):
        self.assertEqual(Config.build(''), Config.default())

    def test_syntax_error(self):
        with AssertRaisesChainedContext(ConfigError, self):
            Config.build('{ caps: [ }', filename='broken.yaml')

    def test_word_tag(self):
        with self.assertRaises(ConfigError):
            Config.build('witness_limit: !word 0110')


class WorkersTest(unittest.TestCase):
    def test_default(self):
        with mock.patch.dict(os.environ, {}, clear=False):
            os.environ.pop(MAX_WORKERS_ENV, None)
            self.assertEqual(Config.default().max_workers(), 1)
            self.assertEqual(Config.default().max_workers(4), 4)

    def test_env_cap(self):
        with mock.patch.dict(os.environ, { MAX_WORKERS_ENV: '2' }):
            self.assertEqual(Config.default().max_workers(8), 2)
            self.assertEqual(Config.build_from_cmdline('parallel.workers=6').max_workers(), 2)

    def test_env_invalid(self):
        with mock.patch.dict(os.environ, { MAX_WORKERS_ENV: 'many' }):
            with self.assertRaises(ConfigError):
                Config.default().max_workers()

    def test_at_least_one(self):
        self.assertEqual(Config.default().max_workers(0), 1)


if __name__ == '__main__':
    unittest.main()
