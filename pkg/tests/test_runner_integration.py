"""
Integration tests for the runner module: profile loading, thread resolution,
verification runs and report files.
"""

import json
import os
import shutil
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

import pandas as pd

from src.config_manager import ConfigManager
from src.constant import THREADS_ENV_VAR
from src.runner import (SUMMARY_COLUMNS, load_configuration, resolve_threads,
                        run_profile, summary_frame, write_report, write_summary_csv)

REPO_CONFIG_DIR = Path(__file__).resolve().parent.parent / 'config'
TEST_CONFIG_DIR = Path(__file__).parent / 'mock_configs'


class TestRunnerIntegration(unittest.TestCase):
    """Test suite for the runner module's integration capabilities."""

    def setUp(self):
        self.output_dir = Path(tempfile.mkdtemp(prefix="finite_hgf_runner_"))
        manager = ConfigManager(TEST_CONFIG_DIR / 'test_run_config.json',
                                TEST_CONFIG_DIR / 'test_suites.json')
        self.config = manager.load_combined_config("closed")

    def tearDown(self):
        shutil.rmtree(self.output_dir, ignore_errors=True)

    def test_repository_profiles_load(self):
        """Every profile shipped in config/ resolves."""
        config = load_configuration(REPO_CONFIG_DIR, "closed_forms")
        self.assertEqual(config["fields"], [5, 7, 9, 13])
        self.assertEqual(config["ids"], ["euler-gauss-sum", "kummer-sum", "dixon-sum"])
        sample = load_configuration(REPO_CONFIG_DIR, "sample_q13")
        self.assertEqual(sample["mode"], "sample")
        self.assertEqual(sample["report_name"], "verify_sample_q13.json")
        for profile in ("default", "structural", "product_formulas", "cubic",
                        "appell", "bailey"):
            self.assertTrue(load_configuration(REPO_CONFIG_DIR, profile)["ids"])

    def test_unknown_profile(self):
        with self.assertRaises(ValueError):
            load_configuration(REPO_CONFIG_DIR, "no_such_profile")

    def test_missing_config_dir(self):
        with self.assertRaises(FileNotFoundError):
            load_configuration(self.output_dir / "absent", "default")

    def test_thread_precedence(self):
        with patch.dict(os.environ, {THREADS_ENV_VAR: "4"}):
            self.assertEqual(resolve_threads(3, {"threads": 2}), 3)
            self.assertEqual(resolve_threads(None, {"threads": 2}), 4)
        with patch.dict(os.environ, {}):
            os.environ.pop(THREADS_ENV_VAR, None)
            self.assertEqual(resolve_threads(None, {"threads": 2}), 2)
            self.assertEqual(resolve_threads(None, {}), 1)
            self.assertEqual(resolve_threads(0), 1)

    def test_bad_thread_variable(self):
        with patch.dict(os.environ, {THREADS_ENV_VAR: "many"}):
            with self.assertRaisesRegex(ValueError, THREADS_ENV_VAR):
                resolve_threads(None)

    def test_run_profile(self):
        reports = run_profile(self.config)
        self.assertEqual([r.identity for r in reports],
                         ["euler-gauss-sum", "kummer-sum", "dixon-sum"])
        self.assertTrue(all(r.passed for r in reports))
        self.assertTrue(all(r.field["q"] == 5 for r in reports))

    def test_reports_are_reproducible(self):
        first, second = self.output_dir / "a.json", self.output_dir / "b.json"
        write_report(run_profile(self.config), first)
        write_report(run_profile(self.config), second)
        self.assertEqual(first.read_bytes(), second.read_bytes())
        document = json.loads(first.read_text(encoding="utf-8"))
        self.assertEqual(len(document), 3)
        self.assertIsNone(document[0]["elapsed_ms"])
        self.assertTrue(document[0]["passed"])

    def test_timing_is_kept_on_request(self):
        path = self.output_dir / "timed.json"
        write_report(run_profile(self.config), path, timing=True)
        document = json.loads(path.read_text(encoding="utf-8"))
        self.assertIsNotNone(document[0]["elapsed_ms"])

    def test_summary_csv(self):
        reports = run_profile(self.config)
        frame = summary_frame(reports)
        self.assertEqual(list(frame.columns), SUMMARY_COLUMNS)
        path = self.output_dir / "nested" / "summary.csv"
        write_summary_csv(reports, path)
        read_back = pd.read_csv(path)
        self.assertEqual(len(read_back), 3)
        self.assertTrue(read_back["passed"].all())
        self.assertEqual(read_back["failures"].sum(), 0)


if __name__ == '__main__':
    unittest.main(argv=['first-arg-is-ignored'], exit=False)
