"""
Tests for the command-line front end, driven through main([...]).
"""
import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest.mock import patch

import pandas as pd

from src.constant import THREADS_ENV_VAR
from src.cyclo import CycloNum, root_of_unity
from src.main import main


def run_cli(*argv):
    """Runs the CLI and returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def _value(text):
    return CycloNum.from_json(json.loads(text))


class TestValueCommands(unittest.TestCase):
    """field-info, eval, gauss, jacobi and f4."""

    def test_field_info(self):
        code, out, _ = run_cli("field-info", "--q", "9")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out),
                         {"p": 3, "f": 2, "q": 9, "modulus": [1, 0, 1], "generator": 4})

    def test_field_info_from_characteristic(self):
        code, out, _ = run_cli("--format", "text", "field-info", "--p", "5", "--f", "1")
        self.assertEqual(code, 0)
        self.assertIn("generator: 2", out)

    def test_not_a_prime_power(self):
        code, _, err = run_cli("field-info", "--q", "12")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("error:"))

    def test_eval_exponential(self):
        code, out, _ = run_cli("eval", "--q", "3", "--rfs", "--lam", "1")
        self.assertEqual(code, 0)
        self.assertEqual(_value(out), root_of_unity(3, 2))

    def test_eval_text_marks_approximation(self):
        code, out, _ = run_cli("--format", "text", "eval", "--q", "5", "--num", "phi",
                               "--rfs", "--lam", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "1")
        self.assertIn("display only", out)

    def test_gauss(self):
        code, out, _ = run_cli("gauss", "--q", "5", "--chi", "0")
        self.assertEqual(code, 0)
        self.assertEqual(_value(out), 1)
        _, out, _ = run_cli("gauss", "--q", "5", "--chi", "eps", "--circled")
        self.assertEqual(_value(out), 5)

    def test_jacobi(self):
        _, out, _ = run_cli("jacobi", "--q", "7", "--chi", "eps", "--chi2", "eps")
        self.assertEqual(_value(out), -5)

    def test_f4_vanishes_on_axis(self):
        code, out, _ = run_cli("f4", "--q", "5", "--alpha", "1", "--beta", "2",
                               "--gamma", "3", "--gamma2", "eps", "--x", "0", "--y", "2")
        self.assertEqual(code, 0)
        self.assertTrue(_value(out).is_zero())

    def test_malformed_parameters(self):
        code, _, err = run_cli("eval", "--q", "7", "--num", "chi:x", "--lam", "1")
        self.assertEqual(code, 2)
        self.assertIn("position", err)

    def test_usage_errors(self):
        self.assertEqual(run_cli()[0], 2)
        self.assertEqual(run_cli("gauss", "--q", "5")[0], 2)
        self.assertEqual(run_cli("--help")[0], 0)


class TestTableCommand(unittest.TestCase):
    """table in its three formats."""

    def test_csv(self):
        code, out, _ = run_cli("--format", "csv", "table", "--q", "5", "--num", "phi", "--rfs")
        self.assertEqual(code, 0)
        frame = pd.read_csv(io.StringIO(out))
        self.assertEqual(list(frame["lambda"]), [0, 1, 2, 3, 4])
        values = [_value(cell) for cell in frame["value"]]
        self.assertEqual(values, [0, 0, 1, -1, -1])

    def test_json(self):
        _, out, _ = run_cli("table", "--q", "5", "--num", "phi", "--rfs")
        document = json.loads(out)
        self.assertEqual(document["field"]["q"], 5)
        self.assertEqual(document["spec"]["den"], "eps")
        self.assertEqual([row["lambda"] for row in document["rows"]], [0, 1, 2, 3, 4])

    def test_written_to_file(self):
        directory = Path(tempfile.mkdtemp(prefix="finite_hgf_table_"))
        try:
            path = directory / "table.json"
            code, out, _ = run_cli("table", "--q", "7", "--num", "1", "--den", "0",
                                   "--out", str(path))
            self.assertEqual(code, 0)
            self.assertIn("Wrote 7 rows", out)
            self.assertEqual(len(json.loads(path.read_text(encoding="utf-8"))["rows"]), 7)
        finally:
            shutil.rmtree(directory, ignore_errors=True)


class TestVerifyCommand(unittest.TestCase):
    """verify against the shipped configuration."""

    def setUp(self):
        self.output_dir = Path(tempfile.mkdtemp(prefix="finite_hgf_verify_"))
        self.env = patch.dict(os.environ, {})
        self.env.start()
        os.environ.pop(THREADS_ENV_VAR, None)

    def tearDown(self):
        self.env.stop()
        shutil.rmtree(self.output_dir, ignore_errors=True)

    def _verify(self, *extra):
        out = self.output_dir / "report.json"
        code, stdout, stderr = run_cli("verify", "--out", str(out), *extra)
        return code, stdout, stderr, out

    def test_pass(self):
        code, stdout, _, path = self._verify("--q", "5", "--ids", "euler-transformation")
        self.assertEqual(code, 0)
        self.assertEqual(stdout.strip().splitlines()[-1], "PASS")
        report = json.loads(path.read_text(encoding="utf-8"))
        self.assertEqual(len(report), 1)
        self.assertEqual(report[0]["lambdas_per_tuple"], 4)
        self.assertIsNone(report[0]["elapsed_ms"])

    def test_not_applicable_warns(self):
        code, _, stderr, _ = self._verify("--q", "4", "--ids", "bessel-reflection")
        self.assertEqual(code, 0)
        self.assertIn("p=2", stderr)
        code, _, stderr, _ = self._verify("--q", "7", "--ids", "cubic-product")
        self.assertEqual(code, 0)
        self.assertIn("no admissible tuples", stderr)

    def test_sampled_runs_are_identical(self):
        first = self.output_dir / "first.json"
        second = self.output_dir / "second.json"
        for path in (first, second):
            code, _, _ = run_cli("verify", "--q", "13", "--ids", "kummer-exponential",
                                 "--n", "5", "--seed", "42", "--out", str(path))
            self.assertEqual(code, 0)
        self.assertEqual(first.read_bytes(), second.read_bytes())
        report = json.loads(first.read_text(encoding="utf-8"))
        self.assertEqual(report[0]["mode"], "sample")
        self.assertEqual(report[0]["tuples_checked"], 5)

    def test_summary_csv_and_text(self):
        summary = self.output_dir / "summary.csv"
        code, stdout, _, _ = self._verify("--q", "5,7", "--ids", "binomial-value",
                                          "--summary-csv", str(summary))
        self.assertEqual(code, 0)
        self.assertEqual(len(pd.read_csv(summary)), 2)
        code, stdout, _ = run_cli("--format", "text", "verify", "--q", "5",
                                  "--ids", "binomial-value",
                                  "--out", str(self.output_dir / "t.json"))
        self.assertIn("binomial-value", stdout)

    def test_short_catalog_names(self):
        code, _, _, path = self._verify("--q", "5", "--ids", "P6-EULER")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(path.read_text(encoding="utf-8"))[0]["identity"],
                         "euler-transformation")
        code, _, stderr, _ = self._verify("--q", "4", "--ids", "THM-B4")
        self.assertEqual(code, 0)
        self.assertIn("p=2", stderr)
        code, _, stderr, _ = self._verify("--q", "7", "--ids", "THM-B12")
        self.assertEqual(code, 0)
        self.assertIn("no admissible tuples", stderr)

    def test_unknown_identity(self):
        code, _, stderr, _ = self._verify("--q", "5", "--ids", "no-such-identity")
        self.assertEqual(code, 2)
        self.assertIn("no-such-identity", stderr)

    def test_unknown_profile(self):
        code, _, _, _ = self._verify("--profile", "no_such_profile")
        self.assertEqual(code, 2)


if __name__ == '__main__':
    unittest.main(argv=['first-arg-is-ignored'], exit=False)
