import unittest
import sys
import os
import json
import tempfile
from fractions import Fraction
from unittest import mock
current = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(os.path.dirname(current)))

import pandas as pd
import yaml
from pydantic import ValidationError

from qhopf.bundles import Eigenpair, spectral, table_entry
from qhopf.coefficients import ONE
from qhopf.quantum_group import ALPHA, GAMMA, GAMMA_STAR, Monomial
from qhopf.cli import build_config, construct_args, main
from qhopf.configs import RunConfig, load_yaml_config
from qhopf.verification import CHECK_REGISTRY, get_suite

DEFAULT_YAML = os.path.join(os.path.dirname(current), "configs", "default.yaml")


class TestConfig(unittest.TestCase):

    def test_default_yaml(self):
        config = load_yaml_config(DEFAULT_YAML)
        self.assertEqual(config.windings(), [-2, -1, 0, 1, 2], msg="n_range failed")
        self.assertEqual(config.q_samples()[0], Fraction(1, 2), msg="q samples failed")
        self.assertEqual(config.triples[3].displacement, "(1)*gamma^1 gamma*^1",
                         msg="triples failed")

    def test_range_forms(self):
        self.assertEqual(RunConfig(n_range="3").n_range, (3, 3), msg="single winding failed")
        self.assertEqual(RunConfig(n_range="-1..2").windings(), [-1, 0, 1, 2], msg="range failed")
        with self.assertRaises(ValidationError):
            RunConfig(n_range="2..1")

    def test_rejected_values(self):
        for bad in ({"q_values": ["1"]}, {"q_values": ["0"]}, {"q_values": ["x"]},
                    {"workers": 0}, {"filtration": -1}, {"mode": "numeric", "q_values": []},
                    {"output_format": "xml"}):
            with self.assertRaises(ValidationError):
                RunConfig(**bad)

    def test_flags_override_yaml(self):
        args = construct_args(["table", "--config", DEFAULT_YAML, "--n=0..1", "--side", "left",
                               "--q", "0.9", "--workers", "2"])
        config = build_config(args)
        self.assertEqual(config.command, "table", msg="command failed")
        self.assertEqual(config.n_range, (0, 1), msg="--n failed")
        self.assertEqual(config.sides, ["left"], msg="--side failed")
        self.assertEqual(config.q_samples(), [Fraction(9, 10)], msg="--q failed")
        self.assertEqual(config.workers, 2, msg="--workers failed")
        self.assertEqual(config.filtration, 3, msg="YAML value should survive")


class TestCommands(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        patcher = mock.patch.object(
            spectral, "_cache_path",
            side_effect=lambda n, N, side, b: os.path.join(self.tmp.name, f"{side}_{n}_{N}_{b}.pkl"),
        )
        patcher.start()
        self.addCleanup(patcher.stop)

    def output(self, name):
        return os.path.join(self.tmp.name, name)

    def test_spectrum_csv(self):
        path = self.output("spectrum.csv")
        status = main(["spectrum", "--n=0", "--filtration", "1", "--output", path])
        self.assertEqual(status, 0, msg="spectrum should succeed")
        with open(os.path.join(current, "golden", "spectrum_n0_N1.csv")) as f:
            expected = f.read()
        with open(path) as f:
            self.assertEqual(f.read(), expected, msg="spectrum CSV differs from golden file")

    def test_spectrum_snapshot_n2_N3(self):
        first, second = self.output("first.csv"), self.output("second.csv")
        for path in (first, second):
            status = main(["spectrum", "--n=-2..2", "--filtration", "3", "--output", path])
            self.assertEqual(status, 0, msg="every row should match its table entry")
        with open(first, "rb") as f1, open(second, "rb") as f2:
            self.assertEqual(f1.read(), f2.read(), msg="cached rerun is not byte-identical")
        frame = pd.read_csv(first, dtype=str, keep_default_na=False)
        self.assertEqual(list(frame.columns),
                         ["n", "side", "monomial", "row", "eigenvalue", "table_value", "match"],
                         msg="columns failed")
        self.assertEqual(len(frame), 100, msg="ten monomials per winding and side")
        self.assertEqual(frame.groupby(["side", "n"]).size().tolist(), [10] * 10,
                         msg="block sizes failed")
        self.assertTrue((frame["match"] == "True").all(), msg="mismatch in the snapshot")
        self.assertTrue((frame["eigenvalue"] == frame["table_value"]).all(),
                         msg="exact text of eigenvalue and table value differ")
        rows = set(frame["row"].astype(int))
        self.assertTrue({8, 9} <= rows <= set(range(1, 10)), msg=f"table rows {rows} failed")
        golden = pd.read_csv(os.path.join(current, "golden", "spectrum_n0_N1.csv"),
                             dtype=str, keep_default_na=False)
        keys = ["n", "side", "monomial", "row", "eigenvalue"]
        subset = frame.merge(golden[keys], on=keys, how="inner")
        self.assertEqual(len(subset), len(golden), msg="N = 1 golden rows missing at N = 3")

    def test_numeric_json(self):
        path = self.output("spectrum.json")
        status = main(["spectrum", "--n=1", "--filtration", "1", "--mode", "numeric",
                       "--q", "1/2", "--format", "json", "--workers", "2", "--output", path])
        self.assertEqual(status, 0, msg="numeric spectrum should succeed")
        with open(path) as f:
            data = json.load(f)
        self.assertEqual(data["q_samples"], ["1/2"], msg="q samples failed")
        self.assertIn("eigenvalue@q=1/2", data["records"][0], msg="numeric column missing")

    def test_haar(self):
        path = self.output("haar.json")
        self.assertEqual(main(["haar", "--output", path]), 0, msg="haar should succeed")
        with open(path) as f:
            moments = json.load(f)["h((gamma gamma*)^k)"]
        self.assertEqual(moments["1"]["value"], "(1)/(1 + 1*q^2)", msg="h(γγ*) failed")
        self.assertTrue(all(m["match"] for m in moments.values()), msg="moments failed")

    def test_conventions(self):
        path = self.output("conventions.json")
        self.assertEqual(main(["conventions", "--output", path]), 0, msg="conventions failed")
        with open(path) as f:
            report = json.load(f)
        self.assertEqual(report["sphere"]["kappa_plus"], "-1*q^2", msg="κ₊ failed")

    def test_verify_suite(self):
        path = self.output("verify.json")
        status = main(["verify", "--suite", "haar", "--output", path])
        self.assertEqual(status, 0, msg="haar suite should pass")
        with open(path) as f:
            results = json.load(f)
        self.assertEqual({r["name"] for r in results}, {"haar/invariance", "haar/moments"},
                         msg="suite selection failed")

    def test_lambda_row_mismatch_fails(self):
        mono = Monomial(1, 1, 1)
        entry = table_entry("left", mono)
        pair = Eigenpair(n=1, side="left", monomial=mono, eigenvalue=entry.value + ONE,
                         eigenvector=ALPHA * GAMMA * GAMMA_STAR, table=entry)
        self.assertEqual(pair.table.row, 8, msg="αγγ* should sit in row 8")
        with mock.patch("qhopf.cli.block_spectrum", return_value=[pair]):
            status = main(["spectrum", "--n=1", "--side", "left", "--filtration", "2",
                           "--output", self.output("bad.csv")])
        self.assertEqual(status, 1, msg="a row 8 mismatch should exit 1")

    def write_triples(self, name, triples):
        path = self.output(name)
        with open(path, "w") as f:
            yaml.safe_dump({"command": "ym-check", "triples": triples}, f)
        return path

    def test_ym_check_status(self):
        good = self.write_triples("good.yaml", [{"n": 1}, {"n": 2, "family": "gamma"}])
        path = self.output("good.json")
        self.assertEqual(main(["ym-check", "--config", good, "--output", path]), 0,
                         msg="solution triples should pass")
        with open(path) as f:
            self.assertTrue(all(r["passed"] for r in json.load(f)), msg="passed flags failed")
        bad = self.write_triples("bad.yaml", [{"n": 1}, {"n": 1, "vprime": "1"}])
        path = self.output("bad.json")
        self.assertEqual(main(["ym-check", "--config", bad, "--output", path]), 1,
                         msg="V′ = 1 should exit 1")
        with open(path) as f:
            self.assertEqual([r["passed"] for r in json.load(f)], [True, False],
                             msg="only the second triple fails")

    def test_invalid_configuration(self):
        self.assertEqual(main(["spectrum", "--workers", "0"]), 2, msg="bad flag should exit 2")
        self.assertEqual(main(["spectrum", "--config", self.output("missing.yaml")]), 2,
                         msg="missing config should exit 2")

    def test_unwritable_output(self):
        path = os.path.join(self.tmp.name, "no", "such", "dir", "out.json")
        self.assertEqual(main(["haar", "--output", path]), 2, msg="unwritable output should exit 2")


class TestSuites(unittest.TestCase):

    def test_registry(self):
        for suite in ("spectrum", "geometry", "generators", "haar", "yang-mills", "classical"):
            self.assertIn(suite, CHECK_REGISTRY, msg=f"suite {suite} missing")
        self.assertEqual(len(get_suite("all")), sum(len(c) for c in CHECK_REGISTRY.values()),
                         msg="all suite failed")
        with self.assertRaises(ValueError):
            get_suite("nope")


if __name__ == "__main__":
    unittest.main()
