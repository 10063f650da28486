import unittest
import sys
import os
import json
import tempfile
from fractions import Fraction
current = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(os.path.dirname(current)))

from qhopf.bundles import block_spectrum
from qhopf.coefficients import ONE, ScalarQ
from qhopf.errors import QHopfParseError
from qhopf.io import (
    SpectralReport,
    dumps,
    loads,
    parse_element,
    render,
    render_csv,
    render_latex,
    write_output,
)
from qhopf.quantum_group import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, Monomial
from qhopf.sphere import BaseForm

GOLDEN = os.path.join(current, "golden", "spectrum_n0_N1.csv")


def golden_report(q_samples=()):
    pairs = []
    for side in ("left", "right"):
        pairs += block_spectrum(0, 1, side, use_cache=False)
    return SpectralReport.from_pairs(pairs, q_samples)


class TestSerialization(unittest.TestCase):

    def test_parse_element_reads_canonical_text(self):
        a = (ALPHA * GAMMA_STAR).scale(ONE / (ONE + ScalarQ.q_power(2))) + GAMMA * GAMMA_STAR
        self.assertEqual(parse_element(a.to_text()), a, msg="canonical text was not read back")

    def test_parse_element_words(self):
        self.assertEqual(parse_element("(1)*gamma^1 gamma*^1"), GAMMA * GAMMA_STAR,
                         msg="word parsing failed")
        self.assertEqual(parse_element("alpha*^2"), ALPHA_STAR * ALPHA_STAR, msg="power failed")
        self.assertTrue(parse_element("0").is_zero(), msg="zero failed")

    def test_parse_element_errors(self):
        with self.assertRaises(QHopfParseError) as ctx:
            parse_element("(1)*alpha + (2)*beta")
        self.assertEqual(ctx.exception.column, 17, msg="error column failed")
        with self.assertRaises(QHopfParseError):
            parse_element("(1 + q")
        with self.assertRaises(QHopfParseError):
            parse_element("alpha^x")

    def test_json_is_canonical(self):
        value = {"b": Monomial(1, 0, 2), "a": ScalarQ.q_power(-1)}
        text = dumps(value)
        self.assertTrue(text.endswith("\n"), msg="missing trailing newline")
        self.assertLess(text.index('"a"'), text.index('"b"'), msg="keys are not sorted")
        self.assertEqual(loads(text), value, msg="JSON read-back failed")

    def test_element_terms(self):
        element = (GAMMA * GAMMA_STAR).scale(ScalarQ.q_power(2))
        terms = json.loads(dumps(element))["terms"]
        self.assertEqual(len(terms), 1, msg="one term expected")
        self.assertEqual(set(terms[0]), {"a_power", "k", "l", "coeff"}, msg="term keys failed")
        self.assertEqual((terms[0]["a_power"], terms[0]["k"], terms[0]["l"]), (0, 1, 1),
                         msg="term monomial failed")
        self.assertEqual(ScalarQ.parse(terms[0]["coeff"]), ScalarQ.q_power(2),
                         msg="term coefficient failed")
        self.assertEqual(loads(dumps(element)), element, msg="element read-back failed")
        with self.assertRaises(QHopfParseError):
            loads('{"type": "element", "terms": [{"a_power": 0, "k": 1}]}')

    def test_form_json(self):
        form = BaseForm.one_form(ALPHA * GAMMA, GAMMA_STAR * GAMMA_STAR)
        self.assertEqual(loads(dumps(form)), form, msg="form read-back failed")

    def test_loads_error_position(self):
        with self.assertRaises(QHopfParseError) as ctx:
            loads('{\n  "type": "scalar",\n  "value" "q"\n}')
        self.assertEqual(ctx.exception.line, 3, msg="error line failed")
        self.assertEqual(ctx.exception.column, 11, msg="error column failed")

    def test_unknown_type(self):
        with self.assertRaises(QHopfParseError):
            loads('{"type": "spinor"}')


class TestReports(unittest.TestCase):

    def test_golden_csv(self):
        with open(GOLDEN) as f:
            expected = f.read()
        self.assertEqual(render_csv(golden_report()), expected, msg="CSV differs from golden file")

    def test_numeric_columns(self):
        report = golden_report([Fraction(1, 2)])
        frame = report.to_frame(numeric=True)
        self.assertIn("eigenvalue@q=1/2", frame.columns, msg="numeric column missing")
        self.assertEqual(frame["eigenvalue@q=1/2"].iloc[0], repr(0.5 + 0.25 + 0.03125),
                         msg="numeric value failed")

    def test_json_report(self):
        data = json.loads(render(golden_report(), "json"))
        self.assertTrue(data["all_match"], msg="all_match failed")
        self.assertEqual(len(data["records"]), 6, msg="record count failed")

    def test_latex_tables(self):
        text = render_latex(golden_report())
        self.assertEqual(text.count("\\begin{table}"), 2, msg="one table per side expected")
        self.assertIn("tab:left-spectrum", text, msg="label failed")

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            render(golden_report(), "xlsx")

    def test_write_output(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out.csv")
            write_output("a,b\n", path)
            with open(path) as f:
                self.assertEqual(f.read(), "a,b\n", msg="write_output failed")


if __name__ == "__main__":
    unittest.main()
