import unittest

import orjson

from src.schemas.reports import DualityReport, ScanConfig, ScanResult
from src.services.duality import evaluate_instance, summarize, transpose_summary
from src.services.invpoly import parse_polynomial
from src.services.reports import render, render_csv, render_json, render_latex, report_line, summary_line


class TestRenderers(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.report = evaluate_instance(parse_polynomial('x1^5*x2 + x2^2 + x3^3'))
        cls.scan = ScanResult(config=ScanConfig(n=(3,)), summary=summarize([cls.report]), reports=[cls.report])

    def test_json_is_sorted_and_deterministic(self):
        text = render_json(self.report)
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(text, render_json(self.report))
        data = orjson.loads(text)
        self.assertEqual(list(data), sorted(data))
        self.assertEqual(data['weights'], {'c': 1, 'd': 30, 'w': [3, 15, 10]})

    def test_json_round_trip(self):
        for text in ('x1^5*x2 + x2^2 + x3^3', 'x1^3*x2 + x2^4*x3 + x3^5', 'x1^2*x2 + x2^3', 'x1^2 + x2^3 + x3'):
            with self.subTest(polynomial=text):
                report = evaluate_instance(parse_polynomial(text))
                self.assertEqual(DualityReport.model_validate(orjson.loads(render_json(report))), report)

    def test_json_list(self):
        self.assertEqual(len(orjson.loads(render_json([self.report, self.report]))), 2)

    def test_csv_reports(self):
        rows = render_csv(self.scan).splitlines()
        self.assertEqual(rows[0].split(',')[:3], ['polynomial', 'shape', 'weights'])
        self.assertEqual(len(rows), 2)
        self.assertIn('chain2+fermat', rows[1])

    def test_csv_fields(self):
        rows = render_csv(transpose_summary(parse_polynomial('x1^5*x2 + x2^2 + x3^3'))).splitlines()
        self.assertEqual(rows[0], 'field,value')
        self.assertIn('transpose,x1^5 + x1*x2^2 + x3^3', rows)

    def test_latex(self):
        text = render_latex(self.scan, caption='Three variables')
        self.assertIn('\\begin{tabular}{llllll}', text)
        self.assertIn('\\caption{Three variables}', text)
        self.assertIn('$(3,15,10;\\,30)$', text)
        self.assertTrue(text.rstrip().endswith('\\end{table}'))

    def test_text_lines(self):
        self.assertEqual(report_line(self.report), f'{self.report.status:7} chain2+fermat  x1^5*x2 + x2^2 + x3^3\n')
        self.assertEqual(summary_line(self.scan.summary), 'total 1: 1 ok, 0 failed, 0 skipped, 0 errors\n')
        self.assertEqual(render(self.scan, 'text').splitlines()[-1], 'total 1: 1 ok, 0 failed, 0 skipped, 0 errors')

    def test_flags_in_line(self):
        report = DualityReport(polynomial='x1^2', matrix=((2,),), shape='chain', flags=('a', 'b'))
        self.assertEqual(report_line(report), 'ok      chain          x1^2  [a; b]\n')

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            render(self.report, 'yaml')


if __name__ == '__main__':
    unittest.main()
