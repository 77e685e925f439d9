import unittest
from unittest.mock import patch

import pytest

from src.repository.polynomials import enumerate_polynomials
from src.schemas.cyclotomic import CyclotomicFunction
from src.schemas.polynomials import WeightSystem
from src.schemas.reports import DualityReport, ScanConfig
from src.services import cyclo
from src.services.duality import (PUBLISHED_DEGREE_FLAG, check_oracle, classify_theorem2, dual_summary,
                                  evaluate_instance, orbit_function, poincare_series, reduced_zeta, root_summary,
                                  run_scan, summarize, verify_reduced_duality, verify_remark2, verify_theorem1)
from src.services.errors import InconsistentResult, NonDivisorPeriod, NonReducedWeights, PreconditionFailed
from src.services.invpoly import parse_polynomial, to_text


class TestSeries(unittest.TestCase):

    def test_poincare_series(self):
        weights = WeightSystem(w=(16, 12, 12), d=60, c=4)
        self.assertEqual(poincare_series(weights), CyclotomicFunction({60: 1, 16: -1, 12: -2}))

    def test_orbit_function_needs_reduced_weights(self):
        with self.assertRaises(NonReducedWeights):
            orbit_function(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))

    def test_orbit_function(self):
        f = parse_polynomial('x1^5*x2 + x2^2 + x3^3')
        weights = WeightSystem(w=(3, 15, 10), d=30, c=1)
        self.assertEqual(cyclo.mul(orbit_function(f), poincare_series(weights)),
                         cyclo.saito_dual(reduced_zeta(f), 30))


class TestTheorem1(unittest.TestCase):

    def test_chain_example(self):
        witness = verify_theorem1(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))
        self.assertTrue(witness.holds)
        self.assertEqual((witness.c, witness.c_T, witness.d), (4, 10, 60))
        self.assertEqual(witness.root_f, CyclotomicFunction({1: -1, 5: 1, 20: -1, 60: 1}))
        self.assertEqual(witness.root_fT, CyclotomicFunction({1: -1, 3: 1, 12: -1, 60: 1}))
        self.assertEqual(witness.solution_count_f, 4)
        self.assertTrue(witness.closed_form_solutions_match)
        self.assertFalse(witness.root_zetas_agree)
        self.assertIsNone(witness.reduced_identity)

    def test_two_variable_chain(self):
        witness = verify_theorem1(parse_polynomial('x1^2*x2 + x2^3'))
        self.assertTrue(witness.holds)
        self.assertEqual(witness.dual_root_f, witness.root_fT)

    def test_rejects_other_shapes(self):
        with self.assertRaises(PreconditionFailed):
            verify_theorem1(parse_polynomial('x1^2 + x2^3 + x3^5'))

    def test_scan_grid(self):
        result = run_scan(ScanConfig(n=(2, 3), min_exp=2, max_exp=4, shapes=('chain', 'loop'), checks=('theorem1',)))
        self.assertGreater(result.summary.total, 0)
        self.assertEqual(result.summary.failed, 0)
        self.assertEqual(result.summary.errors, 0)
        for report in result.reports:
            with self.subTest(polynomial=report.polynomial):
                if report.shape == 'chain':
                    self.assertEqual(report.theorem1.solution_count_f, report.weights.c)

    @pytest.mark.slow
    def test_grid(self):
        polynomials = enumerate_polynomials(ScanConfig(n=(2, 3, 4), min_exp=2, max_exp=6, shapes=('chain', 'loop')))
        self.assertEqual(len(polynomials), 25 + 15 + 125 + 45 + 625 + 165)
        for f in polynomials:
            with self.subTest(polynomial=to_text(f)):
                witness = verify_theorem1(f)
                self.assertTrue(witness.holds)
                self.assertTrue(witness.duality_holds)
                if witness.shape == 'chain':
                    self.assertEqual(witness.solution_count_f, witness.c)


class TestTheorem2(unittest.TestCase):

    def test_mixed_example(self):
        verdict = classify_theorem2(parse_polynomial('x1^5*x2 + x2^2 + x3^3'))
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.case, 'chain2+fermat')
        self.assertEqual((verdict.c, verdict.c_T, verdict.d), (1, 2, 30))
        self.assertEqual(verdict.witness_source, 'geometric')
        self.assertTrue(verdict.geometric_duality)

    def test_e6_tilde(self):
        verdict = classify_theorem2(parse_polynomial('x1^2*x2 + x2^3 + x3^3'))
        self.assertTrue(verdict.holds)
        self.assertEqual((verdict.c, verdict.c_T), (6, 3))
        self.assertTrue(verdict.root_exists_f)
        self.assertFalse(verdict.root_exists_fT)
        self.assertFalse(verdict.geometric_root_f)
        self.assertEqual(verdict.exceptional_flags, ('c: p1 = 2, p2 = p3 odd', 'E6~'))

    def test_loop_exception(self):
        verdict = classify_theorem2(parse_polynomial('x1^2*x2 + x2^2*x1 + x3^3'))
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.case, 'loop2+fermat')
        self.assertIn('b: p3 = p1p2-1, c1 = 1', verdict.exceptional_flags)
        self.assertTrue(verdict.statement1)
        self.assertEqual(cyclo.saito_dual(verdict.root_f, 9), verdict.root_fT)
        self.assertIsNone(verdict.geometric_duality)

    def test_a_form_excluded(self):
        verdict = classify_theorem2(parse_polynomial('x1^2 + x2^2 + x3^5'))
        self.assertEqual(verdict.case, 'a-form-excluded')
        self.assertTrue(verdict.holds)

    def test_preconditions(self):
        with self.assertRaises(PreconditionFailed):
            classify_theorem2(parse_polynomial('x1^2*x2 + x2^3'))
        with self.assertRaises(PreconditionFailed):
            classify_theorem2(parse_polynomial('x1^2 + x2^3 + x3'))

    def test_c_family(self):
        for p in (3, 5, 7):
            with self.subTest(p=p):
                f = parse_polynomial(f'x1^2*x2 + x2^{p} + x3^{p}')
                self.assertEqual(reduced_zeta(f), CyclotomicFunction({1: -1, p: p}))
                verdict = classify_theorem2(f)
                self.assertEqual(verdict.c, 2 * p)
                self.assertTrue(verdict.root_exists_f)
                self.assertFalse(verdict.root_exists_fT)
                self.assertTrue(verdict.holds)

    def test_grid(self):
        result = run_scan(ScanConfig(n=(3,), min_exp=2, max_exp=5, checks=('theorem2',)))
        self.assertEqual(result.summary.failed, 0)
        self.assertEqual(result.summary.errors, 0)

        def flagged(prefix):
            return {report.polynomial for report in result.reports
                    if any(flag.startswith(prefix) for flag in report.flags)}

        expected_b = {to_text(parse_polynomial(text)) for text in
                      ('x1^3 + x2^2*x3 + x3^2*x2', 'x1^5 + x2^2*x3 + x3^3*x2')}
        expected_c = {to_text(parse_polynomial(text)) for text in
                      ('x1^3 + x2^2*x3 + x3^3', 'x1^5 + x2^2*x3 + x3^5')}
        self.assertEqual(flagged('b:'), expected_b)
        self.assertEqual(flagged('c:'), expected_c)


class TestRemark2(unittest.TestCase):

    def test_chain(self):
        witness = verify_remark2(parse_polynomial('x1^2*x2 + x2^3'))
        self.assertTrue(witness.holds)
        self.assertEqual((witness.c, witness.c_T), (2, 1))
        self.assertTrue(witness.geometric_root_f)
        self.assertTrue(witness.duality_holds)

    def test_requires_two_variables(self):
        with self.assertRaises(PreconditionFailed):
            verify_remark2(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))

    def test_grid(self):
        result = run_scan(ScanConfig(n=(2,), min_exp=2, max_exp=8, shapes=('chain', 'loop'), checks=('remark2',)))
        self.assertEqual(result.summary.total, 49 + 28)
        self.assertEqual(result.summary.failed, 0)
        self.assertEqual(result.summary.errors, 0)
        self.assertTrue(all(report.remark2 is not None for report in result.reports))


class TestReducedDuality(unittest.TestCase):

    def test_mixed_example(self):
        witness = verify_reduced_duality(parse_polynomial('x1^5*x2 + x2^2 + x3^3'))
        self.assertTrue(witness.holds)
        self.assertEqual((witness.c_T, witness.d), (2, 30))
        self.assertTrue(witness.is_root)
        self.assertTrue(witness.geometric_match)

    def test_requires_reduced_weights(self):
        with self.assertRaises(PreconditionFailed):
            verify_reduced_duality(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))


class TestOracleCheck(unittest.TestCase):

    @pytest.mark.slow
    def test_milnor_consistency_grid(self):
        for f in enumerate_polynomials(ScanConfig(n=(2, 3, 4), min_exp=2, max_exp=6)):
            with self.subTest(polynomial=to_text(f)):
                result = check_oracle(f)
                self.assertTrue(result.agree)
                self.assertTrue(result.milnor_consistent)

    def test_milnor_number(self):
        result = check_oracle(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))
        self.assertTrue(result.holds)
        self.assertEqual(result.char_degree, 44)
        self.assertEqual(result.milnor, 44)

    def test_two_variables_sign(self):
        result = check_oracle(parse_polynomial('x1^2 + x2^3'))
        self.assertTrue(result.holds)
        self.assertEqual(result.milnor, 2)
        self.assertEqual(result.char_degree, -2)


class TestEvaluateInstance(unittest.TestCase):

    def test_chain_example(self):
        report = evaluate_instance(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))
        self.assertEqual(report.status, 'ok')
        self.assertEqual(report.shape, 'chain')
        self.assertIn(PUBLISHED_DEGREE_FLAG, report.flags)
        self.assertIn('geometric-root-zetas-differ', report.flags)
        self.assertIsNotNone(report.theorem1)
        self.assertIsNotNone(report.theorem2)
        self.assertIsNone(report.remark2)
        self.assertIsNone(report.reduced)

    def test_skipped_check_is_reported(self):
        report = evaluate_instance(parse_polynomial('x1^2 + x2^3 + x3'), checks=('theorem2',))
        self.assertEqual(report.status, 'skipped')
        self.assertTrue(report.messages[0].startswith('theorem2: skipped'))

    def test_inconsistent_instance_is_an_error(self):
        with patch('src.services.duality.geometric_root_zeta', side_effect=InconsistentResult('zeta mismatch')):
            report = evaluate_instance(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'), checks=('theorem1',))
        self.assertEqual(report.status, 'error')
        self.assertEqual(report.messages, ('zeta mismatch',))

    def test_summarize(self):
        reports = [
            DualityReport(polynomial='x^2', matrix=((2,),), shape='chain', status='ok', flags=('a',)),
            DualityReport(polynomial='x^3', matrix=((3,),), shape='chain', status='failed', flags=('a',)),
            DualityReport(polynomial='x^2 + y^2', matrix=((2, 0), (0, 2)), shape='bp', status='skipped'),
        ]
        summary = summarize(reports)
        self.assertEqual((summary.total, summary.passed, summary.failed, summary.skipped), (3, 1, 1, 1))
        self.assertEqual(summary.by_shape, {'bp': 1, 'chain': 2})
        self.assertEqual(summary.flags, {'a': 2})
        self.assertEqual(summary.exit_code, 1)


class TestSummaries(unittest.TestCase):

    def test_root_summary(self):
        response = root_summary(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))
        self.assertEqual(response.k, 4)
        self.assertTrue(response.root_exists)
        self.assertEqual(len(response.root_actions), 4)
        self.assertIn(CyclotomicFunction({1: -1, 5: 1, 20: -1, 60: 1}), response.roots)
        self.assertEqual(len(response.geometric_root_zetas), 3)

    def test_dual_summary(self):
        response = dual_summary(parse_polynomial('x1^5*x2 + x2^2 + x3^3'))
        self.assertEqual(response.degree, 30)
        self.assertEqual(cyclo.saito_dual(response.dual, 30), response.reduced_zeta)
        with self.assertRaises(NonDivisorPeriod):
            dual_summary(parse_polynomial('x1^5*x2 + x2^2 + x3^3'), 7)


if __name__ == '__main__':
    unittest.main()
