import unittest

from src.schemas.polynomials import PolynomialRequest, WeightSystem
from src.services.errors import (NonIntegralMilnor, NonPositiveWeight, NonUnitCoefficient, NotKreuzerSkarke,
                                 NotSquare, PolynomialSyntaxError, SingularMatrix)
from src.services.invpoly import (assemble, canonical_weights, decompose, from_json, from_matrix, from_request,
                                  has_critical_point_at_origin, is_A_form, milnor_number, parse_polynomial, to_text,
                                  transpose)


class TestParse(unittest.TestCase):

    def test_parse_chain(self):
        f = parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5')
        self.assertEqual(f.matrix, ((3, 1, 0), (0, 4, 1), (0, 0, 5)))
        self.assertEqual(f.names, ('x1', 'x2', 'x3'))

    def test_parse_orders_indexed_variables(self):
        f = parse_polynomial('x3^3 + x2^2 + x1^5*x2')
        self.assertEqual(f.names, ('x1', 'x2', 'x3'))
        self.assertEqual(f.matrix, ((0, 0, 3), (0, 2, 0), (5, 1, 0)))

    def test_parse_free_names_by_appearance(self):
        f = parse_polynomial('y^2*x + x^3')
        self.assertEqual(f.names, ('y', 'x'))
        self.assertEqual(f.matrix, ((2, 1), (0, 3)))

    def test_syntax_error_position(self):
        with self.assertRaises(PolynomialSyntaxError) as context:
            parse_polynomial('x1^3 + $x2')
        self.assertEqual(context.exception.position, 7)

    def test_empty(self):
        with self.assertRaises(PolynomialSyntaxError):
            parse_polynomial('   ')

    def test_not_square(self):
        with self.assertRaises(NotSquare):
            parse_polynomial('x1^2*x2 + x2^3*x3')

    def test_singular(self):
        with self.assertRaises(SingularMatrix):
            parse_polynomial('x1^2*x2^2 + x1*x2')

    def test_coefficients(self):
        with self.assertRaises(NonUnitCoefficient):
            parse_polynomial('2*x1^3 + x2^2')
        f = parse_polynomial('2*x1^3 + x2^2', allow_coefficients=True)
        self.assertEqual(f.matrix, ((3, 0), (0, 2)))

    def test_from_json_and_to_text(self):
        f = from_json(b'{"matrix": [[3, 1, 0], [0, 4, 1], [0, 0, 5]]}')
        self.assertEqual(to_text(f), 'x1^3*x2 + x2^4*x3 + x3^5')

    def test_from_matrix_rejects_negative(self):
        with self.assertRaises(ValueError):
            from_matrix([[2, -1], [0, 3]])

    def test_from_request(self):
        f = from_request(PolynomialRequest(matrix=[[2, 0], [0, 3]], names=['x', 'y']))
        self.assertEqual(to_text(f), 'x^2 + y^3')
        with self.assertRaises(ValueError):
            from_request(PolynomialRequest())


class TestWeights(unittest.TestCase):

    def test_chain_weights(self):
        weights = canonical_weights(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))
        self.assertEqual(weights, WeightSystem(w=(16, 12, 12), d=60, c=4))
        self.assertEqual(str(weights), '(16,12,12;60)')
        self.assertFalse(weights.reduced)

    def test_mixed_weights_and_transpose(self):
        f = parse_polynomial('x1^5*x2 + x2^2 + x3^3')
        self.assertEqual(canonical_weights(f), WeightSystem(w=(3, 15, 10), d=30, c=1))
        f_T = transpose(f)
        self.assertEqual(to_text(f_T), 'x1^5 + x1*x2^2 + x3^3')
        self.assertEqual(canonical_weights(f_T), WeightSystem(w=(6, 12, 10), d=30, c=2))

    def test_transpose_is_involution(self):
        f = parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5')
        self.assertEqual(transpose(transpose(f)), f)

    def test_non_positive_weight(self):
        with self.assertRaises(NonPositiveWeight):
            canonical_weights(from_matrix([[3, 1], [1, 1]]))

    def test_milnor_number(self):
        self.assertEqual(milnor_number(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5')), 44)
        self.assertEqual(milnor_number(parse_polynomial('x1^2 + x2^3 + x3^5')), 8)

    def test_milnor_number_not_integral(self):
        with self.assertRaises(NonIntegralMilnor):
            milnor_number(from_matrix([[5, 1], [2, 2]]))


class TestDecompose(unittest.TestCase):

    def test_chain(self):
        decomposition = decompose(parse_polynomial('x1^3*x2 + x2^4*x3 + x3^5'))
        self.assertEqual(decomposition.shape, 'chain')
        self.assertEqual(decomposition.atoms[0].exponents, (3, 4, 5))
        self.assertEqual(decomposition.atoms[0].variables, (0, 1, 2))

    def test_transposed_chain_reverses(self):
        decomposition = decompose(parse_polynomial('x1^3 + x1*x2^4 + x2*x3^5'))
        self.assertEqual(decomposition.shape, 'chain')
        self.assertEqual(decomposition.atoms[0].exponents, (5, 4, 3))
        self.assertEqual(decomposition.atoms[0].variables, (2, 1, 0))

    def test_loop(self):
        decomposition = decompose(parse_polynomial('x1^2*x2 + x2^3*x3 + x3^4*x1'))
        self.assertEqual(decomposition.shape, 'loop')
        self.assertEqual(decomposition.atoms[0].exponents, (2, 3, 4))

    def test_mixed_shapes(self):
        self.assertEqual(decompose(parse_polynomial('x1^2 + x2^3 + x3^5')).shape, 'bp')
        self.assertEqual(decompose(parse_polynomial('x1^2*x2 + x2^2*x1 + x3^3')).shape, 'loop2+fermat')
        self.assertEqual(decompose(parse_polynomial('x1^2*x2 + x2^3 + x3^3')).shape, 'chain2+fermat')

    def test_not_kreuzer_skarke(self):
        with self.assertRaises(NotKreuzerSkarke):
            decompose(parse_polynomial('x1^2*x2*x3 + x2^3 + x3^3'))

    def test_assemble_round_trip(self):
        f = parse_polynomial('x1^2*x2 + x2^3*x3 + x3^4*x1')
        self.assertEqual(from_matrix(assemble(decompose(f), f.n)), f)

    def test_critical_point_and_a_form(self):
        self.assertFalse(has_critical_point_at_origin(parse_polynomial('x1 + x2^2')))
        self.assertTrue(has_critical_point_at_origin(parse_polynomial('x1^2*x2 + x2^3')))
        self.assertTrue(is_A_form(parse_polynomial('x1^2 + x2^2 + x3^7')))
        self.assertTrue(is_A_form(parse_polynomial('x1^5 + x2^2 + x3^2')))
        self.assertFalse(is_A_form(parse_polynomial('x1^2 + x2^3 + x3^3')))


if __name__ == '__main__':
    unittest.main()
