class BHZetaError(Exception):
    """
    Base class of every error raised by the toolkit.
    """


class PolynomialSyntaxError(BHZetaError):
    def __init__(self, message: str, position: int):
        self.message = message
        self.position = position
        super().__init__(f'{message} at position {position}')


class NotSquare(BHZetaError):
    def __init__(self, monomials: int, variables: int):
        self.monomials = monomials
        self.variables = variables
        super().__init__(f'{monomials} monomials but {variables} variables; an invertible polynomial is square')


class SingularMatrix(BHZetaError):
    def __init__(self):
        super().__init__('exponent matrix is singular (det E = 0)')


class NonUnitCoefficient(BHZetaError):
    def __init__(self, coefficient: int, position: int):
        self.coefficient = coefficient
        self.position = position
        super().__init__(f'coefficient {coefficient} at position {position}; pass allow_coefficients to discard it')


class NonPositiveWeight(BHZetaError):
    def __init__(self, weights: list[int]):
        self.weights = weights
        super().__init__(f'canonical weights {weights} are not all positive')


class NonIntegralMilnor(BHZetaError):
    def __init__(self, value):
        self.value = value
        super().__init__(f'Milnor product {value} is not an integer; the singularity is not isolated')


class NotKreuzerSkarke(BHZetaError):
    def __init__(self, row: int, reason: str = 'monomial is neither a chain nor a loop link'):
        self.row = row
        super().__init__(f'row {row + 1}: {reason}')


class NonDivisorPeriod(BHZetaError):
    def __init__(self, m: int, d: int):
        self.m = m
        self.d = d
        super().__init__(f'period {m} does not divide {d}; the Saito dual is undefined')


class NonIntegralDivisor(BHZetaError):
    def __init__(self, divisor: dict):
        self.divisor = divisor
        super().__init__(f'divisor {divisor} has non-integral multiplicities')


class InvalidSolution(BHZetaError):
    def __init__(self, k: int, m: tuple[int, ...]):
        self.k = k
        self.m = m
        super().__init__(f'{m} does not solve E m = 1 mod {k}')


class NoGeometricRoot(BHZetaError):
    def __init__(self, k: int):
        self.k = k
        super().__init__(f'E m = 1 mod {k} has no solution; no geometric root of degree {k}')


class UnsupportedShape(BHZetaError):
    def __init__(self, shape: str):
        self.shape = shape
        super().__init__(f'no closed form for shape {shape}')


class NonReducedWeights(BHZetaError):
    def __init__(self, c: int):
        self.c = c
        super().__init__(f'canonical weights are not reduced (c = {c})')


class PreconditionFailed(BHZetaError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class InconsistentResult(BHZetaError):
    """
    Two computations of the same quantity disagree.
    """
    def __init__(self, message: str):
        self.message = message
        super().__init__(message)
