"""
Invertible polynomials: parsing, canonical weights, Berglund-Hubsch transpose,
Kreuzer-Skarke decomposition and the origin/Milnor checks.
"""
import re
from fractions import Fraction
from math import gcd, prod

import orjson
from sympy import Matrix

from src.conf.log import get_logger
from src.schemas.polynomials import (AtomicDecomposition, Chain, InvertiblePolynomial, Loop, PolynomialRequest,
                                     WeightSystem)
from src.services.errors import (NonIntegralMilnor, NonPositiveWeight, NonUnitCoefficient, NotKreuzerSkarke,
                                 NotSquare, PolynomialSyntaxError, SingularMatrix)

logger = get_logger('invpoly')

TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z_]+\d*)|(?P<op>[+*^]))')
INDEXED = re.compile(r'x(\d+)')


def _tokens(text: str) -> list[tuple[str, str, int]]:
    tokens, position = [], 0

    while True:
        match = TOKEN.match(text, position)
        if match is None:
            rest = text[position:].lstrip()
            if not rest:
                break
            raise PolynomialSyntaxError(f'unexpected character {rest[0]!r}', len(text) - len(rest))
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        position = match.end()

    return tokens


class _Parser:
    def __init__(self, text: str, allow_coefficients: bool):
        self.text = text
        self.tokens = _tokens(text)
        self.index = 0
        self.allow_coefficients = allow_coefficients

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, kind: str, value: str | None = None) -> tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise PolynomialSyntaxError(f'expected {value or kind}, got end of input', len(self.text))
        if token[0] != kind or (value is not None and token[1] != value):
            raise PolynomialSyntaxError(f'expected {value or kind}, got {token[1]!r}', token[2])
        self.index += 1
        return token

    def poly(self) -> list[dict[str, int]]:
        terms = [self.term()]
        while self.peek() is not None:
            self.take('op', '+')
            terms.append(self.term())
        return terms

    def term(self) -> dict[str, int]:
        token = self.peek()
        if token is not None and token[0] == 'int':
            self.index += 1
            coefficient = int(token[1])
            if coefficient != 1:
                if not self.allow_coefficients:
                    raise NonUnitCoefficient(coefficient, token[2])
                logger.warning('coefficient %d at position %d discarded (rescaling of variables)',
                               coefficient, token[2])
            if self.peek() is not None and self.peek()[:2] == ('op', '*'):
                self.index += 1

        exponents: dict[str, int] = {}
        self.factor(exponents)
        while self.peek() is not None and self.peek()[:2] != ('op', '+'):
            if self.peek()[:2] == ('op', '*'):
                self.index += 1
            self.factor(exponents)

        return exponents

    def factor(self, exponents: dict[str, int]):
        _, name, _ = self.take('var')
        exponent = 1
        if self.peek() is not None and self.peek()[:2] == ('op', '^'):
            self.index += 1
            _, value, position = self.take('int')
            exponent = int(value)
            if exponent < 1:
                raise PolynomialSyntaxError('exponent must be positive', position)
        exponents[name] = exponents.get(name, 0) + exponent


def parse_polynomial(text: str, allow_coefficients: bool = False) -> InvertiblePolynomial:
    """
    Parse ``x1^3*x2 + x2^4*x3 + x3^5`` style input into an invertible polynomial.

    Monomials become rows in textual order. Variables are ordered by index when
    all of them are ``x<index>``, otherwise by first appearance.

    :param text: The polynomial.
    :type text: str
    :param allow_coefficients: Discard non-unit coefficients with a warning instead of failing.
    :type allow_coefficients: bool
    :return: The parsed polynomial.
    :rtype: InvertiblePolynomial
    :raises PolynomialSyntaxError: If the text does not follow the grammar.
    :raises NotSquare: If the number of monomials differs from the number of variables.
    :raises SingularMatrix: If det E = 0.
    :raises NonUnitCoefficient: If a coefficient other than 1 appears and is not allowed.
    """
    if not text.strip():
        raise PolynomialSyntaxError('empty polynomial', 0)

    terms = _Parser(text, allow_coefficients).poly()
    names: list[str] = []
    for term in terms:
        names.extend(name for name in term if name not in names)

    if all(INDEXED.fullmatch(name) for name in names):
        names.sort(key=lambda name: int(name[1:]))

    return from_matrix([[term.get(name, 0) for name in names] for term in terms], names)


def from_matrix(matrix: list[list[int]], names: list[str] | None = None) -> InvertiblePolynomial:
    """
    Build an invertible polynomial from its exponent matrix.

    :param matrix: Square matrix of non-negative integers.
    :type matrix: list[list[int]]
    :param names: Variable names; ``x1..xn`` by default.
    :type names: list[str] | None
    :return: The polynomial.
    :rtype: InvertiblePolynomial
    """
    rows = len(matrix)
    cols = len(names) if names is not None else (len(matrix[0]) if matrix else 0)

    if rows != cols or any(len(row) != cols for row in matrix):
        raise NotSquare(rows, cols)
    if any(entry < 0 for row in matrix for entry in row):
        raise ValueError('exponents must be non-negative')
    if determinant(matrix) == 0:
        raise SingularMatrix()

    return InvertiblePolynomial(
        matrix=tuple(tuple(row) for row in matrix),
        names=tuple(names if names is not None else (f'x{j + 1}' for j in range(cols)))
    )


def from_json(document: str | bytes) -> InvertiblePolynomial:
    """
    Read the ``{"matrix": [[...]], "names": [...]}`` input form.
    """
    data = orjson.loads(document)

    return from_matrix(data['matrix'], data.get('names'))


def to_text(f: InvertiblePolynomial) -> str:
    monomials = []

    for row in f.matrix:
        factors = [name if e == 1 else f'{name}^{e}' for name, e in zip(f.names, row) if e]
        monomials.append('*'.join(factors))

    return ' + '.join(monomials)


def determinant(matrix) -> int:
    return int(Matrix(matrix).det(method='bareiss'))


def canonical_weights(f: InvertiblePolynomial) -> WeightSystem:
    """
    Canonical weights by Cramer's rule: w_i is det E with column i replaced by
    ones, d = det E. Signs are flipped when d < 0 so that d > 0.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :return: The weight system (w; d) and c = gcd(w).
    :rtype: WeightSystem
    :raises NonPositiveWeight: If some weight is not positive after normalization.
    """
    d = determinant(f.matrix)
    weights = []
    for i in range(f.n):
        replaced = [[1 if j == i else entry for j, entry in enumerate(row)] for row in f.matrix]
        weights.append(determinant(replaced))

    if d < 0:
        d, weights = -d, [-w for w in weights]
    if any(w <= 0 for w in weights):
        raise NonPositiveWeight(weights)

    c = 0
    for w in weights:
        c = gcd(c, w)

    return WeightSystem(w=tuple(weights), d=d, c=c)


def transpose(f: InvertiblePolynomial) -> InvertiblePolynomial:
    """
    Berglund-Hubsch transpose: the polynomial with exponent matrix E^T.
    """
    return InvertiblePolynomial(matrix=tuple(zip(*f.matrix)), names=f.names)


def _own_candidates(row: tuple[int, ...], index: int) -> list[tuple[int, int | None]]:
    support = [j for j, e in enumerate(row) if e]

    if len(support) == 1:
        return [(support[0], None)]
    if len(support) == 2:
        a, b = support
        candidates = []
        if row[b] == 1:
            candidates.append((a, b))
        if row[a] == 1:
            candidates.append((b, a))
        if candidates:
            return candidates

    raise NotKreuzerSkarke(index)


def _assign(candidates: list[list[tuple[int, int | None]]]) -> list[tuple[int, int | None]] | None:
    # own variable per monomial, bijective, every variable pointed at by at most one monomial
    chosen: list[tuple[int, int | None]] = []

    def extend(i: int) -> bool:
        if i == len(candidates):
            return True
        for own, extra in candidates[i]:
            if any(own == o for o, _ in chosen):
                continue
            if extra is not None and any(extra == x for _, x in chosen):
                continue
            chosen.append((own, extra))
            if extend(i + 1):
                return True
            chosen.pop()
        return False

    return chosen if extend(0) else None


def decompose(f: InvertiblePolynomial) -> AtomicDecomposition:
    """
    Split f into chain and loop atoms (Kreuzer-Skarke classification).

    Each monomial is x_a^p or x_a^p x_b; x_a is its own variable and x_b the
    link. The links form a graph of in-degree at most one whose components
    are chains (ending in a pure power) and cycles (loops).

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :return: Atoms ordered by their smallest variable.
    :rtype: AtomicDecomposition
    :raises NotKreuzerSkarke: If f is not a sum of chains and loops.
    """
    candidates = [_own_candidates(row, i) for i, row in enumerate(f.matrix)]
    chosen = _assign(candidates)
    if chosen is None:
        raise NotKreuzerSkarke(len(f.matrix) - 1, 'no chain/loop assignment of monomials to variables')

    link = {own: extra for own, extra in chosen}
    exponent = {own: f.matrix[i][own] for i, (own, _) in enumerate(chosen)}
    targets = {extra for extra in link.values() if extra is not None}

    atoms, seen = [], set()
    for start in range(f.n):
        if start in seen or start in targets:
            continue
        path = [start]
        while link[path[-1]] is not None:
            path.append(link[path[-1]])
        seen.update(path)
        atoms.append(Chain(exponents=tuple(exponent[v] for v in path), variables=tuple(path)))

    for start in range(f.n):
        if start in seen:
            continue
        cycle = [start]
        while link[cycle[-1]] != start:
            cycle.append(link[cycle[-1]])
        seen.update(cycle)
        atoms.append(Loop(exponents=tuple(exponent[v] for v in cycle), variables=tuple(cycle)))

    atoms.sort(key=lambda atom: min(atom.variables))

    return AtomicDecomposition(atoms=tuple(atoms))


def assemble(decomposition: AtomicDecomposition, n: int) -> list[list[int]]:
    """
    Rebuild an exponent matrix from atoms; row order follows the atoms.
    """
    matrix = []

    for atom in decomposition.atoms:
        size = len(atom.variables)
        for position, (variable, p) in enumerate(zip(atom.variables, atom.exponents)):
            row = [0] * n
            row[variable] = p
            if position + 1 < size:
                row[atom.variables[position + 1]] = 1
            elif atom.kind == 'loop':
                row[atom.variables[0]] = 1
            matrix.append(row)

    return matrix


def has_critical_point_at_origin(f: InvertiblePolynomial) -> bool:
    """
    True iff no monomial is a bare variable, i.e. no row of E is a unit vector.
    """
    return not any(sorted(row) == [0] * (f.n - 1) + [1] for row in f.matrix)


def milnor_number(f: InvertiblePolynomial, weights: WeightSystem | None = None) -> int:
    """
    Milnor number prod (d - w_i) / w_i.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :param weights: Precomputed canonical weights.
    :type weights: WeightSystem | None
    :return: The Milnor number; 0 when some w_i = d.
    :rtype: int
    :raises NonIntegralMilnor: If the product is not an integer.
    """
    weights = weights or canonical_weights(f)
    value = prod((Fraction(weights.d - w, w) for w in weights.w), start=Fraction(1))

    if value.denominator != 1:
        raise NonIntegralMilnor(value)

    return int(value)


def is_A_form(f: InvertiblePolynomial) -> bool:
    """
    True iff f is x1^2 + x2^2 + x3^p up to permutation of the variables.
    """
    if f.n != 3:
        return False

    try:
        atoms = decompose(f).atoms
    except NotKreuzerSkarke:
        return False

    if any(atom.kind != 'chain' or len(atom.exponents) != 1 for atom in atoms):
        return False

    exponents = sorted(atom.exponents[0] for atom in atoms)

    return exponents[:2] == [2, 2]


def from_request(body: PolynomialRequest) -> InvertiblePolynomial:
    """
    The polynomial of an HTTP request body: the ``polynomial`` text or the ``matrix`` with optional ``names``.

    :param body: The request body.
    :type body: PolynomialRequest
    :return: The polynomial.
    :rtype: InvertiblePolynomial
    :raises ValueError: If neither or both inputs are given.
    """
    if (body.polynomial is None) == (body.matrix is None):
        raise ValueError('give exactly one of polynomial and matrix')
    if body.polynomial is not None:
        return parse_polynomial(body.polynomial, body.allow_coefficients)

    return from_matrix(body.matrix, body.names)
