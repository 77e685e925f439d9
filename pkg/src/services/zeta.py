"""
Monodromy zeta functions of invertible polynomials: closed forms for chains,
loops and the three-variable mixed shapes, and the Milnor-Orlik weight oracle.

All functions return the unreduced zeta function; use ``cyclo.reduce`` for the
reduced one.
"""
from collections.abc import Mapping
from fractions import Fraction
from math import gcd, lcm, prod

from src.conf.log import get_logger
from src.schemas.cyclotomic import CyclotomicFunction
from src.schemas.polynomials import InvertiblePolynomial, WeightSystem
from src.services import cyclo
from src.services.errors import NonIntegralDivisor
from src.services.invpoly import canonical_weights, decompose

logger = get_logger('zeta')


class OrlikDivisor:
    """
    Element sum a_u Lambda_u of the Milnor-Orlik divisor ring, with
    Lambda_a Lambda_b = gcd(a, b) Lambda_lcm(a, b) and 1 = Lambda_1.
    Multiplicities are exact rationals.
    """

    def __init__(self, multiplicities: Mapping[int, Fraction | int] | None = None):
        self.multiplicities = {u: Fraction(a) for u, a in (multiplicities or {}).items() if a}

    @classmethod
    def one(cls) -> 'OrlikDivisor':
        return cls({1: 1})

    def __add__(self, other: 'OrlikDivisor') -> 'OrlikDivisor':
        total = dict(self.multiplicities)
        for u, a in other.multiplicities.items():
            total[u] = total.get(u, 0) + a
        return OrlikDivisor(total)

    def __mul__(self, other: 'OrlikDivisor') -> 'OrlikDivisor':
        total: dict[int, Fraction] = {}
        for u, a in self.multiplicities.items():
            for v, b in other.multiplicities.items():
                key = lcm(u, v)
                total[key] = total.get(key, 0) + a * b * gcd(u, v)
        return OrlikDivisor(total)

    def __eq__(self, other) -> bool:
        return isinstance(other, OrlikDivisor) and self.multiplicities == other.multiplicities

    def __repr__(self) -> str:
        return f'OrlikDivisor({dict(sorted(self.multiplicities.items()))})'

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.multiplicities.values())

    def to_reduced_zeta(self, n: int) -> CyclotomicFunction:
        """
        The reduced zeta function (prod (1 - t^u)^a_u)^((-1)^(n-1)).

        :raises NonIntegralDivisor: If some multiplicity is not an integer.
        """
        if not self.is_integral():
            raise NonIntegralDivisor(dict(self.multiplicities))

        phi = CyclotomicFunction({u: int(a) for u, a in self.multiplicities.items()})

        return cyclo.signed(phi, (-1) ** (n - 1))

    @classmethod
    def from_reduced_zeta(cls, phi: CyclotomicFunction, n: int) -> 'OrlikDivisor':
        sign = (-1) ** (n - 1)
        return cls({m: sign * s for m, s in phi.support})


def bracket(qs) -> int:
    """
    <q1, ..., qk> = q1...qk - q2...qk + ... + (-1)^(k-1) qk + (-1)^k.
    By convention <> = 1 and <q> = q - 1.

    :param qs: The integers q1..qk.
    :type qs: Sequence[int]
    :return: The alternating sum.
    :rtype: int
    """
    qs = tuple(qs)

    return sum((-1) ** i * prod(qs[i:]) for i in range(len(qs) + 1))


def _weight_system(weights: list[int], d: int) -> WeightSystem:
    c = 0
    for w in weights:
        c = gcd(c, w)

    return WeightSystem(w=tuple(weights), d=d, c=c)


def chain_weights(p) -> WeightSystem:
    """
    Weights of the chain x1^p1 x2 + ... + x(n-1)^p(n-1) xn + xn^pn:
    w_j = p1...p(j-1) <p(j+1), ..., pn>, d = p1...pn.
    """
    p = tuple(p)
    if not p:
        raise ValueError('a chain needs at least one exponent')

    return _weight_system([prod(p[:j]) * bracket(p[j + 1:]) for j in range(len(p))], prod(p))


def loop_weights(p) -> WeightSystem:
    """
    Weights of the loop x1^p1 x2 + ... + xn^pn x1:
    w_j = <p(j+1), ..., pn, p1, ..., p(j-1)>, d = p1...pn + (-1)^(n-1).
    """
    p = tuple(p)
    if len(p) < 2:
        raise ValueError('a loop needs at least two exponents')

    n = len(p)
    return _weight_system([bracket(p[j + 1:] + p[:j]) for j in range(n)], prod(p) + (-1) ** (n - 1))


def zeta_chain(p) -> CyclotomicFunction:
    """
    Zeta function of a chain:
    prod_j (1 - t^(pj...pn / cj))^((-1)^(n-j) cj), where cj is the weight gcd
    of the subchain x_j, ..., x_n.

    :param p: Chain exponents p1..pn.
    :type p: Sequence[int]
    :return: The unreduced zeta function.
    :rtype: CyclotomicFunction
    """
    p = tuple(p)
    n = len(p)
    pairs = []

    for j in range(n):
        c_j = chain_weights(p[j:]).c
        pairs.append((prod(p[j:]) // c_j, (-1) ** (n - 1 - j) * c_j))

    return CyclotomicFunction(pairs)


def zeta_loop(p) -> CyclotomicFunction:
    """
    Zeta function of a loop: (1 - t^(d/c))^((-1)^(n-1) c).

    :param p: Loop exponents p1..pn, n >= 2.
    :type p: Sequence[int]
    :return: The unreduced zeta function.
    :rtype: CyclotomicFunction
    """
    weights = loop_weights(p)

    return cyclo.factor(weights.d // weights.c, (-1) ** (len(weights.w) - 1) * weights.c)


def _gcd(*values: int) -> int:
    result = 0
    for value in values:
        result = gcd(result, value)
    return result


def zeta_bp3(p1: int, p2: int, p3: int) -> CyclotomicFunction:
    """
    Brieskorn-Pham x1^p1 + x2^p2 + x3^p3:
    reduced zeta prod(1 - t^pi) (1 - t^(p1p2p3/c))^c / (prod_{i<j}(1 - t^(pipj/cij))^cij (1 - t)),
    with cij = gcd(pi, pj) and c the gcd of the weights (p2p3, p1p3, p1p2).
    """
    c = _gcd(p2 * p3, p1 * p3, p1 * p2)
    pairs = [(p1, 1), (p2, 1), (p3, 1), (p1 * p2 * p3 // c, c)]
    for a, b in ((p1, p2), (p1, p3), (p2, p3)):
        c_ab = gcd(a, b)
        pairs.append((a * b // c_ab, -c_ab))

    return CyclotomicFunction(pairs)


def zeta_b3(p1: int, p2: int, p3: int) -> CyclotomicFunction:
    """
    Loop plus Fermat term x1^p1 x2 + x2^p2 x1 + x3^p3, weights
    (p3(p2-1), p3(p1-1), p1p2-1; p3(p1p2-1)).

    :param p1: First loop exponent.
    :type p1: int
    :param p2: Second loop exponent.
    :type p2: int
    :param p3: Fermat exponent.
    :type p3: int
    :return: The unreduced zeta function.
    :rtype: CyclotomicFunction
    """
    c = _gcd(p3 * (p2 - 1), p3 * (p1 - 1), p1 * p2 - 1)
    c1 = gcd(p2 - 1, p1 - 1)

    return CyclotomicFunction([
        (p3, 1),
        (p3 * (p1 * p2 - 1) // c, c),
        ((p1 * p2 - 1) // c1, -c1),
    ])


def zeta_c3(p1: int, p2: int, p3: int) -> CyclotomicFunction:
    """
    Chain plus Fermat term x1^p1 x2 + x2^p2 + x3^p3, weights
    (p3(p2-1), p3p1, p1p2; p1p2p3), c1 = gcd(p2 - 1, p1), c2 = gcd(p2, p3).

    :param p1: Chain head exponent.
    :type p1: int
    :param p2: Chain tail exponent.
    :type p2: int
    :param p3: Fermat exponent.
    :type p3: int
    :return: The unreduced zeta function.
    :rtype: CyclotomicFunction
    """
    c = _gcd(p3 * (p2 - 1), p3 * p1, p1 * p2)
    c1 = gcd(p2 - 1, p1)
    c2 = gcd(p2, p3)

    return CyclotomicFunction([
        (p2, 1),
        (p3, 1),
        (p1 * p2 * p3 // c, c),
        (p1 * p2 // c1, -c1),
        (p2 * p3 // c2, -c2),
    ])


def milnor_orlik_divisor(weights: WeightSystem) -> OrlikDivisor:
    """
    prod_i ((1/v_i) Lambda_(u_i) - 1) where d/w_i = u_i/v_i in lowest terms.
    """
    divisor = OrlikDivisor.one()

    for w in weights.w:
        ratio = Fraction(weights.d, w)
        divisor = divisor * (OrlikDivisor({ratio.numerator: Fraction(1, ratio.denominator)})
                             + OrlikDivisor({1: -1}))

    return divisor


def milnor_orlik_zeta(weights: WeightSystem, n: int | None = None) -> CyclotomicFunction:
    """
    Zeta function from the weights alone through the Milnor-Orlik divisor.
    Normalized so that x^p gives 1 - t^p.

    :param weights: The weight system (w; d).
    :type weights: WeightSystem
    :param n: Number of variables; defaults to the length of w.
    :type n: int | None
    :return: The unreduced zeta function.
    :rtype: CyclotomicFunction
    :raises NonIntegralDivisor: If the final divisor is not integral.
    """
    n = weights.n if n is None else n
    reduced = milnor_orlik_divisor(weights).to_reduced_zeta(n)

    return cyclo.mul(reduced, cyclo.factor(1))


def thom_sebastiani(parts: list[tuple[CyclotomicFunction, int]]) -> CyclotomicFunction:
    """
    Zeta function of a sum of polynomials in disjoint variables from the
    zeta functions of the summands: the divisors of the reduced zeta functions
    multiply.

    :param parts: Pairs (unreduced zeta, number of variables) of the summands.
    :type parts: list[tuple[CyclotomicFunction, int]]
    :return: The unreduced zeta function of the sum.
    :rtype: CyclotomicFunction
    """
    divisor = OrlikDivisor.one()
    for phi, n in parts:
        divisor = divisor * OrlikDivisor.from_reduced_zeta(cyclo.reduce(phi), n)

    reduced = divisor.to_reduced_zeta(sum(n for _, n in parts))

    return cyclo.mul(reduced, cyclo.factor(1))


def atom_zeta(atom) -> CyclotomicFunction:
    return zeta_chain(atom.exponents) if atom.kind == 'chain' else zeta_loop(atom.exponents)


def _fermat(atoms) -> int:
    return next(atom.exponents[0] for atom in atoms if len(atom.exponents) == 1)


def closed_form(f: InvertiblePolynomial) -> tuple[str, CyclotomicFunction] | None:
    """
    The closed-form zeta function for the shapes that have one, with its label.
    """
    decomposition = decompose(f)
    atoms = decomposition.atoms
    shape = decomposition.shape

    if shape == 'chain':
        return 'chain', zeta_chain(atoms[0].exponents)
    if shape == 'loop':
        return 'loop', zeta_loop(atoms[0].exponents)
    if f.n != 3:
        return None
    if shape == 'bp':
        return 'bp', zeta_bp3(*(atom.exponents[0] for atom in atoms))
    if shape == 'loop2+fermat':
        loop = next(atom for atom in atoms if atom.kind == 'loop')
        return 'loop2+fermat', zeta_b3(*loop.exponents, _fermat(atoms))
    if shape == 'chain2+fermat':
        chain = next(atom for atom in atoms if len(atom.exponents) == 2)
        return 'chain2+fermat', zeta_c3(*chain.exponents, _fermat(atoms))

    return None


def zeta(f: InvertiblePolynomial) -> CyclotomicFunction:
    """
    Monodromy zeta function of f.

    Single chains and loops and the three-variable shapes use their closed
    forms; every other Kreuzer-Skarke polynomial goes through the weight oracle.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :return: The unreduced zeta function.
    :rtype: CyclotomicFunction
    :raises NotKreuzerSkarke: If f does not decompose into chains and loops.
    """
    found = closed_form(f)
    if found is not None:
        logger.debug('zeta of %s via %s closed form', f.matrix, found[0])
        return found[1]

    return milnor_orlik_zeta(canonical_weights(f), f.n)


def zeta_paths(f: InvertiblePolynomial) -> dict[str, CyclotomicFunction]:
    """
    Every independent computation of the zeta function that applies to f,
    keyed by path name (``oracle``, ``thom-sebastiani`` and the closed-form label).
    All values must coincide.
    """
    atoms = decompose(f).atoms
    paths = {'oracle': milnor_orlik_zeta(canonical_weights(f), f.n)}

    found = closed_form(f)
    if found is not None:
        paths[found[0]] = found[1]
    if len(atoms) > 1:
        paths['thom-sebastiani'] = thom_sebastiani([(atom_zeta(atom), len(atom.exponents)) for atom in atoms])

    return paths
