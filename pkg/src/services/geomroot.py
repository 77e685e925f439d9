"""
Geometric roots of the monodromy: the actions Sigma with f(Sigma x) = sigma f(x),
the rotation numbers of Sigma^-1 o Gamma_(1/k) and the zeta functions of these maps.
"""
from fractions import Fraction
from itertools import combinations, product
from math import lcm, prod
from typing import Literal

from sympy import isprime

from src.conf.config import settings
from src.conf.log import get_logger
from src.schemas.cyclotomic import CyclotomicFunction
from src.schemas.polynomials import AtomicDecomposition, Chain, InvertiblePolynomial
from src.schemas.roots import RootAction, RootMap
from src.services import cyclo
from src.services.errors import InconsistentResult, InvalidSolution, NoGeometricRoot, UnsupportedShape
from src.services.invpoly import assemble, canonical_weights, decompose
from src.services.smith import rank_mod_p, solve_modular
from src.services.zeta import bracket, zeta

logger = get_logger('geomroot')

Engine = Literal['auto', 'exhaustive', 'elimination', 'both']


def _matrix(f_or_matrix) -> tuple[tuple[int, ...], ...]:
    return f_or_matrix.matrix if isinstance(f_or_matrix, InvertiblePolynomial) else tuple(map(tuple, f_or_matrix))


def is_solution(matrix, k: int, m) -> bool:
    return all((sum(e * x for e, x in zip(row, m)) - 1) % k == 0 for row in _matrix(matrix))


def _exhaustive(matrix, k: int) -> list[tuple[int, ...]]:
    return [m for m in product(range(k), repeat=len(matrix)) if is_solution(matrix, k, m)]


def solve_congruence(matrix, k: int, engine: Engine = 'auto') -> list[RootAction]:
    """
    All solutions of E m = (1, ..., 1) mod k in (Z_k)^n, sorted.

    ``auto`` searches exhaustively while k^n stays within
    ``settings.exhaustive_limit`` and uses Smith normal form elimination
    otherwise; ``both`` runs the two engines and requires them to agree.

    :param matrix: Exponent matrix E or an invertible polynomial.
    :type matrix: InvertiblePolynomial | list[list[int]]
    :param k: The root degree, k >= 1.
    :type k: int
    :param engine: Solver selection.
    :type engine: str
    :return: Root actions; an empty list means there is no geometric root of degree k.
    :rtype: list[RootAction]
    """
    if k < 1:
        raise ValueError(f'root degree must be positive, got {k}')

    matrix = _matrix(matrix)
    n = len(matrix)
    if engine == 'auto':
        engine = 'exhaustive' if k ** n <= settings.exhaustive_limit else 'elimination'
    logger.debug('solving E m = 1 mod %d for n = %d with %s engine', k, n, engine)

    if engine == 'exhaustive':
        solutions = _exhaustive(matrix, k)
    elif engine == 'elimination':
        solutions = solve_modular([list(row) for row in matrix], [1] * n, k)
    elif engine == 'both':
        solutions = _exhaustive(matrix, k)
        eliminated = solve_modular([list(row) for row in matrix], [1] * n, k)
        if solutions != eliminated:
            raise InconsistentResult(f'solver engines disagree for k = {k}: {solutions} != {eliminated}')
    else:
        raise ValueError(f'unknown engine {engine!r}')

    for m in solutions:
        if not is_solution(matrix, k, m):
            raise InvalidSolution(k, m)

    return [RootAction(k=k, m=m) for m in solutions]


def rank_criterion(matrix, p: int) -> bool:
    """
    For a prime p: E m = 1 mod p is solvable iff rk E_p = rk (E_p | 1).

    :param matrix: Exponent matrix E or an invertible polynomial.
    :type matrix: InvertiblePolynomial | list[list[int]]
    :param p: A prime.
    :type p: int
    :return: Whether the system is solvable.
    :rtype: bool
    """
    if not isprime(p):
        raise ValueError(f'{p} is not prime')

    rows = [list(row) for row in _matrix(matrix)]

    return rank_mod_p(rows, p) == rank_mod_p([row + [1] for row in rows], p)


def solution_unique(matrix, p: int) -> bool:
    """
    For a prime p and a solvable system: the solution is unique iff rk E_p = n.
    """
    rows = [list(row) for row in _matrix(matrix)]

    return rank_mod_p(rows, p) == len(rows)


def chain_solution_closed_form(p, k: int, m: int) -> RootAction:
    """
    The solution of E m = 1 mod k for the chain with exponents p whose first
    entry is m: m_1 = m and, for j >= 2,
    m_j = (-1)^j <p2, ..., p(j-1)> + (-1)^(j-1) m p1...p(j-1).

    :param p: Chain exponents.
    :type p: Sequence[int]
    :param k: Root degree; the solutions cover the whole solution set when k divides c.
    :type k: int
    :param m: Free parameter, taken mod k.
    :type m: int
    :return: The root action.
    :rtype: RootAction
    :raises InvalidSolution: If the result does not solve the congruence.
    """
    p = tuple(p)
    n = len(p)
    residues = [m % k]

    for j in range(2, n + 1):
        value = (-1) ** j * bracket(p[1:j - 1]) + (-1) ** (j - 1) * m * prod(p[:j - 1])
        residues.append(value % k)

    matrix = assemble_chain(p)
    if not is_solution(matrix, k, residues):
        raise InvalidSolution(k, tuple(residues))

    return RootAction(k=k, m=tuple(residues))


def assemble_chain(p) -> list[list[int]]:
    chain = Chain(exponents=tuple(p), variables=tuple(range(len(p))))

    return assemble(AtomicDecomposition(atoms=(chain,)), len(p))


def root_map(f: InvertiblePolynomial, action: RootAction) -> RootMap:
    """
    Rotation numbers b_j = (w_j - m_j d) / (k d) mod 1 of Sigma^-1 o Gamma_(1/k).

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :param action: A solution of E m = 1 mod k.
    :type action: RootAction
    :return: The root map; k b_j = w_j / d mod 1 holds.
    :rtype: RootMap
    :raises InvalidSolution: If the action does not solve the congruence for f.
    """
    if not is_solution(f, action.k, action.m):
        raise InvalidSolution(action.k, action.m)

    weights = canonical_weights(f)
    d, k = weights.d, action.k
    b = RootMap(k=k, b=[Fraction(w - m * d, k * d) for w, m in zip(weights.w, action.m)])

    for b_j, w in zip(b.b, weights.w):
        if (k * b_j - Fraction(w, d)) % 1:
            raise InconsistentResult(f'{k} * {b_j} is not {w}/{d} mod 1')

    return b


def stratum_order(b: RootMap, variables) -> int:
    """
    Order of the root map at every point of the coordinate torus where exactly
    the given variables are nonzero: the lcm of the denominators of their b_j.

    :param b: The root map.
    :type b: RootMap
    :param variables: Nonempty set of 0-based variable indices.
    :type variables: Iterable[int]
    :return: The order.
    :rtype: int
    """
    variables = tuple(variables)
    if not variables:
        raise ValueError('a coordinate torus needs at least one variable')

    return lcm(*(b.b[j].denominator for j in variables))


def order_profile(f: InvertiblePolynomial, action: RootAction) -> dict[tuple[int, ...], int]:
    """
    Orders of the root map on every coordinate torus, keyed by 0-based variable tuples.
    """
    b = root_map(f, action)

    return {
        variables: stratum_order(b, variables)
        for size in range(1, f.n + 1)
        for variables in combinations(range(f.n), size)
    }


def _strata(f: InvertiblePolynomial) -> list[tuple[tuple[int, ...], int]]:
    # coordinate tori with nonzero Euler characteristic of the Milnor fibre slice
    decomposition = decompose(f)
    if len(decomposition.atoms) != 1:
        raise UnsupportedShape(decomposition.shape)

    atom = decomposition.atoms[0]
    n = len(atom.exponents)
    if atom.kind == 'loop':
        return [(atom.variables, (-1) ** (n - 1) * canonical_weights(f).d)]

    return [(atom.variables[j:], (-1) ** (n - 1 - j) * prod(atom.exponents[j:])) for j in range(n)]


def is_symmetry(f: InvertiblePolynomial, rotations) -> bool:
    """
    Whether x_j -> exp(2 pi i b_j) x_j leaves every monomial of f unchanged, i.e. E b = 0 mod 1.
    """
    return all(sum(e * Fraction(b) for e, b in zip(row, rotations)) % 1 == 0 for row in f.matrix)


def diagonal_zeta(f: InvertiblePolynomial, rotations) -> CyclotomicFunction:
    """
    Zeta function of a diagonal symmetry x_j -> exp(2 pi i b_j) x_j acting on
    the Milnor fibre of a single chain or loop.

    Points of one coordinate torus all have the same period o, the lcm of the
    denominators of their b_j, so the torus contributes (1 - t^o)^(chi / o).

    :param f: A chain or loop polynomial.
    :type f: InvertiblePolynomial
    :param rotations: Rotation numbers b_j, one per variable.
    :type rotations: Iterable[Fraction]
    :return: The unreduced zeta function of the map.
    :rtype: CyclotomicFunction
    :raises ValueError: If the map does not preserve f.
    :raises UnsupportedShape: If f is not a single chain or loop.
    """
    rotations = tuple(Fraction(b) % 1 for b in rotations)
    if len(rotations) != f.n or not is_symmetry(f, rotations):
        raise ValueError(f'rotations {[str(b) for b in rotations]} do not preserve f')

    pairs = []
    for variables, chi in _strata(f):
        order = lcm(*(rotations[j].denominator for j in variables))
        if chi % order:
            raise InconsistentResult(f'Euler characteristic {chi} is not divisible by the order {order}')
        pairs.append((order, chi // order))

    return CyclotomicFunction(pairs)


def root_action_zeta(f: InvertiblePolynomial, action: RootAction) -> CyclotomicFunction:
    """
    Zeta function of the geometric root defined by one action, for a single
    chain or loop.

    :param f: A chain or loop polynomial.
    :type f: InvertiblePolynomial
    :param action: A solution of E m = 1 mod k.
    :type action: RootAction
    :return: The unreduced zeta function of the root; its k-th power is zeta(f).
    :rtype: CyclotomicFunction
    :raises UnsupportedShape: If f is not a single chain or loop.
    """
    value = diagonal_zeta(f, root_map(f, action).b)

    if cyclo.power(value, action.k) != zeta(f):
        raise InconsistentResult(f'{value} to the power {action.k} is not the zeta function of f')

    return value


def geometric_root_zetas(f: InvertiblePolynomial, k: int | None = None) -> list[CyclotomicFunction]:
    """
    The distinct zeta functions of the geometric roots of degree k (default c)
    of a chain or loop, ordered by support. Different actions may give
    different values.
    """
    k = canonical_weights(f).c if k is None else k
    actions = solve_congruence(f, k)
    if not actions:
        raise NoGeometricRoot(k)

    values = {root_action_zeta(f, action) for action in actions}

    return sorted(values, key=lambda value: value.support)


def _closed_form(f: InvertiblePolynomial, d: int) -> CyclotomicFunction:
    decomposition = decompose(f)
    atoms = decomposition.atoms
    shape = decomposition.shape

    if shape == 'chain':
        p = atoms[0].exponents
        n = len(p)
        return CyclotomicFunction([(prod(p[j:]), (-1) ** (n - 1 - j)) for j in range(n)])
    if shape == 'loop':
        return cyclo.factor(d, (-1) ** (len(atoms[0].exponents) - 1))
    if shape == 'loop2+fermat':
        p1, p2 = next(atom for atom in atoms if atom.kind == 'loop').exponents
        p3 = next(atom for atom in atoms if atom.kind == 'chain').exponents[0]
        return CyclotomicFunction({p3: 1, d: 1, p1 * p2 - 1: -1})
    if shape == 'chain2+fermat':
        p1, p2 = next(atom for atom in atoms if len(atom.exponents) == 2).exponents
        p3 = next(atom for atom in atoms if len(atom.exponents) == 1).exponents[0]
        return CyclotomicFunction([(p2, 1), (p3, 1), (p1 * p2 * p3, 1), (p1 * p2, -1), (p2 * p3, -1)])

    raise UnsupportedShape(shape)


def geometric_root_zeta(f: InvertiblePolynomial, k: int | None = None) -> CyclotomicFunction:
    """
    Zeta function of a geometric root of degree k of the monodromy of f, from
    the closed forms for chains, loops, loop plus Fermat and chain plus Fermat
    in three variables. For k = 1 the root is the monodromy itself, which
    covers Brieskorn-Pham sums with pairwise coprime exponents.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :param k: Root degree; defaults to the weight gcd c, the only degree the closed forms cover.
    :type k: int | None
    :return: The unreduced zeta function of the root.
    :rtype: CyclotomicFunction
    :raises NoGeometricRoot: If E m = 1 mod k has no solution.
    :raises UnsupportedShape: If no closed form applies; order profiles remain available.
    """
    weights = canonical_weights(f)
    k = weights.c if k is None else k

    if not solve_congruence(f, k):
        raise NoGeometricRoot(k)

    if k == 1:
        value = zeta(f)
    elif k != weights.c:
        raise UnsupportedShape(f'{decompose(f).shape} with k = {k} != c = {weights.c}')
    else:
        value = _closed_form(f, weights.d)

    if cyclo.power(value, k) != zeta(f):
        raise InconsistentResult(f'{value} to the power {k} is not the zeta function of f')

    return value
