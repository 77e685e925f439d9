"""
Exact algebra of rational functions prod (1 - t^m)^s_m: products, Saito duality,
formal powers and roots, and a truncated series expansion used as an equality oracle.
"""
from collections.abc import Iterator
from itertools import product
from math import gcd

from sympy import divisors

from src.conf.config import settings
from src.conf.log import get_logger
from src.schemas.cyclotomic import CyclotomicFunction
from src.services.errors import InconsistentResult, NonDivisorPeriod

logger = get_logger('cyclo')

ONE = CyclotomicFunction()


def factor(period: int, exponent: int = 1) -> CyclotomicFunction:
    return CyclotomicFunction({period: exponent})


def mul(a: CyclotomicFunction, *others: CyclotomicFunction) -> CyclotomicFunction:
    """
    Multiply cyclotomic functions by adding their exponent maps.

    :param a: The first factor.
    :type a: CyclotomicFunction
    :param others: Further factors.
    :type others: CyclotomicFunction
    :return: The product; zero exponents are dropped by the constructor.
    :rtype: CyclotomicFunction
    """
    return CyclotomicFunction([pair for value in (a, *others) for pair in value.support])


def inverse(phi: CyclotomicFunction) -> CyclotomicFunction:
    return CyclotomicFunction([(m, -s) for m, s in phi.support])


def signed(phi: CyclotomicFunction, sign: int) -> CyclotomicFunction:
    """
    phi^sign for sign = +1 or -1, used for the (-1)^(n-1) exponents.
    """
    return phi if sign > 0 else inverse(phi)


def series_expand(phi: CyclotomicFunction, order: int) -> list[int]:
    """
    Taylor coefficients of phi at t = 0 through degree ``order``, computed exactly.

    :param phi: The function to expand.
    :type phi: CyclotomicFunction
    :param order: The highest degree kept.
    :type order: int
    :return: ``order + 1`` integer coefficients.
    :rtype: list[int]
    """
    coefficients = [1] + [0] * order

    for m, s in phi.support:
        for _ in range(abs(s)):
            if s > 0:
                for i in range(order, m - 1, -1):
                    coefficients[i] -= coefficients[i - m]
            else:
                for i in range(m, order + 1):
                    coefficients[i] += coefficients[i - m]

    return coefficients


def saito_dual(phi: CyclotomicFunction, d: int) -> CyclotomicFunction:
    """
    Saito dual with respect to d: (1 - t^m)^s becomes (1 - t^(d/m))^(-s).

    :param phi: The function to dualize; every period must divide d.
    :type phi: CyclotomicFunction
    :param d: The degree.
    :type d: int
    :return: The dual function.
    :rtype: CyclotomicFunction
    :raises NonDivisorPeriod: If a period of phi does not divide d.
    """
    for m, _ in phi.support:
        if d % m:
            raise NonDivisorPeriod(m, d)

    return CyclotomicFunction([(d // m, -s) for m, s in phi.support])


def power(phi: CyclotomicFunction, k: int) -> CyclotomicFunction:
    """
    The k-th power: (1 - t^m)^s becomes (1 - t^(m/g))^(g s) with g = gcd(m, k).
    If phi is the zeta function of a map h this is the zeta function of h^k.

    :param phi: The function.
    :type phi: CyclotomicFunction
    :param k: A positive integer.
    :type k: int
    :return: The k-th power.
    :rtype: CyclotomicFunction
    """
    return CyclotomicFunction([(m // gcd(m, k), gcd(m, k) * s) for m, s in phi.support])


def root_degrees(m: int, k: int) -> list[int]:
    """
    G(m, k): the g dividing k with gcd(m, k/g) = 1, ascending. A factor
    (1 - t^(m g))^r of a root contributes (1 - t^m)^(g r) to its k-th power.
    The set contains k, is closed under gcd, so its gcd is its least element.

    :param m: Target period.
    :type m: int
    :param k: Root degree.
    :type k: int
    :return: The admissible multipliers.
    :rtype: list[int]
    """
    return [g for g in divisors(k) if gcd(m, k // g) == 1]


def root_exists(phi: CyclotomicFunction, k: int) -> bool:
    """
    Whether phi has a formal root of degree k. Decided factor by factor:
    (1 - t^m)^s has one iff min G(m, k) divides s.

    :param phi: The function.
    :type phi: CyclotomicFunction
    :param k: Root degree.
    :type k: int
    :return: True if some psi satisfies power(psi, k) == phi.
    :rtype: bool
    """
    return all(s % root_degrees(m, k)[0] == 0 for m, s in phi.support)


def default_bound(phi: CyclotomicFunction, k: int) -> int:
    slack = k if settings.root_bound_slack is None else settings.root_bound_slack
    return max((abs(s) for _, s in phi.support), default=0) + slack


def _combinations(gs: tuple[int, ...], s: int, bound: int) -> Iterator[tuple[int, ...]]:
    # all r with |r_i| <= bound and sum g_i r_i = s, gs descending
    if not gs:
        if s == 0:
            yield ()
        return

    g, rest = gs[0], gs[1:]
    reach = bound * sum(rest)
    step = 0
    for other in rest:
        step = gcd(step, other)

    for r in range(-bound, bound + 1):
        residual = s - g * r
        if abs(residual) > reach or (step and residual % step):
            continue
        for tail in _combinations(rest, residual, bound):
            yield (r, *tail)


def _contribution(m: int, gs: tuple[int, ...], rs: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((m * g, r) for g, r in zip(gs, rs) if r))


def iter_roots(phi: CyclotomicFunction, k: int, bound: int) -> Iterator[CyclotomicFunction]:
    """
    Lazily yield the roots of degree k of phi whose exponents are bounded by ``bound``.
    Distinct target periods use disjoint root periods, so the roots are the
    products of independent per-factor solutions.
    """
    choices = []
    for m, s in phi.support:
        gs = tuple(sorted(root_degrees(m, k), reverse=True))
        choices.append([_contribution(m, gs, rs) for rs in _combinations(gs, s, bound)])

    for parts in product(*choices):
        yield CyclotomicFunction([pair for part in parts for pair in part])


def enumerate_roots(phi: CyclotomicFunction, k: int, bound: int) -> set[CyclotomicFunction]:
    """
    All roots psi of degree k of phi with every exponent of absolute value at most ``bound``.

    :param phi: The function.
    :type phi: CyclotomicFunction
    :param k: Root degree.
    :type k: int
    :param bound: Bound on the absolute values of the exponents of psi.
    :type bound: int
    :return: The set of roots; empty when none exists within the bound.
    :rtype: set[CyclotomicFunction]
    """
    roots = set()

    for psi in iter_roots(phi, k, bound):
        if power(psi, k) != phi:
            raise InconsistentResult(f'{psi} is not a root of degree {k} of {phi}')
        roots.add(psi)

    return roots


def _least_combination(m: int, gs: tuple[int, ...], s: int, bound: int) -> tuple[tuple[int, int], ...] | None:
    best: list = [None, None]

    def search(i: int, residual: int, chosen: tuple[int, ...], weight: int):
        if best[0] is not None and weight > best[0]:
            return
        if i == len(gs):
            if residual == 0:
                key = _contribution(m, gs, chosen)
                if best[0] is None or (weight, key) < (best[0], best[1]):
                    best[0], best[1] = weight, key
            return

        rest = gs[i + 1:]
        if best[0] is not None and weight + -(-abs(residual) // gs[i]) > best[0]:
            return

        step = 0
        for other in rest:
            step = gcd(step, other)
        reach = bound * sum(rest)

        for r in sorted(range(-bound, bound + 1), key=lambda x: (abs(x), x)):
            if best[0] is not None and weight + abs(r) > best[0]:
                break
            remainder = residual - gs[i] * r
            if abs(remainder) > reach or (step and remainder % step) or (not rest and remainder):
                continue
            search(i + 1, remainder, (*chosen, r), weight + abs(r))

    search(0, s, (), 0)

    return best[1]


def canonical_root(phi: CyclotomicFunction, k: int) -> CyclotomicFunction | None:
    """
    A deterministic root of degree k. For every target factor the contribution
    with the least total absolute exponent is taken, ties going to the
    lexicographically smallest sorted ``[m, s]`` list.

    :param phi: The function.
    :type phi: CyclotomicFunction
    :param k: Root degree.
    :type k: int
    :return: The chosen root, or None when no root of degree k exists.
    :rtype: CyclotomicFunction | None
    """
    if not root_exists(phi, k):
        return None

    bound = default_bound(phi, k)
    pairs = []
    for m, s in phi.support:
        gs = tuple(sorted(root_degrees(m, k), reverse=True))
        pairs.extend(_least_combination(m, gs, s, bound))

    root = CyclotomicFunction(pairs)
    if power(root, k) != phi:
        raise InconsistentResult(f'{root} is not a root of degree {k} of {phi}')

    return root


def reduce(phi: CyclotomicFunction) -> CyclotomicFunction:
    """
    Reduced zeta function phi / (1 - t).
    """
    return mul(phi, factor(1, -1))


def char_degree(phi: CyclotomicFunction) -> int:
    """
    Degree sum m s_m; for a reduced zeta function in n variables this is (-1)^(n-1) times the Milnor number.
    """
    return sum(m * s for m, s in phi.support)


def order_of_agreement(phi: CyclotomicFunction) -> int:
    """
    Series order sufficient to distinguish phi from any value with the same bound: sum |s_m| m.
    """
    return sum(abs(s) * m for m, s in phi.support)
