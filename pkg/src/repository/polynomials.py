from itertools import product

from src.conf.log import get_logger
from src.schemas.polynomials import AtomicDecomposition, Chain, InvertiblePolynomial, Loop
from src.schemas.reports import ScanConfig
from src.services.errors import BHZetaError
from src.services.invpoly import assemble, canonical_weights, from_matrix

logger = get_logger('repository')


def _rotation_minimal(exponents: tuple[int, ...]) -> bool:
    return all(exponents <= exponents[i:] + exponents[:i] for i in range(1, len(exponents)))


def atom_candidates(size: int, min_exp: int, max_exp: int) -> list[tuple[str, tuple[int, ...]]]:
    """
    All chain and loop atoms with ``size`` variables and exponents in [min_exp, max_exp].
    Loops are listed once per rotation class.

    :param size: Number of variables of the atom.
    :type size: int
    :param min_exp: Smallest exponent.
    :type min_exp: int
    :param max_exp: Largest exponent.
    :type max_exp: int
    :return: ``(kind, exponents)`` pairs in a fixed order.
    :rtype: list[tuple[str, tuple[int, ...]]]
    """
    exponents = list(product(range(min_exp, max_exp + 1), repeat=size))
    atoms = [('chain', p) for p in exponents]
    if size >= 2:
        atoms.extend(('loop', p) for p in exponents if _rotation_minimal(p))

    return atoms


def atom_multisets(n: int, min_exp: int, max_exp: int) -> list[tuple[tuple[str, tuple[int, ...]], ...]]:
    """
    Every multiset of atoms whose sizes add up to n, each multiset once, as a
    non-decreasing tuple in the fixed candidate order.
    """
    candidates = [atom for size in range(1, n + 1) for atom in atom_candidates(size, min_exp, max_exp)]
    result = []

    def extend(start: int, remaining: int, chosen: list):
        if remaining == 0:
            result.append(tuple(chosen))
            return
        for index in range(start, len(candidates)):
            kind, exponents = candidates[index]
            if len(exponents) <= remaining:
                chosen.append(candidates[index])
                extend(index, remaining - len(exponents), chosen)
                chosen.pop()

    extend(0, n, [])

    return result


def build(atoms: tuple[tuple[str, tuple[int, ...]], ...]) -> InvertiblePolynomial:
    """
    The invertible polynomial that is the sum of the given atoms on consecutive variables.
    """
    models, offset = [], 0
    for kind, exponents in atoms:
        variables = tuple(range(offset, offset + len(exponents)))
        model = Chain if kind == 'chain' else Loop
        models.append(model(exponents=exponents, variables=variables))
        offset += len(exponents)

    return from_matrix(assemble(AtomicDecomposition(atoms=tuple(models)), offset))


def enumerate_polynomials(config: ScanConfig) -> list[InvertiblePolynomial]:
    """
    Kreuzer-Skarke polynomials of the configured sizes, exponent range and
    shapes, each once up to permutation of the variables, in a deterministic order.

    Singular matrices and weight systems with a non-positive weight are left out.

    :param config: The scan configuration.
    :type config: ScanConfig
    :return: The polynomials.
    :rtype: list[InvertiblePolynomial]
    """
    polynomials = []

    for n in config.n:
        for atoms in atom_multisets(n, config.min_exp, config.max_exp):
            shape = AtomicDecomposition(atoms=tuple(
                (Chain if kind == 'chain' else Loop)(exponents=p, variables=()) for kind, p in atoms
            )).shape
            if config.shapes and shape not in config.shapes:
                continue
            try:
                f = build(atoms)
                canonical_weights(f)
            except BHZetaError as error:
                logger.debug('skipping %s: %s', atoms, error)
                continue
            polynomials.append(f)

    return polynomials
