"""
Duality checks between an invertible polynomial and its Berglund-Hubsch
transpose: Poincare series, orbit function, the chain/loop duality, the three
statements for three variables, the two-variable identity, the reduced-weight
identity and the survey over enumerated families.
"""
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from math import gcd

from sympy import divisors

from src.conf.config import settings
from src.conf.log import get_logger
from src.repository.polynomials import enumerate_polynomials
from src.schemas.cyclotomic import CyclotomicFunction
from src.schemas.polynomials import InvertiblePolynomial, WeightSystem
from src.schemas.reports import (ALL_CHECKS, AnalysisResponse, DualityReport, DualResponse, OracleCheck,
                                 ReducedDualityWitness, RootResponse, TransposeResponse, ZetaResponse,
                                 Remark2Witness, ScanConfig, ScanResult, ScanSummary, Theorem1Witness,
                                 Theorem2Verdict)
from src.services import cyclo
from src.services.errors import (BHZetaError, InconsistentResult, NoGeometricRoot, NonIntegralMilnor,
                                 NonReducedWeights, PreconditionFailed, UnsupportedShape)
from src.services.geomroot import (chain_solution_closed_form, geometric_root_zeta, geometric_root_zetas, root_map,
                                   solve_congruence)
from src.services.invpoly import (canonical_weights, decompose, has_critical_point_at_origin, is_A_form,
                                  milnor_number, to_text, transpose)
from src.services.smith import solve_integer
from src.services.zeta import zeta, zeta_paths

logger = get_logger('duality')

PUBLISHED_DEGREE_FLAG = 'published-degree-16: the published example states d = 16, the canonical degree is 60'


def poincare_series(weights: WeightSystem) -> CyclotomicFunction:
    """
    P_w(t) = (1 - t^d) / prod (1 - t^w_j).

    :param weights: The weight system.
    :type weights: WeightSystem
    :return: The Poincare series of the graded quotient ring.
    :rtype: CyclotomicFunction
    """
    return CyclotomicFunction([(weights.d, 1)] + [(w, -1) for w in weights.w])


def reduced_zeta(f: InvertiblePolynomial) -> CyclotomicFunction:
    return cyclo.reduce(zeta(f))


def orbit_function(f: InvertiblePolynomial) -> CyclotomicFunction:
    """
    Or_w = (Saito dual of the reduced zeta function) / P_w, defined for reduced weights.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :return: The orbit function.
    :rtype: CyclotomicFunction
    :raises NonReducedWeights: If c > 1.
    """
    weights = canonical_weights(f)
    if not weights.reduced:
        raise NonReducedWeights(weights.c)

    dual = cyclo.saito_dual(reduced_zeta(f), weights.d)

    return cyclo.mul(dual, cyclo.inverse(poincare_series(weights)))


def _reduced_root(f: InvertiblePolynomial, k: int) -> CyclotomicFunction | None:
    try:
        return cyclo.reduce(geometric_root_zeta(f, k))
    except (NoGeometricRoot, UnsupportedShape):
        return None


def errata_flags(f: InvertiblePolynomial) -> list[str]:
    """
    Annotations for instances of the published chain example whose stated degree disagrees with the computed one.
    """
    try:
        atoms = decompose(f).atoms
    except BHZetaError:
        return []

    if len(atoms) == 1 and atoms[0].kind == 'chain' and atoms[0].exponents in ((3, 4, 5), (5, 4, 3)):
        logger.warning('chain %s: %s', atoms[0].exponents, PUBLISHED_DEGREE_FLAG)
        return [PUBLISHED_DEGREE_FLAG]

    return []


def verify_theorem1(f: InvertiblePolynomial) -> Theorem1Witness:
    """
    Chain/loop duality: the reduced geometric-root zeta function of f^T of
    degree c^T equals the Saito dual (w.r.t. d) of that of f of degree c,
    raised to (-1)^(n-1).

    Also records the number of root actions, whether the closed-form chain
    solutions are the whole solution set, whether the closed-form root zeta is
    realized by an action and whether all actions give the same zeta function.
    For c = 1 the reduced-weight identity is checked too.

    :param f: A single chain or loop.
    :type f: InvertiblePolynomial
    :return: The witness.
    :rtype: Theorem1Witness
    :raises PreconditionFailed: If f is not a single chain or loop.
    """
    decomposition = decompose(f)
    if decomposition.shape not in ('chain', 'loop'):
        raise PreconditionFailed(f'shape {decomposition.shape} is neither a chain nor a loop')

    f_T = transpose(f)
    weights, weights_T = canonical_weights(f), canonical_weights(f_T)
    n, d = f.n, weights.d
    if weights_T.d != d:
        raise InconsistentResult(f'canonical degrees differ: {d} != {weights_T.d}')
    sign = (-1) ** (n - 1)

    geometric_f = geometric_root_zeta(f, weights.c)
    geometric_fT = geometric_root_zeta(f_T, weights_T.c)
    root_f, root_fT = cyclo.reduce(geometric_f), cyclo.reduce(geometric_fT)
    dual_root_f = cyclo.signed(cyclo.saito_dual(root_f, d), sign)

    actions_f = solve_congruence(f, weights.c)
    actions_fT = solve_congruence(f_T, weights_T.c)

    closed_form_match = None
    if decomposition.shape == 'chain':
        atom = decomposition.atoms[0]
        closed = set()
        for m in range(weights.c):
            placed = [0] * n
            for variable, residue in zip(atom.variables, chain_solution_closed_form(atom.exponents, weights.c, m).m):
                placed[variable] = residue
            closed.add(tuple(placed))
        closed_form_match = closed == {action.m for action in actions_f}

    values_f = geometric_root_zetas(f, weights.c)
    values_fT = geometric_root_zetas(f_T, weights_T.c)
    realized = geometric_f in values_f and geometric_fT in values_fT

    reduced_identity = None
    if weights.reduced:
        dual = cyclo.signed(cyclo.saito_dual(reduced_zeta(f), d), sign)
        reduced_identity = cyclo.power(dual, weights_T.c) == reduced_zeta(f_T)

    witness = Theorem1Witness(
        shape=decomposition.shape, n=n, c=weights.c, c_T=weights_T.c, d=d,
        root_f=root_f, root_fT=root_fT, dual_root_f=dual_root_f,
        duality_holds=dual_root_f == root_fT,
        solution_count_f=len(actions_f), solution_count_fT=len(actions_fT),
        closed_form_solutions_match=closed_form_match,
        closed_form_realized=realized,
        root_zetas_agree=len(values_f) == 1 and len(values_fT) == 1,
        reduced_identity=reduced_identity,
    )
    if not witness.holds:
        logger.error('chain/loop duality fails for %s', to_text(f))

    return witness


def _root_system(target_f: CyclotomicFunction, c: int, target_fT: CyclotomicFunction, c_T: int, d: int):
    # unknowns: exponents r_m of psi on the divisors m of d
    periods = divisors(d)
    rows: dict[tuple[str, int], list[int]] = {}

    for index, m in enumerate(periods):
        g = gcd(m, c)
        rows.setdefault(('f', m // g), [0] * len(periods))[index] += g
        dual = d // m
        g_T = gcd(dual, c_T)
        rows.setdefault(('fT', dual // g_T), [0] * len(periods))[index] -= g_T

    targets = {('f', m): s for m, s in target_f.support}
    targets.update({('fT', m): s for m, s in target_fT.support})
    if any(key not in rows for key in targets):
        return periods, None, None

    keys = sorted(rows)
    return periods, [rows[key] for key in keys], [targets.get(key, 0) for key in keys]


def find_dual_root_pair(f: InvertiblePolynomial, f_T: InvertiblePolynomial):
    """
    Roots psi of degree c of the reduced zeta function of f and chi of degree
    c^T of that of f^T with chi = Saito dual of psi, when such a pair exists.

    The geometric-root zeta functions are tried first, then the canonical
    roots; otherwise the pair is decided exactly as an integer linear system in
    the exponents of psi over the divisors of d.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :param f_T: Its transpose.
    :type f_T: InvertiblePolynomial
    :return: ``(psi, chi, source, within_bound)`` or None.
    :rtype: tuple | None
    """
    weights, weights_T = canonical_weights(f), canonical_weights(f_T)
    c, c_T, d = weights.c, weights_T.c, weights.d
    target_f, target_fT = reduced_zeta(f), reduced_zeta(f_T)

    def is_pair(psi, chi) -> bool:
        try:
            return (psi is not None and chi is not None and cyclo.power(psi, c) == target_f
                    and cyclo.power(chi, c_T) == target_fT and cyclo.saito_dual(psi, d) == chi)
        except BHZetaError:
            return False

    def within_bound(psi, chi) -> bool:
        return (max((abs(s) for _, s in psi.support), default=0) <= cyclo.default_bound(target_f, c)
                and max((abs(s) for _, s in chi.support), default=0) <= cyclo.default_bound(target_fT, c_T))

    candidates = [
        ('geometric', _reduced_root(f, c), _reduced_root(f_T, c_T)),
        ('canonical', cyclo.canonical_root(target_f, c), cyclo.canonical_root(target_fT, c_T)),
    ]
    for source, psi, chi in candidates:
        if is_pair(psi, chi):
            return psi, chi, source, within_bound(psi, chi)

    periods, matrix, rhs = _root_system(target_f, c, target_fT, c_T, d)
    solution = solve_integer(matrix, rhs) if matrix is not None else None
    if solution is None:
        return None

    psi = CyclotomicFunction(list(zip(periods, solution)))
    chi = cyclo.saito_dual(psi, d)
    if not is_pair(psi, chi):
        raise InconsistentResult(f'integer solution {psi} does not give a dual root pair')
    logger.debug('dual root pair for %s found by integer elimination', to_text(f))

    return psi, chi, 'diophantine', within_bound(psi, chi)


def _theorem2_case(f: InvertiblePolynomial) -> str:
    return decompose(f).shape


def _b_exception(f: InvertiblePolynomial) -> bool:
    decomposition = decompose(f)
    if decomposition.shape != 'loop2+fermat':
        return False

    atoms = decomposition.atoms
    p1, p2 = next(atom for atom in atoms if atom.kind == 'loop').exponents
    p3 = next(atom for atom in atoms if atom.kind == 'chain').exponents[0]

    return p3 == p1 * p2 - 1 and gcd(p1 - 1, p2 - 1) == 1


def _chain_fermat(f: InvertiblePolynomial) -> tuple[int, int, int] | None:
    decomposition = decompose(f)
    if decomposition.shape != 'chain2+fermat':
        return None

    p1, p2 = next(atom for atom in decomposition.atoms if len(atom.exponents) == 2).exponents
    p3 = next(atom for atom in decomposition.atoms if len(atom.exponents) == 1).exponents[0]

    return p1, p2, p3


def _c_exception(f: InvertiblePolynomial) -> bool:
    exponents = _chain_fermat(f)

    return exponents is not None and exponents[0] == 2 and exponents[1] == exponents[2] and exponents[1] % 2 == 1


def classify_theorem2(f: InvertiblePolynomial) -> Theorem2Verdict:
    """
    Check the three statements for a polynomial in three variables.

    1) If both reduced zeta functions have roots of degrees c and c^T, some
       pair of roots is Saito dual. Decided exactly, see ``find_dual_root_pair``.
    2) In that situation, except for the loop-plus-Fermat family with
       p3 = p1 p2 - 1 and gcd(p1 - 1, p2 - 1) = 1, both monodromies have
       geometric roots whose zeta functions are Saito dual.
    3) A root for f without a root for f^T only happens for
       x1^2 x2 + x2^p + x3^p with p odd.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :return: The verdict; ``a-form-excluded`` for x1^2 + x2^2 + x3^p.
    :rtype: Theorem2Verdict
    :raises PreconditionFailed: If n != 3 or f or f^T has no critical point at the origin.
    """
    if f.n != 3:
        raise PreconditionFailed(f'three variables required, got {f.n}')

    f_T = transpose(f)
    if not has_critical_point_at_origin(f):
        raise PreconditionFailed('f has no critical point at the origin')
    if not has_critical_point_at_origin(f_T):
        raise PreconditionFailed('f^T has no critical point at the origin')

    weights, weights_T = canonical_weights(f), canonical_weights(f_T)
    c, c_T, d = weights.c, weights_T.c, weights.d

    if is_A_form(f):
        return Theorem2Verdict(case='a-form-excluded', c=c, c_T=c_T, d=d, exceptional_flags=('A-form',))

    root_f = cyclo.root_exists(reduced_zeta(f), c)
    root_fT = cyclo.root_exists(reduced_zeta(f_T), c_T)
    verdict = {
        'case': _theorem2_case(f), 'c': c, 'c_T': c_T, 'd': d,
        'root_exists_f': root_f, 'root_exists_fT': root_fT,
        'geometric_root_f': bool(solve_congruence(f, c)),
        'geometric_root_fT': bool(solve_congruence(f_T, c_T)),
    }

    flags = []
    if _b_exception(f):
        flags.append('b: p3 = p1p2-1, c1 = 1')
    if _c_exception(f):
        flags.append('c: p1 = 2, p2 = p3 odd')
        if _chain_fermat(f) == (2, 3, 3):
            flags.append('E6~')
    verdict['exceptional_flags'] = tuple(flags)

    if root_f and root_fT:
        pair = find_dual_root_pair(f, f_T)
        verdict['statement1'] = pair is not None
        verdict['duality_holds'] = pair is not None
        if pair is not None:
            verdict['root_f'], verdict['root_fT'], verdict['witness_source'], verdict['witness_within_bound'] = pair

        if not _b_exception(f):
            left, right = _reduced_root(f, c), _reduced_root(f_T, c_T)
            geometric_duality = left is not None and right is not None and cyclo.saito_dual(left, d) == right
            verdict['geometric_duality'] = geometric_duality
            verdict['statement2'] = (verdict['geometric_root_f'] and verdict['geometric_root_fT']
                                     and geometric_duality)

    if root_f:
        verdict['statement3'] = root_fT != _c_exception(f)

    result = Theorem2Verdict(**verdict)
    if not result.holds:
        logger.error('three-variable duality statements fail for %s: %s', to_text(f), result)

    return result


def verify_remark2(f: InvertiblePolynomial) -> Remark2Witness:
    """
    Two variables: a root of degree c of the reduced zeta function exists iff a
    geometric root does; then f^T has one as well and the reduced root zeta
    function of f^T is the inverse Saito dual of that of f.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :return: The witness.
    :rtype: Remark2Witness
    :raises PreconditionFailed: If n != 2.
    """
    if f.n != 2:
        raise PreconditionFailed(f'two variables required, got {f.n}')

    f_T = transpose(f)
    weights, weights_T = canonical_weights(f), canonical_weights(f_T)
    c, c_T, d = weights.c, weights_T.c, weights.d

    exists = cyclo.root_exists(reduced_zeta(f), c)
    geometric_f = bool(solve_congruence(f, c))
    geometric_fT = bool(solve_congruence(f_T, c_T))
    root_f, root_fT, duality = None, None, None

    if geometric_f:
        root_f, root_fT = _reduced_root(f, c), _reduced_root(f_T, c_T)
        duality = (geometric_fT and root_f is not None and root_fT is not None
                   and cyclo.inverse(cyclo.saito_dual(root_f, d)) == root_fT)

    return Remark2Witness(
        c=c, c_T=c_T, d=d, root_exists_f=exists, geometric_root_f=geometric_f, geometric_root_fT=geometric_fT,
        root_f=root_f, root_fT=root_fT, equivalence_holds=exists == geometric_f, duality_holds=duality,
    )


def verify_reduced_duality(f: InvertiblePolynomial) -> ReducedDualityWitness:
    """
    Three variables with reduced weights: the Saito dual of the reduced zeta
    function of f is a root of degree c^T of the reduced zeta function of f^T,
    and it equals the geometric-root zeta function of f^T when that is available.

    :raises PreconditionFailed: If n != 3 or c > 1.
    """
    if f.n != 3:
        raise PreconditionFailed(f'three variables required, got {f.n}')

    weights = canonical_weights(f)
    if not weights.reduced:
        raise PreconditionFailed(f'weights are not reduced (c = {weights.c})')

    f_T = transpose(f)
    c_T, d = canonical_weights(f_T).c, weights.d
    dual = cyclo.saito_dual(reduced_zeta(f), d)
    target = reduced_zeta(f_T)
    geometric = _reduced_root(f_T, c_T)

    return ReducedDualityWitness(
        c_T=c_T, d=d, dual_zeta_f=dual, zeta_fT=target,
        is_root=cyclo.power(dual, c_T) == target,
        geometric_match=None if geometric is None else geometric == dual,
    )


def check_oracle(f: InvertiblePolynomial) -> OracleCheck:
    """
    All zeta computations agree, and (-1)^(n-1) times the degree of the
    reduced zeta function is the Milnor number.
    """
    paths = zeta_paths(f)
    values = list(paths.values())
    degree = cyclo.char_degree(cyclo.reduce(values[0]))

    try:
        milnor = milnor_number(f)
    except NonIntegralMilnor:
        milnor = None

    return OracleCheck(
        paths=paths,
        agree=all(value == values[0] for value in values),
        char_degree=degree,
        milnor=milnor,
        milnor_consistent=None if milnor is None else (-1) ** (f.n - 1) * degree == milnor,
    )


CHECKS = {
    'theorem1': verify_theorem1,
    'theorem2': classify_theorem2,
    'remark2': verify_remark2,
    'reduced': verify_reduced_duality,
    'oracle': check_oracle,
}


def _applies(check: str, f: InvertiblePolynomial, shape: str) -> bool:
    if check == 'theorem1':
        return shape in ('chain', 'loop')
    if check == 'theorem2':
        return f.n == 3
    if check == 'remark2':
        return f.n == 2 and shape in ('chain', 'loop')
    if check == 'reduced':
        return f.n == 3 and canonical_weights(f).reduced

    return True


def evaluate_instance(f: InvertiblePolynomial, checks=ALL_CHECKS) -> DualityReport:
    """
    Run the applicable checks on one polynomial and collect the results.

    Checks whose precondition fails are reported as skipped messages; any other
    error marks the instance as ``error``. The status is ``failed`` when some
    check does not hold.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :param checks: Names of the checks to run.
    :type checks: Iterable[str]
    :return: The report.
    :rtype: DualityReport
    """
    report = {'polynomial': to_text(f), 'matrix': f.matrix, 'shape': 'unknown'}
    messages, flags = [], []

    try:
        shape = decompose(f).shape
        f_T = transpose(f)
        weights, weights_T = canonical_weights(f), canonical_weights(f_T)
        report.update(shape=shape, weights=weights, weights_T=weights_T,
                      zeta=reduced_zeta(f), zeta_T=reduced_zeta(f_T))
        report['root_f'] = cyclo.canonical_root(report['zeta'], weights.c)
        report['root_fT'] = cyclo.canonical_root(report['zeta_T'], weights_T.c)
        if report['root_f'] is not None and all(weights.d % m == 0 for m in report['root_f'].periods):
            report['dual_root_f'] = cyclo.saito_dual(report['root_f'], weights.d)
        flags.extend(errata_flags(f))

        ran = 0
        for check in checks:
            if not _applies(check, f, shape):
                continue
            try:
                report[check] = CHECKS[check](f)
                ran += 1
            except PreconditionFailed as error:
                messages.append(f'{check}: skipped, {error.reason}')

        results = [report[check] for check in checks if report.get(check) is not None]
        if 'theorem1' in report and not report['theorem1'].root_zetas_agree:
            flags.append('geometric-root-zetas-differ')
        if 'theorem1' in report and not report['theorem1'].closed_form_realized:
            flags.append('closed-form-not-realized')
        if 'theorem2' in report:
            flags.extend(report['theorem2'].exceptional_flags)

        if any(not result.holds for result in results):
            status = 'failed'
        elif ran == 0 and messages:
            status = 'skipped'
        else:
            status = 'ok'
    except InconsistentResult as error:
        logger.error('instance %s: %s', f.matrix, error)
        messages.append(str(error))
        status = 'error'
    except BHZetaError as error:
        logger.debug('instance %s skipped: %s', f.matrix, error)
        messages.append(str(error))
        status = 'skipped' if isinstance(error, PreconditionFailed) else 'error'

    return DualityReport(**report, flags=tuple(flags), messages=tuple(messages), status=status)


def scan(config: ScanConfig) -> Iterator[DualityReport]:
    """
    Evaluate every enumerated polynomial of the configured families, in
    enumeration order. Instances are evaluated on ``settings.threads`` threads.

    :param config: Ranges, shapes and checks.
    :type config: ScanConfig
    :return: The reports, lazily.
    :rtype: Iterator[DualityReport]
    """
    polynomials = enumerate_polynomials(config)
    logger.info('scanning %d polynomials on %d threads', len(polynomials), settings.threads)

    if settings.threads == 1:
        yield from (evaluate_instance(f, config.checks) for f in polynomials)
        return

    with ThreadPoolExecutor(max_workers=settings.threads) as executor:
        yield from executor.map(lambda f: evaluate_instance(f, config.checks), polynomials)


def summarize(reports: list[DualityReport]) -> ScanSummary:
    statuses = Counter(report.status for report in reports)

    return ScanSummary(
        total=len(reports),
        passed=statuses['ok'],
        failed=statuses['failed'],
        skipped=statuses['skipped'],
        errors=statuses['error'],
        by_shape=dict(sorted(Counter(report.shape for report in reports).items())),
        flags=dict(sorted(Counter(flag for report in reports for flag in report.flags).items())),
    )


def run_scan(config: ScanConfig) -> ScanResult:
    reports = list(scan(config))
    summary = summarize(reports)
    logger.info('scan finished: %d instances, %d failed, %d errors', summary.total, summary.failed, summary.errors)

    return ScanResult(config=config, summary=summary, reports=reports)


def analyze(f: InvertiblePolynomial) -> AnalysisResponse:
    """
    Everything known about one polynomial: weights, decomposition, transpose,
    Milnor number, zeta functions, Poincare series, orbit function (reduced
    weights only), canonical root and geometric roots of degree c.
    """
    f_T = transpose(f)
    weights, weights_T = canonical_weights(f), canonical_weights(f_T)
    value = zeta(f)

    try:
        milnor = milnor_number(f, weights)
    except NonIntegralMilnor:
        milnor = None

    actions = solve_congruence(f, weights.c)

    return AnalysisResponse(
        polynomial=to_text(f),
        names=f.names,
        matrix=f.matrix,
        weights=weights,
        decomposition=decompose(f),
        transpose=to_text(f_T),
        weights_T=weights_T,
        milnor=milnor,
        is_A_form=is_A_form(f),
        critical_at_origin=has_critical_point_at_origin(f),
        critical_at_origin_T=has_critical_point_at_origin(f_T),
        zeta=value,
        reduced_zeta=cyclo.reduce(value),
        reduced_zeta_T=reduced_zeta(f_T),
        poincare=poincare_series(weights),
        orbit=orbit_function(f) if weights.reduced else None,
        canonical_root=cyclo.canonical_root(cyclo.reduce(value), weights.c),
        root_actions=actions,
        root_maps=[root_map(f, action) for action in actions],
        geometric_root_zeta=_reduced_root(f, weights.c),
        flags=tuple(errata_flags(f)),
    )


def transpose_summary(f: InvertiblePolynomial) -> TransposeResponse:
    f_T = transpose(f)

    return TransposeResponse(polynomial=to_text(f), transpose=to_text(f_T), matrix=f_T.matrix,
                             weights=canonical_weights(f), weights_T=canonical_weights(f_T))


def zeta_summary(f: InvertiblePolynomial) -> ZetaResponse:
    value = zeta(f)

    return ZetaResponse(zeta=value, reduced_zeta=cyclo.reduce(value), paths=zeta_paths(f))


def root_summary(f: InvertiblePolynomial, k: int | None = None, bound: int | None = None) -> RootResponse:
    """
    Formal and geometric roots of degree k (default c) of the reduced zeta function.

    :param f: The polynomial.
    :type f: InvertiblePolynomial
    :param k: Root degree.
    :type k: int | None
    :param bound: Exponent bound of the enumeration; the largest target exponent when omitted, which
        already contains a root whenever one exists.
    :type bound: int | None
    :return: Existence, the canonical root, all roots within the bound and the root actions with their zeta functions.
    :rtype: RootResponse
    """
    k = canonical_weights(f).c if k is None else k
    target = reduced_zeta(f)
    bound = max((abs(s) for _, s in target.support), default=0) if bound is None else bound

    try:
        geometric = [cyclo.reduce(value) for value in geometric_root_zetas(f, k)]
    except (NoGeometricRoot, UnsupportedShape):
        geometric = []

    return RootResponse(
        k=k,
        reduced_zeta=target,
        root_exists=cyclo.root_exists(target, k),
        canonical_root=cyclo.canonical_root(target, k),
        roots=sorted(cyclo.enumerate_roots(target, k, bound), key=lambda value: value.support),
        root_actions=solve_congruence(f, k),
        geometric_root_zetas=geometric,
    )


def dual_summary(f: InvertiblePolynomial, degree: int | None = None) -> DualResponse:
    """
    Saito dual of the reduced zeta function with respect to ``degree``, the canonical degree d by default.

    :raises NonDivisorPeriod: If some period does not divide the degree.
    """
    degree = canonical_weights(f).d if degree is None else degree
    target = reduced_zeta(f)

    return DualResponse(degree=degree, reduced_zeta=target, dual=cyclo.saito_dual(target, degree))
