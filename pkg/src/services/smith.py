"""
Integer linear algebra shared by the congruence solver and the duality checker:
Smith normal form with unimodular transforms, rank over GF(p), and solution of
A x = b over the integers and modulo k.
"""
from itertools import product
from math import gcd

from sympy import GF
from sympy.polys.matrices import DomainMatrix

Matrix = list[list[int]]


def identity(size: int) -> Matrix:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def _swap_rows(a: Matrix, i: int, j: int):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a: Matrix, i: int, j: int):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_row(a: Matrix, target: int, source: int, factor: int):
    a[target] = [x + factor * y for x, y in zip(a[target], a[source])]


def _add_col(a: Matrix, target: int, source: int, factor: int):
    for row in a:
        row[target] += factor * row[source]


def smith_normal_form(matrix: list[list[int]] | tuple) -> tuple[Matrix, Matrix, Matrix]:
    """
    Compute D = L A R with L, R unimodular and D diagonal, each diagonal entry
    dividing the next one.

    :param matrix: Integer matrix A (rows x cols).
    :type matrix: list[list[int]]
    :return: The triple (D, L, R).
    :rtype: tuple[Matrix, Matrix, Matrix]
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    left, right = identity(rows), identity(cols)

    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not entries:
                return a, left, right

            _, i, j = min(entries)
            _swap_rows(a, t, i)
            _swap_rows(left, t, i)
            _swap_cols(a, t, j)
            _swap_cols(right, t, j)

            pivot = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = a[i][t] // pivot
                if q:
                    _add_row(a, i, t, -q)
                    _add_row(left, i, t, -q)
                clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                q = a[t][j] // pivot
                if q:
                    _add_col(a, j, t, -q)
                    _add_col(right, j, t, -q)
                clean = clean and a[t][j] == 0
            if not clean:
                continue

            stray = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % pivot), None)
            if stray is None:
                break
            _add_row(a, t, stray, 1)
            _add_row(left, t, stray, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]

    return a, left, right


def _apply(matrix: Matrix, vector: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, vector)) for row in matrix]


def solve_integer(matrix: list[list[int]], rhs: list[int]) -> list[int] | None:
    """
    One integer solution of A x = b, or None if there is none.

    :param matrix: Integer matrix A.
    :type matrix: list[list[int]]
    :param rhs: Right-hand side b.
    :type rhs: list[int]
    :return: A solution with free coordinates set to zero, or None.
    :rtype: list[int] | None
    """
    diagonal, left, right = smith_normal_form(matrix)
    rows, cols = len(diagonal), len(right)
    target = _apply(left, rhs)
    y = [0] * cols

    for i in range(rows):
        entry = diagonal[i][i] if i < cols else 0
        if entry == 0:
            if target[i] != 0:
                return None
        elif target[i] % entry:
            return None
        else:
            y[i] = target[i] // entry

    return _apply(right, y)


def solve_modular(matrix: list[list[int]], rhs: list[int], k: int) -> list[tuple[int, ...]]:
    """
    Every solution of A x = b modulo k, as residue tuples in [0, k), sorted.

    Reduces to D y = L b (mod k) with x = R y; each diagonal congruence
    e y = t has gcd(e, k) solutions when gcd(e, k) divides t.

    :param matrix: Integer matrix A.
    :type matrix: list[list[int]]
    :param rhs: Right-hand side b.
    :type rhs: list[int]
    :param k: The modulus.
    :type k: int
    :return: Sorted list of solutions.
    :rtype: list[tuple[int, ...]]
    """
    diagonal, left, right = smith_normal_form(matrix)
    rows, cols = len(diagonal), len(right)
    target = _apply(left, rhs)
    choices = []

    for i in range(max(rows, cols)):
        entry = diagonal[i][i] if i < rows and i < cols else 0
        value = target[i] if i < rows else 0
        g = gcd(entry, k)
        if value % g:
            return []
        if i >= cols:
            continue

        step = k // g
        base = 0 if step == 1 else (value // g) * pow(entry // g, -1, step) % step
        choices.append([base + t * step for t in range(g)])

    solutions = {tuple(x % k for x in _apply(right, list(y))) for y in product(*choices)}

    return sorted(solutions)


def rank_mod_p(matrix: list[list[int]], p: int) -> int:
    """
    Rank of the reduction of an integer matrix modulo a prime p.
    """
    field = GF(p)
    rows = [[field(x) for x in row] for row in matrix]

    return DomainMatrix(rows, (len(rows), len(rows[0]) if rows else 0), field).rank()
