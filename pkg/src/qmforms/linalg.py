"""Dense exact linear algebra over the rationals (small systems only)."""

from fractions import Fraction


class UnderdeterminedSystem(ValueError):
    """The coefficient matrix does not have full column rank."""


class InconsistentSystem(ValueError):
    """The right-hand side is not in the column span."""


def rank(rows):
    """Rank of a matrix given as a list of rows of Fractions."""
    work = [list(map(Fraction, row)) for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def solve_unique(rows, rhs):
    """Solve M x = rhs for the unique x, exactly.

    ``rows`` is the matrix M as a list of rows.  Raises
    ``UnderdeterminedSystem`` if M lacks full column rank and
    ``InconsistentSystem`` if no solution exists.
    """
    nrows = len(rows)
    if nrows != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")
    if nrows == 0:
        raise UnderdeterminedSystem("empty system")
    ncols = len(rows[0])
    work = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][col]:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    if len(pivots) < ncols:
        raise UnderdeterminedSystem(
            f"rank {len(pivots)} < {ncols} unknowns at this precision"
        )
    for i in range(r, nrows):
        if work[i][ncols]:
            raise InconsistentSystem("no exact solution")
    solution = [Fraction(0)] * ncols
    for row_index, col in enumerate(pivots):
        solution[col] = work[row_index][ncols]
    return solution
