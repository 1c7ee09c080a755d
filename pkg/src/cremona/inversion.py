"""Birationality tests and Cremona inversion for monomial sets.

The inverse of a monomial Cremona set is computed from the signed adjugate
of the log-matrix: dividing by the degree gives the rational inverse, and
shifting every row so its minimum becomes zero is the unique nonnegative
correction compatible with the canonical restrictions.  The result is
checked against the full inversion identity before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg
from .errors import ConsistencyError, NotCremonaError
from .monomials import (
    ExponentVector,
    Matrix,
    MonomialSet,
    check_canonical,
    log_matrix,
    render_monomial,
)


@dataclass(frozen=True)
class BirationalityReport:
    """Outcome of the maximal-minor gcd test.

    ``is_birational_onto_image`` holds iff the minor gcd equals the column
    degree; ``is_cremona`` additionally requires a square log-matrix.
    """

    degree: int
    minor_gcd: int
    is_birational_onto_image: bool
    is_cremona: bool


@dataclass(frozen=True)
class InversionData:
    """Inverse log-matrix plus the inversion vector and inverse degree.

    ``inverse_matrix`` is stored as rows; its column j is the exponent
    vector of the j-th inverse monomial.  ``inversion_factor`` equals the
    inversion vector: the composite of the map with its inverse multiplies
    every coordinate by that monomial.
    """

    inverse_matrix: Matrix
    inversion_vector: ExponentVector
    inverse_degree: int

    @property
    def inversion_factor(self) -> ExponentVector:
        return self.inversion_vector

    def inverse_columns(self) -> tuple[ExponentVector, ...]:
        n = len(self.inverse_matrix)
        return tuple(
            tuple(self.inverse_matrix[i][j] for i in range(n)) for j in range(n)
        )


def minor_gcd(matrix, workers: int = 1) -> int:
    """gcd of the absolute values of all maximal column minors.

    Requires a stochastic log-matrix with at least as many columns as rows.
    Returns 0 when every maximal minor vanishes.
    """
    if matrix.degree is None:
        raise ValueError("matrix is not stochastic: column sums differ")
    if matrix.col_count < matrix.row_count:
        raise ValueError("need at least as many monomials as variables")
    return intlinalg.gcd_of_maximal_minors(matrix.entries, matrix.degree, workers)


def is_cremona(mset: MonomialSet, workers: int = 1) -> BirationalityReport:
    """Birationality report for a monomial set satisfying the canonical restrictions."""
    canonical = check_canonical(mset)
    if not canonical.ok:
        raise NotCremonaError(
            "canonical restrictions violated on rows "
            f"{list(canonical.offending_rows)}; reduce the set first"
        )
    matrix = log_matrix(mset)
    g = minor_gcd(matrix, workers)
    birational = g == matrix.degree
    cremona = birational and mset.q == mset.n
    return BirationalityReport(matrix.degree, g, birational, cremona)


def invert(mset: MonomialSet) -> InversionData:
    """Compute the unique Cremona inverse of a monomial Cremona set.

    Raises NotCremonaError when the input is not Cremona and
    ConsistencyError when the constructed inverse fails any of its own
    invariants (which would be a bug, not bad input).
    """
    report = is_cremona(mset)
    if not report.is_cremona:
        raise NotCremonaError(
            f"not a Cremona set: q={mset.q}, n={mset.n}, "
            f"minor gcd {report.minor_gcd} vs degree {report.degree}"
        )
    entries = log_matrix(mset).entries
    n = mset.n
    d = report.degree
    det = intlinalg.determinant(entries)
    adj = intlinalg.adjugate(entries)
    if det < 0:
        adj = [[-v for v in row] for row in adj]
    # adj now satisfies entries @ adj == d * I; the true inverse differs
    # from adj/d by a constant shift per row, pinned by the requirement
    # that every row of the inverse has minimum zero.
    inverse_rows = []
    for row in adj:
        low = min(row)
        shifted = [v - low for v in row]
        if any(v % d for v in shifted):
            raise ConsistencyError("adjugate rows are not congruent modulo the degree")
        inverse_rows.append(tuple(v // d for v in shifted))
    inverse = tuple(inverse_rows)

    gamma = tuple(
        sum(entries[i][k] * inverse[k][0] for k in range(n)) - (1 if i == 0 else 0)
        for i in range(n)
    )
    column_sums = {sum(inverse[i][j] for i in range(n)) for j in range(n)}
    if len(column_sums) != 1:
        raise ConsistencyError("inverse matrix is not stochastic")
    delta = column_sums.pop()
    data = InversionData(inverse, gamma, delta)
    _validate_inversion(entries, d, data)
    return data


def _validate_inversion(entries: Matrix, d: int, data: InversionData) -> None:
    n = len(entries)
    w = data.inverse_matrix
    gamma = data.inversion_vector
    delta = data.inverse_degree
    if any(v < 0 for v in gamma):
        raise ConsistencyError("inversion vector has a negative entry")
    for i in range(n):
        for j in range(n):
            lhs = sum(entries[i][k] * w[k][j] for k in range(n))
            rhs = gamma[i] + (1 if i == j else 0)
            if lhs != rhs:
                raise ConsistencyError("inversion identity fails")
    if delta * d != sum(gamma) + 1:
        raise ConsistencyError("degree relation fails")
    if abs(intlinalg.determinant(w)) != delta:
        raise ConsistencyError("inverse determinant does not match its degree")
    for row in w:
        if min(row) != 0:
            raise ConsistencyError("inverse violates the common-factor restriction")
        if max(row) == 0:
            raise ConsistencyError("inverse drops a variable")


def inverse_set(mset: MonomialSet, data: InversionData | None = None) -> MonomialSet:
    """The inverse as a MonomialSet over the same variable names."""
    if data is None:
        data = invert(mset)
    return MonomialSet(mset.variables, data.inverse_columns())


def verify_inversion(mset: MonomialSet, data: InversionData) -> bool:
    """Check that composing the set with the candidate inverse is the identity
    times the inversion factor.

    Two routes are computed: the matrix identity on the log-matrices, and a
    direct substitution of the monomials into the candidate inverse
    monomials.  They must agree (ConsistencyError otherwise); the common
    verdict is returned.
    """
    n = mset.n
    w = data.inverse_matrix
    if len(w) != n or any(len(row) != n for row in w):
        raise ValueError("inverse matrix dimensions do not match the set")
    entries = log_matrix(mset).entries
    gamma = data.inversion_vector

    matrix_ok = True
    for i in range(n):
        for j in range(n):
            lhs = sum(entries[i][k] * w[k][j] for k in range(n))
            if lhs != gamma[i] + (1 if i == j else 0):
                matrix_ok = False
                break
        if not matrix_ok:
            break

    # independent route: substitute the monomials into each inverse monomial
    substitution_ok = True
    for j in range(n):
        composite: dict[str, int] = {}
        for k in range(n):
            power = w[k][j]
            if power:
                for name, exp in zip(mset.variables, mset.vectors[k]):
                    if exp:
                        composite[name] = composite.get(name, 0) + exp * power
        expected: dict[str, int] = {}
        for i, name in enumerate(mset.variables):
            e = gamma[i] + (1 if i == j else 0)
            if e:
                expected[name] = e
        if composite != expected:
            substitution_ok = False
            break

    if matrix_ok != substitution_ok:
        raise ConsistencyError(
            "matrix identity and symbolic substitution disagree"
        )
    return matrix_ok


def inversion_factor(data: InversionData, variables) -> str:
    """Render the inversion factor monomial as text."""
    return render_monomial(data.inversion_vector, tuple(variables))
