"""Exponent vectors, monomial sets and their log-matrices.

A monomial set is an ordered list of pairwise-distinct exponent vectors over
a fixed tuple of variable names.  Its log-matrix has one column per monomial:
row i holds the exponents of variable i across the set.  Variable order and
monomial order are significant everywhere; comparisons that should ignore
them go through :func:`equal_up_to_permutation`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import ParseError

ExponentVector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?\Z")
_HEADER_RE = re.compile(r"variables?\s*:?\s+(.*)\Z", re.IGNORECASE)


@dataclass(frozen=True)
class MonomialSet:
    """Ordered set of monomials given by exponent vectors over named variables."""

    variables: tuple[str, ...]
    vectors: tuple[ExponentVector, ...]

    def __post_init__(self):
        n = len(self.variables)
        if n < 2:
            raise ValueError("need at least two variables")
        if len(set(self.variables)) != n:
            raise ValueError("variable names must be distinct")
        for name in self.variables:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if not self.vectors:
            raise ValueError("need at least one monomial")
        for vec in self.vectors:
            if len(vec) != n:
                raise ValueError("exponent vector length does not match variable count")
            if any(e < 0 for e in vec):
                raise ValueError("negative exponent")
        if len(set(self.vectors)) != len(self.vectors):
            raise ValueError("duplicate monomial")

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def q(self) -> int:
        return len(self.vectors)

    def monomial_text(self, j: int) -> str:
        return render_monomial(self.vectors[j], self.variables)

    def texts(self) -> tuple[str, ...]:
        return tuple(self.monomial_text(j) for j in range(self.q))


@dataclass(frozen=True)
class LogMatrix:
    """Integer matrix whose j-th column is the j-th exponent vector.

    ``degree`` is the common column sum when all columns agree (and is at
    least 1), otherwise None.
    """

    entries: Matrix
    row_count: int
    col_count: int
    degree: int | None

    def column(self, j: int) -> ExponentVector:
        return tuple(self.entries[i][j] for i in range(self.row_count))

    def columns(self) -> tuple[ExponentVector, ...]:
        return tuple(self.column(j) for j in range(self.col_count))


@dataclass(frozen=True)
class CanonicalReport:
    """Result of checking the two canonical restrictions.

    ``no_common_factor`` holds iff every row of the log-matrix has a zero
    entry; ``every_variable_appears`` holds iff no row is identically zero.
    ``offending_rows`` lists the rows violating either restriction.
    """

    no_common_factor: bool
    every_variable_appears: bool
    offending_rows: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.no_common_factor and self.every_variable_appears


def render_monomial(vector: ExponentVector, variables: tuple[str, ...]) -> str:
    """Render an exponent vector as monomial text, e.g. ``x1^2*x2``; ``1`` if zero."""
    parts = []
    for name, exp in zip(variables, vector):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts) if parts else "1"


def _parse_monomial(token: str, order: list[str], seen: dict[str, int],
                    frozen_vars: bool) -> dict[str, int]:
    exps: dict[str, int] = {}
    for factor in token.split("*"):
        factor = factor.strip()
        if factor == "1" and not exps and token.strip() == "1":
            return {}
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ParseError(f"malformed token {factor!r}")
        name, exp_text = m.group(1), m.group(2)
        exp = 1 if exp_text is None else int(exp_text)
        if exp < 0:
            raise ParseError(f"negative exponent in {factor!r}")
        if name not in seen:
            if frozen_vars:
                raise ParseError(f"undeclared variable {name!r}")
            seen[name] = len(order)
            order.append(name)
        exps[name] = exps.get(name, 0) + exp
    return exps


def parse_monomials(text: str, variables: list[str] | tuple[str, ...] | None = None) -> MonomialSet:
    """Parse monomial text into a MonomialSet.

    Monomials are separated by newlines, ``/`` or ``;``.  Each monomial is a
    ``*``-separated product of ``var`` or ``var^exp`` factors.  An optional
    first line ``variables: x y z`` (or the ``variables`` argument) declares
    the variable order; otherwise variables are taken in first-appearance
    order.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty input")

    order: list[str] = []
    frozen_vars = False
    if variables is not None:
        order = [str(v) for v in variables]
        frozen_vars = True
    else:
        header = _HEADER_RE.match(lines[0])
        if header:
            names = [t for t in re.split(r"[\s,]+", header.group(1)) if t]
            if not names:
                raise ParseError("empty variable declaration")
            order = names
            frozen_vars = True
            lines = lines[1:]
            if not lines:
                raise ParseError("no monomials after variable declaration")
    for name in order:
        if not _NAME_RE.match(name):
            raise ParseError(f"invalid variable name {name!r}")
    seen = {name: k for k, name in enumerate(order)}
    if len(seen) != len(order):
        raise ParseError("duplicate variable name in declaration")

    tokens: list[str] = []
    for ln in lines:
        for tok in re.split(r"[/;]", ln):
            tok = tok.strip()
            if tok:
                tokens.append(tok)
    if not tokens:
        raise ParseError("no monomials found")

    raw = [_parse_monomial(tok, order, seen, frozen_vars) for tok in tokens]
    vectors = tuple(tuple(exps.get(name, 0) for name in order) for exps in raw)
    try:
        return MonomialSet(tuple(order), vectors)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def monomial_set_from_json(obj) -> MonomialSet:
    """Build a MonomialSet from ``{"variables": [...], "monomials": [[...], ...]}``."""
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    try:
        variables = tuple(str(v) for v in obj["variables"])
        rows = obj["monomials"]
    except (KeyError, TypeError) as exc:
        raise ParseError("expected keys 'variables' and 'monomials'") from exc
    if not isinstance(rows, list):
        raise ParseError("'monomials' must be a list of exponent vectors")
    vectors = []
    for row in rows:
        if not isinstance(row, list) or not all(isinstance(e, int) for e in row):
            raise ParseError("each monomial must be a list of integers")
        vectors.append(tuple(row))
    try:
        return MonomialSet(variables, tuple(vectors))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def monomial_set_to_json(mset: MonomialSet) -> dict:
    return {"variables": list(mset.variables), "monomials": [list(v) for v in mset.vectors]}


def log_matrix(mset: MonomialSet) -> LogMatrix:
    """Log-matrix of the set: column j is the j-th exponent vector."""
    entries = tuple(tuple(vec[i] for vec in mset.vectors) for i in range(mset.n))
    sums = {sum(vec) for vec in mset.vectors}
    degree = sums.pop() if len(sums) == 1 else None
    if degree is not None and degree < 1:
        degree = None
    return LogMatrix(entries, mset.n, mset.q, degree)


def check_canonical(mset: MonomialSet) -> CanonicalReport:
    """Check the canonical restrictions row by row."""
    entries = log_matrix(mset).entries
    offending = []
    no_common = True
    all_appear = True
    for i, row in enumerate(entries):
        if all(e > 0 for e in row):
            no_common = False
            offending.append(i)
        elif all(e == 0 for e in row):
            all_appear = False
            offending.append(i)
    return CanonicalReport(no_common, all_appear, tuple(offending))


def common_factor_vector(mset: MonomialSet) -> ExponentVector:
    """Componentwise minimum over the set: exponents of the monomial gcd."""
    return tuple(min(vec[i] for vec in mset.vectors) for i in range(mset.n))


def is_cohesive(mset: MonomialSet) -> bool:
    """True iff the row/column incidence structure is connected.

    Rows that are identically zero are discarded first.  Equivalent to: no
    simultaneous row and column permutation makes the log-matrix
    block-diagonal.  Computed by union-find over nonzero entries.
    """
    entries = log_matrix(mset).entries
    n, q = mset.n, mset.q
    live_rows = [i for i in range(n) if any(entries[i])]
    # nodes: live rows (0..), then columns (offset)
    index = {("r", i): k for k, i in enumerate(live_rows)}
    for j in range(q):
        index[("c", j)] = len(index)
    parent = list(range(len(index)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i in live_rows:
        for j in range(q):
            if entries[i][j]:
                union(index[("r", i)], index[("c", j)])
    roots = {find(k) for k in range(len(index))}
    return len(roots) <= 1


def _sorted_rows_key(entries: Matrix) -> list[int]:
    keys = [(tuple(sorted(row)), row) for row in entries]
    return sorted(range(len(entries)), key=lambda i: keys[i])


def canonical_permutation_form(entries: Matrix) -> Matrix:
    """Deterministic representative of a matrix under row/column permutations.

    Rows are sorted by a signature (their sorted entry multiset), then the
    columns lexicographically; two more refinement passes break most row
    ties.  The result is always a permuted copy of the input, so equal forms
    imply genuine equivalence; ties can leave equivalent matrices with
    different forms, which is why :func:`equal_up_to_permutation` falls back
    to an explicit search.
    """
    m = [tuple(row) for row in entries]
    for _ in range(2):
        m = [m[i] for i in _sorted_rows_key(m)]
        cols = sorted(zip(*m))
        m = [tuple(row) for row in zip(*cols)]
    return tuple(m)


def _as_matrix(obj) -> Matrix:
    if isinstance(obj, MonomialSet):
        return log_matrix(obj).entries
    if isinstance(obj, LogMatrix):
        return obj.entries
    return tuple(tuple(row) for row in obj)


def find_permutation_match(a, b) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Search for permutations with ``b[i][j] == a[sigma[i]][tau[j]]``.

    Returns ``(sigma, tau)`` mapping positions of ``b`` to rows/columns of
    ``a``, or None.  Backtracking over row assignments with signature
    pruning; column matching is a multiset comparison once rows are fixed.
    """
    ma, mb = _as_matrix(a), _as_matrix(b)
    if len(ma) != len(mb):
        return None
    if not ma:
        return ((), ())
    if len(ma[0]) != len(mb[0]):
        return None
    n = len(ma)
    sig_a = [tuple(sorted(row)) for row in ma]
    sig_b = [tuple(sorted(row)) for row in mb]
    if sorted(sig_a) != sorted(sig_b):
        return None

    candidates = [[i for i in range(n) if sig_a[i] == sig_b[k]] for k in range(n)]
    order = sorted(range(n), key=lambda k: len(candidates[k]))
    assigned: list[int | None] = [None] * n
    used = [False] * n

    def columns_of(m, rows):
        return sorted(tuple(m[i][j] for i in rows) for j in range(len(m[0])))

    def extend(pos: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        if pos == n:
            sigma = tuple(assigned)  # type: ignore[arg-type]
            perm_a = [ma[i] for i in sigma]
            cols_a = sorted((tuple(col), j) for j, col in enumerate(zip(*perm_a)))
            cols_b = sorted((tuple(col), j) for j, col in enumerate(zip(*mb)))
            if [c for c, _ in cols_a] != [c for c, _ in cols_b]:
                return None
            tau = [0] * len(cols_a)
            for (_, ja), (_, jb) in zip(cols_a, cols_b):
                tau[jb] = ja
            return sigma, tuple(tau)
        k = order[pos]
        done = [order[t] for t in range(pos + 1)]
        for i in candidates[k]:
            if used[i]:
                continue
            assigned[k] = i
            used[i] = True
            rows_a = [assigned[t] for t in done]
            rows_b = done
            if columns_of(ma, rows_a) == columns_of(mb, rows_b):
                result = extend(pos + 1)
                if result is not None:
                    return result
            used[i] = False
            assigned[k] = None
        return None

    return extend(0)


def equal_up_to_permutation(a, b) -> bool:
    """True iff the log-matrices agree up to row and column permutations."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if len(ma) != len(mb):
        return False
    if ma and len(ma[0]) != len(mb[0]):
        return False
    if canonical_permutation_form(ma) == canonical_permutation_form(mb):
        return True
    return find_permutation_match(ma, mb) is not None


def all_degree_monomials(variables: tuple[str, ...], degree: int) -> MonomialSet:
    """All monomials of the given degree, squarefree ones first.

    Within each block the order is lexicographic on the variable indices of
    the chosen multiset, so the listing is deterministic.
    """
    n = len(variables)
    seen = []
    for combo in itertools.combinations(range(n), degree):
        vec = [0] * n
        for i in combo:
            vec[i] += 1
        seen.append(tuple(vec))
    for combo in itertools.combinations_with_replacement(range(n), degree):
        vec = [0] * n
        for i in combo:
            vec[i] += 1
        if tuple(vec) not in seen:
            seen.append(tuple(vec))
    return MonomialSet(tuple(variables), tuple(seen))
