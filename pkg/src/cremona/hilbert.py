"""Bounded Hilbert-base verification, normality checks and Cremona extraction.

Lifting a set of equal-degree exponent vectors by a trailing 1 gives
generators of a pointed cone.  Whether they form a Hilbert base (every
lattice point of the cone is a nonnegative integer combination) is verified
here only up to a level bound: all lattice points whose last coordinate is
at most the bound are enumerated inside a finite box, so a "holds" verdict
is always bound-limited while a "fails" verdict ships a definite
counterexample.  The same bounded scan over the generators extended by the
unit vectors decides normality of the monomial ideal, and determinant-d
column subsets of a normal set recover Cremona subsets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import intlinalg, inversion
from .errors import NotCremonaError
from .monomials import (
    ExponentVector,
    MonomialSet,
    check_canonical,
    equal_up_to_permutation,
    log_matrix,
)


@dataclass(frozen=True)
class LiftedCone:
    """Generators (v, 1) of the lifted cone; ``degree`` is the common |v|."""

    generators: tuple[tuple[int, ...], ...]
    dimension: int
    degree: int | None

    def first_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g[:-1] for g in self.generators)


@dataclass(frozen=True)
class HilbertReport:
    """Verdict of the bounded Hilbert-base scan.

    ``holds`` means no counterexample with last coordinate <= bound exists;
    the check is complete only up to that bound.  ``fails`` carries the
    first counterexample in enumeration order (by level, then
    lexicographically), a lattice point of the cone that is not a
    nonnegative integer combination of the generators.
    """

    verdict: str  # "holds" | "fails" | "inconclusive"
    bound: int
    counterexample: tuple[int, ...] | None


@dataclass(frozen=True)
class NormalityReport:
    """Same semantics as HilbertReport, over the unit-extended generators."""

    verdict: str
    bound: int
    counterexample: tuple[int, ...] | None


def lift(mset: MonomialSet) -> LiftedCone:
    """Append a coordinate 1 to every exponent vector of a stochastic set."""
    matrix = log_matrix(mset)
    if matrix.degree is None:
        raise ValueError("lift needs monomials of one common degree")
    generators = tuple(vec + (1,) for vec in mset.vectors)
    return LiftedCone(generators, mset.n + 1, matrix.degree)


def is_pointed(generators) -> bool:
    """General strong-convexity diagnostic: no nonzero nonnegative
    combination of the generators vanishes."""
    if not generators:
        return True
    m = len(generators[0])
    columns = [tuple(g) + (1,) for g in generators]
    target = (0,) * m + (1,)
    return intlinalg.nonnegative_combination(columns, target) is None


def cone_contains(cone: LiftedCone, point) -> bool:
    """Exact rational test for membership of a lattice point in the cone."""
    if len(point) != cone.dimension:
        raise ValueError("dimension mismatch")
    return intlinalg.nonnegative_combination(cone.generators, point) is not None


def _combination_exists(vectors, target, count, start, exact) -> bool:
    """Can ``count`` generators (repeats allowed) sum to ``target``?

    With ``exact`` false a componentwise-nonnegative remainder is allowed.
    Componentwise pruning keeps partial sums below the target.
    """
    if count == 0:
        return not exact or all(v == 0 for v in target)
    for j in range(start, len(vectors)):
        vec = vectors[j]
        rest = tuple(t - v for t, v in zip(target, vec))
        if any(v < 0 for v in rest):
            continue
        if _combination_exists(vectors, rest, count - 1, j, exact):
            return True
    return False


def semigroup_contains(cone: LiftedCone, point) -> bool:
    """Is the point a nonnegative integer combination of the generators?

    Every generator has last coordinate 1, so a point at level t is a sum
    of exactly t generators; the search backtracks over nondecreasing
    generator indices.
    """
    if len(point) != cone.dimension:
        raise ValueError("dimension mismatch")
    level = point[-1]
    if level < 0:
        raise ValueError("negative last coordinate")
    target = tuple(point[:-1])
    if any(v < 0 for v in target):
        return False
    if cone.degree is not None and sum(target) != level * cone.degree:
        return False
    return _combination_exists(cone.first_blocks(), target, level, 0, exact=True)


def is_hilbert_base(cone: LiftedCone, bound: int) -> HilbertReport:
    """Scan cone lattice points level by level up to ``bound``.

    At level t each coordinate is capped by t times the largest generator
    coordinate, which covers every cone point at that level.  The first
    cone point missing from the semigroup is returned as counterexample.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    m = cone.dimension - 1
    caps = [max(g[i] for g in cone.generators) for i in range(m)]
    for level in range(1, bound + 1):
        for head in itertools.product(*(range(level * c + 1) for c in caps)):
            point = head + (level,)
            if cone.degree is not None and sum(head) != level * cone.degree:
                continue  # stochastic generators force the level degree
            if not cone_contains(cone, point):
                continue
            if not semigroup_contains(cone, point):
                return HilbertReport("fails", bound, point)
    return HilbertReport("holds", bound, None)


def is_normal_ideal(mset: MonomialSet, bound: int) -> NormalityReport:
    """Bounded normality check over the unit-extended lifted generators.

    Points with last coordinate t in 1..bound and head coordinates at most
    bound*(degree+1) are tested: cone membership allows arbitrary
    nonnegative unit contributions, semigroup membership needs t lifted
    generators to fit under the point componentwise.  Level 0 never fails
    (such points are plain nonnegative unit combinations), so the scan
    starts at level 1.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    cone = lift(mset)
    n = mset.n
    d = cone.degree
    assert d is not None
    units = tuple(
        tuple(1 if i == k else 0 for i in range(n + 1)) for k in range(n)
    )
    extended = cone.generators + units
    firsts = cone.first_blocks()
    cap = bound * d + bound
    for level in range(1, bound + 1):
        for head in itertools.product(range(cap + 1), repeat=n):
            if sum(head) < level * d:
                continue  # too small to absorb the lifted part
            if any(
                all(level * v <= h for v, h in zip(vec, head)) for vec in firsts
            ):
                continue  # one generator repeated t times fits: trivially inside
            point = head + (level,)
            if intlinalg.nonnegative_combination(extended, point) is None:
                continue
            if not _combination_exists(firsts, head, level, 0, exact=False):
                return NormalityReport("fails", bound, point)
    return NormalityReport("holds", bound, None)


def smith_lattice_index(vectors) -> int:
    """Index of the lattice spanned by n integer vectors inside Z^n.

    Computed from the Smith invariant factors, not from the determinant, so
    the two routes stay independent.  Returns 0 when the span has rank < n.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("no vectors given")
    n = len(vectors[0])
    if len(vectors) != n or any(len(v) != n for v in vectors):
        raise ValueError("need exactly n vectors of length n")
    matrix = tuple(tuple(vectors[j][i] for j in range(n)) for i in range(n))
    return intlinalg.lattice_index(matrix)


def column_rank(matrix) -> int:
    factors = intlinalg.invariant_factors(matrix.entries)
    return sum(1 for f in factors if f)


@dataclass(frozen=True)
class CremonaSubsetReport:
    """Determinant-d column subsets that define Cremona maps.

    ``subsets`` lists column index tuples in lexicographic order;
    ``classes`` groups them up to simultaneous variable and monomial
    permutations, each class ordered and led by its first subset.
    """

    subsets: tuple[tuple[int, ...], ...]
    classes: tuple[tuple[tuple[int, ...], ...], ...]


def find_cremona_subsets(mset: MonomialSet) -> CremonaSubsetReport:
    """All n-column subsets with |det| = d defining Cremona maps.

    Subsets whose monomials share a common factor are excluded: they do not
    satisfy the canonical restrictions, so they do not define a Cremona map
    in degree d.  Each hit is cross-checked against the lattice index and
    the birationality report.
    """
    matrix = log_matrix(mset)
    if matrix.degree is None:
        raise ValueError("need monomials of one common degree")
    n, q = mset.n, mset.q
    if q < n:
        raise ValueError("need at least as many monomials as variables")
    if column_rank(matrix) < n:
        raise ValueError("column lattice has rank below the variable count")
    d = matrix.degree
    hits: list[tuple[int, ...]] = []
    for cols in itertools.combinations(range(q), n):
        sub = intlinalg.column_submatrix(matrix.entries, cols)
        if abs(intlinalg.determinant(sub)) != d:
            continue
        if any(min(row) > 0 for row in sub):
            continue  # common factor: canonical restrictions fail
        subset = MonomialSet(mset.variables, tuple(mset.vectors[j] for j in cols))
        report = inversion.is_cremona(subset)
        if not report.is_cremona or smith_lattice_index(subset.vectors) != d:
            raise RuntimeError("determinant-d subset failed its cross-checks")
        hits.append(cols)
    classes: list[list[tuple[int, ...]]] = []
    for cols in hits:
        sub = intlinalg.column_submatrix(matrix.entries, cols)
        for group in classes:
            rep = intlinalg.column_submatrix(matrix.entries, group[0])
            if equal_up_to_permutation(sub, rep):
                group.append(cols)
                break
        else:
            classes.append([cols])
    return CremonaSubsetReport(
        tuple(hits), tuple(tuple(group) for group in classes)
    )


def cremona_from_normal(mset: MonomialSet, bound: int) -> MonomialSet:
    """First Cremona subset of a set whose ideal the caller verified normal.

    The subset in lexicographically smallest column order is returned as a
    MonomialSet.  Absence of any subset raises NotCremonaError: either the
    ideal is not normal beyond the bound or the columns are rank-deficient.
    """
    report = find_cremona_subsets(mset)
    if not report.subsets:
        raise NotCremonaError(
            f"no Cremona subset found (normality was only checked up to bound {bound})"
        )
    cols = report.subsets[0]
    return MonomialSet(mset.variables, tuple(mset.vectors[j] for j in cols))
