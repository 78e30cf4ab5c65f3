"""Completion-based word problem solver for presented binoids.

Relations are oriented into rewrite rules on exponent vectors and completed
by a Buchberger-style critical-pair loop.  Because every relation is either
a pure difference of monomials or a monomial-equals-absorbing rule, no
coefficient bookkeeping is needed and the result is independent of any base
ring.  Termination of the loop is guaranteed by Dickson's lemma; a safety
budget turns pathological blowup into a hard error instead of a wrong
answer.

The term order is graded lexicographic with generator precedence given by
declaration order; the absorbing word is strictly minimal.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import (
    BudgetExceeded,
    InvalidGrading,
    IsInfinity,
    NoPositiveGrading,
    NotPositive,
)
from .presentation import Presentation
from .words import Word

INF = None  # internal marker for an absorbing right-hand side

Vec = tuple[int, ...]

DEFAULT_BUDGET = 100_000


def _key(v: Vec) -> tuple[int, Vec]:
    return (sum(v), v)


def _divides(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: Vec, b: Vec) -> Vec:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: Word

    def pretty(self, names) -> str:
        return f"{self.lhs.pretty(names)} -> {self.rhs.pretty(names)}"


@dataclass(frozen=True)
class RewriteSystem:
    source: Presentation
    order: str
    _rules: tuple[tuple[Vec, Optional[Vec]], ...] = field(repr=False)

    @property
    def rules(self) -> list[RewriteRule]:
        out = []
        for l, r in self._rules:
            rhs = Word.inf() if r is INF else Word.from_dense(r)
            out.append(RewriteRule(Word.from_dense(l), rhs))
        return out

    @property
    def rank(self) -> int:
        return self.source.rank

    def _reduce(self, v: Optional[Vec]) -> Optional[Vec]:
        if v is INF:
            return INF
        changed = True
        while changed:
            changed = False
            for l, r in self._rules:
                if _divides(l, v):
                    if r is INF:
                        return INF
                    v = _add(_sub(v, l), r)
                    changed = True
                    break
        return v

    def normal_form(self, w: Word) -> Word:
        if w.is_inf:
            return Word.inf()
        v = self._reduce(w.dense(self.rank))
        return Word.inf() if v is INF else Word.from_dense(v)

    def equal(self, u: Word, v: Word) -> bool:
        return self.normal_form(u) == self.normal_form(v)

    def is_monomial_only(self) -> bool:
        """No rule has a finite right-hand side.

        Equivalent to: distinct finite normal forms represent distinct
        elements, so the presented binoid is semifree on its generators.
        """
        return all(r is INF for _, r in self._rules)

    def critical_pairs_join(self) -> bool:
        """Confluence check: every critical pair reduces to one normal form."""
        for (l1, r1), (l2, r2) in itertools.combinations(self._rules, 2):
            m = _lcm(l1, l2)
            s1 = INF if r1 is INF else _add(_sub(m, l1), r1)
            s2 = INF if r2 is INF else _add(_sub(m, l2), r2)
            if self._reduce(s1) != self._reduce(s2):
                return False
        return True


def _orient(a: Optional[Vec], b: Optional[Vec]) -> tuple[Vec, Optional[Vec]]:
    if a is INF:
        a, b = b, a
    if b is INF:
        return a, INF
    return (a, b) if _key(a) > _key(b) else (b, a)


def complete(p: Presentation, budget: int = DEFAULT_BUDGET) -> RewriteSystem:
    """Complete the presentation's relations into a confluent system."""
    r = p.rank
    pending: deque[tuple[Optional[Vec], Optional[Vec]]] = deque()
    for rel in p.relations:
        rhs = INF if rel.rhs.is_inf else rel.rhs.dense(r)
        pending.append((rel.lhs.dense(r), rhs))

    rules: list[tuple[Vec, Optional[Vec]]] = []

    def reduce(v: Optional[Vec]) -> Optional[Vec]:
        if v is INF:
            return INF
        changed = True
        while changed:
            changed = False
            for l, rr in rules:
                if _divides(l, v):
                    if rr is INF:
                        return INF
                    v = _add(_sub(v, l), rr)
                    changed = True
                    break
        return v

    processed = 0
    while pending:
        a, b = pending.popleft()
        processed += 1
        if processed > budget:
            raise BudgetExceeded(
                f"completion exceeded the budget of {budget} rule candidates"
            )
        a = reduce(a)
        b = reduce(b)
        if a == b:
            continue
        lhs, rhs = _orient(a, b)
        keep: list[tuple[Vec, Optional[Vec]]] = []
        for l, rr in rules:
            if _divides(lhs, l) or (rr is not INF and _divides(lhs, rr)):
                pending.append((l, rr))
            else:
                keep.append((l, rr))
        for l, rr in keep:
            if rr is INF and rhs is INF:
                continue  # both reduce the overlap to the absorbing word
            m = _lcm(lhs, l)
            if m == _add(lhs, l):
                continue  # coprime leading terms join trivially
            s1 = INF if rhs is INF else _add(_sub(m, lhs), rhs)
            s2 = INF if rr is INF else _add(_sub(m, l), rr)
            pending.append((s1, s2))
        keep.append((lhs, rhs))
        rules = keep
    rules.sort(key=lambda lr: _key(lr[0]))
    return RewriteSystem(source=p, order="grlex", _rules=tuple(rules))


def normal_form(rs: RewriteSystem, w: Word) -> Word:
    return rs.normal_form(w)


def equal(rs: RewriteSystem, u: Word, v: Word) -> bool:
    return rs.equal(u, v)


def _words_of_degree(r: int, d: int) -> Iterator[Vec]:
    """All exponent vectors of length r with total degree exactly d."""
    if r == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in _words_of_degree(r - 1, d - first):
            yield (first,) + rest


def iter_words(r: int, max_degree: int) -> Iterator[Vec]:
    for d in range(max_degree + 1):
        yield from _words_of_degree(r, d)


def enumerate_elements(rs: RewriteSystem, degree_bound: int) -> list[Word]:
    """Distinct finite normal forms of all words of degree <= bound.

    Sorted ascending in the term order; the absorbing class is excluded.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    r = rs.rank
    seen: set[Vec] = set()
    for v in iter_words(r, degree_bound):
        nf = rs._reduce(v)
        if nf is not INF:
            seen.add(nf)
    return [Word.from_dense(v) for v in sorted(seen, key=_key)]


def _validate_grading(p: Presentation, rs: RewriteSystem, weights) -> None:
    if len(weights) != p.rank or any(w < 1 for w in weights):
        raise InvalidGrading("need one weight >= 1 per generator")
    for rel in p.binomial_relations():
        if rs.normal_form(rel.lhs).is_inf:
            continue  # both sides are absorbing; no degree constraint
        lu = sum(weights[i] * e for i, e in rel.lhs.exps)
        lv = sum(weights[i] * e for i, e in rel.rhs.exps)
        if lu != lv:
            raise InvalidGrading(
                f"weights violate the relation {rel.pretty(p.generators)}"
            )


def order_delta(
    p: Presentation,
    grading,
    w: Word,
    rs: RewriteSystem | None = None,
) -> int:
    """Order of [w]: the maximal degree among all words congruent to w.

    Requires a positive presentation and a valid positive grading; then each
    congruence class away from the absorbing element sits in one finite
    weight level and the maximum exists.
    """
    from .spectrum import predicates

    weights = tuple(grading.weights) if hasattr(grading, "weights") else tuple(grading)
    if rs is None:
        rs = complete(p)
    if predicates(p, rs=rs).units:
        raise NotPositive("order function requires a positive binoid")
    _validate_grading(p, rs, weights)
    if rs.normal_form(w).is_inf:
        raise IsInfinity("the absorbing class has no order")
    grade = sum(weights[i] * e for i, e in w.exps)
    best = 0
    for v in _weighted_level(weights, grade):
        if rs.equal(Word.from_dense(v), w):
            best = max(best, sum(v))
    return best


def _weighted_level(weights: tuple[int, ...], grade: int) -> Iterator[Vec]:
    """All exponent vectors v with sum(weights[i] * v[i]) == grade."""
    r = len(weights)

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == r:
            if remaining == 0:
                yield ()
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            for rest in rec(i + 1, remaining - e * w):
                yield (e,) + rest

    return rec(0, grade)


def hilbert_samuel(p: Presentation, n: int, rs: RewriteSystem | None = None) -> int:
    """Number of classes of order < n, i.e. the size of M/nM+ minus one.

    Defined here only for positive presentations carrying a positive
    grading; without one the order function can be infinite and no general
    algorithm is attempted.
    """
    from .grading import find_positive_grading
    from .spectrum import predicates

    if n < 1:
        raise ValueError("n must be a positive integer")
    if rs is None:
        rs = complete(p)
    if predicates(p, rs=rs).units:
        raise NotPositive("Hilbert-Samuel values require a positive binoid")
    grading = find_positive_grading(p, rs=rs)
    if grading is None:
        raise NoPositiveGrading(
            "no positive grading; the order function may be infinite"
        )
    count = 0
    for w in enumerate_elements(rs, n - 1):
        if order_delta(p, grading, w, rs=rs) < n:
            count += 1
    return count
