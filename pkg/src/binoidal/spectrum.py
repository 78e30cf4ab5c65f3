"""Prime spectrum of a presented binoid and its poset invariants.

Primes of a finitely generated commutative binoid are generated by subsets
of the generators; a subset qualifies exactly when its indicator assignment
respects every defining relation, so the whole spectrum is found by a scan
over the 2^r subsets.  Primes are kept as generator subsets throughout;
ideal membership of a word is the support intersection test through the
indicator homomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import rewrite
from .errors import TooManyGenerators, ZeroBinoid
from .presentation import Presentation, Relation
from .words import Word

GENERATOR_CAP = 24


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime ideal, identified by the set of generators it contains."""

    gens: tuple[int, ...]

    def __init__(self, gens: Iterable[int]):
        object.__setattr__(self, "gens", tuple(sorted(set(gens))))

    def __contains__(self, i: int) -> bool:
        return i in self.gens

    def __le__(self, other: "PrimeIdeal") -> bool:
        return set(self.gens) <= set(other.gens)

    def __lt__(self, other: "PrimeIdeal") -> bool:
        return set(self.gens) < set(other.gens)

    def contains_word(self, w: Word) -> bool:
        if w.is_inf:
            return True
        return any(i in self.gens for i in w.support())

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.gens), self.gens)

    def pretty(self, names: Sequence[str]) -> str:
        return "{" + ",".join(names[i] for i in self.gens) + "}"


def _admissible(subset: frozenset[int], relations: Sequence[Relation]) -> bool:
    for rel in relations:
        hits_lhs = bool(rel.lhs.support() & subset)
        if rel.is_monomial:
            if not hits_lhs:
                return False
        else:
            if hits_lhs != bool(rel.rhs.support() & subset):
                return False
    return True


@dataclass(frozen=True)
class Spectrum:
    presentation: Presentation
    primes: tuple[PrimeIdeal, ...]

    def __len__(self) -> int:
        return len(self.primes)

    @property
    def is_empty(self) -> bool:
        return not self.primes

    @property
    def max_ideal(self) -> PrimeIdeal:
        if self.is_empty:
            raise ZeroBinoid("the zero binoid has no maximal ideal")
        union: set[int] = set()
        for p in self.primes:
            union.update(p.gens)
        return PrimeIdeal(union)

    def heights(self) -> dict[PrimeIdeal, int]:
        out: dict[PrimeIdeal, int] = {}
        for p in self.primes:  # sorted by cardinality, so subsets come first
            out[p] = max(
                (out[q] + 1 for q in self.primes if q < p and q in out), default=0
            )
        return out

    def prime_dims(self) -> dict[PrimeIdeal, int]:
        out: dict[PrimeIdeal, int] = {}
        for p in reversed(self.primes):
            out[p] = max(
                (out[q] + 1 for q in self.primes if p < q), default=0
            )
        return out

    def height(self, p: PrimeIdeal) -> int:
        if p not in self.primes:
            raise ValueError("prime not in the spectrum")
        return self.heights()[p]

    def prime_dim(self, p: PrimeIdeal) -> int:
        if p not in self.primes:
            raise ValueError("prime not in the spectrum")
        return self.prime_dims()[p]

    def covers(self) -> list[tuple[PrimeIdeal, PrimeIdeal]]:
        """Covering relations of the inclusion poset (Hasse diagram edges)."""
        out = []
        for p, q in itertools.permutations(self.primes, 2):
            if p < q and not any(p < m < q for m in self.primes):
                out.append((p, q))
        return out


def compute_spectrum(p: Presentation, force: bool = False) -> Spectrum:
    """All admissible generator subsets, by cardinality then lexicographic."""
    r = p.rank
    if r > GENERATOR_CAP and not force:
        raise TooManyGenerators(
            f"{r} generators exceed the 2^{GENERATOR_CAP} scan cap; use force"
        )
    primes = []
    for size in range(r + 1):
        for combo in itertools.combinations(range(r), size):
            if _admissible(frozenset(combo), p.relations):
                primes.append(PrimeIdeal(combo))
    return Spectrum(p, tuple(primes))


def dim(p: Presentation, force: bool = False) -> int:
    """Length of the longest prime chain; -1 for the zero binoid."""
    s = compute_spectrum(p, force=force)
    if s.is_empty:
        return -1
    return max(s.heights().values())


@dataclass(frozen=True)
class FVector:
    entries: tuple[int, ...]


def f_vector(p: Presentation) -> FVector:
    """Entry i counts the primes of prime-dimension i."""
    s = compute_spectrum(p)
    if s.is_empty:
        raise ZeroBinoid("the zero binoid has no F-vector")
    dims = s.prime_dims()
    d = max(dims.values())
    counts = [0] * (d + 1)
    for value in dims.values():
        counts[value] += 1
    return FVector(tuple(counts))


def minimal_primes(p: Presentation) -> list[PrimeIdeal]:
    s = compute_spectrum(p)
    if s.is_empty:
        raise ZeroBinoid("the zero binoid has no minimal primes")
    return _minimal(s.primes)


def _minimal(primes: Sequence[PrimeIdeal]) -> list[PrimeIdeal]:
    return [p for p in primes if not any(q < p for q in primes)]


def v_set(p: Presentation, words: Iterable[Word]) -> list[PrimeIdeal]:
    """Primes containing every given word."""
    ws = list(words)
    s = compute_spectrum(p)
    return [q for q in s.primes if all(q.contains_word(w) for w in ws)]


def d_set(p: Presentation, w: Word) -> list[PrimeIdeal]:
    s = compute_spectrum(p)
    return [q for q in s.primes if not q.contains_word(w)]


def closure(p: Presentation, primes: Iterable[PrimeIdeal]) -> list[PrimeIdeal]:
    """Topological closure of a set of points: all admissible supersets."""
    base = list(primes)
    s = compute_spectrum(p)
    return [q for q in s.primes if any(e <= q for e in base)]


def minimal_primes_over(p: Presentation, words: Iterable[Word]) -> list[PrimeIdeal]:
    ws = list(words)
    s = compute_spectrum(p)
    if s.is_empty:
        raise ZeroBinoid("the zero binoid has no primes")
    over = [q for q in s.primes if all(q.contains_word(w) for w in ws)]
    return _minimal(over)


def irreducible_components(p: Presentation) -> list[list[PrimeIdeal]]:
    """V(P) for each minimal prime P."""
    s = compute_spectrum(p)
    if s.is_empty:
        raise ZeroBinoid("the zero binoid has no components")
    return [[q for q in s.primes if m <= q] for m in _minimal(s.primes)]


def is_nilpotent(p: Presentation, w: Word) -> bool:
    """True when some multiple of w is absorbing.

    Nilpotence is a support condition: the support must meet every minimal
    prime.
    """
    if w.is_inf:
        return True
    s = compute_spectrum(p)
    return all(m.contains_word(w) for m in _minimal(s.primes))


def radical_membership(p: Presentation, w: Word, ideal_gens: Iterable[Word]) -> bool:
    if w.is_inf:
        return True
    s = compute_spectrum(p)
    if s.is_empty:
        return True
    over = [q for q in s.primes if all(q.contains_word(g) for g in ideal_gens)]
    return all(m.contains_word(w) for m in _minimal(over))


def minimal_transversals(sets: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-minimal hitting sets of the given set family.

    Branch and bound on the first unhit set; supersets of found transversals
    are pruned by a final minimality filter.
    """
    if any(not s for s in sets):
        return []  # an empty member can never be hit
    found: list[frozenset[int]] = []

    def search(partial: frozenset[int], todo: list[frozenset[int]]) -> None:
        if any(t <= partial for t in found):
            return
        unhit = [s for s in todo if not (s & partial)]
        if not unhit:
            found.append(partial)
            return
        for x in sorted(unhit[0]):
            search(partial | {x}, unhit[1:])

    search(frozenset(), list(sets))
    distinct = set(found)
    return sorted(
        (t for t in distinct if not any(u < t for u in distinct)),
        key=sorted,
    )


@dataclass(frozen=True)
class Predicates:
    integral: bool
    positive: bool
    units: tuple[str, ...]
    reduced: bool
    binoid_group: bool
    boolean: bool


def predicates(p: Presentation, rs: rewrite.RewriteSystem | None = None) -> Predicates:
    """Structural predicates of the presented binoid.

    Units are the generators outside the maximal ideal; integrality asks
    whether the generators collapsing to the absorbing element form an
    admissible subset; reducedness checks that every minimal transversal of
    the minimal-prime generator sets is absorbing.
    """
    s = compute_spectrum(p)
    if s.is_empty:
        return Predicates(False, False, (), False, False, False)
    if rs is None:
        rs = rewrite.complete(p)
    max_gens = set(s.max_ideal.gens)
    units = tuple(
        name for i, name in enumerate(p.generators) if i not in max_gens
    )
    a0 = frozenset(
        i for i in range(p.rank) if rs.normal_form(Word.generator(i)).is_inf
    )
    integral = _admissible(a0, p.relations)
    minimal = _minimal(s.primes)
    reduced = True
    for t in minimal_transversals([frozenset(m.gens) for m in minimal]):
        w = Word.zero()
        for i in sorted(t):
            w = w + Word.generator(i)
        if not rs.normal_form(w).is_inf:
            reduced = False
            break
    d = max(s.heights().values())
    boolean = all(
        rs.equal(Word.generator(i).scale(2), Word.generator(i))
        for i in range(p.rank)
    )
    return Predicates(
        integral=integral,
        positive=not units,
        units=units,
        reduced=reduced,
        binoid_group=integral and d == 0,
        boolean=boolean,
    )


@dataclass(frozen=True)
class FiniteBooleanBinoid:
    """The booleanization, realized as basic open sets under intersection."""

    spectrum: Spectrum
    elements: tuple[frozenset[PrimeIdeal], ...]  # deterministic order

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> frozenset[PrimeIdeal]:
        return frozenset(self.spectrum.primes)

    @property
    def absorbing(self) -> frozenset[PrimeIdeal]:
        return frozenset()

    def op(self, a: frozenset[PrimeIdeal], b: frozenset[PrimeIdeal]):
        return a & b

    def table(self) -> list[list[int]]:
        index = {e: k for k, e in enumerate(self.elements)}
        return [[index[a & b] for b in self.elements] for a in self.elements]

    def spec_elements(self) -> list[frozenset[PrimeIdeal]]:
        """Prime ideals of the table itself, via principal filters.

        In a finite meet-semilattice every proper filter is principal, so
        the primes correspond to the elements other than the absorbing one.
        """
        primes = []
        for m in self.elements:
            if m == self.absorbing:
                continue
            primes.append(frozenset(e for e in self.elements if not (m <= e)))
        return primes

    def induced_spectrum_map(self) -> dict[frozenset[PrimeIdeal], PrimeIdeal]:
        """Bijection from nonabsorbing elements onto the underlying spectrum.

        Each basic open set is a principal down-set of primes; it is mapped
        to its largest member.
        """
        out = {}
        for m in self.elements:
            if m == self.absorbing:
                continue
            union: set[int] = set()
            for q in m:
                union.update(q.gens)
            out[m] = PrimeIdeal(union)
        return out


def booleanize(p: Presentation) -> FiniteBooleanBinoid:
    s = compute_spectrum(p)
    if s.is_empty:
        raise ZeroBinoid("the zero binoid has no booleanization")
    basic = [
        frozenset(q for q in s.primes if i not in q.gens) for i in range(p.rank)
    ]
    elements: set[frozenset[PrimeIdeal]] = {frozenset(s.primes)}
    worklist = [frozenset(s.primes)]
    while worklist:
        e = worklist.pop()
        for b in basic:
            c = e & b
            if c not in elements:
                elements.add(c)
                worklist.append(c)
    elements.add(frozenset())
    ordered = sorted(
        elements,
        key=lambda e: (len(e), sorted(q.sort_key() for q in e)),
    )
    return FiniteBooleanBinoid(spectrum=s, elements=tuple(ordered))
