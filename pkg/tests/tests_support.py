"""Shared helpers for the test suite."""

import itertools

from binoidal.presentation import make_presentation
from binoidal.words import Word

INF_NODE = "inf"


def saturation_classes(p, bound):
    """Independent word-problem oracle: one-step rewrite edges between all
    words of degree <= bound, closed by union-find."""
    r = p.rank

    def words_up_to(limit):
        out = []
        for d in range(limit + 1):
            for combo in itertools.combinations_with_replacement(range(r), d):
                v = [0] * r
                for i in combo:
                    v[i] += 1
                out.append(tuple(v))
        return out

    nodes = words_up_to(bound)
    parent = {w: w for w in nodes}
    parent[INF_NODE] = INF_NODE

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for rel in p.relations:
        u = rel.lhs.dense(r)
        v = None if rel.rhs.is_inf else rel.rhs.dense(r)
        for w in nodes:
            if all(a <= b for a, b in zip(u, w)):
                shifted = tuple(b - a for a, b in zip(u, w))
                if v is None:
                    union(w, INF_NODE)
                else:
                    target = tuple(a + b for a, b in zip(v, shifted))
                    if sum(target) <= bound:
                        union(w, target)
    return find


def oracle_equal(find, u, v, r):
    a = INF_NODE if u.is_inf else u.dense(r)
    b = INF_NODE if v.is_inf else v.dense(r)
    return find(a) == find(b)


def assert_equal_matches_oracle(p, rs, degree=4, windows=(9, 12, 15)):
    """Compare completion-based equality with the saturation closure.

    The closure only sees chains inside its degree window, so when the
    rewrite system claims equality the window is escalated before the claim
    is rejected; a closure equality missed by the rewrite system is always a
    hard failure.
    """
    from binoidal import rewrite

    finds = {windows[0]: saturation_classes(p, windows[0])}
    words = [Word.from_dense(v) for v in rewrite.iter_words(p.rank, degree)]
    for u, v in itertools.combinations(words, 2):
        claimed = rs.equal(u, v)
        seen = oracle_equal(finds[windows[0]], u, v, p.rank)
        if seen and not claimed:
            raise AssertionError(
                f"{p.pretty()}: oracle links {u!r} ~ {v!r}, rewrite system does not"
            )
        if claimed and not seen:
            for window in windows[1:]:
                if window not in finds:
                    finds[window] = saturation_classes(p, window)
                if oracle_equal(finds[window], u, v, p.rank):
                    break
            else:
                raise AssertionError(
                    f"{p.pretty()}: rewrite system links {u!r} ~ {v!r}, "
                    f"no saturation window up to {windows[-1]} confirms"
                )


def random_presentation(rng, max_rank=3, max_rels=3, max_degree=3):
    rank = rng.randint(1, max_rank)
    names = [f"g{i}" for i in range(rank)]
    rels = []
    for _ in range(rng.randint(0, max_rels)):

        def rand_word():
            degree = rng.randint(0, max_degree)
            w = Word.zero()
            for _ in range(degree):
                w = w + Word.generator(rng.randrange(rank))
            return w

        lhs = rand_word()
        rhs = Word.inf() if rng.random() < 0.25 else rand_word()
        rels.append((lhs, rhs))
    return make_presentation(names, rels)
