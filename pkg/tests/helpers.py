"""Shared builders and strategies for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from unicwd import (
    Graph,
    Intro,
    Join,
    Relabel,
    Union,
    degree_sequence,
    find_isomorphism,
)


def G(vertices, edges=()):
    return Graph(vertices, edges)


def path_graph(*names):
    return Graph(names, list(zip(names, names[1:])))


def cycle_graph(*names):
    edges = list(zip(names, names[1:])) + [(names[-1], names[0])]
    return Graph(names, edges)


def complete_graph(*names):
    return Graph(names, combinations(names, 2))


def star_graph(center, *leaves):
    return Graph((center, *leaves), [(center, leaf) for leaf in leaves])


def matching_graph(*pairs):
    names = [x for pair in pairs for x in pair]
    return Graph(names, list(pairs))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = [(a, b) for a, b in combinations(names, 2) if rng.random() < p]
    return Graph(names, edges)


# ---------------------------------------------------------------------------
# every graph up to isomorphism, per vertex count (cached for the session)

_LEVELS: dict[int, list[Graph]] = {1: [Graph(["v1"])]}


def all_graphs_upto_iso(n: int) -> list[Graph]:
    """Representatives of every isomorphism class on exactly n vertices."""
    top = max(_LEVELS)
    for size in range(top + 1, n + 1):
        new_v = f"v{size}"
        buckets: dict[tuple, list[Graph]] = {}
        reps: list[Graph] = []
        for base in _LEVELS[size - 1]:
            prev = list(base.vertices)
            for mask in range(1 << (size - 1)):
                edges = list(base.edges) + [
                    (prev[i], new_v) for i in range(size - 1) if mask >> i & 1
                ]
                g = Graph(prev + [new_v], edges)
                nbr_degs = tuple(
                    sorted(
                        tuple(sorted(g.degree(u) for u in g.neighbors(v)))
                        for v in g.vertices
                    )
                )
                key = (degree_sequence(g), nbr_degs)
                bucket = buckets.setdefault(key, [])
                if not any(find_isomorphism(g, h) for h in bucket):
                    bucket.append(g)
                    reps.append(g)
        _LEVELS[size] = reps
    return _LEVELS[n]


# ---------------------------------------------------------------------------
# expression generators


def random_expr(rng: random.Random, max_nodes: int = 25, max_label: int = 5):
    """A random well-formed expression with globally unique vertex names."""
    counter = [0]

    def fresh():
        counter[0] += 1
        return f"x{counter[0]}"

    def gen(budget: int):
        if budget <= 1:
            return Intro(fresh(), rng.randint(1, max_label)), 1
        kind = rng.choice(("intro", "union", "join", "relabel"))
        if kind == "intro":
            return Intro(fresh(), rng.randint(1, max_label)), 1
        if kind == "union":
            arity = rng.randint(2, min(4, max(2, budget - 1)))
            children = []
            used = 1
            for i in range(arity):
                child, c = gen(max(1, (budget - used) // (arity - i)))
                children.append(child)
                used += c
            return Union(tuple(children)), used
        child, used = gen(budget - 1)
        i = rng.randint(1, max_label)
        if kind == "join":
            j = rng.randint(1, max_label - 1)
            if j >= i:
                j += 1
            return Join(i, j, child), used + 1
        return Relabel(i, rng.randint(1, max_label), child), used + 1

    expr, _ = gen(rng.randint(1, max_nodes))
    return expr


def _uniquify(expr, counter=None):
    if counter is None:
        counter = [0]
    if isinstance(expr, Intro):
        counter[0] += 1
        return Intro(f"x{counter[0]}", expr.label)
    if isinstance(expr, Union):
        return Union(tuple(_uniquify(c, counter) for c in expr.children))
    if isinstance(expr, Join):
        return Join(expr.i, expr.j, _uniquify(expr.child, counter))
    return Relabel(expr.old, expr.new, _uniquify(expr.child, counter))


_labels = st.integers(min_value=1, max_value=5)
_label_pairs = st.tuples(_labels, _labels).filter(lambda t: t[0] != t[1])

_expr_base = st.builds(lambda lab: Intro("x", lab), _labels)
exprs_st = st.recursive(
    _expr_base,
    lambda inner: st.one_of(
        st.builds(lambda cs: Union(tuple(cs)), st.lists(inner, min_size=2, max_size=4)),
        st.builds(lambda ij, c: Join(ij[0], ij[1], c), _label_pairs, inner),
        st.builds(Relabel, _labels, _labels, inner),
    ),
    max_leaves=12,
).map(_uniquify)


@st.composite
def graphs_st(draw, max_n: int = 7, min_n: int = 0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    names = [f"v{i}" for i in range(1, n + 1)]
    pairs = list(combinations(names, 2))
    if pairs:
        chosen = draw(st.sets(st.sampled_from(pairs)))
    else:
        chosen = set()
    return Graph(names, chosen)
