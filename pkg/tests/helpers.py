"""Shared enumerations, oracles, and hypothesis strategies."""

from functools import lru_cache

from hypothesis import strategies as st

from cdcalc import Leaf, Letter, Node, expansions, pos_word

X = Leaf(1)


@lru_cache(maxsize=None)
def one_var_terms(n):
    """All one-variable terms of size exactly n (Catalan many)."""
    if n == 1:
        return (X,)
    out = []
    for i in range(1, n):
        for left in one_var_terms(i):
            for right in one_var_terms(n - i):
                out.append(Node(left, right))
    return tuple(out)


def one_var_upto(n):
    return [t for k in range(1, n + 1) for t in one_var_terms(k)]


@lru_cache(maxsize=None)
def _injective_from(n, start):
    if n == 1:
        return (Leaf(start),)
    out = []
    for i in range(1, n):
        for left in _injective_from(i, start):
            for right in _injective_from(n - i, start + i):
                out.append(Node(left, right))
    return tuple(out)


def injective_canonical(n):
    """All injective canonical terms of size exactly n (x1..xn left to right)."""
    return _injective_from(n, 1)


def injective_upto(n):
    return [t for k in range(1, n + 1) for t in injective_canonical(k)]


@lru_cache(maxsize=None)
def labeled_terms(n, nvars):
    """All terms of size exactly n over the variables x1..x_nvars."""
    if n == 1:
        return tuple(Leaf(i) for i in range(1, nvars + 1))
    out = []
    for i in range(1, n):
        for left in labeled_terms(i, nvars):
            for right in labeled_terms(n - i, nvars):
                out.append(Node(left, right))
    return tuple(out)


def labeled_upto(n, nvars):
    return [t for k in range(1, n + 1) for t in labeled_terms(k, nvars)]


def is_expansion(s, target):
    """Exact expansion-reachability: positive rewriting strictly grows the
    size, so a breadth-first search capped at target.size is complete."""
    if s == target:
        return True
    seen, frontier = {s}, [s]
    while frontier:
        nxt = []
        for cur in frontier:
            for _, e in expansions(cur):
                if e.size <= target.size and e not in seen:
                    if e == target:
                        return True
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return False


addresses_st = st.text(alphabet="01", max_size=4)
words_st = st.lists(
    st.tuples(addresses_st, st.sampled_from((1, -1))), max_size=6
).map(lambda ls: tuple(Letter(a, s) for a, s in ls))
pos_words_st = st.lists(addresses_st, max_size=6).map(pos_word)
one_var_term_st = st.recursive(
    st.just(X), lambda c: st.tuples(c, c).map(lambda p: Node(*p)), max_leaves=8
)
terms_st = st.recursive(
    st.integers(min_value=1, max_value=3).map(Leaf),
    lambda c: st.tuples(c, c).map(lambda p: Node(*p)),
    max_leaves=8,
)
