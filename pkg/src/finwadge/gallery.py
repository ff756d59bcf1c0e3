"""Constructors for the concrete spaces and poset combinators used in tests.

The fan constructor builds finite truncations of an infinite space: it
keeps the first N+1 finger chains in full and evaluates the defining
unions of the named sets over the indices that exist in the truncation.
The incomparability phenomena of the infinite space need arbitrarily
long chains, so truncations are test fixtures only; nothing about the
infinite space should be inferred from them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poset import FinitePoset, SubsetMask, build_poset


def chain(n: int) -> FinitePoset:
    """Linear order on n elements labeled '0' < '1' < ... ; n = 0 is empty."""
    if n < 0:
        raise ValueError("chain length must be >= 0")
    labels = [str(i) for i in range(n)]
    covers = [(str(i), str(i + 1)) for i in range(n - 1)]
    return build_poset(labels, covers)


def antichain(n: int) -> FinitePoset:
    """Discrete order on n >= 1 elements labeled 'a0', 'a1', ..."""
    if n < 1:
        raise ValueError("antichain needs at least one element")
    return build_poset([f"a{i}" for i in range(n)], [])


def linear_sum(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """P + Q: disjoint union with every element of P below every element of Q."""
    labels = [f"l.{x}" for x in P.labels] + [f"u.{x}" for x in Q.labels]
    np_ = P.n
    n = np_ + Q.n
    leq = [[False] * n for _ in range(n)]
    for i in range(np_):
        for j in range(np_):
            leq[i][j] = P.leq[i][j]
    for i in range(Q.n):
        for j in range(Q.n):
            leq[np_ + i][np_ + j] = Q.leq[i][j]
    for i in range(np_):
        for j in range(Q.n):
            leq[i][np_ + j] = True
    return FinitePoset(tuple(labels), tuple(tuple(row) for row in leq))


def lex_product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """P * Q on pairs: (p0,q0) < (p1,q1) iff q0 < q1, or q0 = q1 and p0 < p1."""
    labels = []
    pairs = []
    for qi in range(Q.n):
        for pi in range(P.n):
            labels.append(f"({P.labels[pi]},{Q.labels[qi]})")
            pairs.append((pi, qi))
    n = len(pairs)
    leq = [[False] * n for _ in range(n)]
    for a, (p0, q0) in enumerate(pairs):
        for b, (p1, q1) in enumerate(pairs):
            if q0 == q1:
                leq[a][b] = P.leq[p0][p1]
            else:
                leq[a][b] = Q.leq[q0][q1]
    return FinitePoset(tuple(labels), tuple(tuple(row) for row in leq))


def expected_structure(k: int) -> FinitePoset:
    """k stacked incomparable pairs with a four-element antichain on top."""
    return linear_sum(lex_product(antichain(2), chain(k)), antichain(4))


def truncated_c_infinity(N: int) -> FinitePoset:
    """Elements 0..N-1 ordered by i <= j iff i >= j numerically (0 on top)."""
    if N < 1:
        raise ValueError("need at least one element")
    labels = [str(i) for i in range(N)]
    covers = [(str(i + 1), str(i)) for i in range(N - 1)]
    return build_poset(labels, covers)


@dataclass(frozen=True)
class FanSpace:
    """A fan truncation plus its named subsets D0..DN, A, B."""

    space: FinitePoset
    sets: dict[str, SubsetMask]


def fan(N: int) -> FanSpace:
    """Finger chains C_0..C_N between a bottom and a top element.

    C_n is the chain c{n}_{n} < ... < c{n}_{0}; distinct chains are
    incomparable except through bot and top.  The named open sets grow by
    D_{i+1} = D_i + {x : some c{n}_{i+1} <= x with n > i}, and
    A = D_0 union of the blocks D_{2k+2} - D_{2k+1} that exist in the
    truncation; B = A - {top}.
    """
    if N < 0:
        raise ValueError("fan needs N >= 0")
    labels = ["bot", "top"]
    covers = []
    for n in range(N + 1):
        members = [f"c{n}_{k}" for k in range(n + 1)]
        labels.extend(members)
        covers.append(("bot", members[-1]))
        covers.append((members[0], "top"))
        for k in range(n):
            covers.append((members[k + 1], members[k]))
    X = build_poset(labels, covers)

    def above(name: str) -> set[str]:
        i = X.index(name)
        return {X.labels[j] for j in X.up_set(i).indices()}

    d_sets: list[set[str]] = [set()]
    d_sets[0] = set().union(*(above(f"c{n}_0") for n in range(N + 1)))
    for i in range(N):
        grow = set(d_sets[i])
        for n in range(i + 1, N + 1):
            grow |= above(f"c{n}_{i + 1}")
        d_sets.append(grow)
    a_set = set(d_sets[0])
    k = 0
    while 2 * k + 2 <= N:
        a_set |= d_sets[2 * k + 2] - d_sets[2 * k + 1]
        k += 1
    b_set = a_set - {"top"}
    named = {f"D{i}": X.mask(sorted(s)) for i, s in enumerate(d_sets)}
    named["A"] = X.mask(sorted(a_set))
    named["B"] = X.mask(sorted(b_set))
    return FanSpace(X, named)
