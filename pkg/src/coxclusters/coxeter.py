"""Coxeter-element combinatorics.

A Coxeter element is stored as an ordering of the index set; orderings that
induce the same acyclic orientation of the Coxeter graph are normalized to
the lexicographically smallest topological order, so equality of
:class:`CoxeterElement` values is equality of orientations.

All per-element derived data (exchange matrix, iteration counts ``h``, the
star involution, the weight family Pi, its rotation ``tau``, and the first
root family ``beta``) is computed once and cached; the cache is safe for
concurrent readers.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import networkx as nx

from .cartan import CartanMatrix, bipartition
from .weyl import (
    Root,
    Weight,
    apply_word,
    fundamental_weight,
    reflect_root,
    reflect_weight,
    simple_root,
    weight_as_root,
)


class InvalidCoxeterWord(ValueError):
    """A letter sequence that is not a permutation of the index set."""


class InvalidMove(ValueError):
    """A pair of Coxeter elements not related by a single source rotation."""


class InternalCheckError(RuntimeError):
    """An invariant that can only fail through an implementation bug."""


@dataclass(frozen=True)
class CoxeterElement:
    """Canonical ordering of the index set, one per acyclic orientation."""

    order: tuple[int, ...]

    def position(self, i: int) -> int:
        return self.order.index(i)


@dataclass(frozen=True, order=True)
class PiLabel:
    """Label (i, m) of the weight obtained by rotating the i-th fundamental weight m times."""

    i: int
    m: int


def _canonical_order(m: CartanMatrix, word: Iterable[int]) -> tuple[int, ...]:
    word = tuple(word)
    if sorted(word) != list(range(m.n)):
        raise InvalidCoxeterWord(f"{word!r} is not a permutation of 0..{m.n - 1}")
    pos = {i: p for p, i in enumerate(word)}
    succ: dict[int, list[int]] = {i: [] for i in range(m.n)}
    indeg = [0] * m.n
    for i, j in m.edges():
        src, dst = (i, j) if pos[i] < pos[j] else (j, i)
        succ[src].append(dst)
        indeg[dst] += 1
    heap = [i for i in range(m.n) if indeg[i] == 0]
    heapq.heapify(heap)
    out: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return tuple(out)


def coxeter_element(m: CartanMatrix, word: Iterable[int]) -> CoxeterElement:
    """Coxeter element with the given letter order (canonicalized)."""
    return CoxeterElement(_canonical_order(m, word))


def bipartite_element(m: CartanMatrix) -> CoxeterElement:
    """The bipartite Coxeter element: all +1 letters before all -1 letters."""
    eps = bipartition(m)
    word = [i for i in range(m.n) if eps[i] == 1] + [i for i in range(m.n) if eps[i] == -1]
    return coxeter_element(m, word)


def precedes(m: CartanMatrix, c: CoxeterElement, i: int, j: int) -> bool:
    """True when i and j are joined in the Coxeter graph and i comes first in c."""
    return i != j and m.a[i][j] != 0 and c.position(i) < c.position(j)


def sources(m: CartanMatrix, c: CoxeterElement) -> tuple[int, ...]:
    """Indices whose letter can be moved to the front of c."""
    return tuple(i for i in range(m.n) if not any(precedes(m, c, j, i) for j in m.neighbors(i)))


def b_matrix(m: CartanMatrix, c: CoxeterElement) -> tuple[tuple[int, ...], ...]:
    """Skew-symmetrizable exchange matrix attached to the orientation of c."""
    rows = []
    for i in range(m.n):
        row = []
        for j in range(m.n):
            if precedes(m, c, i, j):
                row.append(-m.a[i][j])
            elif precedes(m, c, j, i):
                row.append(m.a[i][j])
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


class _CoxeterData:
    """Derived tables for one (CartanMatrix, CoxeterElement) pair.

    The rotation chains are computed eagerly; the labelled-weight tables and
    the first root family only on demand.
    """

    def __init__(self, m: CartanMatrix, c: CoxeterElement):
        self.m = m
        self.c = c
        self.h, self.star = self._iterate_chains()
        self.labels: tuple[PiLabel, ...] = tuple(
            PiLabel(i, k) for i in range(m.n) for k in range(self.h[i] + 1)
        )

    @cached_property
    def weight_of(self) -> dict[PiLabel, Weight]:
        m, c, n = self.m, self.c, self.m.n
        table: dict[PiLabel, Weight] = {}
        for i in range(n):
            w = fundamental_weight(n, i)
            table[PiLabel(i, 0)] = w
            for k in range(1, self.h[i] + 1):
                w = apply_word(m, c.order, w)
                table[PiLabel(i, k)] = w
        return table

    @cached_property
    def label_of(self) -> dict[tuple[int, ...], PiLabel]:
        table: dict[tuple[int, ...], PiLabel] = {}
        for lab, w in self.weight_of.items():
            if w.g in table:
                raise InternalCheckError("weights in Pi are not pairwise distinct")
            table[w.g] = lab
        return table

    @cached_property
    def betas(self) -> tuple[Root, ...]:
        return self._beta_roots()

    def _iterate_chains(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        m, c, n = self.m, self.c, self.m.n
        bound = max(coxeter_number(m)) + 1
        h, star = [0] * n, [0] * n
        for i in range(n):
            w = fundamental_weight(n, i)
            for step in range(1, bound + 1):
                nxt = apply_word(m, c.order, w)
                diff = weight_as_root(m, w - nxt)
                if diff is None or not diff.is_positive():
                    raise InternalCheckError(
                        f"rotation chain of weight {i} not strictly decreasing at step {step}"
                    )
                w = nxt
                neg = [k for k in range(n) if w.g[k] != 0]
                if len(neg) == 1 and w.g[neg[0]] == -1:
                    h[i], star[i] = step, neg[0]
                    break
            else:
                raise InternalCheckError(f"rotation chain of weight {i} exceeded order bound")
        return tuple(h), tuple(star)

    def _beta_roots(self) -> tuple[Root, ...]:
        m, order, n = self.m, self.c.order, self.m.n
        betas: list[Root | None] = [None] * n
        for pos, letter in enumerate(order):
            betas[letter] = apply_word(m, order[:pos], simple_root(n, letter))
        return tuple(betas)


@lru_cache(maxsize=None)
def _data(m: CartanMatrix, c: CoxeterElement) -> _CoxeterData:
    return _CoxeterData(m, c)


@lru_cache(maxsize=None)
def coxeter_number(m: CartanMatrix) -> tuple[int, ...]:
    """Order of any Coxeter element on each connected component, in component order."""
    numbers = []
    c = coxeter_element(m, range(m.n))
    for comp in m.components:
        # Generic integer weight supported on the component; its orbit size is
        # the order of the component's Coxeter element.
        probes = [
            fundamental_weight(m.n, i) for i in comp
        ]
        order = 1
        current = probes
        cap = 10_000
        while True:
            current = [apply_word(m, c.order, w) for w in current]
            if all(w == p for w, p in zip(current, probes)):
                break
            order += 1
            if order > cap:
                raise InternalCheckError("Coxeter element order exceeds sanity cap")
        numbers.append(order)
    return tuple(numbers)


def component_coxeter_number(m: CartanMatrix, i: int) -> int:
    for comp, h in zip(m.components, coxeter_number(m)):
        if i in comp:
            return h
    raise IndexError(i)


def h_vector(m: CartanMatrix, c: CoxeterElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-index iteration counts h(i) and the induced star involution."""
    data = _data(m, c)
    return data.h, data.star


def beta_roots(m: CartanMatrix, c: CoxeterElement) -> tuple[Root, ...]:
    """beta[i] = (prefix of c before letter i) applied to alpha_i; indexed by letter."""
    return _data(m, c).betas


def pi_set(m: CartanMatrix, c: CoxeterElement) -> tuple[tuple[PiLabel, Weight], ...]:
    """All labelled weights (i, m) with 0 <= m <= h(i), in label order."""
    data = _data(m, c)
    return tuple((lab, data.weight_of[lab]) for lab in data.labels)


def label_weight(m: CartanMatrix, c: CoxeterElement, label: PiLabel) -> Weight:
    return _data(m, c).weight_of[label]


def weight_label(m: CartanMatrix, c: CoxeterElement, w: Weight) -> PiLabel:
    return _data(m, c).label_of[w.g]


def tau(m: CartanMatrix, c: CoxeterElement, label: PiLabel) -> PiLabel:
    """Rotation permutation of the label set: one more application of c, wrapping at the end."""
    data = _data(m, c)
    if label.m < data.h[label.i]:
        return PiLabel(label.i, label.m + 1)
    return PiLabel(data.star[label.i], 0)


def tau_inverse(m: CartanMatrix, c: CoxeterElement, label: PiLabel) -> PiLabel:
    data = _data(m, c)
    if label.m > 0:
        return PiLabel(label.i, label.m - 1)
    j = data.star[label.i]  # star is an involution
    return PiLabel(j, data.h[j])


def compatibility_degree(
    m: CartanMatrix,
    c: CoxeterElement,
    gamma: PiLabel,
    delta: PiLabel,
    use_inverse: bool = False,
) -> int:
    """Nonnegative pairing on the label set.

    Both labels are rotated together until the first names a fundamental
    weight; then the value is 0 against another fundamental weight, and the
    alpha_i-coefficient of (one backward rotation of the weight, minus the
    weight) otherwise.  ``use_inverse`` rotates backwards instead; the two
    reductions must agree and tests assert that they do.
    """
    data = _data(m, c)
    step = tau_inverse if use_inverse else tau
    cap = len(data.labels) + 1
    for _ in range(cap):
        if gamma.m == 0:
            break
        gamma = step(m, c, gamma)
        delta = step(m, c, delta)
    else:
        raise InternalCheckError("rotation orbit missed every fundamental weight")
    if delta.m == 0:
        return 0
    w = data.weight_of[delta]
    prev = data.weight_of[tau_inverse(m, c, delta)]
    diff = weight_as_root(m, prev - w)
    if diff is None:
        raise InternalCheckError("weight difference not in the root lattice")
    return diff.d[gamma.i]


def clusters(m: CartanMatrix, c: CoxeterElement) -> tuple[tuple[PiLabel, ...], ...]:
    """All maximal pairwise-compatible label sets; each must have exactly n elements."""
    data = _data(m, c)
    graph = nx.Graph()
    graph.add_nodes_from(data.labels)
    for a, b in itertools.combinations(data.labels, 2):
        if compatibility_degree(m, c, a, b) == 0 and compatibility_degree(m, c, b, a) == 0:
            graph.add_edge(a, b)
    result = []
    for clique in nx.find_cliques(graph):
        if len(clique) != m.n:
            raise InternalCheckError(
                f"maximal compatible set of size {len(clique)} != rank {m.n}"
            )
        result.append(tuple(sorted(clique)))
    return tuple(sorted(result))


def cyclical_move(m: CartanMatrix, c: CoxeterElement, source: int | None = None) -> CoxeterElement:
    """Rotate a source letter of c to the end (reverse all arrows at that source)."""
    if source is None:
        source = c.order[0]
    if source not in sources(m, c):
        raise InvalidMove(f"index {source} is not a source of {c.order}")
    word = tuple(i for i in c.order if i != source) + (source,)
    return coxeter_element(m, word)


@dataclass(frozen=True)
class MoveGraph:
    elements: tuple[CoxeterElement, ...]
    edges: tuple[tuple[int, int, int], ...]  # (from, to, rotated source)

    def is_connected(self) -> bool:
        if not self.elements:
            return True
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.elements)))
        graph.add_edges_from((a, b) for a, b, _ in self.edges)
        return nx.is_connected(graph)


def move_graph(m: CartanMatrix) -> MoveGraph:
    """All Coxeter elements (= acyclic orientations) joined by source rotations."""
    edges = m.edges()
    seen: dict[CoxeterElement, int] = {}
    elements: list[CoxeterElement] = []
    for signs in itertools.product((0, 1), repeat=len(edges)):
        word_pos = {i: 0.0 for i in range(m.n)}
        graph = nx.DiGraph()
        graph.add_nodes_from(range(m.n))
        for (i, j), s in zip(edges, signs):
            graph.add_edge(*((i, j) if s == 0 else (j, i)))
        order = list(nx.lexicographical_topological_sort(graph))
        elem = coxeter_element(m, order)
        if elem not in seen:
            seen[elem] = len(elements)
            elements.append(elem)
    if len(elements) != 2 ** len(edges):
        raise InternalCheckError("orientation count mismatch")
    move_edges = []
    for idx, elem in enumerate(elements):
        for s in sources(m, elem):
            target = seen[cyclical_move(m, elem, s)]
            move_edges.append((idx, target, s))
    return MoveGraph(tuple(elements), tuple(move_edges))


def all_coxeter_elements(m: CartanMatrix) -> tuple[CoxeterElement, ...]:
    return move_graph(m).elements


def _move_source(m: CartanMatrix, c: CoxeterElement, ctilde: CoxeterElement) -> int:
    for s in sources(m, c):
        if cyclical_move(m, c, s) == ctilde:
            return s
    raise InvalidMove("second element is not one source rotation away from the first")


def psi_move(
    m: CartanMatrix,
    c: CoxeterElement,
    ctilde: CoxeterElement,
    label: PiLabel,
    source: int | None = None,
) -> PiLabel:
    """Bijection from the label set of ctilde onto that of c for one source rotation.

    Sends minus the rotated fundamental weight to that fundamental weight and
    applies the rotated reflection everywhere else; intertwines the two
    rotation permutations.
    """
    if source is None:
        source = _move_source(m, c, ctilde)
    elif cyclical_move(m, c, source) != ctilde:
        raise InvalidMove(f"rotating {source} does not relate the two elements")
    w = label_weight(m, ctilde, label)
    if w == -fundamental_weight(m.n, source):
        return weight_label(m, c, fundamental_weight(m.n, source))
    return weight_label(m, c, reflect_weight(m, source, w))


# -- bipartite picture ------------------------------------------------------


def bipartition_of(m: CartanMatrix, c: CoxeterElement) -> tuple[int, ...]:
    """Sign vector with sources +1 and sinks -1; raises when c is not bipartite."""
    eps = [0] * m.n
    for i in range(m.n):
        nbrs = m.neighbors(i)
        if all(precedes(m, c, i, j) for j in nbrs):
            eps[i] = 1
        elif all(precedes(m, c, j, i) for j in nbrs):
            eps[i] = -1
        else:
            raise InvalidMove(f"{c.order} is not bipartite: index {i} is neither source nor sink")
    return tuple(eps)


@lru_cache(maxsize=None)
def all_roots(m: CartanMatrix) -> tuple[Root, ...]:
    """The full root system, as closure of the simple roots under reflections."""
    frontier = [simple_root(m.n, i) for i in range(m.n)]
    seen = {r.d for r in frontier}
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(m.n):
                s = reflect_root(m, i, r)
                if s.d not in seen:
                    seen.add(s.d)
                    nxt.append(s)
        frontier = nxt
    return tuple(sorted((Root(d) for d in seen), key=lambda r: r.d))


def almost_positive_roots(m: CartanMatrix) -> tuple[Root, ...]:
    positives = [r for r in all_roots(m) if r.is_positive()]
    negatives = [-simple_root(m.n, i) for i in range(m.n)]
    return tuple(negatives + positives)


def _half_reflection(m: CartanMatrix, eps: tuple[int, ...], sign: int, r: Root) -> Root:
    """Product of the commuting simple reflections of one sign, on roots.

    Fixes a negative simple root of the opposite sign, per the standard
    involution on almost positive roots.
    """
    neg = _negative_simple_index(r)
    if neg is not None and eps[neg] == -sign:
        return r
    for i in range(m.n):
        if eps[i] == sign:
            r = reflect_root(m, i, r)
    return r


def _negative_simple_index(r: Root) -> int | None:
    nonzero = [k for k, x in enumerate(r.d) if x != 0]
    if len(nonzero) == 1 and r.d[nonzero[0]] == -1:
        return nonzero[0]
    return None


def root_compat(
    m: CartanMatrix, alpha: Root, beta: Root, eps: tuple[int, ...] | None = None
) -> int:
    """Compatibility pairing on almost positive roots.

    Characterized by: pairing of a negative simple -alpha_i against beta is
    the positive part of beta's alpha_i-coefficient, and invariance under the
    two sign involutions.
    """
    if eps is None:
        eps = bipartition(m)
    h_bound = 2 * (max(coxeter_number(m)) + 2)
    sign = 1
    for _ in range(h_bound):
        neg = _negative_simple_index(alpha)
        if neg is not None:
            return max(beta.d[neg], 0)
        alpha = _half_reflection(m, eps, sign, alpha)
        beta = _half_reflection(m, eps, sign, beta)
        sign = -sign
    raise InternalCheckError("involution orbit missed every negative simple root")


def psi_bipartite(m: CartanMatrix, c: CoxeterElement, label: PiLabel) -> Root:
    """Bijection from the bipartite label set to almost positive roots.

    Fundamental weights map to negative simple roots; every other labelled
    weight w maps to (one backward rotation of w) minus w.
    """
    bipartition_of(m, c)  # raises when c is not bipartite
    if label.m == 0:
        return -simple_root(m.n, label.i)
    w = label_weight(m, c, label)
    prev = label_weight(m, c, tau_inverse(m, c, label))
    r = weight_as_root(m, prev - w)
    if r is None:
        raise InternalCheckError("weight difference not in the root lattice")
    return r


# -- primitive exchange relations -------------------------------------------


@dataclass(frozen=True)
class PrimitiveRelation:
    """One exchange relation whose right-hand side has an empty variable product.

    The product of the two ``left`` variables equals ``monomial_coef`` times
    the product of ``monomial_vars`` (with multiplicities), plus
    ``constant_coef``.  Coefficient exponent vectors are over the principal
    generators y_1..y_n.
    """

    left: tuple[PiLabel, PiLabel]
    monomial_vars: tuple[tuple[PiLabel, int], ...]
    monomial_coef: tuple[int, ...]
    constant_coef: tuple[int, ...]


def primitive_relations(m: CartanMatrix, c: CoxeterElement) -> tuple[PrimitiveRelation, ...]:
    """Both closed-form families of primitive relations, one per label."""
    data = _data(m, c)
    n = m.n
    out = []
    for k in range(n):
        # Family through the fundamental weight: pair (-w_k, w_k).
        mono_vars: dict[PiLabel, int] = {}
        for i in range(n):
            if precedes(m, c, i, k):
                mono_vars[PiLabel(i, 0)] = -m.a[i][k]
            elif precedes(m, c, k, i):
                jstar = data.star[i]
                mono_vars[PiLabel(jstar, data.h[jstar])] = -m.a[i][k]
        out.append(
            PrimitiveRelation(
                left=(tau_inverse(m, c, PiLabel(k, 0)), PiLabel(k, 0)),
                monomial_vars=tuple(sorted(mono_vars.items())),
                monomial_coef=tuple(int(j == k) for j in range(n)),
                constant_coef=(0,) * n,
            )
        )
        # Rotating family: pairs (c^(q-1) w_k, c^q w_k) for 1 <= q <= h(k).
        for q in range(1, data.h[k] + 1):
            mono_vars = {}
            for i in range(n):
                if precedes(m, c, i, k):
                    mono_vars[PiLabel(i, q)] = -m.a[i][k]
                elif precedes(m, c, k, i):
                    mono_vars[PiLabel(i, q - 1)] = -m.a[i][k]
            diff = weight_as_root(
                m, data.weight_of[PiLabel(k, q - 1)] - data.weight_of[PiLabel(k, q)]
            )
            if diff is None:
                raise InternalCheckError("non-integral coefficient exponent")
            out.append(
                PrimitiveRelation(
                    left=(PiLabel(k, q - 1), PiLabel(k, q)),
                    monomial_vars=tuple(sorted(mono_vars.items())),
                    monomial_coef=(0,) * n,
                    constant_coef=diff.d,
                )
            )
    return tuple(out)
