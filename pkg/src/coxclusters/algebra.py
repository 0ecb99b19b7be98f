"""Seeds, tropical coefficients, mutation, and exchange-graph exploration.

A seed carries its cluster as exact Laurent polynomials in the initial
variables, a coefficient tuple of tropical monomials, and a
skew-symmetrizable exchange matrix.  Mutation evaluates the exchange
relation with tropical auxiliary addition and performs the division in the
Laurent ring exactly, checking that the remainder vanishes; exploration is a
breadth-first closure with canonical-form deduplication.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanMatrix
from .coxeter import (
    CoxeterElement,
    InternalCheckError,
    PiLabel,
    b_matrix,
    compatibility_degree,
    cyclical_move,
    h_vector,
    label_weight,
    pi_set,
    precedes,
    tau,
    tau_inverse,
    weight_label,
)
from .poly import InexactDivision, LaurentPoly, PolyRing
from .weyl import Root, Weight, weight_as_root

DEFAULT_CAP = 100_000


class CapExceeded(RuntimeError):
    """Exploration discovered more seeds than the configured cap."""


@dataclass(frozen=True)
class TropMonomial:
    """Element of a tropical semifield: an exponent vector over its generators."""

    exps: tuple[int, ...]

    def __mul__(self, other: "TropMonomial") -> "TropMonomial":
        return TropMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "TropMonomial":
        return TropMonomial(tuple(a * k for a in self.exps))

    def inverse(self) -> "TropMonomial":
        return self ** -1

    def oplus_one(self) -> "TropMonomial":
        """Tropical sum with 1: componentwise min against the zero vector."""
        return TropMonomial(tuple(min(a, 0) for a in self.exps))

    def pos_part(self) -> tuple[int, ...]:
        return tuple(max(a, 0) for a in self.exps)

    def neg_part(self) -> tuple[int, ...]:
        return tuple(max(-a, 0) for a in self.exps)

    def is_one(self) -> bool:
        return all(a == 0 for a in self.exps)


@dataclass(frozen=True)
class Seed:
    """Labelled seed: cluster, coefficient tuple, exchange matrix.

    ``ring`` holds the ambient Laurent slots: the first ``n`` names are the
    initial cluster variables, the rest the semifield generators.
    """

    ring: PolyRing
    n: int
    cluster: tuple[LaurentPoly, ...]
    coeffs: tuple[TropMonomial, ...]
    B: tuple[tuple[int, ...], ...]

    @property
    def gens(self) -> tuple[str, ...]:
        return self.ring.names[self.n:]

    def coeff_monomial(self, trop: TropMonomial | tuple[int, ...], coef: int = 1) -> LaurentPoly:
        exps = trop.exps if isinstance(trop, TropMonomial) else trop
        return self.ring.monomial((0,) * self.n + tuple(exps), coef)


def _mutate_b(B, k: int):
    n = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-B[i][j])
            else:
                row.append(
                    B[i][j]
                    + max(B[i][k], 0) * max(B[k][j], 0)
                    - max(-B[i][k], 0) * max(-B[k][j], 0)
                )
        out.append(tuple(row))
    return tuple(out)


def _mutate_coeffs(coeffs, B, k: int):
    yk = coeffs[k]
    hat = yk.oplus_one()
    out = []
    for j, yj in enumerate(coeffs):
        if j == k:
            out.append(yk.inverse())
        else:
            bkj = B[k][j]
            out.append(yj * yk ** max(bkj, 0) * hat ** (-bkj))
    return tuple(out)


def _exchange_numerator(s: Seed, k: int) -> LaurentPoly:
    yk = s.coeffs[k]
    t1 = s.coeff_monomial(yk.pos_part())
    t2 = s.coeff_monomial(yk.neg_part())
    for i in range(s.n):
        b = s.B[i][k]
        if b > 0:
            t1 = t1 * s.cluster[i] ** b
        elif b < 0:
            t2 = t2 * s.cluster[i] ** (-b)
    return t1 + t2


def mutate(s: Seed, k: int) -> Seed:
    """Seed mutation in direction k; involutive, with verified exact division."""
    if not 0 <= k < s.n:
        raise IndexError(k)
    num = _exchange_numerator(s, k)
    try:
        new_var = num.exact_div(s.cluster[k])
    except InexactDivision as exc:
        raise InternalCheckError(f"exchange relation not Laurent in direction {k}") from exc
    cluster = list(s.cluster)
    cluster[k] = new_var
    return Seed(
        ring=s.ring,
        n=s.n,
        cluster=tuple(cluster),
        coeffs=_mutate_coeffs(s.coeffs, s.B, k),
        B=_mutate_b(s.B, k),
    )


def principal_seed(m: CartanMatrix, c: CoxeterElement) -> Seed:
    """Initial seed with one free tropical generator per cluster slot."""
    n = m.n
    ring = PolyRing(tuple(f"x{i + 1}" for i in range(n)) + tuple(f"y{i + 1}" for i in range(n)))
    unit = (0,) * n
    return Seed(
        ring=ring,
        n=n,
        cluster=tuple(ring.gen(i) for i in range(n)),
        coeffs=tuple(TropMonomial(tuple(int(i == j) for j in range(n))) for i in range(n)),
        B=b_matrix(m, c),
    )


# -- exploration ----------------------------------------------------------------


@dataclass(frozen=True)
class SeedView:
    """Canonical form of an unlabelled seed inside an exchange graph."""

    var_ids: tuple[int, ...]
    coeffs: tuple[TropMonomial, ...]
    B: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Relation:
    """Exchange relation: product of the two paired variables equals the sum of two sides.

    Each side is a coefficient exponent vector over the semifield generators
    together with a multiset of variable ids.
    """

    pair: tuple[int, int]
    sides: tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...]], ...]

    def is_primitive(self) -> bool:
        return any(not vars_ for _, vars_ in self.sides)


@dataclass(frozen=True)
class ExchangeGraph:
    ring: PolyRing
    n: int
    variables: tuple[LaurentPoly, ...]
    seeds: tuple[SeedView, ...]
    edges: tuple[tuple[int, int], ...]
    relations: tuple[Relation, ...]

    def primitive_relations(self) -> tuple[Relation, ...]:
        return tuple(r for r in self.relations if r.is_primitive())


def explore(seed: Seed, cap: int = DEFAULT_CAP) -> ExchangeGraph:
    """Breadth-first closure of a seed under all mutations.

    Seeds are deduplicated by canonical form (cluster sorted in the canonical
    polynomial order, coefficients and exchange matrix permuted along); the
    output ordering is canonical and independent of traversal schedule.
    """
    n = seed.n
    variables: list[LaurentPoly] = []
    var_ids: dict = {}

    def intern(p: LaurentPoly) -> int:
        vid = var_ids.get(p.key())
        if vid is None:
            vid = len(variables)
            var_ids[p.key()] = vid
            variables.append(p)
        return vid

    def canonical(cluster_ids, coeffs, B):
        order = sorted(range(n), key=lambda t: variables[cluster_ids[t]].key())
        ids = tuple(cluster_ids[t] for t in order)
        coeffs_p = tuple(coeffs[t] for t in order)
        B_p = tuple(tuple(B[a][b] for b in order) for a in order)
        return ids, coeffs_p, B_p

    start = canonical(tuple(intern(p) for p in seed.cluster), seed.coeffs, seed.B)
    visited: dict = {start: 0}
    seeds: list = [start]
    edges: set = set()
    relations: set = set()
    flip_cache: dict = {}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        cur_index = visited[current]
        ids, coeffs, B = current
        cluster = [variables[v] for v in ids]
        working = Seed(ring=seed.ring, n=n, cluster=tuple(cluster), coeffs=coeffs, B=B)
        for k in range(n):
            yk = coeffs[k]
            side_pos = (
                yk.pos_part(),
                tuple(sorted((ids[i], B[i][k]) for i in range(n) if B[i][k] > 0)),
            )
            side_neg = (
                yk.neg_part(),
                tuple(sorted((ids[i], -B[i][k]) for i in range(n) if B[i][k] < 0)),
            )
            cached = flip_cache.get((current, k))
            if cached is None:
                num = _exchange_numerator(working, k)
                try:
                    new_poly = num.exact_div(cluster[k])
                except InexactDivision as exc:
                    raise InternalCheckError(
                        f"exchange relation not Laurent at seed {cur_index}, direction {k}"
                    ) from exc
                new_id = intern(new_poly)
            else:
                new_id = cached
            new_ids = list(ids)
            new_ids[k] = new_id
            neighbor = canonical(
                tuple(new_ids), _mutate_coeffs(coeffs, B, k), _mutate_b(B, k)
            )
            idx = visited.get(neighbor)
            if idx is None:
                idx = len(seeds)
                if idx >= cap:
                    raise CapExceeded(f"seed cap {cap} exceeded")
                visited[neighbor] = idx
                seeds.append(neighbor)
                queue.append(neighbor)
            flip_cache[(neighbor, neighbor[0].index(new_id))] = ids[k]
            edges.add((min(cur_index, idx), max(cur_index, idx)))
            relations.add(
                Relation(
                    pair=tuple(sorted((ids[k], new_id))),
                    sides=tuple(sorted((side_pos, side_neg))),
                )
            )

    # Canonical output ordering, independent of discovery order.
    order = sorted(range(len(variables)), key=lambda v: variables[v].key())
    remap = {old: new for new, old in enumerate(order)}
    new_variables = tuple(variables[v] for v in order)

    def remap_seed(s):
        ids, coeffs, B = s
        pairs = sorted(range(n), key=lambda t: remap[ids[t]])
        return SeedView(
            var_ids=tuple(remap[ids[t]] for t in pairs),
            coeffs=tuple(coeffs[t] for t in pairs),
            B=tuple(tuple(B[a][b] for b in pairs) for a in pairs),
        )

    seed_views = [remap_seed(s) for s in seeds]
    seed_order = sorted(range(len(seed_views)), key=lambda i: (seed_views[i].var_ids,))
    seed_remap = {old: new for new, old in enumerate(seed_order)}
    new_seeds = tuple(seed_views[i] for i in seed_order)
    new_edges = tuple(
        sorted(tuple(sorted((seed_remap[a], seed_remap[b]))) for a, b in edges)
    )
    new_relations = tuple(
        sorted(
            (
                Relation(
                    pair=tuple(sorted(remap[v] for v in rel.pair)),
                    sides=tuple(
                        sorted(
                            (coef, tuple(sorted((remap[v], mult) for v, mult in vars_)))
                            for coef, vars_ in rel.sides
                        )
                    ),
                )
                for rel in relations
            ),
            key=lambda r: (r.pair, r.sides),
        )
    )
    return ExchangeGraph(
        ring=seed.ring,
        n=n,
        variables=new_variables,
        seeds=new_seeds,
        edges=new_edges,
        relations=new_relations,
    )


# -- records: g-vectors, denominators, F-polynomials ------------------------------


@dataclass(frozen=True)
class ClusterVariableRecord:
    label: PiLabel
    expansion: LaurentPoly
    g: Weight
    denom: Root
    fpoly: LaurentPoly


def _grading(m: CartanMatrix, c: CoxeterElement) -> list[tuple[int, ...]]:
    """Degree vector per ring slot: initial variables get unit weights, each
    generator the negated corresponding column of the exchange matrix."""
    n = m.n
    B = b_matrix(m, c)
    degs = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    degs += [tuple(-B[k][j] for k in range(n)) for j in range(n)]
    return degs


@lru_cache(maxsize=None)
def _fpoly_ring(n: int) -> PolyRing:
    return PolyRing(tuple(f"t{i + 1}" for i in range(n)))


def extract_record(m: CartanMatrix, c: CoxeterElement, z: LaurentPoly) -> ClusterVariableRecord:
    """Read the canonical data off a principal-coefficient expansion.

    The g-vector is the common multi-degree of all terms (homogeneity is
    asserted); the denominator vector collects minimal cluster exponents; the
    F-polynomial sets every cluster slot to 1.  The g-vector must name a
    labelled weight.
    """
    n = m.n
    degs = z.degrees(_grading(m, c))
    if len(degs) != 1:
        raise InternalCheckError("expansion is not homogeneous")
    g = Weight(next(iter(degs)))
    label = weight_label(m, c, g)  # KeyError here signals a bug upstream
    denom = Root(tuple(-z.min_exponent(i) for i in range(n)))
    fpoly = z.project(range(n, z.ring.nvars), _fpoly_ring(n))
    if fpoly.constant_coefficient() != 1:
        raise InternalCheckError("F-polynomial constant term is not 1")
    return ClusterVariableRecord(label=label, expansion=z, g=g, denom=denom, fpoly=fpoly)


def records_for(
    m: CartanMatrix, c: CoxeterElement, graph: ExchangeGraph
) -> tuple[ClusterVariableRecord, ...]:
    return tuple(extract_record(m, c, z) for z in graph.variables)


def check_separation(m: CartanMatrix, c: CoxeterElement, rec: ClusterVariableRecord,
                     ring: PolyRing) -> bool:
    """The expansion must factor as (cluster monomial to the g-vector) times
    the F-polynomial evaluated at the hatted coefficients."""
    n = m.n
    B = b_matrix(m, c)
    hat = []
    for j in range(n):
        exps = [B[i][j] for i in range(n)] + [int(k == j) for k in range(n)]
        hat.append(ring.monomial(exps))
    total = ring.zero()
    for exps, coef in rec.fpoly.terms.items():
        term = ring.monomial((0,) * ring.nvars, coef)
        for e, val in zip(exps, hat):
            if e:
                term = term * val ** e
        total = total + term
    gmono = ring.monomial(tuple(rec.g.g) + (0,) * n)
    return gmono * total == rec.expansion


def denominator_label_map(m: CartanMatrix, c: CoxeterElement) -> dict:
    """Map denominator vectors to labels (injective away from the initial cluster)."""
    out = {}
    for lab, w in pi_set(m, c):
        if lab.m == 0:
            d = [0] * m.n
            d[lab.i] = -1
            out[tuple(d)] = lab
        else:
            prev = label_weight(m, c, PiLabel(lab.i, lab.m - 1))
            diff = weight_as_root(m, prev - w)
            if diff is None:
                raise InternalCheckError("denominator not in root lattice")
            out[diff.d] = lab
    return out


def label_variables(
    m: CartanMatrix, c: CoxeterElement, graph: ExchangeGraph
) -> tuple[PiLabel, ...]:
    """Label every explored variable through its denominator vector.

    Works for any coefficient system, unlike the g-vector route.
    """
    table = denominator_label_map(m, c)
    labels = []
    for z in graph.variables:
        d = tuple(-z.min_exponent(i) for i in range(graph.n))
        lab = table.get(d)
        if lab is None:
            raise InternalCheckError(f"denominator vector {d} matches no labelled weight")
        labels.append(lab)
    return tuple(labels)


# -- universal coefficients ---------------------------------------------------------


def universal_gen_names(m: CartanMatrix, c: CoxeterElement) -> tuple[str, ...]:
    return tuple(f"p{lab.i + 1}_{lab.m}" for lab, _ in pi_set(m, c))


def universal_seed(m: CartanMatrix, c: CoxeterElement) -> Seed:
    """Initial seed over the tropical semifield with one generator per labelled weight."""
    n = m.n
    labels = [lab for lab, _ in pi_set(m, c)]
    index = {lab: pos for pos, lab in enumerate(labels)}
    gens = universal_gen_names(m, c)
    ring = PolyRing(tuple(f"x{i + 1}" for i in range(n)) + gens)
    coeffs = []
    for j in range(n):
        exps = [0] * len(labels)
        exps[index[PiLabel(j, 0)]] += 1
        exps[index[PiLabel(j, 1)]] -= 1
        for lab in labels:
            if lab == PiLabel(j, 0) or lab == PiLabel(j, 1):
                continue
            e = compatibility_degree(m, c, lab, PiLabel(j, 1))
            for i in range(n):
                if precedes(m, c, i, j):
                    e += m.a[i][j] * compatibility_degree(m, c, lab, PiLabel(i, 1))
            exps[index[lab]] += e
        coeffs.append(TropMonomial(tuple(exps)))
    return Seed(
        ring=ring,
        n=n,
        cluster=tuple(ring.gen(i) for i in range(n)),
        coeffs=tuple(coeffs),
        B=b_matrix(m, c),
    )


@dataclass(frozen=True)
class LabelledRelation:
    """Closed-form relation with labels in place of variable ids."""

    pair: tuple[PiLabel, PiLabel]
    sides: tuple[tuple[tuple[int, ...], tuple[tuple[PiLabel, int], ...]], ...]


def universal_primitive_relations(
    m: CartanMatrix, c: CoxeterElement
) -> tuple[LabelledRelation, ...]:
    """Primitive relations of the universal-coefficient algebra, one per label.

    The pair is (one backward rotation of delta, delta); the variable-bearing
    side carries the single generator indexed by delta, the constant side the
    product of all generators raised to their pairing against delta.
    """
    labels = [lab for lab, _ in pi_set(m, c)]
    index = {lab: pos for pos, lab in enumerate(labels)}
    h, _ = h_vector(m, c)
    out = []
    for delta in labels:
        prev = tau_inverse(m, c, delta)
        k, q = delta.i, delta.m
        mono_vars: dict[PiLabel, int] = {}
        for i in range(m.n):
            if precedes(m, c, i, k):
                lab = PiLabel(i, q) if q >= 1 else PiLabel(i, 0)
                mono_vars[lab] = -m.a[i][k]
            elif precedes(m, c, k, i):
                lab = PiLabel(i, q - 1) if q >= 1 else tau_inverse(m, c, PiLabel(i, 0))
                mono_vars[lab] = -m.a[i][k]
        mono_coef = [0] * len(labels)
        mono_coef[index[delta]] = 1
        const_coef = [compatibility_degree(m, c, lab, delta) for lab in labels]
        out.append(
            LabelledRelation(
                pair=tuple(sorted((prev, delta))),
                sides=tuple(
                    sorted(
                        (
                            (tuple(mono_coef), tuple(sorted(mono_vars.items()))),
                            (tuple(const_coef), ()),
                        )
                    )
                ),
            )
        )
    return tuple(out)


# -- coefficient specialization ---------------------------------------------------


@dataclass(frozen=True)
class SemifieldMap:
    """Monomial map between tropical semifields, one image per source generator."""

    source: tuple[str, ...]
    target: tuple[str, ...]
    images: tuple[tuple[int, ...], ...]

    @staticmethod
    def identity(gens: tuple[str, ...]) -> "SemifieldMap":
        k = len(gens)
        return SemifieldMap(
            source=gens,
            target=gens,
            images=tuple(tuple(int(a == b) for b in range(k)) for a in range(k)),
        )

    def validate(self) -> None:
        for img in self.images:
            if len(img) != len(self.target):
                raise ValueError("image exponent length mismatch")
            if any(e < 0 for e in img):
                raise ValueError("generator image has a negative exponent")
        for t in range(len(self.target)):
            hits = sum(1 for img in self.images if img[t] > 0)
            if hits > 1:
                raise ValueError(
                    f"two generator images share the factor {self.target[t]!r}"
                )

    def apply_exps(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(self.target)
        for e, img in zip(exps, self.images):
            if e:
                for t, x in enumerate(img):
                    if x:
                        out[t] += e * x
        return tuple(out)


def principal_specialization_map(m: CartanMatrix, c: CoxeterElement) -> SemifieldMap:
    """Send each fundamental-weight generator to the matching principal one, the rest to 1."""
    labels = [lab for lab, _ in pi_set(m, c)]
    target = tuple(f"y{i + 1}" for i in range(m.n))
    images = []
    for lab in labels:
        if lab.m == 0:
            images.append(tuple(int(j == lab.i) for j in range(m.n)))
        else:
            images.append((0,) * m.n)
    return SemifieldMap(source=universal_gen_names(m, c), target=target, images=tuple(images))


def specialize(s: Seed, hom: SemifieldMap) -> Seed:
    """Seed with coefficients pushed through a tropical semifield map.

    Cluster entries map coefficient-wise; across seeds the variables then
    correspond up to the usual scalar rescaling.
    """
    if s.gens != hom.source:
        raise ValueError("map source does not match the seed's generators")
    hom.validate()
    ring = PolyRing(s.ring.names[: s.n] + hom.target)
    def map_poly(p: LaurentPoly) -> LaurentPoly:
        out: dict = {}
        for exps, coef in p.terms.items():
            key = exps[: s.n] + hom.apply_exps(exps[s.n:])
            cnew = out.get(key, 0) + coef
            if cnew:
                out[key] = cnew
            else:
                out.pop(key, None)
        return LaurentPoly(ring, out)

    return Seed(
        ring=ring,
        n=s.n,
        cluster=tuple(map_poly(p) for p in s.cluster),
        coeffs=tuple(TropMonomial(hom.apply_exps(t.exps)) for t in s.coeffs),
        B=s.B,
    )


# -- source-rotation isomorphism ---------------------------------------------------


@dataclass(frozen=True)
class MoveReport:
    source: int
    b_matrix_ok: bool
    y_source_ok: bool
    y_others_ok: bool
    x_formula_ok: bool
    label_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.b_matrix_ok
            and self.y_source_ok
            and self.y_others_ok
            and self.x_formula_ok
            and self.label_ok
        )


def verify_move_isomorphism(
    m: CartanMatrix, c: CoxeterElement, source: int | None = None
) -> MoveReport:
    """Mutating the principal seed at a source must produce the rotated element's data.

    Checks the exchange matrix, the coefficient tuple (source generator
    inverted, neighbors multiplied by its positive powers), the closed form
    of the new variable, and its label.
    """
    if source is None:
        source = c.order[0]
    s0 = principal_seed(m, c)
    s1 = mutate(s0, source)
    ctilde = cyclical_move(m, c, source)
    b_ok = s1.B == b_matrix(m, ctilde)
    n = m.n
    y_src_ok = s1.coeffs[source].exps == tuple(-int(j == source) for j in range(n))
    y_others_ok = all(
        s1.coeffs[j].exps
        == tuple(int(t == j) - m.a[source][j] * int(t == source) for t in range(n))
        for j in range(n)
        if j != source
    )
    expected = s0.coeff_monomial(s0.coeffs[source])
    prod = s0.ring.one()
    for i in range(n):
        if i != source and m.a[i][source] != 0:
            prod = prod * s0.ring.gen(i) ** (-m.a[i][source])
    expected = (expected + prod) * s0.ring.gen(source) ** -1
    x_ok = s1.cluster[source] == expected
    label_ok = extract_record(m, c, s1.cluster[source]).label == PiLabel(source, 1)
    return MoveReport(
        source=source,
        b_matrix_ok=b_ok,
        y_source_ok=y_src_ok,
        y_others_ok=y_others_ok,
        x_formula_ok=x_ok,
        label_ok=label_ok,
    )
