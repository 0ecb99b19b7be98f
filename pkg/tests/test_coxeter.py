import itertools

import pytest

from coxclusters import (
    InvalidMove,
    PiLabel,
    Root,
    Weight,
    all_coxeter_elements,
    b_matrix,
    beta_roots,
    bipartite_element,
    bipartition,
    bipartition_of,
    cartan_from_label,
    cartan_from_text,
    clusters,
    compatibility_degree,
    coxeter_element,
    coxeter_number,
    cyclical_move,
    h_vector,
    label_weight,
    move_graph,
    pi_set,
    primitive_relations,
    psi_bipartite,
    psi_move,
    root_compat,
    simple_root,
    sources,
    tau,
    tau_inverse,
    weight_label,
)
from coxclusters import checks
from conftest import indecomposable_types


@pytest.fixture
def a2c(a2):
    return a2, coxeter_element(a2, (0, 1))


def test_canonicalization_merges_commuting_orders(a3):
    # 1,3 commute in the path graph, so the words (0,2,1) and (2,0,1) coincide.
    assert coxeter_element(a3, (0, 2, 1)) == coxeter_element(a3, (2, 0, 1))
    assert coxeter_element(a3, (0, 2, 1)).order == (0, 2, 1)


def test_b_matrix_standard_linear_order():
    for n in (2, 3, 4):
        m = cartan_from_label("A", n)
        B = b_matrix(m, coxeter_element(m, range(n)))
        for i in range(n):
            for j in range(n):
                expect = 1 if j == i + 1 else (-1 if j == i - 1 else 0)
                assert B[i][j] == expect


def test_b_matrix_reversed_a2(a2):
    assert b_matrix(a2, coxeter_element(a2, (1, 0))) == ((0, -1), (1, 0))


def test_b_matrix_rank_one():
    m = cartan_from_label("A", 1)
    assert b_matrix(m, coxeter_element(m, (0,))) == ((0,),)


def test_h_vector_standard_linear_order():
    for n in (2, 3, 4, 5):
        m = cartan_from_label("A", n)
        h, _ = h_vector(m, coxeter_element(m, range(n)))
        assert h == tuple(n + 1 - k for k in range(1, n + 1))


def test_h_vector_a2(a2c):
    m, c = a2c
    h, star = h_vector(m, c)
    assert h == (2, 1)
    assert star == (1, 0)


@pytest.mark.parametrize("letter,rank", indecomposable_types(6))
def test_bipartite_h_values(letter, rank):
    m = cartan_from_label(letter, rank)
    (res,) = checks.bipartite_h_values(m)
    assert res.passed, res


def test_coxeter_numbers():
    assert coxeter_number(cartan_from_label("A", 2)) == (3,)
    assert coxeter_number(cartan_from_label("A", 3)) == (4,)
    assert coxeter_number(cartan_from_label("G", 2)) == (6,)
    assert coxeter_number(cartan_from_text("A2xA1")) == (3, 2)


def test_beta_roots_a2(a2c):
    m, c = a2c
    betas = beta_roots(m, c)
    assert betas[0] == simple_root(2, 0)
    assert betas[1] == Root((1, 1))
    # Telescoping: beta_2 + a_{1,2} beta_1 = alpha_2.
    assert Root(tuple(betas[1].d[k] + m.a[0][1] * betas[0].d[k] for k in range(2))) == simple_root(2, 1)


def test_first_letter_beta_is_simple():
    m = cartan_from_label("D", 4)
    for c in all_coxeter_elements(m):
        first = c.order[0]
        assert beta_roots(m, c)[first] == simple_root(4, first)


def test_pi_set_a2(a2c):
    m, c = a2c
    weights = [w.g for _, w in pi_set(m, c)]
    assert weights == [(1, 0), (-1, 1), (0, -1), (0, 1), (-1, 0)]


@pytest.mark.parametrize("letter,rank", indecomposable_types(5))
def test_pi_size_formula(letter, rank):
    m = cartan_from_label(letter, rank)
    h = coxeter_number(m)[0]
    for c in all_coxeter_elements(m):
        assert len(pi_set(m, c)) == rank * (h + 2) // 2


def test_pi_set_a3_intervals(a3):
    # Linear order: 9 labelled weights matching the 9 proper intervals.
    c = coxeter_element(a3, (0, 1, 2))
    assert len(pi_set(a3, c)) == 9


def test_tau_cycle_a2(a2c):
    m, c = a2c
    orbit = [PiLabel(0, 0)]
    for _ in range(4):
        orbit.append(tau(m, c, orbit[-1]))
    assert orbit == [PiLabel(0, 0), PiLabel(0, 1), PiLabel(0, 2), PiLabel(1, 0), PiLabel(1, 1)]
    assert tau(m, c, PiLabel(1, 1)) == PiLabel(0, 0)


def test_tau_inverse_roundtrip(a3):
    c = coxeter_element(a3, (1, 0, 2))
    for lab, _ in pi_set(a3, c):
        assert tau_inverse(a3, c, tau(a3, c, lab)) == lab
        assert tau(a3, c, tau_inverse(a3, c, lab)) == lab


def test_tau_orbit_hits_fundamental(a3):
    c = coxeter_element(a3, (2, 1, 0))
    for lab, _ in pi_set(a3, c):
        cur = lab
        for _ in range(len(pi_set(a3, c))):
            if cur.m == 0:
                break
            cur = tau(a3, c, cur)
        assert cur.m == 0


def test_compatibility_examples(a2c):
    m, c = a2c
    # Pairing of the first fundamental weight against the rotated second: the
    # coefficient of alpha_1 in beta_2 = alpha_1 + alpha_2.
    assert compatibility_degree(m, c, PiLabel(0, 0), PiLabel(1, 1)) == 1
    for i in range(2):
        for j in range(2):
            assert compatibility_degree(m, c, PiLabel(i, 0), PiLabel(j, 0)) == 0
    assert compatibility_degree(m, c, PiLabel(0, 1), PiLabel(0, 0)) == 1


@pytest.mark.parametrize("spec", ["A3", "B3", "G2", "A2xA1"])
def test_compat_reduction_direction_agrees(spec):
    m = cartan_from_text(spec)
    for c in all_coxeter_elements(m):
        (res,) = checks.compat_reduction_agreement(m, c)
        assert res.passed, res


def test_clusters_counts(a2c, a3):
    m, c = a2c
    pentagon = clusters(m, c)
    assert len(pentagon) == 5
    assert tuple(sorted([PiLabel(0, 0), PiLabel(1, 0)])) in pentagon
    hexagon = clusters(a3, coxeter_element(a3, (0, 1, 2)))
    assert len(hexagon) == 14


def test_cyclical_move_rotation(a3):
    c = coxeter_element(a3, (0, 1, 2))
    # Rotating the first letter to the end, up to commuting letters.
    assert cyclical_move(a3, c) == coxeter_element(a3, (1, 2, 0))
    with pytest.raises(InvalidMove):
        cyclical_move(a3, c, source=2)


def test_move_graph_sizes(a2, a3):
    g2 = move_graph(a2)
    assert len(g2.elements) == 2 and g2.is_connected()
    g3 = move_graph(a3)
    assert len(g3.elements) == 4 and g3.is_connected()


@pytest.mark.parametrize("spec", ["A4", "B3", "D4", "G2"])
def test_move_update_rule(spec):
    m = cartan_from_text(spec)
    for res in checks.move_update_rule(m):
        assert res.passed, res


def test_psi_move_on_fundamentals(a3):
    c = coxeter_element(a3, (0, 1, 2))
    ct = cyclical_move(a3, c, 0)
    for i in (1, 2):
        assert psi_move(a3, c, ct, PiLabel(i, 0), 0) == PiLabel(i, 0)
    assert psi_move(a3, c, ct, PiLabel(0, 0), 0) == PiLabel(0, 1)
    with pytest.raises(InvalidMove):
        psi_move(a3, c, coxeter_element(a3, (2, 1, 0)), PiLabel(0, 0))


@pytest.mark.parametrize("spec", ["A3", "B3", "A2xA1"])
def test_psi_move_equivariance_and_transport(spec):
    m = cartan_from_text(spec)
    for c in all_coxeter_elements(m):
        for s in sources(m, c):
            for res in checks.move_transport(m, c, s):
                assert res.passed, res


def test_bipartition_of_requires_bipartite(a3):
    t = bipartite_element(a3)
    assert bipartition_of(a3, t) == bipartition(a3)
    with pytest.raises(InvalidMove):
        bipartition_of(a3, coxeter_element(a3, (0, 1, 2)))


def test_psi_bipartite_values(a2):
    t = bipartite_element(a2)  # the linear order is bipartite in rank 2
    for i in range(2):
        assert psi_bipartite(a2, t, PiLabel(i, 0)) == Root(tuple(-int(k == i) for k in range(2)))
    assert psi_bipartite(a2, t, PiLabel(0, 1)) == simple_root(2, 0)


def test_root_compat_negative_simple(a2):
    assert root_compat(a2, Root((-1, 0)), simple_root(2, 0)) == 1
    assert root_compat(a2, Root((-1, 0)), Root((0, -1))) == 0


@pytest.mark.parametrize("spec", ["A2", "A3", "B3", "G2"])
def test_bipartite_oracle(spec):
    m = cartan_from_text(spec)
    (res,) = checks.bipartite_compat_oracle(m)
    assert res.passed, res


@pytest.mark.parametrize("spec", ["B3", "G2"])
def test_duality_swaps_arguments(spec):
    m = cartan_from_text(spec)
    for c in all_coxeter_elements(m):
        (res,) = checks.compat_duality(m, c)
        assert res.passed, res


@pytest.mark.parametrize("spec", ["A2", "A3", "B2", "B3", "G2"])
def test_compat_linear_identity(spec):
    m = cartan_from_text(spec)
    for c in all_coxeter_elements(m):
        (res,) = checks.compat_linear_identity(m, c)
        assert res.passed, res


@pytest.mark.parametrize("spec", ["A2", "A3", "B2", "C3", "G2", "D4"])
def test_orbit_representatives(spec):
    m = cartan_from_text(spec)
    for c in all_coxeter_elements(m):
        (res,) = checks.orbit_representatives(m, c)
        assert res.passed, res


def test_primitive_relations_a2(a2c):
    m, c = a2c
    rels = {tuple(sorted(r.left)): r for r in primitive_relations(m, c)}
    assert len(rels) == 5
    # Through the first fundamental weight: coefficient y_1, constant 1, one
    # copy of the variable at minus the second fundamental weight.
    r = rels[tuple(sorted((PiLabel(1, 1), PiLabel(0, 0))))]
    assert r.monomial_coef == (1, 0)
    assert r.constant_coef == (0, 0)
    assert r.monomial_vars == ((PiLabel(0, 2), 1),)
    # First rotation pair: constant exponent vector is the denominator alpha_1.
    r = rels[(PiLabel(0, 0), PiLabel(0, 1))]
    assert r.monomial_coef == (0, 0)
    assert r.constant_coef == (1, 0)
    assert r.monomial_vars == ((PiLabel(1, 0), 1),)


def test_primitive_relation_constants_are_denominators(a3):
    c = coxeter_element(a3, (0, 2, 1))
    for r in primitive_relations(a3, c):
        first, second = r.left
        if r.monomial_coef == (0, 0, 0):
            gamma = max(first, second, key=lambda lab: lab.m)
            prev = tau_inverse(a3, c, gamma)
            from coxclusters import weight_as_root

            diff = weight_as_root(a3, label_weight(a3, c, prev) - label_weight(a3, c, gamma))
            assert r.constant_coef == diff.d


def test_standard_linear_relation_shape():
    # In the linear order the relation through each fundamental weight pairs
    # the complementary interval variables with a single generator.
    n = 4
    m = cartan_from_label("A", n)
    c = coxeter_element(m, range(n))
    rels = {tuple(sorted(r.left)): r for r in primitive_relations(m, c)}
    for k in range(n):
        pair = tuple(sorted((PiLabel(k, 0), tau_inverse(m, c, PiLabel(k, 0)))))
        r = rels[pair]
        assert r.monomial_coef == tuple(int(t == k) for t in range(n))
        assert r.constant_coef == (0,) * n
