import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from wreathsph.cyclo import CycNum, ONE, ZERO
from wreathsph.groups import GroupError, bundled, fuse_classes, linear_characters
from wreathsph.partitions import MultiPartition, Partition, multipartitions, partitions_of
from wreathsph.wreath import (
    PairedChar,
    WreathElement,
    class_type,
    coset_label_set,
    coset_rep,
    cycle_type,
    decompose_induced,
    double_coset,
    double_step_element,
    epsilon_sign,
    hecke_basis_value,
    hg_elements,
    hyperoct_decompose,
    hyperoct_perms,
    in_hg,
    interleaved_cycle,
    irrep_label_set,
    k_basis_sg2,
    p_compose,
    p_from_transpositions,
    p_identity,
    p_inverse,
    perm_of_partition,
    pi_value,
    reversal_element,
    type_class_size,
    w_embed,
    w_identity,
    w_inv,
    w_mul,
    wreath_character,
    wreath_dim,
    wreath_order,
)

P = Partition
RNG = random.Random(7)


def random_element(group, n, rng=RNG):
    base = tuple(rng.randrange(group.order) for _ in range(n))
    perm = list(range(n))
    rng.shuffle(perm)
    return WreathElement(base, tuple(perm))


def test_group_laws():
    group, _ = bundled("q8")
    n = 3
    e = w_identity(n)
    for _ in range(40):
        x, y, z = (random_element(group, n) for _ in range(3))
        assert w_mul(group, w_mul(group, x, y), z) == w_mul(group, x, w_mul(group, y, z))
        assert w_mul(group, x, e) == x == w_mul(group, e, x)
        assert w_mul(group, x, w_inv(group, x)) == e


def test_class_type_examples():
    group, _ = bundled("q8")
    n = 3
    ident = class_type(group, w_identity(n))
    assert ident[0] == P((1, 1, 1)) and ident.weight == 3
    # a single full cycle carrying one nontrivial entry at the end
    g = 2  # a generator
    x = WreathElement((0,) * (2 * n - 1) + (g,), perm_of_partition(P((2 * n,))))
    t = class_type(group, x)
    assert t[group.class_of[g]] == P((2 * n,))


def test_class_type_conjugation_invariant():
    group, _ = bundled("c4")
    n = 4
    for _ in range(60):
        x = random_element(group, n)
        y = random_element(group, n)
        conj = w_mul(group, w_mul(group, y, x), w_inv(group, y))
        assert class_type(group, conj) == class_type(group, x)


def test_class_sizes_sum():
    for name, n in (("c2", 3), ("c3", 2), ("q8", 2)):
        group, _ = bundled(name)
        total = sum(
            type_class_size(group, tau)
            for tau in multipartitions(len(group.classes), n)
        )
        assert total == wreath_order(group, n)


def test_wreath_character_degenerate_cases():
    group, table = bundled("c4")
    # degree 1: the wreath product is the group itself
    for chi in range(4):
        lam = MultiPartition(
            [P((1,)) if i == chi else P() for i in range(4)]
        )
        for c in range(4):
            tau = MultiPartition([P((1,)) if i == c else P() for i in range(4)])
            assert wreath_character(table, lam, tau) == table.rows[chi][c]
    # the trivial label: value 1 at every class
    n = 2
    triv = MultiPartition([P((n,)), P(), P(), P()])
    for tau in multipartitions(4, n):
        assert wreath_character(table, triv, tau) == ONE


def test_wreath_dims():
    for name, n in (("c2", 3), ("q8", 2)):
        group, table = bundled(name)
        lams = multipartitions(len(table.rows), n)
        assert sum(wreath_dim(table, l) ** 2 for l in lams) == wreath_order(group, n)
        ident = class_type(group, w_identity(n))
        for l in lams:
            assert wreath_character(table, l, ident).as_int() == wreath_dim(table, l)


def test_hyperoct_order_and_membership():
    for n in (1, 2, 3, 4):
        perms = hyperoct_perms(n)
        assert len(perms) == 2**n * factorial(n)
        assert len(set(perms)) == len(perms)
        # centralizer property: each commutes with the fixed involution
        t = p_from_transpositions(2 * n, [(2 * i, 2 * i + 1) for i in range(n)])
        for sigma in perms[:: max(1, len(perms) // 24)]:
            assert p_compose(sigma, t) == p_compose(t, sigma)


def test_hyperoct_decompose_examples():
    swap = p_from_transpositions(2, [(0, 1)])
    eps, tau = hyperoct_decompose(swap)
    assert eps == (1,) and tau == (0,)
    assert pi_value("delta", swap) == -1 and pi_value("iota", swap) == 1
    cross = p_from_transpositions(4, [(0, 2), (1, 3)])
    eps, tau = hyperoct_decompose(cross)
    assert eps == (0, 0) and tau == (1, 0)
    assert pi_value("delta", cross) == 1 and pi_value("iota", cross) == -1
    with pytest.raises(GroupError):
        hyperoct_decompose((1, 2, 0, 3))


def test_pi_multiplicative():
    perms = hyperoct_perms(3)
    for _ in range(50):
        a, b = RNG.choice(perms), RNG.choice(perms)
        ab = p_compose(a, b)
        for pi in ("triv", "delta", "iota", "delta-iota"):
            assert pi_value(pi, ab) == pi_value(pi, a) * pi_value(pi, b)


def test_theta_examples_and_multiplicativity():
    group, table = bundled("c2")
    theta = PairedChar(table, 1, "iota", 1)
    assert theta.value(w_identity(2)) == ONE
    x = WreathElement((1, 1), p_from_transpositions(2, [(0, 1)]))
    assert theta.value(x) == CycNum.rational(-1)  # xi(g) * 1
    theta_d = PairedChar(table, 1, "delta", 1)
    assert theta_d.value(x) == ONE  # -xi(g)
    x2 = WreathElement((1, 1), p_identity(2))
    assert theta_d.value(x2) == CycNum.rational(-1)
    group, table = bundled("q8")
    for pi in ("triv", "delta", "iota", "delta-iota"):
        theta = PairedChar(table, 1, pi, 2)
        hg = hg_elements(group, 2)
        for _ in range(40):
            a, b = RNG.choice(hg), RNG.choice(hg)
            assert theta.value(w_mul(group, a, b)) == theta.value(a) * theta.value(b)


def test_theta_rejects_outside_subgroup():
    group, table = bundled("c2")
    theta = PairedChar(table, 1, "triv", 1)
    with pytest.raises(GroupError):
        theta.value(WreathElement((0, 1), p_identity(2)))


def test_block_permutation_anchor():
    p = perm_of_partition(P((4, 2, 2)))
    assert tuple(v + 1 for v in p) == (2, 3, 4, 1, 6, 5, 8, 7)


def test_coset_rep_anchor_order4_group():
    group, table = bundled("c4")
    fus = fuse_classes(group, table, 0)
    rho = MultiPartition([P(), P((1,)), P((2, 1))])
    x = coset_rep(group, fus, rho)
    assert x.base == (0, 1, 0, 0, 0, 2, 0, 2)
    assert tuple(v + 1 for v in x.perm) == (2, 1, 4, 5, 6, 3, 8, 7)


def test_coset_rep_identity_pattern():
    group, table = bundled("c2")
    fus = fuse_classes(group, table, 0)
    rho = MultiPartition([P((1, 1, 1)), P()])
    x = coset_rep(group, fus, rho)
    assert x.base == (0,) * 6
    assert tuple(v + 1 for v in x.perm) == (2, 1, 4, 3, 6, 5)


def test_double_coset_of_inverse_is_same():
    for name, n in (("c2", 2), ("q8", 1)):
        group, table = bundled(name)
        hg = hg_elements(group, n)
        for _ in range(6):
            x = random_element(group, 2 * n)
            assert double_coset(group, hg, x) == double_coset(
                group, hg, w_inv(group, x)
            )


def test_explicit_involution_identities():
    for m in (1, 2, 3, 4):
        x = reversal_element(m)
        y = double_step_element(m)
        tau = interleaved_cycle(m)
        sigma = perm_of_partition(P((2 * m,)))
        assert p_compose(p_compose(x, sigma), p_compose(y, x)) == sigma
        assert p_compose(p_compose(x, y), x) == tau
        eps, body = hyperoct_decompose(tau)
        assert eps == (0,) * m
        if m > 1:
            assert cycle_type(body) == P((m,))


def test_explicit_wreath_identities():
    group, _ = bundled("q8")
    g, z = 2, 4  # z g z^-1 = g^-1
    assert group.mul[group.mul[z][g]][group.inv[z]] == group.inv[g]
    for m in (2, 3, 4):
        gi_z = group.mul[group.inv[g]][z]
        zi_g = group.mul[group.inv[z]][g]
        a = WreathElement(tuple([gi_z] * (2 * m - 2) + [z, z]), reversal_element(m))
        b = WreathElement(tuple([0] * (2 * m - 1) + [g]), perm_of_partition(P((2 * m,))))
        c = WreathElement(
            tuple([zi_g] * (2 * m)),
            p_compose(double_step_element(m), reversal_element(m)),
        )
        assert w_mul(group, w_mul(group, a, b), c) == b
        prod = w_mul(group, a, c)
        assert prod == WreathElement(
            tuple([0] * (2 * m - 2) + [g, g]), interleaved_cycle(m)
        )
        assert in_hg(prod)


def test_index_sets_q8_shape():
    group, table = bundled("q8")
    fus = fuse_classes(group, table, 1)
    for pi in ("triv", "iota"):
        for n in (1, 2):
            for lam in irrep_label_set(table, fus, 1, pi, n):
                # shape (a, a, b, b, doubled-ish) up to the pairing convention
                assert lam[0] == lam[1] or lam[0] == lam[1].transpose()
                assert lam[2] == lam[3] or lam[2] == lam[3].transpose()
                if epsilon_sign(pi) == 1:
                    assert lam[0] == lam[1] and lam[2] == lam[3]


def test_index_sets_trivial_group():
    group, table = bundled("c1")
    fus = fuse_classes(group, table, 0)
    labels = irrep_label_set(table, fus, 0, "triv", 2)
    assert {l[0] for l in labels} == {P((4,)), P((2, 2))}


def test_decompose_degree_one_families():
    # degree-2 case: three families per the indicator values
    for name in ("c4", "q8"):
        group, table = bundled(name)
        from wreathsph.groups import twisted_indicator

        for xi in linear_characters(table):
            dec = decompose_induced(table, PairedChar(table, xi, "triv", 1))
            assert set(dec.values()) == {1}
            for lam in dec:
                sup = lam.support()
                if len(sup) == 2:
                    assert twisted_indicator(table, xi, sup[0]) == 0
                else:
                    (chi,) = sup
                    nu = twisted_indicator(table, xi, chi)
                    assert nu == 1 and lam[chi] == P((2,)) or (
                        nu == -1 and lam[chi] == P((1, 1))
                    )


def test_decompose_dimension_bookkeeping():
    group, table = bundled("c3")
    for xi in (0, 1):
        for pi in ("triv", "iota"):
            n = 2
            dec = decompose_induced(table, PairedChar(table, xi, pi, n))
            index = wreath_order(group, 2 * n) // (group.order**n * 2**n * factorial(n))
            assert sum(wreath_dim(table, lam) for lam in dec) == index


def test_hecke_vanishing_small():
    group, table = bundled("c4")
    fus = fuse_classes(group, table, 0)
    hg = hg_elements(group, 1)
    for xi in (0, 2):
        for pi in ("triv", "iota"):
            theta = PairedChar(table, xi, pi, 1)
            legal = set(coset_label_set(table, fus, xi, epsilon_sign(pi), 1))
            for rho in multipartitions(len(fus.merged), 1):
                v = hecke_basis_value(group, theta, coset_rep(group, fus, rho), hg)
                assert bool(v) == (rho in legal)


def test_k_basis_trivial_twist_never_vanishes():
    group, table = bundled("q8")
    kb = k_basis_sg2(group, table, 0, 1)
    assert not any(z for z, _ in kb.values())
    fus = fuse_classes(group, table, 0)
    for i, (z, coef) in kb.items():
        m = fus.merged[i]
        zc = group.centralizer_orders[m.classes[0]]
        assert coef == CycNum.rational(2 * zc if m.real else zc)


def test_wreath_table_golden_files():
    import json
    from pathlib import Path

    from wreathsph.wreath import wreath_table_json

    golden_dir = Path(__file__).parent / "golden"
    for name in ("c2", "c3", "q8"):
        group, table = bundled(name)
        payload = json.dumps(wreath_table_json(table, 2), indent=2, sort_keys=True) + "\n"
        assert payload == (golden_dir / f"{name}_wr_s2_table.json").read_text()


def test_paired_characters_are_distinct_at_degree_two():
    # 4 * (number of linear characters of G) pairwise-distinct functions
    for name in ("c2", "c3"):
        group, table = bundled(name)
        hg = hg_elements(group, 2)
        seen = set()
        for xi in linear_characters(table):
            for pi in ("triv", "delta", "iota", "delta-iota"):
                theta = PairedChar(table, xi, pi, 2)
                seen.add(tuple(theta.value(h) for h in hg))
        assert len(seen) == 4 * len(linear_characters(table))


def test_decompose_matrix_group_degree_two():
    # the 48-element matrix group at degree 2: all indicator values are -1
    # for the self-paired rows, so those components carry columns (1,1)
    group, table = bundled("gl2f3")
    from wreathsph.groups import twisted_indicator

    xi = table.row_by_name("chi2")
    fus = fuse_classes(group, table, xi)
    for pi in ("triv", "iota"):
        dec = decompose_induced(table, PairedChar(table, xi, pi, 1))
        assert set(dec.values()) == {1}
        assert set(dec) == set(irrep_label_set(table, fus, xi, pi, 1))
        for lam in dec:
            sup = lam.support()
            if len(sup) == 1:
                (chi,) = sup
                assert twisted_indicator(table, xi, chi) == -1
                assert lam[chi] == (
                    P((1, 1)) if pi == "triv" else P((2,)).transpose()
                )
