import json
from fractions import Fraction

import pytest

from wreathsph.cyclo import CycNum, ONE
from wreathsph.groups import (
    CapExceeded,
    CharacterTable,
    FiniteGroup,
    GroupError,
    bundled,
    bundled_group_path,
    bundled_names,
    bundled_table_path,
    fuse_classes,
    group_from_perm_gens,
    linear_characters,
    load_group,
    load_table,
    twisted_indicator,
    validate_table,
)


def test_load_cyclic_from_perm_gens():
    g = group_from_perm_gens("c6", [[2, 3, 4, 5, 6, 1]])
    assert g.order == 6
    assert len(g.classes) == 6


def test_bundled_groups_load_and_validate():
    for name in bundled_names():
        group, table = bundled(name)
        assert validate_table(group, table) == []
    g, _ = bundled("q8")
    assert g.order == 8 and len(g.classes) == 5
    g, _ = bundled("gl2f3")
    assert g.order == 48 and len(g.classes) == 8


def test_non_group_table_rejected():
    bad = [[0, 1], [1, 1]]  # second row is not a bijection / no inverse
    with pytest.raises(GroupError):
        FiniteGroup("bad", bad)
    nonassoc = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
    with pytest.raises(GroupError):
        FiniteGroup("bad", nonassoc)


def test_closure_cap():
    with pytest.raises(CapExceeded):
        group_from_perm_gens("big", [[2, 3, 4, 5, 6, 7, 8, 1]], cap=4)


def test_corrupted_table_reports_violation():
    group = load_group(bundled_group_path("q8"))
    obj = json.loads(bundled_table_path("q8").read_text())
    obj["chars"][4][1] = "2"  # break one degree-2 entry
    with pytest.raises(GroupError):
        load_table(obj, group)
    table = load_table(obj, group, validate=False)
    problems = validate_table(group, table)
    assert problems and any("orthogonality" in p for p in problems)


def test_linear_character_counts():
    _, tq = bundled("q8")
    assert len(linear_characters(tq)) == 4
    _, tg = bundled("gl2f3")
    assert len(linear_characters(tg)) == 2
    _, t6 = bundled("c6")
    assert len(linear_characters(t6)) == 6


def test_fusion_examples():
    g6, t6 = bundled("c6")
    f = fuse_classes(g6, t6, 1)
    assert f.stats["n_starstar"] == 4
    assert f.stats["n_eta_starstar"] == 3
    # odd-order abelian groups: every non-identity class is complex
    for name in ("c3", "c5"):
        g, t = bundled(name)
        f = fuse_classes(g, t, 0)
        assert f.stats["n_C"] == g.order - 1


def test_gl2f3_fusion_stats():
    g, t = bundled("gl2f3")
    f = fuse_classes(g, t, t.row_by_name("chi2"))
    assert f.stats["n_xi"] == 1
    assert f.stats["n_C"] == 2
    assert f.stats["n_C_xi_rows"] == 4
    # the two order-8 classes are mutually inverse and merge; all other
    # classes are self-inverse (recomputed from the group, not assumed)
    complex_merged = [m for m in f.merged if not m.real]
    assert len(complex_merged) == 1 and len(complex_merged[0].classes) == 2
    reps = {g.element_order(g.classes[c][0]) for c in complex_merged[0].classes}
    assert reps == {8}


def test_twisted_indicator_columns():
    g, t = bundled("gl2f3")
    xi = t.row_by_name("chi2")
    assert [twisted_indicator(t, 0, chi) for chi in range(8)] == [1, 1, 1, 1, 1, 0, 0, 1]
    assert [twisted_indicator(t, xi, chi) for chi in range(8)] == [0, 0, -1, 0, 0, -1, -1, -1]
    gq, tq = bundled("q8")
    assert twisted_indicator(tq, 0, 4) == -1
    assert twisted_indicator(tq, 1, 4) == 1
    g1, t1 = bundled("c1")
    assert twisted_indicator(t1, 0, 0) == 1


def test_indicator_dichotomy_everywhere():
    for name in bundled_names():
        group, table = bundled(name)
        for xi in linear_characters(table):
            for chi in range(len(table.rows)):
                nu = twisted_indicator(table, xi, chi)
                paired = table.conj_tensor_row(xi, chi) == chi
                assert (nu == 0) == (not paired)


def test_counting_identities_everywhere():
    for name in bundled_names():
        group, table = bundled(name)
        for xi in linear_characters(table):
            s = fuse_classes(group, table, xi).stats
            assert Fraction(s["n_C"], 2) + s["n_xi"] == Fraction(s["n_C_xi_rows"], 2)
            assert s["n_R"] - 2 * s["n_xi"] == s["n_R_xi_rows"]
            assert s["n_R_xi_rows"] + Fraction(s["n_C_xi_rows"], 2) == (
                s["n_starstar"] - s["n_xi"]
            )


def test_table_rejects_wrong_class_reps():
    group = load_group(bundled_group_path("q8"))
    obj = json.loads(bundled_table_path("q8").read_text())
    obj["classes"] = [0, 1, 2, 3, 4]
    with pytest.raises(GroupError):
        load_table(obj, group)


def test_class_structure_q8():
    g, _ = bundled("q8")
    assert [len(c) for c in g.classes] == [1, 1, 2, 2, 2]
    assert g.centralizer_orders == (8, 8, 4, 4, 4)
    # class of the inverse: quaternion units are conjugate to their inverses
    assert g.class_inverse == (0, 1, 2, 3, 4)
