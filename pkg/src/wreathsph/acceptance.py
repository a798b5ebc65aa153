"""The bundled acceptance suite: ten numbered criteria, each returning an
exact pass/fail verdict with timing.  Used by the command-line selftest and
by the test suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cyclo import CycNum, ONE, ZERO, cyc, zeta
from .groups import (
    bundled,
    fuse_classes,
    linear_characters,
    twisted_indicator,
)
from .partitions import (
    MultiPartition,
    Partition,
    doubling,
    multipartitions,
    partitions_of,
    strict_partitions,
)
from .symfunc import (
    jack_p_expr,
    p_inner_alpha,
    schurq_p_expr,
    sym_character,
)
from .spherical import (
    SphericalContext,
    build_table,
    coset_order,
    coset_order_brute,
    reconcile,
)
from .wreath import (
    PairedChar,
    coset_label_set,
    coset_rep,
    decompose_induced,
    epsilon_sign,
    hg_elements,
    in_hg,
    irrep_label_set,
    k_basis_sg2,
    type_class_size,
    w_identity,
    w_inv,
    w_mul,
    wreath_character,
    wreath_dim,
    wreath_order,
)

ALL_PI = ("triv", "delta", "iota", "delta-iota")


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"criterion {self.number:2d} [{mark}] {self.title} ({self.seconds:.1f}s){': ' + self.detail if self.detail else ''}"


def _result(number, title, t0, failures, note=""):
    detail = note if not failures else "; ".join(failures[:6]) + (
        f"; and {len(failures)-6} more" if len(failures) > 6 else ""
    )
    return CriterionResult(number, title, not failures, detail, time.time() - t0)


def criterion_1() -> CriterionResult:
    """Twisted indicator columns of the 48-element matrix group."""
    t0 = time.time()
    failures = []
    group, table = bundled("gl2f3")
    xi = table.row_by_name("chi2")
    got_plain = [twisted_indicator(table, 0, chi) for chi in range(8)]
    got_twist = [twisted_indicator(table, xi, chi) for chi in range(8)]
    if got_plain != [1, 1, 1, 1, 1, 0, 0, 1]:
        failures.append(f"plain indicator column {got_plain}")
    if got_twist != [0, 0, -1, 0, 0, -1, -1, -1]:
        failures.append(f"twisted indicator column {got_twist}")
    return _result(1, "twisted indicators, gl2f3", t0, failures)


def criterion_2() -> CriterionResult:
    """Counting identities for every bundled group and linear twist."""
    t0 = time.time()
    failures = []
    for name in ("c1", "c2", "c3", "c4", "c5", "c6", "q8", "gl2f3"):
        group, table = bundled(name)
        for xi in linear_characters(table):
            fus = fuse_classes(group, table, xi)
            s = fus.stats
            if Fraction(s["n_C"], 2) + s["n_xi"] != Fraction(s["n_C_xi_rows"], 2):
                failures.append(f"{name}/{table.names[xi]}: class-count identity")
            if s["n_R"] - 2 * s["n_xi"] != s["n_R_xi_rows"]:
                failures.append(f"{name}/{table.names[xi]}: real-count identity")
            if s["n_R_xi_rows"] + Fraction(s["n_C_xi_rows"], 2) != s[
                "n_starstar"
            ] - s["n_xi"]:
                failures.append(f"{name}/{table.names[xi]}: merged-count identity")
    group, table = bundled("gl2f3")
    s = fuse_classes(group, table, table.row_by_name("chi2")).stats
    if (s["n_xi"], s["n_C"], s["n_C_xi_rows"]) != (1, 2, 4):
        failures.append(f"gl2f3 stats {s}")
    return _result(2, "counting identities, all bundled twists", t0, failures)


def criterion_3() -> CriterionResult:
    """The four classical decompositions over the trivial base group."""
    t0 = time.time()
    failures = []
    group, table = bundled("c1")
    expected = {
        "triv": lambda n: {
            MultiPartition([Partition(tuple(2 * p for p in lam))])
            for lam in partitions_of(n)
        },
        "delta": lambda n: {
            MultiPartition([Partition(tuple(2 * p for p in lam)).transpose()])
            for lam in partitions_of(n)
        },
        "iota": lambda n: {
            MultiPartition([doubling(mu)]) for mu in strict_partitions(n)
        },
        "delta-iota": lambda n: {
            MultiPartition([doubling(mu).transpose()]) for mu in strict_partitions(n)
        },
    }
    for pi in ALL_PI:
        for n in (1, 2, 3):
            dec = decompose_induced(table, PairedChar(table, 0, pi, n))
            if set(dec.values()) != {1}:
                failures.append(f"{pi} n={n}: multiplicities {sorted(set(dec.values()))}")
            if set(dec) != expected[pi](n):
                failures.append(f"{pi} n={n}: support mismatch")
    return _result(3, "classical decompositions, trivial base group", t0, failures)


def _gelfand_configs():
    for name, ns in (("c2", (1, 2, 3)), ("c3", (1, 2)), ("c4", (1, 2)), ("q8", (1, 2))):
        group, table = bundled(name)
        for xi in linear_characters(table):
            for pi in ALL_PI:
                for n in ns:
                    yield name, group, table, xi, pi, n


def criterion_4() -> CriterionResult:
    """Multiplicity-free decompositions with the predicted support."""
    t0 = time.time()
    failures = []
    for name, group, table, xi, pi, n in _gelfand_configs():
        fus = fuse_classes(group, table, xi)
        dec = decompose_induced(table, PairedChar(table, xi, pi, n))
        expected = set(irrep_label_set(table, fus, xi, pi, n))
        if set(dec.values()) - {1}:
            failures.append(f"{name}/{table.names[xi]}/{pi}/n={n}: multiplicity > 1")
        if set(dec) != expected:
            failures.append(f"{name}/{table.names[xi]}/{pi}/n={n}: support mismatch")
        index = wreath_order(group, 2 * n) // (
            group.order**n * 2**n * factorial(n)
        )
        if sum(wreath_dim(table, lam) for lam in dec) != index:
            failures.append(f"{name}/{table.names[xi]}/{pi}/n={n}: dimension sum")
    return _result(4, "induced-character decompositions, n up to 2 (3 for c2)", t0, failures)


def criterion_5() -> CriterionResult:
    """Averaged basis elements vanish exactly off the predicted label set."""
    t0 = time.time()
    failures = []
    for name, ns in (("c2", (1, 2)), ("c3", (1, 2)), ("c4", (1, 2)), ("q8", (1, 2))):
        group, table = bundled(name)
        lin = linear_characters(table)
        fus0 = fuse_classes(group, table, 0)
        for n in ns:
            hg = hg_elements(group, n)
            all_rhos = multipartitions(len(fus0.merged), n)
            pair_cache = {}
            for rho in all_rhos:
                x = coset_rep(group, fus0, rho)
                xinv = w_inv(group, x)
                pairs = []
                for h in hg:
                    k = w_mul(group, w_mul(group, xinv, w_inv(group, h)), x)
                    if in_hg(k):
                        pairs.append((h, k))
                pair_cache[rho] = pairs
            for xi in lin:
                for pi in ALL_PI:
                    theta = PairedChar(table, xi, pi, n)
                    legal = set(
                        coset_label_set(table, fus0, xi, epsilon_sign(pi), n)
                    )
                    for rho, pairs in pair_cache.items():
                        tot = ZERO
                        for h, k in pairs:
                            tot = tot + theta.value(h).conjugate() * theta.value(
                                k
                            ).conjugate()
                        if bool(tot) != (rho in legal):
                            failures.append(
                                f"{name}/{table.names[xi]}/{pi}/n={n}: {rho}"
                            )
    # the degree-2 case of the matrix group: explicit basis of the double-coset algebra
    group, table = bundled("gl2f3")
    xi = table.row_by_name("chi2")
    fus = fuse_classes(group, table, xi)
    minus_one = CycNum.rational(-1)
    expected_vanish = {
        i
        for i, m in enumerate(fus.merged)
        if m.real and table.value(xi, m.rep_element) == minus_one
    }
    for eps in (1, -1):
        kb = k_basis_sg2(group, table, xi, eps)
        vanish = {i for i, (is_zero, _) in kb.items() if is_zero}
        if vanish != expected_vanish:
            failures.append(f"gl2f3 basis vanishing set {vanish} != {expected_vanish}")
        for i, (is_zero, coef) in kb.items():
            m = fus.merged[i]
            zc = group.centralizer_orders[m.classes[0]]
            if m.real and table.value(xi, m.rep_element) == minus_one:
                want = ZERO
            elif m.real:
                want = CycNum.rational(2 * zc)
            else:
                want = CycNum.rational(zc)
            if coef != want:
                failures.append(f"gl2f3 basis coefficient at merged {i}: {coef}")
    return _result(5, "double-coset basis support, n up to 2", t0, failures)


def criterion_6() -> CriterionResult:
    """Row and column label sets have equal size for every bundled twist."""
    t0 = time.time()
    failures = []
    for name in ("c1", "c2", "c3", "c4", "c5", "c6", "q8", "gl2f3"):
        group, table = bundled(name)
        for xi in linear_characters(table):
            fus = fuse_classes(group, table, xi)
            for pi in ALL_PI:
                for n in (1, 2, 3, 4):
                    a = len(irrep_label_set(table, fus, xi, pi, n))
                    b = len(coset_label_set(table, fus, xi, epsilon_sign(pi), n))
                    if a != b:
                        failures.append(
                            f"{name}/{table.names[xi]}/{pi}/n={n}: {a} vs {b}"
                        )
    return _result(6, "label-set cardinalities, n up to 4, all bundled", t0, failures)


def _reconcile_configs():
    out = []
    for xi in (0, 1):
        for pi in ALL_PI:
            for n in (1, 2):
                out.append(("c2", xi, pi, n))
    for pi in ("triv", "iota"):
        out.append(("q8", 1, pi, 1))
    for pi in ALL_PI:
        for n in (1, 2, 3):
            out.append(("c1", 0, pi, n))
    return out


def criterion_7() -> CriterionResult:
    """Cross-engine reconciliation produces no mismatches."""
    t0 = time.time()
    failures = []
    for name, xi, pi, n in _reconcile_configs():
        group, table = bundled(name)
        ctx = SphericalContext(group, table, xi, pi, n)
        rep = reconcile(ctx)
        if not rep.ok():
            failures.append(
                f"{name}/{table.names[xi]}/{pi}/n={n}: {len(rep.mismatches)} mismatches"
            )
    return _result(7, "cross-engine reconciliation", t0, failures)


def criterion_8() -> CriterionResult:
    """Order-2 base group: the table equals the stated diagonal scaling of the
    symmetric-group character table, with the transposed variant for the
    signed permutation characters."""
    t0 = time.time()
    failures = []
    group, table = bundled("c2")
    xi = 1  # the sign character
    for pi in ALL_PI:
        transposed = epsilon_sign(pi) == -1
        for n in (2, 3, 4):
            ctx = SphericalContext(group, table, xi, pi, n)
            tab = build_table(ctx, "brute")
            bad = 0
            negated = 0
            for i, lam in enumerate(ctx.rows):
                lam1 = lam[0]
                h = lam1.hook_product()
                for j, rho in enumerate(ctx.cols):
                    rhat = rho.hat()
                    chi = sym_character(
                        lam1.transpose() if transposed else lam1, rhat
                    )
                    pred = CycNum.rational(
                        Fraction(h * 2 ** len(rhat), 2**n * factorial(n)) * chi
                    )
                    got = tab.value(i, j)
                    if got != pred:
                        bad += 1
                        if got == pred * Fraction(-1):
                            negated += 1
            if bad:
                note = (
                    " (every cell equals the negated prediction)"
                    if negated == bad
                    else ""
                )
                failures.append(f"{pi}/n={n}: {bad} cells differ{note}")
    return _result(
        8,
        "diagonal factorization of the order-2 base-group tables",
        t0,
        failures,
        note="",
    )


def criterion_9() -> CriterionResult:
    """Double-coset order formula versus direct orbit enumeration."""
    t0 = time.time()
    failures = []
    for name, n in (("c2", 1), ("c4", 1), ("q8", 1), ("c2", 2)):
        group, table = bundled(name)
        ctx = SphericalContext(group, table, 0, "triv", n)
        total = 0
        for rho in multipartitions(len(ctx.fusion.merged), n):
            f = coset_order(ctx, rho)
            b = coset_order_brute(ctx, rho)
            total += f
            if f != b:
                failures.append(f"{name}/n={n}/{rho}: {f} != {b}")
        if total != wreath_order(group, 2 * n):
            failures.append(f"{name}/n={n}: orders sum to {total}")
    return _result(9, "double-coset orders vs orbits", t0, failures)


def criterion_10() -> CriterionResult:
    """Exact property suites: cyclotomic arithmetic, table orthogonality,
    normalization at the identity, character orthogonality, Jack and Q checks."""
    t0 = time.time()
    failures = []

    # cyclotomic field axioms on a deterministic sample
    rng = random.Random(20240811)
    def rand_cyc():
        n = rng.choice((1, 3, 4, 5, 8, 12))
        return cyc(
            n, {rng.randrange(n): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                for _ in range(rng.randint(1, 3))}
        )
    for _ in range(120):
        a, b, c = rand_cyc(), rand_cyc(), rand_cyc()
        if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
            failures.append("associativity")
        if a * (b + c) != a * b + a * c:
            failures.append("distributivity")
        if (a * b).conjugate() != a.conjugate() * b.conjugate():
            failures.append("conjugation hom")
        if a.conjugate().conjugate() != a:
            failures.append("conjugation involution")
    for n in (3, 4, 5, 8, 12):
        for k in range(n):
            z = zeta(n, k) * Fraction(3, 7)
            if z * z.inverse() != ONE:
                failures.append(f"inverse of 3/7 zeta_{n}^{k}")

    # orthogonality of every wreath character table constructed here:
    # degree up to 3 over the groups of order at most 8, degree 2 beyond
    from .cyclo import sum_products

    for name, nmax in (
        ("c2", 3), ("c3", 3), ("c4", 3), ("c5", 3), ("c6", 3), ("q8", 3),
        ("gl2f3", 2),
    ):
        group, table = bundled(name)
        for n in range(1, nmax + 1):
            lams = multipartitions(len(table.rows), n)
            taus = multipartitions(len(group.classes), n)
            vals = {
                (l, tau): wreath_character(table, l, tau) for l in lams for tau in taus
            }
            conj = {k: v.conjugate() for k, v in vals.items()}
            sizes = {tau: type_class_size(group, tau) for tau in taus}
            order = wreath_order(group, n)
            if sum(sizes.values()) != order:
                failures.append(f"{name}/n={n}: class sizes")
            for i, a in enumerate(lams):
                for b in lams[i:]:
                    tot = sum_products(
                        (vals[(a, tau)], conj[(b, tau)], sizes[tau]) for tau in taus
                    )
                    if tot != CycNum.rational(order if a == b else 0):
                        failures.append(f"{name}/n={n}: row orthogonality {a} {b}")
            for i, c in enumerate(taus):
                for d in taus[i:]:
                    tot = sum_products((vals[(l, c)], conj[(l, d)], 1) for l in lams)
                    want = order // sizes[c] if c == d else 0
                    if tot != CycNum.rational(want):
                        failures.append(f"{name}/n={n}: column orthogonality")

    # normalization at the identity element for every engine-admissible row
    for name, xi, pi, n in (("c2", 1, "triv", 2), ("c2", 1, "iota", 2),
                            ("q8", 1, "triv", 1), ("q8", 0, "iota", 1),
                            ("c4", 1, "delta", 1), ("c1", 0, "delta-iota", 2)):
        group, table = bundled(name)
        ctx = SphericalContext(group, table, xi, pi, n)
        for lam in ctx.rows:
            if ctx.brute_at_element(lam, w_identity(2 * n)) != ONE:
                failures.append(f"{name}/{pi}: normalization at {lam}")

    # symmetric-group character orthogonality up to weight 7
    for n in range(1, 8):
        for a in partitions_of(n):
            for b in partitions_of(n):
                tot = sum(
                    Fraction(
                        sym_character(a, r) * sym_character(b, r), r.aut_order()
                    )
                    for r in partitions_of(n)
                )
                if tot != (1 if a == b else 0):
                    failures.append(f"character orthogonality {a} {b}")

    # Jack orthogonality at parameters 2 and 1/2, weight up to 5
    for alpha in (Fraction(2), Fraction(1, 2)):
        for n in range(1, 6):
            ps = partitions_of(n)
            for i, a in enumerate(ps):
                for b in ps[i + 1 :]:
                    if p_inner_alpha(jack_p_expr(a, alpha), jack_p_expr(b, alpha), alpha):
                        failures.append(f"jack orthogonality {a} {b} at {alpha}")

    # odd support of the Q family up to weight 6
    for n in range(1, 7):
        for mu in strict_partitions(n):
            if not all(k.is_odd() for k in schurq_p_expr(mu)):
                failures.append(f"Q support {mu}")

    return _result(10, "exact property suites", t0, failures)


ALL_CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def run_criteria(numbers=None) -> list[CriterionResult]:
    chosen = numbers or range(1, len(ALL_CRITERIA) + 1)
    return [ALL_CRITERIA[i - 1]() for i in chosen]
