"""Wreath products G wr S_n: elements, class types, irreducible characters,
the doubled-base subgroup of G wr S_2n with its linear characters, double
coset representatives, and the induced-character decomposition machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product as iproduct
from math import factorial

from .cyclo import CycNum, ONE, ZERO
from .groups import CapExceeded, CharacterTable, ClassFusion, FiniteGroup, GroupError
from .partitions import (
    MultiPartition,
    Partition,
    doubling,
    multipartitions,
    partitions_of,
    strict_partitions,
)
from .symfunc import sym_character

Perm = tuple[int, ...]

PI_NAMES = ("triv", "delta", "iota", "delta-iota")


def epsilon_sign(pi: str) -> int:
    """+1 for the unsigned pair of linear characters, -1 for the signed pair."""
    if pi in ("triv", "delta"):
        return 1
    if pi in ("iota", "delta-iota"):
        return -1
    raise ValueError(f"unknown pi name {pi!r}; expected one of {PI_NAMES}")


# -- permutations -------------------------------------------------------------


def p_identity(n: int) -> Perm:
    return tuple(range(n))


def p_compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(i) = a(b(i))."""
    return tuple(a[b[i]] for i in range(len(a)))


def p_inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def p_cycles(perm: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(tuple(cyc))
    return cycles


def p_sign(perm: Perm) -> int:
    return (-1) ** sum(len(c) - 1 for c in p_cycles(perm))


def p_from_transpositions(n: int, pairs) -> Perm:
    out = list(range(n))
    for a, b in pairs:
        out[a], out[b] = out[b], out[a]
    return tuple(out)


def perm_of_partition(rho: Partition) -> Perm:
    """The block permutation with one full cycle per part, in part order."""
    out = []
    start = 0
    for p in rho:
        out.extend(list(range(start + 1, start + p)) + [start])
        start += p
    return tuple(out)


def cycle_type(perm: Perm) -> Partition:
    return Partition(sorted((len(c) for c in p_cycles(perm)), reverse=True))


# -- wreath elements -----------------------------------------------------------


@dataclass(frozen=True)
class WreathElement:
    """(g_1, ..., g_n : sigma) with g_i group-element indices, sigma one-line."""

    base: tuple[int, ...]
    perm: Perm

    def degree(self) -> int:
        return len(self.base)


def w_identity(n: int) -> WreathElement:
    return WreathElement((0,) * n, p_identity(n))


def w_mul(group: FiniteGroup, x: WreathElement, y: WreathElement) -> WreathElement:
    sinv = p_inverse(x.perm)
    base = tuple(group.mul[x.base[i]][y.base[sinv[i]]] for i in range(len(x.base)))
    return WreathElement(base, p_compose(x.perm, y.perm))


def w_inv(group: FiniteGroup, x: WreathElement) -> WreathElement:
    base = tuple(group.inv[x.base[x.perm[j]]] for j in range(len(x.base)))
    return WreathElement(base, p_inverse(x.perm))


def w_embed(blocks: list[tuple[WreathElement, int]]) -> WreathElement:
    """Concatenate wreath elements side by side on consecutive index blocks."""
    base: list[int] = []
    perm: list[int] = []
    offset = 0
    for x, size in blocks:
        assert len(x.base) == size
        base.extend(x.base)
        perm.extend(v + offset for v in x.perm)
        offset += size
    return WreathElement(tuple(base), tuple(perm))


def class_type(group: FiniteGroup, x: WreathElement) -> MultiPartition:
    """The conjugacy invariant: per group class, the cycle lengths of the
    permutation part whose cycle products land in that class."""
    per_class: list[list[int]] = [[] for _ in group.classes]
    sinv = p_inverse(x.perm)
    for cyc in p_cycles(x.perm):
        j = cyc[0]
        prod = 0
        cur = j
        for _ in cyc:
            prod = group.mul[prod][x.base[cur]]
            cur = sinv[cur]
        per_class[group.class_of[prod]].append(len(cyc))
    return MultiPartition(
        Partition(sorted(parts, reverse=True)) for parts in per_class
    )


def wreath_order(group: FiniteGroup, n: int) -> int:
    return group.order**n * factorial(n)


def type_centralizer_order(group: FiniteGroup, tau: MultiPartition) -> int:
    out = 1
    for c, part in enumerate(tau):
        zc = group.centralizer_orders[c]
        for r, m in part.multiplicities().items():
            out *= (r * zc) ** m * factorial(m)
    return out


def type_class_size(group: FiniteGroup, tau: MultiPartition) -> int:
    return wreath_order(group, tau.weight) // type_centralizer_order(group, tau)


# -- irreducible characters ------------------------------------------------------


def wreath_dim(table: CharacterTable, lam: MultiPartition) -> int:
    """Dimension of the irreducible indexed by a multipartition over rows."""
    n = lam.weight
    out = Fraction(factorial(n))
    for chi, part in enumerate(lam):
        out *= Fraction(table.degrees[chi] ** part.size, factorial(part.size))
        out *= part.dim_sym()
    assert out.denominator == 1
    return int(out)


@cache
def _value_distributions(parts: tuple[int, ...], q: int) -> tuple:
    """All ways to distribute a multiset of parts into q labelled buckets."""
    values: dict[int, int] = {}
    for p in parts:
        values[p] = values.get(p, 0) + 1

    def comps(total: int, slots: int):
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in comps(total - first, slots - 1):
                yield (first,) + rest

    dists = [tuple(() for _ in range(q))]
    for v, m in values.items():
        nxt = []
        for dist in dists:
            for comp in comps(m, q):
                nxt.append(
                    tuple(dist[i] + (v,) * comp[i] for i in range(q))
                )
        dists = nxt
    return tuple(dists)


def wreath_character(
    table: CharacterTable, lam: MultiPartition, tau: MultiPartition
) -> CycNum:
    """Character of the irreducible S(lam) at the class of type tau,
    by class fusion from the inner product of base blocks."""
    if lam.weight != tau.weight:
        raise ValueError("weight mismatch between label and class type")
    key = (lam, tau)
    cached = table._wreath_cache.get(key)
    if cached is not None:
        return cached
    group = table.group
    q = len(table.rows)
    weights = tuple(p.size for p in lam)
    # per class, distributions of its parts into q character buckets
    per_class = []
    for c, part in enumerate(tau):
        if part.size:
            per_class.append((c, _value_distributions(part.parts, q)))
    total = ZERO

    def rec(idx: int, acc_parts, acc_weight):
        nonlocal total
        if idx == len(per_class):
            if acc_weight != weights:
                return
            term_scalar = Fraction(1)
            term_cyc = ONE
            for chi in range(q):
                sub = MultiPartition(
                    Partition(sorted(acc_parts[chi][c], reverse=True))
                    for c in range(len(group.classes))
                )
                term_scalar /= type_centralizer_order(group, sub)
                term_scalar *= sym_character(lam[chi], sub.hat())
                for c in range(len(group.classes)):
                    ell = len(sub[c])
                    if ell:
                        term_cyc = term_cyc * table.rows[chi][c] ** ell
            if term_scalar:
                total = total + term_cyc * term_scalar
            return
        c, dists = per_class[idx]
        for dist in dists:
            new_parts = [dict(d) for d in acc_parts]
            new_weight = list(acc_weight)
            ok = True
            for chi in range(q):
                if dist[chi]:
                    new_weight[chi] += sum(dist[chi])
                    if new_weight[chi] > weights[chi]:
                        ok = False
                        break
                    new_parts[chi] = dict(acc_parts[chi])
                    new_parts[chi][c] = dist[chi]
            if ok:
                rec(idx + 1, new_parts, tuple(new_weight))

    empty = [{c: () for c in range(len(group.classes))} for _ in range(q)]
    rec(0, empty, (0,) * q)
    value = total * type_centralizer_order(group, tau)
    table._wreath_cache[key] = value
    return value


def wreath_table_json(table: CharacterTable, n: int) -> dict:
    """Deterministic full character table of the degree-n wreath product,
    suitable for golden-file regression dumps."""
    group = table.group
    lams = multipartitions(len(table.rows), n)
    taus = multipartitions(len(group.classes), n)
    class_names = [f"C{i+1}" for i in range(len(group.classes))]
    return {
        "format": 1,
        "group": group.name,
        "n": n,
        "order": wreath_order(group, n),
        "rows": [lam.to_json(table.names) for lam in lams],
        "classes": [tau.to_json(class_names) for tau in taus],
        "class_sizes": [type_class_size(group, tau) for tau in taus],
        "values": [
            [str(wreath_character(table, lam, tau)) for tau in taus] for lam in lams
        ],
    }


# -- the centralizer-type subgroup of S_2n and its characters ----------------------


def phi_embed(tau: Perm) -> Perm:
    """The block-diagonal embedding sending i to the pair block tau(i)."""
    n = len(tau)
    out = [0] * (2 * n)
    for i in range(n):
        out[2 * i] = 2 * tau[i]
        out[2 * i + 1] = 2 * tau[i] + 1
    return tuple(out)


def hyperoct_decompose(sigma: Perm) -> tuple[tuple[int, ...], Perm]:
    """Write sigma = prod_i (2i,2i+1)^eps_i . phi(tau); raises if impossible."""
    if len(sigma) % 2:
        raise ValueError("degree must be even")
    n = len(sigma) // 2
    tau = []
    for i in range(n):
        b0, b1 = sigma[2 * i] // 2, sigma[2 * i + 1] // 2
        if b0 != b1:
            raise GroupError(f"permutation does not preserve the pair blocks: {sigma}")
        tau.append(b0)
    tau = tuple(tau)
    if sorted(tau) != list(range(n)):
        raise GroupError(f"block action is not a permutation: {sigma}")
    rest = p_compose(sigma, p_inverse(phi_embed(tau)))
    eps = []
    for i in range(n):
        if rest[2 * i] == 2 * i and rest[2 * i + 1] == 2 * i + 1:
            eps.append(0)
        elif rest[2 * i] == 2 * i + 1 and rest[2 * i + 1] == 2 * i:
            eps.append(1)
        else:
            raise GroupError(f"residual part is not a block flip: {sigma}")
    return tuple(eps), tau


def in_hyperoct(sigma: Perm) -> bool:
    try:
        hyperoct_decompose(sigma)
        return True
    except GroupError:
        return False


@cache
def hyperoct_perms(n: int) -> tuple[Perm, ...]:
    """All elements of the centralizer of (01)(23)...(2n-2,2n-1) in S_2n."""
    from itertools import permutations

    out = []
    for tau in permutations(range(n)):
        body = phi_embed(tau)
        for eps in iproduct((0, 1), repeat=n):
            flips = p_from_transpositions(
                2 * n, [(2 * i, 2 * i + 1) for i in range(n) if eps[i]]
            )
            out.append(p_compose(flips, body))
    return tuple(out)


def pi_value(pi: str, sigma: Perm) -> int:
    """Value of one of the four linear characters of the centralizer subgroup."""
    eps, tau = hyperoct_decompose(sigma)
    if pi == "triv":
        return 1
    if pi == "delta":
        return (-1) ** sum(eps)
    if pi == "iota":
        return p_sign(tau)
    if pi == "delta-iota":
        return (-1) ** sum(eps) * p_sign(tau)
    raise ValueError(f"unknown pi name {pi!r}")


def hg_elements(
    group: FiniteGroup, n: int, cap_elements: int = 10**6
) -> list[WreathElement]:
    """The doubled-base subgroup of G wr S_2n, enumerated explicitly."""
    size = group.order**n * 2**n * factorial(n)
    if size > cap_elements:
        raise CapExceeded("cap-elements", cap_elements, size)
    perms = hyperoct_perms(n)
    out = []
    for gs in iproduct(range(group.order), repeat=n):
        base = tuple(gs[i // 2] for i in range(2 * n))
        for sigma in perms:
            out.append(WreathElement(base, sigma))
    return out


def in_hg(x: WreathElement) -> bool:
    base = x.base
    if any(base[2 * i] != base[2 * i + 1] for i in range(len(base) // 2)):
        return False
    return in_hyperoct(x.perm)


@dataclass(frozen=True)
class PairedChar:
    """A linear character of the doubled-base subgroup, indexed by a linear
    character of G and one of the four sign characters of the block centralizer."""

    table: CharacterTable
    xi: int
    pi: str
    n: int

    def __post_init__(self):
        if self.table.degrees[self.xi] != 1:
            raise GroupError("xi must be a linear character")
        if self.pi not in PI_NAMES:
            raise ValueError(f"unknown pi name {self.pi!r}")

    def value(self, x: WreathElement) -> CycNum:
        group = self.table.group
        base = x.base
        n = len(base) // 2
        if not in_hg(x):
            raise GroupError("element is not in the doubled-base subgroup")
        prod = 0
        for i in range(n):
            prod = group.mul[prod][base[2 * i]]
        return self.table.value(self.xi, prod) * pi_value(self.pi, x.perm)

    def name(self) -> str:
        return f"({self.table.names[self.xi]},{self.pi})"


# -- double coset representatives ---------------------------------------------------


def coset_rep(
    group: FiniteGroup, fusion: ClassFusion, rho: MultiPartition
) -> WreathElement:
    """The chosen representative: per part p at merged class R, a block of
    length 2p with base (1, ..., 1, g_R) and the full cycle on the block."""
    blocks = []
    for i, part in enumerate(rho):
        g = fusion.merged[i].rep_element
        for p in part:
            size = 2 * p
            base = (0,) * (size - 1) + (g,)
            blocks.append((WreathElement(base, perm_of_partition(Partition((size,)))), size))
    if not blocks:
        return w_identity(0)
    return w_embed(blocks)


def xi_on_merged(table: CharacterTable, fusion: ClassFusion, xi: int, i: int) -> CycNum:
    return table.value(xi, fusion.merged[i].rep_element)


def coset_label_set(
    table: CharacterTable, fusion: ClassFusion, xi: int, sign: int, n: int
) -> tuple[MultiPartition, ...]:
    """Multipartitions over merged classes indexing nonvanishing double cosets."""
    minus_one = CycNum.rational(-1)

    def family(i: int):
        real = fusion.merged[i].real
        xi_neg = real and xi_on_merged(table, fusion, xi, i) == minus_one
        if sign > 0:
            if xi_neg:
                return lambda w: (Partition(),) if w == 0 else ()
            return partitions_of
        if not real:
            return partitions_of
        if xi_neg:
            return lambda w: tuple(p for p in partitions_of(w) if p.is_even())
        return lambda w: tuple(p for p in partitions_of(w) if p.is_odd())

    families = [family(i) for i in range(len(fusion.merged))]
    from .partitions import multipartitions_constrained

    return multipartitions_constrained(families, n)


def _even_family(w: int) -> tuple[Partition, ...]:
    if w % 2:
        return ()
    return tuple(Partition(tuple(2 * p for p in lam)) for lam in partitions_of(w // 2))


def _even_t_family(w: int) -> tuple[Partition, ...]:
    return tuple(p.transpose() for p in _even_family(w))


def _dsp_family(w: int) -> tuple[Partition, ...]:
    if w % 2:
        return ()
    return tuple(doubling(mu) for mu in strict_partitions(w // 2))


def _dsp_t_family(w: int) -> tuple[Partition, ...]:
    return tuple(p.transpose() for p in _dsp_family(w))


def _self_row_family(nu: int, pi: str):
    plus = {"triv": _even_family, "delta": _even_t_family,
            "iota": _dsp_family, "delta-iota": _dsp_t_family}
    minus = {"triv": _even_t_family, "delta": _even_family,
             "iota": _dsp_t_family, "delta-iota": _dsp_family}
    return plus[pi] if nu == 1 else minus[pi]


def irrep_label_set(
    table: CharacterTable, fusion: ClassFusion, xi: int, pi: str, n: int
) -> tuple[MultiPartition, ...]:
    """Multipartitions over character rows indexing the components of the
    induced character of the paired subgroup."""
    from .groups import twisted_indicator

    q = len(table.rows)
    slots = []  # (kind, data)
    for chi in fusion.eta_reps:
        partner = fusion.row_partner[chi]
        if partner == chi:
            nu = twisted_indicator(table, xi, chi)
            slots.append(("self", chi, _self_row_family(nu, pi)))
        else:
            slots.append(("pair", chi, partner))

    results: list[MultiPartition] = []

    def rec(idx: int, rest: int, assign: dict[int, Partition]):
        if idx == len(slots):
            if rest == 0:
                parts = [assign.get(chi, Partition()) for chi in range(q)]
                results.append(MultiPartition(parts))
            return
        slot = slots[idx]
        if slot[0] == "self":
            _, chi, fam = slot
            for w in range(0, rest + 1):
                for lam in fam(w):
                    assign[chi] = lam
                    rec(idx + 1, rest - w, assign)
                assign.pop(chi, None)
        else:
            _, chi, partner = slot
            for w in range(0, rest // 2 + 1):
                for lam in partitions_of(w):
                    assign[chi] = lam
                    assign[partner] = lam if epsilon_sign(pi) == 1 else lam.transpose()
                    rec(idx + 1, rest - 2 * w, assign)
                assign.pop(chi, None)
                assign.pop(partner, None)

    rec(0, 2 * n, {})
    results.sort(key=MultiPartition.sort_key)
    return tuple(results)


# -- induced-character decomposition ---------------------------------------------


def theta_type_weights(
    group: FiniteGroup, theta: PairedChar, cap_elements: int = 10**6
) -> dict[MultiPartition, CycNum]:
    """Per class type of the big wreath product, the sum of conj(theta) over
    the subgroup elements of that type."""
    weights: dict[MultiPartition, CycNum] = {}
    for h in hg_elements(group, theta.n, cap_elements):
        t = class_type(group, h)
        weights[t] = weights.get(t, ZERO) + theta.value(h).conjugate()
    return {t: v for t, v in weights.items() if v}


def decompose_induced(
    table: CharacterTable,
    theta: PairedChar,
    cap_elements: int = 10**6,
    cap_classwork: int = 10**7,
) -> dict[MultiPartition, int]:
    """Multiplicities of every irreducible in the induced paired character,
    by the reciprocity sum over the subgroup.  Zero entries are omitted."""
    group = table.group
    n = theta.n
    hg_size = group.order**n * 2**n * factorial(n)
    weights = theta_type_weights(group, theta, cap_elements)
    work = len(multipartitions(len(table.rows), 2 * n)) * max(1, len(weights))
    if work > cap_classwork:
        raise CapExceeded("cap-classwork", cap_classwork, work)
    out: dict[MultiPartition, int] = {}
    for lam in multipartitions(len(table.rows), 2 * n):
        tot = ZERO
        for tau, w in weights.items():
            tot = tot + wreath_character(table, lam, tau) * w
        val = (tot * Fraction(1, hg_size)).try_rational()
        if val is None or val.denominator != 1 or val < 0:
            raise GroupError(f"non-integral multiplicity {tot} at {lam}")
        if val:
            out[lam] = int(val)
    return out


# -- Hecke algebra basics ------------------------------------------------------------


def hecke_basis_value(
    group: FiniteGroup,
    theta: PairedChar,
    x: WreathElement,
    hg: list[WreathElement] | None = None,
    cap_elements: int = 10**6,
) -> CycNum:
    """Value at x of the two-sided average e x e; zero iff the whole element
    vanishes, since the average is supported on the double coset of x."""
    if hg is None:
        hg = hg_elements(group, theta.n, cap_elements)
    xinv = w_inv(group, x)
    tot = ZERO
    for h in hg:
        k = w_mul(group, w_mul(group, xinv, w_inv(group, h)), x)
        if in_hg(k):
            tot = tot + theta.value(h).conjugate() * theta.value(k).conjugate()
    return tot * Fraction(1, len(hg) ** 2)


def double_coset(
    group: FiniteGroup, hg: list[WreathElement], x: WreathElement
) -> frozenset[WreathElement]:
    left = {w_mul(group, h, x) for h in hg}
    return frozenset(w_mul(group, y, h) for y in left for h in hg)


def k_basis_sg2(
    group: FiniteGroup, table: CharacterTable, xi: int, eps_sign: int
) -> dict[int, tuple[bool, CycNum]]:
    """For each merged class R, whether the averaged double-coset element at
    (1, g_R : id) vanishes, and the coefficient of (1, g_R : id) in it."""
    fusion_hg = hg_elements(group, 1)
    out: dict[int, tuple[bool, CycNum]] = {}
    from .groups import fuse_classes

    fusion = fuse_classes(group, table, xi)
    pi = "triv" if eps_sign == 1 else "delta"
    for i, m in enumerate(fusion.merged):
        g = m.rep_element
        center = WreathElement((0, g), p_identity(2))
        combo: dict[WreathElement, CycNum] = {}
        for a in fusion_hg:
            xa = w_mul(group, a, center)
            for b in fusion_hg:
                ab = w_mul(group, a, b)
                val = _theta_literal(table, xi, pi, group, ab)
                key = w_mul(group, xa, b)
                combo[key] = combo.get(key, ZERO) + val
        combo = {k: v for k, v in combo.items() if v}
        out[i] = (not combo, combo.get(center, ZERO))
    return out


def _theta_literal(table, xi, pi, group, x: WreathElement) -> CycNum:
    """xi(product) * eps(sigma) without conjugation, as in the summed average."""
    n = len(x.base) // 2
    prod = 0
    for i in range(n):
        prod = group.mul[prod][x.base[2 * i]]
    return table.value(xi, prod) * pi_value(pi, x.perm)


# -- explicit permutation identities ---------------------------------------------


def reversal_element(m: int) -> Perm:
    """The involution reversing the first 2m-2 points and swapping the last two."""
    pairs = [(k - 1, 2 * m - k - 2) for k in range(1, m)] + [(2 * m - 2, 2 * m - 1)]
    return p_from_transpositions(2 * m, pairs)


def double_step_element(m: int) -> Perm:
    """The inverse square of the full 2m-cycle."""
    full = perm_of_partition(Partition((2 * m,)))
    sq = p_compose(full, full)
    return p_inverse(sq)


def interleaved_cycle(m: int) -> Perm:
    """(1,3,...,2m-1)(0,2,...,2m-2) in 0-indexed one-line form."""
    out = [0] * (2 * m)
    for i in range(m):
        out[2 * i] = (2 * i + 2) % (2 * m)
        out[2 * i + 1] = (2 * i + 3) % (2 * m) if i < m - 1 else 1
    return tuple(out)
