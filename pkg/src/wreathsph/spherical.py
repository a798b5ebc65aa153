"""Spherical functions of the doubled-base Gelfand triples, by three
independent engines, plus double-coset orders, the characteristic map onto
multi-alphabet symmetric functions, and exact cross-engine reconciliation.

Engines:
  brute   -- group-algebra averaging of the big-group character over the
             subgroup (ground truth);
  closed  -- product formulas available when an irreducible label is
             concentrated on a single character block;
  symfunc -- coefficient extraction from products of classical symmetric
             functions (Jack at 2 and 1/2, Schur Q, Schur) pushed through
             the change of variables onto merged-class power sums.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from pathlib import Path

from .cyclo import CycNum, ONE, ZERO
from .groups import (
    CapExceeded,
    CharacterTable,
    FiniteGroup,
    GroupError,
    fuse_classes,
    twisted_indicator,
)
from .partitions import (
    MultiPartition,
    Partition,
    frobenius_coords,
    shifted_tableau_count,
)
from .symfunc import (
    PExpr,
    SymFuncElem,
    jack_p_expr,
    psi_twist,
    schur_p_expr,
    schurq_p_expr,
    sym_character,
)
from .wreath import (
    PairedChar,
    WreathElement,
    class_type,
    coset_label_set,
    coset_rep,
    cycle_type,
    double_coset,
    epsilon_sign,
    hg_elements,
    hyperoct_perms,
    irrep_label_set,
    p_compose,
    p_inverse,
    perm_of_partition,
    pi_value,
    w_identity,
    w_inv,
    w_mul,
    wreath_character,
    wreath_order,
)


@dataclass(frozen=True)
class Caps:
    """Enumeration limits; exceeding one raises CapExceeded."""

    max_elements: int = 10**6
    max_classwork: int = 10**7


PI_PARTNER_UNSIGNED = {"delta": "triv", "delta-iota": "iota"}
PI_TENSOR_DELTA = {"triv": "delta", "iota": "delta-iota"}


class SphericalContext:
    """Everything fixed by one choice of (group, table, xi, pi, n)."""

    def __init__(
        self,
        group: FiniteGroup,
        table: CharacterTable,
        xi: int,
        pi: str,
        n: int,
        caps: Caps = Caps(),
    ):
        self.group = group
        self.table = table
        self.xi = xi
        self.pi = pi
        self.n = n
        self.caps = caps
        self.fusion = fuse_classes(group, table, xi)
        self.theta = PairedChar(table, xi, pi, n)
        self.sign = epsilon_sign(pi)
        self.rows = irrep_label_set(table, self.fusion, xi, pi, n)
        self.cols = coset_label_set(table, self.fusion, xi, self.sign, n)
        if len(self.rows) != len(self.cols):
            raise GroupError(
                f"label sets disagree: {len(self.rows)} rows vs {len(self.cols)} cosets"
            )
        work = len(self.rows) * len(self.cols)
        if work > caps.max_classwork:
            raise CapExceeded("cap-classwork", caps.max_classwork, work)
        self.merged_names = tuple(f"R{i+1}" for i in range(len(self.fusion.merged)))
        self._brute_weights: dict[MultiPartition, dict] = {}
        self._nu: dict[int, int] = {}

    # -- shared precomputations -------------------------------------------------

    @cached_property
    def hg(self) -> list[WreathElement]:
        return hg_elements(self.group, self.n, self.caps.max_elements)

    @cached_property
    def hg_size(self) -> int:
        return self.group.order**self.n * 2**self.n * factorial(self.n)

    @cached_property
    def big_order(self) -> int:
        return wreath_order(self.group, 2 * self.n)

    def nu(self, chi: int) -> int:
        if chi not in self._nu:
            self._nu[chi] = twisted_indicator(self.table, self.xi, chi)
        return self._nu[chi]

    def rep(self, rho: MultiPartition) -> WreathElement:
        return coset_rep(self.group, self.fusion, rho)

    def unsigned_partner(self) -> "SphericalContext":
        """The context for the unsigned companion character (same Hecke algebra)."""
        pi0 = PI_PARTNER_UNSIGNED[self.pi]
        return SphericalContext(self.group, self.table, self.xi, pi0, self.n, self.caps)

    # -- brute engine --------------------------------------------------------------

    def _weights_at(self, x: WreathElement) -> dict[MultiPartition, CycNum]:
        """Class-type-bucketed sums conj(theta(h)) over h, evaluated at h*x^-1."""
        xinv = w_inv(self.group, x)
        weights: dict[MultiPartition, CycNum] = {}
        for h in self.hg:
            t = class_type(self.group, w_mul(self.group, h, xinv))
            w = self.theta.value(h).conjugate()
            weights[t] = weights.get(t, ZERO) + w
        return {t: v for t, v in weights.items() if v}

    def brute_at_element(self, lam: MultiPartition, x: WreathElement) -> CycNum:
        tot = ZERO
        for t, w in self._weights_at(x).items():
            tot = tot + wreath_character(self.table, lam, t) * w
        return tot * Fraction(1, self.hg_size)

    @cached_property
    def _row_set(self) -> frozenset:
        return frozenset(self.rows)

    def brute(self, lam: MultiPartition, rho: MultiPartition) -> CycNum:
        if lam not in self._row_set:
            raise GroupError(
                f"{lam} is not a component of the induced character; "
                "the averaged product vanishes identically"
            )
        key = rho
        if key not in self._brute_weights:
            self._brute_weights[key] = self._weights_at(self.rep(rho))
        tot = ZERO
        for t, w in self._brute_weights[key].items():
            tot = tot + wreath_character(self.table, lam, t) * w
        return tot * Fraction(1, self.hg_size)

    # -- block structure of a row label -----------------------------------------------

    def row_blocks(self, lam: MultiPartition) -> list[tuple[int, int, int]]:
        """(representative row, partner row, block weight) per paired block."""
        out = []
        for rep in self.fusion.eta_reps:
            partner = self.fusion.row_partner[rep]
            w = lam[rep].size + (lam[partner].size if partner != rep else 0)
            if w:
                out.append((rep, partner, w))
        return out


# -- classical two-group spherical values ---------------------------------------------


_classical_cache: dict = {}


def classical_spherical(shape: Partition, pi: str, rho_hat: Partition) -> Fraction:
    """Spherical value of the symmetric-group pair (S_2n, centralizer of a
    fixed-point-free involution) for the linear character pi, at the coset of
    the doubled-cycle permutation of rho_hat, by direct averaging."""
    key = (shape, pi, rho_hat)
    if key in _classical_cache:
        return _classical_cache[key]
    two_n = shape.size
    assert 2 * rho_hat.size == two_n
    target = perm_of_partition(Partition(tuple(2 * p for p in rho_hat)))
    tinv = p_inverse(target)
    total = Fraction(0)
    perms = hyperoct_perms(rho_hat.size)
    for h in perms:
        total += pi_value(pi, h) * sym_character(shape, cycle_type(p_compose(h, tinv)))
    val = total / len(perms)
    _classical_cache[key] = val
    return val


def delta_pair_spherical(
    table: CharacterTable, eta: int, chi: int, x: int, y: int
) -> CycNum:
    """Spherical function of (G x G, diagonal, lifted eta) at (x, y)."""
    group = table.group
    if table.degrees[eta] != 1:
        raise GroupError("eta must be linear")
    val = table.value(eta, group.inv[y]) * table.value(chi, group.mul[group.inv[x]][y])
    return val * Fraction(1, table.degrees[chi])


# -- closed-form engine ------------------------------------------------------------------


def _halve(lam: Partition) -> Partition:
    if not lam.is_even():
        raise ValueError(f"{lam} has an odd part")
    return Partition(tuple(p // 2 for p in lam))


def _undouble(lam: Partition) -> Partition:
    """Inverse of the strict-partition doubling."""
    arms, legs = frobenius_coords(lam)
    mu = Partition(arms)
    if not mu.is_strict() or legs != tuple(a - 1 for a in arms):
        raise ValueError(f"{lam} is not a doubled shape")
    return mu


def spherical_closed(
    ctx: SphericalContext, lam: MultiPartition, rho: MultiPartition
) -> CycNum | None:
    """Closed-form value, or None when no closed form applies (mixed rows)."""
    blocks = ctx.row_blocks(lam)
    if len(blocks) != 1:
        return None
    if ctx.pi in PI_PARTNER_UNSIGNED:
        # sign-twisted companion: value is the sign of the representative's
        # permutation part times the unsigned value at the transposed label
        sgn = (-1) ** len(rho.hat())
        val = spherical_closed(ctx.unsigned_partner(), lam.transpose(), rho)
        return None if val is None else val * sgn
    rep, partner, _ = blocks[0]
    table, group, fusion = ctx.table, ctx.group, ctx.fusion
    n = ctx.n
    rho_hat = rho.hat()
    if partner == rep:
        nu = ctx.nu(rep)
        shape = lam[rep]
        pi_eff = ctx.pi if nu == 1 else PI_TENSOR_DELTA[ctx.pi]
        omega = classical_spherical(shape, pi_eff, rho_hat)
        if not omega:
            return ZERO
        val = CycNum.rational(Fraction(nu**n) * omega)
        # the averaging engine fixes the orientation: the character is taken
        # at the inverse of the chosen class representative
        for i, m in enumerate(fusion.merged):
            ell = len(rho[i])
            if ell:
                val = val * table.value(rep, m.rep_element).conjugate() ** ell
        return val * Fraction(1, table.degrees[rep] ** n)
    # split pair: character-scaled product over parts
    lam_rep = lam[rep]
    chi_val = sym_character(lam_rep, rho_hat)
    dim = table.degrees[rep] ** n * lam_rep.dim_sym()
    val = CycNum.rational(Fraction(chi_val, 2**n * dim))
    xi_row = ctx.xi
    for i, m in enumerate(fusion.merged):
        g = m.rep_element
        a = table.value(xi_row, g).conjugate() * table.value(rep, g)
        b = table.value(rep, g).conjugate()
        for part, mult in rho[i].multiplicities().items():
            f = a + b * (ctx.sign ** (part - 1))
            val = val * f**mult
    return val


# -- double-coset orders --------------------------------------------------------------


def coset_order(ctx: SphericalContext, rho: MultiPartition) -> int:
    """Order of the double coset with the given label, by the product formula."""
    total = Fraction(ctx.hg_size**2)
    for i, m in enumerate(ctx.fusion.merged):
        part = rho[i]
        zc = ctx.group.centralizer_orders[m.classes[0]]
        if m.real:
            doubled = Partition(tuple(2 * p for p in part))
            total /= doubled.aut_order() * zc ** len(part)
        else:
            total /= part.aut_order() * zc ** len(part)
    assert total.denominator == 1
    return int(total)


def coset_order_brute(ctx: SphericalContext, rho: MultiPartition) -> int:
    if ctx.big_order > ctx.caps.max_elements:
        raise CapExceeded("cap-elements", ctx.caps.max_elements, ctx.big_order)
    return len(double_coset(ctx.group, ctx.hg, ctx.rep(rho)))


# -- characteristic map ------------------------------------------------------------------


def _radical_factor(ctx: SphericalContext, rho: MultiPartition) -> int:
    if ctx.sign == 1:
        return 1
    out = 1
    for i, m in enumerate(ctx.fusion.merged):
        if m.real:
            out *= 2 ** len(rho[i])
    return out


def ch_map(
    ctx: SphericalContext, values: dict[MultiPartition, CycNum]
) -> SymFuncElem:
    """Image of a Hecke-algebra element given by its values at the chosen
    double-coset representatives."""
    legal = set(ctx.cols)
    terms: dict[MultiPartition, CycNum] = {}
    for rho, v in values.items():
        if not v:
            continue
        if rho not in legal:
            raise GroupError(f"value supported on an illegal coset label {rho}")
        terms[rho] = v * Fraction(coset_order(ctx, rho) * _radical_factor(ctx, rho))
    return SymFuncElem(ctx.merged_names, terms)


def basis_ch_image(ctx: SphericalContext, rho: MultiPartition) -> SymFuncElem:
    """Image of the averaged basis element at rho: the scaled power sum."""
    return SymFuncElem(
        ctx.merged_names, {rho: CycNum.rational(_radical_factor(ctx, rho))}
    )


# -- coefficient-extraction engine ---------------------------------------------------------


def _push_single(
    ctx: SphericalContext, chi: int, f: PExpr, halving: str
) -> SymFuncElem:
    """Push a single-alphabet p-expression through the change of variables
    p_r -> sum over merged classes of the character-weighted power sums.

    halving picks the per-class denominator scale, pinned by the averaging
    engine: "literal" halves real classes only (the unsigned characters),
    "all" halves every class (signed, self-paired block), "none" halves
    nothing (signed, split block).
    """
    table, fusion = ctx.table, ctx.fusion
    src = SymFuncElem.from_p_expr(("x",), 0, f)

    def coeff(_a, b, r):
        i = ctx.merged_names.index(b)
        m = fusion.merged[i]
        g = m.rep_element
        num = table.value(ctx.xi, g).conjugate() * table.value(chi, g) + table.value(
            chi, g
        ).conjugate() * (ctx.sign ** (r - 1))
        zc = ctx.group.centralizer_orders[m.classes[0]]
        k = {"literal": 2 if m.real else 1, "all": 2, "none": 1}[halving]
        return num * Fraction(1, k * zc)

    return src.change_alphabet(coeff, ctx.merged_names)


def ch_image_product(ctx: SphericalContext, lam: MultiPartition) -> SymFuncElem:
    """The predicted image (1/|subgroup|) CH(spherical function) as a product
    of classical symmetric functions, one factor per character block."""
    if ctx.pi in PI_PARTNER_UNSIGNED:
        base = ch_image_product(ctx.unsigned_partner(), lam.transpose())
        terms = {
            k: v * Fraction((-1) ** len(k.hat())) for k, v in base.terms.items()
        }
        return SymFuncElem(ctx.merged_names, terms)
    table = ctx.table
    result = SymFuncElem.one(ctx.merged_names)
    gsize = ctx.group.order
    for rep, partner, _w in ctx.row_blocks(lam):
        d = table.degrees[rep]
        if partner == rep:
            shape = lam[rep]
            m = shape.size // 2
            if ctx.pi == "triv":
                if ctx.nu(rep) == 1:
                    mu = _halve(shape)
                    f = jack_p_expr(mu, 2)
                    scalar = Fraction(gsize, d) ** m
                else:
                    mu = _halve(shape.transpose())
                    f = psi_twist(jack_p_expr(mu.transpose(), Fraction(1, 2)), Fraction(1, 2))
                    scalar = Fraction(2 * gsize, d) ** m
            else:  # iota
                mu = _undouble(shape if ctx.nu(rep) == 1 else shape.transpose())
                f = schurq_p_expr(mu)
                hbar = Fraction(factorial(m), shifted_tableau_count(mu))
                scalar = Fraction(gsize, d) ** m * hbar
            factor = _push_single(ctx, rep, f, "literal" if ctx.sign == 1 else "all")
        else:
            shape = lam[rep]
            m = shape.size
            f = schur_p_expr(shape)
            scalar = Fraction(gsize, d) ** m * shape.hook_product()
            factor = _push_single(ctx, rep, f, "literal" if ctx.sign == 1 else "none")
        result = result * factor.scale(scalar)
    return result


def spherical_from_symfunc(
    ctx: SphericalContext, lam: MultiPartition
) -> dict[MultiPartition, CycNum]:
    """Spherical values recovered from the symmetric-function image."""
    rhs = ch_image_product(ctx, lam)
    out = {}
    for rho in ctx.cols:
        c = rhs.coefficient(rho)
        out[rho] = c * Fraction(
            ctx.hg_size, coset_order(ctx, rho) * _radical_factor(ctx, rho)
        )
    return out


# -- table + reconciliation -----------------------------------------------------------------


@dataclass
class SphericalTable:
    group_name: str
    xi_name: str
    pi: str
    n: int
    char_names: tuple[str, ...]
    merged_names: tuple[str, ...]
    rows: tuple[MultiPartition, ...]
    cols: tuple[MultiPartition, ...]
    values: dict[tuple[int, int], CycNum]
    engines: dict[tuple[int, int], str]

    def value(self, i: int, j: int) -> CycNum:
        return self.values[(i, j)]

    def row_label_json(self, i: int) -> dict:
        return self.rows[i].to_json(self.char_names)

    def col_label_json(self, j: int) -> dict:
        return self.cols[j].to_json(self.merged_names)

    def to_json_obj(self) -> dict:
        return {
            "format": 1,
            "group": self.group_name,
            "xi": self.xi_name,
            "pi": self.pi,
            "n": self.n,
            "rows": [self.row_label_json(i) for i in range(len(self.rows))],
            "cols": [self.col_label_json(j) for j in range(len(self.cols))],
            "values": [
                [str(self.values[(i, j)]) for j in range(len(self.cols))]
                for i in range(len(self.rows))
            ],
            "engines": [
                [self.engines[(i, j)] for j in range(len(self.cols))]
                for i in range(len(self.rows))
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        def label(d: dict) -> str:
            return ";".join(f"{k}:{'+'.join(map(str, v))}" for k, v in d.items()) or "1"

        lines = [
            ",".join(
                ["label"]
                + [label(self.col_label_json(j)) for j in range(len(self.cols))]
            )
        ]
        for i in range(len(self.rows)):
            cells = [label(self.row_label_json(i))] + [
                str(self.values[(i, j)]) for j in range(len(self.cols))
            ]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def build_table(ctx: SphericalContext, engine: str = "brute") -> SphericalTable:
    """Compute the full table of spherical values with the requested engine."""
    values: dict[tuple[int, int], CycNum] = {}
    engines: dict[tuple[int, int], str] = {}
    if engine not in ("brute", "closed", "symfunc"):
        raise ValueError(f"unknown engine {engine!r}")
    for i, lam in enumerate(ctx.rows):
        if engine == "brute":
            one = ctx.brute_at_element(lam, w_identity(2 * ctx.n))
            if one != ONE:
                raise GroupError(f"normalization failed at {lam}: value {one} at 1")
        sym_vals = spherical_from_symfunc(ctx, lam) if engine == "symfunc" else None
        for j, rho in enumerate(ctx.cols):
            if engine == "brute":
                values[(i, j)] = ctx.brute(lam, rho)
            elif engine == "closed":
                v = spherical_closed(ctx, lam, rho)
                if v is None:
                    raise GroupError(
                        f"no closed form for the mixed label {lam}; use brute"
                    )
                values[(i, j)] = v
            else:
                values[(i, j)] = sym_vals[rho]
            engines[(i, j)] = engine
    return SphericalTable(
        ctx.group.name,
        ctx.table.names[ctx.xi],
        ctx.pi,
        ctx.n,
        ctx.table.names,
        ctx.merged_names,
        ctx.rows,
        ctx.cols,
        values,
        engines,
    )


@dataclass
class ReconcileReport:
    group_name: str
    xi_name: str
    pi: str
    n: int
    cells: list[dict]
    row_images: list[dict]
    mismatches: list[dict]

    def ok(self) -> bool:
        return not self.mismatches

    def to_json_obj(self) -> dict:
        return {
            "format": 1,
            "group": self.group_name,
            "xi": self.xi_name,
            "pi": self.pi,
            "n": self.n,
            "cells": self.cells,
            "row_images": self.row_images,
            "mismatches": self.mismatches,
            "ok": self.ok(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"


def reconcile(ctx: SphericalContext) -> ReconcileReport:
    """Compare every engine on every admissible cell, and the characteristic
    image of every brute row against the symmetric-function product."""
    cells = []
    row_images = []
    mismatches = []
    for i, lam in enumerate(ctx.rows):
        one = ctx.brute_at_element(lam, w_identity(2 * ctx.n))
        if one != ONE:
            mismatches.append(
                {"kind": "normalization", "row": str(lam), "value": str(one)}
            )
        brute_vals: dict[MultiPartition, CycNum] = {}
        for rho in ctx.cols:
            b = ctx.brute(lam, rho)
            brute_vals[rho] = b
            c = spherical_closed(ctx, lam, rho)
            cell = {
                "row": ctx.rows[i].to_json(ctx.table.names),
                "col": rho.to_json(ctx.merged_names),
                "brute": str(b),
                "closed": None if c is None else str(c),
            }
            cells.append(cell)
            if c is not None and c != b:
                mismatches.append({"kind": "closed-vs-brute", **cell})
        lhs = ch_map(ctx, brute_vals).scale(Fraction(1, ctx.hg_size))
        rhs = ch_image_product(ctx, lam)
        entry = {
            "row": lam.to_json(ctx.table.names),
            "lhs": lhs.to_json(),
            "rhs": rhs.to_json(),
        }
        row_images.append(entry)
        if lhs != rhs:
            mismatches.append({"kind": "symfunc-vs-brute", **entry})
    return ReconcileReport(
        ctx.group.name,
        ctx.table.names[ctx.xi],
        ctx.pi,
        ctx.n,
        cells,
        row_images,
        mismatches,
    )


# -- content-addressed table cache ------------------------------------------------------------


def cache_key(*parts: bytes | str | int) -> str:
    h = hashlib.sha256()
    for p in parts:
        if isinstance(p, bytes):
            h.update(p)
        else:
            h.update(str(p).encode())
        h.update(b"\x00")
    return h.hexdigest()


def cache_load(cache_dir: str | Path | None, key: str) -> str | None:
    if cache_dir is None:
        return None
    path = Path(cache_dir) / f"{key}.json"
    if path.exists():
        return path.read_text()
    return None


def cache_store(cache_dir: str | Path | None, key: str, payload: str) -> None:
    if cache_dir is None:
        return
    path = Path(cache_dir)
    path.mkdir(parents=True, exist_ok=True)
    (path / f"{key}.json").write_text(payload)
