"""Finite groups with conjugacy structure and validated character tables.

Groups are loaded from explicit multiplication tables or permutation
generators; character tables are input data, validated exactly against
both orthogonality relations on load.  Everything is immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .cyclo import CycNum, ONE, ZERO, parse_cyc


class GroupError(Exception):
    """A mathematical violation in group or character-table data."""


class CapExceeded(Exception):
    """A configured enumeration cap was exceeded."""

    def __init__(self, cap_name: str, limit, actual):
        self.cap_name = cap_name
        self.limit = limit
        self.actual = actual
        super().__init__(f"cap {cap_name} exceeded: needed {actual}, limit {limit}")


class FiniteGroup:
    """A finite group given by its multiplication table on 0..order-1, 0 = identity."""

    def __init__(self, name: str, mul: list[list[int]], check: bool = True):
        self.name = name
        self.order = len(mul)
        self.mul = tuple(tuple(row) for row in mul)
        if check:
            self._check_axioms()
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.mul[a][b] == 0:
                    inv[a] = b
                    break
            if inv[a] is None or self.mul[inv[a]][a] != 0:
                raise GroupError(f"{name}: element {a} has no two-sided inverse")
        self.inv = tuple(inv)
        self._compute_classes()

    def _check_axioms(self):
        n = self.order
        if any(len(row) != n for row in self.mul):
            raise GroupError(f"{self.name}: multiplication table is not square")
        if any(not (0 <= v < n) for row in self.mul for v in row):
            raise GroupError(f"{self.name}: table entry out of range")
        if any(self.mul[0][j] != j or self.mul[j][0] != j for j in range(n)):
            raise GroupError(f"{self.name}: element 0 is not an identity")
        # full associativity scan; bundled groups all have order <= 64
        for a in range(n):
            for b in range(n):
                ab = self.mul[a][b]
                rowb = self.mul[b]
                rowab = self.mul[ab]
                for c in range(n):
                    if rowab[c] != self.mul[a][rowb[c]]:
                        raise GroupError(
                            f"{self.name}: associativity fails at ({a},{b},{c})"
                        )

    def _compute_classes(self):
        n = self.order
        class_of = [-1] * n
        classes = []
        for x in range(n):
            if class_of[x] >= 0:
                continue
            orbit = sorted({self.mul[self.mul[g][x]][self.inv[g]] for g in range(n)})
            idx = len(classes)
            classes.append(tuple(orbit))
            for y in orbit:
                class_of[y] = idx
        order_pairs = sorted(range(len(classes)), key=lambda i: classes[i][0])
        self.classes = tuple(classes[i] for i in order_pairs)
        remap = {old: new for new, old in enumerate(order_pairs)}
        self.class_of = tuple(remap[c] for c in class_of)
        self.class_reps = tuple(c[0] for c in self.classes)
        self.centralizer_orders = tuple(self.order // len(c) for c in self.classes)
        self.class_inverse = tuple(
            self.class_of[self.inv[rep]] for rep in self.class_reps
        )

    # -- element helpers ----------------------------------------------------

    def product(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = self.mul[out][x]
        return out

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            k += 1
        return k

    def num_classes(self) -> int:
        return len(self.classes)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _close_permutations(gens: list[tuple[int, ...]], cap: int) -> list[tuple[int, ...]]:
    deg = len(gens[0])
    if any(len(g) != deg or sorted(g) != list(range(deg)) for g in gens):
        raise GroupError("generators must be permutations of equal degree")
    ident = tuple(range(deg))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(deg))
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise CapExceeded("closure-elements", cap, f"> {cap}")
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def group_from_perm_gens(name: str, gens, cap: int = 10000) -> FiniteGroup:
    """Close 1-indexed one-line permutation generators and build the group."""
    gens0 = [tuple(v - 1 for v in g) for g in gens]
    elements = _close_permutations(gens0, cap)
    index = {p: i for i, p in enumerate(elements)}
    deg = len(elements[0])
    mul = [
        [index[tuple(p[q[i]] for i in range(deg))] for q in elements] for p in elements
    ]
    g = FiniteGroup(name, mul, check=False)
    g.permutations = tuple(elements)
    return g


def load_group(source) -> FiniteGroup:
    """Load a group from a JSON file path or an already-parsed dict."""
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            obj = json.load(fh)
    else:
        obj = source
    name = obj.get("name", "group")
    if "mul" in obj:
        group = FiniteGroup(name, obj["mul"])
    elif "perm_gens" in obj:
        group = group_from_perm_gens(name, obj["perm_gens"], cap=obj.get("cap", 10000))
    else:
        raise GroupError(f"{name}: group file needs a 'mul' table or 'perm_gens'")
    if "order" in obj and obj["order"] != group.order:
        raise GroupError(
            f"{name}: declared order {obj['order']} but found {group.order} elements"
        )
    return group


class CharacterTable:
    """Rows of irreducible character values, one CycNum per conjugacy class."""

    def __init__(self, group: FiniteGroup, rows, names=None):
        self.group = group
        self.rows = tuple(tuple(v for v in row) for row in rows)
        self.names = tuple(names) if names else tuple(
            f"chi{i+1}" for i in range(len(self.rows))
        )
        self.degrees = tuple(row[self.group.class_of[0]].as_int() for row in self.rows)
        self._wreath_cache = {}

    def num_rows(self) -> int:
        return len(self.rows)

    def value(self, row: int, element: int) -> CycNum:
        return self.rows[row][self.group.class_of[element]]

    def row_by_name(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no character named {name!r}; have {self.names}") from None

    def conj_tensor_row(self, xi: int, chi: int) -> int:
        """The row equal to conj(chi) tensor xi."""
        want = tuple(
            self.rows[chi][c].conjugate() * self.rows[xi][c]
            for c in range(len(self.group.classes))
        )
        for i, row in enumerate(self.rows):
            if row == want:
                return i
        raise GroupError(
            f"{self.group.name}: conj({self.names[chi]})*{self.names[xi]} is not a row"
        )

    def __repr__(self):
        return f"CharacterTable({self.group.name}, {len(self.rows)} rows)"


def validate_table(group: FiniteGroup, table: CharacterTable) -> list[str]:
    """Exact orthogonality and degree checks; returns a list of violations."""
    problems = []
    k = len(group.classes)
    if len(table.rows) != k:
        problems.append(f"row count {len(table.rows)} != class count {k}")
        return problems
    sizes = [len(c) for c in group.classes]
    # row orthogonality
    for i in range(k):
        for j in range(i, k):
            tot = ZERO
            for c in range(k):
                tot = tot + table.rows[i][c] * table.rows[j][c].conjugate() * sizes[c]
            want = group.order if i == j else 0
            if tot != CycNum.rational(want):
                problems.append(f"row orthogonality fails at rows ({i},{j}): {tot}")
    # column orthogonality
    for c in range(k):
        for d in range(c, k):
            tot = ZERO
            for i in range(k):
                tot = tot + table.rows[i][c] * table.rows[i][d].conjugate()
            want = group.centralizer_orders[c] if c == d else 0
            if tot != CycNum.rational(want):
                problems.append(f"column orthogonality fails at classes ({c},{d}): {tot}")
    degsum = sum(
        (table.rows[i][group.class_of[0]] ** 2 for i in range(k)), start=ZERO
    )
    if degsum != CycNum.rational(group.order):
        problems.append(f"sum of squared degrees is {degsum}, not {group.order}")
    return problems


def load_table(source, group: FiniteGroup, validate: bool = True) -> CharacterTable:
    """Load a character table JSON file; validates against the group by default."""
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            obj = json.load(fh)
    else:
        obj = source
    reps = tuple(obj["classes"])
    if reps != group.class_reps:
        raise GroupError(
            f"{group.name}: table class representatives {reps} do not match "
            f"the computed ones {group.class_reps}"
        )
    rows = [[parse_cyc(v) for v in row] for row in obj["chars"]]
    table = CharacterTable(group, rows, names=obj.get("names"))
    if validate:
        problems = validate_table(group, table)
        if problems:
            raise GroupError(f"{group.name}: invalid character table: " + "; ".join(problems))
    return table


def linear_characters(table: CharacterTable) -> list[int]:
    """Row indices of degree-1 characters, checked to be multiplicative."""
    group = table.group
    out = []
    for i, d in enumerate(table.degrees):
        if d != 1:
            continue
        for a in group.class_reps:
            for b in group.class_reps:
                lhs = table.value(i, group.mul[a][b])
                if lhs != table.value(i, a) * table.value(i, b):
                    raise GroupError(
                        f"{group.name}: degree-1 row {i} is not multiplicative"
                    )
        out.append(i)
    return out


def twisted_indicator(table: CharacterTable, xi: int, chi: int) -> int:
    """The twisted second indicator (1/|G|) sum_x conj(xi(x)) chi(x^2).

    Always in {-1, 0, 1}; zero exactly when chi differs from conj(chi)*xi.
    """
    group = table.group
    if table.degrees[xi] != 1:
        raise GroupError("twist character must be linear")
    tot = ZERO
    for x in range(group.order):
        sq = group.mul[x][x]
        tot = tot + table.value(xi, x).conjugate() * table.value(chi, sq)
    val = (tot * Fraction(1, group.order)).try_rational()
    if val is None or val.denominator != 1 or val not in (-1, 0, 1):
        raise GroupError(f"indicator out of range for row {chi}: {tot}")
    nu = int(val)
    paired = table.conj_tensor_row(xi, chi) == chi
    if (nu == 0) == paired:
        raise GroupError(
            f"indicator dichotomy violated at row {chi}: nu={nu}, self-paired={paired}"
        )
    return nu


@dataclass(frozen=True)
class MergedClass:
    """A conjugacy class merged with its inverse class."""

    classes: tuple[int, ...]  # one index if self-inverse, else two
    real: bool
    rep_element: int  # minimal element index in the union


@dataclass(frozen=True)
class ClassFusion:
    """Merged class data and character pairing data for one linear twist."""

    group_name: str
    eta: int
    merged: tuple[MergedClass, ...]
    row_partner: tuple[int, ...]  # row index of conj(chi) * eta per row
    eta_reps: tuple[int, ...]  # chosen representative rows, one per pair
    stats: dict

    def merged_index_of_class(self, class_index: int) -> int:
        for i, m in enumerate(self.merged):
            if class_index in m.classes:
                return i
        raise KeyError(class_index)


def fuse_classes(group: FiniteGroup, table: CharacterTable, eta: int) -> ClassFusion:
    """Merge classes with their inverses and pair rows chi ~ conj(chi)*eta."""
    if table.degrees[eta] != 1:
        raise GroupError("fusion twist must be a linear character")
    seen = set()
    merged = []
    for c in range(len(group.classes)):
        if c in seen:
            continue
        cinv = group.class_inverse[c]
        seen.update({c, cinv})
        if cinv == c:
            merged.append(MergedClass((c,), True, group.classes[c][0]))
        else:
            pair = tuple(sorted((c, cinv)))
            rep = min(group.classes[c][0], group.classes[cinv][0])
            merged.append(MergedClass(pair, False, rep))
    merged.sort(key=lambda m: m.rep_element)
    row_partner = tuple(
        table.conj_tensor_row(eta, chi) for chi in range(len(table.rows))
    )
    eta_reps = tuple(
        chi for chi in range(len(table.rows)) if chi <= row_partner[chi]
    )
    minus_one = CycNum.rational(-1)
    plus_one = ONE
    n_starstar = len(merged)
    n_complex_classes = sum(len(m.classes) for m in merged if not m.real)
    n_xi = sum(
        1
        for m in merged
        if m.real and table.value(eta, m.rep_element) == minus_one
    )
    n_r_xi = sum(
        1 for m in merged if m.real and table.value(eta, m.rep_element) == plus_one
    )
    n_self_rows = sum(1 for chi, p in enumerate(row_partner) if p == chi)
    n_split_rows = len(row_partner) - n_self_rows
    stats = {
        "n_starstar": n_starstar,
        "n_eta_starstar": len(eta_reps),
        "n_xi": n_xi,
        "n_R_xi": n_r_xi,
        "n_C": n_complex_classes,
        "n_R": n_starstar - n_complex_classes // 2,
        "n_R_xi_rows": n_self_rows,
        "n_C_xi_rows": n_split_rows,
    }
    return ClassFusion(group.name, eta, tuple(merged), row_partner, eta_reps, stats)


# -- bundled data --------------------------------------------------------------

_BUNDLED = ("c1", "c2", "c3", "c4", "c5", "c6", "q8", "gl2f3")


def data_path(name: str) -> Path:
    base = resources.files("wreathsph").joinpath("data")
    return Path(str(base.joinpath(name)))


def bundled_group_path(name: str) -> Path:
    return data_path(f"{name}.json")


def bundled_table_path(name: str) -> Path:
    return data_path(f"{name}_table.json")


def bundled(name: str) -> tuple[FiniteGroup, CharacterTable]:
    """Load one of the bundled (group, validated table) pairs by name."""
    if name not in _BUNDLED:
        raise KeyError(f"no bundled group {name!r}; have {_BUNDLED}")
    group = load_group(bundled_group_path(name))
    table = load_table(bundled_table_path(name), group)
    return group, table


def bundled_names() -> tuple[str, ...]:
    return _BUNDLED
