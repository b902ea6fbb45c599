"""Graded operators on tensor powers of the (1|2)-graded 3-space.

Operators are sparse matrices indexed by tuples of basis indices (1..3 per
slot) with entries in a noncommutative algebra; the basis parity vector is
(0, 1, 1).  All shipped operators are even, so composition is plain matrix
multiplication with entry products kept in written order.  The graded signs
live in the tensor-leg embeddings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import Element, GeneratorTable, apply_morphism, identity_images
from .presentations import PARAMS, Presentation, build
from .rewrite import RewriteRule, RuleSet, is_zero_mod, normalize, solve_for
from .scalars import SC_MINUS_ONE, SC_ONE

TAU = (0, 1, 1)  # basis parities for indices 1, 2, 3

Index = tuple[int, ...]

PARAM_TABLE = GeneratorTable("parameters", [("h", 1), ("hp", 1)], params=("h", "hp"))


def _tau(i: int) -> int:
    return TAU[i - 1]


class GradedOperator:
    """Sparse graded operator on the n-fold tensor power of the 3-space."""

    __slots__ = ("table", "nslots", "entries")

    def __init__(self, table: GeneratorTable, nslots: int, entries: dict[tuple[Index, Index], Element]):
        self.table = table
        self.nslots = nslots
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        for (row, col), elem in self.entries.items():
            want = 0
            for i in row + col:
                want ^= _tau(i)
            par = elem.parity()
            if par is None or par != want:
                raise ValueError(
                    f"entry {row}->{col} = {elem} breaks parity consistency "
                    f"(expected parity {want})"
                )

    @classmethod
    def identity(cls, table: GeneratorTable, nslots: int = 2) -> "GradedOperator":
        one = table.one()
        ix = _indices(nslots)
        return cls(table, nslots, {(i, i): one for i in ix})

    def entry(self, row: Index, col: Index) -> Element:
        e = self.entries.get((row, col))
        return e if e is not None else self.table.zero()

    def compose(self, other: "GradedOperator") -> "GradedOperator":
        """Matrix product with entry products in written order, no signs."""
        if self.nslots != other.nslots or self.table != other.table:
            raise ValueError("operators live on different spaces")
        by_row: dict[Index, list[tuple[Index, Element]]] = {}
        for (m, c), elem in other.entries.items():
            by_row.setdefault(m, []).append((c, elem))
        out: dict[tuple[Index, Index], Element] = {}
        for (r, m), left in self.entries.items():
            for c, right in by_row.get(m, ()):  # noqa: B020
                prod = left * right
                if prod.is_zero():
                    continue
                key = (r, c)
                prev = out.get(key)
                out[key] = prod if prev is None else prev + prod
        return GradedOperator(self.table, self.nslots, out)

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        out = dict(self.entries)
        for k, v in other.entries.items():
            prev = out.get(k)
            out[k] = -v if prev is None else prev - v
        return GradedOperator(self.table, self.nslots, out)

    def map_entries(self, fn) -> "GradedOperator":
        return GradedOperator(
            self.table, self.nslots, {k: fn(v) for k, v in self.entries.items()}
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GradedOperator)
            and self.nslots == other.nslots
            and self.table == other.table
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"GradedOperator({self.nslots} slots, {len(self.entries)} nonzero entries)"


def _indices(nslots: int) -> list[Index]:
    return [tuple(ix) for ix in product((1, 2, 3), repeat=nslots)]


def compose(x: GradedOperator, y: GradedOperator) -> GradedOperator:
    return x.compose(y)


# ---------------------------------------------------------------------------
# built-in operators
# ---------------------------------------------------------------------------

def super_permutation(table: GeneratorTable) -> GradedOperator:
    """Graded swap: e_k (x) e_l -> (-1)^{tau(k)tau(l)} e_l (x) e_k."""
    entries: dict[tuple[Index, Index], Element] = {}
    one = table.one()
    for k, l in product((1, 2, 3), repeat=2):
        sign = SC_MINUS_ONE if _tau(k) and _tau(l) else SC_ONE
        entries[((l, k), (k, l))] = one.scale(sign)
    return GradedOperator(table, 2, entries)


def deformed_r_matrix(table: GeneratorTable) -> GradedOperator:
    """The two-parameter braided operator with nilpotent odd entries h, hp."""
    h = table.gen("h")
    hp = table.gen("hp")
    one = table.one()
    hhp = h * hp
    rows: dict[tuple[Index, Index], Element] = {}

    def put(row, col, elem):
        rows[(row, col)] = elem

    put((1, 1), (1, 1), one + hhp)
    put((1, 1), (1, 3), hp)
    put((1, 1), (3, 1), -hp)
    put((1, 2), (1, 2), one)
    put((1, 3), (1, 1), -h)
    put((1, 3), (1, 3), one)
    put((1, 3), (3, 1), hhp)
    put((1, 3), (3, 3), -hp)
    put((2, 1), (2, 1), one)
    put((2, 2), (2, 2), one)
    put((2, 3), (2, 3), one)
    put((3, 1), (1, 1), h)
    put((3, 1), (1, 3), hhp)
    put((3, 1), (3, 1), one)
    put((3, 1), (3, 3), -hp)
    put((3, 2), (3, 2), one)
    put((3, 3), (1, 3), h)
    put((3, 3), (3, 1), h)
    put((3, 3), (3, 3), one - hhp)
    return GradedOperator(table, 2, rows)


def rhat(r: GradedOperator) -> GradedOperator:
    """Braid form: super permutation composed with the operator."""
    return super_permutation(r.table).compose(r)


# ---------------------------------------------------------------------------
# tensor legs
# ---------------------------------------------------------------------------

def tensor_leg(
    t_matrix: list[list[Element]],
    leg: int,
    sign_variant: str = "dressed",
    table: GeneratorTable | None = None,
) -> GradedOperator:
    """Embed a 3x3 matrix into one leg of the graded pair space.

    ``plain`` drops the graded tensor signs; ``dressed`` multiplies the
    first-leg embedding by (-1)^{tau(j)(tau(i)+tau(k))}, the sign produced
    by carrying matrix entries past the spectator basis vector.  Leg 2 is
    computed by conjugating leg 1 with the super permutation.
    """
    if sign_variant not in ("plain", "dressed"):
        raise ValueError("sign_variant must be 'plain' or 'dressed'")
    if table is None:
        table = t_matrix[0][0].table
    entries: dict[tuple[Index, Index], Element] = {}
    for i, j, k in product((1, 2, 3), repeat=3):
        elem = t_matrix[i - 1][k - 1]
        if elem.is_zero():
            continue
        if sign_variant == "dressed" and _tau(j) and (_tau(i) ^ _tau(k)):
            elem = elem.scale(SC_MINUS_ONE)
        entries[((i, j), (k, j))] = elem
    t1 = GradedOperator(table, 2, entries)
    if leg == 1:
        return t1
    if leg == 2:
        p = super_permutation(table)
        return p.compose(t1).compose(p)
    raise ValueError("leg must be 1 or 2")


def embed_pair(x: GradedOperator, slots: tuple[int, int]) -> GradedOperator:
    """Embed a two-slot operator into adjacent or outer slots of the triple
    space.

    Entries are written to the left of basis vectors, so the first-leg
    embedding is sign-free while the second-leg embedding picks up the
    graded sign of the entry passing the slot-1 spectator.
    """
    table = x.table
    entries: dict[tuple[Index, Index], Element] = {}
    if slots == (1, 2):
        for ((i, j), (l, m)), elem in x.entries.items():
            for k in (1, 2, 3):
                entries[((i, j, k), (l, m, k))] = elem
        return GradedOperator(table, 3, entries)
    if slots == (2, 3):
        for ((j, k), (m, n)), elem in x.entries.items():
            par = elem.parity()
            for i in (1, 2, 3):
                signed = elem.scale(SC_MINUS_ONE) if par and _tau(i) else elem
                entries[((i, j, k), (i, m, n))] = signed
        return GradedOperator(table, 3, entries)
    if slots == (1, 3):
        p23 = embed_pair(super_permutation(table), (2, 3))
        return p23.compose(embed_pair(x, (1, 2))).compose(p23)
    raise ValueError("slots must be (1,2), (2,3) or (1,3)")


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class EntryFailure:
    row: str
    col: str
    residue: str


@dataclass
class MatrixCheckReport:
    name: str
    entries_checked: int
    failures: list[EntryFailure] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def _report_zero_entries(name: str, op: GradedOperator, rules: RuleSet, details=None) -> MatrixCheckReport:
    failures = []
    for (row, col), elem in sorted(op.entries.items()):
        res = normalize(elem, rules)
        if not res.is_zero():
            failures.append(EntryFailure(str(row), str(col), str(res)))
    total = len(_indices(op.nslots)) ** 2
    return MatrixCheckReport(name, total, failures, details or {})


# ---------------------------------------------------------------------------
# graded Yang-Baxter
# ---------------------------------------------------------------------------

def check_ybe(r: GradedOperator) -> MatrixCheckReport:
    """R12 R13 R23 - R23 R13 R12 on the graded triple space, all entries zero."""
    r12 = embed_pair(r, (1, 2))
    r13 = embed_pair(r, (1, 3))
    r23 = embed_pair(r, (2, 3))
    lhs = r12.compose(r13).compose(r23)
    rhs = r23.compose(r13).compose(r12)
    core = RuleSet(r.table, [])
    return _report_zero_entries(
        "ybe", lhs - rhs, core, {"dimension": 27, "entries": 729}
    )


# ---------------------------------------------------------------------------
# RTT relations
# ---------------------------------------------------------------------------

def _t_matrix(bialg: Presentation) -> list[list[Element]]:
    return [[bialg.table.gen(n) for n in row] for row in bialg.meta["matrix"]]


def check_rtt(
    r: GradedOperator | None = None,
    bialg: Presentation | None = None,
    sign_variant: str = "plain",
) -> MatrixCheckReport:
    """All 81 entries of R T1 T2 - T2 T1 R reduce to zero mod the bialgebra."""
    bialg = bialg or build("matrix_bialgebra")
    table = bialg.table
    r = r if r is not None else deformed_r_matrix(table)
    if r.table != table:
        r = _move_operator(r, table)
    t1 = tensor_leg(_t_matrix(bialg), 1, sign_variant, table)
    t2 = tensor_leg(_t_matrix(bialg), 2, sign_variant, table)
    lhs = r.compose(t1).compose(t2)
    rhs = t2.compose(t1).compose(r)
    rep = _report_zero_entries(
        "rtt", lhs - rhs, bialg.ruleset, {"sign_variant": sign_variant, "entries": 81}
    )
    return rep


def _move_operator(op: GradedOperator, table: GeneratorTable) -> GradedOperator:
    from .algebra import relabel

    return GradedOperator(
        table, op.nslots, {k: relabel(v, table) for k, v in op.entries.items()}
    )


# pinned after adjudication by the RTT identity: exactly this variant makes
# all 81 entries reduce to zero against the shipped matrix bialgebra
PINNED_SIGN_VARIANT = "plain"


# ---------------------------------------------------------------------------
# braid-form checks on the quantum spaces
# ---------------------------------------------------------------------------

def check_rhat_space(space: Presentation, r: GradedOperator | None = None) -> MatrixCheckReport:
    """Braid-form consistency of a quantum space's relations.

    For the coordinate space: x_i x_j - sum \\hat{R}^{ij}_{kl} x_k x_l
    reduces to zero for all nine components (entries multiplied on the
    left).  For the full de Rham presentation the coordinate-differential
    and differential-differential rule sets are regenerated from the braid
    operator's sign formulas and compared with the stored rules.
    """
    if space.name == "superspace_h":
        return _check_rhat_coordinates(space, r)
    if space.name == "derham_h":
        return _check_rhat_derham(space, r)
    raise ValueError("braid-form check supports superspace_h and derham_h")


def _space_rhat(space: Presentation, r: GradedOperator | None) -> GradedOperator:
    table = space.table
    r = r if r is not None else deformed_r_matrix(table)
    if r.table != table:
        r = _move_operator(r, table)
    return rhat(r)


def _check_rhat_coordinates(space: Presentation, r: GradedOperator | None) -> MatrixCheckReport:
    table = space.table
    rh = _space_rhat(space, r)
    coords = {1: table.gen("x"), 2: table.gen("th1"), 3: table.gen("th2")}
    failures = []
    for i, j in product((1, 2, 3), repeat=2):
        expr = coords[i] * coords[j]
        for k, l in product((1, 2, 3), repeat=2):
            entry = rh.entry((i, j), (k, l))
            if entry.is_zero():
                continue
            expr = expr - entry * coords[k] * coords[l]
        if not is_zero_mod(expr, space.ruleset):
            failures.append(
                EntryFailure(str((i, j)), "*", str(normalize(expr, space.ruleset)))
            )
    return MatrixCheckReport("rhat-coordinates", 9, failures, {"space": space.name})


def _check_rhat_derham(space: Presentation, r: GradedOperator | None) -> MatrixCheckReport:
    """Regenerate the cross and differential rules from the braid operator."""
    table = space.table
    rh = _space_rhat(space, r)
    core = RuleSet(table, [])
    coords = {1: table.gen("x"), 2: table.gen("th1"), 3: table.gen("th2")}
    diffs = {1: table.gen("dx"), 2: table.gen("dth1"), 3: table.gen("dth2")}
    coord_names = {1: "x", 2: "th1", 3: "th2"}
    diff_names = {1: "dx", 2: "dth1", 3: "dth2"}
    failures: list[EntryFailure] = []
    checked = 0

    # coordinate-differential sector: x_i dx_j equals the signed sum of
    # dx_k x_l with the braid entry's own parity in the sign
    stored_cross = {rule.lhs: rule for rule in space.rules_tagged("cross")}
    for i, j in product((1, 2, 3), repeat=2):
        checked += 1
        rhs = table.zero()
        for k, l in product((1, 2, 3), repeat=2):
            entry = rh.entry((i, j), (k, l))
            if entry.is_zero():
                continue
            signed = entry.scale(SC_MINUS_ONE) if entry.parity() else entry
            rhs = rhs + signed * diffs[k] * coords[l]
        if _tau(i):
            rhs = -rhs
        rhs = normalize(rhs, core)
        lhs_word = table.word(coord_names[i], diff_names[j])
        stored = stored_cross[lhs_word]
        if normalize(stored.rhs, core) != rhs:
            failures.append(
                EntryFailure(table.word_str(lhs_word), "cross", f"{rhs} != {stored.rhs}")
            )

    # differential-differential sector: implicit relations solved at the
    # stored rule heads must reproduce the stored rules; the remaining
    # relations must already reduce to zero.  The sign carries the parity
    # of the differential dx_k, the opposite of the coordinate parity.
    stored_diff = {rule.lhs: rule for rule in space.rules_tagged("differentials")}
    relations: dict[tuple[int, int], Element] = {}
    for i, j in product((1, 2, 3), repeat=2):
        rel = diffs[i] * diffs[j]
        if _tau(i):
            rel = -rel
        for k, l in product((1, 2, 3), repeat=2):
            entry = rh.entry((i, j), (k, l))
            if entry.is_zero():
                continue
            signed = entry.scale(SC_MINUS_ONE) if not _tau(k) else entry
            rel = rel - signed * diffs[k] * diffs[l]
        relations[(i, j)] = normalize(rel, core)

    solved_rules: list[RewriteRule] = []
    heads = {}
    for (i, j), rel in relations.items():
        head = table.word(diff_names[i], diff_names[j])
        if head in stored_diff and not rel.is_zero():
            solved_rules.append(solve_for(rel, head, core, tag="regenerated"))
            heads[head] = (i, j)
    solved_set = RuleSet(table, solved_rules)
    for rule in solved_rules:
        checked += 1
        final_rhs = normalize(rule.rhs, solved_set)
        stored = stored_diff[rule.lhs]
        if normalize(stored.rhs, core) != final_rhs:
            failures.append(
                EntryFailure(table.word_str(rule.lhs), "differentials", f"{final_rhs} != {stored.rhs}")
            )
    for (i, j), rel in relations.items():
        head = table.word(diff_names[i], diff_names[j])
        if head in heads:
            continue
        checked += 1
        if not is_zero_mod(rel, space.ruleset):
            failures.append(EntryFailure(str((i, j)), "differentials-residual", str(rel)))

    return MatrixCheckReport("rhat-derham", checked, failures, {"space": space.name})


# ---------------------------------------------------------------------------
# coaction covariance
# ---------------------------------------------------------------------------

_COACTION_VECTORS = {
    "superspace_h": ["x", "th1", "th2"],
    "exterior_hp": ["phi", "y1", "y2"],
    "derham_h": ["x", "th1", "th2"],
}


def coaction_presentation(target_name: str) -> tuple[Presentation, dict[str, Element]]:
    """Combined presentation of bialgebra (x) target, plus coaction images.

    Matrix generators commute with target generators up to the graded sign;
    the cross rules move matrix entries to the left.
    """
    if target_name not in _COACTION_VECTORS:
        raise ValueError(f"coaction targets: {sorted(_COACTION_VECTORS)}")
    bialg = build("matrix_bialgebra")
    target = build(target_name)
    gens: list[tuple[str, int]] = []
    for sym in bialg.table.symbols:
        if not sym.is_param:
            gens.append((sym.name, sym.parity))
    for sym in target.table.symbols:
        if not sym.is_param:
            gens.append((sym.name, sym.parity))
    table = GeneratorTable(f"coaction({target_name})", list(PARAMS) + gens, params=("h", "hp"))

    from .algebra import relabel

    rules: list[RewriteRule] = []
    for rule in bialg.rules:
        rules.append(
            RewriteRule(
                tuple(table.index(bialg.table.names[i]) for i in rule.lhs),
                relabel(rule.rhs, table),
                rule.tag,
            )
        )
    for rule in target.rules:
        rules.append(
            RewriteRule(
                tuple(table.index(target.table.names[i]) for i in rule.lhs),
                relabel(rule.rhs, table),
                rule.tag,
            )
        )
    t_names = [n for row in bialg.meta["matrix"] for n in row]
    for x_sym in target.table.symbols:
        if x_sym.is_param:
            continue
        for t_name in t_names:
            xi, ti = table.index(x_sym.name), table.index(t_name)
            sign = SC_MINUS_ONE if x_sym.parity and table.parities[ti] else SC_ONE
            rules.append(
                RewriteRule((xi, ti), Element(table, {(ti, xi): sign}), "coaction-cross")
            )
    combined = Presentation(
        name=f"coaction({target_name})",
        table=table,
        ruleset=RuleSet(table, rules),
        rules=rules,
    )

    # Left coaction images: each vector entry maps through the matrix.
    # On a vector of differentials the coaction is (id (x) d) of the
    # coordinate coaction, and the exterior differential passing a matrix
    # entry contributes the entry's graded sign.
    matrix = bialg.meta["matrix"]
    images: dict[str, Element] = {"h": table.gen("h"), "hp": table.gen("hp")}
    vectors: list[tuple[list[str], bool]] = [(_COACTION_VECTORS[target_name], False)]
    if target_name == "exterior_hp":
        vectors = [(_COACTION_VECTORS[target_name], True)]
    if target_name == "derham_h":
        vectors.append((["dx", "dth1", "dth2"], True))
    for vec, differential in vectors:
        for i, name in enumerate(vec):
            img = table.zero()
            for j, other in enumerate(vec):
                entry = table.gen(matrix[i][j])
                if differential and (TAU[i] ^ TAU[j]):
                    entry = entry.scale(SC_MINUS_ONE)
                img = img + entry * table.gen(other)
            images[name] = img
    return combined, images


def check_coaction(target_name: str) -> MatrixCheckReport:
    """Every defining relation of the target maps to zero under the coaction."""
    target = build(target_name)
    combined, images = coaction_presentation(target_name)
    failures = []
    for rule in target.rules:
        rel = rule.as_element()
        image = apply_morphism(rel, images)
        if not is_zero_mod(image, combined.ruleset):
            failures.append(
                EntryFailure(
                    target.table.word_str(rule.lhs),
                    rule.tag,
                    str(normalize(image, combined.ruleset)),
                )
            )
    return MatrixCheckReport(
        "coaction", len(target.rules), failures, {"target": target_name}
    )
