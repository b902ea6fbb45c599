"""Contraction of the q-deformed algebras onto the h-deformed ones.

The q-side generators are substituted through a singular change of basis
whose coefficients carry the nilpotent parameters divided by q-1 and pq-1.
Each substituted relation is solved for its own leading mixed word over the
parameter ring, fully reduced against the other solved relations, and then
compared (a) before the limit against the stored derived presentations and
(b) after the exact evaluation at p = q = 1 against the h-deformed rules.
Limits are exact rational-function evaluations; a pole can only mean the
nilpotency reductions were skipped and is reported as an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Element, Word, apply_morphism, relabel, word_element
from .errors import PoleError
from .presentations import Presentation, build
from .rewrite import RewriteRule, RuleSet, normalize, solve_for
from .scalars import SC_ONE, SC_P, SC_Q, Scalar, poly_divexact

ONE = Fraction(1)


def _coeff(den: Scalar) -> Scalar:
    return SC_ONE / den


@dataclass
class BasisChange:
    """Forward and inverse generator images for one q-side presentation."""

    name: str
    src: Presentation
    dst: Presentation
    forward: dict[str, Element]
    inverse: dict[str, Element]

    def validate(self) -> None:
        """Round trips normalize to the identity; denominators are the
        expected singular factors."""
        src_core = RuleSet(self.src.table, [])
        dst_core = RuleSet(self.dst.table, [])
        for name, img in self.forward.items():
            back = normalize(apply_morphism(img, self.inverse), src_core)
            if back != self.src.table.gen(name):
                raise AssertionError(f"basis change round trip failed on {name!r}: {back}")
        for name, img in self.inverse.items():
            back = normalize(apply_morphism(img, self.forward), dst_core)
            if back != self.dst.table.gen(name):
                raise AssertionError(f"inverse round trip failed on {name!r}: {back}")
        q1 = SC_Q - SC_ONE
        pq1 = SC_P * SC_Q - SC_ONE
        allowed = (q1 * pq1).num
        for img in list(self.forward.values()) + list(self.inverse.values()):
            for coeff in img.terms.values():
                if coeff.den.is_const():
                    continue
                try:
                    poly_divexact(allowed, coeff.den)
                except ArithmeticError:
                    raise AssertionError(f"unexpected denominator {coeff.den} in basis change")


def basis_change_for(src_name: str) -> BasisChange:
    """The shipped basis change carrying the named q-side presentation onto
    its h-side counterpart."""
    src = build(src_name)
    c_h = _coeff(SC_Q - SC_ONE)          # 1/(q-1), multiplies h
    c_hp = _coeff(SC_P * SC_Q - SC_ONE)  # 1/(pq-1), multiplies hp
    c_hhp = c_h * c_hp                   # 1/((q-1)(pq-1)), multiplies h*hp

    if src_name == "superspace_q":
        dst = build("superspace_h")
    elif src_name == "derham_q":
        dst = build("derham_h_derived")
    elif src_name == "exterior_pq":
        dst = build("exterior_hp")
    elif src_name == "weyl_q":
        dst = build("weyl_h_derived")
    else:
        raise ValueError(f"no basis change for {src_name!r}")

    t = dst.table
    h, hp = t.gen("h"), t.gen("hp")
    forward: dict[str, Element] = {"h": h, "hp": hp}
    inverse: dict[str, Element] = {"h": src.table.gen("h"), "hp": src.table.gen("hp")}
    ts = src.table
    hs, hps = ts.gen("h"), ts.gen("hp")

    def coords(X: str, T1: str, T2: str, x: str, th1: str, th2: str) -> None:
        forward[X] = t.gen(x) + (hp * t.gen(th2)).scale(c_hp)
        forward[T1] = t.gen(th1)
        forward[T2] = t.gen(th2) + (h * t.gen(x)).scale(c_h)
        inverse[x] = ts.gen(X) - (hs * hps * ts.gen(X)).scale(c_hhp) - (hps * ts.gen(T2)).scale(c_hp)
        inverse[th1] = ts.gen(T1)
        inverse[th2] = ts.gen(T2) + (hs * hps * ts.gen(T2)).scale(c_hhp) - (hs * ts.gen(X)).scale(c_h)

    def differentials(dX: str, dT1: str, dT2: str, dx: str, dth1: str, dth2: str) -> None:
        # graded Leibniz images of the coordinate change: the odd
        # coefficient flips the sign of the differential it multiplies
        forward[dX] = t.gen(dx) - (hp * t.gen(dth2)).scale(c_hp)
        forward[dT1] = t.gen(dth1)
        forward[dT2] = t.gen(dth2) - (h * t.gen(dx)).scale(c_h)
        inverse[dx] = ts.gen(dX) - (hs * hps * ts.gen(dX)).scale(c_hhp) + (hps * ts.gen(dT2)).scale(c_hp)
        inverse[dth1] = ts.gen(dT1)
        inverse[dth2] = ts.gen(dT2) + (hs * hps * ts.gen(dT2)).scale(c_hhp) + (hs * ts.gen(dX)).scale(c_h)

    def derivatives(pX: str, pT1: str, pT2: str, px: str, pth1: str, pth2: str) -> None:
        forward[pX] = t.gen(px) - (h * hp * t.gen(px)).scale(c_hhp) - (h * t.gen(pth2)).scale(c_h)
        forward[pT1] = t.gen(pth1)
        forward[pT2] = t.gen(pth2) + (h * hp * t.gen(pth2)).scale(c_hhp) + (hp * t.gen(px)).scale(c_hp)
        inverse[px] = ts.gen(pX) + (hs * ts.gen(pT2)).scale(c_h)
        inverse[pth1] = ts.gen(pT1)
        inverse[pth2] = ts.gen(pT2) - (hps * ts.gen(pX)).scale(c_hp)

    if src_name == "superspace_q":
        coords("X", "Th1", "Th2", "x", "th1", "th2")
    elif src_name == "derham_q":
        coords("X", "Th1", "Th2", "x", "th1", "th2")
        differentials("dX", "dTh1", "dTh2", "phi", "y1", "y2")
    elif src_name == "exterior_pq":
        differentials("Phi", "Y1", "Y2", "phi", "y1", "y2")
    elif src_name == "weyl_q":
        coords("X", "Th1", "Th2", "x", "th1", "th2")
        derivatives("pX", "pTh1", "pTh2", "px", "pth1", "pth2")
    bc = BasisChange(name=src_name, src=src, dst=dst, forward=forward, inverse=inverse)
    bc.validate()
    return bc


@dataclass
class LimitPoint:
    """Evaluation point for the deformation scalars (default p = q = 1)."""

    p_value: Fraction = ONE
    q_value: Fraction = ONE


@dataclass
class TransformedRelation:
    tag: str
    source_lhs: str
    own_word: Word
    raw: Element


def transform_relations(src_name: str, bc: BasisChange | None = None) -> list[TransformedRelation]:
    """Substitute the basis change into every defining relation of the
    source, expand, and normalize with the parameter core only."""
    bc = bc or basis_change_for(src_name)
    core = RuleSet(bc.dst.table, [])
    out = []
    for rule in bc.src.rules:
        rel = rule.as_element()
        image = normalize(apply_morphism(rel, bc.forward), core)
        lhs_image = apply_morphism(word_element(bc.src.table, rule.lhs), bc.forward)
        own = _param_free_word(lhs_image)
        out.append(
            TransformedRelation(
                tag=rule.tag,
                source_lhs=bc.src.table.word_str(rule.lhs),
                own_word=own,
                raw=image,
            )
        )
    return out


def _param_free_word(e: Element) -> Word:
    table = e.table
    words = [w for w in e.terms if not any(table.param_flags[i] for i in w)]
    if len(words) != 1:
        raise ValueError(f"expected a unique parameter-free word in {e}")
    return words[0]


def solve_transformed(trs: list[TransformedRelation], dst: Presentation) -> list[RewriteRule]:
    """Orient each transformed relation at its own mixed word and reduce the
    right sides to full normal form against the solved system."""
    core = RuleSet(dst.table, [])
    rules = [solve_for(tr.raw, tr.own_word, core, tag=tr.tag) for tr in trs]
    system = RuleSet(dst.table, rules)
    final = []
    for rule in rules:
        final.append(RewriteRule(rule.lhs, normalize(rule.rhs, system), rule.tag))
    return final


def take_limit(e: Element, lp: LimitPoint | None = None) -> Element:
    """Evaluate every coefficient at the limit point exactly."""
    lp = lp or LimitPoint()
    out: dict[Word, Scalar] = {}
    for word, coeff in e.terms.items():
        if not coeff.regular_at(lp.p_value, lp.q_value):
            raise PoleError(
                f"coefficient {coeff} of {e.table.word_str(word)} has a pole at "
                f"p={lp.p_value}, q={lp.q_value}",
                word_str=e.table.word_str(word),
                scalar_str=str(coeff),
            )
        value = coeff.eval_at(lp.p_value, lp.q_value)
        if value:
            out[word] = Scalar.from_fraction(value)
    return Element(e.table, out)


# ---------------------------------------------------------------------------
# contraction checks
# ---------------------------------------------------------------------------

@dataclass
class ContractionReport:
    target: str
    compared: int
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


_TARGETS = {
    # target id: (q source, source rule tag, compare stage, h-side presentation,
    #             h-side rule tag, relabeling into the h-side table)
    "4.4": ("derham_q", "cross", "pre", "derham_h_derived", "cross", None),
    "4.9": ("weyl_q", "action", "pre", "weyl_h_derived", "action", None),
    "3.2": ("derham_q", "cross", "limit", "derham_h", "cross",
            {"phi": "dx", "y1": "dth1", "y2": "dth2"}),
    "3.1": ("derham_q", "differentials", "limit", "derham_h", "differentials",
            {"phi": "dx", "y1": "dth1", "y2": "dth2"}),
    "2.4": ("exterior_pq", "differentials", "limit", "exterior_hp", "differentials", None),
    "2.3": ("superspace_q", "coords", "limit", "superspace_h", "coords", None),
    "3.8": ("weyl_q", "action", "limit", "weyl_h", "action", None),
}

CONTRACTION_TARGETS = tuple(_TARGETS)


def contraction_check(target: str) -> ContractionReport:
    """Compare transformed q-side relations against the stored h-side rules.

    ``pre`` targets compare the solved forms coefficient for coefficient
    before the limit; ``limit`` targets evaluate at p = q = 1 first.  A
    transformed relation without a stored counterpart is reported but does
    not fail the check.
    """
    if target not in _TARGETS:
        raise KeyError(f"unknown contraction target {target!r}; known: {sorted(_TARGETS)}")
    src_name, src_tag, stage, h_name, h_tag, renaming = _TARGETS[target]
    bc = basis_change_for(src_name)
    trs = [tr for tr in transform_relations(src_name, bc) if tr.tag == src_tag]
    solved = solve_transformed(trs, bc.dst)
    h_pres = build(h_name)
    h_core = RuleSet(h_pres.table, [])
    stored = {r.lhs: r for r in h_pres.rules_tagged(h_tag)}

    failures = []
    compared = 0
    extras = []
    for rule in solved:
        if stage == "limit":
            got_rhs = take_limit(rule.rhs)
            got = relabel(got_rhs, h_pres.table, renaming)
            lhs = tuple(
                h_pres.table.index(
                    (renaming or {}).get(bc.dst.table.names[i], bc.dst.table.names[i])
                )
                for i in rule.lhs
            )
        else:
            got = rule.rhs
            lhs = rule.lhs
        stored_rule = stored.get(lhs)
        if stored_rule is None:
            extras.append(h_pres.table.word_str(lhs))
            continue
        compared += 1
        want = normalize(stored_rule.rhs, h_core)
        if got != want:
            failures.append(
                {
                    "lhs": h_pres.table.word_str(lhs),
                    "got": str(got),
                    "want": str(want),
                }
            )
    missing = [
        h_pres.table.word_str(lhs)
        for lhs in stored
        if lhs not in {
            (tuple(
                h_pres.table.index(
                    (renaming or {}).get(bc.dst.table.names[i], bc.dst.table.names[i])
                )
                for i in r.lhs
            ) if stage == "limit" else r.lhs)
            for r in solved
        }
    ]
    if missing:
        failures.append({"missing_stored_rules": missing})
    return ContractionReport(
        target=target,
        compared=compared,
        failures=failures,
        details={"source": src_name, "stage": stage, "uncompared_extra": extras},
    )
