"""Exterior differential, partial-derivative evaluation, and star structures.

The differential acts by the graded Leibniz rule on generator images; the
deformation parameters are odd constants, so pulling the differential past
them flips the sign.  Partial derivatives act by normal ordering in the
Weyl-type presentation (derivatives move right past coordinates) followed
by dropping every word that still carries a derivative, which is the same
as acting on the unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Element, Word, apply_morphism, word_element
from .errors import SuperalgError
from .presentations import Presentation, build, enumerate_basis
from .rewrite import is_zero_mod, normalize
from .scalars import SC_MINUS_ONE, SC_ONE


# ---------------------------------------------------------------------------
# exterior differential
# ---------------------------------------------------------------------------

def differentiate(f: Element, pres: Presentation | None = None) -> Element:
    """Graded-Leibniz differential of an element of the de Rham complex.

    Coordinates map to their differentials, differentials and parameters
    map to zero; the sign of each term is the parity of the prefix left of
    the differentiated letter.  The result is normalized.
    """
    pres = pres or build("derham_h")
    table = pres.table
    diff_of = pres.meta["differential_of"]
    images = {name: table.index(img) for name, img in diff_of.items()}
    out = table.zero()
    for word, coeff in f.terms.items():
        sign_parity = 0
        for pos, idx in enumerate(word):
            name = table.names[idx]
            img = images.get(name)
            if img is not None:
                new_word = word[:pos] + (img,) + word[pos + 1 :]
                term = word_element(table, new_word, coeff)
                if sign_parity:
                    term = -term
                out = out + term
            sign_parity ^= table.parities[idx]
    return normalize(out, pres.ruleset)


def dsquare_check(max_degree: int, pres: Presentation | None = None):
    """d(d(w)) == 0 for every coordinate basis word up to the given degree."""
    pres = pres or build("derham_h")
    coords = build("superspace_h") if pres.name == "derham_h" else pres
    failures = []
    words = 0
    for degree in range(max_degree + 1):
        for w in enumerate_basis(coords, degree):
            words += 1
            f = word_element(pres.table, _move_word(coords, pres, w))
            dd = differentiate(differentiate(f, pres), pres)
            if not dd.is_zero():
                failures.append((pres.table.word_str(_move_word(coords, pres, w)), str(dd)))
    return CalculusReport("dsquare", words, failures, {"max_degree": max_degree})


def _move_word(src: Presentation, dst: Presentation, w: Word) -> Word:
    return tuple(dst.table.index(src.table.names[i]) for i in w)


# ---------------------------------------------------------------------------
# partial derivatives
# ---------------------------------------------------------------------------

def partial(coord: str, f: Element, pres: Presentation | None = None) -> Element:
    """Value of the partial derivative along ``coord`` on a coordinate element.

    Computed by normal ordering the derivative generator against ``f`` and
    truncating every word still ending in the derivative sector (the
    derivative of the unit is zero).
    """
    pres = pres or build("weyl_h")
    table = pres.table
    deriv_of = pres.meta["derivative_of"]
    if coord not in deriv_of:
        raise SuperalgError(f"{coord!r} is not a coordinate of {pres.name}")
    deriv_indices = {table.index(d) for d in deriv_of.values()}
    for word in f.terms:
        for idx in word:
            if idx in deriv_indices:
                raise SuperalgError("input element already carries derivatives")
    moved = normalize(table.gen(deriv_of[coord]) * f, pres.ruleset)
    kept = {
        w: c for w, c in moved.terms.items() if not any(i in deriv_indices for i in w)
    }
    return Element(table, kept)


def apply_derivative_word(word_elem: Element, f: Element, pres: Presentation) -> Element:
    """Apply a sum of derivative/parameter words as a composed operator."""
    table = pres.table
    deriv_names = {table.index(d): c for c, d in pres.meta["derivative_of"].items()}
    out = table.zero()
    for word, coeff in word_elem.terms.items():
        val = f
        for idx in reversed(word):
            if idx in deriv_names:
                val = partial(deriv_names[idx], val, pres)
            else:
                val = normalize(word_element(table, (idx,)) * val, pres.ruleset)
        out = out + val.scale(coeff)
    return out


@dataclass
class CalculusReport:
    name: str
    cases: int
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def duality_check(max_degree: int) -> CalculusReport:
    """The differential equals the differential-weighted sum of partials.

    For every coordinate basis word f up to the given degree,
    d(f) == dx * px(f) + dth1 * pth1(f) + dth2 * pth2(f) in the de Rham
    presentation.
    """
    derham = build("derham_h")
    weyl = build("weyl_h")
    coords = build("superspace_h")
    failures = []
    cases = 0
    for degree in range(max_degree + 1):
        for w in enumerate_basis(coords, degree):
            cases += 1
            f_weyl = word_element(weyl.table, _move_word(coords, weyl, w))
            rhs = derham.table.zero()
            for coord, diff in derham.meta["differential_of"].items():
                val = partial(coord, f_weyl, weyl)
                val_d = _move_element(val, weyl, derham)
                rhs = rhs + derham.table.gen(diff) * val_d
            rhs = normalize(rhs, derham.ruleset)
            lhs = differentiate(word_element(derham.table, _move_word(coords, derham, w)), derham)
            if lhs != rhs:
                failures.append((coords.table.word_str(w), str(lhs), str(rhs)))
    return CalculusReport("duality", cases, failures, {"max_degree": max_degree})


def _move_element(e: Element, src: Presentation, dst: Presentation) -> Element:
    from .algebra import relabel

    return relabel(e, dst.table)


def delta_property_check() -> CalculusReport:
    """partial_i(x_j) equals the Kronecker delta on the coordinates."""
    weyl = build("weyl_h")
    table = weyl.table
    failures = []
    coords = list(weyl.meta["derivative_of"])
    for ci in coords:
        for cj in coords:
            got = partial(ci, table.gen(cj), weyl)
            want = table.one() if ci == cj else table.zero()
            if got != want:
                failures.append((ci, cj, str(got)))
    return CalculusReport("delta-property", len(coords) ** 2, failures)


def derivative_algebra_check(max_degree: int) -> CalculusReport:
    """The derivative commutation rules hold as operator identities.

    Each derivative-sector rule is applied to every coordinate basis word
    both as written and as its right side; the values must agree.
    """
    weyl = build("weyl_h")
    coords = build("superspace_h")
    failures = []
    cases = 0
    rules = weyl.rules_tagged("derivs")
    for degree in range(max_degree + 1):
        for w in enumerate_basis(coords, degree):
            f = word_element(weyl.table, _move_word(coords, weyl, w))
            for rule in rules:
                cases += 1
                lhs_val = apply_derivative_word(
                    word_element(weyl.table, rule.lhs), f, weyl
                )
                rhs_val = apply_derivative_word(rule.rhs, f, weyl)
                if lhs_val != rhs_val:
                    failures.append(
                        (
                            weyl.table.word_str(rule.lhs),
                            coords.table.word_str(w),
                            str(lhs_val),
                            str(rhs_val),
                        )
                    )
    return CalculusReport("derivative-algebra", cases, failures, {"max_degree": max_degree})


def leibniz_check(trials: int, max_degree: int, seed: int) -> CalculusReport:
    """Graded Leibniz rule on random pairs with homogeneous left factor."""
    import random

    from .scalars import sc_int

    derham = build("derham_h")
    coords = build("superspace_h")
    rng = random.Random(seed)
    table = derham.table
    failures = []
    pool_by_parity: dict[int, list[Word]] = {0: [], 1: []}
    pool: list[Word] = []
    for degree in range(max_degree + 1):
        for w in enumerate_basis(coords, degree):
            moved = _move_word(coords, derham, w)
            pool.append(moved)
            pool_by_parity[table.word_parity(moved)].append(moved)

    def random_element(words):
        out = table.zero()
        for w in words:
            c = rng.randint(-3, 3)
            if c:
                out = out + word_element(table, w, sc_int(c))
        return out

    for _ in range(trials):
        par = rng.randint(0, 1)
        f = random_element(rng.sample(pool_by_parity[par], k=2))
        g = random_element(rng.sample(pool, k=2))
        lhs = differentiate(normalize(f * g, derham.ruleset), derham)
        df_g = normalize(differentiate(f, derham) * g, derham.ruleset)
        f_dg = normalize(f * differentiate(g, derham), derham.ruleset)
        if par:
            f_dg = -f_dg
        if lhs != normalize(df_g + f_dg, derham.ruleset):
            failures.append((str(f), str(g)))
    return CalculusReport("leibniz", trials, failures, {"seed": seed, "max_degree": max_degree})


# ---------------------------------------------------------------------------
# star structures
# ---------------------------------------------------------------------------

@dataclass
class InvolutionSpec:
    """Conjugate-linear involution given by generator images.

    ``reversing`` style flips products ((uv)* = v* u*) and squares to the
    identity; ``preserving`` style keeps the order and squares to -1 on odd
    generators.  Scalar conjugation is the identity (all coefficients are
    rational).
    """

    name: str
    pres: Presentation
    images: dict[str, Element]
    style: str = "reversing"

    def __post_init__(self):
        if self.style not in ("reversing", "preserving"):
            raise ValueError("style must be 'reversing' or 'preserving'")
        table = self.pres.table
        for name in table.names:
            if name not in self.images:
                raise ValueError(f"involution lacks an image for {name!r}")
        for name in table.names:
            twice = normalize(
                star_apply(table.gen(name), self), self.pres.ruleset
            )
            want = table.gen(name)
            if self.style == "preserving" and table.parities[table.index(name)]:
                want = -want
            twice = normalize(star_apply(twice, self), self.pres.ruleset)
            if twice != want:
                raise ValueError(
                    f"involution {self.name!r} does not square correctly on {name!r}"
                )


def star_apply(f: Element, spec: InvolutionSpec) -> Element:
    """Apply the involution: images multiplied in reversed or kept order."""
    table = spec.pres.table
    out = table.zero()
    for word, coeff in f.terms.items():
        seq = reversed(word) if spec.style == "reversing" else word
        prod = table.one()
        for idx in seq:
            prod = prod * spec.images[table.names[idx]]
        out = out + prod.scale(coeff)
    return normalize(out, spec.pres.ruleset)


def _star_images_coordinates(table) -> dict[str, Element]:
    h, x, th1, th2 = table.gen("h"), table.gen("x"), table.gen("th1"), table.gen("th2")
    return {
        "h": -h,
        "hp": table.gen("hp"),
        "x": x,
        "th1": th1,
        "th2": th2 - h * x,
    }


def star_spec(pres_name: str) -> InvolutionSpec:
    """Built-in order-reversing star structure for the named presentation."""
    pres = build(pres_name)
    table = pres.table
    if pres_name == "superspace_h":
        images = _star_images_coordinates(table)
    elif pres_name == "derham_h":
        images = _star_images_coordinates(table)
        images.update(
            {
                "dx": table.gen("dx") + table.gen("hp") * table.gen("dth2"),
                "dth1": -table.gen("dth1"),
                "dth2": -table.gen("dth2"),
            }
        )
    elif pres_name == "weyl_h":
        images = _star_images_coordinates(table)
        images.update(
            {
                "px": -table.gen("px") - table.gen("h") * table.gen("pth2"),
                "pth1": table.gen("pth1"),
                "pth2": table.gen("pth2"),
            }
        )
    else:
        raise ValueError(f"no built-in star structure for {pres_name!r}")
    return InvolutionSpec(name=f"star({pres_name})", pres=pres, images=images)


def star_relation_check(pres: Presentation, spec: InvolutionSpec) -> CalculusReport:
    """Every defining relation maps to zero under the involution."""
    failures = []
    for rule in pres.rules:
        image = star_apply(rule.as_element(), spec)
        if not is_zero_mod(image, pres.ruleset):
            failures.append((pres.table.word_str(rule.lhs), str(image)))
    return CalculusReport(
        f"star-relations({pres.name})", len(pres.rules), failures, {"involution": spec.name}
    )
