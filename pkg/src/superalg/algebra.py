"""Free Z2-graded algebra layer: generator tables, words and elements.

Words are tuples of generator indices; an Element is a finite Scalar-weighted
sum of words.  Multiplication at this layer is pure concatenation -- relations
are imposed only by the rewrite engine.
"""

from __future__ import annotations

from .errors import MissingImageError, TableMismatchError
from .scalars import SC_MINUS_ONE, SC_ONE, Scalar, sc_int

Word = tuple[int, ...]


class GeneratorSymbol:
    __slots__ = ("name", "parity", "index", "is_param")

    def __init__(self, name: str, parity: int, index: int, is_param: bool):
        self.name = name
        self.parity = parity
        self.index = index
        self.is_param = is_param

    def __repr__(self) -> str:
        return f"GeneratorSymbol({self.name!r}, parity={self.parity})"


class GeneratorTable:
    """Ordered table of named generators with parities.

    The listed order is the total generator order used for canonical
    printing and basis enumeration.  Parameter generators (the nilpotent
    odd deformation scalars) are flagged so that every rule set can carry
    the parameter supercommutation core.
    """

    __slots__ = ("name", "symbols", "names", "parities", "param_flags", "_index")

    def __init__(self, name: str, gens: list[tuple[str, int]], params: tuple[str, ...] = ()):
        seen = set()
        for gname, parity in gens:
            if gname in seen:
                raise ValueError(f"duplicate generator name {gname!r}")
            if parity not in (0, 1):
                raise ValueError(f"parity of {gname!r} must be 0 or 1")
            seen.add(gname)
        unknown = set(params) - seen
        if unknown:
            raise ValueError(f"parameter names not in table: {sorted(unknown)}")
        self.name = name
        self.symbols = tuple(
            GeneratorSymbol(g, par, i, g in params) for i, (g, par) in enumerate(gens)
        )
        self.names = tuple(s.name for s in self.symbols)
        self.parities = tuple(s.parity for s in self.symbols)
        self.param_flags = tuple(s.is_param for s in self.symbols)
        self._index = {s.name: s.index for s in self.symbols}

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r} in table {self.name!r}") from None

    def has(self, name: str) -> bool:
        return name in self._index

    def word_parity(self, word: Word) -> int:
        par = 0
        for i in word:
            par ^= self.parities[i]
        return par

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        parts: list[str] = []
        run_name, run_len = self.names[word[0]], 1
        for i in word[1:]:
            if self.names[i] == run_name:
                run_len += 1
            else:
                parts.append(run_name if run_len == 1 else f"{run_name}^{run_len}")
                run_name, run_len = self.names[i], 1
        parts.append(run_name if run_len == 1 else f"{run_name}^{run_len}")
        return "*".join(parts)

    def word(self, *names: str) -> Word:
        return tuple(self.index(n) for n in names)

    # element factories ----------------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {(): SC_ONE})

    def gen(self, name: str) -> "Element":
        return Element(self, {(self.index(name),): SC_ONE})

    def gens(self, names: str) -> list["Element"]:
        return [self.gen(n) for n in names.split()]

    def element(self, terms: dict[Word, Scalar]) -> "Element":
        return Element(self, terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GeneratorTable)
            and self.names == other.names
            and self.parities == other.parities
            and self.param_flags == other.param_flags
        )

    def __hash__(self) -> int:
        return hash((self.names, self.parities, self.param_flags))

    def __repr__(self) -> str:
        return f"GeneratorTable({self.name!r}, {len(self.symbols)} generators)"


class Element:
    """Finite Scalar-weighted sum of words over one generator table."""

    __slots__ = ("table", "terms")

    def __init__(self, table: GeneratorTable, terms: dict[Word, Scalar]):
        self.table = table
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_table(self, other: "Element") -> None:
        if self.table is not other.table and self.table != other.table:
            raise TableMismatchError(
                f"mismatched generator tables: {self.table.name!r} vs {other.table.name!r}"
            )

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        self._check_table(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(w, None)
            else:
                out[w] = v
        return Element(self.table, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return self._coerce(other) + (-self)

    def __neg__(self) -> "Element":
        return Element(self.table, {w: -c for w, c in self.terms.items()})

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            return other
        if isinstance(other, int):
            return Element(self.table, {(): sc_int(other)}) if other else self.table.zero()
        if isinstance(other, Scalar):
            return Element(self.table, {(): other})
        return NotImplemented  # type: ignore[return-value]

    def __mul__(self, other) -> "Element":
        if isinstance(other, int):
            other = sc_int(other)
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check_table(other)
        out: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                v = out.get(w)
                v = c if v is None else v + c
                if v.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = v
        return Element(self.table, out)

    def __rmul__(self, other) -> "Element":
        if isinstance(other, int):
            other = sc_int(other)
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "Element":
        if c.is_zero():
            return self.table.zero()
        if c.is_one():
            return self
        return Element(self.table, {w: k * c for w, k in self.terms.items()})

    def coefficient(self, word: Word) -> Scalar:
        from .scalars import SC_ZERO

        return self.terms.get(word, SC_ZERO)

    def parity(self) -> int | None:
        """0 or 1 when all words share a parity, None when inhomogeneous."""
        if not self.terms:
            return 0
        parities = {self.table.word_parity(w) for w in self.terms}
        if len(parities) == 1:
            return parities.pop()
        return None

    def sorted_terms(self) -> list[tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Element)
            and self.table == other.table
            and self.terms == other.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for w, c in self.sorted_terms():
            word_s = self.table.word_str(w)
            if not w:
                body, negative = _scalar_body(c, bare=True)
            else:
                body, negative = _scalar_body(c, bare=False)
                body = f"{body}{word_s}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Element({self.table.name}: {self})"


def _scalar_body(c: Scalar, bare: bool) -> tuple[str, bool]:
    """Printable coefficient body and sign flag; body omits the sign."""
    negative = False
    if c.num.leading()[1] < 0:
        negative = True
        c = -c
    if not bare and c.is_one():
        return "", negative
    s = str(c)
    if not bare:
        if len(c.num.terms) > 1 and c.den.is_one():
            s = f"({s})"
        s = f"{s}*"
    elif len(c.num.terms) > 1 and c.den.is_one():
        s = f"({s})"
    return s, negative


def parity_of(e: Element) -> int | None:
    return e.parity()


def mul(a: Element, b: Element) -> Element:
    return a * b


def apply_morphism(e: Element, images: dict[str, Element]) -> Element:
    """Multiplicative, Scalar-linear extension of per-generator images.

    Every generator occurring in ``e`` must have an image; all images must
    live over one common target table.
    """
    if not images:
        raise MissingImageError("empty image map")
    target = next(iter(images.values())).table
    for name, img in images.items():
        if img.table != target:
            raise TableMismatchError(f"image of {name!r} lives in a different table")
    by_index: dict[int, Element] = {}
    table = e.table
    result = target.zero()
    for word, coeff in e.terms.items():
        factor = target.one()
        for idx in word:
            img = by_index.get(idx)
            if img is None:
                name = table.names[idx]
                if name not in images:
                    raise MissingImageError(f"no image for generator {name!r}")
                img = images[name]
                by_index[idx] = img
            factor = factor * img
        result = result + factor.scale(coeff)
    return result


def identity_images(table: GeneratorTable) -> dict[str, Element]:
    return {name: table.gen(name) for name in table.names}


def relabel(e: Element, target: GeneratorTable, mapping: dict[str, str] | None = None) -> Element:
    """Move ``e`` to ``target`` by generator name (optionally renaming)."""
    mapping = mapping or {}
    out: dict[Word, Scalar] = {}
    for word, coeff in e.terms.items():
        new = tuple(target.index(mapping.get(e.table.names[i], e.table.names[i])) for i in word)
        prev = out.get(new)
        coeff = coeff if prev is None else prev + coeff
        if coeff.is_zero():
            out.pop(new, None)
        else:
            out[new] = coeff
    return Element(target, out)


def word_element(table: GeneratorTable, word: Word, coeff: Scalar = SC_ONE) -> Element:
    return Element(table, {word: coeff})


def minus_one() -> Scalar:
    return SC_MINUS_ONE
