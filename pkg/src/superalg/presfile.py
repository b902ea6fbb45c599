"""Loader for user presentations in the sectioned text format.

Sections: ``[generators]`` lines of "name parity"; optional ``[order]``
listing names to fix the total order; ``[relations]`` lines "lhs = rhs"
where the left side is a single word; optional ``[checks]`` of expressions
asserted to be zero; optional ``[matrix]`` of entries
"rowpair colpair = expression" defining a 9x9 graded operator.

The parameter generators h and hp are always present and always first.
"""

from __future__ import annotations

from .algebra import GeneratorTable
from .errors import ParseError
from .parser import parse_element
from .presentations import PARAMS, Presentation
from .rewrite import RewriteRule, RuleSet

_SECTIONS = ("generators", "order", "relations", "checks", "matrix")


def parse_presentation_text(text: str, name: str = "user") -> Presentation:
    sections: dict[str, list[str]] = {s: [] for s in _SECTIONS}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current not in sections:
                raise ParseError(f"unknown section {current!r} on line {lineno}")
            continue
        if current is None:
            raise ParseError(f"content before any section on line {lineno}")
        sections[current].append(line)

    gens: list[tuple[str, int]] = []
    for line in sections["generators"]:
        parts = line.split()
        if len(parts) != 2 or parts[1] not in ("0", "1"):
            raise ParseError(f"generator lines are 'name parity': {line!r}")
        if parts[0] in ("h", "hp"):
            continue
        gens.append((parts[0], int(parts[1])))
    if sections["order"]:
        order = " ".join(sections["order"]).split()
        order = [n for n in order if n not in ("h", "hp")]
        by_name = dict(gens)
        if sorted(order) != sorted(by_name):
            raise ParseError("[order] must list exactly the declared generators")
        gens = [(n, by_name[n]) for n in order]
    table = GeneratorTable(name, list(PARAMS) + gens, params=("h", "hp"))

    rules = []
    for line in sections["relations"]:
        if "=" not in line:
            raise ParseError(f"relation lines are 'lhs = rhs': {line!r}")
        lhs_text, rhs_text = line.split("=", 1)
        lhs = parse_element(lhs_text, table)
        rhs = parse_element(rhs_text, table)
        if len(lhs.terms) != 1:
            raise ParseError(f"relation left side must be a single word: {lhs_text!r}")
        ((word, coeff),) = lhs.terms.items()
        if not coeff.is_one():
            rhs = rhs.scale(coeff.inverse())
        rules.append(RewriteRule(word, rhs, "relations"))

    checks = [("checks", parse_element(line, table)) for line in sections["checks"]]

    meta: dict = {}
    if sections["matrix"]:
        entries = {}
        for line in sections["matrix"]:
            if "=" not in line:
                raise ParseError(f"matrix lines are 'rowpair colpair = expr': {line!r}")
            head, expr = line.split("=", 1)
            parts = head.split()
            if len(parts) != 2 or not all(len(p) == 2 and p.isdigit() for p in parts):
                raise ParseError(f"bad matrix indices in {line!r}")
            row = (int(parts[0][0]), int(parts[0][1]))
            col = (int(parts[1][0]), int(parts[1][1]))
            entries[(row, col)] = parse_element(expr, table)
        meta["matrix_entries"] = entries

    return Presentation(
        name=name,
        table=table,
        ruleset=RuleSet(table, rules),
        rules=rules,
        checks=checks,
        meta=meta,
    )


def load_presentation(path: str) -> Presentation:
    import os

    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_presentation_text(text, name=name)
