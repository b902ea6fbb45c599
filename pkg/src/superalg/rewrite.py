"""Oriented rewriting of elements to normal form, with confluence checking.

A RuleSet holds the presentation's oriented rules plus the parameter core:
nilpotency of the odd deformation scalars and their supercommutation with
every other generator, oriented to pull parameters to the far left.  The
reduction strategy is leftmost redex, first matching rule in list order,
so outputs are reproducible bit for bit.  Termination is enforced by a step
budget rather than a proved ordering.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product

from .algebra import Element, GeneratorTable, Word, word_element
from .errors import StepLimitExceeded
from .scalars import SC_MINUS_ONE, SC_ONE, Scalar

DEFAULT_STEP_LIMIT = 100_000
_STEP_LIMIT_ENV = "SUPERALG_STEP_LIMIT"


def default_step_limit() -> int:
    raw = os.environ.get(_STEP_LIMIT_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_STEP_LIMIT


class RewriteRule:
    """Oriented rule lhs -> rhs; lhs is a word of length >= 2."""

    __slots__ = ("lhs", "rhs", "tag")

    def __init__(self, lhs: Word, rhs: Element, tag: str = ""):
        if len(lhs) < 2:
            raise ValueError("rule left side must be a word of length >= 2")
        table = rhs.table
        lhs_parity = table.word_parity(lhs)
        for w in rhs.terms:
            if table.word_parity(w) != lhs_parity:
                raise ValueError(
                    f"rule {table.word_str(lhs)} -> {rhs} is not parity homogeneous"
                )
            if _contains(w, lhs):
                raise ValueError(
                    f"rule right side {rhs} contains its own left side {table.word_str(lhs)}"
                )
        self.lhs = lhs
        self.rhs = rhs
        self.tag = tag

    @property
    def table(self) -> GeneratorTable:
        return self.rhs.table

    def as_element(self) -> Element:
        """lhs - rhs, the relation this rule orients."""
        return word_element(self.rhs.table, self.lhs) - self.rhs

    def __repr__(self) -> str:
        return f"RewriteRule({self.rhs.table.word_str(self.lhs)} -> {self.rhs}, tag={self.tag!r})"


def _contains(word: Word, sub: Word) -> bool:
    n, m = len(word), len(sub)
    if m > n:
        return False
    return any(word[i : i + m] == sub for i in range(n - m + 1))


def parameter_core_rules(table: GeneratorTable) -> list[RewriteRule]:
    """Nilpotency and supercommutation rules for the parameter generators.

    Parameters square to zero, anticommute among themselves (kept sorted in
    table order), and move left past every non-parameter generator with the
    graded sign.
    """
    params = [i for i, f in enumerate(table.param_flags) if f]
    rules: list[RewriteRule] = []
    for i in params:
        rules.append(RewriteRule((i, i), table.zero(), "params"))
    for i in params:
        for j in params:
            if j < i:  # out of order pair, both odd
                rules.append(
                    RewriteRule((i, j), word_element(table, (j, i), SC_MINUS_ONE), "params")
                )
    for g in range(len(table)):
        if table.param_flags[g]:
            continue
        for i in params:
            sign = SC_MINUS_ONE if table.parities[g] and table.parities[i] else SC_ONE
            rules.append(RewriteRule((g, i), word_element(table, (i, g), sign), "params"))
    return rules


class RuleSet:
    """Ordered rule list over one table, parameter core appended."""

    __slots__ = ("table", "rules", "core_size", "_by_first", "_nf_cache")

    def __init__(self, table: GeneratorTable, rules: list[RewriteRule], with_core: bool = True):
        for r in rules:
            if r.rhs.table != table:
                raise ValueError("rule built over a different table")
        core = parameter_core_rules(table) if with_core else []
        self.table = table
        self.rules = list(rules) + core
        self.core_size = len(core)
        self._by_first: dict[int, list[RewriteRule]] = {}
        for r in self.rules:
            self._by_first.setdefault(r.lhs[0], []).append(r)
        self._nf_cache: dict[Word, Element] = {}

    def presentation_rules(self) -> list[RewriteRule]:
        return self.rules[: len(self.rules) - self.core_size]

    def find_redex(self, word: Word) -> tuple[int, RewriteRule] | None:
        n = len(word)
        by_first = self._by_first
        for pos in range(n):
            cands = by_first.get(word[pos])
            if not cands:
                continue
            for rule in cands:
                m = len(rule.lhs)
                if pos + m <= n and word[pos : pos + m] == rule.lhs:
                    return pos, rule
        return None

    def is_irreducible(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def one_step(self, word: Word, pos: int, rule: RewriteRule) -> Element:
        prefix, suffix = word[:pos], word[pos + len(rule.lhs) :]
        out: dict[Word, Scalar] = {}
        for w, c in rule.rhs.terms.items():
            key = prefix + w + suffix
            prev = out.get(key)
            c2 = c if prev is None else prev + c
            if c2.is_zero():
                out.pop(key, None)
            else:
                out[key] = c2
        return Element(self.table, out)


@dataclass
class ReductionTrace:
    """Replayable record of one element-level reduction."""

    start: Element
    rules: "RuleSet"
    steps: list[tuple[RewriteRule, int, Word, Element]] = field(default_factory=list)

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def replay(self) -> Element:
        """Reapply every recorded rewrite from the start element."""
        cur = self.start
        for rule, pos, word, snapshot in self.steps:
            coeff = cur.terms[word]
            replaced = self.rules.one_step(word, pos, rule).scale(coeff)
            cur = cur - word_element(self.rules.table, word, coeff) + replaced
            if cur != snapshot:
                raise AssertionError("trace replay diverged from recorded reduction")
        return cur


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise StepLimitExceeded("step limit exceeded during normalization")


def _nf_word(rules: RuleSet, word: Word, budget: _Budget) -> Element:
    """Normal form of a single word, memoized on the rule set."""
    cache = rules._nf_cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    # iterative post-order over the rewrite DAG
    expansions: dict[Word, list[tuple[Scalar, Word]]] = {}
    on_path: set[Word] = set()
    stack: list[Word] = [word]
    while stack:
        w = stack[-1]
        if w in cache:
            stack.pop()
            on_path.discard(w)
            continue
        exp = expansions.get(w)
        if exp is None:
            redex = rules.find_redex(w)
            if redex is None:
                cache[w] = word_element(rules.table, w)
                stack.pop()
                continue
            budget.spend()
            pos, rule = redex
            step = rules.one_step(w, pos, rule)
            expansions[w] = [(c, w2) for w2, c in step.terms.items()]
            on_path.add(w)
            for _c, w2 in expansions[w]:
                if w2 not in cache:
                    if w2 in on_path:
                        raise StepLimitExceeded(
                            f"rewriting cycle at word {rules.table.word_str(w2)}"
                        )
                    stack.append(w2)
            continue
        ready = all(w2 in cache for _c, w2 in exp)
        if ready:
            total = rules.table.zero()
            for c, w2 in exp:
                total = total + cache[w2].scale(c)
            cache[w] = total
            del expansions[w]
            on_path.discard(w)
            stack.pop()
        else:
            for _c, w2 in exp:
                if w2 not in cache:
                    stack.append(w2)
    return cache[word]


def normalize(
    e: Element,
    rules: RuleSet,
    step_limit: int | None = None,
    trace: bool = False,
):
    """Reduce ``e`` to its normal form modulo ``rules``.

    Returns the normal form, or ``(normal_form, ReductionTrace)`` when
    ``trace`` is set.  Raises StepLimitExceeded when the budget runs out.
    """
    limit = step_limit if step_limit is not None else default_step_limit()
    if trace:
        return _normalize_traced(e, rules, limit)
    budget = _Budget(limit)
    out = rules.table.zero()
    for word, coeff in e.terms.items():
        out = out + _nf_word(rules, word, budget).scale(coeff)
    return out


def _normalize_traced(e: Element, rules: RuleSet, limit: int) -> tuple[Element, ReductionTrace]:
    tr = ReductionTrace(start=e, rules=rules)
    cur = e
    steps = 0
    while True:
        hit = None
        for word, _c in cur.sorted_terms():
            redex = rules.find_redex(word)
            if redex is not None:
                hit = (word, redex)
                break
        if hit is None:
            return cur, tr
        steps += 1
        if steps > limit:
            raise StepLimitExceeded("step limit exceeded during normalization", trace=tr)
        word, (pos, rule) = hit
        coeff = cur.terms[word]
        replaced = rules.one_step(word, pos, rule).scale(coeff)
        cur = cur - word_element(rules.table, word, coeff) + replaced
        tr.steps.append((rule, pos, word, cur))


def is_zero_mod(e: Element, rules: RuleSet, step_limit: int | None = None) -> bool:
    return normalize(e, rules, step_limit=step_limit).is_zero()


# ---------------------------------------------------------------------------
# critical pairs / local confluence
# ---------------------------------------------------------------------------

@dataclass
class CriticalPair:
    word: Word
    word_str: str
    first: Element
    second: Element
    resolved: bool


@dataclass
class ConfluenceReport:
    table_name: str
    max_overlap_len: int
    words_examined: int
    pairs_checked: int
    failures: list[CriticalPair]

    @property
    def passed(self) -> bool:
        return not self.failures


def _all_matches(rules: RuleSet, word: Word) -> list[tuple[int, RewriteRule]]:
    out = []
    n = len(word)
    for pos in range(n):
        cands = rules._by_first.get(word[pos])
        if not cands:
            continue
        for rule in cands:
            m = len(rule.lhs)
            if pos + m <= n and word[pos : pos + m] == rule.lhs:
                out.append((pos, rule))
    return out


def critical_pairs(
    rules: RuleSet,
    max_overlap_len: int = 3,
    step_limit: int | None = None,
) -> tuple[int, list[CriticalPair]]:
    """All words up to the given length with two distinct first reductions.

    Each such word is reduced both ways to a full normal form; a pair is
    resolved when the two normal forms agree.  Returns (words examined,
    pairs) where pairs lists one entry per alternative reduction.
    """
    if max_overlap_len < 2:
        raise ValueError("max_overlap_len must be at least 2")
    table = rules.table
    pairs: list[CriticalPair] = []
    examined = 0
    indices = range(len(table))
    for length in range(2, max_overlap_len + 1):
        for combo in product(indices, repeat=length):
            examined += 1
            matches = _all_matches(rules, combo)
            if len(matches) < 2:
                continue
            results = []
            for pos, rule in matches:
                stepped = rules.one_step(combo, pos, rule)
                results.append(normalize(stepped, rules, step_limit=step_limit))
            base = results[0]
            for alt in results[1:]:
                pairs.append(
                    CriticalPair(
                        word=combo,
                        word_str=table.word_str(combo),
                        first=base,
                        second=alt,
                        resolved=(base == alt),
                    )
                )
    return examined, pairs


def check_confluence(
    rules: RuleSet,
    max_overlap_len: int = 3,
    step_limit: int | None = None,
    table_name: str = "",
) -> ConfluenceReport:
    examined, pairs = critical_pairs(rules, max_overlap_len, step_limit=step_limit)
    failures = [p for p in pairs if not p.resolved]
    return ConfluenceReport(
        table_name=table_name or rules.table.name,
        max_overlap_len=max_overlap_len,
        words_examined=examined,
        pairs_checked=len(pairs),
        failures=failures,
    )


# ---------------------------------------------------------------------------
# solving relations for a designated word over the parameter-local ring
# ---------------------------------------------------------------------------

def split_parameter_prefix(table: GeneratorTable, word: Word) -> tuple[Word, Word]:
    """Split a parameter-core-normalized word into (parameter prefix, tail)."""
    k = 0
    for i in word:
        if table.param_flags[i]:
            k += 1
        else:
            break
    return word[:k], word[k:]


def invert_parameter_unit(u: Element, core: RuleSet) -> Element:
    """Inverse of a unit in the parameter ring (scalar part + nilpotents)."""
    table = u.table
    c0 = u.coefficient(())
    if c0.is_zero():
        raise ValueError(f"not a unit in the parameter ring: {u}")
    for w in u.terms:
        if any(not table.param_flags[i] for i in w):
            raise ValueError(f"not a pure parameter element: {u}")
    c0_inv = SC_ONE / c0
    m = (u - c0).scale(c0_inv)
    # parameters are nilpotent of order 2, so m**3 vanishes
    inv = (table.one() - m + normalize(m * m, core)).scale(c0_inv)
    if normalize(u * inv, core) != table.one():
        raise AssertionError(f"unit inversion failed for {u}")
    return inv


def solve_for(relation: Element, word: Word, core: RuleSet, tag: str = "") -> RewriteRule:
    """Orient ``relation = 0`` as a rule ``word -> rest``.

    The coefficient of ``word`` (including its parameter-dressed copies)
    must be a unit of the parameter ring.  The relation is first normalized
    with the parameter core so parameter prefixes are in canonical position.
    """
    table = relation.table
    rel = normalize(relation, core)
    unit_terms: dict[Word, Scalar] = {}
    rest_terms: dict[Word, Scalar] = {}
    for w, c in rel.terms.items():
        prefix, tail = split_parameter_prefix(table, w)
        if tail == word:
            unit_terms[prefix] = c
        else:
            rest_terms[w] = c
    if not unit_terms:
        raise ValueError(f"relation has no {table.word_str(word)} component")
    u = Element(table, unit_terms)
    u_inv = invert_parameter_unit(u, core)
    rest = Element(table, rest_terms)
    rhs = normalize(-(u_inv * rest), core)
    return RewriteRule(word, rhs, tag)
