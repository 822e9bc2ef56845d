"""Reduction systems, normal forms, ambiguities and Diamond-lemma checking.

A ReductionSystem is a set of oriented rules W -> f on a free algebra,
optionally extended by parametric rule families (rules EF^nG -> f(n) for all
n >= 1, instantiated up to a finite bound).  Normal forms use a deterministic
strategy with a step budget; confluence is established by enumerating all
overlap and inclusion ambiguities and reducing both branches to normal form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .freealg import Alphabet, NcPoly, Word, reduced_degree_compare, word_inversions
from .scalars import QL_ONE, QLaurent


class StepBudgetExceeded(RuntimeError):
    """Raised when a normal-form computation exceeds its rule-application budget."""


class FamilyBoundExceeded(RuntimeError):
    """Raised when a word matches a parametric family beyond the configured bound."""


@dataclass(frozen=True)
class RewriteRule:
    label: str
    lhs: Word
    rhs: NcPoly

    def __post_init__(self):
        if len(self.lhs) < 2:
            raise ValueError(f"rule {self.label}: lhs must have length >= 2")


@dataclass(frozen=True)
class ParametricFamily:
    """Rules prefix + repeat*n + suffix -> rhs(n) for every n >= 1."""

    label: str
    prefix: Word
    repeat: Word
    suffix: Word
    rhs: object  # callable n -> NcPoly

    def lhs(self, n: int) -> Word:
        return self.prefix + self.repeat * n + self.suffix

    def instantiate(self, n: int) -> RewriteRule:
        return RewriteRule(f"{self.label}[{n}]", self.lhs(n), self.rhs(n))


@dataclass(frozen=True)
class Ambiguity:
    kind: str  # "overlap" | "inclusion"
    sigma: str
    tau: str
    a: Word
    b: Word
    c: Word

    def word(self) -> Word:
        return self.a + self.b + self.c

    def describe(self, alphabet: Alphabet) -> str:
        abc = "|".join(alphabet.word_name(w) for w in (self.a, self.b, self.c))
        return f"{self.sigma} {self.tau} {abc}"


def _central_swap_rules(alphabet: Alphabet):
    """Swap rules moving central generators to the front of every word."""
    rules = []
    for z in alphabet.central_indices():
        for g in range(len(alphabet)):
            if g == z:
                continue
            gz = alphabet.generators[g]
            if gz.central and not (g > z):
                continue  # between two centrals only the order-decreasing swap
            rhs = NcPoly.monomial(alphabet, (z, g))
            rules.append(
                RewriteRule(f"swap_{alphabet.name(g)}_{alphabet.name(z)}", (g, z), rhs)
            )
    return rules


class ReductionSystem:
    """Rewrite rules plus families over one alphabet.

    Central-generator swap rules are generated automatically.  The
    deterministic normal-form strategy rewrites, in each step, the leftmost
    matching position using the first matching rule in label order.
    """

    def __init__(self, name, alphabet: Alphabet, rules, families=(), family_bound=4,
                 step_budget=10**6, auto_central_swaps=True):
        self.name = name
        self.alphabet = alphabet
        base = list(rules)
        if auto_central_swaps:
            have = {r.lhs for r in base}
            base += [r for r in _central_swap_rules(alphabet) if r.lhs not in have]
        labels = [r.label for r in base] + [f.label for f in families]
        if len(set(labels)) != len(labels):
            raise ValueError("rule labels must be unique")
        self.rules = tuple(base)
        self.families = tuple(families)
        self.family_bound = family_bound
        self.step_budget = step_budget
        self._materialize()
        self._nf_cache = {}

    def _materialize(self):
        rules = list(self.rules)
        for fam in self.families:
            rules += [fam.instantiate(n) for n in range(1, self.family_bound + 1)]
        rules.sort(key=lambda r: r.label)
        self._rules_m = tuple(rules)
        by_first = {}
        for r in self._rules_m:
            by_first.setdefault(r.lhs[0], []).append(r)
        self._by_first = by_first

    def with_family_bound(self, bound: int) -> "ReductionSystem":
        if bound == self.family_bound:
            return self
        return ReductionSystem(self.name, self.alphabet, self.rules, self.families,
                               family_bound=bound, step_budget=self.step_budget,
                               auto_central_swaps=False)

    def materialized_rules(self):
        return self._rules_m

    def rule(self, label: str) -> RewriteRule:
        for r in self._rules_m:
            if r.label == label:
                return r
        raise KeyError(f"no rule labelled {label!r} in {self.name}")

    # -- matching ------------------------------------------------------
    def _check_family_bound(self, word: Word, pos: int):
        for fam in self.families:
            np, nr, ns = len(fam.prefix), len(fam.repeat), len(fam.suffix)
            if word[pos:pos + np] != fam.prefix:
                continue
            k = pos + np
            n = 0
            while word[k:k + nr] == fam.repeat:
                k += nr
                n += 1
                if n > self.family_bound and word[k:k + ns] == fam.suffix:
                    raise FamilyBoundExceeded(
                        f"word matches {fam.label}[{n}] but family_bound={self.family_bound}"
                    )

    def leftmost_redex(self, word: Word):
        """(position, rule) of the first redex, or None if the word is reduced."""
        n = len(word)
        for pos in range(n):
            for r in self._by_first.get(word[pos], ()):
                if word[pos:pos + len(r.lhs)] == r.lhs:
                    return pos, r
            self._check_family_bound(word, pos)
        return None

    def is_reduced_word(self, word: Word) -> bool:
        return self.leftmost_redex(word) is None

    def all_redexes(self, word: Word):
        out = []
        for pos in range(len(word)):
            for r in self._by_first.get(word[pos], ()):
                if word[pos:pos + len(r.lhs)] == r.lhs:
                    out.append((pos, r))
            self._check_family_bound(word, pos)
        return out

    def apply_at(self, word: Word, pos: int, rule: RewriteRule) -> NcPoly:
        pre, post = word[:pos], word[pos + len(rule.lhs):]
        terms = {pre + v + post: c for v, c in rule.rhs.terms.items()}
        return NcPoly(self.alphabet, terms)

    # -- normal forms ----------------------------------------------------
    def normal_form_word(self, word: Word, budget=None) -> dict:
        """Normal form of a single word, as a terms dict; memoized."""
        cache = self._nf_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        remaining = [self.step_budget if budget is None else budget]
        stack = [word]
        redexes = {}
        while stack:
            top = stack[-1]
            if top in cache:
                stack.pop()
                continue
            if top not in redexes:
                redexes[top] = self.leftmost_redex(top)
            red = redexes[top]
            if red is None:
                cache[top] = {top: QL_ONE}
                stack.pop()
                continue
            pos, rule = red
            pre, post = top[:pos], top[pos + len(rule.lhs):]
            children = [pre + v + post for v in rule.rhs.terms]
            missing = [w for w in children if w not in cache]
            if missing:
                stack.extend(missing)
                continue
            remaining[0] -= 1
            if remaining[0] < 0:
                raise StepBudgetExceeded(
                    f"step budget exhausted reducing in {self.name}"
                )
            acc = {}
            for v, c in rule.rhs.terms.items():
                for w2, c2 in cache[pre + v + post].items():
                    val = acc.get(w2)
                    val = c * c2 if val is None else val + c * c2
                    if val:
                        acc[w2] = val
                    else:
                        acc.pop(w2, None)
            cache[top] = acc
            stack.pop()
        return cache[word]

    def normal_form(self, p: NcPoly) -> NcPoly:
        """Reduce every monomial of p to its unique reduced representative."""
        acc = {}
        for w, c in p.terms.items():
            for w2, c2 in self.normal_form_word(w).items():
                val = acc.get(w2)
                val = c * c2 if val is None else val + c * c2
                if val:
                    acc[w2] = val
                else:
                    acc.pop(w2, None)
        out = NcPoly(self.alphabet)
        out.terms = acc
        return out

    def random_strategy_nf(self, p: NcPoly, seed: int) -> NcPoly:
        """Reduce p choosing random redexes and rules; on a confluent system
        the result equals normal_form(p)."""
        rng = random.Random(seed)
        terms = dict(p.terms)
        budget = self.step_budget
        while True:
            candidates = []
            for w in terms:
                for pos, rule in self.all_redexes(w):
                    candidates.append((w, pos, rule))
            if not candidates:
                out = NcPoly(self.alphabet)
                out.terms = terms
                return out
            candidates.sort(key=lambda t: (t[0], t[1], t[2].label))
            w, pos, rule = rng.choice(candidates)
            budget -= 1
            if budget < 0:
                raise StepBudgetExceeded(f"random strategy exhausted budget in {self.name}")
            c = terms.pop(w)
            for w2, c2 in self.apply_at(w, pos, rule).terms.items():
                val = terms.get(w2)
                val = c * c2 if val is None else val + c * c2
                if val:
                    terms[w2] = val
                else:
                    terms.pop(w2, None)

    # -- ambiguities -----------------------------------------------------
    def find_ambiguities(self):
        """All overlap and inclusion ambiguities among materialized rules."""
        out = []
        rules = self._rules_m
        for sig in rules:
            for tau in rules:
                ws, wt = sig.lhs, tau.lhs
                # overlap: ws = A B, wt = B C with B nonempty
                for blen in range(1, min(len(ws), len(wt))):
                    if ws[len(ws) - blen:] == wt[:blen]:
                        a, b, c = ws[:len(ws) - blen], wt[:blen], wt[blen:]
                        out.append(Ambiguity("overlap", sig.label, tau.label, a, b, c))
                # inclusion: ws = B strictly inside wt = A B C
                if sig.label != tau.label and len(ws) <= len(wt):
                    for start in range(len(wt) - len(ws) + 1):
                        if wt[start:start + len(ws)] == ws and len(ws) < len(wt):
                            a = wt[:start]
                            c = wt[start + len(ws):]
                            out.append(Ambiguity("inclusion", sig.label, tau.label, a, ws, c))
        out.sort(key=lambda amb: (amb.sigma, amb.tau, len(amb.a), amb.a))
        return out

    def check_ambiguity(self, amb: Ambiguity):
        """Reduce A.B.C starting with sigma and with tau; compare normal forms."""
        word = amb.word()
        sig = self.rule(amb.sigma)
        tau = self.rule(amb.tau)
        if amb.kind == "overlap":
            first = self.apply_at(word, 0, sig)
            second = self.apply_at(word, len(amb.a), tau)
        else:
            first = self.apply_at(word, len(amb.a), sig)
            second = self.apply_at(word, 0, tau)
        left = self.normal_form(first)
        right = self.normal_form(second)
        return AmbiguityResult(amb, left == right, left, right)

    # -- compatibility and confluence -------------------------------------
    def _noncentral_len(self, word: Word) -> int:
        gens = self.alphabet.generators
        return sum(1 for k in word if not gens[k].central)

    def check_compatibility(self):
        """Verify every rhs monomial sits at or below its lhs.

        A monomial passes if it compares "less" or "equal_rank" against the
        lhs under the reduced-degree ordering, or if it strictly drops the
        number of non-central letters (the per-system termination certificate
        used by the recursive families, whose instances grow central padding).
        """
        violations = []
        checked = []
        for r in self._rules_m:
            lhs_poly = NcPoly.monomial(self.alphabet, r.lhs)
            lhs_nc = self._noncentral_len(r.lhs)
            for w in r.rhs.terms:
                verdict = reduced_degree_compare(
                    NcPoly.monomial(self.alphabet, w), lhs_poly
                )
                ordered = verdict in ("less", "equal_rank")
                certified = self._noncentral_len(w) < lhs_nc
                checked.append((r.label, w, verdict, certified))
                if not (ordered or certified):
                    violations.append((r.label, w, verdict))
        return CompatibilityReport(self.name, tuple(checked), tuple(violations))

    def check_confluence(self):
        compat = self.check_compatibility()
        results = []
        errors = []
        for amb in self.find_ambiguities():
            try:
                results.append(self.check_ambiguity(amb))
            except (StepBudgetExceeded, FamilyBoundExceeded) as exc:
                errors.append((amb, str(exc)))
        return ConfluenceReport(self.name, compat, tuple(results), tuple(errors))

    # -- reduced monomials -------------------------------------------------
    def reduced_monomials(self, max_degree: int):
        """All rule-irreducible words of degree <= max_degree, length-then-lex."""
        degrees = [g.degree for g in self.alphabet.generators]
        out = []
        letters = range(len(self.alphabet))

        def extend(word, deg):
            out.append(word)
            for k in letters:
                d = deg + degrees[k]
                if d > max_degree:
                    continue
                w2 = word + (k,)
                if self._new_suffix_reduced(w2):
                    extend(w2, d)

        extend((), 0)
        out.sort(key=lambda w: (len(w), w))
        return out

    def _new_suffix_reduced(self, word: Word):
        """word[:-1] is reduced; check no rule lhs ends at the final letter."""
        n = len(word)
        maxlen = max((len(r.lhs) for r in self._rules_m), default=0)
        for L in range(2, maxlen + 1):
            if L > n:
                break
            start = n - L
            for r in self._by_first.get(word[start], ()):
                if len(r.lhs) == L and word[start:] == r.lhs:
                    return False
        return True


@dataclass(frozen=True)
class AmbiguityResult:
    ambiguity: Ambiguity
    resolvable: bool
    witness_left: NcPoly
    witness_right: NcPoly


@dataclass(frozen=True)
class CompatibilityReport:
    system: str
    checked: tuple
    violations: tuple

    @property
    def compatible(self):
        return not self.violations

    def as_text(self, alphabet: Alphabet) -> str:
        lines = [f"COMPAT {self.system} {'OK' if self.compatible else 'FAIL'}"]
        for label, w, verdict in self.violations:
            lines.append(f"VIOLATION {label} {alphabet.word_name(w)} {verdict}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ConfluenceReport:
    system: str
    compatibility: CompatibilityReport
    results: tuple
    errors: tuple = ()

    @property
    def all_resolvable(self):
        return not self.errors and all(r.resolvable for r in self.results)

    @property
    def ok(self):
        return self.compatibility.compatible and self.all_resolvable

    def count(self, kind=None):
        if kind is None:
            return len(self.results)
        return sum(1 for r in self.results if r.ambiguity.kind == kind)

    def as_text(self, alphabet: Alphabet) -> str:
        from .exprs import format_poly

        lines = [self.compatibility.as_text(alphabet)]
        for r in self.results:
            amb = r.ambiguity
            status = "RESOLVABLE" if r.resolvable else "FAIL"
            lines.append(f"AMB {amb.describe(alphabet)} {status}")
            if not r.resolvable:
                lines.append(f"  left:  {format_poly(r.witness_left)}")
                lines.append(f"  right: {format_poly(r.witness_right)}")
        for amb, msg in self.errors:
            lines.append(f"AMB {amb.describe(alphabet)} ERROR {msg}")
        lines.append(
            f"CONFLUENCE {self.system} {'OK' if self.ok else 'FAIL'} "
            f"({self.count('overlap')} overlap, {self.count('inclusion')} inclusion)"
        )
        return "\n".join(lines)

    def as_json(self):
        return {
            "system": self.system,
            "compatible": self.compatibility.compatible,
            "ambiguities": [
                {
                    "kind": r.ambiguity.kind,
                    "sigma": r.ambiguity.sigma,
                    "tau": r.ambiguity.tau,
                    "resolvable": r.resolvable,
                }
                for r in self.results
            ],
            "ok": self.ok,
        }


def orient_relation(alphabet: Alphabet, relation: NcPoly, label: str) -> RewriteRule:
    """Turn a relation (= 0) into a rule by solving for its unique word with
    a strictly descending adjacent pair; the rule has unit leading coefficient."""
    heads = [
        w
        for w in relation.terms
        if len(w) >= 2 and any(w[k] > w[k + 1] for k in range(len(w) - 1))
    ]
    if len(heads) != 1:
        raise ValueError(
            f"relation has {len(heads)} descending words; cannot orient {label}"
        )
    head = heads[0]
    c = relation.terms[head]
    rest = NcPoly(alphabet, {w: v for w, v in relation.terms.items() if w != head})
    rhs = (-rest).scale(c.inverse())
    return RewriteRule(label, head, rhs)
