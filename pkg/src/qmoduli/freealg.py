"""Ordered alphabets, free-algebra words and noncommutative polynomials.

Words are tuples of generator indices into an Alphabet; an NcPoly is a finite
QLaurent-linear combination of words.  The comparison of polynomials used by
the rewriting engine (inversion counts, reduced degree) lives here as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import G_ONE, QL_ONE, QLaurent, GaussRat

Word = tuple  # tuple of int generator indices

RESERVED_NAMES = {"q", "i"}


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int = 1
    weight: int = 0  # K acts on the generator by q**weight; always even here
    central: bool = False


class Alphabet:
    """An ordered list of generators; list position is the total order."""

    def __init__(self, generators):
        gens = tuple(generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for g in gens:
            if g.name in RESERVED_NAMES:
                raise ValueError(f"generator name {g.name!r} is reserved")
            if g.weight % 2:
                raise ValueError(f"generator {g.name} has odd weight {g.weight}")
        self.generators = gens
        self._index = {g.name: k for k, g in enumerate(gens)}

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def name(self, idx: int) -> str:
        return self.generators[idx].name

    @property
    def names(self):
        return tuple(g.name for g in self.generators)

    def word_name(self, word: Word) -> str:
        return "*".join(self.name(k) for k in word) if word else "1"

    def central_indices(self):
        return tuple(k for k, g in enumerate(self.generators) if g.central)


def word_inversions(word: Word) -> int:
    """Number of pairs k < l with letter_k >= letter_l.

    Equal letters count: the defining ">=" is taken literally, so a repeated
    letter contributes an inversion.
    """
    n = len(word)
    return sum(1 for k in range(n) for l in range(k + 1, n) if word[k] >= word[l])


def word_descents(word: Word) -> int:
    """Number of pairs k < l with letter_k strictly greater than letter_l.

    This is the count feeding the reduced-degree comparison: with equal
    letters included, a rule whose right side contains a repeated letter
    (such as x22*x22) would rank above its own left side and the standard
    reflection-equation orderings would fail their compatibility checks, so
    the comparator ranks by strict descents only.
    """
    n = len(word)
    return sum(1 for k in range(n) for l in range(k + 1, n) if word[k] > word[l])


def word_grade(alphabet: Alphabet, word: Word, mode: str = "degree") -> int:
    """Sum of per-generator degree (resp. weight) over the letters of a word."""
    gens = alphabet.generators
    if mode == "degree":
        return sum(gens[k].degree for k in word)
    if mode == "weight":
        return sum(gens[k].weight for k in word)
    raise ValueError(f"unknown grade mode {mode!r}")


class NcPoly:
    """Finite QLaurent-linear combination of words over a fixed alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        canon = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, QLaurent):
                    c = QL_ONE * c
                if c:
                    acc = canon.get(w)
                    c = c if acc is None else acc + c
                    if c:
                        canon[w] = c
                    else:
                        del canon[w]
        self.alphabet = alphabet
        self.terms = canon

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, alphabet):
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet):
        return cls(alphabet, {(): QL_ONE})

    @classmethod
    def scalar(cls, alphabet, c):
        return cls(alphabet, {(): c})

    @classmethod
    def gen(cls, alphabet, name, coeff=QL_ONE):
        return cls(alphabet, {(alphabet.index(name),): coeff})

    @classmethod
    def word(cls, alphabet, names, coeff=QL_ONE):
        """Monomial from generator names, e.g. word(A, ["a.1.1", "a.2.2"])."""
        w = tuple(alphabet.index(n) for n in names)
        return cls(alphabet, {w: coeff})

    @classmethod
    def monomial(cls, alphabet, word: Word, coeff=QL_ONE):
        return cls(alphabet, {tuple(word): coeff})

    # -- arithmetic ----------------------------------------------------
    def _check(self, other):
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            raise AlphabetMismatch("operands live over different alphabets")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w)
            acc = c if acc is None else acc + c
            if acc:
                terms[w] = acc
            else:
                terms.pop(w, None)
        out = NcPoly(self.alphabet)
        out.terms = terms
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        out = NcPoly(self.alphabet)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (QLaurent, int)):
            return self.scale(other)
        other = self._coerce(other)
        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                acc = terms.get(w)
                acc = c if acc is None else acc + c
                if acc:
                    terms[w] = acc
                else:
                    terms.pop(w, None)
        out = NcPoly(self.alphabet)
        out.terms = terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (QLaurent, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "NcPoly":
        if isinstance(c, int):
            c = QL_ONE * c
        out = NcPoly(self.alphabet)
        if not c:
            return out
        out.terms = {w: v for w, v in ((w, c0 * c) for w, c0 in self.terms.items()) if v}
        return out

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            return other
        if isinstance(other, (int, QLaurent, GaussRat)):
            return NcPoly.scalar(self.alphabet, QL_ONE * other)
        raise TypeError(f"cannot coerce {type(other).__name__} to NcPoly")

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def coeff(self, word: Word) -> QLaurent:
        from .scalars import QL_ZERO

        return self.terms.get(tuple(word), QL_ZERO)

    def words(self):
        return self.terms.keys()

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def degree(self, mode: str = "degree") -> int:
        return max((word_grade(self.alphabet, w, mode) for w in self.terms), default=0)

    def __repr__(self):
        from .exprs import format_poly

        return f"NcPoly[{format_poly(self)}]"


def rho_data(p: NcPoly) -> dict:
    """The descent profile: length n -> sum of descent counts over words of
    length n with nonzero coefficient."""
    out = {}
    for w in p.terms:
        n = len(w)
        out[n] = out.get(n, 0) + word_descents(w)
    return out


def reduced_rank(p: NcPoly):
    """(reduced degree, rho at that degree), or None when every rho_n is 0."""
    data = rho_data(p)
    best = None
    for n, r in data.items():
        if r != 0 and (best is None or n > best):
            best = n
    if best is None:
        return None
    return (best, data[best])


def reduced_degree_compare(lhs: NcPoly, rhs: NcPoly) -> str:
    """Two-clause comparison: first by reduced degree, then by rho there.

    Returns one of "less", "equal_rank", "greater".  The value
    "incomparable" is reserved by the contract but is never produced: with
    absent reduced degrees treated as minimal, the two clauses always decide.
    """
    if lhs.alphabet != rhs.alphabet:
        raise AlphabetMismatch("cannot compare polynomials over different alphabets")
    a = reduced_rank(lhs)
    b = reduced_rank(rhs)
    if a is None and b is None:
        return "equal_rank"
    if a is None:
        return "less"
    if b is None:
        return "greater"
    if a[0] != b[0]:
        return "less" if a[0] < b[0] else "greater"
    if a[1] != b[1]:
        return "less" if a[1] < b[1] else "greater"
    return "equal_rank"
