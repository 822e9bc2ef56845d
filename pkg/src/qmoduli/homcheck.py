"""Finitely presented algebras, morphisms between them, and the
quantum-group action with its invariance and centrality checks.

A morphism carries a generator assignment plus an optional scalar map (the
image of q).  check_morphism pushes every relation of a declared relation
source through a declared chain of assignments and reduces in the final
target's confluent rewriting system; for the maps whose printed target has no
such system (the Teschner-type algebras), the declared route checks the
inverse assignment instead, which is recorded on the morphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import Alphabet, NcPoly, word_grade
from .rewrite import ReductionSystem
from .scalars import QL_ONE, QLaurent, q_int


@dataclass
class Presentation:
    """A named algebra: alphabet, relations (each read as relation = 0) and,
    when a confluent orientation is known, its rewriting system."""

    name: str
    alphabet: Alphabet
    relations: tuple
    relation_labels: tuple = ()
    rewriting: ReductionSystem = None

    def __post_init__(self):
        if not self.relation_labels:
            self.relation_labels = tuple(f"r{k + 1}" for k in range(len(self.relations)))
        for rel in self.relations:
            if rel.alphabet != self.alphabet:
                raise ValueError(f"relation of {self.name} is over a foreign alphabet")

    def validate_rewriting(self):
        """Every relation must reduce to zero in the attached system."""
        if self.rewriting is None:
            return True
        return all(self.rewriting.normal_form(r).is_zero for r in self.relations)


class MorphismError(ValueError):
    pass


@dataclass
class AlgebraMorphism:
    """A generator assignment source -> target with optional scalar map.

    q_image is the image of the source q as a unit monomial of the target
    (default: q itself).  check_route, when set, names the presentation whose
    relations are verified and the chain of morphisms pushing them into a
    reducible target; by default the route is (source relations, [self]).
    """

    name: str
    source: Presentation
    target: Presentation
    assignment: dict
    q_image: QLaurent = None
    check_route: "CheckRoute" = None
    note: str = ""

    def __post_init__(self):
        if self.q_image is None:
            self.q_image = q_int(1)
        missing = [g for g in self.source.alphabet.names if g not in self.assignment]
        if missing:
            raise MorphismError(f"morphism {self.name}: unassigned generators {missing}")
        for g, img in self.assignment.items():
            if img.alphabet != self.target.alphabet:
                raise MorphismError(
                    f"morphism {self.name}: image of {g} is over the wrong alphabet"
                )
        if not self.q_image.is_monomial():
            raise MorphismError(f"morphism {self.name}: q must map to a unit monomial")

    # -- scalar transport ---------------------------------------------
    def map_scalar(self, c: QLaurent) -> QLaurent:
        """Transport a source coefficient through the scalar map."""
        out = {}
        sqrt = None
        acc = QLaurent()
        for half, g in c.terms.items():
            if half % 2 == 0:
                img = self.q_image ** (half // 2)
            else:
                if sqrt is None:
                    sqrt = self.q_image.sqrt()
                img = sqrt ** half
            acc = acc + img * QLaurent({0: g})
        return acc

    def apply(self, p: NcPoly) -> NcPoly:
        if p.alphabet != self.source.alphabet:
            raise MorphismError(f"morphism {self.name}: argument over wrong alphabet")
        A = self.target.alphabet
        out = NcPoly.zero(A)
        for w, c in p.terms.items():
            img = NcPoly.scalar(A, self.map_scalar(c))
            for k in w:
                img = img * self.assignment[p.alphabet.name(k)]
            out = out + img
        return out


@dataclass
class CheckRoute:
    """What check_morphism actually verifies: the relations of
    relation_source pushed through chain (a list of morphisms composable in
    order) and reduced in the final target's rewriting system."""

    relation_source: Presentation
    chain: tuple
    note: str = ""


@dataclass
class MorphismReport:
    morphism: str
    residuals: tuple  # (relation label, NcPoly)
    note: str = ""

    @property
    def ok(self):
        return all(r.is_zero for _, r in self.residuals)

    def as_text(self) -> str:
        from .exprs import format_poly

        lines = []
        for label, res in self.residuals:
            status = "OK" if res.is_zero else "FAIL"
            lines.append(f"REL {self.morphism} {label} {status}")
            if not res.is_zero:
                lines.append(f"  residual: {format_poly(res)}")
        lines.append(f"HOM {self.morphism} {'OK' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def check_morphism(m: AlgebraMorphism) -> MorphismReport:
    """Reduce the image of every relation along the declared route."""
    route = m.check_route or CheckRoute(m.source, (m,))
    system = route.chain[-1].target.rewriting
    if system is None:
        raise MorphismError(
            f"morphism {m.name}: final target has no rewriting system and no "
            "postcomposition was declared"
        )
    residuals = []
    for label, rel in zip(route.relation_source.relation_labels, route.relation_source.relations):
        img = rel
        for hop in route.chain:
            img = hop.apply(img)
        residuals.append((label, system.normal_form(img)))
    return MorphismReport(m.name, tuple(residuals), note=route.note)


# -- the quantum-group action ------------------------------------------------


@dataclass
class ActionSpec:
    """Generator tables for the E and F actions; K acts by the alphabet
    weights (K.g = q^weight g)."""

    alphabet: Alphabet
    e_images: dict
    f_images: dict

    def weight(self, idx: int) -> int:
        return self.alphabet.generators[idx].weight


def act(gen: str, p: NcPoly, spec: ActionSpec) -> NcPoly:
    """Apply K, E or F to a polynomial through the coproduct rules
    E.(x w) = (E.x) w + q^-weight(x) x (E.w) and F.(x w) = (F.x) (K.w) + x (F.w)."""
    A = spec.alphabet
    if p.alphabet != A:
        raise ValueError("polynomial is over a different alphabet")
    if gen == "K":
        out = NcPoly.zero(A)
        for w, c in p.terms.items():
            out = out + NcPoly.monomial(A, w, c * q_int(word_grade(A, w, "weight")))
        return out
    if gen not in ("E", "F"):
        raise ValueError(f"unknown action generator {gen!r}")
    tables = spec.e_images if gen == "E" else spec.f_images
    out = NcPoly.zero(A)
    for w, c in p.terms.items():
        out = out + _act_word(gen, w, spec, tables).scale(c)
    return out


def _act_word(gen: str, w, spec: ActionSpec, tables) -> NcPoly:
    A = spec.alphabet
    if not w:
        return NcPoly.zero(A)  # counit: E and F annihilate 1
    head, tail = w[0], w[1:]
    name = A.name(head)
    if name not in tables:
        raise KeyError(f"no {gen}-action table entry for generator {name}")
    head_poly = NcPoly.monomial(A, (head,))
    rest = NcPoly.monomial(A, tail)
    acted_tail = _act_word(gen, tail, spec, tables)
    if gen == "E":
        # E.(x w) = (E.x) w + q^-weight(x) x (E.w)
        return tables[name] * rest + (head_poly * acted_tail).scale(q_int(-spec.weight(head)))
    # F.(x w) = (F.x) (K.w) + x (F.w);  K.w = q^weight(w) w
    kw = q_int(word_grade(A, tail, "weight"))
    return tables[name].scale(kw) * rest + head_poly * acted_tail


def is_invariant(p: NcPoly, spec: ActionSpec, system: ReductionSystem) -> bool:
    """True iff E and F kill p (after reduction) and K fixes it."""
    if act("K", p, spec) != p:
        return False
    if not system.normal_form(act("E", p, spec)).is_zero:
        return False
    return system.normal_form(act("F", p, spec)).is_zero


@dataclass
class CentralityReport:
    element: str
    commutators: tuple  # (generator name, NcPoly)

    @property
    def ok(self):
        return all(r.is_zero for _, r in self.commutators)


def centrality_check(p: NcPoly, system: ReductionSystem, label: str = "element") -> CentralityReport:
    """Normal form of p g - g p for every generator g."""
    A = p.alphabet
    out = []
    for name in A.names:
        g = NcPoly.gen(A, name)
        out.append((name, system.normal_form(p * g - g * p)))
    return CentralityReport(label, tuple(out))


def quantum_bracket(a: NcPoly, b: NcPoly, power: int = 1) -> NcPoly:
    """[a, b]_{q^power} = q^power a b - q^-power b a."""
    return (a * b).scale(q_int(power)) - (b * a).scale(q_int(-power))


# -- standard action tables ---------------------------------------------------


def standard_action(alphabet: Alphabet) -> ActionSpec:
    """The defining-representation action tables, replicated across every
    four-generator block x.i.j of the alphabet."""
    e_images = {}
    f_images = {}
    blocks = {name.split(".")[0] for name in alphabet.names if "." in name}
    for b in sorted(blocks):
        def gp(i, j, coeff=QL_ONE):
            return NcPoly.gen(alphabet, f"{b}.{i}.{j}", coeff)

        e_images[f"{b}.1.1"] = gp(1, 2, q_int(-1))
        e_images[f"{b}.1.2"] = NcPoly.zero(alphabet)
        e_images[f"{b}.2.1"] = (gp(2, 2) - gp(1, 1)).scale(q_int(1))
        e_images[f"{b}.2.2"] = gp(1, 2, -q_int(1))
        f_images[f"{b}.1.1"] = gp(2, 1, -q_int(-2))
        f_images[f"{b}.1.2"] = gp(1, 1) - gp(2, 2)
        f_images[f"{b}.2.1"] = NcPoly.zero(alphabet)
        f_images[f"{b}.2.2"] = gp(2, 1)
    return ActionSpec(alphabet, e_images, f_images)
