"""The builtin catalog: every presentation and morphism used by the checks.

Builders are lazy and cached so that expensive objects (the surface algebra
systems with their normal-form caches) are shared across the whole run.
Relations are written in the expression grammar, which doubles as a check
that the grammar covers everything the reports need to print.
"""

from __future__ import annotations

from .exprs import parse_poly
from .freealg import Alphabet, Generator, NcPoly
from .homcheck import AlgebraMorphism, CheckRoute, Presentation
from .qsl2 import (
    FOUR_PUNCTURED_SPHERE,
    PUNCTURED_TORUS,
    TAU_ORDER,
    block_alphabet,
    build_algebra,
    generator_matrix,
    printed_reflection_relations,
    qm_mul,
    qm_trace,
    sigma_rules,
    tau_rules,
)
from .rewrite import ParametricFamily, ReductionSystem, RewriteRule
from .scalars import QL_ONE, q_half, q_int, qmono

_CACHE = {}


def builtin(name: str):
    """Return the named presentation or morphism (stable identifiers; see
    list_builtins)."""
    if name not in _BUILDERS:
        raise KeyError(f"unknown builtin {name!r}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


def list_builtins():
    return tuple(sorted(_BUILDERS))


def _rules_as_relations(rules):
    rels, labels = [], []
    for r in rules:
        rels.append(NcPoly.monomial(r.rhs.alphabet, r.lhs) - r.rhs)
        labels.append(r.label)
    return tuple(rels), tuple(labels)


# -- reflection-equation blocks and surface algebras --------------------


def _oq_sigma():
    A = block_alphabet("a")
    system = ReductionSystem("Oq-sigma", A, sigma_rules(A, "a"))
    rels = printed_reflection_relations(A, "a")
    labels = tuple(f"rel{k}" for k in range(1, 8))
    return Presentation("Oq-sigma", A, tuple(rels), labels, system)


def _oq_tau():
    A = block_alphabet("a", TAU_ORDER)
    system = ReductionSystem("Oq-tau", A, tau_rules(A, "a"))
    rels = printed_reflection_relations(A, "a")
    labels = tuple(f"rel{k}" for k in range(1, 8))
    return Presentation("Oq-tau", A, tuple(rels), labels, system)


def _a_s04():
    system = build_algebra(FOUR_PUNCTURED_SPHERE, name="A-s04")
    rels, labels = _rules_as_relations(system.rules)
    return Presentation("A-s04", system.alphabet, rels, labels, system)


def _a_s04_alt():
    system = build_algebra(FOUR_PUNCTURED_SPHERE, tau_blocks=frozenset({1}), name="A-s04-alt")
    rels, labels = _rules_as_relations(system.rules)
    return Presentation("A-s04-alt", system.alphabet, rels, labels, system)


def _a_t11():
    system = build_algebra(PUNCTURED_TORUS, name="A-t11")
    rels, labels = _rules_as_relations(system.rules)
    return Presentation("A-t11", system.alphabet, rels, labels, system)


# -- the invariant algebra of the torus ---------------------------------


def _t_alphabet():
    return Alphabet(
        (Generator("X", degree=1), Generator("Y", degree=1), Generator("Z", degree=2))
    )


T_RELATIONS = (
    ("YX", "Y*X - q^(-1)*X*Y - (q - q^(-1))*Z"),
    ("XZ", "X*Z - q^(-1)*Z*X + q^(-3)*(q - q^(-1))*Y"),
    ("ZY", "Z*Y - q^(-1)*Y*Z + q^(-3)*(q - q^(-1))*X"),
)

T_CENTRAL_L = "q^5*X*Z*Y + q^3*Y*Y - q^4*Z*Z + q^3*X*X - (q - q^(-1))"


def _t():
    A = _t_alphabet()
    rules = [
        RewriteRule("sigma_YX", (A.index("Y"), A.index("X")),
                    parse_poly(A, "q^(-1)*X*Y + (q - q^(-1))*Z")),
        RewriteRule("sigma_ZX", (A.index("Z"), A.index("X")),
                    parse_poly(A, "q*X*Z + q^(-2)*(q - q^(-1))*Y")),
        RewriteRule("sigma_ZY", (A.index("Z"), A.index("Y")),
                    parse_poly(A, "q^(-1)*Y*Z - q^(-3)*(q - q^(-1))*X")),
    ]
    system = ReductionSystem("T", A, rules)
    rels = tuple(parse_poly(A, text) for _, text in T_RELATIONS)
    labels = tuple(lbl for lbl, _ in T_RELATIONS)
    return Presentation("T", A, rels, labels, system)


def torus_central_element():
    return parse_poly(builtin("T").alphabet, T_CENTRAL_L)


# -- the invariant algebra of the four-punctured sphere -------------------

B_RELATION_FE = "F*E - q^2*E*F - (q^2 - q^(-2))*G - (1 - q^2)*(s*v + t*u)"
B_RELATION_GE_DEFN = "G*E - q^(-2)*E*G + q^(-2)*(q^2 - q^(-2))*F - (1 - q^(-2))*(s*u + t*v)"
B_RELATION_GE_SUMMARY = "G*E - q^(-2)*E*G - q^(-2)*(q^2 - q^(-2))*F + (1 - q^2)*(s*u + q^(-2)*t*v)"
B_RELATION_GF = "G*F - q^2*F*G - (q^2 - q^(-2))*E - (1 - q^2)*(s*t + u*v)"
_B_EFG_COMMON = (
    "E*F*G + E*E + q^(-4)*F*F + G*G"
    " - (s*t + u*v)*E - q^(-2)*(s*u + t*v)*F - (s*v + t*u)*G"
    " + s*t*u*v - q^(-6)*(q^2 + 1)*(q^2 + 1)"
)
B_RELATION_EFG_DEFN = _B_EFG_COMMON + " + q^(-4)*(s*s + t*t + u*u + v*v)"
B_RELATION_EFG_CUBIC = _B_EFG_COMMON + " + q^(-2)*(s*s + t*t + u*u + v*v)"


def _b_alphabet():
    return Alphabet(
        (
            Generator("E", degree=2),
            Generator("F", degree=2),
            Generator("G", degree=2),
            Generator("s", degree=1, central=True),
            Generator("t", degree=1, central=True),
            Generator("u", degree=1, central=True),
            Generator("v", degree=3, central=True),
        )
    )


def _b():
    """The sphere invariant-algebra presentation.

    The (GE) relation follows the main definition (the summary variant fails
    the homomorphism check); the cubic relation carries q^-2 on the squared
    central parameters (the q^-4 variant printed alongside fails).  Both
    rejected variants remain available as GE-variant-summary and
    EFG-variant-defn for the arbitration runs.
    """
    A = _b_alphabet()
    rels = (
        parse_poly(A, B_RELATION_FE),
        parse_poly(A, B_RELATION_GE_DEFN),
        parse_poly(A, B_RELATION_GF),
        parse_poly(A, B_RELATION_EFG_CUBIC),
    )
    return Presentation("B", A, rels, ("FE", "GE", "GF", "EFG"))


def _gb():
    """Rewriting system behind the PBW basis of the graded sphere algebra:
    three swaps plus the recursive family EF^nG -> f(n)."""
    A = Alphabet(
        (
            Generator("s", degree=1, central=True),
            Generator("t", degree=1, central=True),
            Generator("u", degree=1, central=True),
            Generator("v", degree=3, central=True),
            Generator("E", degree=2),
            Generator("F", degree=2),
            Generator("G", degree=2),
        )
    )
    e_, f_, g_ = A.index("E"), A.index("F"), A.index("G")
    rules = [
        RewriteRule("sigma_FE", (f_, e_),
                    parse_poly(A, "q^2*E*F + (q^2 - q^(-2))*G + (1 - q^2)*(s*v + t*u)")),
        RewriteRule("sigma_GE", (g_, e_),
                    parse_poly(A, "q^(-2)*E*G - q^(-2)*(q^2 - q^(-2))*F + (1 - q^(-2))*(s*u + t*v)")),
        RewriteRule("sigma_GF", (g_, f_),
                    parse_poly(A, "q^2*F*G + (q^2 - q^(-2))*E + (1 - q^2)*(s*t + u*v)")),
    ]
    f1 = parse_poly(
        A,
        "-E*E - q^(-4)*F*F - G*G + (s*t + u*v)*E + q^(-2)*(s*u + t*v)*F + (s*v + t*u)*G"
        " - q^(-4)*(s*s + t*t + u*u + v*v) - s*t*u*v + q^(-6)*(q^2 + 1)*(q^2 + 1)",
    )
    a_pol = parse_poly(A, "s*v + t*u")
    fpoly = NcPoly.gen(A, "F")
    gpoly = NcPoly.gen(A, "G")
    cache = {1: f1}

    def f_of(n: int) -> NcPoly:
        if n not in cache:
            prev = f_of(n - 1)
            fng = NcPoly.monomial(A, (f_,) * (n - 1) + (g_,))
            cache[n] = (
                (fpoly * prev).scale(q_int(-2))
                + (gpoly * fng).scale(q_int(-4) - QL_ONE)
                + (a_pol * fng).scale(QL_ONE - q_int(-2))
            )
        return cache[n]

    family = ParametricFamily("sigma_EFnG", (e_,), (f_,), (g_,), f_of)
    system = ReductionSystem("GB", A, rules, families=(family,))
    rels, labels = _rules_as_relations(rules)
    rels = rels + (NcPoly.monomial(A, family.lhs(1)) - f1,)
    labels = labels + ("sigma_EFnG[1]",)
    return Presentation("GB", A, rels, labels, system)


def _phi_images():
    """Quantum traces realizing the seven invariant generators."""
    s04 = builtin("A-s04")
    A = s04.alphabet
    ma = generator_matrix(A, "a")
    mb = generator_matrix(A, "b")
    mc = generator_matrix(A, "c")
    return {
        "E": qm_trace(qm_mul(ma, mb)),
        "F": qm_trace(qm_mul(ma, mc)),
        "G": qm_trace(qm_mul(mb, mc)),
        "s": qm_trace(ma),
        "t": qm_trace(mb),
        "u": qm_trace(mc),
        "v": qm_trace(qm_mul(qm_mul(ma, mb), mc)),
    }


def _phi():
    return AlgebraMorphism("Phi", builtin("B"), builtin("A-s04"), _phi_images())


def _b_single_relation(name, label, text):
    A = builtin("B").alphabet
    return Presentation(name, A, (parse_poly(A, text),), (label,))


def _variant_morphism(name, label, text):
    src = _b_single_relation(f"B-{name}", label, text)
    return AlgebraMorphism(name, src, builtin("A-s04"), _phi_images(),
                           note=f"Phi restricted to the {label} relation variant")


def _psi():
    t11 = builtin("A-t11")
    A = t11.alphabet
    ma = generator_matrix(A, "a")
    mb = generator_matrix(A, "b")
    images = {
        "X": qm_trace(ma),
        "Y": qm_trace(mb),
        "Z": qm_trace(qm_mul(ma, mb)),
    }
    return AlgebraMorphism("Psi", builtin("T"), t11, images)


# -- skein algebras ------------------------------------------------------

SK_S04_RELATIONS = (
    ("x1x2", "q^2*x1*x2 - q^(-2)*x2*x1 - (q^4 - q^(-4))*x3 - (q^2 - q^(-2))*(p1*p3 + p2*p4)"),
    ("x2x3", "q^2*x2*x3 - q^(-2)*x3*x2 - (q^4 - q^(-4))*x1 - (q^2 - q^(-2))*(p1*p2 + p3*p4)"),
    ("x3x1", "q^2*x3*x1 - q^(-2)*x1*x3 - (q^4 - q^(-4))*x2 - (q^2 - q^(-2))*(p1*p4 + p2*p3)"),
    (
        "OmegaK",
        "-1*q^2*x1*x2*x3 + q^4*x1*x1 + q^(-4)*x2*x2 + q^4*x3*x3"
        " + q^2*(p1*p2 + p3*p4)*x1 + q^(-2)*(p1*p4 + p2*p3)*x2 + q^2*(p1*p3 + p2*p4)*x3"
        " - (q^2 + q^(-2))*(q^2 + q^(-2))"
        " + p1*p2*p3*p4 + p1*p1 + p2*p2 + p3*p3 + p4*p4",
    ),
)


def _sk_s04():
    A = Alphabet(
        tuple(Generator(f"x{k}") for k in (1, 2, 3))
        + tuple(Generator(f"p{k}", central=True) for k in (1, 2, 3, 4))
    )
    rels = tuple(parse_poly(A, text) for _, text in SK_S04_RELATIONS)
    return Presentation("Sk-s04", A, rels, tuple(lbl for lbl, _ in SK_S04_RELATIONS))


SK_T11_RELATIONS = (
    ("x1x2", "q*x1*x2 - q^(-1)*x2*x1 - (q^2 - q^(-2))*x3"),
    ("x2x3", "q*x2*x3 - q^(-1)*x3*x2 - (q^2 - q^(-2))*x1"),
    ("x3x1", "q*x3*x1 - q^(-1)*x1*x3 - (q^2 - q^(-2))*x2"),
)


def _sk_t11():
    A = Alphabet(tuple(Generator(f"x{k}") for k in (1, 2, 3)))
    rules = [
        RewriteRule("sigma_x2x1", (A.index("x2"), A.index("x1")),
                    parse_poly(A, "q^2*x1*x2 - q*(q^2 - q^(-2))*x3")),
        RewriteRule("sigma_x3x1", (A.index("x3"), A.index("x1")),
                    parse_poly(A, "q^(-2)*x1*x3 + q^(-1)*(q^2 - q^(-2))*x2")),
        RewriteRule("sigma_x3x2", (A.index("x3"), A.index("x2")),
                    parse_poly(A, "q^2*x2*x3 - q*(q^2 - q^(-2))*x1")),
    ]
    system = ReductionSystem("Sk-t11", A, rules)
    rels = tuple(parse_poly(A, text) for _, text in SK_T11_RELATIONS)
    return Presentation("Sk-t11", A, rels, tuple(lbl for lbl, _ in SK_T11_RELATIONS), system)


def _usu2():
    A = Alphabet(tuple(Generator(f"y{k}") for k in (1, 2, 3)))
    rules = [
        RewriteRule("sigma_y2y1", (A.index("y2"), A.index("y1")),
                    parse_poly(A, "q^2*y1*y2 - q*y3")),
        RewriteRule("sigma_y3y1", (A.index("y3"), A.index("y1")),
                    parse_poly(A, "q^(-2)*y1*y3 + q^(-1)*y2")),
        RewriteRule("sigma_y3y2", (A.index("y3"), A.index("y2")),
                    parse_poly(A, "q^2*y2*y3 - q*y1")),
    ]
    system = ReductionSystem("Usu2", A, rules)
    rels = tuple(
        parse_poly(A, t)
        for t in (
            "q*y1*y2 - q^(-1)*y2*y1 - y3",
            "q*y2*y3 - q^(-1)*y3*y2 - y1",
            "q*y3*y1 - q^(-1)*y1*y3 - y2",
        )
    )
    return Presentation("Usu2", A, rels, ("y1y2", "y2y3", "y3y1"), system)


# -- Hecke-type algebras ---------------------------------------------------

SH_CC1_RELATIONS = (
    ("xy", "q*x*y - q^(-1)*y*x - (q^2 - q^(-2))*z + (q - q^(-1))*(tb2*tb4 + tb3q*tb1)"),
    ("yz", "q*y*z - q^(-1)*z*y - (q^2 - q^(-2))*x + (q - q^(-1))*(tb1*tb2 + tb3q*tb4)"),
    ("zx", "q*z*x - q^(-1)*x*z - (q^2 - q^(-2))*y + (q - q^(-1))*(tb1*tb4 + tb3q*tb2)"),
    (
        "Omega",
        "-1*q*x*y*z + q^2*x*x + q^(-2)*y*y + q^2*z*z"
        " - q*(tb1*tb2 + tb3q*tb4)*x - q^(-1)*(tb1*tb4 + tb3q*tb2)*y"
        " - q*(tb2*tb4 + tb3q*tb1)*z"
        " - tb1*tb1 - tb2*tb2 - tb3q*tb3q - tb4*tb4 + tb1*tb2*tb3q*tb4"
        " - (q + q^(-1))*(q + q^(-1))",
    ),
)


def _sh_cc1():
    A = Alphabet(
        (Generator("x"), Generator("y"), Generator("z"))
        + tuple(Generator(n, central=True) for n in ("tb1", "tb2", "tb3q", "tb4"))
    )
    rels = tuple(parse_poly(A, text) for _, text in SH_CC1_RELATIONS)
    return Presentation("SH-CC1", A, rels, tuple(lbl for lbl, _ in SH_CC1_RELATIONS))


def _sh_a1():
    A = Alphabet(
        (Generator("x"), Generator("y"), Generator("z"),
         Generator("t", central=True), Generator("tinv", central=True))
    )
    rels = tuple(
        parse_poly(A, t)
        for t in (
            "q*x*y - q^(-1)*y*x - (q^2 - q^(-2))*z",
            "q*z*x - q^(-1)*x*z - (q^2 - q^(-2))*y",
            "q*y*z - q^(-1)*z*y - (q^2 - q^(-2))*x",
            "q^2*x*x + q^(-2)*y*y + q^2*z*z - q*x*y*z"
            " - q^(-2)*t*t + 2*t*tinv - q^2*tinv*tinv - q^2 - 2 - q^(-2)",
            "t*tinv - 1",
        )
    )
    return Presentation("SH-A1", A, rels, ("xy", "zx", "yz", "Omega", "tunit"))


# -- Teschner-type algebras -------------------------------------------------

AB_S04_RELATIONS = (
    ("Q1", "q*Lu*Ls - q^(-1)*Ls*Lu - (q^2 - q^(-2))*Lt - (q - q^(-1))*(L3*L4 + L1*L2)"),
    ("Q2", "q*Ls*Lt - q^(-1)*Lt*Ls - (q^2 - q^(-2))*Lu - (q - q^(-1))*(L1*L3 + L2*L4)"),
    ("Q3", "q*Lt*Lu - q^(-1)*Lu*Lt - (q^2 - q^(-2))*Ls - (q - q^(-1))*(L1*L4 + L2*L3)"),
    (
        "P",
        "-1*q*Lu*Ls*Lt + q^2*Lu*Lu + q^(-2)*Ls*Ls + q^2*Lt*Lt"
        " + q*(L1*L3 + L2*L4)*Lu + q^(-1)*(L1*L4 + L2*L3)*Ls + q*(L3*L4 + L1*L2)*Lt"
        " + L1*L1 + L2*L2 + L3*L3 + L4*L4 + L1*L2*L3*L4"
        " - (q + q^(-1))*(q + q^(-1))",
    ),
)


def _ab_s04():
    A = Alphabet(
        (Generator("Ls"), Generator("Lt"), Generator("Lu"))
        + tuple(Generator(f"L{k}", central=True) for k in (1, 2, 3, 4))
    )
    rels = tuple(parse_poly(A, text) for _, text in AB_S04_RELATIONS)
    return Presentation("Ab-s04", A, rels, tuple(lbl for lbl, _ in AB_S04_RELATIONS))


AB_T11_RELATIONS = (
    ("Q", "q^(1/2)*Ls*Lt - q^(-1/2)*Lt*Ls - (q - q^(-1))*Lu"),
    ("P", "q*Ls*Ls + q^(-1)*Lt*Lt + q*Lu*Lu - q^(1/2)*Ls*Lt*Lu + L0 + q - q^(-1)"),
)


def _ab_t11():
    A = Alphabet(
        (Generator("Ls"), Generator("Lt"), Generator("Lu"), Generator("L0", central=True))
    )
    rels = tuple(parse_poly(A, text) for _, text in AB_T11_RELATIONS)
    return Presentation("Ab-t11", A, rels, tuple(lbl for lbl, _ in AB_T11_RELATIONS))


# -- the morphism suite ------------------------------------------------------


def _alpha():
    src = builtin("SH-CC1")
    tgt = builtin("B")
    A = tgt.alphabet
    images = {
        "x": parse_poly(A, "-1*q*E"),
        "y": parse_poly(A, "-1*q*F"),
        "z": parse_poly(A, "-1*q*G"),
        "tb1": parse_poly(A, "i*q*s"),
        "tb2": parse_poly(A, "i*q*t"),
        "tb3q": parse_poly(A, "i*q*v"),
        "tb4": parse_poly(A, "i*q*u"),
    }
    m = AlgebraMorphism("alpha", src, tgt, images)
    m.check_route = CheckRoute(src, (m, builtin("Phi")),
                               note="verified through Phi into the sphere algebra")
    return m


def _beta():
    src = builtin("Sk-s04")
    tgt = builtin("B")
    A = tgt.alphabet
    images = {
        "x1": parse_poly(A, "-1*q*E"),
        "x2": parse_poly(A, "-1*q*F"),
        "x3": parse_poly(A, "-1*q*G"),
        "p1": parse_poly(A, "-1*q*s"),
        "p2": parse_poly(A, "-1*q*t"),
        "p3": parse_poly(A, "-1*q*v"),
        "p4": parse_poly(A, "-1*q*u"),
    }
    m = AlgebraMorphism("beta", src, tgt, images, q_image=q_half(1),
                        note="skein variable normalized so its square is the quantum-group q")
    m.check_route = CheckRoute(src, (m, builtin("Phi")),
                               note="verified through Phi into the sphere algebra")
    return m


def _delta():
    src = builtin("Sk-s04")
    tgt = builtin("SH-CC1")
    A = tgt.alphabet
    images = {
        "x1": parse_poly(A, "x"),
        "x2": parse_poly(A, "y"),
        "x3": parse_poly(A, "z"),
        "p1": parse_poly(A, "i*tb1"),
        "p2": parse_poly(A, "i*tb2"),
        "p3": parse_poly(A, "i*tb3q"),
        "p4": parse_poly(A, "i*tb4"),
    }
    m = AlgebraMorphism("delta", src, tgt, images, q_image=q_half(1))
    m.check_route = CheckRoute(src, (m, builtin("alpha"), builtin("Phi")),
                               note="verified through alpha then Phi")
    return m


def _gamma():
    src = builtin("T")
    tgt = builtin("Sk-t11")
    A = tgt.alphabet
    images = {
        "X": parse_poly(A, "i*q^(-2)*x2"),
        "Y": parse_poly(A, "i*q^(-2)*x1"),
        "Z": parse_poly(A, "-1*q^(-5)*x3"),
    }
    return AlgebraMorphism("gamma", src, tgt, images, q_image=q_int(2))


def _nu():
    src = builtin("Sk-t11")
    tgt = builtin("Usu2")
    A = tgt.alphabet
    images = {f"x{k}": parse_poly(A, f"(q^2 - q^(-2))*y{k}") for k in (1, 2, 3)}
    return AlgebraMorphism("nu", src, tgt, images)


def _iota():
    src = builtin("B")
    tgt = builtin("Ab-s04")
    A = tgt.alphabet
    images = {
        "E": parse_poly(A, "-1*q^(-1)*Lu"),
        "F": parse_poly(A, "-1*q^(-1)*Ls"),
        "G": parse_poly(A, "-1*q^(-1)*Lt"),
        "s": parse_poly(A, "q^(-1)*L1"),
        "t": parse_poly(A, "q^(-1)*L3"),
        "v": parse_poly(A, "q^(-1)*L2"),
        "u": parse_poly(A, "q^(-1)*L4"),
    }
    m = AlgebraMorphism("iota", src, tgt, images)
    m.check_route = CheckRoute(tgt, (builtin("iota-inverse"), builtin("Phi")),
                               note="target has no confluent system; the inverse "
                                    "assignment is checked through Phi instead")
    return m


def _iota_inverse():
    src = builtin("Ab-s04")
    tgt = builtin("B")
    A = tgt.alphabet
    images = {
        "Lu": parse_poly(A, "-1*q*E"),
        "Ls": parse_poly(A, "-1*q*F"),
        "Lt": parse_poly(A, "-1*q*G"),
        "L1": parse_poly(A, "q*s"),
        "L3": parse_poly(A, "q*t"),
        "L2": parse_poly(A, "q*v"),
        "L4": parse_poly(A, "q*u"),
    }
    m = AlgebraMorphism("iota-inverse", src, tgt, images)
    m.check_route = CheckRoute(src, (m, builtin("Phi")))
    return m


def _kappa():
    src = builtin("SH-CC1")
    tgt = builtin("Ab-s04")
    A = tgt.alphabet
    images = {
        "x": parse_poly(A, "Lu"),
        "y": parse_poly(A, "Ls"),
        "z": parse_poly(A, "Lt"),
        "tb1": parse_poly(A, "i*L1"),
        "tb2": parse_poly(A, "i*L3"),
        "tb3q": parse_poly(A, "i*L2"),
        "tb4": parse_poly(A, "i*L4"),
    }
    m = AlgebraMorphism("kappa", src, tgt, images)
    m.check_route = CheckRoute(tgt, (builtin("kappa-inverse"), builtin("alpha"), builtin("Phi")),
                               note="target has no confluent system; the inverse "
                                    "assignment is checked through alpha then Phi")
    return m


def _kappa_inverse():
    src = builtin("Ab-s04")
    tgt = builtin("SH-CC1")
    A = tgt.alphabet
    images = {
        "Lu": parse_poly(A, "x"),
        "Ls": parse_poly(A, "y"),
        "Lt": parse_poly(A, "z"),
        "L1": parse_poly(A, "-1*i*tb1"),
        "L3": parse_poly(A, "-1*i*tb2"),
        "L2": parse_poly(A, "-1*i*tb3q"),
        "L4": parse_poly(A, "-1*i*tb4"),
    }
    m = AlgebraMorphism("kappa-inverse", src, tgt, images)
    m.check_route = CheckRoute(src, (m, builtin("alpha"), builtin("Phi")))
    return m


def _mu():
    src = builtin("T")
    tgt = builtin("Ab-t11")
    A = tgt.alphabet
    images = {
        "X": parse_poly(A, "i*q^(-1)*Lt"),
        "Y": parse_poly(A, "i*q^(-1)*Ls"),
        "Z": parse_poly(A, "-1*q^(-5/2)*Lu"),
    }
    m = AlgebraMorphism("mu", src, tgt, images)
    m.check_route = CheckRoute(tgt, (builtin("mu-inverse"), builtin("Psi")),
                               note="target has no confluent system; the inverse "
                                    "assignment (with L0 -> the central element) "
                                    "is checked through Psi instead")
    return m


def _mu_inverse():
    src = builtin("Ab-t11")
    tgt = builtin("T")
    A = tgt.alphabet
    images = {
        "Ls": parse_poly(A, "-1*i*q*Y"),
        "Lt": parse_poly(A, "-1*i*q*X"),
        "Lu": parse_poly(A, "-1*q^(5/2)*Z"),
        "L0": parse_poly(A, T_CENTRAL_L),
    }
    m = AlgebraMorphism("mu-inverse", src, tgt, images)
    m.check_route = CheckRoute(src, (m, builtin("Psi")))
    return m


def _mu_variant_summary():
    m = _mu()
    m.name = "mu-variant-summary"
    m.note = ("the summary prints the same map with the target scalar written as q "
              "and the generators as s, t, u; identical content")
    return m


def _identity_oq():
    p = builtin("Oq-sigma")
    images = {n: NcPoly.gen(p.alphabet, n) for n in p.alphabet.names}
    return AlgebraMorphism("identity-Oq", p, p, images)


_BUILDERS = {
    "Oq-sigma": _oq_sigma,
    "Oq-tau": _oq_tau,
    "A-s04": _a_s04,
    "A-s04-alt": _a_s04_alt,
    "A-t11": _a_t11,
    "T": _t,
    "B": _b,
    "GB": _gb,
    "Sk-s04": _sk_s04,
    "Sk-t11": _sk_t11,
    "SH-A1": _sh_a1,
    "SH-CC1": _sh_cc1,
    "Usu2": _usu2,
    "Ab-s04": _ab_s04,
    "Ab-t11": _ab_t11,
    "Phi": _phi,
    "Psi": _psi,
    "alpha": _alpha,
    "beta": _beta,
    "gamma": _gamma,
    "delta": _delta,
    "iota": _iota,
    "iota-inverse": _iota_inverse,
    "kappa": _kappa,
    "kappa-inverse": _kappa_inverse,
    "mu": _mu,
    "mu-inverse": _mu_inverse,
    "mu-variant-summary": _mu_variant_summary,
    "nu": _nu,
    "identity-Oq": _identity_oq,
    "GE-variant-defn": lambda: _variant_morphism("GE-variant-defn", "GE", B_RELATION_GE_DEFN),
    "GE-variant-summary": lambda: _variant_morphism("GE-variant-summary", "GE", B_RELATION_GE_SUMMARY),
    "EFG-variant-defn": lambda: _variant_morphism("EFG-variant-defn", "EFG", B_RELATION_EFG_DEFN),
    "EFG-variant-cubic": lambda: _variant_morphism("EFG-variant-cubic", "EFG", B_RELATION_EFG_CUBIC),
}

MORPHISM_NAMES = (
    "Phi", "Psi", "alpha", "beta", "gamma", "delta", "iota", "kappa", "mu", "nu",
)
