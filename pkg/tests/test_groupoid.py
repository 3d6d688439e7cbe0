# -*- coding: utf-8 -*-
import pytest

from errors import MiddleEndpointMismatch, NonDegenerate, TypeMismatch
from evaluator import free_points, subterms
from groupoid import LIFT_LEFT, LIFT_PATH, LIFT_RIGHT, LIFT_TYPE, Groupoid, ambient_context, at, box, stdlib_catalog
from models import ONE, UNIV, ZERO, Com, Dim, DimAbs, FaceRecord, HCom, Id, Var

CATALOG_NAMES = [
    "refl", "inv", "comp",
    "iu", "cu", "ru", "rc", "swap", "inversability", "op1", "op2", "lc", "lu", "bi", "assoc",
    "type_inv", "het_inv", "type_comp", "het_comp",
    "het_inversability",
]


@pytest.fixture(scope="module")
def g():
    return Groupoid.from_context(ambient_context())


@pytest.fixture(scope="module")
def entries():
    return stdlib_catalog()


@pytest.fixture(scope="module")
def catalog(entries):
    return {entry.name: entry for entry in entries}


def contains(term, kind):
    if isinstance(term, kind):
        return True
    return any(contains(child, kind) for _, child in subterms(term))


def test_reflexivity(g):
    r = g.refl(Var("a"))
    assert r.passed
    assert r.claimed_type == Id("x", Var("A"), Var("a"), Var("a"))


def test_inversion_swaps_endpoints(g):
    inv = g.inv(g.point("p"))
    assert inv.passed
    body = at(inv.term, "x")
    assert g.ev.face(body, "x", ZERO) == Var("b")
    assert g.ev.face(body, "x", ONE) == Var("a")


def test_composition_endpoints(g):
    comp = g.comp(g.point("p"), g.point("q"))
    assert comp.passed
    assert g.ends(comp).left == Var("a")
    assert g.ends(comp).right == Var("c")


def test_composition_needs_matching_middle(g):
    with pytest.raises(MiddleEndpointMismatch):
        g.comp(g.point("p"), g.point("p"))


def test_inversion_needs_degenerate_type(g):
    with pytest.raises(NonDegenerate):
        g.inv(g.point("hp"))


def test_filler_moves_the_destination(g):
    inv = g.inv(g.point("p"), check=False)
    filler = g.filler(at(inv.term, "x"), "y")
    assert isinstance(filler, HCom)
    assert filler.dst == Dim("y")
    assert all(tube.binder != "y" for tube in filler.tubes)
    assert g.ev.face(filler, "y", ZERO) == Var("a")


def test_unchecked_builders_carry_no_verdict(g):
    assert g.comp(g.point("p"), g.point("q"), check=False).verdict is None


@pytest.mark.parametrize("name", ["refl", "inv", "comp", "iu", "cu", "ru", "rc"])
def test_unit_and_cancellation_laws_pass(catalog, name):
    assert catalog[name].passed, catalog[name].verdict.error


@pytest.mark.parametrize("name", ["swap", "inversability", "op1", "op2", "lc", "lu", "bi", "assoc"])
def test_higher_laws_pass(catalog, name):
    assert catalog[name].passed, catalog[name].verdict.error


@pytest.mark.parametrize("name", ["type_inv", "type_comp", "het_inv", "het_comp"])
def test_type_level_constructions_pass(catalog, name):
    assert catalog[name].passed, catalog[name].verdict.error


def test_every_catalog_row_passes(entries):
    failed = [e.name for e in entries if not e.passed]
    assert failed == []


def test_catalog_order_and_titles(entries):
    assert [e.name for e in entries] == CATALOG_NAMES
    assert entries[2].lemma == "Composition"
    assert entries[14].lemma == "Associativity"


def test_type_inversion_records_its_faces(catalog):
    faces = [r for r in catalog["type_inv"].verdict.records if isinstance(r, FaceRecord)]
    assert {(f.side.value, f.term) for f in faces} >= {("0", Var("B")), ("1", Var("A"))}


def test_heterogeneous_inversion_lives_over_the_inverted_line(catalog):
    het = catalog["het_inv"]
    assert isinstance(het.claimed_type, Id)
    assert (het.claimed_type.left, het.claimed_type.right) == (Var("hb"), Var("ha"))
    assert contains(het.term, Com)


def test_heterogeneous_inversability_is_lifted(catalog):
    entry = catalog["het_inversability"]
    assert entry.lemma == "Heterogeneous inversability"
    assert entry.passed, entry.verdict.error
    assert contains(entry.term, Com)
    assert not free_points(entry.term) & {LIFT_PATH, LIFT_LEFT, LIFT_RIGHT}


def test_lift_turns_boxes_into_heterogeneous_composites(g):
    lifted = g.het_lift(box(Var(LIFT_TYPE), Var("_ha")), {LIFT_TYPE: UNIV, "_ha": Var("A")})
    assert isinstance(lifted, Com)
    assert isinstance(lifted.family, HCom)
    assert lifted.family.ty == UNIV
    assert lifted.family.cap == Var("A")
    assert lifted.family.dst == Dim(lifted.binder)
    assert lifted.cap == Var("_ha")


def test_lift_rejects_boxes_in_other_types(g):
    with pytest.raises(TypeMismatch):
        g.het_lift(box(Var("A"), Var("a")), {})


def test_filler_of_a_square_keeps_its_binders_apart(g):
    p = g.point("p")
    pip = g.comp(g.inv(p, check=False), p, check=False)
    term = DimAbs("x", DimAbs("y", g.filler(at(pip.term, "y"), "x")))
    verdict = g.kernel.check_member(term, g._boundary_type(term, Var("A")))
    assert verdict.passed, verdict.error


@pytest.mark.parametrize("first, second", [("p", "q"), ("q", "r"), ("s", "r")])
def test_heterogeneous_composition_over_degenerate_lines_is_composition(g, first, second):
    het = g.het_comp(g.point(first), g.point(second))
    assert het.passed, het.verdict.error
    assert g.ev.judge_equal(het.term, g.comp(g.point(first), g.point(second), check=False).term)


@pytest.mark.parametrize("name", ["p", "q", "r"])
def test_heterogeneous_inversion_over_a_degenerate_line_is_inversion(g, name):
    het = g.het_inv(g.point(name))
    assert het.passed, het.verdict.error
    assert g.ev.judge_equal(het.term, g.inv(g.point(name), check=False).term)


def test_ambient_context_copies_do_not_share_mutations():
    first = ambient_context()
    first.declare_point("p", Var("A"))
    first.declare_dim("i")
    second = ambient_context()
    assert second.type_of("p") != Var("A")
    assert "i" not in second.dims
