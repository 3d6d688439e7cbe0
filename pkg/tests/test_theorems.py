# -*- coding: utf-8 -*-
import pytest

from dims import alpha_eq
from errors import NonDegenerate
from groupoid import Groupoid, at
from models import ONE, UNIV, ZERO, App, CheckedConstruction, FaceRecord, Id, Lam, Var, Verdict
from theorems import (
    MOTIVE_PATH,
    MOTIVE_POINT,
    TheoremBuilder,
    apply_motive,
    group,
    motive,
    theorem_catalog,
    theorem_context,
)

THEOREM_NAMES = [
    "path_induction",
    "is_refl",
    "whiskering",
    "eckmann_hilton",
    "id_inv_distrib",
    "het_square_swap",
    "id_comp_distrib",
    "het_square_glue",
    "id_groupoid_laws",
]


@pytest.fixture(scope="module")
def tb():
    return TheoremBuilder(Groupoid.from_context(theorem_context()))


@pytest.fixture(scope="module")
def rows():
    return theorem_catalog()


def point(tb, name):
    return tb.g.point(name)


def test_motive_binds_point_then_path():
    body = Var("x")
    assert motive(body) == Lam(MOTIVE_POINT, Lam(MOTIVE_PATH, body))
    assert apply_motive(Var("P"), Var("a"), Var("p")) == App(App(Var("P"), Var("a")), Var("p"))


def test_group_passes_only_when_every_part_passes():
    ok = CheckedConstruction("one", Var("a"), UNIV, Verdict("one", True))
    bad = CheckedConstruction("two", Var("b"), UNIV, Verdict("two", False, [], ValueError("x")))
    assert group("both", [ok, ok]).passed
    row = group("mixed", [ok, bad])
    assert not row.passed
    assert isinstance(row.verdict.error, ValueError)
    assert [part.name for part in row.parts] == ["one", "two"]


def test_contraction_square(tb):
    square = tb.is_refl(point(tb, "p"))
    assert square.passed, square.verdict.error
    claimed = square.claimed_type
    assert isinstance(claimed, Id)
    assert claimed.right == Var("p")


def test_five_induction_families(tb):
    instances = tb.j_instances(point(tb, "p"))
    assert [inst.name for inst in instances] == [
        "path_induction.constant",
        "path_induction.based",
        "path_induction.loop",
        "path_induction.square",
        "path_induction.reversed",
    ]
    assert all(inst.base == Var("a") and inst.target == Var("b") for inst in instances)


def test_based_path_induction_records_collapsed_endpoints(tb):
    based = tb.j_instances(point(tb, "p"))[1]
    result = tb.j_eliminate(based)
    assert result.passed, result.verdict.error
    first, second = result.verdict.records[:2]
    assert isinstance(first, FaceRecord) and isinstance(second, FaceRecord)
    assert (first.side.value, second.side.value) == ("0", "1")


def test_path_induction_row(tb):
    row = tb.path_induction(point(tb, "p"))
    assert row.passed, row.verdict.error
    assert len(row.parts) == 5


def test_whiskering_on_both_sides(tb):
    right = tb.whisker_right(point(tb, "gamma"), point(tb, "r"))
    assert right.passed, right.verdict.error
    left = tb.whisker_left(tb.g.inv(point(tb, "m"), check=False), point(tb, "gamma"))
    assert left.passed, left.verdict.error


def test_whiskering_needs_a_globular_square(tb):
    with pytest.raises(NonDegenerate):
        tb.whisker_right(point(tb, "sigma1"), point(tb, "n"))


def test_type_line_between_identification_types(tb):
    line = tb.type_line(point(tb, "p"), point(tb, "q"))
    assert alpha_eq(line.claimed_type, Id(
        "x", UNIV,
        Id("v", Var("A"), Var("a"), Var("c")),
        Id("v", Var("A"), Var("b"), Var("d")),
    ))
    assert tb.g.kernel.check_member(line.term, line.claimed_type).passed


def test_catalog_rows(rows):
    assert [row.name for row in rows] == THEOREM_NAMES
    assert all(row.lemma != row.name for row in rows)


def test_every_catalog_row_passes(rows):
    failed = [(row.name, row.verdict.error) for row in rows if not row.passed]
    assert failed == []


@pytest.mark.parametrize("name", THEOREM_NAMES)
def test_every_part_passes(rows, name):
    row = next(row for row in rows if row.name == name)
    for part in row.parts:
        assert part.passed, (part.name, part.verdict.error)


def test_groupoid_laws_row_has_six_parts(rows):
    laws = rows[-1]
    assert [part.name for part in laws.parts] == [f"id_groupoid_laws.{label}" for label in ("i", "ii", "iii", "iv", "v", "vi")]


def test_distribution_rows_are_staged(rows):
    by_name = {row.name: row for row in rows}
    inv_stages = [part.name for part in by_name["id_inv_distrib"].parts]
    comp_stages = [part.name for part in by_name["id_comp_distrib"].parts]
    assert inv_stages == ["id_inv_distrib", "id_inv_distrib.refl", "id_inv_distrib.q", "id_inv_distrib.p"]
    assert comp_stages == ["id_comp_distrib"] + [
        f"id_comp_distrib.{label}" for label in ("refl", "q", "p", "r", "s")
    ]


def test_eckmann_hilton_statement(rows):
    row = rows[3]
    assert row.passed, row.verdict.error
    ab_ba = row.claimed_type
    assert isinstance(ab_ba, Id)
    assert isinstance(ab_ba.family, Id)


@pytest.mark.parametrize("family", ["constant", "based", "loop", "square", "reversed"])
def test_induction_along_refl_returns_the_seed(tb, family):
    refl_a = tb.g.refl(Var("a"))
    inst = next(inst for inst in tb.j_instances(refl_a) if inst.name.endswith(family))
    result = tb.j_eliminate(inst)
    assert result.passed, result.verdict.error
    assert tb.g.ev.judge_equal(result.term, inst.seed)


def test_contraction_square_faces(tb):
    square = tb.is_refl(point(tb, "p"))
    body = at(square.term, "y", "x")
    ev = tb.g.ev
    assert ev.judge_equal(ev.face(body, "y", ZERO), Var("a"))
    assert ev.judge_equal(ev.face(body, "y", ONE), at(Var("p"), "x"))
    assert ev.judge_equal(ev.face(body, "x", ZERO), Var("a"))
    assert ev.judge_equal(ev.face(body, "x", ONE), at(Var("p"), "y"))


@pytest.mark.parametrize("name", ["id_inv_distrib", "id_comp_distrib"])
def test_distribution_row_verdict_is_for_its_own_statement(tb, rows, name):
    row = next(row for row in rows if row.name == name)
    head = row.parts[0]
    assert head.name == name
    assert head.verdict.name == name
    assert head.claimed_type == row.claimed_type
    assert tb.g.kernel.check_member(row.term, row.claimed_type, name).passed


def test_theorem_context_copies_do_not_share_mutations():
    first = theorem_context()
    first.declare_point("extra", Var("A"))
    first.define("refl_a", Var("a"), Var("A"))
    second = theorem_context()
    assert not second.knows("extra")
    assert second.definition("refl_a") is None
