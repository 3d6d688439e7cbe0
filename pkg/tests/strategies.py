# -*- coding: utf-8 -*-
"""
hypothesis 项生成器
"""
from hypothesis import strategies as st

from models import (
    ONE,
    UNIV,
    ZERO,
    App,
    Com,
    Coe,
    Dim,
    DimAbs,
    DimApp,
    HCom,
    Id,
    Lam,
    Pi,
    Tube,
    Var,
)

DIM_NAMES = ("i", "j", "k")
POINT_NAMES = ("a", "b", "f", "A")
MAX_DEPTH = 6


def dim_names():
    return st.sampled_from(DIM_NAMES)


def dims():
    return st.one_of(st.sampled_from((ZERO, ONE)), dim_names().map(Dim))


def sides():
    return st.sampled_from((ZERO, ONE))


def leaves():
    return st.one_of(st.sampled_from(POINT_NAMES).map(Var), st.just(UNIV))


@st.composite
def tubes(draw, walls, max_size=3):
    drawn = draw(
        st.lists(
            st.tuples(dims(), sides(), dim_names()),
            max_size=max_size,
            unique_by=lambda item: (item[0].value, item[1].value),
        )
    )
    return tuple(Tube(extent, side, binder, draw(walls)) for extent, side, binder in drawn)


@st.composite
def terms(draw, depth=MAX_DEPTH, functions=True):
    """深度不超过 depth 的任意项；functions=False 时不含 Lam/App/Pi"""
    if depth <= 0 or draw(st.integers(0, 4)) == 0:
        return draw(leaves())
    sub = terms(depth - 1, functions)
    kinds = ["abs", "app_dim", "id", "hcom", "coe", "com"]
    if functions:
        kinds += ["lam", "app", "pi"]
    kind = draw(st.sampled_from(kinds))
    if kind == "abs":
        return DimAbs(draw(dim_names()), draw(sub))
    if kind == "app_dim":
        return DimApp(draw(sub), draw(dims()))
    if kind == "id":
        return Id(draw(dim_names()), draw(sub), draw(sub), draw(sub))
    if kind == "hcom":
        return HCom(draw(sub), draw(dims()), draw(dims()), draw(sub), draw(tubes(sub)))
    if kind == "coe":
        return Coe(draw(dim_names()), draw(sub), draw(dims()), draw(dims()), draw(sub))
    if kind == "com":
        return Com(draw(dim_names()), draw(sub), draw(dims()), draw(dims()), draw(sub), draw(tubes(sub)))
    if kind == "lam":
        return Lam(draw(st.sampled_from(("v", "w"))), draw(sub))
    if kind == "app":
        return App(draw(sub), draw(sub))
    return Pi(draw(st.sampled_from(("v", "w"))), draw(sub), draw(sub))


def _point_type():
    return st.one_of(st.just(Var("A")), dims().map(lambda d: DimApp(Var("P"), d)))


@st.composite
def box_terms(draw, depth=4):
    """
    盒子项：hcom 的类型与 coe 的类型族都不是 Id，
    每个 hcom 至多一个管壁
    """
    if depth <= 0 or draw(st.integers(0, 3)) == 0:
        return draw(st.sampled_from(("a", "b", "f")).map(Var))
    sub = box_terms(depth - 1)
    kind = draw(st.sampled_from(["abs", "app_dim", "hcom", "coe"]))
    if kind == "abs":
        return DimAbs(draw(dim_names()), draw(sub))
    if kind == "app_dim":
        return DimApp(draw(sub), draw(dims()))
    if kind == "hcom":
        return HCom(Var("A"), draw(dims()), draw(dims()), draw(sub), draw(tubes(sub, max_size=1)))
    return Coe(draw(dim_names()), draw(_point_type()), draw(dims()), draw(dims()), draw(sub))
