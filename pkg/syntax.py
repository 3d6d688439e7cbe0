# -*- coding: utf-8 -*-
"""
文本语法：解析器与打印器
"""
import logging
from typing import List

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from errors import CubelineSyntaxError, DuplicateTubeError
from models import (
    UNIV,
    App,
    Com,
    Coe,
    DeclKind,
    Declaration,
    Dim,
    DimAbs,
    DimApp,
    HCom,
    Id,
    Lam,
    Pi,
    Term,
    Tube,
    Univ,
    Var,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
start: decl*
term_start: term

?decl: "point" IDENT ":" term            -> point_decl
     | "dim" IDENT                        -> dim_decl
     | "def" IDENT "=" term ":" term      -> def_decl
     | "check" term ":" term              -> check_decl

?term: "<" IDENT ">" term                 -> dim_abs
     | "\\" IDENT "." term                 -> lam
     | "(" IDENT ":" term ")" "->" term   -> pi
     | dimapp

?dimapp: dimapp "@" dim                   -> dim_app
       | app

?app: app atom                            -> app
    | atom

?atom: IDENT                              -> var
     | "U"                                -> univ
     | "(" term ")"
     | "Id" "(" IDENT "." term ")" atom atom                      -> id_type
     | "hcom" dim "~>" dim atom atom "[" tube_list "]"            -> hcom
     | "coe" dim "~>" dim "(" IDENT "." term ")" atom             -> coe
     | "com" dim "~>" dim "(" IDENT "." term ")" atom "[" tube_list "]" -> com

tube_list: (tube ("|" tube)*)?
tube: dim "=" SIDE IDENT "." term
dim: SIDE | IDENT

SIDE: "0" | "1"
IDENT: /[A-Za-z_][A-Za-z0-9_']*/
COMMENT: /--[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""


class ToTerm(Transformer):
    """语法树转为 AST"""

    @v_args(meta=True)
    def point_decl(self, meta, children):
        name, ty = children
        return Declaration(DeclKind.POINT, str(name), type=ty, line=meta.line)

    @v_args(meta=True)
    def dim_decl(self, meta, children):
        return Declaration(DeclKind.DIM, str(children[0]), line=meta.line)

    @v_args(meta=True)
    def def_decl(self, meta, children):
        name, term, ty = children
        return Declaration(DeclKind.DEF, str(name), term, ty, line=meta.line)

    @v_args(meta=True)
    def check_decl(self, meta, children):
        term, ty = children
        return Declaration(DeclKind.CHECK, None, term, ty, line=meta.line)

    def start(self, children):
        return list(children)

    def term_start(self, children):
        return children[0]

    def dim_abs(self, children):
        return DimAbs(str(children[0]), children[1])

    def lam(self, children):
        return Lam(str(children[0]), children[1])

    def pi(self, children):
        return Pi(str(children[0]), children[1], children[2])

    def dim_app(self, children):
        return DimApp(children[0], children[1])

    def app(self, children):
        return App(children[0], children[1])

    def var(self, children):
        return Var(str(children[0]))

    def univ(self, children):
        return UNIV

    def id_type(self, children):
        binder, family, left, right = children
        return Id(str(binder), family, left, right)

    def hcom(self, children):
        src, dst, ty, cap, tubes = children
        return HCom(ty, src, dst, cap, tubes)

    def coe(self, children):
        src, dst, binder, family, arg = children
        return Coe(str(binder), family, src, dst, arg)

    def com(self, children):
        src, dst, binder, family, cap, tubes = children
        return Com(str(binder), family, src, dst, cap, tubes)

    def tube_list(self, children):
        seen = set()
        tubes = []
        for tube, token in children:
            if tube.sort_key() in seen:
                raise DuplicateTubeError(tube.extent.value, tube.side.value, token.line, token.column)
            seen.add(tube.sort_key())
            tubes.append(tube)
        return tuple(tubes)

    def tube(self, children):
        extent, side, binder, wall = children
        return Tube(extent, Dim(str(side)), str(binder), wall), side

    def dim(self, children):
        return Dim(str(children[0]))


_parser = Lark(GRAMMAR, parser="lalr", start=["start", "term_start"], propagate_positions=True)
_transformer = ToTerm()


def _run(source: str, start: str):
    try:
        tree = _parser.parse(source, start=start)
    except UnexpectedInput as exc:
        raise CubelineSyntaxError(f"无法解析: {exc.__class__.__name__}", exc.line, exc.column) from exc
    try:
        return _transformer.transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from None


def parse(source: str) -> List[Declaration]:
    """解析 .cube 文本为声明列表"""
    return _run(source, "start")


def parse_term(source: str) -> Term:
    """解析单个项"""
    return _run(source, "term_start")


# 打印：0 约束子，1 维度应用，2 应用与构造子，3 原子


def _prec(term: Term) -> int:
    match term:
        case DimAbs() | Lam() | Pi():
            return 0
        case DimApp():
            return 1
        case App() | Id() | HCom() | Coe() | Com():
            return 2
    return 3


def _at(term: Term, level: int) -> str:
    text = print_term(term)
    return f"({text})" if _prec(term) < level else text


def _tubes(tubes) -> str:
    return " | ".join(
        f"{t.extent}={t.side} {t.binder}. {print_term(t.wall)}"
        for t in sorted(tubes, key=Tube.sort_key)
    )


def print_term(term: Term) -> str:
    """确定性打印，重新解析得到 α 等价的项"""
    match term:
        case Var(name):
            return name
        case Univ():
            return "U"
        case DimAbs(binder, body):
            inner = f"({print_term(body)})" if isinstance(body, (DimApp, App)) else print_term(body)
            return f"<{binder}> {inner}"
        case Lam(var, body):
            return f"\\{var}. {print_term(body)}"
        case Pi(var, dom, cod):
            return f"({var} : {print_term(dom)}) -> {print_term(cod)}"
        case DimApp(fun, arg):
            return f"{_at(fun, 1)} @ {arg}"
        case App(fun, arg):
            return f"{_at(fun, 2)} {_at(arg, 3)}"
        case Id(binder, family, left, right):
            return f"Id ({binder}. {print_term(family)}) {_at(left, 3)} {_at(right, 3)}"
        case HCom(ty, src, dst, cap, tubes):
            return f"hcom {src}~>{dst} {_at(ty, 3)} {_at(cap, 3)} [{_tubes(tubes)}]"
        case Coe(binder, family, src, dst, arg):
            return f"coe {src}~>{dst} ({binder}. {print_term(family)}) {_at(arg, 3)}"
        case Com(binder, family, src, dst, cap, tubes):
            return f"com {src}~>{dst} ({binder}. {print_term(family)}) {_at(cap, 3)} [{_tubes(tubes)}]"
    raise TypeError(f"not a term: {term!r}")


def print_declaration(decl: Declaration) -> str:
    """打印一条声明"""
    if decl.kind is DeclKind.POINT:
        return f"point {decl.name} : {print_term(decl.type)}"
    if decl.kind is DeclKind.DIM:
        return f"dim {decl.name}"
    if decl.kind is DeclKind.DEF:
        return f"def {decl.name} = {print_term(decl.term)} : {print_term(decl.type)}"
    return f"check {print_term(decl.term)} : {print_term(decl.type)}"
