# -*- coding: utf-8 -*-
"""
求值器：面化简与可判定的定义相等
"""
import logging
from dataclasses import replace
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from dims import alpha_eq, fresh, free_dims, rename_binder, subst_dim
from models import (
    ONE,
    UNIV,
    ZERO,
    App,
    Com,
    Coe,
    Context,
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


# 点变量的代换（J 片段的 Lam/App β 用）


@lru_cache(maxsize=None)
def free_points(term: Term) -> FrozenSet[str]:
    """项中自由出现的点变量"""
    match term:
        case Var(name):
            return frozenset({name})
        case Univ():
            return frozenset()
        case Lam(var, body):
            return free_points(body) - {var}
        case Pi(var, dom, cod):
            return free_points(dom) | (free_points(cod) - {var})
    names = set()
    for _, child in subterms(term):
        names |= free_points(child)
    return frozenset(names)


def _fresh_point(avoid, hint: str) -> str:
    index = 1
    while f"{hint}{index}" in avoid:
        index += 1
    return f"{hint}{index}"


def _dim_binder(binder: str, body: Term, name: str, value: Term) -> Tuple[str, Term]:
    if binder in free_dims(value) and name in free_points(body):
        renamed = fresh(free_dims(body) | free_dims(value) | {binder}, binder)
        return renamed, subst_dim(body, binder, Dim(renamed))
    return binder, body


def _point_binder(var: str, body: Term, name: str, value: Term) -> Tuple[str, Term]:
    if var in free_points(value) and name in free_points(body):
        renamed = _fresh_point(free_points(body) | free_points(value) | {name}, var)
        return renamed, subst_point(body, var, Var(renamed))
    return var, body


def _subst_point_tubes(tubes, name, value) -> Tuple[Tube, ...]:
    result = []
    for tube in tubes:
        binder, wall = _dim_binder(tube.binder, tube.wall, name, value)
        result.append(Tube(tube.extent, tube.side, binder, subst_point(wall, name, value)))
    return tuple(result)


@lru_cache(maxsize=None)
def subst_point(term: Term, name: str, value: Term) -> Term:
    """捕获避免的点代换 term[value/name]"""
    if name not in free_points(term):
        return term
    match term:
        case Var(n):
            return value if n == name else term
        case Lam(var, body):
            var, body = _point_binder(var, body, name, value)
            return Lam(var, subst_point(body, name, value))
        case Pi(var, dom, cod):
            dom = subst_point(dom, name, value)
            if var == name:
                return Pi(var, dom, cod)
            var, cod = _point_binder(var, cod, name, value)
            return Pi(var, dom, subst_point(cod, name, value))
        case App(fun, arg):
            return App(subst_point(fun, name, value), subst_point(arg, name, value))
        case DimAbs(binder, body):
            binder, body = _dim_binder(binder, body, name, value)
            return DimAbs(binder, subst_point(body, name, value))
        case DimApp(fun, arg):
            return DimApp(subst_point(fun, name, value), arg)
        case Id(binder, family, left, right):
            binder, family = _dim_binder(binder, family, name, value)
            return Id(
                binder,
                subst_point(family, name, value),
                subst_point(left, name, value),
                subst_point(right, name, value),
            )
        case HCom(ty, src, dst, cap, tubes):
            return HCom(
                subst_point(ty, name, value),
                src,
                dst,
                subst_point(cap, name, value),
                _subst_point_tubes(tubes, name, value),
            )
        case Coe(binder, family, src, dst, arg):
            binder, family = _dim_binder(binder, family, name, value)
            return Coe(binder, subst_point(family, name, value), src, dst, subst_point(arg, name, value))
        case Com(binder, family, src, dst, cap, tubes):
            binder, family = _dim_binder(binder, family, name, value)
            return Com(
                binder,
                subst_point(family, name, value),
                src,
                dst,
                subst_point(cap, name, value),
                _subst_point_tubes(tubes, name, value),
            )
    return term


# 子项遍历：路径键为字段名，管壁为 ("tubes", i)


def subterms(term: Term) -> Iterator[Tuple[object, Term]]:
    """直接子项 (键, 子项)"""
    match term:
        case DimAbs(_, body) | Lam(_, body):
            yield "body", body
        case DimApp(fun, _):
            yield "fun", fun
        case App(fun, arg):
            yield "fun", fun
            yield "arg", arg
        case Pi(_, dom, cod):
            yield "dom", dom
            yield "cod", cod
        case Id(_, family, left, right):
            yield "family", family
            yield "left", left
            yield "right", right
        case HCom(ty, _, _, cap, tubes):
            yield "ty", ty
            yield "cap", cap
            for index, tube in enumerate(tubes):
                yield ("tubes", index), tube.wall
        case Coe(_, family, _, _, arg):
            yield "family", family
            yield "arg", arg
        case Com(_, family, _, _, cap, tubes):
            yield "family", family
            yield "cap", cap
            for index, tube in enumerate(tubes):
                yield ("tubes", index), tube.wall


def _replace_child(term: Term, key, child: Term) -> Term:
    if isinstance(key, tuple):
        index = key[1]
        tubes = list(term.tubes)
        tubes[index] = replace(tubes[index], wall=child)
        return replace(term, tubes=tuple(tubes))
    return replace(term, **{key: child})


def expand_com(term: Com) -> HCom:
    """com 展开为 coe 像上的 hcom"""
    y, family, src, dst = term.binder, term.family, term.src, term.dst
    avoid = (free_dims(family) - {y}) | {d.value for d in (src, dst) if d.is_name}
    tubes = []
    for tube in term.tubes:
        tube = rename_binder(tube, avoid)
        z = Dim(tube.binder)
        tubes.append(Tube(tube.extent, tube.side, tube.binder, Coe(y, family, z, dst, tube.wall)))
    return HCom(subst_dim(family, y, dst), src, dst, Coe(y, family, src, dst, term.cap), tuple(tubes))


def _sorted_tubes(tubes) -> List[Tube]:
    return sorted(tubes, key=Tube.sort_key)


class Evaluator:
    """上下文中的范式计算"""

    def __init__(self, ctx: Optional[Context] = None):
        self.ctx = ctx or Context()
        self._memo: Dict[Term, Term] = {}

    def normalize(self, term: Term) -> Term:
        """化简到不动点"""
        cached = self._memo.get(term)
        if cached is not None:
            return cached
        result = self._normalize(term)
        self._memo[term] = result
        self._memo.setdefault(result, result)
        return result

    def face(self, term: Term, name: str, side) -> Term:
        """term 在 name=side 处的面"""
        return self.normalize(subst_dim(term, name, side))

    def judge_equal(self, a: Term, b: Term) -> bool:
        """范式 α 等价"""
        if a == b:
            return True
        return alpha_eq(self.normalize(a), self.normalize(b))

    def id_type(self, term: Term) -> Optional[Id]:
        """head_type 的范式是 Id 时返回它"""
        ty = self.head_type(term)
        if ty is None:
            return None
        ty = self.normalize(ty)
        return ty if isinstance(ty, Id) else None

    def head_type(self, term: Term) -> Optional[Term]:
        """中性项的类型，未知时返回 None"""
        match term:
            case Var(name):
                return self.ctx.type_of(name)
            case DimApp(fun, arg):
                line = self.id_type(fun)
                if line is None:
                    return None
                return subst_dim(line.family, line.binder, arg)
            case HCom(ty, _, _, _, _):
                return ty
            case Coe(binder, family, _, dst, _):
                return subst_dim(family, binder, dst)
            case Com(binder, family, _, dst, _, _):
                return subst_dim(family, binder, dst)
            case App(fun, arg):
                fun_ty = self.head_type(fun)
                if fun_ty is None:
                    return None
                fun_ty = self.normalize(fun_ty)
                if isinstance(fun_ty, Pi):
                    return subst_point(fun_ty.cod, fun_ty.var, arg)
                return None
            case Id() | Pi() | Univ():
                return UNIV
        return None

    def _normalize(self, term: Term) -> Term:
        match term:
            case Var(name):
                definition = self.ctx.definition(name)
                if definition is not None and name not in self.ctx.points:
                    return self.normalize(definition.term)
                return term
            case Univ():
                return term
            case DimAbs(binder, body):
                body = self.normalize(body)
                if (
                    isinstance(body, DimApp)
                    and body.arg == Dim(binder)
                    and binder not in free_dims(body.fun)
                ):
                    return body.fun
                return DimAbs(binder, body)
            case DimApp(fun, arg):
                return self._normalize_dim_app(self.normalize(fun), arg)
            case Id(binder, family, left, right):
                return Id(binder, self.normalize(family), self.normalize(left), self.normalize(right))
            case HCom():
                return self._normalize_hcom(term)
            case Coe(binder, family, src, dst, arg):
                if src == dst:
                    return self.normalize(arg)
                family = self.normalize(family)
                if binder not in free_dims(family):
                    return self.normalize(arg)
                return Coe(binder, family, src, dst, self.normalize(arg))
            case Com():
                return self.normalize(expand_com(term))
            case Pi(var, dom, cod):
                return Pi(var, self.normalize(dom), self.normalize(cod))
            case Lam(var, body):
                return Lam(var, self.normalize(body))
            case App(fun, arg):
                fun = self.normalize(fun)
                if isinstance(fun, Lam):
                    return self.normalize(subst_point(fun.body, fun.var, arg))
                return App(fun, self.normalize(arg))
        raise TypeError(f"not a term: {term!r}")

    def _normalize_dim_app(self, fun: Term, arg: Dim) -> Term:
        if isinstance(fun, DimAbs):
            return self.normalize(subst_dim(fun.body, fun.binder, arg))
        line = self.id_type(fun)
        if line is not None:
            if arg.is_constant:
                return self.normalize(line.left if arg == ZERO else line.right)
            if isinstance(fun, HCom):
                return self.normalize(self._push(fun, line, arg))
        return DimApp(fun, arg)

    def _push(self, box: HCom, line: Id, arg: Dim) -> HCom:
        """Id 类型上的 hcom 在维度名处的应用推入盒子内部"""
        name = arg.value
        tubes = []
        for tube in box.tubes:
            tube = rename_binder(tube, {name})
            tubes.append(Tube(tube.extent, tube.side, tube.binder, DimApp(tube.wall, arg)))
        present = {(t.extent, t.side) for t in tubes}
        binder = fresh(free_dims(line.left) | free_dims(line.right) | {name}, "y")
        for side, end in ((ZERO, line.left), (ONE, line.right)):
            if (arg, side) not in present:
                tubes.append(Tube(arg, side, binder, end))
        return HCom(
            subst_dim(line.family, line.binder, arg),
            box.src,
            box.dst,
            DimApp(box.cap, arg),
            tuple(tubes),
        )

    def _normalize_hcom(self, term: HCom) -> Term:
        if term.src == term.dst:
            return self.normalize(term.cap)
        live = []
        for tube in _sorted_tubes(term.tubes):
            if tube.extent.is_constant:
                if tube.extent == tube.side:
                    return self.normalize(subst_dim(tube.wall, tube.binder, term.dst))
                continue
            live.append(tube)
        cap = self.normalize(term.cap)
        if not live:
            return cap
        seen = set()
        tubes = []
        for tube in live:
            if tube.sort_key() in seen:
                continue
            seen.add(tube.sort_key())
            tubes.append(replace(tube, wall=self.normalize(tube.wall)))
        if all(
            tube.binder not in free_dims(tube.wall) and alpha_eq(tube.wall, cap)
            for tube in tubes
        ):
            return cap
        return HCom(self.normalize(term.ty), term.src, term.dst, cap, tuple(tubes))

    # 单步收缩（随机顺序的合流测试用）

    def redexes(self, term: Term, path: Tuple = ()) -> List[Tuple]:
        """所有可单步收缩的位置"""
        found = []
        if _is_redex(term):
            found.append(path)
        for key, child in subterms(term):
            found.extend(self.redexes(child, path + (key,)))
        return found

    def contract(self, term: Term, path: Tuple) -> Term:
        """收缩 path 处的可约式"""
        if not path:
            return _contract_here(term)
        key, rest = path[0], path[1:]
        child = dict(subterms(term))[key]
        return _replace_child(term, key, self.contract(child, rest))


def _is_redex(term: Term) -> bool:
    match term:
        case DimApp(DimAbs(), _) | App(Lam(), _):
            return True
        case DimAbs(binder, DimApp(fun, arg)):
            return arg == Dim(binder) and binder not in free_dims(fun)
        case HCom(_, src, dst, _, _) | Coe(_, _, src, dst, _):
            return src == dst
    return False


def _contract_here(term: Term) -> Term:
    match term:
        case DimApp(DimAbs(binder, body), arg):
            return subst_dim(body, binder, arg)
        case App(Lam(var, body), arg):
            return subst_point(body, var, arg)
        case DimAbs(_, DimApp(fun, _)):
            return fun
        case HCom(_, _, _, cap, _):
            return cap
        case Coe(_, _, _, _, arg):
            return arg
    return term


def normalize(term: Term, ctx: Optional[Context] = None) -> Term:
    return Evaluator(ctx).normalize(term)


def face(term: Term, name: str, side, ctx: Optional[Context] = None) -> Term:
    return Evaluator(ctx).face(term, name, side)


def judge_equal(a: Term, b: Term, ctx: Optional[Context] = None) -> bool:
    return Evaluator(ctx).judge_equal(a, b)
