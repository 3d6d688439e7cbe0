# -*- coding: utf-8 -*-
"""
维度代换、α 等价、自由维度与新名
"""
from dataclasses import replace
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

import config
from models import (
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
    Term,
    Tube,
    Univ,
    Var,
    as_dim,
)


def fresh(avoid: Iterable[str], hint: Optional[str] = None) -> str:
    """返回不在 avoid 中的维度名，计数器起点由 CUBELINE_SEED 决定"""
    avoid = set(avoid)
    base = (hint or config.FRESH_BASE).rstrip("'0123456789") or config.FRESH_BASE
    index = config.fresh_seed()
    while f"{base}{index}" in avoid:
        index += 1
    return f"{base}{index}"


def pick(hint: str, avoid: Iterable[str]) -> str:
    """hint 可用时直接用，否则取新名"""
    avoid = set(avoid)
    return hint if hint not in avoid else fresh(avoid, hint)


def _dim_names(*dims: Dim) -> FrozenSet[str]:
    return frozenset(d.value for d in dims if d.is_name)


def _tube_dims(tubes: Tuple[Tube, ...]) -> FrozenSet[str]:
    names = set()
    for tube in tubes:
        names |= _dim_names(tube.extent)
        names |= free_dims(tube.wall) - {tube.binder}
    return frozenset(names)


@lru_cache(maxsize=None)
def free_dims(term: Term) -> FrozenSet[str]:
    """项中自由出现的维度名"""
    match term:
        case Var() | Univ():
            return frozenset()
        case DimAbs(binder, body):
            return free_dims(body) - {binder}
        case DimApp(fun, arg):
            return free_dims(fun) | _dim_names(arg)
        case Id(binder, family, left, right):
            return (free_dims(family) - {binder}) | free_dims(left) | free_dims(right)
        case HCom(ty, src, dst, cap, tubes):
            return free_dims(ty) | _dim_names(src, dst) | free_dims(cap) | _tube_dims(tubes)
        case Coe(binder, family, src, dst, arg):
            return (free_dims(family) - {binder}) | _dim_names(src, dst) | free_dims(arg)
        case Com(binder, family, src, dst, cap, tubes):
            return (
                (free_dims(family) - {binder})
                | _dim_names(src, dst)
                | free_dims(cap)
                | _tube_dims(tubes)
            )
        case Pi(_, dom, cod):
            return free_dims(dom) | free_dims(cod)
        case Lam(_, body):
            return free_dims(body)
        case App(fun, arg):
            return free_dims(fun) | free_dims(arg)
    raise TypeError(f"not a term: {term!r}")


def is_degenerate(term: Term, name: str) -> bool:
    """term 不含自由的 name"""
    return name not in free_dims(term)


def _swap_dim(d: Dim, target: str, replacement: Dim) -> Dim:
    return replacement if d.value == target else d


def _under_binder(binder: str, body: Term, target: str, replacement: Dim) -> Tuple[str, Term]:
    """在约束名 binder 下代换；必要时先换名避免捕获"""
    if binder == target or target not in free_dims(body):
        return binder, body
    if replacement.value == binder:
        renamed = fresh(free_dims(body) | {target, binder}, binder)
        body = subst_dim(body, binder, Dim(renamed))
        binder = renamed
    return binder, subst_dim(body, target, replacement)


def _subst_tubes(tubes, target: str, replacement: Dim) -> Tuple[Tube, ...]:
    result = []
    for tube in tubes:
        # 管道方向落在约束名上时，约束名先让开
        if replacement.is_name and tube.binder == replacement.value and tube.binder != target:
            tube = rename_binder(tube, {target, replacement.value})
        binder, wall = _under_binder(tube.binder, tube.wall, target, replacement)
        result.append(Tube(_swap_dim(tube.extent, target, replacement), tube.side, binder, wall))
    return tuple(result)


@lru_cache(maxsize=None)
def _subst(term: Term, target: str, replacement: Dim) -> Term:
    if target not in free_dims(term):
        return term
    match term:
        case DimAbs(binder, body):
            binder, body = _under_binder(binder, body, target, replacement)
            return DimAbs(binder, body)
        case DimApp(fun, arg):
            return DimApp(_subst(fun, target, replacement), _swap_dim(arg, target, replacement))
        case Id(binder, family, left, right):
            binder, family = _under_binder(binder, family, target, replacement)
            return Id(
                binder,
                family,
                _subst(left, target, replacement),
                _subst(right, target, replacement),
            )
        case HCom(ty, src, dst, cap, tubes):
            return HCom(
                _subst(ty, target, replacement),
                _swap_dim(src, target, replacement),
                _swap_dim(dst, target, replacement),
                _subst(cap, target, replacement),
                _subst_tubes(tubes, target, replacement),
            )
        case Coe(binder, family, src, dst, arg):
            binder, family = _under_binder(binder, family, target, replacement)
            return Coe(
                binder,
                family,
                _swap_dim(src, target, replacement),
                _swap_dim(dst, target, replacement),
                _subst(arg, target, replacement),
            )
        case Com(binder, family, src, dst, cap, tubes):
            binder, family = _under_binder(binder, family, target, replacement)
            return Com(
                binder,
                family,
                _swap_dim(src, target, replacement),
                _swap_dim(dst, target, replacement),
                _subst(cap, target, replacement),
                _subst_tubes(tubes, target, replacement),
            )
        case Pi(var, dom, cod):
            return Pi(var, _subst(dom, target, replacement), _subst(cod, target, replacement))
        case Lam(var, body):
            return Lam(var, _subst(body, target, replacement))
        case App(fun, arg):
            return App(_subst(fun, target, replacement), _subst(arg, target, replacement))
    return term


def subst_dim(term: Term, target: str, replacement) -> Term:
    """捕获避免的维度代换 term<replacement/target>"""
    replacement = as_dim(replacement)
    if replacement.value == target:
        return term
    return _subst(term, target, replacement)


def rename_binder(tube: Tube, avoid: Iterable[str]) -> Tube:
    """管壁约束名与 avoid 冲突时换名"""
    avoid = set(avoid)
    if tube.binder not in avoid:
        return tube
    renamed = fresh(avoid | free_dims(tube.wall) | {tube.binder}, tube.binder)
    return replace(tube, binder=renamed, wall=subst_dim(tube.wall, tube.binder, Dim(renamed)))


# α 等价：转成无名形式后比较


def _canon_dim(d: Dim, env: Dict[str, int]) -> tuple:
    if d.is_constant:
        return ("c", d.value)
    if d.value in env:
        return ("b", env[d.value])
    return ("f", d.value)


def _bind(env: Dict[str, int], name: str) -> Dict[str, int]:
    inner = dict(env)
    inner[name] = max(env.values(), default=-1) + 1
    return inner


def _canon_tubes(tubes, dims, points) -> tuple:
    items = [
        (_canon_dim(t.extent, dims), t.side.value, canonical(t.wall, _bind(dims, t.binder), points))
        for t in tubes
    ]
    return tuple(sorted(items, key=lambda item: (item[0], item[1])))


def canonical(term: Term, dims: Optional[Dict[str, int]] = None, points: Optional[Dict[str, int]] = None) -> tuple:
    """约束名换成层级编号、管壁排序后的无名形式"""
    dims = dims or {}
    points = points or {}
    match term:
        case Var(name):
            return ("pv", points[name]) if name in points else ("var", name)
        case Univ():
            return ("U",)
        case DimAbs(binder, body):
            return ("abs", canonical(body, _bind(dims, binder), points))
        case DimApp(fun, arg):
            return ("at", canonical(fun, dims, points), _canon_dim(arg, dims))
        case Id(binder, family, left, right):
            return (
                "Id",
                canonical(family, _bind(dims, binder), points),
                canonical(left, dims, points),
                canonical(right, dims, points),
            )
        case HCom(ty, src, dst, cap, tubes):
            return (
                "hcom",
                canonical(ty, dims, points),
                _canon_dim(src, dims),
                _canon_dim(dst, dims),
                canonical(cap, dims, points),
                _canon_tubes(tubes, dims, points),
            )
        case Coe(binder, family, src, dst, arg):
            return (
                "coe",
                canonical(family, _bind(dims, binder), points),
                _canon_dim(src, dims),
                _canon_dim(dst, dims),
                canonical(arg, dims, points),
            )
        case Com(binder, family, src, dst, cap, tubes):
            return (
                "com",
                canonical(family, _bind(dims, binder), points),
                _canon_dim(src, dims),
                _canon_dim(dst, dims),
                canonical(cap, dims, points),
                _canon_tubes(tubes, dims, points),
            )
        case Pi(var, dom, cod):
            return ("Pi", canonical(dom, dims, points), canonical(cod, dims, _bind(points, var)))
        case Lam(var, body):
            return ("lam", canonical(body, dims, _bind(points, var)))
        case App(fun, arg):
            return ("app", canonical(fun, dims, points), canonical(arg, dims, points))
    raise TypeError(f"not a term: {term!r}")


def alpha_eq(a: Term, b: Term) -> bool:
    """约束名一致换名后相同"""
    if a == b:
        return True
    return canonical(a) == canonical(b)
