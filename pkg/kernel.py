# -*- coding: utf-8 -*-
"""
判断内核：成员检查、开盒相邻性、边界报告
"""
import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

from dims import fresh, free_dims, rename_binder, subst_dim
from errors import (
    CapTubeMismatch,
    EndpointMismatch,
    KernelError,
    MissingAdjacency,
    NonDegenerateCompositionType,
    TubeTubeMismatch,
    TypeMismatch,
    UnboundVariable,
    WallIllTyped,
)
from evaluator import Evaluator, subst_point, subterms
from models import (
    ONE,
    SIDES,
    UNIV,
    ZERO,
    AdjRecord,
    App,
    BoundaryReport,
    CheckedConstruction,
    Com,
    Coe,
    Context,
    DeclKind,
    Declaration,
    Dim,
    DimAbs,
    DimApp,
    FaceRecord,
    HCom,
    Id,
    Lam,
    Pi,
    Term,
    Tube,
    Univ,
    Var,
    Verdict,
    as_dim,
)

logger = logging.getLogger(__name__)

Records = Optional[List]


def _has_stuck_endpoint(term: Term) -> bool:
    """范式中是否残留常量处的维度应用"""
    if isinstance(term, DimApp) and term.arg.is_constant:
        return True
    return any(_has_stuck_endpoint(child) for _, child in subterms(term))


def _beta_spine(term: Term) -> Optional[Term]:
    """头部为 Lam 的应用链做一步 β，否则 None"""
    if not isinstance(term, App):
        return None
    if isinstance(term.fun, Lam):
        return subst_point(term.fun.body, term.fun.var, term.arg)
    inner = _beta_spine(term.fun)
    return None if inner is None else App(inner, term.arg)


class Kernel:
    """类型检查内核"""

    def __init__(self, ctx: Context, evaluator: Optional[Evaluator] = None):
        self.ctx = ctx
        self.evaluator = evaluator or Evaluator(ctx)
        self._infer_memo: Dict[Tuple[Term, FrozenSet[str]], Term] = {}

    def child(self, name: str, ty: Term) -> "Kernel":
        """加入一个点变量后的内核"""
        return Kernel(self.ctx.with_point(name, ty))

    def check_member(self, m: Term, a: Term, name: str = "term") -> Verdict:
        """检查 m ∈ a，返回带轨迹的判定"""
        records: List = []
        try:
            self._check(a, UNIV, self.ctx.dims, None)
            self._check(m, a, self.ctx.dims, records)
        except KernelError as exc:
            logger.info("检查失败 %s: %s", name, exc)
            return Verdict(name, False, records, exc)
        logger.debug("CHECK %s: PASS", name)
        return Verdict(name, True, records)

    # 检查方向

    def _check(self, m: Term, a: Term, dims: FrozenSet[str], records: Records):
        ev = self.evaluator
        target = ev.normalize(a)
        if isinstance(m, DimAbs) and isinstance(target, Id):
            self._check_line(m, target, dims, records)
            return
        if isinstance(m, Lam) and isinstance(target, Pi):
            cod = target.cod if target.var == m.var else subst_point(target.cod, target.var, Var(m.var))
            self.child(m.var, target.dom)._check(m.body, cod, dims, None)
            return
        actual = self.infer(m, dims, records)
        if not ev.judge_equal(actual, target):
            raise TypeMismatch(target, ev.normalize(actual), type(m).__name__)

    def _check_line(self, m: DimAbs, line: Id, dims: FrozenSet[str], records: Records):
        """<x> M ∈ Id (w. A) L R"""
        ev = self.evaluator
        x, body = m.binder, m.body
        if x == line.binder:
            family = line.family
        elif x not in free_dims(line.family):
            family = subst_dim(line.family, line.binder, x)
        else:
            renamed = fresh(free_dims(line.family) | free_dims(body) | dims | {x, line.binder}, x)
            body = subst_dim(body, x, renamed)
            family = subst_dim(line.family, line.binder, renamed)
            x = renamed
        self._check(body, family, dims | {x}, records)
        for side, end in ((ZERO, line.left), (ONE, line.right)):
            actual = ev.face(body, x, side)
            if records is not None:
                records.append(FaceRecord(x, side, actual))
            if not ev.judge_equal(actual, end):
                raise EndpointMismatch(side.value, ev.normalize(end), actual, x)

    # 推断方向

    def infer(self, m: Term, dims: Optional[FrozenSet[str]] = None, records: Records = None) -> Term:
        """推断 m 的类型"""
        dims = self.ctx.dims if dims is None else dims
        if records is None:
            key = (m, dims)
            cached = self._infer_memo.get(key)
            if cached is None:
                cached = self._infer(m, dims, None)
                self._infer_memo[key] = cached
            return cached
        return self._infer(m, dims, records)

    def _infer(self, m: Term, dims: FrozenSet[str], records: Records) -> Term:
        ev = self.evaluator
        match m:
            case Var(name):
                ty = self.ctx.type_of(name)
                if ty is None:
                    raise UnboundVariable(name)
                return ty
            case Univ():
                return UNIV
            case Id(binder, family, left, right):
                self._check(family, UNIV, dims | {binder}, None)
                self._check(left, subst_dim(family, binder, ZERO), dims, None)
                self._check(right, subst_dim(family, binder, ONE), dims, None)
                return UNIV
            case Pi(var, dom, cod):
                self._check(dom, UNIV, dims, None)
                self.child(var, dom)._check(cod, UNIV, dims, None)
                return UNIV
            case DimAbs(binder, body):
                inner = dims | {binder}
                return Id(binder, self.infer(body, inner), ev.face(body, binder, ZERO), ev.face(body, binder, ONE))
            case DimApp(fun, arg):
                self._require_dims(dims, arg)
                line = ev.normalize(self.infer(fun, dims))
                if not isinstance(line, Id):
                    raise TypeMismatch("Id", line, "DimApp")
                return subst_dim(line.family, line.binder, arg)
            case HCom(ty, src, dst, cap, tubes):
                self.check_open_box(ty, src, dst, cap, tubes, dims, records)
                return ty
            case Coe(binder, family, src, dst, arg):
                self._require_dims(dims, src, dst)
                self._check(family, UNIV, dims | {binder}, None)
                self._check(arg, subst_dim(family, binder, src), dims, None)
                return subst_dim(family, binder, dst)
            case Com(binder, family, src, dst, cap, tubes):
                self.check_open_box(family, src, dst, cap, tubes, dims, records, line_binder=binder)
                return subst_dim(family, binder, dst)
            case App(fun, arg):
                reduced = _beta_spine(m)
                if reduced is not None:
                    return self.infer(reduced, dims)
                fun_ty = ev.normalize(self.infer(fun, dims))
                if not isinstance(fun_ty, Pi):
                    raise TypeMismatch("Pi", fun_ty, "App")
                self._check(arg, fun_ty.dom, dims, None)
                return subst_point(fun_ty.cod, fun_ty.var, arg)
            case Lam():
                raise TypeMismatch("Pi", m, "Lam")
        raise TypeMismatch("term", m)

    @staticmethod
    def _require_dims(dims: FrozenSet[str], *args: Dim):
        for d in args:
            if d.is_name and d.value not in dims:
                raise UnboundVariable(d.value, "dim")

    # 开盒

    def check_open_box(
        self,
        ty: Term,
        src: Dim,
        dst: Dim,
        cap: Term,
        tubes,
        dims: Optional[FrozenSet[str]] = None,
        records: Records = None,
        line_binder: Optional[str] = None,
    ):
        """校验 hcom（line_binder 给出时为 com）的开盒"""
        ev = self.evaluator
        dims = self.ctx.dims if dims is None else dims
        self._require_dims(dims, src, dst)
        if line_binder is None:
            self._check(ty, UNIV, dims, None)
            cap_ty = ty
        else:
            self._check(ty, UNIV, dims | {line_binder}, None)
            cap_ty = subst_dim(ty, line_binder, src)
        self._check(cap, cap_ty, dims, None)

        live: List[Tuple[Tube, Term]] = []
        seen = set()
        # 管壁约束名不能与作用域内的维度或任何管道方向同名
        scope = set(dims) | {t.extent.value for t in tubes if t.extent.is_name}
        for tube in sorted(tubes, key=Tube.sort_key):
            loc = f"{tube.extent}={tube.side}"
            if tube.sort_key() in seen:
                raise TubeTubeMismatch(loc, loc)
            seen.add(tube.sort_key())
            if tube.extent.is_constant:
                if tube.extent != tube.side:
                    continue
            else:
                self._require_dims(dims, tube.extent)
            if line_binder is None:
                if tube.binder in free_dims(ty):
                    raise NonDegenerateCompositionType(tube.binder)
            elif tube.binder in free_dims(ty) - {line_binder}:
                renamed = fresh(free_dims(ty) | free_dims(tube.wall) | dims | {tube.binder}, tube.binder)
                tube = Tube(tube.extent, tube.side, renamed, subst_dim(tube.wall, tube.binder, renamed))
            if tube.binder in scope:
                tube = rename_binder(tube, scope | free_dims(ty))
            wall = subst_dim(tube.wall, tube.extent.value, tube.side) if tube.extent.is_name else tube.wall
            live.append((tube, wall))

        for tube, wall in live:
            expected = ev.face(cap, tube.extent.value, tube.side) if tube.extent.is_name else ev.normalize(cap)
            actual = ev.face(wall, tube.binder, src)
            self._adjacency(
                "cap-tube", f"{tube.extent}={tube.side}", expected, actual, records,
                CapTubeMismatch(tube.extent.value, tube.side.value),
            )

        for index, (first, first_wall) in enumerate(live):
            for second, second_wall in live[index + 1:]:
                if first.extent == second.extent:
                    continue
                left = DimAbs(first.binder, self._restrict(first_wall, second))
                right = DimAbs(second.binder, self._restrict(second_wall, first))
                loc = f"{first.extent}={first.side},{second.extent}={second.side}"
                self._adjacency(
                    "tube-tube", loc, ev.normalize(left), ev.normalize(right), records,
                    TubeTubeMismatch(f"{first.extent}={first.side}", f"{second.extent}={second.side}"),
                )

        for tube, wall in live:
            if line_binder is None:
                wall_ty = ty
            else:
                wall_ty = subst_dim(ty, line_binder, tube.binder)
            if tube.extent.is_name:
                wall_ty = subst_dim(wall_ty, tube.extent.value, tube.side)
            try:
                self._check(wall, wall_ty, dims | {tube.binder}, None)
            except KernelError as exc:
                raise WallIllTyped(tube.extent.value, tube.side.value, exc) from exc

    @staticmethod
    def _restrict(wall: Term, other: Tube) -> Term:
        if other.extent.is_name:
            return subst_dim(wall, other.extent.value, other.side)
        return wall

    def _adjacency(self, kind: str, loc: str, expected: Term, actual: Term, records: Records, failure: KernelError):
        ev = self.evaluator
        ok = ev.judge_equal(expected, actual)
        if records is not None:
            records.append(AdjRecord(kind, loc, ok, ev.normalize(expected), ev.normalize(actual)))
        if ok:
            return
        if _has_stuck_endpoint(ev.normalize(expected)) or _has_stuck_endpoint(ev.normalize(actual)):
            raise MissingAdjacency(loc)
        raise failure

    # 边界

    def boundary_report(self, m: Term, expectations: Optional[Dict[Tuple[str, str], Term]] = None) -> BoundaryReport:
        """m 沿每个自由维度的两个面"""
        ev = self.evaluator
        report = BoundaryReport(m)
        for name in sorted(free_dims(m)):
            for side in SIDES:
                report.faces[(name, side.value)] = ev.face(m, name, side)
        for key, expected in (expectations or {}).items():
            actual = report.faces.get(key)
            if actual is None:
                actual = ev.face(m, key[0], key[1])
            report.verdicts.append((expected, actual, ev.judge_equal(expected, actual)))
        return report


def check_member(ctx: Context, m: Term, a: Term, name: str = "term") -> Verdict:
    return Kernel(ctx).check_member(m, a, name)


def check_open_box(ctx: Context, ty: Term, src, dst, cap: Term, tubes) -> Verdict:
    """单独校验一个开盒，返回带相邻性轨迹的判定"""
    kernel = Kernel(ctx)
    records: List = []
    try:
        kernel.check_open_box(ty, as_dim(src), as_dim(dst), cap, tuple(tubes), records=records)
    except KernelError as exc:
        return Verdict("box", False, records, exc)
    return Verdict("box", True, records)


def boundary_report(ctx: Context, m: Term, expectations=None) -> BoundaryReport:
    return Kernel(ctx).boundary_report(m, expectations)


def elaborate(decls: List[Declaration], ctx: Optional[Context] = None) -> Tuple[Context, List[CheckedConstruction]]:
    """
    按顺序处理声明，返回扩充后的上下文与每条 def/check 的判定

    point 的类型不在宇宙中时也记为一条失败的结果
    """
    ctx = ctx if ctx is not None else Context()
    results: List[CheckedConstruction] = []
    for decl in decls:
        if decl.kind is DeclKind.DIM:
            ctx.declare_dim(decl.name)
            continue
        if decl.kind is DeclKind.POINT:
            verdict = Kernel(ctx).check_member(decl.type, UNIV, decl.name)
            if not verdict.passed:
                results.append(CheckedConstruction(decl.name, decl.type, UNIV, verdict))
            ctx.declare_point(decl.name, decl.type)
            continue
        name = decl.name if decl.kind is DeclKind.DEF else f"check@{decl.line}"
        verdict = Kernel(ctx).check_member(decl.term, decl.type, name)
        results.append(CheckedConstruction(name, decl.term, decl.type, verdict))
        if decl.kind is DeclKind.DEF:
            ctx.define(decl.name, decl.term, decl.type)
    logger.info("处理了 %d 条声明，%d 条判定", len(decls), len(results))
    return ctx, results
