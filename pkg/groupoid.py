# -*- coding: utf-8 -*-
"""
群胚构造：反射、逆、复合、填充子及各条引理的开盒证明项
"""
import logging
from dataclasses import replace
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from dims import free_dims, pick, rename_binder, subst_dim
from errors import (
    KernelError,
    MiddleEndpointMismatch,
    NonDegenerate,
    TypeMismatch,
    UnboundVariable,
)
from evaluator import subst_point, subterms
from kernel import Kernel, elaborate
from models import (
    ONE,
    UNIV,
    ZERO,
    CheckedConstruction,
    Com,
    Context,
    Dim,
    DimAbs,
    DimApp,
    FaceRecord,
    HCom,
    Id,
    Term,
    Tube,
    Var,
    Verdict,
    as_dim,
)
from syntax import parse

logger = logging.getLogger(__name__)

# 目录使用的环境上下文
AMBIENT_SOURCE = """
point A : U
point B : U
point C : U
point a : A
point b : A
point c : A
point d : A
point p : Id (x. A) a b
point q : Id (x. A) b c
point r : Id (x. A) c d
point s : Id (x. A) a c
point t : Id (x. A) b d
point r2 : Id (x. A) c d
point sigma : Id (y. Id (x. A) (s @ y) (t @ y)) p r
point tau : Id (y. Id (x. A) (s @ y) (t @ y)) p r2
point P : Id (x. U) A B
point Q : Id (x. U) B C
point ha : A
point hb : B
point hc : C
point hp : Id (x. P @ x) ha hb
point hq : Id (x. Q @ x) hb hc
"""

# 异质提升用的占位变量
LIFT_TYPE = "_T"
LIFT_LEFT = "_ha"
LIFT_RIGHT = "_hb"
LIFT_PATH = "_hp"


def at(term: Term, *args) -> Term:
    """连续的维度应用 term @ r1 @ r2 ..."""
    for arg in args:
        term = DimApp(term, as_dim(arg))
    return term


def tube(extent, side, binder: str, wall: Term) -> Tube:
    return Tube(as_dim(extent), as_dim(side), binder, wall)


def box(ty: Term, cap: Term, *tubes: Tube) -> HCom:
    """0 到 1 的 hcom"""
    return HCom(ty, ZERO, ONE, cap, tuple(tubes))


def context_from_source(source: str, ctx: Optional[Context] = None) -> Context:
    """由声明文本建立上下文，任何一条失败即报错"""
    ctx, results = elaborate(parse(source), ctx)
    for result in results:
        if not result.passed:
            raise result.verdict.error or KernelError(result.name)
    return ctx


class Groupoid:
    """
    在给定上下文里组装证明项

    每个构造返回 CheckedConstruction；check=False 时只组装不检查，
    供更大的构造内部复用
    """

    def __init__(self, kernel: Kernel):
        self.kernel = kernel
        self.ctx = kernel.ctx
        self.ev = kernel.evaluator

    @classmethod
    def from_context(cls, ctx: Context) -> "Groupoid":
        return cls(Kernel(ctx))

    def nf(self, term: Term) -> Term:
        return self.ev.normalize(term)

    def extended(self, points: Dict[str, Term]) -> "Groupoid":
        """加入若干点变量后的构造器"""
        ctx = self.ctx
        for name, ty in points.items():
            ctx = ctx.with_point(name, ty)
        return Groupoid(Kernel(ctx))

    # 基础

    def point(self, name: str) -> CheckedConstruction:
        """上下文中的变量作为已检查的构造"""
        ty = self.ctx.type_of(name)
        if ty is None:
            raise UnboundVariable(name)
        return CheckedConstruction(name, Var(name), ty, Verdict(name, True))

    def construction(self, name: str, term: Term, claimed: Term) -> CheckedConstruction:
        """未检查的构造"""
        return CheckedConstruction(name, term, claimed)

    def _finish(self, name: str, term: Term, claimed: Term, check: bool) -> CheckedConstruction:
        verdict = self.kernel.check_member(term, claimed, name) if check else None
        return CheckedConstruction(name, term, claimed, verdict)

    def ends(self, c: CheckedConstruction) -> Id:
        """构造所在的 Id 类型（范式）"""
        ty = self.nf(c.claimed_type)
        if not isinstance(ty, Id):
            ty = self.nf(self.kernel.infer(c.term))
        if not isinstance(ty, Id):
            raise TypeMismatch("Id", ty, c.name)
        return ty

    def _degenerate(self, line: Id) -> Term:
        family = self.nf(line.family)
        if line.binder in free_dims(family):
            raise NonDegenerate(family, line.binder)
        return family

    def _names(self, terms: Iterable[Term], *hints: str) -> Tuple[str, ...]:
        avoid = set(self.ctx.dims)
        for term in terms:
            avoid |= free_dims(term)
        names = []
        for hint in hints:
            name = pick(hint, avoid)
            avoid.add(name)
            names.append(name)
        return tuple(names)

    def _line(self, binder: str, body: Term, ty: Term, name: str = "line") -> CheckedConstruction:
        """<binder> body 作为 ty 上的线"""
        term = self.nf(DimAbs(binder, body))
        claimed = Id(binder, ty, self.ev.face(body, binder, ZERO), self.ev.face(body, binder, ONE))
        return CheckedConstruction(name, term, claimed)

    def _boundary_type(self, term: Term, base: Term) -> Term:
        """嵌套 DimAbs 的边界类型，面取范式"""
        if not isinstance(term, DimAbs):
            return base
        x = term.binder
        inner = self._boundary_type(term.body, base)
        return Id(x, inner, self.ev.face(term.body, x, ZERO), self.ev.face(term.body, x, ONE))

    # 反射、逆、复合

    def refl(self, a: Term, x: str = "x", A: Optional[Term] = None, check: bool = True) -> CheckedConstruction:
        """refl_a = <x> a"""
        if A is None:
            A = self.nf(self.kernel.infer(a))
        if x in free_dims(A):
            raise NonDegenerate(A, x)
        if x in free_dims(a):
            (x,) = self._names([a, A], x)
        return self._finish("refl", DimAbs(x, a), Id(x, A, a, a), check)

    def inv(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """p⁻¹ = <x> hcom 0~>1 A (refl_a @ x) [x=0 y. p @ y | x=1 y. refl_a @ y]"""
        line = self.ends(p)
        A = self._degenerate(line)
        a, b = line.left, line.right
        x, y = self._names([p.term, A, a, b], "x", "y")
        refl_a = DimAbs(x, a)
        term = DimAbs(x, box(
            A,
            at(refl_a, x),
            tube(x, 0, y, at(p.term, y)),
            tube(x, 1, y, at(refl_a, y)),
        ))
        return self._finish("inv", term, Id(x, A, b, a), check)

    def comp(self, p: CheckedConstruction, q: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """p • q = <x> hcom 0~>1 A (p @ x) [x=0 y. refl_a @ y | x=1 y. q @ y]"""
        first, second = self.ends(p), self.ends(q)
        A = self._degenerate(first)
        self._degenerate(second)
        if not self.ev.judge_equal(first.right, second.left):
            raise MiddleEndpointMismatch(first.right, second.left)
        a, c = first.left, second.right
        x, y = self._names([p.term, q.term, A, a, c], "x", "y")
        refl_a = DimAbs(x, a)
        term = DimAbs(x, box(
            A,
            at(p.term, x),
            tube(x, 0, y, at(refl_a, y)),
            tube(x, 1, y, at(q.term, y)),
        ))
        return self._finish("comp", term, Id(x, A, a, c), check)

    def filler(self, c: Term, y: str) -> Term:
        """把合成的终点换成维度名 y"""
        if isinstance(c, DimApp) and isinstance(c.fun, DimAbs):
            c = subst_dim(c.fun.body, c.fun.binder, c.arg)
        if not isinstance(c, (HCom, Com)):
            raise TypeMismatch("hcom", c, "filler")
        tubes = tuple(rename_binder(t, {y}) for t in c.tubes)
        return replace(c, dst=Dim(y), tubes=tubes)

    def het_kan_composite(self, binder: str, family: Term, src, dst, cap: Term, tubes: Iterable[Tube]) -> Com:
        """类型线 binder. family 上的异质合成"""
        return Com(binder, family, as_dim(src), as_dim(dst), cap, tuple(tubes))

    # 群胚律

    def iu(self, a: Term, A: Optional[Term] = None, check: bool = True) -> CheckedConstruction:
        """iu_a : refl_a = refl_a⁻¹"""
        r = self.refl(a, A=A, check=False)
        A = r.claimed_type.family
        i = self.inv(r, check=False)
        x, y = self._names([a, A], "x", "y")
        term = DimAbs(y, DimAbs(x, self.filler(at(i.term, x), y)))
        return self._finish("iu", term, Id(y, Id(x, A, a, a), r.term, i.term), check)

    def cu(self, a: Term, A: Optional[Term] = None, check: bool = True) -> CheckedConstruction:
        """cu_a : refl_a = refl_a • refl_a"""
        r = self.refl(a, A=A, check=False)
        A = r.claimed_type.family
        rr = self.comp(r, r, check=False)
        x, y = self._names([a, A], "x", "y")
        term = DimAbs(y, DimAbs(x, self.filler(at(rr.term, x), y)))
        return self._finish("cu", term, Id(y, Id(x, A, a, a), r.term, rr.term), check)

    def ru(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """ru_p : p = p • refl_b"""
        line = self.ends(p)
        A = self._degenerate(line)
        a, b = line.left, line.right
        pb = self.comp(p, self.refl(b, A=A, check=False), check=False)
        x, y = self._names([p.term, A, a, b], "x", "y")
        term = DimAbs(y, DimAbs(x, self.filler(at(pb.term, x), y)))
        return self._finish("ru", term, Id(y, Id(x, A, a, b), p.term, pb.term), check)

    def rc(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """rc_p : refl_a = p • p⁻¹"""
        line = self.ends(p)
        A = self._degenerate(line)
        a = line.left
        pi = self.inv(p, check=False)
        ppi = self.comp(p, pi, check=False)
        x, y, z = self._names([p.term, A, a, line.right], "x", "y", "z")
        body = box(
            A,
            at(p.term, x),
            tube(x, 0, y, a),
            tube(x, 1, y, at(pi.term, y)),
            tube(z, 0, y, self.filler(at(pi.term, y), x)),
            tube(z, 1, y, self.filler(at(ppi.term, x), y)),
        )
        term = DimAbs(z, DimAbs(x, body))
        return self._finish("rc", term, Id(z, Id(x, A, a, a), DimAbs(x, a), ppi.term), check)

    def swap(self, alpha: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """把 (外, 内) 方块翻成以两条侧边之逆为边的方块"""
        outer = self.ends(alpha)
        inner = self.nf(outer.family)
        if not isinstance(inner, Id):
            raise TypeMismatch("Id", inner, "swap")
        A = self._degenerate(inner)
        if outer.binder in free_dims(A):
            raise NonDegenerate(A, outer.binder)
        bo = outer.binder
        r = self._line(bo, inner.left, A)
        s = self._line(bo, inner.right, A)
        ri, si = self.inv(r, check=False), self.inv(s, check=False)
        P, Q = outer.left, outer.right
        x, y, z = self._names([alpha.term, A, P, Q, r.term, s.term], "x", "y", "z")
        body = box(
            A,
            at(P, z),
            tube(x, 0, y, at(alpha.term, y, z)),
            tube(x, 1, y, at(P, z)),
            tube(z, 0, y, self.filler(at(ri.term, x), y)),
            tube(z, 1, y, self.filler(at(si.term, x), y)),
        )
        term = DimAbs(x, DimAbs(z, body))
        claimed = Id(x, Id(z, A, at(ri.term, x), at(si.term, x)), Q, P)
        return self._finish("swap", term, claimed, check)

    def inversability(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """p = (p⁻¹)⁻¹"""
        line = self.ends(p)
        A = self._degenerate(line)
        a, b = line.left, line.right
        pi = self.inv(p, check=False)
        pii = self.inv(pi, check=False)
        pip = self.comp(pi, p, check=False)
        refl_b = self.refl(b, A=A, check=False)
        rbii = self.inv(self.inv(refl_b, check=False), check=False)
        iu_b = self.iu(b, A=A, check=False)
        x, y, z = self._names([p.term, A, a, b], "x", "y", "z")

        top = box(
            A,
            b,
            tube(x, 0, y, at(iu_b.term, z, y)),
            tube(x, 1, y, b),
            tube(z, 0, y, b),
            tube(z, 1, y, self.filler(at(rbii.term, x), y)),
        )
        # X 是 (x, y) 方块，Y 由两次 swap 得到
        square = self.filler(at(pip.term, y), x)
        s0_term = DimAbs(x, DimAbs(y, square))
        s0 = CheckedConstruction("inversability.X", s0_term, self._boundary_type(s0_term, A))
        s2 = self.swap(self.swap(s0, check=False), check=False)
        swapped = at(s2.term, x, y)

        body = box(
            A,
            top,
            tube(x, 0, y, at(pi.term, y)),
            tube(x, 1, y, at(pip.term, y)),
            tube(z, 0, y, square),
            tube(z, 1, y, swapped),
        )
        term = DimAbs(z, DimAbs(x, body))
        return self._finish("inversability", term, Id(z, Id(x, A, a, b), p.term, pii.term), check)

    def op1(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """p 与 refl_a 之间、右边沿 p⁻¹ 的方块"""
        line = self.ends(p)
        A = self._degenerate(line)
        a = line.left
        pi = self.inv(p, check=False)
        ppi = self.comp(p, pi, check=False)
        rci = self.inv(self.rc(p, check=False), check=False)
        x, y, z = self._names([p.term, A, a, line.right], "x", "y", "z")
        body = box(
            A,
            self.filler(at(ppi.term, x), z),
            tube(x, 0, y, a),
            tube(x, 1, y, at(pi.term, z)),
            tube(z, 0, y, at(p.term, x)),
            tube(z, 1, y, at(rci.term, y, x)),
        )
        term = DimAbs(z, DimAbs(x, body))
        claimed = Id(z, Id(x, A, a, at(pi.term, z)), p.term, DimAbs(x, a))
        return self._finish("op1", term, claimed, check)

    def lc(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """lc_p : refl_b = p⁻¹ • p"""
        line = self.ends(p)
        A = self._degenerate(line)
        b = line.right
        pi = self.inv(p, check=False)
        pip = self.comp(pi, p, check=False)
        invi = self.inv(self.inversability(p, check=False), check=False)
        opi = self.op1(pi, check=False)
        x, y, z = self._names([p.term, A, line.left, b], "x", "y", "z")
        body = box(
            A,
            at(pi.term, x),
            tube(x, 0, y, b),
            tube(x, 1, y, at(invi.term, z, y)),
            tube(z, 0, y, at(opi.term, y, x)),
            tube(z, 1, y, self.filler(at(pip.term, x), y)),
        )
        term = DimAbs(z, DimAbs(x, body))
        return self._finish("lc", term, Id(z, Id(x, A, b, b), DimAbs(x, b), pip.term), check)

    def op2(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """op1 的镜像：p⁻¹ 与 refl_b 之间、右边沿 p 的方块"""
        line = self.ends(p)
        A = self._degenerate(line)
        b = line.right
        pi = self.inv(p, check=False)
        pip = self.comp(pi, p, check=False)
        lci = self.inv(self.lc(p, check=False), check=False)
        x, y, z = self._names([p.term, A, line.left, b], "x", "y", "z")
        body = box(
            A,
            self.filler(at(pip.term, x), z),
            tube(x, 0, y, b),
            tube(x, 1, y, at(p.term, z)),
            tube(z, 0, y, at(pi.term, x)),
            tube(z, 1, y, at(lci.term, y, x)),
        )
        term = DimAbs(z, DimAbs(x, body))
        claimed = Id(z, Id(x, A, b, at(p.term, z)), pi.term, DimAbs(x, b))
        return self._finish("op2", term, claimed, check)

    def lu(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """lu_p : p = refl_a • p"""
        line = self.ends(p)
        A = self._degenerate(line)
        a, b = line.left, line.right
        pi = self.inv(p, check=False)
        rp = self.comp(self.refl(a, A=A, check=False), p, check=False)
        o2 = self.op2(p, check=False)
        x, y, z = self._names([p.term, A, a, b], "x", "y", "z")
        body = box(
            A,
            self.filler(at(pi.term, z), x),
            tube(x, 0, y, a),
            tube(x, 1, y, at(o2.term, y, z)),
            tube(z, 0, y, at(p.term, x)),
            tube(z, 1, y, self.filler(at(rp.term, x), y)),
        )
        term = DimAbs(z, DimAbs(x, body))
        return self._finish("lu", term, Id(z, Id(x, A, a, b), p.term, rp.term), check)

    def bi(
        self,
        alpha: CheckedConstruction,
        beta: CheckedConstruction,
        claimed: Optional[Term] = None,
        check: bool = True,
    ) -> CheckedConstruction:
        """两个方块共享底边与两侧时，它们的顶边相等"""
        outer = self.ends(alpha)
        other = self.ends(beta)
        inner = self.nf(outer.family)
        if not isinstance(inner, Id):
            raise TypeMismatch("Id", inner, "bi")
        A = self._degenerate(inner)
        bo = outer.binder
        P, Q, Q2 = outer.left, outer.right, other.right
        x, y, z = self._names([alpha.term, beta.term, A, P, Q, Q2], "x", "y", "z")
        body = box(
            A,
            at(P, x),
            tube(x, 0, y, subst_dim(inner.left, bo, y)),
            tube(x, 1, y, subst_dim(inner.right, bo, y)),
            tube(z, 0, y, at(alpha.term, y, x)),
            tube(z, 1, y, at(beta.term, y, x)),
        )
        term = DimAbs(z, DimAbs(x, body))
        if claimed is None:
            left = self.ev.face(inner.left, bo, ONE)
            right = self.ev.face(inner.right, bo, ONE)
            claimed = Id(z, Id(x, A, left, right), Q, Q2)
        return self._finish("bi", term, claimed, check)

    def assoc(
        self,
        p: CheckedConstruction,
        q: CheckedConstruction,
        r: CheckedConstruction,
        check: bool = True,
    ) -> CheckedConstruction:
        """(p • q) • r = p • (q • r)"""
        line = self.ends(p)
        A = self._degenerate(line)
        a = line.left
        d = self.ends(r).right
        pq = self.comp(p, q, check=False)
        qr = self.comp(q, r, check=False)
        pq_r = self.comp(pq, r, check=False)
        p_qr = self.comp(p, qr, check=False)
        x, y, z = self._names([p.term, q.term, r.term, A, a, d], "x", "y", "z")
        first = box(
            A,
            self.filler(at(pq.term, x), z),
            tube(x, 0, y, a),
            tube(x, 1, y, self.filler(at(qr.term, z), y)),
            tube(z, 0, y, at(p.term, x)),
            tube(z, 1, y, self.filler(at(pq_r.term, x), y)),
        )
        side = Id(x, A, a, at(qr.term, z))
        left = CheckedConstruction("assoc.left", DimAbs(z, DimAbs(x, first)), Id(z, side, p.term, pq_r.term))
        second = self.filler(at(p_qr.term, x), z)
        right = CheckedConstruction("assoc.right", DimAbs(z, DimAbs(x, second)), Id(z, side, p.term, p_qr.term))
        claimed = Id(z, Id(x, A, a, d), pq_r.term, p_qr.term)
        result = self.bi(left, right, claimed=claimed, check=check)
        return replace(result, name="assoc", verdict=_renamed(result.verdict, "assoc"))

    # 类型层面

    def type_inv(self, P: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """宇宙中的逆，附带两端的面推断"""
        result = replace(self.inv(P, check=check), name="type_inv")
        if not check:
            return result
        line = self.ends(P)
        (x,) = self._names([P.term], "x")
        expectations = {(x, "0"): line.right, (x, "1"): line.left}
        report = self.kernel.boundary_report(at(result.term, x), expectations)
        verdict = _renamed(result.verdict, "type_inv")
        for (name, side), actual in sorted(report.faces.items()):
            verdict.records.append(FaceRecord(name, as_dim(side), actual))
        if not report.passed:
            verdict.passed = False
            verdict.error = verdict.error or TypeMismatch(line.right, report.faces.get((x, "0")), "type_inv")
        return replace(result, verdict=verdict)

    def type_comp(self, P: CheckedConstruction, Q: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """宇宙中的复合"""
        result = self.comp(P, Q, check=check)
        return replace(result, name="type_comp", verdict=_renamed(result.verdict, "type_comp"))

    def _type_line(self, hp: CheckedConstruction) -> Tuple[Id, CheckedConstruction]:
        line = self.ends(hp)
        return line, self._line(line.binder, line.family, UNIV, "type_line")

    def het_inv(self, hp: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """类型线 P 上的异质逆"""
        line, P = self._type_line(hp)
        ha, hb = line.left, line.right
        inverse = self.inv(P, check=False)
        x, y = self._names([hp.term, P.term, ha, hb], "x", "y")
        family = self.filler(at(inverse.term, x), y)
        refl_ha = DimAbs(x, ha)
        body = self.het_kan_composite(
            y, family, ZERO, ONE,
            at(refl_ha, x),
            [tube(x, 0, y, at(hp.term, y)), tube(x, 1, y, at(refl_ha, y))],
        )
        claimed = Id(x, at(inverse.term, x), hb, ha)
        return self._finish("het_inv", DimAbs(x, body), claimed, check)

    def het_comp(self, hp: CheckedConstruction, hq: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """类型线 P • Q 上的异质复合"""
        first, P = self._type_line(hp)
        second, Q = self._type_line(hq)
        if not self.ev.judge_equal(first.right, second.left):
            raise MiddleEndpointMismatch(first.right, second.left)
        ha, hc = first.left, second.right
        composite = self.comp(P, Q, check=False)
        x, y = self._names([hp.term, hq.term, P.term, Q.term, ha, hc], "x", "y")
        family = self.filler(at(composite.term, x), y)
        refl_ha = DimAbs(x, ha)
        body = self.het_kan_composite(
            y, family, ZERO, ONE,
            at(hp.term, x),
            [tube(x, 0, y, at(refl_ha, y)), tube(x, 1, y, at(hq.term, y))],
        )
        claimed = Id(x, at(composite.term, x), ha, hc)
        return self._finish("het_comp", DimAbs(x, body), claimed, check)

    # 异质提升

    def het_lift(self, term: Term, images: Dict[str, Term]) -> Term:
        """
        把点类型 _T 中的齐次构造提升为类型线上的异质构造

        每个 hcom 变为 com，其类型族是同一个盒子在宇宙中的填充子；
        images 给出占位变量在宇宙中的像
        """
        return _Lifter(self, images).lift(term)

    def het_inversability(self, hp: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """异质版本的 p = (p⁻¹)⁻¹"""
        line, P = self._type_line(hp)
        ha, hb = line.left, line.right
        A, B = self.ends(P).left, self.ends(P).right
        placeholder = self.extended({
            LIFT_TYPE: UNIV,
            LIFT_LEFT: Var(LIFT_TYPE),
            LIFT_RIGHT: Var(LIFT_TYPE),
            LIFT_PATH: Id("x", Var(LIFT_TYPE), Var(LIFT_LEFT), Var(LIFT_RIGHT)),
        })
        generic = placeholder.inversability(placeholder.point(LIFT_PATH), check=False)
        images = {LIFT_PATH: P.term, LIFT_LEFT: A, LIFT_RIGHT: B, LIFT_TYPE: UNIV}
        lifted = self.het_lift(generic.term, images)
        for name, value in ((LIFT_PATH, hp.term), (LIFT_LEFT, ha), (LIFT_RIGHT, hb)):
            lifted = subst_point(lifted, name, value)

        square = self.inversability(P, check=False)
        double = self.het_inv(self.het_inv(hp, check=False), check=False)
        x, y = self._names([hp.term, P.term, ha, hb], "x", "y")
        claimed = Id(y, Id(x, at(square.term, y, x), ha, hb), hp.term, double.term)
        return self._finish("het_inversability", lifted, claimed, check)

    # 目录

    def stdlib_catalog(self) -> List[CheckedConstruction]:
        """群胚部分的全部构造，逐条经内核检查"""
        v = self.point
        a, P = Var("a"), v("P")
        p, q, r = v("p"), v("q"), v("r")
        entries = [
            ("refl", lambda: self.refl(a)),
            ("inv", lambda: self.inv(p)),
            ("comp", lambda: self.comp(p, q)),
            ("iu", lambda: self.iu(a)),
            ("cu", lambda: self.cu(a)),
            ("ru", lambda: self.ru(p)),
            ("rc", lambda: self.rc(p)),
            ("swap", lambda: self.swap(v("sigma"))),
            ("inversability", lambda: self.inversability(p)),
            ("op1", lambda: self.op1(p)),
            ("op2", lambda: self.op2(p)),
            ("lc", lambda: self.lc(p)),
            ("lu", lambda: self.lu(p)),
            ("bi", lambda: self.bi(v("sigma"), v("tau"))),
            ("assoc", lambda: self.assoc(p, q, r)),
            ("type_inv", lambda: self.type_inv(P)),
            ("het_inv", lambda: self.het_inv(v("hp"))),
            ("type_comp", lambda: self.type_comp(P, v("Q"))),
            ("het_comp", lambda: self.het_comp(v("hp"), v("hq"))),
            ("het_inversability", lambda: self.het_inversability(v("hp"))),
        ]
        return [_guarded(name, build) for name, build in entries]


def _renamed(verdict: Optional[Verdict], name: str) -> Optional[Verdict]:
    if verdict is None:
        return None
    return replace(verdict, name=name, records=list(verdict.records))


def _guarded(name: str, build) -> CheckedConstruction:
    """构造过程中抛出的内核错误记为失败条目"""
    try:
        result = build()
    except KernelError as exc:
        logger.warning("构造失败: %s", exc)
        return CheckedConstruction(name, Var(name), UNIV, Verdict(name, False, [], exc))
    logger.info("%s: %s", result.name, "PASS" if result.passed else "FAIL")
    return result


class _Lifter:
    """het_lift 的递归实现"""

    def __init__(self, builder: Groupoid, images: Dict[str, Term]):
        self.builder = builder
        self.images = images

    def image(self, term: Term) -> Term:
        """项在宇宙层的像"""
        for name, value in self.images.items():
            term = subst_point(term, name, value)
        return term

    def lift(self, term: Term) -> Term:
        match term:
            case HCom(ty, src, dst, cap, tubes):
                if ty != Var(LIFT_TYPE):
                    raise TypeMismatch(Var(LIFT_TYPE), ty, "het_lift")
                avoid = [term] + [self.image(t.wall) for t in tubes]
                (w,) = self.builder._names(avoid, "w")
                family = HCom(
                    UNIV, src, Dim(w), self.image(cap),
                    tuple(replace(t, wall=self.image(t.wall)) for t in tubes),
                )
                return Com(
                    w, family, src, dst, self.lift(cap),
                    tuple(replace(t, wall=self.lift(t.wall)) for t in tubes),
                )
            case DimAbs(binder, body):
                return DimAbs(binder, self.lift(body))
            case DimApp(fun, arg):
                return DimApp(self.lift(fun), arg)
        if any(True for _ in subterms(term)):
            raise TypeMismatch("point", term, "het_lift")
        return term


@lru_cache(maxsize=None)
def _ambient_context() -> Context:
    return context_from_source(AMBIENT_SOURCE)


def ambient_context() -> Context:
    """目录的环境上下文；只解析一次，每次返回副本"""
    return _ambient_context().copy()


def stdlib_catalog() -> List[CheckedConstruction]:
    """在环境上下文中构造并检查群胚目录"""
    return Groupoid.from_context(ambient_context()).stdlib_catalog()
