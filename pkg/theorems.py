# -*- coding: utf-8 -*-
"""
定理：路径归纳、须化与 Eckmann-Hilton、恒等类型的分配律及其推论
"""
import logging
from dataclasses import replace
from functools import lru_cache
from typing import List, Optional, Sequence

from dims import free_dims
from errors import EndpointCollapseError, KernelError, NonDegenerate, TypeMismatch
from groupoid import Groupoid, at, box, context_from_source, tube
from models import (
    ONE,
    UNIV,
    ZERO,
    App,
    CheckedConstruction,
    Coe,
    Context,
    DimAbs,
    FaceRecord,
    Id,
    JInstance,
    Lam,
    Term,
    Var,
    Verdict,
)

logger = logging.getLogger(__name__)

THEOREM_SOURCE = """
point A : U
point a : A
point b : A
point c : A
point d : A
point e : A
point f : A
point g : A
point h : A
point p : Id (x. A) a b
point q : Id (x. A) c d
point r : Id (x. A) b e
point s : Id (x. A) d f
point t : Id (x. A) e g
point u : Id (x. A) f h
point p2 : Id (x. A) a b
point gamma : Id (y. Id (x. A) a b) p p2
point alpha : Id (y. Id (x. A) a a) (<x> a) (<x> a)
point beta : Id (y. Id (x. A) a a) (<x> a) (<x> a)
point m : Id (x. A) a c
point n : Id (x. A) e f
point k : Id (x. A) b d
point sigma1 : Id (y. Id (v. A) (p @ y) (q @ y)) m k
point sigma2 : Id (y. Id (v. A) (r @ y) (s @ y)) k n
"""

# 归纳谓词的两个参数
MOTIVE_POINT = "_z"
MOTIVE_PATH = "_k"


def motive(body: Term) -> Term:
    """\\_z. \\_k. body"""
    return Lam(MOTIVE_POINT, Lam(MOTIVE_PATH, body))


def apply_motive(P: Term, point: Term, path: Term) -> Term:
    return App(App(P, point), path)


def _cc(name: str, term: Term, claimed: Term) -> CheckedConstruction:
    return CheckedConstruction(name, term, claimed)


def group(name: str, parts: Sequence[CheckedConstruction], main: int = 0) -> CheckedConstruction:
    """多个子构造合成一行，全部通过才算通过"""
    head = parts[main]
    passed = all(part.passed for part in parts)
    error = next((part.verdict.error for part in parts if part.verdict and part.verdict.error), None)
    verdict = Verdict(name, passed, list(head.verdict.records) if head.verdict else [], error)
    return CheckedConstruction(name, head.term, head.claimed_type, verdict, tuple(parts))


class TheoremBuilder:
    """在 Groupoid 之上组装定理的证明项"""

    def __init__(self, groupoid: Groupoid):
        self.g = groupoid

    def _with(self, groupoid: Groupoid) -> "TheoremBuilder":
        return TheoremBuilder(groupoid)

    def _motive_context(self, A: Term, base: Term) -> Groupoid:
        """加入 _z : A 与 _k : Id (x. A) base _z"""
        return self.g.extended({
            MOTIVE_POINT: A,
            MOTIVE_PATH: Id("x", A, base, Var(MOTIVE_POINT)),
        })

    # 路径归纳

    def is_refl(self, p: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """把 p 收缩到 refl_a 的方块"""
        g = self.g
        line = g.ends(p)
        A = g._degenerate(line)
        a = line.left
        refl_a = g.refl(a, A=A, check=False)
        rp = g.comp(refl_a, p, check=False)
        lui = g.inv(g.lu(p, check=False), check=False)
        x, y, z = g._names([p.term, A, a, line.right], "x", "y", "z")
        body = box(
            A,
            g.filler(at(rp.term, x), y),
            tube(x, 0, z, a),
            tube(x, 1, z, at(p.term, y)),
            tube(y, 0, z, a),
            tube(y, 1, z, at(lui.term, z, x)),
        )
        term = DimAbs(y, DimAbs(x, body))
        claimed = Id(y, Id(x, A, a, at(p.term, y)), DimAbs(x, a), p.term)
        return g._finish("is_refl", term, claimed, check)

    def j_eliminate(self, inst: JInstance, check: bool = True) -> CheckedConstruction:
        """沿 P(p@x, is_refl_p@x) 把种子从 0 端强制转换到 1 端"""
        g = self.g
        square = self.is_refl(inst.path, check=False)
        (x,) = g._names([inst.path.term, inst.motive, inst.seed, square.term, inst.base, inst.target], "x")
        family = apply_motive(inst.motive, at(inst.path.term, x), at(square.term, x))
        start = apply_motive(inst.motive, inst.base, DimAbs(x, inst.base))
        end = apply_motive(inst.motive, inst.target, inst.path.term)

        records = []
        for side, expected in ((ZERO, start), (ONE, end)):
            actual = g.ev.face(family, x, side)
            records.append(FaceRecord(x, side, actual))
            if not g.ev.judge_equal(actual, expected):
                raise EndpointCollapseError(side.value, g.nf(expected), actual)

        result = g._finish(inst.name, Coe(x, family, ZERO, ONE, inst.seed), end, check)
        if result.verdict is not None:
            result.verdict.records[:0] = records
        return result

    def j_instances(self, path: CheckedConstruction, name: str = "path_induction") -> List[JInstance]:
        """五个实例族：常类型、基点出发、自环、二维自环、到基点"""
        g = self.g
        line = g.ends(path)
        A = g._degenerate(line)
        a, target = line.left, line.right
        z, k = Var(MOTIVE_POINT), Var(MOTIVE_PATH)
        refl_a = DimAbs("v", a)
        families = [
            ("constant", A, a),
            ("based", Id("v", A, a, z), refl_a),
            ("loop", Id("v", A, z, z), refl_a),
            ("square", Id("w", Id("v", A, a, z), k, k), DimAbs("w", refl_a)),
            ("reversed", Id("v", A, z, a), refl_a),
        ]
        return [
            JInstance(A, a, motive(body), target, path, seed, f"{name}.{label}")
            for label, body, seed in families
        ]

    def path_induction(self, path: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """五个实例族上的 J"""
        parts = [self.j_eliminate(inst, check) for inst in self.j_instances(path)]
        return group("path_induction", parts)

    # 须化

    def _slice(self, alpha: CheckedConstruction, y: str) -> CheckedConstruction:
        """全局方块在 y 处的截线"""
        g = self.g
        outer = g.ends(alpha)
        inner = g.nf(outer.family)
        if not isinstance(inner, Id):
            raise TypeMismatch("Id", inner, alpha.name)
        if outer.binder in free_dims(inner):
            raise NonDegenerate(inner, outer.binder)
        return _cc(f"{alpha.name}@{y}", at(alpha.term, y), inner)

    def whisker_right(self, alpha: CheckedConstruction, r: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """α : p ⇒ q 得到 p • r ⇒ q • r"""
        g = self.g
        outer = g.ends(alpha)
        (y,) = g._names([alpha.term, r.term], "y")
        line = self._slice(alpha, y)
        middle = g.comp(line, r, check=False)
        left = g.comp(_cc("left", outer.left, line.claimed_type), r, check=False)
        right = g.comp(_cc("right", outer.right, line.claimed_type), r, check=False)
        claimed = Id(y, middle.claimed_type, left.term, right.term)
        return g._finish("whisker_right", DimAbs(y, middle.term), claimed, check)

    def whisker_left(self, p: CheckedConstruction, beta: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """β : r ⇒ s 得到 p • r ⇒ p • s"""
        g = self.g
        outer = g.ends(beta)
        (y,) = g._names([beta.term, p.term], "y")
        line = self._slice(beta, y)
        middle = g.comp(p, line, check=False)
        left = g.comp(p, _cc("left", outer.left, line.claimed_type), check=False)
        right = g.comp(p, _cc("right", outer.right, line.claimed_type), check=False)
        claimed = Id(y, middle.claimed_type, left.term, right.term)
        return g._finish("whisker_left", DimAbs(y, middle.term), claimed, check)

    def ap_inv(self, theta: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """逐点取逆：p ⇒ q 得到 p⁻¹ ⇒ q⁻¹"""
        g = self.g
        outer = g.ends(theta)
        (z,) = g._names([theta.term], "z")
        line = self._slice(theta, z)
        middle = g.inv(line, check=False)
        left = g.inv(_cc("left", outer.left, line.claimed_type), check=False)
        right = g.inv(_cc("right", outer.right, line.claimed_type), check=False)
        claimed = Id(z, middle.claimed_type, left.term, right.term)
        return g._finish("ap_inv", DimAbs(z, middle.term), claimed, check)

    def ap_comp(self, theta: CheckedConstruction, eta: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """逐点复合：θ : p ⇒ p'，η : q ⇒ q' 得到 p • q ⇒ p' • q'"""
        g = self.g
        first, second = g.ends(theta), g.ends(eta)
        (z,) = g._names([theta.term, eta.term], "z")
        middle = g.comp(self._slice(theta, z), self._slice(eta, z), check=False)
        inner = self._slice(theta, z).claimed_type
        inner2 = self._slice(eta, z).claimed_type
        left = g.comp(_cc("left", first.left, inner), _cc("left", second.left, inner2), check=False)
        right = g.comp(_cc("right", first.right, inner), _cc("right", second.right, inner2), check=False)
        claimed = Id(z, middle.claimed_type, left.term, right.term)
        return g._finish("ap_comp", DimAbs(z, middle.term), claimed, check)

    def _unit_line(self, alpha: CheckedConstruction, law: str, sq_type: Term, right: Term) -> CheckedConstruction:
        """<w> <y> law(α@y) @ w，从 α 到单位律须化后的方块"""
        g = self.g
        w, y = g._names([alpha.term, right], "w", "y")
        unit = getattr(g, law)(self._slice(alpha, y), check=False)
        term = DimAbs(w, DimAbs(y, at(unit.term, w)))
        return _cc(f"{law}_line", term, Id(w, sq_type, alpha.term, right))

    def _pointwise(self, name: str, first: CheckedConstruction, second: CheckedConstruction,
                   sq_type: Term, left: Term, right: Term) -> CheckedConstruction:
        """<w> comp(first@w, second@w)"""
        g = self.g
        (w,) = g._names([first.term, second.term, left, right], "w")
        middle = g.comp(_cc("first", at(first.term, w), sq_type), _cc("second", at(second.term, w), sq_type), check=False)
        return _cc(name, DimAbs(w, middle.term), Id(w, middle.claimed_type, left, right))

    def eckmann_hilton(self, alpha: CheckedConstruction, beta: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """二维自环的复合可交换：α • β ⇒ β • α"""
        g = self.g
        outer = g.ends(alpha)
        T = g._degenerate(outer)
        if not isinstance(T, Id):
            raise TypeMismatch("Id", T, "eckmann_hilton")
        A = g._degenerate(T)
        a = T.left
        refl_a = g.refl(a, A=A, check=False)
        (y,) = g._names([alpha.term, beta.term], "y")
        sq_type = Id(y, T, refl_a.term, refl_a.term)

        ab = g.comp(alpha, beta, check=False)
        ba = g.comp(beta, alpha, check=False)
        wr = self.whisker_right(alpha, refl_a, check=False)
        wl = self.whisker_left(refl_a, beta, check=False)
        wr_wl = g.comp(wr, wl, check=False)
        wl_wr = g.comp(wl, wr, check=False)

        theta_r = self._unit_line(alpha, "ru", sq_type, wr.term)
        theta_l = self._unit_line(beta, "lu", sq_type, wl.term)
        first = self._pointwise("eckmann_hilton.units", theta_r, theta_l, sq_type, ab.term, wr_wl.term)
        last = self._pointwise(
            "eckmann_hilton.counits",
            g.inv(theta_l, check=False),
            g.inv(theta_r, check=False),
            sq_type,
            wl_wr.term,
            ba.term,
        )

        # 须化可交换：对 α 做路径归纳
        ext = self._motive_context(T, refl_a.term)
        other = self._with(ext)
        z, k = ext.point(MOTIVE_POINT), ext.point(MOTIVE_PATH)
        ext_refl = ext.refl(a, A=A, check=False)
        wr_k = other.whisker_right(k, ext_refl, check=False)
        wl_z = other.whisker_left(z, beta, check=False)
        wl_a = other.whisker_left(ext_refl, beta, check=False)
        lhs = ext.comp(wr_k, wl_z, check=False)
        rhs = ext.comp(wl_a, wr_k, check=False)
        (w,) = ext._names([lhs.term, rhs.term, lhs.claimed_type], "w")
        predicate = Id(w, lhs.claimed_type, lhs.term, rhs.term)

        x_term = wl
        seed = g.comp(g.inv(g.lu(x_term, check=False), check=False), g.ru(x_term, check=False), check=False)
        inst = JInstance(T, refl_a.term, motive(predicate), refl_a.term, alpha, seed.term, "eckmann_hilton.whiskers")
        middle = self.j_eliminate(inst, check=False)

        joined = g.comp(g.comp(first, middle, check=False), last, check=False)
        claimed = Id(joined.claimed_type.binder, joined.claimed_type.family, ab.term, ba.term)
        return g._finish("eckmann_hilton", joined.term, claimed, check)

    # 分配律

    def type_line(self, p: CheckedConstruction, q: CheckedConstruction) -> CheckedConstruction:
        """<x> Id (v. A) (p @ x) (q @ x)"""
        g = self.g
        first, second = g.ends(p), g.ends(q)
        A = g._degenerate(first)
        x, v = g._names([p.term, q.term, A], "x", "v")
        term = DimAbs(x, Id(v, A, at(p.term, x), at(q.term, x)))
        claimed = Id(x, UNIV, Id(v, A, first.left, second.left), Id(v, A, first.right, second.right))
        return _cc("type_line", term, claimed)

    def _pointwise_line(self, law: str, p: CheckedConstruction, q: CheckedConstruction, ty_law: Term,
                        A: Term, *more: CheckedConstruction) -> Term:
        """<x> Id (v. ty_law @ x) (law(p..) @ x) (law(q..) @ x)"""
        g = self.g
        if more:
            left = getattr(g, law)(p, more[0], check=False)
            right = getattr(g, law)(q, more[1], check=False)
        else:
            left = getattr(g, law)(p, check=False)
            right = getattr(g, law)(q, check=False)
        x, v = g._names([left.term, right.term, ty_law], "x", "v")
        return DimAbs(x, Id(v, at(ty_law, x), at(left.term, x), at(right.term, x)))

    def inv_statement(self, p: CheckedConstruction, q: CheckedConstruction) -> Term:
        """(p =_A q)⁻¹ 等于 (p⁻¹ =_{A⁻¹} q⁻¹)"""
        g = self.g
        A = g._degenerate(g.ends(p))
        line = self.type_line(p, q)
        left = g.inv(line, check=False)
        inv_A = g.inv(g.refl(A, A=UNIV, check=False), check=False)
        right = self._pointwise_line("inv", p, q, inv_A.term, A)
        y, x = g._names([left.term, right], "y", "x")
        ends = g.ends(left)
        return Id(y, Id(x, UNIV, ends.left, ends.right), left.term, right)

    def comp_statement(self, p, q, r, s) -> Term:
        """(p =_A q) • (r =_A s) 等于 (p • r) =_{A • A} (q • s)"""
        g = self.g
        A = g._degenerate(g.ends(p))
        refl_A = g.refl(A, A=UNIV, check=False)
        left = g.comp(self.type_line(p, q), self.type_line(r, s), check=False)
        comp_A = g.comp(refl_A, refl_A, check=False)
        right = self._pointwise_line("comp", p, q, comp_A.term, A, r, s)
        y, x = g._names([left.term, right], "y", "x")
        ends = g.ends(left)
        return Id(y, Id(x, UNIV, ends.left, ends.right), left.term, right)

    def _unit_square(self, law: str, a: Term, c: Term, A: Term) -> CheckedConstruction:
        """refl 情形：<y> <x> Id (v. law_A @ y @ x) (law_a @ y @ x) (law_c @ y @ x)"""
        g = self.g
        build = getattr(g, law)
        law_T = build(Id("v", A, a, c), A=UNIV, check=False)
        law_A = build(A, A=UNIV, check=False)
        law_a = build(a, A=A, check=False)
        law_c = build(c, A=A, check=False)
        y, x, v = g._names([A, a, c], "y", "x", "v")
        term = DimAbs(y, DimAbs(x, Id(
            v, at(law_A.term, y, x), at(law_a.term, y, x), at(law_c.term, y, x),
        )))
        square = _cc(f"{law}_square", term, g._boundary_type(term, UNIV))
        return g.comp(g.inv(law_T, check=False), square, check=False)

    def _induct(self, name: str, statement, path: CheckedConstruction, seed: CheckedConstruction,
                check: bool) -> CheckedConstruction:
        """对 path 做路径归纳；statement(ext, _z, _k) 给出谓词"""
        g = self.g
        line = g.ends(path)
        A = g._degenerate(line)
        ext = self._motive_context(A, line.left)
        body = statement(ext, ext.point(MOTIVE_POINT), ext.point(MOTIVE_PATH))
        inst = JInstance(A, line.left, motive(body), line.right, path, seed.term, name)
        return self.j_eliminate(inst, check)

    def id_inv_distrib(self, p: CheckedConstruction, q: CheckedConstruction, check: bool = True) -> CheckedConstruction:
        """恒等类型与逆的分配：先对 q 再对 p 归纳"""
        g = self.g
        first, second = g.ends(p), g.ends(q)
        A = g._degenerate(first)
        a, c = first.left, second.left
        refl_a = g.refl(a, A=A, check=False)

        base = self._unit_square("iu", a, c, A)
        base = replace(base, name="id_inv_distrib.refl")
        base_claimed = self.inv_statement(refl_a, g.refl(c, A=A, check=False))
        stages = [g._finish(base.name, base.term, base_claimed, check)]

        def over_q(ext, z, k):
            return self._with(ext).inv_statement(ext.refl(a, A=A, check=False), k)

        stages.append(self._induct("id_inv_distrib.q", over_q, q, stages[-1], check))

        def over_p(ext, z, k):
            return self._with(ext).inv_statement(k, q)

        stages.append(self._induct("id_inv_distrib.p", over_p, p, stages[-1], check))
        final = stages[-1]
        claimed = self.inv_statement(p, q)
        row = g._finish("id_inv_distrib", final.term, claimed, check)
        return group("id_inv_distrib", [row] + stages)

    def id_comp_distrib(self, p, q, r, s, check: bool = True) -> CheckedConstruction:
        """恒等类型与复合的分配：依次对 q、p、r、s 归纳"""
        g = self.g
        A = g._degenerate(g.ends(p))
        a, c, d = g.ends(p).left, g.ends(q).left, g.ends(q).right

        def refl(builder, point):
            return builder.refl(point, A=A, check=False)

        base = self._unit_square("cu", a, c, A)
        base_claimed = self.comp_statement(refl(g, a), refl(g, c), refl(g, a), refl(g, c))
        stages = [g._finish("id_comp_distrib.refl", base.term, base_claimed, check)]

        def over_q(ext, z, k):
            return self._with(ext).comp_statement(refl(ext, a), k, refl(ext, a), refl(ext, z.term))

        def over_p(ext, z, k):
            return self._with(ext).comp_statement(k, q, refl(ext, z.term), refl(ext, d))

        def over_r(ext, z, k):
            return self._with(ext).comp_statement(p, q, k, refl(ext, d))

        def over_s(ext, z, k):
            return self._with(ext).comp_statement(p, q, r, k)

        for label, statement, path in (("q", over_q, q), ("p", over_p, p), ("r", over_r, r), ("s", over_s, s)):
            stages.append(self._induct(f"id_comp_distrib.{label}", statement, path, stages[-1], check))
        row = g._finish("id_comp_distrib", stages[-1].term, self.comp_statement(p, q, r, s), check)
        return group("id_comp_distrib", [row] + stages)

    def _square_line(self, name: str, proof: CheckedConstruction, left: Term, right: Term,
                     check: bool) -> CheckedConstruction:
        """<x> Id (y. proof @ x @ y) left right"""
        g = self.g
        statement = g.nf(proof.claimed_type)
        x, y = g._names([proof.term, left, right], "x", "y")
        term = DimAbs(x, Id(y, at(proof.term, x, y), left, right))
        claimed = Id(
            x, UNIV,
            Id(y, at(statement.left, y), left, right),
            Id(y, at(statement.right, y), left, right),
        )
        return g._finish(name, term, claimed, check)

    def het_square_swap(self, m, k, p, q, check: bool = True) -> CheckedConstruction:
        """q 与 p 之间、沿 id_{m,k} 的类型线"""
        proof = self.id_inv_distrib(m, k, check=False)
        return self._square_line("het_square_swap", proof, q.term, p.term, check)

    def het_square_glue(self, sigma1: CheckedConstruction, sigma2: CheckedConstruction,
                        check: bool = True) -> CheckedConstruction:
        """两方块的类型线与它们诱导的粘合"""
        g = self.g
        paths = []
        for sigma in (sigma1, sigma2):
            outer = g.ends(sigma)
            inner = g.nf(outer.family)
            A = g._degenerate(inner)
            paths.append(g._line(outer.binder, inner.left, A, "left"))
            paths.append(g._line(outer.binder, inner.right, A, "right"))
        p, q, r, s = paths
        first, second = g.ends(sigma1), g.ends(sigma2)
        proof = self.id_comp_distrib(p, q, r, s, check=False)
        line = self._square_line("het_square_glue", proof, first.left, second.right, check)

        composite = g.het_comp(sigma1, sigma2, check=False)
        glue = g._finish(
            "het_square_glue.glue",
            Coe(line.term.binder, line.term.body, ZERO, ONE, composite.term),
            line.claimed_type.right,
            check,
        )
        return group("het_square_glue", [line, glue])

    def id_groupoid_laws(self, p, q, r, s, t, u, check: bool = True) -> CheckedConstruction:
        """恒等类型线满足群胚律 (i)-(vi)"""
        g = self.g
        T = self.type_line(p, q)
        T2 = self.type_line(r, s)
        T3 = self.type_line(t, u)
        proof = self.id_inv_distrib(p, q, check=False)
        flipped = g.inv(_cc("id", proof.term, proof.claimed_type), check=False)

        def finish(label: str, result: CheckedConstruction) -> CheckedConstruction:
            name = f"id_groupoid_laws.{label}"
            return g._finish(name, result.term, result.claimed_type, check)

        parts = [
            finish("i", g.comp(self.ap_inv(flipped, check=False),
                               g.inv(g.inversability(T, check=False), check=False), check=False)),
            finish("ii", g.comp(self.whisker_left(T, flipped, check=False),
                                g.inv(g.rc(T, check=False), check=False), check=False)),
            finish("iii", g.comp(self.whisker_right(flipped, T, check=False),
                                 g.inv(g.lc(T, check=False), check=False), check=False)),
            finish("iv", g.inv(g.ru(T, check=False), check=False)),
            finish("v", g.inv(g.lu(T, check=False), check=False)),
            finish("vi", g.assoc(T, T2, T3, check=False)),
        ]
        return group("id_groupoid_laws", parts)

    # 目录

    def catalog(self) -> List[CheckedConstruction]:
        """定理部分的九行"""
        v = self.g.point
        p, q, r, s, t, u = (v(name) for name in "pqrstu")
        rows = [
            ("path_induction", lambda: self.path_induction(p)),
            ("is_refl", lambda: self.is_refl(p)),
            ("whiskering", lambda: group("whiskering", [
                self.whisker_right(v("gamma"), r),
                self.whisker_left(self.g.inv(v("m"), check=False), v("gamma")),
            ])),
            ("eckmann_hilton", lambda: self.eckmann_hilton(v("alpha"), v("beta"))),
            ("id_inv_distrib", lambda: self.id_inv_distrib(p, q)),
            ("het_square_swap", lambda: self.het_square_swap(v("m"), v("k"), p, q)),
            ("id_comp_distrib", lambda: self.id_comp_distrib(p, q, r, s)),
            ("het_square_glue", lambda: self.het_square_glue(v("sigma1"), v("sigma2"))),
            ("id_groupoid_laws", lambda: self.id_groupoid_laws(p, q, r, s, t, u)),
        ]
        return [_guarded(name, build) for name, build in rows]


def _guarded(name: str, build) -> CheckedConstruction:
    try:
        result = build()
    except KernelError as exc:
        logger.warning("构造 %s 失败: %s", name, exc)
        return CheckedConstruction(name, Var(name), UNIV, Verdict(name, False, [], exc))
    logger.info("%s: %s", name, "PASS" if result.passed else "FAIL")
    return result


@lru_cache(maxsize=None)
def _theorem_context() -> Context:
    return context_from_source(THEOREM_SOURCE)


def theorem_context() -> Context:
    """定理的上下文副本"""
    return _theorem_context().copy()


def theorem_catalog(ctx: Optional[Context] = None) -> List[CheckedConstruction]:
    """在定理上下文中构造并检查九行"""
    return TheoremBuilder(Groupoid.from_context(ctx or theorem_context())).catalog()
