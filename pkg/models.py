# -*- coding: utf-8 -*-
"""
数据模型
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union


class _Node:
    """不可变语法节点：按字段比较，哈希值缓存"""

    def _key(self) -> tuple:
        return tuple(getattr(self, name) for name in self.__match_args__)

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((type(self).__name__,) + self._key())
            object.__setattr__(self, "_hash", cached)
        return cached

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if type(self) is not type(other) or hash(self) != hash(other):
            return False
        return self._key() == other._key()


@dataclass(frozen=True, eq=False)
class Dim(_Node):
    """维度项：常量 0、1 或维度名"""

    value: str

    @property
    def is_constant(self) -> bool:
        return self.value in ("0", "1")

    @property
    def is_name(self) -> bool:
        return not self.is_constant

    def __str__(self):
        return self.value


ZERO = Dim("0")
ONE = Dim("1")
SIDES = (ZERO, ONE)


def as_dim(value: Union[Dim, str, int]) -> Dim:
    """把 0/1/名字 转成 Dim"""
    if isinstance(value, Dim):
        return value
    return Dim(str(value))


class Term(_Node):
    """项的基类"""


@dataclass(frozen=True, eq=False)
class Var(Term):
    name: str


@dataclass(frozen=True, eq=False)
class DimAbs(Term):
    """维度抽象 <x> M"""

    binder: str
    body: Term


@dataclass(frozen=True, eq=False)
class DimApp(Term):
    """维度应用 M @ r"""

    fun: Term
    arg: Dim


@dataclass(frozen=True, eq=False)
class Id(Term):
    """恒等类型 Id (x. A) M N，x 只约束 family"""

    binder: str
    family: Term
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class Tube(_Node):
    """管壁 extent=side binder. wall"""

    extent: Dim
    side: Dim
    binder: str
    wall: Term

    def sort_key(self) -> Tuple[str, str]:
        return (self.extent.value, self.side.value)


@dataclass(frozen=True, eq=False)
class HCom(Term):
    """齐次 Kan 合成"""

    ty: Term
    src: Dim
    dst: Dim
    cap: Term
    tubes: Tuple[Tube, ...] = ()


@dataclass(frozen=True, eq=False)
class Coe(Term):
    """沿类型线的强制转换"""

    binder: str
    family: Term
    src: Dim
    dst: Dim
    arg: Term


@dataclass(frozen=True, eq=False)
class Com(Term):
    """异质 Kan 合成（展开为 hcom 与 coe）"""

    binder: str
    family: Term
    src: Dim
    dst: Dim
    cap: Term
    tubes: Tuple[Tube, ...] = ()


@dataclass(frozen=True, eq=False)
class Univ(Term):
    """宇宙常量 U"""


@dataclass(frozen=True, eq=False)
class Pi(Term):
    var: str
    dom: Term
    cod: Term


@dataclass(frozen=True, eq=False)
class Lam(Term):
    var: str
    body: Term


@dataclass(frozen=True, eq=False)
class App(Term):
    fun: Term
    arg: Term


UNIV = Univ()


def refl_term(point: Term, binder: str = "x") -> Term:
    """<x> a"""
    return DimAbs(binder, point)


@dataclass
class Definition:
    """具名构造及其声明类型"""

    name: str
    term: Term
    type: Term


@dataclass
class Context:
    """上下文：点变量、维度名、定义"""

    points: Dict[str, Term] = field(default_factory=dict)
    dims: frozenset = frozenset()
    defs: Dict[str, Definition] = field(default_factory=dict)

    def type_of(self, name: str) -> Optional[Term]:
        if name in self.points:
            return self.points[name]
        definition = self.defs.get(name)
        return definition.type if definition else None

    def definition(self, name: str) -> Optional[Definition]:
        return self.defs.get(name)

    def knows(self, name: str) -> bool:
        return name in self.points or name in self.defs

    def with_point(self, name: str, ty: Term) -> "Context":
        points = dict(self.points)
        points[name] = ty
        return Context(points, self.dims, self.defs)

    def with_dims(self, *names: str) -> "Context":
        return Context(self.points, self.dims | frozenset(names), self.defs)

    def copy(self) -> "Context":
        """字典各自复制的上下文，改动不影响原上下文"""
        return Context(dict(self.points), self.dims, dict(self.defs))

    def declare_point(self, name: str, ty: Term):
        self.points[name] = ty

    def declare_dim(self, name: str):
        self.dims = self.dims | {name}

    def define(self, name: str, term: Term, ty: Term):
        self.defs[name] = Definition(name, term, ty)


class DeclKind(Enum):
    """文件声明种类"""

    POINT = "point"
    DIM = "dim"
    DEF = "def"
    CHECK = "check"


@dataclass
class Declaration:
    """.cube 文件中的一条声明"""

    kind: DeclKind
    name: Optional[str] = None
    term: Optional[Term] = None
    type: Optional[Term] = None
    line: int = 0


@dataclass
class FaceRecord:
    """一条面记录 FACE x=0: t"""

    dim: str
    side: Dim
    term: Term


@dataclass
class AdjRecord:
    """一条相邻性记录 ADJ kind loc"""

    kind: str
    loc: str
    ok: bool
    expected: Term
    actual: Term


@dataclass
class Verdict:
    """内核判定结果与轨迹"""

    name: str
    passed: bool
    records: List[Union[FaceRecord, AdjRecord]] = field(default_factory=list)
    error: Optional[Exception] = None


@dataclass
class BoundaryReport:
    """项沿各自由维度的面"""

    subject: Term
    faces: Dict[Tuple[str, str], Term] = field(default_factory=dict)
    verdicts: List[Tuple[Term, Term, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.verdicts)


@dataclass
class CheckedConstruction:
    """构造项、声明类型与内核判定"""

    name: str
    term: Term
    claimed_type: Term
    verdict: Optional[Verdict] = None
    parts: Tuple["CheckedConstruction", ...] = ()

    @property
    def passed(self) -> bool:
        if self.verdict is None or not self.verdict.passed:
            return False
        return all(part.passed for part in self.parts)

    @property
    def lemma(self) -> str:
        import config

        return config.lemma_title(self.name.split(".")[0])


@dataclass
class JInstance:
    """路径归纳实例"""

    family: Term
    base: Term
    motive: Term
    target: Term
    path: "CheckedConstruction"
    seed: Term
    name: str = "j"


class OutputMode(Enum):
    """输出模式"""

    HUMAN = "human"
    MACHINE = "machine"


@dataclass
class RunConfig:
    """命令行运行配置"""

    command: str
    inputs: List[str] = field(default_factory=list)
    term_name: Optional[str] = None
    verbosity: int = 0
    mode: OutputMode = OutputMode.HUMAN
    source_dir: Optional[str] = None
    export_dir: Optional[str] = None
    verbose: bool = False
