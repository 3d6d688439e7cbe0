# -*- coding: utf-8 -*-
"""
错误类型
"""
from typing import Optional


class CubelineError(Exception):
    """所有错误的基类"""


class CatalogError(CubelineError):
    """目录文件读写错误"""


class CubelineSyntaxError(CubelineError):
    """语法错误，带行列号"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class DuplicateTubeError(CubelineSyntaxError):
    """同一 (维度, 端点) 出现两个管壁"""

    def __init__(self, extent: str, side: str, line: Optional[int] = None, column: Optional[int] = None):
        self.extent = extent
        self.side = side
        super().__init__(f"重复的管壁 {extent}={side}", line, column)


class KernelError(CubelineError):
    """内核判断失败"""


class UnboundVariable(KernelError):
    """未声明的变量或维度名"""

    def __init__(self, name: str, kind: str = "point"):
        self.name = name
        self.kind = kind
        super().__init__(f"未绑定的{'维度' if kind == 'dim' else '变量'}: {name}")


class TypeMismatch(KernelError):
    """类型不一致"""

    def __init__(self, expected, actual, path: str = ""):
        self.expected = expected
        self.actual = actual
        self.path = path
        super().__init__(f"类型不一致 {path}".rstrip())


class EndpointMismatch(KernelError):
    """端点不一致"""

    def __init__(self, side: str, expected, actual, dim: str = ""):
        self.side = side
        self.expected = expected
        self.actual = actual
        self.dim = dim
        super().__init__(f"端点不一致 {dim}={side}")


class NonDegenerateCompositionType(KernelError):
    """齐次合成的类型沿填充方向变化"""

    def __init__(self, binder: str):
        self.binder = binder
        super().__init__(f"合成类型依赖填充维度 {binder}")


class CapTubeMismatch(KernelError):
    """盖与管壁不相邻"""

    def __init__(self, extent: str, side: str):
        self.extent = extent
        self.side = side
        super().__init__(f"盖与管壁 {extent}={side} 不吻合")


class TubeTubeMismatch(KernelError):
    """两个管壁在公共棱上不一致"""

    def __init__(self, first: str, second: str):
        self.pair = (first, second)
        super().__init__(f"管壁 {first} 与 {second} 不吻合")


class WallIllTyped(KernelError):
    """管壁类型错误"""

    def __init__(self, extent: str, side: str, cause: KernelError):
        self.extent = extent
        self.side = side
        self.cause = cause
        super().__init__(f"管壁 {extent}={side} 类型错误: {cause}")


class MissingAdjacency(KernelError):
    """角点无法化到可比较的形式"""

    def __init__(self, location: str):
        self.location = location
        super().__init__(f"无法比较角点 {location}")


class MiddleEndpointMismatch(KernelError):
    """复合的中间端点不一致"""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__("复合的中间端点不一致")


class NonDegenerate(KernelError):
    """类型族依赖了要求退化的维度"""

    def __init__(self, family, binder: str):
        self.family = family
        self.binder = binder
        super().__init__(f"类型族不退化于 {binder}")


class EndpointCollapseError(KernelError):
    """路径归纳的类型线在端点处不塌缩"""

    def __init__(self, side: str, expected, actual):
        self.side = side
        self.expected = expected
        self.actual = actual
        super().__init__(f"类型线在 {side} 端不塌缩")
