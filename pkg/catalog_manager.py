# -*- coding: utf-8 -*-
"""
目录文件管理模块
"""
import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

import config
from errors import CatalogError, CubelineError
from kernel import elaborate
from models import CheckedConstruction, Context, DeclKind, Declaration
from syntax import parse, print_declaration

logger = logging.getLogger(__name__)


class CatalogManager:
    """目录管理器：读写 data/ 下的 .cube 文件"""

    def __init__(self, data_dir: Optional[str] = None):
        self.data_dir = Path(data_dir or config.DATA_DIR)

    def _with_extension(self, filename: str) -> str:
        if not filename.endswith(config.CATALOG_FILE_EXTENSION):
            filename += config.CATALOG_FILE_EXTENSION
        return filename

    def load(self, file_path: str) -> List[Declaration]:
        """读取并解析一个目录文件"""
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                source = f.read()
        except OSError as e:
            raise CatalogError(f"读取目录文件失败: {file_path}: {e}") from e
        decls = parse(source)
        logger.debug("%s: %d 条声明", file_path, len(decls))
        return decls

    def check_files(
        self, paths: Iterable[str], ctx: Optional[Context] = None
    ) -> Tuple[Context, List[CheckedConstruction]]:
        """按顺序在同一上下文中检查多个文件"""
        ctx = ctx if ctx is not None else Context()
        results: List[CheckedConstruction] = []
        for path in paths:
            ctx, checked = elaborate(self.load(path), ctx)
            results.extend(checked)
        return ctx, results

    def save(
        self,
        decls: List[Declaration],
        custom_filename: Optional[str] = None,
        header: Optional[str] = None,
    ) -> str:
        """将声明写成 .cube 文本"""
        if custom_filename:
            filename = self._with_extension(custom_filename)
        else:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filename = f"{timestamp}{config.CATALOG_FILE_EXTENSION}"

        self.data_dir.mkdir(parents=True, exist_ok=True)
        file_path = self.data_dir / filename

        lines = []
        if header:
            lines.extend(f"-- {line}".rstrip() for line in header.splitlines())
            lines.append("")
        lines.extend(print_declaration(decl) for decl in decls)
        try:
            with open(file_path, "w", encoding="utf-8") as f:
                f.write("\n".join(lines) + "\n")
        except OSError as e:
            raise CatalogError(f"写入目录文件失败: {file_path}: {e}") from e

        logger.info("写入 %s (%d 条声明)", file_path, len(decls))
        return str(file_path)

    def export_catalog(
        self,
        prelude: str,
        entries: List[CheckedConstruction],
        filename: str,
    ) -> str:
        """把一组构造连同其环境声明导出为可重新检查的文件"""
        decls = list(parse(prelude))
        skipped = []
        for entry in _flatten(entries):
            if entry.verdict is None or not entry.verdict.passed:
                skipped.append(entry.name)
                continue
            decls.append(
                Declaration(
                    DeclKind.DEF,
                    _ident(entry.name),
                    entry.term,
                    entry.claimed_type,
                )
            )
        header = f"{filename} 由 cubeline export 生成于 {datetime.now().date().isoformat()}"
        if skipped:
            header += "\n未导出(检查失败): " + ", ".join(skipped)
            logger.warning("未导出 %d 条失败的构造", len(skipped))
        return self.save(decls, filename, header)

    def export_embedded(self) -> List[str]:
        """导出内置的群胚目录与定理目录"""
        from groupoid import AMBIENT_SOURCE, stdlib_catalog
        from theorems import THEOREM_SOURCE, theorem_catalog

        return [
            self.export_catalog(AMBIENT_SOURCE, stdlib_catalog(), config.STDLIB_FILE),
            self.export_catalog(THEOREM_SOURCE, theorem_catalog(), config.THEOREMS_FILE),
        ]

    def list_catalog_files(self) -> List[str]:
        """列出所有目录文件"""
        if not self.data_dir.exists():
            return []
        paths = sorted(
            self.data_dir.glob(f"*{config.CATALOG_FILE_EXTENSION}"),
            key=lambda path: path.stat().st_mtime,
            reverse=True,
        )
        return [str(path) for path in paths]

    def get_catalog_info(self, file_path: str) -> Optional[Dict[str, Any]]:
        """获取目录文件基本信息"""
        try:
            decls = self.load(file_path)
        except CubelineError as e:
            logger.warning("获取目录文件信息失败: %s", e)
            return None

        counts = {kind.value: 0 for kind in DeclKind}
        for decl in decls:
            counts[decl.kind.value] += 1
        return {
            "filename": Path(file_path).name,
            "timestamp": datetime.fromtimestamp(os.path.getmtime(file_path)).isoformat(),
            "declarations": len(decls),
            **counts,
        }


def _flatten(entries: Iterable[CheckedConstruction]) -> Iterable[CheckedConstruction]:
    """分组条目展开为其子条目"""
    for entry in entries:
        if entry.parts:
            yield from _flatten(entry.parts)
        else:
            yield entry


def _ident(name: str) -> str:
    return name.replace(".", "_").replace("@", "_")
