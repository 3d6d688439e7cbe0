# -*- coding: utf-8 -*-
"""
判定轨迹导出器
"""
import logging
from pathlib import Path
from typing import Iterable, List, Optional

from models import (
    AdjRecord,
    BoundaryReport,
    CheckedConstruction,
    FaceRecord,
    OutputMode,
)
from syntax import print_term

logger = logging.getLogger(__name__)


def record_line(record) -> str:
    """FACE / ADJ 轨迹行"""
    if isinstance(record, FaceRecord):
        return f"FACE {record.dim}={record.side}: {print_term(record.term)}"
    if isinstance(record, AdjRecord):
        if record.ok:
            return f"ADJ {record.kind} {record.loc}: OK"
        return (
            f"ADJ {record.kind} {record.loc}: FAIL "
            f"expected={print_term(record.expected)} actual={print_term(record.actual)}"
        )
    raise TypeError(f"not a trace record: {record!r}")


def check_line(entry: CheckedConstruction) -> str:
    return f"CHECK {entry.name}: {'PASS' if entry.passed else 'FAIL'}"


def face_lines(report: BoundaryReport) -> List[str]:
    """边界报告的 FACE 行，按 (维度, 端点) 排序"""
    return [
        f"FACE {name}={side}: {print_term(term)}"
        for (name, side), term in sorted(report.faces.items())
    ]


class TraceExporter:
    """把检查结果排版为人读表格或稳定的机器行"""

    def __init__(self, results: Iterable[CheckedConstruction], verbose: bool = False):
        self.results = list(results)
        self.verbose = verbose

    @property
    def failures(self) -> List[CheckedConstruction]:
        return [entry for entry in self.results if not entry.passed]

    def machine_lines(self) -> List[str]:
        lines: List[str] = []
        for entry in self.results:
            lines.extend(self._entry_lines(entry))
        return lines

    def _entry_lines(self, entry: CheckedConstruction) -> List[str]:
        if not self.verbose:
            return [check_line(entry)]
        lines: List[str] = []
        if entry.parts:
            for part in entry.parts:
                lines.extend(self._entry_lines(part))
        elif entry.verdict is not None:
            lines.extend(record_line(record) for record in entry.verdict.records)
        lines.append(check_line(entry))
        return lines

    def human_lines(self) -> List[str]:
        rows = [("构造", "引理", "结果")]
        for entry in self.results:
            rows.append((entry.name, entry.lemma, "PASS" if entry.passed else "FAIL"))
            if self.verbose:
                for part in entry.parts:
                    rows.append(("  " + part.name, part.lemma, "PASS" if part.passed else "FAIL"))
        widths = [max(len(row[i]) for row in rows) for i in range(2)]
        lines = [f"{name:<{widths[0]}}  {lemma:<{widths[1]}}  {result}" for name, lemma, result in rows]

        for entry in self.failures:
            error = entry.verdict.error if entry.verdict else None
            if error is not None:
                lines.append(f"{entry.name}: {type(error).__name__}: {error}")
        if self.verbose:
            lines.append("")
            lines.extend(self.machine_lines())
        passed = len(self.results) - len(self.failures)
        lines.append(f"共 {len(self.results)} 项，通过 {passed} 项")
        return lines

    def render(self, mode: OutputMode = OutputMode.HUMAN) -> str:
        lines = self.machine_lines() if mode is OutputMode.MACHINE else self.human_lines()
        return "\n".join(lines) + "\n" if lines else ""

    def export_to_file(self, save_path: str, mode: OutputMode = OutputMode.MACHINE) -> str:
        """导出轨迹到文件"""
        path = Path(save_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.render(mode))
        logger.info("轨迹写入 %s", path)
        return str(path)


def find_entry(results: Iterable[CheckedConstruction], name: str) -> Optional[CheckedConstruction]:
    """按名字查找条目，包括分组的子条目"""
    for entry in results:
        if entry.name == name:
            return entry
        found = find_entry(entry.parts, name)
        if found is not None:
            return found
    return None
