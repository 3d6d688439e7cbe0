# -*- coding: utf-8 -*-
"""
命令行：check / stdlib / faces / list / export
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO

import config
from catalog_manager import CatalogManager
from errors import CatalogError, CubelineSyntaxError
from evaluator import normalize
from kernel import boundary_report
from models import CheckedConstruction, Context, DimAbs, OutputMode, RunConfig, Term
from trace_exporter import TraceExporter, face_lines, find_entry

logger = logging.getLogger(__name__)


def configure_logging(verbosity: int = 0):
    """日志写到 stderr，stdout 只留报告"""
    level = config.LOG_LEVELS[max(0, min(verbosity, max(config.LOG_LEVELS)))]
    logging.basicConfig(level=level, format=config.LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def _report(results: List[CheckedConstruction], cfg: RunConfig, out: TextIO) -> int:
    exporter = TraceExporter(results, verbose=cfg.verbose)
    out.write(exporter.render(cfg.mode))
    return config.EXIT_FAILURE if exporter.failures else config.EXIT_OK


def run_check(cfg: RunConfig, out: TextIO) -> int:
    _, results = CatalogManager().check_files(cfg.inputs)
    return _report(results, cfg, out)


def run_stdlib(cfg: RunConfig, out: TextIO) -> int:
    if cfg.source_dir:
        manager = CatalogManager(cfg.source_dir)
        results: List[CheckedConstruction] = []
        for filename in (config.STDLIB_FILE, config.THEOREMS_FILE):
            # 两个文件各自声明环境，分别在新上下文中检查
            _, checked = manager.check_files([str(Path(cfg.source_dir) / filename)])
            results.extend(checked)
        return _report(results, cfg, out)

    from groupoid import stdlib_catalog
    from theorems import theorem_catalog

    return _report(stdlib_catalog() + theorem_catalog(), cfg, out)


def _open_lines(term: Term, ctx: Context) -> Term:
    """去掉外层维度抽象，使其约束子成为自由维度；写成应用的定义先化简"""
    if not isinstance(term, DimAbs):
        term = normalize(term, ctx)
    while isinstance(term, DimAbs):
        term = term.body
    return term


def run_faces(cfg: RunConfig, out: TextIO) -> int:
    ctx, results = CatalogManager().check_files(cfg.inputs)
    entry = find_entry(results, cfg.term_name)
    definition = ctx.definition(cfg.term_name)
    if entry is None and definition is None:
        logger.error("找不到项: %s", cfg.term_name)
        return config.EXIT_USAGE
    term = entry.term if entry is not None else definition.term

    report = boundary_report(ctx, _open_lines(term, ctx))
    lines = face_lines(report)
    if cfg.mode is OutputMode.HUMAN:
        lines.insert(0, f"{cfg.term_name}:")
    out.write("".join(line + "\n" for line in lines))
    if entry is not None and not entry.passed:
        return config.EXIT_FAILURE
    return config.EXIT_OK


def run_list(cfg: RunConfig, out: TextIO) -> int:
    manager = CatalogManager(cfg.source_dir)
    files = manager.list_catalog_files()
    if not files:
        out.write(f"{manager.data_dir} 中没有目录文件\n")
        return config.EXIT_OK
    for file_path in files:
        info = manager.get_catalog_info(file_path)
        if info is None:
            out.write(f"{Path(file_path).name}: 无法解析\n")
            continue
        out.write(
            f"{info['filename']}: {info['declarations']} 条声明 "
            f"(point {info['point']}, dim {info['dim']}, def {info['def']}, check {info['check']}) "
            f"{info['timestamp']}\n"
        )
    return config.EXIT_OK


def run_export(cfg: RunConfig, out: TextIO) -> int:
    for path in CatalogManager(cfg.export_dir).export_embedded():
        out.write(f"{path}\n")
    return config.EXIT_OK


HANDLERS: Dict[str, Callable[[RunConfig, TextIO], int]] = {
    "check": run_check,
    "stdlib": run_stdlib,
    "faces": run_faces,
    "list": run_list,
    "export": run_export,
}


def run(cfg: RunConfig, out: Optional[TextIO] = None) -> int:
    """执行一条命令，返回退出码"""
    out = out or sys.stdout
    try:
        return HANDLERS[cfg.command](cfg, out)
    except (CubelineSyntaxError, CatalogError, OSError) as e:
        logger.error("%s", e)
        return config.EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="只输出稳定的轨迹行")
    common.add_argument("-v", dest="verbosity", action="count", default=0, help="日志详细程度，可重复")

    ap = argparse.ArgumentParser(prog="cubeline", description="立方类型论的群胚结构检查器")
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", parents=[common], help="按顺序检查 .cube 文件")
    c.add_argument("files", nargs="+")
    c.add_argument("--verbose", action="store_true", help="输出 FACE/ADJ 轨迹")

    s = sub.add_parser("stdlib", parents=[common], help="检查内置目录")
    s.add_argument("--verbose", action="store_true", help="输出子条目与 FACE/ADJ 轨迹")
    s.add_argument("--source", default=None, help="改为检查该目录下的 stdlib.cube 与 theorems.cube")

    f = sub.add_parser("faces", parents=[common], help="打印某个定义的边界")
    f.add_argument("file")
    f.add_argument("--term", required=True)

    ls = sub.add_parser("list", parents=[common], help="列出目录文件")
    ls.add_argument("dir", nargs="?", default=config.DATA_DIR)

    e = sub.add_parser("export", parents=[common], help="导出内置目录为 .cube 文本")
    e.add_argument("dir")
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=args.cmd,
        verbosity=args.verbosity,
        mode=OutputMode.MACHINE if args.machine else OutputMode.HUMAN,
        verbose=getattr(args, "verbose", False),
    )
    if args.cmd == "check":
        cfg.inputs = list(args.files)
    elif args.cmd == "stdlib":
        cfg.source_dir = args.source
    elif args.cmd == "faces":
        cfg.inputs = [args.file]
        cfg.term_name = args.term
    elif args.cmd == "list":
        cfg.source_dir = args.dir
    elif args.cmd == "export":
        cfg.export_dir = args.dir
    return cfg


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    configure_logging(cfg.verbosity)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), config.RECURSION_LIMIT))
    return run(cfg)
