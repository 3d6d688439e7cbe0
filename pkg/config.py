# -*- coding: utf-8 -*-
"""
配置文件
"""
import logging
import os

logger = logging.getLogger(__name__)

# 目录配置
DATA_DIR = "data"
CATALOG_FILE_EXTENSION = ".cube"
STDLIB_FILE = "stdlib.cube"
THEOREMS_FILE = "theorems.cube"

# 新维度名生成（固定计数器起点，保证输出可复现）
FRESH_SEED_ENV = "CUBELINE_SEED"
DEFAULT_FRESH_SEED = 1
FRESH_BASE = "d"

# 深层项的递归上限
RECURSION_LIMIT = 20000

# 日志配置
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}

# 退出码
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# 目录显示名：构造名 -> 引理名
LEMMA_TITLES = {
    "refl": "Reflexivity",
    "inv": "Inversion",
    "comp": "Composition",
    "iu": "Inversion unit",
    "cu": "Composition unit",
    "ru": "Right unit",
    "rc": "Right cancellation",
    "swap": "Square swap",
    "inversability": "Inversability",
    "op1": "Opposite identification (i)",
    "op2": "Opposite identification (ii)",
    "lc": "Left cancellation",
    "lu": "Left unit",
    "bi": "Three-out-of-four",
    "assoc": "Associativity",
    "type_inv": "Type inversion",
    "het_inv": "Heterogeneous inversion",
    "type_comp": "Type composition",
    "het_comp": "Heterogeneous composition",
    "het_inversability": "Heterogeneous inversability",
    "path_induction": "Path induction",
    "is_refl": "Contraction square",
    "whiskering": "Whiskering",
    "eckmann_hilton": "Eckmann-Hilton",
    "id_inv_distrib": "Inversion distribution",
    "het_square_swap": "Heterogeneous square swap",
    "id_comp_distrib": "Composition distribution",
    "het_square_glue": "Heterogeneous square gluing",
    "id_groupoid_laws": "Identification type groupoid laws",
}


def fresh_seed() -> int:
    """读取新名计数器起点"""
    raw = os.environ.get(FRESH_SEED_ENV)
    if raw is None:
        return DEFAULT_FRESH_SEED
    try:
        return max(0, int(raw))
    except ValueError:
        logger.warning("忽略无效的 %s=%r", FRESH_SEED_ENV, raw)
        return DEFAULT_FRESH_SEED


def lemma_title(name: str) -> str:
    """构造名对应的引理名"""
    return LEMMA_TITLES.get(name, name)
