# -*- coding: utf-8 -*-
"""
测试时把项目根目录加入路径
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
