"""
全局配置
从环境变量 / .env 读取，未设置时使用默认值
"""

import logging
import os

from dotenv import load_dotenv

load_dotenv()

TOOL_NAME = "fastlie"
TOOL_VERSION = "0.3.0"
SCHEMA_VERSION = 1

DEFAULT_SEED = int(os.getenv("FASTLIE_SEED", "20240601"))
LOG_LEVEL = os.getenv("FASTLIE_LOG_LEVEL", "WARNING")

# witt 子命令允许的最大次数
MAX_WITT_DEGREE = int(os.getenv("FASTLIE_MAX_WITT_DEGREE", "64"))
# 完整 Lyndon 枚举与 sigma 对角化的上限，超过后使用闭式
ENUMERATION_LIMIT = int(os.getenv("FASTLIE_ENUMERATION_LIMIT", "16"))
# W 分次维数逐项枚举的上限
W_ENUMERATION_LIMIT = int(os.getenv("FASTLIE_W_ENUMERATION_LIMIT", "32"))


def configure_logging(level: str = None) -> None:
    """日志统一输出到 stderr，保证 stdout 只包含报告"""
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
