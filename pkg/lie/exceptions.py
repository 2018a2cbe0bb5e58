"""
异常定义
所有对外抛出的错误都继承自 FastLieError，便于路由和命令行统一转换
"""


class FastLieError(Exception):
    """基础异常"""


class DomainError(FastLieError, ValueError):
    """参数超出公式定义域，例如 n = 0 或 n < 2"""


class DegreeOverflowError(FastLieError):
    """输入次数超过截断次数 D"""


class TruncationMismatchError(FastLieError):
    """两个元素的截断次数不一致"""
