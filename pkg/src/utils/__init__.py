"""
유틸리티 모듈
"""
from src.utils.logger import logger, log_execution_time
from src.utils.constants import Tolerances, Limits
from src.utils.errors import GelfandError, ParseError

__all__ = [
    "logger",
    "log_execution_time",
    "Tolerances",
    "Limits",
    "GelfandError",
    "ParseError",
]
