"""
Logging dùng chung cho thư viện và CLI.

Một file xoay vòng logs/planar.log và một handler console; trên TTY chỉ tô màu
tên level để phần thông điệp (mask, trace, toạ độ) vẫn dễ đọc và dễ copy.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

from app.config import config

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
LOG_FILE_NAME = "planar.log"
LOG_MAX_BYTES = 5 * 1024 * 1024
LOG_BACKUPS = 5

_configured = False


class _LevelColorFormatter(logging.Formatter):
    """ANSI colour on the level name only."""

    _CODES = {
        logging.DEBUG: 36,
        logging.INFO: 92,
        logging.WARNING: 93,
        logging.ERROR: 91,
        logging.CRITICAL: 95,
    }

    def format(self, record: logging.LogRecord) -> str:
        code = self._CODES.get(record.levelno)
        if code is None:
            return super().format(record)
        plain = record.levelname
        record.levelname = f"\033[{code}m{plain}\033[0m"
        try:
            return super().format(record)
        finally:
            record.levelname = plain


def log_path() -> str:
    log_dir = config.logging.log_dir
    if not os.path.isabs(log_dir):
        log_dir = os.path.join(os.path.dirname(os.path.dirname(__file__)), log_dir)
    return os.path.join(log_dir, LOG_FILE_NAME)


def _level(level: int | str | None) -> int:
    if level is None:
        level = config.logging.level
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(str(level).upper())
    return resolved if isinstance(resolved, int) else logging.INFO


def _handlers() -> list[logging.Handler]:
    path = log_path()
    os.makedirs(os.path.dirname(path), exist_ok=True)
    plain = logging.Formatter(LOG_FORMAT)

    to_file = RotatingFileHandler(path, maxBytes=LOG_MAX_BYTES, backupCount=LOG_BACKUPS, encoding="utf-8")
    to_file.setFormatter(plain)

    to_console = logging.StreamHandler()
    to_console.setFormatter(_LevelColorFormatter(LOG_FORMAT) if sys.stderr.isatty() else plain)
    return [to_file, to_console]


def setup_logging(level: int | str | None = None, *, force: bool = False) -> None:
    """Install the shared handlers once; ``force=True`` re-applies them (``--log-level``).

    Chỉ gỡ các handler do module này cài, handler của pytest (caplog) giữ nguyên.
    """
    global _configured
    if _configured and not force:
        return

    resolved = _level(level)
    root = logging.getLogger()
    for handler in [h for h in root.handlers if getattr(h, "_planar", False)]:
        root.removeHandler(handler)
        handler.close()
    root.setLevel(resolved)
    for handler in _handlers():
        handler._planar = True  # type: ignore[attr-defined]
        root.addHandler(handler)

    # networkx chỉ cần cảnh báo
    logging.getLogger("networkx").setLevel(max(resolved, logging.WARNING))
    _configured = True


def get_logger(name: str) -> logging.Logger:
    setup_logging()
    return logging.getLogger(name)
