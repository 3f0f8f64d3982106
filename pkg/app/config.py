"""
Cấu hình tập trung cho toàn bộ thư viện và CLI.

Đọc từ biến môi trường (và file .env ở gốc repo), có giá trị mặc định cho dev.
Cờ dòng lệnh ghi đè từng lần chạy; module này không đọc argv.
"""

import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field

_env_path = Path(__file__).resolve().parent.parent / ".env"
if _env_path.exists():
    load_dotenv(_env_path, override=False)


def _env_int(name: str, default: str) -> int:
    return int(os.environ.get(name, default))


def _env_float(name: str, default: str) -> float:
    return float(os.environ.get(name, default))


class GaussConfig(BaseModel):
    """Giới hạn cho phép nhân số cấu trúc (bùng nổ tổ hợp)."""
    transversal_budget: int = Field(default_factory=lambda: _env_int("PLANAR_TRANSVERSAL_BUDGET", "1000000"))


class PlanarizeConfig(BaseModel):
    restarts: int = Field(default_factory=lambda: _env_int("PLANAR_RESTARTS", "100"))
    seed: int = Field(default_factory=lambda: _env_int("PLANAR_SEED", "1"))
    population: int = Field(default_factory=lambda: _env_int("PLANAR_POPULATION", "8"))
    generations: int = Field(default_factory=lambda: _env_int("PLANAR_GENERATIONS", "20"))
    mutation_rate: float = Field(default_factory=lambda: _env_float("PLANAR_MUTATION_RATE", "0.2"))


class ReinsertConfig(BaseModel):
    """Chèn lại cạnh đã xoá: số tuyến tối đa, ngân sách hoán vị, số lần thử độ dày."""
    route_cap: int = Field(default_factory=lambda: _env_int("PLANAR_ROUTE_CAP", "64"))
    order_budget: int = Field(default_factory=lambda: _env_int("PLANAR_ORDER_BUDGET", "200"))
    thickness_attempts: int = Field(default_factory=lambda: _env_int("PLANAR_THICKNESS_ATTEMPTS", "50"))


class LayoutConfig(BaseModel):
    contour: str = Field(default_factory=lambda: os.environ.get("PLANAR_CONTOUR", "circle"))
    radius: float = Field(default_factory=lambda: _env_float("PLANAR_RADIUS", "50.0"))
    shrink_factor: float = Field(default_factory=lambda: _env_float("PLANAR_SHRINK_FACTOR", "2.0"))
    residual_tol: float = Field(default_factory=lambda: _env_float("PLANAR_RESIDUAL_TOL", "1e-9"))


class OutputConfig(BaseModel):
    float_digits: int = Field(default_factory=lambda: _env_int("PLANAR_FLOAT_DIGITS", "6"))
    svg_scale: float = Field(default_factory=lambda: _env_float("PLANAR_SVG_SCALE", "4.0"))


class LoggingConfig(BaseModel):
    level: str = Field(default_factory=lambda: os.environ.get("PLANAR_LOG_LEVEL", "INFO"))
    log_dir: str = Field(default_factory=lambda: os.environ.get("PLANAR_LOG_DIR", "logs"))


class AppConfig(BaseModel):
    gauss: GaussConfig = Field(default_factory=GaussConfig)
    planarize: PlanarizeConfig = Field(default_factory=PlanarizeConfig)
    reinsert: ReinsertConfig = Field(default_factory=ReinsertConfig)
    layout: LayoutConfig = Field(default_factory=LayoutConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    @classmethod
    def from_env(cls) -> "AppConfig":
        """Đọc lại toàn bộ biến môi trường (tests dùng cùng monkeypatch)."""
        return cls()


config = AppConfig.from_env()
