import os
from typing import Any, Dict

from pydantic.v1 import BaseSettings, validator

_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


class Settings(BaseSettings):
    # Root dir
    ROOT_DIR: str = _ROOT
    # Default datadir
    DATA_DIR: str = os.path.join(_ROOT, "src", "data")
    # Input datadir
    INPUT_DATA_DIR: str = os.path.join(_ROOT, "src", "data", "input")
    # Output datadir
    OUTPUT_DATA_DIR: str = os.path.join(_ROOT, "src", "data", "output")
    # Analysis config dir
    CONFIG_DIR: str = os.path.join(_ROOT, "src", "config")

    # Largest vertex set an exhaustive operation may enumerate
    ENUMERATION_BUDGET: int = 2**24
    # Largest graph the Fourier oracle accepts
    ORACLE_VERTEX_LIMIT: int = 4096
    # Rows per vectorised block
    CHUNK_SIZE: int = 65536
    # Threads used for chunked scans
    WORKERS: int = 4
    SHOW_PROGRESS: bool = True

    @validator("ENUMERATION_BUDGET", "ORACLE_VERTEX_LIMIT", "CHUNK_SIZE", "WORKERS")
    def check_positive(cls, v: int, values: Dict[str, Any]) -> int:
        if v <= 0:
            raise ValueError(f"Setting must be positive, got {v}")
        return v


settings = Settings()
