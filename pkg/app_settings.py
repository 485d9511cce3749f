import logging
import sys

from dotenv import load_dotenv
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class AppSettings(BaseSettings):
    """Ambient settings. Nothing here changes a computed result."""

    model_config = SettingsConfigDict(env_prefix="LEFSCHETZ_", extra="ignore")

    log_level: str = "WARNING"
    n_jobs: int = 1
    default_seed: int = 0

    @field_validator("n_jobs")
    @classmethod
    def _nonzero_workers(cls, value: int) -> int:
        # joblib reads negative counts as "all cores but |n| - 1"
        if value == 0:
            raise ValueError("n_jobs must be nonzero")
        return value


def load_settings() -> AppSettings:
    # Load environment variables
    load_dotenv()
    return AppSettings()


def configure_logging(settings: AppSettings) -> None:
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
