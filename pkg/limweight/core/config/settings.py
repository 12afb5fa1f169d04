from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):

    # Parallelism
    THREADS: int = 4

    # Verification defaults
    SEED: int = 7
    VERIFY_CASES: int = 200

    # Enumeration windows
    WINDOW_RADIUS: int = 3
    K_BOX: int = 5
    SEARCH_BOX: int = 4

    # Logging
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="LIMWEIGHT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


env_list = (
    ".env",
    ".env.local",
    ".env.prod",
    ".env.dev",
    ".env.test",
)
settings = Settings(
    _env_file=tuple(filter(
        lambda env: Path(env).is_file(),
        env_list,
    )),
    _env_file_encoding="utf-8",
)
