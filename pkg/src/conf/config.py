from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings

load_dotenv()


class Settings(BaseSettings):
    threads: int = Field(default=1, ge=1)
    exhaustive_limit: int = Field(default=10_000, ge=1)
    root_bound_slack: int | None = Field(default=None, ge=0)
    log_level: str = 'WARNING'
    output_format: str = 'text'

    class Config:
        env_prefix = 'bhzeta_'
        env_file = '.env'
        env_file_encoding = 'utf-8'
        extra = 'ignore'


settings = Settings()
