from pydantic import Field
from pydantic_settings import BaseSettings
from dotenv import load_dotenv

# always load a .env file if there is one
# The config object will then be instantiated afterwards
load_dotenv()


class Config(BaseSettings):
    stabilization_window: int = Field(default=3, alias='INVLIMITS_WINDOW', ge=1)
    probe_budget: int = Field(default=64, alias='INVLIMITS_BUDGET', ge=1)
    max_domain: int = Field(default=200, alias='INVLIMITS_MAX_DOMAIN', ge=1)
    max_threads: int = Field(default=10**6, alias='INVLIMITS_MAX_THREADS', ge=1)
    max_restriction: int = Field(default=16, alias='INVLIMITS_MAX_RESTRICTION', ge=1)
    exponent_bound: int = Field(default=2**63 - 1, alias='INVLIMITS_EXPONENT_BOUND', ge=1)
    display_limit: int = Field(default=20, alias='INVLIMITS_DISPLAY_LIMIT', ge=0)


# instantiate a default config object
config = Config()
