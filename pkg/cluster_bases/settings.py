"""Runtime defaults, overridable through the environment or a ``.env`` file.

Every operation that reads a setting also accepts it as a keyword argument; an explicit
argument always wins over the environment.
"""

import os
from functools import lru_cache
from typing import NamedTuple

from dotenv import load_dotenv


class Settings(NamedTuple):
    seed_budget: int
    "Maximal number of seeds an exploration may materialize."
    enumeration_budget: int
    "Maximal number of subspace tuples enumerated by a single point count."
    truncation: int
    "Default |n|_1 window for distinguished-function expansions."
    sample_bound: int
    "Entries of sampled homomorphisms are drawn from [-bound, bound]."
    prime_attempts: int
    "Number of prime windows tried before an Euler characteristic is given up."


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_dotenv()
    return Settings(
        seed_budget=_int_env("CLUSTER_BASES_SEED_BUDGET", 10_000),
        enumeration_budget=_int_env("CLUSTER_BASES_ENUMERATION_BUDGET", 10_000_000),
        truncation=_int_env("CLUSTER_BASES_TRUNCATION", 6),
        sample_bound=_int_env("CLUSTER_BASES_SAMPLE_BOUND", 10),
        prime_attempts=_int_env("CLUSTER_BASES_PRIME_ATTEMPTS", 3),
    )
