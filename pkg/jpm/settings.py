import logging
import os

from dotenv import load_dotenv
from numpy.random import SeedSequence

load_dotenv()

logger = logging.getLogger(__name__)

LOG_LEVEL = os.getenv("PM_LOG_LEVEL", "WARNING").upper()
WORKERS = int(os.getenv("PM_WORKERS", "1"))
SLOW_TESTS = os.getenv("JPM_SLOW_TESTS", "") not in ("", "0")


def resolve_seed(seed: int | None = None) -> int:
    """Flag value first, then PM_SEED, then fresh entropy (logged for replay)"""
    if seed is not None:
        return seed
    env_seed = os.getenv("PM_SEED")
    if env_seed:
        try:
            return int(env_seed)
        except ValueError:
            logger.warning("Ignoring non-integer PM_SEED=%r", env_seed)
    fresh = SeedSequence().entropy % (2**63)
    logger.info("No seed given, using fresh seed %d", fresh)
    return fresh
