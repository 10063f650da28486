import logging
import os
import pickle
import random
from typing import Callable, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

T = TypeVar("T")


def set_seed(seed: int) -> np.random.Generator:
    """Seeds ``random`` and returns a numpy generator for sampled checks."""
    random.seed(seed)
    os.environ["PYTHONHASHSEED"] = str(seed)
    return np.random.default_rng(seed)


def create_directory(directory):
    if not os.path.exists(directory):
        os.makedirs(directory)


def load_pickle(filename):
    with open(filename, "rb") as f:
        return pickle.load(f)


def save_pickle(data, filename):
    create_directory(os.path.dirname(filename) or ".")
    with open(filename, "wb") as f:
        pickle.dump(data, f)


def cached_pickle(
    path: str, build: Callable[[], T], refresh_cache: bool = False, what: str = "data"
) -> T:
    """Loads ``path`` if present, else builds the value and pickles it there."""
    if os.path.exists(path) and not refresh_cache:
        logger.debug(f"Loaded {what} from {path}")
        return load_pickle(path)
    logger.debug(f"Processing {what}...")
    value = build()
    save_pickle(value, path)
    logger.debug(f"Saved {what} to {path}")
    return value
