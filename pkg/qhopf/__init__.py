import logging
import os
from pathlib import Path
import sys

__version__ = "0.3.0"

# package-level cache path, relocatable through QHOPF_CACHE_DIR
BASE_CACHE_PATH = os.environ.get(
    "QHOPF_CACHE_DIR", os.path.join(str(Path.home()), ".cache/qhopf/")
)

# logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)
handler = logging.StreamHandler(sys.stdout)
formatter = logging.Formatter("%(message)s")
handler.setFormatter(formatter)
logger.addHandler(handler)
