import os

DEFAULT_SIZE_CAP = 4096
DEFAULT_IDEAL_CAP = 512
# rings at or below this size get full add/mul tables
TABULATE_LIMIT = 1024
# success witness maps are kept only for rings this small
WITNESS_LIMIT = 64


def size_cap(cap=None):
    if cap is not None:
        return int(cap)
    env = os.environ.get("PFLAB_SIZE_CAP")
    return int(env) if env else DEFAULT_SIZE_CAP


def ideal_cap(cap=None):
    return DEFAULT_IDEAL_CAP if cap is None else int(cap)
