# Capacity limits for every exact computation in the repository
from indset.errors import CapacityError

MAX_VERTICES = 64          # neighbor sets are 64-bit words
MAX_GRAPH6_SHORT = 62      # single-byte graph6 size header
MAX_BRUTE_FORCE = 30       # 2^n subset scan
MAX_ENUMERATION = 30       # materialized independent-set streams
MAX_DISTRIBUTION = 25      # exact uniform distribution over I(G)
MAX_KAHN_AUDIT = 22        # joint tables in the entropy audit
MAX_J_ENUMERATION = 14     # pairs (A', B') in J(G)
MAX_COVER_COUNT = 30       # vertices of G x K2 counted exactly
MAX_EXHAUSTIVE_N = 7       # 2^21 labeled graphs


def check_capacity(what: str, size: int, limit: int) -> None:
    """Raise CapacityError when `size` exceeds `limit` for the operation `what`."""
    if size > limit:
        raise CapacityError(f"{what}: size {size} exceeds the limit of {limit}")
