import os

#: Largest ring the arithmetic layer will construct.
DEFAULT_MAX_RING_SIZE = 10**6
#: Largest homogeneous-element count for exhaustive ideal enumeration.
DEFAULT_MAX_ENUM_SIZE = 10**4
#: Rings up to this size get precomputed addition/multiplication tables.
TABLE_LIMIT = 2048
#: Rings up to this size get a full unit scan on first use.
FULL_UNIT_SCAN_LIMIT = 5000


def max_ring_size():
    value = os.environ.get("GRIL_MAX_RING_SIZE")
    return int(value) if value else DEFAULT_MAX_RING_SIZE


def max_enum_size():
    value = os.environ.get("GRIL_MAX_ENUM_SIZE")
    return int(value) if value else DEFAULT_MAX_ENUM_SIZE
