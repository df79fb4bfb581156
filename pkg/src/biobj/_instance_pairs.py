"""Shipped instance-id mapping (generated artifact).

Maps each bi-objective instance id to its two single-objective instance
ids, pre-validated against the separation conditions over all 55 pairs
and all 6 dimensions.  Regenerate after any generator change with:

    biobj suite regen-instances
"""

INSTANCE_PAIRS = {
    1: (2, 4),
    2: (3, 5),
    3: (7, 8),
    4: (9, 10),
    5: (11, 12),
    6: (13, 14),
    7: (15, 16),
    8: (17, 18),
    9: (19, 20),
    10: (21, 22),
}
