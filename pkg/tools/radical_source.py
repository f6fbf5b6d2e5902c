"""Source transcriptions for the bundled G2, p = 7 radical-layer tables.

Each table describes the radical series of one dual baby Verma module for
G2 in characteristic 7.  Keys of ``rows`` are the restricted parts of the
composition factors; each maps a radical-layer index to a compact string
listing the Frobenius-twist parts seen in that layer.  A twist token
``(a,b)`` means multiplicity 1, ``(a,b)xN`` means multiplicity N.

The companion module with base weight shifted by 7*rho has every twist
part shifted by (1,1); consumers derive it from the base data.

Run as a script to emit one canonical JSON file per table under
``src/tmcv/data/radical_tables/``.
"""

from __future__ import annotations

import hashlib
import json
import pathlib
import re
import sys

_TOKEN = re.compile(r"\((-?\d+),(-?\d+)\)(?:x(\d+))?")


def parse_layer(text: str) -> list[tuple[tuple[int, int], int]]:
    """Parse a compact twist list like '(-1,-1)x2,(0,-1)' into pairs."""
    out: list[tuple[tuple[int, int], int]] = []
    cleaned = text.replace(" ", "")
    pos = 0
    while pos < len(cleaned):
        m = _TOKEN.match(cleaned, pos)
        if m is None:
            raise ValueError(f"bad twist token at {cleaned[pos:]!r}")
        a, b, n = m.group(1), m.group(2), m.group(3)
        out.append(((int(a), int(b)), int(n) if n else 1))
        pos = m.end()
        if pos < len(cleaned):
            if cleaned[pos] != ",":
                raise ValueError(f"expected ',' at {cleaned[pos:]!r}")
            pos += 1
    return out


# Tables keyed by alcove label.  Base weight is the unique regular
# restricted weight in the labeled alcove.

TABLES: dict[int, dict] = {
    1: {
        "base": (0, 0),
        "rows": {
            (5, 5): {0: "(-1,-1)"},
            (3, 5): {1: "(-1,-1)", 5: "(0,-1)"},
            (4, 4): {2: "(-1,-1)", 4: "(0,-1),(-2,0)"},
            (4, 3): {3: "(-1,-1),(0,-1),(1,-2),(-2,0)"},
            (3, 3): {2: "(-1,-1),(0,-1),(1,-2),(-2,0),(-3,0)"},
            (5, 1): {3: "(-1,-1),(0,-1),(1,-2),(-2,0),(-3,0)", 5: "(-1,0)"},
            (0, 4): {1: "(-1,-1),(0,-1),(0,-2),(1,-2),(-2,0),(-3,0)"},
            (2, 2): {
                2: "(-1,-1),(0,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                4: "(-1,-1),(0,-1),(-1,0),(1,-2),(-2,0),(2,-2)",
            },
            (1, 2): {
                1: "(-1,-1),(0,-1),(0,-2),(1,-2),(-2,0),(-2,-1),(-3,0)",
                3: "(-1,-1)x2,(0,-1)x2,(-1,0),(1,-2),(-2,0)x2,(2,-2),(-3,0),(-4,1)",
            },
            (1, 1): {
                2: "(-1,-1)x3,(0,-1)x2,(-1,0),(0,-2),(1,-2)x2,(-2,0)x2,(-2,-1),(2,-2),(-3,0),(2,-3),(-4,1)",
                4: "(0,-1)",
            },
            (2, 0): {
                1: "(-1,-1)x3,(0,-1),(-1,0),(0,-2),(1,-2),(-2,0),(-2,-1),(2,-2),(-3,0),(2,-3),(-4,0),(-4,1)",
                3: "(0,-1),(-2,0)",
            },
            (0, 0): {
                2: "(-1,-1)x3,(0,-1),(-1,0),(0,-2),(1,-2),(-2,0),(-2,-1),(2,-2),(-3,0),(2,-3),(-4,0),(-4,1)",
                4: "(-1,-1),(0,-1)x3,(-1,0),(1,-1),(0,-2),(1,-2),(-2,0)x2,(2,-2),(-3,0),(-3,1),(3,-3)",
                6: "(0,0)",
            },
        },
    },
    2: {
        "base": (2, 0),
        "rows": {
            (5, 5): {5: "(0,-1)"},
            (3, 5): {0: "(-1,-1)", 4: "(0,-1)"},
            (4, 4): {1: "(-1,-1)", 3: "(0,-1),(-2,0)"},
            (4, 3): {2: "(-1,-1),(0,-1),(1,-2),(-2,0)"},
            (3, 3): {3: "(-1,-1),(0,-1),(1,-2),(-2,0)", 5: "(-1,0)"},
            (5, 1): {2: "(-1,-1),(0,-1),(1,-2),(-2,0),(-3,0)", 4: "(-1,0)"},
            (0, 4): {4: "(-1,-1),(0,-1),(-1,0),(1,-2),(-2,0),(2,-2)"},
            (2, 2): {
                1: "(-1,-1),(0,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                3: "(-1,-1),(0,-1),(-1,0),(1,-2),(-2,0),(2,-2)",
            },
            (1, 2): {
                2: "(-1,-1)x2,(0,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                4: "(-1,-1),(0,-1)x2,(-1,0)x2,(1,-1),(1,-2),(-2,0)x2,(2,-2),(-3,1)",
            },
            (1, 1): {
                1: "(-1,-1)",
                3: "(-1,-1)x2,(0,-1)x3,(-1,0),(1,-1),(0,-2),(1,-2)x2,(-2,0)x2,(2,-2),(-3,0),(-3,1),(3,-3)",
            },
            (2, 0): {
                2: "(-1,-1)",
                4: "(-1,-1),(0,-1)x3,(-1,0),(1,-1),(0,-2),(1,-2),(-2,0)x2,(2,-2),(-3,0),(-3,1),(3,-3)",
                6: "(0,0)",
            },
            (0, 0): {
                1: "(-1,-1)x3,(0,-1),(-1,0),(0,-2),(1,-2),(-2,0),(-2,-1),(2,-2),(-3,0),(2,-3),(-4,0),(-4,1)",
                3: "(-1,-1),(0,-1)x3,(-1,0),(1,-1),(0,-2),(1,-2),(-2,0)x2,(2,-2),(-3,0),(-3,1),(3,-3)",
                5: "(0,0)",
            },
        },
    },
    3: {
        "base": (1, 1),
        "rows": {
            (5, 5): {4: "(0,-1)"},
            (3, 5): {3: "(0,-1),(-2,0)"},
            (4, 4): {0: "(-1,-1)", 2: "(0,-1),(-2,0)"},
            (4, 3): {1: "(-1,-1)", 3: "(0,-1),(-2,0)", 5: "(-1,0)"},
            (3, 3): {2: "(-1,-1),(0,-1),(1,-2),(-2,0)", 4: "(-1,0)"},
            (5, 1): {1: "(-1,-1),(0,-1),(1,-2),(-2,0),(-3,0)", 3: "(-1,0)"},
            (0, 4): {3: "(-1,-1),(0,-1),(1,-2),(-2,0)", 5: "(1,-1),(-1,0)"},
            (2, 2): {
                2: "(-1,-1)x2,(0,-1),(1,-2),(-2,0),(-3,0)",
                4: "(0,-1),(-1,0)x2,(1,-1),(-2,0),(-3,1)",
            },
            (1, 2): {
                1: "(-1,-1)x2,(0,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                3: "(-1,-1),(0,-1)x2,(-1,0)x2,(1,-1),(1,-2),(-2,0)x2,(2,-2),(-3,1)",
            },
            (1, 1): {
                2: "(-1,-1)x2,(0,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                4: "(0,-1)x2,(1,-1),(-1,0)x2,(-2,0)x2,(2,-2),(-3,1)",
                6: "(0,0)",
            },
            (2, 0): {
                1: "(-1,-1)",
                3: "(-1,-1),(0,-1)x3,(-1,0),(1,-1),(0,-2),(1,-2),(-2,0)x2,(2,-2),(-3,0),(-3,1),(3,-3)",
                5: "(0,0)",
            },
            (0, 0): {
                2: "(-1,-1)x3,(0,-1)x3,(-1,0),(1,-1),(0,-2),(1,-2)x2,(-2,0)x3,(-2,-1),(2,-2),(-3,0)x2,(-3,1),(3,-3),(-4,1),(-5,1)",
                4: "(0,0),(0,-1),(-1,0),(1,-1),(-2,0),(-2,1),(-3,1)",
            },
        },
    },
    4: {
        "base": (1, 2),
        "rows": {
            (5, 5): {3: "(0,-1)"},
            (3, 5): {2: "(0,-1),(-2,0)"},
            (4, 4): {3: "(0,-1),(-2,0)", 5: "(-1,0)"},
            (4, 3): {0: "(-1,-1)", 2: "(0,-1),(-2,0)", 4: "(-1,0)"},
            (3, 3): {1: "(-1,-1)", 3: "(0,-1),(-2,0)", 5: "(-1,0),(1,-1)"},
            (5, 1): {2: "(-1,-1)", 4: "(0,-1),(-1,0),(1,-1),(-2,0),(-3,1)"},
            (0, 4): {2: "(0,-1),(-1,-1),(1,-2),(-2,0)", 4: "(-1,0),(1,-1)"},
            (2, 2): {
                1: "(0,-1),(-1,-1)x2,(1,-2),(-2,0),(-3,0)",
                3: "(0,-1),(-1,0)x2,(1,-1),(-2,0),(-3,1)",
            },
            (1, 2): {
                2: "(0,-1),(-1,-1)x2,(1,-2),(-2,0),(-3,0)",
                4: "(0,-1)x2,(-1,0)x3,(1,-1)x2,(-2,0)x2,(2,-2),(-3,1)",
                6: "(0,0)",
            },
            (1, 1): {
                1: "(0,-1),(-1,-1)x2,(0,-2),(1,-2),(-2,0),(-3,0)",
                3: "(0,-1)x2,(-1,0)x2,(1,-1),(-2,0)x2,(2,-2),(-3,1)",
                5: "(0,0)",
            },
            (2, 0): {
                2: "(0,-1),(-1,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                4: "(0,0),(0,-1)x2,(-1,0)x2,(1,-1),(-2,0),(2,-2),(-3,1),(3,-2)",
            },
            (0, 0): {
                1: "(0,-1),(-1,-1),(0,-2),(-2,-1),(1,-2),(-2,0),(-3,0)",
                3: "(0,0),(-1,-1),(0,-1)x3,(-1,0)x3,(1,-1)x2,(1,-2),(-2,0)x3,(2,-2),(-2,1),(3,-2),(-3,0),(-3,1)x2,(-4,1),(-5,2)",
            },
        },
    },
    5: {
        "base": (2, 2),
        "rows": {
            (5, 5): {2: "(0,-1)"},
            (3, 5): {3: "(0,-1)", 5: "(-1,0)"},
            (4, 4): {2: "(0,-1),(-2,0)", 4: "(-1,0)"},
            (4, 3): {3: "(0,-1),(-2,0)", 5: "(-1,0),(1,-1)"},
            (3, 3): {0: "(-1,-1)", 2: "(0,-1),(-2,0)", 4: "(-1,0),(1,-1)"},
            (5, 1): {1: "(-1,-1)", 3: "(0,-1),(-1,0),(1,-1),(-2,0),(-3,1)"},
            (0, 4): {1: "(-1,-1)", 3: "(0,-1),(-1,0),(1,-1),(-2,0),(2,-2)"},
            (2, 2): {
                2: "(-1,-1)",
                4: "(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0)x2,(2,-2),(-3,1)",
                6: "(0,0)",
            },
            (1, 2): {
                1: "(0,-1),(-1,-1)x2,(1,-2),(-2,0),(-3,0)",
                3: "(0,-1)x2,(-1,0)x3,(1,-1)x2,(-2,0)x2,(2,-2),(-3,1)",
                5: "(0,0)",
            },
            (1, 1): {
                2: "(0,-1),(-1,-1),(1,-2),(-2,0),(-3,0)",
                4: "(0,0),(0,-1)x2,(-1,0)x3,(1,-1)x2,(-2,0),(2,-2),(3,-2),(-3,1)",
            },
            (2, 0): {
                1: "(0,-1),(-1,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                3: "(0,0),(0,-1)x2,(-1,0)x2,(1,-1),(-2,0),(2,-2),(3,-2),(-3,1)",
            },
            (0, 0): {
                2: "(0,-1),(-1,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                4: "(0,0)x2,(-1,-1),(0,-1)x3,(-1,0)x4,(1,-1)x2,(2,-1),(-2,0)x2,(2,-2)x2,(-2,1),(3,-2),(-3,1)x2,(-4,1),(-4,2)",
            },
        },
    },
    6: {
        "base": (0, 4),
        "rows": {
            (5, 5): {5: "(-1,0)"},
            (3, 5): {2: "(0,-1)", 4: "(-1,0)"},
            (4, 4): {1: "(0,-1),(-2,0)", 3: "(-1,0)"},
            (4, 3): {2: "(0,-1),(-2,0)", 4: "(-1,0),(1,-1)"},
            (3, 3): {3: "(0,-1),(-1,0),(1,-1),(-2,0),(-3,1)"},
            (5, 1): {0: "(-1,-1)", 2: "(0,-1),(-1,0),(1,-1),(-2,0),(-3,1)"},
            (0, 4): {4: "(0,-1),(-1,0),(1,-1),(-2,0),(-3,1)", 6: "(0,0)"},
            (2, 2): {
                1: "(-1,-1)",
                3: "(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0)x2,(2,-2),(-3,1)",
                5: "(0,0)",
            },
            (1, 2): {
                2: "(0,-1)x2,(-1,-1),(-1,0)x2,(1,-1),(-2,0)x2,(2,-2),(-3,1),(-4,1)",
                4: "(0,0),(0,-1),(-1,0),(1,-1),(-2,0),(-2,1),(-3,1)",
            },
            (1, 1): {
                3: "(0,-1)x3,(-1,-1),(-1,0)x2,(1,-1),(-2,0)x2,(2,-2),(-3,1),(-4,1)",
                5: "(0,0),(-1,0),(1,-1),(2,-1),(-2,1)",
            },
            (2, 0): {
                2: "(0,-1),(-2,0)",
                4: "(0,0),(0,-1),(-1,-1),(-1,0)x3,(1,-1),(2,-1),(-2,0),(2,-2),(-2,1),(-3,1),(-4,1),(-4,2)",
            },
            (0, 0): {
                1: "(0,-1),(-1,-1),(0,-2),(1,-2),(-2,0),(-3,0)",
                3: "(0,0)x2,(-1,-1),(0,-1)x3,(-1,0)x4,(1,-1)x2,(2,-1),(-2,0)x2,(2,-2)x2,(-2,1),(3,-2),(-3,1)x2,(-4,1),(-4,2)",
            },
        },
    },
    7: {
        "base": (5, 1),
        "rows": {
            (5, 5): {1: "(0,-1)"},
            (3, 5): {2: "(0,-1)", 4: "(-1,0)"},
            (4, 4): {3: "(0,-1)", 5: "(-1,0),(1,-1)"},
            (4, 3): {2: "(0,-1),(-2,0)", 4: "(-1,0),(1,-1)"},
            (3, 3): {3: "(0,-1),(-1,0),(1,-1),(-2,0),(2,-2)"},
            (5, 1): {4: "(0,-1),(-1,0),(1,-1),(-2,0),(2,-2)", 6: "(0,0)"},
            (0, 4): {0: "(-1,-1)", 2: "(0,-1),(-1,0),(1,-1),(-2,0),(2,-2)"},
            (2, 2): {
                1: "(-1,-1)",
                3: "(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0)x2,(2,-2),(-3,1)",
                5: "(0,0)",
            },
            (1, 2): {
                2: "(0,-1),(-1,0),(-1,-1),(1,-1),(1,-2),(-2,0),(2,-2)",
                4: "(0,0),(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0),(2,-2),(3,-2),(-3,1)",
            },
            (1, 1): {
                1: "(0,-1),(-1,-1),(1,-2),(-2,0),(-3,0)",
                3: "(0,0),(0,-1)x2,(-1,0)x3,(1,-1)x2,(-2,0),(2,-2),(3,-2),(-3,1)",
            },
            (2, 0): {
                2: "(0,0),(0,-1)x3,(-1,-1),(-1,0),(1,-1),(-2,0),(1,-2),(2,-2),(3,-2),(3,-3),(-3,0),(-3,1)",
                4: "(-1,0),(1,-1)",
            },
            (0, 0): {
                3: "(0,0),(-1,-1)x2,(0,-1)x4,(-1,0)x3,(1,-1)x2,(1,-2),(-2,0)x2,(2,-2)x2,(3,-2),(3,-3),(-3,0),(-3,1)x2,(-4,1)",
                5: "(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
        },
    },
    8: {
        "base": (3, 3),
        "rows": {
            (5, 5): {4: "(-1,0)"},
            (3, 5): {1: "(0,-1)", 3: "(-1,0)"},
            (4, 4): {2: "(0,-1)", 4: "(-1,0),(1,-1)"},
            (4, 3): {1: "(0,-1),(-2,0)", 3: "(-1,0),(1,-1)"},
            (3, 3): {2: "(0,-1),(-2,0)", 4: "(-1,0),(1,-1)", 6: "(0,0)"},
            (5, 1): {3: "(0,-1),(-1,0),(1,-1),(-2,0),(2,-2)", 5: "(0,0)"},
            (0, 4): {3: "(0,-1),(-1,0),(1,-1),(-2,0),(-3,1)", 5: "(0,0)"},
            (2, 2): {
                0: "(-1,-1)",
                2: "(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0)x2,(2,-2),(-3,1)",
                4: "(0,0)",
            },
            (1, 2): {
                1: "(-1,-1)",
                3: "(0,-1)x3,(-1,0)x2,(1,-1)x2,(-2,0)x2,(2,-2),(-3,1)",
                5: "(0,0)x2,(-1,0),(1,-1),(2,-1),(-2,1)",
            },
            (1, 1): {
                2: "(0,-1)x3,(-1,-1),(-1,0)x2,(1,-1),(-2,0)x2,(2,-2),(-3,1),(-4,1)",
                4: "(0,0),(-1,0),(1,-1),(2,-1),(-2,1)",
            },
            (2, 0): {
                3: "(0,-1)x2,(-1,-1),(-1,0)x2,(1,-1),(-2,0),(2,-2),(-3,1),(-4,1)",
                5: "(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (0, 0): {
                2: "(0,0),(-1,-1)x2,(0,-1)x4,(-1,0)x3,(1,-1)x2,(1,-2),(-2,0)x2,(2,-2)x2,(3,-2),(3,-3),(-3,0),(-3,1)x2,(-4,1)",
                4: "(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
        },
    },
    11: {
        "base": (4, 3),
        "rows": {
            (5, 5): {3: "(-1,0)"},
            (3, 5): {4: "(-1,0),(1,-1)"},
            (4, 4): {1: "(0,-1)", 3: "(-1,0),(1,-1)"},
            (4, 3): {2: "(0,-1)", 4: "(-1,0),(1,-1)", 6: "(0,0)"},
            (3, 3): {1: "(0,-1),(-2,0)", 3: "(-1,0),(1,-1)", 5: "(0,0)"},
            (5, 1): {2: "(0,-1),(-1,0),(1,-1),(-2,0),(2,-2)", 4: "(0,0)"},
            (0, 4): {2: "(0,-1),(-2,0)", 4: "(0,0),(-1,0),(1,-1),(-2,1)"},
            (2, 2): {
                3: "(0,-1)x2,(-1,0),(1,-1),(-2,0),(2,-2)",
                5: "(0,0)x2,(-1,0),(1,-1),(2,-1),(-2,1)",
            },
            (1, 2): {
                0: "(-1,-1)",
                2: "(0,-1)x3,(-1,0)x2,(1,-1)x2,(-2,0)x2,(2,-2),(-3,1)",
                4: "(0,0)x2,(-1,0),(1,-1),(2,-1),(-2,1)",
            },
            (1, 1): {
                1: "(-1,-1)",
                3: "(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0),(2,-2),(-3,1)",
                5: "(0,0)x2,(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (2, 0): {
                2: "(0,-1)x2,(-1,-1),(-1,0)x2,(1,-1),(-2,0),(2,-2),(-3,1),(-4,1)",
                4: "(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (0, 0): {
                3: "(0,0),(-1,-1),(0,-1)x3,(-1,0)x3,(1,-1)x3,(2,-1),(1,-2),(-2,0)x2,(2,-2)x2,(-2,1),(3,-2),(4,-3),(-3,1),(-4,1)",
                5: "(1,0),(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
        },
    },
    13: {
        "base": (4, 4),
        "rows": {
            (5, 5): {2: "(-1,0)"},
            (3, 5): {3: "(-1,0),(1,-1)"},
            (4, 4): {4: "(-1,0),(1,-1)", 6: "(0,0)"},
            (4, 3): {1: "(0,-1)", 3: "(-1,0),(1,-1)", 5: "(0,0)"},
            (3, 3): {2: "(0,-1)", 4: "(0,0),(-1,0),(1,-1),(-2,1)"},
            (5, 1): {3: "(0,-1)", 5: "(0,0),(-1,0),(1,-1),(2,-1),(-2,1)"},
            (0, 4): {1: "(0,-1),(-2,0)", 3: "(0,0),(-1,0),(1,-1),(-2,1)"},
            (2, 2): {
                2: "(0,-1)x2,(-1,0),(1,-1),(-2,0),(2,-2)",
                4: "(0,0)x2,(-1,0),(1,-1),(2,-1),(-2,1)",
            },
            (1, 2): {
                3: "(0,0),(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0),(-2,1),(2,-2),(-3,1)",
                5: "(0,0)x2,(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (1, 1): {
                0: "(-1,-1)",
                2: "(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0),(2,-2),(-3,1)",
                4: "(0,0)x2,(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (2, 0): {
                1: "(-1,-1)",
                3: "(0,0),(0,-1),(-1,0)x3,(1,-1)x2,(-1,1),(2,-1),(-2,0),(2,-2),(-2,1),(-3,1),(-4,2)",
                5: "(0,0)",
            },
            (0, 0): {
                2: "(-1,-1),(0,-1),(-1,0),(1,-1),(1,-2),(2,-2),(-2,0)",
                4: "(1,0),(0,0)x3,(-1,1),(0,-1),(-1,0)x3,(1,-1)x3,(2,-1)x2,(-2,0),(2,-2),(-2,1)x2,(3,-2),(4,-2),(-3,1),(-4,2)",
            },
        },
    },
    15: {
        "base": (3, 5),
        "rows": {
            (5, 5): {1: "(-1,0)"},
            (3, 5): {2: "(-1,0)", 6: "(0,0)"},
            (4, 4): {3: "(-1,0),(1,-1)", 5: "(0,0)"},
            (4, 3): {4: "(0,0),(-1,0),(1,-1),(-2,1)"},
            (3, 3): {1: "(0,-1)", 3: "(0,0),(-1,0),(1,-1),(-2,1)"},
            (5, 1): {2: "(0,-1)", 4: "(0,0),(-1,0),(1,-1),(2,-1),(-2,1)"},
            (0, 4): {2: "(0,0),(0,-1),(-1,0),(1,-1),(-2,1),(-3,1)"},
            (2, 2): {
                3: "(0,0),(0,-1),(-1,0),(1,-1),(-2,1),(-3,1)",
                5: "(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (1, 2): {
                2: "(0,0),(0,-1)x2,(-1,0)x2,(1,-1)x2,(-2,0),(-2,1),(2,-2),(-3,1)",
                4: "(0,0)x2,(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (1, 1): {
                3: "(0,0)x2,(0,-1),(-1,0)x3,(1,-1)x2,(-1,1),(2,-1),(-2,0),(2,-2),(-2,1)x2,(-3,1),(-4,2)",
                5: "(0,0)",
            },
            (2, 0): {
                0: "(-1,-1)",
                2: "(0,0),(0,-1),(-1,0)x3,(1,-1)x2,(-1,1),(2,-1),(-2,0),(2,-2),(-2,1),(-3,1),(-4,2)",
                4: "(0,0)",
            },
            (0, 0): {
                1: "(-1,-1)",
                3: "(0,0),(0,-1),(-1,0)x3,(1,-1)x2,(-1,1),(2,-1),(2,-2),(-2,0),(-2,1),(-3,1),(-4,2)",
                5: "(1,0),(0,0)x3,(-1,1),(0,-1),(-1,0),(1,-1),(2,-1),(3,-1),(-2,1),(3,-2),(-3,1),(-3,2)",
            },
        },
    },
    16: {
        "base": (5, 5),
        "rows": {
            (5, 5): {6: "(0,0)"},
            (3, 5): {1: "(-1,0)", 5: "(0,0)"},
            (4, 4): {2: "(-1,0),(1,-1)", 4: "(0,0)"},
            (4, 3): {3: "(0,0),(-1,0),(1,-1),(-2,1)"},
            (3, 3): {4: "(0,0),(-1,0),(1,-1),(2,-1),(-2,1)"},
            (5, 1): {1: "(0,-1)", 3: "(0,0),(-1,0),(1,-1),(2,-1),(-2,1)"},
            (0, 4): {5: "(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)"},
            (2, 2): {
                2: "(0,0),(0,-1),(-1,0),(1,-1),(-2,1),(-3,1)",
                4: "(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (1, 2): {
                3: "(0,0)x2,(0,-1),(-1,0)x2,(1,-1)x2,(2,-1),(-2,1),(3,-2),(-3,1)",
                5: "(1,0),(0,0),(-1,0),(1,-1),(-1,1),(2,-1),(-2,1)",
            },
            (1, 1): {
                2: "(-1,0)",
                4: "(1,0),(0,0)x3,(0,-1),(-1,0)x2,(1,-1)x2,(-1,1),(2,-1),(3,-2),(-2,1)x2,(-3,1),(-3,2)",
            },
            (2, 0): {
                3: "(-1,0),(1,-1)",
                5: "(1,0),(0,0)x3,(0,-1),(-1,0),(1,-1),(-1,1),(2,-1),(3,-1),(3,-2),(-2,1),(-3,1),(-3,2)",
            },
            (0, 0): {
                0: "(-1,-1)",
                2: "(0,0),(0,-1),(-1,0)x3,(1,-1)x2,(-1,1),(2,-1),(2,-2),(-2,0),(-2,1),(-3,1),(-4,2)",
                4: "(1,0),(0,0)x3,(-1,1),(0,-1),(-1,0),(1,-1),(2,-1),(3,-1),(-2,1),(3,-2),(-3,1),(-3,2)",
            },
        },
    },
}


def table_entries(label: int) -> list[dict]:
    """Flatten one table into sorted JSON-ready entry dicts."""
    rows = TABLES[label]["rows"]
    entries = []
    for part, layers in rows.items():
        for layer, text in layers.items():
            for twist, mult in parse_layer(text):
                entries.append(
                    {
                        "restricted_part": list(part),
                        "layer": layer,
                        "twisted_part": list(twist),
                        "mult": mult,
                    }
                )
    entries.sort(
        key=lambda e: (e["layer"], e["restricted_part"], e["twisted_part"])
    )
    return entries


def table_json(label: int) -> dict:
    return {
        "system": "G2",
        "prime": 7,
        "label": label,
        "base_weight": list(TABLES[label]["base"]),
        "entries": table_entries(label),
    }


def emit(outdir: pathlib.Path) -> list[pathlib.Path]:
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for label in sorted(TABLES):
        path = outdir / f"g2_p7_label_{label:02d}.json"
        blob = json.dumps(table_json(label), sort_keys=True, separators=(",", ":"))
        path.write_text(blob + "\n")
        written.append(path)
    return written


if __name__ == "__main__":
    root = pathlib.Path(__file__).resolve().parents[1]
    target = root / "src" / "tmcv" / "data" / "radical_tables"
    paths = emit(target)
    for p in paths:
        digest = hashlib.sha256(p.read_bytes()).hexdigest()[:12]
        print(f"{p.name}  {digest}")
