"""Data transcribed from the source article, with a checksum guarding against edits.

Statements use the ``i.j|K`` syntax; a trailing ``*`` marks membership in the
distinguished semigraphoid of the block (``M`` for n=4, ``Gamma`` for n=5) and a
trailing ``<=`` marks the four equations that sum to the n=4 certificate.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

M4_TEXT = """\
1.2|
3.4|
2.3|14
1.4|23
"""

# The convex rank test of M4 (bars separate ordered blocks)
M4_CLASSES = (
    "3|2|14", "2|3|14", "12|3|4", "12|4|3", "34|1|2", "34|2|1", "4|1|23", "1|4|23",
    "3|1|2|4", "2|4|3|1", "1|3|2|4", "3|1|4|2", "2|4|1|3", "4|2|3|1", "1|3|4|2", "4|2|1|3",
)

GAMMA_CLASSES = (
    "15|234", "234|15", "123|45", "235|14", "124|35", "245|13", "134|25", "345|12",
    "12|5|34", "25|1|34", "13|5|24", "35|1|24", "14|5|23", "45|1|23",
)

GAMMA_15_234 = ("1.5|", "2.3|15", "2.3|145", "2.4|15", "2.4|135", "3.4|15", "3.4|125")
GAMMA_45_1_23 = ("4.5|", "2.3|145")

AXIOMS4_TEXT = """\
1.2|* + 2.3|1 = 2.3| + 1.2|3 <=
1.3| + 1.2|3 = 1.2|* + 1.3|2
1.3| + 2.3|1 = 2.3| + 1.3|2
1.2|* + 2.4|1 = 2.4| + 1.2|4
1.2|* + 1.4|2 = 1.4| + 1.2|4
1.4| + 2.4|1 = 2.4| + 1.4|2
1.3| + 1.4|3 = 1.4| + 1.3|4
3.4|* + 1.3|4 = 1.3| + 3.4|1
3.4|* + 1.4|3 = 1.4| + 3.4|1 <=
2.3| + 3.4|2 = 3.4|* + 2.3|4
2.4| + 2.3|4 = 2.3| + 2.4|3
3.4|* + 2.4|3 = 2.4| + 3.4|2
3.4|1 + 2.3|14* = 2.3|1 + 3.4|12 <=
2.4|1 + 2.3|14* = 2.3|1 + 2.4|13
2.4|1 + 3.4|12 = 3.4|1 + 2.4|13
1.3|2 + 3.4|12 = 3.4|2 + 1.3|24
1.3|2 + 1.4|23* = 1.4|2 + 1.3|24
3.4|2 + 1.4|23* = 1.4|2 + 3.4|12
1.2|3 + 1.4|23* = 1.4|3 + 1.2|34 <=
1.4|3 + 2.4|13 = 2.4|3 + 1.4|23*
1.2|3 + 2.4|13 = 2.4|3 + 1.2|34
1.3|4 + 2.3|14* = 2.3|4 + 1.3|24
1.2|4 + 1.3|24 = 1.3|4 + 1.2|34
1.2|4 + 2.3|14* = 2.3|4 + 1.2|34
"""

AXIOMS5_TEXT = """\
3.5|12 + 3.4|125* = 3.4|12 + 3.5|124*
2.5|13 + 2.4|135* = 2.4|13 + 2.5|134*
4.5|12 + 3.4|125* = 3.4|12 + 4.5|123*
4.5|13 + 2.4|135* = 2.4|13 + 4.5|123*
4.5|12 + 3.5|124* = 3.5|12 + 4.5|123*
4.5|13 + 2.5|134* = 2.5|13 + 4.5|123*
2.3|14 + 2.5|134* = 2.5|14 + 2.3|145*
2.4|15* + 2.3|145* = 2.3|15* + 2.4|135*
2.5|14 + 3.5|124* = 3.5|14 + 2.5|134*
3.4|15* + 2.3|145* = 2.3|15* + 3.4|125*
3.5|14 + 2.3|145* = 2.3|14 + 3.5|124*
3.4|15* + 2.4|135* = 2.4|15* + 3.4|125*
1.5|23 + 1.4|235* = 1.4|23 + 1.5|234*
1.3|24 + 3.5|124* = 3.5|24 + 1.3|245*
4.5|23 + 1.4|235* = 1.4|23 + 4.5|123*
1.5|24 + 1.3|245* = 1.3|24 + 1.5|234*
4.5|23 + 1.5|234* = 1.5|23 + 4.5|123*
1.5|24 + 3.5|124* = 3.5|24 + 1.5|234*
1.3|25 + 1.4|235* = 1.4|25 + 1.3|245*
1.2|34 + 2.5|134* = 2.5|34 + 1.2|345*
1.3|25 + 3.4|125* = 3.4|25 + 1.3|245*
1.5|34 + 1.2|345* = 1.2|34 + 1.5|234*
3.4|25 + 1.4|235* = 1.4|25 + 3.4|125*
1.5|34 + 2.5|134* = 2.5|34 + 1.5|234*
1.2|35 + 1.4|235* = 1.4|35 + 1.2|345*
1.2|45 + 1.3|245* = 1.3|45 + 1.2|345*
1.2|35 + 2.4|135* = 2.4|35 + 1.2|345*
1.3|45 + 2.3|145* = 2.3|45 + 1.3|245*
1.4|35 + 2.4|135* = 2.4|35 + 1.4|235*
2.3|45 + 1.2|345* = 1.2|45 + 2.3|145*
2.4|1* + 3.4|12 = 3.4|1* + 2.4|13
2.3|1* + 3.5|12 = 3.5|1 + 2.3|15*
2.4|1* + 2.3|14 = 2.3|1* + 2.4|13
2.3|1* + 2.5|13 = 2.5|1 + 2.3|15*
3.4|1* + 2.3|14 = 2.3|1* + 3.4|12
3.5|1 + 2.5|13 = 2.5|1 + 3.5|12
2.4|1* + 4.5|12 = 4.5|1 + 2.4|15*
3.5|1 + 4.5|13 = 4.5|1 + 3.5|14
2.5|1 + 2.4|15* = 2.4|1* + 2.5|14
3.5|1 + 3.4|15* = 3.4|1* + 3.5|14
4.5|1 + 2.5|14 = 2.5|1 + 4.5|12
4.5|1 + 3.4|15* = 3.4|1* + 4.5|13
1.3|2* + 1.4|23 = 1.4|2* + 1.3|24
1.5|2 + 1.3|25 = 1.3|2* + 1.5|23
1.4|2* + 3.4|12 = 3.4|2* + 1.4|23
3.5|2* + 1.5|23 = 1.5|2 + 3.5|12
3.4|2* + 1.3|24 = 1.3|2* + 3.4|12
3.5|2* + 1.3|25 = 1.3|2* + 3.5|12
1.4|2* + 4.5|12 = 4.5|2* + 1.4|25
3.5|2* + 4.5|23 = 4.5|2* + 3.5|24
1.4|2* + 1.5|24 = 1.5|2 + 1.4|25
3.5|2* + 3.4|25 = 3.4|2* + 3.5|24
1.5|2 + 4.5|12 = 4.5|2* + 1.5|24
4.5|2* + 3.4|25 = 3.4|2* + 4.5|23
1.4|3* + 2.4|13 = 2.4|3* + 1.4|23
1.2|3* + 2.5|13 = 2.5|3* + 1.2|35
1.4|3* + 1.2|34 = 1.2|3* + 1.4|23
1.5|3 + 1.2|35 = 1.2|3* + 1.5|23
2.4|3* + 1.2|34 = 1.2|3* + 2.4|13
2.5|3* + 1.5|23 = 1.5|3 + 2.5|13
1.4|3* + 4.5|13 = 4.5|3* + 1.4|35
2.4|3* + 4.5|23 = 4.5|3* + 2.4|35
1.4|3* + 1.5|34 = 1.5|3 + 1.4|35
2.5|3* + 2.4|35 = 2.4|3* + 2.5|34
4.5|3* + 1.5|34 = 1.5|3 + 4.5|13
4.5|3* + 2.5|34 = 2.5|3* + 4.5|23
1.2|4* + 2.3|14 = 2.3|4* + 1.2|34
1.2|4* + 2.5|14 = 2.5|4* + 1.2|45
1.2|4* + 1.3|24 = 1.3|4* + 1.2|34
1.2|4* + 1.5|24 = 1.5|4 + 1.2|45
1.3|4* + 2.3|14 = 2.3|4* + 1.3|24
1.5|4 + 2.5|14 = 2.5|4* + 1.5|24
1.3|4* + 1.5|34 = 1.5|4 + 1.3|45
2.3|4* + 3.5|24 = 3.5|4* + 2.3|45
3.5|4* + 1.5|34 = 1.5|4 + 3.5|14
2.3|4* + 2.5|34 = 2.5|4* + 2.3|45
3.5|4* + 1.3|45 = 1.3|4* + 3.5|14
2.5|4* + 3.5|24 = 3.5|4* + 2.5|34
1.2|5 + 2.3|15* = 2.3|5* + 1.2|35
1.2|5 + 2.4|15* = 2.4|5* + 1.2|45
1.2|5 + 1.3|25 = 1.3|5 + 1.2|35
1.2|5 + 1.4|25 = 1.4|5 + 1.2|45
1.3|5 + 2.3|15* = 2.3|5* + 1.3|25
1.4|5 + 2.4|15* = 2.4|5* + 1.4|25
1.3|5 + 3.4|15* = 3.4|5* + 1.3|45
2.3|5* + 2.4|35 = 2.4|5* + 2.3|45
1.3|5 + 1.4|35 = 1.4|5 + 1.3|45
2.4|5* + 3.4|25 = 3.4|5* + 2.4|35
3.4|5* + 1.4|35 = 1.4|5 + 3.4|15*
3.4|5* + 2.3|45 = 2.3|5* + 3.4|25
1.2|* + 2.3|1* = 2.3|* + 1.2|3*
1.2|* + 2.4|1* = 2.4|* + 1.2|4*
1.3|* + 1.2|3* = 1.2|* + 1.3|2*
1.2|* + 1.4|2* = 1.4|* + 1.2|4*
2.3|* + 1.3|2* = 1.3|* + 2.3|1*
1.4|* + 2.4|1* = 2.4|* + 1.4|2*
1.2|* + 2.5|1 = 2.5|* + 1.2|5
1.4|* + 1.3|4* = 1.3|* + 1.4|3*
1.2|* + 1.5|2 = 1.5|* + 1.2|5
3.4|* + 1.4|3* = 1.4|* + 3.4|1*
1.5|* + 2.5|1 = 2.5|* + 1.5|2
3.4|* + 1.3|4* = 1.3|* + 3.4|1*
1.3|* + 3.5|1 = 3.5|* + 1.3|5
1.4|* + 1.5|4 = 1.5|* + 1.4|5
1.5|* + 3.5|1 = 3.5|* + 1.5|3
4.5|* + 1.5|4 = 1.5|* + 4.5|1
1.5|* + 1.3|5 = 1.3|* + 1.5|3
4.5|* + 1.4|5 = 1.4|* + 4.5|1
2.4|* + 2.3|4* = 2.3|* + 2.4|3*
2.3|* + 2.5|3* = 2.5|* + 2.3|5*
3.4|* + 2.4|3* = 2.4|* + 3.4|2*
2.5|* + 3.5|2* = 3.5|* + 2.5|3*
3.4|* + 2.3|4* = 2.3|* + 3.4|2*
3.5|* + 2.3|5* = 2.3|* + 3.5|2*
2.4|* + 4.5|2* = 4.5|* + 2.4|5*
3.4|* + 4.5|3* = 4.5|* + 3.4|5*
2.5|* + 4.5|2* = 4.5|* + 2.5|4*
3.4|* + 3.5|4* = 3.5|* + 3.4|5*
2.5|* + 2.4|5* = 2.4|* + 2.5|4*
3.5|* + 4.5|3* = 4.5|* + 3.5|4*
"""

# b = A(signed preimage); imset text syntax
B5_TEXT = """\
-1 2
-1 3
-1 4
-1 5
-1 23
1 24
2 25
2 34
1 35
-1 45
2 123
1 124
-1 125
-1 134
1 135
2 145
-1 1234
-1 1235
-1 1245
-1 1345
"""

# preimage of b with a negative coefficient (coefficient statement pairs)
SIGNED_PREIMAGE_TEXT = """\
1 1.5|2
1 1.4|3
1 2.3|4
1 2.3|5
1 3.4|12
1 2.5|13
1 1.2|45
1 1.3|45
1 4.5|23
-1 2.3|45
"""

ALPHA_TEXT = "4.5|2 4.5|3 1.3|4 1.2|5 2.5|14 3.4|15 1.4|23 1.5|23"
BETA_TEXT = "1.5|2 1.4|3 2.3|4 2.3|5 3.4|12 2.5|13 1.2|45 1.3|45"

# 2b = A(sixteen-term witness)
WITNESS_2B_TEXT = (
    "4.5|2 4.5|3 1.3|4 1.2|5 2.5|14 3.4|15 1.4|23 1.5|23 "
    "1.5|2 1.4|3 2.3|4 2.3|5 3.4|12 2.5|13 1.2|45 1.3|45"
)

# the move g = (alpha + 2[2.3|45]) - (beta + 2[4.5|23]) in move-file syntax
G_MOVE_TEXT = """\
+ 4.5|2 4.5|3 1.3|4 1.2|5 2.5|14 3.4|15 1.4|23 1.5|23 2.3|45^2
- 1.5|2 1.4|3 2.3|4 2.3|5 3.4|12 2.5|13 1.2|45 1.3|45 4.5|23^2
"""

CUBICS4 = (
    "+ 2.3|1 3.4|2 1.3|4\n- 3.4|1 1.3|2 2.3|4\n",
    "+ 2.3|1 2.4|3 1.2|4\n- 2.4|1 1.2|3 2.3|4\n",
    "+ 1.3|2 1.4|3 1.2|4\n- 1.4|2 1.2|3 1.3|4\n",
    "+ 2.4|1 3.4|2 1.4|3\n- 3.4|1 1.4|2 2.4|3\n",
)

QUARTIC4 = "+ 1.2| 3.4| 2.4|13 1.3|24\n- 1.3| 2.4| 3.4|12 1.2|34\n"

PRIMES4 = {
    12: "1.2| 1.3| 1.4| 2.3| 2.4| 3.4| 3.4|12 2.4|13 2.3|14 1.4|23 1.3|24 1.2|34",
    15: "1.2| 1.3| 1.4| 3.4| 1.3|2 1.4|2 3.4|2 1.2|3 2.4|3 1.2|4 2.3|4 3.4|12 2.4|13 2.3|14 1.2|34",
    16: "1.2| 1.3| 2.4| 3.4| 2.4|1 3.4|1 1.3|2 3.4|2 1.2|3 2.4|3 1.2|4 1.3|4 3.4|12 2.4|13 1.3|24 1.2|34",
}

# first column c0, then c; each row is c.x <= c0 modulo span{(4,1,1,1,1)}
POLYTOPE_TEXT = """\
POINTS
 1      1/4         0       0       0        0
 1       0          1       0       0        0
 1       0          0       1       0        0
 1       0          0       0       1        0
 1       0          0       0       0        1
 1     -1/4        1/4     1/4     5/4      1/4
 1    280/893   -280/893  25/893    0      28/893
 1      1/57       1/57   -1/57   17/19     2/57
 1       1          1       0      -5        1
 1      2/37      20/37    1/37   10/37    -2/37
"""
POLYTOPE_LINEALITY = (4, 1, 1, 1, 1)
POLYTOPE_F_VECTOR = (14, 36, 32, 10)

# non-submodular semigraphoids for n=4: size, type, non-simplicial, simplicial, total (as printed)
TABLE4_TEXT = """\
3	(0,3,0)	8	0	8
4	(0,4,0)	78	0	78
4	(1,2,1)	30	0	30
4	(2,0,2)	0	6	6
5	(0,5,0)	300	0	300
5	(1,2,2)	30	0	30
5	(1,3,1)	84	0	84
5	(2,0,3)	12	12	24
5	(2,2,1)	30	0	30
5	(3,0,2)	24	0	24
6	(0,6,0)	604	0	604
6	(1,3,2)	84	0	84
6	(1,4,1)	78	0	78
6	(2,0,4)	30	3	33
6	(2,2,2)	30	0	30
6	(2,3,1)	84	0	84
6	(3,0,3)	74	12	96
6	(4,0,2)	30	3	33
7	(0,7,0)	684	0	684
7	(1,4,2)	78	0	78
7	(1,5,1)	24	0	24
7	(2,0,5)	18	0	18
7	(2,3,2)	84	0	84
7	(2,4,1)	78	0	78
7	(3,0,4)	132	0	132
7	(4,0,3)	132	0	132
7	(5,0,2)	18	0	18
8	(0,8,0)	450	0	450
8	(1,5,2)	24	0	24
8	(2,0,6)	3	0	3
8	(2,4,2)	48	0	48
8	(2,5,1)	24	0	24
8	(3,0,5)	72	0	72
8	(4,0,4)	174	0	174
8	(5,0,3)	72	0	72
8	(6,0,2)	3	0	3
9	(0,9,0)	212	0	212
9	(3,0,6)	12	0	12
9	(4,0,5)	84	0	84
9	(5,0,4)	84	0	84
9	(6,0,3)	12	0	12
10	(0,10,0)	60	0	60
10	(4,0,6)	15	0	15
10	(5,0,5)	24	0	24
10	(6,0,4)	15	0	15
11	(0,11,0)	12	0	12
11	(5,0,6)	6	0	6
11	(6,0,5)	6	0	6
"""

COUNTS4 = {"semigraphoids": 26424, "submodular": 22108, "non_submodular": 4316}


@dataclass(frozen=True)
class FixtureSet:
    """All transcribed data in one immutable bundle.

    ``replace(fixtures, gamma_classes=...)`` produces tampered copies for
    negative controls; ``checksum`` then no longer matches ``EXPECTED_SHA256``.
    """

    m4: str = M4_TEXT
    m4_classes: tuple[str, ...] = M4_CLASSES
    gamma_classes: tuple[str, ...] = GAMMA_CLASSES
    gamma_15_234: tuple[str, ...] = GAMMA_15_234
    gamma_45_1_23: tuple[str, ...] = GAMMA_45_1_23
    axioms4: str = AXIOMS4_TEXT
    axioms5: str = AXIOMS5_TEXT
    b5: str = B5_TEXT
    signed_preimage: str = SIGNED_PREIMAGE_TEXT
    alpha: str = ALPHA_TEXT
    beta: str = BETA_TEXT
    witness2b: str = WITNESS_2B_TEXT
    g_move: str = G_MOVE_TEXT
    cubics4: tuple[str, ...] = CUBICS4
    quartic4: str = QUARTIC4
    primes4: dict = field(default_factory=lambda: dict(PRIMES4))
    polytope: str = POLYTOPE_TEXT
    polytope_lineality: tuple[int, ...] = POLYTOPE_LINEALITY
    polytope_f_vector: tuple[int, ...] = POLYTOPE_F_VECTOR
    table4: str = TABLE4_TEXT
    counts4: dict = field(default_factory=lambda: dict(COUNTS4))

    def canonical_json(self) -> str:
        data = asdict(self)
        data["primes4"] = {str(k): v for k, v in sorted(self.primes4.items())}
        return json.dumps(data, sort_keys=True, separators=(",", ":"))

    @property
    def checksum(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()

    def checksum_ok(self) -> bool:
        return self.checksum == EXPECTED_SHA256

    def replace(self, **changes) -> "FixtureSet":
        return replace(self, **changes)

    def export(self, directory: str | Path) -> list[Path]:
        """Write every fixture as a file in the formats the CLI reads."""
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        files = {
            "M4.txt": self.m4,
            "M4.partition": "".join(f"{c}\n" for c in self.m4_classes),
            "Gamma5.txt": "".join(f"{s}\n" for s in gamma_statement_texts(self)),
            "Gamma5.partition": "".join(f"{c}\n" for c in self.gamma_classes),
            "axioms4.txt": self.axioms4,
            "axioms5.txt": self.axioms5,
            "b5.imset": self.b5,
            "b5_doubled.imset": "".join(
                f"{2 * int(c)} {d}\n" for c, d in (line.split() for line in self.b5.splitlines())
            ),
            "g.move": self.g_move,
            "quartic4.move": self.quartic4,
            "polytope10.txt": self.polytope,
            "table4.tsv": "size\ttype\tnon_simplicial\tsimplicial\ttotal\n" + self.table4,
            "checksum.sha256": self.checksum + "\n",
        }
        for k, c in enumerate(self.cubics4, 1):
            files[f"cubic4_{k}.move"] = c
        for codim, text in sorted(self.primes4.items()):
            files[f"prime4_codim{codim}.txt"] = "".join(f"{t}\n" for t in text.split())
        out = []
        for name, text in files.items():
            p = d / name
            p.write_text(text)
            out.append(p)
        return out


def parse_marked_equations(text: str) -> list[tuple[tuple[str, str, str, str], set[str], bool]]:
    """``x + y = z + w`` lines into (statements, starred members, arrow flag)."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        arrow = line.rstrip().endswith("<=")
        body = line.replace("<=", "")
        lhs, rhs = body.split("=")
        toks = [t.strip() for t in lhs.split("+") + rhs.split("+")]
        starred = {t.rstrip("*") for t in toks if t.endswith("*")}
        plain = tuple(t.rstrip("*") for t in toks)
        out.append((plain, starred, arrow))  # type: ignore[arg-type]
    return out


def gamma_statement_texts(fx: FixtureSet) -> list[str]:
    """The starred statements of the n=5 axiom list, sorted by text."""
    seen: set[str] = set()
    for _, starred, _ in parse_marked_equations(fx.axioms5):
        seen |= starred
    return sorted(seen)


def parse_table(text: str) -> list[tuple[int, tuple[int, ...], int, int, int]]:
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("size"):
            continue
        size, t, ns, s, total = line.split("\t")
        triple = tuple(int(v) for v in t.strip("()").split(","))
        rows.append((int(size), triple, int(ns), int(s), int(total)))
    return rows


DEFAULT = FixtureSet()
EXPECTED_SHA256 = "778a2ea31dd37465b4fb97a25b36878f9239c85bc403a33b4bca11d3c0cb93f8"
