"""The cohomology table of Sigma^{c1,c2,c3} U^dual on CG and on Gr(3, 7).

Values are compared modulo det V, i.e. after ``normalize_sl``.  A cell is
shaded when the CG and Gr(3, 7) answers differ.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..bbw import GR37, bulk_cohomology
from ..cg import cg_cohomology
from ..schur.bundles import SchurBundle
from ..weights import GradedRep, gl_dimension, normalize_sl

ZERO = (0,) * 7
V_DUAL = (1,) + (0,) * 6

# Rows in display order, keyed by (c2, c3); each row maps c1 -> expected value.
# An expected value is {degree: {sl-normalized GL(7) weight: multiplicity}}.
_K = {0: {ZERO: 1}}
REFERENCE_ROWS: tuple[tuple[tuple[int, int], dict[int, dict]], ...] = (
    ((-3, -4), {0: {}}),
    ((-3, -3), {-2: {}, -1: {}, 0: {}}),
    ((-2, -4), {-2: {}, -1: {}}),
    ((-2, -3), {-2: {}, -1: {}, 0: {}}),
    ((-2, -2), {-1: {}, 0: {}}),
    ((-1, -5), {-1: {4: {ZERO: 1}}}),
    ((-1, -4), {-1: {}, 0: {}}),
    ((-1, -3), {-1: {}, 0: {}, 1: {}}),
    ((-1, -2), {-1: {}, 0: {}, 1: {}, 2: {}}),
    ((-1, -1), {-1: {}, 0: {}, 1: {}, 2: {}, 3: {}}),
    ((0, -3), {0: {2: {ZERO: 1}}}),
    ((0, -2), {0: {}, 1: {}, 2: {}}),
    ((0, -1), {0: {}, 1: {}, 2: {}}),
    ((0, 0), {0: _K, 1: {0: {V_DUAL: 1}}, 2: {0: {(2,) + (0,) * 6: 1}}}),
    ((1, -2), {1: {}, 2: {}}),
    ((1, -1), {1: _K, 2: {0: {V_DUAL: 1}}}),
    ((1, 0), {1: {0: {(1, 1) + (0,) * 5: 1}}, 2: {0: {(2, 1) + (0,) * 5: 1}}}),
)
COLUMNS = (-2, -1, 0, 1, 2)  # c1 = 3 shares the last column


@dataclass(frozen=True)
class TableEntry:
    weight: tuple[int, int, int]
    cg: GradedRep
    gr: GradedRep
    expected: dict
    route: str

    @property
    def shaded(self) -> bool:
        return _normalized(self.cg) != _normalized(self.gr)

    @property
    def matches(self) -> bool:
        return _normalized(self.cg) == {d: r for d, r in self.expected.items() if r}

    def as_dict(self) -> dict:
        return {
            "weight": list(self.weight),
            "cg": rep_json(self.cg),
            "gr": rep_json(self.gr),
            "cg_text": rep_text(self.cg),
            "gr_text": rep_text(self.gr),
            "shaded": self.shaded,
            "matches_reference": self.matches,
            "route": self.route,
        }


def _normalized(g: GradedRep) -> dict:
    return {d: {normalize_sl(w): m for w, m in r.items()} for d, r in g.as_dict().items()}


_NAMES = {ZERO: "k", V_DUAL: "V*", (2,) + (0,) * 6: "S2V*", (1, 1) + (0,) * 5: "W2V*", (2, 1) + (0,) * 5: "S21V*"}


def rep_text(g: GradedRep) -> str:
    """Short text such as ``k[-2]`` or ``V*``; the shift [-d] marks degree d."""
    if g.is_zero():
        return "0"
    parts = []
    for d, reps in sorted(_normalized(g).items()):
        for w, m in sorted(reps.items()):
            name = _NAMES.get(w, "S{" + ",".join(map(str, w)) + "}V*")
            parts.append((f"{m}*" if m > 1 else "") + name + (f"[{-d}]" if d else ""))
    return " + ".join(parts)


def rep_json(g: GradedRep) -> list[dict]:
    """Per-degree irreducibles as weight arrays with dimensions."""
    return [
        {
            "degree": d,
            "reps": [{"weight": list(w), "mult": m, "dim": gl_dimension(w, g.n)} for w, m in reps],
            "dim": sum(m * gl_dimension(w, g.n) for w, m in reps),
        }
        for d, reps in g.data
    ]


def compute_table() -> list[TableEntry]:
    out = []
    for (c2, c3), row in REFERENCE_ROWS:
        for c1, expected in row.items():
            s = SchurBundle((c1, c2, c3), (0, 0, 0, 0), 3, 7)
            res = cg_cohomology(s)
            if not res.determined:
                raise RuntimeError(f"table cell {(c1, c2, c3)} is indeterminate: {res}")
            out.append(TableEntry((c1, c2, c3), res.graded, bulk_cohomology(GR37, s), expected, res.route))
    return out


def _cell(e: TableEntry) -> str:
    c1, c2, c3 = e.weight
    text = f"H(S^{{{c1},{c2},{c3}}}) = {rep_text(e.cg)}"
    if e.shaded:
        text = f"**{text}** (shaded; Gr: {rep_text(e.gr)})"
    return text


def render_markdown(entries: list[TableEntry]) -> str:
    """Grid in the reference layout followed by a per-weight listing."""
    by_weight = {e.weight: e for e in entries}
    lines = ["| c1 = -2 | c1 = -1 | c1 = 0 | c1 = 1 | c1 = 2, 3 |", "|---|---|---|---|---|"]
    for (c2, c3), row in REFERENCE_ROWS:
        cells = []
        for c1 in COLUMNS:
            here = [by_weight[(c, c2, c3)] for c in sorted(row) if (c == c1 or (c1 == 2 and c == 3))]
            cells.append("<br>".join(_cell(e) for e in here))
        lines.append("| " + " | ".join(cells) + " |")
    lines += ["", "| weight | CG | Gr(3,7) | shaded | reference |", "|---|---|---|---|---|"]
    for e in entries:
        lines.append(
            f"| ({','.join(map(str, e.weight))}) | {rep_text(e.cg)} | {rep_text(e.gr)} | "
            f"{'yes' if e.shaded else 'no'} | {'ok' if e.matches else 'MISMATCH'} |"
        )
    return "\n".join(lines) + "\n"


def render_text(entries: list[TableEntry]) -> str:
    width = max(len(str(e.weight)) for e in entries)
    rows = [
        f"{str(e.weight):<{width}}  CG {rep_text(e.cg):<8} Gr {rep_text(e.gr):<8}"
        + ("  shaded" if e.shaded else "")
        + ("" if e.matches else "  MISMATCH")
        for e in entries
    ]
    return "\n".join(rows) + "\n"
