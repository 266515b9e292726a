"""Text renderers: egg-boxes (ASCII grid or DOT), Cayley tables, partitions."""

from __future__ import annotations

from typing import Sequence

from .greens import EggBox, EquivalencePartition


def _grid(cells: list[list[str]]) -> list[str]:
    ncols = len(cells[0])
    widths = [max(len(row[c]) for row in cells) for c in range(ncols)]
    rule = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    out = [rule]
    for row in cells:
        out.append("|" + "|".join(f" {s.ljust(w)} " for s, w in zip(row, widths)) + "|")
        out.append(rule)
    return out


def eggbox_ascii(box: EggBox) -> str:
    blocks = []
    for k, d in enumerate(box.dclasses, 1):
        cells = [[" ".join(box.label(x) for x in cell) for cell in row] for row in d.cells]
        blocks.append("\n".join([f"D{k}"] + _grid(cells)))
    return "\n\n".join(blocks) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def eggbox_dot(box: EggBox) -> str:
    lines = ["graph eggbox {", "  node [shape=box];"]
    for k, d in enumerate(box.dclasses, 1):
        lines.append(f"  subgraph cluster_D{k} {{")
        lines.append(f'    label="D{k}";')
        for r, row in enumerate(d.cells):
            for c, cell in enumerate(row):
                if cell:
                    label = " ".join(box.label(x) for x in cell)
                    lines.append(f"    D{k}_r{r}_c{c} [label={_dot_quote(label)}];")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_eggbox(box: EggBox, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return eggbox_ascii(box)
    if fmt == "dot":
        return eggbox_dot(box)
    raise ValueError(f"unknown egg-box format {fmt!r}")


def render_table(names: Sequence[str], table, op: str = "*") -> str:
    cells = [[op] + list(names)] + [[names[i]] + [names[v] for v in row]
                                    for i, row in enumerate(table)]
    width = max(len(s) for row in cells for s in row)
    return "\n".join(" ".join(s.rjust(width) for s in row) for row in cells) + "\n"


def render_partition(p: EquivalencePartition, names: Sequence[str]) -> str:
    return " | ".join(" ".join(names[i] for i in cls) for cls in p.classes)
