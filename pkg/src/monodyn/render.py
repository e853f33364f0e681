"""Text serialisations: PBM/ASCII diagrams, TPD CSV, DOT functional graphs.

Diagrams are drawn with the origin at the bottom-left: column index is the
parameter c, and the first emitted row is x = p-1.
"""

from __future__ import annotations

import csv
import io

import numpy as np

from .dynamics import SystemParams, functional_graph, periodic_points
from .ppd import PpdGrid
from .tpd import TpdRecord

CSV_HEADER = ("ordinal", "p", "n", "d", "per", "lower", "upper_paper", "upper_corrected")


def _image(grid: PpdGrid) -> np.ndarray:
    # cells is [c, x]; image rows are x from top (p-1) to bottom (0).
    return grid.cells.T[::-1]


def render_ppd_pbm(grid: PpdGrid, invert: bool = False) -> bytes:
    """Plain PBM (P1); a marked cell is 1 (black) unless ``invert``."""
    img = _image(grid) ^ invert
    h, w = img.shape
    # Each cell becomes a digit plus a separator; the last separator is the newline.
    body = np.full((h, 2 * w), ord(" "), dtype=np.uint8)
    body[:, 0::2] = np.where(img, ord("1"), ord("0"))
    body[:, -1] = ord("\n")
    return f"P1\n{w} {h}\n".encode() + body.tobytes()


def parse_pbm(data: bytes) -> np.ndarray:
    """Read a plain PBM into a boolean image (row 0 is the top row)."""
    tokens = []
    for line in data.decode("ascii").splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if not tokens or tokens[0] != "P1":
        raise ValueError("not a plain PBM (missing P1 magic)")
    width, height = int(tokens[1]), int(tokens[2])
    bits = "".join(tokens[3:])
    if len(bits) != width * height or set(bits) - {"0", "1"}:
        raise ValueError(f"expected {width * height} bits of 0/1")
    return (np.frombuffer(bits.encode(), dtype=np.uint8) == ord("1")).reshape(height, width)


def grid_from_pbm(data: bytes, n: int, invert: bool = False) -> PpdGrid:
    img = parse_pbm(data) ^ invert
    if img.shape[0] != img.shape[1]:
        raise ValueError("diagram images are square")
    return PpdGrid.from_cells(n, img.shape[0], img[::-1].T)


def render_ppd_ascii(grid: PpdGrid) -> str:
    img = _image(grid)
    body = np.full((img.shape[0], img.shape[1] + 1), ord("\n"), dtype=np.uint8)
    body[:, :-1] = np.where(img, ord("#"), ord("."))
    return body.tobytes().decode("ascii")


def export_tpd_csv(records: list[TpdRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for k, r in enumerate(records, start=1):
        w.writerow((k, r.p, r.n, r.d, r.per, r.lower, r.upper_paper, r.upper_corrected))
    return buf.getvalue()


def parse_tpd_csv(text: str) -> list[TpdRecord]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError("missing or unexpected CSV header")
    records = []
    for k, row in enumerate(rows[1:], start=1):
        vals = [int(v) for v in row]
        if vals[0] != k:
            raise ValueError(f"row {k} has ordinal {vals[0]}")
        records.append(TpdRecord(*vals[1:]))
    return records


def export_graph_dot(params: SystemParams) -> str:
    """Functional graph in Graphviz DOT; periodic vertices are shaded."""
    periodic = periodic_points(params)
    lines = [f'digraph "{params}" {{']
    for x in range(params.p):
        if x in periodic:
            lines.append(f"  {x} [style=filled, fillcolor=lightgray];")
        else:
            lines.append(f"  {x};")
    lines += [f"  {x} -> {y};" for x, y in functional_graph(params)]
    lines.append("}")
    return "\n".join(lines) + "\n"
