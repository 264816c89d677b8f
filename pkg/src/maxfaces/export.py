"""Grid sampling and file export: OBJ meshes, CSV tables.

OBJ files contain only ``v`` and ``f`` records.  Vertices store the
ambient coordinates in the order (x1, x2, x0) with 9 significant digits;
faces are grid quads over cells whose four corners are valid.  Vertices
that fail to evaluate are dropped and their faces skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .families import SurfaceFamily
from .lorentz import LVec3


@dataclass(frozen=True)
class GridSpec:
    u_min: float
    u_max: float
    v_min: float
    v_max: float
    nu: int
    nv: int

    def __post_init__(self) -> None:
        if not (self.u_min < self.u_max and self.v_min < self.v_max):
            raise ValueError("grid extents must satisfy u_min < u_max and v_min < v_max")
        if self.nu < 2 or self.nv < 2:
            raise ValueError("grid needs at least 2 samples per direction")

    def u_values(self) -> list[float]:
        return [self.u_min + (self.u_max - self.u_min) * i / (self.nu - 1) for i in range(self.nu)]

    def v_values(self) -> list[float]:
        return [self.v_min + (self.v_max - self.v_min) * j / (self.nv - 1) for j in range(self.nv)]


def parse_grid(text: str) -> GridSpec:
    """Parse ``umin:umax:nu,vmin:vmax:nv`` into a GridSpec."""
    try:
        u_part, v_part = text.split(",")
        u_min, u_max, nu = u_part.split(":")
        v_min, v_max, nv = v_part.split(":")
        return GridSpec(float(u_min), float(u_max), float(v_min), float(v_max), int(nu), int(nv))
    except ValueError as exc:
        raise ValueError(f"malformed grid spec {text!r}; expected umin:umax:nu,vmin:vmax:nv") from exc


def sample_grid(fam: SurfaceFamily, grid: GridSpec) -> list[LVec3 | None]:
    """Row-major positions over the grid; non-finite evaluations become None."""
    out: list[LVec3 | None] = []
    for u in grid.u_values():
        for v in grid.v_values():
            try:
                p = fam.position(u, v)
            except ArithmeticError:
                out.append(None)
                continue
            if all(math.isfinite(c) for c in p.as_tuple()):
                out.append(p)
            else:
                out.append(None)
    return out


def write_obj(path: str, vertices: list[LVec3 | None], nu: int, nv: int) -> int:
    """Write a quad mesh over an nu x nv vertex grid; returns the vertex count."""
    if len(vertices) != nu * nv:
        raise ValueError("vertex list does not match grid dimensions")
    index = [0] * len(vertices)  # 1-based OBJ indices, 0 = dropped
    lines: list[str] = []
    count = 0
    for k, vert in enumerate(vertices):
        if vert is None:
            continue
        count += 1
        index[k] = count
        lines.append(f"v {vert.x1:.9g} {vert.x2:.9g} {vert.x0:.9g}")
    for i in range(nu - 1):
        for j in range(nv - 1):
            corners = (
                index[i * nv + j],
                index[(i + 1) * nv + j],
                index[(i + 1) * nv + j + 1],
                index[i * nv + j + 1],
            )
            if all(corners):
                lines.append("f {} {} {} {}".format(*corners))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return count


def read_obj_vertices(path: str) -> list[tuple[float, float, float]]:
    """Vertex records of an OBJ file (for round-trip checks)."""
    verts = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("v "):
                _, a, b, c = line.split()
                verts.append((float(a), float(b), float(c)))
    return verts


def write_csv(path: str, header: list[str], rows: list[list]) -> None:
    """Comma-separated table with LF line endings; floats at 9 significant digits."""

    def fmt(x) -> str:
        if isinstance(x, float):
            return f"{x:.9g}"
        return str(x)

    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt(x) for x in row) + "\n")
