"""Cored-hexagon regions, exhaustive tiling enumeration, and tiling statistics.

Lattice conventions (fixed once, validated by the pinned counts in the test
suite):

* Vertices live on the triangular lattice spanned by f1 = (1, 0) and
  f2 = (0, 1), embedded in the plane as f1 -> (1, 0), f2 -> (1/2, sqrt3/2).
* The up-triangle  U(x, y) has vertices (x, y), (x+1, y), (x, y+1).
* The down-triangle D(x, y) has vertices (x+1, y), (x, y+1), (x+1, y+1).
* U(x, y) is adjacent to D(x, y), D(x-1, y) and D(x, y-1).
* The hexagon with clockwise sides a, b+m, c, a+m, b, c+m has vertices
  (-c-m, c+m) -> (-c-m, a+c+m) -> (b-c, a+c+m) -> (b, a+m) -> (b, 0) -> (0, 0),
  so the side of length a runs along x = -c-m and the side of length a+m
  along x = b.
* The core is the down-pointing triangle with vertices (x0, y0),
  (x0, y0+m), (x0-m, y0+m) where x0 = (b-c)/2 and y0 = (a+c)/2 for the
  centered placement, y0 = (a+c-1)/2 when the core is shifted half a unit
  toward the side of length b.
* The reference ray extends the core side parallel to the sides of lengths
  a and a+m, away from the core starting at (x0, y0+m); its unit segments
  are the edges {(x0, y), (x0, y+1)}, y >= y0+m, up to the region boundary.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Optional

from .exactnum import CycloElement, omega3, omega6

UP = 0
DOWN = 1

Cell = tuple[int, int, int]

WEIGHT_ONE = "one"
WEIGHT_MINUS1 = "minus1"
WEIGHT_OMEGA3 = "omega3"
WEIGHT_OMEGA6 = "omega6"
WEIGHT_MINUS1_N6 = "minus1-n6"

WEIGHTS = (WEIGHT_ONE, WEIGHT_MINUS1, WEIGHT_OMEGA3, WEIGHT_OMEGA6, WEIGHT_MINUS1_N6)
CYCLIC_WEIGHTS = (WEIGHT_OMEGA3, WEIGHT_OMEGA6, WEIGHT_MINUS1_N6)

DEFAULT_CELL_CAP = 120

CENTERED = "centered"
SHIFTED_TOWARD_B = "shifted-toward-b"


class CellCapError(RuntimeError):
    """The region exceeds the configured brute-force cap."""


def default_cell_cap() -> int:
    value = os.environ.get("CORED_HEX_CELL_CAP")
    return int(value) if value else DEFAULT_CELL_CAP


def normalize_sides(a: int, b: int, c: int) -> tuple[tuple[int, int, int], str]:
    """Rotate the side labels so the parity-deviant side (if any) comes first.

    Rotating the hexagon by 120 degrees turns C_{a,b,c}(m) into C_{c,a,b}(m),
    so the relabelings below leave the region unchanged.  Returns the new
    triple and which rotation was applied ('abc' means none).
    """
    pa, pb, pc = a % 2, b % 2, c % 2
    if pa == pb == pc or (pb == pc != pa):
        return (a, b, c), "abc"
    if pa == pc != pb:
        return (b, c, a), "bca"
    return (c, a, b), "cab"


@dataclass(frozen=True)
class CoredHexagon:
    """Parameter record for the hexagon a, b+m, c, a+m, b, c+m minus a core
    of side m.  Requires b = c (mod 2); use normalize_sides for raw input."""

    a: int
    b: int
    c: int
    m: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.m) < 0:
            raise ValueError("side lengths must be nonnegative")
        if self.b % 2 != self.c % 2:
            raise ValueError(
                f"sides b={self.b}, c={self.c} differ in parity; relabel so the "
                "deviant side is a (see normalize_sides)"
            )

    @property
    def placement(self) -> str:
        if self.a % 2 == self.b % 2:
            return CENTERED
        return SHIFTED_TOWARD_B

    @property
    def core_position(self) -> tuple[int, int]:
        x0 = (self.b - self.c) // 2
        if self.placement == CENTERED:
            y0 = (self.a + self.c) // 2
        else:
            y0 = (self.a + self.c - 1) // 2
        return x0, y0

    @property
    def cell_count(self) -> int:
        a, b, c, m = self.a, self.b, self.c, self.m
        return 2 * (a * b + b * c + c * a) + 2 * m * (a + b + c)


def _cross(ux: int, uy: int, vx: int, vy: int) -> int:
    return ux * vy - uy * vx


class Region:
    """The cell set of a cored hexagon plus precomputed combinatorial data."""

    def __init__(self, hexagon: CoredHexagon):
        self.hexagon = hexagon
        a, b, c, m = hexagon.a, hexagon.b, hexagon.c, hexagon.m
        self.a, self.b, self.c, self.m = a, b, c, m
        self.x0, self.y0 = hexagon.core_position

        hex_vertices = [
            (-c - m, c + m),
            (-c - m, a + c + m),
            (b - c, a + c + m),
            (b, a + m),
            (b, 0),
            (0, 0),
        ]
        self._hex3 = [(3 * x, 3 * y) for x, y in hex_vertices]
        core_vertices = [
            (self.x0, self.y0),
            (self.x0, self.y0 + m),
            (self.x0 - m, self.y0 + m),
        ]
        self._core3 = [(3 * x, 3 * y) for x, y in core_vertices]

        cells = []
        for x in range(-c - m, b):
            for y in range(0, a + c + m):
                for orient in (UP, DOWN):
                    if self._cell_in_region(x, y, orient):
                        cells.append((x, y, orient))
        cells.sort()
        self.cells: tuple[Cell, ...] = tuple(cells)
        self.cell_index: dict[Cell, int] = {cell: i for i, cell in enumerate(cells)}

        expected = hexagon.cell_count
        ups = sum(1 for cell in cells if cell[2] == UP)
        assert len(cells) == expected, (len(cells), expected)
        assert 2 * ups == len(cells), "up/down cell counts must balance"

        adjacency: list[tuple[int, ...]] = []
        for x, y, orient in cells:
            if orient == UP:
                partners = ((x, y, DOWN), (x - 1, y, DOWN), (x, y - 1, DOWN))
            else:
                partners = ((x, y, UP), (x + 1, y, UP), (x, y + 1, UP))
            adjacency.append(
                tuple(self.cell_index[p] for p in partners if p in self.cell_index)
            )
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(adjacency)

        self.reference_ray: tuple[tuple[int, int], ...] = self._build_ray()

    def _point_in_hexagon(self, px: int, py: int) -> bool:
        pts = self._hex3
        for i in range(len(pts)):
            x1, y1 = pts[i]
            x2, y2 = pts[(i + 1) % len(pts)]
            if (x1, y1) == (x2, y2):
                continue
            # clockwise boundary: interior strictly to the right
            if _cross(x2 - x1, y2 - y1, px - x1, py - y1) >= 0:
                return False
        return True

    def _point_in_core(self, px: int, py: int) -> bool:
        if self.m == 0:
            return False
        pts = self._core3
        for i in range(len(pts)):
            x1, y1 = pts[i]
            x2, y2 = pts[(i + 1) % len(pts)]
            # counterclockwise boundary: interior strictly to the left
            if _cross(x2 - x1, y2 - y1, px - x1, py - y1) <= 0:
                return False
        return True

    def _cell_in_region(self, x: int, y: int, orient: int) -> bool:
        if orient == UP:
            px, py = 3 * x + 1, 3 * y + 1
        else:
            px, py = 3 * x + 2, 3 * y + 2
        return self._point_in_hexagon(px, py) and not self._point_in_core(px, py)

    def _build_ray(self) -> tuple[tuple[int, int], ...]:
        """Segments of the ray, ordered outward from the core, as index pairs
        (west cell, east cell) with -1 for a missing flank."""
        segments = []
        x0 = self.x0
        y = self.y0 + self.m
        while True:
            west = self.cell_index.get((x0 - 1, y, DOWN), -1)
            east = self.cell_index.get((x0, y, UP), -1)
            if west < 0 and east < 0:
                break
            segments.append((west, east))
            y += 1
        return tuple(segments)

    @cached_property
    def rotation(self) -> tuple[int, ...]:
        """Index map of the 120-degree rotation about the core centroid.

        Only defined for a = b = c, where the rotation is a symmetry of the
        region.
        """
        if not (self.a == self.b == self.c):
            raise ValueError("rotation needs a hexagon with a = b = c")
        ox, oy = 3 * self.x0 - self.m, 3 * self.y0 + 2 * self.m
        mapping = []
        for x, y, orient in self.cells:
            if orient == UP:
                px, py = 3 * x + 1, 3 * y + 1
            else:
                px, py = 3 * x + 2, 3 * y + 2
            ux, uy = px - ox, py - oy
            qx, qy = -ux - uy + ox, ux + oy
            if orient == UP:
                assert qx % 3 == 1 and qy % 3 == 1
                image = ((qx - 1) // 3, (qy - 1) // 3, UP)
            else:
                assert qx % 3 == 2 and qy % 3 == 2
                image = ((qx - 2) // 3, (qy - 2) // 3, DOWN)
            mapping.append(self.cell_index[image])
        return tuple(mapping)

    @cached_property
    def reflection(self) -> tuple[int, ...]:
        """Index map of the reflection fixing the core's ray-side edge
        setwise (linear part (x, y) -> (x, -x-y) about the core centroid).
        Only defined for a = b = c; it preserves cell orientations."""
        if not (self.a == self.b == self.c):
            raise ValueError("reflection needs a hexagon with a = b = c")
        ox, oy = 3 * self.x0 - self.m, 3 * self.y0 + 2 * self.m
        mapping = []
        for x, y, orient in self.cells:
            if orient == UP:
                px, py = 3 * x + 1, 3 * y + 1
            else:
                px, py = 3 * x + 2, 3 * y + 2
            ux, uy = px - ox, py - oy
            qx, qy = ux + ox, -ux - uy + oy
            if orient == UP:
                assert qx % 3 == 1 and qy % 3 == 1
                image = ((qx - 1) // 3, (qy - 1) // 3, UP)
            else:
                assert qx % 3 == 2 and qy % 3 == 2
                image = ((qx - 2) // 3, (qy - 2) // 3, DOWN)
            mapping.append(self.cell_index[image])
        return tuple(mapping)

    def __repr__(self) -> str:
        h = self.hexagon
        return f"Region(C_{{{h.a},{h.b},{h.c}}}({h.m}), {len(self.cells)} cells)"


def build_region(hexagon: CoredHexagon) -> Region:
    return Region(hexagon)


@dataclass(frozen=True)
class Tiling:
    """A perfect matching of region cells into lozenges."""

    pairs: tuple[tuple[Cell, Cell], ...]

    @staticmethod
    def from_partner(region: Region, partner: list[int]) -> Tiling:
        pairs = []
        for i, j in enumerate(partner):
            if i < j:
                pairs.append((region.cells[i], region.cells[j]))
        return Tiling(tuple(sorted(pairs)))

    def partner_array(self, region: Region) -> list[int]:
        partner = [-1] * len(region.cells)
        for u, v in self.pairs:
            iu, iv = region.cell_index[u], region.cell_index[v]
            partner[iu] = iv
            partner[iv] = iu
        assert all(p >= 0 for p in partner), "not a perfect matching of the region"
        return partner


def _check_cap(units: int, cap: Optional[int]) -> None:
    limit = default_cell_cap() if cap is None else cap
    if units > limit:
        raise CellCapError(
            f"region needs {units} search units, above the cap {limit}; "
            "raise the cap explicitly or via CORED_HEX_CELL_CAP"
        )


def _search(region: Region, on_leaf: Callable[[list[int]], None]) -> None:
    """Backtracking over perfect matchings: always branch on the
    lexicographically first uncovered cell."""
    n = len(region.cells)
    adjacency = region.adjacency
    partner = [-1] * n

    def recurse(start: int) -> None:
        i = start
        while i < n and partner[i] >= 0:
            i += 1
        if i == n:
            on_leaf(partner)
            return
        for j in adjacency[i]:
            if partner[j] < 0:
                partner[i] = j
                partner[j] = i
                recurse(i + 1)
                partner[i] = -1
                partner[j] = -1

    recurse(0)


def _search_cyclic(region: Region, on_leaf: Callable[[list[int]], None]) -> None:
    """Backtracking over rotation-invariant matchings: each placement fixes
    the whole orbit of three lozenges, so coverage stays invariant and a free
    cell always has its whole orbit free."""
    n = len(region.cells)
    adjacency = region.adjacency
    rot = region.rotation
    partner = [-1] * n

    def recurse(start: int) -> None:
        i = start
        while i < n and partner[i] >= 0:
            i += 1
        if i == n:
            on_leaf(partner)
            return
        i2 = rot[i]
        i3 = rot[i2]
        for j in adjacency[i]:
            if partner[j] < 0:
                j2 = rot[j]
                j3 = rot[j2]
                # i, i2, i3 are distinct up-cells and j, j2, j3 distinct
                # down-cells, so the three lozenges never collide
                partner[i] = j
                partner[j] = i
                partner[i2] = j2
                partner[j2] = i2
                partner[i3] = j3
                partner[j3] = i3
                recurse(i + 1)
                for u in (i, j, i2, j2, i3, j3):
                    partner[u] = -1

    recurse(0)


def enumerate_tilings(region: Region, cap: Optional[int] = None) -> Iterator[Tiling]:
    _check_cap(len(region.cells), cap)
    results: list[Tiling] = []
    _search(region, lambda partner: results.append(Tiling.from_partner(region, partner)))
    return iter(results)


def enumerate_cyclic_tilings(region: Region, cap: Optional[int] = None) -> Iterator[Tiling]:
    if not (region.a == region.b == region.c):
        raise ValueError("cyclically symmetric tilings need a = b = c")
    _check_cap(len(region.cells) // 3 if region.cells else 0, cap)
    results: list[Tiling] = []
    _search_cyclic(
        region, lambda partner: results.append(Tiling.from_partner(region, partner))
    )
    return iter(results)


def _statistic_n_from_partner(region: Region, partner: list[int]) -> int:
    n = 0
    for west, east in region.reference_ray:
        if west < 0 or east < 0 or partner[west] != east:
            n += 1
    return n


def statistic_n(tiling: Tiling, region: Region) -> int:
    """Number of ray segments that are lozenge edges (not interior to a
    lozenge); equals the number of lattice paths passing the core on the
    reference-ray side."""
    return _statistic_n_from_partner(region, tiling.partner_array(region))


def _statistic_n6_from_partner(region: Region, partner: list[int]) -> int:
    # The walk below reads off the paths of one fundamental domain, bounded
    # by the cut through the core side on the ray line and the cut along the
    # third lattice direction.  Conjugating by the reflection symmetry picks
    # the domain orientation that makes the m = 0 specialization count the
    # off-diagonal cube orbits of the plane partition (rather than their
    # complement, which has the same parity).
    sigma = region.reflection
    reflected = [-1] * len(partner)
    for i, j in enumerate(partner):
        reflected[sigma[i]] = sigma[j]
    partner = reflected
    a, m = region.a, region.m
    index = region.cell_index
    total = 0
    for j in range(a):
        start_up = index.get((j, a - 1 - j, UP), -1)
        start_down = index.get((j, a - 1 - j, DOWN), -1)
        if start_up < 0 or start_down < 0 or partner[start_up] != start_down:
            continue
        total += j
        x, y = j, a - j
        while True:
            u = index[(x, y, UP)]
            p = partner[u]
            if p == index.get((x, y, DOWN), -2):
                total += x
                y += 1
            elif p == index.get((x - 1, y, DOWN), -2):
                if x == 0:
                    # crossed out of the fundamental domain; path complete
                    assert a + m <= y < 2 * a + m, (x, y)
                    break
                x -= 1
                y += 1
            else:
                raise AssertionError("statistic path stepped onto an interior edge")
    return total


def statistic_n6(tiling: Tiling, region: Region) -> int:
    """Sum of distances of the horizontal lozenges of one fundamental domain
    to its border along the core; defined for cyclically symmetric tilings."""
    if not is_cyclically_symmetric(tiling, region):
        raise ValueError("statistic is defined for cyclically symmetric tilings only")
    return _statistic_n6_from_partner(region, tiling.partner_array(region))


def is_cyclically_symmetric(tiling: Tiling, region: Region) -> bool:
    if not (region.a == region.b == region.c):
        raise ValueError("cyclic symmetry needs a hexagon with a = b = c")
    rot = region.rotation
    partner = tiling.partner_array(region)
    return all(partner[rot[i]] == rot[partner[i]] for i in range(len(partner)))


def count_weighted(
    hexagon: CoredHexagon,
    weight: str,
    cap: Optional[int] = None,
    cyclic: Optional[bool] = None,
) -> int | CycloElement:
    """Exact weighted count by exhaustive backtracking.

    Weights one and minus1 range over all tilings by default; omega3,
    omega6 and minus1-n6 range over the cyclically symmetric ones.  Pass
    cyclic=True to restrict one/minus1 to cyclically symmetric tilings."""
    if weight not in WEIGHTS:
        raise ValueError(f"unknown weight {weight!r}")
    region = build_region(hexagon)
    if cyclic is None:
        cyclic = weight in CYCLIC_WEIGHTS
    if weight in CYCLIC_WEIGHTS and not cyclic:
        raise ValueError(f"weight {weight!r} is defined on cyclic tilings only")
    if cyclic and not (hexagon.a == hexagon.b == hexagon.c):
        raise ValueError("cyclically symmetric tilings need a = b = c")

    if weight == WEIGHT_ONE:
        box = [0]

        def leaf(partner: list[int]) -> None:
            box[0] += 1

    elif weight == WEIGHT_MINUS1:
        box = [0]

        def leaf(partner: list[int]) -> None:
            box[0] += -1 if _statistic_n_from_partner(region, partner) % 2 else 1

    elif weight == WEIGHT_MINUS1_N6:
        box = [0]

        def leaf(partner: list[int]) -> None:
            box[0] += -1 if _statistic_n6_from_partner(region, partner) % 2 else 1

    else:
        omega = omega3() if weight == WEIGHT_OMEGA3 else omega6()
        box = [CycloElement.of(omega.ring, 0)]

        def leaf(partner: list[int]) -> None:
            box[0] = box[0] + omega ** _statistic_n_from_partner(region, partner)

    if cyclic:
        _check_cap(len(region.cells) // 3 if region.cells else 0, cap)
        _search_cyclic(region, leaf)
    else:
        _check_cap(len(region.cells), cap)
        _search(region, leaf)
    return box[0]


def count_tilings(hexagon: CoredHexagon, cap: Optional[int] = None) -> int:
    return count_weighted(hexagon, WEIGHT_ONE, cap)


@dataclass(frozen=True)
class PathFamily:
    """Nonintersecting lattice paths of a tiling, in orthogonal coordinates
    where every step is east (X+1, Y) or south (X, Y-1)."""

    paths: tuple[tuple[tuple[int, int], ...], ...]
    starts: tuple[tuple[int, int], ...]
    ends: tuple[tuple[int, int], ...]
    sigma: tuple[int, ...]  # sigma[i-1] = j: path from A_i ends at E_j (1-based)

    @property
    def sign(self) -> int:
        seen = [False] * len(self.sigma)
        sign = 1
        for i in range(len(self.sigma)):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.sigma[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign


def _path_start_bases(region: Region) -> list[tuple[int, int]]:
    a, c, m = region.a, region.c, region.m
    bases = [(-c - m, c + m + i) for i in range(a)]
    bases += [(region.x0, region.y0 + t) for t in range(m)]
    return bases


def tiling_to_paths(tiling: Tiling, region: Region) -> PathFamily:
    """The standard bijection onto nonintersecting paths from the side of
    length a (and the core side parallel to it) to the side of length a+m."""
    partner = tiling.partner_array(region)
    index = region.cell_index
    b = region.b
    paths = []
    sigma = []
    for x, y in _path_start_bases(region):
        vertices = [(x + y, y)]
        while x < b:
            u = index[(x, y, UP)]
            p = partner[u]
            if p == index.get((x, y, DOWN), -2):
                x += 1
            elif p == index.get((x, y - 1, DOWN), -2):
                x += 1
                y -= 1
            else:
                raise AssertionError("path stepped onto an interior edge")
            vertices.append((x + y, y))
        sigma.append(y + 1)
        paths.append(tuple(vertices))
    all_vertices = [v for path in paths for v in path]
    assert len(set(all_vertices)) == len(all_vertices), "paths must be vertex-disjoint"
    starts = tuple(path[0] for path in paths)
    ends = tuple(path[-1] for path in paths)
    return PathFamily(tuple(paths), starts, ends, tuple(sigma))


def paths_to_tiling(family: PathFamily, region: Region) -> Tiling:
    """Inverse of tiling_to_paths: path steps fix two lozenge orientations,
    the remaining cells pair into the third."""
    index = region.cell_index
    partner = [-1] * len(region.cells)

    def place(i: int, j: int) -> None:
        assert partner[i] < 0 and partner[j] < 0, "overlapping lozenges"
        partner[i] = j
        partner[j] = i

    for path in family.paths:
        for (x1, y1), (x2, y2) in zip(path, path[1:]):
            bx, by = x1 - y1, y1
            if (x2, y2) == (x1 + 1, y1):
                place(index[(bx, by, UP)], index[(bx, by, DOWN)])
            elif (x2, y2) == (x1, y1 - 1):
                place(index[(bx, by, UP)], index[(bx, by - 1, DOWN)])
            else:
                raise ValueError("steps must be east or south")
    for i, (x, y, orient) in enumerate(region.cells):
        if orient == UP and partner[i] < 0:
            place(i, index[(x - 1, y, DOWN)])
    assert all(p >= 0 for p in partner), "paths do not determine a tiling"
    return Tiling.from_partner(region, partner)


def tiling_to_plane_partition(tiling: Tiling, region: Region) -> list[list[int]]:
    """For m = 0: the boxed plane partition as an a x b array of column
    heights bounded by c, weakly decreasing along rows and columns."""
    if region.m != 0:
        raise ValueError("plane partitions correspond to tilings with m = 0")
    family = tiling_to_paths(tiling, region)
    rows = []
    for path in family.paths:
        souths_after = 0
        heights = []
        for (x1, y1), (x2, y2) in zip(path, path[1:]):
            if y2 < y1:
                souths_after += 1
        # second pass: height of the k-th east step = south steps after it
        remaining = souths_after
        for (x1, y1), (x2, y2) in zip(path, path[1:]):
            if y2 < y1:
                remaining -= 1
            else:
                heights.append(remaining)
        rows.append(heights)
    rows.reverse()
    for row in rows:
        assert all(h1 >= h2 for h1, h2 in zip(row, row[1:]))
    for r1, r2 in zip(rows, rows[1:]):
        assert all(h1 >= h2 for h1, h2 in zip(r1, r2)), "rows must decrease"
    return rows


def plane_partition_size(heights: list[list[int]]) -> int:
    return sum(sum(row) for row in heights)


def plane_partition_diagonal_count(heights: list[list[int]]) -> int:
    """Number of cubes (i, i, i) on the main diagonal, 1-based."""
    count = 0
    for r in range(min(len(heights), len(heights[0]) if heights else 0)):
        if heights[r][r] >= r + 1:
            count += 1
    return count


def region_to_text(region: Region) -> str:
    h = region.hexagon
    lines = [f"region {h.a} {h.b} {h.c} {h.m} {h.placement}"]
    for x, y, orient in region.cells:
        lines.append(f"cell {x} {y} {'U' if orient == UP else 'D'}")
    return "\n".join(lines) + "\n"


def tiling_to_text(tiling: Tiling) -> str:
    lines = []
    for (x1, y1, o1), (x2, y2, o2) in tiling.pairs:
        lines.append(
            f"pair {x1} {y1} {'U' if o1 == UP else 'D'} "
            f"{x2} {y2} {'U' if o2 == UP else 'D'}"
        )
    return "\n".join(lines) + "\n"


def tiling_from_text(text: str) -> Tiling:
    pairs = []
    for line in text.strip().splitlines():
        parts = line.split()
        if not parts or parts[0] != "pair":
            continue
        x1, y1 = int(parts[1]), int(parts[2])
        o1 = UP if parts[3] == "U" else DOWN
        x2, y2 = int(parts[4]), int(parts[5])
        o2 = UP if parts[6] == "U" else DOWN
        pairs.append(((x1, y1, o1), (x2, y2, o2)))
    return Tiling(tuple(sorted(tuple(sorted(p)) for p in pairs)))
