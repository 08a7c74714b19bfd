"""Grid enumeration generalised to covers by variable-size rectangles.

The grid is covered by rectangle tiles: tile column s has width
``lengths[s]``, tile row r has height ``heights[r]``.  Tiles are numbered
along tile anti-diagonals exactly like cells are in the classical order,
and the cells inside each tile are numbered row by row, column by column,
or by one of two parity-alternating mixes of the two.

Tile side rules are finite descriptions (constant, explicit list, linear
ramp) so a cover can be written down, parsed back, and reproduced.  Prefix
sums of the side rules are memoised on the spec instance; the memo is
append-only but not locked, so share a spec across threads only for
reading after warm-up, or confine it to one thread.
"""

from bisect import bisect_left
from dataclasses import dataclass

from .pairing import Cell, cantor_z, _check_cell, _check_index

ORDERS = ("row", "col", "parity-diag", "parity-tile")
_ORDER_ALIASES = {"parity": "parity-diag", "column": "col"}


class SpecExhaustedError(Exception):
    """An explicit side-rule list ended before covering the requested cell."""


def canonical_order(order: str) -> str:
    order = _ORDER_ALIASES.get(order, order)
    if order not in ORDERS:
        raise ValueError(f"unknown inner order {order!r}, expected one of {ORDERS}")
    return order


@dataclass(frozen=True)
class SideRule:
    """Rule producing the m-th tile side (1-based): const c, explicit list, or a + b*(m-1)."""

    kind: str  # "const" | "list" | "ramp"
    const: int = 0
    values: tuple[int, ...] = ()
    start: int = 0
    step: int = 0

    def __post_init__(self):
        if self.kind == "const":
            if self.const < 1:
                raise ValueError("constant tile side must be >= 1")
        elif self.kind == "list":
            if not self.values or any(v < 1 for v in self.values):
                raise ValueError("tile side list must be non-empty with sides >= 1")
        elif self.kind == "ramp":
            if self.start < 1 or self.step < 0:
                raise ValueError("ramp must start >= 1 with a non-negative step")
        else:
            raise ValueError(f"unknown side rule kind {self.kind!r}")

    def side(self, m: int) -> int:
        if m < 1:
            raise ValueError("tile side index is 1-based")
        if self.kind == "const":
            return self.const
        if self.kind == "ramp":
            return self.start + self.step * (m - 1)
        if m > len(self.values):
            raise SpecExhaustedError(
                f"side list has {len(self.values)} entries, needed entry {m}"
            )
        return self.values[m - 1]

    def text(self) -> str:
        if self.kind == "const":
            return str(self.const)
        if self.kind == "ramp":
            return f"{self.start}+{self.step}"
        return ",".join(str(v) for v in self.values)


def const_rule(c: int) -> SideRule:
    return SideRule("const", const=c)


def list_rule(values) -> SideRule:
    return SideRule("list", values=tuple(values))


def ramp_rule(start: int, step: int = 1) -> SideRule:
    return SideRule("ramp", start=start, step=step)


class TilingSpec:
    """A rectangle cover: a lengths rule (along columns) and a heights rule (along rows)."""

    def __init__(self, lengths: SideRule, heights: SideRule):
        self.lengths = lengths
        self.heights = heights
        self._lsum = [0]  # _lsum[m] = l_1 + ... + l_m
        self._hsum = [0]
        self._diag_cum = []  # cells in tile diagonals 0..d, for decoding

    def __eq__(self, other):
        return (
            isinstance(other, TilingSpec)
            and self.lengths == other.lengths
            and self.heights == other.heights
        )

    def __hash__(self):
        return hash((self.lengths, self.heights))

    def __repr__(self):
        return f"TilingSpec({self.text()!r})"

    def text(self) -> str:
        kind = self.lengths.kind
        if kind == self.heights.kind:
            return f"{kind}:{self.lengths.text()}x{self.heights.text()}"
        return f"lengths[{self.lengths.kind}:{self.lengths.text()}]xheights[{self.heights.kind}:{self.heights.text()}]"

    def length(self, m: int) -> int:
        return self.lengths.side(m)

    def height(self, m: int) -> int:
        return self.heights.side(m)

    def lsum(self, m: int) -> int:
        """l_1 + ... + l_m (0 for m = 0)."""
        while len(self._lsum) <= m:
            self._lsum.append(self._lsum[-1] + self.lengths.side(len(self._lsum)))
        return self._lsum[m]

    def hsum(self, m: int) -> int:
        while len(self._hsum) <= m:
            self._hsum.append(self._hsum[-1] + self.heights.side(len(self._hsum)))
        return self._hsum[m]

    def _grow_lsum_past(self, j: int) -> None:
        while self._lsum[-1] < j:
            self.lsum(len(self._lsum))

    def _grow_hsum_past(self, i: int) -> None:
        while self._hsum[-1] < i:
            self.hsum(len(self._hsum))

    def diag_cells(self, d: int) -> int:
        """Total cells in tile anti-diagonals 0..d."""
        while len(self._diag_cum) <= d:
            e = len(self._diag_cum)
            cells = sum(self.height(r + 1) * self.length(e - r + 1) for r in range(e + 1))
            prev = self._diag_cum[-1] if self._diag_cum else 0
            self._diag_cum.append(prev + cells)
        return self._diag_cum[d]


def parse_tiling_spec(text: str) -> TilingSpec:
    """Parse ``const:<l>x<h>``, ``list:<l1,...>x<h1,...>`` or ``ramp:<a>+<b>x<a>+<b>``."""
    kind, sep, body = text.partition(":")
    if not sep or kind not in ("const", "list", "ramp"):
        raise ValueError(f"bad tiling spec {text!r}")
    left, sep, right = body.partition("x")
    if not sep:
        raise ValueError(f"bad tiling spec {text!r}: expected <lengths>x<heights>")
    try:
        if kind == "const":
            return TilingSpec(const_rule(int(left)), const_rule(int(right)))
        if kind == "list":
            return TilingSpec(
                list_rule(int(v) for v in left.split(",")),
                list_rule(int(v) for v in right.split(",")),
            )
        la, _, lb = left.partition("+")
        ha, _, hb = right.partition("+")
        return TilingSpec(
            ramp_rule(int(la), int(lb or 1)), ramp_rule(int(ha), int(hb or 1))
        )
    except ValueError as exc:
        raise ValueError(f"bad tiling spec {text!r}: {exc}") from None


def locate_tile(i: int, j: int, spec: TilingSpec) -> tuple[int, int]:
    """(R, S): whole tile rows above and whole tile columns left of cell (i, j)."""
    _check_cell(i, j)
    spec._grow_hsum_past(i)
    spec._grow_lsum_past(j)
    return bisect_left(spec._hsum, i) - 1, bisect_left(spec._lsum, j) - 1


def _staircase_cells(spec: TilingSpec, d: int) -> int:
    # cells in the stair-step triangle of tiles strictly before diagonal d
    return sum(spec.height(r) * spec.lsum(d + 1 - r) for r in range(1, d + 1))


def _tiles_above(spec: TilingSpec, R: int, S: int) -> int:
    # cells in the R tiles above (R, S) on its own tile diagonal
    d = R + S
    return sum(spec.height(r) * spec.length(d + 2 - r) for r in range(1, R + 1))


def _row_offset(spec: TilingSpec, R: int, S: int, i: int, j: int) -> int:
    return spec.length(S + 1) * (i - spec.hsum(R) - 1) + j - spec.lsum(S)


def _col_offset(spec: TilingSpec, R: int, S: int, i: int, j: int) -> int:
    return spec.height(R + 1) * (j - spec.lsum(S) - 1) + i - spec.hsum(R)


def _parity(spec: TilingSpec, R: int, S: int, by: str) -> int:
    if by not in ("diag", "tile"):
        raise ValueError(f"parity source must be 'diag' or 'tile', got {by!r}")
    t = R + S if by == "diag" else cantor_z(R, S)
    return t % 2


def rect_encode_rowwise(i: int, j: int, spec: TilingSpec) -> int:
    """Tiled position with row-by-row numbering inside every tile."""
    R, S = locate_tile(i, j, spec)
    return _staircase_cells(spec, R + S) + _tiles_above(spec, R, S) + _row_offset(spec, R, S, i, j)


def rect_encode_colwise(i: int, j: int, spec: TilingSpec) -> int:
    """Tiled position with column-by-column numbering inside every tile."""
    R, S = locate_tile(i, j, spec)
    return _staircase_cells(spec, R + S) + _tiles_above(spec, R, S) + _col_offset(spec, R, S, i, j)


def rect_encode_parity(i: int, j: int, spec: TilingSpec, by: str = "diag") -> int:
    """Tiled position numbering tiles row-wise or column-wise by parity.

    ``by="diag"`` keys the parity to the tile diagonal R+S; ``by="tile"``
    keys it to the tile's zero-based number in the tile enumeration.  Even
    parity numbers row by row, odd column by column.
    """
    R, S = locate_tile(i, j, spec)
    head = _staircase_cells(spec, R + S) + _tiles_above(spec, R, S)
    if _parity(spec, R, S, by):
        return head + _col_offset(spec, R, S, i, j)
    return head + _row_offset(spec, R, S, i, j)


def rect_encode_const(i: int, j: int, l: int, h: int) -> int:
    """Fast path for constant l x h tiles, row-wise inside.

    n = (l*h/2)*((R+S)^2 + 3R + S) + l*(i - h*R - S - 1) + j
    with R = (i-1)//h, S = (j-1)//l.
    """
    _check_cell(i, j)
    if l < 1 or h < 1:
        raise ValueError("tile sides must be >= 1")
    R = (i - 1) // h
    S = (j - 1) // l
    return l * h * ((R + S) ** 2 + 3 * R + S) // 2 + l * (i - h * R - S - 1) + j


def rect_decode(n: int, spec: TilingSpec, order: str = "row") -> Cell:
    """Cell at position n: walk tile diagonals to the tile, then index inside it."""
    _check_index(n)
    order = canonical_order(order)
    d = 0
    while spec.diag_cells(d) < n:
        d += 1
    base = spec.diag_cells(d - 1) if d else 0
    for R in range(d + 1):
        S = d - R
        size = spec.height(R + 1) * spec.length(S + 1)
        if base + size >= n:
            q = n - base - 1  # 0-based offset inside the tile
            colwise = order == "col" or (
                order.startswith("parity") and _parity(spec, R, S, order.removeprefix("parity-"))
            )
            if colwise:
                i = spec.hsum(R) + 1 + q % spec.height(R + 1)
                j = spec.lsum(S) + 1 + q // spec.height(R + 1)
            else:
                i = spec.hsum(R) + 1 + q // spec.length(S + 1)
                j = spec.lsum(S) + 1 + q % spec.length(S + 1)
            return i, j
        base += size
    raise AssertionError("unreachable: diagonal walk missed its own count")
