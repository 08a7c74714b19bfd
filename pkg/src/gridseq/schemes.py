"""Enumeration scheme descriptors and the encode/decode dispatch over them.

A :class:`Scheme` names one bijection between grid cells and positions:
one of the eight closed-form enumerations, or a rectangle tiling with an
inner numbering order.  ``cantor0`` is the zero-based classic and works on
pairs (x, y) >= 0; every other scheme works on 1-based cells.
"""

from dataclasses import dataclass
from math import isqrt

from . import pairing, tiling
from .pairing import Cell
from .tiling import TilingSpec

SIMPLE_KINDS = (
    "cantor",
    "cantor0",
    "boustrophedon",
    "center-out",
    "edges-in",
    "alternating",
    "angle",
    "oxplow",
)

_ENCODERS = {
    "cantor": pairing.cantor_encode,
    "cantor0": pairing.cantor_z,
    "boustrophedon": pairing.boustrophedon_encode,
    "center-out": pairing.center_out_encode,
    "edges-in": pairing.edges_in_encode,
    "alternating": pairing.alternating_encode,
    "angle": pairing.angle_encode,
    "oxplow": pairing.oxplow_encode,
}

_CLOSED_DECODERS = {
    "cantor": pairing.cantor_decode,
    "cantor0": pairing.cantor_z_decode,
    "angle": pairing.angle_decode,
    "oxplow": pairing.oxplow_decode,
}


@dataclass(frozen=True)
class Scheme:
    kind: str
    tiling: TilingSpec | None = None
    order: str = "row"

    def __post_init__(self):
        if self.kind == "tiling":
            if self.tiling is None:
                raise ValueError("tiling scheme needs a TilingSpec")
            object.__setattr__(self, "order", tiling.canonical_order(self.order))
        elif self.kind not in SIMPLE_KINDS:
            raise ValueError(f"unknown scheme kind {self.kind!r}")

    def text(self) -> str:
        if self.kind == "tiling":
            return f"tiling:{self.tiling.text()}:{self.order}"
        return self.kind

    def __str__(self):
        return self.text()


CANTOR = Scheme("cantor")


def tiling_scheme(spec: TilingSpec | str, order: str = "row") -> Scheme:
    if isinstance(spec, str):
        spec = tiling.parse_tiling_spec(spec)
    return Scheme("tiling", spec, order)


def parse_scheme(text: str) -> Scheme:
    """Parse a scheme name, e.g. ``angle`` or ``tiling:const:3x2:row``."""
    if text in SIMPLE_KINDS:
        return Scheme(text)
    if text.startswith("tiling:"):
        body, sep, order = text.removeprefix("tiling:").rpartition(":")
        if not sep:
            raise ValueError(f"bad tiling scheme {text!r}: expected tiling:<spec>:<order>")
        return tiling_scheme(body, order)
    raise ValueError(
        f"unknown scheme {text!r}; expected one of {', '.join(SIMPLE_KINDS)} "
        "or tiling:<spec>:<order>"
    )


def first_index(scheme: Scheme) -> int:
    """Position of the first cell: 0 for the zero-based classic, else 1."""
    return 0 if scheme.kind == "cantor0" else 1


def encode(scheme: Scheme, i: int, j: int) -> int:
    """Position of cell (i, j) under the scheme."""
    if scheme.kind == "tiling":
        if scheme.order == "row":
            return tiling.rect_encode_rowwise(i, j, scheme.tiling)
        if scheme.order == "col":
            return tiling.rect_encode_colwise(i, j, scheme.tiling)
        return tiling.rect_encode_parity(
            i, j, scheme.tiling, by=scheme.order.removeprefix("parity-")
        )
    return _ENCODERS[scheme.kind](i, j)


def decode(scheme: Scheme, n: int) -> Cell:
    """Cell at position n: closed form where one exists, else bounded block search."""
    if scheme.kind == "tiling":
        return tiling.rect_decode(n, scheme.tiling, scheme.order)
    closed = _CLOSED_DECODERS.get(scheme.kind)
    if closed is not None:
        return closed(n)
    return decode_by_search(scheme, n)


def _block_cells(scheme: Scheme, n: int):
    """Cells of the one diagonal/shell/tile that must contain position n."""
    if scheme.kind == "cantor0":
        s = (isqrt(8 * n + 1) - 1) // 2
        return [(x, s - x) for x in range(s + 1)]
    if scheme.kind in ("angle", "oxplow"):
        s = pairing.shell_index(n)
        return [(i, s) for i in range(1, s + 1)] + [(s, j) for j in range(s - 1, 0, -1)]
    if scheme.kind == "tiling":
        spec = scheme.tiling
        d = 0
        while spec.diag_cells(d) < n:
            d += 1
        base = spec.diag_cells(d - 1) if d else 0
        for R in range(d + 1):
            S = d - R
            size = spec.height(R + 1) * spec.length(S + 1)
            if base + size >= n:
                i0, j0 = spec.hsum(R), spec.lsum(S)
                return [
                    (i0 + a, j0 + b)
                    for a in range(1, spec.height(R + 1) + 1)
                    for b in range(1, spec.length(S + 1) + 1)
                ]
            base += size
        raise AssertionError("unreachable: diagonal walk missed its own count")
    d = pairing.diagonal_index(n) + 1
    return [(r, d + 1 - r) for r in range(1, d + 1)]


def decode_by_search(scheme: Scheme, n: int) -> Cell:
    """Invert encode by scanning only the block that must contain position n."""
    if n < first_index(scheme):
        raise ValueError(f"position must be >= {first_index(scheme)}, got {n}")
    if scheme.kind != "cantor0":
        pairing._check_index(n)
    for cell in _block_cells(scheme, n):
        if encode(scheme, *cell) == n:
            return cell
    raise AssertionError(f"no cell in the containing block encodes to {n} under {scheme}")
