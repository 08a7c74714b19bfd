#!/usr/bin/env python3
"""Generate the offline OEIS reference fixtures shipped with gridseq.

Every fixture is built here from its catalog definition using standalone
code (sympy for primes and the totient, direct geometric walks for the
grid permutations) and never by importing gridseq, so the fixtures remain
an independent route against which the library's closed forms are tested.

Orientation pins: a few catalog entries come in transposed pairs that
describe the same enumeration read two ways.  This sandbox has no network
access, so within each pair the assignment below pins the first-cited
A-number to the row reading used by the library and the second to its
transpose; the pin is data in PINNED_GRIDS and trivially swappable should
live reference data say otherwise.
"""

from pathlib import Path

import sympy

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "gridseq" / "oeis_fixtures"
TERMS = 153  # 17 complete anti-diagonals


# -- triangles read by rows ----------------------------------------------------

def rows_ascending(r):
    return list(range(1, r + 1))


def rows_descending(r):
    return list(range(r, 0, -1))


def rows_repeat(r):
    return [r] * r


def rows_two_n_minus_k(r):
    return [2 * r - p for p in range(1, r + 1)]


def rows_three_n_minus_two_k(r):
    return [3 * r - 2 * p for p in range(1, r + 1)]


def rows_palindrome_step2(r):
    desc = list(range(r, 0, -2))
    asc = list(reversed(desc))
    return desc + (asc[1:] if r % 2 else asc)


def read_rows(row_fn, terms):
    out = []
    r = 1
    while len(out) < terms:
        out.extend(row_fn(r))
        r += 1
    return out[:terms]


# -- V-shaped groups (square shells of the angle order) -------------------------

def vee_descend_to_one(s):
    # s, s-1, ..., 2, 1, 2, ..., s  (2s-1 terms)
    return list(range(s, 0, -1)) + list(range(2, s + 1))


def vee_double_one(s):
    # s-1, ..., 2, 1, 1, 2, ..., s  (2s-1 terms)
    return list(range(s - 1, 0, -1)) + list(range(1, s + 1))


# -- grid walks, positions assigned geometrically --------------------------------

def place_diagonals(diagonals, reverse_when):
    """Walk anti-diagonals, reversing a diagonal when reverse_when(d) says so."""
    placed = {}
    n = 1
    for d in range(1, diagonals + 1):
        cells = [(r, d + 1 - r) for r in range(1, d + 1)]
        if reverse_when(d):
            cells.reverse()
        for cell in cells:
            placed[cell] = n
            n += 1
    return placed


def place_edges_in(diagonals):
    placed = {}
    n = 1
    for d in range(1, diagonals + 1):
        for m in range((d + 1) // 2):
            placed[(1 + m, d - m)] = n
            n += 1
            if d - m != 1 + m:
                placed[(d - m, 1 + m)] = n
                n += 1
    return placed


def place_angle(shells):
    placed = {}
    n = 1
    for s in range(1, shells + 1):
        for i in range(1, s + 1):
            placed[(i, s)] = n
            n += 1
        for j in range(s - 1, 0, -1):
            placed[(s, j)] = n
            n += 1
    return placed


def place_oxplow(shells):
    placed = {}
    n = 1
    for s in range(1, shells + 1):
        if s % 2:
            walk = [(s, j) for j in range(1, s + 1)] + [(i, s) for i in range(s - 1, 0, -1)]
        else:
            walk = [(i, s) for i in range(1, s + 1)] + [(s, j) for j in range(s - 1, 0, -1)]
        for cell in walk:
            placed[cell] = n
            n += 1
    return placed


def read_antidiagonals(value_at, terms):
    out = []
    d = 1
    while len(out) < terms:
        out.extend(value_at(r, d + 1 - r) for r in range(1, d + 1))
        d += 1
    return out[:terms]


def grid_sequence(placed, terms, transpose=False):
    if transpose:
        return read_antidiagonals(lambda i, j: placed[(j, i)], terms)
    return read_antidiagonals(lambda i, j: placed[(i, j)], terms)


DIAGS = 17  # enough placed diagonals/shells to read 17 anti-diagonals back out

_bous = place_diagonals(DIAGS, lambda d: (d + 1) % 2 == 0)
_edges = place_edges_in(DIAGS)
_angle = place_angle(DIAGS)
_oxplow = place_oxplow(DIAGS)

#: (A-number of the row reading, A-number of the transposed reading, placement)
PINNED_GRIDS = (
    ("A056011", "A056023", _bous, "anti-diagonals walked alternately in the two directions"),
    ("A064578", "A194982", _edges, "anti-diagonals walked from both edges in to the centre"),
    ("A060734", "A060736", _angle, "square shells walked down the last column then back along the last row"),
)


def concat_eta2(terms):
    out = []
    d = 1
    while len(out) < terms:
        out.extend(int(f"{r}{d + 1 - r}") for r in range(1, d + 1))
        d += 1
    return out[:terms]


def kimberling_max(k, terms):
    return read_antidiagonals(lambda i, j: max(k * i + j - k, i + k * j - k), terms)


def build_all():
    seqs = {}
    seqs["A000010"] = ("Euler's totient function", [sympy.totient(n) for n in range(1, TERMS + 1)])
    seqs["A000040"] = ("the prime numbers", [sympy.prime(n) for n in range(1, TERMS + 1)])
    seqs["A006450"] = ("primes with prime indices: prime(prime(n))",
                       [sympy.prime(sympy.prime(n)) for n in range(1, 140)])
    seqs["A010554"] = ("totient iterated twice", [sympy.totient(sympy.totient(n)) for n in range(1, TERMS + 1)])
    phi3 = lambda n: sympy.totient(sympy.totient(sympy.totient(n)))
    seqs["A049099"] = ("totient iterated three times", [phi3(n) for n in range(1, TERMS + 1)])
    seqs["A049100"] = ("totient iterated four times", [sympy.totient(phi3(n)) for n in range(1, TERMS + 1)])

    seqs["A002024"] = ("n appears n times", read_rows(rows_repeat, TERMS))
    seqs["A002260"] = ("triangle read by rows: row r lists 1..r", read_rows(rows_ascending, TERMS))
    seqs["A004736"] = ("triangle read by rows: row r lists r..1", read_rows(rows_descending, TERMS))
    seqs["A128076"] = ("triangle read by rows: T(r, p) = 2r - p", read_rows(rows_two_n_minus_k, TERMS))
    seqs["A131914"] = ("triangle read by rows: T(r, p) = 3r - 2p", read_rows(rows_three_n_minus_two_k, TERMS))
    seqs["A143182"] = ("triangle read by rows: row r steps down r, r-2, ... and back up",
                       read_rows(rows_palindrome_step2, TERMS))
    seqs["A204004"] = ("max(2i+j-2, i+2j-2) read by anti-diagonals", kimberling_max(2, TERMS))
    seqs["A204008"] = ("max(3i+j-3, i+3j-3) read by anti-diagonals", kimberling_max(3, TERMS))

    seqs["A004738"] = ("concatenation of s, s-1, ..., 2, 1, 2, ..., s for s = 1, 2, ...",
                       read_rows(vee_descend_to_one, TERMS))
    seqs["A004739"] = ("concatenation of s-1, ..., 2, 1, 1, 2, ..., s for s = 1, 2, ...",
                       read_rows(vee_double_one, TERMS))
    seqs["A066686"] = ("decimal concatenation of row and column index, by anti-diagonals",
                       concat_eta2(TERMS))
    seqs["A081344"] = ("boustrophedon square-shell placement of the naturals, read by anti-diagonals",
                       grid_sequence(_oxplow, TERMS))

    for row_anum, transposed_anum, placed, what in PINNED_GRIDS:
        seqs[row_anum] = (f"{what}, read by anti-diagonals (pinned orientation)",
                          grid_sequence(placed, TERMS))
        seqs[transposed_anum] = (f"{what}, transposed reading (pinned orientation)",
                                 grid_sequence(placed, TERMS, transpose=True))
    return seqs


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for anum, (definition, values) in sorted(build_all().items()):
        lines = [f"# {anum} offline reference data: {definition}",
                 "# generated by tools/make_oeis_fixtures.py (no network in this environment)"]
        lines += [f"{n} {int(v)}" for n, v in enumerate(values, 1)]
        path = OUT_DIR / f"b{anum[1:]}.txt"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path.name}: {len(values)} terms")


if __name__ == "__main__":
    main()
