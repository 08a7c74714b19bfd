"""Tour of the grid enumeration schemes.

Prints the top-left corner of the grid as each scheme numbers it, and
checks every closed form against the geometric walk while doing so.
"""

from gridseq import oracle
from gridseq.schemes import SIMPLE_KINDS, Scheme, encode, first_index


def corner(scheme, size=6):
    width = len(str(encode(scheme, size, size) + 2 * size))
    for i in range(1, size + 1):
        print("   " + " ".join(f"{encode(scheme, i, j):{width}d}" for j in range(1, size + 1)))


def main():
    for kind in SIMPLE_KINDS:
        scheme = Scheme(kind)
        report = oracle.verify_scheme(scheme, 5_000)
        status = "agrees with the geometric walk" if report.ok else f"BROKEN: {report}"
        print(f"{kind}  ({status})")
        if kind == "cantor0":
            print("   zero-based classic; cell (0, 0) gets position 0")
            continue
        corner(scheme)
        print()

    print("positions 1..12 of each scheme, as cells:")
    for kind in SIMPLE_KINDS:
        scheme = Scheme(kind)
        cells = oracle.traverse(scheme, 12)
        base = first_index(scheme)
        shown = " ".join(f"{i},{j}" for i, j in cells)
        print(f"   {kind:14s} n={base}..{base + 11}: {shown}")


if __name__ == "__main__":
    main()
