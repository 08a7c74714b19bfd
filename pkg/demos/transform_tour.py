"""Tour of the sequence transformations.

Builds each family from small sources, prints its first terms, and
cross-checks a few against the shipped OEIS reference data.
"""

from gridseq import oeis, transforms as tr
from gridseq.sources import euler_phi, geometric, identity, primes
from gridseq.transforms import TransformSpec, generate_prefix


def show(label, values):
    print(f"{label:38s} {' '.join(str(v) for v in values)}")


def main():
    ident = identity()
    print("replication of a single sequence (source indices shown):")
    show("  reluctant", generate_prefix(TransformSpec("reluctant"), ident, 15))
    show("  reverse reluctant", generate_prefix(TransformSpec("reverse-reluctant"), ident, 15))
    show("  double reluctant", generate_prefix(TransformSpec("double-reluctant"), ident, 15))

    print("\nself-composition (column j composes the source j times):")
    show("  totient iterates", generate_prefix(TransformSpec("self-compose"), euler_phi(), 15))
    show("  prime iterates, doubling reading",
         generate_prefix(TransformSpec("self-compose", convention="doubling"), primes(), 10))

    print("\nshift families acting on the source index:")
    for family in ("shifted-columns", "max-shift", "segment-shift"):
        show(f"  {family} k=2", generate_prefix(TransformSpec(family, k=2), ident, 15))

    print("\npairs of sequences:")
    show("  2^i * 3^j", generate_prefix(TransformSpec("pair", combiner="product"),
                                        [geometric(2), geometric(3)], 10))
    show("  digit tuples, depth 3", generate_prefix(TransformSpec("eta", d=3), None, 10))

    print("\nthree interleaved sequences (naturals, primes, totient):")
    trio = [identity(), primes(), euler_phi()]
    for family in ("multi-replicate", "braid", "segment-braid"):
        show(f"  {family}", generate_prefix(TransformSpec(family), trio, 15))

    print("\nreference checks against the shipped b-files:")
    for family, k, anum in (("shifted-columns", 2, "A128076"),
                            ("max-shift", 2, "A204004"),
                            ("segment-shift", 2, "A143182"),
                            ("segment-shift-angle", 1, "A004739")):
        terms = generate_prefix(TransformSpec(family, k=k), ident, 100)
        report = oeis.compare_prefix(terms, oeis.load_fixture(anum), 100, anum=anum)
        print(f"  {family} k={k}: {report}")


if __name__ == "__main__":
    main()
