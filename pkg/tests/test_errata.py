"""Each ERRATA.md entry: the verbatim reading fails, the adopted one passes."""

from pathlib import Path

from gridseq import schemes, transforms as tr
from gridseq.pairing import half_round_sqrt
from gridseq.schemes import parse_scheme, tiling_scheme
from gridseq.sources import euler_phi, identity, primes
from support import (
    PHI_SELF_COMPOSE_TERMS,
    PRIME_DOUBLING_TERMS,
    SUPERPOSE_FIRST6,
    SUPERPOSE_PUBLISHED21,
    f_segment,
)

ERRATA = Path(__file__).resolve().parent.parent / "ERRATA.md"


def test_errata_file_lists_the_corrections():
    text = ERRATA.read_text()
    assert "floor(sqrt(n) + 1/2)" in text  # the shell-index correction
    assert "Self-composition" in text  # the two-readings conflict
    assert "doubling" in text


def printed_segment_shift_angle_index(k, n):
    # the verbatim closed form, with the spurious trailing +1 on t
    t = half_round_sqrt(n) + 1
    v = (n - 1) // t - t + 1
    return k * v + (2 * v - 1) * (t * t - n) + t


def test_segment_shift_angle_printed_t_fails(angle_cells_10k):
    cells = angle_cells_10k[:200]
    ground_truth = [f_segment(i, j, 2) for i, j in cells]
    printed = [printed_segment_shift_angle_index(2, n) for n in range(1, 201)]
    assert printed != ground_truth  # verbatim reading contradicts the array fill
    adopted = [tr.segment_shift_angle_index(2, n) for n in range(1, 201)]
    assert adopted == ground_truth


def test_half_round_sqrt_is_exact():
    # t is the integer nearest to sqrt(n), half-way cases rounding down
    for n in range(1, 20_000):
        t = half_round_sqrt(n)
        assert (2 * t - 1) ** 2 <= 4 * n < (2 * t + 1) ** 2


def test_linear_convention_fails_prime_terms():
    p = primes()
    linear = [tr.self_compose(p, n, "linear") for n in range(1, 11)]
    assert linear != PRIME_DOUBLING_TERMS
    assert linear[3] == 5  # the three-fold iterate of 1, per the defining text


def test_doubling_convention_reproduces_prime_terms():
    p = primes()
    assert [tr.self_compose(p, n, "doubling") for n in range(1, 11)] == PRIME_DOUBLING_TERMS


def test_linear_convention_matches_totient_terms():
    phi = euler_phi()
    assert [tr.self_compose(phi, n, "linear") for n in range(1, 22)] == PHI_SELF_COMPOSE_TERMS


def test_superpose_published_listing_drifts():
    inner = tiling_scheme("const:3x2", "row")
    outer = parse_scheme("center-out")
    ident = identity()
    computed = [tr.superpose(ident, inner, outer, n) for n in range(1, 22)]
    assert computed[:6] == SUPERPOSE_FIRST6 == SUPERPOSE_PUBLISHED21[:6]
    assert computed != SUPERPOSE_PUBLISHED21  # drift beyond the fixed prefix
    # the composition contract is the definition for every position
    for n in range(1, 22):
        cell = schemes.decode(outer, n)
        assert computed[n - 1] == schemes.encode(inner, *cell)
