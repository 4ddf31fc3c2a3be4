import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alcoves.arrangement import build, check_position, expected_alcoves
from alcoves.harmonic import (
    OutOfRangeK,
    ToleranceExceeded,
    class_sizes,
    class_split,
    classify_alcoves,
    generate,
    genus,
    line_patterns,
    rationalize,
    ring_index,
    ring_radius,
    ring_radius_mp,
    second_kind_lines,
    verify_rings,
)


def measured_ring(n, k):
    """Oracle: intersect the float lines directly and return every radius."""
    spec = generate(n, rational=False)
    radii = []
    for j in range(n):
        A = np.array([spec.lines[j][:2], spec.lines[(j + k) % n][:2]])
        b = -np.array([spec.lines[j][2], spec.lines[(j + k) % n][2]])
        radii.append(np.linalg.norm(np.linalg.solve(A, b)))
    return radii


def test_lines_pass_through_polygon_vertices():
    for n in (3, 5, 8):
        spec = generate(n)
        for j, (a, b, c) in enumerate(spec.lines):
            for v in (spec.vertices[j], spec.vertices[(j + 1) % n]):
                assert abs(a * v[0] + b * v[1] + c) < 1e-14
            assert math.isclose(math.hypot(a, b), 1.0)


def test_ring_radius_small_cases():
    assert ring_radius(3, 1) == pytest.approx(1.0, abs=1e-12)
    for n in range(3, 26, 2):
        assert abs(ring_radius(n, 1) - 1.0) < 1e-12
    golden = (1 + math.sqrt(5)) / 2
    assert ring_radius(5, 2) == pytest.approx(golden**2, abs=1e-12)


def test_ring_radius_matches_direct_intersection():
    for n, k in [(5, 2), (7, 2), (7, 3), (9, 4)]:
        radii = measured_ring(n, k)
        assert max(abs(r - ring_radius(n, k)) for r in radii) < 1e-12
    # value for n=7, k=3 from direct intersection
    assert ring_radius(7, 3) == pytest.approx(4.048917339522305, abs=1e-12)


def test_ring_radius_range():
    with pytest.raises(OutOfRangeK):
        ring_radius(7, 4)
    with pytest.raises(OutOfRangeK):
        ring_radius(7, 0)
    with pytest.raises(OutOfRangeK):
        ring_radius_mp(6, 3, 100)


def test_ring_radius_increases_in_k():
    for n in range(5, 26, 2):
        r = [ring_radius(n, k) for k in range(1, (n - 1) // 2 + 1)]
        assert all(a < b for a, b in zip(r, r[1:]))


def test_ring_radius_high_precision_agrees():
    with mpmath.workprec(200):
        assert abs(ring_radius_mp(11, 4, 200) - ring_radius(11, 4)) < 1e-13


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13, 25])
def test_verify_rings_double(n):
    reports = verify_rings(generate(n), tol=1e-9)
    assert len(reports) == (n - 1) // 2
    assert all(r.passed and r.radius_error < 1e-9 and r.angle_error < 1e-9 for r in reports)


def test_verify_rings_high_precision():
    reports = verify_rings(generate(9, precision=200))
    assert max(max(r.radius_error, r.angle_error) for r in reports) < 1e-50


@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_n_has_parallel_pairs(n):
    spec = generate(n)
    assert len(spec.parallel_pairs) == n // 2
    inf = [r for r in verify_rings(spec) if r.at_infinity]
    assert len(inf) == 1 and inf[0].passed and inf[0].k == n // 2
    rep = check_position(spec.rationalized_lines)
    assert len(rep.parallel_pairs) == n // 2


def test_tolerance_exceeded_is_raised():
    spec = generate(7)
    spec.lines[0, 2] += 1e-6
    with pytest.raises(ToleranceExceeded) as info:
        verify_rings(spec, tol=1e-9)
    assert info.value.worst["radius_error"] > 1e-9
    assert not all(r.passed for r in verify_rings(spec, tol=1e-9, raise_on_failure=False))


def test_rationalized_lines_are_in_bounded_general_position():
    for n in range(3, 26, 2):
        assert check_position(rationalize(n)).ok


def test_ring_index():
    assert ring_index(7, 0, 1) == 1
    assert ring_index(7, 0, 6) == 1
    assert ring_index(7, 2, 5) == 3
    assert ring_index(8, 1, 5) == 4


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13, 15])
def test_classification_counts(n):
    spec = generate(n)
    arr = build(spec.rationalized_lines)
    c = classify_alcoves(spec, arr)
    assert c.total == len(arr.alcoves) == expected_alcoves(n)
    assert (1, len(c.first_kind), sum(len(v) for v in c.second_kind.values())) == class_sizes(n)
    assert c.central.size == n
    assert all(a.size == 3 for a in c.first_kind.values())
    assert all(a.size == 4 for layer in c.second_kind.values() for a in layer.values())


def test_second_kind_ring_contacts():
    c = classify_alcoves(generate(11))
    for j, layer in c.second_kind.items():
        for a in layer.values():
            assert sorted(c.ring_contacts[a.face]) == [j, j + 1, j + 1, j + 2]
    for a in c.first_kind.values():
        assert sorted(c.ring_contacts[a.face]) == [1, 1, 2]


def test_patterns_are_distinct():
    for n in range(5, 26, 2):
        pats = line_patterns(n)
        assert len(pats) == n + n * (n - 5) // 2


def test_class_split_and_genus():
    for n in range(5, 16, 2):
        cs = class_split(n)
        assert cs.m == n * (n - 1) == cs.central_share + cs.first_share + cs.second_share
        assert tuple(cs) == (n * (n - 1), 2 * n, 2 * n, n * (n - 5))
    assert genus(4) == 3 and genus(3) == 1
    with pytest.raises(ValueError):
        class_split(6)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12).map(lambda m: 2 * m + 1), st.data())
def test_ring_property(n, data):
    k = data.draw(st.integers(1, (n - 1) // 2))
    radii = measured_ring(n, k)
    assert max(abs(r - ring_radius(n, k)) for r in radii) < 1e-9


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 10), st.integers(0, 20))
def test_second_kind_pattern_has_four_lines(j, i):
    n = 2 * j + 7
    assert len(second_kind_lines(n, i, j)) == 4
