import math
import warnings

import mpmath
import pytest
import scipy.special as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from ultrabessel.phase import h
from ultrabessel.specfun import target
from ultrabessel.zeros import (
    TangencyWarning,
    ZeroQuery,
    count_zeros,
    find_zero,
    index_offset,
    offset_rule,
    one_term_check,
    sign_changes,
    zero,
)


def test_query_validation():
    with pytest.raises(ValueError):
        ZeroQuery("a", 0, 0, 0)
    with pytest.raises(ValueError):
        ZeroQuery("a", -1, 0, 1)
    with pytest.raises(ValueError):
        ZeroQuery("a", 0, 0, 1, tol=1e-15)
    with pytest.raises(ValueError):
        ZeroQuery("q", 0, 0, 1)
    assert ZeroQuery("b", 0, 0, 1).kind == "BZero"


def test_first_zeros():
    assert zero("a", 0, 0, 1) == pytest.approx(3.8317059702, abs=1e-9)
    assert zero("b", 0, 0, 1) == pytest.approx(2.1971413260, abs=1e-9)
    assert zero("a", 0.5, 0.5, 1) == pytest.approx(4.4934094579, abs=1e-9)


def test_j_prime_zeros_match_scipy():
    for nu in (0, 1, 2, 5):
        ref = sp.jnp_zeros(nu, 30)
        got = [zero("a", nu, 0, k) for k in range(1, 31)]
        assert max(abs(a - b) for a, b in zip(got, ref)) < 1e-10
        refy = sp.ynp_zeros(nu, 30)
        goty = [zero("b", nu, 0, k) for k in range(1, 31)]
        assert max(abs(a - b) for a, b in zip(goty, refy)) < 1e-10


MATRIX = [(0, 0), (0.5, 0.5), (1, -1), (2.5, 2), (3.7, -1), (3.7, 0.5), (30, 1), (60, -2)]


@pytest.mark.parametrize("nu,delta", MATRIX)
@pytest.mark.parametrize("kind", ["AZero", "BZero"])
def test_result_invariants(kind, nu, delta):
    for k in (1, 2, 5, 12, 40, 150):
        r = find_zero(ZeroQuery(kind, nu, delta, k))
        assert r.bracket.lo < r.value < r.bracket.hi or r.value in (r.bracket.lo, r.bracket.hi)
        flo = target(kind, nu, delta, r.bracket.lo)[0]
        fhi = target(kind, nu, delta, r.bracket.hi)[0]
        assert flo * fhi < 0
        eps = 1e-9 * r.value
        assert target(kind, nu, delta, r.value - eps)[0] * target(kind, nu, delta, r.value + eps)[0] < 0
        assert r.residual <= 1e-14 * r.scale
        assert r.positive_index == k


@pytest.mark.parametrize("nu,delta", MATRIX)
@pytest.mark.parametrize("kind", ["AZero", "BZero"])
def test_index_consistency(kind, nu, delta):
    for k in (1, 3, 11, 25, 60):
        r = find_zero(ZeroQuery(kind, nu, delta, k, certify=True))
        assert count_zeros(kind, nu, delta, r.value + 1e-6) == k
        assert r.index_certified


@pytest.mark.parametrize("kind", ["AZero", "BZero"])
def test_zeros_increase(kind):
    vals = [zero(kind, 3.7, 1.5, k) for k in range(1, 80)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_paper_indexing_shift():
    # x = 0 is counted as the first zero of j' when delta >= nu
    assert index_offset("a", 0, 0) == -1
    r = find_zero(ZeroQuery("a", 0, 0, 2, paper_indexing=True))
    assert r.value == pytest.approx(3.8317059702, abs=1e-9)
    assert r.theorem_index == 2 and r.positive_index == 1
    with pytest.raises(ValueError):
        find_zero(ZeroQuery("a", 0, 0, 1, paper_indexing=True))
    # no shift when nu > |delta|
    assert index_offset("a", 2, 1) == 0


# y' with -nu <= delta < 0 may have close zero pairs before the oscillatory range
RULE_CASES = [
    (kind, nu, delta)
    for kind in ("AZero", "BZero")
    for nu in (0, 0.5, 1, 2, 3.7, 12, 60)
    for delta in (-1.5, -0.25, 0, 0.3, 1, 1.5)
    if not (kind == "BZero" and -nu <= delta < 0)
]


@pytest.mark.parametrize("kind,nu,delta", RULE_CASES)
def test_offset_rule_agrees_off_the_boundary(kind, nu, delta):
    assert index_offset(kind, nu, delta) == offset_rule(kind, nu, delta)


def test_offset_counts_close_zero_pairs():
    # y' for nu = 3.7, delta = -2 has two zeros near x = 3.02 and 3.23 before the oscillatory range
    with mpmath.workdps(30):
        f = lambda x: mpmath.bessely(3.7, x, 1) + 2 * mpmath.bessely(3.7, x) / x  # noqa: E731
        r1 = mpmath.findroot(f, (2.95, 3.1), solver="anderson")
        r2 = mpmath.findroot(f, (3.15, 3.3), solver="anderson")
    assert zero("b", 3.7, -2, 1) == pytest.approx(float(r1), abs=1e-10)
    assert zero("b", 3.7, -2, 2) == pytest.approx(float(r2), abs=1e-10)
    assert index_offset("b", 3.7, -2) == 2
    assert index_offset("b", 2, -1.5) == 2


def test_count_examples():
    assert count_zeros("b", 3, 0.7, (40 + 1.5 + 0.5) * math.pi) == 40
    assert count_zeros("b", 3, 0.7, (80 + 1.5 + 0.5) * math.pi) == 80
    assert count_zeros("a", 0, 0, 4) == 1
    assert count_zeros("b", 0, 0, 0.5) == 0
    with pytest.raises(ValueError):
        count_zeros("b", 0, 0, 0)


def test_no_tangency_warning_for_bessel_scan():
    with warnings.catch_warnings():
        warnings.simplefilter("error", TangencyWarning)
        assert count_zeros("b", 2.5, 0.5, 60.0) > 0


def test_tangency_detected_on_grid_boundary():
    # uniform part of the scan grid on (1, 3] has 11 cells; straddle its 3rd node
    node = 1.0 + 2.0 * 3 / 11
    roots = (node - 2.5e-7, node + 2.5e-7)

    def f(x):
        return (x - roots[0]) * (x - roots[1])

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        sign_changes(lambda x: -f(x), 3.0)
    assert any(issubclass(w.category, TangencyWarning) for w in caught)


@pytest.mark.parametrize("nu", [0, 1, 2.5])
def test_delta_zero_reduction(nu):
    # mpmath lists x = 0 as the first zero of J_0'
    shift = 1 if nu == 0 else 0
    for k in (1, 7, 33):
        assert zero("a", nu, 0, k) == pytest.approx(float(mpmath.besseljzero(nu, k + shift, 1)), abs=1e-10)


@pytest.mark.parametrize("nu,delta", [(60, 0), (60, 1), (120, -1), (120, 2)])
def test_phase_interval_law_large_nu(nu, delta):
    for k in (30, 60, 120):
        r = find_zero(ZeroQuery("BZero", nu, delta, k, paper_indexing=True))
        assert k - 0.5 < h(nu, r.value) < k


@pytest.mark.parametrize("nu,delta", [(0, 0), (1, 0.5), (3.7, -1)])
def test_phase_defect_decays(nu, delta):
    defects = []
    for k in (20, 80, 320):
        r = find_zero(ZeroQuery("BZero", nu, delta, k, paper_indexing=True))
        defects.append(abs(h(nu, r.value) - (k - 0.25)) * k)
    assert max(defects) < 2 * min(defects) + 1e-6


@pytest.mark.parametrize("kind", ["AZero", "BZero"])
@pytest.mark.parametrize("nu,delta", [(0, 0), (1, 0.5), (3.7, 2)])
def test_interlacing(kind, nu, delta):
    for k in range(10, 201, 7):
        a = zero("a", nu, delta, k, paper_indexing=True)
        b = zero("b", nu, delta, k, paper_indexing=True)
        a_next = zero("a", nu, delta, k + 1, paper_indexing=True)
        assert a < b < a_next


def test_one_term_constant():
    c_small, _ = one_term_check("b", 0, 0, 100)
    c_big, _ = one_term_check("b", 0, 0, 10_000, ks=range(5_000, 10_001, 50))
    assert math.isfinite(c_small) and c_big < 2 * c_small
    # offset signs: -3/4 for j', -1/4 for y'
    _, rows_a = one_term_check("a", 0, 0, 12)
    assert all(abs(z - (k - 0.75) * math.pi) < 1 for k, z, _ in rows_a)


@settings(max_examples=25)
@given(st.sampled_from(["AZero", "BZero"]), st.floats(0, 10), st.floats(-2, 2), st.integers(30, 300))
def test_expansion_beats_one_term(kind, nu, delta, k):
    from ultrabessel.mcmahon import eval_expansion, expansion_table

    z = find_zero(ZeroQuery(kind, nu, delta, k, paper_indexing=True)).value
    e4 = abs(eval_expansion(expansion_table(kind, 4), nu, delta, k) - z)
    e0 = abs(eval_expansion(expansion_table(kind, 0), nu, delta, k) - z)
    assert e4 < e0 or e0 < 1e-13 * z


@pytest.mark.parametrize("nu,delta", [(60, 0), (60, 1), (120, 0), (120, 1)])
@pytest.mark.parametrize("s", [40, 80])
def test_large_nu_count_follows_phase(nu, delta, s):
    # y'-zeros sit at phases just below k - 1/4, so the count up to X is floor(h(X) + 1/4)
    X = (s + nu / 2 + 0.5) * math.pi
    assert count_zeros("BZero", nu, delta, X) == math.floor(h(nu, X) + 0.25)
