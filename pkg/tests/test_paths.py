import itertools

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from torusham import (
    ArcForcingIso,
    PathCertificate,
    Power,
    Refusal,
    Symbol,
    TorusSpec,
    endpoint,
    flat_length,
    hamiltonian_path,
    path_for_even_m,
    path_for_odd_m,
    path_from_inner_cycle,
    prism_path_word,
    staircase_a,
    symbol_counts,
    trace,
    verify_ham_path,
    verify_ham_cycle,
    CycleWitness,
)

AB_STEPS = {"a": (1, 0), "b": (1, 1)}


def _ab_is_ham_path(m, N, word, target):
    spec = TorusSpec((m, N))
    vs = list(trace(spec, (0, 0), word, steps=AB_STEPS))
    return len(vs) == m * N and len(set(vs)) == m * N and vs[-1] == target


def test_prism_word_main_example():
    w = prism_path_word(3, 9, 1)
    assert flat_length(w) == 26
    assert endpoint(TorusSpec((3, 9)), (0, 0), w, steps=AB_STEPS) == (2, 2)
    assert _ab_is_ham_path(3, 9, w, (2, 2))


def test_prism_word_length_two_cycle():
    w = prism_path_word(2, 4, 0)
    assert flat_length(w) == 7
    assert _ab_is_ham_path(2, 4, w, (1, 0))


def test_prism_word_collapsed_blocks():
    w = prism_path_word(3, 9, 0)
    assert endpoint(TorusSpec((3, 9)), (0, 0), w, steps=AB_STEPS) == (2, 0)


def test_prism_word_range_check():
    with pytest.raises(ValueError, match="n must"):
        prism_path_word(3, 9, 5)
    with pytest.raises(ValueError, match="n must"):
        prism_path_word(3, 9, -1)


def test_prism_word_is_ham_path_small_sweep():
    for m, N in [(2, 2), (2, 4), (3, 3), (3, 9), (4, 4), (5, 5)]:
        for n in range((N + 1) // 2):
            w = prism_path_word(m, N, n)
            assert flat_length(w) == m * N - 1
            assert _ab_is_ham_path(m, N, w, ((-1) % m, (2 * n) % N))


def test_prism_symbolic_identities():
    for m in range(2, 10):
        for N in (2, 3, 8, 81):
            spec = TorusSpec((m, N))
            for n in range((N + 1) // 2):
                w = prism_path_word(m, N, n)
                counts = symbol_counts(w)
                assert counts["b"] == N + 2 * n
                assert flat_length(w) == m * N - 1
                assert endpoint(spec, (0, 0), w, steps=AB_STEPS) == ((-1) % m, (2 * n) % N)


def test_iso_round_trip_and_generators():
    for m, k in [(2, 3), (3, 3), (5, 4), (4, 5)]:
        iso = ArcForcingIso(m, k)
        for w in itertools.product(range(m), repeat=k - 1):
            h = iso.forward(w)
            assert sum(h) % m == 0
            assert iso.backward(h) == w
        for g in range(k - 1):
            img = iso.generator_image(g)
            assert img[0] == m - 1 and img[g + 1] == 1


def test_iso_is_digraph_isomorphism():
    # forward(w + e_g) - forward(w) is the arc label x_{g+2} - x_1
    for m, k in [(3, 3), (5, 3), (2, 4), (3, 5)]:
        iso = ArcForcingIso(m, k)
        inner = iso.inner_spec
        outer = iso.outer_spec
        for w in itertools.product(range(m), repeat=k - 1):
            for g in range(k - 1):
                stepped = iso.forward(inner.add_step(w, g))
                assert stepped == outer.translate(iso.forward(w), iso.generator_image(g))


def test_iso_backward_requires_zero_sum():
    iso = ArcForcingIso(3, 3)
    with pytest.raises(ValueError, match="zero-sum"):
        iso.backward((1, 0, 0))


def test_path_from_inner_cycle_k2():
    inner = verify_ham_cycle(TorusSpec.power(3, 1), Power(Symbol(0), 3))
    assert isinstance(inner, CycleWitness)
    cert = path_from_inner_cycle(3, 2, inner, 1)
    assert cert.verified and cert.length == 8
    assert cert.target == (0, 2)


def test_path_from_inner_cycle_n_zero_targets_minus_x1():
    cert = path_from_inner_cycle(3, 3, staircase_a(3, 3), 0)
    assert cert.verified and cert.target == (2, 0, 0)


def test_path_from_inner_cycle_even_m():
    cert = path_from_inner_cycle(2, 3, staircase_a(2, 2), 1)
    assert cert.verified and cert.length == 7


def test_path_for_odd_m_examples():
    cert = path_for_odd_m(3, 3, (2, 0, 0))
    assert cert.verified and cert.length == 26
    cert = path_for_odd_m(3, 3, (0, 1, 1))
    assert cert.verified
    cert = path_for_odd_m(5, 3, (4, 0, 0))
    assert cert.verified and cert.length == 124


def test_path_for_even_m_examples():
    cert = path_for_even_m(2, 3, (1, 0, 0))
    assert cert.verified and cert.length == 7
    cert = path_for_even_m(2, 3, (1, 1, 1))
    assert cert.verified
    cert = path_for_even_m(4, 3, (3, 0, 0))
    assert cert.verified and cert.length == 63


def test_path_builders_validate_inputs():
    with pytest.raises(ValueError, match="odd"):
        path_for_odd_m(2, 3, (1, 0, 0))
    with pytest.raises(ValueError, match="even"):
        path_for_even_m(3, 3, (2, 0, 0))
    with pytest.raises(ValueError, match="k >= 3"):
        path_for_odd_m(3, 2, (2, 0))
    with pytest.raises(ValueError, match="coordinate sum"):
        path_for_odd_m(3, 3, (1, 0, 0))


def test_hamiltonian_path_dispatch_and_translation():
    cert = hamiltonian_path(3, 3, (1, 1, 1), (0, 1, 1))
    assert isinstance(cert, PathCertificate) and cert.verified
    assert cert.start == (1, 1, 1) and cert.target == (0, 1, 1)
    got = hamiltonian_path(3, 3, (0, 0, 0), (1, 0, 0))
    assert isinstance(got, Refusal)
    assert "mod 3" in got.message.replace("(", "").replace(")", "")
    cert = hamiltonian_path(2, 4, (0, 0, 0, 0), (1, 0, 0, 0))
    assert cert.verified and cert.length == 15


def test_hamiltonian_path_rejects_k2():
    with pytest.raises(ValueError, match="k >= 3"):
        hamiltonian_path(3, 2, (0, 0), (2, 0))


def test_hamiltonian_path_rejects_u_equals_v():
    got = hamiltonian_path(3, 3, (1, 1, 1), (1, 1, 1))
    assert isinstance(got, Refusal)


@settings(max_examples=25, deadline=None)
@given(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
)
def test_translation_invariance(u, v):
    # the certificate for (u, v) reuses the 0-based word for v - u
    spec = TorusSpec.power(3, 3)
    got = hamiltonian_path(3, 3, u, v)
    diff = spec.subtract(v, u)
    base = hamiltonian_path(3, 3, spec.zero(), diff)
    assert type(got) is type(base)
    if isinstance(got, PathCertificate):
        assert got.word == base.word
        assert verify_ham_path(spec, u, v, base.word).verified


def test_exhaustive_small_powers():
    for m, k in [(2, 3), (3, 3)]:
        spec = TorusSpec.power(m, k)
        good = 0
        for v in spec.vertices():
            got = hamiltonian_path(m, k, spec.zero(), v)
            admissible = v != spec.zero() and sum(v) % m == m - 1
            if admissible:
                assert isinstance(got, PathCertificate) and got.verified
                good += 1
            else:
                assert isinstance(got, Refusal)
        assert good == m ** (k - 1)
