from fractions import Fraction

import numpy as np
import pytest

from qrea.classify import (
    CharacterParams,
    admissible_roots,
    canonical_weight,
    classification_rows,
    ext_signature,
    reflection_defect_exact,
    rmod1_equal,
    rows_to_csv,
    rows_to_json,
    star_character,
    star_character_exact,
)
from qrea.errors import DomainError, NotAdmissible, SignMismatch
from qrea.scalars import unimodular_point

Q0 = 0.5


def test_admissible_basic():
    dec = admissible_roots([1.0, Q0 ** 2, 0.0], Q0)
    assert dec is not None
    assert dec.ms == (0, 1) and dec.ns == () and dec.nzero == 1
    assert dec.alpha == pytest.approx(0.0)


def test_admissible_rejects_multiplicity():
    assert admissible_roots([1.0, 1.0, 0.0], Q0) is None


def test_admissible_rejects_odd_lattice():
    assert admissible_roots([1.0, Q0, 0.0], Q0) is None


def test_admissible_domain():
    with pytest.raises(DomainError):
        admissible_roots([1.0], 1.5)


def test_ext_signature_examples():
    e = ext_signature([Q0 ** 0.6, -Q0 ** 1.6, 0.0], Q0)
    assert (e.nplus, e.nminus, e.nzero) == (1, 1, 1)
    assert rmod1_equal(e.rmod1, 0.5)
    e = ext_signature([Q0 ** 2, Q0 ** 4], Q0)
    assert (e.rmod1, e.nplus, e.nminus, e.nzero) == (0.0, 2, 0, 0)
    e = ext_signature([0.0, 0.0, 0.0], Q0)
    assert (e.rmod1, e.nplus, e.nminus, e.nzero) == (0.0, 0, 0, 3)
    with pytest.raises(NotAdmissible):
        ext_signature([1.0, Q0], Q0)


def test_ext_signature_scale_invariant():
    roots = [Q0 ** 0.8, -Q0 ** 2.3, 0.0]
    e1 = ext_signature(roots, Q0)
    for t in (0.3, 2.0, 7.7):
        e2 = ext_signature([t * x for x in roots], Q0)
        assert rmod1_equal(e1.rmod1, e2.rmod1)
        assert e1.counts() == e2.counts()


def test_canonical_weight_examples():
    alpha, beta = 0.3, 0.8
    roots = [Q0 ** (2 * alpha), -Q0 ** (2 * beta + 2)]
    r = canonical_weight(roots, (1, -1), Q0)
    assert r[0] == pytest.approx(alpha)
    assert r[1] == pytest.approx(beta)
    r = canonical_weight([Q0 ** (2 * alpha)], (1,), Q0)
    assert r[0] == pytest.approx(alpha)
    # two positive roots with m = {0, 1}: adapted ordering has integer gaps
    roots = [Q0 ** (2 * alpha), Q0 ** (2 * alpha + 2)]
    r = canonical_weight(roots, (1, 1), Q0)
    gaps = (r[1] + 2) - (r[0] + 1)
    assert gaps == pytest.approx(round(gaps)) and round(gaps) >= 1
    with pytest.raises(SignMismatch):
        canonical_weight(roots, (1, -1), Q0)


def test_star_character_n4_shape():
    y0 = np.exp(0.7j)
    M = star_character(CharacterParams(k=0, l=1, a=2.0, c=3.0, y=(y0,)), 4)
    want = 3.0 * np.array([
        [0, 0, 0, y0],
        [0, 2.0, 0, 0],
        [0, 0, 2.0, 0],
        [np.conj(y0), 0, 0, 2.0 - 0.5],
    ])
    assert np.allclose(M, want)


def test_star_character_zero_and_diagonal():
    M = star_character(CharacterParams(k=4, l=0, a=1.0, c=5.0, y=()), 4)
    assert np.allclose(M, 0.0)
    M = star_character(CharacterParams(k=0, l=0, a=2.0, c=1.0, y=()), 3)
    assert np.allclose(M, 2.0 * np.eye(3))


def test_star_character_n2_matches_family_shape():
    M = star_character(CharacterParams(k=0, l=1, a=1.0, c=1.0, y=(1 + 0j,)), 2)
    assert np.allclose(M, np.array([[0, 1], [1, 0]]))


def test_star_character_param_validation():
    with pytest.raises(DomainError):
        CharacterParams(k=2, l=1, a=1.0, c=1.0, y=(1 + 0j,)).validate(3)
    with pytest.raises(DomainError):
        CharacterParams(k=0, l=1, a=-1.0, c=1.0, y=(1 + 0j,)).validate(4)
    with pytest.raises(DomainError):
        CharacterParams(k=0, l=1, a=1.0, c=0.0, y=(1 + 0j,)).validate(4)
    with pytest.raises(DomainError):
        CharacterParams(k=0, l=1, a=1.0, c=1.0, y=(2 + 0j,)).validate(4)


def test_star_character_exact_reflection_equation():
    # every character matrix satisfies the reflection equation exactly
    for N in (2, 3, 4):
        for k in range(N + 1):
            for l in range((N - k) // 2 + 1):
                if k + 2 * l > N:
                    continue
                y = tuple(unimodular_point(Fraction(t + 1, 3)) for t in range(l))
                p = CharacterParams(k=k, l=l, a=Fraction(3, 2), c=Fraction(-2, 5), y=y)
                Z = star_character_exact(p, N)
                assert reflection_defect_exact(Z, N).is_zero(), (N, k, l)


def test_emitters():
    rows = classification_rows([[1.0, 0.25, 0.0], [1.0, 0.5, 0.0]], Q0)
    assert rows[0]["admissible"] and not rows[1]["admissible"]
    assert rows[0]["extsig"]["nplus"] == 2
    assert "roots" in rows_to_json(rows)
    csv_text = rows_to_csv(rows)
    assert csv_text.splitlines()[1].startswith("1;0.25;0,1")


def test_weight_roundtrip_through_spectral_data():
    """building at an adapted weight and classifying the spectrum recovers
    the weight through the canonical assignment"""
    from qrea.gtrep import HWModuleSpec
    from qrea.hrep import build_bigcell_rep, spectral_data

    cases = [
        ((1, -1), (0.3, 0.8)),
        ((1, 1), (0.25, 1.25)),
        ((-1, -1), (-0.5, 0.5)),
        ((-1, 1), (0.7, 0.7)),
    ]
    for eps, r in cases:
        spec = HWModuleSpec(N=2, eps=eps, r=r, D=12, q0=Q0)
        rep = build_bigcell_rep(spec, margin=4)
        roots, _, _, _ = spectral_data(rep)
        got = canonical_weight(roots, eps, Q0)
        assert np.allclose(got, [float(x) for x in r], atol=1e-9), (eps, r, got)
        # equivalently, the root multisets agree exactly
        lead, want = 1, []
        for k, e in enumerate(eps, start=1):
            lead *= e
            want.append(lead * Q0 ** (2 * (float(r[k - 1]) + k) - 2))
        assert np.allclose(sorted(roots, reverse=True), sorted(want, reverse=True),
                           rtol=1e-9)


def test_sylvester_chain_connects_equal_extsig():
    """two builds with equal extended signature are connected by a scaling
    plus a finite transport whose endpoint components hit the target
    spectral weight"""
    from fractions import Fraction

    from qrea.gtrep import HWModuleSpec, detect_finite, scaling_trep
    from qrea.hrep import (adjoint_transport_T, build_bigcell_rep,
                           spectral_components, spectral_data)

    q0 = Q0
    r_a = (Fraction(3, 10), Fraction(4, 5))     # alpha=0.3, beta=0.8
    r_b = (Fraction(11, 20), Fraction(41, 20))  # alpha=0.55, beta=2.05
    rep_a = build_bigcell_rep(HWModuleSpec(N=2, eps=(1, -1), r=r_a, D=14, q0=q0),
                              margin=6)
    rep_b = build_bigcell_rep(HWModuleSpec(N=2, eps=(1, -1), r=r_b, D=14, q0=q0),
                              margin=6)
    roots_a, _, ext_a, _ = spectral_data(rep_a)
    roots_b, _, ext_b, _ = spectral_data(rep_b)
    assert ext_a.counts() == ext_b.counts()
    assert rmod1_equal(ext_a.rmod1, ext_b.rmod1)

    # scale so the positive roots align (alpha 0.3 -> 0.55), then transport
    # by the finite two-dimensional module with highest weight (0, 1),
    # which shifts one weight slot up by one
    scaled = adjoint_transport_T(rep_a, scaling_trep(2, q0 ** 0.25))
    trep = detect_finite(HWModuleSpec(N=2, eps=(1, 1), r=(Fraction(0), Fraction(1)),
                                      D=6, q0=q0))
    assert trep is not None and trep.dim == 2
    moved = adjoint_transport_T(scaled, trep)
    comps = spectral_components(moved)
    hit = any(
        np.allclose(sorted(roots, reverse=True), sorted(roots_b, reverse=True),
                    rtol=1e-7, atol=1e-10)
        for _, roots, _, _ in comps
    )
    assert hit, [np.round(c[1], 6) for c in comps]
    for _, _, ext, _ in comps:
        assert ext.counts() == ext_a.counts()
        assert rmod1_equal(ext.rmod1, ext_a.rmod1, 1e-8)
