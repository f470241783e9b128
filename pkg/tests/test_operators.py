import pytest
from hypothesis import given
from hypothesis import strategies as st

from quartercantor.digits import additive, canonical, enumerate_level
from quartercantor.operators import (
    AffineOp,
    Branch,
    CollisionError,
    DomainError,
    add,
    compose,
    cuntz_check,
    lemma_us1_check,
    m_shift,
    s0,
    s0_adj,
    s1,
    s1_adj,
    u_p,
    w_tilde,
    w_tilde_bijection_check,
)

odd = st.integers(0, 30).map(lambda k: 2 * k + 1)


def gamma(m):
    return list(enumerate_level(canonical(), m))


def test_forward_maps():
    assert s0()(5) == 20
    assert s1()(5) == 21
    assert s1()(0) == 1
    assert s0()(-3) == -12  # total on the integers


def test_adjoints():
    assert s0_adj()(20) == 5
    assert s0_adj()(21) is None
    assert s1_adj()(21) == 5
    assert s1_adj()(20) is None


def test_adjoints_reject_labels_outside_gamma():
    with pytest.raises(DomainError):
        s0_adj()(8)
    with pytest.raises(DomainError):
        s1_adj()(3)


def test_shift_and_scaling():
    assert m_shift(4)(1) == 5
    assert m_shift(2)(13) == 15
    assert all(m_shift(0)(n) == n for n in range(-10, 10))
    assert u_p(5)(4) == 20
    assert u_p(3)(1) == 3
    assert u_p(7)(0) == 0
    with pytest.raises(DomainError):
        u_p(3)(2)
    with pytest.raises(ValueError):
        u_p(4)


def test_w_tilde_examples():
    assert w_tilde(5)(4) == 4
    assert w_tilde(5)(1) == 5
    assert w_tilde(3)(21) == 23


@given(odd, st.integers(0, 8))
def test_w_tilde_pointwise_formula(p, m):
    w = w_tilde(p)
    for g in gamma(m):
        assert w(4 * g) == 4 * g
        assert w(4 * g + 1) == 4 * g + p


@pytest.mark.parametrize("m", [0, 3, 6])
def test_adjoint_compositions(m):
    labels = gamma(m)
    assert all(compose(s0_adj(), s0())(n) == n for n in labels)
    assert all(compose(s1_adj(), s1())(n) == n for n in labels)
    assert all(compose(s1_adj(), s0())(n) is None for n in labels)
    assert all(compose(s0_adj(), s1())(n) is None for n in labels)


@pytest.mark.parametrize("m", [1, 4, 7])
def test_projections_sum_to_identity(m):
    labels = gamma(m)
    total = add(compose(s0(), s0_adj()), compose(s1(), s1_adj()), labels=labels)
    assert all(total(n) == n for n in labels)


def test_add_rejects_collisions():
    with pytest.raises(CollisionError) as exc:
        add(s0(), m_shift(0), labels=[0, 1])
    assert exc.value.counterexample is not None
    both = add(s0(), s1())
    with pytest.raises(CollisionError):
        both(3)


def test_act_on_coefficient_vectors():
    w = w_tilde(5)
    assert w.act({1: 2.0, 4: 1j}) == {5: 2.0, 4: 1j}
    both = add(s0(), s1())
    assert both.act({2: 1.0}) == {8: 1.0, 9: 1.0}


def test_branch_validation():
    with pytest.raises(ValueError):
        Branch(delta=4, modulus=4, residue=1)  # (n)/4 not integral on 1 mod 4
    with pytest.raises(ValueError):
        AffineOp("bad", [Branch(modulus=2, residue=0), Branch(modulus=4, residue=2)])
    AffineOp("ok", [Branch(modulus=4, residue=0), Branch(modulus=4, residue=1)])


def test_compose_preserves_branch_disjointness():
    # every op used in the checks must construct without overlap errors
    for p in (1, 3, 5):
        w_tilde(p)
        compose(m_shift(p - 1), compose(s1(), u_p(p)))


@pytest.mark.parametrize("m", [1, 2, 5, 10])
def test_cuntz_check(m):
    report = cuntz_check(m)
    assert report.passed, report.details


def test_cuntz_ranges_at_level_two():
    labels = gamma(2)
    assert sorted(s0()(n) for n in labels) == [0, 4, 16, 20]
    assert sorted(s1()(n) for n in labels) == [1, 5, 17, 21]
    assert sorted([s0()(n) for n in labels] + [s1()(n) for n in labels]) == gamma(3)


def test_lemma_us1_examples():
    assert compose(u_p(3), s1())(1) == 15
    assert compose(m_shift(2), compose(s1(), u_p(3)))(1) == 15
    assert lemma_us1_check(1, 6).passed
    assert all(compose(m_shift(0), compose(s1(), u_p(1)))(n) == s1()(n) for n in gamma(6))


@pytest.mark.parametrize("p", [3, 5, 7, 9, 15])
def test_lemma_us1_check(p):
    assert lemma_us1_check(p, 8).passed


def test_w_tilde_bijection_small():
    labels = [4 * g + 1 for g in gamma(2)]
    assert labels == [1, 5, 17, 21]
    assert [w_tilde(5)(n) for n in labels] == [5, 9, 21, 25]
    assert w_tilde_bijection_check(5, 2).passed


def test_w_tilde_one_is_identity():
    assert all(w_tilde(1)(n) == n for n in gamma(8))
    assert w_tilde_bijection_check(1, 4).passed


@given(odd, st.integers(0, 7))
def test_w_tilde_image_is_additive_set(p, m):
    image = {w_tilde(p)(n) for n in gamma(m + 1)}
    assert image == enumerate_level(additive(p), m + 1).as_set()


@given(odd, st.integers(0, 7))
def test_u_p_commutes_with_s0(p, m):
    for n in gamma(m):
        assert compose(u_p(p), s0())(n) == compose(s0(), u_p(p))(n)


def test_level_bounds():
    with pytest.raises(ValueError):
        lemma_us1_check(3, 13)
    with pytest.raises(ValueError):
        cuntz_check(0)


def test_checks_catch_broken_operators(monkeypatch):
    import quartercantor.operators as ops

    monkeypatch.setattr(ops, "s1", lambda: AffineOp("S1bad", [Branch(alpha=4, beta=2)]))
    report = cuntz_check(3)
    assert not report.passed and report.counterexample

    monkeypatch.undo()
    monkeypatch.setattr(ops, "m_shift", lambda k: AffineOp("Mbad", [Branch(beta=k + 4)]))
    report = lemma_us1_check(5, 3)
    assert not report.passed
    assert report.counterexample[1] != report.counterexample[2]
    assert not w_tilde_bijection_check(5, 3).passed
