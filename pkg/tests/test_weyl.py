from fractions import Fraction

import pytest

from qlax import weyl
from qlax.core import State, evolve, step_f
from qlax.exact import NonGeneric, Rng
from qlax.lax import sample_e8_draw
from qlax.weyl import Generator, apply_generator, apply_word, parse_word, same_point

from conftest import retry


def draw(seed):
    def one(r):
        p, s, z = sample_e8_draw(r)
        apply_word(weyl.T1_WORD, p, s)
        evolve(p, s)
        return p, s
    return retry(one, Rng(seed).child("weyl"))


def test_generator_parsing():
    assert parse_word("c,mu12,s23,nu78") == (Generator("c"), Generator("mu", 1, 2),
                                             Generator("s", 2, 3), Generator("nu", 7, 8))
    assert parse_word("") == ()
    assert Generator("s", 2, 1) == Generator("s", 1, 2)
    assert weyl.format_word(parse_word("s21,c")) == "s12,c"
    for bad in ("s11", "mu19", "x12", "c12", "s1", "mu"):
        with pytest.raises(ValueError):
            weyl.parse_generator(bad)


def test_s12_and_c():
    p, s = draw(1)
    p2, s2 = apply_generator(Generator("s", 1, 2), p, s)
    assert p2.u == (p.u[1], p.u[0]) + p.u[2:] and (p2.h1, p2.h2) == (p.h1, p.h2) and s2 == s
    p3, s3 = apply_generator(Generator("c"), p, s)
    assert (p3.h1, p3.h2, s3.f, s3.g) == (p.h2, p.h1, s.g, s.f)


def test_mu12_moves_point_one():
    p, s = draw(2)
    new, _ = apply_generator(Generator("mu", 1, 2), p, s)
    u1, u2 = p.u[0], p.u[1]
    assert new.f_of(new.u[0]) == p.h1 / u1 + p.h2 / u2


def test_empty_word_and_involutions():
    p, s = draw(3)
    assert apply_word((), p, s) == (p, s)
    for name in ("c", "s12", "s47", "mu12", "mu36", "nu12", "nu58"):
        gen = weyl.parse_generator(name)
        assert same_point(apply_word((gen, gen), p, s), (p, s)), name
        assert not same_point(apply_word((gen,), p, s), (p, s)), name


def test_coxeter_examples():
    p, s = draw(4)
    c, mu12, s34 = parse_word("c,mu12,s34")
    assert same_point(apply_word((c, mu12) * 3, p, s), (p, s))
    assert not same_point(apply_word((c, mu12) * 2, p, s), (p, s))
    assert same_point(apply_word((c, s34) * 2, p, s), (p, s))
    # s12 hangs off s23: order 3 there, commuting with the rest of the chain
    s12, s23 = parse_word("s12,s23")
    assert same_point(apply_word((s12, s23) * 3, p, s), (p, s))
    assert not same_point(apply_word((s12, s23), p, s), (p, s))


def test_dynkin_shape():
    degree = {str(g): 0 for g in weyl.SIMPLE_REFLECTIONS}
    for edge in weyl.DYNKIN_EDGES:
        for node in edge:
            degree[node] += 1
    assert len(weyl.DYNKIN_EDGES) == 8
    assert [n for n, d in degree.items() if d == 3] == ["s23"]
    assert sorted(n for n, d in degree.items() if d == 1) == ["c", "s12", "s78"]


def test_check_coxeter():
    p, s = draw(5)
    rep = weyl.check_coxeter(p, s)
    assert rep.ok, rep.to_dict()
    assert rep.draws == 45


def test_q_invariance_per_kind():
    rng = Rng(6)
    kinds = parse_word("c,s18,mu27,nu34")
    for _ in range(20):
        p, s = retry(lambda r: sample_e8_draw(r)[:2], rng)
        for gen in kinds:
            try:
                new, _ = apply_generator(gen, p, s)
            except NonGeneric:
                continue
            assert new.q == p.q


def test_configuration_mapping():
    p, s = draw(7)
    assert weyl.check_configuration(p, s).ok
    assert weyl.check_q_invariance(p, s).ok


def test_r_word():
    p, s = draw(8)
    v = p.q * p.h2 / p.h1
    new, moved = apply_word(weyl.R_WORD, p, s)
    assert new.h1 == v * p.h2
    assert new.h2 == p.h2 and moved.g == s.g
    assert weyl.check_r_action(p, s).ok


def test_translation_matches_evolution():
    for seed in range(3):
        p, s = draw(10 + seed)
        v = p.q * p.h2 / p.h1
        new, moved = apply_word(weyl.T1_WORD, p, s)
        assert all(a / b == v for a, b in zip(new.u, p.u))
        assert moved.f / v == step_f(s.f, s.g, p)
        assert new.q == p.q
        rep = weyl.check_translation(p, s)
        assert rep.ok, rep.to_dict()


def test_nongeneric_reports_step():
    p, s = draw(9)
    # g = g_1 makes the mu12 cross-ratio degenerate at step 1 (second generator applied)
    bad = State(s.f, p.g_of(p.u[0]))
    with pytest.raises(NonGeneric) as err:
        apply_word(parse_word("mu12,s34"), p, bad)
    assert err.value.where.startswith("step 1 (mu12)")
