"""Acceptance criteria 1-9, each at its stated draw count and time limit.

Every criterion prints one PASS/FAIL line (visible with ``pytest -s`` or
in the ``-v`` log under "acceptance").  Seeds are fixed, so a run is a pure
function of the code.
"""
import subprocess
import sys
import time

import pytest

from qlax import degen, lax, weyl
from qlax.core import check_evolution, check_identities
from qlax.exact import Rng, sample_rational
from qlax.suites import run_trials

SEED = 1


@pytest.fixture
def announce(capsys):
    def _say(number, title, ok, elapsed, limit, detail=""):
        verdict = "PASS" if ok and elapsed < limit else "FAIL"
        line = f"acceptance {number}: {verdict}  {title}  ({elapsed:.1f}s, limit {limit}s){detail}"
        with capsys.disabled():
            print("\n" + line)
        return verdict == "PASS"
    return _say


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def summarize(reports):
    bad = [r.check for r in reports if not r.ok]
    draws = sum(r.draws for r in reports)
    controls = sum(r.controls for r in reports)
    return not bad, f"  draws={draws} controls={controls}" + (f" failing={bad}" if bad else "")


def run(label, trials, body):
    return run_trials(label, trials, Rng(SEED).child(label), body)


def test_1_identities(announce):
    def body(rng):
        params, _, z = lax.sample_e8_draw(rng)
        h, g, u = sample_rational(rng), sample_rational(rng), sample_rational(rng)
        return [check_identities(params, h, z, g, u)]
    reps, t = timed(lambda: run("acc1", 50, body))
    ok, detail = summarize(reps)
    assert reps[0].passes == reps[0].draws and reps[0].draws >= 50 * 5
    assert announce(1, "core identities, 50 draws", ok, t, 10, detail)


def test_2_evolution(announce):
    def body(rng):
        params, s, _ = lax.sample_e8_draw(rng)
        return [check_evolution(params, s)]
    reps, t = timed(lambda: run("acc2", 50, body))
    ok, detail = summarize(reps)
    assert announce(2, "evolution relations, q, round trip, 50 draws", ok, t, 30, detail)


def test_3_l1_curve(announce):
    def body(rng):
        params, s, z = lax.sample_e8_draw(rng)
        y = lax.propagate_y(sample_rational(rng), sample_rational(rng), z, s, params, 1)
        return [lax.check_l1_curve(params, z, y.triple(0), rng),
                lax.check_residues(params, z),
                lax.check_ycoef_proportional(params, z, rng, samples=5)]
    reps, t = timed(lambda: run("acc3", 20, body))
    ok, detail = summarize(reps)
    assert announce(3, "degree-(3,2) curve and vanishing conditions, 20 draws", ok, t, 60, detail)


def test_4_compatibility(announce):
    def body(rng):
        params, s, z = lax.sample_e8_draw(rng)
        return [lax.check_compatibility(params, s, z, rng)]
    reps, t = timed(lambda: run("acc4", 20, body))
    ok, detail = summarize(reps)
    rep = reps[0]
    assert rep.controls == rep.controls_failed_as_expected == 20 * 4
    assert announce(4, "Lax compatibility with controls, 20 draws", ok, t, 120, detail)


def test_5_proof_chain(announce):
    def body(rng):
        params, s, z = lax.sample_e8_draw(rng)
        y = lax.propagate_y(sample_rational(rng), sample_rational(rng), z, s, params, 2)
        ybar = lax.ybar_from_y(y, s, params)
        return [lax.check_proof_chain(params, s, z, rng),
                lax.check_lemma_ratio_constancy(params, s, rng, pairs=5),
                lax.check_l1u_geometry(params, s, z, ybar.triple(0), rng)]
    reps, t = timed(lambda: run("acc5", 10, body))
    ok, detail = summarize(reps)
    assert announce(5, "proof chain and point vanishing, 10 draws", ok, t, 120, detail)


def test_6_weyl(announce):
    def body(rng):
        params, s, _ = lax.sample_e8_draw(rng)
        return [weyl.check_coxeter(params, s, rng), weyl.check_q_invariance(params, s),
                weyl.check_translation(params, s), weyl.check_r_action(params, s)]
    reps, t = timed(lambda: run("acc6", 10, body))
    ok, detail = summarize(reps)
    cox = next(r for r in reps if r.check == "weyl_coxeter")
    assert cox.draws == 10 * 45
    assert announce(6, "Coxeter matrix, q invariance, T1 = crcr, 10 draws", ok, t, 120, detail)


def test_7_degenerate(announce):
    def body(rng):
        out = []
        for system in degen.SYSTEMS:
            params, s, z = degen.sample_deg_draw(system, rng)
            out.append(degen.deg_check_evolution(params, s))
            out.append(degen.deg_check_compatibility(system, params, s, z, rng))
        return out
    reps, t = timed(lambda: run("acc7", 10, body))
    ok, detail = summarize(reps)
    printed = {r.check: r.notes.get("printed_formula_residual") for r in reps if r.check.endswith("compatibility")}
    assert printed["e7_compatibility"] not in (None, "0") and printed["d5_compatibility"] not in (None, "0")
    assert announce(7, "E7/E6/D5 evolution and compatibility, 10 draws each", ok, t, 120, detail)


def test_8_limits(announce):
    def body(rng):
        return [degen.check_limit(target, degen.DEFAULT_EPSILONS, rng) for target in degen.SYSTEMS]
    reps, t = timed(lambda: run("acc8", 10, body))
    ok, detail = summarize(reps)
    slow = {r.check: r.notes.get("below 5x in some decade", []) for r in reps}
    slow = {k: v for k, v in slow.items() if v}
    if slow:
        detail += f"  single decade below 5x: {slow}"
    assert announce(8, "limit deviations at eps 1e-3..1e-6, 10 draws per target", ok, t, 120, detail)


def test_9_reproducible(announce, tmp_path):
    def once(name):
        out = tmp_path / name
        cmd = [sys.executable, "-m", "qlax.cli", "verify", "--suite", "all", "--seed", "7", "--out", str(out)]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        return out.read_bytes()
    (a, b), t = timed(lambda: (once("a.json"), once("b.json")))
    assert announce(9, "verify --suite all twice, byte-identical", a == b and len(a) > 0, t, 120)
