"""Verification suites: independent seeded trials over every check.

Each trial gets its own child Rng, so trials can run in any order (or in
parallel) and the merged report is still a pure function of the seed.
Draws that hit a non-generic locus are resampled from a fresh child stream.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from qlax import degen, lax, weyl
from qlax.core import check_evolution, check_identities
from qlax.exact import NonGeneric, Rng, sample_rational
from qlax.report import Report

SUITES = ("core", "lax", "weyl", "degeneration")
MAX_ATTEMPTS = 50


def core_trial(rng: Rng) -> list[Report]:
    params, s, z = lax.sample_e8_draw(rng)
    h, g, u = sample_rational(rng), sample_rational(rng), sample_rational(rng)
    return [check_identities(params, h, z, g, u), check_evolution(params, s)]


def lax_trial(rng: Rng) -> list[Report]:
    params, s, z = lax.sample_e8_draw(rng)
    seeds = (sample_rational(rng), sample_rational(rng))
    y = lax.propagate_y(seeds[0], seeds[1], z, s, params, 3)
    ybar = lax.ybar_from_y(y, s, params)
    return [
        lax.check_compatibility(params, s, z, rng, seeds),
        lax.check_proof_chain(params, s, z, rng),
        lax.check_lemma_ratio_constancy(params, s, rng),
        lax.check_l1_curve(params, z, y.triple(0), rng),
        lax.check_residues(params, z),
        lax.check_ycoef_proportional(params, z, rng, samples=5),
        lax.check_l1u_geometry(params, s, z, ybar.triple(0), rng),
    ]


def weyl_trial(rng: Rng) -> list[Report]:
    params, s, _ = lax.sample_e8_draw(rng)
    return [
        weyl.check_coxeter(params, s, rng),
        weyl.check_translation(params, s),
        weyl.check_q_invariance(params, s),
        weyl.check_configuration(params, s),
        weyl.check_r_action(params, s),
    ]


def degeneration_trial(rng: Rng, systems: Sequence[str] = degen.SYSTEMS,
                       epsilons: Sequence[Fraction] = degen.DEFAULT_EPSILONS) -> list[Report]:
    out = []
    for system in systems:
        params, s, z = degen.sample_deg_draw(system, rng)
        out.append(degen.deg_check_evolution(params, s))
        out.append(degen.deg_check_compatibility(system, params, s, z, rng))
        if system == "e7":
            out.append(degen.check_e7_configuration(params))
        out.append(degen.check_limit(system, epsilons, rng))
    return out


def run_trials(label: str, trials: int, rng: Rng,
               body: Callable[[Rng], Iterable[Report]]) -> list[Report]:
    """Run ``body`` once per trial and merge reports by check name.

    Merging follows trial index order, whatever order the trials ran in.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    merged: dict[str, Report] = {}
    for trial in range(trials):
        reports = None
        resamples = 0
        for attempt in range(MAX_ATTEMPTS):
            try:
                reports = list(body(rng.child(f"{label}:{trial}", attempt)))
                break
            except NonGeneric:
                resamples += 1
        if reports is None:
            failed = Report(f"{label}_sampling")
            failed.record(False, trial=trial, reason="no generic draw found")
            reports = [failed]
        for rep in reports:
            if resamples:
                rep.notes["resamples"] = rep.notes.get("resamples", 0) + resamples
            if rep.check in merged:
                merged[rep.check].merge(rep)
            else:
                merged[rep.check] = rep
    return [merged[k] for k in sorted(merged)]


def run_suite(name: str, trials: int, rng: Rng, systems: Sequence[str] = degen.SYSTEMS,
              epsilons: Sequence[Fraction] = degen.DEFAULT_EPSILONS) -> list[Report]:
    if name == "core":
        return run_trials("core", trials, rng, core_trial)
    if name == "lax":
        return run_trials("lax", trials, rng, lax_trial)
    if name == "weyl":
        return run_trials("weyl", trials, rng, weyl_trial)
    if name == "degeneration":
        return run_trials("degeneration", trials, rng,
                          lambda r: degeneration_trial(r, systems, epsilons))
    raise ValueError(f"unknown suite {name!r}")
