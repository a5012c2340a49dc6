"""Hermite-spectral numerics: coefficients, harmonic oscillator powers, growth envelopes."""

import json as _json

from ._core import (
    HermiteSeries,
    InputError,
    analyze,
    apply_H,
    gauss_hermite_rule,
    hermite_eval,
    hermite_eval_multi,
    log_envelope_coeff_flat,
    log_envelope_coeff_s,
    log_envelope_E,
    log_envelope_norm_s,
    log_l2_norm,
    log_lp_norm,
    log_norm_sequence,
    make_preset,
    synthesize,
)
from . import _core


def classify(series):
    """Classification report as a dict."""
    return _json.loads(_core.classify_json(series))


def cross_validate(series, sigma, n_max=40):
    """Coefficient-route and norm-route fits at sigma as a dict."""
    return _json.loads(_core.cross_validate_json(series, sigma, n_max))


def check_lemma_g_h(R):
    return _json.loads(_core.check_lemma_g_h_json(R))


def check_lemma_F_monotone(sigma):
    return _json.loads(_core.check_lemma_F_monotone_json(sigma))


def check_inf_over_t(r1, sigma=1.0):
    return _json.loads(_core.check_inf_over_t_json(r1, sigma))


def check_lemma_fsr(r):
    return _json.loads(_core.check_lemma_fsr_json(r))


__all__ = [
    "HermiteSeries",
    "InputError",
    "analyze",
    "apply_H",
    "check_inf_over_t",
    "check_lemma_F_monotone",
    "check_lemma_fsr",
    "check_lemma_g_h",
    "classify",
    "cross_validate",
    "gauss_hermite_rule",
    "hermite_eval",
    "hermite_eval_multi",
    "log_envelope_E",
    "log_envelope_coeff_flat",
    "log_envelope_coeff_s",
    "log_envelope_norm_s",
    "log_l2_norm",
    "log_lp_norm",
    "log_norm_sequence",
    "make_preset",
    "synthesize",
]
