#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hgl/series.hpp"
#include "json.hpp"

namespace hgl {

/// exp(-|x|^2 / (2 w^2)) analyzed to degree M. Requires w > 0, M <= 60.
HermiteSeries preset_gaussian(double width, int dimension, int max_degree, std::optional<int> quad_order = {});

/// The single Hermite function h_alpha. The cutoff is max(|alpha| + 8, max_degree)
/// so the series is recognized as a finite expansion.
HermiteSeries preset_hermite(const MultiIndex& alpha, int max_degree = 0);

/// exp(-|x - shift|^2 / (2 w^2)) exp(i frequency x_1) analyzed to degree M.
HermiteSeries preset_modulated_gaussian(double width, double shift, double frequency, int dimension, int max_degree,
                                        std::optional<int> quad_order = {});

/// d = 1, c_k = r^k k!^{-1/(2 sigma) - excess}, k = 0..M. excess = 0 is the
/// flat-sigma fixture, excess > 0 a Beurling witness. Shells whose log
/// magnitude would fall below -700 are dropped and the cutoff lowered.
HermiteSeries synthetic_flat(double sigma, double r, int max_degree, double excess = 0.0);

/// d = 1, c_k = exp(-r k^{1/(2s)}), same underflow cap.
HermiteSeries synthetic_s(double s, double r, int max_degree);

/// Random complex coefficients (standard normal parts) on every alpha with
/// |alpha| <= M, cutoff max(2M, M + 8). Deterministic in seed.
HermiteSeries finite_random(int max_degree, std::uint64_t seed, int dimension = 1);

/// A preset built from its textual spelling.
struct Preset {
  std::string name;
  nlohmann::json parameters;
  HermiteSeries series;
};

/// Parses "name(a,b,...)": gaussian(w), hermite(a1,...,ad),
/// modulated_gaussian(w,shift,freq), synthetic_flat(sigma,r,M),
/// beurling_flat(sigma,r,M[,excess]), synthetic_s(s,r,M), finite_random(M,seed).
/// dimension and max_degree apply to analyzed presets (and finite_random's d).
/// Throws std::invalid_argument on unknown names or bad parameters.
Preset make_preset(std::string_view spec, int dimension = 1, int max_degree = 20, std::optional<int> quad_order = {});

}  // namespace hgl
