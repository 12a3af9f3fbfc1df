#ifndef MMSLCP_MODEL_HPP
#define MMSLCP_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmslcp {

enum class OptionKind { Call, Put };

/**
 * Market data of a single-asset American option.
 *
 * strike, volatility and expiry must be strictly positive; the dividend yield
 * must be nonnegative.
 */
template <typename Scalar = double>
struct MarketParams {
  Scalar strike = Scalar(100);
  Scalar rate = Scalar(0.05);
  Scalar volatility = Scalar(0.2);
  Scalar dividend = Scalar(0);
  Scalar expiry = Scalar(50);
  OptionKind kind = OptionKind::Put;

  void validate() const {
    if (!(strike > 0)) throw std::invalid_argument("strike must be positive");
    if (!(volatility > 0))
      throw std::invalid_argument("volatility must be positive");
    if (!(expiry > 0)) throw std::invalid_argument("expiry must be positive");
    if (!(dividend >= 0))
      throw std::invalid_argument("dividend yield must be nonnegative");
    if (!std::isfinite(rate)) throw std::invalid_argument("rate must be finite");
  }
};

/**
 * Constants of the change of variables
 *   S = K e^x,  t = T - 2 tau / sigma^2,  V = K e^{alpha x + beta tau} u(x, tau)
 * that maps the Black-Scholes operator onto the heat operator.
 */
template <typename Scalar = double>
struct TransformConstants {
  Scalar h;        // 2 r / sigma^2
  Scalar h_delta;  // 2 (r - delta) / sigma^2
  Scalar alpha;    // -(h_delta - 1) / 2
  Scalar beta;     // -(h_delta - 1)^2 / 4 - h
  Scalar tau_max;  // sigma^2 T / 2
};

template <typename Scalar>
TransformConstants<Scalar> compute_transform_constants(
    const MarketParams<Scalar>& p) {
  p.validate();
  const Scalar s2 = p.volatility * p.volatility;
  TransformConstants<Scalar> c;
  c.h = 2 * p.rate / s2;
  c.h_delta = 2 * (p.rate - p.dividend) / s2;
  c.alpha = -(c.h_delta - 1) / 2;
  c.beta = -(c.h_delta - 1) * (c.h_delta - 1) / 4 - c.h;
  c.tau_max = s2 * p.expiry / 2;
  return c;
}

/// Payoff G(S) in original variables.
template <typename Scalar>
Scalar original_payoff(Scalar asset, Scalar strike, OptionKind kind) {
  return kind == OptionKind::Call ? std::max(asset - strike, Scalar(0))
                                  : std::max(strike - asset, Scalar(0));
}

/// Obstacle g(x, tau) of the heat-form complementarity problem.
template <typename Scalar>
Scalar transformed_payoff(Scalar x, Scalar tau,
                          const TransformConstants<Scalar>& c,
                          OptionKind kind) {
  using std::exp;
  const Scalar hm = c.h_delta - 1;
  const Scalar hp = c.h_delta + 1;
  const Scalar growth = exp(tau / 4 * (hm * hm + 4 * c.h));
  const Scalar up = exp(x / 2 * hp);
  const Scalar down = exp(x / 2 * hm);
  const Scalar spread = kind == OptionKind::Call ? up - down : down - up;
  return growth * std::max(spread, Scalar(0));
}

template <typename Scalar = double>
struct AssetPoint {
  Scalar asset;  // S
  Scalar time;   // t
  Scalar value;  // V
};

/// Maps a transformed value u(x, tau) back to (S, t, V).
template <typename Scalar>
AssetPoint<Scalar> recover_option_value(Scalar u, Scalar x, Scalar tau,
                                        const MarketParams<Scalar>& p,
                                        const TransformConstants<Scalar>& c) {
  using std::exp;
  AssetPoint<Scalar> out;
  out.asset = p.strike * exp(x);
  out.time = p.expiry - 2 * tau / (p.volatility * p.volatility);
  out.value = p.strike * exp(c.alpha * x + c.beta * tau) * u;
  return out;
}

template <typename Scalar = double>
struct HeatCoordinates {
  Scalar x;
  Scalar tau;
};

/// Inverse of the coordinate part of recover_option_value.
template <typename Scalar>
HeatCoordinates<Scalar> to_heat_coordinates(Scalar asset, Scalar time,
                                            const MarketParams<Scalar>& p) {
  using std::log;
  return {log(asset / p.strike),
          (p.expiry - time) * p.volatility * p.volatility / 2};
}

}  // namespace mmslcp

#endif  // MMSLCP_MODEL_HPP
