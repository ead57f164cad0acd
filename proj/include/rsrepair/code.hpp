#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsrepair/tower.hpp"

namespace rsrepair {

/// A check polynomial p(x) = tau * Tr(u(x - alpha)) / (x - alpha), stored
/// functionally. For u != 0 its degree is |B|^(t-1) - 1, so it is a dual
/// codeword of any eligible code. tau = 1 means unscaled.
struct CheckSpec {
  Felem u;
  Felem alpha;
  Felem tau;
};

/// Horner evaluation of a coefficient vector (low-to-high) at x.
Felem poly_eval(const Tower& tw, std::span<const Felem> coeffs, Felem x);

/// Evaluates the check at x; at x = alpha the removable singularity gives
/// tau * u.
Felem check_eval(const Tower& tw, const CheckSpec& c, Felem x);

/// Monomial coefficients of the check, degree exactly |B|^(t-1) - 1.
/// Throws std::invalid_argument for u = 0 (the zero polynomial).
std::vector<Felem> expand_check(const Tower& tw, const CheckSpec& c);

/// The entire node-facing wire contract: a surviving node receives one
/// demand coefficient and answers with one sub-symbol Tr(c * symbol).
inline Belem respond_demand(const Tower& tw, Felem demand, Felem symbol) {
  return tw.trace(tw.mul(demand, symbol));
}

/// An [n,k] Reed-Solomon code over F with ordered evaluation points.
/// Construction computes the dual GRS multipliers and cross-checks them
/// against the dual-code orthogonality relation on random pairs.
class Code {
 public:
  static Code make(TowerPtr tower, std::vector<Felem> points, std::uint32_t k);
  /// A = every element of F in ascending code order (0, 1, g, ...).
  static Code full_length(TowerPtr tower, std::uint32_t k);
  /// A = the first n elements in ascending code order.
  static Code prefix(TowerPtr tower, std::uint32_t n, std::uint32_t k);

  const Tower& tower() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }
  const std::vector<Felem>& points() const { return points_; }
  std::uint32_t n() const { return static_cast<std::uint32_t>(points_.size()); }
  std::uint32_t k() const { return k_; }
  /// n - k >= |B|^(t-1): both trace repair schemes need this many checks.
  bool repair_eligible() const { return repair_eligible_; }

  /// Codeword (f(a_1), ..., f(a_n)) for the message read as coefficients
  /// of f, low-to-high. Throws std::invalid_argument on wrong length.
  std::vector<Felem> encode(std::span<const Felem> message) const;

  /// Dual GRS column multipliers lambda_i = prod_{j != i} (a_i - a_j)^(-1).
  const std::vector<Felem>& multipliers() const { return multipliers_; }

  /// Unique f of degree < k through the given positions; extra positions
  /// are verified and an inconsistency raises CorruptionError. Returns k
  /// coefficients, low-to-high.
  std::vector<Felem> interpolate_decode(std::span<const std::uint32_t> positions,
                                        std::span<const Felem> values) const;

  /// Header line plus one coordinate string per symbol.
  std::string codeword_to_string(std::span<const Felem> symbols) const;
  /// Parses the codeword_to_string form; validates the header against this
  /// code.
  std::vector<Felem> codeword_from_string(const std::string& text) const;

 private:
  Code(TowerPtr tower, std::vector<Felem> points, std::uint32_t k);
  void validate_multipliers() const;

  TowerPtr tower_;
  std::vector<Felem> points_;
  std::uint32_t k_;
  bool repair_eligible_;
  std::vector<Felem> multipliers_;
};

}  // namespace rsrepair
