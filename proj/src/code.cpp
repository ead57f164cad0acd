#include "rsrepair/code.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rsrepair/errors.hpp"
#include "rsrepair/rng.hpp"

namespace rsrepair {

Felem poly_eval(const Tower& tw, std::span<const Felem> coeffs, Felem x) {
  Felem acc = tw.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = tw.add(tw.mul(acc, x), coeffs[i]);
  return acc;
}

Felem check_eval(const Tower& tw, const CheckSpec& c, Felem x) {
  if (x == c.alpha) return tw.mul(c.tau, c.u);
  const Felem dx = tw.sub(x, c.alpha);
  const Felem tr = tw.embed(tw.trace(tw.mul(c.u, dx)));
  return tw.mul(c.tau, tw.div(tr, dx));
}

std::vector<Felem> expand_check(const Tower& tw, const CheckSpec& c) {
  if (c.u == tw.zero())
    throw std::invalid_argument("check with u = 0 is the zero polynomial");
  // Tr(u(x-a))/(x-a) = sum_i u^(bq^i) (x-a)^(bq^i - 1), and each
  // (x-a)^(e-1) with e a power of the characteristic expands as
  // sum_{j<e} a^(e-1-j) x^j.
  const std::uint64_t bq = tw.subfield_size();
  std::uint64_t len = 1;  // bq^(t-1) coefficients, degree bq^(t-1) - 1
  for (std::uint32_t i = 0; i + 1 < tw.t(); ++i) len *= bq;
  std::vector<Felem> out(len, tw.zero());
  Felem ue = c.u;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < tw.t(); ++i) {
    // a^(e-1-j) for j = 0..e-1, accumulated from the top power down
    Felem apow = tw.one();
    std::vector<Felem> term(e, tw.zero());
    for (std::uint64_t j = e; j-- > 0;) {
      term[j] = tw.mul(ue, apow);
      apow = tw.mul(apow, c.alpha);
    }
    for (std::uint64_t j = 0; j < e; ++j) out[j] = tw.add(out[j], term[j]);
    ue = tw.pow(ue, bq);
    e *= bq;
  }
  for (auto& v : out) v = tw.mul(c.tau, v);
  if (out.back() == tw.zero())
    throw std::logic_error("check polynomial lost its leading coefficient");
  return out;
}

Code::Code(TowerPtr tower, std::vector<Felem> points, std::uint32_t k)
    : tower_(std::move(tower)), points_(std::move(points)), k_(k) {
  const std::uint32_t n = static_cast<std::uint32_t>(points_.size());
  if (n < 2 || n > tower_->q())
    throw std::invalid_argument("need 2 <= n <= |F| evaluation points");
  if (k_ < 1 || k_ >= n) throw std::invalid_argument("need 1 <= k < n");
  std::set<Felem> uniq(points_.begin(), points_.end());
  if (uniq.size() != points_.size())
    throw std::invalid_argument("evaluation points must be distinct");

  std::uint64_t checks = 1;
  for (std::uint32_t i = 0; i + 1 < tower_->t(); ++i) checks *= tower_->subfield_size();
  repair_eligible_ = (n - k_ >= checks);

  const Tower& tw = *tower_;
  multipliers_.assign(n, tw.zero());
  if (n == tw.q()) {
    // Full length: the locator is x^q - x, whose derivative is -1.
    const Felem lam = tw.inv(tw.neg(tw.one()));
    std::fill(multipliers_.begin(), multipliers_.end(), lam);
  } else {
    for (std::uint32_t i = 0; i < n; ++i) {
      Felem prod = tw.one();
      for (std::uint32_t j = 0; j < n; ++j)
        if (j != i) prod = tw.mul(prod, tw.sub(points_[i], points_[j]));
      multipliers_[i] = tw.inv(prod);
    }
  }
  validate_multipliers();
}

void Code::validate_multipliers() const {
  // The closed product formula is cross-checked against the defining
  // property of the dual code: sum_i lambda_i p(a_i) f(a_i) = 0 for
  // deg(f) < k and deg(p) < n - k. 100 random pairs, fixed seed.
  const Tower& tw = *tower_;
  Xoshiro256StarStar rng(0x52535245u ^ (std::uint64_t(tw.q()) << 20 | n() << 8 | k()));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Felem> f(k_), p(n() - k_);
    for (auto& c : f) c = Felem(static_cast<std::uint32_t>(rng.below(tw.q())));
    for (auto& c : p) c = Felem(static_cast<std::uint32_t>(rng.below(tw.q())));
    Felem acc = tw.zero();
    for (std::uint32_t i = 0; i < n(); ++i) {
      const Felem fe = poly_eval(tw, f, points_[i]);
      const Felem pe = poly_eval(tw, p, points_[i]);
      acc = tw.add(acc, tw.mul(multipliers_[i], tw.mul(pe, fe)));
    }
    if (acc != tw.zero())
      throw std::logic_error("dual multipliers failed the orthogonality check");
  }
}

Code Code::make(TowerPtr tower, std::vector<Felem> points, std::uint32_t k) {
  return Code(std::move(tower), std::move(points), k);
}

Code Code::full_length(TowerPtr tower, std::uint32_t k) {
  std::vector<Felem> pts;
  pts.reserve(tower->q());
  for (std::uint32_t c = 0; c < tower->q(); ++c) pts.push_back(Felem(c));
  return Code(std::move(tower), std::move(pts), k);
}

Code Code::prefix(TowerPtr tower, std::uint32_t n, std::uint32_t k) {
  if (n > tower->q()) throw std::invalid_argument("n exceeds |F|");
  std::vector<Felem> pts;
  pts.reserve(n);
  for (std::uint32_t c = 0; c < n; ++c) pts.push_back(Felem(c));
  return Code(std::move(tower), std::move(pts), k);
}

std::vector<Felem> Code::encode(std::span<const Felem> message) const {
  if (message.size() != k_)
    throw std::invalid_argument("message must have k symbols");
  std::vector<Felem> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i)
    out[i] = poly_eval(*tower_, message, points_[i]);
  return out;
}

std::vector<Felem> Code::interpolate_decode(
    std::span<const std::uint32_t> positions,
    std::span<const Felem> values) const {
  const Tower& tw = *tower_;
  if (positions.size() != values.size())
    throw std::invalid_argument("positions and values must pair up");
  if (positions.size() < k_)
    throw std::invalid_argument("interpolation needs at least k positions");
  std::set<std::uint32_t> uniq(positions.begin(), positions.end());
  if (uniq.size() != positions.size())
    throw std::invalid_argument("duplicate interpolation positions");
  for (auto pos : positions)
    if (pos >= points_.size())
      throw std::invalid_argument("interpolation position out of range");

  // Lagrange through the first k positions.
  std::vector<Felem> coeffs(k_, tw.zero());
  for (std::uint32_t s = 0; s < k_; ++s) {
    // numerator polynomial prod_{r != s} (x - a_r), built incrementally
    std::vector<Felem> num = {tw.one()};
    Felem denom = tw.one();
    for (std::uint32_t r = 0; r < k_; ++r) {
      if (r == s) continue;
      const Felem ar = points_[positions[r]];
      num.push_back(tw.zero());
      for (std::size_t d = num.size(); d-- > 1;)
        num[d] = tw.add(tw.mul(num[d], tw.neg(ar)), num[d - 1]);
      num[0] = tw.mul(num[0], tw.neg(ar));
      denom = tw.mul(denom, tw.sub(points_[positions[s]], ar));
    }
    const Felem scale = tw.div(values[s], denom);
    for (std::size_t d = 0; d < num.size(); ++d)
      coeffs[d] = tw.add(coeffs[d], tw.mul(scale, num[d]));
  }
  // Extra positions must agree with the interpolant.
  for (std::size_t i = k_; i < positions.size(); ++i)
    if (poly_eval(tw, coeffs, points_[positions[i]]) != values[i])
      throw CorruptionError("over-determined interpolation input is inconsistent");
  return coeffs;
}

std::string Code::codeword_to_string(std::span<const Felem> symbols) const {
  if (symbols.size() != points_.size())
    throw std::invalid_argument("codeword must have n symbols");
  std::ostringstream os;
  os << tower_->to_string() << " n=" << points_.size() << " k=" << k_ << '\n';
  for (Felem s : symbols) os << tower_->felem_to_string(s) << '\n';
  return os.str();
}

std::vector<Felem> Code::codeword_from_string(const std::string& text) const {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header))
    throw std::invalid_argument("missing codeword header");
  std::ostringstream expected;
  expected << tower_->to_string() << " n=" << points_.size() << " k=" << k_;
  if (header != expected.str())
    throw std::invalid_argument("codeword header does not match this code");
  std::vector<Felem> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(tower_->felem_from_string(line));
  }
  if (out.size() != points_.size())
    throw std::invalid_argument("codeword symbol count does not match n");
  return out;
}

}  // namespace rsrepair
