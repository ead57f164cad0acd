#include "rsrepair/tower.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rsrepair {
namespace {

constexpr std::uint32_t MAX_FIELD = 1u << 16;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), low-to-high coefficients, no leading zeros.
using Poly = std::vector<std::uint32_t>;

void strip(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  strip(r);
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0: Fermat.
  std::uint32_t r = 1, e = p - 2, base = a % p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

Poly pmod(Poly a, const Poly& f, std::uint32_t p) {
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    std::uint32_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - c * f[i] % p)) % p;
    strip(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  return pmod(pmul(a, b, p), f, p);
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r = {1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.empty()) {
    Poly r = pmod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Rabin test: f of degree d is irreducible over GF(p) iff x^(p^d) == x
// (mod f) and gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(f.size()) - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  const Poly x = {0, 1};
  for (std::uint32_t r : prime_factors(d)) {
    Poly h = ppowmod(x, upow(p, d / r), f, p);
    // h - x
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    strip(h);
    Poly g = pgcd(f, h, p);
    if (g.size() != 1) return false;
  }
  Poly h = ppowmod(x, upow(p, d), f, p);
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] + p - 1) % p;
  strip(h);
  return h.empty();
}

// Lexicographically least monic irreducible of degree d, coefficient lists
// compared low degree first.
Poly default_irreducible(std::uint32_t p, std::uint32_t d) {
  const std::uint64_t total = upow(p, d);
  for (std::uint64_t n = 0; n < total; ++n) {
    Poly f(d + 1, 0);
    f[d] = 1;
    // Big-endian digits of n: digit for x^0 is the most significant, so
    // ascending n enumerates coefficient tuples in lex order.
    std::uint64_t v = n;
    for (std::uint32_t i = 0; i < d; ++i) {
      f[d - 1 - i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<std::uint32_t> code_digits(std::uint32_t code, std::uint32_t p,
                                       std::uint32_t d) {
  std::vector<std::uint32_t> out(d, 0);
  for (std::uint32_t i = 0; i < d && code; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t digits_code(std::span<const std::uint32_t> digits,
                          std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
  return code;
}

// GF(p) matrix inverse by Gauss-Jordan; empty result if singular.
std::vector<std::uint32_t> invert_matrix(std::vector<std::uint32_t> a,
                                         std::uint32_t n, std::uint32_t p) {
  std::vector<std::uint32_t> inv(n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return {};
    if (piv != col)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    const std::uint32_t s = inv_mod(a[col * n + col], p);
    for (std::uint32_t j = 0; j < n; ++j) {
      a[col * n + j] = a[col * n + j] * s % p;
      inv[col * n + j] = inv[col * n + j] * s % p;
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const std::uint32_t c = a[r * n + col];
      for (std::uint32_t j = 0; j < n; ++j) {
        a[r * n + j] = (a[r * n + j] + (p - c) * a[col * n + j]) % p;
        inv[r * n + j] = (inv[r * n + j] + (p - c) * inv[col * n + j]) % p;
      }
    }
  }
  return inv;
}

}  // namespace

std::shared_ptr<const Tower> Tower::make(
    std::uint32_t p, std::uint32_t m, std::uint32_t t,
    const std::optional<std::vector<std::uint32_t>>& irr_opt) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (m < 1 || t < 1) throw std::invalid_argument("m and t must be >= 1");
  const std::uint32_t d = m * t;
  std::uint64_t q64 = upow(p, d);
  if (q64 > MAX_FIELD)
    throw std::invalid_argument("field too large: |F| = p^(m*t) must be <= 2^16");

  auto tw = std::shared_ptr<Tower>(new Tower());
  tw->p_ = p;
  tw->m_ = m;
  tw->t_ = t;
  tw->d_ = d;
  tw->q_ = static_cast<std::uint32_t>(q64);
  tw->bq_ = static_cast<std::uint32_t>(upow(p, m));

  if (irr_opt) {
    const auto& f = *irr_opt;
    if (f.size() != d + 1)
      throw std::invalid_argument("defining polynomial must have degree m*t");
    if (f.back() != 1) throw std::invalid_argument("defining polynomial must be monic");
    for (auto c : f)
      if (c >= p) throw std::invalid_argument("polynomial coefficient out of range");
    if (!is_irreducible(f, p))
      throw std::invalid_argument("defining polynomial is reducible over GF(p)");
    tw->irr_ = f;
  } else {
    tw->irr_ = default_irreducible(p, d);
  }

  const std::uint32_t q = tw->q_;

  // Multiplication in the power-basis representation, used only while the
  // tables are being built.
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly pa = code_digits(a, p, d), pb = code_digits(b, p, d);
    strip(pa);
    strip(pb);
    Poly r = pmulmod(pa, pb, tw->irr_, p);
    r.resize(d, 0);
    return digits_code(r, p);
  };
  auto raw_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  // Canonical generator: least primitive element in the integer encoding.
  const auto factors = prime_factors(q - 1);
  std::uint32_t g = 0;
  for (std::uint32_t c = q > 2 ? 2 : 1; c < q; ++c) {
    bool primitive = true;
    for (std::uint32_t r : factors)
      if (raw_pow(c, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = c;
      break;
    }
  }
  if (g == 0) {
    if (q == 2) {
      g = 1;  // GF(2): the unit group is trivial
    } else {
      throw std::logic_error("no primitive element found");
    }
  }
  tw->gen_ = Felem(g);

  tw->log_.assign(q, 0);
  tw->antilog_.assign(2 * (q - 1), 0);
  std::uint32_t acc = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    tw->antilog_[i] = acc;
    tw->antilog_[i + (q - 1)] = acc;
    tw->log_[acc] = i;
    acc = raw_mul(acc, g);
  }
  if (acc != 1) throw std::logic_error("generator order mismatch");

  // Subfield generator and the embed/project tables.
  const std::uint32_t bq = tw->bq_;
  const std::uint32_t sub_exp = (q - 1) / (bq - 1 == 0 ? 1 : bq - 1);
  tw->sub_gen_ = bq == 2 ? Felem(1) : Felem(tw->antilog_[sub_exp]);
  std::vector<std::uint32_t> sub_pows(m, 1);
  for (std::uint32_t j = 1; j < m; ++j)
    sub_pows[j] = raw_mul(sub_pows[j - 1], tw->sub_gen_.code());

  tw->embed_.assign(bq, 0);
  tw->project_.assign(q, NOT_IN_B);
  for (std::uint32_t bc = 0; bc < bq; ++bc) {
    const auto digs = code_digits(bc, p, m);
    std::uint32_t x = 0;
    for (std::uint32_t j = 0; j < m; ++j) {
      // add digs[j] * sub_pows[j] coordinate-wise
      std::uint32_t term = raw_mul(digs[j] % p, sub_pows[j]);
      auto xa = code_digits(x, p, d);
      auto ta = code_digits(term, p, d);
      for (std::uint32_t i = 0; i < d; ++i) xa[i] = (xa[i] + ta[i]) % p;
      x = digits_code(xa, p);
    }
    if (tw->project_[x] != NOT_IN_B)
      throw std::logic_error("subfield generator does not span GF(p^m)");
    tw->embed_[bc] = x;
    tw->project_[x] = bc;
  }

  // Trace table: Tr(a) = sum of a^(bq^i), i < t. Must land in B.
  auto add_codes = [&](std::uint32_t x, std::uint32_t y) {
    if (p == 2) return x ^ y;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      r += (x % p + y % p) % p * mult;
      x /= p;
      y /= p;
      mult *= p;
    }
    return r;
  };
  tw->trace_.assign(q, 0);
  for (std::uint32_t c = 0; c < q; ++c) {
    std::uint32_t s = 0;
    std::uint32_t y = c;
    for (std::uint32_t i = 0; i < t; ++i) {
      s = add_codes(s, y);
      if (i + 1 < t && y != 0)
        y = tw->antilog_[std::uint64_t(tw->log_[y]) * bq % (q - 1)];
    }
    if (tw->project_[s] == NOT_IN_B)
      throw std::logic_error("trace left the subfield");
    tw->trace_[c] = tw->project_[s];
  }

  // Reference basis {subfield_gen^j * g^i} of F over GF(p): invert its
  // coordinate matrix so B-coordinates of any element come from one
  // matrix-vector product.
  std::vector<std::uint32_t> mat(d * d, 0);
  for (std::uint32_t i = 0; i < t; ++i) {
    const std::uint32_t gi = i == 0 ? 1 : tw->antilog_[i % (q - 1)];
    for (std::uint32_t j = 0; j < m; ++j) {
      const std::uint32_t e = raw_mul(sub_pows[j], gi);
      const auto digs = code_digits(e, p, d);
      for (std::uint32_t row = 0; row < d; ++row)
        mat[row * d + (i * m + j)] = digs[row];
    }
  }
  tw->ref_inv_ = invert_matrix(std::move(mat), d, p);
  if (tw->ref_inv_.empty())
    throw std::logic_error("reference basis is singular");

  return tw;
}

Felem Tower::add(Felem a, Felem b) const {
  if (p_ == 2) return Felem(a.code() ^ b.code());
  std::uint32_t x = a.code(), y = b.code(), r = 0, mult = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += (x % p_ + y % p_) % p_ * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return Felem(r);
}

Felem Tower::neg(Felem a) const {
  if (p_ == 2) return a;
  std::uint32_t x = a.code(), r = 0, mult = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t dgt = x % p_;
    r += (dgt == 0 ? 0 : p_ - dgt) * mult;
    x /= p_;
    mult *= p_;
  }
  return Felem(r);
}

Felem Tower::inv(Felem a) const {
  if (a.code() == 0) throw std::domain_error("inverse of zero");
  return Felem(antilog_[(q_ - 1) - log_[a.code()]]);
}

Felem Tower::pow(Felem a, std::uint64_t e) const {
  if (a.code() == 0) return e == 0 ? one() : zero();
  const std::uint64_t le = log_[a.code()] % (q_ - 1);
  return Felem(antilog_[(le * (e % (q_ - 1))) % (q_ - 1)]);
}

Felem Tower::from_code(std::uint32_t code) const {
  if (code >= q_) throw std::invalid_argument("element code out of range");
  return Felem(code);
}

Felem Tower::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() != d_)
    throw std::invalid_argument("coordinate vector must have length m*t");
  for (auto c : coords)
    if (c >= p_) throw std::invalid_argument("coordinate out of range");
  return Felem(digits_code(coords, p_));
}

std::vector<std::uint32_t> Tower::coords(Felem a) const {
  return code_digits(a.code(), p_, d_);
}

Belem Tower::project(Felem a) const {
  const std::uint32_t b = project_[a.code()];
  if (b == NOT_IN_B) throw std::domain_error("element is not in the subfield");
  return Belem(b);
}

Belem Tower::b_add(Belem a, Belem b) const {
  if (p_ == 2) return Belem(a.code() ^ b.code());
  std::uint32_t x = a.code(), y = b.code(), r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (x % p_ + y % p_) % p_ * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return Belem(r);
}

Belem Tower::b_neg(Belem a) const {
  if (p_ == 2) return a;
  std::uint32_t x = a.code(), r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t dgt = x % p_;
    r += (dgt == 0 ? 0 : p_ - dgt) * mult;
    x /= p_;
    mult *= p_;
  }
  return Belem(r);
}

Belem Tower::b_from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() != m_)
    throw std::invalid_argument("coordinate vector must have length m");
  for (auto c : coords)
    if (c >= p_) throw std::invalid_argument("coordinate out of range");
  return Belem(digits_code(coords, p_));
}

std::vector<std::uint32_t> Tower::b_coords(Belem a) const {
  return code_digits(a.code(), p_, m_);
}

std::vector<Belem> Tower::ref_coords(Felem a) const {
  const auto digs = code_digits(a.code(), p_, d_);
  std::vector<std::uint32_t> y(d_, 0);
  for (std::uint32_t r = 0; r < d_; ++r) {
    std::uint64_t s = 0;
    for (std::uint32_t c = 0; c < d_; ++c) s += ref_inv_[r * d_ + c] * digs[c];
    y[r] = static_cast<std::uint32_t>(s % p_);
  }
  std::vector<Belem> out(t_);
  for (std::uint32_t i = 0; i < t_; ++i)
    out[i] = Belem(digits_code(std::span(y).subspan(i * m_, m_), p_));
  return out;
}

Felem Tower::from_ref_coords(std::span<const Belem> coords) const {
  if (coords.size() != t_)
    throw std::invalid_argument("reference coordinates must have length t");
  Felem acc = zero();
  for (std::uint32_t i = 0; i < t_; ++i)
    acc = add(acc, mul(embed(coords[i]), gen_pow(i)));
  return acc;
}

std::string Tower::to_string() const {
  std::ostringstream os;
  os << "p=" << p_ << " m=" << m_ << " t=" << t_ << " irr=";
  for (std::size_t i = 0; i < irr_.size(); ++i) {
    if (i) os << ',';
    os << irr_[i];
  }
  return os.str();
}

namespace {
std::vector<std::uint32_t> parse_uint_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  return out;
}
}  // namespace

std::shared_ptr<const Tower> Tower::from_string(const std::string& text) {
  std::uint32_t p = 0, m = 0, t = 0;
  std::optional<std::vector<std::uint32_t>> irr;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad tower token: " + tok);
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "p") p = std::stoul(val);
    else if (key == "m") m = std::stoul(val);
    else if (key == "t") t = std::stoul(val);
    else if (key == "irr") irr = parse_uint_list(val);
    else throw std::invalid_argument("unknown tower key: " + key);
  }
  if (p == 0 || m == 0 || t == 0)
    throw std::invalid_argument("tower text needs p=, m=, t=");
  return make(p, m, t, irr);
}

std::string Tower::felem_to_string(Felem a) const {
  const auto digs = coords(a);
  std::ostringstream os;
  for (std::size_t i = 0; i < digs.size(); ++i) {
    if (i) os << ',';
    os << digs[i];
  }
  return os.str();
}

Felem Tower::felem_from_string(const std::string& text) const {
  return from_coords(parse_uint_list(text));
}

std::string Tower::belem_to_string(Belem a) const {
  const auto digs = b_coords(a);
  std::ostringstream os;
  for (std::size_t i = 0; i < digs.size(); ++i) {
    if (i) os << ',';
    os << digs[i];
  }
  return os.str();
}

}  // namespace rsrepair
