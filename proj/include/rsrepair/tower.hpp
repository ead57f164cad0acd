#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rsrepair {

/// Element of the extension field F = GF(p^(m*t)). One stored symbol.
/// The code packs the GF(p) coordinates in the power basis of the defining
/// polynomial, mixed-radix with digit i the coefficient of x^i.
class Felem {
 public:
  constexpr Felem() = default;
  constexpr explicit Felem(std::uint32_t code) : v_(code) {}
  constexpr std::uint32_t code() const { return v_; }
  friend constexpr bool operator==(Felem, Felem) = default;
  friend constexpr auto operator<=>(Felem, Felem) = default;

 private:
  std::uint32_t v_ = 0;
};

/// Element of the base field B = GF(p^m). One sub-symbol, the unit in which
/// repair bandwidth is counted. Digit j is the coefficient of subfield_gen^j.
class Belem {
 public:
  constexpr Belem() = default;
  constexpr explicit Belem(std::uint32_t code) : v_(code) {}
  constexpr std::uint32_t code() const { return v_; }
  friend constexpr bool operator==(Belem, Belem) = default;
  friend constexpr auto operator<=>(Belem, Belem) = default;

 private:
  std::uint32_t v_ = 0;
};

/// The two-level field tower GF(p) c B = GF(p^m) c F = GF(p^(m*t)) with a
/// fixed representation: F is GF(p)[x]/(irr), B sits inside F as the span of
/// powers of subfield_gen, and all arithmetic runs off log/antilog tables
/// built at construction. Immutable afterwards and safe to share across
/// threads.
///
/// Defaults are deterministic so fixtures reproduce across implementations:
/// the defining polynomial is the lexicographically least monic irreducible
/// (coefficients compared low degree first) and the canonical generator is
/// the least primitive element in the integer encoding.
class Tower {
 public:
  /// Builds and validates a tower. Throws std::invalid_argument for a
  /// composite p, a reducible or non-monic polynomial, or |F| > 2^16.
  static std::shared_ptr<const Tower> make(
      std::uint32_t p, std::uint32_t m, std::uint32_t t,
      const std::optional<std::vector<std::uint32_t>>& irr = std::nullopt);

  /// Parses the textual form, e.g. "p=2 m=1 t=2 irr=1,1,1".
  static std::shared_ptr<const Tower> from_string(const std::string& text);
  std::string to_string() const;

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t t() const { return t_; }
  std::uint32_t q() const { return q_; }            // |F|
  std::uint32_t subfield_size() const { return bq_; }  // |B|
  const std::vector<std::uint32_t>& irr() const { return irr_; }

  Felem generator() const { return gen_; }          // canonical primitive g
  Felem subfield_gen() const { return sub_gen_; }   // generates B inside F

  Felem zero() const { return Felem(0); }
  Felem one() const { return Felem(1); }
  Belem b_zero() const { return Belem(0); }
  Belem b_one() const { return Belem(1); }

  // --- F arithmetic ---------------------------------------------------
  Felem add(Felem a, Felem b) const;
  Felem neg(Felem a) const;
  Felem sub(Felem a, Felem b) const { return add(a, neg(b)); }
  Felem mul(Felem a, Felem b) const {
    if (a.code() == 0 || b.code() == 0) return Felem(0);
    return Felem(antilog_[log_[a.code()] + log_[b.code()]]);
  }
  Felem inv(Felem a) const;
  Felem div(Felem a, Felem b) const { return mul(a, inv(b)); }
  Felem pow(Felem a, std::uint64_t e) const;
  /// g^i for any i >= 0.
  Felem gen_pow(std::uint64_t i) const { return Felem(antilog_[i % (q_ - 1)]); }

  // --- element codecs --------------------------------------------------
  Felem from_code(std::uint32_t code) const;
  Felem from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Felem a) const;
  std::string felem_to_string(Felem a) const;
  Felem felem_from_string(const std::string& text) const;

  // --- subfield --------------------------------------------------------
  Felem embed(Belem b) const { return Felem(embed_[b.code()]); }
  bool in_subfield(Felem a) const { return project_[a.code()] != NOT_IN_B; }
  /// Inverse of embed(). Throws std::domain_error if a is not in B.
  Belem project(Felem a) const;

  /// Tr_{F/B}(a) = sum of a^(|B|^i), i = 0..t-1. Table lookup.
  Belem trace(Felem a) const { return Belem(trace_[a.code()]); }

  // --- B arithmetic (routed through the embedding) ----------------------
  Belem b_add(Belem a, Belem b) const;
  Belem b_neg(Belem a) const;
  Belem b_sub(Belem a, Belem b) const { return b_add(a, b_neg(b)); }
  Belem b_mul(Belem a, Belem b) const {
    return project(mul(embed(a), embed(b)));
  }
  Belem b_inv(Belem a) const { return project(inv(embed(a))); }
  Belem b_from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> b_coords(Belem a) const;
  std::string belem_to_string(Belem a) const;
  /// Scale a field element by a base-field scalar.
  Felem scale(Belem c, Felem a) const { return mul(embed(c), a); }

  // --- F as a B-vector space --------------------------------------------
  /// Coordinates of a in the fixed reference basis {g^i : i < t} of F over B.
  std::vector<Belem> ref_coords(Felem a) const;
  Felem from_ref_coords(std::span<const Belem> coords) const;

 private:
  Tower() = default;
  static constexpr std::uint32_t NOT_IN_B = 0xFFFFFFFFu;

  std::uint32_t p_ = 0, m_ = 0, t_ = 0, q_ = 0, bq_ = 0, d_ = 0;
  std::vector<std::uint32_t> irr_;  // degree m*t, monic, low-to-high, length d+1
  Felem gen_, sub_gen_;

  std::vector<std::uint32_t> log_;      // q entries, log_[0] unused
  std::vector<std::uint32_t> antilog_;  // 2(q-1) entries, doubled to skip mod
  std::vector<std::uint32_t> trace_;    // q entries, B-codes
  std::vector<std::uint32_t> embed_;    // |B| entries, F-codes
  std::vector<std::uint32_t> project_;  // q entries, B-code or NOT_IN_B
  std::vector<std::uint32_t> ref_inv_;  // d*d GF(p) matrix, row-major
};

using TowerPtr = std::shared_ptr<const Tower>;

}  // namespace rsrepair
