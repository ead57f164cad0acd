#include "rsrepair/linalg.hpp"

#include <stdexcept>

#include "rsrepair/errors.hpp"

namespace rsrepair {
namespace {

// Incremental row echelon form over B for vectors in B^t.
class Echelon {
 public:
  explicit Echelon(const Tower& tw) : tw_(tw) {}

  // Reduces v against the stored rows; if a nonzero residue remains it is
  // normalized and kept, and the rank grows.
  bool try_add(std::vector<Belem> v) {
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == v.size()) return false;
    const Belem s = tw_.b_inv(v[lead]);
    for (auto& c : v) c = tw_.b_mul(s, c);
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
  }

  void reduce(std::vector<Belem>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Belem c = v[pivots_[r]];
      if (c == tw_.b_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = tw_.b_sub(v[j], tw_.b_mul(c, rows_[r][j]));
    }
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t leading(const std::vector<Belem>& v) const {
    std::size_t j = 0;
    while (j < v.size() && v[j] == tw_.b_zero()) ++j;
    return j;
  }

  const Tower& tw_;
  std::vector<std::vector<Belem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::size_t rank_over_b(const Tower& tw, std::span<const Felem> elems) {
  Echelon ech(tw);
  for (Felem e : elems) ech.try_add(tw.ref_coords(e));
  return ech.rank();
}

bool is_independent_over_b(const Tower& tw, std::span<const Felem> elems) {
  return rank_over_b(tw, elems) == elems.size();
}

std::vector<Belem> coords_in_basis(const Tower& tw, Felem x,
                                   std::span<const Felem> basis) {
  const std::size_t t = tw.t(), s = basis.size();
  if (s > t) throw std::invalid_argument("basis larger than dim_B(F)");
  // Augmented system [columns | x] in B^t, eliminated by Gauss-Jordan.
  std::vector<std::vector<Belem>> cols;
  cols.reserve(s + 1);
  for (Felem b : basis) cols.push_back(tw.ref_coords(b));
  cols.push_back(tw.ref_coords(x));

  std::vector<std::size_t> pivot_of_col(s, t);
  std::vector<bool> used(t, false);
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t pr = t;
    for (std::size_t r = 0; r < t; ++r)
      if (!used[r] && cols[c][r] != tw.b_zero()) {
        pr = r;
        break;
      }
    if (pr == t) throw std::invalid_argument("dependent basis");
    used[pr] = true;
    pivot_of_col[c] = pr;
    const Belem sc = tw.b_inv(cols[c][pr]);
    for (std::size_t cc = 0; cc <= s; ++cc)
      cols[cc][pr] = tw.b_mul(sc, cols[cc][pr]);
    for (std::size_t r = 0; r < t; ++r) {
      if (r == pr) continue;
      const Belem f = cols[c][r];
      if (f == tw.b_zero()) continue;
      for (std::size_t cc = 0; cc <= s; ++cc)
        cols[cc][r] = tw.b_sub(cols[cc][r], tw.b_mul(f, cols[cc][pr]));
    }
  }
  // Any residue in the RHS outside pivot rows witnesses x outside the span.
  for (std::size_t r = 0; r < t; ++r)
    if (!used[r] && cols[s][r] != tw.b_zero())
      throw NotInSpanError("element is not in the span of the basis");
  std::vector<Belem> out(s, tw.b_zero());
  for (std::size_t c = 0; c < s; ++c) out[c] = cols[s][pivot_of_col[c]];
  return out;
}

BBasis trace_kernel_basis(const Tower& tw) {
  if (tw.t() == 1)
    throw std::domain_error("trace kernel is trivial: for t=1 the trace is a bijection");
  BBasis basis;
  Echelon ech(tw);
  for (std::uint32_t i = 1; i < tw.q() && basis.size() < tw.t() - 1; ++i) {
    const Felem e = tw.gen_pow(i);
    if (tw.trace(e) != tw.b_zero()) continue;
    if (ech.try_add(tw.ref_coords(e))) basis.push_back(e);
  }
  if (basis.size() != tw.t() - 1)
    throw std::logic_error("trace kernel has unexpected dimension");
  return basis;
}

BBasis root_space(const Tower& tw, Felem a, Felem b) {
  if (a == b) throw std::domain_error("root space requires two distinct points");
  const Felem s = tw.inv(tw.sub(b, a));
  BBasis basis = trace_kernel_basis(tw);
  for (auto& e : basis) e = tw.mul(s, e);
  return basis;
}

BBasis dual_basis(const Tower& tw, std::span<const Felem> basis) {
  const std::size_t t = tw.t();
  if (basis.size() != t)
    throw std::invalid_argument("dual basis needs a full basis of size t");
  // Solve T X = I over B where T[i][k] = Tr(u_i g^k); column j of X holds
  // the reference coordinates of u_j^perp.
  std::vector<std::vector<Belem>> aug(t, std::vector<Belem>(2 * t, tw.b_zero()));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t k = 0; k < t; ++k)
      aug[i][k] = tw.trace(tw.mul(basis[i], tw.gen_pow(k)));
    aug[i][t + i] = tw.b_one();
  }
  for (std::size_t c = 0; c < t; ++c) {
    std::size_t pr = c;
    while (pr < t && aug[pr][c] == tw.b_zero()) ++pr;
    if (pr == t) throw std::invalid_argument("dependent basis");
    std::swap(aug[pr], aug[c]);
    const Belem s = tw.b_inv(aug[c][c]);
    for (auto& v : aug[c]) v = tw.b_mul(s, v);
    for (std::size_t r = 0; r < t; ++r) {
      if (r == c) continue;
      const Belem f = aug[r][c];
      if (f == tw.b_zero()) continue;
      for (std::size_t j = 0; j < 2 * t; ++j)
        aug[r][j] = tw.b_sub(aug[r][j], tw.b_mul(f, aug[c][j]));
    }
  }
  BBasis dual(t);
  std::vector<Belem> col(t);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = 0; k < t; ++k) col[k] = aug[k][t + j];
    dual[j] = tw.from_ref_coords(col);
  }
  return dual;
}

Felem reconstruct_with_dual(const Tower& tw, std::span<const Belem> traces,
                            std::span<const Felem> dual) {
  Felem acc = tw.zero();
  for (std::size_t i = 0; i < dual.size(); ++i)
    acc = tw.add(acc, tw.scale(traces[i], dual[i]));
  return acc;
}

Felem reconstruct_from_traces(const Tower& tw, std::span<const Belem> traces,
                              std::span<const Felem> basis) {
  if (traces.size() != basis.size())
    throw std::invalid_argument("one trace per basis element is required");
  return reconstruct_with_dual(tw, traces, dual_basis(tw, basis));
}

std::pair<BBasis, Felem> extend_basis(const Tower& tw,
                                      std::span<const Felem> partial) {
  if (partial.size() >= tw.t())
    throw std::invalid_argument("basis is already complete");
  Echelon ech(tw);
  for (Felem e : partial)
    if (!ech.try_add(tw.ref_coords(e)))
      throw std::invalid_argument("dependent basis");
  for (std::uint32_t i = 1; i < tw.q(); ++i) {
    const Felem e = tw.gen_pow(i);
    if (ech.try_add(tw.ref_coords(e))) {
      BBasis full(partial.begin(), partial.end());
      full.push_back(e);
      return {std::move(full), e};
    }
  }
  throw std::logic_error("scan failed to extend the basis");  // unreachable
}

BBasis complete_basis(const Tower& tw, std::span<const Felem> partial) {
  BBasis cur(partial.begin(), partial.end());
  while (cur.size() < tw.t()) cur = extend_basis(tw, cur).first;
  return cur;
}

}  // namespace rsrepair
