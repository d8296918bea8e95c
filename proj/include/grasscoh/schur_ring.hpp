#pragma once

// Exact arithmetic in the truncated Schur ring: rational linear combinations
// of s_lambda for lambda inside a fixed k x l box, with Schur terms outside
// the box equal to zero.  Multiplication is the Littlewood-Richardson rule;
// the signed Jacobi-Trudi expansion into e-monomials provides an independent
// second route used by the cross-check suites.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "grasscoh/numeric.hpp"
#include "grasscoh/partition.hpp"

namespace grasscoh {

// Fixes the truncation box for a family of ring elements.  Elements created
// under different contexts never mix.
struct BoxContext {
  Box box;
  explicit BoxContext(Box b) : box(b) {}
  BoxContext(int k, int l) : box(k, l) {}
};

class RingElement {
 public:
  explicit RingElement(Box box) : box_(box) {}

  const Box& box() const { return box_; }
  const std::map<Partition, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Weight shared by all terms; nullopt when zero or mixed.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [p, c] : terms_) {
      if (deg && *deg != p.weight()) return std::nullopt;
      deg = p.weight();
    }
    return deg;
  }

  void add_term(const Partition& p, const Rat& c) {
    if (c == 0) return;
    if (!p.fits(box_)) throw std::invalid_argument("RingElement: partition exceeds box");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  RingElement& operator+=(const RingElement& o) {
    require_same_box(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    require_same_box(o);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }

  friend RingElement operator*(const RingElement& a, const Rat& s) {
    RingElement r(a.box_);
    if (s == 0) return r;
    for (const auto& [p, c] : a.terms_) r.terms_.emplace(p, c * s);
    return r;
  }

  friend bool operator==(const RingElement&, const RingElement&) = default;

  void require_same_box(const RingElement& o) const {
    if (!(box_ == o.box_)) throw std::invalid_argument("RingElement: context mismatch");
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      if (!first) out << " + ";
      out << rat_to_string(c) << "*s" << p.to_string();
      first = false;
    }
    return out.str();
  }

 private:
  Box box_;
  std::map<Partition, Rat> terms_;
};

inline void to_json(nlohmann::json& j, const RingElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : x.terms())
    terms.push_back({{"partition", p}, {"coeff", rat_to_string(c)}});
  j = {{"box", {x.box().k, x.box().l}}, {"terms", terms}};
}

inline RingElement one(const BoxContext& ctx) {
  RingElement r(ctx.box);
  r.add_term(Partition(), 1);
  return r;
}

inline RingElement zero(const BoxContext& ctx) { return RingElement(ctx.box); }

inline RingElement schur(const BoxContext& ctx, const Partition& p) {
  if (!p.fits(ctx.box)) throw std::invalid_argument("schur: partition exceeds box");
  RingElement r(ctx.box);
  r.add_term(p, 1);
  return r;
}

// e_i = s_{1^i}; zero in the ring for i > k.
inline RingElement e(const BoxContext& ctx, int i) {
  if (i < 0) throw std::invalid_argument("e: negative index");
  if (i > ctx.box.k) return zero(ctx);
  return schur(ctx, Partition(std::vector<int>(static_cast<std::size_t>(i), 1)));
}

// h_j = s_{(j)}; zero in the ring for j > l.
inline RingElement h(const BoxContext& ctx, int j) {
  if (j < 0) throw std::invalid_argument("h: negative index");
  if (j > ctx.box.l) return zero(ctx);
  if (j == 0) return one(ctx);
  return schur(ctx, Partition{j});
}

namespace detail {

// Partitions obtained from p by adding a vertical strip of `cells` cells
// (at most one new cell per row), truncated to the box.
inline std::vector<Partition> vertical_strip_additions(const Partition& p, int cells,
                                                       const Box& box) {
  std::vector<Partition> out;
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(box.k));
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (left == 0 && row >= p.length()) {
      out.push_back(Partition(std::vector<int>(acc.begin(), acc.end())));
      return;
    }
    if (row >= box.k || box.k - row < left) return;  // no room for the rest
    const int base = p.part(row);
    const int prev = row == 0 ? box.l : acc[static_cast<std::size_t>(row - 1)];
    // keep the row as is (a zero row would end the shape with cells left over)
    if (base > 0) {
      acc.push_back(base);
      self(self, row + 1, left);
      acc.pop_back();
    }
    // grow the row by one cell
    if (left > 0 && base + 1 <= std::min(prev, box.l)) {
      acc.push_back(base + 1);
      self(self, row + 1, left - 1);
      acc.pop_back();
    }
  };
  rec(rec, 0, cells);
  return out;
}

// Partitions obtained from p by adding a horizontal strip of `cells` cells
// (at most one new cell per column), truncated to the box.
inline std::vector<Partition> horizontal_strip_additions(const Partition& p, int cells,
                                                         const Box& box) {
  std::vector<Partition> out;
  std::vector<int> acc;
  const int max_rows = std::min(box.k, p.length() + 1);
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (left == 0 && row >= p.length()) {
      out.push_back(Partition(std::vector<int>(acc.begin(), acc.end())));
      return;
    }
    if (row >= max_rows) return;
    const int lo = p.part(row);
    // interlacing: the new row may not pass the old row above
    const int hi = std::min(row == 0 ? box.l : p.part(row - 1), std::min(box.l, lo + left));
    for (int v = std::max(lo, 1); v <= hi; ++v) {
      acc.push_back(v);
      self(self, row + 1, left - (v - lo));
      acc.pop_back();
    }
  };
  rec(rec, 0, cells);
  return out;
}

}  // namespace detail

// Multiplication by e_i: add vertical strips of size i to every term.
inline RingElement pieri_e(const RingElement& x, int i) {
  if (i < 0) throw std::invalid_argument("pieri_e: negative index");
  if (i == 0) return x;
  RingElement r(x.box());
  for (const auto& [p, c] : x.terms())
    for (const auto& mu : detail::vertical_strip_additions(p, i, x.box())) r.add_term(mu, c);
  return r;
}

// Multiplication by h_j: add horizontal strips of size j to every term.
inline RingElement pieri_h(const RingElement& x, int j) {
  if (j < 0) throw std::invalid_argument("pieri_h: negative index");
  if (j == 0) return x;
  RingElement r(x.box());
  for (const auto& [p, c] : x.terms())
    for (const auto& mu : detail::horizontal_strip_additions(p, j, x.box())) r.add_term(mu, c);
  return r;
}

// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
// column-strict fillings of nu/lambda with content mu whose reverse reading
// word is a ballot sequence.
inline Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;
  if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
  if (mu.empty()) return 1;

  const int rows = nu.length();
  const int values = mu.length();
  std::vector<std::vector<int>> cell(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    cell[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu.part(r)), 0);
  std::vector<int> used(static_cast<std::size_t>(values) + 1, 0);

  Int count = 0;
  // Reverse reading order: rows top to bottom, columns right to left.
  auto rec = [&](auto&& self, int r, int c) -> void {
    while (r < rows && c < lambda.part(r)) {
      ++r;
      c = r < rows ? nu.part(r) - 1 : 0;
    }
    if (r >= rows) {
      ++count;
      return;
    }
    const int right = c + 1 < nu.part(r) ? cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)] : values;
    const int above = (r > 0 && c >= lambda.part(r - 1)) ? cell[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] : 0;
    const int vmax = std::min({right, r + 1, values});
    for (int v = above + 1; v <= vmax; ++v) {
      if (used[static_cast<std::size_t>(v)] >= mu.part(v - 1)) continue;                   // content bound
      if (v > 1 && used[static_cast<std::size_t>(v)] >= used[static_cast<std::size_t>(v - 1)]) continue;  // ballot
      cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++used[static_cast<std::size_t>(v)];
      if (c > lambda.part(r))
        self(self, r, c - 1);
      else
        self(self, r + 1, r + 1 < rows ? nu.part(r + 1) - 1 : 0);
      --used[static_cast<std::size_t>(v)];
    }
    cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  };
  rec(rec, 0, nu.part(0) - 1);
  return count;
}

// Full product via the Littlewood-Richardson rule, truncating out-of-box terms.
inline RingElement multiply(const RingElement& x, const RingElement& y) {
  x.require_same_box(y);
  const Box& box = x.box();
  RingElement r(box);
  for (const auto& [la, ca] : x.terms())
    for (const auto& [mu, cb] : y.terms()) {
      // c symmetric in the pair; enumerate fillings with the lighter content
      const Partition& big = la.weight() >= mu.weight() ? la : mu;
      const Partition& small = la.weight() >= mu.weight() ? mu : la;
      const Rat coeff = ca * cb;
      for (const auto& nu : enumerate_in_box(box, la.weight() + mu.weight())) {
        if (!contains(nu, big) || !contains(nu, small)) continue;
        Int c = lr_coefficient(nu, big, small);
        if (c != 0) r.add_term(nu, coeff * Rat(c));
      }
    }
  return r;
}

// e_lambda = e_{lambda_1} e_{lambda_2} ... via iterated Pieri; parts larger
// than k annihilate the product.
inline RingElement e_monomial(const BoxContext& ctx, const Partition& exps) {
  RingElement r = one(ctx);
  for (int t = 0; t < exps.length(); ++t) {
    r = pieri_e(r, exps.part(t));
    if (r.is_zero()) break;
  }
  return r;
}

// Memoized e-monomial table for one box; e_lambda is built from the cached
// tail by a single Pieri step. Read-only once a driver has warmed it.
class EMonomialCache {
 public:
  explicit EMonomialCache(const BoxContext& ctx) : ctx_(ctx.box) {}

  const RingElement& get(const Partition& exps) {
    auto it = memo_.find(exps);
    if (it != memo_.end()) return it->second;
    RingElement val(ctx_.box);
    if (exps.empty()) {
      val = one(ctx_);
    } else {
      std::vector<int> tail(exps.parts().begin() + 1, exps.parts().end());
      val = pieri_e(get(Partition(std::move(tail))), exps.part(0));
    }
    return memo_.emplace(exps, std::move(val)).first->second;
  }

  const BoxContext& context() const { return ctx_; }

 private:
  BoxContext ctx_;
  std::map<Partition, RingElement> memo_;
};

inline Rat coefficient(const RingElement& x, const Partition& nu) {
  if (!nu.fits(x.box())) throw std::invalid_argument("coefficient: partition exceeds box");
  auto it = x.terms().find(nu);
  return it == x.terms().end() ? Rat(0) : it->second;
}

// Signed expansion of s_mu as a polynomial in e_1, e_2, ... from the dual
// Jacobi-Trudi determinant det(e_{mu'_i - i + j}).  Keys are the e-index
// multisets (as partitions), values the signed integer coefficients.  The
// expansion lives in the untruncated polynomial ring.
inline std::map<Partition, Int> jt_e_expansion(const Partition& mu) {
  std::map<Partition, Int> result;
  if (mu.empty()) {
    result[Partition()] = 1;
    return result;
  }
  const Partition muc = conjugate(mu);
  const int n = muc.length();
  if (n > 20) throw std::invalid_argument("jt_e_expansion: determinant too large");

  // Laplace expansion along rows, memoized on the set of unused columns.
  std::map<std::uint32_t, std::map<Partition, Int>> memo;
  auto det = [&](auto&& self, std::uint32_t mask) -> const std::map<Partition, Int>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::map<Partition, Int> poly;
    if (mask == 0) {
      poly[Partition()] = 1;
    } else {
      const int row = n - __builtin_popcount(mask);  // 0-based
      int sign = 1;
      for (int col = 0; col < n; ++col) {
        if (!(mask >> col & 1u)) continue;
        const int idx = muc.part(row) + col - row;  // e-index of entry (row, col)
        if (idx >= 0) {
          const auto& sub = self(self, mask & ~(1u << col));
          for (const auto& [key, coeff] : sub) {
            Partition newkey = key;
            if (idx >= 1) {
              std::vector<int> parts = key.parts();
              parts.insert(std::upper_bound(parts.begin(), parts.end(), idx,
                                            std::greater<int>()),
                           idx);
              newkey = Partition(std::move(parts));
            }
            poly[newkey] += sign * coeff;
          }
        }
        sign = -sign;
      }
      std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    }
    return memo.emplace(mask, std::move(poly)).first->second;
  };
  return det(det, n >= 32 ? ~0u : ((1u << n) - 1u));
}

// The r-th complete homogeneous class expanded from its determinant in the
// e's and evaluated by iterated Pieri.  Defining relations of the ring:
// equals h(ctx, r) for r <= l and vanishes for l+1 <= r <= l+k.
inline RingElement jacobi_trudi_h(const BoxContext& ctx, int r) {
  if (r < 1) throw std::invalid_argument("jacobi_trudi_h: r >= 1 required");
  RingElement out(ctx.box);
  for (const auto& [key, coeff] : jt_e_expansion(Partition{r}))
    out += e_monomial(ctx, key) * Rat(coeff);
  return out;
}

// The fundamental involution s_lambda -> s_lambda'; an automorphism exactly
// when the box is square.
inline RingElement omega(const RingElement& x) {
  if (x.box().k != x.box().l) throw std::invalid_argument("omega: requires k == l");
  RingElement r(x.box());
  for (const auto& [p, c] : x.terms()) r.add_term(conjugate(p), c);
  return r;
}

}  // namespace grasscoh
