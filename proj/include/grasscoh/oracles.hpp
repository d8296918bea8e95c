#pragma once

// Independent second routes for cross-checking the primary algorithms.  Each
// oracle deliberately avoids the code path it is used to check: the signed
// Jacobi-Trudi product route never runs the Littlewood-Richardson rule, and
// the transition-matrix route recovers Schur expansions of e-monomials by
// exact linear algebra instead of Pieri steps.

#include <map>
#include <vector>

#include "grasscoh/exact_linalg.hpp"
#include "grasscoh/partition.hpp"
#include "grasscoh/schur_ring.hpp"

namespace grasscoh {

// x * s_mu computed by expanding s_mu into signed e-monomials and applying
// each through iterated Pieri steps.
inline RingElement multiply_via_jt(const RingElement& x, const Partition& mu) {
  RingElement out(x.box());
  for (const auto& [key, coeff] : jt_e_expansion(mu)) {
    RingElement term = x;
    for (int t = 0; t < key.length() && !term.is_zero(); ++t)
      term = pieri_e(term, key.part(t));
    out += term * Rat(coeff);
  }
  return out;
}

// Schur expansions of all weight-d e-monomials at once, obtained by inverting
// the signed Jacobi-Trudi transition matrix over the rationals in the
// untruncated ring and then discarding out-of-box shapes.  Row indices are
// the e-monomial exponent partitions of d, columns the box partitions of d
// in canonical order.
inline RationalMatrix e_to_schur_via_jt_inverse(const Box& box, int d) {
  const auto full = partitions_of(d);  // shapes and e-indices both range here
  const int n = static_cast<int>(full.size());
  RationalMatrix jt(n, n);
  for (int r = 0; r < n; ++r) {
    const auto expansion = jt_e_expansion(full[static_cast<std::size_t>(r)]);
    for (int c = 0; c < n; ++c) {
      auto it = expansion.find(full[static_cast<std::size_t>(c)]);
      if (it != expansion.end()) jt.at(r, c) = Rat(it->second);
    }
  }
  const auto inv = inverse(jt);
  if (!inv) throw std::logic_error("e_to_schur_via_jt_inverse: transition matrix singular");

  const auto basis = enumerate_in_box(box, d);
  RationalMatrix out(n, static_cast<int>(basis.size()));
  for (int r = 0; r < n; ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      // column of the full matrix matching this box shape
      const auto pos = std::lower_bound(full.begin(), full.end(), basis[c]) - full.begin();
      out.at(r, static_cast<int>(c)) = inv->at(r, static_cast<int>(pos));
    }
  return out;
}

// e_lambda computed untruncated (in a box large enough to hold every shape of
// this weight) and truncated once at the end.
inline RingElement e_monomial_late_truncation(const BoxContext& ctx, const Partition& exps) {
  const int w = exps.weight();
  const BoxContext wide(std::max(w, 1), std::max(w, 1));
  const RingElement full = e_monomial(wide, exps);
  RingElement out(ctx.box);
  for (const auto& [p, c] : full.terms())
    if (p.fits(ctx.box)) out.add_term(p, c);
  return out;
}

}  // namespace grasscoh
