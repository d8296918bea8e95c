#pragma once

// Built-in oracle cross-checks at desk scale: every primary algorithm is run
// against its independent second route.  A clean build passes all of them.

#include <iostream>
#include <string>

#include "grasscoh/grasscoh.hpp"

namespace grasscoh {

namespace detail {

class SelftestRunner {
 public:
  explicit SelftestRunner(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok) {
    out_ << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    all_ok_ = all_ok_ && ok;
  }

  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

}  // namespace detail

inline bool run_selftest(std::ostream& out = std::cout) {
  detail::SelftestRunner t(out);

  {  // q-binomial symmetry, palindromy, q-Pascal, value at q = 1
    bool ok = true;
    for (int n = 0; n <= 12 && ok; ++n)
      for (int r = 0; r <= n && ok; ++r) {
        const QPoly b = qbinomial(n, r);
        ok = b == qbinomial(n, n - r) && b.palindromic() && b.value_at_one() == binomial(n, r);
        if (ok && r >= 1)
          ok = b == qbinomial(n - 1, r - 1) + qbinomial(n - 1, r).shifted(r);
      }
    t.check("q-binomial identities (n <= 12)", ok);
  }
  {  // box partition counts against the Hilbert series
    bool ok = true;
    for (int k = 1; k <= 5 && ok; ++k)
      for (int l = 1; l <= 5 && ok; ++l) {
        const QPoly hs = grassmannian_hilb(k, l);
        for (int d = 0; d <= k * l && ok; ++d)
          ok = hs.coefficient(d) == Int(enumerate_in_box(Box(k, l), d).size());
      }
    t.check("Hilbert series counts box partitions (k,l <= 5)", ok);
  }
  {  // the q-identity and its bijection
    bool ok = true;
    for (int k = 1; k <= 5 && ok; ++k)
      for (int l = 1; l <= 5 && ok; ++l) {
        ok = prop5_check(k, l).holds();
        const Box box(k, l);
        for (const auto& p : enumerate_in_box(box)) {
          if (p.empty()) continue;
          const auto dec = prop5_decompose(p, box);
          if (prop5_compose(dec, box) != p || prop5_weight(dec, box) != p.weight()) {
            ok = false;
            break;
          }
        }
      }
    t.check("rectangle-decomposition identity and bijection (k,l <= 5)", ok);
  }
  {  // the f-recurrence rewriting of the filtration series
    bool ok = true;
    for (int l = 1; l <= 6 && ok; ++l)
      for (int k = 1; k <= l && ok; ++k)
        for (int m = 0; m <= k && ok; ++m)
          ok = conj1_rhs_via_f(k, l, m) == conj1_rhs(k, l, m);
    t.check("f-recurrence form equals the double sum (k <= l <= 6)", ok);
  }
  {  // hook-length formula against exhaustive tableau counting
    bool ok = true;
    Int sumsq_total = 0;
    for (int n = 0; n <= 7 && ok; ++n) {
      Int sumsq = 0;
      for (const auto& p : partitions_of(n)) {
        const Int f = hook_length_f(p);
        if (f != brute_force_syt(p) || f != hook_length_f(conjugate(p))) ok = false;
        sumsq += f * f;
      }
      if (sumsq != factorial(n)) ok = false;
      sumsq_total += sumsq;
    }
    t.check("hook-length formula vs brute force, sum f^2 = n! (n <= 7)", ok);
  }
  {  // LR multiplication against the signed Jacobi-Trudi route
    bool ok = true;
    for (int k = 2; k <= 3 && ok; ++k)
      for (int l = 2; l <= 3 && ok; ++l) {
        const BoxContext ctx(k, l);
        for (int wa = 0; wa <= 3 && ok; ++wa)
          for (int wb = 0; wb <= 3 && ok; ++wb)
            for (const auto& a : enumerate_in_box(ctx.box, wa))
              for (const auto& b : enumerate_in_box(ctx.box, wb))
                if (multiply(schur(ctx, a), schur(ctx, b)) != multiply_via_jt(schur(ctx, a), b)) {
                  ok = false;
                }
      }
    t.check("LR product equals signed Jacobi-Trudi route (boxes <= 3x3)", ok);
  }
  {  // Poincare pairing and top e_1 powers
    bool ok = true;
    for (int k = 2; k <= 3 && ok; ++k)
      for (int l = 2; l <= 3 && ok; ++l) {
        const BoxContext ctx(k, l);
        const Partition top = complement_in_box(Partition(), ctx.box);
        for (const auto& a : enumerate_in_box(ctx.box))
          for (const auto& b : enumerate_in_box(ctx.box, k * l - a.weight())) {
            const Rat c = coefficient(multiply(schur(ctx, a), schur(ctx, b)), top);
            if (c != (b == complement_in_box(a, ctx.box) ? Rat(1) : Rat(0))) ok = false;
          }
        RingElement p = one(ctx);
        for (int i = 0; i < k * l; ++i) p = pieri_e(p, 1);
        if (coefficient(p, top) != Rat(hook_length_f(top))) ok = false;
        if (!pieri_e(p, 1).is_zero()) ok = false;
      }
    t.check("Poincare pairing and e_1 top powers (boxes <= 3x3)", ok);
  }
  {  // late vs stepwise truncation of e-monomials
    bool ok = true;
    for (int k = 2; k <= 3 && ok; ++k)
      for (int l = 2; l <= 3 && ok; ++l) {
        const BoxContext ctx(k, l);
        for (int w = 0; w <= 5 && ok; ++w)
          for (const auto& exps : partitions_with_max_part(w, k))
            if (e_monomial(ctx, exps) != e_monomial_late_truncation(ctx, exps)) ok = false;
      }
    t.check("stepwise truncation equals late truncation (weight <= 5)", ok);
  }
  {  // spanning-set ranks: Pieri route vs Jacobi-Trudi inverse route
    bool ok = true;
    const Box box(2, 3);
    const BoxContext ctx(box);
    EMonomialCache cache(ctx);
    for (int m = 1; m <= 2 && ok; ++m)
      for (int d = 0; d <= 6 && ok; ++d) {
        const auto via_jt = e_to_schur_via_jt_inverse(box, d);
        const auto full = partitions_of(d);
        const auto rows = partitions_with_max_part(d, m);
        RationalMatrix sel(static_cast<int>(rows.size()), via_jt.cols());
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const auto pos = std::lower_bound(full.begin(), full.end(), rows[r]) - full.begin();
          for (int c = 0; c < via_jt.cols(); ++c)
            sel.at(static_cast<int>(r), c) = via_jt.at(static_cast<int>(pos), c);
        }
        ok = rank(sel) == rank(detail::subalgebra_degree_matrix(cache, m, d));
      }
    t.check("subalgebra ranks agree across expansion routes (box 2x3)", ok);
  }
  {  // omega: involution and multiplicativity on square boxes
    bool ok = true;
    for (int k = 2; k <= 3 && ok; ++k) {
      const BoxContext ctx(k, k);
      for (const auto& a : enumerate_in_box(ctx.box, 2))
        for (const auto& b : enumerate_in_box(ctx.box, 2)) {
          const RingElement x = schur(ctx, a), y = schur(ctx, b);
          if (omega(omega(x)) != x) ok = false;
          if (omega(multiply(x, y)) != multiply(omega(x), omega(y))) ok = false;
        }
      if (omega(e(ctx, 2)) != h(ctx, 2)) ok = false;
    }
    t.check("omega is a multiplicative involution, e_2 <-> h_2", ok);
  }
  {  // Jacobi-Trudi determinants reproduce the defining relations
    bool ok = true;
    for (int k = 1; k <= 3 && ok; ++k)
      for (int l = 1; l <= 3 && ok; ++l) {
        const BoxContext ctx(k, l);
        for (int r = 1; r <= l && ok; ++r) ok = jacobi_trudi_h(ctx, r) == h(ctx, r);
        for (int r = l + 1; r <= l + k && ok; ++r) ok = jacobi_trudi_h(ctx, r).is_zero();
      }
    t.check("Jacobi-Trudi h_r relations (boxes <= 3x3)", ok);
  }
  {  // Hard Lefschetz, Ax = b, triangularity at small scale
    bool ok = true;
    for (int k = 1; k <= 3 && ok; ++k)
      for (int l = 1; l <= 3 && ok; ++l) {
        ok = check_hard_lefschetz(k, l).holds();
        for (int m = 1; m <= k && ok; ++m) {
          if (k * l >= 2 * m) ok = check_ax_equals_b(k, l, m).holds();
          if (ok && m <= std::min(k, l)) ok = check_e_schur_triangular(k, l, m).holds();
        }
      }
    t.check("Hard Lefschetz, Ax = b, e/s triangularity (k,l <= 3)", ok);
  }
  {  // gamma formulas and the degree-2 system
    bool ok = true;
    for (int k = 2; k <= 3 && ok; ++k)
      for (int l = 2; l <= 4 && ok; ++l) {
        ok = gamma_formula_check(k, l).holds() && check_lemma_m2(k, l).holds();
      }
    t.check("gamma hook formulas and the (x,y) system (2 <= k <= 3, l <= 4)", ok);
  }

  return t.all_ok();
}

}  // namespace grasscoh
