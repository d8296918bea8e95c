#pragma once

// Integer-coefficient polynomials in one variable q, the carrier for every
// Hilbert series and q-binomial in the library.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "grasscoh/numeric.hpp"

namespace grasscoh {

class QPoly {
 public:
  QPoly() = default;
  QPoly(int c) { set(0, c); }
  QPoly(Int c) { set(0, std::move(c)); }

  static QPoly monomial(int exp, Int c = 1) {
    QPoly p;
    p.set(exp, std::move(c));
    return p;
  }

  const std::map<int, Int>& coefficients() const { return coeffs_; }

  Int coefficient(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is "none".
  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }

  Int value_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  QPoly& operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
    return r;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  friend QPoly operator*(const QPoly& a, const Int& s) {
    QPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.coeffs_) r.set(e, c * s);
    return r;
  }

  // Multiply by q^exp.
  QPoly shifted(int exp) const {
    QPoly r;
    for (const auto& [e, c] : coeffs_) r.set(e + exp, c);
    return r;
  }

  bool palindromic() const {
    if (coeffs_.empty()) return true;
    int lo = coeffs_.begin()->first, hi = coeffs_.rbegin()->first;
    for (const auto& [e, c] : coeffs_)
      if (c != coefficient(lo + hi - e)) return false;
    return true;
  }

  friend bool operator==(const QPoly&, const QPoly&) = default;

  // "1 + q + 2q^2 - q^5" style; "0" for the zero polynomial.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      Int a = c;
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (e == 0) {
        out << a.str();
      } else {
        if (a != 1) out << a.str();
        out << (e == 1 ? "q" : "q^" + std::to_string(e));
      }
      first = false;
    }
    return out.str();
  }

 private:
  void set(int exp, Int c) {
    if (c != 0) coeffs_[exp] = std::move(c);
  }
  void add(int exp, const Int& c) {
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, Int> coeffs_;  // exponent -> nonzero coefficient
};

// {"<exponent>": <coefficient>, ...}
inline void to_json(nlohmann::json& j, const QPoly& p) {
  j = nlohmann::json::object();
  for (const auto& [e, c] : p.coefficients()) j[std::to_string(e)] = int_to_json(c);
}

inline void from_json(const nlohmann::json& j, QPoly& p) {
  p = QPoly();
  for (auto it = j.begin(); it != j.end(); ++it) {
    Int c = it.value().is_string() ? Int(it.value().get<std::string>())
                                   : Int(it.value().get<std::int64_t>());
    p += QPoly::monomial(std::stoi(it.key()), c);
  }
}

}  // namespace grasscoh
