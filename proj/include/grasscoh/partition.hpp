#pragma once

// Integer partitions, the k x l bounding box, and the rectangle-decomposition
// bijection behind the q-binomial filtration identity.

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace grasscoh {

// Row/column bounds for the truncation box: k rows, l columns.
struct Box {
  int k = 1;
  int l = 1;

  Box(int k_, int l_) : k(k_), l(l_) {
    if (k < 1 || l < 1) throw std::invalid_argument("Box: bounds must be >= 1");
  }
  long long cells() const { return 1LL * k * l; }
  friend bool operator==(const Box&, const Box&) = default;
};

// Weakly decreasing sequence of positive integers; canonical form stores no
// trailing zeros.  operator< is lexicographic on the part sequence (a proper
// prefix precedes its extensions); this is the canonical total order used for
// every matrix row/column indexing in the library.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i - 1] < parts_[i]))
        throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // 0-based row index; rows past the end are 0.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  bool fits(const Box& box) const {
    return length() <= box.k && part(0) <= box.l;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < length(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[static_cast<std::size_t>(i)]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

// Transpose of the Ferrers diagram.
inline Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.part(0)), 0);
  for (int i = 0; i < p.length(); ++i)
    for (int c = 0; c < p.part(i); ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

// 180-degree rotated complement within the box; |p| + |p^c| = k*l.
inline Partition complement_in_box(const Partition& p, const Box& box) {
  if (!p.fits(box)) throw std::invalid_argument("complement_in_box: partition exceeds box");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(box.k));
  for (int i = box.k - 1; i >= 0; --i) out.push_back(box.l - p.part(i));
  return Partition(std::move(out));
}

// Side of the largest square subdiagram: max i with p_i >= i.
inline int durfee(const Partition& p) {
  int d = 0;
  while (d < p.length() && p.part(d) >= d + 1) ++d;
  return d;
}

// Diagram containment: inner_i <= outer_i for every row.
inline bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 0; i < inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

// Dominance order on partitions of equal weight: a <= b iff every prefix sum
// of a is at most the matching prefix sum of b.
inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    throw std::invalid_argument("dominance_leq: weights differ");
  int sa = 0, sb = 0;
  int n = std::max(a.length(), b.length());
  for (int i = 0; i < n; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

namespace detail {
inline void gen_bounded(std::vector<Partition>& out, std::vector<int>& acc,
                        int max_part, int rows_left, int weight_left,
                        bool exact_weight) {
  if (!exact_weight || weight_left == 0) out.push_back(Partition(acc));
  if (rows_left == 0 || weight_left == 0) return;
  int hi = std::min(max_part, weight_left);
  for (int p = hi; p >= 1; --p) {
    acc.push_back(p);
    gen_bounded(out, acc, p, rows_left - 1, weight_left - p, exact_weight);
    acc.pop_back();
  }
}
}  // namespace detail

// All partitions inside the box, in canonical (lexicographic) order.
inline std::vector<Partition> enumerate_in_box(const Box& box) {
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::gen_bounded(out, acc, box.l, box.k, box.k * box.l, false);
  std::sort(out.begin(), out.end());
  return out;
}

// Partitions of weight d inside the box, canonical order.
inline std::vector<Partition> enumerate_in_box(const Box& box, int d) {
  std::vector<Partition> out;
  if (d < 0 || d > box.k * box.l) return out;
  std::vector<int> acc;
  detail::gen_bounded(out, acc, std::min(box.l, d), box.k, d, true);
  std::sort(out.begin(), out.end());
  return out;
}

// Partitions of n with every part <= max_part (any number of rows),
// canonical order.  These index monomials in e_1..e_{max_part}.
inline std::vector<Partition> partitions_with_max_part(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  detail::gen_bounded(out, acc, std::min(max_part, n), n == 0 ? 0 : n, n, true);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Partition> partitions_of(int n) {
  return partitions_with_max_part(n, n);
}

// The four-piece decomposition of a nonempty partition in a box: a j x (l-i+1)
// rectangle, a column of height i atop its first column, a partition c in a
// j x (i-1) rectangle to the right, and a partition d in an i x (l-i)
// rectangle above.  Weight identity: i + j*(l-i+1) + |c| + |d| = |p|.
struct Prop5Decomposition {
  int i = 1;      // column height, 1..min(k,l)
  int j = 0;      // rectangle rows, 0..k-i
  Partition c;    // fits j x (i-1)
  Partition d;    // fits i x (l-i)

  friend bool operator==(const Prop5Decomposition&, const Prop5Decomposition&) = default;
};

inline int prop5_weight(const Prop5Decomposition& dec, const Box& box) {
  return dec.i + dec.j * (box.l - dec.i + 1) + dec.c.weight() + dec.d.weight();
}

inline Prop5Decomposition prop5_decompose(const Partition& p, const Box& box) {
  if (p.empty()) throw std::invalid_argument("prop5_decompose: empty partition");
  if (!p.fits(box)) throw std::invalid_argument("prop5_decompose: partition exceeds box");

  const int s = p.length();
  // Complement of (p_1,...,p_{s-1}) inside an (s-1) x l rectangle.
  std::vector<int> bar;
  bar.reserve(static_cast<std::size_t>(s - 1));
  for (int t = s - 2; t >= 0; --t) bar.push_back(box.l - p.part(t));
  const Partition pbar(std::move(bar));

  Prop5Decomposition dec;
  dec.i = durfee(pbar) + 1;
  dec.j = s - dec.i;

  std::vector<int> c, d;
  for (int t = 0; t < dec.j; ++t) c.push_back(p.part(t) - (box.l - dec.i + 1));
  for (int t = dec.j; t < s; ++t) d.push_back(p.part(t) - 1);
  dec.c = Partition(std::move(c));
  dec.d = Partition(std::move(d));
  return dec;
}

inline Partition prop5_compose(const Prop5Decomposition& dec, const Box& box) {
  if (dec.i < 1 || dec.i > box.l || dec.j < 0 || dec.i + dec.j > box.k)
    throw std::invalid_argument("prop5_compose: (i,j) out of range for box");
  if (dec.c.length() > dec.j || dec.c.part(0) > dec.i - 1)
    throw std::invalid_argument("prop5_compose: c exceeds its j x (i-1) rectangle");
  if (dec.d.length() > dec.i || dec.d.part(0) > box.l - dec.i)
    throw std::invalid_argument("prop5_compose: d exceeds its i x (l-i) rectangle");

  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(dec.i + dec.j));
  for (int t = 0; t < dec.j; ++t) parts.push_back(dec.c.part(t) + box.l - dec.i + 1);
  for (int t = 0; t < dec.i; ++t) parts.push_back(dec.d.part(t) + 1);
  return Partition(std::move(parts));
}

}  // namespace grasscoh
