#pragma once

// Root data and finite reflection groups acting by signed permutations on an
// orthonormal basis x_1..x_d of V* (and dually y_1..y_d of V).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tama/error.hpp"

namespace tama {

inline constexpr int kMaxDim = 8;

/// Signed permutation: w(x_i) = sign(i) * x_{target(i)}.
struct SignedPerm {
  std::array<std::int8_t, kMaxDim> img{};  // +/-(j+1)
  int dim = 0;

  static SignedPerm identity(int d) {
    SignedPerm w;
    w.dim = d;
    for (int i = 0; i < d; ++i) w.img[i] = std::int8_t(i + 1);
    return w;
  }

  int target(int i) const { return std::abs(int(img[i])) - 1; }
  int sign(int i) const { return img[i] > 0 ? 1 : -1; }

  /// Composition (*this) after o.
  SignedPerm operator*(const SignedPerm& o) const {
    SignedPerm out;
    out.dim = dim;
    for (int i = 0; i < dim; ++i) {
      int j = o.target(i);
      out.img[i] = std::int8_t(o.sign(i) * img[j]);
    }
    return out;
  }

  SignedPerm inverse() const {
    SignedPerm out;
    out.dim = dim;
    for (int i = 0; i < dim; ++i) out.img[target(i)] = std::int8_t(sign(i) * (i + 1));
    return out;
  }

  bool is_identity() const { return *this == identity(dim); }

  /// Determinant, +1 or -1.
  int det() const {
    int s = 1;
    std::array<bool, kMaxDim> seen{};
    for (int i = 0; i < dim; ++i) {
      s *= sign(i);
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = target(j)) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// Image of a coordinate vector.
  template <class T>
  std::array<T, kMaxDim> apply(const std::array<T, kMaxDim>& v) const {
    std::array<T, kMaxDim> out{};
    for (int i = 0; i < dim; ++i) out[target(i)] = sign(i) > 0 ? v[i] : -v[i];
    return out;
  }

  std::uint64_t packed() const {
    std::uint64_t k = 0;
    for (int i = 0; i < kMaxDim; ++i) k = (k << 8) | std::uint8_t(img[i]);
    return k;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.img == b.img && a.dim == b.dim; }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.img < b.img; }

  /// Images of x_1..x_d, e.g. "[2,-1,3]".
  std::string to_string() const {
    std::string out = "[";
    for (int i = 0; i < dim; ++i) {
      if (i) out += ",";
      out += std::to_string(int(img[i]));
    }
    return out + "]";
  }
};

enum class Family { A, B, D, A1 };

using IntVec = std::array<int, kMaxDim>;

struct Root {
  IntVec v{};
  int norm2 = 0;
  IntVec coroot{};  // 2 v / |v|^2
  SignedPerm reflection;
  int orbit = 0;  // 1-based parameter index
};

inline int dot(const IntVec& a, const IntVec& b) {
  int s = 0;
  for (int k = 0; k < kMaxDim; ++k) s += a[k] * b[k];
  return s;
}

class RootDatum {
 public:
  static RootDatum build(Family family, int rank, int ambient) {
    RootDatum rd;
    rd.family_ = family;
    rd.rank_ = rank;
    if (ambient <= 0) ambient = family == Family::A ? rank + 1 : rank;
    rd.dim_ = ambient;
    if (ambient < 1 || ambient > kMaxDim) throw DimensionMismatch("ambient dimension must be in 1.." + std::to_string(kMaxDim));
    if (rank < 1) throw DimensionMismatch("rank must be positive");
    auto unit = [&](int i) {
      IntVec v{};
      v[i] = 1;
      return v;
    };
    auto diff = [&](int i, int j, int sj) {
      IntVec v{};
      v[i] = 1;
      v[j] = sj;
      return v;
    };
    int n = rank;
    switch (family) {
      case Family::A:
        n = rank + 1;
        if (ambient < n) throw DimensionMismatch("type A_" + std::to_string(rank) + " needs ambient dimension >= " + std::to_string(n));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) rd.add_root(diff(i, j, -1));
        for (int i = 0; i + 1 < n; ++i) rd.simple_.push_back(rd.find(diff(i, i + 1, -1)));
        break;
      case Family::B:
        if (ambient < n) throw DimensionMismatch("type B needs ambient dimension >= rank");
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            rd.add_root(diff(i, j, -1));
            rd.add_root(diff(i, j, 1));
          }
        for (int i = 0; i < n; ++i) rd.add_root(unit(i));
        for (int i = 0; i + 1 < n; ++i) rd.simple_.push_back(rd.find(diff(i, i + 1, -1)));
        rd.simple_.push_back(rd.find(unit(n - 1)));
        break;
      case Family::D:
        if (n < 2) throw DimensionMismatch("type D needs rank >= 2");
        if (ambient < n) throw DimensionMismatch("type D needs ambient dimension >= rank");
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            rd.add_root(diff(i, j, -1));
            rd.add_root(diff(i, j, 1));
          }
        for (int i = 0; i + 1 < n; ++i) rd.simple_.push_back(rd.find(diff(i, i + 1, -1)));
        rd.simple_.push_back(rd.find(diff(n - 2, n - 1, 1)));
        break;
      case Family::A1:
        if (ambient < n) throw DimensionMismatch("A1^n needs ambient dimension >= n");
        for (int i = 0; i < n; ++i) rd.add_root(unit(i));
        for (int i = 0; i < n; ++i) rd.simple_.push_back(i);
        break;
    }
    rd.label_orbits();
    return rd;
  }

  /// Parses "A", "B", "D" or "A1^n" (the exponent overrides `rank`). ambient <= 0 picks the natural dimension.
  static RootDatum parse(const std::string& family, int rank, int ambient) {
    if (family == "A") return build(Family::A, rank, ambient);
    if (family == "B") return build(Family::B, rank, ambient);
    if (family == "D") return build(Family::D, rank, ambient);
    if (family.rfind("A1^", 0) == 0) {
      std::size_t pos = 0;
      int n = 0;
      try {
        n = std::stoi(family.substr(3), &pos);
      } catch (const std::exception&) {
        throw UnsupportedFamily("malformed family '" + family + "'");
      }
      if (pos + 3 != family.size() || n < 1) throw UnsupportedFamily("malformed family '" + family + "'");
      return build(Family::A1, n, ambient > 0 ? ambient : n);
    }
    throw UnsupportedFamily("unsupported family '" + family + "'");
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(int k) const { return roots_[std::size_t(k)]; }
  const std::vector<int>& simple_roots() const { return simple_; }
  int orbit_count() const { return orbits_; }
  /// Dimensions below 3 are computed but flagged.
  bool low_dimension() const { return dim_ < 3; }

  std::string name() const {
    switch (family_) {
      case Family::A:
        return "A" + std::to_string(rank_) + " on C^" + std::to_string(dim_);
      case Family::B:
        return "B" + std::to_string(rank_) + (dim_ != rank_ ? " on C^" + std::to_string(dim_) : "");
      case Family::D:
        return "D" + std::to_string(rank_) + (dim_ != rank_ ? " on C^" + std::to_string(dim_) : "");
      case Family::A1:
        return "A1^" + std::to_string(rank_) + (dim_ != rank_ ? " on C^" + std::to_string(dim_) : "");
    }
    return "?";
  }

  /// Index of the positive root equal to +/- v, or -1.
  int find(const IntVec& v) const {
    IntVec neg{};
    for (int k = 0; k < kMaxDim; ++k) neg[k] = -v[k];
    for (std::size_t k = 0; k < roots_.size(); ++k)
      if (roots_[k].v == v || roots_[k].v == neg) return int(k);
    return -1;
  }

 private:
  void add_root(const IntVec& v) {
    Root r;
    r.v = v;
    r.norm2 = dot(v, v);
    for (int k = 0; k < kMaxDim; ++k) r.coroot[k] = 2 * v[k] / r.norm2;
    r.reflection = SignedPerm::identity(dim_);
    // s(x) = x - <x, coroot> v, realised on basis vectors
    for (int i = 0; i < dim_; ++i) {
      IntVec e{};
      e[i] = 1;
      IntVec img{};
      for (int k = 0; k < kMaxDim; ++k) img[k] = e[k] - r.coroot[i] * v[k];
      int nz = -1;
      for (int k = 0; k < dim_; ++k)
        if (img[k] != 0) {
          if (nz >= 0 || std::abs(img[k]) != 1) throw InternalInconsistency("reflection is not a signed permutation");
          nz = k;
        }
      r.reflection.img[i] = std::int8_t(img[nz] * (nz + 1));
    }
    roots_.push_back(r);
  }

  void label_orbits() {
    std::vector<int> parent(roots_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root_of = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < roots_.size(); ++a) {
        for (int s : simple_) {
          int b = find(roots_[std::size_t(s)].reflection.apply(roots_[a].v));
          if (b < 0) throw InternalInconsistency("root system is not W-stable");
          int ra = root_of(int(a));
          int rb = root_of(b);
          if (ra != rb) {
            parent[std::size_t(std::max(ra, rb))] = std::min(ra, rb);
            changed = true;
          }
        }
      }
    }
    std::map<int, int> label;
    for (std::size_t a = 0; a < roots_.size(); ++a) {
      int r = root_of(int(a));
      auto it = label.find(r);
      if (it == label.end()) it = label.emplace(r, int(label.size()) + 1).first;
      roots_[a].orbit = it->second;
    }
    orbits_ = int(label.size());
  }

  Family family_ = Family::A;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<Root> roots_;
  std::vector<int> simple_;
  int orbits_ = 0;
};

struct ConjugacyClass {
  std::vector<int> members;          // group indices, ascending
  std::vector<int> witness;          // witness[k] = h with h * rep * h^-1 = members[k]
  int representative = 0;
  std::string label;
};

/// The reflection group generated by the simple reflections, enumerated by breadth-first search.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& rd, std::size_t bound = 100000) : dim_(rd.dim()) {
    for (int s : rd.simple_roots()) generators_.push_back(rd.root(s).reflection);
    add(SignedPerm::identity(dim_));
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      for (const auto& g : generators_) {
        SignedPerm h = elements_[k] * g;
        if (index_.count(h.packed()) == 0) {
          if (elements_.size() >= bound)
            throw BoundExceeded("group order exceeds bound " + std::to_string(bound));
          add(h);
        }
      }
    }
    std::size_t n = elements_.size();
    inverse_.resize(n);
    for (std::size_t k = 0; k < n; ++k) inverse_[k] = index_of(elements_[k].inverse());
    mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) mul_[a * n + b] = index_of(elements_[a] * elements_[b]);
    for (std::size_t k = 0; k < rd.positive_roots().size(); ++k)
      reflection_index_.push_back(index_of(rd.root(int(k)).reflection));
    compute_classes(rd);
  }

  std::size_t size() const { return elements_.size(); }
  int dim() const { return dim_; }
  const SignedPerm& element(int k) const { return elements_[std::size_t(k)]; }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[std::size_t(a) * elements_.size() + std::size_t(b)]; }
  int inverse(int a) const { return inverse_[std::size_t(a)]; }
  int reflection(int root) const { return reflection_index_[std::size_t(root)]; }
  const std::vector<SignedPerm>& generators() const { return generators_; }

  int index_of(const SignedPerm& w) const {
    auto it = index_.find(w.packed());
    if (it == index_.end()) throw InternalInconsistency("element outside the group: " + w.to_string());
    return it->second;
  }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[std::size_t(g)]; }

  /// The element -1 of O(d) when it lies in W.
  std::optional<int> minus_identity() const {
    SignedPerm m = SignedPerm::identity(dim_);
    for (int i = 0; i < dim_; ++i) m.img[i] = std::int8_t(-m.img[i]);
    auto it = index_.find(m.packed());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  void add(const SignedPerm& w) {
    index_.emplace(w.packed(), int(elements_.size()));
    elements_.push_back(w);
  }

  static std::string class_label(const RootDatum& rd, const SignedPerm& w) {
    if (rd.family() == Family::A1) {
      std::string out = "(";
      for (int i = 0; i < rd.rank(); ++i) out += w.sign(i) > 0 ? "+" : "-";
      return out + ")";
    }
    int n = rd.family() == Family::A ? rd.rank() + 1 : rd.rank();
    std::vector<std::pair<int, int>> cycles;  // (length, sign)
    std::array<bool, kMaxDim> seen{};
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      int sg = 1;
      for (int j = i; !seen[j]; j = w.target(j)) {
        seen[j] = true;
        sg *= w.sign(j);
        ++len;
      }
      cycles.emplace_back(len, sg);
    }
    std::sort(cycles.begin(), cycles.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second > b.second; });
    std::string out = "(";
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(cycles[k].first);
      if (rd.family() != Family::A) out += cycles[k].second > 0 ? "+" : "-";
    }
    return out + ")";
  }

  void compute_classes(const RootDatum& rd) {
    std::size_t n = elements_.size();
    class_of_.assign(n, -1);
    std::vector<int> gen_index;
    for (const auto& g : generators_) gen_index.push_back(index_of(g));
    for (std::size_t start = 0; start < n; ++start) {
      if (class_of_[start] >= 0) continue;
      ConjugacyClass cls;
      cls.representative = int(start);
      std::map<int, int> found{{int(start), identity()}};
      std::vector<int> queue{int(start)};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        int g = queue[q];
        for (int s : gen_index) {
          int h = mul(mul(s, g), inverse(s));
          if (found.count(h)) continue;
          found.emplace(h, mul(s, found[g]));
          queue.push_back(h);
        }
      }
      for (auto [m, w] : found) {
        cls.members.push_back(m);
        cls.witness.push_back(w);
        class_of_[std::size_t(m)] = int(classes_.size());
      }
      cls.label = class_label(rd, elements_[start]);
      classes_.push_back(std::move(cls));
    }
    std::map<std::string, int> seen;
    for (auto& c : classes_) seen[c.label]++;
    std::map<std::string, int> counter;
    for (auto& c : classes_)
      if (seen[c.label] > 1) c.label += "#" + std::to_string(++counter[c.label]);
  }

  int dim_;
  std::vector<SignedPerm> generators_;
  std::vector<SignedPerm> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> inverse_;
  std::vector<int> mul_;
  std::vector<int> reflection_index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

/// Cycle type of a permutation of the first n coordinates, descending.
inline std::vector<int> cycle_type(const SignedPerm& w, int n) {
  std::vector<int> parts;
  std::array<bool, kMaxDim> seen{};
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w.target(j)) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace tama
