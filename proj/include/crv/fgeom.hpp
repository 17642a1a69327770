#pragma once

// The 121 points of P(F3^5) under the standard bilinear form b(x,y) = sum x_i y_i,
// split by the value of q(x) = b(x,x) into
//   cusp points      q = 0   (40)
//   tritangent points q = 1  (45)
//   boundary points  q = -1  (36)
// Entries are balanced representatives {-1,0,1}; a projective point is stored
// as the representative whose first nonzero entry is +1, and point lists are
// sorted lexicographically with -1 < 0 < 1.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crv {

// Balanced residue in {-1, 0, 1}.
inline int f3_norm(long x) {
  int r = static_cast<int>(((x % 3) + 3) % 3);
  return r == 2 ? -1 : r;
}

using F3Vec = std::array<int8_t, 5>;

inline F3Vec f3_vec(int a, int b, int c, int d, int e) {
  return {static_cast<int8_t>(f3_norm(a)), static_cast<int8_t>(f3_norm(b)),
          static_cast<int8_t>(f3_norm(c)), static_cast<int8_t>(f3_norm(d)),
          static_cast<int8_t>(f3_norm(e))};
}

inline int bilinear(const F3Vec& x, const F3Vec& y) {
  int s = 0;
  for (int i = 0; i < 5; ++i) s += x[i] * y[i];
  return f3_norm(s);
}

inline int quadratic(const F3Vec& x) { return bilinear(x, x); }

inline bool is_zero(const F3Vec& x) {
  for (int i = 0; i < 5; ++i)
    if (x[i] != 0) return false;
  return true;
}

inline F3Vec negate(const F3Vec& x) {
  F3Vec r;
  for (int i = 0; i < 5; ++i) r[i] = static_cast<int8_t>(-x[i]);
  return r;
}

// Representative with first nonzero entry +1.
inline F3Vec normalize(const F3Vec& x) {
  for (int i = 0; i < 5; ++i) {
    if (x[i] == 0) continue;
    return x[i] == 1 ? x : negate(x);
  }
  throw std::invalid_argument("normalize: zero vector");
}

// Base-3 key; slot 0 is the most significant digit.
inline int pack(const F3Vec& x) {
  int k = 0;
  for (int i = 0; i < 5; ++i) k = k * 3 + (x[i] + 1);
  return k;
}

inline std::string show(const F3Vec& x) {
  std::string s = "(";
  for (int i = 0; i < 5; ++i) {
    if (i) s += ",";
    s += std::to_string(static_cast<int>(x[i]));
  }
  return s + ")";
}

enum class PointClass : uint8_t { Cusp = 0, Tritangent = 1, Boundary = 2 };

inline const char* class_name(PointClass c) {
  switch (c) {
    case PointClass::Cusp: return "cusp";
    case PointClass::Tritangent: return "tritangent";
    case PointClass::Boundary: return "boundary";
  }
  return "?";
}

struct PointRef {
  PointClass cls;
  int index;
  friend bool operator==(const PointRef&, const PointRef&) = default;
  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

struct PerpProfile {
  int cusps = 0;
  int tritangents = 0;
  int boundaries = 0;
  friend bool operator==(const PerpProfile&, const PerpProfile&) = default;
};

class Geometry {
 public:
  Geometry() : lookup_(243, PointRef{PointClass::Cusp, -1}) {
    std::vector<F3Vec> normalized;
    for (int code = 0; code < 243; ++code) {
      F3Vec v;
      int t = code;
      for (int i = 4; i >= 0; --i) {
        v[i] = static_cast<int8_t>(t % 3 - 1);
        t /= 3;
      }
      if (is_zero(v) || normalize(v) != v) continue;
      normalized.push_back(v);
    }
    // lexicographic with -1 < 0 < 1 is the natural array order
    std::sort(normalized.begin(), normalized.end());
    for (const F3Vec& v : normalized) {
      PointClass c = quadratic(v) == 0
                         ? PointClass::Cusp
                         : (quadratic(v) == 1 ? PointClass::Tritangent : PointClass::Boundary);
      std::vector<F3Vec>& bucket = points_[static_cast<std::size_t>(c)];
      PointRef ref{c, static_cast<int>(bucket.size())};
      bucket.push_back(v);
      lookup_[static_cast<std::size_t>(pack(v))] = ref;
      lookup_[static_cast<std::size_t>(pack(negate(v)))] = ref;
    }
  }

  const std::vector<F3Vec>& points(PointClass c) const {
    return points_[static_cast<std::size_t>(c)];
  }
  int count(PointClass c) const {
    return static_cast<int>(points_[static_cast<std::size_t>(c)].size());
  }
  int total() const {
    return count(PointClass::Cusp) + count(PointClass::Tritangent) +
           count(PointClass::Boundary);
  }

  const F3Vec& rep(PointRef ref) const {
    return points_[static_cast<std::size_t>(ref.cls)][static_cast<std::size_t>(ref.index)];
  }

  PointRef ref_of(const F3Vec& v) const {
    PointRef r = lookup_[static_cast<std::size_t>(pack(v))];
    if (r.index < 0) throw std::invalid_argument("ref_of: zero vector");
    return r;
  }

  bool perp(const F3Vec& x, const F3Vec& y) const { return bilinear(x, y) == 0; }

  PerpProfile perp_profile(PointRef ref) const {
    PerpProfile p;
    const F3Vec& x = rep(ref);
    for (const F3Vec& y : points(PointClass::Cusp)) p.cusps += perp(x, y);
    for (const F3Vec& y : points(PointClass::Tritangent)) p.tritangents += perp(x, y);
    for (const F3Vec& y : points(PointClass::Boundary)) p.boundaries += perp(x, y);
    return p;
  }

 private:
  std::array<std::vector<F3Vec>, 3> points_;
  std::vector<PointRef> lookup_;
};

inline const Geometry& geometry() {
  static const Geometry g;
  return g;
}

}  // namespace crv
