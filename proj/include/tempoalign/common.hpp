#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tempoalign {

// Invalid-input contract violations (bad shapes, empty inputs, out-of-range).
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed configuration; the CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing or corrupt data files; the CLI maps this to exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidInputError(msg);
}

template <typename Real>
using Vec = std::vector<Real>;

template <typename Real>
Real dot(const Vec<Real>& a, const Vec<Real>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * b[i];
  return static_cast<Real>(s);
}

template <typename Real>
Real l2_norm(const Vec<Real>& a) {
  double s = 0.0;
  for (Real x : a) s += static_cast<double>(x) * x;
  return static_cast<Real>(std::sqrt(s));
}

template <typename Real>
Vec<Real> l2_normalized(Vec<Real> a) {
  Real n = l2_norm(a);
  require(n > Real(0), "l2_normalized: zero vector");
  for (Real& x : a) x /= n;
  return a;
}

// FNV-1a over raw bytes; used for config hashes and frozen-embedding digests.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xCBF29CE484222325ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace tempoalign
