#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "rankcorr/rankcorr.hpp"

namespace rankcorr::testing {

inline Vector<double> vec(std::initializer_list<double> values) {
  Vector<double> v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

inline PairedSample<double> pairs(std::initializer_list<double> xs, std::initializer_list<double> ys) {
  return validate_sample(vec(xs), vec(ys));
}

/// Continuous draws; duplicates have probability ~0 but are rejected anyway.
inline Vector<double> tie_free(std::mt19937_64& gen, Index n, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  Vector<double> v(n);
  for (bool ok = false; !ok;) {
    for (Index i = 0; i < n; ++i) v(i) = dist(gen);
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    ok = std::adjacent_find(s.begin(), s.end()) == s.end();
  }
  return v;
}

/// Brute force mid-rank: (#less) + (#equal + 1) / 2.
inline std::vector<double> oracle_ranks(const Vector<double>& v) {
  std::vector<double> out;
  for (Index i = 0; i < v.size(); ++i) {
    int less = 0, equal = 0;
    for (Index j = 0; j < v.size(); ++j) {
      less += v(j) < v(i);
      equal += v(j) == v(i);
    }
    out.push_back(less + (equal + 1) / 2.0);
  }
  return out;
}

inline double oracle_kendall(const Vector<double>& x, const Vector<double>& y) {
  long concordant = 0, discordant = 0;
  const Index n = x.size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i >= j) continue;
      const double p = (x(i) - x(j)) * (y(i) - y(j));
      if (p > 0) ++concordant;
      if (p < 0) ++discordant;
    }
  }
  return double(concordant - discordant) / (n * (n - 1) / 2.0);
}

}  // namespace rankcorr::testing
