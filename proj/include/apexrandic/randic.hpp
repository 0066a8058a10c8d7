#pragma once

#include <cmath>
#include <string>

#include "apexrandic/graph.hpp"
#include "apexrandic/radical.hpp"

namespace apexrandic {

/// (1/sqrt(3) - 1/sqrt(2))^2 = 5/6 - (1/3) sqrt(6), the gap contributed by
/// two asymmetric edges of degree type {2, 3}.
inline const RadicalValue& extremal_constant() {
  static const RadicalValue c = RadicalValue(Rational(5, 6)) - RadicalValue::sqrt_term(Rational(1, 3), 6);
  return c;
}

struct RandicResult {
  RadicalValue value;  // sum over edges of 1/sqrt(d(u) d(v))
  RadicalValue gap;    // (1/2) sum over edges of (1/sqrt(d(u)) - 1/sqrt(d(v)))^2
  DegreePairSpectrum spectrum;
};

inline RadicalValue randic_value(const DegreePairSpectrum& spectrum) {
  RadicalValue r;
  for (const auto& [pair, count] : spectrum.counts()) {
    r += inv_sqrt(static_cast<std::uint64_t>(pair.first * pair.second)) *
         Rational(static_cast<unsigned long>(count));
  }
  return r;
}

/// Expands each squared difference with the radical product, independently of
/// the inv_sqrt(a*b) route used by randic_value.
inline RadicalValue randic_gap(const DegreePairSpectrum& spectrum) {
  RadicalValue g;
  for (const auto& [pair, count] : spectrum.counts()) {
    if (pair.first == pair.second) continue;
    RadicalValue diff = inv_sqrt(static_cast<std::uint64_t>(pair.first)) -
                        inv_sqrt(static_cast<std::uint64_t>(pair.second));
    g += (diff * diff) * Rational(static_cast<unsigned long>(count));
  }
  return g * Rational(1, 2);
}

inline RadicalValue randic_gap(const Graph& g) { return randic_gap(degree_pair_spectrum(g)); }

inline RandicResult randic(const Graph& g) {
  RandicResult r;
  r.spectrum = degree_pair_spectrum(g);
  r.value = randic_value(r.spectrum);
  r.gap = randic_gap(r.spectrum);
  return r;
}

/// Checks R(g) = n/2 - gap(g) exactly. Requires minimum degree >= 1; throws
/// ConsistencyError if the two routes disagree.
inline bool verify_gap_identity(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) throw UsageError("gap identity needs minimum degree >= 1");
  }
  auto r = randic(g);
  RadicalValue expected = RadicalValue(Rational(static_cast<unsigned long>(g.order()), 2)) - r.gap;
  if (!(expected == r.value)) {
    throw ConsistencyError("gap identity violated: R=" + r.value.to_string() +
                           " but n/2-gap=" + expected.to_string());
  }
  return true;
}

/// Plain per-edge floating-point sum; an oracle independent of the exact path.
inline long double randic_float(const Graph& g) {
  long double sum = 0;
  for (const auto& e : g.edges()) {
    sum += 1.0L / std::sqrt(static_cast<long double>(g.degree(e.u)) *
                            static_cast<long double>(g.degree(e.v)));
  }
  return sum;
}

}  // namespace apexrandic
