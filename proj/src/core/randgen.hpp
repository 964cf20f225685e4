#pragma once

#include <cstdint>
#include <random>

#include "core/blockrep.hpp"
#include "core/homotopy.hpp"

namespace bdk {

/// mt19937_64 seeded through splitmix64. Bounded draws use rejection
/// sampling so streams do not depend on any standard-library distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream for (seed, stream, index).
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(below(hi - lo + 1)); }
  bool coin() { return below(2) == 1; }
  /// Uniform residue over GF(p); small numerators and denominators over Q.
  Scalar scalar(FieldSpec field);
  Scalar nonzero_scalar(FieldSpec field);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t& state);

struct FuzzConfig {
  std::uint64_t seed = 1;
  FieldSpec field = FieldSpec::prime(5);
  std::size_t max_indices = 3;
  std::size_t max_dim = 3;
  std::size_t trials = 25;
  bool oracle = false;
};

/// 1..max_indices labels "a1", "a2", ... with a random partial pairing.
IndexSetPtr random_index_set(Rng& rng, std::size_t max_indices);
/// One draw in [0, max_dim] per sigma-orbit.
DimVector random_dims(Rng& rng, const IndexSetPtr& idx, std::size_t max_dim);

DenseMatrix random_matrix(Rng& rng, FieldSpec field, std::size_t rows, std::size_t cols);

Representation random_object(Rng& rng, FieldSpec field, const DimVector& dims);
Morphism random_morphism(Rng& rng, const Representation& b, const Representation& c);
KappaMatrix random_kappa(Rng& rng, const Representation& b, const Representation& c);

struct CommutingSquare {
  Morphism f;   // A -> A'
  Morphism g;   // B -> B'
  Morphism t;   // A -> B
  Morphism t2;  // A' -> B'
  KappaMatrix k;  // F T' - T G = A K + K B'
};

/// Random T: A -> B and T': A' -> B', then a random solution (F, G, K) of
/// F T' - T G = A K + K B'. Throws Degenerate when only F = G = K = 0 solves.
CommutingSquare random_commuting_square(Rng& rng, const Representation& a, const Representation& b,
                                        const Representation& a2, const Representation& b2);

}  // namespace bdk
