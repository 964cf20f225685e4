#pragma once

// Exhaustive reference computations over small prime fields. Everything
// here works on flattened residue arrays with its own shape tests and its
// own multiplication, so it shares no code path with the solvers.

#include <cstdint>
#include <optional>
#include <vector>

#include "core/blockrep.hpp"

namespace bdk::oracle {

struct Flat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> v;
};

Flat flat_of(const BlockMatrix& m);
DenseMatrix dense_of(FieldSpec field, const Flat& f);

/// Every morphism-shaped matrix src -> tgt (triangular, sigma-tied
/// diagonal) satisfying X tgt = src X. Absent when the search would
/// exceed `limit` candidates or the field is not prime.
std::optional<std::vector<Flat>> all_morphisms(const Representation& b, const Representation& c,
                                               std::uint64_t limit = 1u << 20);

/// log_p of the number of morphisms.
std::optional<std::size_t> hom_dim(const Representation& b, const Representation& c,
                                   std::uint64_t limit = 1u << 20);

/// Whether some kappa-shaped K has S - T = src K + K tgt.
std::optional<bool> kappa_related(const Morphism& s, const Morphism& t, std::uint64_t limit = 1u << 20);

}  // namespace bdk::oracle
