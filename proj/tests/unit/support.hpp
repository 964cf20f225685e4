#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "core/blockrep.hpp"
#include "core/error.hpp"
#include "core/randgen.hpp"

namespace bdk::test {

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec gf(std::uint64_t p) { return FieldSpec::prime(p); }

inline DenseMatrix mat(FieldSpec f, std::initializer_list<std::initializer_list<long long>> rows) {
  return DenseMatrix::from_rows(f, rows);
}

inline IndexSetPtr chain(std::vector<std::string> labels, std::vector<IndexSet::Pair> pairs = {}) {
  return make_index_set(std::move(labels), pairs);
}

inline DimVector dims(const IndexSetPtr& idx, std::vector<std::size_t> d) { return DimVector(idx, std::move(d)); }

struct Blk {
  std::string i, j;
  DenseMatrix m;
};

inline BlockMatrix blocks(FieldSpec f, const DimVector& rows, const DimVector& cols, const std::vector<Blk>& bs) {
  BlockMatrix out(f, rows, cols);
  const auto& idx = *rows.index_set();
  for (const auto& b : bs) out.set_block(idx.position(b.i), idx.position(b.j), b.m);
  return out;
}

inline Representation object(FieldSpec f, const DimVector& d, const std::vector<Blk>& bs = {}) {
  return check_object(d, blocks(f, d, d, bs));
}

inline Morphism morphism(const Representation& b, const Representation& c, const std::vector<Blk>& bs) {
  return check_morphism(blocks(b.field(), b.dims(), c.dims(), bs), b, c);
}

// Runs fn and returns the Error it throws; fails the test if it does not throw one.
template <class Fn>
Error error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected bdk::Error");
  return Error(ErrorCode::InvalidArgument, "unreachable");
}

struct Pair {
  Representation b, c;
};

inline Pair random_pair(Rng& rng, FieldSpec f, std::size_t max_indices, std::size_t max_dim) {
  const IndexSetPtr idx = random_index_set(rng, max_indices);
  return {random_object(rng, f, random_dims(rng, idx, max_dim)), random_object(rng, f, random_dims(rng, idx, max_dim))};
}

}  // namespace bdk::test
