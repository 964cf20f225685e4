#include "core/conetri.hpp"

#include "core/error.hpp"

namespace bdk {

DimVector stack(const std::vector<DimVector>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "stack of no parts");
  DimVector total = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) total = total + parts[k];
  return total;
}

namespace {

/// Offset of part k inside band i.
std::size_t part_offset(const std::vector<DimVector>& parts, std::size_t k, std::size_t i) {
  std::size_t off = 0;
  for (std::size_t a = 0; a < k; ++a) off += parts[a][i];
  return off;
}

}  // namespace

BlockMatrix assemble(FieldSpec field, const std::vector<DimVector>& row_parts,
                     const std::vector<DimVector>& col_parts,
                     const std::vector<std::vector<std::optional<BlockMatrix>>>& cells) {
  const DimVector rows = stack(row_parts), cols = stack(col_parts);
  if (cells.size() != row_parts.size())
    throw Error(ErrorCode::DimensionMismatch, "cell grid has the wrong number of rows");
  std::map<BlockMatrix::Key, DenseMatrix> acc;
  for (std::size_t a = 0; a < row_parts.size(); ++a) {
    if (cells[a].size() != col_parts.size())
      throw Error(ErrorCode::DimensionMismatch, "cell grid has the wrong number of columns");
    for (std::size_t b = 0; b < col_parts.size(); ++b) {
      if (!cells[a][b]) continue;
      const BlockMatrix& cell = *cells[a][b];
      if (!(cell.row_dims() == row_parts[a]) || !(cell.col_dims() == col_parts[b]))
        throw Error(ErrorCode::DimensionMismatch, "cell does not match its part sizes");
      for (const auto& [key, m] : cell.blocks()) {
        auto [it, fresh] = acc.try_emplace(key, field, rows[key.first], cols[key.second]);
        (void)fresh;
        it->second.set_block(part_offset(row_parts, a, key.first), part_offset(col_parts, b, key.second), m);
      }
    }
  }
  BlockMatrix out(field, rows, cols);
  for (auto& [key, m] : acc) out.set_block(key.first, key.second, std::move(m));
  return out;
}

BlockMatrix part_inclusion(FieldSpec field, const std::vector<DimVector>& parts, std::size_t k) {
  std::vector<std::vector<std::optional<BlockMatrix>>> cells(1, std::vector<std::optional<BlockMatrix>>(parts.size()));
  cells[0][k] = BlockMatrix::identity(field, parts[k]);
  return assemble(field, {parts[k]}, parts, cells);
}

BlockMatrix part_projection(FieldSpec field, const std::vector<DimVector>& parts, std::size_t k) {
  std::vector<std::vector<std::optional<BlockMatrix>>> cells(parts.size(), std::vector<std::optional<BlockMatrix>>(1));
  cells[k][0] = BlockMatrix::identity(field, parts[k]);
  return assemble(field, parts, {parts[k]}, cells);
}

Representation shift(const Representation& b) { return check_object(b.dims(), b.matrix().negated()); }

Morphism shift_morphism(const Morphism& t) {
  return check_morphism(t.matrix(), shift(t.source()), shift(t.target()));
}

Representation cone(const Morphism& t) {
  const Representation& b = t.source();
  const Representation& c = t.target();
  const BlockMatrix m = assemble(t.field(), {b.dims(), c.dims()}, {b.dims(), c.dims()},
                                 {{b.matrix().negated(), t.matrix()}, {std::nullopt, c.matrix()}});
  return check_object(stack({b.dims(), c.dims()}), m);
}

CanonicalMaps canonical_maps(const Morphism& t) {
  const Representation z = cone(t);
  const std::vector<DimVector> parts{t.source().dims(), t.target().dims()};
  return {check_morphism(part_inclusion(t.field(), parts, 1), t.target(), z),
          check_morphism(part_projection(t.field(), parts, 0), z, shift(t.source()))};
}

std::optional<HatMaps> hat_maps(const Morphism& t) {
  if (!t.matrix().is_zero()) return std::nullopt;
  const Representation z = cone(t);
  const std::vector<DimVector> parts{t.source().dims(), t.target().dims()};
  return HatMaps{check_morphism(part_inclusion(t.field(), parts, 0), shift(t.source()), z),
                 check_morphism(part_projection(t.field(), parts, 1), z, t.target())};
}

DirectSum direct_sum(const Representation& b, const Representation& c) {
  require_compatible(b, c);
  const Morphism zero = zero_morphism(shift(b), c);
  const Representation s = cone(zero);
  const std::vector<DimVector> parts{b.dims(), c.dims()};
  const FieldSpec f = b.field();
  return {s,
          check_morphism(part_inclusion(f, parts, 0), b, s),
          check_morphism(part_inclusion(f, parts, 1), c, s),
          check_morphism(part_projection(f, parts, 0), s, b),
          check_morphism(part_projection(f, parts, 1), s, c)};
}

Triangle make_triangle(Morphism u, Morphism v, Morphism w) {
  if (!(u.target() == v.source()) || !(v.target() == w.source()))
    throw Error(ErrorCode::SourceTargetMismatch, "triangle maps are not composable");
  if (!(w.target() == shift(u.source())))
    throw Error(ErrorCode::SourceTargetMismatch, "third map of a triangle must land in the shifted first object");
  Triangle t{u.source(), v.source(), w.source(), std::move(u), std::move(v), std::move(w)};
  return t;
}

Triangle standard_triangle(const Morphism& t) {
  auto maps = canonical_maps(t);
  return make_triangle(t, std::move(maps.iota), std::move(maps.pi));
}

Triangle rotate_triangle(const Triangle& t) {
  return make_triangle(t.v, t.w, -shift_morphism(t.u));
}

Triangle shift_triangle(const Triangle& t) {
  return make_triangle(-shift_morphism(t.u), -shift_morphism(t.v), -shift_morphism(t.w));
}

}  // namespace bdk
