#pragma once

#include <optional>
#include <vector>

#include "core/blockrep.hpp"

namespace bdk {

// Multi-part layouts. A cone and every iterated cone places its parts
// side by side inside each band: part 0 first, then part 1, and so on.

DimVector stack(const std::vector<DimVector>& parts);

/// Builds the block matrix whose (a, b) cell is cells[a][b] (absent = 0),
/// each cell being shaped row_parts[a] x col_parts[b].
BlockMatrix assemble(FieldSpec field, const std::vector<DimVector>& row_parts,
                     const std::vector<DimVector>& col_parts,
                     const std::vector<std::vector<std::optional<BlockMatrix>>>& cells);

/// Identity from part k into the stacked layout, and its transpose.
BlockMatrix part_inclusion(FieldSpec field, const std::vector<DimVector>& parts, std::size_t k);
BlockMatrix part_projection(FieldSpec field, const std::vector<DimVector>& parts, std::size_t k);

Representation shift(const Representation& b);
Morphism shift_morphism(const Morphism& t);

/// The cone [[-B, T], [0, C]] of T: B -> C.
Representation cone(const Morphism& t);

struct CanonicalMaps {
  Morphism iota;  // C -> C_T
  Morphism pi;    // C_T -> [B]
};
CanonicalMaps canonical_maps(const Morphism& t);

struct HatMaps {
  Morphism iota_hat;  // [B] -> C_T
  Morphism pi_hat;    // C_T -> C
};
/// Present iff t is zero.
std::optional<HatMaps> hat_maps(const Morphism& t);

struct DirectSum {
  Representation sum;
  Morphism iota_hat;  // B -> S
  Morphism iota;      // C -> S
  Morphism pi;        // S -> B
  Morphism pi_hat;    // S -> C
};
DirectSum direct_sum(const Representation& b, const Representation& c);

/// (X, Y, Z, u, v, w) with u: X -> Y, v: Y -> Z, w: Z -> [X].
struct Triangle {
  Representation x, y, z;
  Morphism u, v, w;
};

/// Throws SourceTargetMismatch when the maps do not line up.
Triangle make_triangle(Morphism u, Morphism v, Morphism w);
Triangle standard_triangle(const Morphism& t);
/// (Y, Z, [X], v, w, -[u]).
Triangle rotate_triangle(const Triangle& t);
/// ([X], [Y], [Z], -[u], -[v], -[w]).
Triangle shift_triangle(const Triangle& t);

}  // namespace bdk
