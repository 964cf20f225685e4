#pragma once

#include <optional>
#include <vector>

#include "core/blockrep.hpp"

namespace bdk {

/// Shaped like a morphism source -> target (triangular, sigma-tied
/// diagonal) but free of the intertwining condition.
struct KappaMatrix {
  Representation source;
  Representation target;
  BlockMatrix matrix;
};

/// Validates shape, triangularity and the sigma-tied diagonal.
KappaMatrix check_kappa(const BlockMatrix& k, const Representation& src, const Representation& tgt);

KappaMatrix zero_kappa(const Representation& src, const Representation& tgt);

/// S - T == src K + K tgt, checked on the flattened matrices.
bool witnesses(const Morphism& s, const Morphism& t, const KappaMatrix& k);

/// Deterministic particular witness for S == T, or absent.
/// Throws SourceTargetMismatch.
std::optional<KappaMatrix> kappa_equiv(const Morphism& s, const Morphism& t);

/// Solves src K + K tgt = d for a kappa-shaped K.
std::optional<KappaMatrix> solve_kappa(const Representation& src, const Representation& tgt,
                                       const BlockMatrix& d);

/// Basis of the null-homotopic morphisms src -> tgt.
std::vector<Morphism> null_homotopic_subspace(const Representation& b, const Representation& c);

std::size_t quotient_hom_dim(const Representation& b, const Representation& c);

struct KappaIso {
  Morphism inverse;  // U: C -> B
  KappaMatrix k_source;  // T U - Id_B = B K_B + K_B B
  KappaMatrix k_target;  // U T - Id_C = C K_C + K_C C
};

std::optional<KappaIso> is_kappa_iso(const Morphism& t);

}  // namespace bdk
