#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/conetri.hpp"
#include "core/homotopy.hpp"

namespace bdk {

enum class CellKind { Exact, Witness };

/// One diagram identity: exact equality, or equality up to a stored witness.
struct CellCheck {
  std::string name;
  CellKind kind = CellKind::Exact;
  bool holds = false;
  std::optional<KappaMatrix> witness;
};

/// Vertical maps f1, f2, f3 from t1 to t2. squares[n] witnesses square n+1;
/// square 3 compares w1 [f1] with f3 w2.
struct TriangleIso {
  Triangle from, to;
  std::array<Morphism, 3> maps;
  std::array<KappaMatrix, 3> squares;
  std::array<KappaIso, 3> inverses;
};

/// Checks the three maps are kappa-isos (NotIso(n)) and then the three
/// squares (SquareFails(n)); n is 1-based in Error::cell().
/// Throws SourceTargetMismatch when the maps do not line up.
TriangleIso certify_triangle_iso(const Triangle& t1, const Triangle& t2, const Morphism& f1,
                                 const Morphism& f2, const Morphism& f3);

/// Composite of isos t1 -> t2 -> t3.
TriangleIso compose_triangle_iso(const TriangleIso& a, const TriangleIso& b);

/// The iso (f2, f3, [f1]) between the rotated triangles.
TriangleIso rotate_triangle_iso(const TriangleIso& iso);

struct RotationResult {
  Triangle rotated;   // (C, C_T, [B], iota_C, pi_B, -[T])
  Triangle standard;  // standard triangle of iota_C
  Morphism r;         // [B] -> C_{iota_C}
  Morphism s;         // C_{iota_C} -> [B]
  TriangleIso iso;    // standard -> rotated, verticals (Id, Id, S)
  std::vector<CellCheck> cells;
};

RotationResult rotate(const Morphism& t);

struct FillResult {
  Morphism h;  // C_T -> C_T'
  std::vector<CellCheck> cells;
};

/// K must satisfy F T' - T G = A K + K B' (InvalidWitness otherwise).
/// The filler is [[F, -K], [0, G]].
FillResult fill_tr3(const Morphism& f, const Morphism& g, const Morphism& t, const Morphism& t2,
                    const KappaMatrix& k);

struct OctahedronResult {
  Morphism f;       // C_S -> C_ST
  Morphism g;       // C_ST -> C_T
  Morphism lambda;  // C_T -> C_F
  KappaIso lambda_inverse;
  Triangle triangle;  // (C_S, C_ST, C_T, F, G, pi_B [iota_B])
  TriangleIso iso;    // triangle -> standard triangle of F, verticals (Id, Id, Lambda)
  std::vector<CellCheck> cells;
};

/// Throws SourceTargetMismatch unless S and T compose.
OctahedronResult octahedron(const Morphism& s, const Morphism& t);

bool all_hold(const std::vector<CellCheck>& cells);

}  // namespace bdk
