#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/blockrep.hpp"
#include "core/homotopy.hpp"

namespace bdk {

using Json = nlohmann::ordered_json;

/// A named collection of objects, morphisms and kappa-matrices over one
/// field and index set. Names keep insertion order.
class ProblemFile {
 public:
  ProblemFile(FieldSpec field, IndexSetPtr idx) : field_(field), idx_(std::move(idx)) {}

  FieldSpec field() const noexcept { return field_; }
  const IndexSetPtr& index_set() const noexcept { return idx_; }

  const std::vector<std::pair<std::string, Representation>>& objects() const noexcept { return objects_; }
  const std::vector<std::pair<std::string, Morphism>>& morphisms() const noexcept { return morphisms_; }
  const std::vector<std::pair<std::string, KappaMatrix>>& kappas() const noexcept { return kappas_; }

  /// Throw NotFound.
  const Representation& object(const std::string& name) const;
  const Morphism& morphism(const std::string& name) const;
  const KappaMatrix& kappa(const std::string& name) const;

  /// Name of an equal registered object, registering it under `hint`
  /// (made unique) when there is none.
  std::string intern(const Representation& obj, const std::string& hint);
  /// These replace an existing entry of the same name; morphism and
  /// kappa ends are interned as "<name>.src" / "<name>.tgt" when new.
  void add_object(const std::string& name, Representation obj);
  void add_morphism(const std::string& name, Morphism m);
  void add_kappa(const std::string& name, KappaMatrix k);

  friend bool operator==(const ProblemFile& a, const ProblemFile& b);

 private:
  FieldSpec field_;
  IndexSetPtr idx_;
  std::vector<std::pair<std::string, Representation>> objects_;
  std::vector<std::pair<std::string, Morphism>> morphisms_;
  std::vector<std::pair<std::string, KappaMatrix>> kappas_;
};

/// Throws Syntax (message names line and column) or Validation with the
/// offending entry name as row label and the failed condition as column label.
ProblemFile parse_problem(std::string_view text);
/// Adds Io for unreadable files.
ProblemFile load_problem(const std::string& path);

Json problem_to_json(const ProblemFile& p);
std::string serialize_problem(const ProblemFile& p);

Json field_to_json(FieldSpec f);
FieldSpec field_from_json(const Json& j);
Json blocks_to_json(const BlockMatrix& m);
Json scalar_to_json(const Scalar& s);

}  // namespace bdk
