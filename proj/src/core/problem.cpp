#include "core/problem.hpp"

#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace bdk {

// ---- ProblemFile ----

namespace {

template <class T>
const T& lookup(const std::vector<std::pair<std::string, T>>& items, const std::string& name, const char* what) {
  for (const auto& [n, v] : items)
    if (n == name) return v;
  throw Error(ErrorCode::NotFound, std::string("no ") + what + " named '" + name + "'", name);
}

template <class T>
void upsert(std::vector<std::pair<std::string, T>>& items, const std::string& name, T value) {
  for (auto& [n, v] : items)
    if (n == name) {
      v = std::move(value);
      return;
    }
  items.emplace_back(name, std::move(value));
}

}  // namespace

const Representation& ProblemFile::object(const std::string& name) const { return lookup(objects_, name, "object"); }
const Morphism& ProblemFile::morphism(const std::string& name) const { return lookup(morphisms_, name, "morphism"); }
const KappaMatrix& ProblemFile::kappa(const std::string& name) const { return lookup(kappas_, name, "kappa-matrix"); }

std::string ProblemFile::intern(const Representation& obj, const std::string& hint) {
  for (const auto& [n, v] : objects_)
    if (v == obj) return n;
  auto taken = [&](const std::string& n) {
    for (const auto& item : objects_)
      if (item.first == n) return true;
    return false;
  };
  std::string name = hint;
  for (int k = 2; taken(name); ++k) name = hint + "." + std::to_string(k);
  objects_.emplace_back(name, obj);
  return name;
}

void ProblemFile::add_object(const std::string& name, Representation obj) { upsert(objects_, name, std::move(obj)); }

void ProblemFile::add_morphism(const std::string& name, Morphism m) {
  intern(m.source(), name + ".src");
  intern(m.target(), name + ".tgt");
  upsert(morphisms_, name, std::move(m));
}

void ProblemFile::add_kappa(const std::string& name, KappaMatrix k) {
  intern(k.source, name + ".src");
  intern(k.target, name + ".tgt");
  upsert(kappas_, name, std::move(k));
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (!(a.field_ == b.field_) || !same_index_set(a.idx_, b.idx_)) return false;
  if (a.objects_ != b.objects_ || a.morphisms_ != b.morphisms_) return false;
  if (a.kappas_.size() != b.kappas_.size()) return false;
  for (std::size_t i = 0; i < a.kappas_.size(); ++i) {
    const auto& [na, ka] = a.kappas_[i];
    const auto& [nb, kb] = b.kappas_[i];
    if (na != nb || !(ka.source == kb.source) || !(ka.target == kb.target) || !(ka.matrix == kb.matrix))
      return false;
  }
  return true;
}

// ---- JSON helpers ----

Json field_to_json(FieldSpec f) {
  if (f.is_prime_field()) return Json{{"kind", "GFp"}, {"p", f.modulus()}};
  return Json{{"kind", "Q"}};
}

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::InvalidArgument, "field must be an object with a string \"kind\"");
  const std::string kind = j["kind"];
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "GFp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned())
      throw Error(ErrorCode::InvalidArgument, "GFp field needs a positive integer \"p\"");
    return FieldSpec::prime(j["p"].get<std::uint64_t>());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field kind '" + kind + "'");
}

Json scalar_to_json(const Scalar& s) {
  if (s.field().is_prime_field()) return s.residue();
  return s.to_string();
}

Json blocks_to_json(const BlockMatrix& m) {
  const IndexSet& idx = *m.row_dims().index_set();
  Json out = Json::object();
  for (const auto& [key, blk] : m.blocks()) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < blk.cols(); ++c) entries.push_back(scalar_to_json(blk.at(r, c)));
    out[idx.label(key.first) + "," + idx.label(key.second)] = std::move(entries);
  }
  return out;
}

namespace {

Json dims_to_json(const DimVector& d) {
  Json out = Json::object();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) out[d.index_set()->label(i)] = d[i];
  return out;
}

[[noreturn]] void invalid(const std::string& name, const std::string& condition, const std::string& detail) {
  throw Error(ErrorCode::Validation, "'" + name + "': " + detail, name, condition);
}

/// Runs fn, turning any library error into Validation(name, code).
template <class Fn>
auto validated(const std::string& name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Validation) throw;
    invalid(name, std::string(error_code_name(e.code())), e.what());
  }
}

const Json& member(const Json& obj, const char* key, const std::string& owner) {
  if (!obj.is_object() || !obj.contains(key))
    invalid(owner, "MissingKey", std::string("missing \"") + key + "\"");
  return obj[key];
}

Scalar entry_from_json(FieldSpec f, const Json& e) {
  if (e.is_number_integer()) {
    if (f.is_prime_field()) {
      if (e.is_number_unsigned()) return Scalar::parse(f, std::to_string(e.get<std::uint64_t>()));
      return Scalar::from_int(f, e.get<long long>());
    }
    return Scalar::from_int(f, e.get<long long>());
  }
  if (e.is_string()) return Scalar::parse(f, e.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "matrix entries must be integers or strings, got " + e.dump());
}

DenseMatrix block_from_json(FieldSpec f, const Json& entries, std::size_t rows, std::size_t cols) {
  if (!entries.is_array()) throw Error(ErrorCode::InvalidArgument, "block entries must be an array");
  std::vector<const Json*> flat;
  if (!entries.empty() && entries.front().is_array()) {
    if (entries.size() != rows)
      throw Error(ErrorCode::ShapeViolation,
                  "block has " + std::to_string(entries.size()) + " rows, expected " + std::to_string(rows));
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != cols)
        throw Error(ErrorCode::ShapeViolation, "every row must have " + std::to_string(cols) + " entries");
      for (const auto& e : row) flat.push_back(&e);
    }
  } else {
    for (const auto& e : entries) flat.push_back(&e);
  }
  if (flat.size() != rows * cols)
    throw Error(ErrorCode::ShapeViolation, "block has " + std::to_string(flat.size()) + " entries, expected " +
                                               std::to_string(rows) + "x" + std::to_string(cols));
  DenseMatrix m(f, rows, cols);
  for (std::size_t k = 0; k < flat.size(); ++k) m.set(k / cols, k % cols, entry_from_json(f, *flat[k]));
  return m;
}

BlockMatrix blocks_from_json(FieldSpec f, const Json& blocks, const DimVector& rows, const DimVector& cols) {
  BlockMatrix m(f, rows, cols);
  if (blocks.is_null()) return m;
  if (!blocks.is_object()) throw Error(ErrorCode::InvalidArgument, "\"blocks\" must be an object");
  const IndexSet& idx = *rows.index_set();
  for (const auto& [key, entries] : blocks.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorCode::InvalidArgument, "block key '" + key + "' is not of the form \"i,j\"");
    const std::size_t i = idx.position(key.substr(0, comma));
    const std::size_t j = idx.position(key.substr(comma + 1));
    try {
      m.set_block(i, j, block_from_json(f, entries, rows[i], cols[j]));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ShapeViolation) throw;
      throw Error(ErrorCode::ShapeViolation, "block (" + key + "): " + e.what(), idx.label(i), idx.label(j));
    }
  }
  return m;
}

DimVector dims_from_json(const IndexSetPtr& idx, const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "\"dims\" must be an object");
  std::vector<std::size_t> d(idx->size(), 0);
  for (const auto& [label, n] : j.items()) {
    if (!n.is_number_unsigned()) throw Error(ErrorCode::InvalidArgument, "dimension of '" + label + "' must be a nonnegative integer");
    d[idx->position(label)] = n.get<std::size_t>();
  }
  return DimVector(idx, std::move(d));
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::Syntax, "syntax error at line " + std::to_string(line) + ", column " +
                                       std::to_string(col) + ": " + e.what());
  }
  if (!root.is_object()) invalid("document", "NotAnObject", "top level must be a JSON object");

  const FieldSpec field = validated("field", [&] { return field_from_json(member(root, "field", "field")); });

  const IndexSetPtr idx = validated("poset", [&] {
    const Json& poset = member(root, "poset", "poset");
    const Json& order = member(poset, "order", "poset");
    if (!order.is_array()) throw Error(ErrorCode::InvalidArgument, "\"order\" must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& l : order) {
      if (!l.is_string()) throw Error(ErrorCode::InvalidLabel, "labels must be strings, got " + l.dump());
      labels.push_back(l.get<std::string>());
    }
    std::vector<IndexSet::Pair> pairs;
    if (poset.contains("involution")) {
      for (const auto& p : poset["involution"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
          throw Error(ErrorCode::InvalidArgument, "involution pairs must be [label, label], got " + p.dump());
        pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    }
    return make_index_set(std::move(labels), pairs);
  });

  ProblemFile out(field, idx);
  if (root.contains("objects")) {
    if (!root["objects"].is_object()) invalid("objects", "NotAnObject", "\"objects\" must be an object");
    for (const auto& [name, obj] : root["objects"].items()) {
      out.add_object(name, validated(name, [&] {
        const DimVector d = dims_from_json(idx, member(obj, "dims", name));
        const Json blocks = obj.contains("blocks") ? obj["blocks"] : Json();
        return check_object(d, blocks_from_json(field, blocks, d, d));
      }));
    }
  }

  auto ends = [&](const std::string& name, const Json& j) {
    std::pair<Representation, Representation> st;
    for (const char* key : {"source", "target"}) {
      const Json& ref = member(j, key, name);
      if (!ref.is_string()) invalid(name, "InvalidArgument", std::string("\"") + key + "\" must be an object name");
      const std::string r = ref.get<std::string>();
      const Representation* found = nullptr;
      for (const auto& [n, v] : out.objects())
        if (n == r) found = &v;
      if (!found) invalid(name, "UnknownObject", "refers to undefined object '" + r + "'");
      (std::string(key) == "source" ? st.first : st.second) = *found;
    }
    return st;
  };

  for (const char* section : {"morphisms", "kappas"}) {
    if (!root.contains(section)) continue;
    if (!root[section].is_object()) invalid(section, "NotAnObject", std::string("\"") + section + "\" must be an object");
    const bool is_morphism = std::string(section) == "morphisms";
    for (const auto& [name, j] : root[section].items()) {
      const auto [src, tgt] = ends(name, j);
      validated(name, [&] {
        const Json blocks = j.contains("blocks") ? j["blocks"] : Json();
        const BlockMatrix m = blocks_from_json(field, blocks, src.dims(), tgt.dims());
        if (is_morphism)
          out.add_morphism(name, check_morphism(m, src, tgt));
        else
          out.add_kappa(name, check_kappa(m, src, tgt));
        return 0;
      });
    }
  }
  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

Json problem_to_json(const ProblemFile& p) {
  Json root;
  root["field"] = field_to_json(p.field());
  Json poset;
  poset["order"] = p.index_set()->labels();
  Json inv = Json::array();
  for (const auto& [a, b] : p.index_set()->involution_pairs()) inv.push_back(Json::array({a, b}));
  poset["involution"] = std::move(inv);
  root["poset"] = std::move(poset);

  auto name_of = [&](const Representation& r) -> std::string {
    for (const auto& [n, v] : p.objects())
      if (v == r) return n;
    throw Error(ErrorCode::NotFound, "object not registered in the problem");
  };

  Json objects = Json::object();
  for (const auto& [name, obj] : p.objects())
    objects[name] = Json{{"dims", dims_to_json(obj.dims())}, {"blocks", blocks_to_json(obj.matrix())}};
  root["objects"] = std::move(objects);

  Json morphisms = Json::object();
  for (const auto& [name, m] : p.morphisms())
    morphisms[name] =
        Json{{"source", name_of(m.source())}, {"target", name_of(m.target())}, {"blocks", blocks_to_json(m.matrix())}};
  root["morphisms"] = std::move(morphisms);

  if (!p.kappas().empty()) {
    Json kappas = Json::object();
    for (const auto& [name, k] : p.kappas())
      kappas[name] = Json{{"source", name_of(k.source)}, {"target", name_of(k.target)}, {"blocks", blocks_to_json(k.matrix)}};
    root["kappas"] = std::move(kappas);
  }
  return root;
}

std::string serialize_problem(const ProblemFile& p) { return problem_to_json(p).dump(2) + "\n"; }

}  // namespace bdk
