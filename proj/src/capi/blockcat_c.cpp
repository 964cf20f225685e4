#include "blockcat/blockcat.h"

#include <cstring>
#include <functional>
#include <new>
#include <sstream>

#include "core/conetri.hpp"
#include "core/error.hpp"
#include "core/fuzz.hpp"
#include "core/homotopy.hpp"
#include "core/problem.hpp"
#include "core/triaxioms.hpp"

struct bdk_problem {
  bdk::ProblemFile file;
};

namespace {

using bdk::Json;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bdk_status status_of(bdk::ErrorCode code) {
  return static_cast<bdk_status>(BDK_E_INVALID_ARGUMENT + static_cast<int>(code));
}

bdk_status guarded(const std::function<bdk_status()>& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const bdk::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return BDK_E_INTERNAL;
  }
}

void require_arg(const void* p, const char* what) {
  if (!p) throw bdk::Error(bdk::ErrorCode::InvalidArgument, std::string("null ") + what);
}

std::string render(const std::string& name, const bdk::BlockMatrix& m, const std::string& src, const std::string& tgt) {
  std::ostringstream out;
  out << name << ": " << src << " -> " << tgt << "\n";
  const bdk::DenseMatrix f = m.flatten();
  if (f.rows() == 0 || f.cols() == 0) {
    out << "  (" << f.rows() << "x" << f.cols() << ")\n";
    return out.str();
  }
  std::vector<std::string> cells(f.rows() * f.cols());
  std::size_t width = 1;
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) {
      cells[r * f.cols() + c] = f.at(r, c).to_string();
      width = std::max(width, cells[r * f.cols() + c].size());
    }
  for (std::size_t r = 0; r < f.rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < f.cols(); ++c) {
      const std::string& s = cells[r * f.cols() + c];
      out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

std::string dims_text(const bdk::DimVector& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += d.index_set()->label(i) + ":" + std::to_string(d[i]);
  }
  return s.empty() ? "(zero object)" : s;
}

/// Collects a report and the reloadable document for one call.
struct Result {
  explicit Result(const bdk::ProblemFile& in) : doc(in.field(), in.index_set()) {}

  std::string object(const std::string& name, const bdk::Representation& r) {
    const std::string n = doc.intern(r, name);
    return n;
  }
  void show_object(const std::string& name, const bdk::Representation& r) {
    const std::string n = object(name, r);
    text << "object " << n << " dims " << dims_text(r.dims()) << "\n" << render("  matrix", r.matrix(), n, n);
  }
  void morphism(const std::string& name, const bdk::Morphism& m, bool show = true) {
    doc.add_morphism(name, m);
    if (show) text << render(name, m.matrix(), name_of(m.source()), name_of(m.target()));
  }
  void kappa(const std::string& name, const bdk::KappaMatrix& k, bool show = true) {
    doc.add_kappa(name, k);
    if (show) text << render(name, k.matrix, name_of(k.source), name_of(k.target));
  }
  void cells(const std::vector<bdk::CellCheck>& cs) {
    for (const auto& c : cs)
      text << (c.holds ? "ok   " : "FAIL ") << (c.kind == bdk::CellKind::Exact ? "exact   " : "homotopy") << "  "
           << c.name << "\n";
  }
  std::string name_of(const bdk::Representation& r) {
    for (const auto& [n, v] : doc.objects())
      if (v == r) return n;
    return "?";
  }
  char* finish() {
    Json j;
    j["text"] = text.str();
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["problem"] = bdk::problem_to_json(doc);
    return dup(j.dump(2) + "\n");
  }

  bdk::ProblemFile doc;
  std::ostringstream text;
  Json extra = Json::object();
};

/// Copies the named inputs' ends into the result under their own names.
void keep_names(Result& r, const bdk::ProblemFile& in) {
  for (const auto& [n, v] : in.objects()) r.doc.add_object(n, v);
}

bdk::FieldSpec parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q") return bdk::FieldSpec::rationals();
  if (s.size() > 2 && (s.rfind("gf", 0) == 0 || s.rfind("GF", 0) == 0)) {
    const std::string digits = s.substr(2);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 11)
      return bdk::FieldSpec::prime(std::stoull(digits));
  }
  throw bdk::Error(bdk::ErrorCode::InvalidArgument, "field must be 'q' or 'gfP' (e.g. gf5), got '" + s + "'");
}

}  // namespace

extern "C" {

const char* bdk_last_error(void) { return last_error.c_str(); }

const char* bdk_status_name(bdk_status status) {
  if (status == BDK_OK) return "OK";
  if (status == BDK_NO) return "NO";
  if (status == BDK_E_INTERNAL) return "Internal";
  const int code = static_cast<int>(status) - BDK_E_INVALID_ARGUMENT;
  if (code < 0 || code > static_cast<int>(bdk::ErrorCode::Io)) return "Unknown";
  return bdk::error_code_name(static_cast<bdk::ErrorCode>(code)).data();
}

void bdk_string_free(char* s) { std::free(s); }

bdk_status bdk_problem_load_file(const char* path, bdk_problem** out) {
  return guarded([&] {
    require_arg(path, "path");
    require_arg(out, "output");
    *out = new bdk_problem{bdk::load_problem(path)};
    return BDK_OK;
  });
}

bdk_status bdk_problem_load_json(const char* text, bdk_problem** out) {
  return guarded([&] {
    require_arg(text, "text");
    require_arg(out, "output");
    *out = new bdk_problem{bdk::parse_problem(text)};
    return BDK_OK;
  });
}

void bdk_problem_free(bdk_problem* p) { delete p; }

bdk_status bdk_problem_to_json(const bdk_problem* p, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(out, "output");
    *out = dup(bdk::serialize_problem(p->file));
    return BDK_OK;
  });
}

bdk_status bdk_check(const bdk_problem* p, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    const auto& f = p->file;
    Result r(f);
    r.doc = f;
    r.text << "field " << f.field().name() << ", " << f.index_set()->size() << " indices\n";
    for (const auto& [n, o] : f.objects()) r.text << "object " << n << ": " << dims_text(o.dims()) << "\n";
    for (const auto& [n, m] : f.morphisms())
      r.text << "morphism " << n << ": " << r.name_of(m.source()) << " -> " << r.name_of(m.target()) << "\n";
    for (const auto& [n, k] : f.kappas())
      r.text << "kappa " << n << ": " << r.name_of(k.source) << " -> " << r.name_of(k.target) << "\n";
    r.text << "all literals valid\n";
    *out = r.finish();
    return BDK_OK;
  });
}

bdk_status bdk_cone(const bdk_problem* p, const char* t, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(t, "name");
    const bdk::Morphism& m = p->file.morphism(t);
    Result r(p->file);
    keep_names(r, p->file);
    r.morphism(t, m, false);
    r.show_object(std::string("cone(") + t + ")", bdk::cone(m));
    *out = r.finish();
    return BDK_OK;
  });
}

bdk_status bdk_shift(const bdk_problem* p, const char* b, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(b, "name");
    Result r(p->file);
    r.doc.add_object(b, p->file.object(b));
    r.show_object(std::string("[") + b + "]", bdk::shift(p->file.object(b)));
    *out = r.finish();
    return BDK_OK;
  });
}

bdk_status bdk_direct_sum(const bdk_problem* p, const char* b, const char* c, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(b, "name");
    require_arg(c, "name");
    const auto& ob = p->file.object(b);
    const auto& oc = p->file.object(c);
    const bdk::DirectSum s = bdk::direct_sum(ob, oc);
    Result r(p->file);
    r.object(b, ob);
    r.object(c, oc);
    r.show_object(std::string(b) + "+" + c, s.sum);
    r.morphism("iota_hat", s.iota_hat);
    r.morphism("iota", s.iota);
    r.morphism("pi", s.pi);
    r.morphism("pi_hat", s.pi_hat);
    *out = r.finish();
    return BDK_OK;
  });
}

bdk_status bdk_standard_triangle(const bdk_problem* p, const char* t, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(t, "name");
    const bdk::Morphism& m = p->file.morphism(t);
    const bdk::Triangle tri = bdk::standard_triangle(m);
    Result r(p->file);
    keep_names(r, p->file);
    r.show_object(std::string("cone(") + t + ")", tri.z);
    r.object(std::string("[") + r.name_of(tri.x) + "]", bdk::shift(tri.x));
    r.morphism(t, tri.u);
    r.morphism("iota", tri.v);
    r.morphism("pi", tri.w);
    r.text << "triangle " << r.name_of(tri.x) << " -> " << r.name_of(tri.y) << " -> " << r.name_of(tri.z)
           << " -> " << r.name_of(tri.w.target()) << "\n";
    *out = r.finish();
    return BDK_OK;
  });
}

bdk_status bdk_kappa_equiv(const bdk_problem* p, const char* s, const char* t, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(s, "name");
    require_arg(t, "name");
    const auto& ms = p->file.morphism(s);
    const auto& mt = p->file.morphism(t);
    const auto k = bdk::kappa_equiv(ms, mt);
    Result r(p->file);
    keep_names(r, p->file);
    r.morphism(s, ms, false);
    r.morphism(t, mt, false);
    r.extra["equivalent"] = k.has_value();
    if (!k) {
      r.text << "NOT-EQUIVALENT\n";
      *out = r.finish();
      return BDK_NO;
    }
    r.text << "EQUIVALENT\n";
    r.kappa("K", *k);
    *out = r.finish();
    return BDK_OK;
  });
}

bdk_status bdk_hom(const bdk_problem* p, const char* b, const char* c, int quotient, int basis, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(b, "name");
    require_arg(c, "name");
    const auto& ob = p->file.object(b);
    const auto& oc = p->file.object(c);
    const auto hb = bdk::hom_basis(ob, oc);
    Result r(p->file);
    r.object(b, ob);
    r.object(c, oc);
    r.text << "dim Hom_s = " << hb.size() << "\n";
    r.extra["dim_s"] = hb.size();
    if (quotient) {
      const auto null = bdk::null_homotopic_subspace(ob, oc);
      r.text << "dim Hom_kappa = " << hb.size() - null.size() << "\n";
      r.extra["dim_kappa"] = hb.size() - null.size();
      if (basis)
        for (std::size_t i = 0; i < null.size(); ++i) r.morphism("n" + std::to_string(i + 1), null[i]);
    }
    if (basis)
      for (std::size_t i = 0; i < hb.size(); ++i) r.morphism("h" + std::to_string(i + 1), hb[i]);
    *out = r.finish();
    return BDK_OK;
  });
}

bdk_status bdk_kappa_iso(const bdk_problem* p, const char* t, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(t, "name");
    const auto& m = p->file.morphism(t);
    const auto iso = bdk::is_kappa_iso(m);
    Result r(p->file);
    keep_names(r, p->file);
    r.morphism(t, m, false);
    r.extra["iso"] = iso.has_value();
    if (!iso) {
      r.text << "NOT-KAPPA-ISO\n";
      *out = r.finish();
      return BDK_NO;
    }
    r.text << "KAPPA-ISO\n";
    r.morphism("U", iso->inverse);
    r.kappa("K_source", iso->k_source);
    r.kappa("K_target", iso->k_target);
    *out = r.finish();
    return BDK_OK;
  });
}

bdk_status bdk_rotate(const bdk_problem* p, const char* t, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(t, "name");
    const auto& m = p->file.morphism(t);
    const bdk::RotationResult rot = bdk::rotate(m);
    Result r(p->file);
    keep_names(r, p->file);
    r.morphism(t, m, false);
    r.object(std::string("cone(") + t + ")", rot.rotated.y);
    r.object("cone(iota)", rot.standard.z);
    r.morphism("iota", rot.rotated.u);
    r.morphism("pi", rot.rotated.v);
    r.morphism("-[" + std::string(t) + "]", rot.rotated.w);
    r.morphism("R", rot.r);
    r.morphism("S", rot.s);
    for (std::size_t n = 0; n < 3; ++n) r.kappa("square" + std::to_string(n + 1), rot.iso.squares[n], false);
    r.cells(rot.cells);
    r.text << "ok   certificate  rotated triangle is isomorphic to the standard triangle of iota\n";
    const bool ok = bdk::all_hold(rot.cells);
    r.extra["holds"] = ok;
    *out = r.finish();
    return ok ? BDK_OK : BDK_NO;
  });
}

bdk_status bdk_fill(const bdk_problem* p, const char* f, const char* g, const char* t, const char* t2, const char* k,
                    char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    for (const char* n : {f, g, t, t2, k}) require_arg(n, "name");
    const auto& pf = p->file;
    const bdk::FillResult fill =
        bdk::fill_tr3(pf.morphism(f), pf.morphism(g), pf.morphism(t), pf.morphism(t2), pf.kappa(k));
    Result r(pf);
    keep_names(r, pf);
    for (const char* n : {f, g, t, t2}) r.morphism(n, pf.morphism(n), false);
    r.kappa(k, pf.kappa(k), false);
    r.object(std::string("cone(") + t + ")", fill.h.source());
    r.object(std::string("cone(") + t2 + ")", fill.h.target());
    r.morphism("H", fill.h);
    r.cells(fill.cells);
    const bool ok = bdk::all_hold(fill.cells);
    r.extra["holds"] = ok;
    *out = r.finish();
    return ok ? BDK_OK : BDK_NO;
  });
}

bdk_status bdk_octahedron(const bdk_problem* p, const char* s, const char* t, char** out) {
  return guarded([&] {
    require_arg(p, "problem");
    require_arg(s, "name");
    require_arg(t, "name");
    const auto& ms = p->file.morphism(s);
    const auto& mt = p->file.morphism(t);
    const bdk::OctahedronResult oct = bdk::octahedron(ms, mt);
    Result r(p->file);
    keep_names(r, p->file);
    r.morphism(s, ms, false);
    r.morphism(t, mt, false);
    r.object(std::string("cone(") + s + ")", oct.f.source());
    r.object(std::string("cone(") + s + t + ")", oct.f.target());
    r.object(std::string("cone(") + t + ")", oct.g.target());
    r.object("cone(F)", oct.lambda.target());
    r.morphism("F", oct.f);
    r.morphism("G", oct.g);
    r.morphism("Lambda", oct.lambda);
    r.morphism("Lambda_inverse", oct.lambda_inverse.inverse);
    r.cells(oct.cells);
    const bool ok = bdk::all_hold(oct.cells);
    r.extra["holds"] = ok;
    *out = r.finish();
    return ok ? BDK_OK : BDK_NO;
  });
}

bdk_status bdk_fuzz(const bdk_fuzz_config* cfg, char** text, char** json) {
  return guarded([&] {
    require_arg(cfg, "config");
    require_arg(cfg->field, "field");
    bdk::FuzzConfig c;
    c.seed = cfg->seed;
    c.field = parse_field_flag(cfg->field);
    c.max_indices = cfg->max_indices;
    c.max_dim = cfg->max_dim;
    c.trials = cfg->trials;
    c.oracle = cfg->oracle != 0;
    if (c.max_indices == 0) throw bdk::Error(bdk::ErrorCode::InvalidArgument, "max-indices must be at least 1");
    const bdk::FuzzReport report = bdk::verify_axioms(c);
    if (text) *text = dup(report.text());
    if (json) *json = dup(report.summary().dump(2) + "\n");
    return report.ok() ? BDK_OK : BDK_NO;
  });
}

}  // extern "C"
