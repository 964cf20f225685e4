#include "core/fuzz.hpp"

#include <functional>
#include <sstream>

#include "core/bruteforce.hpp"
#include "core/conetri.hpp"
#include "core/error.hpp"
#include "core/triaxioms.hpp"

namespace bdk {

namespace {

struct CheckFailed {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed{what};
}

void require_cells(const std::vector<CellCheck>& cells) {
  for (const auto& c : cells) require(c.holds, "cell failed: " + c.name);
}

Representation draw_object(Rng& rng, const FuzzConfig& cfg, const IndexSetPtr& idx) {
  return random_object(rng, cfg.field, random_dims(rng, idx, cfg.max_dim));
}

using Cells = std::vector<std::vector<std::optional<BlockMatrix>>>;

void trial_tr1(Rng& rng, const FuzzConfig& cfg, ProblemFile& repro, FuzzReport& report) {
  const Representation b = draw_object(rng, cfg, repro.index_set());
  const Representation c = draw_object(rng, cfg, repro.index_set());
  repro.add_object("B", b);
  repro.add_object("C", c);
  const Morphism t = random_morphism(rng, b, c);
  repro.add_morphism("T", t);
  const FieldSpec f = cfg.field;

  const Morphism id = identity(b);
  const Representation z = cone(id);
  Cells kz(2, std::vector<std::optional<BlockMatrix>>(2));
  kz[1][0] = BlockMatrix::identity(f, b.dims());
  const KappaMatrix k_cone = check_kappa(assemble(f, {b.dims(), b.dims()}, {b.dims(), b.dims()}, kz), z, z);
  require(witnesses(identity(z), zero_morphism(z, z), k_cone), "displayed homotopy Id ~ 0 on cone(Id_B)");
  const auto solved = kappa_equiv(identity(z), zero_morphism(z, z));
  require(solved && witnesses(identity(z), zero_morphism(z, z), *solved), "solver: Id ~ 0 on cone(Id_B)");
  require(is_kappa_iso(zero_morphism(z, zero_object(repro.index_set(), f))).has_value(),
          "cone(Id_B) -> 0 is a kappa-isomorphism");

  const Triangle tri = standard_triangle(t);
  require(compose(tri.v, tri.w).matrix().is_zero(), "iota_C pi_B = 0");
  Cells kt(1, std::vector<std::optional<BlockMatrix>>(2));
  kt[0][0] = BlockMatrix::identity(f, b.dims());
  const Morphism t_iota = compose(t, tri.v);
  const Morphism zero = zero_morphism(b, tri.z);
  require(witnesses(t_iota, zero, check_kappa(assemble(f, {b.dims()}, {b.dims(), c.dims()}, kt), b, tri.z)),
          "displayed homotopy T iota_C ~ 0");
  require(kappa_equiv(t_iota, zero).has_value(), "solver: T iota_C ~ 0");

  if (!cfg.oracle) return;
  auto tally = [&](std::optional<bool> agree, const std::string& what) {
    if (!agree) {
      ++report.oracle_skipped;
    } else if (*agree) {
      ++report.oracle_agreed;
    } else {
      ++report.oracle_disagreed;
      throw CheckFailed{"oracle disagreement: " + what};
    }
  };
  const auto dim = oracle::hom_dim(b, c);
  tally(dim ? std::optional<bool>(*dim == hom_basis(b, c).size()) : std::nullopt, "dim Hom(B, C)");
  const auto rel = oracle::kappa_related(t, zero_morphism(b, c));
  tally(rel ? std::optional<bool>(*rel == kappa_equiv(t, zero_morphism(b, c)).has_value()) : std::nullopt,
        "T ~ 0");
}

void trial_tr2(Rng& rng, const FuzzConfig& cfg, ProblemFile& repro, FuzzReport&) {
  const Representation b = draw_object(rng, cfg, repro.index_set());
  const Representation c = draw_object(rng, cfg, repro.index_set());
  repro.add_object("B", b);
  repro.add_object("C", c);
  const Morphism t = random_morphism(rng, b, c);
  repro.add_morphism("T", t);
  require_cells(rotate(t).cells);
}

void trial_tr3(Rng& rng, const FuzzConfig& cfg, ProblemFile& repro, FuzzReport&) {
  constexpr int attempts = 8;
  for (int n = 0;; ++n) {
    const Representation a = draw_object(rng, cfg, repro.index_set());
    const Representation b = draw_object(rng, cfg, repro.index_set());
    const Representation a2 = draw_object(rng, cfg, repro.index_set());
    const Representation b2 = draw_object(rng, cfg, repro.index_set());
    try {
      const CommutingSquare sq = random_commuting_square(rng, a, b, a2, b2);
      repro.add_object("A", a);
      repro.add_object("B", b);
      repro.add_object("A'", a2);
      repro.add_object("B'", b2);
      repro.add_morphism("F", sq.f);
      repro.add_morphism("G", sq.g);
      repro.add_morphism("T", sq.t);
      repro.add_morphism("T'", sq.t2);
      repro.add_kappa("K", sq.k);
      require_cells(fill_tr3(sq.f, sq.g, sq.t, sq.t2, sq.k).cells);
      return;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Degenerate || n + 1 == attempts) throw;
    }
  }
}

void trial_tr4(Rng& rng, const FuzzConfig& cfg, ProblemFile& repro, FuzzReport&) {
  const Representation a = draw_object(rng, cfg, repro.index_set());
  const Representation b = draw_object(rng, cfg, repro.index_set());
  const Representation c = draw_object(rng, cfg, repro.index_set());
  repro.add_object("A", a);
  repro.add_object("B", b);
  repro.add_object("C", c);
  const Morphism s = random_morphism(rng, a, b);
  const Morphism t = random_morphism(rng, b, c);
  repro.add_morphism("S", s);
  repro.add_morphism("T", t);
  require_cells(octahedron(s, t).cells);
}

}  // namespace

FuzzReport verify_axioms(const FuzzConfig& cfg) {
  using Trial = std::function<void(Rng&, const FuzzConfig&, ProblemFile&, FuzzReport&)>;
  const std::array<Trial, 4> trials{trial_tr1, trial_tr2, trial_tr3, trial_tr4};
  FuzzReport report;
  report.config = cfg;
  for (std::size_t ax = 0; ax < trials.size(); ++ax) {
    for (std::size_t n = 0; n < cfg.trials; ++n) {
      Rng rng = Rng::for_stream(cfg.seed, ax + 1, n);
      ProblemFile repro(cfg.field, random_index_set(rng, cfg.max_indices));
      std::string failure;
      try {
        trials[ax](rng, cfg, repro, report);
      } catch (const CheckFailed& e) {
        failure = e.what;
      } catch (const Error& e) {
        failure = std::string(error_code_name(e.code())) + ": " + e.what();
      }
      if (failure.empty()) {
        ++report.axioms[ax].passed;
      } else {
        ++report.axioms[ax].failed;
        report.failures.push_back({report.axioms[ax].name, n, failure, problem_to_json(repro)});
      }
    }
  }
  return report;
}

std::string FuzzReport::text() const {
  std::ostringstream out;
  out << "fuzz seed=" << config.seed << " field=" << config.field.name() << " max-indices=" << config.max_indices
      << " max-dim=" << config.max_dim << " trials=" << config.trials << (config.oracle ? " oracle" : "") << "\n";
  for (const auto& a : axioms)
    out << a.name << ": " << a.passed << " passed, " << a.failed << " failed\n";
  if (config.oracle)
    out << "oracle: " << oracle_agreed << " agreed, " << oracle_disagreed << " disagreed, " << oracle_skipped
        << " skipped\n";
  for (const auto& f : failures) out << "FAIL " << f.axiom << " trial " << f.trial << ": " << f.message << "\n";
  out << (ok() ? "all axioms hold" : "AXIOM FAILURES") << "\n";
  return out.str();
}

Json FuzzReport::summary() const {
  Json j;
  j["seed"] = config.seed;
  j["field"] = field_to_json(config.field);
  j["max_indices"] = config.max_indices;
  j["max_dim"] = config.max_dim;
  j["trials"] = config.trials;
  Json axes = Json::object();
  for (const auto& a : axioms) axes[a.name] = Json{{"passed", a.passed}, {"failed", a.failed}};
  j["axioms"] = std::move(axes);
  if (config.oracle)
    j["oracle"] = Json{{"agreed", oracle_agreed}, {"disagreed", oracle_disagreed}, {"skipped", oracle_skipped}};
  Json fails = Json::array();
  for (const auto& f : failures)
    fails.push_back(Json{{"axiom", f.axiom}, {"trial", f.trial}, {"message", f.message}, {"reproducer", f.reproducer}});
  j["failures"] = std::move(fails);
  j["ok"] = ok();
  return j;
}

}  // namespace bdk
