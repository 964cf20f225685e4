// bdk: command-line front end over the C interface.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockcat/blockcat.h"

namespace {

struct Output {
  bool json = false;
  std::string emit;
};

struct ProblemDeleter {
  void operator()(bdk_problem* p) const { bdk_problem_free(p); }
};
using ProblemPtr = std::unique_ptr<bdk_problem, ProblemDeleter>;

int fail(bdk_status st) {
  std::cerr << "error: " << bdk_status_name(st) << ": " << bdk_last_error() << "\n";
  return 2;
}

int exit_code(bdk_status st) {
  if (st == BDK_OK) return 0;
  if (st == BDK_NO) return 1;
  return fail(st);
}

/// Prints a result document; returns the process exit code for st.
int report(bdk_status st, char* raw, const Output& out) {
  if (st != BDK_OK && st != BDK_NO) return fail(st);
  std::unique_ptr<char, void (*)(char*)> owned(raw, bdk_string_free);
  const auto doc = nlohmann::ordered_json::parse(raw);
  if (out.json)
    std::cout << raw;
  else
    std::cout << doc["text"].get<std::string>();
  if (!out.emit.empty()) {
    std::ofstream f(out.emit);
    if (!f) {
      std::cerr << "error: Io: cannot write '" << out.emit << "'\n";
      return 2;
    }
    f << doc["problem"].dump(2) << "\n";
  }
  return exit_code(st);
}

using Op = std::function<bdk_status(const bdk_problem*, char**)>;

int with_problem(const std::string& path, const Output& out, const Op& op) {
  bdk_problem* raw = nullptr;
  if (bdk_status st = bdk_problem_load_file(path.c_str(), &raw); st != BDK_OK) return fail(st);
  ProblemPtr p(raw);
  char* result = nullptr;
  const bdk_status st = op(p.get(), &result);
  return report(st, result, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the category of square-zero block matrices over a poset with involution"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "Print the full JSON result instead of the text report");
  app.add_option("--emit", out.emit, "Write the reloadable problem document to this file");

  std::string file;
  std::vector<std::string> names;
  int code = 0;

  auto sub = [&](const char* name, const char* help, std::size_t arity, const char* names_help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("problem", file, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
    if (arity > 0) s->add_option("names", names, names_help)->required()->expected(static_cast<int>(arity));
    return s;
  };

  CLI::App* check = sub("check", "Validate every literal in the problem", 0, "");
  check->callback([&] { code = with_problem(file, out, [](auto* p, char** r) { return bdk_check(p, r); }); });

  sub("cone", "Mapping cone of a morphism", 1, "T")->callback([&] {
    code = with_problem(file, out, [&](auto* p, char** r) { return bdk_cone(p, names[0].c_str(), r); });
  });
  sub("shift", "Shift of an object", 1, "B")->callback([&] {
    code = with_problem(file, out, [&](auto* p, char** r) { return bdk_shift(p, names[0].c_str(), r); });
  });
  sub("sum", "Direct sum with its four structure maps", 2, "B C")->callback([&] {
    code = with_problem(file, out,
                        [&](auto* p, char** r) { return bdk_direct_sum(p, names[0].c_str(), names[1].c_str(), r); });
  });
  sub("tri", "Standard triangle of a morphism", 1, "T")->callback([&] {
    code = with_problem(file, out, [&](auto* p, char** r) { return bdk_standard_triangle(p, names[0].c_str(), r); });
  });
  sub("equiv", "Homotopy witness for S and T, or NOT-EQUIVALENT", 2, "S T")->callback([&] {
    code = with_problem(file, out,
                        [&](auto* p, char** r) { return bdk_kappa_equiv(p, names[0].c_str(), names[1].c_str(), r); });
  });

  bool quotient = false, basis = false;
  CLI::App* hom = sub("hom", "Dimension of the hom-space", 2, "B C");
  hom->add_flag("--quotient", quotient, "Also report the dimension modulo homotopy");
  hom->add_flag("--basis", basis, "List a basis");
  hom->callback([&] {
    code = with_problem(file, out, [&](auto* p, char** r) {
      return bdk_hom(p, names[0].c_str(), names[1].c_str(), quotient, basis, r);
    });
  });

  sub("iso", "Decide whether a morphism is invertible up to homotopy", 1, "T")->callback([&] {
    code = with_problem(file, out, [&](auto* p, char** r) { return bdk_kappa_iso(p, names[0].c_str(), r); });
  });
  sub("rotate", "Rotation of the standard triangle with its certificate", 1, "T")->callback([&] {
    code = with_problem(file, out, [&](auto* p, char** r) { return bdk_rotate(p, names[0].c_str(), r); });
  });
  sub("fill", "Fill-in map between two standard triangles", 5, "F G T T' K")->callback([&] {
    code = with_problem(file, out, [&](auto* p, char** r) {
      return bdk_fill(p, names[0].c_str(), names[1].c_str(), names[2].c_str(), names[3].c_str(), names[4].c_str(), r);
    });
  });
  sub("octa", "Octahedron for a composable pair", 2, "S T")->callback([&] {
    code = with_problem(file, out,
                        [&](auto* p, char** r) { return bdk_octahedron(p, names[0].c_str(), names[1].c_str(), r); });
  });

  std::uint64_t seed = 1;
  std::string field = "gf5";
  std::uint32_t max_dim = 3, max_indices = 3, trials = 25;
  bool oracle = false;
  CLI::App* fuzz = app.add_subcommand("fuzz", "Check the triangulated axioms on random instances");
  fuzz->add_option("--seed", seed, "Seed")->capture_default_str();
  fuzz->add_option("--field", field, "q or gfP (e.g. gf5)")->capture_default_str();
  fuzz->add_option("--max-dim", max_dim, "Largest band size")->capture_default_str();
  fuzz->add_option("--max-indices", max_indices, "Largest index set")->capture_default_str();
  fuzz->add_option("--trials", trials, "Trials per axiom")->capture_default_str();
  fuzz->add_flag("--oracle", oracle, "Cross-check against exhaustive search where feasible");
  fuzz->callback([&] {
    const bdk_fuzz_config cfg{seed, field.c_str(), max_indices, max_dim, trials, oracle ? 1 : 0};
    char* text = nullptr;
    char* summary = nullptr;
    const bdk_status st = bdk_fuzz(&cfg, &text, &summary);
    if (st != BDK_OK && st != BDK_NO) {
      code = fail(st);
      return;
    }
    std::cout << (out.json ? summary : text);
    if (!out.emit.empty()) std::ofstream(out.emit) << summary;
    bdk_string_free(text);
    bdk_string_free(summary);
    code = exit_code(st);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return code;
}
