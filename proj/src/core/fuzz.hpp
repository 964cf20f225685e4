#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/problem.hpp"
#include "core/randgen.hpp"

namespace bdk {

struct AxiomTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct FuzzFailure {
  std::string axiom;
  std::size_t trial = 0;
  std::string message;
  Json reproducer;  // problem document holding the instance
};

struct FuzzReport {
  FuzzConfig config;
  std::array<AxiomTally, 4> axioms{{{"TR1"}, {"TR2"}, {"TR3"}, {"TR4"}}};
  std::size_t oracle_agreed = 0;
  std::size_t oracle_disagreed = 0;
  std::size_t oracle_skipped = 0;
  std::vector<FuzzFailure> failures;

  bool ok() const { return failures.empty() && oracle_disagreed == 0; }
  std::string text() const;
  Json summary() const;
};

/// Runs cfg.trials trials of each axiom. Trial n of axiom a draws from
/// Rng::for_stream(cfg.seed, a, n), so every trial replays on its own.
FuzzReport verify_axioms(const FuzzConfig& cfg);

}  // namespace bdk
