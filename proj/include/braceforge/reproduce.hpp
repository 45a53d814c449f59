#ifndef BRACEFORGE_REPRODUCE_HPP
#define BRACEFORGE_REPRODUCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

// One-command reproduction of the worked example families. Every asserted
// identity becomes a named claim with a pass/fail status and a witness or
// certificate; reports are deterministic for fixed inputs and seed (timings
// are collected separately and only emitted on request).

namespace braceforge {

struct Verdict {
  std::string claim;
  bool pass = false;
  nlohmann::json detail; // witness / certificate / counts
};

struct Report {
  std::string command;
  nlohmann::json params;
  std::uint64_t seed = 0;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool all_pass() const;
};

// the alpha family on the Heisenberg group of order p^3; all residues, or one
Report reproduce_alpha(unsigned p, std::optional<unsigned> alpha, std::uint64_t seed,
                       unsigned recodings = 5);

// the order-p^5 product example with its nontrivial class
Report reproduce_p5(unsigned p, std::uint64_t seed, unsigned recodings = 5);

// the non-inner gamma constructions ("c4_d4" or "v_h_q")
Report reproduce_noninner(const std::string& kind, unsigned p, unsigned q, std::uint64_t seed);

nlohmann::json report_json(const Report& r, bool with_timings = false);
std::string report_text(const Report& r, bool with_timings = false);

} // namespace braceforge

#endif
