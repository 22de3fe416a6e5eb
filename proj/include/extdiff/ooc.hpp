#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extdiff/difference.hpp"
#include "extdiff/multiset.hpp"

namespace extdiff {

// Non-negative fraction kept in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational of(std::uint64_t n, std::uint64_t d);
  std::string to_string() const;
  bool operator==(const Rational&) const = default;
};

// Binary codewords of common length v with their exact correlation maxima.
struct CodeSet {
  std::uint32_t v = 0;
  std::vector<IntSequence> codewords;
  std::vector<Count> weights;
  std::vector<Count> lambda_a;    // max autocorrelation over nonzero shifts
  std::optional<Count> lambda_c;  // max cross-correlation; absent for one codeword

  // Computes weights and correlation maxima; every codeword must be binary of length v.
  static CodeSet from_codewords(std::vector<IntSequence> codewords);
};

// Members must be sets over Cyclic(v).
CodeSet export_ooc(const Family& f);

struct OptimalReport {
  bool optimal = false;  // lambda_c * v == w^2
  std::uint32_t v = 0;
  Count w = 0;
  Count lambda_c = 0;
  Rational bound;                    // w^2 / v
  std::optional<bool> recertified;   // only when optimal: the codeword sets certify as that PSEDF
};

// Needs at least two codewords of one common weight; UsageError otherwise.
OptimalReport check_optimal(const CodeSet& cs);

struct VWParams {
  std::vector<Count> weights;     // distinct, in first-appearance order
  std::vector<Count> lambda_a;    // per weight
  std::vector<Rational> ratios;   // per weight, summing to 1
  Count lambda_c = 0;
  std::size_t n = 0;

  bool operator==(const VWParams&) const = default;
};

// Groups a code by weight. Needs at least two codewords.
VWParams vw_params(const CodeSet& cs);

struct VWCode {
  CodeSet code;
  VWParams params;    // measured from the code
  VWParams expected;  // from the divisors alone
};

// Codeword i is the indicator of a_i Z_v; needs lcm(a_i, a_j) = v for every pair.
VWCode build_vw_ooc(std::uint32_t v, const std::vector<std::uint64_t>& divisors);

// "v N", an optional weights line, then one 0/1 line per codeword.
std::string ooc_file_text(const CodeSet& cs, bool with_weights);
CodeSet parse_ooc_file(const std::string& text);

struct SIOptions {
  std::size_t max_k = 2;
  std::uint64_t limit = 10'000'000;  // shift tuples examined per k, summed over subsets
  bool allow_sampling = false;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100'000;
};

struct SIPair {
  std::size_t i = 0, j = 0;
  bool constant = false;
  std::optional<Count> value;
};

struct SIKWise {
  std::size_t k = 0;
  bool constant = false;  // every k-subset has a constant correlation
  bool exhaustive = true;
  std::uint64_t tuples_checked = 0;
  Rational coverage;      // tuples checked / tuple space
};

struct SIReport {
  std::size_t length = 0;
  std::vector<std::size_t> periods;  // minimal periods
  std::vector<Rational> duty;
  std::vector<SIPair> pairs;
  bool pairwise_si = false;
  std::vector<SIKWise> kwise;  // k = 3 .. max_k
  // Set only when every k up to the sequence count was checked exhaustively.
  std::optional<bool> completely_si;
};

SIReport si_report(const std::vector<IntSequence>& seqs, const SIOptions& opt = {});
nlohmann::json si_report_to_json(const SIReport& r);

std::size_t minimal_period(const IntSequence& x);

struct PrimePowerCheck {
  bool holds = false;
  std::optional<std::uint64_t> p;
  std::size_t k = 0;
  std::uint64_t common_period = 0;  // lcm of the minimal periods
};

// Prime p with every duty factor n_i/p and common minimal period p^K, K the
// number of sequences. Reports the hypothesis only.
PrimePowerCheck prime_power_condition(const std::vector<IntSequence>& seqs);

}  // namespace extdiff
