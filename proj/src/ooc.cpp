#include "extdiff/ooc.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "extdiff/certificate.hpp"
#include "extdiff/error.hpp"

namespace extdiff {

Rational Rational::of(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw std::logic_error("zero denominator");
  const auto g = std::gcd(n, d);
  return g ? Rational{n / g, d / g} : Rational{0, 1};
}

std::string Rational::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

CodeSet CodeSet::from_codewords(std::vector<IntSequence> codewords) {
  if (codewords.empty()) throw UsageError("code: no codewords");
  CodeSet cs;
  cs.v = static_cast<std::uint32_t>(codewords[0].length());
  if (cs.v == 0) throw UsageError("code: empty codeword");
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    if (codewords[i].length() != cs.v) throw UsageError("code: codeword " + std::to_string(i + 1) + " has a different length");
    if (!codewords[i].is_binary()) throw ValidationError("code: codeword " + std::to_string(i + 1) + " is not binary");
  }
  for (const auto& x : codewords) {
    cs.weights.push_back(x.weight());
    const auto prof = correlation_profile(x, x);
    cs.lambda_a.push_back(prof.size() > 1 ? *std::max_element(prof.begin() + 1, prof.end()) : 0);
  }
  for (std::size_t i = 0; i < codewords.size(); ++i)
    for (std::size_t j = i + 1; j < codewords.size(); ++j) {
      const auto prof = correlation_profile(codewords[i], codewords[j]);
      const Count mx = *std::max_element(prof.begin(), prof.end());
      cs.lambda_c = std::max(cs.lambda_c.value_or(0), mx);
    }
  cs.codewords = std::move(codewords);
  return cs;
}

CodeSet export_ooc(const Family& f) {
  if (!f.group().is_cyclic_spec()) throw UnsupportedError("export: codes need a cyclic group");
  std::vector<IntSequence> words;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.member(i).is_set()) throw ValidationError("export: member " + std::to_string(i + 1) + " has repeated elements");
    words.push_back(multiset_to_sequence(f.member(i)));
  }
  return CodeSet::from_codewords(std::move(words));
}

OptimalReport check_optimal(const CodeSet& cs) {
  if (cs.codewords.size() < 2) throw UsageError("optimality: need at least two codewords");
  const Count w = cs.weights[0];
  if (std::any_of(cs.weights.begin(), cs.weights.end(), [&](Count x) { return x != w; }))
    throw UsageError("optimality: weights differ; use the variable-weight report");
  OptimalReport r;
  r.v = cs.v;
  r.w = w;
  r.lambda_c = *cs.lambda_c;
  r.bound = Rational::of(w * w, cs.v);
  r.optimal = r.lambda_c * cs.v == w * w;
  if (r.optimal) {
    Group g(GroupSpec::cyclic(cs.v));
    std::vector<GMultiset> members;
    for (const auto& x : cs.codewords) members.push_back(sequence_to_multiset(x));
    const Certificate c = classify_family(Family(g, std::move(members)));
    r.recertified = c.has(Label::ND_PSEDF) && c.params(Label::ND_PSEDF) == std::vector<Count>{r.lambda_c};
  }
  return r;
}

VWParams vw_params(const CodeSet& cs) {
  if (cs.codewords.size() < 2) throw UsageError("variable-weight: need at least two codewords");
  VWParams p;
  p.n = cs.codewords.size();
  p.lambda_c = *cs.lambda_c;
  std::vector<std::uint64_t> counts;
  for (std::size_t i = 0; i < p.n; ++i) {
    auto it = std::find(p.weights.begin(), p.weights.end(), cs.weights[i]);
    if (it == p.weights.end()) {
      p.weights.push_back(cs.weights[i]);
      p.lambda_a.push_back(cs.lambda_a[i]);
      counts.push_back(1);
    } else {
      const auto k = it - p.weights.begin();
      p.lambda_a[k] = std::max(p.lambda_a[k], cs.lambda_a[i]);
      ++counts[k];
    }
  }
  for (auto c : counts) p.ratios.push_back(Rational::of(c, p.n));
  return p;
}

VWCode build_vw_ooc(std::uint32_t v, const std::vector<std::uint64_t>& divisors) {
  const std::size_t m = divisors.size();
  if (m < 2) throw ParameterError("vw: need at least two divisors");
  for (std::size_t i = 0; i < m; ++i) {
    if (divisors[i] == 0 || v % divisors[i] != 0)
      throw ParameterError("vw: a_" + std::to_string(i + 1) + " = " + std::to_string(divisors[i]) + " does not divide v");
    for (std::size_t j = 0; j < i; ++j) {
      if (divisors[i] == divisors[j]) throw ParameterError("vw: divisors must be distinct");
      if (std::lcm(divisors[i], divisors[j]) != v)
        throw ParameterError("vw: lcm(a_" + std::to_string(j + 1) + ", a_" + std::to_string(i + 1) + ") = " +
                             std::to_string(std::lcm(divisors[i], divisors[j])) + ", not v");
    }
  }
  VWCode out;
  std::vector<IntSequence> words;
  for (auto a : divisors) {
    IntSequence x{std::vector<Count>(v, 0)};
    for (std::uint64_t t = 0; t < v; t += a) x.entries[t] = 1;
    words.push_back(std::move(x));
    out.expected.weights.push_back(v / a);
    out.expected.lambda_a.push_back(v / a);
    out.expected.ratios.push_back(Rational::of(1, m));
  }
  out.expected.lambda_c = 1;
  out.expected.n = m;
  out.code = CodeSet::from_codewords(std::move(words));
  out.params = vw_params(out.code);
  return out;
}

std::string ooc_file_text(const CodeSet& cs, bool with_weights) {
  std::ostringstream os;
  os << "v " << cs.v << ' ' << cs.codewords.size() << '\n';
  if (with_weights) {
    os << "weights";
    for (auto w : cs.weights) os << ' ' << w;
    os << '\n';
  }
  for (const auto& x : cs.codewords) os << x.to_text() << '\n';
  return os.str();
}

CodeSet parse_ooc_file(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  std::size_t v = 0, n = 0;
  if (!(is >> tag >> v >> n) || tag != "v") throw UsageError("code file: expected header \"v <length> <count>\"");
  std::vector<IntSequence> words;
  std::vector<Count> declared;
  std::string line;
  while (is >> line) {
    if (line == "weights") {
      for (std::size_t i = 0; i < n; ++i) {
        Count w;
        if (!(is >> w)) throw UsageError("code file: short weights line");
        declared.push_back(w);
      }
      continue;
    }
    if (line.size() != v || line.find_first_not_of("01") != std::string::npos)
      throw UsageError("code file: codeword " + std::to_string(words.size() + 1) + " is not a length-" +
                       std::to_string(v) + " 0/1 string");
    words.push_back(IntSequence::parse(line));
  }
  if (words.size() != n) throw UsageError("code file: header promises " + std::to_string(n) + " codewords");
  CodeSet cs = CodeSet::from_codewords(std::move(words));
  if (!declared.empty() && declared != cs.weights) throw IntegrityError("code file: weights line disagrees with codewords");
  return cs;
}

std::size_t minimal_period(const IntSequence& x) {
  const std::size_t L = x.length();
  for (std::size_t d = 1; d <= L; ++d) {
    if (L % d) continue;
    bool ok = true;
    for (std::size_t t = 0; t + d < L && ok; ++t) ok = x.entries[t] == x.entries[t + d];
    if (ok) return d;
  }
  return L;
}

namespace {

std::uint64_t checked_pow(std::uint64_t b, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / std::max<std::uint64_t>(b, 1)) return cap + 1;
    r *= b;
  }
  return r;
}

std::uint64_t choose(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// H(tau) for sequences idx[0..k-1]; tau[0] = 0 for the first sequence.
Count kwise(const std::vector<IntSequence>& s, const std::vector<std::size_t>& idx, const std::vector<std::size_t>& tau) {
  const std::size_t L = s[0].length();
  Count total = 0;
  for (std::size_t t = 0; t < L; ++t) {
    Count prod = 1;
    for (std::size_t q = 0; q < idx.size() && prod; ++q) prod *= s[idx[q]].entries[(t + tau[q]) % L];
    total += prod;
  }
  return total;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t q = k; q-- > 0;) {
    if (idx[q] < n - k + q) {
      ++idx[q];
      for (std::size_t r = q + 1; r < k; ++r) idx[r] = idx[r - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SIReport si_report(const std::vector<IntSequence>& seqs, const SIOptions& opt) {
  if (seqs.empty()) throw UsageError("shift invariance: no sequences");
  const std::size_t n = seqs.size(), L = seqs[0].length();
  for (const auto& s : seqs) {
    if (s.length() != L) throw UsageError("shift invariance: sequences need a common length");
    if (!s.is_binary()) throw ValidationError("shift invariance: sequences must be binary");
  }
  if (opt.max_k > n) throw UsageError("shift invariance: max-k exceeds the number of sequences");
  SIReport r;
  r.length = L;
  for (const auto& s : seqs) {
    r.periods.push_back(minimal_period(s));
    r.duty.push_back(Rational::of(s.weight(), L));
  }
  r.pairwise_si = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto prof = correlation_profile(seqs[i], seqs[j]);
      SIPair p{i, j, std::all_of(prof.begin(), prof.end(), [&](Count c) { return c == prof[0]; }), std::nullopt};
      if (p.constant) p.value = prof[0];
      r.pairwise_si = r.pairwise_si && p.constant;
      r.pairs.push_back(p);
    }

  bool all_exhaustive = true;
  for (std::size_t k = 3; k <= opt.max_k; ++k) {
    SIKWise kw;
    kw.k = k;
    kw.constant = true;
    const std::uint64_t per_subset = checked_pow(L, k - 1, opt.limit);
    const std::uint64_t subsets = choose(n, k);
    const bool fits = per_subset <= opt.limit && subsets * per_subset <= opt.limit;
    if (!fits && !opt.allow_sampling)
      throw CapacityError("shift invariance: " + std::to_string(k) + "-wise enumeration exceeds " +
                          std::to_string(opt.limit) + " shift tuples; lower max-k or enable sampling");
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(opt.seed + k);
    std::uniform_int_distribution<std::size_t> pick(0, L - 1);
    do {
      std::vector<std::size_t> tau(k, 0);
      const Count first = kwise(seqs, idx, tau);
      bool constant = true;
      if (fits) {
        for (std::uint64_t code = 1; code < per_subset && constant; ++code) {
          std::uint64_t c = code;
          for (std::size_t q = 1; q < k; ++q, c /= L) tau[q] = c % L;
          constant = kwise(seqs, idx, tau) == first;
          ++kw.tuples_checked;
        }
      } else {
        for (std::uint64_t s = 0; s < opt.samples && constant; ++s) {
          for (std::size_t q = 1; q < k; ++q) tau[q] = pick(rng);
          constant = kwise(seqs, idx, tau) == first;
          ++kw.tuples_checked;
        }
      }
      kw.constant = kw.constant && constant;
    } while (kw.constant && next_subset(idx, n));
    kw.exhaustive = fits;
    all_exhaustive = all_exhaustive && fits;
    if (fits) {
      kw.coverage = Rational::of(1, 1);
    } else if (per_subset <= opt.limit) {
      kw.coverage = Rational::of(std::min(opt.samples, per_subset), per_subset);
    } else {
      kw.coverage = Rational::of(0, 1);  // tuple space too large to state
    }
    r.kwise.push_back(kw);
  }
  if (opt.max_k == n && all_exhaustive) {
    bool all = r.pairwise_si;
    for (const auto& kw : r.kwise) all = all && kw.constant;
    r.completely_si = all;
  }
  return r;
}

nlohmann::json si_report_to_json(const SIReport& r) {
  nlohmann::json j;
  j["length"] = r.length;
  j["periods"] = r.periods;
  j["duty"] = nlohmann::json::array();
  for (const auto& d : r.duty) j["duty"].push_back(d.to_string());
  j["pairs"] = nlohmann::json::array();
  for (const auto& p : r.pairs) {
    nlohmann::json e{{"i", p.i + 1}, {"j", p.j + 1}, {"constant", p.constant}};
    e["value"] = p.value ? nlohmann::json(*p.value) : nlohmann::json(nullptr);
    j["pairs"].push_back(e);
  }
  j["pairwise_si"] = r.pairwise_si;
  j["kwise"] = nlohmann::json::array();
  for (const auto& k : r.kwise)
    j["kwise"].push_back({{"k", k.k},
                          {"constant", k.constant},
                          {"exhaustive", k.exhaustive},
                          {"tuples_checked", k.tuples_checked},
                          {"coverage", k.coverage.to_string()}});
  j["completely_si"] = r.completely_si ? nlohmann::json(*r.completely_si) : nlohmann::json(nullptr);
  return j;
}

PrimePowerCheck prime_power_condition(const std::vector<IntSequence>& seqs) {
  PrimePowerCheck c;
  c.k = seqs.size();
  if (seqs.empty()) return c;
  std::uint64_t period = 1;
  for (const auto& s : seqs) period = std::lcm(period, static_cast<std::uint64_t>(minimal_period(s)));
  c.common_period = period;
  if (period < 2) return c;
  std::uint64_t p = 2;
  while (period % p) ++p;
  std::uint64_t q = period;
  std::size_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1 || e != c.k) return c;
  for (const auto& s : seqs)
    if ((s.weight() * p) % s.length() != 0) return c;
  c.p = p;
  c.holds = true;
  return c;
}

}  // namespace extdiff
