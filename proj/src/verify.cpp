#include "sgd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "rng.hpp"
#include "sgd/balance.hpp"
#include "sgd/export.hpp"
#include "sgd/matrices.hpp"
#include "sgd/spectra.hpp"

namespace sgd {
namespace {

const std::map<std::string, Suite>& suite_names() {
  static const std::map<std::string, Suite> names{
      {"forest-theorem", Suite::forest_theorem},
      {"balance-equivalence", Suite::balance_equivalence},
      {"cospectrality", Suite::cospectrality},
      {"transmission-shift", Suite::transmission_shift},
      {"incidence-factorization", Suite::incidence_factorization},
  };
  return names;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int default_instances(Suite s) {
  switch (s) {
    case Suite::forest_theorem: return 200;
    case Suite::balance_equivalence: return 500;
    case Suite::cospectrality: return 100;
    case Suite::transmission_shift: return 0;
    case Suite::incidence_factorization: return 500;
  }
  return 0;
}

std::string describe(const SignedGraph& g) {
  return "n=" + std::to_string(g.order()) + " " +
         serialize_edge_list(WeightedSignedGraph(g)).substr(0, 200);
}

void note_failure(SuiteResult& r, std::string what) {
  r.passed = false;
  if (r.failures.size() < 20) r.failures.push_back(std::move(what));
}

void track_psd(SuiteResult& r, const SquareMatrix& l) {
  const double lo = sym_eig(l).eigenvalues.front();
  r.min_eigenvalue = std::min(r.min_eigenvalue, lo);
  if (lo < -1e-9) note_failure(r, "negative eigenvalue " + format_number(lo, 12));
}

/// Random + corpus instances, connected only.
std::vector<SignedGraph> instances(const VerifyOptions& o, int count, std::uint64_t salt) {
  std::vector<SignedGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_instance(o.size_bound, mix(o.seed ^ salt, i)));
  for (const auto& g : o.corpus)
    if (is_connected(g.base())) out.push_back(g.base());
  return out;
}

SuiteResult forest_theorem(const VerifyOptions& o) {
  SuiteResult r;
  r.suite = Suite::forest_theorem;
  const int count = o.instances ? o.instances : default_instances(r.suite);
  std::vector<WeightedSignedGraph> graphs;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = mix(o.seed ^ 0xf0, i);
    graphs.push_back(with_random_integer_weights(random_instance(o.size_bound, s), 1, 5, s + 1));
  }
  for (const auto& g : o.corpus)
    if (g.integral() && g.order() <= kMaxForestOrder) graphs.push_back(g);

  for (const auto& g : graphs) {
    const BigInt det = det_exact(weighted_laplacian(g));
    const ForestDeterminant sum = forest_det(g);
    ++r.instances;
    const BigInt diff = det > *sum.exact ? det - *sum.exact : *sum.exact - det;
    r.max_deviation = std::max(r.max_deviation, diff.convert_to<double>());
    if (diff != 0)
      note_failure(r, "det " + det.str() + " != forest sum " + sum.exact->str() + " for " +
                          describe(g.base()));
  }
  return r;
}

SuiteResult balance_equivalence(const VerifyOptions& o) {
  SuiteResult r;
  r.suite = Suite::balance_equivalence;
  const int count = o.instances ? o.instances : default_instances(r.suite);
  for (const SignedGraph& g : instances(o, count, 0xba)) {
    ++r.instances;
    const BalanceReport sw = is_balanced_switching(g);
    if (!verify_certificate(g, sw)) note_failure(r, "bad switching certificate for " + describe(g));
    const DistanceTable table = distance_table(g);
    const SquareMatrix lmax = distance_laplacian(table, DistanceKind::max);
    const SquareMatrix lmin = distance_laplacian(table, DistanceKind::min);
    const bool bmax = det_exact(lmax) == 0;
    const bool bmin = det_exact(lmin) == 0;
    const bool bpm = is_compatible(table).compatible &&
                     det_exact(distance_laplacian(table, DistanceKind::pm)) == 0;
    if (bmax != sw.balanced || bmin != sw.balanced || bpm != sw.balanced) {
      r.max_deviation += 1.0;
      note_failure(r, "verdicts disagree (switching " + std::to_string(sw.balanced) + ", max " +
                          std::to_string(bmax) + ", min " + std::to_string(bmin) + ", pm " +
                          std::to_string(bpm) + ") for " + describe(g));
    }
    track_psd(r, lmax);
    track_psd(r, lmin);
  }
  return r;
}

SuiteResult cospectrality(const VerifyOptions& o) {
  SuiteResult r;
  r.suite = Suite::cospectrality;
  const int count = o.instances ? o.instances : default_instances(r.suite);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = mix(o.seed ^ 0xc0, i);
    detail::Rng rng(s);
    const int n = static_cast<int>(rng.uniform_int(2, std::max(2, o.size_bound)));
    GeneratorOptions gen;
    gen.edge_probability = 0.3 + 0.6 * rng.uniform01();
    const SignedGraph base = generate(GraphKind::random, n, AllPositive{}, rng.next(), gen);
    const SignedGraph g = switch_signs(base, random_switching(n, rng.next()));
    ++r.instances;
    const SquareMatrix lpm = distance_laplacian(g, DistanceKind::pm);
    const double dev = spectral_distance(lpm, distance_laplacian(base, DistanceKind::pm));
    r.max_deviation = std::max(r.max_deviation, dev);
    if (dev > 1e-8) note_failure(r, "spectral deviation " + format_number(dev, 6) + " for " + describe(g));
    track_psd(r, lpm);
  }
  return r;
}

SuiteResult transmission_shift(const VerifyOptions& o) {
  SuiteResult r;
  r.suite = Suite::transmission_shift;
  for (int n = 3; n <= o.size_bound; ++n) {
    const int k = n / 2;
    const long long expected_t = n % 2 ? static_cast<long long>(k) * (k + 1) : static_cast<long long>(k) * k;
    for (const SignSpec& spec : {SignSpec{AllPositive{}}, SignSpec{AllNegative{}}}) {
      const SignedGraph g = generate(GraphKind::cycle, n, spec, 0);
      for (DistanceKind kind : {DistanceKind::max, DistanceKind::min}) {
        const auto rep = transmission_regular_shift_check(g, kind);
        ++r.instances;
        r.max_deviation = std::max(r.max_deviation, rep.max_deviation);
        if (!rep.is_transmission_regular || rep.t != expected_t || rep.max_deviation > 1e-8)
          note_failure(r, "C" + std::to_string(n) + " shift check failed: t=" + std::to_string(rep.t) +
                              ", deviation " + format_number(rep.max_deviation, 6));
        track_psd(r, distance_laplacian(g, kind));
      }
    }
  }
  return r;
}

SuiteResult incidence_factorization(const VerifyOptions& o) {
  SuiteResult r;
  r.suite = Suite::incidence_factorization;
  const int count = o.instances ? o.instances : default_instances(r.suite);
  std::uint64_t index = 0;
  for (const SignedGraph& base : instances(o, count, 0xba)) {
    const std::uint64_t s = mix(o.seed ^ 0x1c, index++);
    const WeightedSignedGraph g = with_random_integer_weights(base, 1, 5, s);
    const SquareMatrix l = weighted_laplacian(g);
    detail::Rng rng(s + 7);
    ++r.instances;
    for (int trial = 0; trial < 3; ++trial) {
      Orientation o_rand;
      for (const Edge& e : g.base().edges())
        o_rand.arcs.push_back(rng.bernoulli(0.5) ? std::pair{e.u, e.v} : std::pair{e.v, e.u});
      const SquareMatrix hht = gram(incidence_matrix(g, o_rand), true);
      if (hht != l) {
        r.max_deviation = std::max(r.max_deviation, (hht - l).max_abs());
        note_failure(r, "H·Hᵀ != L for " + describe(g.base()));
      }
    }
  }
  return r;
}

}  // namespace

std::string to_string(Suite s) {
  for (const auto& [name, suite] : suite_names())
    if (suite == s) return name;
  return "?";
}

Suite parse_suite(const std::string& name) {
  const auto it = suite_names().find(name);
  if (it == suite_names().end()) throw InvalidArgument("unknown suite \"" + name + "\"");
  return it->second;
}

std::vector<Suite> all_suites() {
  return {Suite::forest_theorem, Suite::balance_equivalence, Suite::cospectrality,
          Suite::transmission_shift, Suite::incidence_factorization};
}

std::string SuiteResult::summary() const {
  std::string metric;
  switch (suite) {
    case Suite::forest_theorem: metric = "max |det-sum|"; break;
    case Suite::balance_equivalence: metric = "disagreements"; break;
    case Suite::incidence_factorization: metric = "max |HHt-L|"; break;
    default: metric = "max deviation"; break;
  }
  return std::string(passed ? "PASS" : "FAIL") + ", " + std::to_string(instances) +
         " instances, " + metric + " = " + format_number(max_deviation, 6);
}

SuiteResult run_suite(Suite suite, const VerifyOptions& options) {
  if (options.size_bound < 1) throw InvalidArgument("size bound must be at least 1");
  switch (suite) {
    case Suite::forest_theorem:
      if (options.size_bound > kMaxForestOrder)
        throw InvalidArgument("forest-theorem supports n <= " + std::to_string(kMaxForestOrder));
      return forest_theorem(options);
    case Suite::balance_equivalence: return balance_equivalence(options);
    case Suite::cospectrality: return cospectrality(options);
    case Suite::transmission_shift: return transmission_shift(options);
    case Suite::incidence_factorization: return incidence_factorization(options);
  }
  throw InvalidArgument("unknown suite");
}

SignedGraph random_instance(int size_bound, std::uint64_t seed) {
  detail::Rng rng(seed);
  const int n = size_bound < 2 ? 1 : static_cast<int>(rng.uniform_int(2, size_bound));
  GeneratorOptions gen;
  gen.edge_probability = 0.3 + 0.6 * rng.uniform01();
  if (rng.bernoulli(0.5)) {
    const SignedGraph base = generate(GraphKind::random, n, AllPositive{}, rng.next(), gen);
    return switch_signs(base, random_switching(n, rng.next()));
  }
  const double p = rng.uniform01();
  return generate(GraphKind::random, n, NegativeProbability{p}, rng.next(), gen);
}

}  // namespace sgd
