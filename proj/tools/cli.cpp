#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgd/balance.hpp"
#include "sgd/export.hpp"
#include "sgd/matrices.hpp"
#include "sgd/spectra.hpp"
#include "sgd/verify.hpp"

namespace sgd::cli {
namespace {

// Input problems caught before any computation starts.
struct UsageError : Error {
  using Error::Error;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidArgument("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

bool looks_like_generator(const std::string& s) {
  for (const char* prefix : {"cycle:", "path:", "complete:", "random:"})
    if (s.rfind(prefix, 0) == 0) return true;
  return false;
}

WeightedSignedGraph load(const std::string& input, std::uint64_t seed) {
  if (input == "-") return parse_edge_list(std::cin);
  if (!std::filesystem::exists(input) && looks_like_generator(input)) return generate_from_spec(input, seed);
  return read_edge_list_file(input);
}

enum class Format { json, csv, md };

struct Output {
  Format format = Format::json;
  std::string path;
  std::ostream* out;

  void write(const std::string& text) const {
    if (path.empty()) {
      *out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }
  void write(const nlohmann::json& j) const { write(j.dump(2) + "\n"); }
};

// Key/value rows for the non-JSON encodings of flat reports.
std::string flat_table(const nlohmann::json& j, Format f) {
  std::string out = f == Format::md ? "| key | value |\n|---|---|\n" : "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string v = it->is_string() ? it->get<std::string>() : it->dump();
    out += f == Format::md ? "| " + it.key() + " | " + v + " |\n" : it.key() + "," + v + "\n";
  }
  return out;
}

void emit_flat(const Output& o, const nlohmann::json& j) {
  if (o.format == Format::json)
    o.write(j);
  else
    o.write(flat_table(j, o.format));
}

void emit_matrix(const Output& o, const SquareMatrix& m, const std::string& kind) {
  switch (o.format) {
    case Format::json: o.write(to_json(m, kind)); break;
    case Format::csv: o.write(to_csv(m)); break;
    case Format::md: o.write(to_markdown(m)); break;
  }
}

// Square matrices selected by name: dmax, lpm, adjacency, ...
SquareMatrix build_matrix(const WeightedSignedGraph& g, const std::string& kind) {
  if (kind == "adjacency") return adjacency_matrix(g);
  if (kind == "degree") return weighted_degree_matrix(g);
  if (kind == "laplacian") return weighted_laplacian(g);
  const DistanceTable t = distance_table(g.base());
  const DistanceKind dk = kind.ends_with("max") ? DistanceKind::max
                          : kind.ends_with("min") ? DistanceKind::min
                                                  : DistanceKind::pm;
  return kind[0] == 'd' ? distance_matrix(t, dk) : distance_laplacian(t, dk);
}

// Verb implementations.

nlohmann::json info_json(const WeightedSignedGraph& g) {
  const SignedGraph& b = g.base();
  int negative = 0;
  for (const Edge& e : b.edges()) negative += e.sign == Sign::negative;
  nlohmann::json j{{"n", g.order()},
                   {"m", g.size()},
                   {"negative_edges", negative},
                   {"weighted", std::any_of(g.weights().begin(), g.weights().end(), [](double w) { return w != 1.0; })},
                   {"components", components(b).size()},
                   {"connected", is_connected(b)}};
  if (is_connected(b)) {
    const DistanceTable t = distance_table(b);
    const auto tr = transmission(t);
    const auto c = is_compatible(t);
    j["balanced"] = is_balanced_switching(b).balanced;
    j["compatible"] = c.compatible;
    if (c.witness) j["incompatible_pair"] = {c.witness->first + 1, c.witness->second + 1};
    j["transmission"] = tr;
    j["transmission_regular"] = std::adjacent_find(tr.begin(), tr.end(), std::not_equal_to<>()) == tr.end();
  }
  if (const auto cf = closed_form_det(g)) {
    static const char* names[] = {"tree", "cycle", "unicyclic", "one-forest"};
    j["shape"] = names[static_cast<int>(cf->shape)];
    j["laplacian_det"] = cf->exact ? nlohmann::json(cf->exact->str()) : nlohmann::json(cf->value);
  }
  return j;
}

void run_matrix(const WeightedSignedGraph& g, const std::string& kind, const Output& o) {
  const SignedGraph& b = g.base();
  if (kind == "incidence") {
    const IncidenceMatrix h = incidence_matrix(g, Orientation::canonical(b));
    o.write(o.format == Format::json ? to_json(h).dump(2) + "\n" : to_csv(h));
    return;
  }
  if (kind == "distance") {
    const DistanceTable t = distance_table(b);
    o.write(o.format == Format::json ? to_json(t).dump(2) + "\n" : to_csv(t));
    return;
  }
  emit_matrix(o, build_matrix(g, kind), kind);
}

void run_balance(const WeightedSignedGraph& g, const std::string& method, const Output& o) {
  const SignedGraph& b = g.base();
  if (method == "both") {
    const BigInt lmax = det_exact(distance_laplacian(b, DistanceKind::max));
    const BigInt lmin = det_exact(distance_laplacian(b, DistanceKind::min));
    const bool sw = is_balanced_switching(b).balanced;
    if ((lmax == 0) != sw || (lmin == 0) != sw)
      throw InvariantViolation("switching and determinant verdicts disagree");
    emit_flat(o, {{"balanced", sw},
                  {"det_lmax", lmax.str()},
                  {"det_lmin", lmin.str()},
                  {"switching", sw ? "balanced" : "unbalanced"}});
    return;
  }
  BalanceReport r;
  if (method == "switching") r = is_balanced_switching(b);
  else if (method == "det-max") r = is_balanced_det(b, DetKind::max);
  else if (method == "det-min") r = is_balanced_det(b, DetKind::min);
  else if (method == "det-pm") r = is_balanced_det(b, DetKind::pm);
  else if (method == "all") r = is_balanced_det(b, DetKind::all);
  else r = is_balanced_forest(b, DistanceKind::max);

  nlohmann::json j = to_json(r);
  if (o.format == Format::json) return o.write(j);
  j["certificate"] = j["certificate"].dump();
  o.write(flat_table(j, o.format));
}

void run_spectrum(const WeightedSignedGraph& g, const std::string& kind, double tol, const Output& o) {
  const Spectrum s = Spectrum::from_values(sym_eig(build_matrix(g, kind)).eigenvalues, tol);
  switch (o.format) {
    case Format::json: o.write(to_json(s)); break;
    case Format::csv: o.write(to_csv(s)); break;
    case Format::md: {
      std::string md = "| eigenvalue | multiplicity |\n|---|---|\n";
      for (const auto& grp : s.groups)
        md += "| " + format_number(grp.value, kEigenvalueDigits) + " | " + std::to_string(grp.multiplicity) + " |\n";
      o.write(md);
    }
  }
}

void run_shift(const WeightedSignedGraph& g, const std::string& kind, const Output& o) {
  const auto r = transmission_regular_shift_check(g.base(), kind.ends_with("min") ? DistanceKind::min : DistanceKind::max);
  nlohmann::json j{{"transmission_regular", r.is_transmission_regular}, {"t", r.t}, {"max_deviation", r.max_deviation}};
  if (r.is_transmission_regular) {
    j["laplacian"] = to_json(r.laplacian)["eigenvalues"];
    j["shifted"] = to_json(r.shifted)["eigenvalues"];
  }
  if (o.format == Format::json) return o.write(j);
  for (const char* k : {"laplacian", "shifted"})
    if (j.contains(k)) j[k] = j[k].dump();
  o.write(flat_table(j, o.format));
}

std::vector<int> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_number<int>(text, "k")};
  const int lo = parse_number<int>(std::string_view(text).substr(0, dots), "k");
  const int hi = parse_number<int>(std::string_view(text).substr(dots + 2), "k");
  if (lo < 1 || hi < lo) throw InvalidArgument("bad k range '" + text + "'");
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

void run_odd_cycle_report(const std::string& range, const Output& o) {
  const auto ks = parse_k_range(range);
  if (ks.front() < 1) throw InvalidArgument("k must be positive");
  const auto rows = formula_vs_eigensolver_report(ks);
  switch (o.format) {
    case Format::md: o.write(formula_report_markdown(rows)); break;
    case Format::csv: o.write(formula_report_csv(rows)); break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"k", r.k},
                       {"n", r.n},
                       {"numeric", to_json(r.numeric)["eigenvalues"]},
                       {"formula", to_json(r.formula)["eigenvalues"]},
                       {"max_deviation", r.max_deviation},
                       {"simple_value_present", r.simple_value_present}});
      o.write(arr);
    }
  }
}

void run_forests(const WeightedSignedGraph& g, const std::string& host, bool contra, const Output& o) {
  WeightedSignedGraph k = g;
  if (host != "graph") {
    const DistanceTable t = distance_table(g.base());
    k = associated_complete(g.base(), t, host == "max" ? DistanceKind::max : DistanceKind::min);
  }
  const auto forests = enumerate_spanning_1forests(k, contra);
  const ForestDeterminant fd = forest_det(k);
  const auto& edges = k.base().edges();
  auto edge_label = [&](int e) {
    const Edge& ed = edges[static_cast<std::size_t>(e)];
    return std::to_string(ed.u + 1) + "-" + std::to_string(ed.v + 1);
  };

  if (o.format != Format::json) {
    const bool md = o.format == Format::md;
    std::string out = md ? "| edges | components | cycle signs |\n|---|---|---|\n" : "edges,components,cycle_signs\n";
    for (const auto& f : forests) {
      std::string es, signs;
      for (int e : f.edges) es += (es.empty() ? "" : " ") + edge_label(e);
      for (const auto& t : f.components) signs += to_char(t.cycle_sign);
      out += md ? "| " + es + " | " + std::to_string(f.components.size()) + " | " + signs + " |\n"
                : es + "," + std::to_string(f.components.size()) + "," + signs + "\n";
    }
    return o.write(out);
  }
  auto arr = nlohmann::json::array();
  for (const auto& f : forests) {
    auto es = nlohmann::json::array();
    for (int e : f.edges) es.push_back(edge_label(e));
    auto comps = nlohmann::json::array();
    for (const auto& t : f.components) {
      std::vector<int> cyc;
      for (int v : t.cycle) cyc.push_back(v + 1);
      comps.push_back({{"cycle", cyc}, {"sign", std::string(1, to_char(t.cycle_sign))}});
    }
    arr.push_back({{"edges", es}, {"contrabalanced", f.contrabalanced()}, {"components", comps}});
  }
  o.write(nlohmann::json{{"host", host},
                         {"count", forests.size()},
                         {"forests", arr},
                         {"forest_det", fd.exact ? nlohmann::json(fd.exact->str()) : nlohmann::json(fd.value)}});
}

std::vector<WeightedSignedGraph> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw UsageError("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".sg") files.push_back(entry.path());
  if (files.empty()) throw UsageError("corpus directory has no .sg files: " + dir);
  std::sort(files.begin(), files.end());
  std::vector<WeightedSignedGraph> out;
  for (const auto& f : files) out.push_back(read_edge_list_file(f.string()));
  return out;
}

int run_verify(const std::string& suite, const VerifyOptions& opts, const Output& o) {
  const std::vector<Suite> suites = suite == "all" ? all_suites() : std::vector<Suite>{parse_suite(suite)};
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  std::string text;
  for (Suite s : suites) {
    const SuiteResult r = run_suite(s, opts);
    ok = ok && r.passed;
    text += to_string(s) + ": " + r.summary() + "\n";
    for (const auto& f : r.failures) text += "  " + f + "\n";
    arr.push_back({{"suite", to_string(s)},
                   {"passed", r.passed},
                   {"instances", r.instances},
                   {"max_deviation", r.max_deviation},
                   {"min_eigenvalue", r.min_eigenvalue},
                   {"summary", r.summary()},
                   {"failures", r.failures}});
  }
  if (o.format == Format::json)
    o.write(arr);
  else
    o.write(text);
  return ok ? 0 : 1;
}

}  // namespace

WeightedSignedGraph generate_from_spec(std::string_view spec, std::uint64_t seed) {
  const auto parts = split(spec, ':');
  if (parts.size() < 2) throw InvalidArgument("generator spec needs kind:n[:...], got '" + std::string(spec) + "'");
  GraphKind kind;
  if (parts[0] == "cycle") kind = GraphKind::cycle;
  else if (parts[0] == "path") kind = GraphKind::path;
  else if (parts[0] == "complete") kind = GraphKind::complete;
  else if (parts[0] == "random") kind = GraphKind::random;
  else throw InvalidArgument("unknown generator '" + parts[0] + "'");
  const int n = parse_number<int>(parts[1], "vertex count");
  if (n < 1) throw InvalidArgument("vertex count must be positive");

  SignSpec signs = AllPositive{};
  GeneratorOptions options;
  std::optional<std::pair<int, int>> weights;
  std::string sign_string;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p == "allpos" || p == "pos") signs = AllPositive{};
    else if (p == "allneg" || p == "neg") signs = AllNegative{};
    else if (p.rfind("p=", 0) == 0) signs = NegativeProbability{parse_number<double>(p.substr(2), "probability")};
    else if (p.rfind("q=", 0) == 0) options.edge_probability = parse_number<double>(p.substr(2), "edge density");
    else if (p.rfind("seed=", 0) == 0) seed = parse_number<std::uint64_t>(p.substr(5), "seed");
    else if (p.rfind("w=", 0) == 0) {
      const auto range = split(std::string_view(p).substr(2), '-');
      if (range.size() != 2) throw InvalidArgument("weight range must be w=LO-HI");
      weights = std::pair{parse_number<int>(range[0], "weight"), parse_number<int>(range[1], "weight")};
    } else if (!p.empty() && p.find_first_not_of("+-") == std::string::npos) {
      sign_string = p;
    } else {
      throw InvalidArgument("unknown generator field '" + p + "'");
    }
  }
  if (!sign_string.empty()) {
    if (kind != GraphKind::cycle && kind != GraphKind::path)
      throw InvalidArgument("sign strings apply to cycle and path only");
    const std::size_t m = kind == GraphKind::cycle ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n - 1);
    if (sign_string.size() != m)
      throw InvalidArgument("sign string must have " + std::to_string(m) + " characters, got " +
                            std::to_string(sign_string.size()));
    NegativeEdges neg;
    for (std::size_t i = 0; i < m; ++i)
      if (sign_string[i] == '-') neg.pairs.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % static_cast<std::size_t>(n)));
    signs = neg;
  }
  const SignedGraph g = generate(kind, n, signs, seed, options);
  if (weights) return with_random_integer_weights(g, weights->first, weights->second, seed);
  return WeightedSignedGraph(g);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed distance matrices, balance deciders and spectra for signed graphs.", "sgdist"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  std::string format = "json", out_path, input, kind, method = "switching", suite, host = "graph", corpus, odd_cycle;
  std::uint64_t seed = 1;
  double tolerance = kMultiplicityTolerance;
  int size_bound = 6, instances = 0;
  bool contra = false, shift = false;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"md", Format::md}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output encoding")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--out,-o", out_path, "Write to this file instead of stdout");
    sub->add_option("--seed", seed, "Seed for generator inputs and random suites");
  };
  const std::string input_help = "Edge-list file, '-' for stdin, or a generator spec such as cycle:5:allneg";

  auto* info = app.add_subcommand("info", "Summarize a graph");
  info->add_option("input", input, input_help)->required();
  common(info);

  auto* matrix = app.add_subcommand("matrix", "Print a matrix of the graph");
  matrix->add_option("input", input, input_help)->required();
  matrix->add_option("--kind", kind, "dmax|dmin|dpm|lmax|lmin|lpm|adjacency|degree|laplacian|incidence|distance")
      ->required()
      ->check(CLI::IsMember({"dmax", "dmin", "dpm", "lmax", "lmin", "lpm", "adjacency", "degree", "laplacian",
                             "incidence", "distance"}));
  common(matrix);

  auto* balance = app.add_subcommand("balance", "Decide balance");
  balance->add_option("input", input, input_help)->required();
  balance->add_option("--method", method, "switching|det-max|det-min|det-pm|forest|both|all")->capture_default_str()
      ->check(CLI::IsMember({"switching", "det-max", "det-min", "det-pm", "forest", "both", "all"}));
  common(balance);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a graph matrix, or the odd-cycle formula report");
  spectrum->add_option("input", input, input_help);
  spectrum->add_option("--kind", kind, "lmax|lmin|lpm|dmax|dmin|dpm|adjacency|laplacian (default lpm)")
      ->check(CLI::IsMember({"lmax", "lmin", "lpm", "dmax", "dmin", "dpm", "adjacency", "laplacian"}));
  spectrum->add_option("--tolerance", tolerance, "Multiplicity grouping tolerance")->capture_default_str()->check(CLI::NonNegativeNumber);
  spectrum->add_flag("--shift", shift, "Check the transmission-regular shift eig(L) = t - eig(D) (kind lmax|lmin)");
  spectrum->add_option("--odd-cycle", odd_cycle, "Compare the printed odd-cycle formula with the eigensolver for k or k1..k2");
  common(spectrum);

  auto* forests = app.add_subcommand("forests", "Enumerate spanning 1-forests and their weighted sum");
  forests->add_option("input", input, input_help)->required();
  forests->add_option("--host", host, "graph|max|min: the graph itself or its associated complete graph")->capture_default_str()
      ->check(CLI::IsMember({"graph", "max", "min"}));
  forests->add_flag("--contrabalanced", contra, "List only 1-forests without positive cycles");
  common(forests);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite,
                     "forest-theorem|balance-equivalence|cospectrality|transmission-shift|incidence-factorization|all")
      ->required()
      ->check(CLI::IsMember({"forest-theorem", "balance-equivalence", "cospectrality", "transmission-shift",
                             "incidence-factorization", "all"}));
  verify->add_option("--n", size_bound, "Largest graph order drawn")->capture_default_str();
  verify->add_option("--instances", instances, "Instances per suite (0 = suite default)")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--corpus", corpus, "Directory of extra .sg graphs to include");
  common(verify);

  std::string gen_spec;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("spec", gen_spec, "e.g. cycle:5:allneg, path:3:+-, complete:4:p=0.5, random:8:p=0.4:q=0.5:seed=3:w=1-5")
      ->required();
  gen->add_option("--out,-o", out_path, "Write to this file instead of stdout");
  gen->add_option("--seed", seed, "Seed used when the spec has none");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output o{formats.at(format), out_path, &out};
  try {
    if (*gen) {
      o.write(serialize_edge_list(generate_from_spec(gen_spec, seed)));
      return 0;
    }
    if (*verify) {
      VerifyOptions opts;
      opts.size_bound = size_bound;
      opts.seed = seed;
      opts.instances = instances;
      if (!corpus.empty()) opts.corpus = load_corpus(corpus);
      if (size_bound < 1) throw UsageError("--n must be positive");
      if (size_bound > kMaxForestOrder && (suite == "forest-theorem" || suite == "all"))
        throw UsageError("--n above " + std::to_string(kMaxForestOrder) + " is outside the forest enumeration limit");
      return run_verify(suite, opts, o);
    }
    if (*spectrum && !odd_cycle.empty()) {
      if (!input.empty()) throw UsageError("--odd-cycle takes no input graph");
      run_odd_cycle_report(odd_cycle, o);
      return 0;
    }
    if (input.empty()) throw UsageError("an input graph is required");

    WeightedSignedGraph g = [&] {
      try {
        return load(input, seed);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      } catch (const GraphError& e) {
        throw UsageError(e.what());
      }
    }();

    if (*info) emit_flat(o, info_json(g));
    else if (*matrix) run_matrix(g, kind, o);
    else if (*balance) run_balance(g, method, o);
    else if (*spectrum && shift) run_shift(g, kind.empty() ? "lmax" : kind, o);
    else if (*spectrum) run_spectrum(g, kind.empty() ? "lpm" : kind, tolerance, o);
    else if (*forests) run_forests(g, host, contra, o);
    return 0;
  } catch (const UsageError& e) {
    err << "sgdist: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "sgdist: " << input << ": " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "sgdist: " << e.what() << "\n";
    return *gen ? 2 : 1;
  } catch (const Error& e) {
    err << "sgdist: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sgd::cli
