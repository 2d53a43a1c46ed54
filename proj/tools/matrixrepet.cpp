// matrixrepet command-line tool.
//
// JSON reports go to stdout, tables and diagnostics to stderr.
// Exit codes: 0 ok, 1 invalid attractor (verify) or other failure,
// 2 format error, 3 inconclusive, 4 invalid attractor.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matrixrepet/attractor.hpp"
#include "matrixrepet/blocktree.hpp"
#include "matrixrepet/delta.hpp"
#include "matrixrepet/errors.hpp"
#include "matrixrepet/generators.hpp"

#ifndef MATRIXREPET_VERSION
#define MATRIXREPET_VERSION "0.0.0"
#endif

using namespace matrixrepet;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitFormat = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInvalidAttractor = 4;

struct Globals {
  int threads = 1;
  bool no_timing = false;
  bool paranoid = false;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
};

class Clock {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

HashSeed resolve_seed(const Globals& g) {
  if (g.seed) return HashSeed{*g.seed};
  if (const char* env = std::getenv("MATRIXREPET_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return HashSeed{v};
    } catch (const std::exception&) {
    }
    throw FormatError(std::string("MATRIXREPET_SEED is not an unsigned integer: '") + env + "'");
  }
  return HashSeed{};
}

MatrixFormat matrix_format(const Globals& g) { return g.format == "raw" ? MatrixFormat::RawBytes : MatrixFormat::Text; }

Json rational_json(Rational r) { return Json{{"num", r.num}, {"den", r.den}}; }

Json positions_json(const Attractor& g) {
  Json out = Json::array();
  for (Position p : g.positions) out.push_back({p.row, p.col});
  return out;
}

std::string describe_symbol(Symbol s) {
  if (s >= 0x21 && s <= 0x7e) return std::string(1, static_cast<char>(s));
  return "#" + std::to_string(s);
}

class Report {
 public:
  Report(const Globals& g, std::vector<std::string> argv) : globals_(g) {
    json_["tool"] = "matrixrepet";
    json_["version"] = MATRIXREPET_VERSION;
    json_["command"] = std::move(argv);
    json_["hash_seed"] = resolve_seed(g).value;
    json_["threads"] = g.threads;
    json_["paranoid"] = g.paranoid;
  }

  void input(const std::string& path, const Matrix& m) {
    json_["input"] = {{"path", path}, {"rows", m.rows()}, {"cols", m.cols()}, {"sigma", m.sigma()}};
  }
  Json& result() { return json_["result"]; }

  void emit(const Clock& clock) {
    if (!globals_.no_timing) json_["timing"] = {{"seconds", clock.seconds()}};
    std::cout << json_.dump(2) << "\n";
  }

 private:
  const Globals& globals_;
  Json json_;
};

Json profile_json(const DeltaProfile& p) {
  return Json{{"n", p.n}, {"d", p.d}, {"delta2d", rational_json(p.delta2d)}, {"argmax_k", p.argmax_k}};
}

Json stats_json(const BTStats& st) {
  Json levels = Json::array();
  for (const LevelStats& l : st.levels) {
    levels.push_back({{"side", l.side},
                      {"marked", l.marked},
                      {"marked_logical", l.marked_logical},
                      {"unmarked", l.unmarked},
                      {"padding", l.padding},
                      {"explicit", l.explicit_leaves}});
  }
  return Json{{"n", st.n},
              {"padded_side", st.padded_side},
              {"k", st.k},
              {"leaf_side", st.leaf_side},
              {"origin", st.origin == TreeOrigin::Attractor ? "attractor" : "first-occurrence"},
              {"height", st.levels.size()},
              {"nodes", st.nodes},
              {"pointers", st.pointers},
              {"explicit_symbols", st.explicit_symbols},
              {"max_marked_per_level", st.max_marked_per_level},
              {"space_units", st.space_units},
              {"estimated_bits", st.estimated_bits},
              {"levels", levels}};
}

void print_stats_table(const BTStats& st) {
  std::fprintf(stderr, "n=%zu padded=%zu k=%zu leaf=%zu origin=%s\n", st.n, st.padded_side, st.k, st.leaf_side,
               st.origin == TreeOrigin::Attractor ? "attractor" : "first-occurrence");
  std::fprintf(stderr, "%5s %8s %8s %8s %8s %8s\n", "level", "side", "marked", "pointer", "padding", "explicit");
  for (std::size_t L = 0; L < st.levels.size(); ++L) {
    const LevelStats& l = st.levels[L];
    std::fprintf(stderr, "%5zu %8zu %8zu %8zu %8zu %8zu\n", L, l.side, l.marked, l.unmarked, l.padding,
                 l.explicit_leaves);
  }
  std::fprintf(stderr, "nodes=%zu pointers=%zu explicit_symbols=%zu space_units=%zu bits~%zu\n", st.nodes,
               st.pointers, st.explicit_symbols, st.space_units, st.estimated_bits);
}

std::vector<std::byte> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::byte> out(raw.size());
  std::transform(raw.begin(), raw.end(), out.begin(), [](char c) { return static_cast<std::byte>(c); });
  return out;
}

void write_bytes(const std::string& path, const std::vector<std::byte>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::size_t v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw FormatError("bad list element '" + item + "' in '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw FormatError("empty list");
  return out;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return {std::stoull(s), 1};
    const Rational r{std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
    if (r.den == 0) throw FormatError("zero denominator");
    return r;
  } catch (const std::logic_error&) {
    throw FormatError("bad rational '" + s + "'");
  }
}

// Matrix families shared by gen and bench.
Matrix family_matrix(const std::string& family, std::size_t n, std::size_t sigma, std::uint64_t seed,
                     const std::vector<std::size_t>& perm) {
  if (family == "separation") return gen_separation(n);
  if (family == "permuted") {
    if (!perm.empty()) return gen_permuted(n, perm);
    std::vector<std::size_t> rev;
    for (std::size_t b = exact_sqrt(n) / 2; b >= 1; --b) rev.push_back(b);
    return gen_permuted(n, rev);
  }
  if (family == "random") return to_printable(gen_random(n, sigma, seed));
  if (family == "nonmono") return reduce_string_to_matrix(gen_nonmono(n).wb);
  throw std::invalid_argument("unknown family '" + family + "'");
}

// Subcommands.

int cmd_delta(const Globals& g, Report& report, const std::string& path, const std::string& method,
              const std::string& profile_out) {
  Clock clock;
  const Matrix m = load_matrix(path, matrix_format(g));
  report.input(path, m);
  const DeltaOptions opts{resolve_seed(g), g.paranoid, g.threads};
  const DeltaProfile p = method == "naive" ? delta_profile_naive(m, opts) : delta_profile_fast(m, opts);
  Json& r = report.result();
  r = profile_json(p);
  r["method"] = method;
  if (!profile_out.empty()) write_text(profile_out, profile_json(p).dump(2) + "\n");

  std::fprintf(stderr, "%6s %12s %12s\n", "k", "d_k", "d_k/k^2");
  for (std::size_t k = 1; k <= p.n; ++k) {
    std::fprintf(stderr, "%6zu %12llu %12.4f%s\n", k, static_cast<unsigned long long>(p.count(k)),
                 static_cast<double>(p.count(k)) / static_cast<double>(k * k), k == p.argmax_k ? "  <- max" : "");
  }
  std::fprintf(stderr, "delta2d = %s = %.6f\n", p.delta2d.str().c_str(), p.delta2d.to_double());
  report.emit(clock);
  return 0;
}

int cmd_gamma(const Globals& g, Report& report, const std::string& path, bool greedy, std::uint64_t budget,
              std::size_t max_side, std::size_t k_cap, const std::string& out_path) {
  Clock clock;
  const Matrix m = load_matrix(path, matrix_format(g));
  report.input(path, m);
  Attractor a;
  if (greedy) {
    a = gamma_greedy(m, {k_cap, resolve_seed(g), g.threads});
  } else {
    ExactOptions opts;
    opts.node_budget = budget;
    opts.max_side = max_side;
    opts.seed = resolve_seed(g);
    a = gamma_exact(m, opts);
  }
  Json& r = report.result();
  r["method"] = greedy ? "greedy" : "exact";
  r["size"] = a.size();
  r["positions"] = positions_json(a);
  if (!out_path.empty()) write_text(out_path, to_text(a));
  std::fprintf(stderr, "%s attractor of size %zu\n", greedy ? "greedy" : "minimum", a.size());
  report.emit(clock);
  return 0;
}

int cmd_verify(const Globals& g, Report& report, const std::string& path, const std::string& attractor_path) {
  Clock clock;
  const Matrix m = load_matrix(path, matrix_format(g));
  report.input(path, m);
  const Attractor a = load_attractor(attractor_path);
  const Verdict v = verify_attractor(m, a, {resolve_seed(g), g.threads});
  Json& r = report.result();
  r["attractor"] = attractor_path;
  r["size"] = a.size();
  r["valid"] = v.valid;
  if (v.witness) {
    r["witness"] = {{"k", v.witness->k}, {"row", v.witness->anchor.row}, {"col", v.witness->anchor.col}};
    std::fprintf(stderr, "invalid: the %zux%zu submatrix at (%zu,%zu) has no occurrence containing a position\n",
                 v.witness->k, v.witness->k, v.witness->anchor.row, v.witness->anchor.col);
  } else {
    std::fprintf(stderr, "valid attractor of size %zu\n", a.size());
  }
  report.emit(clock);
  return v.valid ? 0 : kExitInvalid;
}

int cmd_reduce(const Globals&, Report& report, const std::string& s, const std::string& out_path, bool lift,
               const std::string& attractor_out) {
  Clock clock;
  const Matrix m = reduce_string_to_matrix(s);
  Json& r = report.result();
  r["string"] = s;
  r["n"] = m.rows();
  if (!out_path.empty()) {
    save_matrix(m, out_path);
    r["matrix"] = out_path;
  }
  if (lift) {
    const StringAttractor sg = gamma_exact_string(s);
    const Attractor lifted = lift_attractor(sg);
    r["string_attractor"] = sg.positions;
    r["lifted"] = positions_json(lifted);
    r["lifted_valid"] = verify_attractor(m, lifted).valid;
    if (!attractor_out.empty()) write_text(attractor_out, to_text(lifted));
    std::fprintf(stderr, "gamma(S) = %zu, lifted to %zu matrix positions\n", sg.size(), lifted.size());
  }
  if (out_path.empty() && !lift) {
    std::cerr << to_text(m);
  }
  report.emit(clock);
  return 0;
}

int cmd_build(const Globals& g, Report& report, const std::string& path, std::size_t k, std::size_t leaf,
              bool shallow, const std::string& delta, const std::string& attractor_path, const std::string& out_path) {
  Clock clock;
  const Matrix m = load_matrix(path, matrix_format(g));
  report.input(path, m);
  BuildOptions opts;
  opts.k = k;
  opts.leaf_side = leaf;
  opts.shallow = shallow;
  opts.seed = resolve_seed(g);
  if (!delta.empty()) opts.delta = parse_rational(delta);
  const BlockTree t = attractor_path.empty() ? build_bt(m, opts) : build_gamma_bt(m, load_attractor(attractor_path), opts);
  write_bytes(out_path, serialize(t));
  const BTStats st = bt_stats(t);
  report.result() = stats_json(st);
  report.result()["output"] = out_path;
  print_stats_table(st);
  report.emit(clock);
  return 0;
}

int cmd_access(const Globals&, Report& report, const std::string& tree_path, std::size_t i, std::size_t j) {
  Clock clock;
  const BlockTree t = deserialize(read_bytes(tree_path));
  if (i < 1 || j < 1 || i > t.n() || j > t.n()) {
    throw std::out_of_range("position (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                            std::to_string(t.n()));
  }
  AccessTrace trace;
  const Symbol s = t.access(i - 1, j - 1, &trace);
  Json& r = report.result();
  r["tree"] = tree_path;
  r["row"] = i;
  r["col"] = j;
  r["symbol"] = s;
  r["text"] = describe_symbol(s);
  r["visits_per_level"] = trace.visits;
  std::fprintf(stderr, "M[%zu][%zu] = %s\n", i, j, describe_symbol(s).c_str());
  report.emit(clock);
  return 0;
}

int cmd_stats(const Globals&, Report& report, const std::string& tree_path, bool json) {
  Clock clock;
  const BTStats st = bt_stats(deserialize(read_bytes(tree_path)));
  print_stats_table(st);
  if (json) {
    report.result() = stats_json(st);
    report.emit(clock);
  }
  return 0;
}

int cmd_gen(const Globals& g, Report& report, const std::string& family, std::size_t n, std::size_t sigma,
            std::uint64_t seed, const std::string& perm, const std::string& str, const std::string& out_path) {
  Clock clock;
  Json& r = report.result();
  r["family"] = family;
  Matrix m;
  if (family == "nonmono") {
    const auto w = gen_nonmono(n);
    r["n"] = n;
    r["w"] = w.w;
    r["wb"] = w.wb;
    m = reduce_string_to_matrix(w.wb);
  } else if (family == "rs") {
    if (str.empty()) throw std::invalid_argument("gen rs needs --string");
    m = reduce_string_to_matrix(str);
    r["string"] = str;
  } else {
    m = family_matrix(family, n, sigma, seed, perm.empty() ? std::vector<std::size_t>{} : parse_list(perm));
    r["n"] = n;
    if (family == "random") {
      r["sigma"] = sigma;
      r["seed"] = seed;
    }
    if (!perm.empty()) r["perm"] = parse_list(perm);
  }
  if (out_path.empty()) {
    if (family == "nonmono") {
      report.emit(clock);
    } else {
      std::cout << to_text(m);
    }
    return 0;
  }
  save_matrix(m, out_path, matrix_format(g));
  r["output"] = out_path;
  r["rows"] = m.rows();
  r["sigma_out"] = m.sigma();
  std::fprintf(stderr, "wrote %zux%zu matrix to %s\n", m.rows(), m.cols(), out_path.c_str());
  report.emit(clock);
  return 0;
}

int cmd_bench(const Globals& g, const std::string& family, const std::string& sizes, std::size_t sigma,
              std::uint64_t seed, std::size_t k) {
  const HashSeed hs = resolve_seed(g);
  std::cout << "family,n,delta_num,delta_den,delta2d,greedy_gamma,max_marked_per_level,total_nodes,height";
  if (!g.no_timing) std::cout << ",delta_seconds,greedy_seconds,build_seconds";
  std::cout << "\n";
  for (std::size_t n : parse_list(sizes)) {
    const Matrix m = family_matrix(family, n, sigma, seed, {});
    Clock c1;
    const DeltaProfile p = delta_profile_fast(m, {hs, g.paranoid, g.threads});
    const double t_delta = c1.seconds();
    Clock c2;
    const Attractor a = gamma_greedy(m, {0, hs, g.threads});
    const double t_greedy = c2.seconds();
    Clock c3;
    BuildOptions opts;
    opts.k = k;
    opts.seed = hs;
    const BTStats st = bt_stats(build_bt(m, opts));
    const double t_build = c3.seconds();
    char delta_buf[32];
    std::snprintf(delta_buf, sizeof delta_buf, "%.6f", p.delta2d.to_double());
    std::cout << family << "," << n << "," << p.delta2d.num << "," << p.delta2d.den << "," << delta_buf << ","
              << a.size() << "," << st.max_marked_per_level << "," << st.nodes << "," << st.levels.size();
    if (!g.no_timing) {
      char buf[96];
      std::snprintf(buf, sizeof buf, ",%.4f,%.4f,%.4f", t_delta, t_greedy, t_build);
      std::cout << buf;
    }
    std::cout << "\n" << std::flush;
    std::fprintf(stderr, "n=%zu delta2d=%s greedy=%zu marked_max=%zu nodes=%zu\n", n, p.delta2d.str().c_str(),
                 a.size(), st.max_marked_per_level, st.nodes);
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Two-dimensional repetitiveness measures and block trees"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", MATRIXREPET_VERSION);

  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for parallel kernels")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", g.no_timing, "Omit timing fields from reports");
  app.add_flag("--paranoid", g.paranoid, "Confirm fingerprint matches cell by cell");
  app.add_option("--seed", g.seed, "Hash seed (overrides MATRIXREPET_SEED)");
  app.add_option("--format", g.format, "Matrix file format")->check(CLI::IsMember({"text", "raw"}));

  std::string path, method = "fast", profile_out;
  auto* delta = app.add_subcommand("delta", "Distinct square counts and delta2d");
  delta->add_option("matrix", path, "Matrix file")->required();
  delta->add_option("--method", method, "naive or fast")->check(CLI::IsMember({"naive", "fast"}));
  delta->add_option("--profile-out", profile_out, "Write the profile JSON to this file");

  bool exact = false, greedy = false;
  std::uint64_t budget = ExactOptions{}.node_budget;
  std::size_t max_side = ExactOptions{}.max_side, k_cap = 0;
  std::string out_path;
  auto* gamma = app.add_subcommand("gamma", "Minimum (or greedy) attractor");
  gamma->add_option("matrix", path, "Matrix file")->required();
  auto* exact_flag = gamma->add_flag("--exact", exact, "Branch and bound (default)");
  gamma->add_flag("--greedy", greedy, "Greedy set cover")->excludes(exact_flag);
  gamma->add_option("--budget", budget, "Node budget of the exact search");
  gamma->add_option("--max-side", max_side, "Largest side accepted by the exact search");
  gamma->add_option("--k-cap", k_cap, "Largest side in the greedy cover phase (0: min(n,8))");
  gamma->add_option("-o,--output", out_path, "Write the attractor as 'i j' lines");

  std::string attractor_path;
  auto* verify = app.add_subcommand("verify", "Check an attractor");
  verify->add_option("matrix", path, "Matrix file")->required();
  verify->add_option("--attractor", attractor_path, "Attractor file, one 'i j' per line")->required();

  std::string text, attractor_out;
  bool lift = false;
  auto* reduce = app.add_subcommand("reduce", "Matrix whose rows all equal a string");
  reduce->add_option("string", text, "Input string")->required();
  reduce->add_option("-o,--output", out_path, "Matrix output file");
  reduce->add_flag("--lift", lift, "Lift a minimum string attractor to the matrix");
  reduce->add_option("--attractor-out", attractor_out, "Write the lifted attractor");

  std::size_t k = 2, leaf = 0;
  bool shallow = false;
  std::string delta_value;
  auto* build = app.add_subcommand("build", "Build a block tree");
  build->add_option("matrix", path, "Matrix file")->required();
  build->add_option("--k", k, "Arity")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 16));
  build->add_option("--leaf", leaf, "Explicit leaf side (0: k)");
  build->add_flag("--shallow", shallow, "Start from a grid of about delta2d (or |G|) blocks");
  build->add_option("--delta", delta_value, "delta2d for --shallow, as num/den");
  build->add_option("--attractor", attractor_path, "Build the attractor-marked variant");
  build->add_option("-o,--output", out_path, "Tree file")->required();

  std::string tree_path;
  std::size_t row = 0, col = 0;
  auto* access = app.add_subcommand("access", "Read one cell (1-based) from a tree");
  access->add_option("tree", tree_path, "Tree file")->required();
  access->add_option("i", row, "Row")->required();
  access->add_option("j", col, "Column")->required();

  bool json = false;
  auto* stats = app.add_subcommand("stats", "Per-level tree statistics");
  stats->add_option("tree", tree_path, "Tree file")->required();
  stats->add_flag("--json", json, "Also print the JSON report");

  std::string family, perm, str;
  std::size_t n = 0, sigma = 2;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a matrix family");
  gen->add_option("family", family, "separation, permuted, random, nonmono or rs")
      ->required()
      ->check(CLI::IsMember({"separation", "permuted", "random", "nonmono", "rs"}));
  gen->add_option("--n", n, "Size parameter");
  gen->add_option("--sigma", sigma, "Alphabet size (random)");
  gen->add_option("--seed", gen_seed, "Generator seed (random)");
  gen->add_option("--perm", perm, "Comma-separated 1-based block order (permuted)");
  gen->add_option("--string", str, "Row string (rs)");
  gen->add_option("-o,--output", out_path, "Matrix output file");

  std::string sizes = "64,256,1024";
  auto* bench = app.add_subcommand("bench", "Sweep a family and print CSV");
  bench->add_option("--family", family, "separation, permuted, random or nonmono")
      ->check(CLI::IsMember({"separation", "permuted", "random", "nonmono"}));
  bench->add_option("--sizes", sizes, "Comma-separated sizes");
  bench->add_option("--sigma", sigma, "Alphabet size (random)");
  bench->add_option("--gen-seed", gen_seed, "Generator seed (random)");
  bench->add_option("--k", k, "Tree arity")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 16));
  family = "separation";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  Report report(g, args);
  if (*delta) return cmd_delta(g, report, path, method, profile_out);
  if (*gamma) return cmd_gamma(g, report, path, greedy, budget, max_side, k_cap, out_path);
  if (*verify) return cmd_verify(g, report, path, attractor_path);
  if (*reduce) return cmd_reduce(g, report, text, out_path, lift, attractor_out);
  if (*build) return cmd_build(g, report, path, k, leaf, shallow, delta_value, attractor_path, out_path);
  if (*access) return cmd_access(g, report, tree_path, row, col);
  if (*stats) return cmd_stats(g, report, tree_path, json);
  if (*gen) return cmd_gen(g, report, family, n, sigma, gen_seed, perm, str, out_path);
  if (*bench) return cmd_bench(g, family, sizes, sigma, gen_seed, k);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const SerializationError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const UnsupportedAlphabet& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const InvalidAttractor& e) {
    std::cerr << "invalid attractor: " << e.what() << "\n";
    return kExitInvalidAttractor;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
