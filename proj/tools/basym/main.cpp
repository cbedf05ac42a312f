// basym: Betti tables of products of ideal powers and their eventual shape.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "basym/error.hpp"
#include "basym/report.hpp"

namespace {

using namespace basym;

struct Options {
  std::string input;
  std::string ell;
  std::string t;
  std::string wcap;
  std::string json;
  std::string tsv;
  std::string name;
  std::size_t threads = 0;
  std::uint64_t seed = 1;
  bool timings = false;
  // random
  std::size_t vars = 3;
  std::size_t gens = 3;
  int max_degree = 4;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

// "3" or "1..4"
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s, const char* what) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(s);
      return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, std::string("bad ") + what + " range '" + s + "'");
  }
}

Session load(const Options& o) {
  const std::string text = read_file(o.input);
  Session s = parse_session(text);
  if (!o.t.empty()) {
    auto [a, b] = parse_range(o.t, "t");
    if (a < 0 || b < a) fail(ErrorKind::InvalidArgument, "t range needs 0 <= a <= b");
    s.window.t_min = a;
    s.window.t_max = b;
  }
  if (!o.wcap.empty()) {
    const auto slash = o.wcap.find('/');
    Rational w = slash == std::string::npos ? Rational(std::stoll(o.wcap))
                                            : Rational(std::stoll(o.wcap.substr(0, slash)), std::stoll(o.wcap.substr(slash + 1)));
    if (w.sign() <= 0) fail(ErrorKind::InvalidArgument, "wcap must be positive");
    s.window.wcap = w;
  }
  return s;
}

std::pair<std::size_t, std::size_t> ell_range(const Options& o, const Session& s) {
  if (o.ell.empty()) return {0, std::min<std::size_t>(3, s.ring->nvars())};
  auto [a, b] = parse_range(o.ell, "ell");
  if (a < 0 || b < a) fail(ErrorKind::InvalidArgument, "ell range needs 0 <= a <= b");
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

std::size_t threads(const Options& o) { return resolve_threads(o.threads ? std::optional<std::size_t>(o.threads) : std::nullopt); }

int cmd_betti(const Options& o) {
  const Session s = load(o);
  const auto [lo, hi] = ell_range(o, s);
  (void)lo;
  const auto points = window_points(s.window, s.powers.size());
  const auto tables = oracle_sweep(s, points, hi, threads(o));
  std::cout << betti_text(points, tables, s.ring->phi());
  write_file(o.json, betti_json(points, tables, s.ring->phi()));
  return 0;
}

int cmd_rees(const Options& o) {
  const Session s = load(o);
  const ReesSetup st = s.rees_setup();
  if (s.module_name.empty()) {
    for (const auto& f : rees_ideal(st))
      std::cout << f.to_string() << "    deg " << f.homogeneous_degree().to_string() << "\n";
  } else {
    const Presentation p = rees_module_presentation(s.base_module(), st);
    for (const auto& r : p.relations)
      std::cout << r.to_string() << "    deg " << r.homogeneous_degree().to_string() << "\n";
  }
  return 0;
}

int cmd_stanley(const Options& o) {
  const Session s = load(o);
  Presentation p;
  std::string name = o.name;
  if (name.empty()) {
    if (s.ideals.empty()) fail(ErrorKind::InvalidArgument, "no ideal declared; pass --name");
    name = s.ideals.front().name;
  }
  bool is_module = false;
  for (const auto& m : s.modules) is_module = is_module || m.name == name;
  p = is_module ? s.presentation(s.module(name)) : cyclic_presentation(s.ring, s.ideal(name).generators);
  const SupportDecomposition d = module_support_decomposition(p);
  std::cout << support_text(d);
  write_file(o.json, support_json(d));
  return 0;
}

int cmd_gb(const Options& o) {
  const Session s = load(o);
  const std::string name = o.name.empty() ? (s.ideals.empty() ? "" : s.ideals.front().name) : o.name;
  if (name.empty()) fail(ErrorKind::InvalidArgument, "no ideal declared; pass --name");
  for (const auto& g : groebner_ideal(s.ideal(name).generators)) std::cout << g.to_string() << "\n";
  return 0;
}

int cmd_shape(const Options& o) {
  const Session s = load(o);
  const auto [lo, hi] = ell_range(o, s);
  TorPipeline pipeline(s.base_module(), s.rees_setup(), hi);
  std::vector<AsymptoticShape> shapes;
  for (std::size_t ell = lo; ell <= hi; ++ell) {
    shapes.push_back(pipeline.shape(ell));
    std::cout << shape_text(shapes.back());
  }
  write_file(o.json, shape_json(shapes));
  return 0;
}

int cmd_verify(const Options& o) {
  const Session s = load(o);
  const auto [lo, hi] = ell_range(o, s);
  const VerificationReport r = verify(s, lo, hi, threads(o));
  std::cout << report_text(r);
  if (o.timings)
    std::cerr << "pipeline " << r.pipeline_seconds << " s, oracle " << r.oracle_seconds << " s\n";
  write_file(o.json, report_json(r, o.timings));
  write_file(o.tsv, report_tsv(r));
  return r.all_match() ? 0 : 1;
}

int cmd_bounds(const Options& o) {
  const Session s = load(o);
  const auto [lo, hi] = ell_range(o, s);
  (void)lo;
  TorPipeline pipeline(s.base_module(), s.rees_setup(true), hi);
  const EquigeneratedReport r = equigenerated_bounds(pipeline, hi);
  std::cout << bounds_text(r);
  write_file(o.json, bounds_json(r));
  return 0;
}

// A session with one random homogeneous ideal in the standard grading.
int cmd_random(const Options& o) {
  if (o.vars == 0 || o.vars > 6) fail(ErrorKind::InvalidArgument, "--vars must be in 1..6");
  if (o.max_degree < 1) fail(ErrorKind::InvalidArgument, "--max-degree must be positive");
  std::mt19937_64 rng(o.seed);
  Session s;
  s.group = make_group(1);
  std::vector<std::string> names;
  std::vector<Degree> degs;
  for (std::size_t v = 0; v < o.vars; ++v) {
    names.push_back(std::string(1, static_cast<char>('a' + v)));
    degs.push_back(Degree(s.group, {1}));
  }
  s.ring = make_ring(PrimeField(), names, degs, PositivityFunctional::all_ones(1));
  NamedIdeal I{"I", {}};
  std::uniform_int_distribution<int> deg(1, o.max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  while (I.generators.size() < o.gens) {
    const Degree d(s.group, {deg(rng)});
    Polynomial f(s.ring);
    for (const auto& m : monomials_of_degree(*s.ring, d))
      if (rng() % 3 == 0) f = f + Polynomial::monomial(s.ring, m, s.ring->field().from_int(coeff(rng)));
    if (!f.is_zero()) I.generators.push_back(f);
  }
  s.ideals.push_back(std::move(I));
  s.powers = {"I"};
  std::cout << print_session(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"basym: Betti tables of ideal powers and their asymptotic shape"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--input,-i", o.input, "session file")->required()->check(CLI::ExistingFile);
    c->add_option("--threads", o.threads, "worker threads (default: BASYM_THREADS or hardware)");
    c->add_option("--seed", o.seed, "seed for randomized steps");
    c->add_option("--json", o.json, "write JSON here ('-' for stdout)");
  };
  auto windowed = [&](CLI::App* c) {
    c->add_option("--t", o.t, "t range a..b (overrides the session window)");
    c->add_option("--wcap", o.wcap, "phi-weight cap for supports");
    c->add_option("--ell", o.ell, "homological index or range a..b");
  };

  auto* betti = app.add_subcommand("betti", "direct Betti tables of M*I^t over the window");
  common(betti);
  windowed(betti);
  auto* rees = app.add_subcommand("rees", "Rees ideal (or Rees module relations)");
  common(rees);
  auto* stanley = app.add_subcommand("stanley", "support decomposition of S/I or a declared module");
  common(stanley);
  stanley->add_option("--name", o.name, "ideal or module name (default: first ideal)");
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  common(gb);
  gb->add_option("--name", o.name, "ideal name (default: first ideal)");
  auto* shape = app.add_subcommand("shape", "asymptotic Tor supports");
  common(shape);
  windowed(shape);
  auto* ver = app.add_subcommand("verify", "compare the asymptotic shape with direct computations");
  common(ver);
  windowed(ver);
  ver->add_option("--tsv", o.tsv, "write per-degree TSV here");
  ver->add_flag("--timings", o.timings, "report wall-clock timings");
  auto* bounds = app.add_subcommand("bounds", "Delta sets and strand polynomials for equigenerated ideals");
  common(bounds);
  windowed(bounds);
  auto* random = app.add_subcommand("random", "print a random homogeneous session");
  random->add_option("--seed", o.seed, "seed");
  random->add_option("--vars", o.vars, "number of variables");
  random->add_option("--gens", o.gens, "number of generators");
  random->add_option("--max-degree", o.max_degree, "largest generator degree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*betti) return cmd_betti(o);
    if (*rees) return cmd_rees(o);
    if (*stanley) return cmd_stanley(o);
    if (*gb) return cmd_gb(o);
    if (*shape) return cmd_shape(o);
    if (*ver) return cmd_verify(o);
    if (*bounds) return cmd_bounds(o);
    if (*random) return cmd_random(o);
  } catch (const basym::Error& e) {
    std::cerr << "basym: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "basym: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
