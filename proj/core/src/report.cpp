#include "basym/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "basym/error.hpp"

namespace basym {

using nlohmann::json;

namespace {

json to_json(const Degree& d) { return d.coords(); }

std::string t_string(const std::vector<std::int64_t>& t) {
  if (t.size() == 1) return std::to_string(t[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string degree_list(const std::set<Degree>& ds) {
  std::string s;
  for (const auto& d : ds) s += (s.empty() ? "" : " ") + d.to_string();
  return s.empty() ? "-" : s;
}

bool at_least(const std::vector<std::int64_t>& t, const std::vector<std::int64_t>& bound) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < bound[i]) return false;
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::size_t resolve_threads(std::optional<std::size_t> requested) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("BASYM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& job) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t k = 0; k < n; ++k) job(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first;
  std::mutex m;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < n;) {
        try {
          job(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!first) first = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

std::vector<std::vector<std::int64_t>> window_points(const Window& w, std::size_t blocks) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> t(blocks, w.t_min);
  for (;;) {
    out.push_back(t);
    std::size_t i = blocks;
    while (i > 0 && t[i - 1] == w.t_max) t[--i] = w.t_min;
    if (i == 0) return out;
    ++t[i - 1];
  }
}

std::vector<BettiTable> oracle_sweep(const Session& s, const std::vector<std::vector<std::int64_t>>& points,
                                     std::size_t max_i, std::size_t threads) {
  const ReesSetup st = s.rees_setup();
  const Presentation M = s.base_module();
  std::vector<BettiTable> out(points.size());
  parallel_for(points.size(), threads, [&](std::size_t k) { out[k] = power_tor(M, st, points[k], max_i); });
  return out;
}

std::set<Degree> capped(const std::set<Degree>& degrees, const PositivityFunctional& phi, const Rational& wcap) {
  std::set<Degree> out;
  for (const auto& d : degrees)
    if (phi(d) <= wcap) out.insert(d);
  return out;
}

bool VerificationReport::all_match() const {
  for (const auto& e : entries)
    if (!e.raw_match || (e.checked && !e.match)) return false;
  return true;
}

VerificationReport verify(const Session& s, std::size_t ell_min, std::size_t ell_max, std::size_t threads) {
  if (ell_min > ell_max) fail(ErrorKind::InvalidArgument, "empty homological range");
  VerificationReport r;
  r.window = s.window;
  const ReesSetup st = s.rees_setup();
  const std::size_t blocks = st.blocks();
  auto start = std::chrono::steady_clock::now();
  TorPipeline pipeline(s.base_module(), st, ell_max);
  std::vector<AsymptoticShape> raw;
  for (std::size_t ell = ell_min; ell <= ell_max; ++ell) {
    r.shapes.push_back(pipeline.shape(ell));
    raw.push_back(pipeline.raw_shape(ell));
  }
  r.pipeline_seconds = seconds_since(start);

  std::vector<std::vector<std::int64_t>> points = window_points(s.window, blocks);
  for (const auto& sh : r.shapes) {
    bool reached = false;
    for (const auto& t : points) reached = reached || at_least(t, sh.threshold);
    if (reached) continue;
    std::vector<std::int64_t> t = sh.threshold;
    for (auto& x : t) x = std::max(x, s.window.t_min);
    points.push_back(t);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  start = std::chrono::steady_clock::now();
  const std::vector<BettiTable> tables = oracle_sweep(s, points, ell_max, threads);
  r.oracle_seconds = seconds_since(start);

  const PositivityFunctional& phi = s.ring->phi();
  for (std::size_t k = 0; k < r.shapes.size(); ++k) {
    const auto& sh = r.shapes[k];
    for (std::size_t p = 0; p < points.size(); ++p) {
      VerifyEntry e;
      e.ell = sh.ell;
      e.t = points[p];
      e.oracle = capped(tables[p].support(sh.ell), phi, s.window.wcap);
      e.raw_match = raw[k].support(e.t, s.window.wcap) == e.oracle;
      e.checked = at_least(e.t, sh.threshold);
      if (e.checked) {
        e.predicted = sh.support(e.t, s.window.wcap);
        e.match = e.predicted == e.oracle;
      }
      r.entries.push_back(std::move(e));
    }
  }
  return r;
}

// ---------------------------------------------------------------- rendering

std::string betti_text(const std::vector<std::vector<std::int64_t>>& points, const std::vector<BettiTable>& tables,
                       const PositivityFunctional& phi) {
  std::ostringstream os;
  for (std::size_t k = 0; k < points.size(); ++k) {
    os << "t=" << t_string(points[k]) << "\n";
    std::size_t row = SIZE_MAX;
    for (const auto& e : tables[k].ordered(phi)) {
      if (e.i != row) {
        if (row != SIZE_MAX) os << "\n";
        os << "  Tor_" << e.i << ":";
        row = e.i;
      }
      os << " " << e.degree.to_string();
      if (e.multiplicity > 1) os << "^" << e.multiplicity;
    }
    if (row != SIZE_MAX) os << "\n";
  }
  return os.str();
}

std::string betti_json(const std::vector<std::vector<std::int64_t>>& points, const std::vector<BettiTable>& tables,
                       const PositivityFunctional& phi) {
  json out = json::array();
  for (std::size_t k = 0; k < points.size(); ++k) {
    json rows = json::array();
    for (const auto& e : tables[k].ordered(phi))
      rows.push_back({{"i", e.i}, {"degree", to_json(e.degree)}, {"multiplicity", e.multiplicity}});
    out.push_back({{"t", points[k]}, {"betti", rows}});
  }
  return out.dump(2) + "\n";
}

std::string support_text(const SupportDecomposition& d) {
  std::ostringstream os;
  if (d.components.empty()) os << "(empty support)\n";
  for (const auto& c : d.components) {
    os << c.shift.to_string() << " + <";
    for (std::size_t j = 0; j < c.generators.size(); ++j) os << (j ? ", " : "") << c.generators[j].to_string();
    os << ">\n";
  }
  return os.str();
}

std::string support_json(const SupportDecomposition& d) {
  json out = json::array();
  for (const auto& c : d.components) {
    json gens = json::array();
    for (const auto& g : c.generators) gens.push_back(to_json(g));
    out.push_back({{"shift", to_json(c.shift)}, {"generators", gens}});
  }
  return out.dump(2) + "\n";
}

std::string shape_text(const AsymptoticShape& a) {
  std::ostringstream os;
  os << "Tor_" << a.ell << ": exact for t >= " << t_string(a.threshold) << "\n";
  if (a.components.empty()) os << "  (zero)\n";
  for (const auto& c : a.components) {
    os << "  " << c.delta.to_string() << " at t0=" << t_string(c.t0) << " + sums over";
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
      os << (i ? " x " : " ") << "{";
      for (std::size_t j = 0; j < c.blocks[i].size(); ++j) os << (j ? ", " : "") << c.blocks[i][j].to_string();
      os << "}";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

json shape_object(const AsymptoticShape& a) {
  json comps = json::array();
  for (const auto& c : a.components) {
    json blocks = json::array();
    for (const auto& b : c.blocks) {
      json block = json::array();
      for (const auto& g : b) block.push_back(to_json(g));
      blocks.push_back(block);
    }
    comps.push_back({{"delta", to_json(c.delta)}, {"t0", c.t0}, {"blocks", blocks}});
  }
  return {{"ell", a.ell}, {"threshold", a.threshold}, {"components", comps}};
}

}  // namespace

std::string shape_json(const std::vector<AsymptoticShape>& shapes) {
  json out = json::array();
  for (const auto& a : shapes) out.push_back(shape_object(a));
  return out.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& sh : r.shapes) os << shape_text(sh);
  for (const auto& e : r.entries) {
    os << "ell=" << e.ell << " t=" << t_string(e.t) << " ";
    if (!e.checked)
      os << (e.raw_match ? "below threshold, full decomposition matches" : "below threshold, FULL DECOMPOSITION DIFFERS");
    else if (e.match && e.raw_match)
      os << "match";
    else
      os << "MISMATCH";
    os << " (" << e.oracle.size() << " degrees)\n";
    if (e.checked && !e.match) {
      std::set<Degree> only_p, only_o;
      std::set_difference(e.predicted.begin(), e.predicted.end(), e.oracle.begin(), e.oracle.end(),
                          std::inserter(only_p, only_p.end()));
      std::set_difference(e.oracle.begin(), e.oracle.end(), e.predicted.begin(), e.predicted.end(),
                          std::inserter(only_o, only_o.end()));
      os << "  predicted only: " << degree_list(only_p) << "\n  oracle only: " << degree_list(only_o) << "\n";
    }
  }
  os << (r.all_match() ? "all supports match" : "supports differ") << "\n";
  return os.str();
}

std::string report_json(const VerificationReport& r, bool timings) {
  json shapes = json::array();
  for (const auto& sh : r.shapes) {
    json s = shape_object(sh);
    json checked = json::array();
    for (const auto& e : r.entries)
      if (e.ell == sh.ell && e.checked) checked.push_back(e.t);
    s["verified_window"] = {{"t", checked}, {"wcap", r.window.wcap.to_string()}};
    shapes.push_back(s);
  }
  json entries = json::array();
  for (const auto& e : r.entries) {
    json pred = json::array(), orc = json::array();
    for (const auto& d : e.predicted) pred.push_back(to_json(d));
    for (const auto& d : e.oracle) orc.push_back(to_json(d));
    entries.push_back({{"ell", e.ell},
                       {"t", e.t},
                       {"checked", e.checked},
                       {"match", e.match},
                       {"raw_match", e.raw_match},
                       {"predicted", pred},
                       {"oracle", orc}});
  }
  json out = {{"shapes", shapes}, {"entries", entries}, {"all_match", r.all_match()}};
  if (timings) out["timings"] = {{"pipeline_seconds", r.pipeline_seconds}, {"oracle_seconds", r.oracle_seconds}};
  return out.dump(2) + "\n";
}

std::string report_tsv(const VerificationReport& r) {
  std::ostringstream os;
  os << "ell\tt\tdegree\tpredicted\toracle\n";
  for (const auto& e : r.entries) {
    std::set<Degree> all = e.oracle;
    all.insert(e.predicted.begin(), e.predicted.end());
    for (const auto& d : all)
      os << e.ell << "\t" << t_string(e.t) << "\t" << d.to_string() << "\t"
         << (e.checked ? (e.predicted.count(d) ? "1" : "0") : "NA") << "\t" << e.oracle.count(d) << "\n";
  }
  return os.str();
}

std::string bounds_text(const EquigeneratedReport& r) {
  std::ostringstream os;
  os << "gamma:";
  for (const auto& g : r.gamma) os << " " << g.to_string();
  os << "\n";
  for (std::size_t i = 0; i < r.delta.size(); ++i) {
    os << "i=" << i << "  Delta: " << degree_list(r.delta[i]) << "  Delta': " << degree_list(r.delta_prime[i]) << "\n";
    for (const auto& [eta, sr] : r.strands[i])
      os << "  eta=" << eta.to_string() << "  "
         << (sr.positivity.kind == Eventually::Nonzero ? "eventually nonzero" : "eventually zero") << " from t="
         << t_string(sr.positivity.t0) << "  dim = " << sr.polynomial.to_string() << "\n";
  }
  return os.str();
}

std::string bounds_json(const EquigeneratedReport& r) {
  json gamma = json::array();
  for (const auto& g : r.gamma) gamma.push_back(to_json(g));
  json rows = json::array();
  for (std::size_t i = 0; i < r.delta.size(); ++i) {
    json delta = json::array(), prime = json::array(), strands = json::array();
    for (const auto& d : r.delta[i]) delta.push_back(to_json(d));
    for (const auto& d : r.delta_prime[i]) prime.push_back(to_json(d));
    for (const auto& [eta, sr] : r.strands[i])
      strands.push_back({{"eta", to_json(eta)},
                         {"eventually_nonzero", sr.positivity.kind == Eventually::Nonzero},
                         {"t0", sr.positivity.t0},
                         {"polynomial", sr.polynomial.to_string()},
                         {"valid_from", sr.polynomial.valid_from}});
    rows.push_back({{"i", i}, {"delta", delta}, {"delta_prime", prime}, {"strands", strands}});
  }
  return json{{"gamma", gamma}, {"tor", rows}}.dump(2) + "\n";
}

}  // namespace basym
