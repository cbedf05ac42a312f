#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "basym/asymptote.hpp"
#include "basym/session.hpp"

namespace basym {

/// Explicit request, else BASYM_THREADS, else the hardware count (at least 1).
std::size_t resolve_threads(std::optional<std::size_t> requested);

/// Calls job(k) for k < n on `threads` workers; rethrows the first failure.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& job);

/// t in [t_min, t_max]^blocks, lexicographic.
std::vector<std::vector<std::int64_t>> window_points(const Window& w, std::size_t blocks);

/// Direct Betti tables of M I^t, reported in the order of `points`.
std::vector<BettiTable> oracle_sweep(const Session& s, const std::vector<std::vector<std::int64_t>>& points,
                                     std::size_t max_i, std::size_t threads);

std::set<Degree> capped(const std::set<Degree>& degrees, const PositivityFunctional& phi, const Rational& wcap);

struct VerifyEntry {
  std::size_t ell = 0;
  std::vector<std::int64_t> t;
  std::set<Degree> predicted;
  std::set<Degree> oracle;
  /// t is componentwise at or above the shape threshold.
  bool checked = false;
  /// predicted == oracle (only meaningful when checked).
  bool match = true;
  /// The full decomposition (empty blocks kept) agrees with the oracle at t.
  bool raw_match = true;
};

struct VerificationReport {
  std::vector<AsymptoticShape> shapes;
  std::vector<VerifyEntry> entries;
  Window window;
  double pipeline_seconds = 0;
  double oracle_seconds = 0;

  bool all_match() const;
};

/// Shapes for ell in [ell_min, ell_max] against direct computations on the
/// session window. When no window point reaches a threshold the threshold
/// point itself is added.
VerificationReport verify(const Session& s, std::size_t ell_min, std::size_t ell_max, std::size_t threads);

// ---------------------------------------------------------------- rendering

std::string betti_text(const std::vector<std::vector<std::int64_t>>& points, const std::vector<BettiTable>& tables,
                       const PositivityFunctional& phi);
std::string betti_json(const std::vector<std::vector<std::int64_t>>& points, const std::vector<BettiTable>& tables,
                       const PositivityFunctional& phi);

std::string support_text(const SupportDecomposition& d);
std::string support_json(const SupportDecomposition& d);

std::string shape_text(const AsymptoticShape& a);
std::string shape_json(const std::vector<AsymptoticShape>& shapes);

std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r, bool timings = false);
/// One row per (ell, t, degree): ell, t, degree, predicted, oracle.
std::string report_tsv(const VerificationReport& r);

std::string bounds_text(const EquigeneratedReport& r);
std::string bounds_json(const EquigeneratedReport& r);

}  // namespace basym
