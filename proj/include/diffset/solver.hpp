#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diffset/bounds.hpp"
#include "diffset/group.hpp"
#include "diffset/int_set.hpp"

namespace diffset {

struct SearchConfig {
  /// Search hull [0, window] for eta; 0 selects 2N.
  std::int64_t window = 0;
  std::int64_t node_budget = 200'000'000;
  /// Fix the smallest element (0 for eta/gamma/alpha, 1 for beta).
  bool fix_translation = true;
  /// eta only: skip sets whose first gap exceeds their last gap (the
  /// mirror image is lexicographically smaller).
  bool reflection = true;
  /// eta only: re-run at window 2W before claiming exhaustiveness.
  bool sensitivity_check = true;
};

enum class Quantity { eta, gamma, beta, alpha };

std::string to_string(Quantity q);
Quantity parse_quantity(const std::string& name);

struct ExtremalResult {
  Quantity quantity = Quantity::eta;
  std::int64_t g = 1;
  std::optional<std::int64_t> n;         // eta, beta
  std::optional<GroupSpec> group;        // gamma, alpha
  std::int64_t value = 0;
  std::variant<IntSet, GroupSubset> witness;
  /// True iff the search completed (and, for eta, the window re-run agreed).
  bool exhaustive = false;
  std::int64_t nodes = 0;
  std::int64_t window = 0;  // eta only
  /// Sizes below this were ruled out; equals value when exhaustive.
  std::int64_t proven_bound = 0;

  /// Size parameter the ratio is normalized by: N (eta, beta) or |G|.
  std::int64_t size_param() const;
};

/// Minimum size of a g-difference set for [N] inside [0, W], lexicographically
/// smallest witness. Throws std::runtime_error when no set fits the window.
ExtremalResult eta_exact(std::int64_t g, std::int64_t n, const SearchConfig& cfg = {});
/// Minimum size of a g-difference set in G (0 in A). Requires g <= |G|.
ExtremalResult gamma_exact(std::int64_t g, const GroupSpec& group, const SearchConfig& cfg = {});
/// Maximum size of a g-Sidon set for [N] (A in [1, N]).
ExtremalResult beta_exact(std::int64_t g, std::int64_t n, const SearchConfig& cfg = {});
/// Maximum size of a g-Sidon set in G.
ExtremalResult alpha_exact(std::int64_t g, const GroupSpec& group, const SearchConfig& cfg = {});

struct RatioRow {
  Quantity quantity = Quantity::eta;
  std::int64_t g = 1;
  std::int64_t param = 0;
  std::int64_t value = 0;
  double ratio = 0.0;
  /// "ok", or a comma-joined list of: "FATAL:below-tau", "trivial-bound", "non-monotone".
  std::string flag = "ok";
};

/// value / sqrt(g N) for eta and beta, value / sqrt(g |G|) for gamma and alpha.
/// Flags an exhaustive eta row below the tau lower bound as fatal, any row
/// outside its counting bound, and eta/gamma rows that break monotonicity
/// against another row of the table.
std::vector<RatioRow> ratio_report(const std::vector<ExtremalResult>& results, const BoundsLedger& ledger);

}  // namespace diffset
