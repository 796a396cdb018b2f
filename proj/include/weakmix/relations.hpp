#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weakmix/operator.hpp"

namespace weakmix {

/// Process-wide switch for search routines. Verification code never
/// searches, so it keeps working while searches are disabled.
class SearchGate {
public:
  static bool enabled() noexcept;
  static void set_enabled(bool on) noexcept;
  /// Throws SearchDisabled when searches are off.
  static void require(const char* routine);
};

class ScopedSearchDisable {
public:
  ScopedSearchDisable() : was_(SearchGate::enabled()) { SearchGate::set_enabled(false); }
  ~ScopedSearchDisable() { SearchGate::set_enabled(was_); }
  ScopedSearchDisable(const ScopedSearchDisable&) = delete;
  ScopedSearchDisable& operator=(const ScopedSearchDisable&) = delete;

private:
  bool was_;
};

/// A search ran out of caps or hit a degenerate case.
struct Unknown {
  std::string reason;
};

/// Nontrivial relation sum_j polys[j](T') generators[j] = 0.
struct Syzygy {
  std::vector<FinSuppVec> generators;
  std::vector<Poly> polys;
  std::size_t degree_cap = 0;
};

/// The Krylov vectors (T')^k x_j, k <= degree_cap, are linearly
/// independent. `pivots` is the elimination transcript: the pivot index
/// created by each vector in insertion order (k major, j minor).
struct IndependenceReport {
  std::vector<FinSuppVec> generators;
  std::size_t degree_cap = 0;
  Index window_lo = 0;
  Index window_hi = 0;
  std::vector<Index> pivots;
};

/// (T')^k x_j for k = 0..degree, ordered by k then j.
std::vector<FinSuppVec> krylov_block(const OperatorSpec& T, const std::vector<FinSuppVec>& xs,
                                     std::size_t degree);

/// Searches for a relation among xs with every polynomial of degree at most
/// degree_cap. Zero vectors are dropped first. Krylov vectors are inserted
/// in the order (k, j) and the first dependency is returned, so the result
/// has the least possible maximal degree and is deterministic. The
/// polynomial of the vector that closed the dependency is monic.
std::variant<Syzygy, IndependenceReport> search_relation(const OperatorSpec& T,
                                                         const std::vector<FinSuppVec>& xs,
                                                         std::size_t degree_cap);

std::optional<Syzygy> find_relation(const OperatorSpec& T, const std::vector<FinSuppVec>& xs,
                                    std::size_t degree_cap);

/// Re-checks the defining identity using dual_apply only.
bool check_syzygy(const OperatorSpec& T, const Syzygy& s, std::string* why = nullptr);
/// Recomputes the Krylov block and confirms the recorded transcript.
bool check_independence(const OperatorSpec& T, const IndependenceReport& r,
                        std::string* why = nullptr);

}  // namespace weakmix
