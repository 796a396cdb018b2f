#include "weakmix/relations.hpp"

#include <atomic>
#include <stdexcept>

#include "weakmix/echelon.hpp"
#include "weakmix/error.hpp"

namespace weakmix {

namespace {
std::atomic<bool> g_search_enabled{true};

std::vector<FinSuppVec> drop_zeros(const std::vector<FinSuppVec>& xs) {
  std::vector<FinSuppVec> out;
  for (const auto& x : xs)
    if (!x.is_zero()) out.push_back(x);
  return out;
}

void set_reason(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
}
}  // namespace

bool SearchGate::enabled() noexcept { return g_search_enabled.load(); }
void SearchGate::set_enabled(bool on) noexcept { g_search_enabled.store(on); }
void SearchGate::require(const char* routine) {
  if (!enabled()) throw SearchDisabled(std::string(routine) + " called while searches are disabled");
}

std::vector<FinSuppVec> krylov_block(const OperatorSpec& T, const std::vector<FinSuppVec>& xs,
                                     std::size_t degree) {
  std::vector<FinSuppVec> out;
  out.reserve(xs.size() * (degree + 1));
  std::vector<FinSuppVec> current = xs;
  for (std::size_t k = 0; k <= degree; ++k) {
    if (k > 0)
      for (auto& v : current) v = dual_apply(T, v);
    out.insert(out.end(), current.begin(), current.end());
  }
  return out;
}

std::variant<Syzygy, IndependenceReport> search_relation(const OperatorSpec& T,
                                                         const std::vector<FinSuppVec>& xs,
                                                         std::size_t degree_cap) {
  SearchGate::require("find_relation");
  const std::vector<FinSuppVec> gens = drop_zeros(xs);
  const Field field = T.field();
  const std::size_t n = gens.size();
  IndependenceReport report{gens, degree_cap, 0, 0, {}};
  if (n == 0) return report;

  Echelon e(field);
  std::vector<FinSuppVec> current = gens;
  Index lo = ~Index{0}, hi = 0;
  for (std::size_t k = 0; k <= degree_cap; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (k > 0) current[j] = dual_apply(T, current[j]);
      if (!current[j].is_zero()) {
        lo = std::min(lo, current[j].first_index());
        hi = std::max(hi, current[j].last_index());
      }
      if (auto rel = e.insert(current[j])) {
        // Id (k*n + j + 1) <-> (T')^k x_j.
        std::vector<std::vector<Scalar>> coeffs(n, std::vector<Scalar>(k + 1, Scalar::zero(field)));
        for (const auto& [id, c] : *rel) coeffs[(id - 1) % n][(id - 1) / n] = c;
        Syzygy s{gens, {}, degree_cap};
        for (auto& c : coeffs) s.polys.emplace_back(field, std::move(c));
        if (!check_syzygy(T, s)) throw std::logic_error("find_relation produced an invalid relation");
        return s;
      }
      report.pivots.push_back(e.last_pivot());
    }
  }
  report.window_lo = lo;
  report.window_hi = hi;
  return report;
}

std::optional<Syzygy> find_relation(const OperatorSpec& T, const std::vector<FinSuppVec>& xs,
                                    std::size_t degree_cap) {
  auto r = search_relation(T, xs, degree_cap);
  if (auto* s = std::get_if<Syzygy>(&r)) return std::move(*s);
  return std::nullopt;
}

bool check_syzygy(const OperatorSpec& T, const Syzygy& s, std::string* why) {
  if (s.generators.size() != s.polys.size()) {
    set_reason(why, "generator and polynomial counts differ");
    return false;
  }
  bool nontrivial = false;
  FinSuppVec total(T.field());
  for (std::size_t j = 0; j < s.polys.size(); ++j) {
    if (s.polys[j].field() != T.field() || s.generators[j].field() != T.field()) {
      set_reason(why, "field mismatch");
      return false;
    }
    if (s.polys[j].is_zero()) continue;
    if (s.generators[j].is_zero()) continue;
    nontrivial = true;
    if (s.polys[j].degree() > GradedDegree(long(s.degree_cap))) {
      set_reason(why, "polynomial " + std::to_string(j) + " exceeds the degree cap");
      return false;
    }
    total += poly_dual_apply(T, s.polys[j], s.generators[j]);
  }
  if (!nontrivial) {
    set_reason(why, "relation is trivial");
    return false;
  }
  if (!total.is_zero()) {
    set_reason(why, "sum p_j(T')x_j = " + total.to_string() + " is not zero");
    return false;
  }
  return true;
}

bool check_independence(const OperatorSpec& T, const IndependenceReport& r, std::string* why) {
  for (const auto& g : r.generators) {
    if (g.is_zero()) {
      set_reason(why, "zero generator");
      return false;
    }
  }
  const auto block = krylov_block(T, r.generators, r.degree_cap);
  if (block.size() != r.pivots.size()) {
    set_reason(why, "transcript length " + std::to_string(r.pivots.size()) + " != " +
                        std::to_string(block.size()));
    return false;
  }
  Echelon e(T.field());
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (e.insert(block[i])) {
      set_reason(why, "Krylov vector " + std::to_string(i) + " is dependent");
      return false;
    }
    if (e.last_pivot() != r.pivots[i]) {
      set_reason(why, "pivot mismatch at step " + std::to_string(i));
      return false;
    }
  }
  return true;
}

}  // namespace weakmix
