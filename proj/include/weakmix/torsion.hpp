#pragma once

#include <map>
#include <variant>
#include <vector>

#include "weakmix/structure.hpp"

namespace weakmix {

/// Greedy maximal T'-independent subset of xs (within the cap), with the
/// representation of every dropped vector over the vectors kept before it.
struct GreedyResult {
  std::vector<std::size_t> kept;  // positions in xs
  std::vector<FinSuppVec> basis;
  /// Keyed by position in xs; the basis of each representation is the
  /// prefix of `basis` that existed when the vector was examined.
  std::map<std::size_t, Representation> representations;
  std::size_t degree_cap = 0;
};

/// Scans xs in order. Throws DegenerateRelation if a relation misses the
/// scanned vector.
GreedyResult greedy_independent_subset(const OperatorSpec& T, const std::vector<FinSuppVec>& xs,
                                       std::size_t degree_cap);

/// annihilator(T')x = 0 and invariant_basis = {x, T'x, ..., T'^(k-1)x}
/// with k = deg annihilator; its span is a nonzero finite-dimensional
/// T'-invariant subspace.
struct TorsionCertificate {
  FinSuppVec x;
  Poly annihilator;
  std::vector<FinSuppVec> invariant_basis;
};

/// No nonzero element of span(generators) is annihilated by a nonzero
/// polynomial of degree <= degree_cap.
///
/// Every generator is represented over the T'-independent set `basis`;
/// clearing the common monic denominator Q gives polynomial vectors whose
/// K-span has trivial kernel. The basis is certified independent up to
/// `independence.degree_cap` >= max(degree_cap, deg Q) + (max numerator
/// degree), which makes the kernel argument complete for annihilators of
/// degree <= degree_cap.
struct NoTorsionReport {
  std::vector<FinSuppVec> generators;
  std::vector<FinSuppVec> basis;
  std::vector<Representation> representations;  // one per generator, over `basis`
  Poly common_denominator;
  std::size_t degree_cap = 0;
  IndependenceReport independence;
};

using TorsionResult = std::variant<TorsionCertificate, NoTorsionReport, Unknown>;

/// Decides whether span(xs) contains a torsion functional within the cap.
TorsionResult torsion_in_span(const OperatorSpec& T, const std::vector<FinSuppVec>& xs,
                              std::size_t degree_cap);

/// Minimal annihilator of x and the Krylov basis of the subspace it spans.
/// Precondition: some nonzero polynomial of degree <= bound kills x.
TorsionCertificate torsion_certificate_for(const OperatorSpec& T, const FinSuppVec& x,
                                           std::size_t bound);

enum class Verdict { NotTransitive, MixingCertifiedUpTo, Unknown };

const char* verdict_name(Verdict v) noexcept;

struct ClassifyVerdict {
  Verdict verdict = Verdict::Unknown;
  std::size_t support_cap = 0;
  std::size_t degree_cap = 0;
  std::optional<TorsionCertificate> torsion;   // NotTransitive
  std::optional<NoTorsionReport> no_torsion;   // MixingCertifiedUpTo, span{e_1..e_s}
  std::string reason;                          // Unknown
};

/// Sweeps s = 1..support_cap over span{e_1*, ..., e_s*}. The first torsion
/// functional gives NOT_TRANSITIVE; no torsion at every s gives
/// MIXING_CERTIFIED_UP_TO(support_cap, degree_cap).
ClassifyVerdict classify(const OperatorSpec& T, std::size_t support_cap, std::size_t degree_cap);

bool check_torsion(const OperatorSpec& T, const TorsionCertificate& c, std::string* why = nullptr);
bool check_no_torsion(const OperatorSpec& T, const NoTorsionReport& r, std::string* why = nullptr);

/// Cleared numerators Q/q_j * p_{j,a}, one row per generator.
std::vector<std::vector<Poly>> cleared_numerators(const std::vector<Representation>& reps,
                                                  const Poly& common_denominator);

/// Coefficient vectors of the cleared numerators, one per generator, for
/// kernel computations over K.
std::vector<FinSuppVec> coefficient_columns(const std::vector<std::vector<Poly>>& numerators,
                                            Field field);

}  // namespace weakmix
