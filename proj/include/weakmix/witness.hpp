#pragma once

#include <variant>
#include <vector>

#include "weakmix/bounds.hpp"
#include "weakmix/echelon.hpp"

namespace weakmix {

struct Constraint {
  FinSuppVec functional;
  Scalar value;
};

/// The affine slice {u : f_k(u) = a_k for all k}.
struct AffineCylinder {
  std::vector<Constraint> constraints;

  bool contains(const FinSuppVec& u) const;
  std::vector<FinSuppVec> functionals() const;
  std::vector<Scalar> values() const;
};

/// u lies in `source` and p(T)u lies in `target`.
struct Witness {
  FinSuppVec u;
  Poly poly;
  AffineCylinder source;
  AffineCylinder target;
};

/// The system f_k(u) = a_k, (p(T')g_j)(u) = b_j is inconsistent. The
/// functionals are listed source first, then target.
struct Infeasible {
  Poly poly;
  AffineCylinder source;
  AffineCylinder target;
  Inconsistency proof;
};

using WitnessResult = std::variant<Witness, Infeasible>;

/// Solves for a finitely supported u with minimal support (free
/// coordinates zero).
WitnessResult witness(const OperatorSpec& T, const AffineCylinder& source, const AffineCylinder& target,
                      const Poly& p);

struct Threshold {
  long k = 0;
  BoundReport report;
};

/// k = m(L) for L spanned by all source and target functionals: witness
/// is feasible for every p with deg p >= k when the functionals of each
/// cylinder are linearly independent.
std::variant<Threshold, TorsionCertificate, Unknown> mixing_threshold(const OperatorSpec& T,
                                                                      const AffineCylinder& source,
                                                                      const AffineCylinder& target,
                                                                      std::size_t degree_cap);

struct Visit {
  std::size_t power = 0;
  AffineCylinder target;
};

struct VisitSchedule {
  FinSuppVec u;
  AffineCylinder source;
  std::vector<Visit> visits;
};

/// Greedily picks powers n_1 < n_2 < ... so that the stacked functionals
/// stay linearly independent, then solves one system for u. The step
/// budget per target is m(full constraint span) + 8.
std::variant<VisitSchedule, Unknown> schedule_orbit(const OperatorSpec& T, const AffineCylinder& source,
                                                    const std::vector<AffineCylinder>& targets,
                                                    std::size_t degree_cap);

/// g_j(T^n u) = b_j for every constraint, evaluated as ((T')^n g_j)(u).
bool verify_visit(const OperatorSpec& T, const FinSuppVec& u, std::size_t n, const AffineCylinder& target);

bool check_witness(const OperatorSpec& T, const Witness& w, std::string* why = nullptr);
bool check_infeasible(const OperatorSpec& T, const Infeasible& w, std::string* why = nullptr);
bool check_schedule(const OperatorSpec& T, const VisitSchedule& s, std::string* why = nullptr);

}  // namespace weakmix
