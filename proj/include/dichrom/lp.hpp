#pragma once

#include "dichrom/fraction.hpp"

#include <stdexcept>
#include <vector>

namespace dichrom {

enum class Objective { Minimize, Maximize };
enum class RowSense { LessEqual, GreaterEqual, Equal };

/// optimise objective . x  subject to  rows[i] . x (sense) rhs[i],  x >= 0.
struct LinearProgram {
  Objective objective = Objective::Minimize;
  std::vector<Fraction> costs;
  std::vector<std::vector<Fraction>> rows;
  std::vector<RowSense> senses;
  std::vector<Fraction> rhs;

  int variables() const { return static_cast<int>(costs.size()); }
  int constraints() const { return static_cast<int>(rows.size()); }
  void add_row(std::vector<Fraction> row, RowSense sense, Fraction bound);
};

/// Optimal primal and dual solutions with their common objective value. The
/// dual satisfies value = rhs . dual and is read off the final basis.
struct LpCertificate {
  std::vector<Fraction> primal;
  std::vector<Fraction> dual;
  Fraction value;
};

class LpInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LpUnbounded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-phase dense tableau simplex over exact rationals with Bland's rule.
LpCertificate simplex_solve(const LinearProgram& lp);

/// Re-checks a certificate by direct arithmetic: primal and dual feasibility
/// (with the sign pattern dictated by the row senses) and equal objectives.
bool certificate_is_optimal(const LinearProgram& lp, const LpCertificate& cert);

}  // namespace dichrom
