#include "dichrom/lp.hpp"

#include <optional>
#include <string>

namespace dichrom {

void LinearProgram::add_row(std::vector<Fraction> row, RowSense sense, Fraction bound) {
  rows.push_back(std::move(row));
  senses.push_back(sense);
  rhs.push_back(std::move(bound));
}

namespace {

void validate(const LinearProgram& lp) {
  if (lp.senses.size() != lp.rows.size() || lp.rhs.size() != lp.rows.size())
    throw std::invalid_argument("linear program: row, sense and rhs counts differ");
  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.size()) != lp.variables())
      throw std::invalid_argument("linear program: row length differs from variable count");
  }
}

/// Dense tableau in equality form. Columns: structural variables, then one
/// slack per inequality row, then one artificial per >= or = row; the last
/// column is the right-hand side.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : m_(lp.constraints()), nx_(lp.variables()) {
    negated_.assign(m_, false);
    std::vector<RowSense> senses = lp.senses;
    for (int i = 0; i < m_; ++i) {
      if (lp.rhs[i].sign() < 0) {
        negated_[i] = true;
        if (senses[i] == RowSense::LessEqual) senses[i] = RowSense::GreaterEqual;
        else if (senses[i] == RowSense::GreaterEqual) senses[i] = RowSense::LessEqual;
      }
    }
    int slacks = 0, artificials = 0;
    for (RowSense s : senses) {
      if (s != RowSense::Equal) ++slacks;
      if (s != RowSense::LessEqual) ++artificials;
    }
    first_artificial_ = nx_ + slacks;
    cols_ = first_artificial_ + artificials;
    rhs_col_ = cols_;
    t_.assign(m_, std::vector<Fraction>(cols_ + 1));
    basis_.assign(m_, -1);
    unit_col_.assign(m_, -1);

    int next_slack = nx_, next_art = first_artificial_;
    for (int i = 0; i < m_; ++i) {
      const Fraction sign = negated_[i] ? Fraction(-1) : Fraction(1);
      for (int j = 0; j < nx_; ++j) {
        if (!lp.rows[i][j].is_zero()) t_[i][j] = lp.rows[i][j] * sign;
      }
      t_[i][rhs_col_] = lp.rhs[i] * sign;
      if (senses[i] == RowSense::LessEqual) {
        t_[i][next_slack] = 1;
        basis_[i] = unit_col_[i] = next_slack++;
      } else {
        if (senses[i] == RowSense::GreaterEqual) t_[i][next_slack++] = -1;
        t_[i][next_art] = 1;
        basis_[i] = unit_col_[i] = next_art++;
      }
    }
  }

  bool has_artificials() const { return first_artificial_ < cols_; }
  bool is_artificial(int j) const { return j >= first_artificial_; }

  enum class Outcome { Optimal, Unbounded };

  /// Minimises cost . columns over the current basis; columns with
  /// allowed[j] == false never enter.
  Outcome minimise(const std::vector<Fraction>& cost, const std::vector<char>& allowed) {
    std::vector<Fraction> reduced(cols_ + 1);
    for (int j = 0; j <= cols_; ++j) reduced[j] = j < cols_ ? cost[j] : Fraction(0);
    for (int i = 0; i < m_; ++i) {
      const Fraction& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (!t_[i][j].is_zero()) reduced[j] -= cb * t_[i][j];
      }
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed[j] && reduced[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Outcome::Optimal;
      int leave = -1;
      Fraction best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Fraction ratio = t_[i][rhs_col_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return Outcome::Unbounded;
      pivot(leave, enter);
      Fraction factor = reduced[enter];
      for (int j = 0; j <= cols_; ++j) {
        if (!t_[leave][j].is_zero()) reduced[j] -= factor * t_[leave][j];
      }
    }
  }

  void pivot(int row, int col) {
    Fraction p = t_[row][col];
    for (auto& entry : t_[row]) {
      if (!entry.is_zero()) entry /= p;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == row || t_[i][col].is_zero()) continue;
      Fraction factor = t_[i][col];
      for (int j = 0; j <= cols_; ++j) {
        if (!t_[row][j].is_zero()) t_[i][j] -= factor * t_[row][j];
      }
    }
    basis_[row] = col;
  }

  /// After phase one, pivots basic artificials (all at zero) onto structural
  /// or slack columns where possible. Rows where that fails are redundant.
  void expel_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (!t_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Fraction basic_value_sum(const std::vector<Fraction>& cost) const {
    Fraction total;
    for (int i = 0; i < m_; ++i) total += cost[basis_[i]] * t_[i][rhs_col_];
    return total;
  }

  std::vector<Fraction> primal() const {
    std::vector<Fraction> x(nx_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < nx_) x[basis_[i]] = t_[i][rhs_col_];
    }
    return x;
  }

  /// y = c_B B^{-1}, reading B^{-1} e_i off the column that formed the
  /// initial identity basis for row i.
  std::vector<Fraction> dual(const std::vector<Fraction>& cost) const {
    std::vector<Fraction> y(m_);
    for (int i = 0; i < m_; ++i) {
      Fraction yi;
      for (int r = 0; r < m_; ++r) {
        const Fraction& cb = cost[basis_[r]];
        if (!cb.is_zero() && !t_[r][unit_col_[i]].is_zero()) yi += cb * t_[r][unit_col_[i]];
      }
      y[i] = negated_[i] ? -yi : yi;
    }
    return y;
  }

  int columns() const { return cols_; }

 private:
  int m_;
  int nx_;
  int cols_ = 0;
  int rhs_col_ = 0;
  int first_artificial_ = 0;
  std::vector<std::vector<Fraction>> t_;
  std::vector<int> basis_;
  std::vector<int> unit_col_;
  std::vector<bool> negated_;
};

}  // namespace

LpCertificate simplex_solve(const LinearProgram& lp) {
  validate(lp);
  Tableau tab(lp);
  const int cols = tab.columns();

  if (tab.has_artificials()) {
    std::vector<Fraction> phase1(cols);
    for (int j = 0; j < cols; ++j) {
      if (tab.is_artificial(j)) phase1[j] = 1;
    }
    tab.minimise(phase1, std::vector<char>(cols, 1));
    if (tab.basic_value_sum(phase1).sign() > 0) throw LpInfeasible("linear program is infeasible");
    tab.expel_artificials();
  }

  // Phase two works on the minimisation form; the dual is read with the
  // original costs so its sign convention matches the original sense.
  std::vector<Fraction> original(cols), minimising(cols);
  std::vector<char> allowed(cols, 1);
  for (int j = 0; j < cols; ++j) {
    if (j < lp.variables()) {
      original[j] = lp.costs[j];
      minimising[j] = lp.objective == Objective::Minimize ? lp.costs[j] : -lp.costs[j];
    }
    if (tab.is_artificial(j)) allowed[j] = 0;
  }
  if (tab.minimise(minimising, allowed) == Tableau::Outcome::Unbounded)
    throw LpUnbounded("linear program is unbounded");

  LpCertificate cert;
  cert.primal = tab.primal();
  cert.dual = tab.dual(original);
  for (int j = 0; j < lp.variables(); ++j) cert.value += lp.costs[j] * cert.primal[j];
  return cert;
}

bool certificate_is_optimal(const LinearProgram& lp, const LpCertificate& cert) {
  validate(lp);
  const int m = lp.constraints();
  const int n = lp.variables();
  if (static_cast<int>(cert.primal.size()) != n || static_cast<int>(cert.dual.size()) != m) return false;
  const bool minimise = lp.objective == Objective::Minimize;

  Fraction primal_value, dual_value;
  for (int j = 0; j < n; ++j) {
    if (cert.primal[j].sign() < 0) return false;
    primal_value += lp.costs[j] * cert.primal[j];
  }
  for (int i = 0; i < m; ++i) {
    Fraction lhs;
    for (int j = 0; j < n; ++j) lhs += lp.rows[i][j] * cert.primal[j];
    if (lp.senses[i] == RowSense::LessEqual && lhs > lp.rhs[i]) return false;
    if (lp.senses[i] == RowSense::GreaterEqual && lhs < lp.rhs[i]) return false;
    if (lp.senses[i] == RowSense::Equal && lhs != lp.rhs[i]) return false;

    // Dual sign: a row that pushes against the objective carries a
    // non-negative multiplier.
    int sign = cert.dual[i].sign();
    bool pushes = minimise ? lp.senses[i] == RowSense::GreaterEqual : lp.senses[i] == RowSense::LessEqual;
    bool pulls = minimise ? lp.senses[i] == RowSense::LessEqual : lp.senses[i] == RowSense::GreaterEqual;
    if (pushes && sign < 0) return false;
    if (pulls && sign > 0) return false;
    dual_value += lp.rhs[i] * cert.dual[i];
  }
  for (int j = 0; j < n; ++j) {
    Fraction column;
    for (int i = 0; i < m; ++i) column += lp.rows[i][j] * cert.dual[i];
    if (minimise ? column > lp.costs[j] : column < lp.costs[j]) return false;
  }
  return primal_value == dual_value && primal_value == cert.value;
}

}  // namespace dichrom
