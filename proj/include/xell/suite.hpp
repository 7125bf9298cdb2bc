#pragma once

#include <string>
#include <vector>

#include "xell/identities.hpp"
#include "xell/numerics.hpp"
#include "xell/report.hpp"

namespace xell {

enum class FamilySelection { Laguerre, Jacobi, All };
FamilySelection parse_family(const std::string& s);

enum class CubicMode { Symbolic, Grid, Both };
CubicMode parse_cubic_mode(const std::string& s);

// Task builders behind the verify subcommands.  Check names sort naturally:
// integer indices are zero-padded.

std::vector<Task> lemma_tasks(int n_max, FamilySelection family);
std::vector<Task> cubic_tasks(FamilySelection family, int ell_max, CubicMode mode);
/// The given parameters plus `seeds` admissible draws from rng_seed.
std::vector<Task> shape_tasks(SystemKind kind, int ell, const Params& p, int seeds, unsigned rng_seed);
std::vector<Task> orthogonality_tasks(SystemKind kind, int ell, int n_max, const Params& p);
std::vector<Task> zero_tasks(SystemKind kind, int ell, int n_max, const Params& p);
std::vector<Task> ode_tasks(SystemKind kind, int ell, const Params& p);
std::vector<Task> limit_tasks(int n, const Rational& alpha, double beta_start);

struct SpectrumRow {
  int n = 0;
  double numeric = 0.0;
  double refined = 0.0;
  double closed_form = 0.0;
};

struct SpectrumResult {
  std::vector<SpectrumRow> rows;
  std::vector<Check> checks;
  Grid grid;
};

/// Finite-difference levels against E_n(lambda + ell delta).  Ground state
/// within 1e-2 absolute; excited levels within 1e-2 absolute (radial),
/// 1e-2 relative (trig) or 1e-1 relative (hyp).
SpectrumResult spectrum_report(SystemKind kind, int ell, const Params& p, int levels, const Grid& grid);

struct Criterion {
  int id = 0;
  std::string title;
  double budget_s = 0.0;  // 0: no runtime bound
  std::vector<Task> (*tasks)(bool quick);
};

/// The acceptance suite, criteria 1..13.
const std::vector<Criterion>& acceptance_criteria();

struct CriterionResult {
  const Criterion* criterion = nullptr;
  std::vector<Check> checks;  // includes the budget check when one applies
  double seconds = 0.0;
  [[nodiscard]] bool passed() const;
};

CriterionResult run_criterion(const Criterion& c, bool quick, int jobs);

}  // namespace xell
