#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superrigid/vfield.hpp"

namespace superrigid {

// Checks are made on a window: aux (principal-type) degree <= order - 2.
// Condition (a) and (c) are exact modulo the elements of aux degree above the
// window; condition (b) closes inside a window widened by `margin`.
int window_of(int order);

struct CondA {
  bool holds = false;
  int window = 0;
  int dim_g1 = 0;
  int rank = 0;    // dim of [g0,mu] + F mu modulo the window
  int codim = 0;
  std::vector<std::string> witnesses;  // elements of g1 spanning a complement
  // same with g0 replaced by its even part of nonnegative aux degree
  int codim_int = 0;
  int codim_int_no_mu = 0;  // [g_int, mu] alone
};

struct CondB {
  bool holds = false;
  int window = 0;
  int margin = 0;
  int dim_g0 = 0;
  int reached = 0;
  std::vector<std::string> missing;
};

struct CondC {
  bool holds = false;
  int window = 0;
  int k_checked = 0;
  std::vector<int> codims;  // codim of [g1, g_{k-1}] in g_k for k = 2..k_checked
};

struct AdmissibilityReport {
  std::string id;
  std::string family;
  std::string grading;
  std::string mu;
  int order = 0;
  int window = 0;
  CondA a;
  CondB b;
  CondC c;
  bool transitive = false;
  std::vector<std::string> notes;
  bool ok() const { return a.holds && b.holds && c.holds && transitive; }
};

// throws std::invalid_argument if mu is not a homogeneous degree-1 element of g
void check_mu_in_g1(const FamilySpec& fs, const GradingSpec& g, const Elem& mu);
CondA check_condition_a(const FamilySpec& fs, const GradingSpec& g, const Elem& mu, int order);
CondB check_condition_b(const FamilySpec& fs, const GradingSpec& g, const Elem& mu, int order,
                        int margin = 2);
CondC check_condition_c(const FamilySpec& fs, const GradingSpec& g, int order, int k_max = 3);
// no nonzero x in g_0..g_k_max (within the window) with [x, g_{-1}] = 0
bool check_transitive(const FamilySpec& fs, const GradingSpec& g, int order, int k_max = 3);

// Lie subalgebra of g0 generated by [g_{-1}, u] for all u in the given parity
// part of g1; reports whether target lies in it within the window
struct ClosureReport {
  int window = 0;
  int dim_g0 = 0;
  int dim_closure = 0;
  bool contains_target = false;
};
ClosureReport parity_part_closure(const FamilySpec& fs, const GradingSpec& g, int parity,
                                  const Elem& target, int order, int margin = 2);

// ---- Table rows ----

struct RowParams {
  std::optional<int> n;
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;
};

struct TableRow {
  int table = 0;
  std::string id;
  std::string family;
  bool hyperbolic = false;
  std::string m, n;        // may contain {n}
  std::string grading;     // "a1,..|b1,..", "0..0" fills zeros
  std::string mu;          // expression with {..} parameter slots
  std::string mu_alt;      // second printed form, if any
  std::vector<std::string> params;  // subset of n, alpha, beta
  int n_min = 0;
  std::vector<std::string> constraints;
  std::string beta;  // fixed beta of the row, if any
};

struct RowInstance {
  const TableRow* row = nullptr;
  FamilySpec fs;
  GradingSpec grading;
  Elem mu;
  std::string mu_text;
  std::optional<Elem> mu_alt;
  RowParams params;
};

std::string default_table_path();
std::vector<TableRow> load_table_rows(const std::string& path = default_table_path());
const TableRow& find_row(const std::vector<TableRow>& rows, int table, const std::string& id);
// evaluates {..} slots and the row's parameter constraints; throws std::invalid_argument
RowInstance instantiate(const TableRow& row, const RowParams& p);
// smallest legal parameters: minimal n, the given alpha, beta = 1/2
RowParams smallest_params(const TableRow& row, const Scalar& alpha = 0);

AdmissibilityReport verify_row(const RowInstance& r, int order, int k_max = 3);
AdmissibilityReport verify_table_row(int table, const std::string& id, const RowParams& p, int order);

std::string grading_str(const GradingSpec& g);
// "1,0|0,-1" or with 0..0 fill; lengths given by the ambient
GradingSpec parse_grading(const std::string& text, int m, int n);
// rational arithmetic over n, alpha, beta with + - * / and parentheses
Scalar eval_param_expr(const std::string& text, const RowParams& p);

}  // namespace superrigid
