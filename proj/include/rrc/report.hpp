#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rrc/qseries.hpp"

namespace rrc {

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s);

/// One ansatz coefficient c_T = numerator / denominator attached to the
/// product of 1/(q^j; q^modulus)_inf over j in T.
struct SubsetCoefficient {
  std::vector<int> subset;
  Polynomial numerator;
  Polynomial denominator;
};

struct SpeculationSolution {
  int k = 0;
  int i = 0;
  int rows = 0;
  std::vector<SubsetCoefficient> subsets;
  int residual_order = 0;  // agreement verified through this exponent
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  bool unique = false;
};

/// Verdict of one verification run. status == Fail exactly when
/// first_mismatch is set.
struct IdentityReport {
  std::string identity;
  std::map<std::string, long long> params;
  int order = 0;
  Status status = Status::Pass;
  std::optional<Mismatch> first_mismatch;
  std::optional<SpeculationSolution> solution;
  std::vector<std::string> details;
  long long elapsed_ms = 0;

  /// Records a mismatch and flips the status to Fail.
  void fail(const Mismatch& m);
};

nlohmann::ordered_json to_json(const SpeculationSolution& s);
/// Field order: identity, params, order, status, first_mismatch, solution,
/// details, elapsed_ms.
nlohmann::ordered_json to_json(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

}  // namespace rrc
