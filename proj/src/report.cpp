#include "rrc/report.hpp"

#include <sstream>

namespace rrc {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

void IdentityReport::fail(const Mismatch& m) {
  status = Status::Fail;
  first_mismatch = m;
}

namespace {

nlohmann::ordered_json coeffs_json(const Polynomial& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const SpeculationSolution& s) {
  nlohmann::ordered_json j;
  j["k"] = s.k;
  j["i"] = s.i;
  j["rows"] = s.rows;
  j["residual_order"] = s.residual_order;
  j["unknowns"] = s.unknowns;
  j["equations"] = s.equations;
  j["rank"] = s.rank;
  j["unique"] = s.unique;
  auto subsets = nlohmann::ordered_json::array();
  for (const auto& c : s.subsets) {
    nlohmann::ordered_json e;
    e["subset"] = c.subset;
    e["numerator"] = coeffs_json(c.numerator);
    e["denominator"] = coeffs_json(c.denominator);
    subsets.push_back(std::move(e));
  }
  j["subsets"] = std::move(subsets);
  return j;
}

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["order"] = r.order;
  j["status"] = std::string(to_string(r.status));
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                           {"lhs", r.first_mismatch->lhs.get_str()},
                           {"rhs", r.first_mismatch->rhs.get_str()}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["solution"] = r.solution ? to_json(*r.solution) : nlohmann::ordered_json(nullptr);
  j["details"] = r.details;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const IdentityReport& r) {
  std::ostringstream os;
  os << to_string(r.status) << "  " << r.identity;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "  order=" << r.order;
  if (r.first_mismatch) {
    os << "  mismatch at q^" << r.first_mismatch->exponent << ": lhs=" << r.first_mismatch->lhs.get_str()
       << " rhs=" << r.first_mismatch->rhs.get_str();
  }
  os << "  (" << r.elapsed_ms << " ms)\n";
  for (const auto& d : r.details) os << "    " << d << "\n";
  if (r.solution) {
    const auto& s = *r.solution;
    os << "    ansatz: " << s.unknowns << " unknowns, " << s.equations << " equations, rank " << s.rank
       << (s.unique ? " (unique)" : " (not unique)") << ", verified through q^" << s.residual_order << "\n";
    for (const auto& c : s.subsets) {
      os << "    T={";
      for (std::size_t t = 0; t < c.subset.size(); ++t) os << (t ? "," : "") << c.subset[t];
      os << "}: (" << to_string(c.numerator) << ") / (" << to_string(c.denominator) << ")\n";
    }
  }
  return os.str();
}

}  // namespace rrc
