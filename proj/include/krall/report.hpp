#ifndef KRALL_REPORT_HPP
#define KRALL_REPORT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "krall/kappa_space.hpp"

namespace krall {

enum class Verdict { Pass, Fail, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct Case {
  std::string name;
  std::string paper_item;
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::Pass;
  std::optional<std::string> witness;
};

/// lhs == rhs decides the verdict.
inline Case equality_case(std::string name, std::string item, const std::string& lhs, const std::string& rhs,
                          std::optional<std::string> witness = std::nullopt) {
  return {std::move(name), std::move(item), lhs, rhs, lhs == rhs ? Verdict::Pass : Verdict::Fail, std::move(witness)};
}

inline Case equality_case(std::string name, std::string item, const Rational& lhs, const Rational& rhs,
                          std::optional<std::string> witness = std::nullopt) {
  return equality_case(std::move(name), std::move(item), to_string(lhs), to_string(rhs), std::move(witness));
}

inline Case bool_case(std::string name, std::string item, bool ok, std::string lhs, std::string rhs,
                      std::optional<std::string> witness = std::nullopt) {
  return {std::move(name), std::move(item), std::move(lhs), std::move(rhs), ok ? Verdict::Pass : Verdict::Fail,
          std::move(witness)};
}

struct Report {
  std::string suite;
  std::string A, B;
  std::vector<Case> cases;
  std::optional<Matrix> matrix;  // attached artifact for matrix-valued suites

  int count(Verdict v) const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [v](const Case& c) { return c.verdict == v; }));
  }
  int passed() const { return count(Verdict::Pass); }
  int failed() const { return count(Verdict::Fail); }
  int inconclusive() const { return count(Verdict::Inconclusive); }

  void sort_cases() {
    std::stable_sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.name < b.name; });
  }
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = {{"A", r.A}, {"B", r.B}};
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["paper_item"] = c.paper_item;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    cj["verdict"] = to_string(c.verdict);
    cj["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json(nullptr);
    j["cases"].push_back(std::move(cj));
  }
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  j["inconclusive"] = r.inconclusive();
  return j;
}

inline std::string matrix_csv(const Matrix& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

namespace detail {
inline std::string csv_cell(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}
}  // namespace detail

/// Case table, one row per case; commas inside cells become semicolons.
inline std::string cases_csv(const Report& r) {
  std::string out = "suite,name,paper_item,lhs,rhs,verdict,witness\n";
  for (const auto& c : r.cases) {
    out += r.suite + ',' + detail::csv_cell(c.name) + ',' + detail::csv_cell(c.paper_item) + ',' +
           detail::csv_cell(c.lhs) + ',' + detail::csv_cell(c.rhs) + ',' + to_string(c.verdict) + ',' +
           (c.witness ? detail::csv_cell(*c.witness) : std::string()) + '\n';
  }
  return out;
}

}  // namespace krall

#endif  // KRALL_REPORT_HPP
