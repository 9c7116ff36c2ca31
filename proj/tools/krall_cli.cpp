#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "krall/krall.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string A = "1";
  std::string B = "1";
  int nmax = 10;
  int order = 20;
  std::uint64_t seed = krall::RunConfig{}.seed;
  std::string format = "json";
  std::string out;
  std::string variant = "close-at-end";
  bool serial = false;
  std::vector<std::string> args;
};

krall::RunConfig make_config(const Options& o) {
  krall::RunConfig cfg;
  try {
    cfg.A = krall::parse_rational(o.A);
    cfg.B = krall::parse_rational(o.B);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (sgn(cfg.A) <= 0) throw UsageError("A must be positive");
  if (sgn(cfg.B) <= 0) throw UsageError("B must be positive");
  if (o.nmax < 0) throw UsageError("nmax must be nonnegative");
  if (o.order < 12) throw UsageError("order must be at least 12");
  cfg.nmax = o.nmax;
  cfg.series_order = o.order;
  cfg.seed = o.seed;
  cfg.serial = o.serial;
  return cfg;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("invalid " + what + " '" + s + "'");
}

krall::Endpoint to_endpoint(const std::string& s) {
  if (s == "+1" || s == "1") return krall::Endpoint::Plus;
  if (s == "-1") return krall::Endpoint::Minus;
  throw UsageError("endpoint must be +1 or -1, got '" + s + "'");
}

krall::ParseVariant to_variant(const std::string& s) {
  for (auto v : krall::kParseVariants)
    if (krall::to_string(v) == s) return v;
  throw UsageError("unknown variant '" + s + "'");
}

std::string dump(const std::vector<std::string>& a, const Options& o, const krall::RunConfig& cfg) {
  const krall::KrallParams p(cfg.A, cfg.B);
  auto need = [&](std::size_t n) {
    if (a.size() != n) throw UsageError("dump " + (a.size() > 1 ? a[1] : std::string()) + ": wrong number of arguments");
  };
  if (a.size() < 2) throw UsageError("dump needs a kind: poly, series or matrix");
  const std::string& kind = a[1];
  if (kind == "poly") {
    need(4);
    const int n = to_int(a[3], "degree");
    if (n < 0) throw UsageError("degree must be nonnegative");
    if (a[2] == "K") return krall::to_string(krall::krall_polynomial(n, p)) + "\n";
    if (a[2] == "P") return krall::to_string(krall::legendre_type(n, p.A()).poly) + "\n";
    if (a[2] == "closed")
      return krall::to_string(krall::krall_polynomial_closed_form(n, p, to_variant(o.variant))) + "\n";
    throw UsageError("poly selector must be K, P or closed");
  }
  if (kind == "series") {
    need(4);
    const auto tag = krall::parse_frobenius_tag(a[2]);
    if (!tag) throw UsageError("unknown series '" + a[2] + "'");
    const auto basis = krall::frobenius_basis(to_endpoint(a[3]), cfg.series_order, p);
    for (const auto& s : basis)
      if (s.tag == *tag) return krall::dump_series(s);
    throw UsageError("series not found");
  }
  if (kind == "matrix") {
    need(3);
    if (a[2] == "gram") return krall::matrix_csv(krall::gram_matrix(cfg.nmax, p));
    if (a[2] == "operator") return krall::matrix_csv(krall::operator_matrix(cfg.nmax, p));
    throw UsageError("matrix selector must be gram or operator");
  }
  throw UsageError("unknown dump kind '" + kind + "'");
}

std::string render(const std::vector<krall::Report>& reports, const std::string& format) {
  if (format == "json") {
    if (reports.size() == 1) return krall::to_json(reports.front()).dump(2) + "\n";
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& r : reports) all.push_back(krall::to_json(r));
    return all.dump(2) + "\n";
  }
  std::string out;
  bool header = false;
  for (const auto& r : reports) {
    if (r.matrix) {
      out += krall::matrix_csv(*r.matrix);
      continue;
    }
    std::string rows = krall::cases_csv(r);
    if (header) rows.erase(0, rows.find('\n') + 1);
    header = true;
    out += rows;
  }
  return out;
}

void emit(const std::string& body, const Options& o, const krall::RunConfig& cfg) {
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream(o.out, std::ios::binary) << body;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  nlohmann::ordered_json meta;
  meta["generated_at"] = stamp;
  meta["A"] = krall::to_string(cfg.A);
  meta["B"] = krall::to_string(cfg.B);
  meta["nmax"] = cfg.nmax;
  meta["order"] = cfg.series_order;
  meta["seed"] = cfg.seed;
  meta["args"] = o.args;
  std::ofstream(o.out + ".meta.json") << meta.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact verification of the sixth-order Krall differential expression"};
  app.add_option("args", o.args, "suite names, 'all', or: dump poly|series|matrix <selector...>")->required();
  app.add_option("--A", o.A, "point-mass parameter A as p/q");
  app.add_option("--B", o.B, "point-mass parameter B as p/q");
  app.add_option("--nmax", o.nmax, "largest polynomial degree");
  app.add_option("--order", o.order, "Frobenius truncation order");
  app.add_option("--seed", o.seed, "seed for the random polynomial cases");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "output file; a .meta.json sidecar is written next to it");
  app.add_option("--variant", o.variant, "closed-form reading for 'dump poly closed'");
  app.add_flag("--serial", o.serial, "run suites one after another");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const krall::RunConfig cfg = make_config(o);
    if (o.args.front() == "dump") {
      emit(dump(o.args, o, cfg), o, cfg);
      return 0;
    }
    std::vector<std::string> names;
    for (const auto& a : o.args) {
      if (a == "all") {
        names = krall::suite_names();
        break;
      }
      const auto& known = krall::suite_names();
      if (std::find(known.begin(), known.end(), a) == known.end()) throw UsageError("unknown suite '" + a + "'");
      names.push_back(a);
    }
    const auto reports = krall::run_suites(names, cfg);
    emit(render(reports, o.format), o, cfg);
    int failed = 0;
    for (const auto& r : reports) {
      std::cerr << r.suite << ": " << r.passed() << " passed, " << r.failed() << " failed, " << r.inconclusive()
                << " inconclusive\n";
      failed += r.failed();
    }
    return failed == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
