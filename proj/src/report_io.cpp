#include "csusy/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

namespace csusy {
namespace {

void dump(const Json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        dump(it.value(), depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(v[i], depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

Json range_json(const ExponentRange& r) { return Json{{"lo", r.lo}, {"hi", r.hi}}; }

Json string_list(const std::vector<std::string>& items) {
  Json a = Json::array();
  for (const auto& s : items) a.push_back(s);
  return a;
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

std::string dump_json(const Json& value) {
  std::string out;
  dump(value, 0, out);
  out += "\n";
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move report into place at " + path.string());
  }
}

Json to_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    std::size_t failures = 0;
    for (const auto& r : c.residuals) failures += r.second.is_zero() ? 0 : 1;
    checks.push_back(Json{{"identity", c.identity},
                          {"pass", c.pass},
                          {"monomials_checked", c.residuals.size()},
                          {"failures", failures},
                          {"max_word_length", c.max_word_length}});
  }
  Json j{{"identity", report.name},
         {"n", report.n},
         {"range", range_json(report.range)},
         {"pass", report.pass},
         {"certified_for_all_k", report.certified_for_all_k},
         {"checks", checks}};
  if (const auto f = report.first_failure())
    j["first_failure"] = Json{{"identity", f->identity}, {"k", f->k}, {"residual", to_string(f->residual)}};
  else
    j["first_failure"] = nullptr;
  return j;
}

Json to_json(const LemmaReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"relation", static_cast<int>(c.relation)},
                          {"m", c.m},
                          {"lambda_sq", to_string(c.computed_sq)},
                          {"expected_lambda_sq", to_string(c.expected_sq)},
                          {"proportional", c.proportional},
                          {"pass", c.pass}});
  return Json{{"n", report.n}, {"m_max", report.m_max}, {"pass", report.pass}, {"checks", checks}};
}

Json to_json(const EigenstateRecord& record) {
  return Json{{"sector", std::string(name(record.sector))},
              {"m", record.m},
              {"eigenvalue", to_string(record.eigenvalue)},
              {"state", to_string(record.state)},
              {"norm_sq", to_string(record.norm_sq)},
              {"norm_sq_value", to_double(record.norm_sq)}};
}

Json to_json(const SpectrumReport& report) {
  Json computed = Json::array(), theory = Json::array(), err = Json::array();
  for (const auto& v : report.computed) computed.push_back(static_cast<double>(v));
  for (const auto& v : report.theory) theory.push_back(to_string(v));
  for (double e : report.rel_error) err.push_back(e);
  Json j{{"method", report.method},
         {"n", report.n},
         {"precision_bits", report.precision_bits},
         {"computed", computed},
         {"theory", theory},
         {"rel_error", err},
         {"max_rel_error", report.max_rel_error()}};
  if (report.method == "galerkin") j["condition_estimate"] = report.condition_estimate;
  j["notes"] = string_list(report.notes);
  return j;
}

Json to_json(const CoherentState& state) {
  Json coeffs = Json::array();
  for (const auto& c : state.coefficients) coeffs.push_back(to_json(c));
  return Json{{"sector", std::string(name(state.sector))},
              {"k", to_string(state.k)},
              {"z", to_json(state.z)},
              {"M", state.M},
              {"first_level", state.first_level},
              {"coefficients", coeffs},
              {"norm_sq", state.norm_sq()},
              {"tail_bound", state.tail_bound}};
}

Json to_json(const HalfLoweringCheck& check) {
  return Json{{"source", std::string(name(check.source))},
              {"operator", std::string(name(check.op))},
              {"source_k", to_string(check.source_k)},
              {"target", std::string(name(check.target))},
              {"target_k", to_string(check.target_k)},
              {"z", to_json(check.z)},
              {"scalar", to_json(check.scalar)},
              {"M", check.M},
              {"residual", check.residual},
              {"tol", check.tol},
              {"pass", check.pass}};
}

Json to_json(const FullLoweringCheck& check) {
  return Json{{"operator", "BDAG*A"},
              {"z", to_json(check.z)},
              {"best_scalar", to_json(check.best_scalar)},
              {"normalized_residual", check.normalized_residual},
              {"not_eigenstate", check.not_eigenstate}};
}

Json to_json(const UncertaintyResult& r) {
  return Json{{"observable_pair", r.pair},
              {"state_descriptor", r.state_descriptor},
              {"sigma1", r.sigma1},
              {"sigma2", r.sigma2},
              {"product", r.product},
              {"bound", to_double(r.lower_bound)},
              {"equality_gap", r.equality_gap},
              {"variance1", r.variance1 ? Json(to_string(*r.variance1)) : Json(nullptr)},
              {"variance2", r.variance2 ? Json(to_string(*r.variance2)) : Json(nullptr)},
              {"robertson_bound", r.robertson_bound},
              {"pass", r.pass}};
}

Json to_json(const XpResult& r) {
  return Json{{"observable_pair", "X,P"},
              {"state_descriptor", r.state_descriptor},
              {"sigma1", r.sigma_x},
              {"sigma2", r.sigma_p},
              {"product", r.product},
              {"bound", r.convex_bound},
              {"equality_gap", r.product - r.convex_bound},
              {"global_bound", to_double(r.global_bound)},
              {"robertson_bound", r.robertson_bound},
              {"mean_x", to_json(r.mean_x)},
              {"mean_p", to_json(r.mean_p)},
              {"mean_x2", to_json(r.mean_x2)},
              {"mean_p2", to_json(r.mean_p2)},
              {"pass", r.pass}};
}

std::string to_csv(const SpectrumReport& report) {
  std::string out = "index,computed,theory,rel_error\n";
  for (std::size_t i = 0; i < report.computed.size(); ++i) {
    out += std::to_string(i) + "," + format_double(static_cast<double>(report.computed[i])) + ",";
    out += i < report.theory.size() ? format_double(to_double(report.theory[i])) : "";
    out += ",";
    out += i < report.rel_error.size() ? format_double(report.rel_error[i]) : "";
    out += "\n";
  }
  return out;
}

std::string to_csv(const CoherentState& state) {
  std::string out = "level,abs_sq\n";
  for (std::size_t j = 0; j < state.coefficients.size(); ++j)
    out += std::to_string(state.first_level + static_cast<int>(j)) + "," + format_double(std::norm(state.coefficients[j])) +
           "\n";
  return out;
}

std::string samples_csv(const std::vector<double>& xs, const std::vector<double>& values) {
  if (xs.size() != values.size()) throw std::invalid_argument("sample grid and values differ in length");
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < xs.size(); ++i) out += format_double(xs[i]) + "," + format_double(values[i]) + "\n";
  return out;
}

}  // namespace csusy
