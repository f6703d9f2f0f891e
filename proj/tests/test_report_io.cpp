#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "csusy/coherent.hpp"
#include "csusy/report_io.hpp"
#include "csusy/spectral.hpp"
#include "csusy/verification.hpp"

namespace csusy {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(ReportIo, DoubleFormat) {
  EXPECT_EQ(format_double(0.5), "5.0000000000000000e-01");
  EXPECT_EQ(format_double(-3.0), "-3.0000000000000000e+00");
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "null");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "null");
  // 17 significant digits round-trip every double.
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(ReportIo, JsonKeepsKeyOrderAndFormat) {
  const Json j{{"zeta", 1.5}, {"alpha", Json::array({1, 2})}, {"none", nullptr}, {"flag", true}, {"empty", Json::object()}};
  EXPECT_EQ(dump_json(j),
            "{\n  \"zeta\": 1.5000000000000000e+00,\n  \"alpha\": [\n    1,\n    2\n  ],\n  \"none\": null,\n"
            "  \"flag\": true,\n  \"empty\": {}\n}\n");
}

TEST(ReportIo, ReportsAreDeterministic) {
  const auto sys = make_xn_system(2);
  const auto a = dump_json(to_json(verify_coupled_susy(sys, default_window(2))));
  const auto b = dump_json(to_json(verify_coupled_susy(sys, default_window(2))));
  EXPECT_EQ(a, b);
  const auto j = to_json(verify_coupled_susy(sys, default_window(2)));
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j["first_failure"].is_null());
  EXPECT_EQ(j.begin().key(), "identity");
}

TEST(ReportIo, CsvHeaders) {
  const auto report = fd_spectrum(1, 12.0, 400, 3);
  const auto csv = to_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,computed,theory,rel_error");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  const auto st = coherent_state(make_xn_system(2), Sector::PSI, Complex(0.2, 0), 1e-9);
  const auto c = to_csv(st);
  EXPECT_EQ(c.substr(0, c.find('\n')), "level,abs_sq");
  EXPECT_EQ(samples_csv({0.0, 1.0}, {2.0, 3.0}),
            "x,value\n0.0000000000000000e+00,2.0000000000000000e+00\n1.0000000000000000e+00,3.0000000000000000e+00\n");
  EXPECT_THROW(samples_csv({0.0}, {}), std::invalid_argument);
}

TEST(ReportIo, AtomicWriteReplacesWholeFile) {
  const auto dir = std::filesystem::temp_directory_path() / "csusy_report_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "report.json";
  write_file_atomic(path, "first version, rather long\n");
  write_file_atomic(path, "second\n");
  EXPECT_EQ(slurp(path), "second\n");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1u);
  EXPECT_THROW(write_file_atomic(dir / "missing" / "x.json", "x"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace csusy
