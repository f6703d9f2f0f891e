#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "csusy/coherent.hpp"
#include "csusy/errors.hpp"
#include "csusy/ladder.hpp"
#include "csusy/report_io.hpp"
#include "csusy/spectral.hpp"
#include "csusy/uncertainty.hpp"
#include "csusy/verification.hpp"

namespace csusy::cli {
namespace {

// Bad user input; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 2;
  double tol = 1e-12;
  unsigned precision_bits = 128;
  std::string out;
  /// Empty means the command default: csv for eigenfunctions, json otherwise.
  std::string format;
  std::string window;
  int m_max = 6;
  int basis_size = 10;
  int count = 6;
  bool fd = false;
  double fd_half_width = 0.0;
  int fd_grid = 0;
  std::string sector = "psi";
  int m = 0;
  std::string grid = "-4:4:401";
  std::string z = "0.5";
  std::string state = "ground";
  double mix = 1.0;
  std::string mutate;
};

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

CoupledSusySystem build_system(const RunConfig& cfg) {
  auto sys = make_xn_system(cfg.n);
  if (cfg.mutate.empty()) return sys;
  // b-coeff, or GEN.field with GEN in {A, ADAG, B, BDAG} and field in
  // {slope, offset, raise}; the chosen coefficient is shifted by +1.
  std::string spec = cfg.mutate == "b-coeff" ? "B.raise" : cfg.mutate;
  const auto dot = spec.find('.');
  if (dot == std::string::npos) throw ConfigError("unknown mutation '" + cfg.mutate + "'");
  Generator g;
  try {
    g = parse_generator(spec.substr(0, dot));
  } catch (const std::invalid_argument&) {
    throw ConfigError("unknown mutation '" + cfg.mutate + "'");
  }
  GeneratorRule rule = sys.rule(g);
  const auto field = spec.substr(dot + 1);
  if (field == "slope")
    rule.slope += 1;
  else if (field == "offset")
    rule.offset += 1;
  else if (field == "raise")
    rule.raise += 1;
  else
    throw ConfigError("unknown mutation '" + cfg.mutate + "'");
  return sys.with_rule(g, rule);
}

ExponentRange window_of(const RunConfig& cfg) {
  if (cfg.window.empty()) return default_window(cfg.n);
  const auto colon = cfg.window.find(':');
  if (colon == std::string::npos) throw ConfigError("window must be lo:hi");
  try {
    ExponentRange r{std::stoi(cfg.window.substr(0, colon)), std::stoi(cfg.window.substr(colon + 1))};
    if (r.size() < 1) throw ConfigError("window is empty");
    return r;
  } catch (const std::logic_error&) {
    throw ConfigError("window must be lo:hi");
  }
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty() || cfg.out == "-")
    out << content;
  else
    write_file_atomic(cfg.out, content);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto sys = build_system(cfg);
  const auto range = window_of(cfg);
  const auto susy = verify_coupled_susy(sys, range);
  const auto su11 = verify_su11(sys, range);
  const bool pass = susy.pass && su11.pass;
  if (cfg.format == "csv") {
    std::string csv = "report,identity,pass,failures\n";
    for (const auto* r : {&susy, &su11})
      for (const auto& c : r->checks) {
        std::size_t failures = 0;
        for (const auto& res : c.residuals) failures += res.second.is_zero() ? 0 : 1;
        csv += r->name + ",\"" + c.identity + "\"," + (c.pass ? "true" : "false") + "," + std::to_string(failures) + "\n";
      }
    emit(cfg, csv, out);
  } else {
    Json j{{"command", "verify"},
           {"n", cfg.n},
           {"mutation", cfg.mutate.empty() ? Json(nullptr) : Json(cfg.mutate)},
           {"pass", pass},
           {"reports", Json::array({to_json(susy), to_json(su11)})}};
    emit(cfg, dump_json(j), out);
  }
  if (!pass) {
    const auto f = susy.pass ? su11.first_failure() : susy.first_failure();
    err << "verification failed: " << f->identity << " at k = " << f->k << ", residual " << to_string(f->residual)
        << "\n";
    return kVerificationFailure;
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.count < 1) throw ConfigError("--count must be >= 1");
  if (cfg.basis_size < 1) throw ConfigError("--basis-size must be >= 1");
  const auto sys = make_xn_system(cfg.n);
  const auto theory = theoretical_spectrum(sys, cfg.count);

  // Ladder eigenvalues straight from the towers.
  std::vector<Rational> ladder;
  bool exact = true;
  for (Sector s : {Sector::PSI, Sector::PHI})
    for (const auto& rec : tower(sys, s, cfg.count)) {
      exact = exact && satisfies_eigen_equation(sys, rec);
      ladder.push_back(rec.eigenvalue);
    }
  std::sort(ladder.begin(), ladder.end());
  ladder.resize(static_cast<std::size_t>(cfg.count));

  SpectrumReport merged;
  merged.method = "galerkin";
  merged.n = cfg.n;
  merged.precision_bits = cfg.precision_bits;
  std::vector<SpectrumReport> sectors;
  for (int r : {0, 2 * cfg.n - 1}) {
    sectors.push_back(solve_generalized(sys, build_galerkin(sys, r, cfg.basis_size), cfg.precision_bits));
    for (const auto& v : sectors.back().computed) merged.computed.push_back(v);
  }
  std::sort(merged.computed.begin(), merged.computed.end());
  merged.computed.resize(std::min(merged.computed.size(), static_cast<std::size_t>(cfg.count)));
  merged.theory = theory;
  for (std::size_t i = 0; i < merged.computed.size(); ++i) {
    const double t = to_double(theory[i]);
    const double d = std::abs(static_cast<double>(merged.computed[i]) - t);
    merged.rel_error.push_back(t == 0.0 ? d : d / std::abs(t));
  }

  const auto lowering = verify_lemma1(sys, cfg.m_max);

  std::optional<SpectrumReport> fd;
  if (cfg.fd) {
    const double L = cfg.fd_half_width > 0 ? cfg.fd_half_width : (cfg.n == 1 ? 12.0 : 6.0);
    const int N = cfg.fd_grid > 0 ? cfg.fd_grid : (cfg.n == 1 ? 2000 : 4000);
    fd = fd_spectrum(cfg.n, L, N, cfg.count);
  }

  if (cfg.format == "csv") {
    emit(cfg, to_csv(merged), out);
  } else {
    Json th = Json::array(), lad = Json::array();
    for (const auto& v : theory) th.push_back(to_string(v));
    for (const auto& v : ladder) lad.push_back(to_string(v));
    Json j{{"command", "spectrum"},
           {"n", cfg.n},
           {"gamma", to_string(sys.gamma)},
           {"delta", to_string(sys.delta)},
           {"theory", th},
           {"ladder", lad},
           {"ladder_eigen_equations_exact", exact},
           {"galerkin", Json::array({to_json(sectors[0]), to_json(sectors[1])})},
           {"galerkin_merged", to_json(merged)},
           {"lowering_coefficients", to_json(lowering)},
           {"finite_difference", fd ? to_json(*fd) : Json(nullptr)}};
    emit(cfg, dump_json(j), out);
  }
  return exact && ladder == theory && lowering.pass ? kOk : kVerificationFailure;
}

int cmd_eigenfunctions(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto sys = make_xn_system(cfg.n);
  Sector sector;
  try {
    sector = parse_sector(cfg.sector);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.m < first_level(sector)) throw ConfigError("--m is below the first level of sector " + cfg.sector);
  Grid grid;
  try {
    grid = parse_grid(cfg.grid);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const auto record = eigenstate(sys, sector, cfg.m);
  const auto xs = grid.points();
  const auto values = sample_normalized(record, xs);
  if (cfg.format == "json") {
    Json samples = Json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) samples.push_back(Json::array({xs[i], values[i]}));
    Json j{{"command", "eigenfunctions"},
           {"n", cfg.n},
           {"record", to_json(record)},
           {"eigen_equation_exact", satisfies_eigen_equation(sys, record)},
           {"samples", samples}};
    emit(cfg, dump_json(j), out);
  } else {
    emit(cfg, samples_csv(xs, values), out);
  }
  return kOk;
}

int cmd_coherent(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto sys = make_xn_system(cfg.n);
  Sector sector;
  Complex z;
  try {
    sector = parse_sector(cfg.sector);
    z = parse_complex(cfg.z);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!(std::norm(z) < 1.0)) throw ConfigError("|z| must be < 1");
  const auto state = coherent_state(sys, sector, z, cfg.tol);
  bool pass = std::abs(state.norm_sq() - 1.0) <= cfg.tol;
  std::optional<HalfLoweringCheck> half;
  if (sector == Sector::PSI || sector == Sector::PHI_TILDE) {
    half = verify_half_lowering(sys, sector, z, std::max(cfg.tol, 1e-10));
    pass = pass && half->pass;
  }
  std::optional<FullLoweringCheck> full;
  if (sector == Sector::PSI && z != Complex(0.0, 0.0)) full = check_full_lowering(sys, z, cfg.tol);

  if (cfg.format == "csv") {
    emit(cfg, to_csv(state), out);
  } else {
    Json j{{"command", "coherent"},
           {"n", cfg.n},
           {"state", to_json(state)},
           {"half_lowering", half ? to_json(*half) : Json(nullptr)},
           {"full_lowering", full ? to_json(*full) : Json(nullptr)},
           {"pass", pass}};
    emit(cfg, dump_json(j), out);
  }
  if (!pass) err << "coherent-state checks failed\n";
  return pass ? kOk : kVerificationFailure;
}

int cmd_uncertainty(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto sys = make_xn_system(cfg.n);
  Json result;
  bool pass = false;
  if (cfg.state == "direct") {
    if (cfg.mix < 0 || cfg.mix > 1) throw ConfigError("--mix must lie in [0, 1]");
    const double amp2 = std::sqrt(std::max(0.0, 1.0 - cfg.mix * cfg.mix));
    const auto psi = eigenstate(sys, Sector::PSI, 0).state;
    const auto phi = eigenstate(sys, Sector::PHI_TILDE, 0).state;
    const auto zero = GaussPolyState(cfg.n);
    std::ostringstream desc;
    desc << "(" << format_double(cfg.mix) << " psi_0, " << format_double(amp2) << " phi_tilde_0)";
    const auto ds = make_direct_sum(cfg.mix == 0 ? zero : psi, cfg.mix, amp2 == 0 ? zero : phi, amp2, desc.str());
    const auto r = uncertainty_product_XP(sys, ds, cfg.tol);
    result = to_json(r);
    pass = r.pass;
  } else {
    Sector sector = Sector::PSI;
    int m = 0;
    if (cfg.state != "ground") {
      const auto colon = cfg.state.find(':');
      try {
        if (colon == std::string::npos) throw std::invalid_argument("state must be ground, direct or SECTOR:M");
        sector = parse_sector(cfg.state.substr(0, colon));
        m = std::stoi(cfg.state.substr(colon + 1));
      } catch (const std::logic_error& e) {
        throw ConfigError(std::string("bad --state: ") + e.what());
      }
      if (m < first_level(sector)) throw ConfigError("--state level below the first level of the sector");
    }
    const auto record = eigenstate(sys, sector, m);
    const std::string desc = std::string(name(sector)) + "_" + std::to_string(m);
    const auto r = is_tilde(sector) ? uncertainty_product_tilde(sys, record.state, desc, cfg.tol)
                                    : uncertainty_product_LA(sys, record.state, desc, cfg.tol);
    result = to_json(r);
    pass = r.pass;
  }
  if (cfg.format == "csv") {
    std::string csv = "observable_pair,state_descriptor,sigma1,sigma2,product,bound,equality_gap\n";
    csv += result["observable_pair"].get<std::string>() + ",\"" + result["state_descriptor"].get<std::string>() +
           "\"";
    for (const char* key : {"sigma1", "sigma2", "product", "bound", "equality_gap"})
      csv += "," + format_double(result[key].get<double>());
    emit(cfg, csv + "\n", out);
  } else {
    Json j{{"command", "uncertainty"}, {"n", cfg.n}, {"result", result}};
    emit(cfg, dump_json(j), out);
  }
  if (!pass) err << "uncertainty product below its Robertson bound\n";
  return pass ? kOk : kVerificationFailure;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty complex number");
  if (const auto comma = text.find(','); comma != std::string_view::npos)
    return {parse_double(trim(text.substr(0, comma))), parse_double(trim(text.substr(comma + 1)))};
  if (text.back() != 'i') return {parse_double(text), 0.0};
  const auto body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not at the start or after an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  auto imag = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s.front() == '+' ? s.substr(1) : s);
  };
  if (split == std::string_view::npos) return {0.0, imag(body)};
  return {parse_double(body.substr(0, split)), imag(body.substr(split))};
}

std::vector<double> Grid::points() const {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) xs.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  return xs;
}

Grid parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(':', start)) != std::string_view::npos; start = pos + 1)
    parts.push_back(text.substr(start, pos - start));
  parts.push_back(text.substr(start));
  if (parts.size() != 3) throw std::invalid_argument("grid must be lo:hi:count");
  Grid g{parse_double(parts[0]), parse_double(parts[1]), 0};
  const double count = parse_double(parts[2]);
  if (count < 1 || count != std::floor(count) || count > 1e7) throw std::invalid_argument("grid count must be a positive integer");
  g.count = static_cast<int>(count);
  if (!(g.lo <= g.hi)) throw std::invalid_argument("grid needs lo <= hi");
  return g;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and numerics for coupled supersymmetric ladder systems", "csusy"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  RunConfig cfg;

  app.add_option("--n", cfg.n, "Family index n >= 1")->check(CLI::Range(1, 1000));
  app.add_option("--tol", cfg.tol, "Tolerance (> 0)")->check(CLI::PositiveNumber);
  app.add_option("--precision-bits", cfg.precision_bits, "MPFR mantissa bits for numerics")
      ->check(CLI::Range(24u, 65536u));
  app.add_option("--out", cfg.out, "Output file (default: stdout)");
  app.add_option("--format", cfg.format, "json or csv (default json; csv for eigenfunctions)")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--window", cfg.window, "Exponent window lo:hi (default -2n-10:4n+30)");
  app.add_option("--m-max", cfg.m_max, "Tower depth for the lowering-coefficient checks")->check(CLI::NonNegativeNumber);
  app.add_option("--basis-size", cfg.basis_size, "Galerkin basis size T");
  app.add_option("--count", cfg.count, "Number of eigenvalues");
  app.add_flag("--fd", cfg.fd, "Add the finite-difference cross-check");
  app.add_option("--fd-half-width", cfg.fd_half_width, "Finite-difference half width L");
  app.add_option("--fd-grid", cfg.fd_grid, "Finite-difference node count N (even)");
  app.add_option("--sector", cfg.sector, "psi, phi, psi_tilde or phi_tilde");
  app.add_option("--m", cfg.m, "Tower level")->check(CLI::NonNegativeNumber);
  app.add_option("--grid", cfg.grid, "Sampling grid lo:hi:count");
  app.add_option("--z", cfg.z, "Coherent-state parameter, |z| < 1 (e.g. 0.5, 0.3+0.4i)");
  app.add_option("--state", cfg.state, "ground, SECTOR:M, or direct");
  app.add_option("--mix", cfg.mix, "Amplitude of psi_0 in the direct-sum state");
  app.add_option("--mutate", cfg.mutate)->group("");

  auto* verify = app.add_subcommand("verify", "Check the coupled SUSY and su(1,1) identities exactly");
  auto* spectrum = app.add_subcommand("spectrum", "Ladder, Galerkin and finite-difference spectra");
  auto* eigenfunctions = app.add_subcommand("eigenfunctions", "Sample a normalized tower state on a grid");
  auto* coherent = app.add_subcommand("coherent", "Build a coherent state and check the lowering relations");
  auto* uncertainty = app.add_subcommand("uncertainty", "Uncertainty products and their bounds");
  for (auto* sub : {verify, spectrum, eigenfunctions, coherent, uncertainty}) sub->fallthrough();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalidConfig;
  }
  if (cfg.format.empty()) cfg.format = eigenfunctions->parsed() ? "csv" : "json";

  try {
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out, err);
    if (eigenfunctions->parsed()) return cmd_eigenfunctions(cfg, out, err);
    if (coherent->parsed()) return cmd_coherent(cfg, out, err);
    return cmd_uncertainty(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace csusy::cli
