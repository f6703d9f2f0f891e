#include "csusy/ladder.hpp"

#include <cmath>
#include <stdexcept>

#include "csusy/errors.hpp"

namespace csusy {
namespace {

using G = Generator;

const Word kRaise{G::ADAG, G::B};

EigenstateRecord make_record(const CoupledSusySystem& sys, Sector sector, int m, GaussPolyState state) {
  EigenstateRecord r{sector, m, std::move(state), GammaVector(sys.n), tower_eigenvalue(sys, sector, m)};
  r.norm_sq = inner_product(r.state, r.state);
  return r;
}

Sector base_sector(Sector s) {
  switch (s) {
    case Sector::PSI_TILDE: return Sector::PSI;
    case Sector::PHI_TILDE: return Sector::PHI;
    default: return s;
  }
}

GaussPolyState ground_state(int n, Sector untilded) {
  return GaussPolyState::monomial(n, untilded == Sector::PSI ? 0 : 2 * n - 1);
}

void require_unbroken(const CoupledSusySystem& sys) {
  if (sys.broken) throw DomainError("tower construction needs an unbroken coupled SUSY system");
}

// d/dx acting on P e^{-x^{2n}/n}, returning the new polynomial factor.
std::map<int, Rational> weighted_derivative(int n, const std::map<int, Rational>& p) {
  std::map<int, Rational> out;
  for (const auto& [k, c] : p) {
    if (k != 0) out[k - 1] += c * k;
    out[k + 2 * n - 1] -= 2 * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<int, Rational> shift(const std::map<int, Rational>& p, int by) {
  std::map<int, Rational> out;
  for (const auto& [k, c] : p) out.emplace(k + by, c);
  return out;
}

}  // namespace

std::string_view name(Sector s) {
  switch (s) {
    case Sector::PSI: return "psi";
    case Sector::PHI: return "phi";
    case Sector::PSI_TILDE: return "psi_tilde";
    case Sector::PHI_TILDE: return "phi_tilde";
  }
  return "?";
}

Sector parse_sector(std::string_view text) {
  if (text == "psi" || text == "PSI") return Sector::PSI;
  if (text == "phi" || text == "PHI") return Sector::PHI;
  if (text == "psi_tilde" || text == "PSI_TILDE") return Sector::PSI_TILDE;
  if (text == "phi_tilde" || text == "PHI_TILDE") return Sector::PHI_TILDE;
  throw std::invalid_argument("unknown sector '" + std::string(text) + "'");
}

bool is_tilde(Sector s) { return s == Sector::PSI_TILDE || s == Sector::PHI_TILDE; }

int sector_residue(int n, Sector s) {
  switch (s) {
    case Sector::PSI: return 0;
    case Sector::PHI: return (2 * n - 1) % (2 * n);
    case Sector::PSI_TILDE: return n % (2 * n);
    case Sector::PHI_TILDE: return n - 1;
  }
  return 0;
}

int first_level(Sector s) { return s == Sector::PSI_TILDE ? 1 : 0; }

Rational tower_eigenvalue(const CoupledSusySystem& sys, Sector s, int m) {
  const Rational base = sys.gap() * m;
  return base_sector(s) == Sector::PSI ? base : Rational(base + sys.delta);
}

std::pair<EigenstateRecord, EigenstateRecord> ground_states(const CoupledSusySystem& sys) {
  require_unbroken(sys);
  auto psi = make_record(sys, Sector::PSI, 0, ground_state(sys.n, Sector::PSI));
  auto phi = make_record(sys, Sector::PHI, 0, ground_state(sys.n, Sector::PHI));
  if (!apply_generator(sys, G::A, psi.state).is_zero())
    throw std::logic_error("a does not annihilate the PSI ground state");
  const auto a_phi = apply_generator(sys, G::A, phi.state);
  if (a_phi.is_zero() || !apply_generator(sys, G::BDAG, a_phi).is_zero())
    throw std::logic_error("PHI ground state is not in ker(b†a) \\ ker(a)");
  return {std::move(psi), std::move(phi)};
}

std::vector<EigenstateRecord> tower(const CoupledSusySystem& sys, Sector sector, int m_max) {
  require_unbroken(sys);
  std::vector<EigenstateRecord> out;
  if (m_max < first_level(sector)) return out;
  const Sector base = base_sector(sector);
  GaussPolyState state = ground_state(sys.n, base);
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) state = apply_word(sys, kRaise, state);
    if (m < first_level(sector)) continue;
    out.push_back(make_record(sys, sector, m, is_tilde(sector) ? apply_generator(sys, G::A, state) : state));
  }
  return out;
}

EigenstateRecord eigenstate(const CoupledSusySystem& sys, Sector sector, int m) {
  if (m < 0) throw DomainError("tower level must be nonnegative");
  if (m < first_level(sector)) throw DomainError("psi_tilde_0 does not exist: a annihilates psi_0");
  return tower(sys, sector, m).back();
}

bool satisfies_eigen_equation(const CoupledSusySystem& sys, const EigenstateRecord& record) {
  const Word hamiltonian = is_tilde(record.sector) ? Word{G::A, G::ADAG} : Word{G::ADAG, G::A};
  return apply_word(sys, hamiltonian, record.state) == record.state * record.eigenvalue;
}

GaussPolyState closed_form_eigenstate(int n, Branch branch, int m) {
  if (n < 1) throw std::invalid_argument("family index n must be >= 1");
  if (m < 0) throw std::invalid_argument("closed form index must be nonnegative");
  std::map<int, Rational> p;
  p[branch == Branch::Even ? 0 : 2 * n - 1] = 1;
  for (int i = 0; i < m; ++i) {
    // d/dx (x^{2-2n} d/dx): the inner derivative is followed by the x^{2-2n}
    // factor, the outer one is a plain derivative of Q e^{-x^{2n}/n}.
    auto q = shift(weighted_derivative(n, p), 2 - 2 * n);
    p = weighted_derivative(n, q);
  }
  return GaussPolyState(n, GaussPolyState::TermMap(p.begin(), p.end()));
}

Rational expected_lowering_sq(const CoupledSusySystem& sys, LoweringRelation relation, int m) {
  const Rational gap = sys.gap();
  switch (relation) {
    case LoweringRelation::A_ON_PSI: return gap * m;
    case LoweringRelation::A_ON_PHI: return gap * (m + sys.delta / gap);
    case LoweringRelation::BDAG_ON_PSI_TILDE: return gap * (m - sys.delta / gap);
    case LoweringRelation::BDAG_ON_PHI_TILDE: return gap * m;
  }
  return 0;
}

LadderTowers::LadderTowers(CoupledSusySystem sys) : sys_(std::move(sys)) { require_unbroken(sys_); }

const EigenstateRecord& LadderTowers::get_locked(Sector sector, int m) const {
  if (m < first_level(sector)) throw DomainError("tower level below the first level of the sector");
  auto& t = towers_[sector];
  const std::size_t index = static_cast<std::size_t>(m - first_level(sector));
  while (t.size() <= index) {
    const int level = first_level(sector) + static_cast<int>(t.size());
    if (is_tilde(sector)) {
      const auto& base = get_locked(base_sector(sector), level);
      // get_locked may have inserted into towers_, but std::map references
      // stay valid.
      t.push_back(make_record(sys_, sector, level, apply_generator(sys_, G::A, base.state)));
    } else if (level == 0) {
      t.push_back(make_record(sys_, sector, 0, ground_state(sys_.n, sector)));
    } else {
      t.push_back(make_record(sys_, sector, level, apply_word(sys_, kRaise, t.back().state)));
    }
  }
  return t[index];
}

EigenstateRecord LadderTowers::get(Sector sector, int m) const {
  std::lock_guard lock(mutex_);
  return get_locked(sector, m);
}

Rational LadderTowers::lowering_sq(LoweringRelation relation, int m) const {
  std::lock_guard lock(mutex_);
  Sector source = Sector::PSI;
  Generator op = G::A;
  switch (relation) {
    case LoweringRelation::A_ON_PSI: source = Sector::PSI; break;
    case LoweringRelation::A_ON_PHI: source = Sector::PHI; break;
    case LoweringRelation::BDAG_ON_PSI_TILDE: source = Sector::PSI_TILDE; op = G::BDAG; break;
    case LoweringRelation::BDAG_ON_PHI_TILDE: source = Sector::PHI_TILDE; op = G::BDAG; break;
  }
  const auto& src = get_locked(source, m);
  const auto image = apply_generator(sys_, op, src.state);
  if (image.is_zero()) return 0;
  const auto ratio = exact_ratio(inner_product(image, image), src.norm_sq);
  if (!ratio || ratio->sqrt2_power != 0)
    throw std::logic_error("lowering coefficient is not an exact rational");
  return ratio->ratio;
}

LemmaReport verify_lemma1(const CoupledSusySystem& sys, int m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  LadderTowers towers(sys);
  LemmaReport report;
  report.n = sys.n;
  report.m_max = m_max;
  for (auto relation : {LoweringRelation::A_ON_PSI, LoweringRelation::A_ON_PHI,
                        LoweringRelation::BDAG_ON_PSI_TILDE, LoweringRelation::BDAG_ON_PHI_TILDE}) {
    const int m_lo = relation == LoweringRelation::BDAG_ON_PSI_TILDE ? 1 : 0;
    for (int m = m_lo; m <= m_max; ++m) {
      LemmaCheck c;
      c.relation = relation;
      c.m = m;
      c.computed_sq = towers.lowering_sq(relation, m);
      c.expected_sq = expected_lowering_sq(sys, relation, m);

      GaussPolyState image(sys.n);
      std::optional<EigenstateRecord> target;
      switch (relation) {
        case LoweringRelation::A_ON_PSI:
          image = apply_generator(sys, G::A, towers.get(Sector::PSI, m).state);
          if (m >= 1) target = towers.get(Sector::PSI_TILDE, m);
          break;
        case LoweringRelation::A_ON_PHI:
          image = apply_generator(sys, G::A, towers.get(Sector::PHI, m).state);
          target = towers.get(Sector::PHI_TILDE, m);
          break;
        case LoweringRelation::BDAG_ON_PSI_TILDE:
          image = apply_generator(sys, G::BDAG, towers.get(Sector::PSI_TILDE, m).state);
          target = towers.get(Sector::PSI, m - 1);
          break;
        case LoweringRelation::BDAG_ON_PHI_TILDE:
          image = apply_generator(sys, G::BDAG, towers.get(Sector::PHI_TILDE, m).state);
          if (m >= 1) target = towers.get(Sector::PHI, m - 1);
          break;
      }
      if (image.is_zero()) {
        c.proportional = c.expected_sq == 0;
      } else if (target) {
        const auto ratio = proportionality(image, target->state);
        c.proportional = ratio && ratio->ratio > 0;
      }
      c.pass = c.proportional && c.computed_sq == c.expected_sq;
      report.pass = report.pass && c.pass;
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

std::vector<std::vector<GammaVector>> gram_matrix(const std::vector<EigenstateRecord>& records) {
  const std::size_t size = records.size();
  std::vector<std::vector<GammaVector>> out;
  if (size == 0) return out;
  const int n = records.front().state.n();
  for (const auto& r : records)
    if (r.state.n() != n) throw FamilyMismatch("gram matrix of records from different families");
  out.assign(size, std::vector<GammaVector>(size, GammaVector(n)));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) {
      out[i][j] = inner_product(records[i].state, records[j].state);
      out[j][i] = out[i][j];
    }
  return out;
}

std::vector<double> sample_normalized(const EigenstateRecord& record, const std::vector<double>& xs) {
  const double norm = std::sqrt(to_double(record.norm_sq));
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(record.state.evaluate(x) / norm);
  return out;
}

}  // namespace csusy
