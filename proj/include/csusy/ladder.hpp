#pragma once

#include <map>
#include <mutex>
#include <string_view>
#include <utility>
#include <vector>

#include "csusy/gamma_vector.hpp"
#include "csusy/gauss_poly_state.hpp"
#include "csusy/system.hpp"

namespace csusy {

/// The four eigenstate towers. PSI grows from ker a, PHI from ker b†a minus
/// ker a; the tilde towers are their images under a (eigenstates of aa†).
enum class Sector { PSI, PHI, PSI_TILDE, PHI_TILDE };

std::string_view name(Sector s);
Sector parse_sector(std::string_view text);
bool is_tilde(Sector s);

/// Exponent residue mod 2n shared by every state of the tower:
/// PSI 0, PHI 2n-1, PSI_TILDE n, PHI_TILDE n-1.
int sector_residue(int n, Sector s);

/// Lowest level of the tower (1 for PSI_TILDE, since a annihilates psi_0).
int first_level(Sector s);

/// m(delta-gamma) for PSI and PSI_TILDE, m(delta-gamma)+delta for PHI and
/// PHI_TILDE (eigenvalues of a†a, resp. aa†).
Rational tower_eigenvalue(const CoupledSusySystem& sys, Sector s, int m);

struct EigenstateRecord {
  Sector sector = Sector::PSI;
  int m = 0;
  /// Unnormalized exact state; normalization happens only at numeric export.
  GaussPolyState state;
  GammaVector norm_sq;
  Rational eigenvalue;
};

/// PSI_0 = e^{-g} and PHI_0 = x^(2n-1) e^{-g}. Both are checked on
/// construction (a PSI_0 = 0; b†a PHI_0 = 0 with a PHI_0 != 0); throws
/// DomainError for broken systems and std::logic_error if a check fails.
std::pair<EigenstateRecord, EigenstateRecord> ground_states(const CoupledSusySystem& sys);

/// Untilded: (a†b)^m applied to the ground state. Tilde: a applied to the
/// untilded record of the same level. Throws DomainError for PSI_TILDE with
/// m = 0 and for negative m.
EigenstateRecord eigenstate(const CoupledSusySystem& sys, Sector sector, int m);

/// Records for levels first_level(sector)..m_max, built incrementally.
std::vector<EigenstateRecord> tower(const CoupledSusySystem& sys, Sector sector, int m_max);

/// a†a state == eigenvalue * state (aa† for tilde sectors), exactly.
bool satisfies_eigen_equation(const CoupledSusySystem& sys, const EigenstateRecord& record);

enum class Branch { Even, Odd };

/// Closed-form eigenfunction of the x^n family:
///   even: e^{g} (d/dx x^(2-2n) d/dx)^m e^{-x^(2n)/n}
///   odd:  e^{g} (d/dx x^(2-2n) d/dx)^m (x^(2n-1) e^{-x^(2n)/n})
/// with g = x^(2n)/(2n). Intermediate polynomials carry the weight
/// e^{-x^(2n)/n}; the outer factor e^{g} turns the result into an ordinary
/// GaussPolyState with weight e^{-g}. For n = 1 these are the Hermite
/// functions h_{2m} and h_{2m+1} up to normalization.
GaussPolyState closed_form_eigenstate(int n, Branch branch, int m);

/// The four single-generator lowering relations between the towers:
///   1: a psi_m     = lambda psi~_m        lambda^2 = m(delta-gamma)
///   2: a phi_m     = lambda phi~_m        lambda^2 = (delta-gamma)(m + delta/(delta-gamma))
///   3: b† psi~_m   = lambda psi_(m-1)     lambda^2 = (delta-gamma)(m - delta/(delta-gamma))
///   4: b† phi~_m   = lambda phi_(m-1)     lambda^2 = m(delta-gamma)
/// for normalized tower states.
enum class LoweringRelation { A_ON_PSI = 1, A_ON_PHI = 2, BDAG_ON_PSI_TILDE = 3, BDAG_ON_PHI_TILDE = 4 };

Rational expected_lowering_sq(const CoupledSusySystem& sys, LoweringRelation relation, int m);

/// Memoized towers for one system. Lookups and extensions are guarded by a
/// mutex; every value returned is the same as a fresh eigenstate() call.
class LadderTowers {
 public:
  explicit LadderTowers(CoupledSusySystem sys);

  const CoupledSusySystem& system() const { return sys_; }
  EigenstateRecord get(Sector sector, int m) const;

  /// Exact lambda^2 for a lowering relation, from the exact norms
  /// ||op s||^2 / ||s||^2 of the unnormalized source state s.
  Rational lowering_sq(LoweringRelation relation, int m) const;

 private:
  const EigenstateRecord& get_locked(Sector sector, int m) const;

  CoupledSusySystem sys_;
  mutable std::mutex mutex_;
  mutable std::map<Sector, std::vector<EigenstateRecord>> towers_;
};

struct LemmaCheck {
  LoweringRelation relation = LoweringRelation::A_ON_PSI;
  int m = 0;
  Rational computed_sq;
  Rational expected_sq;
  /// op * source is an exact positive multiple of the target state (or zero
  /// when expected_sq is zero).
  bool proportional = false;
  bool pass = false;
};

struct LemmaReport {
  int n = 0;
  int m_max = 0;
  std::vector<LemmaCheck> checks;
  bool pass = true;
};

/// All four relations for m = 0..m_max (relation 3 from m = 1).
LemmaReport verify_lemma1(const CoupledSusySystem& sys, int m_max);

/// Exact pairwise inner products. Throws FamilyMismatch if records mix n.
std::vector<std::vector<GammaVector>> gram_matrix(const std::vector<EigenstateRecord>& records);

/// Normalized point values of a record on a grid.
std::vector<double> sample_normalized(const EigenstateRecord& record, const std::vector<double>& xs);

}  // namespace csusy
