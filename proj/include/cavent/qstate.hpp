#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace cavent {

using complexd = std::complex<double>;

// Tolerance tiers, shared between the library and its test suites:
// 1e-12 for algebraic identities, 1e-9 for cross-path comparisons,
// 1e-7 for integrator-vs-closed-form agreement.
inline constexpr double kNormTol = 1e-9;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kLooseNormTol = 1e-6;

// A computed quantity broke a library contract mid-run (maps to CLI exit 2).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One product ket |atom1, atom2, photons>. Atom levels: 0 = excited, 1 = ground.
struct BasisKet {
  int atom1;
  int atom2;
  int photons;
};

// Sector with a fixed eigenvalue N of the excitation-number operator
// a'a + sum_i sigma+_i sigma-_i, which the rotating-wave interaction conserves.
// N = 1 carries the 3-dim basis {|e1,g2,0>, |g1,e2,0>, |g1,g2,1>};
// N >= 2 the 4-dim basis {|e1,e2,N-2>, |e1,g2,N-1>, |g1,e2,N-1>, |g1,g2,N>}.
// Basis ordering is fixed as listed; amplitude vectors follow it.
class ExcitationSubspace {
 public:
  explicit ExcitationSubspace(int excitations);

  int excitations() const { return n_; }
  int dim() const { return n_ == 1 ? 3 : 4; }
  int field_dim() const { return n_ == 1 ? 2 : 3; }
  int min_photons() const { return n_ == 1 ? 0 : n_ - 2; }
  std::vector<BasisKet> basis() const;

  friend bool operator==(const ExcitationSubspace&, const ExcitationSubspace&) = default;

 private:
  int n_;
};

// Normalized amplitude vector over the subspace basis, in basis order.
// Global phase is kept as constructed; nothing downstream strips it.
class PureState {
 public:
  PureState(ExcitationSubspace subspace, Eigen::VectorXcd amplitudes);

  // Escape hatch for integrator output, whose norm drift is a measured
  // diagnostic gated separately (kLooseNormTol). No norm check here.
  static PureState with_drift(ExcitationSubspace subspace, Eigen::VectorXcd amplitudes);

  const ExcitationSubspace& subspace() const { return subspace_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  complexd amplitude(int i) const { return amps_(i); }
  int dim() const { return static_cast<int>(amps_.size()); }
  double squared_norm() const { return amps_.squaredNorm(); }

 private:
  struct unchecked_t {};
  PureState(unchecked_t, ExcitationSubspace subspace, Eigen::VectorXcd amplitudes);

  ExcitationSubspace subspace_;
  Eigen::VectorXcd amps_;
};

// Sum of squared amplitude moduli of a raw vector.
double squared_norm(const Eigen::VectorXcd& amplitudes);

// Validated density operator: Hermitian within kHermitianTol, unit trace
// within kTraceTol, eigenvalues >= kEigenvalueFloor. Dimensions 2..6 occur
// (6 for an atom-field pair when the field block is a qutrit).
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  const Eigen::MatrixXcd& entries() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Eigen::MatrixXcd m_;
};

// The state everything here evolves from: unit amplitude on |e1,g2,N-1>.
PureState initial_state(ExcitationSubspace subspace);

// |psi><psi| as a validated density matrix. Rejects norm deviations
// beyond kLooseNormTol.
DensityMatrix pure_density(const PureState& state);

}  // namespace cavent
