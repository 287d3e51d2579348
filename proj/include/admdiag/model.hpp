#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace admdiag {

/// Physical couplings of the anisotropic Dicke model plus the bosonic
/// truncation setting.  A single cavity mode of frequency `omega` couples to
/// a collective pseudospin of length `j` (N = 2j two-level atoms with level
/// splitting `omega0`); `g1` scales the co-rotating and `g2` the
/// counter-rotating interaction term.
struct ModelParams {
  static constexpr int kAutoCutoff = -1;

  double omega = 1.0;
  double omega0 = 1.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double j = 0.5;
  int n_max = kAutoCutoff;  ///< Fock cutoff; kAutoCutoff defers to the convergence protocol.

  /// 2j as an exact integer. Throws if 2j is not a positive integer.
  int two_j() const;
  bool auto_cutoff() const { return n_max == kAutoCutoff; }

  /// Validates all invariants (2j positive integer, omega > 0, g1,g2 >= 0,
  /// n_max >= 0 when explicit). Throws std::invalid_argument.
  void validate() const;

  ModelParams with_cutoff(int cutoff) const;
  std::string describe() const;
};

/// The image of `p` under the spin rotation Jy -> -Jy, Jz -> -Jz:
/// (omega, -omega0, g2, g1, j, n_max).  The full truncated spectra of a
/// parameter set and its partner coincide exactly, which makes this a strong
/// end-to-end check of the matrix construction.
ModelParams symmetry_partner(const ModelParams& p);

/// One product state |n> (x) |j, m>.  m is stored doubled so half-integer
/// arithmetic stays exact.
struct BasisState {
  int n = 0;        ///< boson occupation, eigenvalue of a†a
  int twice_m = 0;  ///< 2m, m the Jz eigenvalue

  double m() const { return 0.5 * twice_m; }
  bool operator==(const BasisState&) const = default;
};

/// Parity eigenvalue (-1)^(n + m + j) of a product state; always +1 or -1.
int state_parity(const BasisState& s, int two_j);

/// Ordered basis of one parity sector.  Ordering is canonical (ascending n,
/// then ascending m) so matrices and file outputs are reproducible.
class SectorBasis {
 public:
  SectorBasis() = default;
  SectorBasis(ModelParams params, int parity, std::vector<BasisState> states);

  const ModelParams& params() const { return params_; }
  int parity() const { return parity_; }
  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& state(int i) const { return states_[static_cast<size_t>(i)]; }
  int dimension() const { return static_cast<int>(states_.size()); }

  /// Index of |n, m> in this sector, or -1 if the state is outside the
  /// truncated sector (wrong parity, n outside [0, n_max], |2m| > 2j).
  int index_of(int n, int twice_m) const;

  bool same_layout(const SectorBasis& other) const;

 private:
  ModelParams params_;
  int parity_ = +1;
  std::vector<BasisState> states_;
  std::vector<int> lookup_;  // (n_max+1) x (two_j+1) table of sector indices
};

/// Enumerates the truncated basis of the requested parity sector (+1 or -1).
/// Requires an explicit n_max.
SectorBasis enumerate_basis(const ModelParams& params, int parity);

/// Both-parity basis in the same canonical order, used by the block-structure
/// and symmetry tests.
std::vector<BasisState> enumerate_full_basis(const ModelParams& params);

/// Dense real-symmetric operator on a sector basis.
struct OperatorMatrix {
  SectorBasis basis;
  Eigen::MatrixXd entries;

  int dimension() const { return static_cast<int>(entries.rows()); }
};

/// Hamiltonian matrix on a sector basis.  Diagonal entries are
/// omega*n + omega0*m; the co- and counter-rotating couplings follow the
/// boson and spin ladder rules scaled by g1/sqrt(2j) and g2/sqrt(2j).
/// Ladder terms that would leave the truncated Fock range are dropped.
/// Both triangles are filled from one rule, so symmetry is exact.
OperatorMatrix build_hamiltonian(const SectorBasis& basis);

/// Hamiltonian on the full (both-parity) canonical basis; exposed for tests
/// of the parity block structure.
Eigen::MatrixXd build_hamiltonian_full(const ModelParams& params);

/// Diagonal observables used by the diagnostics.
struct Observable {
  enum class Kind { Number, Jz, NumberPlusShift };

  Kind kind = Kind::Number;
  double shift = 0.0;

  static Observable number() { return {Kind::Number, 0.0}; }
  static Observable jz() { return {Kind::Jz, 0.0}; }
  static Observable number_plus_shift(double c = 100.0) { return {Kind::NumberPlusShift, c}; }

  std::string label() const;
};

/// Matrix of a†a, Jz or a†a + c on the given sector basis (all diagonal in
/// the product basis).
OperatorMatrix observable_matrix(const SectorBasis& basis, const Observable& which);

}  // namespace admdiag
