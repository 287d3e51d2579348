#include "admdiag/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace admdiag {

namespace {

int checked_two_j(double j) {
  const double two_j = 2.0 * j;
  const double rounded = std::round(two_j);
  if (!(two_j > 0.0) || std::abs(two_j - rounded) > 1e-9) {
    throw std::invalid_argument("pseudospin length j must be a positive half-integer, got j=" +
                                std::to_string(j));
  }
  return static_cast<int>(rounded);
}

}  // namespace

int ModelParams::two_j() const { return checked_two_j(j); }

void ModelParams::validate() const {
  checked_two_j(j);
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (g1 < 0.0 || g2 < 0.0) throw std::invalid_argument("couplings g1, g2 must be non-negative");
  if (!auto_cutoff() && n_max < 0) throw std::invalid_argument("n_max must be >= 0 or auto");
}

ModelParams ModelParams::with_cutoff(int cutoff) const {
  ModelParams out = *this;
  out.n_max = cutoff;
  return out;
}

std::string ModelParams::describe() const {
  std::ostringstream os;
  os << "omega=" << omega << " omega0=" << omega0 << " g1=" << g1 << " g2=" << g2 << " j=" << j
     << " n_max=";
  if (auto_cutoff()) {
    os << "auto";
  } else {
    os << n_max;
  }
  return os.str();
}

ModelParams symmetry_partner(const ModelParams& p) {
  ModelParams out = p;
  out.omega0 = -p.omega0;
  out.g1 = p.g2;
  out.g2 = p.g1;
  return out;
}

int state_parity(const BasisState& s, int two_j) {
  // n + m + j = n + (2m + 2j)/2; the sum is a non-negative integer.
  const int k = s.n + (s.twice_m + two_j) / 2;
  return (k % 2 == 0) ? +1 : -1;
}

SectorBasis::SectorBasis(ModelParams params, int parity, std::vector<BasisState> states)
    : params_(std::move(params)), parity_(parity), states_(std::move(states)) {
  const int two_j = params_.two_j();
  lookup_.assign(static_cast<size_t>(params_.n_max + 1) * (two_j + 1), -1);
  for (int i = 0; i < dimension(); ++i) {
    const BasisState& s = states_[static_cast<size_t>(i)];
    lookup_[static_cast<size_t>(s.n) * (two_j + 1) + (s.twice_m + two_j) / 2] = i;
  }
}

int SectorBasis::index_of(int n, int twice_m) const {
  const int two_j = params_.two_j();
  if (n < 0 || n > params_.n_max || twice_m < -two_j || twice_m > two_j) return -1;
  return lookup_[static_cast<size_t>(n) * (two_j + 1) + (twice_m + two_j) / 2];
}

bool SectorBasis::same_layout(const SectorBasis& other) const {
  return parity_ == other.parity_ && params_.n_max == other.params_.n_max &&
         params_.two_j() == other.params_.two_j() && states_ == other.states_;
}

SectorBasis enumerate_basis(const ModelParams& params, int parity) {
  params.validate();
  if (params.auto_cutoff()) {
    throw std::invalid_argument("enumerate_basis requires an explicit n_max");
  }
  if (parity != +1 && parity != -1) {
    throw std::invalid_argument("parity must be +1 or -1");
  }
  const int two_j = params.two_j();
  std::vector<BasisState> states;
  states.reserve(static_cast<size_t>(params.n_max + 1) * (two_j + 1) / 2 + 1);
  for (int n = 0; n <= params.n_max; ++n) {
    for (int twice_m = -two_j; twice_m <= two_j; twice_m += 2) {
      const BasisState s{n, twice_m};
      if (state_parity(s, two_j) == parity) states.push_back(s);
    }
  }
  return SectorBasis(params, parity, std::move(states));
}

std::vector<BasisState> enumerate_full_basis(const ModelParams& params) {
  params.validate();
  if (params.auto_cutoff()) {
    throw std::invalid_argument("enumerate_full_basis requires an explicit n_max");
  }
  const int two_j = params.two_j();
  std::vector<BasisState> states;
  states.reserve(static_cast<size_t>(params.n_max + 1) * (two_j + 1));
  for (int n = 0; n <= params.n_max; ++n) {
    for (int twice_m = -two_j; twice_m <= two_j; twice_m += 2) {
      states.push_back(BasisState{n, twice_m});
    }
  }
  return states;
}

namespace {

// Fills H for an arbitrary ordered state list with an index function.
// Couplings reach (n+1, m-1) via a†J- and (n+1, m+1) via a†J+; each
// unordered pair is visited exactly once from its lower-n member, and both
// triangles receive the same value.
template <typename IndexOf>
void fill_hamiltonian(const ModelParams& p, const std::vector<BasisState>& states,
                      const IndexOf& index_of, Eigen::MatrixXd& h) {
  const int two_j = p.two_j();
  const double jj1 = 0.25 * two_j * (two_j + 2);  // j(j+1)
  const double scale1 = p.g1 / std::sqrt(static_cast<double>(two_j));
  const double scale2 = p.g2 / std::sqrt(static_cast<double>(two_j));

  const int dim = static_cast<int>(states.size());
  h.setZero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const BasisState& s = states[static_cast<size_t>(i)];
    h(i, i) = p.omega * s.n + p.omega0 * 0.5 * s.twice_m;

    // a†J-  (co-rotating): (n, m) -> (n+1, m-1)
    const int down = index_of(s.n + 1, s.twice_m - 2);
    if (down >= 0 && scale1 != 0.0) {
      const double jm = jj1 - 0.25 * s.twice_m * (s.twice_m - 2);  // j(j+1) - m(m-1)
      const double amp = scale1 * std::sqrt(static_cast<double>(s.n + 1)) * std::sqrt(jm);
      h(down, i) = amp;
      h(i, down) = amp;
    }
    // a†J+  (counter-rotating): (n, m) -> (n+1, m+1)
    const int up = index_of(s.n + 1, s.twice_m + 2);
    if (up >= 0 && scale2 != 0.0) {
      const double jp = jj1 - 0.25 * s.twice_m * (s.twice_m + 2);  // j(j+1) - m(m+1)
      const double amp = scale2 * std::sqrt(static_cast<double>(s.n + 1)) * std::sqrt(jp);
      h(up, i) = amp;
      h(i, up) = amp;
    }
  }
}

}  // namespace

OperatorMatrix build_hamiltonian(const SectorBasis& basis) {
  OperatorMatrix out;
  out.basis = basis;
  fill_hamiltonian(
      basis.params(), basis.states(),
      [&basis](int n, int twice_m) { return basis.index_of(n, twice_m); }, out.entries);
  return out;
}

Eigen::MatrixXd build_hamiltonian_full(const ModelParams& params) {
  const std::vector<BasisState> states = enumerate_full_basis(params);
  const int two_j = params.two_j();
  const int span = two_j + 1;
  auto index_of = [&](int n, int twice_m) -> int {
    if (n < 0 || n > params.n_max || twice_m < -two_j || twice_m > two_j) return -1;
    return n * span + (twice_m + two_j) / 2;
  };
  Eigen::MatrixXd h;
  fill_hamiltonian(params, states, index_of, h);
  return h;
}

std::string Observable::label() const {
  switch (kind) {
    case Kind::Number:
      return "number";
    case Kind::Jz:
      return "jz";
    case Kind::NumberPlusShift: {
      std::ostringstream os;
      os << "number+" << shift;
      return os.str();
    }
  }
  throw std::invalid_argument("unsupported observable tag");
}

OperatorMatrix observable_matrix(const SectorBasis& basis, const Observable& which) {
  OperatorMatrix out;
  out.basis = basis;
  const int dim = basis.dimension();
  out.entries.setZero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const BasisState& s = basis.state(i);
    switch (which.kind) {
      case Observable::Kind::Number:
        out.entries(i, i) = s.n;
        break;
      case Observable::Kind::Jz:
        out.entries(i, i) = 0.5 * s.twice_m;
        break;
      case Observable::Kind::NumberPlusShift:
        out.entries(i, i) = s.n + which.shift;
        break;
      default:
        throw std::invalid_argument("unsupported observable tag");
    }
  }
  return out;
}

}  // namespace admdiag
