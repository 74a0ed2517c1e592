#include "mdikey/protocol.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mdikey {

const char* to_string(BellState k) {
  return k == BellState::PsiMinus ? "psi_minus" : "psi_plus";
}

const char* to_string(Basis b) { return b == Basis::Z ? "Z" : "X"; }

double PairGrid::sum() const { return std::accumulate(v_.begin(), v_.end(), 0.0); }

void IntensityLevels::validate() const {
  if (levels.size() < 2) throw std::invalid_argument("need at least two intensity levels");
  for (size_t i = 0; i < levels.size(); ++i) {
    if (!std::isfinite(levels[i]) || levels[i] < 0.0)
      throw std::invalid_argument("intensity levels must be finite and >= 0");
    if (i > 0 && !(levels[i] < levels[i - 1]))
      throw std::invalid_argument("intensity levels must be strictly decreasing");
  }
}

void ObservationBlock::validate() const {
  alice.validate();
  bob.validate();
  const int na = alice.count(), nb = bob.count();
  auto check_shape = [&](const PairGrid& g, const char* what) {
    if (g.rows() != na || g.cols() != nb)
      throw std::invalid_argument(std::string("grid shape mismatch: ") + what);
  };
  check_shape(z_count, "z_count");
  check_shape(x_count, "x_count");
  check_shape(x_error_count, "x_error_count");
  check_shape(p_z, "p_z");
  check_shape(p_x, "p_x");
  double prob_total = 0.0;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      if (z_count(i, j) < 0.0 || x_count(i, j) < 0.0 || x_error_count(i, j) < 0.0)
        throw std::invalid_argument("negative count");
      if (x_error_count(i, j) > x_count(i, j))
        throw std::invalid_argument("x_error_count exceeds x_count");
      prob_total += p_z(i, j) + p_x(i, j);
    }
  if (prob_total > 1.0 + 1e-9)
    throw std::invalid_argument("selection probabilities sum beyond 1");
  if (n_key < 0.0 || n_test < 0.0 || n_key + n_test > signal_cell() + 1e-9)
    throw std::invalid_argument("n_k + R_k exceeds the signal-cell count");
}

PairGrid ProtocolConfig::joint_probs(Basis basis) const {
  const auto& pa = basis == Basis::Z ? alice_p_z : alice_p_x;
  const auto& pb = basis == Basis::Z ? bob_p_z : bob_p_x;
  PairGrid g(alice.count(), bob.count());
  for (int i = 0; i < alice.count(); ++i)
    for (int j = 0; j < bob.count(); ++j) g(i, j) = pa[i] * pb[j];
  return g;
}

void ProtocolConfig::validate() const {
  alice.validate();
  bob.validate();
  auto check_side = [](const IntensityLevels& lv, const std::vector<double>& pz,
                       const std::vector<double>& px, const char* side) {
    if (static_cast<int>(pz.size()) != lv.count() ||
        static_cast<int>(px.size()) != lv.count())
      throw std::invalid_argument(std::string("probability vector size mismatch: ") + side);
    double total = 0.0;
    for (double v : pz) {
      if (v < 0.0) throw std::invalid_argument("negative selection probability");
      total += v;
    }
    for (double v : px) {
      if (v < 0.0) throw std::invalid_argument("negative selection probability");
      total += v;
    }
    if (total > 1.0 + 1e-9 || total <= 0.0)
      throw std::invalid_argument(std::string("selection probabilities of ") + side +
                                  " must sum to (0, 1]");
  };
  check_side(alice, alice_p_z, alice_p_x, "alice");
  check_side(bob, bob_p_z, bob_p_x, "bob");
  if (!(key_fraction > 0.0 && key_fraction < 1.0))
    throw std::invalid_argument("key_fraction must be in (0,1)");
  if (!(qber_tol >= 0.0 && qber_tol <= 0.5) || !(e1_tol >= 0.0 && e1_tol <= 1.0))
    throw std::invalid_argument("tolerance out of range");
}

}  // namespace mdikey
