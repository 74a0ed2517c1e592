#pragma once

#include <string>
#include <vector>

namespace mdikey {

enum class BellState { PsiMinus = 0, PsiPlus = 1 };
inline constexpr int kBellStates = 2;

enum class Basis { Z = 0, X = 1 };

const char* to_string(BellState k);
const char* to_string(Basis b);

// Dense table of per-intensity-pair values, row = Alice level, col = Bob level.
class PairGrid {
 public:
  PairGrid() = default;
  PairGrid(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, fill) {}

  double& operator()(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double sum() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> v_;
};

// Intensity levels of one party, strictly decreasing; index 0 is the signal
// setting, the rest are decoys.
struct IntensityLevels {
  std::vector<double> levels;

  int count() const { return static_cast<int>(levels.size()); }
  double signal() const { return levels.front(); }
  void validate() const;  // strictly decreasing, finite, >= 0
};

// All data one Bell state contributes to parameter estimation: sifted counts
// per intensity pair and basis, the selection probabilities that produced
// them, and the key/test split of the signal-signal Z cell.
struct ObservationBlock {
  BellState k = BellState::PsiMinus;
  IntensityLevels alice, bob;
  PairGrid z_count;        // |Z_k^{a,b}|
  PairGrid x_count;        // |X_k^{a,b}|
  PairGrid x_error_count;  // |E_k^{a,b}| (X-basis errors)
  PairGrid p_z, p_x;       // joint selection probabilities p_{a,b,basis}
  double n_pulses = 0.0;   // total pulses N sent by each party
  double qber = 0.0;       // observed E_k^{a_s,b_s} on the test sample
  double n_key = 0.0;      // n_k: code-string size drawn from the signal cell
  double n_test = 0.0;     // R_k: remaining signal-cell bits used for the QBER test

  double signal_cell() const { return z_count(0, 0); }
  void validate() const;
};

// Protocol-side configuration shared by both Bell states.
struct ProtocolConfig {
  IntensityLevels alice, bob;
  std::vector<double> alice_p_z, alice_p_x;  // joint p_{a,alpha} per level
  std::vector<double> bob_p_z, bob_p_x;
  double key_fraction = 0.9;  // n_k / |Z_k^{a_s,b_s}|
  double qber_tol = 0.11;     // E_tol
  double e1_tol = 0.5;        // e_tol

  PairGrid joint_probs(Basis basis) const;
  void validate() const;
};

}  // namespace mdikey
