#ifndef MUDEF_ENTROPY_ENERGY_HPP
#define MUDEF_ENTROPY_ENERGY_HPP

#include <utility>
#include <vector>

#include "mudef/mu_core.hpp"

namespace mudef {

enum class Parity { even, odd };

struct EntropyValue {
  int n;
  double mu;
  double value;  // nats
};

struct EnergyValue {
  int n;
  double mu;
  double value;  // > 0
};

struct SharpnessPoint {
  int n;        // sequence index (basis index is 2n or 2n+1)
  double c;
  double mu;
  double gap;        // E - c S at that basis index
  double predictor;  // (1-c) 2n + c (mu+1/2) log(mu+n+1/2 or +3/2)
};

/// Entropy of the even basis monomial xi_{2n}.
EntropyValue entropy_xi_even(int n, MuParameter mu);

/// Entropy of the odd basis monomial xi_{2n+1}. Can be negative.
EntropyValue entropy_xi_odd(int n, MuParameter mu);

/// Unified entropy of xi_n, dispatching on parity.
EntropyValue entropy_xi(int n, MuParameter mu);

/// Undeformed entropy S_n = n psi(n+1) - log n!.
EntropyValue entropy_classical(int n);

/// Entropy of the monomial t^n in the ground-state space.
EntropyValue entropy_monomial_ground(int n, MuParameter mu);

/// Entropy of the normalized basis element zeta_1.
EntropyValue entropy_zeta1(MuParameter mu);

/// Entropy change under the transform on zeta_1: -(1/2)(psi(mu+3/2) + gamma).
double entropy_gap_zeta1(MuParameter mu);

/// Both sides of the half-integer deformation identity
///   S_{n+m} + S_n - S_m = S_{2n}^{1/2+m} + sum_{k=0}^{n-1} m/(m+k+1),
/// each evaluated independently.
std::pair<double, double> entropy_relation_half_plus_m(int n, int m);

/// Energy of xi_n (parity dispatch, log-space gamma ratios).
EnergyValue energy_xi(int n, MuParameter mu);

/// Gap sequence {E - c S} for one parity, indices 0..n_max, with the
/// asymptotic linear/log predictor attached to each point.
std::vector<SharpnessPoint> sharpness_sequence(Parity parity, double c, MuParameter mu,
                                               int n_max);

/// Desk-scale verdict for boundedness of a gap sequence: bounded means the
/// maximum is attained before the end and the tail decreases over its last
/// decade; unbounded means the growth from index n_max/100 to n_max exceeds
/// half the predictor's increment.
enum class SharpnessVerdict { bounded, unbounded, inconclusive };
SharpnessVerdict classify_sharpness(const std::vector<SharpnessPoint>& seq);

/// mu -> infinity behavior over a mu grid: for even basis index, the
/// difference S_index^mu - S_{index/2}; for odd, S_index^mu itself.
std::vector<double> entropy_limit_mu_infinity(int index, const std::vector<double>& mu_grid);

/// Both sides of s_n^mu = (Gamma(n+mu+1/2)/Gamma(mu+1/2)) (S_{2n}^mu - S_n).
std::pair<double, double> s_vs_S_relation(int n, MuParameter mu);

}  // namespace mudef

#endif
