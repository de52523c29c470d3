#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace vhlab {

inline constexpr double kEndpointClamp = 1e-14;

enum class EntropyKind { Boltzmann, Bose, Fermi, Power };

std::string to_string(EntropyKind k);
EntropyKind entropy_kind_from_string(const std::string& s);

// Admissible entropy functional S_eff(m) = T*S_kind(m) + mu*m on [0, M].
// Construction rejects parameter sets with S_eff'(M-) > 0 or a bad Power
// exponent; all evaluations use the convention 0*log(0) = 0.
class EntropyModel {
 public:
  EntropyModel(EntropyKind kind, double T, double mu, double M = 1.0,
               double p = 0.5, double a = 0.5);

  static EntropyModel boltzmann(double T = 1.0, double mu = 0.0, double M = 1.0);
  static EntropyModel bose(double T = 1.0, double mu = -1.0, double M = 1.0);
  static EntropyModel fermi(double T = 1.0, double mu = 0.0, double M = 1.0);
  static EntropyModel power(double p, double a, double T = 1.0, double mu = 0.0,
                            double M = 1.0);

  EntropyKind kind() const { return kind_; }
  double temperature() const { return T_; }
  double chemical_potential() const { return mu_; }
  double cap() const { return M_; }
  double power_p() const { return p_; }
  double power_a() const { return a_; }

  // S_eff and derivatives; m must lie in [0, M] up to the endpoint clamp.
  double s(double m) const;
  double sprime(double m) const;
  double ssecond(double m) const;
  double sthird(double m) const;

  // y-value of S_eff' at the spectrum cap; -inf for Fermi at M = 1.
  double floor_y() const { return floor_; }

  // f = (S_eff')^{-1}. Throws std::range_error below floor_y() unless the
  // C2 extension is requested; the extension blends to 0 on [floor-1, floor].
  double sprime_inv(double y, bool extend = false) const;

  // H_S(y, y0) >= 0, +inf allowed. Endpoint y0 handled by the one-sided
  // tangent: +inf when the one-sided derivative is infinite and y != y0.
  double rel_entropy(double y, double y0) const;

  // p > 1 - 2/d constraint for the Power catalog member.
  bool admissible_for_dimension(int d) const;

  // Berezin-Lieb constant: 1 for Boltzmann/Fermi/Power, 1 + M for Bose.
  double berezin_lieb_constant() const;

 private:
  EntropyKind kind_;
  double T_, mu_, M_, p_, a_;
  double floor_;

  double s_kind(double m) const;
  double sprime_kind(double m) const;
};

// delta(rho, rho0): tangent-line remainder of rho^{1+2/d} for d >= 2,
// (rho - rho0)^2 for d = 1. Convex in rho, zero at rho = rho0.
double delta_fn(double rho, double rho0, int d);

// (H_{S_b}, H_{S_0}) for the raw bosonic and Boltzmann entropies on [0, 1];
// throws std::logic_error unless H_{S_0}/2 <= H_{S_b} <= H_{S_0}.
std::pair<double, double> scalar_bridge_check(double y, double y0);

// Reference spatial density (2pi)^{-d} int f(|v|^2) dv of the homogeneous
// state, by quadrature over the radial profile.
double reference_density(const EntropyModel& model, int d);

// Finite-density admissibility integral int m |S''|(S'_+)^{d/2-1} dm over the
// region where S' > 0; equals int_0^inf f(s) s^{d/2-1} ds by substitution.
double admissibility_integral(const EntropyModel& model, int d);

}  // namespace vhlab
