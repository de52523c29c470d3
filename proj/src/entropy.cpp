#include "vhlab/entropy.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

namespace vhlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double xlogx(double m) { return m > 0.0 ? m * std::log(m) : 0.0; }

double clamp_domain(double m, double M, const char* what) {
  if (m < -kEndpointClamp || m > M + kEndpointClamp)
    throw std::domain_error(std::string(what) + ": argument outside [0, M]");
  return std::clamp(m, 0.0, M);
}

// quintic Hermite on [0,1]: h(0)=h'(0)=h''(0)=0, h(1)=v, h'(1)=d1, h''(1)=d2
double quintic_blend(double t, double v, double d1, double d2) {
  const double t3 = t * t * t;
  const double b0 = t3 * (10.0 - 15.0 * t + 6.0 * t * t);
  const double b1 = t3 * (-4.0 + 7.0 * t - 3.0 * t * t);
  const double b2 = 0.5 * t3 * (1.0 - 2.0 * t + t * t);
  return v * b0 + d1 * b1 + d2 * b2;
}

}  // namespace

std::string to_string(EntropyKind k) {
  switch (k) {
    case EntropyKind::Boltzmann: return "boltzmann";
    case EntropyKind::Bose: return "bose";
    case EntropyKind::Fermi: return "fermi";
    case EntropyKind::Power: return "power";
  }
  return "?";
}

EntropyKind entropy_kind_from_string(const std::string& s) {
  if (s == "boltzmann") return EntropyKind::Boltzmann;
  if (s == "bose") return EntropyKind::Bose;
  if (s == "fermi") return EntropyKind::Fermi;
  if (s == "power") return EntropyKind::Power;
  throw std::invalid_argument("unknown entropy kind: " + s);
}

EntropyModel::EntropyModel(EntropyKind kind, double T, double mu, double M,
                           double p, double a)
    : kind_(kind), T_(T), mu_(mu), M_(M), p_(p), a_(a) {
  if (!(T > 0.0)) throw std::invalid_argument("EntropyModel: T must be > 0");
  if (!(M > 0.0)) throw std::invalid_argument("EntropyModel: M must be > 0");
  if (kind == EntropyKind::Fermi && M > 1.0)
    throw std::invalid_argument("EntropyModel: Fermi cap cannot exceed 1");
  if (kind == EntropyKind::Power) {
    if (!(p > 0.0 && p < 1.0))
      throw std::invalid_argument("EntropyModel: power p must lie in (0, 1)");
    if (!(a >= p))
      throw std::invalid_argument("EntropyModel: power a must satisfy a >= p");
  }
  // S_eff'(M-), evaluated analytically; Fermi at M = 1 degenerates to -inf.
  if (kind == EntropyKind::Fermi && M_ == 1.0) {
    floor_ = -kInf;
  } else {
    floor_ = T_ * sprime_kind(M_) + mu_;
  }
  if (floor_ > 1e-12)
    throw std::invalid_argument(
        "EntropyModel: S_eff'(M-) > 0; decrease mu or the temperature shift");
}

EntropyModel EntropyModel::boltzmann(double T, double mu, double M) {
  return EntropyModel(EntropyKind::Boltzmann, T, mu, M);
}
EntropyModel EntropyModel::bose(double T, double mu, double M) {
  return EntropyModel(EntropyKind::Bose, T, mu, M);
}
EntropyModel EntropyModel::fermi(double T, double mu, double M) {
  return EntropyModel(EntropyKind::Fermi, T, mu, M);
}
EntropyModel EntropyModel::power(double p, double a, double T, double mu, double M) {
  return EntropyModel(EntropyKind::Power, T, mu, M, p, a);
}

double EntropyModel::s_kind(double m) const {
  switch (kind_) {
    case EntropyKind::Boltzmann: return -xlogx(m) + m;
    case EntropyKind::Bose: return -xlogx(m) + (1.0 + m) * std::log1p(m);
    case EntropyKind::Fermi: return -xlogx(m) - xlogx(1.0 - m);
    case EntropyKind::Power: return std::pow(m, p_) - a_ * m;
  }
  return 0.0;
}

double EntropyModel::sprime_kind(double m) const {
  switch (kind_) {
    case EntropyKind::Boltzmann: return -std::log(m);
    case EntropyKind::Bose: return std::log1p(m) - std::log(m);
    case EntropyKind::Fermi: return std::log(1.0 - m) - std::log(m);
    case EntropyKind::Power: return p_ * std::pow(m, p_ - 1.0) - a_;
  }
  return 0.0;
}

double EntropyModel::s(double m) const {
  m = clamp_domain(m, M_, "EntropyModel::s");
  return T_ * s_kind(m) + mu_ * m;
}

double EntropyModel::sprime(double m) const {
  m = clamp_domain(m, M_, "EntropyModel::sprime");
  if (m == 0.0) return kInf;
  if (m == 1.0 && kind_ == EntropyKind::Fermi) return -kInf;
  return T_ * sprime_kind(m) + mu_;
}

double EntropyModel::ssecond(double m) const {
  switch (kind_) {
    case EntropyKind::Boltzmann: return -T_ / m;
    case EntropyKind::Bose: return T_ * (1.0 / (1.0 + m) - 1.0 / m);
    case EntropyKind::Fermi: return T_ * (-1.0 / (1.0 - m) - 1.0 / m);
    case EntropyKind::Power: return T_ * p_ * (p_ - 1.0) * std::pow(m, p_ - 2.0);
  }
  return 0.0;
}

double EntropyModel::sthird(double m) const {
  switch (kind_) {
    case EntropyKind::Boltzmann: return T_ / (m * m);
    case EntropyKind::Bose:
      return T_ * (1.0 / (m * m) - 1.0 / ((1.0 + m) * (1.0 + m)));
    case EntropyKind::Fermi:
      return T_ * (1.0 / (m * m) - 1.0 / ((1.0 - m) * (1.0 - m)));
    case EntropyKind::Power:
      return T_ * p_ * (p_ - 1.0) * (p_ - 2.0) * std::pow(m, p_ - 3.0);
  }
  return 0.0;
}

double EntropyModel::sprime_inv(double y, bool extend) const {
  if (y >= floor_) {
    const double z = (y - mu_) / T_;  // S_kind'(f) = z
    switch (kind_) {
      case EntropyKind::Boltzmann: return std::min(std::exp(-z), M_);
      case EntropyKind::Bose: return std::min(1.0 / std::expm1(z), M_);
      case EntropyKind::Fermi: return std::min(1.0 / (std::exp(z) + 1.0), M_);
      case EntropyKind::Power:
        return std::min(std::pow(p_ / (z + a_), 1.0 / (1.0 - p_)), M_);
    }
  }
  if (!extend)
    throw std::range_error("EntropyModel::sprime_inv: y below S_eff'(M-)");
  // C2 continuation onto [floor-1, floor], vanishing below; mirrors the
  // modified g of the quantization construction.
  if (y <= floor_ - 1.0) return 0.0;
  const double d2s = ssecond(M_);
  const double fp = 1.0 / d2s;                      // f'(floor-)
  const double fpp = -sthird(M_) * fp * fp * fp;    // f''(floor-)
  return quintic_blend(y - (floor_ - 1.0), M_, fp, fpp);
}

double EntropyModel::rel_entropy(double y, double y0) const {
  y = clamp_domain(y, M_, "EntropyModel::rel_entropy");
  y0 = clamp_domain(y0, M_, "EntropyModel::rel_entropy");
  if (y == y0) return 0.0;
  if (y0 == 0.0) return kInf;  // S'(0+) = +inf for every catalog member
  if (y0 == M_ && std::isinf(floor_)) return kInf;
  const double sp0 = y0 == M_ ? floor_ : sprime(y0);
  const double h = sp0 * (y - y0) - s(y) + s(y0);
  return std::max(h, 0.0);
}

bool EntropyModel::admissible_for_dimension(int d) const {
  if (kind_ != EntropyKind::Power) return true;
  return p_ > 1.0 - 2.0 / static_cast<double>(d);
}

double EntropyModel::berezin_lieb_constant() const {
  return kind_ == EntropyKind::Bose ? 1.0 + M_ : 1.0;
}

double delta_fn(double rho, double rho0, int d) {
  if (d == 1) {
    const double r = rho - rho0;
    return r * r;
  }
  const double e = 1.0 + 2.0 / static_cast<double>(d);
  const double val = std::pow(rho, e) - std::pow(rho0, e) -
                     e * std::pow(rho0, 2.0 / static_cast<double>(d)) * (rho - rho0);
  return std::max(val, 0.0);
}

std::pair<double, double> scalar_bridge_check(double y, double y0) {
  static const EntropyModel s0 = EntropyModel::boltzmann(1.0, 0.0, 1.0);
  static const EntropyModel sb = EntropyModel::bose(1.0, -std::log(2.0), 1.0);
  // mu cancels inside H_S, so the shifted bosonic model evaluates H_{S_b}.
  const double hb = sb.rel_entropy(y, y0);
  const double h0 = s0.rel_entropy(y, y0);
  const bool inf_pair = std::isinf(hb) && std::isinf(h0);
  if (!inf_pair && !(h0 / 2.0 - 1e-12 <= hb && hb <= h0 + 1e-12))
    throw std::logic_error("scalar_bridge_check: H_{S0}/2 <= H_{Sb} <= H_{S0} violated at y=" +
                           std::to_string(y) + ", y0=" + std::to_string(y0));
  return {hb, h0};
}

double reference_density(const EntropyModel& model, int d) {
  const double two_pi = 2.0 * M_PI;
  const double surface = d == 1 ? 2.0 : (d == 2 ? two_pi : 4.0 * M_PI);
  double integral;
  if (model.kind() == EntropyKind::Power) {
    // f(r^2) = (pT / (r^2 + aT - mu))^q with q = 1/(1-p); the radial moment
    // has the Beta closed form, which quadrature for algebraic tails lacks.
    const double q = 1.0 / (1.0 - model.power_p());
    const double c = model.power_a() * model.temperature() - model.chemical_potential();
    const double scale = std::pow(model.power_p() * model.temperature(), q);
    integral = 0.5 * scale * std::pow(c, 0.5 * d - q) *
               std::exp(std::lgamma(0.5 * d) + std::lgamma(q - 0.5 * d) - std::lgamma(q));
  } else {
    boost::math::quadrature::exp_sinh<double> integrator;
    auto radial = [&](double r) {
      const double f = model.sprime_inv(r * r);
      return f * std::pow(r, d - 1);
    };
    integral = integrator.integrate(radial, 1e-12);
  }
  return surface * integral / std::pow(two_pi, d);
}

double admissibility_integral(const EntropyModel& model, int d) {
  // upper limit: point where S_eff' crosses 0 (or the cap)
  double m_plus = model.cap();
  if (model.floor_y() < 0.0) m_plus = model.sprime_inv(0.0);
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto integrand = [&](double m) {
    const double sp = model.sprime(m);
    if (!(sp > 0.0)) return 0.0;
    return m * (-model.ssecond(m)) * std::pow(sp, 0.5 * d - 1.0);
  };
  return integrator.integrate(integrand, 0.0, m_plus);
}

}  // namespace vhlab
