#include "oracles.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace qortho::oracle {

std::vector<double> companion_real_roots(const QPoly& p) {
  const int d = p.degree();
  std::vector<double> out;
  if (d < 1) return out;
  const double lead = p.leading().to_double();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(i).to_double() / lead;
  const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(c, false).eigenvalues();
  for (const auto& z : ev) {
    if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z))) out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

double poch(double a, double q, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= 1.0 - a * std::pow(q, i);
  return p;
}

}  // namespace

double series_sum(int n, const std::vector<double>& nums, const std::vector<double>& dens, double q, double arg) {
  const int r = 1 + static_cast<int>(nums.size());
  const int s = static_cast<int>(dens.size());
  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    double term = poch(std::pow(q, -n), q, k) / poch(q, q, k);
    for (double a : nums) term *= poch(a, q, k);
    for (double b : dens) term /= poch(b, q, k);
    const double corr = ((k % 2) ? -1.0 : 1.0) * std::pow(q, k * (k - 1) / 2.0);
    term *= std::pow(corr, 1 + s - r) * std::pow(arg, k);
    total += term;
  }
  return total;
}

double little_jacobi_recurrence(int n, double a, double b, double q, double z) {
  // Normalized p_n(z) = 2phi1(q^-n, abq^{n+1}; aq; q, qz) satisfies
  //   -z p_n = A_n p_{n+1} - (A_n + C_n) p_n + C_n p_{n-1}.
  const auto A = [&](int m) {
    return std::pow(q, m) * (1 - a * std::pow(q, m + 1)) * (1 - a * b * std::pow(q, m + 1)) /
           ((1 - a * b * std::pow(q, 2 * m + 1)) * (1 - a * b * std::pow(q, 2 * m + 2)));
  };
  const auto C = [&](int m) {
    return a * std::pow(q, m) * (1 - std::pow(q, m)) * (1 - b * std::pow(q, m)) /
           ((1 - a * b * std::pow(q, 2 * m)) * (1 - a * b * std::pow(q, 2 * m + 1)));
  };
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 - z / A(0);  // C_0 = 0
  for (int m = 1; m < n; ++m) {
    const double next = ((A(m) + C(m) - z) * cur - C(m) * prev) / A(m);
    prev = cur;
    cur = next;
  }
  return cur;
}

double asc_recurrence(int n, double a, double q, double z) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = z - (1 + a);
  for (int m = 1; m < n; ++m) {
    const double qm = std::pow(q, m);
    const double next = (z - (1 + a) * qm) * cur + a * std::pow(q, m - 1) * (1 - qm) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double rel_diff(double x, double y) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) / scale;
}

}  // namespace qortho::oracle
