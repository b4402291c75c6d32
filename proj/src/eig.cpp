#include "confed/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "confed/linearize.hpp"

namespace confed {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

void to_hessenberg(Matrix<double>& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (int i = k + 1; i < n; ++i) scale += std::abs(a(i, k));
    if (scale == 0.0) continue;
    double h = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = a(i, k) / scale;
      h += v[i] * v[i];
    }
    const double g = -sign_of(std::sqrt(h), v[k + 1]);
    h -= v[k + 1] * g;
    v[k + 1] -= g;
    // P = I - v v^T / h
    for (int j = k; j < n; ++j) {
      double f = 0.0;
      for (int i = k + 1; i < n; ++i) f += v[i] * a(i, j);
      f /= h;
      for (int i = k + 1; i < n; ++i) a(i, j) -= f * v[i];
    }
    for (int i = 0; i < n; ++i) {
      double f = 0.0;
      for (int j = k + 1; j < n; ++j) f += v[j] * a(i, j);
      f /= h;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * v[j];
    }
    a(k + 1, k) = scale * g;
    for (int i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

}  // namespace

EigResult hessenberg_qr(const Matrix<double>& m) {
  if (!m.square() || m.rows() == 0) throw std::invalid_argument("hessenberg_qr: need a non-empty square matrix");
  const int n = static_cast<int>(m.rows());
  Matrix<double> a = m;
  to_hessenberg(a);

  std::vector<double> wr(static_cast<std::size_t>(n)), wi(static_cast<std::size_t>(n));
  const double fro = frobenius_norm(m);
  const int max_total = 40 * n;
  int total = 0;
  bool ok = true;
  double t = 0.0;
  int nn = n - 1;
  while (nn >= 0 && ok) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = fro;
        if (std::abs(a(l, l - 1)) <= kEps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        double y = a(nn - 1, nn - 1);
        double w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          const double p = 0.5 * (y - x);
          const double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -z;
            wi[nn] = z;
          }
          nn -= 2;
        } else {
          if (total >= max_total) {
            ok = false;
            break;
          }
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift (fixed constants for reproducibility).
            t += x;
            for (int i = 0; i <= nn; ++i) a(i, i) -= x;
            const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          ++total;
          int mm = nn - 2;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          for (; mm >= l; --mm) {
            z = a(mm, mm);
            r = x - z;
            double s = y - z;
            p = (r * s - w) / a(mm + 1, mm) + a(mm, mm + 1);
            q = a(mm + 1, mm + 1) - z - r - s;
            r = a(mm + 2, mm + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (mm == l) break;
            const double u = std::abs(a(mm, mm - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(mm - 1, mm - 1)) + std::abs(z) + std::abs(a(mm + 1, mm + 1)));
            if (u <= kEps * v) break;
          }
          for (int i = mm + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != mm + 2) a(i, i - 3) = 0.0;
          }
          for (int k = mm; k <= nn - 1; ++k) {
            if (k != mm) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == mm) {
              if (l != mm) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = a(k, j) + q * a(k + 1, j);
              if (k != nn - 1) {
                p += r * a(k + 2, j);
                a(k + 2, j) -= p * z;
              }
              a(k + 1, j) -= p * y;
              a(k, j) -= p * x;
            }
            const int imax = std::min(nn, k + 3);
            for (int i = l; i <= imax; ++i) {
              p = x * a(i, k) + y * a(i, k + 1);
              if (k != nn - 1) {
                p += z * a(i, k + 2);
                a(i, k + 2) -= p * r;
              }
              a(i, k + 1) -= p * q;
              a(i, k) -= p;
            }
          }
        }
      }
    } while (ok && l < nn - 1);
  }

  EigResult res;
  res.iterations = total;
  res.converged = ok;
  if (!ok) {
    for (int i = 0; i <= nn; ++i) wr[i] = wi[i] = std::numeric_limits<double>::quiet_NaN();
  }
  res.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) res.values[i] = {wr[i], wi[i]};
  std::sort(res.values.begin(), res.values.end(), [](const cplx& p, const cplx& q) {
    return p.real() < q.real() || (p.real() == q.real() && p.imag() < q.imag());
  });
  return res;
}

std::vector<double> tridiagonal_eigen(std::vector<double> d, std::vector<double> off, std::vector<double>* first_row,
                                      bool* converged) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return {};
  if (static_cast<int>(off.size()) != n - 1) throw std::invalid_argument("tridiagonal_eigen: off-diagonal length");
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  std::copy(off.begin(), off.end(), e.begin());
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;
  bool ok = true;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) {
          ok = false;
          break;
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
    if (!ok) break;
  }
  if (converged) *converged = ok;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) vals[k] = d[order[k]];
  if (first_row) {
    first_row->resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) (*first_row)[k] = z[order[k]];
  }
  return vals;
}

std::vector<double> sym_eigenvalues(const Matrix<double>& m) {
  if (!m.square()) throw std::invalid_argument("sym_eigenvalues: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return {};
  Matrix<double> a = m;
  // Householder tridiagonalization; symmetric two-sided update.
  std::vector<double> v(static_cast<std::size_t>(n)), pv(static_cast<std::size_t>(n));
  for (int k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (int i = k + 1; i < n; ++i) scale += std::abs(a(i, k));
    if (scale == 0.0) continue;
    double h = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = a(i, k) / scale;
      h += v[i] * v[i];
    }
    const double g = -sign_of(std::sqrt(h), v[k + 1]);
    h -= v[k + 1] * g;
    v[k + 1] -= g;
    // A <- P A P with P = I - v v^T / h, restricted to the trailing block.
    double vpv = 0.0;
    for (int i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      pv[i] = s / h;
      vpv += v[i] * pv[i];
    }
    const double kk = vpv / (2.0 * h);
    for (int i = k + 1; i < n; ++i) pv[i] -= kk * v[i];
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) -= v[i] * pv[j] + pv[i] * v[j];
    a(k + 1, k) = a(k, k + 1) = scale * g;
    for (int i = k + 2; i < n; ++i) a(i, k) = a(k, i) = 0.0;
  }
  std::vector<double> diag(static_cast<std::size_t>(n)), off(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  for (int i = 0; i + 1 < n; ++i) off[i] = a(i + 1, i);
  return tridiagonal_eigen(std::move(diag), std::move(off), nullptr);
}

Quadrature golub_welsch(std::span<const RecurrenceTriple> rec, int m, double mu0) {
  if (m < 1) throw std::invalid_argument("golub_welsch: m must be positive");
  if (static_cast<int>(rec.size()) < m + 1) throw std::invalid_argument("golub_welsch: recurrence too short");
  std::vector<double> diag(static_cast<std::size_t>(m)), off(static_cast<std::size_t>(m - 1));
  for (int j = 1; j <= m; ++j) diag[j - 1] = -rec[j].beta / rec[j].alpha;
  for (int j = 1; j < m; ++j) off[j - 1] = std::sqrt(rec[j + 1].gamma / (rec[j].alpha * rec[j + 1].alpha));
  Quadrature q;
  std::vector<double> z;
  q.nodes = tridiagonal_eigen(std::move(diag), std::move(off), &z, &q.converged);
  q.weights.resize(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) q.weights[s] = mu0 * z[s] * z[s];
  return q;
}

std::vector<RecurrenceTriple> jacobi_recurrence(double a, double b, int m) {
  std::vector<RecurrenceTriple> rec(static_cast<std::size_t>(m) + 1);
  for (int k = 1; k <= m; ++k) rec[k] = jacobi_triple(a, b, k);
  return rec;
}

double jacobi_mu0(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
}

EigResult roots_of_poly(const BasisSpec& spec, std::span<const double> c) {
  return hessenberg_qr(assemble_dense(build_working(spec, c)));
}

}  // namespace confed
