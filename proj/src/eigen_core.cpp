#include "eigen_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace modspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// rp' = c rp − s rq, rq' = s rp + c rq.
inline void rotate_pair(double* __restrict rp, double* __restrict rq,
                        std::size_t n, double c, double s) {
  for (std::size_t k = 0; k < n; ++k) {
    const double g = rp[k];
    const double h = rq[k];
    rp[k] = c * g - s * h;
    rq[k] = s * g + c * h;
  }
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols())
    throw Error(ErrorKind::InvalidInput,
                "symmetric matrix must be square with dimension >= 1");
  const std::size_t n = m_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!std::isfinite(m_(i, j)))
        throw Error(ErrorKind::InvalidInput, "matrix has a non-finite entry");
      if (m_(i, j) != m_(j, i)) {
        std::ostringstream msg;
        msg << "matrix is not symmetric at (" << i << ", " << j << ")";
        throw Error(ErrorKind::InvalidInput, msg.str());
      }
    }
  }
}

void canonicalize_sign(std::span<double> v) {
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::fabs(v[i]) > best_abs) {
      best_abs = std::fabs(v[i]);
      best = i;
    }
  }
  if (!v.empty() && v[best] < 0.0)
    for (double& x : v) x = -x;
}

EigenDecomposition JacobiEigenSolver::solve(const SymmetricMatrix& m) const {
  const std::size_t n = m.size();
  DenseMatrix a = m.dense();
  // Rows of vt are the eigenvectors, so rotations touch contiguous memory.
  DenseMatrix vt = DenseMatrix::identity(n);

  Vector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);

  double frob = 0.0;
  for (double x : a.data()) frob += x * x;
  frob = std::sqrt(frob);

  // Round-robin (tournament) ordering: each round is a set of disjoint pairs,
  // and the n − 1 rounds of a sweep visit every pair exactly once. Disjoint
  // rotations commute, so a round is applied as one pass over rows followed
  // by one pass over columns, both walking memory contiguously.
  const std::size_t players = n + (n % 2);
  std::vector<std::size_t> seat(players);
  std::iota(seat.begin(), seat.end(), 0);

  struct Rotation {
    std::size_t p, q;
    double c, s, t, apq;
  };
  std::vector<Rotation> round;
  round.reserve(players / 2);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> partner(n, kNone);

  bool converged = n == 1 || frob == 0.0;
  double off_norm = 0.0;
  for (int sweep = 0; sweep < max_sweeps_ && !converged; ++sweep) {
    double off_sq = 0.0;
    double off_abs = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      auto r = a.row(p);
      for (std::size_t q = p + 1; q < n; ++q) {
        off_sq += r[q] * r[q];
        off_abs += std::fabs(r[q]);
      }
    }
    off_norm = std::sqrt(off_sq);
    if (off_norm <= 1e-15 * frob || off_sq == 0.0) {
      converged = true;
      break;
    }
    const double threshold =
        sweep < 3 ? 0.2 * off_abs / static_cast<double>(n * n) : 0.0;

    std::iota(seat.begin(), seat.end(), 0);
    for (std::size_t r = 0; r + 1 < players; ++r) {
      round.clear();
      for (std::size_t i = 0; i < players / 2; ++i) {
        std::size_t p = seat[i];
        std::size_t q = seat[players - 1 - i];
        if (p >= n || q >= n) continue;
        if (p > q) std::swap(p, q);
        const double apq = a(p, q);
        const double g = 100.0 * std::fabs(apq);
        if (sweep > 3 && std::fabs(diag[p]) + g == std::fabs(diag[p]) &&
            std::fabs(diag[q]) + g == std::fabs(diag[q])) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        if (std::fabs(apq) <= threshold || apq == 0.0) continue;

        const double h = diag[q] - diag[p];
        double t;
        if (std::fabs(h) + g == std::fabs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        round.push_back({p, q, c, t * c, t, apq});
      }
      // Next seating: seat 0 stays, the rest rotate by one.
      std::rotate(seat.begin() + 1, seat.end() - 1, seat.end());
      if (round.empty()) continue;

      // Row k is rotated with its partner (Jᵀ A), then both rows receive every
      // column rotation of the round (· J) while they are still in cache.
      std::fill(partner.begin(), partner.end(), kNone);
      for (const Rotation& rot : round) {
        partner[rot.p] = rot.q;
        partner[rot.q] = rot.p;
        rotate_pair(vt.row(rot.p).data(), vt.row(rot.q).data(), n, rot.c, rot.s);
      }
      auto rotate_columns = [&](double* row) {
        for (const Rotation& rot : round) {
          const double g = row[rot.p];
          const double h = row[rot.q];
          row[rot.p] = rot.c * g - rot.s * h;
          row[rot.q] = rot.s * g + rot.c * h;
        }
      };
      for (const Rotation& rot : round) {
        double* rp = a.row(rot.p).data();
        double* rq = a.row(rot.q).data();
        rotate_pair(rp, rq, n, rot.c, rot.s);
        rotate_columns(rp);
        rotate_columns(rq);
      }
      for (std::size_t k = 0; k < n; ++k)
        if (partner[k] == kNone) rotate_columns(a.row(k).data());
      for (const Rotation& rot : round) {
        diag[rot.p] -= rot.t * rot.apq;
        diag[rot.q] += rot.t * rot.apq;
        a(rot.p, rot.q) = a(rot.q, rot.p) = 0.0;
        a(rot.p, rot.p) = diag[rot.p];
        a(rot.q, rot.q) = diag[rot.q];
      }
    }
  }

  if (!converged) {
    std::ostringstream msg;
    msg << "Jacobi eigensolver did not converge after " << max_sweeps_
        << " sweeps (off-diagonal norm " << off_norm << ")";
    throw ConvergenceError(off_norm, 0.0, 0.0, msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return diag[x] > diag[y];
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n, n);
  Vector column(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.eigenvalues[c] = diag[src];
    auto r = vt.row(src);
    std::copy(r.begin(), r.end(), column.begin());
    canonicalize_sign(column);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, c) = column[i];
  }
  return out;
}

EigenDecomposition eig_sym(const SymmetricMatrix& m) {
  return JacobiEigenSolver{}.solve(m);
}

EigenDecomposition eig_sym(const SymmetricMatrix& m, const EigenSolver& solver) {
  return solver.solve(m);
}

Dpr1System::Dpr1System(Vector d, double rho, Vector y)
    : d_(std::move(d)), rho_(rho), y_(std::move(y)) {
  if (d_.empty() || d_.size() != y_.size())
    throw Error(ErrorKind::InvalidInput,
                "DPR1 system needs nonempty d and y of equal length");
  if (!std::isfinite(rho_))
    throw Error(ErrorKind::InvalidInput, "DPR1 rho is not finite");
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (!std::isfinite(d_[i]) || !std::isfinite(y_[i]))
      throw Error(ErrorKind::InvalidInput, "DPR1 system has non-finite entries");
  const double ny = norm2(y_);
  if (std::fabs(ny - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "DPR1 vector y must be a unit vector (norm " << ny << ")";
    throw Error(ErrorKind::InvalidInput, msg.str());
  }
}

DenseMatrix Dpr1System::assemble() const {
  const std::size_t n = size();
  DenseMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = rho_ * (y_[i] * y_[j]);
    c(i, i) += d_[i];
  }
  return c;
}

double secular_eval(const Dpr1System& sys, double lambda) {
  const auto& d = sys.d();
  const auto& y = sys.y();
  double sum = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == lambda) {
      std::ostringstream msg;
      msg << "secular function evaluated at pole d[" << i << "] = " << d[i];
      throw PoleError(i, msg.str());
    }
    sum += y[i] * y[i] / (d[i] - lambda);
  }
  return 1.0 + sys.rho() * sum;
}

namespace {

struct ActiveSystem {
  Vector d;  // strictly increasing
  Vector z;  // nonzero
  double rho;
};

struct ShiftedValue {
  double f;
  double slope;  // df/dλ
  double scale;  // 1 + |rho| Σ z²/|δ|
};

// Evaluates the secular function at λ = origin + tau with δ_i formed as
// (d_i − origin) − tau, which keeps relative accuracy next to the origin pole.
ShiftedValue eval_shifted(const ActiveSystem& s, double origin, double tau) {
  double sum = 0.0, slope = 0.0, abs_sum = 0.0;
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    const double delta = (s.d[i] - origin) - tau;
    const double w = s.z[i] * s.z[i] / delta;
    sum += w;
    abs_sum += std::fabs(w);
    slope += w / delta;
  }
  return {1.0 + s.rho * sum, s.rho * slope, 1.0 + std::fabs(s.rho) * abs_sum};
}

struct RootResult {
  double root;
  int iterations;
  double residual;
};

// Root of the secular function in the interval (lo, hi) measured relative to
// `origin`, which is one of the endpoints. `lo_closed`/`hi_closed` mark an
// endpoint that is a finite bound rather than a pole.
RootResult find_root(const ActiveSystem& s, double lo, double hi,
                     double scale) {
  const bool decreasing = s.rho < 0.0;
  const double mid = 0.5 * (lo + hi);

  // Pick the pole nearest to the root as origin.
  const bool lo_is_pole = std::binary_search(s.d.begin(), s.d.end(), lo);
  const bool hi_is_pole = std::binary_search(s.d.begin(), s.d.end(), hi);
  double origin;
  if (lo_is_pole && hi_is_pole) {
    const double f_mid = eval_shifted(s, lo, mid - lo).f;
    const bool root_right = (f_mid > 0.0) == decreasing;
    origin = root_right ? hi : lo;
  } else {
    origin = lo_is_pole ? lo : hi;
  }

  double tlo = lo - origin;
  double thi = hi - origin;
  double tau = 0.5 * (tlo + thi);
  auto tol = [&](double t) {
    return std::fmax(kRootTolerance * std::fabs(origin + t), 4.0 * kEps * scale);
  };
  const double residual_bound = 32.0 * static_cast<double>(s.d.size() + 1) * kEps;

  for (int it = 1; it <= kMaxRootIterations; ++it) {
    const ShiftedValue v = eval_shifted(s, origin, tau);
    if (v.f == 0.0) return {origin + tau, it, 0.0};
    if ((v.f > 0.0) == decreasing)
      tlo = tau;
    else
      thi = tau;

    double next = tau - v.f / v.slope;
    if (!(next > tlo && next < thi) || !std::isfinite(next))
      next = 0.5 * (tlo + thi);
    // A short Newton step next to a pole says nothing about the root, so it
    // only counts when f is also at rounding level.
    const bool short_step = std::fabs(next - tau) <= tol(next);
    const bool at_rounding = std::fabs(v.f) <= residual_bound * v.scale;
    const bool done = thi - tlo <= tol(tau) || (short_step && at_rounding);
    if (short_step && !done) next = 0.5 * (tlo + thi);
    tau = next;
    if (done) {
      const ShiftedValue r = eval_shifted(s, origin, tau);
      return {origin + tau, it, std::fabs(r.f) / r.scale};
    }
  }
  std::ostringstream msg;
  msg << "secular root finder did not converge in (" << origin + tlo << ", "
      << origin + thi << ")";
  throw ConvergenceError(thi - tlo, origin + tlo, origin + thi, msg.str());
}

}  // namespace

SecularRootReport dpr1_eigenvalues(const Dpr1System& sys) {
  if (sys.rho() == 0.0)
    throw Error(ErrorKind::Degenerate, "DPR1 system has rho = 0");

  const std::size_t n = sys.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sys.d()[a] < sys.d()[b];
  });

  const double dmax = max_abs(sys.d());
  const double scale = std::fmax(dmax, std::fabs(sys.rho()));
  const double repeat_tol = 8.0 * kEps * dmax;

  struct Entry {
    double root;
    std::pair<double, double> bracket;
    int iterations;
    double residual;
    bool deflated;
  };
  std::vector<Entry> entries;
  entries.reserve(n);

  ActiveSystem active{{}, {}, sys.rho()};
  for (std::size_t k = 0; k < n; ++k) {
    const double dk = sys.d()[order[k]];
    const double zk = sys.y()[order[k]];
    if (std::fabs(zk) <= kDeflationTolerance) {
      entries.push_back({dk, {dk, dk}, 0, 0.0, true});
      continue;
    }
    if (!active.d.empty() && dk - active.d.back() <= repeat_tol) {
      // A plane rotation in the repeated eigenspace moves this component
      // into the kept one and leaves dk as an eigenvalue.
      active.z.back() = std::hypot(active.z.back(), zk);
      entries.push_back({dk, {dk, dk}, 0, 0.0, true});
      continue;
    }
    active.d.push_back(dk);
    active.z.push_back(zk);
  }

  const std::size_t k_active = active.d.size();
  double zsq = 0.0;
  for (double z : active.z) zsq += z * z;

  for (std::size_t j = 0; j < k_active; ++j) {
    double lo, hi;
    if (sys.rho() < 0.0) {
      lo = j == 0 ? active.d[0] + sys.rho() * zsq : active.d[j - 1];
      hi = active.d[j];
    } else {
      lo = active.d[j];
      hi = j + 1 < k_active ? active.d[j + 1] : active.d[j] + sys.rho() * zsq;
    }
    if (k_active == 1) {
      const double root = active.d[0] + sys.rho() * zsq;
      entries.push_back({root, {std::fmin(lo, hi), std::fmax(lo, hi)}, 0, 0.0, false});
      continue;
    }
    const RootResult r = find_root(active, lo, hi, scale);
    entries.push_back({r.root, {lo, hi}, r.iterations, r.residual, false});
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.root < b.root; });

  SecularRootReport report;
  for (const Entry& e : entries) {
    report.roots.push_back(e.root);
    report.brackets.push_back(e.bracket);
    report.iterations.push_back(e.iterations);
    report.residuals.push_back(e.residual);
    report.deflated.push_back(e.deflated);
  }
  return report;
}

Vector dpr1_eigenvector(const Dpr1System& sys, double lambda_tilde) {
  const auto& d = sys.d();
  const double tol = kPoleTolerance * std::fmax(1.0, max_abs(d));
  Vector x(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double delta = d[i] - lambda_tilde;
    if (std::fabs(delta) <= tol) {
      std::ostringstream msg;
      msg << "eigenvalue " << lambda_tilde << " lies on pole d[" << i
          << "]; use the deflated eigenvector e_" << i;
      throw PoleError(i, msg.str());
    }
    x[i] = sys.y()[i] / delta;
  }
  const double nx = norm2(x);
  if (nx == 0.0)
    throw Error(ErrorKind::Degenerate, "DPR1 eigenvector formula gave zero");
  for (double& v : x) v /= nx;
  return x;
}

}  // namespace modspec
