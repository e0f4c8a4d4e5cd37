#include "extremal/cm_lattice.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>

#include "extremal/error.hpp"

namespace extremal {

namespace {

std::complex<double> root_of_unity(int p, long long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % p) / p;
  return std::polar(1.0, angle);
}

Eigen::MatrixXd to_real(const ZMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<double>(m(i, j));
  return out;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Symmetry residual and smallest eigenvalue of Im tau.
std::pair<double, double> siegel_quality(const Eigen::MatrixXcd& tau) {
  const double sym = max_abs(tau - tau.transpose());
  const Eigen::MatrixXd im = tau.imag();
  const Eigen::MatrixXd im_sym = 0.5 * (im + im.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(im_sym, Eigen::EigenvaluesOnly);
  return {sym, solver.eigenvalues().minCoeff()};
}

}  // namespace

CmEmbedding embed(const PrimeContext& ctx, const CmType& set) {
  const int g = ctx.g(), p = ctx.p();
  Eigen::MatrixXcd images(g, p - 1);
  for (int row = 0; row < g; ++row) {
    const Residue j = set.members()[row];
    for (int k = 0; k < p - 1; ++k)
      images(row, k) = root_of_unity(p, static_cast<long long>(j) * k);
  }
  return {ctx, set, std::move(images)};
}

bool PolarizationForm::positive() const {
  for (double v : alpha_imag)
    if (!(v > 0)) return false;
  return true;
}

int odd_coefficient(const PrimeContext& ctx, const std::vector<int>& c, long long k) {
  const Residue r = ctx.reduce(k);
  if (r == 0) return 0;
  if (r <= ctx.g()) return c.at(r - 1);
  return -c.at(ctx.p() - r - 1);
}

int riemann_form_value(const PrimeContext& ctx, const std::vector<int>& c, int a, int b) {
  return odd_coefficient(ctx, c, static_cast<long long>(b) - a);
}

PolarizationForm make_polarization(const PrimeContext& ctx, const CmType& set,
                                   const std::vector<int>& c) {
  const int p = ctx.p();
  if (static_cast<int>(c.size()) != ctx.g())
    throw Error(ErrorKind::InvalidInput, "coefficient vector must have g entries");
  PolarizationForm pol;
  pol.c = c;
  pol.form = ZMatrix(p - 1, p - 1);
  for (int a = 0; a < p - 1; ++a)
    for (int b = 0; b < p - 1; ++b) pol.form(a, b) = riemann_form_value(ctx, c, a, b);
  pol.pfaffian = pfaffian(pol.form);
  for (Residue j : set.members()) {
    double s = 0;
    for (int k = 1; k < p; ++k)
      s += odd_coefficient(ctx, c, k) *
           std::sin(2.0 * std::numbers::pi * static_cast<double>((static_cast<long long>(j) * k) % p) / p);
    pol.alpha_imag.push_back(s / p);
  }
  return pol;
}

PolarizationForm find_polarization(const PrimeContext& ctx, const CmType& set, int bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidInput, "search bound must be at least 1");
  const int g = ctx.g(), p = ctx.p();

  // sines[row][k-1] = 2 sin(2 pi j k / p) / p, pairing c_k with c_{p-k} = -c_k
  std::vector<std::vector<double>> sines(g, std::vector<double>(g));
  for (int row = 0; row < g; ++row)
    for (int k = 1; k <= g; ++k)
      sines[row][k - 1] =
          2.0 * std::sin(2.0 * std::numbers::pi *
                         static_cast<double>((static_cast<long long>(set.members()[row]) * k) % p) / p) /
          p;

  // reach[row][k] = bound * sum_{k' >= k} |sines[row][k']|, the most the
  // unassigned coefficients can still add to row's imaginary part.
  std::vector<std::vector<double>> reach(g, std::vector<double>(g + 1, 0.0));
  for (int row = 0; row < g; ++row)
    for (int k = g - 1; k >= 0; --k) reach[row][k] = reach[row][k + 1] + bound * std::abs(sines[row][k]);

  // Depth-first over c_1, c_2, ... in increasing order visits the box in
  // lexicographic order; a branch is cut once some row cannot turn positive.
  // The exact form decides at the leaves; the floating sums only prune.
  constexpr double kSlack = 1e-9;
  std::vector<int> c(g, 0);
  std::vector<std::vector<double>> partial(g + 1, std::vector<double>(g, 0.0));
  std::optional<PolarizationForm> found;
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == g) {
      PolarizationForm pol = make_polarization(ctx, set, c);
      if (pol.principal() && pol.positive()) {
        found = std::move(pol);
        return true;
      }
      return false;
    }
    for (int v = -bound; v <= bound; ++v) {
      c[depth] = v;
      bool feasible = true;
      for (int row = 0; row < g; ++row) {
        partial[depth + 1][row] = partial[depth][row] + v * sines[row][depth];
        if (partial[depth + 1][row] + reach[row][depth + 1] <= -kSlack) feasible = false;
      }
      if (feasible && self(self, depth + 1)) return true;
    }
    return false;
  };
  if (search(search, 0)) return std::move(*found);
  throw Error(ErrorKind::PolarizationExhausted,
              "no polarization in box [-" + std::to_string(bound) + ", " + std::to_string(bound) +
                  "]^" + std::to_string(g));
}

ZMatrix cyclotomic_companion(const PrimeContext& ctx) {
  const std::size_t n = static_cast<std::size_t>(ctx.p() - 1);
  ZMatrix m(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) m(k + 1, k) = 1;
  for (std::size_t r = 0; r < n; ++r) m(r, n - 1) = -1;  // xi^{p-1} = -(1 + ... + xi^{p-2})
  return m;
}

namespace {

// Period point of the basis V = (V1 | V2): tau = (Phi V2)^{-1} (Phi V1).
Eigen::MatrixXcd tau_of(const Eigen::MatrixXcd& images, const ZMatrix& v) {
  const auto g = images.rows();
  const Eigen::MatrixXcd w = images * to_real(v).cast<std::complex<double>>();
  return w.rightCols(g).partialPivLu().solve(w.leftCols(g));
}

// Integral A with rows spanning Z^g such that A Y A^T is LLL-reduced.
Eigen::MatrixXd lll_gram(const Eigen::MatrixXd& y) {
  const auto n = y.rows();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  auto gram_schmidt = [&](Eigen::MatrixXd& mu, Eigen::VectorXd& norms) {
    const Eigen::MatrixXd gram = a * y * a.transpose();
    mu = Eigen::MatrixXd::Zero(n, n);
    norms = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        double s = gram(i, j);
        for (Eigen::Index k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * norms(k);
        mu(i, j) = s / norms(j);
      }
      double s = gram(i, i);
      for (Eigen::Index k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * norms(k);
      norms(i) = s;
    }
  };
  Eigen::MatrixXd mu;
  Eigen::VectorXd norms;
  Eigen::Index k = 1;
  for (int guard = 0; k < n && guard < 100000; ++guard) {
    gram_schmidt(mu, norms);
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      const double r = std::round(mu(k, j));
      if (r != 0) {
        a.row(k) -= r * a.row(j);
        gram_schmidt(mu, norms);
      }
    }
    if (norms(k) >= (0.99 - mu(k, k - 1) * mu(k, k - 1)) * norms(k - 1)) {
      ++k;
    } else {
      a.row(k).swap(a.row(k - 1));
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }
  return a;
}

ZMatrix to_integer(const Eigen::MatrixXd& m) {
  ZMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = static_cast<long long>(std::llround(m(i, j)));
  return out;
}

// Block matrix [[a, b], [c, d]] of g x g integer blocks.
ZMatrix blocks(const ZMatrix& a, const ZMatrix& b, const ZMatrix& c, const ZMatrix& d) {
  const std::size_t g = a.rows();
  ZMatrix out(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      out(i, j) = a(i, j);
      out(i, g + j) = b(i, j);
      out(g + i, j) = c(i, j);
      out(g + i, g + j) = d(i, j);
    }
  return out;
}

// Siegel reduction. A symplectic gamma acting on tau as
// (A tau + B)(C tau + D)^{-1} is realized by the basis change V -> V gamma^T,
// so every step stays exact on the lattice side and tau is recomputed from
// the embedding after each one.
ZMatrix siegel_reduce(const Eigen::MatrixXcd& images, ZMatrix v) {
  const auto g = static_cast<std::size_t>(images.rows());
  const auto n = static_cast<Eigen::Index>(g);
  const ZMatrix id = ZMatrix::identity(g), zero(g, g);
  for (int round = 0; round < 200; ++round) {
    bool changed = false;

    // Im tau -> A Im tau A^T with A LLL-reducing it.
    Eigen::MatrixXcd tau = tau_of(images, v);
    const Eigen::MatrixXd y = 0.5 * (tau.imag() + tau.imag().transpose());
    const Eigen::MatrixXd a = lll_gram(y);
    if (!a.isIdentity()) {
      const ZMatrix a_int = to_integer(a);
      const ZMatrix a_inv_t = to_integer(a.inverse().transpose());
      if (a_int * a_inv_t.transpose() != id)
        throw Error(ErrorKind::InternalConsistency, "LLL transform is not unimodular");
      v = v * blocks(a_int, zero, zero, a_inv_t).transpose();
      tau = tau_of(images, v);
      changed = true;
    }

    // Re tau -> Re tau + B, entries into [-1/2, 1/2].
    ZMatrix b(g, g);
    bool shift = false;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) {
        const double re = 0.5 * (tau(i, j).real() + tau(j, i).real());
        const long long r = std::llround(re);
        if (r != 0) {
          b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = -r;
          b(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -r;
          shift = true;
        }
      }
    if (shift) {
      v = v * blocks(id, b, zero, id).transpose();
      tau = tau_of(images, v);
      changed = true;
    }

    // Invert the first coordinate when |tau_11| < 1.
    if (std::abs(tau(0, 0)) < 1.0 - 1e-12) {
      ZMatrix a0 = id, b0(g, g), c0(g, g);
      a0(0, 0) = 0;
      b0(0, 0) = -1;
      c0(0, 0) = 1;
      v = v * blocks(a0, b0, c0, a0).transpose();
      changed = true;
    }
    if (!changed) break;
  }
  return v;
}

ZMatrix block_swap(std::size_t g) {
  ZMatrix swap(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    swap(i, g + i) = 1;
    swap(g + i, i) = 1;
  }
  return swap;
}

}  // namespace

PeriodData period_matrix(const CmEmbedding& embedding, const PolarizationForm& polarization) {
  const PrimeContext& ctx = embedding.ctx;
  const auto g = static_cast<std::size_t>(ctx.g());
  if (!polarization.principal())
    throw Error(ErrorKind::InvalidInput, "polarization is not principal");
  // Positivity is judged against the embedding's own CM type.
  if (!make_polarization(ctx, embedding.cm_type, polarization.c).positive())
    throw Error(ErrorKind::InternalConsistency, "Riemann relations violated");

  const ZMatrix j_std = ZMatrix::standard_symplectic(g);
  const ZMatrix initial = symplectic_basis(polarization.form);
  const ZMatrix swap = block_swap(g);

  for (bool swapped : {false, true}) {
    // V lists the basis in the order whose second block is inverted.
    const ZMatrix v0 = swapped ? initial * swap : initial;
    const auto [sym0, eig0] = siegel_quality(tau_of(embedding.basis_images, v0));
    if (!(sym0 < kAlgebraicTolerance && eig0 > 0)) continue;

    const ZMatrix v = siegel_reduce(embedding.basis_images, v0);
    PeriodData data{ctx, embedding.cm_type, polarization.form, swapped ? v * swap : v,
                    cyclotomic_companion(ctx), ZMatrix{}, tau_of(embedding.basis_images, v),
                    swapped, 0, 0};
    std::tie(data.symmetry_residual, data.min_im_eigenvalue) = siegel_quality(data.tau);
    if (!(data.symmetry_residual < kAlgebraicTolerance && data.min_im_eigenvalue > kAlgebraicTolerance))
      break;

    // U^{-1} = J^{-1} U^T E = -J U^T E
    const ZMatrix u_inv = -(j_std * data.basis.transpose() * data.form);
    if (data.basis.transpose() * data.form * data.basis != j_std ||
        u_inv * data.basis != ZMatrix::identity(data.basis.rows()))
      throw Error(ErrorKind::InternalConsistency, "reduced basis is not symplectic");
    data.symplectic_action = u_inv * data.xi_action * data.basis;
    return data;
  }
  throw Error(ErrorKind::InternalConsistency, "Riemann relations violated");
}

ZMatrix modular_action(const PeriodData& data) {
  ZMatrix r = data.symplectic_action;
  if (data.block_swapped) {
    const ZMatrix swap = block_swap(r.rows() / 2);
    r = swap * r * swap;
  }
  return r.transpose();
}

AutomorphismReport automorphism_check(const PeriodData& data) {
  const PrimeContext& ctx = data.ctx;
  const auto g = static_cast<std::size_t>(ctx.g());
  const ZMatrix j_std = ZMatrix::standard_symplectic(g);
  const ZMatrix& m = data.xi_action;
  const ZMatrix& r = data.symplectic_action;

  AutomorphismReport rep;
  rep.preserves_form = m.transpose() * data.form * m == data.form;
  rep.order_p = matrix_power(r, static_cast<unsigned>(ctx.p())) == ZMatrix::identity(r.rows());
  rep.symplectic = r.transpose() * j_std * r == j_std;

  const Eigen::MatrixXcd act = to_real(modular_action(data)).cast<std::complex<double>>();
  const auto n = static_cast<Eigen::Index>(g);
  const Eigen::MatrixXcd a = act.topLeftCorner(n, n), b = act.topRightCorner(n, n);
  const Eigen::MatrixXcd c = act.bottomLeftCorner(n, n), d = act.bottomRightCorner(n, n);
  const Eigen::MatrixXcd denom = c * data.tau + d;
  // X = (A tau + B) denom^{-1}  <=>  denom^T X^T = (A tau + B)^T
  const Eigen::MatrixXcd image =
      denom.transpose().partialPivLu().solve((a * data.tau + b).transpose()).transpose();
  rep.fix_residual = max_abs(image - data.tau);
  rep.fixes_tau = rep.fix_residual < kCompositionTolerance;

  // Greedy matching of the analytic eigenvalues against the expected roots.
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(denom, false);
  std::vector<std::complex<double>> found(solver.eigenvalues().data(),
                                          solver.eigenvalues().data() + n);
  double worst = 0;
  for (Residue k : data.cm_type.members()) {
    const std::complex<double> want = root_of_unity(ctx.p(), k);
    std::size_t best = 0;
    for (std::size_t i = 1; i < found.size(); ++i)
      if (std::abs(found[i] - want) < std::abs(found[best] - want)) best = i;
    worst = std::max(worst, std::abs(found[best] - want));
    found.erase(found.begin() + static_cast<std::ptrdiff_t>(best));
  }
  rep.spectrum_residual = worst;
  rep.spectrum = worst < kCompositionTolerance;
  return rep;
}

std::complex<double> reduce_to_fundamental_domain(std::complex<double> tau) {
  if (!(tau.imag() > 0)) throw Error(ErrorKind::InvalidInput, "tau is not in the upper half plane");
  for (int iter = 0; iter < 1000; ++iter) {
    tau -= std::round(tau.real());
    if (std::norm(tau) < 1.0 - 1e-15)
      tau = -1.0 / tau;
    else
      break;
  }
  // boundary identifications: Re = +1/2 ~ -1/2, |tau| = 1 with Re > 0 ~ Re < 0
  if (tau.real() > 0.5 - 1e-15) tau -= 1.0;
  return tau;
}

}  // namespace extremal
