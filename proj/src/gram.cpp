#include "addspec/gram.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>

#include "addspec/error.hpp"

namespace addspec {
namespace {

Eigen::MatrixXcd gram_entries(const AdditiveSpace& s,
                              std::span<const ExponentPair> pairs) {
  const auto n = static_cast<Eigen::Index>(pairs.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      g(i, j) = exp_inner(s, pairs[i], pairs[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

void check_distinct(std::span<const ExponentPair> pairs) {
  ExponentSet seen;
  for (const auto& p : pairs) seen.insert(p);
}

}  // namespace

GramMatrix::GramMatrix(std::vector<ExponentPair> pairs, Eigen::MatrixXcd entries)
    : pairs_(std::move(pairs)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(pairs_.size());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw Error(ErrorCode::InvalidArgument, "Gram matrix shape mismatch");
  }
}

double GramMatrix::identity_deviation() const {
  if (entries_.size() == 0) return 0.0;
  const auto n = entries_.rows();
  return (entries_ - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

GramMatrix assemble(const AdditiveSpace& s, std::span<const ExponentPair> pairs,
                    std::size_t cap) {
  if (pairs.size() > cap) {
    throw Error(ErrorCode::SizeCap, std::to_string(pairs.size()) +
                                        " pairs exceed the Gram cap of " +
                                        std::to_string(cap));
  }
  check_distinct(pairs);
  return GramMatrix({pairs.begin(), pairs.end()}, gram_entries(s, pairs));
}

ExtremalEigenvalues extremal_eigenvalues(const GramMatrix& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyMatrix, "empty Gram section");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      g.entries(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::RieszConsistent:
      return "riesz-consistent";
    case Verdict::Degenerate:
      return "degenerate";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

SectionCertificate riesz_section_certificate(const AdditiveSpace& s,
                                             std::span<const ExponentPair> pairs,
                                             std::span<const std::size_t> sizes,
                                             const CertificateOptions& options) {
  if (sizes.empty()) {
    throw Error(ErrorCode::InvalidArgument, "at least one section size is needed");
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0 || sizes[i] > pairs.size() ||
        (i > 0 && sizes[i] <= sizes[i - 1])) {
      throw Error(ErrorCode::InvalidArgument,
                  "section sizes must increase strictly within 1.." +
                      std::to_string(pairs.size()));
    }
  }
  const auto full = assemble(s, pairs.first(sizes.back()), options.cap);

  SectionCertificate cert;
  cert.sizes.assign(sizes.begin(), sizes.end());
  for (std::size_t n : sizes) {
    const auto k = static_cast<Eigen::Index>(n);
    const Eigen::MatrixXcd section = full.entries().topLeftCorner(k, k);
    const bool want_vector = cert.verdict != Verdict::Degenerate;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        section, want_vector ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    const double lo = solver.eigenvalues()(0);
    cert.lambda_min.push_back(lo);
    cert.lambda_max.push_back(solver.eigenvalues()(k - 1));
    if (lo < options.degeneracy_threshold && want_vector) {
      cert.verdict = Verdict::Degenerate;
      Eigen::VectorXcd v = solver.eigenvectors().col(0);
      Eigen::Index top = 0;
      v.cwiseAbs().maxCoeff(&top);
      v /= v(top);
      std::vector<CombinationTerm> terms;
      terms.reserve(n);
      for (Eigen::Index i = 0; i < k; ++i) {
        terms.push_back({pairs[i], i == top ? std::complex<double>(1.0) : v(i)});
      }
      cert.null_combination.emplace(std::move(terms));
      cert.null_quadratic_form = combination_norm_sq(s, *cert.null_combination);
    }
  }
  cert.floor = cert.lambda_min.back();
  if (cert.verdict != Verdict::Degenerate && cert.lambda_min.size() >= 2) {
    const double last = cert.lambda_min.back();
    const double prev = cert.lambda_min[cert.lambda_min.size() - 2];
    if (last > options.degeneracy_threshold &&
        std::abs(prev - last) <= options.stabilization_tolerance * last) {
      cert.verdict = Verdict::RieszConsistent;
    }
  }
  return cert;
}

double parseval_residual(const AdditiveSpace& s,
                         std::span<const ExponentPair> pairs,
                         const TestFunction& F) {
  double energy = 0.0;
  for (const auto& p : pairs) energy += std::norm(function_inner_exp(s, F, p));
  return function_norm_sq(s, F) - energy;
}

FiniteCombination alternating_combination(const ZigzagPath& z) {
  auto vertices = z.vertices();
  if (z.is_loop()) vertices.pop_back();
  std::vector<CombinationTerm> terms;
  std::map<ExponentPair, std::size_t> slot;
  double sign = 1.0;
  for (const auto& p : vertices) {
    const auto [it, fresh] = slot.emplace(p, terms.size());
    if (fresh) {
      terms.push_back({p, sign});
    } else {
      terms[it->second].coeff += sign;
    }
    sign = -sign;
  }
  return FiniteCombination(std::move(terms));
}

double alternating_zigzag_norm(const AdditiveSpace& s, const ZigzagPath& z) {
  return combination_norm_sq(s, alternating_combination(z));
}

CollinearReport collinear_failure_demo(const Rational& a,
                                       std::span<const Rational> base,
                                       const PiecewisePolynomial& g) {
  if (!(a > 0 && a <= 1)) {
    throw Error(ErrorCode::InvalidArgument,
                "slope must lie in (0, 1], got " + to_string(a));
  }
  const double slope = to_double(a);
  const auto g_half = g.restricted(-0.5, 0.5);
  const TestFunction F{g_half.dilated(slope).restricted(-0.5 * slope, 0.5 * slope)
                           .scaled(-1.0),
                       g_half};
  const auto space = AdditiveSpace::plus_space();

  CollinearReport report;
  report.slope = a;
  report.count = base.size();
  for (const auto& l : base) {
    report.energy += std::norm(function_inner_exp(space, F, {l, a * l}));
  }
  report.norm_sq = function_norm_sq(space, F);
  report.ratio = report.norm_sq > 0.0 ? report.energy / report.norm_sq : 0.0;
  return report;
}

CollinearReport collinear_failure_demo(const Rational& a, int N,
                                       const PiecewisePolynomial& g) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be >= 0");
  std::vector<Rational> base;
  base.reserve(2 * static_cast<std::size_t>(N) + 1);
  for (int n = -N; n <= N; ++n) base.emplace_back(n);
  return collinear_failure_demo(a, base, g);
}

}  // namespace addspec
