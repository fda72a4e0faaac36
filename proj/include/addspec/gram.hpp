#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "addspec/additive_space.hpp"
#include "addspec/exponents.hpp"

namespace addspec {

inline constexpr std::size_t kDefaultGramCap = 4096;

/// Finite section G_ij = <e_{p_i}, e_{p_j}> of the Gram operator.
class GramMatrix {
 public:
  GramMatrix(std::vector<ExponentPair> pairs, Eigen::MatrixXcd entries);

  const std::vector<ExponentPair>& pairs() const noexcept { return pairs_; }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /// max_ij |G_ij - delta_ij|.
  double identity_deviation() const;

 private:
  std::vector<ExponentPair> pairs_;
  Eigen::MatrixXcd entries_;
};

/// Upper triangle from the closed-form inner product, lower triangle by
/// conjugation. Throws on duplicate pairs or more than `cap` pairs.
GramMatrix assemble(const AdditiveSpace& s, std::span<const ExponentPair> pairs,
                    std::size_t cap = kDefaultGramCap);

struct ExtremalEigenvalues {
  double min;
  double max;
};

/// Throws Error(EmptyMatrix) for a 0x0 section.
ExtremalEigenvalues extremal_eigenvalues(const GramMatrix& g);

enum class Verdict { RieszConsistent, Degenerate, Indeterminate };

std::string_view verdict_name(Verdict v) noexcept;

struct CertificateOptions {
  /// A section with lambda_min below this exhibits a null combination.
  double degeneracy_threshold = 1e-9;
  /// lambda_min is "stable" when the last two sections differ by at most this
  /// fraction of the last value.
  double stabilization_tolerance = 0.1;
  std::size_t cap = kDefaultGramCap;
};

/// Eigenvalue bounds over nested prefixes of a pair list.
///
/// A degenerate verdict is a proof that the infinite system is not a Riesz
/// sequence: the attached combination has (numerically) zero norm. A
/// riesz-consistent verdict is only evidence.
struct SectionCertificate {
  std::vector<std::size_t> sizes;
  std::vector<double> lambda_min;
  std::vector<double> lambda_max;
  Verdict verdict = Verdict::Indeterminate;
  /// lambda_min of the last section.
  double floor = 0.0;
  /// Null eigenvector of the first degenerate section, scaled so that the
  /// largest coefficient is exactly 1.
  std::optional<FiniteCombination> null_combination;
  /// ||null combination||^2 evaluated through combination_norm_sq.
  double null_quadratic_form = 0.0;
};

SectionCertificate riesz_section_certificate(const AdditiveSpace& s,
                                             std::span<const ExponentPair> pairs,
                                             std::span<const std::size_t> sizes,
                                             const CertificateOptions& options = {});

/// ||F||^2 - sum_p |<F, e_p>|^2. For a truncated orthonormal basis this is the
/// energy not yet captured.
double parseval_residual(const AdditiveSpace& s,
                         std::span<const ExponentPair> pairs,
                         const TestFunction& F);

/// The combination +1, -1, +1, ... along the zigzag. For a loop the repeated
/// last point is dropped; other repeated points accumulate.
FiniteCombination alternating_combination(const ZigzagPath& z);

double alternating_zigzag_norm(const AdditiveSpace& s, const ZigzagPath& z);

struct CollinearReport {
  Rational slope;
  std::size_t count = 0;
  double energy = 0.0;   // sum |<F, e_{(l, a l)}>|^2
  double norm_sq = 0.0;  // ||F||^2
  double ratio = 0.0;
};

/// Plus space, Lambda = {(l, a l) : l in base}. Builds F with g on the y-axis and
/// f = -g~ on the x-axis, g~(x) = a^{-1} g(x/a) on [-a/2, a/2], whose
/// coefficients against every collinear exponential cancel.
/// Throws Error(InvalidArgument) unless 0 < a <= 1.
CollinearReport collinear_failure_demo(const Rational& a,
                                       std::span<const Rational> base,
                                       const PiecewisePolynomial& g);

/// Same with base = Z intersect [-N, N].
CollinearReport collinear_failure_demo(const Rational& a, int N,
                                       const PiecewisePolynomial& g);

}  // namespace addspec
