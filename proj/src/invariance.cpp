#include "sge/invariance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>

namespace sge {
namespace {

constexpr double kRankTol = 1e-8;
constexpr double kSubspaceTol = 1e-9;
constexpr double kPrintedTol = 1e-10;
constexpr double kTiny = std::numeric_limits<double>::min();

// Orthonormal symmetric basis matrix number s (unit coordinate vector).
Mat18 basis_matrix(int s) {
  Coords171 e = Coords171::Zero();
  e[s] = 1.0;
  return SgeMatrix::from_coords(e).dense();
}

double relative_gap(const SgeMatrix& a, const SgeMatrix& b) {
  return (a - b).frobenius_norm() / std::max(b.frobenius_norm(), kTiny);
}

// sup over the group's generators of the relative invariance residual.
double generator_residual(const SgeMatrix& m, const GeneratorSet& g) {
  double worst = 0.0;
  for (const auto& q : g.elements) worst = std::max(worst, relative_gap(rotate_matrix(m, q), m));
  return worst;
}

Eigen::VectorXd project_coords(const Eigen::VectorXd& x, const InvariantBasis& b) {
  return b.coords * (b.coords.transpose() * x);
}

double subspace_residual(const SgeMatrix& m, const InvariantBasis& b) {
  const Coords171 x = m.coords();
  const double n = x.norm();
  if (n == 0.0) return 0.0;
  return (x - project_coords(x, b)).norm() / n;
}

}  // namespace

int numeric_rank(const Eigen::MatrixXd& m, double rel) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > rel * s[0]) ++r;
  return r;
}

bool is_invariant(const SgeMatrix& m, const Rotation& q, double tol) {
  const double gap = (rotate_matrix(m, q) - m).frobenius_norm();
  return gap <= tol * std::max(m.frobenius_norm(), kTiny);
}

InvariantBasis invariant_basis(const GeneratorSet& g) {
  InvariantBasis out;
  out.generators = g;
  const auto ng = static_cast<Eigen::Index>(g.elements.size());
  Eigen::MatrixXd null;
  if (ng == 0) {
    null = Eigen::MatrixXd::Identity(kUpperSize, kUpperSize);
  } else {
    Eigen::MatrixXd k(ng * kUpperSize, kUpperSize);
    for (Eigen::Index gi = 0; gi < ng; ++gi) {
      const RotMatrix18 q18 = rep18(g.elements[static_cast<std::size_t>(gi)]);
      for (int s = 0; s < kUpperSize; ++s) {
        const Mat18 e = basis_matrix(s);
        Coords171 col = SgeMatrix::symmetrized(q18 * e * q18.transpose()).coords();
        col[s] -= 1.0;
        k.block(gi * kUpperSize, s, kUpperSize, 1) = col;
      }
    }
    // BDCSVD can return a non-orthogonal null block when many singular values
    // vanish exactly; one-sided Jacobi does not.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(k, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = kRankTol * (sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv[i] > cut) ++rank;
    if (sv.size() > 0 && sv[0] == 0.0) rank = 0;
    null = svd.matrixV().rightCols(kUpperSize - rank);
    if (null.cols() > 0) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(null);
      null = qr.householderQ() * Eigen::MatrixXd::Identity(kUpperSize, null.cols());
    }
  }
  out.coords = null;
  out.elements.reserve(static_cast<std::size_t>(null.cols()));
  for (Eigen::Index i = 0; i < null.cols(); ++i) out.elements.push_back(SgeMatrix::from_coords(null.col(i)));
  return out;
}

const InvariantBasis& class_basis(SymmetryTag tag) {
  static std::array<std::optional<InvariantBasis>, kTagCount> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = cache[static_cast<std::size_t>(tag)];
  if (!slot) slot = invariant_basis(generators(tag));
  return *slot;
}

InvariantBasis class_basis(const SymmetryClass& c) {
  if (c.canonical()) return class_basis(c.tag);
  return invariant_basis(conjugated(generators(c.tag), c.orientation));
}

SgeMatrix project(const SgeMatrix& m, const InvariantBasis& b) {
  return SgeMatrix::from_coords(project_coords(m.coords(), b));
}

SgeMatrix group_average(const SgeMatrix& m, const std::vector<Rotation>& elements) {
  if (elements.empty()) throw std::invalid_argument("group_average needs at least the identity");
  Mat18 sum = Mat18::Zero();
  for (const auto& q : elements) {
    const RotMatrix18 q18 = rep18(q);
    sum += q18 * m.dense() * q18.transpose();
  }
  const SgeMatrix avg = SgeMatrix::symmetrized(sum / static_cast<double>(elements.size()));
  const double scale = std::max(m.frobenius_norm(), kTiny);
  for (const auto& q : elements)
    if ((rotate_matrix(avg, q) - avg).frobenius_norm() > 1e-10 * scale)
      throw std::runtime_error("element list is not closed under multiplication; average is not invariant");
  return avg;
}

ReconciliationReport verify_builder(const SymmetryClass& c, int n_samples, std::uint64_t seed) {
  const int count = param_count(c.tag);
  if (n_samples < count)
    throw std::invalid_argument("verify_builder needs at least " + std::to_string(count) + " samples for " +
                                display_name(c.tag));
  ReconciliationReport r;
  r.tag = c.tag;
  r.seed = seed;
  r.samples = n_samples;
  r.table_count = count;

  const InvariantBasis basis = class_basis(c);
  const GeneratorSet gens = basis.generators;
  r.oracle_dimension = basis.dimension();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::MatrixXd samples(kUpperSize, n_samples);
  std::vector<double> p(static_cast<std::size_t>(count));
  for (int s = 0; s < n_samples; ++s) {
    for (double& v : p) v = uni(rng);
    const SgeMatrix m = build(c, p);
    samples.col(s) = m.coords();
    r.max_sample_residual = std::max(r.max_sample_residual, subspace_residual(m, basis));
    r.max_generator_residual = std::max(r.max_generator_residual, generator_residual(m, gens));
  }
  r.builder_rank = numeric_rank(samples, kRankTol);
  Eigen::MatrixXd joint(kUpperSize, basis.coords.cols() + samples.cols());
  joint << basis.coords, samples;
  r.combined_rank = numeric_rank(joint, kRankTol);

  const auto names = parameter_names(c.tag);
  const auto printed = parameter_directions(c.tag, Transcription::printed);
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const SgeMatrix d = c.canonical() ? printed[i] : rotate_matrix(printed[i], c.orientation);
    const double res = subspace_residual(d, basis);
    r.printed_residuals.push_back({names[i], res});
    if (res > kPrintedTol) r.corrected_directions.push_back(names[i]);
  }

  r.passed = r.max_sample_residual <= kSubspaceTol && r.oracle_dimension == count && r.builder_rank == count &&
             r.combined_rank == count;
  return r;
}

nlohmann::ordered_json to_json(const ReconciliationReport& r) {
  nlohmann::ordered_json printed = nlohmann::ordered_json::array();
  for (const auto& d : r.printed_residuals) printed.push_back({{"parameter", d.parameter}, {"residual", d.residual}});
  return {
      {"class", tag_name(r.tag)},
      {"seed", r.seed},
      {"samples", r.samples},
      {"table_count", r.table_count},
      {"oracle_dimension", r.oracle_dimension},
      {"builder_rank", r.builder_rank},
      {"combined_rank", r.combined_rank},
      {"max_sample_residual", r.max_sample_residual},
      {"max_generator_residual", r.max_generator_residual},
      {"printed_residuals", printed},
      {"corrected_directions", r.corrected_directions},
      {"passed", r.passed},
  };
}

double residual_to_class(const SgeMatrix& m, const SymmetryClass& c) {
  if (m.frobenius_norm() == 0.0) throw std::invalid_argument("residual_to_class: zero matrix");
  if (c.tag == SymmetryTag::triclinic) return 0.0;
  const SgeMatrix local = c.canonical() ? m : rotate_matrix(m, c.orientation.transpose());
  return subspace_residual(local, class_basis(c.tag));
}

std::vector<ClassMatch> classify(const SgeMatrix& m, double tol, const std::vector<Rotation>& orientations) {
  if (m.frobenius_norm() == 0.0) throw std::invalid_argument("classify: zero matrix");
  std::vector<ClassMatch> out;
  auto consider = [&](const SymmetryClass& c) {
    const double res = residual_to_class(m, c);
    if (res <= tol) out.push_back({c, res});
  };
  for (SymmetryTag t : all_tags()) consider(t);
  for (const auto& q : orientations)
    for (SymmetryTag t : all_tags())
      if (t != SymmetryTag::triclinic) consider({t, q});

  auto order = [](SymmetryTag t) { return group_order(t).value_or(std::numeric_limits<int>::max()); };
  std::stable_sort(out.begin(), out.end(), [&](const ClassMatch& a, const ClassMatch& b) {
    const int ca = param_count(a.cls.tag), cb = param_count(b.cls.tag);
    if (ca != cb) return ca < cb;
    return order(a.cls.tag) > order(b.cls.tag);
  });
  return out;
}

}  // namespace sge
