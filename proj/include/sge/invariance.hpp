// Fixed-point subspaces of the 18x18 representation, computed directly from
// generator sets. This is the reference the class builders are checked against.
#pragma once

#include "sge/class_builders.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sge {

/// Numerical rank: singular values above rel * largest.
int numeric_rank(const Eigen::MatrixXd& m, double rel = 1e-8);

/// ||Q m Q^T - m||_F <= tol * max(||m||_F, tiny).
bool is_invariant(const SgeMatrix& m, const Rotation& q, double tol);

struct InvariantBasis {
  GeneratorSet generators;
  std::vector<SgeMatrix> elements;  // Frobenius-orthonormal
  Eigen::MatrixXd coords;           // 171 x dimension, same vectors

  int dimension() const { return static_cast<int>(elements.size()); }
};

/// Joint nullspace of (m -> Q m Q^T - m) over the generators, via SVD with the
/// rank threshold 1e-8 * sigma_max.
InvariantBasis invariant_basis(const GeneratorSet& g);

/// Cached basis of the class in its canonical frame.
const InvariantBasis& class_basis(SymmetryTag tag);
/// Basis of the class in its own orientation (conjugated generators).
InvariantBasis class_basis(const SymmetryClass& c);

SgeMatrix project(const SgeMatrix& m, const InvariantBasis& b);

/// Reynolds average over a complete finite group. Throws std::runtime_error
/// if the result is not invariant under the listed elements (incomplete group).
SgeMatrix group_average(const SgeMatrix& m, const std::vector<Rotation>& elements);

struct DirectionResidual {
  std::string parameter;
  double residual = 0.0;
};

struct ReconciliationReport {
  SymmetryTag tag = SymmetryTag::triclinic;
  std::uint64_t seed = 0;
  int samples = 0;
  int table_count = 0;
  int oracle_dimension = 0;
  int builder_rank = 0;
  int combined_rank = 0;
  double max_sample_residual = 0.0;     // distance of samples from the oracle space
  double max_generator_residual = 0.0;  // ||Q A Q^T - A|| / ||A|| over generators
  /// Residual of each unit direction of the literal published formulas.
  std::vector<DirectionResidual> printed_residuals;
  /// Parameters whose published direction leaves the oracle space.
  std::vector<std::string> corrected_directions;
  bool passed = false;
};

/// Samples n parameter vectors uniformly in [-1, 1] with a 64-bit seeded
/// generator and compares the builder image with the oracle. Throws
/// std::invalid_argument if n < param_count.
ReconciliationReport verify_builder(const SymmetryClass& c, int n_samples, std::uint64_t seed);

nlohmann::ordered_json to_json(const ReconciliationReport& r);

/// ||m - project(m)|| / ||m|| in the class orientation. Throws
/// std::invalid_argument for the zero matrix.
double residual_to_class(const SgeMatrix& m, const SymmetryClass& c);

struct ClassMatch {
  SymmetryClass cls;
  double residual = 0.0;
};

/// Every tag in its canonical frame, plus every tag in each extra orientation.
/// Matches with residual <= tol, most symmetric first (ascending parameter
/// count, then descending group order). Triclinic always matches and comes last.
std::vector<ClassMatch> classify(const SgeMatrix& m, double tol,
                                 const std::vector<Rotation>& orientations = {});

}  // namespace sge
