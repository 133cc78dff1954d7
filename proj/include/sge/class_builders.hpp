// Explicit class matrices for the 17 symmetry classes (Z2 in two frames).
//
// Parameters are consumed block by block in reading order of the class matrix
// (upper blocks row by row), followed by the scalars eta and theta.
#pragma once

#include "sge/basis_index.hpp"
#include "sge/blocks.hpp"
#include "sge/rotations.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sge {

struct SymmetryClass {
  SymmetryTag tag = SymmetryTag::triclinic;
  Rotation orientation;

  SymmetryClass() = default;
  SymmetryClass(SymmetryTag t) : tag(t) {}  // NOLINT: implicit by design
  SymmetryClass(SymmetryTag t, const Rotation& q) : tag(t), orientation(q) {}

  bool canonical() const { return orientation.matrix() == Mat3::Identity(); }
};

using ParamVector = std::vector<double>;

/// Number of independent components of the class.
int param_count(SymmetryTag tag);

/// 1 for triclinic, n for Zn, 2n for Dn, 12/24/60 for T/O/I; empty for the
/// continuous groups.
std::optional<int> group_order(SymmetryTag tag);

/// Short machine name ("d4", "z2_e1", "cubic") and a display name ("D4", "Z2 (e1)").
std::string tag_name(SymmetryTag tag);
std::string display_name(SymmetryTag tag);

/// Accepts tag_name() spellings case-insensitively plus a few aliases
/// ("z2_e3", "so3", "o", "t", "i", "ico", "trans_iso").
std::optional<SymmetryTag> parse_tag(const std::string& name);

/// One tag per row of the class table: every tag except z2_e1.
const std::vector<SymmetryTag>& table_tags();

/// Entry names in ParamVector order, e.g. {"a11", ..., "j23", "eta", "theta"}.
std::vector<std::string> parameter_names(SymmetryTag tag);

/// Assembles the class matrix in the canonical frame and conjugates it by the
/// orientation. Throws std::invalid_argument on a wrong length or a
/// non-finite entry.
SgeMatrix build(const SymmetryClass& c, std::span<const double> params,
                Transcription t = Transcription::corrected);

/// build() of each unit parameter vector, canonical frame.
std::vector<SgeMatrix> parameter_directions(SymmetryTag tag, Transcription t = Transcription::corrected);

class SubspaceMismatch : public std::runtime_error {
 public:
  SubspaceMismatch(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Least-squares left inverse of build(). Throws SubspaceMismatch if the
/// relative residual exceeds tol.
ParamVector extract_params(const SgeMatrix& m, const SymmetryClass& c, double tol = 1e-9);

}  // namespace sge
