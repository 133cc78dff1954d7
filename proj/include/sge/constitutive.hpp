// Matrix form of the strain-gradient law tau = A : omega, and the published
// planar example matrices used as structural fixtures.
#pragma once

#include "sge/basis_index.hpp"

#include <string>
#include <vector>

namespace sge {

/// tau^ = A^ omega^.
Vec18 hyperstress(const SgeMatrix& m, const Vec18& omega);

/// 1/2 omega^T A omega.
double strain_energy_density(const SgeMatrix& m, const Vec18& omega);

/// Smallest eigenvalue > 1e-10 * largest eigenvalue magnitude.
bool is_positive_definite(const SgeMatrix& m);
bool is_positive_definite(const Mat6& m);

enum class FixtureTag { d4_2d, z4_levogyre, z4_dextrogyre };

/// Planar 6x6 matrix in the in-plane ordering 111 221 122 222 112 121 (rows
/// 1,2,3,6,7,8 of the 3D table), so the two 3x3 diagonal blocks collect the
/// components with third index 1 and 2 respectively. Units MPa mm^2.
struct Fixture2D {
  std::string name;
  FixtureTag tag = FixtureTag::d4_2d;
  Mat6 values = Mat6::Zero();
  std::string units = "MPa.mm2";
};

struct FixtureReport {
  std::string name;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Exact structural checks. D4: off-diagonal 3x3 blocks zero, diagonal blocks
/// equal. Z4: diagonal blocks equal, off-diagonal block antisymmetric (which
/// puts zeros on its diagonal). Always checks symmetry of the 6x6 matrix.
FixtureReport validate_fixture(const Fixture2D& f);

/// Levogyre and dextrogyre: same diagonal blocks, coupling blocks negatives.
FixtureReport validate_chirality_pair(const Fixture2D& levo, const Fixture2D& dextro);

/// Loads {"name", "class": "d4_2d"|"z4_levogyre"|"z4_dextrogyre",
/// "ordering": "table2-2d", "units", "values": [[6 x 6]]}. Throws
/// std::runtime_error on malformed files.
Fixture2D load_fixture(const std::string& path);

FixtureTag parse_fixture_tag(const std::string& s);
std::string fixture_tag_name(FixtureTag t);

}  // namespace sge
