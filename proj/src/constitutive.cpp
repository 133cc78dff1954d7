#include "sge/constitutive.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sge {
namespace {

constexpr double kDefiniteTol = 1e-10;

template <class M>
bool positive_definite(const M& m) {
  Eigen::SelfAdjointEigenSolver<M> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0.0) return false;
  return ev.minCoeff() > kDefiniteTol * scale;
}

std::string at(int r, int c) { return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")"; }

}  // namespace

Vec18 hyperstress(const SgeMatrix& m, const Vec18& omega) { return m.dense() * omega; }

double strain_energy_density(const SgeMatrix& m, const Vec18& omega) {
  return 0.5 * omega.dot(m.dense() * omega);
}

bool is_positive_definite(const SgeMatrix& m) { return positive_definite(m.dense()); }
bool is_positive_definite(const Mat6& m) { return positive_definite(m); }

FixtureReport validate_fixture(const Fixture2D& f) {
  FixtureReport rep{f.name, {}};
  const Mat6& v = f.values;
  for (int r = 0; r < 6; ++r)
    for (int c = r + 1; c < 6; ++c)
      if (v(r, c) != v(c, r)) rep.violations.push_back("matrix not symmetric at " + at(r, c));

  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (v(r, c) != v(r + 3, c + 3))
        rep.violations.push_back("diagonal blocks differ at " + at(r, c) + " vs " + at(r + 3, c + 3));

  const auto coupling = v.block<3, 3>(0, 3);
  if (f.tag == FixtureTag::d4_2d) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (coupling(r, c) != 0.0) rep.violations.push_back("coupling entry " + at(r, c + 3) + " is not zero");
  } else {
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c)
        if (coupling(r, c) != -coupling(c, r))
          rep.violations.push_back("coupling block not antisymmetric at " + at(r, c + 3));
  }
  return rep;
}

FixtureReport validate_chirality_pair(const Fixture2D& levo, const Fixture2D& dextro) {
  FixtureReport rep{levo.name + " / " + dextro.name, {}};
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      const bool coupling = (r < 3) != (c < 3);
      const double expect = coupling ? -levo.values(r, c) : levo.values(r, c);
      if (dextro.values(r, c) != expect)
        rep.violations.push_back(std::string(coupling ? "coupling entry " : "entry ") + at(r, c) +
                                 (coupling ? " does not flip sign" : " differs"));
    }
  return rep;
}

FixtureTag parse_fixture_tag(const std::string& s) {
  if (s == "d4_2d") return FixtureTag::d4_2d;
  if (s == "z4_levogyre") return FixtureTag::z4_levogyre;
  if (s == "z4_dextrogyre") return FixtureTag::z4_dextrogyre;
  throw std::runtime_error("unknown fixture class '" + s + "'");
}

std::string fixture_tag_name(FixtureTag t) {
  switch (t) {
    case FixtureTag::d4_2d: return "d4_2d";
    case FixtureTag::z4_levogyre: return "z4_levogyre";
    case FixtureTag::z4_dextrogyre: return "z4_dextrogyre";
  }
  return "";
}

Fixture2D load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  if (j.value("ordering", "") != "table2-2d") throw std::runtime_error(path + ": ordering must be table2-2d");
  Fixture2D f;
  f.name = j.value("name", path);
  f.tag = parse_fixture_tag(j.at("class").get<std::string>());
  f.units = j.value("units", f.units);
  const auto& rows = j.at("values");
  if (!rows.is_array() || rows.size() != 6) throw std::runtime_error(path + ": values must be 6 rows");
  for (int r = 0; r < 6; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 6) throw std::runtime_error(path + ": row " + std::to_string(r + 1) + " must have 6 values");
    for (int c = 0; c < 6; ++c) f.values(r, c) = row[static_cast<std::size_t>(c)].get<double>();
  }
  return f;
}

}  // namespace sge
