// Sub-matrix building blocks of the class matrices.
//
// Every class matrix is partitioned into 5+5+5+3 rows/columns. Free blocks are
// filled from material parameters, coupling blocks are constants, and
// dependent blocks are fixed linear functions of a free block.
#pragma once

#include <Eigen/Core>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sge {

/// Which formulas to use for the handful of entries whose published form is
/// not invariant under the class generators. `printed` reproduces the
/// published expressions literally (the undefined scalar in f(F8) is taken as
/// zero); `corrected` is what the builders ship.
enum class Transcription { corrected, printed };

enum class BlockKind {
  // Generic blocks (triclinic and the Z2 / D2 family).
  A15, B25, C25, D15, E15, F25, G15, H15, I15, J6,
  // Tetragonal.
  B10, H9, I7, J4,
  // Trigonal / hexagonal / pentagonal / transversely isotropic.
  A11, B6, C3, D4b, F8, G9, H6, I4, F2, G2,
  // Cubic, icosahedral, isotropic.
  A9, J2, A5,
  // Parameter-free constants.
  Ac, Bc, AIc, Jc, P,
};

enum class DependentKind { fG9, fF8, fD4, fJ4, gJ4, fF2, fG2, fA5 };

struct Block {
  BlockKind kind;
  Eigen::MatrixXd values;
};

std::pair<int, int> block_shape(BlockKind kind);
std::pair<int, int> dependent_shape(DependentKind kind);
std::string block_name(BlockKind kind);

/// Number of free parameters (0 for the constant blocks).
int block_param_count(BlockKind kind);
/// Paper-style entry names in the order make_block consumes them, e.g. a11, a12.
std::vector<std::string> block_param_names(BlockKind kind);

/// Fills a free block. Throws std::invalid_argument on a size mismatch or for a
/// constant kind.
Block make_block(BlockKind kind, std::span<const double> params,
                 Transcription t = Transcription::corrected);

/// Applies a dependent-block function to its source block (G9 for fG9, J4 for
/// fJ4 and gJ4, and so on). Throws std::invalid_argument if the source has the
/// wrong kind or shape.
Block dependent_block(DependentKind kind, const Block& source,
                      Transcription t = Transcription::corrected);

struct CouplingConstants {
  Block a_c;    // trigonal eta coupling, 5x5 symmetric
  Block b_c;    // trigonal theta coupling, 5x5
  Block a_ico;  // icosahedral eta coupling, 5x5 symmetric
  Block j_c;    // icosahedral eta coupling, 3x3 symmetric
  Block p;      // 5x5 permutation swapping positions 2<->4 and 3<->5
};

const CouplingConstants& coupling_constants();

}  // namespace sge
