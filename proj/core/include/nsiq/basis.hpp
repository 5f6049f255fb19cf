#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace nsiq {

enum class BasisLabel {
  Up0,
  Down0,
  Up2,
  Down2,
  UpPlus,
  UpMinus,
  UpPlusTheta,
  UpMinusTheta,
  DownPlus,
  DownMinus,
};

using Basis = std::array<BasisLabel, 4>;

/// Bare states, lab and rotating frames: (|↑,0⟩, |↓,0⟩, |↑,2⟩, |↓,2⟩).
inline constexpr Basis kPhysicalBasis{BasisLabel::Up0, BasisLabel::Down0, BasisLabel::Up2,
                                      BasisLabel::Down2};
/// Degenerate auxiliary states diagonalized: (|↑,+⟩, |↑,−⟩, |↓,2⟩, |↓,0⟩).
inline constexpr Basis kSymmetricBasis{BasisLabel::UpPlus, BasisLabel::UpMinus,
                                       BasisLabel::Down2, BasisLabel::Down0};
/// Symmetric/antisymmetric blocks: (|↑,+⟩, |↓,+⟩, |↑,−⟩, |↓,−⟩).
inline constexpr Basis kBlockBasis{BasisLabel::UpPlus, BasisLabel::DownPlus,
                                   BasisLabel::UpMinus, BasisLabel::DownMinus};
/// Mixed auxiliary eigenstates for arbitrary δ: (|↑,+θ⟩, |↑,−θ⟩, |↓,2⟩, |↓,0⟩).
inline constexpr Basis kThetaBasis{BasisLabel::UpPlusTheta, BasisLabel::UpMinusTheta,
                                   BasisLabel::Down2, BasisLabel::Down0};

std::string_view to_string(BasisLabel label);
std::optional<BasisLabel> label_from_string(std::string_view name);
std::string to_string(const Basis& basis);

/// Auxiliary (|↑,·⟩) states; the qubit lives on the |↓,·⟩ labels.
constexpr bool is_auxiliary(BasisLabel label) {
  switch (label) {
    case BasisLabel::Up0:
    case BasisLabel::Up2:
    case BasisLabel::UpPlus:
    case BasisLabel::UpMinus:
    case BasisLabel::UpPlusTheta:
    case BasisLabel::UpMinusTheta:
      return true;
    default:
      return false;
  }
}

std::optional<std::size_t> find_label(const Basis& basis, BasisLabel label);

/// Index of `label` in `basis`; throws BasisMismatchError if absent.
std::size_t index_of(const Basis& basis, BasisLabel label);

/// Throws BasisMismatchError unless the two tuples are identical.
void require_same_basis(const Basis& a, const Basis& b, std::string_view context);

}  // namespace nsiq
