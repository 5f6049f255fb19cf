#include "nsiq/basis.hpp"

#include <algorithm>
#include <utility>

#include "nsiq/errors.hpp"

namespace nsiq {
namespace {

constexpr std::array<std::pair<BasisLabel, std::string_view>, 10> kNames{{
    {BasisLabel::Up0, "up0"},
    {BasisLabel::Down0, "down0"},
    {BasisLabel::Up2, "up2"},
    {BasisLabel::Down2, "down2"},
    {BasisLabel::UpPlus, "up_plus"},
    {BasisLabel::UpMinus, "up_minus"},
    {BasisLabel::UpPlusTheta, "up_plus_theta"},
    {BasisLabel::UpMinusTheta, "up_minus_theta"},
    {BasisLabel::DownPlus, "down_plus"},
    {BasisLabel::DownMinus, "down_minus"},
}};

}  // namespace

std::string_view to_string(BasisLabel label) {
  for (const auto& [l, name] : kNames)
    if (l == label) return name;
  return "?";
}

std::optional<BasisLabel> label_from_string(std::string_view name) {
  for (const auto& [l, n] : kNames)
    if (n == name) return l;
  return std::nullopt;
}

std::string to_string(const Basis& basis) {
  std::string out = "(";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(basis[i]);
  }
  out += ")";
  return out;
}

std::optional<std::size_t> find_label(const Basis& basis, BasisLabel label) {
  const auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

std::size_t index_of(const Basis& basis, BasisLabel label) {
  if (const auto idx = find_label(basis, label)) return *idx;
  throw BasisMismatchError("label " + std::string(to_string(label)) + " is not part of basis " +
                           to_string(basis));
}

void require_same_basis(const Basis& a, const Basis& b, std::string_view context) {
  if (a != b)
    throw BasisMismatchError(std::string(context) + ": basis " + to_string(a) + " vs " +
                             to_string(b));
}

}  // namespace nsiq
