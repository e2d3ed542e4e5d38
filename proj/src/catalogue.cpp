#include "hyperinv/catalogue.hpp"

namespace hyperinv {

namespace {

constexpr std::array<std::string_view, kInvariantNames.size()> kInvariantKeys{
    "I2", "I3", "I4", "I4p", "I6", "I6p", "I6star_ast", "I12", "I6star", "I12ast"};
constexpr std::array<std::string_view, kAbsoluteNames.size()> kAbsoluteKeys{
    "i1", "i2", "i3", "j1", "j2", "s1", "s2", "v1", "v2", "v3", "v4", "v5"};

}  // namespace

std::string_view invariant_key(InvariantName n) { return kInvariantKeys[static_cast<std::size_t>(n)]; }

std::optional<InvariantName> invariant_from_key(std::string_view key) {
  for (std::size_t k = 0; k < kInvariantKeys.size(); ++k) {
    if (kInvariantKeys[k] == key) return kInvariantNames[k];
  }
  return std::nullopt;
}

std::string_view absolute_key(AbsoluteName n) { return kAbsoluteKeys[static_cast<std::size_t>(n)]; }

std::optional<AbsoluteName> absolute_from_key(std::string_view key) {
  for (std::size_t k = 0; k < kAbsoluteKeys.size(); ++k) {
    if (kAbsoluteKeys[k] == key) return kAbsoluteNames[k];
  }
  return std::nullopt;
}

const AbsoluteRecipe& absolute_recipe(AbsoluteName n) {
  using I = InvariantName;
  static const std::array<AbsoluteRecipe, kAbsoluteNames.size()> recipes{{
      {{{I::I4p, 1}}, {{I::I2, 2}}},     // i1
      {{{I::I3, 2}}, {{I::I2, 3}}},      // i2
      {{{I::I6s, 1}}, {{I::I2, 3}}},     // i3
      {{{I::I6p, 1}}, {{I::I3, 2}}},     // j1
      {{{I::I6, 1}}, {{I::I3, 2}}},      // j2
      {{{I::I6, 2}}, {{I::I12, 1}}},     // s1
      {{{I::I6p, 2}}, {{I::I12, 1}}},    // s2
      {{{I::I6, 1}}, {{I::I6s, 1}}},     // v1
      {{{I::I4p, 3}}, {{I::I3, 4}}},     // v2
      {{{I::I6, 1}}, {{I::I6p, 1}}},     // v3
      // I4 vanishes on every A4 curve, so the weight-zero ratio uses I4' instead.
      {{{I::I6s, 2}}, {{I::I4p, 3}}},    // v4
      // Squared so that the ratio has weight zero.
      {{{I::I6star, 2}}, {{I::I12ast, 1}}},  // v5
  }};
  return recipes[static_cast<std::size_t>(n)];
}

bool invariant_defined(InvariantName n, int d) {
  switch (n) {
    case InvariantName::I2:
    case InvariantName::I4:
    case InvariantName::I4p:
    case InvariantName::I6: return d >= 6;
    case InvariantName::I3: return d % 4 == 0;
    case InvariantName::I6p: return d >= 8;
    case InvariantName::I12: return d >= 10;
    case InvariantName::I6s: return d >= 12;
    case InvariantName::I6star:
    case InvariantName::I12ast: return d == 22;
  }
  return false;
}

bool classifiable_genus(int g) {
  return g == 4 || g == 5 || g == 7 || g == 8 || g == 9 || g == 10 || g == 12;
}

const std::vector<InvariantName>& vanishing_list(int g) {
  using I = InvariantName;
  static const std::vector<I> g4{I::I2, I::I4, I::I4p, I::I6p};
  static const std::vector<I> g5{I::I4, I::I6};
  static const std::vector<I> g7{I::I2, I::I4, I::I4p, I::I6s};
  static const std::vector<I> g8{I::I4};
  switch (g) {
    case 4: return g4;
    case 5:
    case 9:
    case 12: return g5;
    case 7:
    case 10: return g7;
    case 8: return g8;
    default:
      throw DomainError("unsupported_genus", "no vanishing list for genus " + std::to_string(g));
  }
}

}  // namespace hyperinv
