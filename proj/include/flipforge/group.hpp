#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace flipforge {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

/// Finite Abelian group Z_{n_1} x ... x Z_{n_m}, every n_i >= 2.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> factors);

  static GroupSpec cyclic(std::int64_t n) { return GroupSpec({n}); }

  /// Accepts `z:40`, `z2xz:28` (Z_2 x Z_28) and `z:a,b,c`.
  static GroupSpec parse(std::string_view text);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }
  bool is_cyclic() const { return factors_.size() == 1; }

  /// Canonical text form; inverse of parse().
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::int64_t> factors_;
  std::uint64_t order_ = 1;
};

/// Residue tuple. Always stored reduced modulo its factors.
struct GroupElement {
  std::vector<std::int64_t> residues;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Reduces each raw component modulo its factor (negative values allowed).
GroupElement make_element(const GroupSpec& spec, std::vector<std::int64_t> raw);
GroupElement identity(const GroupSpec& spec);

bool conforms(const GroupSpec& spec, const GroupElement& x);
bool is_identity(const GroupElement& x);

GroupElement add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement negate(const GroupSpec& spec, const GroupElement& x);
GroupElement subtract(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);

/// x != identity and x + x == identity.
bool is_involution(const GroupSpec& spec, const GroupElement& x);

/// All elements, lexicographic by residue tuple (last factor fastest).
std::vector<GroupElement> enumerate(const GroupSpec& spec,
                                    std::uint64_t limit = kDefaultEnumerationLimit);

/// Position of x in enumerate(spec); mixed-radix with the last factor fastest.
std::uint64_t element_index(const GroupSpec& spec, const GroupElement& x);
GroupElement element_at(const GroupSpec& spec, std::uint64_t index);

std::string to_string(const GroupElement& x);

}  // namespace flipforge
