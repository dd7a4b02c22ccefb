#include "flipforge/group.hpp"

#include <charconv>
#include <limits>

#include "flipforge/error.hpp"

namespace flipforge {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw PreconditionError("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::int64_t> parse_list(std::string_view s) {
  std::vector<std::int64_t> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void check_conforms(const GroupSpec& spec, const GroupElement& x) {
  if (x.residues.size() != spec.rank()) {
    throw PreconditionError("element has " + std::to_string(x.residues.size()) +
                            " components, group " + spec.to_string() + " has " +
                            std::to_string(spec.rank()));
  }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw PreconditionError("group needs at least one cyclic factor");
  for (auto n : factors_) {
    if (n < 2) throw PreconditionError("cyclic factor must be >= 2, got " + std::to_string(n));
    if (order_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      throw PreconditionError("group order overflows 64-bit arithmetic");
    }
    order_ *= static_cast<std::uint64_t>(n);
  }
  // Element sums of two residues must stay representable.
  if (order_ > (std::uint64_t{1} << 62)) throw PreconditionError("group order too large");
}

GroupSpec GroupSpec::parse(std::string_view text) {
  if (text.starts_with("z2xz:")) {
    return GroupSpec({2, parse_int(text.substr(5))});
  }
  if (text.starts_with("z:")) {
    return GroupSpec(parse_list(text.substr(2)));
  }
  throw PreconditionError("unrecognised group syntax '" + std::string(text) +
                          "' (expected z:n, z2xz:n or z:a,b,c)");
}

std::string GroupSpec::to_string() const {
  if (factors_.size() == 2 && factors_[0] == 2) {
    return "z2xz:" + std::to_string(factors_[1]);
  }
  std::string out = "z:";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors_[i]);
  }
  return out;
}

GroupElement make_element(const GroupSpec& spec, std::vector<std::int64_t> raw) {
  GroupElement x{std::move(raw)};
  check_conforms(spec, x);
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    auto n = spec.factors()[i];
    x.residues[i] = ((x.residues[i] % n) + n) % n;
  }
  return x;
}

GroupElement identity(const GroupSpec& spec) {
  return GroupElement{std::vector<std::int64_t>(spec.rank(), 0)};
}

bool conforms(const GroupSpec& spec, const GroupElement& x) {
  if (x.residues.size() != spec.rank()) return false;
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    if (x.residues[i] < 0 || x.residues[i] >= spec.factors()[i]) return false;
  }
  return true;
}

bool is_identity(const GroupElement& x) {
  for (auto r : x.residues) {
    if (r != 0) return false;
  }
  return true;
}

GroupElement add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  check_conforms(spec, x);
  check_conforms(spec, y);
  GroupElement z{std::vector<std::int64_t>(spec.rank())};
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    z.residues[i] = (x.residues[i] + y.residues[i]) % spec.factors()[i];
  }
  return z;
}

GroupElement negate(const GroupSpec& spec, const GroupElement& x) {
  check_conforms(spec, x);
  GroupElement z{std::vector<std::int64_t>(spec.rank())};
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    auto n = spec.factors()[i];
    z.residues[i] = (n - x.residues[i]) % n;
  }
  return z;
}

GroupElement subtract(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  return add(spec, x, negate(spec, y));
}

bool is_involution(const GroupSpec& spec, const GroupElement& x) {
  return !is_identity(x) && is_identity(add(spec, x, x));
}

std::vector<GroupElement> enumerate(const GroupSpec& spec, std::uint64_t limit) {
  if (spec.order() > limit) {
    throw PreconditionError("group " + spec.to_string() + " has order " +
                            std::to_string(spec.order()) + ", above the enumeration limit " +
                            std::to_string(limit));
  }
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (std::uint64_t i = 0; i < spec.order(); ++i) out.push_back(element_at(spec, i));
  return out;
}

std::uint64_t element_index(const GroupSpec& spec, const GroupElement& x) {
  check_conforms(spec, x);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    index = index * static_cast<std::uint64_t>(spec.factors()[i]) +
            static_cast<std::uint64_t>(x.residues[i]);
  }
  return index;
}

GroupElement element_at(const GroupSpec& spec, std::uint64_t index) {
  if (index >= spec.order()) throw PreconditionError("element index out of range");
  GroupElement x{std::vector<std::int64_t>(spec.rank())};
  for (std::size_t i = spec.rank(); i-- > 0;) {
    auto n = static_cast<std::uint64_t>(spec.factors()[i]);
    x.residues[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return x;
}

std::string to_string(const GroupElement& x) {
  if (x.residues.size() == 1) return std::to_string(x.residues[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x.residues[i]);
  }
  return out + ")";
}

}  // namespace flipforge
