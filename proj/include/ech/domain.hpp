#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

class DomainSpec;

struct Ball {
  Rational radius;
};

struct Ellipsoid {
  Rational a;
  Rational b;
};

struct Scale {
  Rational factor;
  std::shared_ptr<const DomainSpec> inner;
};

struct Union {
  std::vector<DomainSpec> parts;
};

/// Symbolic description of a model four-dimensional domain.
///
/// Immutable once built. The factories reject nonpositive parameters and
/// empty unions with std::invalid_argument, so every DomainSpec that exists
/// is valid.
class DomainSpec {
public:
  using Node = std::variant<Ball, Ellipsoid, Scale, Union>;

  static DomainSpec ball(Rational radius);
  static DomainSpec ellipsoid(Rational a, Rational b);
  static DomainSpec scale(Rational factor, DomainSpec inner);
  static DomainSpec disjoint_union(std::vector<DomainSpec> parts);

  [[nodiscard]] const Node& node() const noexcept { return node_; }

  /// True if a Union node appears anywhere in the tree.
  [[nodiscard]] bool contains_union() const;

  /// Canonical text in the domain-spec grammar; parses back to an equal spec.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const DomainSpec& lhs, const DomainSpec& rhs);

private:
  explicit DomainSpec(Node node) : node_(std::move(node)) {}

  Node node_;
};

/// Error raised by parse_domain, annotated with the byte offset of the
/// offending input and the token that was expected there.
class DomainParseError : public std::runtime_error {
public:
  DomainParseError(std::size_t position, std::string expected, std::string_view input);

  [[nodiscard]] std::size_t position() const noexcept { return position_; }
  [[nodiscard]] const std::string& expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

/// Parses `ball:<r>`, `ellipsoid:<a>,<b>`, `scale:<s>:(<spec>)` and
/// `union:(<spec>;<spec>;...)`. Whitespace is ignored. Numbers are decimals
/// or `p/q` rationals and must be strictly positive.
[[nodiscard]] DomainSpec parse_domain(std::string_view text);

/// Symplectic 4-volume: r^2/2 for a ball, ab/2 for an ellipsoid,
/// s^2 vol(X) for a scaling, and the sum over union parts.
[[nodiscard]] Rational domain_volume(const DomainSpec& spec);

}  // namespace ech
