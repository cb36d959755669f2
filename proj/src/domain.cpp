#include "ech/domain.hpp"

#include <cctype>

namespace ech {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(const Rational& value, const char* what) {
  if (!value.is_positive()) throw std::invalid_argument(std::string(what) + " must be positive, got " + value.to_string());
}

}  // namespace

DomainSpec DomainSpec::ball(Rational radius) {
  require_positive(radius, "ball radius");
  return DomainSpec(Ball{radius});
}

DomainSpec DomainSpec::ellipsoid(Rational a, Rational b) {
  require_positive(a, "ellipsoid parameter a");
  require_positive(b, "ellipsoid parameter b");
  return DomainSpec(Ellipsoid{a, b});
}

DomainSpec DomainSpec::scale(Rational factor, DomainSpec inner) {
  require_positive(factor, "scale factor");
  return DomainSpec(Scale{factor, std::make_shared<const DomainSpec>(std::move(inner))});
}

DomainSpec DomainSpec::disjoint_union(std::vector<DomainSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("union needs at least one part");
  return DomainSpec(Union{std::move(parts)});
}

bool DomainSpec::contains_union() const {
  return std::visit(overloaded{
                        [](const Ball&) { return false; },
                        [](const Ellipsoid&) { return false; },
                        [](const Scale& s) { return s.inner->contains_union(); },
                        [](const Union&) { return true; },
                    },
                    node_);
}

std::string DomainSpec::to_string() const {
  return std::visit(overloaded{
                        [](const Ball& b) { return "ball:" + b.radius.to_string(); },
                        [](const Ellipsoid& e) { return "ellipsoid:" + e.a.to_string() + "," + e.b.to_string(); },
                        [](const Scale& s) { return "scale:" + s.factor.to_string() + ":(" + s.inner->to_string() + ")"; },
                        [](const Union& u) {
                          std::string out = "union:(";
                          for (std::size_t i = 0; i < u.parts.size(); ++i) {
                            if (i) out += ';';
                            out += u.parts[i].to_string();
                          }
                          return out + ")";
                        },
                    },
                    node_);
}

bool operator==(const DomainSpec& lhs, const DomainSpec& rhs) {
  if (lhs.node_.index() != rhs.node_.index()) return false;
  return std::visit(overloaded{
                        [&](const Ball& b) { return b.radius == std::get<Ball>(rhs.node_).radius; },
                        [&](const Ellipsoid& e) {
                          const auto& o = std::get<Ellipsoid>(rhs.node_);
                          return e.a == o.a && e.b == o.b;
                        },
                        [&](const Scale& s) {
                          const auto& o = std::get<Scale>(rhs.node_);
                          return s.factor == o.factor && *s.inner == *o.inner;
                        },
                        [&](const Union& u) { return u.parts == std::get<Union>(rhs.node_).parts; },
                    },
                    lhs.node_);
}

Rational domain_volume(const DomainSpec& spec) {
  return std::visit(overloaded{
                        [](const Ball& b) { return b.radius * b.radius / Rational(2); },
                        [](const Ellipsoid& e) { return e.a * e.b / Rational(2); },
                        [](const Scale& s) { return s.factor * s.factor * domain_volume(*s.inner); },
                        [](const Union& u) {
                          Rational total(0);
                          for (const auto& part : u.parts) total += domain_volume(part);
                          return total;
                        },
                    },
                    spec.node());
}

DomainParseError::DomainParseError(std::size_t position, std::string expected, std::string_view input)
    : std::runtime_error("domain spec parse error at position " + std::to_string(position) + ": expected " +
                         expected + " in \"" + std::string(input) + "\""),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  DomainSpec parse() {
    DomainSpec spec = spec_();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return spec;
  }

private:
  [[noreturn]] void fail(std::string expected) const { throw DomainParseError(pos_, std::move(expected), text_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("'") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string w(text_.substr(start, pos_ - start));
    for (auto& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return w;
  }

  Rational number() {
    skip_ws();
    const std::size_t start = pos_;
    std::string token;
    // Collect number characters, allowing interior whitespace to be skipped.
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == '+' || c == '-' || c == 'e' ||
          c == 'E') {
        token += c;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    while (pos_ > start && std::isspace(static_cast<unsigned char>(text_[pos_ - 1]))) --pos_;
    auto value = parse_rational(token);
    if (!value) {
      pos_ = start;
      fail("number (decimal or p/q)");
    }
    if (!value->is_positive()) {
      pos_ = start;
      fail("positive number");
    }
    return *value;
  }

  DomainSpec spec_() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string kind = word();
    if (kind == "ball") {
      expect(':');
      return DomainSpec::ball(number());
    }
    if (kind == "ellipsoid") {
      expect(':');
      Rational a = number();
      expect(',');
      Rational b = number();
      return DomainSpec::ellipsoid(a, b);
    }
    if (kind == "scale") {
      expect(':');
      Rational s = number();
      expect(':');
      expect('(');
      DomainSpec inner = spec_();
      expect(')');
      return DomainSpec::scale(s, std::move(inner));
    }
    if (kind == "union") {
      expect(':');
      expect('(');
      std::vector<DomainSpec> parts;
      parts.push_back(spec_());
      while (peek(';')) {
        ++pos_;
        parts.push_back(spec_());
      }
      expect(')');
      return DomainSpec::disjoint_union(std::move(parts));
    }
    pos_ = start;
    fail("one of 'ball', 'ellipsoid', 'scale', 'union'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DomainSpec parse_domain(std::string_view text) { return Parser(text).parse(); }

}  // namespace ech
