// Copyright 2026 The Pendant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "pendant/region.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "pendant/error.h"

namespace pendant {

namespace {

void require_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("region parameters must be finite");
  }
}

std::string format_number(double v) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Region2D::Region2D(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

Region2D Region2D::disk(double cx, double cy, double r) {
  require_finite({cx, cy, r});
  if (!(r > 0)) throw InvalidArgument("disk radius must be > 0");
  return Region2D(Disk{cx, cy, r, false});
}

Region2D Region2D::closed_disk(double cx, double cy, double r) {
  require_finite({cx, cy, r});
  if (!(r > 0)) throw InvalidArgument("disk radius must be > 0");
  return Region2D(Disk{cx, cy, r, true});
}

Region2D Region2D::half_plane(double a, double b, double c) {
  require_finite({a, b, c});
  if (a == 0 && b == 0) throw InvalidArgument("half-plane normal must be nonzero");
  return Region2D(HalfPlane{a, b, c});
}

Region2D Region2D::cheby_band(double kx, double ky, double c) {
  require_finite({kx, ky, c});
  if (kx < 0 || ky < 0 || (kx == 0 && ky == 0)) {
    throw InvalidArgument("cheby_band coefficients must be >= 0 and not both 0");
  }
  return Region2D(ChebyBand{kx, ky, c});
}

Region2D Region2D::rect(double x0, double x1, double y0, double y1) {
  require_finite({x0, x1, y0, y1});
  if (!(x0 < x1) || !(y0 < y1)) throw InvalidArgument("rect needs x0 < x1 and y0 < y1");
  return Region2D(Rect{x0, x1, y0, y1});
}

Region2D region_and(Region2D a, Region2D b) {
  return Region2D(Region2D::And{std::move(a), std::move(b)});
}
Region2D region_or(Region2D a, Region2D b) {
  return Region2D(Region2D::Or{std::move(a), std::move(b)});
}
Region2D region_not(Region2D a) { return Region2D(Region2D::Not{std::move(a)}); }

bool Region2D::contains(Vec2 p) const {
  return std::visit(
      Overloaded{
          [&](const Disk& d) {
            const double dx = p.x - d.cx, dy = p.y - d.cy;
            const double q = dx * dx + dy * dy, r2 = d.r * d.r;
            return d.closed ? q <= r2 : q < r2;
          },
          [&](const HalfPlane& h) { return h.a * p.x + h.b * p.y <= h.c; },
          [&](const ChebyBand& c) {
            return std::max(c.kx * std::abs(p.x), c.ky * std::abs(p.y)) > c.c;
          },
          [&](const Rect& r) {
            return p.x >= r.x0 && p.x <= r.x1 && p.y >= r.y0 && p.y <= r.y1;
          },
          [&](const Not& n) { return !n.child.contains(p); },
          [&](const And& a) { return a.lhs.contains(p) && a.rhs.contains(p); },
          [&](const Or& o) { return o.lhs.contains(p) || o.rhs.contains(p); },
      },
      *node_);
}

std::optional<Box2> Region2D::bounding_box() const {
  using Result = std::optional<Box2>;
  return std::visit(
      Overloaded{
          [](const Disk& d) -> Result {
            return Box2{d.cx - d.r, d.cx + d.r, d.cy - d.r, d.cy + d.r};
          },
          [](const HalfPlane&) -> Result { return std::nullopt; },
          [](const ChebyBand&) -> Result { return std::nullopt; },
          [](const Rect& r) -> Result { return Box2{r.x0, r.x1, r.y0, r.y1}; },
          [](const Not&) -> Result { return std::nullopt; },
          [](const And& a) -> Result {
            const Result l = a.lhs.bounding_box(), r = a.rhs.bounding_box();
            if (!l) return r;
            if (!r) return l;
            return Box2{std::max(l->x_min, r->x_min), std::min(l->x_max, r->x_max),
                        std::max(l->y_min, r->y_min), std::min(l->y_max, r->y_max)};
          },
          [](const Or& o) -> Result {
            const Result l = o.lhs.bounding_box(), r = o.rhs.bounding_box();
            if (!l || !r) return std::nullopt;
            if (l->empty()) return r;
            if (r->empty()) return l;
            return Box2{std::min(l->x_min, r->x_min), std::max(l->x_max, r->x_max),
                        std::min(l->y_min, r->y_min), std::max(l->y_max, r->y_max)};
          },
      },
      *node_);
}

bool operator==(const Region2D& a, const Region2D& b) {
  if (a.node_ == b.node_) return true;
  const Region2D::Node& x = *a.node_;
  const Region2D::Node& y = *b.node_;
  if (x.index() != y.index()) return false;
  return std::visit(
      Overloaded{
          [&](const Region2D::Not& n) {
            return n.child == std::get<Region2D::Not>(y).child;
          },
          [&](const Region2D::And& n) {
            const auto& m = std::get<Region2D::And>(y);
            return n.lhs == m.lhs && n.rhs == m.rhs;
          },
          [&](const Region2D::Or& n) {
            const auto& m = std::get<Region2D::Or>(y);
            return n.lhs == m.lhs && n.rhs == m.rhs;
          },
          [&](const auto& leaf) {
            return leaf == std::get<std::decay_t<decltype(leaf)>>(y);
          },
      },
      x);
}

namespace {

std::string call(std::string_view name, std::initializer_list<double> args) {
  std::string out(name);
  out += '(';
  bool first = true;
  for (double v : args) {
    if (!first) out += ',';
    out += format_number(v);
    first = false;
  }
  out += ')';
  return out;
}

bool is_binary(const Region2D& r) {
  return std::holds_alternative<Region2D::And>(r.node()) ||
         std::holds_alternative<Region2D::Or>(r.node());
}

std::string wrap(const Region2D& r, bool parens) {
  return parens ? "(" + r.to_string() + ")" : r.to_string();
}

}  // namespace

std::string Region2D::to_string() const {
  return std::visit(
      Overloaded{
          [](const Disk& d) {
            return call(d.closed ? "closed_disk" : "disk", {d.cx, d.cy, d.r});
          },
          [](const HalfPlane& h) { return call("halfplane", {h.a, h.b, h.c}); },
          [](const ChebyBand& c) { return call("cheby_band", {c.kx, c.ky, c.c}); },
          [](const Rect& r) { return call("rect", {r.x0, r.x1, r.y0, r.y1}); },
          [](const Not& n) { return "!" + wrap(n.child, is_binary(n.child)); },
          // Operators are left-associative, so a right operand of the same
          // kind needs parentheses to survive a round trip.
          [](const And& a) {
            const bool lp = std::holds_alternative<Or>(a.lhs.node());
            const bool rp = is_binary(a.rhs);
            return wrap(a.lhs, lp) + " && " + wrap(a.rhs, rp);
          },
          [](const Or& o) {
            const bool rp = std::holds_alternative<Or>(o.rhs.node());
            return wrap(o.lhs, false) + " || " + wrap(o.rhs, rp);
          },
      },
      *node_);
}

namespace {

class RegionParser {
 public:
  explicit RegionParser(std::string_view text) : text_(text) {}

  Region2D parse() {
    Region2D r = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what,
                         ParseError::Kind kind = ParseError::Kind::kSyntax) const {
    throw ParseError(kind, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  Region2D parse_or() {
    Region2D lhs = parse_and();
    while (accept("||")) lhs = region_or(lhs, parse_and());
    return lhs;
  }

  Region2D parse_and() {
    Region2D lhs = parse_unary();
    while (accept("&&")) lhs = region_and(lhs, parse_unary());
    return lhs;
  }

  Region2D parse_unary() {
    if (accept("!")) return region_not(parse_unary());
    if (accept("(")) {
      Region2D inner = parse_or();
      expect(")");
      return inner;
    }
    return parse_call();
  }

  Region2D parse_call() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a region primitive");
    const std::string_view name = text_.substr(start, pos_ - start);

    std::size_t arity = 0;
    if (name == "disk" || name == "closed_disk" || name == "halfplane" ||
        name == "cheby_band") {
      arity = 3;
    } else if (name == "rect") {
      arity = 4;
    } else {
      pos_ = start;
      fail("unknown primitive '" + std::string(name) + "'", ParseError::Kind::kUnknownName);
    }

    expect("(");
    std::vector<double> args;
    skip_space();
    if (!accept(")")) {
      do {
        args.push_back(parse_number());
      } while (accept(","));
      expect(")");
    }
    if (args.size() != arity) {
      pos_ = start;
      fail(std::string(name) + " takes " + std::to_string(arity) + " arguments, got " +
               std::to_string(args.size()),
           ParseError::Kind::kArity);
    }

    try {
      if (name == "disk") return Region2D::disk(args[0], args[1], args[2]);
      if (name == "closed_disk") return Region2D::closed_disk(args[0], args[1], args[2]);
      if (name == "halfplane") return Region2D::half_plane(args[0], args[1], args[2]);
      if (name == "cheby_band") return Region2D::cheby_band(args[0], args[1], args[2]);
      return Region2D::rect(args[0], args[1], args[2], args[3]);
    } catch (const InvalidArgument& e) {
      pos_ = start;
      fail(e.what(), ParseError::Kind::kInvariant);
    }
  }

  double parse_number() {
    skip_space();
    const std::size_t start = pos_;
    // from_chars rejects a leading '+', so step over it here.
    std::size_t first = start;
    if (first < text_.size() && text_[first] == '+') ++first;
    double value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + first, text_.data() + text_.size(), value);
    if (ec != std::errc() || (first != start && text_[first] == '-')) {
      fail("expected a number");
    }
    if (!std::isfinite(value)) fail("number out of range");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Region2D parse_region(std::string_view text) { return RegionParser(text).parse(); }

Region2D pendant_outline() {
  return region_and(Region2D::disk(0, -10, 70), region_not(Region2D::closed_disk(0, -64, 7)));
}

}  // namespace pendant
