#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "ncp/code.hpp"

namespace ncp {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws Error(Parse).
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

using Point = std::vector<Rational>;

/// Product of open intervals (lower[k], upper[k]).
struct OpenBox {
  std::vector<Rational> lower;
  std::vector<Rational> upper;

  std::size_t dimension() const { return lower.size(); }
  bool contains(const Point& p) const;
};

/// Box i realizes neuron i + 1.
struct BoxCover {
  int d = 1;
  std::vector<OpenBox> boxes;

  /// Throws Error(DimensionMismatch) or Error(InvalidBox).
  void validate() const;
  /// Neurons whose boxes contain p.
  Codeword membership(const Point& p) const;
};

struct Realization {
  Code code;
  std::map<Codeword, Point> witnesses;  // one sample point per codeword
};

/// Exact code of an open box cover, evaluated on the grid of endpoints,
/// midpoints and one point beyond each extreme per axis.
Realization realize(const BoxCover& cover);
Code code_of_cover(const BoxCover& cover);

/// Seeded boxes with endpoints on the quarter-integer lattice inside [0, 16).
/// Same seed, same cover on every platform.
BoxCover random_box_cover(int d, int n, std::uint64_t seed);

}  // namespace ncp
