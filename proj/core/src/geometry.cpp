#include "ncp/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "ncp/errors.hpp"

namespace ncp {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(ErrorKind::Parse, "not a rational number: \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool OpenBox::contains(const Point& p) const {
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (!(lower[k] < p[k] && p[k] < upper[k])) return false;
  }
  return true;
}

void BoxCover::validate() const {
  if (d < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 1");
  if (boxes.size() > static_cast<std::size_t>(kMaxNeurons)) {
    throw Error(ErrorKind::IndexOutOfRange, "at most 64 boxes are supported");
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const OpenBox& b = boxes[i];
    if (b.lower.size() != static_cast<std::size_t>(d) || b.upper.size() != static_cast<std::size_t>(d)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "box " + std::to_string(i + 1) + " does not have dimension " + std::to_string(d));
    }
    for (int k = 0; k < d; ++k) {
      if (!(b.lower[k] < b.upper[k])) {
        throw Error(ErrorKind::InvalidBox,
                    "box " + std::to_string(i + 1) + " is empty along axis " + std::to_string(k + 1));
      }
    }
  }
}

Codeword BoxCover::membership(const Point& p) const {
  Codeword c;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].contains(p)) c = c.with(static_cast<int>(i) + 1);
  }
  return c;
}

Realization realize(const BoxCover& cover) {
  cover.validate();
  // Along each axis the membership pattern is constant on the open gaps
  // between consecutive endpoints and at each endpoint, so one sample per
  // gap and per endpoint sees every cell of the grid arrangement.
  std::vector<std::vector<Rational>> samples(static_cast<std::size_t>(cover.d));
  for (int k = 0; k < cover.d; ++k) {
    std::vector<Rational> ends;
    for (const OpenBox& b : cover.boxes) {
      ends.push_back(b.lower[k]);
      ends.push_back(b.upper[k]);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    auto& axis = samples[static_cast<std::size_t>(k)];
    if (ends.empty()) {
      axis.emplace_back(0);
      continue;
    }
    axis.push_back(ends.front() - 1);
    for (std::size_t e = 0; e < ends.size(); ++e) {
      axis.push_back(ends[e]);
      if (e + 1 < ends.size()) axis.push_back((ends[e] + ends[e + 1]) / 2);
    }
    axis.push_back(ends.back() + 1);
  }

  Realization out;
  std::vector<std::size_t> at(static_cast<std::size_t>(cover.d), 0);
  Point p(static_cast<std::size_t>(cover.d));
  while (true) {
    for (std::size_t k = 0; k < at.size(); ++k) p[k] = samples[k][at[k]];
    out.witnesses.try_emplace(cover.membership(p), p);
    std::size_t k = 0;
    for (; k < at.size(); ++k) {
      if (++at[k] < samples[k].size()) break;
      at[k] = 0;
    }
    if (k == at.size()) break;
  }
  std::vector<Codeword> words;
  for (const auto& [c, _] : out.witnesses) words.push_back(c);
  out.code = Code::from_codewords(static_cast<int>(cover.boxes.size()), std::move(words));
  return out;
}

Code code_of_cover(const BoxCover& cover) { return realize(cover).code; }

BoxCover random_box_cover(int d, int n, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 1");
  if (n < 0 || n > kMaxNeurons) throw Error(ErrorKind::IndexOutOfRange, "box count outside 0..64");
  // Raw engine output keeps the sequence identical across standard libraries.
  std::mt19937_64 engine(seed);
  BoxCover cover;
  cover.d = d;
  for (int i = 0; i < n; ++i) {
    OpenBox box;
    for (int k = 0; k < d; ++k) {
      const auto start = static_cast<std::int64_t>(engine() % 48);
      const auto length = static_cast<std::int64_t>(1 + engine() % 16);
      box.lower.emplace_back(start, 4);
      box.upper.emplace_back(start + length, 4);
    }
    cover.boxes.push_back(std::move(box));
  }
  return cover;
}

}  // namespace ncp
