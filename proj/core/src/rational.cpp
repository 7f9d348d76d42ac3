#include "netconn/rational.hpp"

#include <charconv>
#include <string>

namespace netconn {

namespace {

std::uint64_t parse_digits(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw Error("invalid rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) {
    throw Error("rational with zero denominator");
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int digits) const {
  std::uint64_t scale = 1;
  for (int i = 0; i < digits; ++i) {
    scale *= 10;
  }
  // Round half up at the last printed digit.
  const auto scaled = (static_cast<unsigned __int128>(num_) * scale * 2 + den_) / (2 * den_);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_digits(text.substr(0, slash), text),
                    parse_digits(text.substr(slash + 1), text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (frac_part.size() > 18) {
      throw Error("too many decimal places in '" + std::string(text) + "'");
    }
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
      den *= 10;
    }
    const std::uint64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
    const std::uint64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
    if (int_part.empty() && frac_part.empty()) {
      throw Error("invalid rational '" + std::string(text) + "'");
    }
    return Rational(whole * den + frac, den);
  }
  return Rational(parse_digits(text, text));
}

}  // namespace netconn
