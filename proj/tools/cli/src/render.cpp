#include "graphmag_cli/render.hpp"

#include <sstream>

#include "graphmag/serialize.hpp"

namespace graphmag::cli {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "plain") return Format::Plain;
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Integer& c = p.coefficients()[k];
    if (c == 0) continue;
    const Integer magnitude = abs(c);
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    if (k == 0 || magnitude != 1) os << magnitude;
    if (k == 1) os << 'q';
    if (k >= 2) os << "q^{" << k << '}';
    first = false;
  }
  return os.str();
}

std::string latex(const RationalFunction& f) {
  if (f.denominator() == Polynomial({1})) return latex(f.numerator());
  return "\\frac{" + latex(f.numerator()) + "}{" + latex(f.denominator()) + "}";
}

std::string latex(const TruncatedSeries& s) {
  const Polynomial p(std::vector<Integer>(s.coefficients().begin(), s.coefficients().end()));
  const std::size_t next = s.order() + 1;
  const std::string tail = next == 1 ? "O(q)" : "O(q^{" + std::to_string(next) + "})";
  return p.is_zero() ? tail : latex(p) + " + " + tail;
}

std::string plain(const TruncatedSeries& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (k > 0) os << ' ';
    os << s[k];
  }
  return os.str();
}

std::string render(const RationalFunction& f, Format format) {
  switch (format) {
    case Format::Plain:
      return f.to_string();
    case Format::Latex:
      return latex(f);
    case Format::Json:
      return to_json(f).dump();
  }
  return {};
}

std::string render(const TruncatedSeries& s, Format format) {
  switch (format) {
    case Format::Plain:
      return plain(s);
    case Format::Latex:
      return latex(s);
    case Format::Json:
      return to_json(s).dump();
  }
  return {};
}

}  // namespace graphmag::cli
