#include "growthlab/cli/descriptor.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/cli/zero_io.hpp"
#include "growthlab/error.hpp"
#include "growthlab/products.hpp"

namespace growthlab::cli {

namespace {

using funcat::FunctionSpec;
using cplx = std::complex<double>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  fail(ErrorKind::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

double parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) bad("not a number", s);
  return v;
}

// Splits at top-level separators, ignoring those inside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) bad("unbalanced parentheses", s);
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) bad("unbalanced parentheses", s);
  out.push_back(s.substr(start));
  return out;
}

std::string_view unwrap(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    // only when the outer pair matches
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) {
        outer = false;
        break;
      }
    }
    if (!outer) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

std::vector<cplx> parse_coefficients(std::string_view s) {
  std::vector<cplx> out;
  for (auto part : split_top(s, ',')) out.push_back(parse_complex(part));
  return out;
}

struct FileArgs {
  std::filesystem::path path;
  std::optional<int> q;
  std::optional<double> p;
  cplx leading = 1.0;
};

FileArgs parse_file_args(std::string_view s, const std::filesystem::path& base_dir) {
  auto parts = split_top(s, ',');
  FileArgs out;
  std::filesystem::path path{std::string(trim(parts.front()))};
  if (path.empty()) bad("missing file name", s);
  out.path = path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto kv = trim(parts[i]);
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) bad("expected key=value", kv);
    const auto key = trim(kv.substr(0, eq));
    const auto val = kv.substr(eq + 1);
    if (key == "q") {
      const double q = parse_number(val);
      if (q < 0 || q != std::floor(q)) bad("genus must be a nonnegative integer", val);
      out.q = static_cast<int>(q);
    } else if (key == "p") {
      out.p = parse_number(val);
    } else if (key == "leading") {
      out.leading = parse_complex(val);
    } else {
      bad("unknown option", key);
    }
  }
  if (out.q && out.p) bad("give either q or p", s);
  return out;
}

}  // namespace

double parse_real(std::string_view text) {
  auto s = trim(text);
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    const auto head = trim(s.substr(0, s.size() - 2));
    if (head.empty() || head == "+") return std::numbers::pi;
    if (head == "-") return -std::numbers::pi;
    auto h = head;
    if (h.back() == '*') h.remove_suffix(1);
    return parse_number(h) * std::numbers::pi;
  }
  return parse_number(s);
}

std::complex<double> parse_complex(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) bad("empty number", text);
  if (s.back() != 'i' || (s.size() >= 2 && s.substr(s.size() - 2) == "pi")) return {parse_real(s), 0.0};
  s.remove_suffix(1);
  // split before the last sign that is not an exponent sign
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](std::string_view t) {
    t = trim(t);
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    if (t.back() == '*') t.remove_suffix(1);
    return parse_real(t);
  };
  if (split == std::string_view::npos) return {0.0, imag_of(s)};
  return {parse_real(s.substr(0, split)), imag_of(s.substr(split))};
}

funcat::FunctionSpec parse_descriptor(std::string_view text, const std::filesystem::path& base_dir,
                                      double merge_radius) {
  const auto s = unwrap(text);
  if (s.empty()) bad("empty descriptor", text);
  const auto colon = s.find(':');
  const auto head = trim(s.substr(0, colon));
  const auto arg = colon == std::string_view::npos ? std::string_view{} : trim(s.substr(colon + 1));
  const bool has_arg = colon != std::string_view::npos;

  if (head == "exp") {
    if (!has_arg) return FunctionSpec::exp_poly({1.0, 0.0});
    return FunctionSpec::exp_poly(parse_coefficients(arg));
  }
  if (head == "sin") {
    if (!has_arg) bad("sin needs a scale", s);
    return FunctionSpec::sine(parse_complex(arg));
  }
  if (head == "sinc") {
    if (has_arg && arg != "pi") bad("only sinc:pi is supported", s);
    return funcat::sinc_pi();
  }
  if (head == "poly") {
    if (!has_arg) bad("poly needs coefficients", s);
    return FunctionSpec::polynomial(parse_coefficients(arg));
  }
  if (head == "const") {
    if (!has_arg) bad("const needs a value", s);
    return FunctionSpec::constant(parse_complex(arg));
  }
  if (head == "ml") {
    if (!has_arg) bad("ml needs an order", s);
    const auto parts = split_top(arg, ',');
    if (parts.size() > 2) bad("ml takes rho[,mu]", s);
    const double rho = parse_real(parts[0]);
    const double mu = parts.size() == 2 ? parse_real(parts[1]) : 1.0;
    return FunctionSpec::mittag_leffler(rho, mu);
  }
  if (head == "rgamma") {
    return FunctionSpec::reciprocal_gamma(has_arg ? parse_complex(arg) : cplx{0.0, 0.0});
  }
  if (head == "zeros") {
    const auto fa = parse_file_args(arg, base_dir);
    const auto z = read_zeros_file(fa.path, merge_radius);
    products::CanonicalProductSpec spec;
    if (fa.p) {
      spec = products::build_f_Z(z, *fa.p);
    } else {
      spec = products::build_f_Z(z, 1.0);
      spec.genus = fa.q.value_or(0);
    }
    if (fa.leading != cplx{1.0, 0.0}) spec.log_leading = std::log(std::abs(fa.leading));
    return FunctionSpec::canonical_product(std::move(spec));
  }
  if (head == "roots") {
    const auto fa = parse_file_args(arg, base_dir);
    if (fa.q || fa.p) bad("roots takes only leading=", s);
    return FunctionSpec::zero_form(fa.leading, read_zeros_file(fa.path, merge_radius));
  }
  if (head == "prod") {
    std::vector<FunctionSpec> factors;
    for (auto part : split_top(arg, '*')) factors.push_back(parse_descriptor(part, base_dir, merge_radius));
    return FunctionSpec::product(std::move(factors));
  }
  if (head == "quot") {
    const auto parts = split_top(arg, '|');
    if (parts.size() != 2) bad("quot needs exactly A|B", s);
    return FunctionSpec::quotient(parse_descriptor(parts[0], base_dir, merge_radius),
                                  parse_descriptor(parts[1], base_dir, merge_radius));
  }
  bad("unknown function", head);
}

}  // namespace growthlab::cli
