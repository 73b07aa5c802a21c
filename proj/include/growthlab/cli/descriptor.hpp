#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <string_view>

#include "growthlab/funcat.hpp"

namespace growthlab::cli {

/// Real literal: a decimal number, `pi`, or `<number>pi`.
double parse_real(std::string_view text);

/// Complex literal: `2`, `-1.5`, `3i`, `-i`, `1+2i`, `0.5-2e-3i`.
std::complex<double> parse_complex(std::string_view text);

/// Function descriptor mini-language:
///
///   exp                 exp(z)
///   exp:c_n,...,c_0     exp(P), coefficients in descending powers
///   sin:S               sin(S z); S may be `pi`
///   sinc[:pi]           sin(pi z)/(pi z)
///   poly:c_n,...,c_0    polynomial
///   const:c             constant
///   ml:rho[,mu]         Mittag-Leffler function
///   rgamma[:shift]      1/Gamma(z + shift)
///   zeros:FILE[,q=Q|,p=P][,leading=L]
///                       canonical product over a zero list (default q = 0)
///   roots:FILE[,leading=L]
///                       leading * prod (z - a)
///   prod:A*B*...        product
///   quot:A|B            quotient A/B
///
/// Parentheses group nested descriptors, e.g. `quot:(prod:exp*poly:1,3)|poly:1,2`.
/// Relative file names resolve against base_dir. Throws ErrorKind::ParseError.
funcat::FunctionSpec parse_descriptor(std::string_view text,
                                      const std::filesystem::path& base_dir = {},
                                      double merge_radius = 0.0);

}  // namespace growthlab::cli
