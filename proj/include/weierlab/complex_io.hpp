#ifndef WEIERLAB_COMPLEX_IO_HPP
#define WEIERLAB_COMPLEX_IO_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace weierlab
{

/// Parses "a+bi", "a-bi" or a plain real "a". Reals are decimal, with an optional exponent.
/// A bare "i" is rejected; write "0+1i".
std::optional<std::complex<double>> parse_complex(std::string_view text);

/// Formats as "a+bi" / "a-bi" with the shortest round-trip representation of each part.
std::string format_complex(const std::complex<double> &value);

/// A real with 15 significant digits in the C locale. Exact zeros print as 0.000000000000000.
std::string format_real15(double value);

/// The shortest decimal string that reads back as the same double.
std::string format_real_roundtrip(double value);

} // namespace weierlab

#endif
