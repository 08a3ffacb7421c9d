#include "weierlab/complex_io.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace weierlab
{

namespace
{

// Parses an unsigned decimal real at the front of text. from_chars does not accept a
// leading '+', and signs are handled by the caller.
std::optional<double> take_real(std::string_view &text)
{
    if (text.empty() || text.front() == '+' || text.front() == '-') {
        return std::nullopt;
    }
    double value = 0;
    const auto *begin = text.data();
    const auto [ptr, ec] = std::from_chars(begin, begin + text.size(), value, std::chars_format::general);
    if (ec != std::errc() || !std::isfinite(value)) {
        return std::nullopt;
    }
    text.remove_prefix(static_cast<std::size_t>(ptr - begin));
    return value;
}

std::optional<double> take_signed_real(std::string_view &text)
{
    double sign = 1;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        sign = text.front() == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    auto value = take_real(text);
    if (!value) {
        return std::nullopt;
    }
    return sign * *value;
}

} // namespace

std::optional<std::complex<double>> parse_complex(std::string_view text)
{
    auto re = take_signed_real(text);
    if (!re) {
        return std::nullopt;
    }
    if (text.empty()) {
        return std::complex<double>(*re, 0);
    }
    if (text.front() != '+' && text.front() != '-') {
        return std::nullopt;
    }
    auto im = take_signed_real(text);
    if (!im || text != "i") {
        return std::nullopt;
    }
    return std::complex<double>(*re, *im);
}

std::string format_real_roundtrip(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string format_complex(const std::complex<double> &value)
{
    std::string out = format_real_roundtrip(value.real());
    const double im = value.imag();
    out += std::signbit(im) ? '-' : '+';
    out += format_real_roundtrip(std::abs(im));
    out += 'i';
    return out;
}

std::string format_real15(double value)
{
    if (value == 0) {
        return "0.000000000000000";
    }
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 15);
    return std::string(buf.data(), ptr);
}

} // namespace weierlab
