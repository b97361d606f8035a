#ifndef SQED_FORMAT_HPP
#define SQED_FORMAT_HPP

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace sqed {

/// Locale-independent, 17 significant digits: parses back to the same double.
inline std::string format_double(double value) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return {buf, end};
}

inline double parse_double(std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("parse_double: not a number: '" + std::string(text) + "'");
    return value;
}

}  // namespace sqed

#endif  // SQED_FORMAT_HPP
