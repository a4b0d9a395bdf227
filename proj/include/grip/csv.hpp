#pragma once

// Deterministic CSV number formatting. std::to_chars is specified to be
// locale-independent, which keeps goldens byte-exact on any machine.

#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>

namespace grip {

// 6 significant digits, printf %g style.
inline std::string format_value(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    if (res.ec != std::errc())
        throw std::runtime_error("format_value: conversion failed");
    return std::string(buf, res.ptr);
}

inline std::string format_fixed(double v, int places) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, places);
    if (res.ec != std::errc())
        throw std::runtime_error("format_fixed: conversion failed");
    return std::string(buf, res.ptr);
}

}  // namespace grip
