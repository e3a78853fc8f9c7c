#pragma once

#include "trapezoid/exact.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trapezoid::cli {

enum class Format { table, jsonl };
enum class Numeral { sex, rat, dec };

struct OutputConfig {
    Format format = Format::table;
    Numeral numeral = Numeral::sex;
    // Fractional places for values without an exact finite rendering.
    // Unset means "exact only" where that matters (convert).
    std::optional<std::size_t> places;
};

inline constexpr std::size_t kMaxPlaces = 20;
inline constexpr std::size_t kDefaultPlaces = 3;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int no_solution = 1;
inline constexpr int syntax = 2;
inline constexpr int representation = 3;
inline constexpr int domain = 4;
}  // namespace exit_code

// "p/q" when the text contains '/', sexagesimal otherwise.
Rational parse_input(std::string_view text);

// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trapezoid::cli
