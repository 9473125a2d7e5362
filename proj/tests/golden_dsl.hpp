#pragma once

// Golden corpus for the sequence DSL: well-formed programs with hand-checked
// sample values, and malformed programs with the byte offset the parser must
// report. Shared by the parser unit tests and the acceptance suite.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace roughstat::testing {

struct GoldenCase {
    std::string text;
    long long k;                  // sample index
    std::vector<double> expected; // one value per dimension
};

inline const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"if is_square(n) then n else pow(-1, n)", 4, {4.0}},
        {"if is_square(n) then n else pow(-1, n)", 3, {-1.0}},
        {"if is_square(n) then n else pow(-1, n)", 2, {1.0}},
        {"0", 17, {0.0}},
        {"if is_cube(n) then 1 else 0", 8, {1.0}},
        {"if is_cube(n) then 1 else 0", 9, {0.0}},
        {"if is_cube(n) then 1 else 0", 27, {1.0}},
        {"2.5", 1, {2.5}},
        {"n", 12, {12.0}},
        {"n^2", 5, {25.0}},
        {"2^n", 10, {1024.0}},
        {"pow(-1, n)", 7, {-1.0}},
        {"-n^2", 3, {-9.0}},
        {"(-2)^2", 1, {4.0}},
        {"2^-2", 1, {0.25}},
        {"2^3^2", 1, {512.0}},
        {"7 % 3", 1, {1.0}},
        {"n % 2 == 1", 3, {1.0}},
        {"n % 2 == 1", 4, {0.0}},
        {"if n % 2 == 1 then -1 else 1", 1, {-1.0}},
        {"if n % 2 == 1 then -1 else 1", 2, {1.0}},
        {"abs(0 - 3.5)", 1, {3.5}},
        {"sqrt(16)", 1, {4.0}},
        {"ln(1)", 1, {0.0}},
        {"floor(3.9)", 1, {3.0}},
        {"sin(0)", 1, {0.0}},
        {"cos(0)", 1, {1.0}},
        {"is_power(n, 2)", 49, {1.0}},
        {"is_power(n, 2)", 50, {0.0}},
        {"is_power(n, 5)", 32, {1.0}},
        {"is_power(n, 5)", 33, {0.0}},
        {"(n, n + 1)", 3, {3.0, 4.0}},
        {"1 + 2 * 3", 1, {7.0}},
        {"(1 + 2) * 3", 1, {9.0}},
        {"1 < 2 and 2 < 3", 1, {1.0}},
        {"not 0", 1, {1.0}},
        {"not 3", 1, {0.0}},
        {"1 == 1 or 1 / 0 > 0", 1, {1.0}}, // short-circuit guards the division
        {"if n > 5 then ln(n) else 0", 1, {0.0}},
        {"if n > 5 then ln(n) else 0", 10, {std::log(10.0)}},
        {"10 / 4", 1, {2.5}},
        {"3 - 4 - 5", 1, {-6.0}},
        {"-2^2", 1, {-4.0}},
        {"1.5e2", 1, {150.0}},
        {"is_cube(n) and n > 1", 8, {1.0}},
        {"is_cube(n) and n > 1", 1, {0.0}},
        {"(if is_square(n) then 3 else pow(-1, n) / n, "
         "if is_square(n) then -2 else pow(-1, n + 1) / n)", 2, {0.5, -0.5}},
        {"(if is_square(n) then 3 else pow(-1, n) / n, "
         "if is_square(n) then -2 else pow(-1, n + 1) / n)", 4, {3.0, -2.0}},
    };
    return cases;
}

struct MalformedCase {
    std::string text;
    std::size_t offset; // required ParseError byte offset
};

inline const std::vector<MalformedCase>& malformed_cases() {
    static const std::vector<MalformedCase> cases = {
        {"1 +", 3},        // missing operand
        {"(1, 2", 5},      // unclosed tuple
        {"foo(n)", 0},     // unknown function
        {"if n then 1", 11}, // missing else
        {"n +* 2", 3},     // operator where an operand is required
        {"pow(1)", 0},     // wrong arity
        {"2 ^ ^ 2", 4},    // missing exponent operand
        {"hello", 0},      // unknown identifier
        {"1 2", 2},        // trailing token
        {"(1, , 2)", 4},   // empty tuple slot
        {"sin", 3},        // function used without arguments
    };
    return cases;
}

} // namespace roughstat::testing
