#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace ftq {

// Each atom is a five-level system. Index order is fixed; base-5 digit
// arithmetic throughout assumes it.
enum Level : int {
    kQ0 = 0,    // computational |0>
    kQ1 = 1,    // computational |1>
    kLeak0 = 2, // dark leakage, reads as |0>
    kLeak1 = 3, // bright leakage, reads as |1>
    kLost = 4,  // atom loss
};

inline constexpr int kLevels = 5;

inline constexpr std::array<const char*, 5> kLevelNames = {"q0", "q1", "leak0", "leak1", "lost"};

inline std::size_t pow5(int n) {
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) r *= 5;
    return r;
}

inline std::size_t pow3(int n) {
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

// Site 0 is the most significant base-5 digit, so a printed level string
// reads left to right as sites 0..n-1.
inline int level_at(std::size_t index, int site, int n_sites) {
    std::size_t stride = pow5(n_sites - 1 - site);
    return static_cast<int>((index / stride) % kLevels);
}

// Terminal readout classes per site.
enum class Outcome : int { kDark = 0, kBright = 1, kLossOut = 2 };

inline int outcome_at(std::size_t index, int site, int n_sites) {
    std::size_t stride = pow3(n_sites - 1 - site);
    return static_cast<int>((index / stride) % 3);
}

inline std::string outcome_string(std::size_t index, int n_sites) {
    std::string s(static_cast<std::size_t>(n_sites), '?');
    static const char glyph[3] = {'0', '1', 'L'};
    for (int i = 0; i < n_sites; ++i) s[static_cast<std::size_t>(i)] = glyph[outcome_at(index, i, n_sites)];
    return s;
}

}  // namespace ftq
