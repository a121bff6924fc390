#pragma once

#include <array>
#include <cstdint>

// Published values used as fixed expectations by the verification suites.
namespace tsys::reference {

/// |L(n)|, liftable transfer systems on [1] x [n], n = 0..10.
inline constexpr std::array<std::uint64_t, 11> kLiftable = {
    2, 9, 56, 416, 3457, 31063, 295834, 2948082, 30471080, 324580196, 3546142551ull};

/// |T(n)|, all transfer systems on [1] x [n], n = 0..10.
inline constexpr std::array<std::uint64_t, 11> kAll = {
    2, 10, 68, 544, 4828, 46124, 465932, 4919062, 53832832, 607000122, 7019272236ull};

/// Tam(n, k) for n = 0..6, k = 1..7.
inline constexpr std::array<std::array<std::uint64_t, 7>, 7> kTamari = {{
    {1, 0, 0, 0, 0, 0, 0},
    {1, 2, 0, 0, 0, 0, 0},
    {3, 5, 5, 0, 0, 0, 0},
    {13, 20, 21, 14, 0, 0, 0},
    {68, 100, 105, 84, 42, 0, 0},
    {399, 570, 595, 504, 330, 132, 0},
    {2530, 3542, 3675, 3192, 2310, 1287, 429},
}};

/// Large Schröder numbers S_n, n = 0..10.
inline constexpr std::array<std::uint64_t, 11> kSchroder = {
    1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718};

/// Refined Schröder numbers S_n(k) for n = 1..6 (row n-1), k = 1..6.
inline constexpr std::array<std::array<std::uint64_t, 6>, 6> kRefinedSchroder = {{
    {2, 0, 0, 0, 0, 0},
    {2, 4, 0, 0, 0, 0},
    {6, 8, 8, 0, 0, 0},
    {22, 28, 24, 16, 0, 0},
    {90, 112, 96, 64, 32, 0},
    {394, 484, 416, 288, 160, 64},
}};

/// A_n for n = 1..10 (index n-1).
inline constexpr std::array<std::uint64_t, 10> kAntichain = {
    1, 2, 7, 29, 131, 625, 3099, 15818, 82595, 439259};

/// Limit of |L^max(n)| n^{3/2} / (3+√8)^n, to the published digits.
inline constexpr const char* kAsymptoticConstant = "4.720408926";

}  // namespace tsys::reference
