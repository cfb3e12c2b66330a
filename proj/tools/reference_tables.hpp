#pragma once

#include <array>
#include <cstdint>
#include <string_view>

// Golden data transcribed from the published tables. Grids are row-major,
// row 0 first, cell 0 leftmost.
namespace caweave::reference {

inline constexpr std::array<std::string_view, 7> kTable2a = {
    "1110010",
    "0010111",
    "0111001",
    "1001011",
    "1011100",
    "1100101",
    "0101110",
};

inline constexpr std::array<std::string_view, 7> kTable2b = {
    "0100111",
    "1110100",
    "1001110",
    "1101001",
    "0011101",
    "1010011",
    "0111010",
};

inline constexpr std::array<std::string_view, 7> kTable3a = {
    "101",
    "001",
    "011",
    "110",
    "111",
    "100",
    "010",
};

inline constexpr std::array<std::string_view, 7> kTable3b = {
    "111",
    "001",
    "010",
    "101",
    "100",
    "110",
    "011",
};

inline constexpr std::array<std::string_view, 30> kGrid102Len10 = {
    "1101000010",
    "0111000111",
    "1001001001",
    "1011011010",
    "1101101111",
    "0110110000",
    "1011010000",
    "1101110001",
    "0110010010",
    "1010110110",
    "1111011011",
    "0001101100",
    "0010110100",
    "0111011100",
    "1001100100",
    "1010101101",
    "1111110110",
    "0000011011",
    "0000101101",
    "0001110111",
    "0010011001",
    "0110101011",
    "1011111101",
    "1100000110",
    "0100001011",
    "1100011101",
    "0100100110",
    "1101101010",
    "0110111111",
    "1011000001",
};

inline constexpr std::array<std::string_view, 14> kGrid102Len14 = {
    "10000110011111",
    "10001010100000",
    "10011111100001",
    "10100000100010",
    "11100001100111",
    "00100010101000",
    "01100111111000",
    "10101000001000",
    "11111000011001",
    "00001000101010",
    "00011001111110",
    "00101010000010",
    "01111110000110",
    "10000010001010",
};

inline constexpr std::array<std::string_view, 28> kGrid102Len28 = {
    "1001101011010011011111100100",
    "1010111101110101100000101101",
    "1111000110011110100001110110",
    "0001001010100011100010011011",
    "0011011111100100100110101101",
    "0101100000101101101011110111",
    "1110100001110110111100011001",
    "0011100010011011000100101010",
    "0100100110101101001101111110",
    "1101101011110111010110000010",
    "0110111100011001111010000111",
    "1011000100101010001110001001",
    "1101001101111110010010011010",
    "0111010110000010110110101111",
    "1001111010000111011011110001",
    "1010001110001001101100010010",
    "1110010010011010110100110111",
    "0010110110101111011101011000",
    "0111011011110001100111101000",
    "1001101100010010101000111000",
    "1010110100110111111001001001",
    "1111011101011000001011011010",
    "0001100111101000011101101111",
    "0010101000111000100110110001",
    "0111111001001001101011010011",
    "1000001011011010111101110101",
    "1000011101101111000110011110",
    "1000100110110001001010100011",
};

inline constexpr std::array<std::string_view, 62> kTable7a = {
    "1110000101",
    "1101001100",
    "1001110010",
    "0110011111",
    "1001111111",
    "0110001111",
    "1001010111",
    "0111000011",
    "1010100101",
    "0010011100",
    "0111111010",
    "1011000011",
    "0000100101",
    "0001011100",
    "0011011010",
    "0100010011",
    "1110101101",
    "1100000000",
    "1010000000",
    "0011000000",
    "0100100000",
    "1111010000",
    "1110001000",
    "1101011100",
    "1001011010",
    "0111010011",
    "1010001101",
    "0011010000",
    "0100001000",
    "1110011100",
    "1101111010",
    "1000000011",
    "0100000101",
    "1110001100",
    "1101010010",
    "1001001111",
    "0111110111",
    "1011010011",
    "0000001101",
    "0000010000",
    "0000101000",
    "0001001100",
    "0011110010",
    "0101011111",
    "1101011111",
    "1001011111",
    "0111011111",
    "1010011111",
    "0011111111",
    "0101001111",
    "1101110111",
    "1000010011",
    "0100101101",
    "1111000000",
    "1110100000",
    "1100010000",
    "1010101000",
    "0010001100",
    "0111010010",
    "1010001111",
    "0011010111",
    "0100000011",
};

inline constexpr std::array<std::string_view, 62> kTable7b = {
    "1011111110",
    "1001111101",
    "1110111001",
    "0100010111",
    "1110110010",
    "0100001111",
    "1110010110",
    "0101110001",
    "1100101011",
    "0011101000",
    "0101001100",
    "1101110010",
    "0000101111",
    "0001100110",
    "0010011001",
    "0111100111",
    "1011011010",
    "1000000011",
    "1100000100",
    "0010001110",
    "0111010101",
    "1010010101",
    "1011110101",
    "1001100101",
    "1110011101",
    "0101101001",
    "1100001111",
    "0010010110",
    "0111110001",
    "1011101011",
    "1001001000",
    "1111111100",
    "0111111010",
    "1011110011",
    "1001101100",
    "1110000010",
    "0101000111",
    "1101101010",
    "0000001011",
    "0000011000",
    "0000100100",
    "0001111110",
    "0010111101",
    "0110011001",
    "1001100111",
    "1110011010",
    "0101100011",
    "1100010100",
    "0010110110",
    "0110000001",
    "1001000011",
    "1111100100",
    "0111011110",
    "1010001101",
    "1011010001",
    "1000011011",
    "1100100000",
    "0011110000",
    "0101101000",
    "1100001100",
    "0010010010",
    "0111111111",
};

// Shift ledger of the width-14 102-CA (1+x^2+x^3, shifts 0 and 1); -1 = zero
// sequence.
inline constexpr std::array<int, 14> kTable4First = {0, 5, 5, 3, 3, 1, 1, 6, 6, 4, 4, 2, 2, 0};
inline constexpr std::array<int, 14> kTable4Second = {1, -1, 6, -1, 4, -1, 2, -1, 0, -1, 5, -1, 3, -1};

// Shifts of column j relative to column 0 at j = t, 2t, ...
inline constexpr std::array<std::uint64_t, 4> kCircledLen10 = {24, 18, 12, 6};
inline constexpr std::array<std::uint64_t, 6> kCircledLen28 = {20, 12, 4, 24, 16, 8};

struct LengthBound {
  std::string_view id;
  int t;
  int degree;
  std::uint64_t bound;
  std::string_view factored;
};

inline constexpr std::array<LengthBound, 6> kTable5 = {{
    {"t3L3", 3, 3, 63, "3^2*7"},
    {"t5L3", 5, 3, 1225, "5^2*7^2"},
    {"t6L3", 6, 3, 126, "2*3^2*7"},
    {"t7L3", 7, 3, 2401, "7^4"},
    {"t3L4", 3, 4, 2025, "3^4*5^2"},
    {"t5L4", 5, 4, 225, "3^2*5^2"},
}};

struct RulePair {
  std::string_view poly;
  std::string_view first;
  std::string_view second;
};

inline constexpr std::array<RulePair, 6> kTable6 = {{
    {"1+x^2+x^5", "11110", "01111"},
    {"1+x^3+x^5", "01100", "00110"},
    {"1+x+x^2+x^4+x^5", "10000", "00001"},
    {"1+x+x^3+x^4+x^5", "11100", "00111"},
    {"1+x+x^2+x^3+x^5", "11000", "00011"},
    {"1+x^2+x^3+x^4+x^5", "10011", "11001"},
}};

inline constexpr RulePair kDegree3Pair = {"1+x^2+x^3", "001", "100"};

}  // namespace caweave::reference
