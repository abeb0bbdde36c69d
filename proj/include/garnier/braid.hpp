#pragma once
// B4 acting on trace coordinates; pure braid generators.

#include <string>
#include <vector>

#include "garnier/charvariety.hpp"

namespace garnier {

// Letters +-1, +-2, +-3 for sigma_i^{+-1}. Words compose as maps: the
// rightmost letter acts first.
using BraidWord = std::vector<int>;

Point apply_sigma(int i, const Point& p);
Point apply_sigma_inverse(int i, const Point& p);
Point apply_letter(int letter, const Point& p);
Point apply_word(const BraidWord& w, const Point& p);

BraidWord free_reduce(BraidWord w);
BraidWord inverse_word(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

// beta_ij for 4 >= i > j >= 1.
BraidWord pure_generator(int i, int j);
// b21, b31, b32, b41, b42, b43
const std::vector<BraidWord>& pure_generators();
const std::vector<std::string>& pure_generator_names();

// Tokens: s1 s2' s3 ... and b21 b43' ..., separated by whitespace.
BraidWord parse_word(const std::string& text);
std::string format_word(const BraidWord& w);

}  // namespace garnier
