#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace braids {

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

struct index_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class GenKind { artin, band, big_delta, small_delta };

/// One letter of a braid word with a symbolic (nonzero) power.
struct GeneratorToken {
  GenKind kind = GenKind::artin;
  int i = 0;  // artin index, or first band puncture
  int j = 0;  // second band puncture (i < j after canonicalization)
  long long power = 1;

  static GeneratorToken artin(int i, long long power = 1);
  static GeneratorToken band(int i, int j, long long power = 1);
  static GeneratorToken big_delta(long long power = 1);
  static GeneratorToken small_delta(long long power = 1);

  friend bool operator==(const GeneratorToken& a, const GeneratorToken& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j && a.power == b.power;
  }
};

struct BraidWord {
  int n = 2;
  std::vector<GeneratorToken> letters;

  BraidWord() = default;
  explicit BraidWord(int n) : n(n) {}
  BraidWord(int n, std::vector<GeneratorToken> letters);

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.n == b.n && a.letters == b.letters;
  }
};

/// Grammar (whitespace separated): token := base ("^" int)?;
/// base := "s"int | "a"int","int | "D" | "d".
BraidWord parse_word(const std::string& text, int n);
std::string render_word(const BraidWord& w);

BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& u, const BraidWord& v);
long long exponent_sum(const BraidWord& w);

/// a_{i,j} = (s_{j-2}...s_i)^{-1} s_{j-1} (s_{j-2}...s_i) for i < j.
BraidWord band_to_artin(int i, int j, int n);

/// Flattens a word to single artin letters: (index, positive?) pairs.
std::vector<std::pair<int, bool>> expand_to_artin_letters(const BraidWord& w);

void validate_token(const GeneratorToken& t, int n);

}  // namespace braids
