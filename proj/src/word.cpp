#include "braids/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace braids {

GeneratorToken GeneratorToken::artin(int i, long long power) {
  GeneratorToken t;
  t.kind = GenKind::artin;
  t.i = i;
  t.power = power;
  return t;
}

GeneratorToken GeneratorToken::band(int i, int j, long long power) {
  GeneratorToken t;
  t.kind = GenKind::band;
  t.i = std::min(i, j);
  t.j = std::max(i, j);
  t.power = power;
  return t;
}

GeneratorToken GeneratorToken::big_delta(long long power) {
  GeneratorToken t;
  t.kind = GenKind::big_delta;
  t.power = power;
  return t;
}

GeneratorToken GeneratorToken::small_delta(long long power) {
  GeneratorToken t;
  t.kind = GenKind::small_delta;
  t.power = power;
  return t;
}

void validate_token(const GeneratorToken& t, int n) {
  if (n < 2) throw index_error("strand count must be at least 2");
  if (t.power == 0) throw index_error("token power must be nonzero");
  switch (t.kind) {
    case GenKind::artin:
      if (t.i < 1 || t.i > n - 1)
        throw index_error("artin index " + std::to_string(t.i) +
                          " out of range for n=" + std::to_string(n));
      break;
    case GenKind::band:
      if (t.i < 1 || t.j > n || t.i >= t.j)
        throw index_error("band pair (" + std::to_string(t.i) + "," +
                          std::to_string(t.j) + ") out of range for n=" +
                          std::to_string(n));
      break;
    default:
      break;
  }
}

BraidWord::BraidWord(int n, std::vector<GeneratorToken> letters)
    : n(n), letters(std::move(letters)) {
  for (const GeneratorToken& t : this->letters) validate_token(t, n);
}

namespace {

long long parse_int(const std::string& text, size_t& pos, bool allow_sign) {
  size_t start = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
    ++pos;
  size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits) throw parse_error("expected integer", start);
  return std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
}

}  // namespace

BraidWord parse_word(const std::string& text, int n) {
  if (n < 2) throw index_error("strand count must be at least 2");
  BraidWord w(n);
  size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    size_t tok_start = pos;
    char c = text[pos];
    GeneratorToken t;
    if (c == 's') {
      ++pos;
      long long i = parse_int(text, pos, false);
      t = GeneratorToken::artin(static_cast<int>(i));
    } else if (c == 'a') {
      ++pos;
      long long i = parse_int(text, pos, false);
      if (pos >= text.size() || text[pos] != ',')
        throw parse_error("expected ',' in band generator", pos);
      ++pos;
      long long j = parse_int(text, pos, false);
      if (i == j) throw parse_error("band punctures must be distinct", tok_start);
      t = GeneratorToken::band(static_cast<int>(i), static_cast<int>(j));
    } else if (c == 'D') {
      ++pos;
      t = GeneratorToken::big_delta();
    } else if (c == 'd') {
      ++pos;
      t = GeneratorToken::small_delta();
    } else {
      throw parse_error(std::string("unexpected character '") + c + "'", pos);
    }
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      long long p = parse_int(text, pos, true);
      if (p == 0) throw parse_error("power must be nonzero", tok_start);
      t.power = p;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw parse_error("unexpected trailing character in token", pos);
    validate_token(t, n);
    w.letters.push_back(t);
  }
  return w;
}

std::string render_word(const BraidWord& w) {
  std::string out;
  for (const GeneratorToken& t : w.letters) {
    if (!out.empty()) out += ' ';
    switch (t.kind) {
      case GenKind::artin:
        out += "s" + std::to_string(t.i);
        break;
      case GenKind::band:
        out += "a" + std::to_string(t.i) + "," + std::to_string(t.j);
        break;
      case GenKind::big_delta:
        out += "D";
        break;
      case GenKind::small_delta:
        out += "d";
        break;
    }
    if (t.power != 1) out += "^" + std::to_string(t.power);
  }
  return out;
}

BraidWord invert(const BraidWord& w) {
  BraidWord r(w.n);
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    GeneratorToken t = *it;
    t.power = -t.power;
    r.letters.push_back(t);
  }
  return r;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw index_error("strand count mismatch in concat");
  BraidWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

long long exponent_sum(const BraidWord& w) {
  long long n = w.n;
  long long sum = 0;
  for (const GeneratorToken& t : w.letters) {
    long long weight = 1;
    if (t.kind == GenKind::small_delta) weight = n - 1;
    if (t.kind == GenKind::big_delta) weight = n * (n - 1) / 2;
    sum += weight * t.power;
  }
  return sum;
}

BraidWord band_to_artin(int i, int j, int n) {
  if (i < 1 || j <= i || j > n)
    throw index_error("band_to_artin requires 1 <= i < j <= n");
  BraidWord w(n);
  for (int k = j - 2; k >= i; --k) w.letters.push_back(GeneratorToken::artin(k, -1));
  w.letters.push_back(GeneratorToken::artin(j - 1));
  for (int k = i; k <= j - 2; ++k) w.letters.push_back(GeneratorToken::artin(k));
  return w;
}

namespace {

void push_artin_power(std::vector<std::pair<int, bool>>& out, int i,
                      long long power) {
  bool pos = power > 0;
  long long count = pos ? power : -power;
  for (long long k = 0; k < count; ++k) out.emplace_back(i, pos);
}

}  // namespace

std::vector<std::pair<int, bool>> expand_to_artin_letters(const BraidWord& w) {
  std::vector<std::pair<int, bool>> out;
  int n = w.n;
  for (const GeneratorToken& t : w.letters) {
    validate_token(t, n);
    switch (t.kind) {
      case GenKind::artin:
        push_artin_power(out, t.i, t.power);
        break;
      case GenKind::band: {
        BraidWord b = band_to_artin(t.i, t.j, n);
        BraidWord use = t.power > 0 ? b : invert(b);
        long long count = t.power > 0 ? t.power : -t.power;
        for (long long k = 0; k < count; ++k)
          for (const GeneratorToken& l : use.letters)
            push_artin_power(out, l.i, l.power);
        break;
      }
      case GenKind::big_delta: {
        bool pos = t.power > 0;
        long long count = pos ? t.power : -t.power;
        std::vector<int> word;
        for (int row = n - 1; row >= 1; --row)
          for (int k = 1; k <= row; ++k) word.push_back(k);
        for (long long c = 0; c < count; ++c) {
          if (pos)
            for (int k : word) out.emplace_back(k, true);
          else
            for (auto it = word.rbegin(); it != word.rend(); ++it)
              out.emplace_back(*it, false);
        }
        break;
      }
      case GenKind::small_delta: {
        bool pos = t.power > 0;
        long long count = pos ? t.power : -t.power;
        for (long long c = 0; c < count; ++c) {
          if (pos)
            for (int k = n - 1; k >= 1; --k) out.emplace_back(k, true);
          else
            for (int k = 1; k <= n - 1; ++k) out.emplace_back(k, false);
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace braids
