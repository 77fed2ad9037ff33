#include "wg/notation.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

namespace wg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s, std::string_view context) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

}  // namespace

Root parse_word(std::string_view w) {
  const std::string_view word = trim(w);
  if (word.empty()) throw ParseError("empty word");
  Root r;
  int last = 0;
  std::size_t i = 0;
  while (i < word.size()) {
    const char d = word[i];
    if (d < '1' || d > '3') throw ParseError("unexpected '" + std::string(1, d) + "' in word '" + std::string(word) + "'");
    const int digit = d - '0';
    if (digit <= last) throw ParseError("digits must increase in word '" + std::string(word) + "'");
    last = digit;
    ++i;
    Int e = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      std::size_t end;
      std::string_view num;
      if (i < word.size() && word[i] == '{') {
        end = word.find('}', i);
        if (end == std::string_view::npos) throw ParseError("unclosed brace in word '" + std::string(word) + "'");
        num = word.substr(i + 1, end - i - 1);
        i = end + 1;
      } else {
        end = i;
        while (end < word.size() && std::isdigit(static_cast<unsigned char>(word[end]))) ++end;
        num = word.substr(i, end - i);
        i = end;
      }
      e = parse_int(num, word);
      if (e < 1) throw ParseError("exponent must be positive in word '" + std::string(word) + "'");
    }
    r[3 - digit] = e;  // digit 1 is alpha3
  }
  return r;
}

std::string emit_word(const Root& r) {
  if (!r.is_positive()) throw ParseError("only positive roots have a word: " + to_string(r));
  std::string out;
  for (int digit = 1; digit <= 3; ++digit) {
    const Int e = r[3 - digit];
    if (e == 0) continue;
    out += static_cast<char>('0' + digit);
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

Root parse_root(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.find(',') == std::string_view::npos) return parse_word(t);
  Root r;
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = t.find(',', start);
    if ((k < 2) != (comma != std::string_view::npos)) throw ParseError("expected three coordinates in '" + std::string(t) + "'");
    const std::string_view part = trim(t.substr(start, k < 2 ? comma - start : std::string_view::npos));
    r[k] = parse_int(part, t);
    start = comma + 1;
  }
  return r;
}

std::vector<Root> read_roots(std::istream& in) {
  std::vector<Root> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::string_view v = line;
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    try {
      out.push_back(parse_root(v));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Root> read_roots_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_roots(in);
}

}  // namespace wg
