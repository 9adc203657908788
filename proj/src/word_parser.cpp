#include "tcbounds/word_parser.hpp"

#include <cctype>
#include <string>

#include "tcbounds/error.hpp"

namespace tcb {

namespace {

using Letters = std::vector<Letter>;

Letters inverse_of(const Letters& w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

void append(Letters& dst, const Letters& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Letters parse() {
    Letters w = word();
    skip_blanks();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("word parse error at offset " + std::to_string(pos_) +
                      ": " + msg + " in \"" + std::string(text_) + "\"");
  }

  void skip_blanks() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  bool at_term_start() {
    skip_blanks();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
           c == '[' || c == '1';
  }

  Letters word() {
    Letters w;
    while (at_term_start()) append(w, term());
    return w;
  }

  Letters term() {
    Letters base = atom();
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const long e = exponent();
      Letters out;
      const Letters unit = e < 0 ? inverse_of(base) : base;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) append(out, unit);
      return out;
    }
    return base;
  }

  long exponent() {
    skip_blanks();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return negative ? -v : v;
  }

  void expect(char c) {
    skip_blanks();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Letters atom() {
    skip_blanks();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Letters w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Letters u = word();
      expect(',');
      Letters v = word();
      expect(']');
      Letters out = u;
      append(out, v);
      append(out, inverse_of(u));
      append(out, inverse_of(v));
      return out;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '\''))
      ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    const auto gen = alphabet_.find(name);
    if (!gen) {
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    return {Letter{*gen, 1}};
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Letter> parse_letters(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return Word::reduce(parse_letters(text, alphabet), alphabet.rank());
}

}  // namespace tcb
