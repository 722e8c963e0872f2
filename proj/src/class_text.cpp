// Divisor-class text grammar shared by the CLI and the JSON records.

#include <cctype>
#include <charconv>
#include <string>

#include "hcensus/errors.hpp"
#include "hcensus/surfaces.hpp"

namespace hcensus {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    // from_chars rejects a leading '+'; allow it for symmetry with '-'.
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) error("integer out of range");
    if (ec != std::errc()) error("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) error("trailing characters");
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "cannot parse class \"" + std::string(text_) + "\": " + what + " at offset " +
                               std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadricClass parse_quadric(std::string_view text) {
  Cursor c(text);
  c.expect('(');
  QuadricClass x;
  x.a = c.integer();
  c.expect(',');
  x.b = c.integer();
  c.expect(')');
  c.finish();
  return x;
}

BlowupClass parse_blowup(std::string_view text) {
  Cursor c(text);
  c.expect('(');
  const auto a = c.integer();
  c.expect(';');
  std::vector<std::int64_t> b;
  do {
    const auto v = c.integer();
    std::int64_t copies = 1;
    if (c.accept('^')) {
      copies = c.integer();
      if (copies < 1) c.error("exponent must be >= 1");
    }
    if (copies > static_cast<std::int64_t>(BlowupClass::kMaxPoints) ||
        b.size() + static_cast<std::size_t>(copies) > BlowupClass::kMaxPoints)
      c.error("more than 8 exceptional coefficients");
    b.insert(b.end(), static_cast<std::size_t>(copies), v);
  } while (c.accept(','));
  c.expect(')');
  c.finish();
  return BlowupClass(a, std::move(b));
}

}  // namespace hcensus
