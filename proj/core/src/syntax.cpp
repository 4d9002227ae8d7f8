#include "ahc/syntax.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace ahc {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LinearSystem parse() {
    expect("L");
    expect("(");
    expect("r");
    expect("=");
    const int r = narrow(integer());
    expect(",");
    expect("d");
    expect("=");
    const int d = narrow(integer());

    std::vector<PointBatch> points;
    std::vector<SubspaceGroup> groups;
    if (accept(";")) {
      if (!peek_is(')')) {
        do {
          if (peek_is('{')) {
            groups.push_back(group());
          } else {
            points.push_back(batch());
          }
        } while (accept(","));
      }
    }
    expect(")");
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    try {
      return LinearSystem(r, d, std::move(points), std::move(groups));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::int64_t integer() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  int narrow(std::int64_t v) const {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      fail("integer out of range");
    }
    return static_cast<int>(v);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected identifier");
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  PointBatch batch() {
    const int m = narrow(integer());
    std::int64_t count = 1;
    if (accept("^")) count = integer();
    if (m < 1) fail("multiplicity must be >= 1");
    if (count < 1) fail("count must be >= 1");
    return {m, count};
  }

  SubspaceGroup group() {
    expect("{");
    SubspaceGroup g;
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      g.multiplicity = narrow(integer());
    }
    g.id = identifier();
    expect(":");
    expect("codim");
    g.codim = narrow(integer());
    while (accept(",")) {
      PointBatch p = batch();
      expect("on");
      const std::size_t at = pos_;
      const std::string target = identifier();
      if (target != g.id) {
        pos_ = at;
        fail("points inside group '" + g.id + "' must lie on '" + g.id + "'");
      }
      g.points.push_back(p);
    }
    expect("}");
    return g;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_batch(std::ostringstream& out, const PointBatch& p) {
  out << p.multiplicity;
  if (p.count != 1) out << '^' << p.count;
}

}  // namespace

LinearSystem parse_system(std::string_view text) { return Parser(text).parse(); }

std::string format_system(const LinearSystem& system) {
  std::ostringstream out;
  out << "L(r=" << system.r() << ",d=" << system.d();
  bool first = true;
  auto sep = [&] {
    out << (first ? "; " : ", ");
    first = false;
  };
  for (const auto& g : system.subspaces()) {
    sep();
    out << '{';
    if (g.multiplicity != 1) out << g.multiplicity;
    out << g.id << ":codim" << g.codim;
    for (const auto& p : g.points) {
      out << ", ";
      append_batch(out, p);
      out << " on " << g.id;
    }
    out << '}';
  }
  for (const auto& p : system.points()) {
    sep();
    append_batch(out, p);
  }
  out << ')';
  return out.str();
}

}  // namespace ahc
