#include "twoclosure/group_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "twoclosure/errors.hpp"

namespace twoclosure {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t line, std::size_t column_base)
      : text_(text), line_(line), base_(column_base) {}

  void skip_blanks() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == ',')) {
      ++pos_;
    }
  }
  bool done() {
    skip_blanks();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    skip_blanks();
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t number() {
    skip_blanks();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) {
      pos_ = start;
      fail("number '" + std::string(digits) + "' is too large");
    }
    return std::stoul(std::string(digits));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, base_ + pos_ + 1, what);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

Permutation read_permutation(Scanner& in, std::size_t degree) {
  in.skip_blanks();
  if (in.accept('[')) {
    std::vector<Point> images;
    in.skip_separators();
    while (!in.accept(']')) {
      if (in.done()) in.fail("unterminated image list");
      images.push_back(static_cast<Point>(in.number()));
      in.skip_separators();
    }
    if (images.size() != degree) {
      throw InvalidPermutation("image list has " + std::to_string(images.size()) +
                               " entries, expected " + std::to_string(degree));
    }
    return Permutation(std::move(images));
  }
  if (in.peek() != '(') in.fail("expected '(' or '['");
  std::vector<std::vector<Point>> cycles;
  while (!in.done()) {
    in.expect('(');
    std::vector<Point> cycle;
    in.skip_separators();
    while (!in.accept(')')) {
      if (in.done()) in.fail("unterminated cycle");
      cycle.push_back(static_cast<Point>(in.number()));
      in.skip_separators();
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  Scanner in(text, 1, 0);
  Permutation p = read_permutation(in, degree);
  if (!in.done()) in.fail("trailing characters after permutation");
  return p;
}

PermGroup parse_group(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    const std::string_view raw = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{}
                                             : text.substr(newline + 1);
    ++line_no;
    const std::string_view line = strip_comment(raw);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const auto word_end = line.find_first_of(" \t\r", first);
    const std::string_view keyword =
        line.substr(first, word_end == std::string_view::npos ? line.size() - first
                                                              : word_end - first);
    const std::size_t rest_at =
        word_end == std::string_view::npos ? line.size() : word_end;
    Scanner rest(line.substr(rest_at), line_no, rest_at);
    if (keyword == "degree") {
      if (degree) throw ParseError(line_no, first + 1, "duplicate degree line");
      degree = rest.number();
      if (!rest.done()) rest.fail("trailing characters after degree");
    } else if (keyword == "gen") {
      if (!degree) {
        throw ParseError(line_no, first + 1, "gen line before degree line");
      }
      try {
        gens.push_back(read_permutation(rest, *degree));
      } catch (const InvalidPermutation& e) {
        throw InvalidPermutation("line " + std::to_string(line_no) + ": " +
                                 e.what());
      }
      if (!rest.done()) rest.fail("trailing characters after permutation");
    } else {
      throw ParseError(line_no, first + 1,
                       "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!degree) throw ParseError(line_no + 1, 1, "missing degree line");
  return PermGroup(*degree, std::move(gens));
}

std::string serialize_group(const PermGroup& group) {
  std::ostringstream out;
  out << "degree " << group.degree() << '\n';
  for (const auto& g : group.generators()) {
    out << "gen " << g.to_cycle_string() << '\n';
  }
  return out.str();
}

}  // namespace twoclosure
