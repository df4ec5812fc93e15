#include "charvanish/groupspec.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "charvanish/errors.hpp"

namespace charvanish {

namespace {

// ---------------------------------------------------------------------------
// Line-oriented scanning with 1-based line/column tracking.

struct Cursor {
  const std::string* text = nullptr;
  std::size_t pos = 0;
  int line = 1;

  explicit Cursor(const std::string& s) : text(&s) {}
  bool at_end() const { return pos >= text->size(); }
  char peek() const { return (*text)[pos]; }
};

struct Word {
  std::string value;
  int line = 1;
  int column = 1;
};

// One logical line: comment stripped, split into words; punctuation in the
// generator syntax is handled by a dedicated scanner below.
struct SpecLine {
  int number = 1;
  std::string text;  // comment-stripped, trailing whitespace removed

  Word first_word() const {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    return Word{text.substr(i, j - i), number, static_cast<int>(i) + 1};
  }

  // Remainder after the first word, with the column where it starts.
  std::pair<std::string, int> rest() const {
    const Word w = first_word();
    std::size_t i = w.column - 1 + w.value.size();
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    return {text.substr(i), static_cast<int>(i) + 1};
  }
};

std::vector<SpecLine> split_lines(const std::string& text) {
  std::vector<SpecLine> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() &&
           std::isspace(static_cast<unsigned char>(raw.back()))) {
      raw.pop_back();
    }
    bool blank = true;
    for (char c : raw) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (!blank) out.push_back(SpecLine{number, raw});
  }
  return out;
}

std::vector<Word> split_words(const SpecLine& line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.text.size()) {
    while (i < line.text.size() &&
           std::isspace(static_cast<unsigned char>(line.text[i]))) {
      ++i;
    }
    if (i >= line.text.size()) break;
    std::size_t j = i;
    while (j < line.text.size() &&
           !std::isspace(static_cast<unsigned char>(line.text[j]))) {
      ++j;
    }
    out.push_back(
        Word{line.text.substr(i, j - i), line.number, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::int64_t parse_int(const Word& w) {
  if (w.value.empty()) throw ParseError("expected an integer", w.line, w.column);
  for (char c : w.value) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected an integer, got '" + w.value + "'", w.line,
                       w.column);
    }
  }
  if (w.value.size() > 12) {
    throw ParseError("integer '" + w.value + "' is out of range", w.line,
                     w.column);
  }
  return std::stoll(w.value);
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generator list: (a b c)(d e), (f g), ...

std::vector<Permutation> parse_generators(const std::string& s, int start_col,
                                          int line, int degree) {
  std::vector<Permutation> out;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return start_col + static_cast<int>(at); };
  auto skip_space = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };

  skip_space();
  if (i >= s.size()) {
    throw ParseError("expected at least one generator", line, col(i));
  }
  while (true) {
    skip_space();
    const std::size_t gen_start = i;
    std::vector<std::vector<int>> cycles;
    if (i >= s.size() || s[i] != '(') {
      throw ParseError("expected '(' to start a cycle", line, col(i));
    }
    while (i < s.size() && s[i] == '(') {
      ++i;  // consume '('
      std::vector<int> cycle;
      while (true) {
        skip_space();
        if (i < s.size() && s[i] == ')') {
          ++i;
          break;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        if (j == i) {
          throw ParseError("expected a point or ')'", line, col(i));
        }
        if (j - i > 9) {
          throw ParseError("point is out of range", line, col(i));
        }
        cycle.push_back(std::stoi(s.substr(i, j - i)));
        i = j;
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_space();
    }
    try {
      out.push_back(Permutation::from_cycles(degree, cycles));
    } catch (const Error& e) {
      throw ParseError(e.what(), line, col(gen_start));
    }
    skip_space();
    if (i >= s.size()) break;
    if (s[i] != ',') {
      throw ParseError("expected ',' between generators", line, col(i));
    }
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families.

std::string compact_token(const FamilyExpr& f);

FamilyExpr make_family(const std::string& name, std::vector<std::int64_t> p) {
  FamilyExpr f;
  f.family = name;
  f.params = std::move(p);
  return f;
}

void validate_family(const FamilyExpr& f, const Word& at) {
  auto fail = [&](const std::string& msg) {
    throw ParseError(msg, at.line, at.column);
  };
  if (f.family == "cyclic" || f.family == "symmetric" ||
      f.family == "alternating") {
    if (f.params.size() != 1 || f.params[0] < 1) {
      fail(f.family + " takes one positive parameter");
    }
  } else if (f.family == "dihedral") {
    if (f.params.size() != 1 || f.params[0] < 4 || f.params[0] % 2 != 0) {
      fail("dihedral takes one even order >= 4");
    }
  } else if (f.family == "quaternion") {
    if (f.params.size() != 1 || f.params[0] < 8 ||
        (f.params[0] & (f.params[0] - 1)) != 0) {
      fail("quaternion takes one order that is a power of two >= 8");
    }
  } else if (f.family == "psl") {
    if (f.params.size() != 2 || f.params[0] != 2 ||
        (f.params[1] != 5 && f.params[1] != 7 && f.params[1] != 8 &&
         f.params[1] != 9 && f.params[1] != 11)) {
      fail("psl takes parameters 2 q with q in {5, 7, 8, 9, 11}");
    }
  } else if (f.family == "product") {
    if (f.factors.empty()) fail("product takes at least one factor token");
  } else {
    fail("unknown family '" + f.family + "'");
  }
}

FamilyExpr parse_compact_token(const Word& w) {
  const std::string& s = w.value;
  auto fail = [&] {
    throw ParseError("unknown factor token '" + s + "'", w.line, w.column);
  };
  auto tail_int = [&](std::size_t from) -> std::int64_t {
    if (from >= s.size()) fail();
    for (std::size_t i = from; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
    }
    if (s.size() - from > 9) fail();
    return std::stoll(s.substr(from));
  };
  FamilyExpr f;
  if (s.rfind("psl2_", 0) == 0) {
    f = make_family("psl", {2, tail_int(5)});
  } else if (s.size() >= 2 && s[0] == 'c') {
    f = make_family("cyclic", {tail_int(1)});
  } else if (s.size() >= 2 && s[0] == 's') {
    f = make_family("symmetric", {tail_int(1)});
  } else if (s.size() >= 2 && s[0] == 'a') {
    f = make_family("alternating", {tail_int(1)});
  } else if (s.size() >= 2 && s[0] == 'd') {
    f = make_family("dihedral", {tail_int(1)});
  } else if (s.size() >= 2 && s[0] == 'q') {
    f = make_family("quaternion", {tail_int(1)});
  } else {
    fail();
  }
  validate_family(f, w);
  return f;
}

FamilyExpr parse_family_words(const std::vector<Word>& words, std::size_t from,
                              const SpecLine& line) {
  if (from >= words.size()) {
    throw ParseError("expected a family name", line.number,
                     static_cast<int>(line.text.size()) + 1);
  }
  const Word& head = words[from];
  FamilyExpr f;
  f.family = head.value;
  if (head.value == "product") {
    for (std::size_t i = from + 1; i < words.size(); ++i) {
      f.factors.push_back(parse_compact_token(words[i]));
    }
  } else {
    for (std::size_t i = from + 1; i < words.size(); ++i) {
      f.params.push_back(parse_int(words[i]));
    }
  }
  validate_family(f, head);
  return f;
}

std::string compact_token(const FamilyExpr& f) {
  if (f.family == "cyclic") return "c" + std::to_string(f.params[0]);
  if (f.family == "symmetric") return "s" + std::to_string(f.params[0]);
  if (f.family == "alternating") return "a" + std::to_string(f.params[0]);
  if (f.family == "dihedral") return "d" + std::to_string(f.params[0]);
  if (f.family == "quaternion") return "q" + std::to_string(f.params[0]);
  if (f.family == "psl") return "psl2_" + std::to_string(f.params[1]);
  if (f.family == "product") {
    std::string out;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      if (i > 0) out += "x";
      out += compact_token(f.factors[i]);
    }
    return out;
  }
  throw InternalError("unknown family in compact_token");
}

// ---------------------------------------------------------------------------
// Spec assembly from lines.

GroupSpec parse_spec_block(const std::vector<SpecLine>& lines,
                           std::size_t from, std::size_t to) {
  GroupSpec spec;
  std::optional<int> degree;
  bool have_gens_line = false;
  std::vector<Permutation> gens;

  for (std::size_t li = from; li < to; ++li) {
    const SpecLine& line = lines[li];
    const Word key = line.first_word();
    if (key.value == "name") {
      if (!spec.name.empty()) {
        throw ParseError("duplicate name directive", key.line, key.column);
      }
      const auto [rest, rest_col] = line.rest();
      if (!valid_identifier(rest)) {
        throw ParseError("expected an identifier after 'name'", key.line,
                         rest_col);
      }
      spec.name = rest;
    } else if (key.value == "degree") {
      if (degree) {
        throw ParseError("duplicate degree directive", key.line, key.column);
      }
      const std::vector<Word> words = split_words(line);
      if (words.size() != 2) {
        throw ParseError("degree takes exactly one integer", key.line,
                         key.column);
      }
      const std::int64_t d = parse_int(words[1]);
      if (d < 1 || d > 1000000) {
        throw ParseError("degree is out of range", words[1].line,
                         words[1].column);
      }
      degree = static_cast<int>(d);
    } else if (key.value == "gens") {
      if (have_gens_line) {
        throw ParseError("duplicate gens directive", key.line, key.column);
      }
      if (spec.family) {
        throw ParseError("a spec cannot have both family and gens", key.line,
                         key.column);
      }
      if (!degree) {
        throw ParseError("gens requires a preceding degree directive",
                         key.line, key.column);
      }
      const auto [rest, rest_col] = line.rest();
      gens = parse_generators(rest, rest_col, key.line, *degree);
      have_gens_line = true;
    } else if (key.value == "family") {
      if (spec.family) {
        throw ParseError("duplicate family directive", key.line, key.column);
      }
      if (have_gens_line) {
        throw ParseError("a spec cannot have both family and gens", key.line,
                         key.column);
      }
      spec.family = parse_family_words(split_words(line), 1, line);
    } else {
      throw ParseError("unknown directive '" + key.value + "'", key.line,
                       key.column);
    }
  }

  if (have_gens_line) {
    spec.inline_gens = InlineGenerators{*degree, std::move(gens)};
  } else if (degree) {
    const SpecLine& line = lines[to - 1];
    throw ParseError("degree given without gens", line.number, 1);
  }
  if (!spec.inline_gens && !spec.family) {
    const SpecLine& line = lines[to - 1];
    throw ParseError("spec needs either gens or family", line.number, 1);
  }
  if (spec.name.empty()) {
    spec.name = spec.family ? compact_token(*spec.family) : "group";
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Family realization.

int family_degree(const FamilyExpr& f) {
  if (f.family == "cyclic") return static_cast<int>(std::max<std::int64_t>(f.params[0], 1));
  if (f.family == "symmetric" || f.family == "alternating") {
    return static_cast<int>(std::max<std::int64_t>(f.params[0], 1));
  }
  if (f.family == "dihedral") {
    return f.params[0] == 4 ? 4 : static_cast<int>(f.params[0] / 2);
  }
  if (f.family == "quaternion") return static_cast<int>(f.params[0]);
  if (f.family == "psl") return static_cast<int>(f.params[1]) + 1;
  if (f.family == "product") {
    int total = 0;
    for (const FamilyExpr& factor : f.factors) total += family_degree(factor);
    return total;
  }
  throw InternalError("unknown family in family_degree");
}

std::vector<int> range_cycle(int from, int to) {
  std::vector<int> c;
  for (int i = from; i <= to; ++i) c.push_back(i);
  return c;
}

// Arithmetic for the five projective-line fields.  Elements are encoded as
// 0..q-1: prime fields directly; GF(8) = F2[x]/(x^3+x+1) by bit vectors;
// GF(9) = F3[x]/(x^2+1) as a1*3+a0 for a1*x+a0.
struct SmallField {
  std::int64_t q;

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    if (q == 8) return a ^ b;
    if (q == 9) {
      return ((a / 3 + b / 3) % 3) * 3 + (a % 3 + b % 3) % 3;
    }
    return (a + b) % q;
  }
  std::int64_t neg(std::int64_t a) const {
    if (q == 8) return a;
    if (q == 9) return ((3 - a / 3) % 3) * 3 + (3 - a % 3) % 3;
    return (q - a) % q;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (q == 8) {
      std::int64_t out = 0;
      std::int64_t aa = a;
      for (int bit = 0; bit < 3; ++bit) {
        if (b & (1 << bit)) out ^= aa << bit;
      }
      // reduce modulo x^3 + x + 1
      for (int bit = 4; bit >= 3; --bit) {
        if (out & (1 << bit)) out ^= (0b1011 << (bit - 3));
      }
      return out;
    }
    if (q == 9) {
      const std::int64_t a1 = a / 3, a0 = a % 3, b1 = b / 3, b0 = b % 3;
      const std::int64_t c1 = (a1 * b0 + a0 * b1) % 3;
      const std::int64_t c0 = (a0 * b0 + 2 * a1 * b1) % 3;  // x^2 = -1 = 2
      return c1 * 3 + c0;
    }
    return (a * b) % q;
  }
  std::int64_t inv(std::int64_t a) const {
    for (std::int64_t b = 1; b < q; ++b) {
      if (mul(a, b) == 1) return b;
    }
    throw InternalError("field inverse of zero");
  }
  // An F_p-basis of the additive group, for the translation generators.
  std::vector<std::int64_t> additive_basis() const {
    if (q == 8) return {1, 2, 4};
    if (q == 9) return {1, 3};
    return {1};
  }
};

// Action of PSL(2,q) on the projective line: points 1..q are the field
// elements 0..q-1, point q+1 is infinity.
std::vector<Permutation> psl_generators(std::int64_t q) {
  const SmallField field{q};
  const int degree = static_cast<int>(q) + 1;
  const int infinity = static_cast<int>(q);  // 0-based index of the extra point

  std::vector<Permutation> gens;
  for (std::int64_t b : field.additive_basis()) {
    std::vector<int> images(degree);
    for (std::int64_t e = 0; e < q; ++e) {
      images[e] = static_cast<int>(field.add(e, b));
    }
    images[infinity] = infinity;
    gens.push_back(Permutation(std::move(images)));
  }
  {
    // x -> -1/x, swapping 0 and infinity.
    std::vector<int> images(degree);
    images[0] = infinity;
    images[infinity] = 0;
    for (std::int64_t e = 1; e < q; ++e) {
      images[e] = static_cast<int>(field.neg(field.inv(e)));
    }
    gens.push_back(Permutation(std::move(images)));
  }
  return gens;
}

std::vector<Permutation> family_generators(const FamilyExpr& f, int degree);

std::vector<Permutation> product_generators(const FamilyExpr& f, int degree) {
  std::vector<Permutation> gens;
  int offset = 0;
  for (const FamilyExpr& factor : f.factors) {
    const int d = family_degree(factor);
    for (const Permutation& g : family_generators(factor, d)) {
      std::vector<int> images(degree);
      for (int i = 0; i < degree; ++i) images[i] = i;
      for (int i = 0; i < d; ++i) images[offset + i] = offset + g.image(i);
      gens.push_back(Permutation(std::move(images)));
    }
    offset += d;
  }
  return gens;
}

std::vector<Permutation> family_generators(const FamilyExpr& f, int degree) {
  if (f.family == "cyclic") {
    const std::int64_t n = f.params[0];
    if (n == 1) return {};
    return {Permutation::from_cycles(degree, {range_cycle(1, static_cast<int>(n))})};
  }
  if (f.family == "symmetric") {
    const std::int64_t n = f.params[0];
    if (n <= 1) return {};
    if (n == 2) return {Permutation::from_cycles(degree, {{1, 2}})};
    return {Permutation::from_cycles(degree, {{1, 2}}),
            Permutation::from_cycles(degree, {range_cycle(1, static_cast<int>(n))})};
  }
  if (f.family == "alternating") {
    const std::int64_t n = f.params[0];
    if (n <= 2) return {};
    if (n == 3) return {Permutation::from_cycles(degree, {{1, 2, 3}})};
    const std::vector<int> big = (n % 2 == 1)
                                     ? range_cycle(1, static_cast<int>(n))
                                     : range_cycle(2, static_cast<int>(n));
    return {Permutation::from_cycles(degree, {{1, 2, 3}}),
            Permutation::from_cycles(degree, {big})};
  }
  if (f.family == "dihedral") {
    const std::int64_t order = f.params[0];
    if (order == 4) {
      return {Permutation::from_cycles(degree, {{1, 2}}),
              Permutation::from_cycles(degree, {{3, 4}})};
    }
    const int m = static_cast<int>(order / 2);
    std::vector<std::vector<int>> reflection;
    for (int i = 2; i <= m + 1 - i; ++i) {
      if (i != m + 2 - i) reflection.push_back({i, m + 2 - i});
    }
    return {Permutation::from_cycles(degree, {range_cycle(1, m)}),
            Permutation::from_cycles(degree, reflection)};
  }
  if (f.family == "quaternion") {
    // Left-regular action on the points a^i b^j -> i + m*j + 1, where
    // |a| = m = order/2 and b^2 = a^(m/2), b a b^-1 = a^-1.
    const int m = static_cast<int>(f.params[0] / 2);
    std::vector<int> a_images(degree), b_images(degree);
    for (int i = 0; i < m; ++i) {
      a_images[i] = (i + 1) % m;              // a * a^i = a^(i+1)
      a_images[m + i] = m + (i + 1) % m;      // a * a^i b = a^(i+1) b
      b_images[i] = m + (m - i) % m;          // b * a^i = a^(-i) b
      b_images[m + i] = (m / 2 - i + m) % m;  // b * a^i b = a^(m/2 - i)
    }
    return {Permutation(std::move(a_images)), Permutation(std::move(b_images))};
  }
  if (f.family == "psl") return psl_generators(f.params[1]);
  if (f.family == "product") return product_generators(f, degree);
  throw InternalError("unknown family in family_generators");
}

}  // namespace

// ---------------------------------------------------------------------------

GroupSpec parse_group_spec(const std::string& text) {
  const std::vector<SpecLine> lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError("empty group spec", 1, 1);
  }
  return parse_spec_block(lines, 0, lines.size());
}

CorpusManifest parse_manifest(const std::string& text) {
  const std::vector<SpecLine> lines = split_lines(text);
  CorpusManifest manifest;

  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const Word key = lines[i].first_word();
    if (key.value == "max_order" || key.value == "max_degree" ||
        key.value == "seed") {
      const std::vector<Word> words = split_words(lines[i]);
      if (words.size() != 2) {
        throw ParseError(key.value + " takes exactly one integer", key.line,
                         key.column);
      }
      const std::int64_t v = parse_int(words[1]);
      if (key.value == "max_order") {
        manifest.max_order = static_cast<std::uint64_t>(v);
      } else if (key.value == "max_degree") {
        manifest.max_degree = static_cast<int>(v);
      } else {
        manifest.seed = static_cast<std::uint64_t>(v);
      }
    } else if (key.value == "out") {
      const auto [rest, rest_col] = lines[i].rest();
      if (rest.empty()) {
        throw ParseError("out takes a path", key.line, rest_col);
      }
      manifest.out_dir = rest;
    } else {
      break;
    }
  }

  // Group entries: each starts at a `name` line.
  while (i < lines.size()) {
    const Word key = lines[i].first_word();
    if (key.value != "name") {
      throw ParseError("expected 'name' to start a group entry, got '" +
                           key.value + "'",
                       key.line, key.column);
    }
    std::size_t j = i + 1;
    while (j < lines.size() && lines[j].first_word().value != "name") ++j;
    GroupSpec spec = parse_spec_block(lines, i, j);
    for (const GroupSpec& existing : manifest.groups) {
      if (existing.name == spec.name) {
        throw ParseError("duplicate group name '" + spec.name + "'", key.line,
                         key.column);
      }
    }
    manifest.groups.push_back(std::move(spec));
    i = j;
  }
  return manifest;
}

std::string render_group_spec(const GroupSpec& spec) {
  std::ostringstream out;
  out << "name " << spec.name << "\n";
  if (spec.family) {
    const FamilyExpr& f = *spec.family;
    out << "family " << f.family;
    if (f.family == "product") {
      for (const FamilyExpr& factor : f.factors) {
        out << " " << compact_token(factor);
      }
    } else {
      for (std::int64_t p : f.params) out << " " << p;
    }
    out << "\n";
  } else if (spec.inline_gens) {
    out << "degree " << spec.inline_gens->degree << "\n";
    out << "gens ";
    for (std::size_t i = 0; i < spec.inline_gens->generators.size(); ++i) {
      if (i > 0) out << ", ";
      out << spec.inline_gens->generators[i].to_cycle_string();
    }
    out << "\n";
  }
  return out.str();
}

PermutationGroup realize(const GroupSpec& spec, std::uint64_t max_order,
                         int max_degree) {
  int degree = 1;
  std::vector<Permutation> gens;
  if (spec.inline_gens) {
    degree = spec.inline_gens->degree;
    gens = spec.inline_gens->generators;
  } else if (spec.family) {
    degree = family_degree(*spec.family);
    if (degree > max_degree) {
      throw InstanceTooLarge("group spec '" + spec.name + "' needs degree " +
                             std::to_string(degree) + " (bound " +
                             std::to_string(max_degree) + ")");
    }
    gens = family_generators(*spec.family, degree);
  }
  if (degree > max_degree) {
    throw InstanceTooLarge("group spec '" + spec.name + "' needs degree " +
                           std::to_string(degree) + " (bound " +
                           std::to_string(max_degree) + ")");
  }
  PermutationGroup g(degree, std::move(gens));
  if (g.order() > static_cast<unsigned long>(max_order)) {
    throw GroupTooLarge("group '" + spec.name + "' has order " +
                        g.order().get_str() + " (bound " +
                        std::to_string(max_order) + ")");
  }
  return g;
}

std::vector<GroupSpec> builtin_corpus() {
  std::vector<GroupSpec> out;
  auto add = [&](const std::string& text) {
    out.push_back(parse_group_spec(text));
  };

  // Cyclic groups through order 24.
  for (int n = 1; n <= 24; ++n) {
    add("name c" + std::to_string(n) + "\nfamily cyclic " + std::to_string(n));
  }

  // The remaining abelian groups of order <= 24, one per isomorphism class.
  for (const char* factors :
       {"c2 c2", "c2 c4", "c2 c2 c2", "c3 c3", "c2 c6", "c2 c8", "c4 c4",
        "c2 c2 c4", "c2 c2 c2 c2", "c3 c6", "c2 c10", "c2 c12",
        "c2 c2 c6"}) {
    std::string token(factors);
    std::string name = token;
    for (char& c : name) {
      if (c == ' ') c = 'x';
    }
    add("name " + name + "\nfamily product " + token);
  }

  // Nonabelian groups of order <= 24 expressible with these families.
  add("name s3\nfamily symmetric 3");
  add("name d8\nfamily dihedral 8");
  add("name q8\nfamily quaternion 8");
  add("name d10\nfamily dihedral 10");
  add("name d12\nfamily dihedral 12");
  add("name a4\nfamily alternating 4");
  add("name d14\nfamily dihedral 14");
  add("name d16\nfamily dihedral 16");
  add("name q16\nfamily quaternion 16");
  add("name d8xc2\nfamily product d8 c2");
  add("name q8xc2\nfamily product q8 c2");
  add("name d18\nfamily dihedral 18");
  add("name s3xc3\nfamily product s3 c3");
  add("name d20\nfamily dihedral 20");
  add("name d22\nfamily dihedral 22");
  add("name d24\nfamily dihedral 24");
  add("name s4\nfamily symmetric 4");
  add("name a4xc2\nfamily product a4 c2");
  add("name d8xc3\nfamily product d8 c3");
  add("name q8xc3\nfamily product q8 c3");
  add("name s3xc4\nfamily product s3 c4");
  add("name d12xc2\nfamily product d12 c2");

  // Dihedral and quaternion series to order 64.
  add("name d32\nfamily dihedral 32");
  add("name d64\nfamily dihedral 64");
  add("name q32\nfamily quaternion 32");
  add("name q64\nfamily quaternion 64");

  // Symmetric and alternating groups to degree 6.
  add("name s5\nfamily symmetric 5");
  add("name s6\nfamily symmetric 6");
  add("name a5\nfamily alternating 5");
  add("name a6\nfamily alternating 6");

  // PSL(2, q) on the projective line.
  add("name psl2_5\nfamily psl 2 5");
  add("name psl2_7\nfamily psl 2 7");
  add("name psl2_8\nfamily psl 2 8");
  add("name psl2_9\nfamily psl 2 9");

  return out;
}

}  // namespace charvanish
