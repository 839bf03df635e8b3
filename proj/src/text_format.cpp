#include "sclab/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sclab/errors.hpp"

namespace sclab {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t begin = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > begin) out.push_back(line.substr(begin, i - begin));
  }
  return out;
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::size_t end = eol == std::string_view::npos ? text.size() : eol;
    ++number;
    auto tokens = split_tokens(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') out.push_back({number, std::move(tokens)});
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

State parse_state(std::string_view tok, std::size_t line, std::size_t m, const char* what) {
  const std::size_t v = parse_count(tok, line, what);
  if (v >= m) {
    throw ParseError(line, std::string(what) + " " + std::string(tok) + " is out of range [0, " +
                               std::to_string(m) + ")");
  }
  return static_cast<State>(v);
}

const Line& expect_header(const std::vector<Line>& lines, std::size_t idx, std::string_view keyword) {
  if (idx >= lines.size()) {
    throw ParseError(lines.empty() ? 0 : lines.back().number,
                     "unexpected end of input, expected '" + std::string(keyword) + "'");
  }
  const Line& l = lines[idx];
  if (l.tokens.front() != keyword) {
    throw ParseError(l.number, "expected '" + std::string(keyword) + "', got '" +
                                   std::string(l.tokens.front()) + "'");
  }
  return l;
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  const auto lines = significant_lines(text);

  const Line& magic = expect_header(lines, 0, "dfa");
  if (magic.tokens.size() != 1) throw ParseError(magic.number, "unexpected tokens after 'dfa'");

  const Line& alpha_line = expect_header(lines, 1, "alphabet");
  std::vector<std::string> names;
  for (std::size_t i = 1; i < alpha_line.tokens.size(); ++i) names.emplace_back(alpha_line.tokens[i]);
  Alphabet alphabet;
  try {
    alphabet = Alphabet(std::move(names));
  } catch (const InvalidInput& e) {
    throw ParseError(alpha_line.number, e.what());
  }

  const Line& states_line = expect_header(lines, 2, "states");
  if (states_line.tokens.size() != 2) throw ParseError(states_line.number, "expected 'states <m>'");
  const std::size_t m = parse_count(states_line.tokens[1], states_line.number, "state count");
  if (m == 0) throw ParseError(states_line.number, "state count must be positive");

  const Line& start_line = expect_header(lines, 3, "start");
  if (start_line.tokens.size() != 2) throw ParseError(start_line.number, "expected 'start <s>'");
  const State start = parse_state(start_line.tokens[1], start_line.number, m, "start state");

  const Line& final_line = expect_header(lines, 4, "final");
  std::vector<State> finals;
  for (std::size_t i = 1; i < final_line.tokens.size(); ++i) {
    const State f = parse_state(final_line.tokens[i], final_line.number, m, "final state");
    if (std::find(finals.begin(), finals.end(), f) != finals.end()) {
      throw ParseError(final_line.number, "final state " + std::to_string(f) + " listed twice");
    }
    finals.push_back(f);
  }
  std::sort(finals.begin(), finals.end());

  const std::size_t sigma = alphabet.size();
  std::vector<State> delta(m * sigma, kNoState);
  for (std::size_t i = 5; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3) throw ParseError(l.number, "expected '<state> <symbol> <target>'");
    const State q = parse_state(l.tokens[0], l.number, m, "state");
    const auto a = alphabet.index_of(l.tokens[1]);
    if (!a) throw ParseError(l.number, "unknown symbol '" + std::string(l.tokens[1]) + "'");
    const State t = parse_state(l.tokens[2], l.number, m, "target state");
    State& slot = delta[q * sigma + *a];
    if (slot != kNoState) {
      throw ParseError(l.number, "duplicate transition for state " + std::to_string(q) + " on symbol " +
                                     std::string(l.tokens[1]));
    }
    slot = t;
  }
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t a = 0; a < sigma; ++a) {
      if (delta[q * sigma + a] == kNoState) {
        throw ParseError(lines.back().number, "missing transition for state " + std::to_string(q) +
                                                  " on symbol " + alphabet.name(static_cast<Symbol>(a)));
      }
    }
  }

  return Dfa{std::move(alphabet), m, start, std::move(finals), std::move(delta)};
}

Dfa read_dfa_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dfa(buf.str());
}

std::string emit_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "dfa\nalphabet";
  for (const auto& s : d.alphabet.names()) out << ' ' << s;
  out << "\nstates " << d.state_count << "\nstart " << d.start << "\nfinal";
  for (State f : d.finals) out << ' ' << f;
  out << '\n';
  for (std::size_t q = 0; q < d.state_count; ++q) {
    for (std::size_t a = 0; a < d.sigma(); ++a) {
      out << q << ' ' << d.alphabet.name(static_cast<Symbol>(a)) << ' ' << d.delta[q * d.sigma() + a]
          << '\n';
    }
  }
  return out.str();
}

std::string emit_dot(const Dfa& d, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  __start [shape=point];\n";
  for (std::size_t q = 0; q < d.state_count; ++q) {
    out << "  " << q << (d.is_final(static_cast<State>(q)) ? " [shape=doublecircle];\n" : ";\n");
  }
  out << "  __start -> " << d.start << ";\n";
  for (std::size_t q = 0; q < d.state_count; ++q) {
    for (std::size_t a = 0; a < d.sigma(); ++a) {
      out << "  " << q << " -> " << d.delta[q * d.sigma() + a] << " [label=\""
          << d.alphabet.name(static_cast<Symbol>(a)) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sclab
