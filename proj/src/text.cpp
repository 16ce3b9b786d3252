#include "pslens/text.hpp"

#include <sstream>

namespace pslens {

std::vector<std::string> tokenize_line(const std::string& line, int line_no) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    std::string tok;
    if (c == '"') {
      ++i;
      bool closed = false;
      while (i < n) {
        if (line[i] == '\\' && i + 1 < n) {
          tok += line[i + 1];
          i += 2;
          continue;
        }
        if (line[i] == '"') {
          closed = true;
          ++i;
          break;
        }
        tok += line[i++];
      }
      if (!closed) throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
    } else {
      while (i < n && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') tok += line[i++];
    }
    out.push_back(std::move(tok));
  }
  return out;
}

std::string quote_token(const std::string& token) {
  bool plain = !token.empty() && token[0] != '"' && token[0] != '#';
  for (char c : token)
    if (c == ' ' || c == '\t' || c == '"' || c == '\\') plain = false;
  if (plain) return token;
  std::string out = "\"";
  for (char c : token) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

FiniteTable<std::string> parse_iposet_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  FiniteTable<std::string> t;
  bool have_elements = false;
  bool reflexive = false;
  auto need = [&](const std::vector<std::string>& toks, std::size_t n) {
    if (toks.size() != n)
      throw ParseError("line " + std::to_string(line_no) + ": '" + toks[0] + "' expects " +
                       std::to_string(n - 1) + " argument(s)");
    if (!have_elements) throw ParseError("line " + std::to_string(line_no) + ": 'elements' must come first");
  };
  auto index = [&](const std::string& x) {
    auto i = t.index_of(x);
    if (!i) throw ParseError("line " + std::to_string(line_no) + ": unknown element '" + x + "'");
    return *i;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize_line(line, line_no);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    if (kw == "name") {
      continue;
    } else if (kw == "elements") {
      if (have_elements) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'elements'");
      t = FiniteTable<std::string>(std::vector<std::string>(toks.begin() + 1, toks.end()));
      have_elements = true;
    } else if (kw == "reflexive") {
      need(toks, 1);
      reflexive = true;
    } else if (kw == "le") {
      need(toks, 3);
      t.le[index(toks[1])][index(toks[2])] = true;
    } else if (kw == "id") {
      need(toks, 3);
      t.id[index(toks[1])][index(toks[2])] = true;
    } else if (kw == "le+id") {
      need(toks, 3);
      auto a = index(toks[1]), b = index(toks[2]);
      t.le[a][b] = t.id[a][b] = true;
    } else if (kw == "least") {
      need(toks, 2);
      t.least = index(toks[1]);
    } else if (kw == "merge") {
      need(toks, 4);
      t.enable_merge();
      (*t.merge)[index(toks[1])][index(toks[2])] = index(toks[3]);
    } else if (kw == "nomerge") {
      need(toks, 1);
      t.merge.reset();
    } else if (kw == "emptymerge") {
      need(toks, 1);
      t.enable_merge();
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + kw + "'");
    }
  }
  if (!have_elements) throw ParseError("missing 'elements' line");
  if (reflexive) t.add_reflexive();
  return t;
}

FiniteIPoset<std::string> parse_iposet(const std::string& text) {
  std::string name = "parsed";
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize_line(line, line_no);
    if (toks.size() == 2 && toks[0] == "name") name = toks[1];
  }
  return FiniteIPoset<std::string>(parse_iposet_table(text), name);
}

std::string format_iposet(const FiniteIPoset<std::string>& p) {
  const auto& t = p.table();
  std::string out = "name " + quote_token(p.name()) + "\nelements";
  for (const auto& e : t.elements) out += " " + quote_token(e);
  out += "\nreflexive\n";
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto pair = quote_token(t.elements[a]) + " " + quote_token(t.elements[b]);
      if (t.le[a][b] && t.id[a][b])
        out += "le+id " + pair + "\n";
      else if (t.le[a][b])
        out += "le " + pair + "\n";
    }
  if (t.least) out += "least " + quote_token(t.elements[*t.least]) + "\n";
  if (t.merge) {
    bool any = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((*t.merge)[a][b]) {
          any = true;
          out += "merge " + quote_token(t.elements[a]) + " " + quote_token(t.elements[b]) + " " +
                 quote_token(t.elements[*(*t.merge)[a][b]]) + "\n";
        }
    if (!any) out += "emptymerge\n";
  }
  return out;
}

}  // namespace pslens
