#include "raag/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace raag {

namespace {

// Line:column of a byte offset, both 1-based.
std::pair<int, int> line_col(const std::string& text, size_t pos) {
  int line = 1, col = 1;
  for (size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& msg) {
  auto [line, col] = line_col(text, pos);
  throw Error(errc::parse_error,
              std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

}  // namespace

Graph::Ptr parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert so editors can jump to it.
    parse_fail(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw Error(errc::parse_error, "graph JSON needs a \"vertices\" array");
  std::vector<std::string> labels;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw Error(errc::parse_error, "vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw Error(errc::parse_error, "\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw Error(errc::parse_error, "each edge must be a pair of vertex labels");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return Graph::make_labeled(std::move(labels), edges);
}

namespace {

struct DotLexer {
  const std::string& text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '*') {
        size_t start = pos;
        pos += 2;
        while (pos + 1 < text.size() && !(text[pos] == '*' && text[pos + 1] == '/')) ++pos;
        if (pos + 1 >= text.size()) parse_fail(text, start, "unterminated comment");
        pos += 2;
      } else {
        return;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  bool eat_edge_op() {
    skip_space();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '-') {
      pos += 2;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_space();
    size_t start = pos;
    if (pos < text.size() && text[pos] == '"') {
      ++pos;
      std::string s;
      while (pos < text.size() && text[pos] != '"') s.push_back(text[pos++]);
      if (pos >= text.size()) parse_fail(text, start, "unterminated quoted name");
      ++pos;
      return s;
    }
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos;
      } else {
        break;
      }
    }
    if (pos == start) parse_fail(text, start, "expected a name");
    return text.substr(start, pos - start);
  }
};

}  // namespace

Graph::Ptr parse_graph_dot(const std::string& text) {
  DotLexer lx{text};
  std::string kw = lx.ident();
  if (kw == "strict") kw = lx.ident();
  if (kw != "graph") parse_fail(text, 0, "only undirected 'graph' blocks are supported");
  if (lx.peek() != '{') lx.ident();  // optional graph name
  if (!lx.eat('{')) parse_fail(text, lx.pos, "expected '{'");

  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  auto declare = [&](const std::string& name) {
    for (const auto& l : labels)
      if (l == name) return;
    labels.push_back(name);
  };

  while (true) {
    if (lx.eat('}')) break;
    if (lx.at_end()) parse_fail(text, lx.pos, "expected '}'");
    if (lx.eat(';')) continue;
    std::string head = lx.ident();
    declare(head);
    while (lx.eat_edge_op()) {
      std::string next = lx.ident();
      declare(next);
      edges.emplace_back(head, next);
      head = next;
    }
    lx.eat(';');
  }
  if (!lx.at_end()) parse_fail(text, lx.pos, "trailing input after '}'");
  return Graph::make_labeled(std::move(labels), edges);
}

Graph::Ptr load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".dot" || ext == ".gv") return parse_graph_dot(text);
  return parse_graph_json(text);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.labels();
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({g.label(a), g.label(b)});
  return j;
}

std::string monomial_to_string(const Graph& g, const Monomial& m) {
  if (m.v.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.v.size(); ++i) {
    if (i) s += '.';
    s += g.label(m.v[i]);
  }
  return s;
}

nlohmann::json series_to_json(const Series& s) {
  nlohmann::json j;
  j["cap"] = s.cap();
  j["mod"] = s.mod();
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) {
    nlohmann::json t;
    t["monomial"] = monomial_to_string(*s.graph(), m);
    t["coeff"] = c;
    j["terms"].push_back(std::move(t));
  }
  return j;
}

Series parse_series_json(const Graph::Ptr& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cap") || !j.contains("terms"))
    throw Error(errc::parse_error, "series JSON needs \"cap\" and \"terms\"");
  int cap = j["cap"].get<int>();
  int64_t mod = j.contains("mod") ? j["mod"].get<int64_t>() : 0;
  Series s(g, cap, mod);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff"))
      throw Error(errc::parse_error, "each term needs \"monomial\" and \"coeff\"");
    std::string mono = t["monomial"].get<std::string>();
    std::vector<int> verts;
    if (mono != "1") {
      size_t start = 0;
      while (start <= mono.size()) {
        size_t dot = mono.find('.', start);
        std::string label = mono.substr(start, dot == std::string::npos ? dot : dot - start);
        verts.push_back(g->require(label));
        if (dot == std::string::npos) break;
        start = dot + 1;
      }
    }
    s.add_term(std::move(verts), t["coeff"].get<int64_t>());
  }
  return s;
}

nlohmann::json graph_fingerprint(const Graph& g) {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (auto [a, b] : g.edges()) {
    mix(g.label(a));
    mix(g.label(b));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  nlohmann::json j;
  j["vertices"] = g.n();
  j["edge_hash"] = buf;
  return j;
}

nlohmann::json make_report(const std::string& command, const Graph& g, nlohmann::json payload) {
  nlohmann::json j;
  j["command"] = command;
  j["fingerprint"] = graph_fingerprint(g);
  j["payload"] = std::move(payload);
  j["version"] = kToolVersion;
  return j;
}

nlohmann::json make_report(const std::string& command, nlohmann::json payload) {
  nlohmann::json j;
  j["command"] = command;
  j["payload"] = std::move(payload);
  j["version"] = kToolVersion;
  return j;
}

nlohmann::json error_json(const Error& e) {
  nlohmann::json j;
  j["error"]["code"] = e.code();
  j["error"]["message"] = e.what();
  return j;
}

std::string render_json(const nlohmann::json& j, bool pretty) {
  return j.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace raag
