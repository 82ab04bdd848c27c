// Copyright 2026 The Courant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "model.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "courant/errors.hpp"

namespace courant::cli {

namespace {

// ---------------------------------------------------------------------------
// Lexical layer: sections of key = value lines.

struct Value {
  enum class Kind { String, Integer, Bool, Array };
  Kind kind = Kind::String;
  std::string text;
  long integer = 0;
  bool boolean = false;
  std::vector<Value> items;
  int line = 0;
  int column = 0;
};

struct Entry {
  std::string key;
  Value value;
  int line = 0;
  int column = 0;
};

struct RawSection {
  std::vector<std::string> path;
  std::vector<Entry> entries;
  int line = 0;
};

bool is_bare_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '.' && c != '[' && c != ']' && c != '"' && c != '#' &&
         c != '=';
}

class LineReader {
 public:
  LineReader(const std::string& text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size() || text_[pos_] == '#';
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, line_, column()); }

  void expect(char c, const std::string& expected) {
    if (peek() != c) fail("expected " + expected);
    ++pos_;
  }

  std::string quoted() {
    expect('"', "'\"'");
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) fail("unterminated string; expected '\"'");
    ++pos_;
    return out;
  }

  std::string key() {
    if (peek() == '"') return quoted();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_bare_key_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a key (bare word or quoted string)");
    return text_.substr(start, pos_ - start);
  }

  Value value() {
    Value v;
    const char c = peek();
    v.line = line_;
    v.column = column();
    if (c == '"') {
      v.kind = Value::Kind::String;
      v.text = quoted();
    } else if (c == '[') {
      ++pos_;
      v.kind = Value::Kind::Array;
      if (peek() == ']') {
        ++pos_;
        return v;
      }
      for (;;) {
        v.items.push_back(value());
        const char next = peek();
        ++pos_;
        if (next == ']') break;
        if (next != ',') {
          --pos_;
          fail("expected one of ',' ']'");
        }
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      const std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string digits = text_.substr(start, pos_ - start);
      if (digits == "-") fail("expected digits after '-'");
      v.kind = Value::Kind::Integer;
      v.integer = std::stol(digits);
    } else if (text_.compare(pos_, 4, "true") == 0) {
      pos_ += 4;
      v.kind = Value::Kind::Bool;
      v.boolean = true;
    } else if (text_.compare(pos_, 5, "false") == 0) {
      pos_ += 5;
      v.kind = Value::Kind::Bool;
    } else {
      fail("expected one of '\"' '[' integer true false");
    }
    return v;
  }

  std::vector<std::string> header() {
    expect('[', "'['");
    std::vector<std::string> path;
    for (;;) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      if (pos_ == start) fail("expected a section name");
      path.push_back(text_.substr(start, pos_ - start));
      const char next = peek();
      ++pos_;
      if (next == ']') break;
      if (next != '.') {
        --pos_;
        fail("expected one of '.' ']'");
      }
    }
    return path;
  }

 private:
  std::string text_;
  int line_;
  std::size_t pos_ = 0;
};

std::vector<RawSection> lex(const std::string& text) {
  std::vector<RawSection> sections;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    LineReader r(raw, line);
    if (r.at_end()) continue;
    if (r.peek() == '[') {
      RawSection s;
      s.path = r.header();
      s.line = line;
      if (!r.at_end()) r.fail("expected end of line after section header");
      sections.push_back(std::move(s));
      continue;
    }
    if (sections.empty()) r.fail("expected a section header '[...]' before the first entry");
    Entry e;
    e.line = line;
    e.column = r.column();
    e.key = r.key();
    r.expect('=', "'='");
    e.value = r.value();
    if (!r.at_end()) r.fail("expected end of line");
    sections.back().entries.push_back(std::move(e));
  }
  return sections;
}

// ---------------------------------------------------------------------------
// Typed accessors.

[[noreturn]] void fail_at(const Value& v, const std::string& message) { throw SyntaxError(message, v.line, v.column); }
[[noreturn]] void fail_at(const Entry& e, const std::string& message) { throw SyntaxError(message, e.line, e.column); }

std::string as_string(const Value& v) {
  if (v.kind != Value::Kind::String) fail_at(v, "expected a quoted string");
  return v.text;
}

std::size_t as_count(const Value& v) {
  if (v.kind != Value::Kind::Integer || v.integer < 0) fail_at(v, "expected a nonnegative integer");
  return static_cast<std::size_t>(v.integer);
}

bool as_bool(const Value& v) {
  if (v.kind != Value::Kind::Bool) fail_at(v, "expected true or false");
  return v.boolean;
}

std::vector<std::string> as_names(const Value& v) {
  if (v.kind != Value::Kind::Array) fail_at(v, "expected an array of quoted names");
  std::vector<std::string> out;
  for (const Value& item : v.items) out.push_back(as_string(item));
  return out;
}

RationalFunction as_expression(const Value& v, const SymbolScope& scope) {
  if (v.kind == Value::Kind::Integer) return RationalFunction(v.integer);
  if (v.kind != Value::Kind::String) fail_at(v, "expected a quoted expression");
  // The expression starts one column after the opening quote.
  return parse_expression(v.text, scope, v.line, v.column + 1);
}

RFVector as_expressions(const Value& v, const SymbolScope& scope) {
  if (v.kind != Value::Kind::Array) fail_at(v, "expected an array of quoted expressions");
  RFVector out;
  for (const Value& item : v.items) out.push_back(as_expression(item, scope));
  return out;
}

/// 1-based comma-separated index key such as "1,2", returned 0-based.
IndexTuple as_indices(const Entry& e, std::size_t arity) {
  IndexTuple out;
  std::stringstream in(e.key);
  std::string part;
  while (std::getline(in, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }), part.end());
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); })) {
      fail_at(e, "expected a key of " + std::to_string(arity) + " comma-separated 1-based indices");
    }
    const long i = std::stol(part);
    if (i < 1) fail_at(e, "indices are 1-based");
    out.push_back(static_cast<std::size_t>(i - 1));
  }
  if (out.size() != arity) fail_at(e, "expected a key of " + std::to_string(arity) + " comma-separated 1-based indices");
  return out;
}

bool all_zero(const RFVector& v) {
  return std::all_of(v.begin(), v.end(), [](const RationalFunction& c) { return c.is_zero(); });
}

RFVector negated(RFVector v) {
  for (auto& c : v) c = -c;
  return v;
}

template <typename T>
T* find_named(std::vector<T>& items, const std::string& name) {
  for (auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

template <typename T>
const T* find_named(const std::vector<T>& items, const std::string& name) {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Interpretation.

class Interpreter {
 public:
  explicit Interpreter(std::vector<RawSection> sections) : sections_(std::move(sections)) {}

  ModelDocument run() {
    read_base();
    const SymbolScope scope = doc_.scope();
    for (const RawSection& s : sections_) {
      const std::string& kind = s.path[0];
      if (kind == "base") continue;
      if (kind == "algebroid" && s.path.size() == 2) read_algebroid(s);
    }
    for (const RawSection& s : sections_) {
      const std::string& kind = s.path[0];
      if (kind == "base" || (kind == "algebroid" && s.path.size() == 2)) continue;
      if (kind == "algebroid") {
        read_algebroid_table(s, scope);
      } else if (kind == "bivector" || kind == "form" || kind == "vector") {
        read_tensor(s, scope);
      } else if (kind == "section") {
        read_section(s, scope);
      } else if (kind == "subbundle") {
        read_subbundle(s);
      } else if (kind == "double") {
        read_double(s);
      } else if (kind == "morphism") {
        read_morphism(s, scope);
      } else {
        throw SyntaxError("unknown section kind '" + kind +
                              "'; expected one of base algebroid bivector form vector section subbundle double morphism",
                          s.line, 2);
      }
    }
    return std::move(doc_);
  }

 private:
  static void require_path(const RawSection& s, std::size_t size) {
    if (s.path.size() != size) {
      throw SyntaxError("section [" + s.path[0] + "] takes " + (size == 1 ? "no name" : "exactly one name"), s.line, 2);
    }
  }

  template <typename T>
  void claim_name(std::vector<T>& items, const RawSection& s) {
    if (find_named(items, s.path[1])) {
      throw ResolutionError("duplicate " + s.path[0] + " '" + s.path[1] + "' at line " + std::to_string(s.line));
    }
  }

  void read_base() {
    const RawSection* base = nullptr;
    for (const RawSection& s : sections_) {
      if (s.path[0] != "base") continue;
      require_path(s, 1);
      if (base) throw SyntaxError("duplicate [base] section", s.line, 1);
      base = &s;
    }
    if (!base) throw SyntaxError("missing [base] section", 1, 1);
    bool have_dim = false;
    for (const Entry& e : base->entries) {
      if (e.key == "dim") {
        doc_.base.dim = as_count(e.value);
        have_dim = true;
      } else if (e.key == "coordinates") {
        doc_.base.coordinates = as_names(e.value);
      } else if (e.key == "parameters") {
        doc_.base.parameters = as_names(e.value);
      } else if (e.key == "functions") {
        doc_.base.functions = as_names(e.value);
      } else {
        fail_at(e, "unknown key '" + e.key + "'; expected one of dim coordinates parameters functions");
      }
    }
    if (!have_dim) throw SyntaxError("[base] needs dim", base->line, 1);
    if (doc_.base.coordinates.empty()) {
      for (std::size_t i = 0; i < doc_.base.dim; ++i) doc_.base.coordinates.push_back("x" + std::to_string(i + 1));
    }
    if (doc_.base.coordinates.size() != doc_.base.dim) {
      throw ShapeError("[base] declares dim " + std::to_string(doc_.base.dim) + " but " +
                       std::to_string(doc_.base.coordinates.size()) + " coordinates");
    }
    std::set<std::string> seen;
    for (const auto* list : {&doc_.base.coordinates, &doc_.base.parameters, &doc_.base.functions}) {
      for (const std::string& n : *list) {
        if (!seen.insert(n).second) throw ResolutionError("symbol '" + n + "' declared twice in [base]");
      }
    }
  }

  void read_algebroid(const RawSection& s) {
    claim_name(doc_.algebroids, s);
    AlgebroidDecl a;
    a.name = s.path[1];
    bool have_rank = false;
    for (const Entry& e : s.entries) {
      if (e.key == "kind") {
        a.kind = as_string(e.value);
        if (a.kind != "tangent" && a.kind != "cotangent" && a.kind != "trivial" && a.kind != "general") {
          fail_at(e.value, "expected one of \"tangent\" \"cotangent\" \"trivial\" \"general\"");
        }
      } else if (e.key == "rank") {
        a.rank = as_count(e.value);
        have_rank = true;
      } else if (e.key == "point") {
        a.point = as_bool(e.value);
      } else if (e.key == "poisson") {
        a.poisson = as_string(e.value);
      } else {
        fail_at(e, "unknown key '" + e.key + "'; expected one of kind rank point poisson");
      }
    }
    if (a.kind == "tangent" || a.kind == "cotangent") {
      if (have_rank && a.rank != doc_.base.dim) {
        throw ShapeError("algebroid '" + a.name + "': a " + a.kind + " algebroid has rank equal to the base dimension");
      }
      if (a.point) throw ShapeError("algebroid '" + a.name + "': a " + a.kind + " algebroid cannot live over a point");
      a.rank = doc_.base.dim;
    } else if (!have_rank) {
      throw SyntaxError("algebroid '" + a.name + "' needs rank", s.line, 1);
    }
    if (a.kind == "cotangent" && a.poisson.empty()) {
      throw SyntaxError("cotangent algebroid '" + a.name + "' needs poisson", s.line, 1);
    }
    if (a.kind != "cotangent" && !a.poisson.empty()) {
      throw SyntaxError("poisson is only meaningful for kind \"cotangent\"", s.line, 1);
    }
    doc_.algebroids.push_back(std::move(a));
  }

  void read_algebroid_table(const RawSection& s, const SymbolScope& scope) {
    if (s.path.size() != 3 || (s.path[2] != "anchor" && s.path[2] != "brackets")) {
      throw SyntaxError("expected [algebroid.NAME], [algebroid.NAME.anchor] or [algebroid.NAME.brackets]", s.line, 2);
    }
    AlgebroidDecl* a = find_named(doc_.algebroids, s.path[1]);
    if (!a) throw ResolutionError("table for undeclared algebroid '" + s.path[1] + "'");
    if (a->kind != "general") throw ShapeError("algebroid '" + a->name + "' of kind " + a->kind + " takes no tables");
    const bool anchor = s.path[2] == "anchor";
    for (const Entry& e : s.entries) {
      const IndexTuple idx = as_indices(e, anchor ? 1 : 2);
      for (std::size_t i : idx) {
        if (i >= a->rank) fail_at(e, "frame index exceeds rank " + std::to_string(a->rank));
      }
      RFVector row = as_expressions(e.value, scope);
      const std::size_t width = anchor ? (a->point ? 0 : doc_.base.dim) : a->rank;
      if (row.size() != width) {
        throw ShapeError("line " + std::to_string(e.line) + ": expected " + std::to_string(width) + " entries, got " +
                         std::to_string(row.size()));
      }
      if (anchor) {
        if (a->anchor.count(idx[0])) fail_at(e, "anchor row given twice");
        if (!all_zero(row)) a->anchor[idx[0]] = std::move(row);
        continue;
      }
      if (idx[0] == idx[1]) fail_at(e, "a bracket [e_i, e_i] is zero by antisymmetry");
      const bool swapped = idx[0] > idx[1];
      const std::pair<std::size_t, std::size_t> key{std::min(idx[0], idx[1]), std::max(idx[0], idx[1])};
      if (a->brackets.count(key)) fail_at(e, "bracket given twice");
      if (!all_zero(row)) a->brackets[key] = swapped ? negated(std::move(row)) : std::move(row);
    }
  }

  void read_tensor(const RawSection& s, const SymbolScope& scope) {
    require_path(s, 2);
    const std::string& kind = s.path[0];
    std::vector<TensorDecl>& list = kind == "bivector" ? doc_.bivectors : kind == "form" ? doc_.forms : doc_.vectors;
    claim_name(list, s);
    TensorDecl t;
    t.name = s.path[1];
    const std::size_t arity = kind == "vector" ? 1 : 2;
    std::set<IndexTuple> seen;
    for (const Entry& e : s.entries) {
      if (e.key == "host") {
        t.host = as_string(e.value);
        continue;
      }
      IndexTuple idx = as_indices(e, arity);
      const int sign = sort_sign(idx);
      if (sign == 0) fail_at(e, "repeated index in an alternating tensor");
      if (!seen.insert(idx).second) fail_at(e, "coefficient given twice");
      const RationalFunction c = as_expression(e.value, scope);
      if (!c.is_zero()) t.coefficients[idx] = sign > 0 ? c : -c;
    }
    if (t.host.empty()) throw SyntaxError(kind + " '" + t.name + "' needs host", s.line, 1);
    list.push_back(std::move(t));
  }

  void read_section(const RawSection& s, const SymbolScope& scope) {
    require_path(s, 2);
    claim_name(doc_.sections, s);
    SectionDecl d;
    d.name = s.path[1];
    for (const Entry& e : s.entries) {
      if (e.key == "double") {
        d.double_name = as_string(e.value);
      } else if (e.key == "vector") {
        d.vector = as_expressions(e.value, scope);
      } else if (e.key == "form") {
        d.form = as_expressions(e.value, scope);
      } else {
        fail_at(e, "unknown key '" + e.key + "'; expected one of double vector form");
      }
    }
    if (d.double_name.empty()) throw SyntaxError("section '" + d.name + "' needs double", s.line, 1);
    doc_.sections.push_back(std::move(d));
  }

  void read_subbundle(const RawSection& s) {
    require_path(s, 2);
    claim_name(doc_.subbundles, s);
    SubbundleDecl d;
    d.name = s.path[1];
    for (const Entry& e : s.entries) {
      if (e.key == "double") {
        d.double_name = as_string(e.value);
      } else if (e.key == "span") {
        d.span = as_names(e.value);
      } else if (e.key == "rank") {
        d.rank = as_count(e.value);
      } else {
        fail_at(e, "unknown key '" + e.key + "'; expected one of double span rank");
      }
    }
    if (d.double_name.empty()) throw SyntaxError("subbundle '" + d.name + "' needs double", s.line, 1);
    doc_.subbundles.push_back(std::move(d));
  }

  void read_double(const RawSection& s) {
    require_path(s, 2);
    claim_name(doc_.doubles, s);
    DoubleDecl d;
    d.name = s.path[1];
    for (const Entry& e : s.entries) {
      if (e.key == "A") {
        d.A = as_string(e.value);
      } else if (e.key == "Astar") {
        d.Astar = as_string(e.value);
      } else {
        fail_at(e, "unknown key '" + e.key + "'; expected one of A Astar");
      }
    }
    if (d.A.empty() || d.Astar.empty()) throw SyntaxError("double '" + d.name + "' needs A and Astar", s.line, 1);
    doc_.doubles.push_back(std::move(d));
  }

  void read_morphism(const RawSection& s, const SymbolScope& scope) {
    require_path(s, 2);
    claim_name(doc_.morphisms, s);
    MorphismDecl m;
    m.name = s.path[1];
    for (const Entry& e : s.entries) {
      if (e.key == "source") {
        m.source = as_string(e.value);
      } else if (e.key == "target") {
        m.target = as_string(e.value);
      } else {
        const IndexTuple idx = as_indices(e, 1);
        if (m.rows.count(idx[0])) fail_at(e, "row given twice");
        RFVector row = as_expressions(e.value, scope);
        if (!all_zero(row)) m.rows[idx[0]] = std::move(row);
      }
    }
    if (m.source.empty() || m.target.empty()) {
      throw SyntaxError("morphism '" + m.name + "' needs source and target", s.line, 1);
    }
    doc_.morphisms.push_back(std::move(m));
  }

  std::vector<RawSection> sections_;
  ModelDocument doc_;
};

// ---------------------------------------------------------------------------
// Cross-reference and shape validation.

const AlgebroidDecl& require_algebroid(const ModelDocument& doc, const std::string& name, const std::string& user) {
  const AlgebroidDecl* a = doc.algebroid(name);
  if (!a) throw ResolutionError(user + " refers to undeclared algebroid '" + name + "'");
  return *a;
}

void validate(ModelDocument& doc) {
  for (const auto* list : {&doc.bivectors, &doc.forms, &doc.vectors}) {
    for (const TensorDecl& t : *list) {
      const AlgebroidDecl& host = require_algebroid(doc, t.host, "'" + t.name + "'");
      for (const auto& [idx, c] : t.coefficients) {
        for (std::size_t i : idx) {
          if (i >= host.rank) throw ShapeError("'" + t.name + "': index exceeds the rank of '" + host.name + "'");
        }
      }
    }
  }
  for (const AlgebroidDecl& a : doc.algebroids) {
    if (a.kind != "cotangent") continue;
    const TensorDecl* pi = find_named(doc.bivectors, a.poisson);
    if (!pi) throw ResolutionError("algebroid '" + a.name + "' refers to undeclared bivector '" + a.poisson + "'");
    if (require_algebroid(doc, pi->host, "'" + pi->name + "'").kind != "tangent") {
      throw ShapeError("bivector '" + pi->name + "' must live on a tangent algebroid to define '" + a.name + "'");
    }
  }
  for (const DoubleDecl& d : doc.doubles) {
    const AlgebroidDecl& A = require_algebroid(doc, d.A, "double '" + d.name + "'");
    const AlgebroidDecl& B = require_algebroid(doc, d.Astar, "double '" + d.name + "'");
    if (A.rank != B.rank || A.point != B.point) {
      throw ShapeError("double '" + d.name + "': '" + A.name + "' and '" + B.name + "' differ in rank or base");
    }
  }
  for (SectionDecl& s : doc.sections) {
    const DoubleDecl* d = find_named(doc.doubles, s.double_name);
    if (!d) throw ResolutionError("section '" + s.name + "' refers to undeclared double '" + s.double_name + "'");
    const std::size_t r = doc.algebroid(d->A)->rank;
    if (s.vector.empty()) s.vector.assign(r, RationalFunction());
    if (s.form.empty()) s.form.assign(r, RationalFunction());
    if (s.vector.size() != r || s.form.size() != r) {
      throw ShapeError("section '" + s.name + "' needs " + std::to_string(r) + " vector and form components");
    }
  }
  for (const SubbundleDecl& L : doc.subbundles) {
    if (!find_named(doc.doubles, L.double_name)) {
      throw ResolutionError("subbundle '" + L.name + "' refers to undeclared double '" + L.double_name + "'");
    }
    for (const std::string& n : L.span) {
      const SectionDecl* s = find_named(doc.sections, n);
      if (!s) throw ResolutionError("subbundle '" + L.name + "' refers to undeclared section '" + n + "'");
      if (s->double_name != L.double_name) {
        throw ShapeError("subbundle '" + L.name + "': section '" + n + "' lives on a different double");
      }
    }
  }
  for (const MorphismDecl& m : doc.morphisms) {
    const AlgebroidDecl& src = require_algebroid(doc, m.source, "morphism '" + m.name + "'");
    const AlgebroidDecl& tgt = require_algebroid(doc, m.target, "morphism '" + m.name + "'");
    if (!tgt.point) throw ShapeError("morphism '" + m.name + "': target must be declared with point = true");
    for (const auto& [i, row] : m.rows) {
      if (i >= src.rank || row.size() != tgt.rank) {
        throw ShapeError("morphism '" + m.name + "': rows are indexed by source frame and have one entry per target frame");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Printing.

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string name_list(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + quote(names[i]);
  return out + "]";
}

std::string index_key(const IndexTuple& idx) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + std::to_string(idx[k] + 1);
  return quote(out);
}

}  // namespace

SymbolScope ModelDocument::scope() const {
  SymbolScope s;
  s.coordinates = base.coordinates;
  s.parameters.insert(base.parameters.begin(), base.parameters.end());
  s.functions.insert(base.functions.begin(), base.functions.end());
  return s;
}

const AlgebroidDecl* ModelDocument::algebroid(const std::string& name) const { return find_named(algebroids, name); }

ModelDocument parse_model(const std::string& text) {
  ModelDocument doc = Interpreter(lex(text)).run();
  validate(doc);
  return doc;
}

std::string print_model(const ModelDocument& doc) {
  const NameContext names = doc.scope().names();
  const auto expr = [&](const RationalFunction& f) { return quote(f.to_string(names)); };
  const auto exprs = [&](const RFVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + expr(v[i]);
    return out + "]";
  };
  std::ostringstream out;
  out << "[base]\n";
  out << "dim = " << doc.base.dim << "\n";
  out << "coordinates = " << name_list(doc.base.coordinates) << "\n";
  if (!doc.base.parameters.empty()) out << "parameters = " << name_list(doc.base.parameters) << "\n";
  if (!doc.base.functions.empty()) out << "functions = " << name_list(doc.base.functions) << "\n";
  for (const AlgebroidDecl& a : doc.algebroids) {
    out << "\n[algebroid." << a.name << "]\n";
    out << "kind = " << quote(a.kind) << "\n";
    if (a.kind == "general" || a.kind == "trivial") out << "rank = " << a.rank << "\n";
    if (a.point) out << "point = true\n";
    if (!a.poisson.empty()) out << "poisson = " << quote(a.poisson) << "\n";
    if (!a.anchor.empty()) {
      out << "\n[algebroid." << a.name << ".anchor]\n";
      for (const auto& [i, row] : a.anchor) out << index_key({i}) << " = " << exprs(row) << "\n";
    }
    if (!a.brackets.empty()) {
      out << "\n[algebroid." << a.name << ".brackets]\n";
      for (const auto& [ij, row] : a.brackets) out << index_key({ij.first, ij.second}) << " = " << exprs(row) << "\n";
    }
  }
  const auto tensors = [&](const char* kind, const std::vector<TensorDecl>& list) {
    for (const TensorDecl& t : list) {
      out << "\n[" << kind << "." << t.name << "]\n";
      out << "host = " << quote(t.host) << "\n";
      for (const auto& [idx, c] : t.coefficients) out << index_key(idx) << " = " << expr(c) << "\n";
    }
  };
  tensors("bivector", doc.bivectors);
  tensors("form", doc.forms);
  tensors("vector", doc.vectors);
  for (const DoubleDecl& d : doc.doubles) {
    out << "\n[double." << d.name << "]\n";
    out << "A = " << quote(d.A) << "\nAstar = " << quote(d.Astar) << "\n";
  }
  for (const SectionDecl& s : doc.sections) {
    out << "\n[section." << s.name << "]\n";
    out << "double = " << quote(s.double_name) << "\n";
    out << "vector = " << exprs(s.vector) << "\nform = " << exprs(s.form) << "\n";
  }
  for (const SubbundleDecl& L : doc.subbundles) {
    out << "\n[subbundle." << L.name << "]\n";
    out << "double = " << quote(L.double_name) << "\nspan = " << name_list(L.span) << "\n";
    if (L.rank) out << "rank = " << *L.rank << "\n";
  }
  for (const MorphismDecl& m : doc.morphisms) {
    out << "\n[morphism." << m.name << "]\n";
    out << "source = " << quote(m.source) << "\ntarget = " << quote(m.target) << "\n";
    for (const auto& [i, row] : m.rows) out << index_key({i}) << " = " << exprs(row) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Model.

Model::Model(ModelDocument doc) : doc_(std::move(doc)) {}

const LieAlgebroid& Model::algebroid(const std::string& name) {
  if (auto it = algebroids_.find(name); it != algebroids_.end()) return it->second;
  const AlgebroidDecl* a = doc_.algebroid(name);
  if (!a) throw ResolutionError("undeclared algebroid '" + name + "'");
  const std::size_t n = a->point ? 0 : doc_.base.dim;
  std::optional<LieAlgebroid> built;
  if (a->kind == "tangent") {
    built = LieAlgebroid::tangent(n, a->name);
  } else if (a->kind == "trivial") {
    built = LieAlgebroid::trivial(n, a->rank, a->name);
  } else if (a->kind == "cotangent") {
    built = cotangent_algebroid(poisson(a->poisson), a->name);
  } else {
    RFMatrix anchor = zero_matrix(a->rank, n);
    for (const auto& [i, row] : a->anchor) anchor[i] = row;
    auto table = LieAlgebroid::empty_table(a->rank);
    for (const auto& [ij, row] : a->brackets) {
      table[ij.first][ij.second] = row;
      table[ij.second][ij.first] = negated(row);
    }
    built = LieAlgebroid(n, a->rank, std::move(anchor), std::move(table), a->name);
  }
  return algebroids_.emplace(name, std::move(*built)).first->second;
}

const DoubleStructure& Model::double_structure(const std::string& name) {
  if (auto it = doubles_.find(name); it != doubles_.end()) return it->second;
  const DoubleDecl* d = find_named(doc_.doubles, name);
  if (!d) throw ResolutionError("undeclared double '" + name + "'");
  DoubleStructure D(algebroid(d->A), algebroid(d->Astar));
  return doubles_.emplace(name, std::move(D)).first->second;
}

namespace {

GradedSection build_tensor(const TensorDecl& t, std::size_t rank, std::size_t degree, Host host) {
  GradedSection out(rank, degree, host);
  for (const auto& [idx, c] : t.coefficients) out.add(idx, c);
  return out;
}

}  // namespace

GradedSection Model::bivector(const std::string& name) {
  const TensorDecl* t = find_named(doc_.bivectors, name);
  if (!t) throw ResolutionError("undeclared bivector '" + name + "'");
  const LieAlgebroid& A = algebroid(t->host);
  return build_tensor(*t, A.rank(), 2, A.vector_host());
}

GradedSection Model::form(const std::string& name) {
  const TensorDecl* t = find_named(doc_.forms, name);
  if (!t) throw ResolutionError("undeclared form '" + name + "'");
  const LieAlgebroid& A = algebroid(t->host);
  return build_tensor(*t, A.rank(), 2, A.form_host());
}

GradedSection Model::vector(const std::string& name) {
  const TensorDecl* t = find_named(doc_.vectors, name);
  if (!t) throw ResolutionError("undeclared vector '" + name + "'");
  const LieAlgebroid& A = algebroid(t->host);
  return build_tensor(*t, A.rank(), 1, A.vector_host());
}

DoubleSection Model::section(const std::string& name) {
  const SectionDecl* s = find_named(doc_.sections, name);
  if (!s) throw ResolutionError("undeclared section '" + name + "'");
  return double_structure(s->double_name).from_components(s->vector, s->form);
}

SubbundleSpec Model::subbundle(const std::string& name) {
  const SubbundleDecl* L = find_named(doc_.subbundles, name);
  if (!L) throw ResolutionError("undeclared subbundle '" + name + "'");
  std::vector<DoubleSection> spanning;
  for (const std::string& s : L->span) spanning.push_back(section(s));
  const DoubleStructure& D = double_structure(L->double_name);
  if (L->rank) return SubbundleSpec(D, std::move(spanning), *L->rank);
  return SubbundleSpec(D, std::move(spanning));
}

AlgebroidMorphismToAlgebra Model::morphism(const std::string& name) {
  const MorphismDecl* m = find_named(doc_.morphisms, name);
  if (!m) throw ResolutionError("undeclared morphism '" + name + "'");
  const LieAlgebroid& source = algebroid(m->source);
  const LieAlgebroid& target = algebroid(m->target);
  RFMatrix phi = zero_matrix(source.rank(), target.rank());
  for (const auto& [i, row] : m->rows) phi[i] = row;
  return {source, target, std::move(phi)};
}

PoissonTensor Model::poisson(const std::string& name) {
  const TensorDecl* t = find_named(doc_.bivectors, name);
  if (!t) throw ResolutionError("undeclared bivector '" + name + "'");
  const AlgebroidDecl* host = doc_.algebroid(t->host);
  if (!host || host->kind != "tangent") {
    throw ShapeError("bivector '" + name + "' must live on a tangent algebroid to be a Poisson tensor");
  }
  return PoissonTensor(build_tensor(*t, host->rank, 2, {}));
}

bool Model::has_bivector(const std::string& name) const { return find_named(doc_.bivectors, name) != nullptr; }

bool Model::has_form(const std::string& name) const { return find_named(doc_.forms, name) != nullptr; }

std::string Model::host_of(const std::string& name) const {
  for (const auto* list : {&doc_.bivectors, &doc_.forms, &doc_.vectors}) {
    if (const TensorDecl* t = find_named(*list, name)) return t->host;
  }
  throw ResolutionError("undeclared tensor '" + name + "'");
}

}  // namespace courant::cli
