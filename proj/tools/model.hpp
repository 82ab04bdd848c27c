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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "courant/dirac.hpp"
#include "courant/expression.hpp"

namespace courant::cli {

struct BaseDecl {
  std::size_t dim = 0;
  std::vector<std::string> coordinates;
  std::vector<std::string> parameters;
  std::vector<std::string> functions;

  friend bool operator==(const BaseDecl&, const BaseDecl&) = default;
};

/// kind is one of tangent, cotangent, trivial, general. Frame indices are
/// 0-based here and 1-based in the text.
struct AlgebroidDecl {
  std::string name;
  std::string kind = "general";
  std::size_t rank = 0;
  bool point = false;
  /// Bivector the cotangent kind is built from.
  std::string poisson;
  std::map<std::size_t, RFVector> anchor;
  /// Keys (i, j) with i < j.
  std::map<std::pair<std::size_t, std::size_t>, RFVector> brackets;

  friend bool operator==(const AlgebroidDecl&, const AlgebroidDecl&) = default;
};

/// A bivector, 2-form or vector of a named algebroid.
struct TensorDecl {
  std::string name;
  std::string host;
  std::map<IndexTuple, RationalFunction> coefficients;

  friend bool operator==(const TensorDecl&, const TensorDecl&) = default;
};

struct SectionDecl {
  std::string name;
  std::string double_name;
  RFVector vector;
  RFVector form;

  friend bool operator==(const SectionDecl&, const SectionDecl&) = default;
};

struct SubbundleDecl {
  std::string name;
  std::string double_name;
  std::vector<std::string> span;
  std::optional<std::size_t> rank;

  friend bool operator==(const SubbundleDecl&, const SubbundleDecl&) = default;
};

struct DoubleDecl {
  std::string name;
  std::string A;
  std::string Astar;

  friend bool operator==(const DoubleDecl&, const DoubleDecl&) = default;
};

struct MorphismDecl {
  std::string name;
  std::string source;
  std::string target;
  std::map<std::size_t, RFVector> rows;

  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

/// A parsed and validated model file. Entries keep their file order.
struct ModelDocument {
  BaseDecl base;
  std::vector<AlgebroidDecl> algebroids;
  std::vector<TensorDecl> bivectors;
  std::vector<TensorDecl> forms;
  std::vector<TensorDecl> vectors;
  std::vector<SectionDecl> sections;
  std::vector<SubbundleDecl> subbundles;
  std::vector<DoubleDecl> doubles;
  std::vector<MorphismDecl> morphisms;

  SymbolScope scope() const;
  const AlgebroidDecl* algebroid(const std::string& name) const;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

/// Throws SyntaxError, ResolutionError or ShapeError.
ModelDocument parse_model(const std::string& text);
/// Canonical text; parse_model(print_model(doc)) == doc.
std::string print_model(const ModelDocument& doc);

/// Library objects built from a document. Every algebroid and double is
/// built once, so sections taken from the model share host tags.
class Model {
 public:
  explicit Model(ModelDocument doc);

  const ModelDocument& document() const noexcept { return doc_; }
  NameContext names() const { return doc_.scope().names(); }

  const LieAlgebroid& algebroid(const std::string& name);
  const DoubleStructure& double_structure(const std::string& name);
  GradedSection bivector(const std::string& name);
  GradedSection form(const std::string& name);
  GradedSection vector(const std::string& name);
  DoubleSection section(const std::string& name);
  SubbundleSpec subbundle(const std::string& name);
  AlgebroidMorphismToAlgebra morphism(const std::string& name);
  /// A bivector whose host is a tangent algebroid, as a Poisson tensor.
  PoissonTensor poisson(const std::string& name);

  bool has_bivector(const std::string& name) const;
  bool has_form(const std::string& name) const;
  /// Name of the algebroid hosting a bivector, form or vector.
  std::string host_of(const std::string& name) const;

 private:
  ModelDocument doc_;
  std::map<std::string, LieAlgebroid> algebroids_;
  std::map<std::string, DoubleStructure> doubles_;
};

}  // namespace courant::cli
