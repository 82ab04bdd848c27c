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

#include "commands.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "courant/errors.hpp"

namespace courant::cli {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate",    "courant-check", "bialgebroid-check", "anomaly",
                                                 "dirac-check", "mc-residual",   "hamiltonian",       "compose",
                                                 "null-dirac",  "reduce-check",  "dual-pair",         "morphism-check"};
  return names;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const ResolutionError*>(&e)) return "ResolutionError";
  if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
  if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
  if (dynamic_cast<const RankDeficient*>(&e)) return "RankDeficient";
  if (dynamic_cast<const HostMismatch*>(&e)) return "HostMismatch";
  if (dynamic_cast<const HypothesisFailure*>(&e)) return "HypothesisFailure";
  if (dynamic_cast<const NotTransverse*>(&e)) return "NotTransverse";
  if (dynamic_cast<const NotIsotropic*>(&e)) return "NotIsotropic";
  if (dynamic_cast<const NotIntegrable*>(&e)) return "NotIntegrable";
  if (dynamic_cast<const NotHamiltonian*>(&e)) return "NotHamiltonian";
  if (dynamic_cast<const NotNullDirac*>(&e)) return "NotNullDirac";
  if (dynamic_cast<const NotPoisson*>(&e)) return "NotPoisson";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

namespace {

const std::string& require(const std::string& value, const std::string& flag, const std::string& command) {
  if (value.empty()) throw ResolutionError(command + " needs " + flag);
  return value;
}

std::vector<std::pair<std::string, RationalFunction>> labelled(const DoubleSection& e) {
  std::vector<std::pair<std::string, RationalFunction>> out;
  for (const auto& [idx, c] : e.X.coefficients()) out.emplace_back(frame_label("e", idx), c);
  for (const auto& [idx, c] : e.xi.coefficients()) out.emplace_back(frame_label("eps", idx), c);
  return out;
}

std::string text_of(const GradedSection& s, const std::string& symbol, const NameContext& names) {
  return s.is_zero() ? "0" : s.to_string(symbol, names);
}

std::string row_text(const RFVector& row, const NameContext& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? ", " : "") + row[i].to_string(names);
  return out + "]";
}

void add_matrix_entries(ReportDocument& report, const std::string& label, const RFMatrix& m, const NameContext& names) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i][j].is_zero()) continue;
      report.outputs.emplace_back(label + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                                  m[i][j].to_string(names));
    }
  }
}

void add_algebroid_outputs(ReportDocument& report, const std::string& label, const LieAlgebroid& A,
                           const NameContext& names) {
  for (std::size_t i = 0; i < A.rank(); ++i) {
    report.outputs.emplace_back(label + ".anchor[" + std::to_string(i + 1) + "]", row_text(A.anchor()[i], names));
  }
  for (std::size_t i = 0; i < A.rank(); ++i) {
    for (std::size_t j = i + 1; j < A.rank(); ++j) {
      report.outputs.emplace_back(label + ".bracket[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                                  row_text(A.structure(i, j), names));
    }
  }
}

CheckReport retitled(CheckReport r, const std::string& title) {
  r.title = title;
  return r;
}

std::vector<GradedSection> vectors_of(Model& model, const std::vector<std::string>& h) {
  std::vector<GradedSection> out;
  for (const std::string& n : h) out.push_back(model.vector(n));
  return out;
}

// --- individual commands ----------------------------------------------------

void validate(Model& model, ReportDocument& report) {
  const ModelDocument& doc = model.document();
  std::string coords;
  for (std::size_t i = 0; i < doc.base.coordinates.size(); ++i) coords += (i ? ", " : "") + doc.base.coordinates[i];
  report.outputs.emplace_back("base", "dim " + std::to_string(doc.base.dim) + " (" + coords + ")");
  const auto names_of = [](const auto& list) {
    std::string out;
    for (const auto& item : list) out += (out.empty() ? "" : ", ") + item.name;
    return out.empty() ? std::string("none") : out;
  };
  report.outputs.emplace_back("algebroids", names_of(doc.algebroids));
  report.outputs.emplace_back("bivectors", names_of(doc.bivectors));
  report.outputs.emplace_back("forms", names_of(doc.forms));
  report.outputs.emplace_back("vectors", names_of(doc.vectors));
  report.outputs.emplace_back("doubles", names_of(doc.doubles));
  report.outputs.emplace_back("sections", names_of(doc.sections));
  report.outputs.emplace_back("subbundles", names_of(doc.subbundles));
  report.outputs.emplace_back("morphisms", names_of(doc.morphisms));
  for (const auto& a : doc.algebroids) report.reports.push_back(check_lie_algebroid(model.algebroid(a.name)));
  // Building the remaining objects checks host tags and generic ranks.
  for (const auto& d : doc.doubles) model.double_structure(d.name);
  for (const auto& s : doc.sections) model.section(s.name);
  for (const auto& L : doc.subbundles) model.subbundle(L.name);
  for (const auto& m : doc.morphisms) model.morphism(m.name);
}

void anomaly(Model& model, const CommandOptions& o, ReportDocument& report) {
  const DoubleStructure& D = model.double_structure(require(o.double_name, "--double", o.command));
  if (o.triples != "all" && o.triples != "strict") {
    throw ResolutionError("--triples takes all or strict, not '" + o.triples + "'");
  }
  require_algebroids(D);
  const bool strict = o.triples == "strict";
  CheckReport r;
  r.title = "jacobi anomaly";
  Clause& residual = r.add_clause("residual", "J - DT + (J1 + J2 + c.p.) = 0 on frame triples");
  Clause& mirrored = r.add_clause("mirrored-residual", "the same with the A-part of J2 negated");
  std::size_t count = 0;
  std::size_t nonzero = 0;
  const std::size_t n = D.frame_size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = strict ? i + 1 : i; j < n; ++j) {
      for (std::size_t k = strict ? j + 1 : j; k < n; ++k) {
        const AnomalyReport a = jacobi_anomaly(D, D.frame(i), D.frame(j), D.frame(k));
        const std::string w = "(" + D.frame_name(i) + "," + D.frame_name(j) + "," + D.frame_name(k) + ")";
        residual.record(w, labelled(a.residual));
        mirrored.record(w, labelled(a.mirrored_residual));
        ++count;
        nonzero += a.J.is_zero() ? 0 : 1;
      }
    }
  }
  const CheckReport compat = check_bialgebroid(D);
  Clause& c = r.add_clause("compatibility", "(A, A*) is a Lie bialgebroid");
  for (const Clause& source : compat.clauses) {
    for (const Residual& res : source.residuals) c.record(res.witness, res.components);
  }
  report.outputs.emplace_back("triples", std::to_string(count));
  report.outputs.emplace_back("nonzero jacobiators", std::to_string(nonzero));
  report.reports.push_back(std::move(r));
}

CheckReport dirac_report(const SubbundleSpec& L) {
  const DoubleStructure& D = L.host();
  CheckReport r;
  r.title = "dirac";
  Clause& iso = r.add_clause("isotropy", "(.,.)_+ vanishes on the spanning sections");
  const auto& S = L.spanning();
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i; j < S.size(); ++j) {
      iso.record("(S" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + ")", D.pairing(S[i], S[j], Sign::Plus));
    }
  }
  if (iso.status == Status::Pass) r.merge(integrability_oracle(L));
  return r;
}

SubbundleSpec graph_of(Model& model, const CommandOptions& o) {
  const DoubleStructure& D = model.double_structure(require(o.double_name, "--double", o.command));
  if (model.has_bivector(o.graph_of)) return graph_subbundle(D, BivectorOperator{model.bivector(o.graph_of)});
  if (model.has_form(o.graph_of)) return graph_subbundle(D, TwoFormOperator{model.form(o.graph_of)});
  throw ResolutionError("--graph-of names neither a bivector nor a form: '" + o.graph_of + "'");
}

void dirac_check(Model& model, const CommandOptions& o, ReportDocument& report) {
  if (!o.subbundle.empty()) {
    report.reports.push_back(dirac_report(model.subbundle(o.subbundle)));
    return;
  }
  require(o.graph_of, "--subbundle or --graph-of", o.command);
  report.reports.push_back(dirac_report(graph_of(model, o)));
}

GradedSection random_degree2(std::mt19937_64& rng, std::size_t rank, std::size_t base_dim, unsigned max_degree,
                             Host host) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<long> numerator(-3, 3);
  std::uniform_int_distribution<long> exponent(0, static_cast<long>(max_degree));
  std::uniform_int_distribution<std::size_t> variable(0, base_dim == 0 ? 0 : base_dim - 1);
  GradedSection out(rank, 2, host);
  for (const IndexTuple& idx : increasing_tuples(rank, 2)) {
    if (coin(rng) == 0) continue;
    Scalar c;
    for (int term = 0; term < 2; ++term) {
      Scalar m(numerator(rng));
      const long degree = base_dim == 0 ? 0 : exponent(rng);
      for (long d = 0; d < degree; ++d) m *= Scalar::coordinate(variable(rng));
      c += m;
    }
    out.add(idx, c);
  }
  return out;
}

void mc_residual(Model& model, const CommandOptions& o, ReportDocument& report) {
  const DoubleStructure& D = model.double_structure(require(o.double_name, "--double", o.command));
  const NameContext names = model.names();
  CheckReport r;
  r.title = "maurer-cartan";
  if (!o.graph_of.empty()) {
    const bool bivector = model.has_bivector(o.graph_of);
    GradedSection residual;
    if (bivector) {
      residual = mc_residual_H(D, model.bivector(o.graph_of));
    } else if (model.has_form(o.graph_of)) {
      residual = mc_residual_I(D, model.form(o.graph_of));
    } else {
      throw ResolutionError("--graph-of names neither a bivector nor a form: '" + o.graph_of + "'");
    }
    const std::string symbol = bivector ? "e" : "eps";
    report.outputs.emplace_back("residual", text_of(residual, symbol, names));
    r.add_clause("residual", bivector ? "d_* H + 1/2 [H, H] = 0" : "d I + 1/2 [I, I]_* = 0")
        .record(o.graph_of, residual, symbol);
    const bool oracle = integrability_oracle(graph_of(model, o)).passed();
    report.outputs.emplace_back("integrability oracle", oracle ? "pass" : "fail");
    Clause& agree = r.add_clause("oracle-agreement", "residual vanishes exactly when the graph is closed");
    if (oracle != residual.is_zero()) agree.record(o.graph_of, RationalFunction(1));
    report.reports.push_back(std::move(r));
    return;
  }
  // Randomized suite: graphs of H and I with polynomial coefficients.
  std::mt19937_64 rng(o.seed);
  Clause& agree_H = r.add_clause("agreement-H", "mc_residual_H = 0 iff the graph of H is Dirac");
  Clause& agree_I = r.add_clause("agreement-I", "mc_residual_I = 0 iff the graph of I is Dirac");
  unsigned dirac_H = 0;
  unsigned dirac_I = 0;
  const NameContext& nc = names;
  for (unsigned k = 0; k < o.samples; ++k) {
    const GradedSection H = random_degree2(rng, D.rank(), D.base_dim(), o.max_degree, D.A().vector_host());
    const bool mc = mc_residual_H(D, H).is_zero();
    const bool oracle = integrability_oracle(graph_subbundle(D, BivectorOperator{H})).passed();
    if (mc != oracle) agree_H.record("H = " + text_of(H, "e", nc), RationalFunction(1));
    dirac_H += oracle ? 1 : 0;
    const GradedSection I = random_degree2(rng, D.rank(), D.base_dim(), o.max_degree, D.A().form_host());
    const bool mc_I = mc_residual_I(D, I).is_zero();
    const bool oracle_I = integrability_oracle(graph_subbundle(D, TwoFormOperator{I})).passed();
    if (mc_I != oracle_I) agree_I.record("I = " + text_of(I, "eps", nc), RationalFunction(1));
    dirac_I += oracle_I ? 1 : 0;
  }
  report.outputs.emplace_back("samples", std::to_string(o.samples));
  report.outputs.emplace_back("max degree", std::to_string(o.max_degree));
  report.outputs.emplace_back("seed", std::to_string(o.seed));
  report.outputs.emplace_back("dirac graphs of H", std::to_string(dirac_H));
  report.outputs.emplace_back("dirac graphs of I", std::to_string(dirac_I));
  report.reports.push_back(std::move(r));
}

void hamiltonian(Model& model, const CommandOptions& o, ReportDocument& report) {
  const DoubleStructure& D = model.double_structure(require(o.double_name, "--double", o.command));
  const GradedSection H = model.bivector(require(o.graph_of, "--graph-of", o.command));
  CheckReport r = is_hamiltonian(D, H);
  const bool ok = r.passed();
  report.reports.push_back(std::move(r));
  if (o.strong) report.reports.push_back(is_strong_hamiltonian(D, H));
  if (ok) add_algebroid_outputs(report, "induced", induced_dual_algebroid(D, H), model.names());
}

void compose(Model& model, const CommandOptions& o, ReportDocument& report) {
  if (o.plus == o.minus) throw ResolutionError("compose needs exactly one of --plus and --minus");
  const PoissonTensor U = model.poisson(require(o.u, "--u", o.command));
  const PoissonTensor V = model.poisson(require(o.v, "--v", o.command));
  const NameContext names = model.names();
  const RFMatrix u = U.matrix();
  const RFMatrix v = V.matrix();
  if (o.plus) {
    const RFMatrix w = u * invert_matrix(u + v) * v;
    const GradedSection W = from_coefficient_matrix(w);
    add_matrix_entries(report, "W", w, names);
    report.outputs.emplace_back("W", text_of(W, "d", names));
    report.reports.push_back(is_poisson(W));
    CheckReport symmetric;
    symmetric.title = "composition identities";
    symmetric.add_clause("symmetry", "U (U+V)^-1 V = V (U+V)^-1 U")
        .record("W", from_coefficient_matrix(v * invert_matrix(u + v) * u) - W, "d");
    if (!determinant(u).is_zero() && !determinant(v).is_zero()) {
      const RFMatrix harmonic = invert_matrix(invert_matrix(u) + invert_matrix(v));
      symmetric.add_clause("inverse-sum", "U (U+V)^-1 V = (U^-1 + V^-1)^-1")
          .record("W", from_coefficient_matrix(harmonic) - W, "d");
    }
    report.reports.push_back(std::move(symmetric));
    return;
  }
  const MinusComposition c = compose_minus(U, V);
  add_matrix_entries(report, "induced", coefficient_matrix(c.induced), names);
  report.outputs.emplace_back("induced", text_of(c.induced, "d", names));
  report.reports.push_back(is_poisson(c.induced));
  report.reports.push_back(retitled(check_bialgebroid(c.pair), "bialgebroid (T*U, T*V)"));
}

void null_dirac(Model& model, const CommandOptions& o, ReportDocument& report) {
  const DoubleStructure& D = model.double_structure(require(o.double_name, "--double", o.command));
  if (o.h.empty()) throw ResolutionError("null-dirac needs --h");
  const std::vector<GradedSection> h = vectors_of(model, o.h);
  const auto perp = annihilator(D.A(), h);
  for (std::size_t k = 0; k < perp.size(); ++k) {
    report.outputs.emplace_back("h-perp[" + std::to_string(k + 1) + "]", text_of(perp[k], "eps", model.names()));
  }
  report.reports.push_back(null_dirac_check(D, h));
}

void reduce_check(Model& model, const CommandOptions& o, ReportDocument& report) {
  const PoissonTensor pi = model.poisson(require(o.pi, "--pi", o.command));
  if (o.h.empty()) throw ResolutionError("reduce-check needs --h");
  report.reports.push_back(reduction_check(pi, vectors_of(model, o.h)));
}

void dual_pair_command(Model& model, const CommandOptions& o, ReportDocument& report) {
  const PoissonTensor pi = model.poisson(require(o.pi, "--pi", o.command));
  if (o.h.empty()) throw ResolutionError("dual-pair needs --h");
  const SubbundleSpec L = dual_pair(pi, vectors_of(model, o.h));
  std::vector<GradedSection> bar;
  std::size_t v = 0;
  std::size_t f = 0;
  for (const DoubleSection& s : L.spanning()) {
    if (s.xi.is_zero()) {
      bar.push_back(s.X);
      report.outputs.emplace_back("D-bar[" + std::to_string(++v) + "]", text_of(s.X, "e", model.names()));
    } else {
      report.outputs.emplace_back("D-bar-perp[" + std::to_string(++f) + "]", text_of(s.xi, "eps", model.names()));
    }
  }
  report.outputs.emplace_back("rank of D-bar", std::to_string(bar.size()));
  report.reports.push_back(retitled(null_dirac_check(L.host(), bar), "null-dirac (D-bar)"));
}

}  // namespace

ReportDocument run_command(Model& model, const CommandOptions& o) {
  ReportDocument report;
  const auto input = [&](const std::string& key, const std::string& value) {
    if (!value.empty()) report.inputs.emplace_back(key, value);
  };
  input("model", o.model_path);
  input("double", o.double_name);
  input("u", o.u);
  input("v", o.v);
  input("graph-of", o.graph_of);
  for (const std::string& h : o.h) input("h", h);
  input("subbundle", o.subbundle);
  input("morphism", o.morphism);
  input("pi", o.pi);
  if (o.command == "validate") {
    validate(model, report);
  } else if (o.command == "courant-check") {
    report.reports.push_back(
        check_courant_axioms(model.double_structure(require(o.double_name, "--double", o.command))));
  } else if (o.command == "bialgebroid-check") {
    const DoubleStructure& D = model.double_structure(require(o.double_name, "--double", o.command));
    report.reports.push_back(check_bialgebroid(D));
    report.reports.push_back(retitled(check_bialgebroid(D.flip()), "bialgebroid (flipped)"));
  } else if (o.command == "anomaly") {
    anomaly(model, o, report);
  } else if (o.command == "dirac-check") {
    dirac_check(model, o, report);
  } else if (o.command == "mc-residual") {
    mc_residual(model, o, report);
  } else if (o.command == "hamiltonian") {
    hamiltonian(model, o, report);
  } else if (o.command == "compose") {
    compose(model, o, report);
  } else if (o.command == "null-dirac") {
    null_dirac(model, o, report);
  } else if (o.command == "reduce-check") {
    reduce_check(model, o, report);
  } else if (o.command == "dual-pair") {
    dual_pair_command(model, o, report);
  } else if (o.command == "morphism-check") {
    report.reports.push_back(check_morphism_to_algebra(model.morphism(require(o.morphism, "--morphism", o.command))));
  } else {
    throw ResolutionError("unknown command '" + o.command + "'");
  }
  return report;
}

CommandResult run_text(const std::string& text, const CommandOptions& options, const std::string& echo) {
  ReportDocument report;
  NameContext names;
  try {
    Model model(parse_model(text));
    names = model.names();
    report = run_command(model, options);
  } catch (const std::exception& e) {
    report = ReportDocument{};
    report.error_kind = error_kind(e);
    report.error_message = e.what();
  }
  report.command = echo;
  const std::string out = options.porcelain ? render_json(report, names) : render_text(report, names);
  return {out, report.exit_code()};
}

CommandResult run_file(const CommandOptions& options, const std::string& echo) {
  std::ifstream in(options.model_path);
  if (!in) {
    ReportDocument report;
    report.command = echo;
    report.error_kind = "IOError";
    report.error_message = "cannot read '" + options.model_path + "'";
    const std::string out = options.porcelain ? render_json(report, {}) : render_text(report, {});
    return {out, 2};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return run_text(buffer.str(), options, echo);
}

}  // namespace courant::cli
