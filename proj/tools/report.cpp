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

#include "report.hpp"

#include <json.hpp>
#include <sstream>

namespace courant::cli {

bool ReportDocument::passed() const {
  if (!error_kind.empty()) return false;
  for (const CheckReport& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

int ReportDocument::exit_code() const {
  if (!error_kind.empty()) return 2;
  return passed() ? 0 : 1;
}

namespace {

std::string status_word(const ReportDocument& report) {
  if (!report.error_kind.empty()) return "error";
  return report.passed() ? "pass" : "fail";
}

}  // namespace

std::string render_text(const ReportDocument& report, const NameContext& names) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  if (!report.inputs.empty()) {
    out << "inputs:\n";
    for (const auto& [k, v] : report.inputs) out << "  " << k << ": " << v << "\n";
  }
  if (!report.error_kind.empty()) {
    out << "error: " << report.error_kind << ": " << report.error_message << "\n";
  }
  if (!report.outputs.empty()) {
    out << "outputs:\n";
    for (const auto& [k, v] : report.outputs) out << "  " << k << ": " << v << "\n";
  }
  for (const CheckReport& r : report.reports) {
    out << "report " << r.title << ": " << (r.passed() ? "pass" : "fail") << "\n";
    for (const Clause& c : r.clauses) {
      out << "  clause " << c.id << ": " << to_string(c.status) << "\n";
      out << "    description: " << c.description << "\n";
      if (!c.note.empty()) out << "    note: " << c.note << "\n";
      for (const Residual& res : c.residuals) {
        out << "    witness " << res.witness << ":\n";
        for (const auto& [label, value] : res.components) out << "      " << label << ": " << value.to_string(names) << "\n";
      }
    }
  }
  out << "status: " << status_word(report) << "\n";
  out << "exit: " << report.exit_code() << "\n";
  return out.str();
}

std::string render_json(const ReportDocument& report, const NameContext& names) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["command"] = report.command;
  ordered_json inputs = ordered_json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  doc["inputs"] = inputs;
  if (!report.error_kind.empty()) {
    doc["error"] = {{"kind", report.error_kind}, {"message", report.error_message}};
  }
  ordered_json outputs = ordered_json::array();
  for (const auto& [k, v] : report.outputs) outputs.push_back({{"key", k}, {"value", v}});
  doc["outputs"] = outputs;
  ordered_json reports = ordered_json::array();
  for (const CheckReport& r : report.reports) {
    ordered_json clauses = ordered_json::array();
    for (const Clause& c : r.clauses) {
      ordered_json residuals = ordered_json::array();
      for (const Residual& res : c.residuals) {
        ordered_json components = ordered_json::array();
        for (const auto& [label, value] : res.components) {
          components.push_back({{"label", label}, {"value", value.to_string(names)}});
        }
        residuals.push_back({{"witness", res.witness}, {"components", components}});
      }
      clauses.push_back({{"id", c.id},
                         {"description", c.description},
                         {"status", to_string(c.status)},
                         {"note", c.note},
                         {"residuals", residuals}});
    }
    reports.push_back({{"title", r.title}, {"status", r.passed() ? "pass" : "fail"}, {"clauses", clauses}});
  }
  doc["reports"] = reports;
  doc["status"] = status_word(report);
  doc["exit"] = report.exit_code();
  return doc.dump(2) + "\n";
}

}  // namespace courant::cli
