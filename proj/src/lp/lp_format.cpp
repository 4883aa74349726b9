// Copyright 2026 The robustnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustnet/lp/lp_format.hpp"

#include <cmath>
#include <cstring>
#include <iomanip>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace robustnet::lp {
namespace {

constexpr size_t kWrap = 200;

bool IsLpChar(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return std::strchr("!\"#$%&()/,.;?@_`'{}|~", c) != nullptr && c != '\0';
}

std::string Number(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

class LineWriter {
 public:
  explicit LineWriter(std::ostream& out) : out_(out) {}
  void Put(const std::string& token) {
    if (width_ + token.size() + 1 > kWrap) {
      out_ << "\n   ";
      width_ = 3;
    }
    out_ << ' ' << token;
    width_ += token.size() + 1;
  }
  void Start(const std::string& prefix) {
    out_ << prefix;
    width_ = prefix.size();
  }
  void End() {
    out_ << '\n';
    width_ = 0;
  }

 private:
  std::ostream& out_;
  size_t width_ = 0;
};

void PutTerms(LineWriter& w, const std::vector<Term>& terms,
              const std::vector<std::string>& names) {
  if (terms.empty()) {
    // Empty expressions are written as a zero-coefficient term.
    w.Put("0");
    w.Put(names.empty() ? "__zero" : names[0]);
    return;
  }
  bool first = true;
  for (const Term& t : terms) {
    const double a = std::abs(t.coef);
    if (!first || t.coef < 0) w.Put(t.coef < 0 ? "-" : "+");
    w.Put(Number(a) + " " + names[t.var]);
    first = false;
  }
}

}  // namespace

std::string SanitizeLpName(const std::string& name) {
  std::string out;
  out.reserve(name.size() + 1);
  for (char c : name) out.push_back(IsLpChar(c) ? c : '_');
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])) ||
      out[0] == '.' || out[0] == 'e' || out[0] == 'E') {
    out.insert(out.begin(), '_');
  }
  if (out.size() > 250) out.resize(250);
  return out;
}

void WriteLpFormat(const LinearModel& model, std::ostream& out) {
  std::unordered_set<std::string> used;
  auto unique = [&used](std::string s) {
    std::string base = s;
    for (int k = 1; used.count(s); ++k) s = base + "#" + std::to_string(k);
    used.insert(s);
    return s;
  };
  std::vector<std::string> names;
  names.reserve(model.num_variables());
  for (const Variable& v : model.variables()) {
    names.push_back(unique(SanitizeLpName(v.name)));
  }

  out << "\\ robustnet model: " << model.num_variables() << " variables, "
      << model.num_constraints() << " constraints\n";
  out << "Minimize\n";
  LineWriter w(out);
  w.Start(" obj:");
  std::vector<Term> obj = model.ObjectiveTerms();
  if (obj.empty() && model.num_variables() > 0) obj.push_back({0, 0.0});
  PutTerms(w, obj, names);
  if (model.objective_offset() != 0.0) {
    w.Put(model.objective_offset() < 0 ? "-" : "+");
    w.Put(Number(std::abs(model.objective_offset())));
  }
  w.End();

  out << "Subject To\n";
  std::unordered_set<std::string> row_names;
  for (int i = 0; i < model.num_constraints(); ++i) {
    const Constraint& c = model.constraint(i);
    std::string rname = SanitizeLpName(c.name.empty() ? "c" + std::to_string(i)
                                                      : c.name);
    while (used.count(rname) || row_names.count(rname)) rname += "_";
    row_names.insert(rname);
    w.Start(" " + rname + ":");
    PutTerms(w, c.terms, names);
    switch (c.comparator) {
      case Comparator::kLessEqual:
        w.Put("<=");
        break;
      case Comparator::kGreaterEqual:
        w.Put(">=");
        break;
      case Comparator::kEqual:
        w.Put("=");
        break;
    }
    w.Put(Number(c.rhs));
    w.End();
  }

  out << "Bounds\n";
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variable(j);
    const bool lo_inf = !std::isfinite(v.lower);
    const bool hi_inf = !std::isfinite(v.upper);
    if (lo_inf && hi_inf) {
      out << ' ' << names[j] << " free\n";
    } else if (v.lower == v.upper) {
      out << ' ' << names[j] << " = " << Number(v.lower) << '\n';
    } else if (hi_inf) {
      if (v.lower != 0.0) out << ' ' << names[j] << " >= " << Number(v.lower) << '\n';
    } else {
      out << ' ' << (lo_inf ? std::string("-inf") : Number(v.lower)) << " <= "
          << names[j] << " <= " << Number(v.upper) << '\n';
    }
  }

  bool any_integer = false;
  for (const Variable& v : model.variables()) any_integer |= v.integer;
  if (any_integer) {
    out << "General\n";
    w.Start("");
    for (int j = 0; j < model.num_variables(); ++j) {
      if (model.variable(j).integer) w.Put(names[j]);
    }
    w.End();
  }
  out << "End\n";
}

std::string ToLpFormat(const LinearModel& model) {
  std::ostringstream os;
  WriteLpFormat(model, os);
  return os.str();
}

}  // namespace robustnet::lp
