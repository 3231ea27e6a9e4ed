#include "ikg/serialization.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "ikg/errors.hpp"

namespace ikg {

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("complex numbers are [re, im] pairs");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix_to_json: matrix must be square");
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
  return Json{{"dim", m.rows()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  try {
    const auto dim = j.at("dim").get<Eigen::Index>();
    const Json& e = j.at("entries");
    if (dim <= 0 || e.size() != static_cast<std::size_t>(dim * dim))
      throw InvalidArgument("matrix JSON: entries must hold dim*dim values");
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = complex_from_json(e.at(r * dim + c));
    return m;
  } catch (const Json::exception& ex) {
    throw InvalidArgument(std::string("matrix JSON: ") + ex.what());
  }
}

Json params_to_json(const GaudinParams& p) {
  Json theta = Json::array();
  for (cplx t : p.theta) theta.push_back(complex_to_json(t));
  Json j{{"kind", to_string(p.kind)}, {"theta", theta}};
  if (p.kind == GaudinKind::Constrained) {
    j["eps"] = complex_to_json(p.eps);
    j["sigma"] = complex_to_json(p.sigma);
    j["sigma_bar"] = complex_to_json(p.sigma_bar);
  }
  return j;
}

GaudinParams params_from_json(const Json& j) {
  try {
    GaudinParams p;
    p.kind = gaudin_kind_from_string(j.at("kind").get<std::string>());
    for (const auto& t : j.at("theta")) p.theta.push_back(complex_from_json(t));
    if (j.contains("eps")) p.eps = complex_from_json(j.at("eps"));
    if (j.contains("sigma")) p.sigma = complex_from_json(j.at("sigma"));
    if (j.contains("sigma_bar")) p.sigma_bar = complex_from_json(j.at("sigma_bar"));
    return p;
  } catch (const Json::exception& ex) {
    throw InvalidArgument(std::string("params JSON: ") + ex.what());
  }
}

Json rootset_to_json(const RootSet& rs) {
  Json roots = Json::array();
  for (cplx z : rs.roots) roots.push_back(complex_to_json(z));
  return Json{{"kind", to_string(rs.kind)}, {"M", rs.m}, {"roots", roots}, {"residual", rs.residual}};
}

RootSet rootset_from_json(const Json& j) {
  try {
    RootSet rs;
    rs.kind = gaudin_kind_from_string(j.at("kind").get<std::string>());
    for (const auto& z : j.at("roots")) rs.roots.push_back(complex_from_json(z));
    rs.m = j.value("M", static_cast<int>(rs.roots.size()));
    if (rs.m != static_cast<int>(rs.roots.size())) throw InvalidArgument("root set JSON: M does not match the root count");
    rs.residual = j.value("residual", 0.0);
    return rs;
  } catch (const Json::exception& ex) {
    throw InvalidArgument(std::string("root set JSON: ") + ex.what());
  }
}

Json spectrum_to_json(const Spectrum& s) {
  Json levels = Json::array();
  for (const Level& l : s.levels) levels.push_back(Json{{"value", complex_to_json(l.value)}, {"degeneracy", l.multiplicity}});
  Json values = Json::array();
  for (cplx z : s.eigenvalues) values.push_back(complex_to_json(z));
  return Json{{"dim", s.dim()}, {"levels", levels}, {"eigenvalues", values}};
}

Json report_to_json(const SpectrumReport& r) {
  Json params = params_to_json(r.params);
  params["site"] = r.site;
  params["energy_rotation"] = complex_to_json(r.rotation);
  params["match_tol"] = r.tol;
  Json levels = Json::array();
  for (const LevelRecord& l : r.levels)
    levels.push_back(Json{{"bethe_roots", rootset_to_json(l.roots)},
                          {"E_bethe", complex_to_json(l.e_bethe)},
                          {"E_ed", complex_to_json(l.e_ed)},
                          {"degeneracy", l.degeneracy},
                          {"abs_err", l.abs_err}});
  Json unmatched = Json::array();
  for (const Level& l : r.unmatched_ed_levels)
    unmatched.push_back(Json{{"E_ed", complex_to_json(l.value)}, {"degeneracy", l.multiplicity}});
  Json ambiguous = Json::array();
  for (const AmbiguousMatch& a : r.ambiguous) {
    Json cands = Json::array();
    for (cplx c : a.candidates) cands.push_back(complex_to_json(c));
    ambiguous.push_back(Json{{"bethe_roots", rootset_to_json(a.roots)}, {"E_bethe", complex_to_json(a.e_bethe)}, {"candidates", cands}});
  }
  Json stray = Json::array();
  for (const RootSet& rs : r.unmatched_solutions) stray.push_back(rootset_to_json(rs));
  return Json{{"params", params},         {"levels", levels},
              {"unmatched_ed_levels", unmatched}, {"unmatched_solutions", stray},
              {"ambiguous", ambiguous},   {"coverage", r.coverage}};
}

Json reproduce_to_json(const ReproduceReport& r) {
  Json rows = Json::array();
  for (const RowResult& row : r.rows) {
    Json expected_roots = Json::array();
    for (cplx z : row.expected.roots) expected_roots.push_back(complex_to_json(z));
    Json j{{"status", to_string(row.status)},
           {"expected", Json{{"roots", expected_roots}, {"energy", row.expected.energy}, {"degeneracy", row.expected.degeneracy}}}};
    if (row.solution) {
      j["roots"] = rootset_to_json(*row.solution);
      j["energy"] = complex_to_json(row.energy);
      j["ed_degeneracy"] = row.ed_degeneracy;
      j["root_err"] = row.root_err;
      j["energy_err"] = row.energy_err;
    }
    if (!row.note.empty()) j["note"] = row.note;
    rows.push_back(j);
  }
  return Json{{"table", r.table_id},
              {"passed", r.passed},
              {"starts_per_sector", r.starts_per_sector},
              {"printed_degeneracy_sum", r.printed_degeneracy_sum},
              {"rows", rows},
              {"report", report_to_json(r.spectrum)}};
}

std::string levels_csv(const SpectrumReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "E_ed_re,E_ed_im,degeneracy,E_bethe_re,E_bethe_im,abs_err,M,roots\n";
  for (const LevelRecord& l : r.levels) {
    os << l.e_ed.real() << ',' << l.e_ed.imag() << ',' << l.degeneracy << ',' << l.e_bethe.real() << ','
       << l.e_bethe.imag() << ',' << l.abs_err << ',' << l.roots.m << ",\"";
    for (std::size_t i = 0; i < l.roots.roots.size(); ++i)
      os << (i ? ";" : "") << l.roots.roots[i].real() << (l.roots.roots[i].imag() < 0 ? "" : "+")
         << l.roots.roots[i].imag() << 'i';
    os << "\"\n";
  }
  return os.str();
}

namespace {

double parse_real(const std::string& t, const std::string& whole) {
  if (t.empty() || t == "+") return 1.0;
  if (t == "-") return -1.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.size()) throw InvalidArgument("malformed complex number '" + whole + "'");
  return v;
}

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw InvalidArgument("empty complex number");
  if (t.back() != 'i' && t.back() != 'j') {
    const double re = parse_real(t, text);
    if (t == "+" || t == "-") throw InvalidArgument("malformed complex number '" + text + "'");
    return {re, 0.0};
  }
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, parse_real(t, text)};
  const std::string re = t.substr(0, split);
  if (re == "+" || re == "-") throw InvalidArgument("malformed complex number '" + text + "'");
  return {parse_real(re, text), parse_real(t.substr(split), text)};
}

std::vector<cplx> parse_complex_list(const std::string& csv) {
  std::vector<cplx> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ikg
