#include "goldie/report.hpp"

#include <sstream>

namespace goldie {

namespace {

ReportJson rat_list(const RatVector& v) {
  auto out = ReportJson::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

ReportJson index_list(const std::vector<std::size_t>& v) {
  auto out = ReportJson::array();
  for (auto k : v) out.push_back(k + 1);
  return out;
}

std::string braces(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + 1);
  return s + "}";
}

ReportJson spec_json(const ArrangementSpec& spec) {
  ReportJson doc;
  doc["n"] = spec.n;
  doc["r"] = spec.r;
  doc["g_basis"] = ReportJson::array();
  for (std::size_t r = 0; r < spec.d(); ++r) doc["g_basis"].push_back(rat_list(spec.g_basis.row(r)));
  doc["chi"] = rat_list(spec.chi);
  return doc;
}

const char* kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::ClosedForm: return "closed-form";
    case FamilyKind::NoDilationAxis: return "no-dilation-axis";
    case FamilyKind::Degenerate: return "degenerate";
  }
  return "";
}

std::string branches(const QuasiPolynomial& qp, const std::string& var) {
  std::ostringstream out;
  if (qp.period() == 1) return format_polynomial(qp.coefficients()[0], var);
  for (std::size_t rho = 0; rho < qp.period(); ++rho)
    out << (rho ? "; " : "") << var << " = " << rho << " mod " << qp.period() << ": "
        << format_polynomial(qp.coefficients()[rho], var);
  return out.str();
}

}  // namespace

ReportJson to_json(const QuasiPolynomial& qp) {
  ReportJson doc;
  doc["period"] = qp.period();
  doc["degree"] = qp.degree();
  doc["coefficients"] = ReportJson::array();
  for (const auto& row : qp.coefficients()) doc["coefficients"].push_back(rat_list(row));
  return doc;
}

ReportJson to_json(const AnalysisReport& rep, bool with_points) {
  ReportJson doc;
  doc["spec"] = spec_json(rep.spec);
  doc["alpha"] = rat_list(rep.alpha);
  doc["T"] = index_list(rep.constraints.indices());
  ReportJson part;
  part["J"] = index_list(rep.certificate.j);
  part["I_T"] = index_list(rep.certificate.i_t);
  part["witness_e"] = rat_list(rep.certificate.witness_e);
  ReportJson z = ReportJson::object();
  for (const auto& [k, v] : rep.certificate.witness_z) z[std::to_string(k + 1)] = to_string(v);
  part["witness_z"] = z;
  doc["partition"] = part;
  ReportJson signs;
  signs["J_plus"] = index_list(rep.signs.j_plus);
  signs["J_minus"] = index_list(rep.signs.j_minus);
  signs["I"] = index_list(rep.signs.i);
  doc["signs"] = signs;
  doc["assumption3"] = rep.assumption3;
  if (!rep.assumption3) {
    doc["assumption3_defect"] = rep.assumption3_defect;
    return doc;
  }
  doc["components"] = *rep.components;
  doc["goldie_rank"] = *rep.components;
  auto box = ReportJson::array();
  for (const auto& iv : *rep.box) box.push_back(ReportJson::array({to_string(iv.lo), to_string(iv.hi)}));
  doc["bounding_box"] = box;
  ReportJson fibers;
  fibers["h_basis"] = ReportJson::array();
  for (const auto& h : rep.fibers->h_basis) fibers["h_basis"].push_back(rat_list(h));
  doc["fibers"] = fibers;
  if (with_points) {
    doc["fibers"]["characters"] = ReportJson::array();
    for (const auto& c : rep.fibers->characters) doc["fibers"]["characters"].push_back(rat_list(c));
    doc["dset"] = ReportJson::array();
    for (const auto& d : *rep.dset) doc["dset"].push_back(rat_list(d));
  }
  return doc;
}

ReportJson to_json(const FamilyTable& table) {
  const GoldieFamily& f = table.family;
  ReportJson doc;
  doc["alpha"] = rat_list(f.alpha);
  doc["J_plus"] = index_list(f.signs.j_plus);
  doc["J_minus"] = index_list(f.signs.j_minus);
  doc["apex"] = rat_list(f.apex);
  doc["kind"] = kind_name(f.kind);
  if (!f.note.empty()) doc["note"] = f.note;
  auto dens = ReportJson::array();
  for (const auto& d : f.denominators) dens.push_back(d.get_str());
  doc["alpha_denominators"] = dens;
  if (f.kind == FamilyKind::ClosedForm) {
    doc["a0"] = to_string(*f.a0);
    doc["a_N"] = f.rescaling->a_n.get_str();
    doc["a_Z"] = f.rescaling->a_z.get_str();
    doc["s"] = format_polynomial({Rational(-f.rescaling->a_z), Rational(f.rescaling->a_n)}, "x");
    doc["scale"] = f.rescaling->scale().get_str();
    doc["reference_vertices"] = ReportJson::array();
    for (const auto& v : *f.reference_vertices) doc["reference_vertices"].push_back(rat_list(v));
    doc["reference_dimension"] = *f.reference_dimension;
    doc["ehrhart"] = to_json(*f.ehrhart);
    doc["rank"] = to_json(*f.rank);
  } else {
    doc["closed_form"] = "no closed form derived";
  }
  doc["table"] = ReportJson::array();
  for (const auto& row : table.rows) {
    ReportJson r;
    r["x"] = row.x;
    r["admissible"] = row.admissible;
    if (row.ehrhart_value) r["ehrhart"] = to_string(*row.ehrhart_value);
    if (row.direct_count) r["direct"] = *row.direct_count;
    doc["table"].push_back(r);
  }
  return doc;
}

ReportJson to_json(const OracleResult& res) {
  ReportJson doc;
  doc["radii"] = ReportJson::array({res.radius_low, res.radius_high});
  doc["span_dimension"] = res.span_dimension;
  doc["components"] = res.component_count;
  doc["stabilized"] = res.stabilized;
  doc["directions"] = ReportJson::array();
  for (const auto& d : res.directions) doc["directions"].push_back(d);
  return doc;
}

std::string render_text(const AnalysisReport& rep, bool with_points) {
  std::ostringstream out;
  out << "alpha            " << to_string(rep.alpha) << '\n';
  out << "T                " << braces(rep.constraints.indices()) << '\n';
  out << "J                " << braces(rep.certificate.j) << "   I_T " << braces(rep.certificate.i_t) << '\n';
  out << "witness e        " << to_string(rep.certificate.witness_e) << '\n';
  out << "witness z        ";
  std::string sep;
  for (const auto& [k, v] : rep.certificate.witness_z) {
    out << sep << "z" << k + 1 << "=" << to_string(v);
    sep = " ";
  }
  out << '\n';
  out << "J+ / J- / I      " << braces(rep.signs.j_plus) << " / " << braces(rep.signs.j_minus) << " / "
      << braces(rep.signs.i) << '\n';
  out << "direct sum       " << (rep.assumption3 ? "holds" : "violated") << '\n';
  if (!rep.assumption3) {
    out << rep.assumption3_defect << '\n';
    return out.str();
  }
  out << "components       " << *rep.components << '\n';
  out << "goldie rank      " << *rep.components << '\n';
  if (!with_points) return out.str();
  for (std::size_t k = 0; k < rep.dset->size(); ++k)
    out << "  delta " << k + 1 << "  " << to_string((*rep.dset)[k]) << "   chi|h = "
        << to_string(rep.fibers->characters[k]) << '\n';
  return out.str();
}

std::string render_text(const FamilyTable& table) {
  const GoldieFamily& f = table.family;
  std::ostringstream out;
  out << "kind      " << kind_name(f.kind) << '\n';
  out << "apex      " << to_string(f.apex) << '\n';
  if (f.kind == FamilyKind::ClosedForm) {
    out << "a0        " << to_string(*f.a0) << '\n';
    out << "s(x)      " << format_polynomial({Rational(-f.rescaling->a_z), Rational(f.rescaling->a_n)}, "x") << "   scale "
        << f.rescaling->scale().get_str() << '\n';
    out << "EHP_Q(t)  " << branches(*f.ehrhart, "t") << '\n';
    out << "rank(x)   " << branches(*f.rank, "x") << '\n';
  } else {
    out << "no closed form derived: " << f.note << '\n';
  }
  out << "x\tadmissible\tehrhart\tdirect\n";
  for (const auto& row : table.rows)
    out << row.x << '\t' << (row.admissible ? "yes" : "no") << '\t'
        << (row.ehrhart_value ? to_string(*row.ehrhart_value) : "-") << '\t'
        << (row.direct_count ? std::to_string(*row.direct_count) : "-") << '\n';
  return out.str();
}

std::string render_text(const OracleResult& res) {
  std::ostringstream out;
  out << "components " << res.component_count << (res.stabilized ? " (stabilized" : " (inconclusive") << " at radii "
      << res.radius_low << "," << res.radius_high << ")\n";
  out << "unbounded span dimension " << res.span_dimension << '\n';
  return out.str();
}

}  // namespace goldie
