#include "cayley/io.hpp"

#include <fstream>
#include <sstream>

namespace cayley::io {

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) {
    const mpq_class& q = s.rational();
    json j;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      j["num"] = q.get_num().get_si();
      j["den"] = q.get_den().get_si();
    } else {
      j["num"] = q.get_num().get_str();
      j["den"] = q.get_den().get_str();
    }
    return j;
  }
  std::ostringstream os;
  os.precision(17);
  os << s.to_double();
  return json{{"value", os.str()}};
}

Scalar scalar_from_json(const json& j) {
  try {
    if (j.contains("value")) return Scalar(std::stod(j.at("value").get<std::string>()));
    mpz_class num, den;
    if (j.at("num").is_string())
      num = mpz_class(j.at("num").get<std::string>());
    else
      num = mpz_class(j.at("num").get<long>());
    if (j.at("den").is_string())
      den = mpz_class(j.at("den").get<std::string>());
    else
      den = mpz_class(j.at("den").get<long>());
    if (den == 0) throw malformed_input("scalar: zero denominator");
    return Scalar(mpq_class(num, den));
  } catch (const json::exception& e) {
    throw malformed_input(std::string("scalar: ") + e.what());
  }
}

json form_to_json(const Form& f) {
  json terms = json::array();
  for (auto& [m, c] : f.terms()) {
    json t = scalar_to_json(c);
    t["idx"] = mask_indices(m);
    terms.push_back(std::move(t));
  }
  return json{{"dim", f.dim()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

Form form_from_json(const json& j) {
  try {
    Form f(j.at("dim").get<int>(), j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
      auto idx = t.at("idx").get<std::vector<int>>();
      f.add(indices_mask(idx), scalar_from_json(t));
    }
    return f;
  } catch (const json::exception& e) {
    throw malformed_input(std::string("form: ") + e.what());
  } catch (const dimension_mismatch& e) {
    throw malformed_input(std::string("form: ") + e.what());
  }
}

json metric_to_json(const Metric& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int jx = 0; jx < m.dim(); ++jx)
      row.push_back(scalar_to_json(m.matrix()(i, jx)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

Metric metric_from_json(const json& j) {
  try {
    int n = j.at("dim").get<int>();
    Mat g(n);
    const auto& rows = j.at("entries");
    for (int i = 0; i < n; ++i)
      for (int jx = 0; jx < n; ++jx)
        g(i, jx) = scalar_from_json(rows.at(std::size_t(i)).at(std::size_t(jx)));
    return Metric{g};
  } catch (const json::exception& e) {
    throw malformed_input(std::string("metric: ") + e.what());
  }
}

json su3_to_json(const su3::SU3Structure& s) {
  return json{{"omega", form_to_json(s.omega)},
              {"re_omega", form_to_json(s.re_omega)}};
}

su3::SU3Structure su3_from_json(const json& j) {
  try {
    return su3::make_su3(form_from_json(j.at("omega")),
                         form_from_json(j.at("re_omega")));
  } catch (const json::exception& e) {
    throw malformed_input(std::string("su3: ") + e.what());
  }
}

json spin7_to_json(const spin7::Spin7Data& d) {
  return json{{"su3", su3_to_json(d.su3)},   {"eta", form_to_json(d.eta)},
              {"theta", form_to_json(d.theta)}, {"p", scalar_to_json(d.p)},
              {"q", scalar_to_json(d.q)},    {"r", scalar_to_json(d.r)}};
}

spin7::Spin7Data spin7_from_json(const json& j) {
  try {
    return spin7::make_spin7(su3_from_json(j.at("su3")),
                             form_from_json(j.at("eta")),
                             form_from_json(j.at("theta")),
                             scalar_from_json(j.at("p")),
                             scalar_from_json(j.at("q")),
                             scalar_from_json(j.at("r")));
  } catch (const json::exception& e) {
    throw malformed_input(std::string("spin7: ") + e.what());
  }
}

json jet_to_json(const spin7::JetPoint& jp) {
  return json{{"data", spin7_to_json(jp.data)},
              {"d_omega", form_to_json(jp.d_omega)},
              {"d_re", form_to_json(jp.d_re)},
              {"d_im", form_to_json(jp.d_im)},
              {"d_eta", form_to_json(jp.d_eta)},
              {"d_theta", form_to_json(jp.d_theta)},
              {"dp", form_to_json(jp.dp)},
              {"dq", form_to_json(jp.dq)},
              {"dr", form_to_json(jp.dr)}};
}

spin7::JetPoint jet_from_json(const json& j) {
  try {
    spin7::JetPoint jp;
    jp.data = spin7_from_json(j.at("data"));
    jp.d_omega = form_from_json(j.at("d_omega"));
    jp.d_re = form_from_json(j.at("d_re"));
    jp.d_im = form_from_json(j.at("d_im"));
    jp.d_eta = form_from_json(j.at("d_eta"));
    jp.d_theta = form_from_json(j.at("d_theta"));
    jp.dp = form_from_json(j.at("dp"));
    jp.dq = form_from_json(j.at("dq"));
    jp.dr = form_from_json(j.at("dr"));
    return jp;
  } catch (const json::exception& e) {
    throw malformed_input(std::string("jet: ") + e.what());
  }
}

json torsion_report_to_json(const spin7::TorsionReport& t, bool full) {
  json norms;
  for (auto& [k, v] : t.norms) norms[k] = v;
  json j{{"norms", std::move(norms)}};
  if (full) {
    j["res_a"] = form_to_json(t.res_a);
    j["res_b"] = form_to_json(t.res_b);
    j["res_c"] = form_to_json(t.res_c);
    j["res_d"] = form_to_json(t.res_d);
    j["alpha_eta"] = form_to_json(t.alpha_eta);
    j["alpha_theta"] = form_to_json(t.alpha_theta);
    j["res36"] = form_to_json(t.res36);
    j["res37"] = form_to_json(t.res37);
  }
  return j;
}

json lattice_to_json(const topo::IntersectionLattice& L) {
  json rows = json::array();
  for (int i = 0; i < L.rank; ++i) {
    json row = json::array();
    for (int jx = 0; jx < L.rank; ++jx) {
      const mpq_class& q = L.Q[std::size_t(i)][std::size_t(jx)];
      row.push_back(json{{"num", q.get_num().get_str()},
                         {"den", q.get_den().get_str()}});
    }
    rows.push_back(std::move(row));
  }
  return json{{"rank", L.rank}, {"Q", std::move(rows)}, {"labels", L.labels}};
}

topo::IntersectionLattice lattice_from_json(const json& j) {
  try {
    topo::IntersectionLattice L;
    L.rank = j.at("rank").get<int>();
    L.Q.assign(std::size_t(L.rank),
               std::vector<mpq_class>(std::size_t(L.rank), 0));
    const auto& rows = j.at("Q");
    for (int i = 0; i < L.rank; ++i)
      for (int jx = 0; jx < L.rank; ++jx) {
        const auto& e = rows.at(std::size_t(i)).at(std::size_t(jx));
        if (e.is_number_integer()) {
          L.Q[std::size_t(i)][std::size_t(jx)] = mpq_class(e.get<long>());
        } else {
          mpz_class num, den;
          if (e.at("num").is_string())
            num = mpz_class(e.at("num").get<std::string>());
          else
            num = mpz_class(e.at("num").get<long>());
          if (e.at("den").is_string())
            den = mpz_class(e.at("den").get<std::string>());
          else
            den = mpz_class(e.at("den").get<long>());
          L.Q[std::size_t(i)][std::size_t(jx)] = mpq_class(num, den);
        }
        L.Q[std::size_t(i)][std::size_t(jx)].canonicalize();
      }
    if (j.contains("labels"))
      L.labels = j.at("labels").get<std::vector<std::string>>();
    return L;
  } catch (const json::exception& e) {
    throw malformed_input(std::string("lattice: ") + e.what());
  }
}

json gridfield_to_json(const grid::GridField& f) {
  json vals = json::array();
  for (double v : f.data()) vals.push_back(v);
  return json{{"dim", f.chart().dim},
              {"N", f.chart().N},
              {"period", f.chart().L},
              {"active", f.chart().active},
              {"degree", f.degree()},
              {"values", std::move(vals)}};
}

grid::GridField gridfield_from_json(const json& j) {
  try {
    grid::GridChart c;
    c.dim = j.at("dim").get<int>();
    c.N = j.at("N").get<int>();
    c.L = j.at("period").get<double>();
    c.active = j.at("active").get<std::vector<int>>();
    grid::GridField f(c, j.at("degree").get<int>());
    auto vals = j.at("values").get<std::vector<double>>();
    if (vals.size() != f.data().size())
      throw malformed_input("gridfield: value count mismatch");
    f.data() = std::move(vals);
    return f;
  } catch (const json::exception& e) {
    throw malformed_input(std::string("gridfield: ") + e.what());
  }
}

void gridfield_to_csv(const grid::GridField& f, std::ostream& os) {
  os << "point,component,value\n";
  os.precision(17);
  for (std::size_t pt = 0; pt < f.npoints(); ++pt)
    for (int c = 0; c < f.ncomp(); ++c)
      os << pt << "," << c << "," << f.at(pt, c) << "\n";
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_input("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw malformed_input(std::string("parse ") + path + ": " + e.what());
  }
  return j;
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw malformed_input("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace cayley::io
