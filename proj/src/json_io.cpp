#include "qeala/json_io.hpp"

namespace qeala {

namespace {

template <typename F>
auto guarded(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid ") + what + ": " + e.what());
  }
}

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  throw ConfigError("expected a Gaussian rational string or integer, got " + j.dump());
}

json entry_json(const XEntry& e) {
  return {{"a", e.a.to_string()}, {"c", e.c.to_string()}, {"d", e.d.to_string()}};
}

XEntry entry_from_json(const json& j) {
  XEntry e;
  if (j.contains("a")) e.a = gaussian_from_json(j.at("a"));
  if (j.contains("c")) e.c = gaussian_from_json(j.at("c"));
  if (j.contains("d")) e.d = gaussian_from_json(j.at("d"));
  return e;
}

}  // namespace

json to_json(const Scalar& s) {
  json out = json::array();
  for (const auto& [k, c] : s.terms()) {
    out.push_back({{"q", k.q_exp}, {"mu", k.mu_deg}, {"re", rational_to_string(c.re())}, {"im", rational_to_string(c.im())}});
  }
  return out;
}

Scalar scalar_from_json(const json& j) {
  return guarded("scalar", [&] {
    Scalar out;
    for (const auto& t : j) {
      GaussianRational c(parse_rational(t.at("re").get<std::string>()),
                         parse_rational(t.value("im", std::string("0"))));
      int mu = t.value("mu", 0);
      if (mu < 0) throw ConfigError("negative mu degree");
      out += Scalar::term(t.value("q", 0), mu, c);
    }
    return out;
  });
}

json to_json(const TorusElement& a) {
  json out = json::array();
  for (const auto& [p, c] : a.terms()) out.push_back({{"m", p.m}, {"n", p.n}, {"coeff", to_json(c)}});
  return out;
}

TorusElement torus_from_json(const json& j) {
  return guarded("torus element", [&] {
    TorusElement out;
    for (const auto& t : j) {
      out += TorusElement::monomial(t.at("m").get<int>(), t.at("n").get<int>(), scalar_from_json(t.at("coeff")));
    }
    return out;
  });
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& [idx, e] : m.factors()) mono.push_back({idx.m, idx.n, e});
    out.push_back({{"monomial", mono}, {"coeff", to_json(c)}});
  }
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  return guarded("polynomial", [&] {
    Polynomial out;
    for (const auto& t : j) {
      std::vector<Monomial::Factor> f;
      for (const auto& v : t.at("monomial")) f.emplace_back(IndexPair{v.at(0).get<int>(), v.at(1).get<int>()}, v.at(2).get<int>());
      out.add_term(Monomial(f), scalar_from_json(t.at("coeff")));
    }
    return out;
  });
}

json to_json(const XFamily& X) {
  switch (X.kind()) {
    case XFamily::Kind::Identity: return {{"kind", "identity"}};
    case XFamily::Kind::Constant: {
      json out = entry_json(X.constant_entry());
      out["kind"] = "constant";
      return out;
    }
    case XFamily::Kind::Table: {
      json entries = json::array();
      for (const auto& [p, e] : X.table_entries()) {
        json row = entry_json(e);
        row["m"] = p.m;
        row["n"] = p.n;
        entries.push_back(row);
      }
      return {{"kind", "table"}, {"entries", entries}};
    }
  }
  return {{"kind", "identity"}};
}

XFamily xfamily_from_json(const json& j) {
  return guarded("X-family", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") return XFamily::identity();
    if (kind == "constant") return XFamily::constant(entry_from_json(j));
    if (kind == "table") {
      std::map<IndexPair, XEntry> entries;
      for (const auto& row : j.at("entries")) {
        entries[IndexPair{row.at("m").get<int>(), row.at("n").get<int>()}] = entry_from_json(row);
      }
      return XFamily::table(std::move(entries));
    }
    throw ConfigError("unknown X-family kind '" + kind + "' (expected identity, constant or table)");
  });
}

json to_json(const LevelBasisElement& h) {
  json out = json::array();
  for (const auto& p : h.indices()) out.push_back({p.m, p.n});
  return out;
}

LevelBasisElement basis_element_from_json(const json& j) {
  return guarded("basis element", [&] {
    std::vector<IndexPair> idx;
    for (const auto& v : j) idx.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
    return LevelBasisElement(std::move(idx));
  });
}

json to_json(const GramMatrix& G) {
  json basis = json::array();
  for (const auto& h : G.basis) basis.push_back(to_json(h));
  json rows = json::array();
  for (const auto& row : G.entries) {
    json r = json::array();
    for (const auto& s : row) r.push_back(to_json(s));
    rows.push_back(r);
  }
  return {{"basis", basis}, {"entries", rows}};
}

GramMatrix gram_from_json(const json& j) {
  return guarded("Gram matrix", [&] {
    GramMatrix G;
    for (const auto& h : j.at("basis")) G.basis.push_back(basis_element_from_json(h));
    for (const auto& row : j.at("entries")) {
      std::vector<Scalar> r;
      for (const auto& s : row) r.push_back(scalar_from_json(s));
      if (r.size() != G.basis.size()) throw ConfigError("Gram row length does not match the basis");
      G.entries.push_back(std::move(r));
    }
    if (G.entries.size() != G.basis.size()) throw ConfigError("Gram row count does not match the basis");
    return G;
  });
}

json to_json(const QValue& q) {
  if (q.is_exact()) return {{"exact", q.to_string()}};
  return {{"root", std::to_string(q.numerator) + ":" + std::to_string(q.order)}};
}

QValue qvalue_from_json(const json& j) {
  return guarded("q value", [&] {
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      return s.find(':') == std::string::npos ? QValue::parse_exact(s) : QValue::parse_root(s);
    }
    if (j.contains("exact")) return QValue::parse_exact(j.at("exact").get<std::string>());
    if (j.contains("root")) return QValue::parse_root(j.at("root").get<std::string>());
    throw ConfigError("q needs an \"exact\" or \"root\" key");
  });
}

json to_json(const BasisBox& box) {
  json out = {{"level", box.level}, {"mMin", box.m_min}, {"mMax", box.m_max},
              {"nMin", box.n_min},  {"nMax", box.n_max}, {"positive", box.positive_mode}};
  if (box.positive_mode) {
    out["sumMMax"] = box.sum_m_max;
    out["sumNMax"] = box.sum_n_max;
  }
  return out;
}

BasisBox basis_box_from_json(const json& j) {
  return guarded("basis box", [&] {
    BasisBox box;
    box.level = j.value("level", box.level);
    box.m_min = j.value("mMin", box.m_min);
    box.m_max = j.value("mMax", box.m_max);
    box.n_min = j.value("nMin", box.n_min);
    box.n_max = j.value("nMax", box.n_max);
    box.positive_mode = j.value("positive", false);
    box.sum_m_max = j.value("sumMMax", 0);
    box.sum_n_max = j.value("sumNMax", 0);
    box.validate();
    return box;
  });
}

void RunConfig::validate() const {
  if (samples < 1) throw ConfigError("samples must be positive");
  if (numeric.tolerance < 0) throw ConfigError("tolerance must be nonnegative");
  guarded("basis box", [&] {
    box.validate();
    return 0;
  });
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  if (j.contains("xFamily")) c.x_family = xfamily_from_json(j.at("xFamily"));
  if (j.contains("q")) c.numeric.q = qvalue_from_json(j.at("q"));
  if (j.contains("mu")) {
    c.numeric.mu = guarded("mu", [&] {
      const auto& v = j.at("mu");
      return v.is_number_integer() ? Rational(v.get<long>()) : parse_rational(v.get<std::string>());
    });
  }
  if (j.contains("tol")) c.numeric.tolerance = guarded("tol", [&] { return j.at("tol").get<double>(); });
  if (j.contains("box")) c.box = basis_box_from_json(j.at("box"));
  if (j.contains("samples")) c.samples = guarded("samples", [&] { return j.at("samples").get<int>(); });
  if (j.contains("seed")) c.seed = guarded("seed", [&] { return j.at("seed").get<std::uint64_t>(); });
  if (j.contains("output")) c.output_path = guarded("output", [&] { return j.at("output").get<std::string>(); });
  c.validate();
  return c;
}

json to_json(const RunConfig& c) {
  return {{"xFamily", to_json(c.x_family)},
          {"q", to_json(c.numeric.q)},
          {"mu", rational_to_string(c.numeric.mu)},
          {"tol", c.numeric.tolerance},
          {"box", to_json(c.box)},
          {"samples", c.samples},
          {"seed", c.seed},
          {"output", c.output_path}};
}

}  // namespace qeala
