#include "tripack/catalog.hpp"

#include <ostream>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace tripack {

namespace {

using json = nlohmann::ordered_json;

}  // namespace

ResolveStats resolve_ambiguous(LCatalog& cat, long term_cap) {
  ResolveStats st;
  Real zero(0L, Precision{cat.digits}.bits());
  for (auto& row : cat.rows) {
    if (row.status != InterceptStatus::ambiguous) continue;
    ++st.examined;
    std::string id = "eta=" + row.pair.eta.str() + " zeta=" + row.pair.zeta.str();

    bool settled = false;
    if (row.reason == "origin slopes" || row.reason == "ordinates at one" ||
        row.reason == "a vs d" || row.reason == "vertical abscissa vs diagonal endpoint") {
      try {
        ContourProfile pa = profile(Kind::alpha, row.pair.eta, cat.digits);
        ContourProfile pb = profile(Kind::beta, row.pair.zeta, cat.digits);
        Boundary which;
        const Real *ra, *rb;
        if (row.reason == "origin slopes") {
          which = Boundary::origin;
          ra = &pa.origin_slope;
          rb = &pb.origin_slope;
        } else if (row.reason == "ordinates at one") {
          which = Boundary::at_one;
          ra = &pa.value_at_one;
          rb = &pb.value_at_one;
        } else if (row.reason == "a vs d") {
          which = Boundary::diagonal;
          ra = &pa.a;
          rb = &pb.d;
        } else {
          which = Boundary::diagonal;
          ra = &pa.a;
          rb = &pb.r_vert;
        }
        IntPoly1 fa = boundary_poly_direct(Kind::alpha, row.pair.eta, which, term_cap);
        IntPoly1 fb = boundary_poly_direct(Kind::beta, row.pair.zeta, which, term_cap);
        auto xa = root_near(fa, *ra, cat.digits);
        auto xb = root_near(fb, *rb, cat.digits);
        if (xa && xb && algebraic_equal(*xa, *xb)) {
          row.status = InterceptStatus::none_definite;
          row.margin = zero;
          row.reason += " coincide algebraically";
          ++st.equal_none;
          st.notes.push_back(id + ": " + row.reason);
          settled = true;
        }
      } catch (const std::exception& e) {
        st.notes.push_back(id + ": algebraic comparison unavailable (" + e.what() + ")");
      }
    }

    if (!settled) {
      for (int mult = 2; mult <= 4 && !settled; mult *= 2) {
        InterceptResult rr = intercept(row.pair, cat.digits * mult);
        if (rr.status != InterceptStatus::ambiguous) {
          row = rr;
          ++st.reran;
          st.notes.push_back(id + ": settled " + status_name(row.status) + " at " +
                             std::to_string(cat.digits * mult) + " digits (" + row.reason + ")");
          settled = true;
        }
      }
    }
    if (!settled) {
      ++st.unresolved;
      st.notes.push_back(id + ": unresolved (" + row.reason + ")");
    }
  }
  refresh_groups(cat);
  return st;
}

namespace {

json tuple_json(const AngleCount& x) {
  json a = json::array();
  for (int i = 0; i < 6; ++i) a.push_back(x[i]);
  return a;
}

AngleCount tuple_from_json(const json& a) {
  AngleCount x;
  for (int i = 0; i < 6; ++i) x[i] = a.at(static_cast<size_t>(i)).get<int>();
  return x;
}

json row_json(const InterceptResult& row, int digits) {
  json o;
  o["eta"] = tuple_json(row.pair.eta);
  o["zeta"] = tuple_json(row.pair.zeta);
  o["status"] = status_name(row.status);
  o["reason"] = row.reason;
  o["digits"] = digits;
  if (row.status == InterceptStatus::found) {
    o["r"] = row.r.str(digits);
    o["s"] = row.s.str(digits);
  } else {
    o["r"] = nullptr;
    o["s"] = nullptr;
  }
  o["margin"] = row.margin.str(digits);
  return o;
}

}  // namespace

void write_jsonl(const LCatalog& cat, std::ostream& os) {
  for (const auto& row : cat.rows) os << row_json(row, cat.digits).dump() << "\n";
}

LCatalog read_jsonl(std::istream& is) {
  LCatalog cat;
  std::string line;
  bool digits_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json o = json::parse(line);
    InterceptResult row;
    row.pair.eta = tuple_from_json(o.at("eta"));
    row.pair.zeta = tuple_from_json(o.at("zeta"));
    int digits = o.at("digits").get<int>();
    if (!digits_seen) {
      cat.digits = digits;
      digits_seen = true;
    }
    mpfr_prec_t bits = Precision{digits}.bits();
    std::string status = o.at("status").get<std::string>();
    if (status == "found")
      row.status = InterceptStatus::found;
    else if (status == "none")
      row.status = InterceptStatus::none_definite;
    else if (status == "ambiguous")
      row.status = InterceptStatus::ambiguous;
    else
      throw std::invalid_argument("unknown status: " + status);
    row.reason = o.at("reason").get<std::string>();
    if (!o.at("r").is_null()) row.r = Real::parse(o.at("r").get<std::string>(), bits);
    if (!o.at("s").is_null()) row.s = Real::parse(o.at("s").get<std::string>(), bits);
    row.margin = Real::parse(o.at("margin").get<std::string>(), bits);
    cat.rows.push_back(std::move(row));
  }
  refresh_groups(cat);
  return cat;
}

void write_csv(const LCatalog& cat, std::ostream& os) {
  os << "eta,zeta,status,reason,digits,r,s,margin\n";
  for (const auto& row : cat.rows) {
    os << '"' << row.pair.eta.str() << "\",\"" << row.pair.zeta.str() << "\","
       << status_name(row.status) << ",\"" << row.reason << "\"," << cat.digits << ",";
    if (row.status == InterceptStatus::found)
      os << row.r.str(cat.digits) << "," << row.s.str(cat.digits);
    else
      os << ",";
    os << "," << row.margin.str(cat.digits) << "\n";
  }
}

std::string summary_text(const LCatalog& cat) {
  std::ostringstream os;
  os << "pairs: " << cat.rows.size() << "\n"
     << "found: " << cat.found << "\n"
     << "none: " << cat.none << "\n"
     << "ambiguous: " << cat.ambiguous << "\n"
     << "groups: " << cat.groups.size() << "\n"
     << "borderline groups: " << cat.borderline_groups.size() << "\n";
  return os.str();
}

namespace {

json poly1_json(const IntPoly1& p, const std::string& var) {
  json o;
  o["var"] = var;
  json c = json::array();
  for (const auto& x : p.c) c.push_back(x.get_str());
  o["coeffs"] = c;
  return o;
}

IntPoly1 poly1_from_json(const json& o) {
  std::vector<mpz_class> c;
  for (const auto& x : o.at("coeffs")) c.emplace_back(x.get<std::string>());
  return IntPoly1(std::move(c));
}

json poly2_json(const IntPoly2& p) {
  json o;
  o["vars"] = json::array({"r", "s"});
  json rows = json::array();
  for (const auto& q : p.sc) {
    json row = json::array();
    for (const auto& x : q.c) row.push_back(x.get_str());
    rows.push_back(row);
  }
  o["coeffs_by_s_degree"] = rows;
  return o;
}

json interval_json(const RatInterval& iv) {
  json o;
  o["lo"] = iv.lo.get_str();
  o["hi"] = iv.hi.get_str();
  return o;
}

}  // namespace

std::string poly_json(const IntPoly1& p, const std::string& var) {
  return poly1_json(p, var).dump();
}

IntPoly1 poly_from_json(const std::string& text) { return poly1_from_json(json::parse(text)); }

Certificate certify_pair(const TuplePair& pair, int digits, long term_cap) {
  InterceptResult res = intercept(pair, digits);
  if (res.status != InterceptStatus::found)
    throw std::runtime_error("pair admits no certified intercept: " + status_name(res.status) +
                             " (" + res.reason + ")");
  Certificate c;
  c.pair = pair;
  c.digits = digits;
  c.alpha_poly = detrig(cos_sum_expr(Kind::alpha, pair.eta).numerator, term_cap);
  c.beta_poly = detrig(cos_sum_expr(Kind::beta, pair.zeta).numerator, term_cap);
  c.removed = clear_common_factors(c.alpha_poly, c.beta_poly);
  c.in_s = eliminate(c.alpha_poly, c.beta_poly, Var::r);
  c.in_r = eliminate(c.alpha_poly, c.beta_poly, Var::s);
  auto rr = root_near(c.in_r, res.r, digits);
  auto rs = root_near(c.in_s, res.s, digits);
  if (!rr || !rs)
    throw std::runtime_error("failed to isolate an elimination root at the numeric point");
  c.root_r = *rr;
  c.root_s = *rs;
  c.r_dec = c.root_r.approx(digits).str(digits);
  c.s_dec = c.root_s.approx(digits).str(digits);
  return c;
}

std::string certificate_json(const Certificate& c) {
  json o;
  o["eta"] = tuple_json(c.pair.eta);
  o["zeta"] = tuple_json(c.pair.zeta);
  o["digits"] = c.digits;
  o["alpha_poly"] = poly2_json(c.alpha_poly);
  o["beta_poly"] = poly2_json(c.beta_poly);
  o["removed_common_factor"] = poly2_json(c.removed);
  o["eliminated_in_r"] = poly1_json(c.in_r, "r");
  o["eliminated_in_s"] = poly1_json(c.in_s, "s");
  o["root_r"] = {{"poly", poly1_json(c.root_r.poly, "r")},
                 {"interval", interval_json(c.root_r.iv)},
                 {"decimal", c.r_dec}};
  o["root_s"] = {{"poly", poly1_json(c.root_s.poly, "s")},
                 {"interval", interval_json(c.root_s.iv)},
                 {"decimal", c.s_dec}};
  return o.dump(2);
}

}  // namespace tripack
