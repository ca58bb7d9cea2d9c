#include "mcgrep/matrix_io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace mcg {

namespace {

using nlohmann::json;

json rational_entry(const Rational& v) { return v.str(); }

json laurent_entry(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(json::array({m.q, m.t, c.str()}));
  return terms;
}

json interval_entry(const Interval& v) {
  return json::array({v.lo().str(), v.hi().str()});
}

Rational parse_rational(const json& j, const char* what) {
  if (!j.is_string()) throw std::runtime_error(std::string("matrix json: ") + what + " must be a string");
  return Rational::from_string(j.get<std::string>());
}

LaurentPoly parse_laurent(const json& j) {
  if (!j.is_array()) throw std::runtime_error("matrix json: symbolic entry must be an array of terms");
  LaurentPoly p(0);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_number_integer())
      throw std::runtime_error("matrix json: symbolic term must be [qexp, texp, coeff]");
    p += LaurentPoly::monomial(term[0].get<int>(), term[1].get<int>(),
                               parse_rational(term[2], "coefficient"));
  }
  return p;
}

Interval parse_interval(const json& j, unsigned prec) {
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error("matrix json: interval entry must be [lo, hi]");
  return Interval::raw(parse_rational(j[0], "endpoint"), parse_rational(j[1], "endpoint"), prec);
}

template <class S, class Fn>
Dense<S> parse_entries(const json& rows, Eigen::Index n, Fn entry) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw std::runtime_error("matrix json: entries must hold dim rows");
  Dense<S> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw std::runtime_error("matrix json: each row must hold dim entries");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entry(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

}  // namespace

std::string matrix_to_json(const AnyMatrix& m) {
  json out;
  out["dim"] = any_dim(m);
  out["domain"] = domain_name(domain_of(m));
  json rows = json::array();
  std::visit(
      [&](const auto& mat) {
        using S = typename std::decay_t<decltype(mat)>::Scalar;
        for (Eigen::Index i = 0; i < mat.rows(); ++i) {
          json row = json::array();
          for (Eigen::Index j = 0; j < mat.cols(); ++j) {
            if constexpr (std::is_same_v<S, Rational>) row.push_back(rational_entry(mat(i, j)));
            else if constexpr (std::is_same_v<S, LaurentPoly>) row.push_back(laurent_entry(mat(i, j)));
            else row.push_back(interval_entry(mat(i, j)));
          }
          rows.push_back(std::move(row));
        }
      },
      m);
  out["entries"] = std::move(rows);
  if (std::holds_alternative<IntervalMat>(m)) {
    const auto& im = std::get<IntervalMat>(m);
    out["precision"] = im.size() ? im(0, 0).precision() : kDefaultPrecision;
  }
  return out.dump(2);
}

AnyMatrix matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("matrix json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("domain") || !j.contains("entries"))
    throw std::runtime_error("matrix json: need dim, domain and entries");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 0)
    throw std::runtime_error("matrix json: dim must be a nonnegative integer");
  const Eigen::Index n = j["dim"].get<Eigen::Index>();
  const std::string domain = j["domain"].get<std::string>();
  const json& rows = j["entries"];
  if (domain == "rational")
    return parse_entries<Rational>(rows, n, [](const json& e) { return parse_rational(e, "entry"); });
  if (domain == "laurent")
    return parse_entries<LaurentPoly>(rows, n, [](const json& e) { return parse_laurent(e); });
  if (domain == "interval") {
    unsigned prec = kDefaultPrecision;
    if (j.contains("precision")) prec = j["precision"].get<unsigned>();
    return parse_entries<Interval>(rows, n, [prec](const json& e) { return parse_interval(e, prec); });
  }
  throw std::runtime_error("matrix json: unknown domain '" + domain + "'");
}

std::string matrix_to_csv(const AnyMatrix& m) {
  if (!std::holds_alternative<RatMat>(m))
    throw std::invalid_argument("matrix csv: only the rational domain has a CSV form");
  const auto& mat = std::get<RatMat>(m);
  std::ostringstream out;
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    for (Eigen::Index j = 0; j < mat.cols(); ++j) {
      if (j) out << ',';
      out << mat(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mcg
