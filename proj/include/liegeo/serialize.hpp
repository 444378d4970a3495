#ifndef LIEGEO_SERIALIZE_HPP
#define LIEGEO_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "liegeo/algebra.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/hypercomplex.hpp"
#include "liegeo/scalar.hpp"

namespace liegeo {

using nlohmann::json;

/// Exact scalars serialize as rational strings "p/q"; floats as numbers.
/// Both modes accept either form on input.
template <class S>
json scalar_to_json(const S& x) {
  if constexpr (scalar_traits<S>::exact)
    return scalar_traits<S>::str(x);
  else
    return x;
}

template <class S>
S scalar_from_json(const json& j) {
  if (j.is_string()) return scalar_traits<S>::parse(j.get<std::string>());
  if (j.is_number()) {
    if constexpr (scalar_traits<S>::exact) {
      if (j.is_number_integer())
        return S(static_cast<long>(j.get<long long>()));
      throw ParseError("exact mode requires integers or rational strings, got " +
                       j.dump());
    } else {
      return j.get<double>();
    }
  }
  throw ParseError("expected a scalar, got " + j.dump());
}

template <class S>
json vector_to_json(const Vector<S>& v) {
  json out = json::array();
  for (const S& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <class S>
Vector<S> vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vector<S> v;
  for (const auto& x : j) v.push_back(scalar_from_json<S>(x));
  return v;
}

/// Algebra schema: {"dim": n, "basis": [...], "brackets": [{"i":.., "j":..,
/// "coeffs": {"k": "p/q", ...}}, ...]}; only i < j entries are stored,
/// antisymmetric completion is implied. Indices are 0-based.
template <class S>
json algebra_to_json(const LieAlgebra<S>& alg) {
  json brackets = json::array();
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      json coeffs = json::object();
      for (int k = 0; k < n; ++k)
        if (!scalar_traits<S>::is_zero(alg.c(i, j, k), 0.0))
          coeffs[std::to_string(k)] = scalar_to_json(alg.c(i, j, k));
      if (!coeffs.empty())
        brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return {{"dim", alg.dim()}, {"basis", alg.basis_names()}, {"brackets", brackets}};
}

template <class S>
LieAlgebra<S> algebra_from_json(const json& j) {
  if (!j.contains("dim")) throw ParseError("algebra document needs \"dim\"");
  const int n = j.at("dim").get<int>();
  if (n <= 0) throw ParseError("algebra dimension must be positive");
  std::vector<std::string> names;
  if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
  std::vector<BracketEntry<S>> entries;
  for (const auto& b : j.value("brackets", json::array())) {
    const int i = b.at("i").get<int>();
    const int jj = b.at("j").get<int>();
    if (i < 0 || jj >= n || i >= jj)
      throw ParseError("bracket entries need 0 <= i < j < dim");
    Vector<S> value = zero_vector<S>(n);
    for (const auto& [key, coeff] : b.at("coeffs").items()) {
      const int k = std::stoi(key);
      if (k < 0 || k >= n) throw ParseError("bracket coefficient index out of range");
      value[k] = scalar_from_json<S>(coeff);
    }
    entries.push_back({i, jj, std::move(value)});
  }
  return LieAlgebra<S>::from_brackets(n, std::move(names), entries);
}

/// Metric schema: {"gram": [[...], ...]} with scalar entries.
template <class S>
json metric_to_json(const InnerProduct<S>& g) {
  json rows = json::array();
  for (int i = 0; i < g.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.gram.cols(); ++j) row.push_back(scalar_to_json(g.gram(i, j)));
    rows.push_back(row);
  }
  return {{"gram", rows}};
}

template <class S>
InnerProduct<S> metric_from_json(const json& j) {
  const json& rows = j.contains("gram") ? j.at("gram") : j;
  if (!rows.is_array() || rows.empty())
    throw ParseError("metric document needs a \"gram\" matrix");
  const int n = static_cast<int>(rows.size());
  Matrix<S> gram(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw ParseError("gram matrix must be square");
    for (int c = 0; c < n; ++c) gram(i, c) = scalar_from_json<S>(rows[i][c]);
  }
  return {gram};
}

/// Connection tables as nested index -> scalar maps, zero entries omitted.
template <class S>
json connection_to_json(const Connection<S>& conn, double eps = kDefaultEpsilon) {
  json out = json::object();
  const int n = conn.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!scalar_traits<S>::is_zero(conn.gamma(i, j, k), eps))
          out[std::to_string(i)][std::to_string(j)][std::to_string(k)] =
              scalar_to_json(conn.gamma(i, j, k));
  return out;
}

template <class S>
Connection<S> connection_from_json(const json& j, int dim) {
  Connection<S> conn(dim);
  for (const auto& [si, ji] : j.items())
    for (const auto& [sj, jj] : ji.items())
      for (const auto& [sk, value] : jj.items())
        conn.gamma(std::stoi(si), std::stoi(sj), std::stoi(sk)) =
            scalar_from_json<S>(value);
  return conn;
}

template <class S>
json curvature_to_json(const CurvatureOperator<S>& table,
                       double eps = kDefaultEpsilon) {
  json out = json::object();
  const int n = table.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (!scalar_traits<S>::is_zero(table.r(i, j, k, l), eps))
            out[std::to_string(i)][std::to_string(j)][std::to_string(k)]
               [std::to_string(l)] = scalar_to_json(table.r(i, j, k, l));
  return out;
}

/// Endomorphism triple schema: {"j1": [[...]], "j2": [[...]], "j3": [[...]]}.
template <class S>
HypercomplexTriple<S> triple_from_json(const json& j) {
  const auto load = [&](const char* key) {
    if (!j.contains(key))
      throw ParseError(std::string("triple document needs \"") + key + "\"");
    const json& rows = j.at(key);
    const int n = static_cast<int>(rows.size());
    Matrix<S> m(n, n);
    for (int r = 0; r < n; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n)
        throw ParseError("endomorphism matrices must be square");
      for (int c = 0; c < n; ++c) m(r, c) = scalar_from_json<S>(rows[r][c]);
    }
    return Endomorphism<S>{m};
  };
  return {load("j1"), load("j2"), load("j3")};
}

template <class S>
json triple_to_json(const HypercomplexTriple<S>& t) {
  const auto dump = [](const Endomorphism<S>& e) {
    json rows = json::array();
    for (int r = 0; r < e.dim(); ++r) {
      json row = json::array();
      for (int c = 0; c < e.matrix.cols(); ++c) row.push_back(scalar_to_json(e.matrix(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  return {{"j1", dump(t.j1)}, {"j2", dump(t.j2)}, {"j3", dump(t.j3)}};
}

// ---------------------------------------------------------------------------
// Plain-text / markdown rendering in the published table layout.
// ---------------------------------------------------------------------------

/// "1/2 W", "-1/2 Z + 1/4 Y", "X", "0".
template <class S>
std::string vector_to_string(const Vector<S>& v,
                             const std::vector<std::string>& names,
                             double eps = kDefaultEpsilon) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (scalar_traits<S>::is_zero(v[k], eps)) continue;
    const bool negative = scalar_traits<S>::to_double(v[k]) < 0;
    const S magnitude = negative ? S(-v[k]) : v[k];
    std::string term;
    if (!(magnitude == S(1))) term = scalar_traits<S>::str(magnitude) + " ";
    term += names[k];
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

/// One line per nabla_{e_i}, entries "nabla_Y Z = 1/2 W" — the layout of
/// the published connection tables.
template <class S>
std::string connection_markdown(const Connection<S>& conn,
                                const std::vector<std::string>& names,
                                double eps = kDefaultEpsilon) {
  std::string out;
  const int n = conn.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ", ";
      out += "∇_" + names[i] + " " + names[j] + " = " +
             vector_to_string(conn.derivative_basis(i, j), names, eps);
    }
    out += '\n';
  }
  return out;
}

/// Nonzero components "R(Y,Z)Y = -1/4 Z" (first slots i < j), then the
/// closing "all other components zero" line.
template <class S>
std::string curvature_markdown(const CurvatureOperator<S>& table,
                               const std::vector<std::string>& names,
                               double eps = kDefaultEpsilon) {
  std::string out;
  const int n = table.dim();
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vector<S> value = table.apply_basis(i, j, k);
        if (is_zero_vector(value, eps)) continue;
        any = true;
        out += "R(" + names[i] + "," + names[j] + ")" + names[k] + " = " +
               vector_to_string(value, names, eps) + '\n';
      }
  out += any ? "all other components zero\n" : "all components zero\n";
  return out;
}

template <class S>
std::string parallel_markdown(const std::vector<Vector<S>>& basis,
                              const std::vector<std::string>& names,
                              double eps = kDefaultEpsilon) {
  std::string out = "dimension " + std::to_string(basis.size());
  if (!basis.empty()) {
    out += ", basis: ";
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (b) out += ", ";
      out += vector_to_string(basis[b], names, eps);
    }
  }
  out += '\n';
  return out;
}

}  // namespace liegeo

#endif
