#include "potential.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "errors.hpp"
#include "quadrature.hpp"

namespace coshspec {

namespace {

bool finite(double v) { return std::isfinite(v); }
bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

cplx parse_complex(const nlohmann::json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError(std::string(where) + ": complex values must be [re, im] arrays");
  const cplx v(j[0].get<double>(), j[1].get<double>());
  if (!finite(v)) throw ValidationError(std::string(where) + ": non-finite complex value");
  return v;
}

}  // namespace

Potential Potential::gaussian_sum(std::vector<GaussianTerm> terms) {
  for (const auto& t : terms) {
    if (!(t.width > 0.0) || !finite(t.width))
      throw ValidationError("gaussian_sum: widths must be positive and finite");
    if (!finite(t.center) || !finite(t.amplitude))
      throw ValidationError("gaussian_sum: non-finite term");
  }
  Potential p;
  p.kind_ = PotentialKind::gaussian_sum;
  p.terms_ = std::move(terms);
  return p;
}

Potential Potential::grid(std::vector<double> nodes, std::vector<cplx> values) {
  if (nodes.size() != values.size())
    throw ValidationError("grid: nodes and values must have equal length");
  if (nodes.size() < 2) throw ValidationError("grid: need at least two nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!finite(nodes[i]) || !finite(values[i]))
      throw ValidationError("grid: non-finite entry");
    if (i > 0 && !(nodes[i] > nodes[i - 1]))
      throw ValidationError("grid: nodes must be strictly increasing");
  }
  Potential p;
  p.kind_ = PotentialKind::grid;
  p.nodes_ = std::move(nodes);
  p.values_ = std::move(values);
  return p;
}

Potential Potential::delta(cplx coupling) {
  if (!finite(coupling)) throw ValidationError("delta: non-finite coupling");
  Potential p;
  p.kind_ = PotentialKind::delta;
  p.coupling_ = coupling;
  return p;
}

Potential Potential::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("potential: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
      throw ValidationError("potential: missing string field 'type'");
    const std::string type = j["type"].get<std::string>();
    if (type == "delta") {
      if (!j.contains("c")) throw ValidationError("delta: missing field 'c'");
      return delta(parse_complex(j["c"], "delta.c"));
    }
    if (type == "gaussian_sum") {
      if (!j.contains("terms") || !j["terms"].is_array())
        throw ValidationError("gaussian_sum: missing array field 'terms'");
      std::vector<GaussianTerm> terms;
      for (const auto& jt : j["terms"]) {
        GaussianTerm t;
        if (!jt.contains("amp") || !jt.contains("center") || !jt.contains("width"))
          throw ValidationError("gaussian_sum: each term needs amp, center, width");
        t.amplitude = parse_complex(jt["amp"], "term.amp");
        if (!jt["center"].is_number() || !jt["width"].is_number())
          throw ValidationError("gaussian_sum: center and width must be numbers");
        t.center = jt["center"].get<double>();
        t.width = jt["width"].get<double>();
        terms.push_back(t);
      }
      return gaussian_sum(std::move(terms));
    }
    if (type == "grid") {
      if (!j.contains("nodes") || !j["nodes"].is_array() || !j.contains("values") ||
          !j["values"].is_array())
        throw ValidationError("grid: missing array fields 'nodes'/'values'");
      std::vector<double> nodes;
      std::vector<cplx> values;
      for (const auto& jn : j["nodes"]) {
        if (!jn.is_number()) throw ValidationError("grid: nodes must be numbers");
        nodes.push_back(jn.get<double>());
      }
      for (const auto& jv : j["values"]) values.push_back(parse_complex(jv, "grid.values"));
      return grid(std::move(nodes), std::move(values));
    }
    throw ValidationError("potential: unknown type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("potential: ") + e.what());
  }
}

cplx Potential::coupling() const {
  if (kind_ != PotentialKind::delta)
    throw InvalidArgument("coupling: potential is not a delta coupling");
  return coupling_;
}

cplx Potential::operator()(double x) const {
  switch (kind_) {
    case PotentialKind::gaussian_sum: {
      cplx v{0.0, 0.0};
      for (const auto& t : terms_) {
        const double u = (x - t.center) / t.width;
        v += t.amplitude * std::exp(-u * u);
      }
      return v;
    }
    case PotentialKind::grid: {
      if (x < nodes_.front() || x > nodes_.back()) return {0.0, 0.0};
      const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
      if (it == nodes_.begin()) return values_.front();
      if (it == nodes_.end()) return values_.back();
      const std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
      const std::size_t lo = hi - 1;
      const double t = (x - nodes_[lo]) / (nodes_[hi] - nodes_[lo]);
      return values_[lo] + t * (values_[hi] - values_[lo]);
    }
    case PotentialKind::delta:
      throw InvalidArgument("potential: delta coupling has no pointwise values");
  }
  throw InternalError("potential: bad kind");
}

double Potential::support_radius() const {
  switch (kind_) {
    case PotentialKind::gaussian_sum: {
      double L = 0.0;
      for (const auto& t : terms_)
        L = std::max(L, std::abs(t.center) + 8.5 * t.width);  // exp(-8.5^2) ~ 5e-32
      return L > 0.0 ? L : 1.0;
    }
    case PotentialKind::grid:
      return std::max(std::abs(nodes_.front()), std::abs(nodes_.back()));
    case PotentialKind::delta:
      return 0.0;
  }
  throw InternalError("potential: bad kind");
}

double Potential::l1_norm(double abs_tol) const {
  if (kind_ == PotentialKind::delta) return std::abs(coupling_);
  const double L = support_radius();
  auto f = [this](double x) { return std::abs((*this)(x)); };
  if (kind_ == PotentialKind::grid) {
    // integrate per node interval so the interpolation kinks sit on panel
    // boundaries
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
      acc += integrate_adaptive(f, nodes_[i], nodes_[i + 1],
                                abs_tol / static_cast<double>(nodes_.size()));
    return acc;
  }
  return integrate_adaptive(f, -L, L, abs_tol);
}

cplx BSFactorization::X(double x) const {
  const cplx v = (*potential)(x);
  return {std::sqrt(std::abs(v)), 0.0};
}

cplx BSFactorization::Y(double x) const {
  const cplx v = (*potential)(x);
  const double m = std::abs(v);
  if (m == 0.0) return {0.0, 0.0};
  return v / std::sqrt(m);
}

BSFactorization factorize(const Potential& V) {
  if (V.kind() == PotentialKind::delta)
    throw InvalidArgument("factorize: delta couplings are handled by the rank-one model");
  return BSFactorization{&V};
}

}  // namespace coshspec
