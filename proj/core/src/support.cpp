#include "sonc/support.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sonc/barycentric.hpp"

namespace sonc {

using json = nlohmann::json;

bool Exponent::is_zero() const {
  for (double c : coords_) {
    if (c != 0.0) return false;
  }
  return true;
}

bool Exponent::is_lattice_point() const {
  for (double c : coords_) {
    if (c < 0.0 || std::floor(c) != c) return false;
  }
  return true;
}

double Exponent::dot(std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * x[i];
  return s;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  std::vector<double> d(a.dim());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] - b[i];
  return Exponent(std::move(d));
}

std::string Exponent::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::string_view to_string(InstanceKind kind) {
  return kind == InstanceKind::Polynomial ? "polynomial" : "exponential";
}

ExponentialSum::ExponentialSum(std::size_t n, InstanceKind kind) : n_(n), kind_(kind) {
  if (n == 0) throw InstanceError("dimension n must be positive");
}

void ExponentialSum::add_term(Exponent exponent, double coefficient) {
  if (exponent.dim() != n_) {
    throw InstanceError("exponent " + exponent.to_string() + " has length " +
                        std::to_string(exponent.dim()) + ", expected " +
                        std::to_string(n_));
  }
  for (double c : exponent.coords()) {
    if (!std::isfinite(c)) throw InstanceError("exponent coordinates must be finite");
  }
  if (!std::isfinite(coefficient)) throw InstanceError("coefficients must be finite");
  if (kind_ == InstanceKind::Polynomial && !exponent.is_lattice_point()) {
    throw InstanceError("polynomial exponent " + exponent.to_string() +
                        " is not a nonnegative integer vector");
  }
  if (index_.contains(exponent)) {
    throw InstanceError("duplicate exponent " + exponent.to_string());
  }
  if (coefficient == 0.0) return;
  index_.emplace(exponent, terms_.size());
  terms_.push_back({std::move(exponent), coefficient});
}

bool ExponentialSum::contains(const Exponent& e) const { return index_.contains(e); }

double ExponentialSum::coefficient(const Exponent& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? 0.0 : terms_[it->second].coefficient;
}

std::vector<Exponent> ExponentialSum::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exponent);
  return out;
}

ExponentialSum ExponentialSum::with_constant(double value) const {
  ExponentialSum out(n_, kind_);
  for (const auto& t : terms_) {
    if (!t.exponent.is_zero()) out.add_term(t.exponent, t.coefficient);
  }
  out.add_term(Exponent::zero(n_), value);
  return out;
}

ExponentialSum ExponentialSum::shifted(double t) const {
  return with_constant(constant_term() + t);
}

namespace {

InstanceKind parse_kind(const json& j) {
  if (!j.contains("kind")) return InstanceKind::Polynomial;
  const auto& k = j.at("kind");
  if (!k.is_string()) throw InstanceError("\"kind\" must be a string");
  const auto s = k.get<std::string>();
  if (s == "polynomial") return InstanceKind::Polynomial;
  if (s == "exponential") return InstanceKind::Exponential;
  throw InstanceError("unknown kind \"" + s + "\"");
}

}  // namespace

ExponentialSum parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InstanceError("instance must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw InstanceError("\"n\" must be an integer");
  }
  const auto n = j.at("n").get<long long>();
  if (n <= 0) throw InstanceError("\"n\" must be positive");
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw InstanceError("\"terms\" must be an array");
  }
  ExponentialSum f(static_cast<std::size_t>(n), parse_kind(j));
  std::set<std::vector<double>> seen;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef")) {
      throw InstanceError("each term needs \"exp\" and \"coef\"");
    }
    const auto& e = t.at("exp");
    if (!e.is_array()) throw InstanceError("\"exp\" must be an array");
    std::vector<double> coords;
    for (const auto& c : e) {
      if (!c.is_number()) throw InstanceError("exponent entries must be numbers");
      coords.push_back(c.get<double>());
    }
    if (!t.at("coef").is_number()) throw InstanceError("\"coef\" must be a number");
    if (!seen.insert(coords).second) {
      throw InstanceError("duplicate exponent " + Exponent(coords).to_string());
    }
    f.add_term(Exponent(std::move(coords)), t.at("coef").get<double>());
  }
  return f;
}

ExponentialSum load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string instance_to_json(const ExponentialSum& f) {
  json j;
  j["n"] = f.dim();
  j["kind"] = std::string(to_string(f.kind()));
  j["terms"] = json::array();
  for (const auto& t : f.terms()) {
    j["terms"].push_back(
        {{"exp", std::vector<double>(t.exponent.coords().begin(), t.exponent.coords().end())},
         {"coef", t.coefficient}});
  }
  return j.dump();
}

bool SignDecomposition::is_vertex(const Exponent& e) const {
  auto it = vertex_flags.find(e);
  return it != vertex_flags.end() && it->second;
}

bool SignDecomposition::in_plus(const Exponent& e) const {
  for (const auto& a : a_plus) {
    if (a == e) return true;
  }
  return false;
}

bool is_vertex(std::span<const Exponent> points, const Exponent& alpha) {
  std::vector<Exponent> rest;
  rest.reserve(points.size());
  for (const auto& p : points) {
    if (p != alpha) rest.push_back(p);
  }
  if (rest.empty()) return true;
  return !lambda_feasible(rest, alpha).has_value();
}

SignDecomposition sign_split(const ExponentialSum& f) {
  if (f.empty()) throw InstanceError("instance has no terms");
  SignDecomposition dec;
  for (const auto& t : f.terms()) {
    (t.coefficient > 0.0 ? dec.a_plus : dec.a_minus).push_back(t.exponent);
  }
  if (dec.a_plus.empty()) {
    throw InstanceError("instance has no positive coefficient");
  }
  const auto support = f.support();
  for (const auto& e : support) dec.vertex_flags[e] = is_vertex(support, e);
  return dec;
}

std::vector<VertexViolation> validate_vertex_condition(const ExponentialSum& f) {
  std::vector<VertexViolation> out;
  const auto support = f.support();
  for (const auto& t : f.terms()) {
    if (t.coefficient < 0.0 && is_vertex(support, t.exponent)) {
      out.push_back({t.exponent, t.coefficient});
    }
  }
  return out;
}

double evaluate(const ExponentialSum& f, std::span<const double> x) {
  double s = 0.0;
  for (const auto& t : f.terms()) s += t.coefficient * std::exp(t.exponent.dot(x));
  return s;
}

}  // namespace sonc
