#include "zetadist/serialize.hpp"

#include "zetadist/primes.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace zetadist {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

Json rational_pair(const Rational& r) {
  return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rational rational_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw Error(ErrorKind::invalid_argument, "rational must be [\"num\", \"den\"]");
  }
  return parse_rational(j[0].get<std::string>(), j[1].get<std::string>());
}

// JSON has no infinity; unbounded quantities serialise as null.
Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace

Json to_json(const ExactFunction& a) {
  Json j;
  j["name"] = a.name();
  Json coeffs = Json::array();
  for (const auto& c : a.coefficients()) coeffs.push_back(rational_pair(c));
  j["coeffs"] = std::move(coeffs);
  if (const auto& g = a.growth()) {
    Json gj;
    gj["C"] = g->C;
    gj["eps"] = g->eps;
    if (g->support_end) gj["support"] = *g->support_end;
    j["growth"] = std::move(gj);
  } else {
    j["growth"] = nullptr;
  }
  return j;
}

ExactFunction function_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("coeffs")) {
      throw Error(ErrorKind::invalid_argument, "function JSON needs a \"coeffs\" array");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from(c));
    std::optional<GrowthCertificate> growth;
    if (j.contains("growth") && !j.at("growth").is_null()) {
      const auto& g = j.at("growth");
      GrowthCertificate cert;
      cert.C = g.at("C").get<double>();
      cert.eps = g.at("eps").get<double>();
      if (g.contains("support")) cert.support_end = g.at("support").get<std::uint64_t>();
      if (!(cert.C > 0) || !(cert.eps >= 0)) {
        throw Error(ErrorKind::invalid_argument, "growth needs C > 0 and eps >= 0");
      }
      growth = cert;
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "input";
    return ExactFunction(std::move(coeffs), std::move(name), growth);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("malformed function JSON: ") + e.what());
  }
}

Json to_json(const LogLinear& x) {
  Json j = Json::object();
  for (const auto& [p, c] : x.terms()) j[std::to_string(p)] = rational_pair(c);
  return j;
}

LogLinear log_linear_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::invalid_argument, "LogLinear JSON must be an object");
  LogLinear::Terms terms;
  for (const auto& [key, value] : j.items()) {
    std::uint64_t p = 0;
    auto res = std::from_chars(key.data(), key.data() + key.size(), p);
    if (res.ec != std::errc() || res.ptr != key.data() + key.size() || !is_prime(p)) {
      throw Error(ErrorKind::invalid_argument, "LogLinear key is not a prime: " + key);
    }
    Rational c = rational_from(value);
    if (sgn(c) != 0) terms.emplace(p, c);
  }
  return LogLinear::from_terms(std::move(terms));
}

Json to_json(const Rectangle& r) {
  return Json{{"sigma_min", r.sigma_min},
              {"sigma_max", r.sigma_max},
              {"t_min", r.t_min},
              {"t_max", r.t_max}};
}

Json to_json(const ZeroScanReport& r) {
  Json j;
  j["rect"] = to_json(r.rect);
  j["winding"] = r.winding;
  j["integral"] = Json::array({r.integral.real(), r.integral.imag()});
  j["min_modulus"] = number(r.min_modulus);
  j["tail_bound"] = number(r.tail_bound);
  j["quadrature_error"] = number(r.quadrature_error);
  j["N"] = r.truncation;
  j["evaluations"] = r.evaluations;
  j["status"] = std::string(to_string(r.status));
  return j;
}

Json to_json(const Sigma0Estimate& e) {
  Json j;
  j["sigma0_bracket"] = Json::array({e.lo, e.hi});
  j["zero_found"] = e.zero_found;
  j["conclusive"] = e.conclusive;
  j["height_T"] = e.height;
  j["sigma_hi"] = e.sigma_hi;
  j["zero_free_from"] = e.zero_free_from;
  j["requested_floor"] = e.requested_floor;
  j["N"] = e.truncation;
  j["certificate"] = e.certificate;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["verdict"] = std::string(to_string(c.verdict));
  j["negative_witness"] = c.negative_witness ? Json(*c.negative_witness) : Json(nullptr);
  if (c.verdict == Verdict::case1) {
    j["sigma0_bracket"] = Json::array({c.sigma0.lo, c.sigma0.hi});
  } else {
    j["sigma0_bracket"] = nullptr;
  }
  j["zero_free_from"] = c.sigma0.zero_found ? Json(nullptr) : Json(c.sigma0.zero_free_from);
  j["height_T"] = c.height;
  j["scan_depth"] = c.scan_depth;
  j["consequences"] = c.consequences;
  j["notes"] = c.notes;
  j["observed_growth_exponent"] =
      c.observed_growth_exponent ? number(*c.observed_growth_exponent) : Json(nullptr);
  return j;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command_line"] = m.command_line;
  j["input"] = m.input;
  j["input_hash"] = m.input_hash.empty() ? Json(nullptr) : Json(m.input_hash);
  j["N"] = m.truncation ? Json(*m.truncation) : Json(nullptr);
  j["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
  Json tol = Json::object();
  for (const auto& [k, v] : m.tolerances) tol[k] = v;
  j["tolerances"] = std::move(tol);
  j["output"] = m.output;
  j["tool_version"] = m.tool_version;
  j["wall_time_seconds"] = m.wall_time_seconds;
  return j;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace zetadist
