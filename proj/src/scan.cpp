#include "sexticlab/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include <json.hpp>

#include "sexticlab/error.hpp"
#include "sexticlab/zfactor.hpp"

namespace sexticlab {

namespace {

nlohmann::ordered_json int_json(const Int& v) {
  if (fits_i64(v)) return to_i64(v);
  return v.get_str();
}

}  // namespace

IntPoly family_poly(Family family, const std::vector<Int>& params) {
  const std::size_t want = (family == Family::F1 || family == Family::F2) ? 2 : 1;
  if (params.size() != want) throw DomainError("family_poly: wrong number of parameters for " + to_string(family));
  switch (family) {
    case Family::F1: return f1_sextic(params[0], params[1]).as_poly();
    case Family::F2: return f2_sextic(params[0], params[1]).as_poly();
    case Family::F3: return f3_poly(params[0]).as_poly();
    case Family::A4Fam: return a4_poly(params[0]).first.as_poly();
  }
  throw DomainError("family_poly: unknown family");
}

ScanReport evaluate_cell(Family family, const std::vector<Int>& params, const Budgets& budgets) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport r;
  r.family = family;
  r.params = params;
  r.poly = family_poly(family, params);
  r.disc = discriminant(r.poly);
  if (r.disc != 0) r.disc_factors = factorize(r.disc, budgets);
  r.irreducible = is_irreducible_q(r.poly, budgets.seed);
  if (r.irreducible) {
    r.galois = classify_irreducible(*as_even_sextic(r.poly), budgets.seed);
    r.monogenic = monogenic_generic_irreducible(r.poly, budgets);
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::vector<Int>> scan_cells(const ScanSpec& spec) {
  if (spec.min > spec.max) throw DomainError("scan: --min exceeds --max");
  std::vector<std::vector<Int>> cells;
  if (spec.family == Family::F1 || spec.family == Family::F2) {
    const long bmin = spec.b_min.value_or(spec.min), bmax = spec.b_max.value_or(spec.max);
    if (bmin > bmax) throw DomainError("scan: --bmin exceeds --bmax");
    for (long a = spec.min; a <= spec.max; ++a) {
      for (long b = bmin; b <= bmax; ++b) cells.push_back({Int(a), Int(b)});
    }
  } else {
    if (spec.b_min || spec.b_max) throw DomainError("scan: --bmin/--bmax only apply to f1 and f2");
    for (long n = spec.min; n <= spec.max; ++n) cells.push_back({Int(n)});
  }
  return cells;
}

std::vector<ScanReport> run_scan(const ScanSpec& spec, unsigned jobs, const Budgets& budgets) {
  const auto cells = scan_cells(spec);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1))));

  std::vector<std::vector<ScanReport>> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t i = t; i < cells.size(); i += jobs) {
        parts[t].push_back(evaluate_cell(spec.family, cells[i], budgets));
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<ScanReport> out;
  out.reserve(cells.size());
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), [](const ScanReport& x, const ScanReport& y) { return x.params < y.params; });
  return out;
}

std::string to_json_line(const ScanReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["family"] = to_string(r.family);
  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (const auto& p : r.params) params.push_back(int_json(p));
  j["params"] = params;
  j["irreducible"] = r.irreducible;
  j["galois"] = r.galois ? nlohmann::ordered_json(to_string(r.galois->group)) : nlohmann::ordered_json(nullptr);
  j["monogenic"] = r.monogenic ? nlohmann::ordered_json(to_string(r.monogenic->status)) : nlohmann::ordered_json(nullptr);
  j["witness"] = (r.monogenic && r.monogenic->witness_prime) ? int_json(*r.monogenic->witness_prime)
                                                             : nlohmann::ordered_json(nullptr);
  j["disc_sign"] = sgn(r.disc);
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const auto& [p, e] : r.disc_factors.factors) factors.push_back({int_json(p), e});
  if (!r.disc_factors.complete) factors.push_back({int_json(r.disc_factors.cofactor), 0});
  j["disc_factors"] = factors;
  j["ms"] = timing ? std::round(r.ms * 1000.0) / 1000.0 : 0.0;
  return j.dump();
}

}  // namespace sexticlab
