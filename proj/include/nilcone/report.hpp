#pragma once

// Semi-simplicity diagnostics combining the root, Hecke and counting criteria,
// plus orbit reports and their JSON form.

#include "nilcone/abelian.hpp"
#include "nilcone/character.hpp"
#include "nilcone/orbits.hpp"
#include "nilcone/params.hpp"
#include "nilcone/rootlattice.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilcone {

using Json = nlohmann::ordered_json;

struct ViolatedRoot {
  DimVector root;
  Rational value;
};

struct SemisimplicityReport {
  int n = 0;
  int ell = 0;
  RationalCharacter chi;
  bool verdict_roots = false;
  bool verdict_hecke = false;
  bool verdict_counting = false;
  std::vector<ViolatedRoot> violated_roots;
  std::size_t simple_count = 0;
  std::size_t pell_count = 0;
  std::size_t orbit_count = 0;
  bool chi_integral = false;
  KappaParams kappa;
  HeckeParams hecke;

  bool semisimple() const { return verdict_roots; }
};

/// Inputs visible to each criterion.
struct CriterionInputs {
  int n;
  int ell;
  const RationalCharacter& chi;
  const RootSet& roots;
  const KappaParams& kappa;
  const HeckeParams& hecke;
  std::size_t simple_count;
  std::size_t pell_count;
};

/// The three semi-simplicity tests. Replaceable so that the disagreement path
/// can be exercised.
struct Criteria {
  std::function<bool(const CriterionInputs&)> roots;
  std::function<bool(const CriterionInputs&)> hecke;
  std::function<bool(const CriterionInputs&)> counting;

  static Criteria standard() {
    return {
        [](const CriterionInputs& in) {
          for (const auto& a : in.roots.roots)
            if (is_integral_pairing(in.chi, a)) return false;
          return true;
        },
        [](const CriterionInputs& in) { return ariki_product_nonzero(in.hecke.q(), in.hecke.u, in.n); },
        [](const CriterionInputs& in) { return in.simple_count == in.pell_count; },
    };
  }
};

/// The criteria returned different verdicts. Never expected; carries all three.
class CriteriaDisagreement : public std::logic_error {
 public:
  CriteriaDisagreement(int n, int ell, const RationalCharacter& chi, bool roots, bool hecke, bool counting)
      : std::logic_error("semi-simplicity criteria disagree for n=" + std::to_string(n) + " ell=" +
                         std::to_string(ell) + " chi=" + chi.to_string() + ": roots=" + (roots ? "true" : "false") +
                         " hecke=" + (hecke ? "true" : "false") + " counting=" + (counting ? "true" : "false")),
        verdict_roots(roots),
        verdict_hecke(hecke),
        verdict_counting(counting) {}

  bool verdict_roots;
  bool verdict_hecke;
  bool verdict_counting;
};

inline SemisimplicityReport semisimplicity_report(const OrbitCatalog& catalog, const RationalCharacter& chi,
                                                  const Criteria& criteria = Criteria::standard()) {
  const int n = catalog.n();
  const int ell = catalog.ell();
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_character_length(chi, ell);

  SemisimplicityReport r;
  r.n = n;
  r.ell = ell;
  r.chi = chi;
  r.chi_integral = chi.is_integral();
  r.kappa = chi_to_kappa(chi);
  r.hecke = hecke_params(r.kappa, ell);
  r.simple_count = catalog.count_monodromic(chi);
  r.pell_count = catalog.pell_count();
  r.orbit_count = catalog.size();

  const RootSet roots = generate_Rn(n, ell);
  for (const auto& a : roots.roots) {
    Rational v = pair(chi, a);
    if (is_integer(v)) r.violated_roots.push_back({a, v});
  }

  const CriterionInputs in{n, ell, chi, roots, r.kappa, r.hecke, r.simple_count, r.pell_count};
  r.verdict_roots = criteria.roots(in);
  r.verdict_hecke = criteria.hecke(in);
  r.verdict_counting = criteria.counting(in);
  if (r.verdict_roots != r.verdict_hecke || r.verdict_roots != r.verdict_counting)
    throw CriteriaDisagreement(n, ell, chi, r.verdict_roots, r.verdict_hecke, r.verdict_counting);
  return r;
}

inline SemisimplicityReport semisimplicity_report(int n, int ell, const RationalCharacter& chi) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_character_length(chi, ell);
  return semisimplicity_report(OrbitCatalog(n, ell), chi);
}

struct Hyperplane {
  DimVector root;
  std::string equation;
};

/// "chi . alpha in Z" written out in chi_0..chi_{ell-1}, e.g. "χ_0 + 2χ_1 ∈ Z".
inline std::string hyperplane_equation(const DimVector& alpha) {
  std::string s;
  for (int i = 0; i < alpha.ell(); ++i) {
    const auto c = alpha[i];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += std::to_string(mag);
    s += "χ_" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  return s + " ∈ Z";
}

inline std::vector<Hyperplane> hyperplane_listing(int n, int ell) {
  std::vector<Hyperplane> out;
  for (auto& a : generate_Rn(n, ell).roots) {
    auto eq = hyperplane_equation(a);
    out.push_back({std::move(a), std::move(eq)});
  }
  return out;
}

struct OrbitRecord {
  OrbitLabel label;
  SummandDecomposition decomposition;
  FGAbelianGroup pi1;
  std::optional<bool> monodromic;
};

struct OrbitReport {
  int n = 0;
  int ell = 0;
  std::optional<RationalCharacter> chi;
  std::vector<OrbitRecord> records;
  std::size_t total_orbits = 0;
  std::optional<std::size_t> total_monodromic;
  std::size_t pell_count = 0;
};

inline OrbitReport orbit_report(const OrbitCatalog& catalog, const std::optional<RationalCharacter>& chi) {
  OrbitReport rep;
  rep.n = catalog.n();
  rep.ell = catalog.ell();
  rep.chi = chi;
  std::vector<bool> flags;
  if (chi) flags = catalog.monodromic_flags(*chi);
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    OrbitRecord rec{catalog.labels()[k], catalog.decompositions()[k], fundamental_group(catalog.labels()[k]),
                    std::nullopt};
    if (chi) rec.monodromic = flags[k];
    rep.records.push_back(std::move(rec));
  }
  rep.total_orbits = catalog.size();
  if (chi) rep.total_monodromic = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
  rep.pell_count = catalog.pell_count();
  return rep;
}

inline OrbitReport orbit_report(int n, int ell, const std::optional<RationalCharacter>& chi) {
  if (chi) check_character_length(*chi, ell);
  return orbit_report(OrbitCatalog(n, ell), chi);
}

// JSON ----------------------------------------------------------------------

inline Json to_json_value(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

inline Json to_json(const FGAbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors) factors.push_back(to_json_value(d));
  return Json{{"free_rank", g.free_rank}, {"invariant_factors", factors}};
}

inline Json to_json(const RationalCharacter& chi) {
  Json a = Json::array();
  for (const auto& v : chi.values()) a.push_back(to_string(v));
  return a;
}

inline Json to_json(const KappaParams& kp) {
  Json a = Json::array();
  for (const auto& v : kp.kappa) a.push_back(to_string(v));
  return Json{{"k00", to_string(kp.k00)}, {"k01", to_string(kp.k01)}, {"kappa", a}};
}

inline Json to_json(const HeckeParams& h) {
  Json u = Json::array();
  for (const auto& x : h.u) u.push_back(x.to_string());
  return Json{{"q0", h.q0.to_string()}, {"q1", h.q1.to_string()}, {"q", h.q().to_string()}, {"u", u}};
}

inline Json to_json(const SemisimplicityReport& r) {
  Json violated = Json::array();
  for (const auto& v : r.violated_roots)
    violated.push_back(Json{{"root", v.root.to_string()}, {"value", to_string(v.value)}});
  return Json{{"n", r.n},
              {"ell", r.ell},
              {"chi", to_json(r.chi)},
              {"verdict_roots", r.verdict_roots},
              {"verdict_hecke", r.verdict_hecke},
              {"verdict_counting", r.verdict_counting},
              {"violated_roots", violated},
              {"simple_count", r.simple_count},
              {"pell_count", r.pell_count},
              {"orbit_count", r.orbit_count},
              {"chi_integral", r.chi_integral},
              {"kappa", to_json(r.kappa)},
              {"hecke", to_json(r.hecke)}};
}

inline Json to_json(const OrbitRecord& rec) {
  Json summands = Json::array();
  for (const auto& s : rec.decomposition.strings)
    summands.push_back(Json{{"start", s.start}, {"row", s.row}, {"dim_vector", s.dim_vector.to_string()}});
  Json j{{"lambda", rec.label.lambda().to_string()},
         {"nu", rec.label.nu().to_string()},
         {"summands", summands},
         {"pi1", to_json(rec.pi1)}};
  if (rec.monodromic) j["monodromic_for_chi"] = *rec.monodromic;
  return j;
}

inline Json to_json(const OrbitReport& rep) {
  Json records = Json::array();
  for (const auto& rec : rep.records) records.push_back(to_json(rec));
  Json totals{{"orbits", rep.total_orbits}};
  if (rep.total_monodromic) totals["monodromic"] = *rep.total_monodromic;
  totals["pell"] = rep.pell_count;
  Json j{{"n", rep.n}, {"ell", rep.ell}};
  if (rep.chi) j["chi"] = to_json(*rep.chi);
  j["orbits"] = records;
  j["totals"] = totals;
  return j;
}

inline Json to_json(const std::vector<Hyperplane>& hs, int n, int ell) {
  Json roots = Json::array();
  for (const auto& h : hs) roots.push_back(Json{{"root", h.root.to_string()}, {"equation", h.equation}});
  return Json{{"n", n}, {"ell", ell}, {"count", hs.size()}, {"roots", roots}};
}

}  // namespace nilcone
