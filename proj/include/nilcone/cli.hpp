#pragma once

// Subcommand dispatch for the nilcone command-line tool. Argument parsing lives
// in tools/; this header only needs a filled CliConfig.

#include "nilcone/orbits.hpp"
#include "nilcone/params.hpp"
#include "nilcone/partitions.hpp"
#include "nilcone/report.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcone::cli {

enum class Subcommand { orbits, pi1, simples, semisimple, hyperplanes, translate };
enum class Format { pretty, json, tsv };

enum ExitCode : int {
  kSemisimple = 0,
  kOk = 0,
  kNotSemisimple = 1,
  kInputError = 2,
  kCriteriaDisagreement = 3,
};

struct CliConfig {
  Subcommand subcommand = Subcommand::orbits;
  std::optional<int> n;
  std::optional<int> ell;
  std::optional<std::string> chi;
  std::optional<std::string> kappa;
  std::optional<std::string> lambda;
  std::optional<std::string> nu;
  Format format = Format::pretty;
  std::optional<std::uint64_t> seed;
};

/// Bad flag combination or value; reported with exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::optional<Subcommand> subcommand_from_string(const std::string& s) {
  if (s == "orbits") return Subcommand::orbits;
  if (s == "pi1") return Subcommand::pi1;
  if (s == "simples") return Subcommand::simples;
  if (s == "semisimple") return Subcommand::semisimple;
  if (s == "hyperplanes") return Subcommand::hyperplanes;
  if (s == "translate") return Subcommand::translate;
  return std::nullopt;
}

inline std::optional<Format> format_from_string(const std::string& s) {
  if (s == "pretty") return Format::pretty;
  if (s == "json") return Format::json;
  if (s == "tsv") return Format::tsv;
  return std::nullopt;
}

/// One chi coordinate with denominator <= 12, numerator in [-24, 24].
inline RationalCharacter sample_character(int ell, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-24, 24);
  std::uniform_int_distribution<int> den(1, 12);
  std::vector<Rational> v;
  for (int i = 0; i < ell; ++i) v.emplace_back(num(rng), den(rng));
  return RationalCharacter(std::move(v));
}

namespace detail {

inline int require_ell(const CliConfig& c) {
  if (!c.ell) throw UsageError("missing -l/--ell");
  if (*c.ell < 1) throw UsageError("ell must be >= 1");
  return *c.ell;
}

inline int require_n(const CliConfig& c, int minimum) {
  if (!c.n) throw UsageError("missing -n");
  if (*c.n < minimum) throw UsageError("n must be >= " + std::to_string(minimum));
  return *c.n;
}

/// chi from --chi or --kappa (mutually exclusive), or nullopt when neither is given.
inline std::optional<RationalCharacter> character_of(const CliConfig& c, int ell) {
  if (c.chi && c.kappa) throw UsageError("--chi and --kappa are mutually exclusive");
  if (c.chi) {
    auto chi = RationalCharacter::parse(*c.chi);
    if (chi.ell() != ell)
      throw UsageError("--chi has " + std::to_string(chi.ell()) + " entries, expected ell = " + std::to_string(ell));
    return chi;
  }
  if (c.kappa) {
    auto kp = KappaParams::parse(*c.kappa);
    if (kp.ell() != ell)
      throw UsageError("--kappa has " + std::to_string(kp.ell()) + " kappa entries, expected ell = " +
                       std::to_string(ell));
    return kappa_to_chi(kp, ell);
  }
  return std::nullopt;
}

inline std::string summands_text(const SummandDecomposition& dec) {
  std::string s;
  for (const auto& st : dec.strings) {
    if (!s.empty()) s += ' ';
    s += std::to_string(st.start) + ":" + std::to_string(st.row) + ":" + st.dim_vector.to_string();
  }
  return s.empty() ? "-" : s;
}

inline std::string pad(std::string s, std::size_t width) {
  // width counts bytes; all padded columns are ASCII
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }
inline const char* bool_text(bool b) { return b ? "true" : "false"; }

inline int run_orbits(const CliConfig& c, std::ostream& out) {
  const int ell = require_ell(c);
  const int n = require_n(c, 0);
  auto chi = character_of(c, ell);
  auto rep = orbit_report(n, ell, chi);

  switch (c.format) {
    case Format::json:
      out << to_json(rep).dump(2) << '\n';
      break;
    case Format::tsv:
      out << "lambda\tnu\tsummands\tpi1" << (chi ? "\tmonodromic" : "") << '\n';
      for (const auto& r : rep.records) {
        out << r.label.lambda().to_string() << '\t' << r.label.nu().to_string() << '\t'
            << summands_text(r.decomposition) << '\t' << r.pi1.to_string();
        if (r.monodromic) out << '\t' << bool_text(*r.monodromic);
        out << '\n';
      }
      out << "#totals\torbits=" << rep.total_orbits;
      if (rep.total_monodromic) out << "\tmonodromic=" << *rep.total_monodromic;
      out << "\tpell=" << rep.pell_count << '\n';
      break;
    case Format::pretty: {
      std::size_t wl = 6, wn = 2, ws = 8;
      for (const auto& r : rep.records) {
        wl = std::max(wl, r.label.lambda().to_string().size());
        wn = std::max(wn, r.label.nu().to_string().size());
        ws = std::max(ws, summands_text(r.decomposition).size());
      }
      out << "Orbits of the enhanced cyclic nilpotent cone, n = " << n << ", ell = " << ell;
      if (chi) out << ", chi = " << chi->to_string();
      out << '\n';
      out << pad("lambda", wl) << "  " << pad("nu", wn) << "  " << pad("summands", ws) << "  "
          << (chi ? pad("pi1", 10) + "  monodromic" : std::string("pi1")) << '\n';
      for (const auto& r : rep.records) {
        out << pad(r.label.lambda().to_string(), wl) << "  " << pad(r.label.nu().to_string(), wn) << "  "
            << pad(summands_text(r.decomposition), ws) << "  ";
        if (r.monodromic)
          out << pad(r.pi1.to_string(), 10) << "  " << yes_no(*r.monodromic);
        else
          out << r.pi1.to_string();
        out << '\n';
      }
      out << "|Q(n,ell)| = " << rep.total_orbits << '\n';
      if (rep.total_monodromic) out << "|Q_chi(n,ell)| = " << *rep.total_monodromic << '\n';
      out << "|P_ell(n)| = " << rep.pell_count << '\n';
      break;
    }
  }
  return kOk;
}

inline int run_pi1(const CliConfig& c, std::ostream& out) {
  const int ell = require_ell(c);
  if (!c.lambda) throw UsageError("missing --lambda");
  if (!c.nu) throw UsageError("missing --nu");
  auto lambda = Partition::parse(*c.lambda);
  auto nu = MultiPartition::parse(*c.nu);
  if (nu.ell() != ell)
    throw UsageError("--nu has " + std::to_string(nu.ell()) + " components, expected ell = " + std::to_string(ell));
  std::optional<OrbitLabel> label;
  try {
    label = c.n ? OrbitLabel(lambda, nu, *c.n, ell) : OrbitLabel::infer(lambda, nu);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto chi = character_of(c, ell);
  auto dec = decompose(*label);
  auto g = fundamental_group(*label);
  std::optional<bool> flag;
  if (chi) flag = admits_monodromic_local_system(*label, *chi);

  switch (c.format) {
    case Format::json: {
      OrbitRecord rec{*label, dec, g, flag};
      Json j = to_json(rec);
      Json wrapped{{"n", label->n()}, {"ell", ell}};
      for (auto it = j.begin(); it != j.end(); ++it) wrapped[it.key()] = it.value();
      wrapped["pi1_text"] = g.to_string();
      out << wrapped.dump(2) << '\n';
      break;
    }
    case Format::tsv:
      out << "lambda\tnu\tsummands\tpi1" << (flag ? "\tmonodromic" : "") << '\n';
      out << lambda.to_string() << '\t' << nu.to_string() << '\t' << summands_text(dec) << '\t' << g.to_string();
      if (flag) out << '\t' << bool_text(*flag);
      out << '\n';
      break;
    case Format::pretty:
      out << g.to_string() << '\n';
      if (flag) out << "monodromic local system for chi = " << chi->to_string() << ": " << yes_no(*flag) << '\n';
      break;
  }
  return kOk;
}

inline int run_simples(const CliConfig& c, std::ostream& out) {
  const int ell = require_ell(c);
  const int n = require_n(c, 0);
  auto chi = character_of(c, ell);
  if (!chi) throw UsageError("simples needs --chi or --kappa");
  OrbitCatalog catalog(n, ell);
  auto flags = catalog.monodromic_flags(*chi);
  std::vector<const OrbitLabel*> simples;
  for (std::size_t k = 0; k < catalog.size(); ++k)
    if (flags[k]) simples.push_back(&catalog.labels()[k]);

  switch (c.format) {
    case Format::json: {
      Json list = Json::array();
      for (const auto* l : simples) list.push_back(Json{{"lambda", l->lambda().to_string()}, {"nu", l->nu().to_string()}});
      Json j{{"n", n},
             {"ell", ell},
             {"chi", to_json(*chi)},
             {"count", simples.size()},
             {"orbit_count", catalog.size()},
             {"pell_count", catalog.pell_count()},
             {"simples", list}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::tsv:
      out << "lambda\tnu\n";
      for (const auto* l : simples) out << l->lambda().to_string() << '\t' << l->nu().to_string() << '\n';
      break;
    case Format::pretty:
      out << "Simple objects for n = " << n << ", ell = " << ell << ", chi = " << chi->to_string() << '\n';
      for (const auto* l : simples) out << "  " << l->to_string() << '\n';
      out << "count = " << simples.size() << " (|Q(n,ell)| = " << catalog.size()
          << ", |P_ell(n)| = " << catalog.pell_count() << ")\n";
      break;
  }
  return kOk;
}

inline int run_semisimple(const CliConfig& c, std::ostream& out) {
  const int ell = require_ell(c);
  const int n = require_n(c, 1);
  auto chi = character_of(c, ell);
  if (!chi) {
    if (!c.seed) throw UsageError("semisimple needs --chi, --kappa or --seed");
    chi = sample_character(ell, *c.seed);
  }
  auto r = semisimplicity_report(n, ell, *chi);

  switch (c.format) {
    case Format::json:
      out << to_json(r).dump(2) << '\n';
      break;
    case Format::tsv: {
      out << "n\tell\tchi\tverdict_roots\tverdict_hecke\tverdict_counting\tsimple_count\tpell_count\torbit_count"
             "\tchi_integral\tviolated_roots\n";
      std::string violated;
      for (const auto& v : r.violated_roots) {
        if (!violated.empty()) violated += ' ';
        violated += v.root.to_string() + "=" + to_string(v.value);
      }
      out << r.n << '\t' << r.ell << '\t' << r.chi.to_string() << '\t' << bool_text(r.verdict_roots) << '\t'
          << bool_text(r.verdict_hecke) << '\t' << bool_text(r.verdict_counting) << '\t' << r.simple_count << '\t'
          << r.pell_count << '\t' << r.orbit_count << '\t' << bool_text(r.chi_integral) << '\t'
          << (violated.empty() ? "-" : violated) << '\n';
      break;
    }
    case Format::pretty: {
      out << "n = " << r.n << ", ell = " << r.ell << ", chi = " << r.chi.to_string() << '\n';
      out << "semi-simple: " << yes_no(r.semisimple()) << '\n';
      out << "  roots criterion:    " << bool_text(r.verdict_roots) << '\n';
      out << "  hecke criterion:    " << bool_text(r.verdict_hecke) << '\n';
      out << "  counting criterion: " << bool_text(r.verdict_counting) << " (simple objects " << r.simple_count
          << ", |P_ell(n)| = " << r.pell_count << ", |Q(n,ell)| = " << r.orbit_count << ")\n";
      out << "chi integral: " << yes_no(r.chi_integral) << '\n';
      if (!r.violated_roots.empty()) {
        out << "violated roots (chi . alpha in Z):\n";
        for (const auto& v : r.violated_roots) out << "  " << v.root.to_string() << "  -> " << to_string(v.value) << '\n';
      }
      out << "kappa: k00 = " << to_string(r.kappa.k00) << ", k01 = " << to_string(r.kappa.k01) << ", kappa = ";
      for (std::size_t i = 0; i < r.kappa.kappa.size(); ++i) out << (i ? "," : "") << to_string(r.kappa.kappa[i]);
      out << '\n';
      out << "hecke (t in exp(2 pi i t)): q0 = " << r.hecke.q0.to_string() << ", q1 = " << r.hecke.q1.to_string()
          << ", q = " << r.hecke.q().to_string() << ", u = ";
      for (std::size_t i = 0; i < r.hecke.u.size(); ++i) out << (i ? "," : "") << r.hecke.u[i].to_string();
      out << '\n';
      break;
    }
  }
  return r.semisimple() ? kSemisimple : kNotSemisimple;
}

inline int run_hyperplanes(const CliConfig& c, std::ostream& out) {
  const int ell = require_ell(c);
  const int n = require_n(c, 1);
  auto hs = hyperplane_listing(n, ell);
  switch (c.format) {
    case Format::json:
      out << to_json(hs, n, ell).dump(2) << '\n';
      break;
    case Format::tsv:
      out << "root\tequation\n";
      for (const auto& h : hs) out << h.root.to_string() << '\t' << h.equation << '\n';
      break;
    case Format::pretty:
      out << "R_n for n = " << n << ", ell = " << ell << " (" << hs.size() << " roots)\n";
      for (const auto& h : hs) out << "  " << pad(h.root.to_string(), 4 * static_cast<std::size_t>(ell) + 2) << h.equation << '\n';
      break;
  }
  return kOk;
}

inline int run_translate(const CliConfig& c, std::ostream& out) {
  const int ell = require_ell(c);
  if (!c.chi && !c.kappa) throw UsageError("translate needs --chi or --kappa");
  auto chi = *character_of(c, ell);
  auto kp = chi_to_kappa(chi);
  auto h = hecke_params(kp, ell);
  switch (c.format) {
    case Format::json:
      out << Json{{"ell", ell}, {"chi", to_json(chi)}, {"kappa", to_json(kp)}, {"hecke", to_json(h)}}.dump(2) << '\n';
      break;
    case Format::tsv: {
      out << "chi\tk00\tk01\tkappa\tq0\tq1\tq\tu\n";
      std::string kap, u;
      for (std::size_t i = 0; i < kp.kappa.size(); ++i) kap += (i ? "," : "") + to_string(kp.kappa[i]);
      for (std::size_t i = 0; i < h.u.size(); ++i) u += (i ? "," : "") + h.u[i].to_string();
      out << chi.to_string() << '\t' << to_string(kp.k00) << '\t' << to_string(kp.k01) << '\t' << kap << '\t'
          << h.q0.to_string() << '\t' << h.q1.to_string() << '\t' << h.q().to_string() << '\t' << u << '\n';
      break;
    }
    case Format::pretty: {
      out << "chi = " << chi.to_string() << '\n';
      out << "kappa: k00 = " << to_string(kp.k00) << ", k01 = " << to_string(kp.k01) << ", kappa = ";
      for (std::size_t i = 0; i < kp.kappa.size(); ++i) out << (i ? "," : "") << to_string(kp.kappa[i]);
      out << '\n';
      out << "hecke (t in exp(2 pi i t)): q0 = " << h.q0.to_string() << ", q1 = " << h.q1.to_string()
          << ", q = " << h.q().to_string() << ", u = ";
      for (std::size_t i = 0; i < h.u.size(); ++i) out << (i ? "," : "") << h.u[i].to_string();
      out << '\n';
      break;
    }
  }
  return kOk;
}

}  // namespace detail

/// Dispatches one subcommand. Input problems go to `err` with exit code 2; a
/// disagreement between semi-simplicity criteria exits with 3.
inline int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  // buffer so that a failing command prints nothing to `out`
  std::ostringstream buf;
  int code = kOk;
  try {
    switch (config.subcommand) {
      case Subcommand::orbits: code = detail::run_orbits(config, buf); break;
      case Subcommand::pi1: code = detail::run_pi1(config, buf); break;
      case Subcommand::simples: code = detail::run_simples(config, buf); break;
      case Subcommand::semisimple: code = detail::run_semisimple(config, buf); break;
      case Subcommand::hyperplanes: code = detail::run_hyperplanes(config, buf); break;
      case Subcommand::translate: code = detail::run_translate(config, buf); break;
    }
  } catch (const CriteriaDisagreement& e) {
    err << "error: " << e.what() << '\n';
    return kCriteriaDisagreement;
  } catch (const std::invalid_argument& e) {
    // UsageError, ParseError, DimensionError
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  out << buf.str();
  return code;
}

}  // namespace nilcone::cli
