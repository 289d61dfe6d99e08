#pragma once

// Orbit labels (lambda; nu) of the enhanced cyclic nilpotent cone, the
// dimension vectors of their indecomposable summands, fundamental groups and
// the monodromic local system test.

#include "nilcone/abelian.hpp"
#include "nilcone/character.hpp"
#include "nilcone/dim_vector.hpp"
#include "nilcone/partitions.hpp"
#include "nilcone/rootlattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcone {

/// A pair (lambda; nu) with res(lambda) + sres(nu) = n delta.
class OrbitLabel {
 public:
  /// Validates the residue equation; throws std::invalid_argument otherwise.
  OrbitLabel(Partition lambda, MultiPartition nu, int n, int ell)
      : lambda_(std::move(lambda)), nu_(std::move(nu)), n_(n), ell_(ell) {
    if (ell_ < 1) throw std::invalid_argument("ell must be positive");
    if (n_ < 0) throw std::invalid_argument("n must be nonnegative");
    if (nu_.ell() != ell_)
      throw DimensionError("nu has " + std::to_string(nu_.ell()) + " components, expected " + std::to_string(ell_));
    if (residue(lambda_, ell_) + shifted_residue(nu_, ell_) != n_ * delta(ell_))
      throw std::invalid_argument("(" + lambda_.to_string() + ";" + nu_.to_string() +
                                  ") does not satisfy res(lambda) + sres(nu) = n delta for n = " +
                                  std::to_string(n_));
  }

  /// Infers n from |lambda| + |nu| = n ell.
  static OrbitLabel infer(Partition lambda, MultiPartition nu) {
    const int ell = nu.ell();
    if (ell < 1) throw std::invalid_argument("nu must have at least one component");
    const int total = lambda.size() + nu.size();
    if (total % ell != 0)
      throw std::invalid_argument("|lambda| + |nu| = " + std::to_string(total) + " is not a multiple of ell = " +
                                  std::to_string(ell));
    return OrbitLabel(std::move(lambda), std::move(nu), total / ell, ell);
  }

  const Partition& lambda() const { return lambda_; }
  const MultiPartition& nu() const { return nu_; }
  int n() const { return n_; }
  int ell() const { return ell_; }

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;

  /// `([2];[1];[])` style: lambda then the components of nu.
  std::string to_string() const { return "(" + lambda_.to_string() + ";" + nu_.to_string() + ")"; }

 private:
  Partition lambda_;
  MultiPartition nu_;
  int n_ = 0;
  int ell_ = 1;
};

/// Indecomposable summand coming from row `row` of nu^(start).
struct StringSummand {
  int start = 0;
  int row = 1;
  DimVector dim_vector;

  friend bool operator==(const StringSummand&, const StringSummand&) = default;
};

struct SummandDecomposition {
  DimVector framed;  ///< eps_inf + res(lambda)
  std::vector<StringSummand> strings;

  DimVector total() const {
    DimVector t = framed;
    for (const auto& s : strings) t += s.dim_vector;
    return t;
  }
};

/// Row j of nu^(i) contributes sum over its boxes of sigma^(i + ct(box)). The
/// framed summand is eps_inf + res(lambda), so the total is eps_inf + n delta.
inline SummandDecomposition decompose(const OrbitLabel& label) {
  const int ell = label.ell();
  SummandDecomposition out{residue(label.lambda(), ell).with_framing(1), {}};
  for (int i = 0; i < ell; ++i) {
    const Partition& p = label.nu()[i];
    for (int j = 1; j <= p.length(); ++j) {
      auto v = DimVector::zero(ell);
      for (int c = 1; c <= p.row(j); ++c) v[detail::mod(i + content({c, j}), ell)] += 1;
      out.strings.push_back({i, j, std::move(v)});
    }
  }
  return out;
}

/// Distinct string dimension vectors, in first-appearance order.
inline std::vector<DimVector> distinct_string_vectors(const SummandDecomposition& dec) {
  std::vector<DimVector> cols;
  std::set<DimVector> seen;
  for (const auto& s : dec.strings)
    if (seen.insert(s.dim_vector).second) cols.push_back(s.dim_vector);
  return cols;
}

/// Cokernel of Z^{k-1} -> Z^ell whose columns are the non-framed summands.
inline FGAbelianGroup fundamental_group(const OrbitLabel& label) {
  auto cols = distinct_string_vectors(decompose(label));
  std::vector<std::vector<DimVector::value_type>> raw;
  raw.reserve(cols.size());
  for (const auto& c : cols) raw.push_back(c.coords());
  return cokernel(IntMatrix::from_columns(static_cast<std::size_t>(label.ell()), raw));
}

/// True iff chi pairs integrally with every non-framed summand.
inline bool admits_monodromic_local_system(const OrbitLabel& label, const RationalCharacter& chi) {
  if (chi.ell() != label.ell())
    throw DimensionError("character has length " + std::to_string(chi.ell()) + ", label has ell = " +
                         std::to_string(label.ell()));
  for (const auto& s : decompose(label).strings)
    if (!is_integral_pairing(chi, s.dim_vector)) return false;
  return true;
}

/// Q(n, ell). Order: |lambda| descending, lambda reverse-lex, then nu
/// lexicographic over components (each size-descending, reverse-lex).
inline std::vector<OrbitLabel> enumerate_orbits(int n, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const int total = n * ell;

  struct Entry {
    Partition p;
    DimVector res;
    int size;
  };
  std::vector<Entry> pool;  // size descending, reverse-lex within a size
  for (int k = total; k >= 0; --k)
    for (auto& p : partitions_of(k)) {
      auto r = residue(p, ell);
      pool.push_back({std::move(p), std::move(r), k});
    }

  // rotated residues, per component shift
  std::vector<std::vector<DimVector>> rotated(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i)
    for (const auto& e : pool) rotated[static_cast<std::size_t>(i)].push_back(e.res.rotated(i));

  const DimVector target = n * delta(ell);
  std::vector<OrbitLabel> out;
  std::vector<Partition> comps;

  auto fill = [&](auto&& self, const Partition& lambda, int component, const DimVector& remaining,
                  int remaining_size) -> void {
    if (component == ell) {
      if (remaining_size == 0) out.emplace_back(lambda, MultiPartition(comps), n, ell);
      return;
    }
    const auto& rot = rotated[static_cast<std::size_t>(component)];
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (pool[k].size > remaining_size) continue;
      if (component == ell - 1 && pool[k].size != remaining_size) continue;
      if (!rot[k].dominated_by(remaining)) continue;
      comps.push_back(pool[k].p);
      self(self, lambda, component + 1, remaining - rot[k], remaining_size - pool[k].size);
      comps.pop_back();
    }
  };

  for (const auto& e : pool) {
    if (!e.res.dominated_by(target)) continue;
    fill(fill, e.p, 0, target - e.res, total - e.size);
  }
  return out;
}

/// Q_chi(n, ell): labels admitting a (G, chi)-monodromic local system.
inline std::vector<OrbitLabel> enumerate_Q_chi(int n, int ell, const RationalCharacter& chi) {
  if (chi.ell() != ell)
    throw DimensionError("character has length " + std::to_string(chi.ell()) + ", expected " + std::to_string(ell));
  std::vector<OrbitLabel> out;
  for (auto& label : enumerate_orbits(n, ell))
    if (admits_monodromic_local_system(label, chi)) out.push_back(std::move(label));
  return out;
}

/// Precomputed Q(n, ell) with decompositions, for repeated chi queries. Each
/// distinct string vector is paired with chi once per query.
class OrbitCatalog {
 public:
  OrbitCatalog(int n, int ell) : n_(n), ell_(ell), labels_(enumerate_orbits(n, ell)) {
    std::map<DimVector, std::size_t> index;
    for (const auto& label : labels_) {
      decompositions_.push_back(decompose(label));
      std::vector<std::size_t> ids;
      for (const auto& v : distinct_string_vectors(decompositions_.back())) {
        auto [it, inserted] = index.emplace(v, strings_.size());
        if (inserted) strings_.push_back(v);
        ids.push_back(it->second);
      }
      string_ids_.push_back(std::move(ids));
    }
    pell_count_ = enumerate_multipartitions(n, ell).size();
  }

  int n() const { return n_; }
  int ell() const { return ell_; }
  const std::vector<OrbitLabel>& labels() const { return labels_; }
  const std::vector<SummandDecomposition>& decompositions() const { return decompositions_; }
  std::size_t size() const { return labels_.size(); }
  /// |P_ell(n)|, by direct enumeration.
  std::size_t pell_count() const { return pell_count_; }

  std::vector<bool> monodromic_flags(const RationalCharacter& chi) const {
    if (chi.ell() != ell_)
      throw DimensionError("character has length " + std::to_string(chi.ell()) + ", expected " +
                           std::to_string(ell_));
    std::vector<char> integral(strings_.size());
    for (std::size_t k = 0; k < strings_.size(); ++k) integral[k] = is_integral_pairing(chi, strings_[k]);
    std::vector<bool> flags;
    flags.reserve(labels_.size());
    for (const auto& ids : string_ids_)
      flags.push_back(std::all_of(ids.begin(), ids.end(), [&](std::size_t id) { return integral[id] != 0; }));
    return flags;
  }

  std::size_t count_monodromic(const RationalCharacter& chi) const {
    auto flags = monodromic_flags(chi);
    return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
  }

 private:
  int n_;
  int ell_;
  std::vector<OrbitLabel> labels_;
  std::vector<SummandDecomposition> decompositions_;
  std::vector<DimVector> strings_;
  std::vector<std::vector<std::size_t>> string_ids_;
  std::size_t pell_count_ = 0;
};

}  // namespace nilcone
