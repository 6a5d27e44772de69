#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "lac/ring.hpp"

namespace lac {

class Algebroid;
struct PoissonStructure;
using AlgebroidPtr = std::shared_ptr<const Algebroid>;
using PoissonPtr = std::shared_ptr<const PoissonStructure>;

enum class Origin { User, Canonical, TangentLift, CotangentLift, PoissonCotangent };

// (i, j, k) with i < j, 0-based: the coefficient c_ij^k.
using StructureMap = std::map<std::tuple<int, int, int>, Poly>;

// Sparse vector over a basis: (index, coefficient) pairs, sorted by index.
using SparseVec = std::vector<std::pair<int, Poly>>;

class Algebroid {
 public:
  const Chart& chart() const { return chart_; }
  std::size_t dim() const { return chart_.size(); }
  std::size_t rank() const { return fibers_.size(); }
  const std::vector<std::string>& fibers() const { return fibers_; }
  const std::string& fiber(std::size_t i) const { return fibers_.at(i); }

  // δ_i^a
  const Poly& anchor(std::size_t i, std::size_t a) const { return anchor_[i][a]; }
  // c_ij^k for all i, j (antisymmetric).
  const Poly& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * rank() + j) * rank() + k]; }
  const SparseVec& anchor_row(std::size_t i) const { return anchor_nz_[i]; }
  const SparseVec& bracket(std::size_t i, std::size_t j) const { return c_nz_[i * rank() + j]; }

  // α(e_i)(f) = δ_i^a ∂_a f
  Poly act(std::size_t i, const Poly& f) const;

  Origin origin() const { return origin_; }
  // The algebroid a lift was built from; null for user and canonical ones,
  // and once the source has been released.
  AlgebroidPtr source() const { return source_.lock(); }
  // Identity anchor, zero brackets and fibers named after coordinates.
  bool is_canonical() const { return canonical_; }
  const std::string& fingerprint() const { return fingerprint_; }

  // Display names of basis elements: ∂x / dx for canonical algebroids,
  // e<label> / e*<label> otherwise.
  std::string vector_name(std::size_t i) const;
  std::string form_name(std::size_t i) const;

  // Names of the dual fiber coordinates ξ_i and the total-space coordinates y^i.
  std::string dual_coordinate(std::size_t i) const;
  std::string total_coordinate(std::size_t i) const;

  // Derived objects, built once and shared so that owners compare by pointer.
  AlgebroidPtr base_canonical() const;   // canonical algebroid of the base chart
  AlgebroidPtr dual_canonical() const;   // canonical algebroid of the chart (x, ξ)
  AlgebroidPtr total_canonical() const;  // canonical algebroid of the chart (x, y)
  AlgebroidPtr tangent() const;          // tangent lift
  AlgebroidPtr cotangent() const;        // cotangent lift
  AlgebroidPtr tangent_canonical() const;  // canonical algebroid of the tangent lift's base
  PoissonPtr linear_poisson() const;

  struct Data {
    Chart chart;
    std::vector<std::string> fibers;
    std::vector<std::vector<Poly>> anchor;  // rank × dim
    std::vector<Poly> c;                    // rank³, antisymmetric in the first pair
  };

  // Validates and freezes. Throws DimensionMismatch, EmptyChart,
  // AnchorNotMorphism or JacobiViolation.
  static AlgebroidPtr make(Data data, Origin origin = Origin::User, AlgebroidPtr source = nullptr);

  Algebroid(const Algebroid&) = delete;
  Algebroid& operator=(const Algebroid&) = delete;
  ~Algebroid();

 private:
  Algebroid() = default;
  struct Cache;

  Chart chart_;
  std::vector<std::string> fibers_;
  std::vector<std::vector<Poly>> anchor_;
  std::vector<Poly> c_;
  std::vector<SparseVec> anchor_nz_;
  std::vector<SparseVec> c_nz_;
  Origin origin_ = Origin::User;
  std::weak_ptr<const Algebroid> source_;
  bool canonical_ = false;
  std::string fingerprint_;
  std::unique_ptr<Cache> cache_;
  std::weak_ptr<const Algebroid> self_;
};

bool same_owner(const Algebroid& a, const Algebroid& b);
inline bool same_owner(const AlgebroidPtr& a, const AlgebroidPtr& b) { return a == b || same_owner(*a, *b); }

AlgebroidPtr build_algebroid(const Chart& base, const std::vector<std::string>& fibers,
                             const std::vector<std::vector<Poly>>& anchor, const StructureMap& structure);
AlgebroidPtr canonical_algebroid(const Chart& chart);
AlgebroidPtr tangent_lift(const AlgebroidPtr& a);
AlgebroidPtr cotangent_lift(const AlgebroidPtr& a);

// Vector fields on a chart as dense component lists.
using VectorField = std::vector<Poly>;
VectorField vector_field_bracket(const VectorField& u, const VectorField& v);
std::string to_string(const VectorField& v, const Chart& chart);

// Fresh name: `want` if unused, otherwise want2, want3, ...
std::string unique_name(const std::string& want, const std::vector<std::string>& used);

}  // namespace lac
