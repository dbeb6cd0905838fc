#pragma once

// Symbolic (g,K)-module calculator for the q-fold cover of SL2(R):
// classification data, Casimir eigenvalues, complementary modules, Ext^1,
// principal-series composition and truncated ladder matrices. Everything
// here is exact rational arithmetic.

#include <string>
#include <vector>

#include "sqrtn/rational.hpp"

namespace sqrtn::gk {

/// K-weight zeta in q^{-1} Z, kept as numerator / cover degree.
struct KWeight {
  long long num = 0;
  long long q = 1;

  KWeight() = default;
  KWeight(long long numerator, long long cover_degree);
  explicit KWeight(const Rat& v) : num(v.numerator()), q(v.denominator()) {}

  Rat value() const { return Rat(num, q); }
  KWeight shifted(long long by) const { return KWeight(value() + Rat(by)); }

  friend bool operator==(const KWeight& a, const KWeight& b) {
    return a.num * b.q == b.num * a.q;
  }
};

/// zeta lies in zeta0 + 2Z?
bool in_coset(const Rat& zeta, const Rat& zeta0);

enum class Kind { LowestWeight, HighestWeight, DoublyInfinite, FiniteDim };

std::string kind_name(Kind k);

struct GkModule {
  Kind kind = Kind::LowestWeight;
  Rat weight;        // LW/HW: the extreme weight; DI: coset representative in [0,2)
  Rat casimir;       // stored for DI, derived for the other kinds
  long long dim = 0; // FiniteDim only

  static GkModule lowest(const Rat& zeta);
  static GkModule highest(const Rat& zeta);
  /// Validates that the (coset, casimir) pair describes an irreducible module.
  static GkModule doubly_infinite(const Rat& coset, const Rat& casimir);
  static GkModule finite(long long dim);

  bool is_irreducible() const;
  bool infinite_dimensional() const { return kind != Kind::FiniteDim; }

  /// Isomorphism-class equality: (kind, weight/coset, casimir, dim).
  friend bool operator==(const GkModule& a, const GkModule& b);
};

/// C acts by: zeta(zeta-2)/2 (lowest), zeta(zeta+2)/2 (highest),
/// stored value (doubly infinite), (xi^2-1)/2 for FiniteDim(xi).
Rat casimir_eigenvalue(const GkModule& m);

struct ComplementReport {
  GkModule module;
  bool finite_dimensional = false;  // complement realized by a FiniteDim module
};

/// W^cl per the classification; rejects FiniteDim input. When the would-be
/// extreme weight matches a finite-dimensional pattern the actual irreducible
/// is FiniteDim and the report says so.
ComplementReport complement_report(const GkModule& w);
GkModule complementary_module(const GkModule& w);

/// dim Ext^1(w, v) for irreducible infinite-dimensional w and irreducible v:
/// 1 iff v is the complementary module, else 0.
int ext1_dim(const GkModule& w, const GkModule& v);

struct PrincipalSeries {
  KWeight zeta0;  // d(sigma) at kappa
  Rat xi;         // a_y acts by y^xi
  Rat casimir() const { return (xi * xi - Rat(1)) / 2; }
};

enum class PsCase { A, B, C };

struct CompositionFactor {
  GkModule module;
  enum class Role { Irreducible, Sub, Quotient, Summand } role;
};

struct CompositionReport {
  PsCase tag = PsCase::A;
  std::vector<CompositionFactor> factors;
  bool degenerate_xi_zero = false;  // case C with the dim-0 finite factor excluded
};

/// Classify H(zeta0, xi) by membership of 1+xi in +-zeta0 + 2Z.
CompositionReport principal_series_structure(const PrincipalSeries& ps);

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_zeros(int n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatMat rat_sub(const RatMat& a, const RatMat& b);

struct LadderMatrices {
  RatMat P, M, Kappa;
  std::vector<Rat> weights;
};

/// Matrices of p, m, kappa on the window zeta_min, zeta_min+2, ...,
/// zeta_min+2(count-1); raising/lowering out of the window maps to zero.
LadderMatrices ps_ladder_matrices(const PrincipalSeries& ps, const KWeight& zeta_min,
                                  int count);

/// Ext^1 recomputed from the weight criterion V_{zeta-2}/m V_zeta on a ladder
/// truncation of v (length >= 4); used as an independent check of ext1_dim.
int ext1_dim_via_ladder(const GkModule& w, const GkModule& v, int window);

}  // namespace sqrtn::gk
