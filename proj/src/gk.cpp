#include "sqrtn/gk.hpp"

#include <numeric>
#include <stdexcept>

namespace sqrtn::gk {

KWeight::KWeight(long long numerator, long long cover_degree)
    : num(numerator), q(cover_degree) {
  if (q < 1) throw std::invalid_argument("cover degree must be >= 1");
}

bool in_coset(const Rat& zeta, const Rat& zeta0) {
  Rat d = (zeta - zeta0) / 2;
  return is_integer(d);
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::LowestWeight: return "lowest";
    case Kind::HighestWeight: return "highest";
    case Kind::DoublyInfinite: return "doubly_infinite";
    case Kind::FiniteDim: return "finite";
  }
  return "?";
}

static Rat coset_rep(const Rat& zeta) {
  // representative of zeta mod 2 in [0,2)
  Rat two(2);
  Rat r = zeta;
  long long k = r.numerator() / (2 * r.denominator());
  r -= Rat(2 * k);
  while (r < Rat(0)) r += two;
  while (r >= two) r -= two;
  return r;
}

GkModule GkModule::lowest(const Rat& zeta) {
  GkModule m;
  m.kind = Kind::LowestWeight;
  m.weight = zeta;
  m.casimir = zeta * (zeta - Rat(2)) / 2;
  return m;
}

GkModule GkModule::highest(const Rat& zeta) {
  GkModule m;
  m.kind = Kind::HighestWeight;
  m.weight = zeta;
  m.casimir = zeta * (zeta + Rat(2)) / 2;
  return m;
}

GkModule GkModule::doubly_infinite(const Rat& coset, const Rat& casimir) {
  GkModule m;
  m.kind = Kind::DoublyInfinite;
  m.weight = coset_rep(coset);
  m.casimir = casimir;
  // irreducibility: no xi with (xi^2-1)/2 = casimir and 1+-xi in +-coset+2Z
  auto sq = rational_sqrt(Rat(1) + 2 * casimir);
  if (sq) {
    for (const Rat& xi : {*sq, -*sq}) {
      if (in_coset(Rat(1) + xi, m.weight) || in_coset(Rat(1) + xi, -m.weight))
        throw std::invalid_argument(
            "doubly-infinite descriptor is reducible: ladder has a raising/lowering zero");
    }
  }
  return m;
}

GkModule GkModule::finite(long long dim) {
  if (dim < 1) throw std::invalid_argument("finite-dimensional module needs dim >= 1");
  GkModule m;
  m.kind = Kind::FiniteDim;
  m.dim = dim;
  m.weight = Rat(1 - dim);  // lowest weight -dim+1
  m.casimir = Rat(dim * dim - 1, 2);
  return m;
}

bool GkModule::is_irreducible() const {
  switch (kind) {
    case Kind::LowestWeight:
      return !(is_integer(weight) && weight <= Rat(0));
    case Kind::HighestWeight:
      return !(is_integer(weight) && weight >= Rat(0));
    case Kind::DoublyInfinite:
      return true;  // enforced at construction
    case Kind::FiniteDim:
      return true;
  }
  return false;
}

bool operator==(const GkModule& a, const GkModule& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::FiniteDim: return a.dim == b.dim;
    case Kind::DoublyInfinite:
      return coset_rep(a.weight) == coset_rep(b.weight) && a.casimir == b.casimir;
    default: return a.weight == b.weight;
  }
}

Rat casimir_eigenvalue(const GkModule& m) {
  switch (m.kind) {
    case Kind::LowestWeight: return m.weight * (m.weight - Rat(2)) / 2;
    case Kind::HighestWeight: return m.weight * (m.weight + Rat(2)) / 2;
    case Kind::DoublyInfinite: return m.casimir;
    case Kind::FiniteDim: return Rat(m.dim * m.dim - 1, 2);
  }
  throw std::logic_error("unreachable");
}

ComplementReport complement_report(const GkModule& w) {
  if (w.kind == Kind::FiniteDim)
    throw std::invalid_argument("complementary module is defined for infinite-dimensional input");
  if (!w.is_irreducible())
    throw std::invalid_argument("complementary module needs an irreducible input");
  switch (w.kind) {
    case Kind::LowestWeight: {
      Rat z = w.weight - Rat(2);
      // the irreducible module with highest weight z is finite-dimensional
      // exactly when z is a nonnegative integer (discrete-series remark)
      if (is_integer(z) && z >= Rat(0))
        return {GkModule::finite(z.numerator() + 1), true};
      return {GkModule::highest(z), false};
    }
    case Kind::HighestWeight: {
      Rat z = w.weight + Rat(2);
      if (is_integer(z) && z <= Rat(0))
        return {GkModule::finite(-z.numerator() + 1), true};
      return {GkModule::lowest(z), false};
    }
    default:
      return {w, false};
  }
}

GkModule complementary_module(const GkModule& w) { return complement_report(w).module; }

int ext1_dim(const GkModule& w, const GkModule& v) {
  if (!w.infinite_dimensional() || !w.is_irreducible())
    throw std::invalid_argument("ext1_dim: first argument must be irreducible infinite-dimensional");
  if (!v.is_irreducible())
    throw std::invalid_argument("ext1_dim: second argument must be irreducible");
  return (v == complementary_module(w)) ? 1 : 0;
}

CompositionReport principal_series_structure(const PrincipalSeries& ps) {
  CompositionReport rep;
  const Rat z0 = ps.zeta0.value();
  const Rat xp = Rat(1) + ps.xi;   // 1 + xi
  const bool plus = in_coset(xp, z0);    // 1+xi in  zeta0 + 2Z
  const bool minus = in_coset(xp, -z0);  // 1+xi in -zeta0 + 2Z
  using Role = CompositionFactor::Role;

  if (!plus && !minus) {
    rep.tag = PsCase::A;
    rep.factors.push_back({GkModule::doubly_infinite(coset_rep(z0), ps.casimir()),
                           Role::Irreducible});
    return rep;
  }
  if (plus != minus) {
    rep.tag = PsCase::B;
    GkModule sub = plus ? GkModule::lowest(xp) : GkModule::highest(-xp);
    rep.factors.push_back({sub, Role::Sub});
    rep.factors.push_back({complementary_module(sub), Role::Quotient});
    return rep;
  }
  // both: xi is an integer here
  rep.tag = PsCase::C;
  if (ps.xi >= Rat(1)) {
    rep.factors.push_back({GkModule::lowest(xp), Role::Sub});
    rep.factors.push_back({GkModule::highest(-xp), Role::Sub});
    rep.factors.push_back({GkModule::finite(ps.xi.numerator()), Role::Quotient});
  } else if (ps.xi <= Rat(-1)) {
    rep.factors.push_back({GkModule::finite(-ps.xi.numerator()), Role::Sub});
    rep.factors.push_back({GkModule::lowest(Rat(1) - ps.xi), Role::Quotient});
    rep.factors.push_back({GkModule::highest(ps.xi - Rat(1)), Role::Quotient});
  } else {
    // xi = 0: H = LW(1) + HW(-1), the finite factor has dimension 0
    rep.degenerate_xi_zero = true;
    rep.factors.push_back({GkModule::lowest(Rat(1)), Role::Summand});
    rep.factors.push_back({GkModule::highest(Rat(-1)), Role::Summand});
  }
  return rep;
}

RatMat rat_zeros(int n) { return RatMat(n, std::vector<Rat>(n, Rat(0))); }

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  int n = static_cast<int>(a.size());
  RatMat c = rat_zeros(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == Rat(0)) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatMat rat_sub(const RatMat& a, const RatMat& b) {
  RatMat c = a;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) c[i][j] -= b[i][j];
  return c;
}

LadderMatrices ps_ladder_matrices(const PrincipalSeries& ps, const KWeight& zeta_min,
                                  int count) {
  if (count < 1) throw std::invalid_argument("ladder window needs count >= 1");
  if (!in_coset(zeta_min.value(), ps.zeta0.value()))
    throw std::invalid_argument("window start is not in the K-weight lattice of the series");
  LadderMatrices lm;
  lm.P = rat_zeros(count);
  lm.M = rat_zeros(count);
  lm.Kappa = rat_zeros(count);
  for (int i = 0; i < count; ++i) {
    Rat z = zeta_min.value() + Rat(2 * i);
    lm.weights.push_back(z);
    lm.Kappa[i][i] = z;
    if (i + 1 < count) lm.P[i + 1][i] = (z + Rat(1) + ps.xi) / 2;
    if (i - 1 >= 0) lm.M[i - 1][i] = (-z + Rat(1) + ps.xi) / 2;
  }
  return lm;
}

namespace {

// m-coefficient c_w into weight w-2, in the normalization where the raising
// maps act by 1: c_w = (2*lambda - w^2 + 2w)/4.
Rat lowering_coefficient(const Rat& lambda, const Rat& w) {
  return (2 * lambda - w * w + 2 * w) / 4;
}

bool weight_in_support(const GkModule& v, const Rat& w) {
  switch (v.kind) {
    case Kind::LowestWeight: {
      Rat d = (w - v.weight) / 2;
      return is_integer(d) && d >= Rat(0);
    }
    case Kind::HighestWeight: {
      Rat d = (v.weight - w) / 2;
      return is_integer(d) && d >= Rat(0);
    }
    case Kind::DoublyInfinite:
      return in_coset(w, v.weight);
    case Kind::FiniteDim: {
      Rat lo = Rat(1 - v.dim), hi = Rat(v.dim - 1);
      Rat d = (w - lo) / 2;
      return is_integer(d) && w >= lo && w <= hi;
    }
  }
  return false;
}

}  // namespace

int ext1_dim_via_ladder(const GkModule& w, const GkModule& v, int window) {
  if (window < 4) throw std::invalid_argument("ladder window must have length >= 4");
  if (w.kind != Kind::LowestWeight)
    throw std::invalid_argument("ladder criterion implemented for lowest-weight w");
  if (casimir_eigenvalue(v) != casimir_eigenvalue(w)) return 0;
  const Rat zeta = w.weight;
  const Rat lambda = casimir_eigenvalue(v);
  bool tgt = weight_in_support(v, zeta - Rat(2));
  bool src = weight_in_support(v, zeta);
  if (!tgt) return 0;
  if (!src) return 1;
  // both 1-dimensional: quotient nonzero iff the lowering coefficient vanishes
  return lowering_coefficient(lambda, zeta) == Rat(0) ? 1 : 0;
}

}  // namespace sqrtn::gk
