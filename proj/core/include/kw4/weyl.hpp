#ifndef KW4_WEYL_HPP
#define KW4_WEYL_HPP

#include <string>
#include <vector>

#include "kw4/lie.hpp"

namespace kw4 {

/// Left-invariant connection: gamma(i,j) = nabla_{Psi_i} Psi_j in components,
/// plus the associated Weyl 1-form (zero for Levi-Civita).
template <typename S>
struct InvariantConnection {
  std::array<std::array<Vec4<S>, 4>, 4> gamma;
  KForm<S> phi{1};

  Vec4<S> covariant(const Vec4<S>& x, const Vec4<S>& y) const {
    Vec4<S> out = vec_zero<S>();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (is_zero(x[i]) || is_zero(y[j])) continue;
        const S f = x[i] * y[j];
        for (int k = 0; k < 4; ++k) out[k] = out[k] + f * gamma[i][j][k];
      }
    return out;
  }
};

/// Koszul formula for the left-invariant Levi-Civita connection:
/// 2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
template <typename S>
InvariantConnection<S> levi_civita(const LieAlgebra4<S>& L, const ModelSpace<S>& m) {
  const auto& fr = m.frame();
  InvariantConnection<S> out;
  const S half = scalar_of<S>(Rational(1, 2));
  auto unit = [](int i) {
    Vec4<S> v = vec_zero<S>();
    v[i] = scalar_traits<S>::one();
    return v;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      KForm<S> rhs(1);  // covector z |-> 2 g(nabla_i j, z)
      for (int z = 0; z < 4; ++z) {
        const S a = fr.vec_inner(L.bracket_basis(i, j), unit(z));
        const S b = fr.vec_inner(L.bracket_basis(j, z), unit(i));
        const S c = fr.vec_inner(L.bracket_basis(z, i), unit(j));
        rhs[z] = a - b + c;
      }
      const Vec4<S> v = fr.sharp(rhs);
      Vec4<S> g = vec_zero<S>();
      for (int k = 0; k < 4; ++k) g[k] = half * v[k];
      out.gamma[i][j] = g;
    }
  for (int i = 0; i < 4; ++i) out.phi[i] = scalar_traits<S>::zero();
  return out;
}

/// The unique Kaehler-Weyl connection:
/// nabla_x y = nabla^g_x y + phi(x) y + phi(y) x - g(x,y) phi#.
template <typename S>
InvariantConnection<S> weyl_connection(const LieAlgebra4<S>& L, const ModelSpace<S>& m) {
  InvariantConnection<S> out = levi_civita(L, m);
  const KForm<S> phi = weyl_one_form(L, m);
  const Vec4<S> phi_sharp = m.frame().sharp(phi);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const S gij = m.frame().metric()[i][j];
      for (int k = 0; k < 4; ++k) {
        S v = out.gamma[i][j][k];
        if (k == j) v = v + phi[i];
        if (k == i) v = v + phi[j];
        v = v - gij * phi_sharp[k];
        out.gamma[i][j][k] = v;
      }
    }
  out.phi = phi;
  return out;
}

/// Curvature tensor, Ricci tensor, and its symmetric/alternating parts.
template <typename S>
struct CurvatureData {
  // r4[i][j][k][l] = R(Psi_i,Psi_j,Psi_k,Psi_l) = g(Rop(Psi_i,Psi_j)Psi_k, Psi_l)
  std::array<std::array<Mat4<S>, 4>, 4> rop;  // rop[i][j]: z |-> Rop(e_i,e_j)z
  std::array<std::array<Mat4<S>, 4>, 4> r4;
  Mat4<S> rho;
  Mat4<S> rho_s;
  KForm<S> rho_a_form{2};
};

template <typename S>
CurvatureData<S> curvature(const InvariantConnection<S>& conn, const LieAlgebra4<S>& L,
                           const ModelSpace<S>& m) {
  CurvatureData<S> out;
  // Connection as matrices: (G_i)_{kj} = component k of nabla_{e_i} e_j.
  std::array<Mat4<S>, 4> G;
  for (int i = 0; i < 4; ++i) {
    G[i] = mat_zero<S>();
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) G[i][k][j] = conn.gamma[i][j][k];
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mat4<S> r = mat_mul(G[i], G[j]);
      const Mat4<S> gj = mat_mul(G[j], G[i]);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          r[a][b] = r[a][b] - gj[a][b];
          for (int l = 0; l < 4; ++l)
            r[a][b] = r[a][b] - L.bracket_basis(i, j)[l] * G[l][a][b];
        }
      out.rop[i][j] = r;
    }
  const auto& g = m.frame().metric();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      out.r4[i][j] = mat_zero<S>();
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          S acc = scalar_traits<S>::zero();
          for (int a = 0; a < 4; ++a) acc = acc + g[a][l] * out.rop[i][j][a][k];
          out.r4[i][j][k][l] = acc;
        }
    }
  // rho(x,y) = Tr{z -> Rop(z,x)y}
  out.rho = mat_zero<S>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      S acc = scalar_traits<S>::zero();
      for (int a = 0; a < 4; ++a) acc = acc + out.rop[a][i][a][j];
      out.rho[i][j] = acc;
    }
  const S half = scalar_of<S>(Rational(1, 2));
  out.rho_s = mat_zero<S>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.rho_s[i][j] = half * (out.rho[i][j] + out.rho[j][i]);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      out.rho_a_form.set({i, j}, half * (out.rho[i][j] - out.rho[j][i]));
  return out;
}

/// Named residual of one verified identity. Exact backends report symbolic
/// zero/nonzero plus a printable witness; floating backends report max-abs.
struct ResidualEntry {
  std::string name;
  bool exact_mode = false;
  bool exactly_zero = false;
  double max_abs = 0;
  std::string detail;

  bool ok(double tol) const { return exact_mode ? exactly_zero : max_abs <= tol; }
};

struct VerificationReport {
  std::vector<ResidualEntry> residuals;
  bool trivial_weyl = false;  // rho_a == 0

  bool pass(double tol) const {
    for (const auto& r : residuals)
      if (!r.ok(tol)) return false;
    return true;
  }
  const ResidualEntry* find(const std::string& name) const {
    for (const auto& r : residuals)
      if (r.name == name) return &r;
    return nullptr;
  }
};

namespace detail {

template <typename S>
void push_residual(VerificationReport& rep, const std::string& name,
                   const std::vector<S>& values) {
  ResidualEntry e;
  e.name = name;
  e.exact_mode = scalar_traits<S>::exact;
  double m = 0;
  std::string witness;
  bool zero = true;
  for (const auto& v : values) {
    m = std::max(m, approx_abs(v));
    if (!is_zero(v)) {
      zero = false;
      if (witness.empty()) witness = scalar_str(v);
    }
  }
  e.exactly_zero = zero;
  e.max_abs = m;
  e.detail = witness;
  rep.residuals.push_back(std::move(e));
}

}  // namespace detail

/// Runs the whole verification ladder on one algebra: Jacobi, Nijenhuis,
/// torsion, Weyl compatibility, parallel J, the three curvature symmetries,
/// the Kaehler-Weyl symmetry, and the three expressions for rho_a.
template <typename S>
VerificationReport check_suite(const LieAlgebra4<S>& L, const ModelSpace<S>& m) {
  VerificationReport rep;
  const auto& g = m.frame().metric();

  {
    std::vector<S> vals;
    const auto jac = jacobi_defect(L);
    for (const auto& a : jac.d)
      for (const auto& b : a)
        for (const auto& v : b)
          for (const auto& x : v) vals.push_back(x);
    detail::push_residual(rep, "jacobi", vals);
  }
  {
    std::vector<S> vals;
    const auto nij = nijenhuis(L, m);
    for (const auto& a : nij)
      for (const auto& v : a)
        for (const auto& x : v) vals.push_back(x);
    detail::push_residual(rep, "nijenhuis", vals);
  }

  if (!integrability_predicates(m, L)) {
    ResidualEntry e;
    e.name = "integrability";
    e.exact_mode = scalar_traits<S>::exact;
    e.exactly_zero = false;
    e.max_abs = 1;
    e.detail = "span criteria violated";
    rep.residuals.push_back(e);
    return rep;
  }

  const auto conn = weyl_connection(L, m);
  const auto curv = curvature(conn, L, m);
  const KForm<S>& phi = conn.phi;

  {
    std::vector<S> vals;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          vals.push_back(conn.gamma[i][j][k] - conn.gamma[j][i][k] -
                         L.bracket_basis(i, j)[k]);
    detail::push_residual(rep, "torsion", vals);
  }
  {
    // (nabla g)(x;y,z) + 2 phi(x) g(y,z); invariant metric, so the
    // directional term drops and nabla g is purely algebraic.
    std::vector<S> vals;
    const S two = scalar_of<S>(2);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          S v = two * phi[i] * g[j][k];
          for (int a = 0; a < 4; ++a)
            v = v - conn.gamma[i][j][a] * g[a][k] - conn.gamma[i][k][a] * g[j][a];
          vals.push_back(v);
        }
    detail::push_residual(rep, "weyl_compat", vals);
  }
  {
    // (nabla_x J)y = nabla_x(Jy) - J nabla_x y
    std::vector<S> vals;
    auto unit = [](int i) {
      Vec4<S> v = vec_zero<S>();
      v[i] = scalar_traits<S>::one();
      return v;
    };
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const Vec4<S> a = conn.covariant(unit(i), m.apply_J(unit(j)));
        const Vec4<S> b = m.apply_J(conn.covariant(unit(i), unit(j)));
        for (int k = 0; k < 4; ++k) vals.push_back(a[k] - b[k]);
      }
    detail::push_residual(rep, "kahler_parallel", vals);
  }
  {
    std::vector<S> v1, v2, v3;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            v1.push_back(curv.r4[i][j][k][l] + curv.r4[j][i][k][l]);
            v2.push_back(curv.r4[i][j][k][l] + curv.r4[j][k][i][l] +
                         curv.r4[k][i][j][l]);
            v3.push_back(curv.r4[i][j][k][l] + curv.r4[i][j][l][k] +
                         curv.rho_a_form.get({i, j}) * g[k][l]);
          }
    detail::push_residual(rep, "sym_1a_i", v1);
    detail::push_residual(rep, "sym_1a_ii", v2);
    detail::push_residual(rep, "sym_1a_iii", v3);
  }
  {
    // R(x,y,Jz,Jw) = -R para / +R Hermitian
    std::vector<S> vals;
    const auto& J = m.J();
    const S sgn = m.kind() == ModelKind::Para ? scalar_traits<S>::one()
                                              : -scalar_traits<S>::one();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            S acc = scalar_traits<S>::zero();
            for (int a = 0; a < 4; ++a)
              for (int b = 0; b < 4; ++b)
                acc = acc + curv.r4[i][j][a][b] * J[a][k] * J[b][l];
            vals.push_back(acc + sgn * curv.r4[i][j][k][l]);
          }
    detail::push_residual(rep, "sym_1d", vals);
  }
  {
    // rho_a = -dJdeltaOmega (para) / +dJdeltaOmega (Hermitian)
    const KForm<S> dj = ce_differential(L, m.apply_J_covector(lee_form(L, m)));
    const KForm<S> expect = m.kind() == ModelKind::Para ? -dj : dj;
    std::vector<S> vals;
    const KForm<S> diff = curv.rho_a_form - expect;
    for (int i = 0; i < basis4::count(2); ++i) vals.push_back(diff[i]);
    detail::push_residual(rep, "rho_a_vs_dJdeltaOmega", vals);
  }
  {
    const KForm<S> diff = curv.rho_a_form + scalar_of<S>(2) * ce_differential(L, phi);
    std::vector<S> vals;
    for (int i = 0; i < basis4::count(2); ++i) vals.push_back(diff[i]);
    detail::push_residual(rep, "rho_a_vs_minus2dphi", vals);
  }
  {
    // Equation dphi = -(2/m) rho_a with m=4.
    const KForm<S> diff =
        ce_differential(L, phi) + scalar_of<S>(Rational(1, 2)) * curv.rho_a_form;
    std::vector<S> vals;
    for (int i = 0; i < basis4::count(2); ++i) vals.push_back(diff[i]);
    detail::push_residual(rep, "dphi_plus_half_rho_a", vals);
  }

  rep.trivial_weyl = curv.rho_a_form.is_zero();
  return rep;
}

}  // namespace kw4

#endif
