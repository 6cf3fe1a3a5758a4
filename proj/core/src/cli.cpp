#include "kw4/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kw4/serialize.hpp"

namespace kw4 {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerification = 4;

struct Options {
  std::string subcommand;
  std::string model;    // "para" | "hermitian"
  std::string backend;  // "exact" | "float"
  std::string mode;     // hermitian realize: "orbit" | "exact-align" | ""
  double tol = 1e-9;
  std::string target;   // inline JSON, @file, or "zero"
  std::string algebra;  // inline JSON or @file
  std::string format;   // "json" | "table"
  std::string out_path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_input(const std::string& spec) {
  const std::string text = spec.rfind('@', 0) == 0 ? slurp(spec.substr(1)) : spec;
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) throw std::invalid_argument("cannot write file: " + opt.out_path);
    f << text;
  } else {
    out << text;
  }
}

// ---- rendering --------------------------------------------------------------

const char* kSup[] = {"¹", "²", "³", "⁴"};

std::string psi_monomial(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t) s += "∧";  // wedge
    s += "Ψ";         // Psi
    s += kSup[idx[t]];
  }
  return s;
}

template <typename S>
std::string form_str(const KForm<S>& f) {
  if (f.degree() == 0) return scalar_str(f[0]);
  std::string s;
  const auto& mons = basis4::monomials(f.degree());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const S& c = f[static_cast<int>(i)];
    if (is_zero(c)) continue;
    const S minus_c = -c;
    const bool is_one = is_zero(c - scalar_traits<S>::one());
    const bool is_minus_one = is_zero(minus_c - scalar_traits<S>::one());
    if (is_minus_one) {
      s += "−";  // minus sign
    } else if (!s.empty() && !is_one) {
      s += "+";
    }
    if (!is_one && !is_minus_one) {
      std::string cs = scalar_str(c);
      if (s.empty() || cs.empty() || cs[0] != '-') {
        s += cs;
      } else {
        s += "−" + cs.substr(1);
      }
    } else if (is_one && s.empty()) {
      // leading +1 coefficient: bare monomial
    } else if (is_one) {
      s += "+";
    }
    s += psi_monomial(mons[i]);
  }
  if (s.empty()) s = "0";
  return s;
}

// ---- star-table -------------------------------------------------------------

template <typename S>
int do_star_table(const Options& opt, std::ostream& out) {
  const auto fr = BasisFrame<S>::psi_frame();
  std::vector<std::pair<std::vector<int>, KForm<S>>> rows;
  for (int deg = 1; deg <= 3; ++deg)
    for (const auto& idx : basis4::monomials(deg))
      rows.emplace_back(idx, fr.hodge_star(KForm<S>::basis(deg, idx)));

  if (opt.format == "json") {
    json table = json::object();
    for (const auto& [idx, starred] : rows)
      table[monomial_key(idx)] = kform_to_json(starred);
    emit(opt, json{{"star", table}}.dump(2) + "\n", out);
  } else {
    std::string text;
    for (const auto& [idx, starred] : rows)
      text += "⋆" + psi_monomial(idx) + "=" + form_str(starred) + "\n";
    emit(opt, text, out);
  }
  return kExitOk;
}

// ---- decompose --------------------------------------------------------------

template <typename S>
int do_decompose(const Options& opt, ModelKind kind, std::ostream& out) {
  const auto m = ModelSpace<S>::build(kind);
  const KForm<S> xi = opt.target == "zero"
                          ? KForm<S>(2)
                          : target_from_json<S>(parse_input(opt.target), m);
  const auto split = split_two_form(m, xi);
  const auto& fr = m.frame();
  const KForm<S> la0 = split.la0_part(m);
  const KForm<S> lpm = split.lpm_part(m);
  const S la0_norm = fr.form_inner(la0, la0);
  const S lpm_norm = fr.form_inner(lpm, lpm);

  if (opt.format == "table") {
    std::ostringstream ss;
    ss << "model: " << basis_name(kind) << "\n";
    ss << "omega coefficient: " << scalar_str(split.omega_coeff) << "\n";
    for (int k = 0; k < 5; ++k)
      ss << "theta" << k + 1 << ": " << scalar_str(split.c[k]) << "\n";
    ss << "|Xi_0|^2: " << scalar_str(la0_norm) << "\n";
    ss << "|Xi_pm|^2: " << scalar_str(lpm_norm) << "\n";
    emit(opt, ss.str(), out);
  } else {
    json theta = json::array();
    for (int k = 0; k < 5; ++k) theta.push_back(scalar_to_json(split.c[k]));
    json j{{"model", basis_name(kind)},
           {"omega_coeff", scalar_to_json(split.omega_coeff)},
           {"theta", theta},
           {"la0_norm_sq", scalar_to_json(la0_norm)},
           {"lpm_norm_sq", scalar_to_json(lpm_norm)}};
    if (kind == ModelKind::Hermitian) {
      const auto inv = orbit_invariants(m, xi);
      j["orbit_invariants"] = {{"x", scalar_to_json(inv.x)}, {"y", scalar_to_json(inv.y)}};
    }
    emit(opt, j.dump(2) + "\n", out);
  }
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

template <typename S>
int do_verify(const Options& opt, ModelKind kind, std::ostream& out) {
  const json j = parse_input(opt.algebra);
  if (j.contains("basis") && j.at("basis").get<std::string>() != basis_name(kind))
    throw std::invalid_argument("algebra basis '" + j.at("basis").get<std::string>() +
                                "' does not match model '" + opt.model + "'");
  const auto L = lie_from_json<S>(j);
  const auto m = ModelSpace<S>::build(kind);
  const auto rep = check_suite(L, m);
  const bool ok = rep.pass(opt.tol);

  if (opt.format == "table") {
    std::ostringstream ss;
    for (const auto& e : rep.residuals)
      ss << (e.ok(opt.tol) ? "pass" : "FAIL") << "  " << e.name
         << "  max|.| = " << e.max_abs << "\n";
    if (rep.trivial_weyl) ss << "trivial Weyl structure (rho_a = 0)\n";
    ss << (ok ? "PASS" : "FAIL") << "\n";
    emit(opt, ss.str(), out);
  } else {
    emit(opt, report_to_json(rep, opt.tol).dump(2) + "\n", out);
  }
  return ok ? kExitOk : kExitVerification;
}

// ---- realize ----------------------------------------------------------------

template <typename S>
int do_realize(const Options& opt, ModelKind kind, std::ostream& out) {
  const auto m = ModelSpace<S>::build(kind);
  const KForm<S> target = opt.target == "zero"
                              ? KForm<S>(2)
                              : target_from_json<S>(parse_input(opt.target), m);

  RealizationResult<S> r;
  bool orbit_mode = false;
  if (kind == ModelKind::Para) {
    r = solve_para(m, target);
  } else {
    if constexpr (std::is_same_v<S, GaussianRational> ||
                  std::is_same_v<S, FloatComplex>) {
      // Exact Hermitian alignment angles are transcendental in general, so the
      // exact backend defaults to the orbit-representative certificate.
      std::string mode = opt.mode;
      if (mode.empty()) mode = scalar_traits<S>::exact ? "orbit" : "exact-align";
      orbit_mode = mode == "orbit";
      r = solve_hermitian(
          m, target, orbit_mode ? HermitianMode::Orbit : HermitianMode::ExactAlign,
          opt.tol);
    } else {
      throw std::domain_error("hermitian model requires a complex-capable backend");
    }
  }

  bool ok;
  double roundtrip_residual;
  if (orbit_mode && !target.is_zero()) {
    // Certificate: the realized rho_a lies on the target's structure-group
    // orbit (invariants agree).
    const auto want = orbit_invariants(m, target);
    const auto got = orbit_invariants(m, pipeline_rho_a(r.algebra, m));
    roundtrip_residual =
        std::max(approx_abs(got.x - want.x), approx_abs(got.y - want.y));
    ok = scalar_traits<S>::exact
             ? is_zero(got.x - want.x) && is_zero(got.y - want.y)
             : roundtrip_residual <= opt.tol;
  } else {
    std::tie(ok, roundtrip_residual) = verify_roundtrip(r, m, opt.tol);
  }
  ok = ok && r.report.pass(opt.tol);

  if (opt.format == "table") {
    std::ostringstream ss;
    ss << "model: " << basis_name(kind) << "\n";
    if (!r.algebra.label().empty()) ss << "label: " << r.algebra.label() << "\n";
    for (int i = 0; i < 4; ++i)
      for (int j2 = i + 1; j2 < 4; ++j2) {
        KForm<S> b(1);
        for (int k = 0; k < 4; ++k) b.set({k}, r.algebra.bracket_basis(i, j2)[k]);
        if (!b.is_zero())
          ss << "[" << "Ψ" << kSup[i] << "," << "Ψ" << kSup[j2]
             << "] = " << form_str(b) << "\n";
      }
    ss << "rho_a = " << form_str(r.predicted_rho_a) << "\n";
    ss << "note: " << r.orbit_note << "\n";
    ss << (ok ? "PASS" : "FAIL") << " (roundtrip residual " << roundtrip_residual
       << ")\n";
    emit(opt, ss.str(), out);
  } else {
    json j = realization_to_json(r, kind, opt.tol);
    j["roundtrip"] = {{"ok", ok}, {"residual", roundtrip_residual},
                      {"certificate", orbit_mode && !target.is_zero()
                                          ? "orbit-invariants"
                                          : "componentwise"}};
    emit(opt, j.dump(2) + "\n", out);
  }
  return ok ? kExitOk : kExitVerification;
}

// ---- dispatch ---------------------------------------------------------------

int dispatch(const Options& opt, std::ostream& out) {
  const bool exact = opt.backend == "exact";
  if (opt.subcommand == "star-table")
    return exact ? do_star_table<Rational>(opt, out) : do_star_table<double>(opt, out);

  const ModelKind kind =
      opt.model == "para" ? ModelKind::Para : ModelKind::Hermitian;
  auto run = [&](auto tag) {
    using S = typename decltype(tag)::type;
    if (opt.subcommand == "realize") return do_realize<S>(opt, kind, out);
    if (opt.subcommand == "verify") return do_verify<S>(opt, kind, out);
    return do_decompose<S>(opt, kind, out);
  };
  struct RatTag { using type = Rational; };
  struct GaussTag { using type = GaussianRational; };
  struct DoubleTag { using type = double; };
  struct CplxTag { using type = FloatComplex; };
  if (kind == ModelKind::Para) return exact ? run(RatTag{}) : run(DoubleTag{});
  return exact ? run(GaussTag{}) : run(CplxTag{});
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  const char* env_backend = std::getenv("KW4_BACKEND");
  opt.backend = env_backend != nullptr ? env_backend : "exact";

  CLI::App app{"Exact engine for 4-dimensional left-invariant Kahler-Weyl geometry"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_model) {
    auto* model = sub->add_option("--model", opt.model, "Model space")
                      ->check(CLI::IsMember({"hermitian", "para"}));
    if (needs_model) model->required();
    sub->add_option("--backend", opt.backend, "Scalar backend")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", opt.tol, "Residual tolerance (floating backend)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", opt.out_path, "Write output to a file");
  };

  auto* realize = app.add_subcommand("realize",
                                     "Build a Lie algebra whose alternating Ricci "
                                     "tensor is the prescribed 2-form");
  add_common(realize, true);
  realize->add_option("--target", opt.target, "Target 2-form: JSON, @file, or 'zero'")
      ->required();
  realize->add_option("--mode", opt.mode,
                      "Hermitian certificate: orbit | exact-align")
      ->check(CLI::IsMember({"orbit", "exact-align"}));

  auto* verify = app.add_subcommand("verify",
                                    "Run the full verification ladder on a Lie "
                                    "algebra given by structure constants");
  add_common(verify, true);
  verify->add_option("--algebra", opt.algebra, "Lie algebra JSON or @file")->required();

  auto* star = app.add_subcommand("star-table", "Print the Hodge star golden table");
  add_common(star, false);

  auto* decompose = app.add_subcommand("decompose",
                                       "Split a 2-form over the Omega/theta basis "
                                       "and report invariants");
  add_common(decompose, true);
  decompose->add_option("--target", opt.target, "2-form: JSON, @file, or 'zero'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  opt.subcommand = app.get_subcommands().front()->get_name();
  if (opt.format.empty())
    opt.format = opt.subcommand == "star-table" ? "table" : "json";

  try {
    return dispatch(opt, out);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace kw4
